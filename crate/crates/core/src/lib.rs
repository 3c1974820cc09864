//! Donor-matching engine for blood supply decision support.
//!
//! The engine screens blood donors in three stages: a crisp eligibility
//! filter (age band, minimum body weight), a small feed-forward neural
//! classifier trained by backpropagation, and a fuzzy relational query
//! layer that ranks the survivors by linguistic predicates over age,
//! distance and time since the last donation.
//!
//! Modules:
//! - [`fuzzy`] — membership curves and the linguistic-variable catalog
//! - [`query`] — tokenizer, parser and evaluator for the fuzzy query dialect
//! - [`neural`] — the 2-3-2 sigmoid network, training and cross-validation
//! - [`registry`] — donor records, CSV ingestion, the file-backed store and
//!   the hard eligibility filter
//! - [`pipeline`] — end-to-end ranking (filter, classify, fuzzy rank)
//! - [`synthetic`] — deterministic labeled-data generator

pub mod fuzzy;
pub mod neural;
pub mod pipeline;
pub mod query;
pub mod registry;
pub mod synthetic;

pub use fuzzy::{standard_catalog, Catalog, LinguisticVariable, MembershipCurve, MembershipDegree};
pub use neural::{classify, Classification, Network, NetworkConfig, Normalizer, Verdict};
pub use pipeline::{rank_donors, RankedDonor, Ranking};
pub use query::{parse_query, QueryAst};
pub use registry::{hard_filter, DonorRecord, EligibilityRule};
