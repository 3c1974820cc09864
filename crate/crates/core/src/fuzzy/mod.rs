//! Parametric membership curves and linguistic variables.
//!
//! A [`MembershipCurve`] maps a crisp value to a degree in `[0, 1]`. Three
//! piecewise-linear shapes are supported: left shoulder (plateau at 1 for
//! small values), triangle, and right shoulder (plateau at 1 for large
//! values). A [`LinguisticVariable`] names an attribute and carries its
//! labeled fuzzy sets; [`standard_catalog`] returns the built-in variables
//! for donor age, distance and time since last donation.

mod catalog;
mod curve;

pub use catalog::{standard_catalog, Catalog, CatalogError, FuzzySet, LinguisticVariable};
pub use curve::{CurveError, MembershipCurve, MembershipDegree};
