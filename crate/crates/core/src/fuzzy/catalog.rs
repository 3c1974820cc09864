use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use super::curve::{CurveError, MembershipCurve, MembershipDegree};

/// A labeled fuzzy set: a linguistic term bound to its membership curve.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySet {
    pub label: String,
    pub curve: MembershipCurve,
}

/// A named attribute with its labeled fuzzy sets.
///
/// `name` is the canonical query key; `aliases` let the English attribute
/// names resolve to the same variable. Matching of names, aliases and set
/// labels is case-insensitive.
#[derive(Debug, Clone, PartialEq)]
pub struct LinguisticVariable {
    pub name: String,
    pub units: String,
    pub aliases: Vec<String>,
    sets: Vec<FuzzySet>,
}

impl LinguisticVariable {
    pub fn new(
        name: impl Into<String>,
        units: impl Into<String>,
        aliases: Vec<String>,
        sets: Vec<FuzzySet>,
    ) -> Result<Self, CatalogError> {
        let name = name.into();
        if name.is_empty() {
            return Err(CatalogError::EmptyVariableName);
        }
        if sets.is_empty() {
            return Err(CatalogError::EmptyVariable { variable: name });
        }
        for (i, set) in sets.iter().enumerate() {
            if set.label.is_empty() {
                return Err(CatalogError::EmptyLabel { variable: name });
            }
            if sets[..i]
                .iter()
                .any(|other| other.label.eq_ignore_ascii_case(&set.label))
            {
                return Err(CatalogError::DuplicateLabel {
                    variable: name,
                    label: set.label.clone(),
                });
            }
        }
        Ok(LinguisticVariable {
            name,
            units: units.into(),
            aliases,
            sets,
        })
    }

    pub fn sets(&self) -> &[FuzzySet] {
        &self.sets
    }

    pub fn set(&self, label: &str) -> Option<&FuzzySet> {
        self.sets
            .iter()
            .find(|set| set.label.eq_ignore_ascii_case(label))
    }

    pub fn matches_name(&self, key: &str) -> bool {
        self.name.eq_ignore_ascii_case(key)
            || self.aliases.iter().any(|a| a.eq_ignore_ascii_case(key))
    }

    /// Membership of a crisp value in the labeled set, if the label exists.
    pub fn membership(&self, label: &str, x: f64) -> Option<MembershipDegree> {
        self.set(label).map(|set| set.curve.membership(x))
    }
}

/// An ordered collection of linguistic variables, resolvable by name or alias.
#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    variables: Vec<LinguisticVariable>,
}

impl Catalog {
    pub fn new(variables: Vec<LinguisticVariable>) -> Result<Self, CatalogError> {
        for (i, var) in variables.iter().enumerate() {
            for key in std::iter::once(&var.name).chain(var.aliases.iter()) {
                if variables[..i].iter().any(|other| other.matches_name(key)) {
                    return Err(CatalogError::DuplicateVariable { name: key.clone() });
                }
            }
        }
        Ok(Catalog { variables })
    }

    pub fn variables(&self) -> &[LinguisticVariable] {
        &self.variables
    }

    pub fn resolve(&self, key: &str) -> Option<&LinguisticVariable> {
        self.variables.iter().find(|var| var.matches_name(key))
    }

    /// Loads a catalog from its JSON document form.
    ///
    /// The document maps each variable name to either a bare list of sets or
    /// an object `{units, aliases, sets}`, where every set is
    /// `{label, shape, params}` with shape one of `left_shoulder`,
    /// `triangle`, `right_shoulder`.
    pub fn from_json_str(json: &str) -> Result<Self, CatalogError> {
        let doc: BTreeMap<String, VariableSpec> =
            serde_json::from_str(json).map_err(|e| CatalogError::Json {
                line: e.line(),
                message: e.to_string(),
            })?;
        let mut variables = Vec::with_capacity(doc.len());
        for (name, spec) in doc {
            let (units, aliases, sets) = match spec {
                VariableSpec::Sets(sets) => (String::new(), Vec::new(), sets),
                VariableSpec::Full {
                    units,
                    aliases,
                    sets,
                } => (units, aliases, sets),
            };
            let sets = sets
                .into_iter()
                .map(|set| set.build(&name))
                .collect::<Result<Vec<_>, _>>()?;
            variables.push(LinguisticVariable::new(name, units, aliases, sets)?);
        }
        Catalog::new(variables)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, CatalogError> {
        let json = fs::read_to_string(path)?;
        Self::from_json_str(&json)
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum VariableSpec {
    Sets(Vec<SetSpec>),
    Full {
        #[serde(default)]
        units: String,
        #[serde(default)]
        aliases: Vec<String>,
        sets: Vec<SetSpec>,
    },
}

#[derive(Debug, Deserialize)]
struct SetSpec {
    label: String,
    shape: String,
    params: Vec<f64>,
}

impl SetSpec {
    fn build(self, variable: &str) -> Result<FuzzySet, CatalogError> {
        let wrong_arity = |expected: usize| CatalogError::BadParamCount {
            variable: variable.to_string(),
            label: self.label.clone(),
            expected,
            got: self.params.len(),
        };
        let curve = match self.shape.as_str() {
            "left_shoulder" => match self.params[..] {
                [a, b] => MembershipCurve::left_shoulder(a, b)?,
                _ => return Err(wrong_arity(2)),
            },
            "triangle" => match self.params[..] {
                [a, m, b] => MembershipCurve::triangle(a, m, b)?,
                _ => return Err(wrong_arity(3)),
            },
            "right_shoulder" => match self.params[..] {
                [a, b] => MembershipCurve::right_shoulder(a, b)?,
                _ => return Err(wrong_arity(2)),
            },
            other => {
                return Err(CatalogError::UnknownShape {
                    variable: variable.to_string(),
                    label: self.label,
                    shape: other.to_string(),
                })
            }
        };
        Ok(FuzzySet {
            label: self.label,
            curve,
        })
    }
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("variable name must be nonempty")]
    EmptyVariableName,
    #[error("variable {variable} declares no fuzzy sets")]
    EmptyVariable { variable: String },
    #[error("variable {variable} has a set with an empty label")]
    EmptyLabel { variable: String },
    #[error("variable {variable} declares label {label} more than once")]
    DuplicateLabel { variable: String, label: String },
    #[error("variable name or alias {name} declared more than once")]
    DuplicateVariable { name: String },
    #[error("unknown curve shape {shape} on {variable}.{label}")]
    UnknownShape {
        variable: String,
        label: String,
        shape: String,
    },
    #[error("{variable}.{label} expects {expected} params, got {got}")]
    BadParamCount {
        variable: String,
        label: String,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("catalog JSON error at line {line}: {message}")]
    Json { line: usize, message: String },
    #[error("catalog I/O error: {0}")]
    Io(#[from] std::io::Error),
}

fn set(label: &str, curve: Result<MembershipCurve, CurveError>) -> FuzzySet {
    FuzzySet {
        label: label.to_string(),
        curve: curve.expect("built-in curve parameters are valid"),
    }
}

/// The built-in catalog: donor age, distance to the collection center, and
/// days since the last donation, each with its three linguistic sets.
///
/// The triangle peaks (33 years, 5000 m, 195 days) are the unique values
/// consistent with the shoulder boundaries of each variable.
pub fn standard_catalog() -> Catalog {
    let usia = LinguisticVariable::new(
        "usia",
        "years",
        vec!["age".to_string()],
        vec![
            set("Muda", MembershipCurve::left_shoulder(17.0, 33.0)),
            set("Baya", MembershipCurve::triangle(17.0, 33.0, 60.0)),
            set("Tua", MembershipCurve::right_shoulder(33.0, 60.0)),
        ],
    );
    let jarak = LinguisticVariable::new(
        "jarak",
        "meters",
        vec!["distance".to_string()],
        vec![
            set("Dekat", MembershipCurve::left_shoulder(1000.0, 10000.0)),
            set("AgakJauh", MembershipCurve::triangle(1000.0, 5000.0, 10000.0)),
            set("Jauh", MembershipCurve::right_shoulder(1000.0, 10000.0)),
        ],
    );
    let waktu_donor = LinguisticVariable::new(
        "waktu_donor",
        "days",
        vec!["time".to_string()],
        vec![
            set("Baru", MembershipCurve::left_shoulder(90.0, 300.0)),
            set("AgakLama", MembershipCurve::triangle(90.0, 195.0, 300.0)),
            set("Lama", MembershipCurve::right_shoulder(90.0, 300.0)),
        ],
    );
    Catalog::new(vec![
        usia.expect("built-in variable is valid"),
        jarak.expect("built-in variable is valid"),
        waktu_donor.expect("built-in variable is valid"),
    ])
    .expect("built-in catalog is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn degree(catalog: &Catalog, var: &str, label: &str, x: f64) -> f64 {
        catalog
            .resolve(var)
            .unwrap()
            .membership(label, x)
            .unwrap()
            .value()
    }

    #[test]
    fn standard_catalog_reproduces_reference_degrees() {
        let catalog = standard_catalog();
        assert!((degree(&catalog, "usia", "Baya", 37.0) - 0.8518518518518519).abs() < 1e-15);
        assert!((degree(&catalog, "jarak", "Jauh", 8109.0) - 0.7898888888888889).abs() < 1e-15);
        assert_eq!(degree(&catalog, "waktu_donor", "Lama", 320.0), 1.0);
        assert_eq!(degree(&catalog, "jarak", "Dekat", 1000.0), 1.0);
    }

    #[test]
    fn english_aliases_resolve() {
        let catalog = standard_catalog();
        assert_eq!(catalog.resolve("age").unwrap().name, "usia");
        assert_eq!(catalog.resolve("DISTANCE").unwrap().name, "jarak");
        assert_eq!(catalog.resolve("time").unwrap().name, "waktu_donor");
        assert!(catalog.resolve("blood_type").is_none());
    }

    #[test]
    fn labels_resolve_case_insensitively() {
        let catalog = standard_catalog();
        let usia = catalog.resolve("usia").unwrap();
        assert!(usia.set("baya").is_some());
        assert!(usia.set("BAYA").is_some());
        assert!(usia.set("Sepuh").is_none());
    }

    #[test]
    fn json_document_loads_both_forms() {
        let json = r#"{
            "usia": {
                "units": "years",
                "aliases": ["age"],
                "sets": [
                    {"label": "Muda", "shape": "left_shoulder", "params": [17, 33]},
                    {"label": "Tua", "shape": "right_shoulder", "params": [33, 60]}
                ]
            },
            "jarak": [
                {"label": "Dekat", "shape": "left_shoulder", "params": [1000, 10000]},
                {"label": "AgakJauh", "shape": "triangle", "params": [1000, 5000, 10000]}
            ]
        }"#;
        let catalog = Catalog::from_json_str(json).unwrap();
        assert_eq!(catalog.variables().len(), 2);
        assert_eq!(catalog.resolve("age").unwrap().name, "usia");
        assert!((degree(&catalog, "jarak", "AgakJauh", 4835.0) - 0.95875).abs() < 1e-12);
    }

    #[test]
    fn json_document_rejects_bad_input() {
        assert!(matches!(
            Catalog::from_json_str("{ nope"),
            Err(CatalogError::Json { .. })
        ));
        let unknown_shape = r#"{"v": [{"label": "X", "shape": "bell", "params": [1, 2]}]}"#;
        assert!(matches!(
            Catalog::from_json_str(unknown_shape),
            Err(CatalogError::UnknownShape { .. })
        ));
        let wrong_arity = r#"{"v": [{"label": "X", "shape": "triangle", "params": [1, 2]}]}"#;
        assert!(matches!(
            Catalog::from_json_str(wrong_arity),
            Err(CatalogError::BadParamCount { .. })
        ));
        let bad_order = r#"{"v": [{"label": "X", "shape": "triangle", "params": [3, 2, 1]}]}"#;
        assert!(matches!(
            Catalog::from_json_str(bad_order),
            Err(CatalogError::Curve(_))
        ));
        let duplicate = r#"{"v": [
            {"label": "X", "shape": "left_shoulder", "params": [1, 2]},
            {"label": "x", "shape": "right_shoulder", "params": [1, 2]}
        ]}"#;
        assert!(matches!(
            Catalog::from_json_str(duplicate),
            Err(CatalogError::DuplicateLabel { .. })
        ));
    }

    proptest! {
        // Shoulders sharing {a, b} partition the unit of membership between them.
        #[test]
        fn shared_shoulders_complement_each_other(x in 1000.0..10000.0f64, t in 90.0..300.0f64) {
            let catalog = standard_catalog();
            let dekat = degree(&catalog, "jarak", "Dekat", x);
            let jauh = degree(&catalog, "jarak", "Jauh", x);
            prop_assert!((dekat + jauh - 1.0).abs() < 1e-12);

            let baru = degree(&catalog, "waktu_donor", "Baru", t);
            let lama = degree(&catalog, "waktu_donor", "Lama", t);
            prop_assert!((baru + lama - 1.0).abs() < 1e-12);
        }
    }
}
