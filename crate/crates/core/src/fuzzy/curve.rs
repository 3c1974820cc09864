use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A membership degree in the closed interval `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct MembershipDegree(f64);

impl MembershipDegree {
    pub const ZERO: MembershipDegree = MembershipDegree(0.0);
    pub const ONE: MembershipDegree = MembershipDegree(1.0);

    /// Wraps a value, rejecting anything outside `[0, 1]`.
    pub fn new(value: f64) -> Result<Self, CurveError> {
        if value.is_finite() && (0.0..=1.0).contains(&value) {
            Ok(MembershipDegree(value))
        } else {
            Err(CurveError::DegreeOutOfRange { value })
        }
    }

    /// Internal constructor for values the curve formulas already keep in range.
    pub(crate) fn from_unit(value: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&value), "degree out of range: {value}");
        MembershipDegree(value)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Minimum t-norm (fuzzy AND).
    pub fn and(self, other: Self) -> Self {
        MembershipDegree(self.0.min(other.0))
    }

    /// Maximum t-conorm (fuzzy OR).
    pub fn or(self, other: Self) -> Self {
        MembershipDegree(self.0.max(other.0))
    }

    /// Standard complement (fuzzy NOT).
    pub fn not(self) -> Self {
        MembershipDegree(1.0 - self.0)
    }
}

impl<'de> Deserialize<'de> for MembershipDegree {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let value = f64::deserialize(deserializer)?;
        MembershipDegree::new(value).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurveError {
    #[error("membership degree {value} is outside [0, 1]")]
    DegreeOutOfRange { value: f64 },
    #[error("{shape} curve requires {requirement}, got {params:?}")]
    InvalidParameters {
        shape: &'static str,
        requirement: &'static str,
        params: Vec<f64>,
    },
}

/// A piecewise-linear membership curve over the real line.
///
/// Parameters are validated at construction, so evaluation is a total
/// function: values left of a left shoulder or right of a right shoulder
/// sit on the curve's natural plateau, everything else on its zero tail.
#[derive(Debug, Clone, PartialEq)]
pub enum MembershipCurve {
    /// Degree 1 for `x <= a`, descending linearly to 0 at `b`.
    LeftShoulder { a: f64, b: f64 },
    /// 0 at `a`, peak 1 at `m`, back to 0 at `b`.
    Triangle { a: f64, m: f64, b: f64 },
    /// 0 for `x <= a`, ascending linearly to 1 at `b`.
    RightShoulder { a: f64, b: f64 },
}

impl MembershipCurve {
    pub fn left_shoulder(a: f64, b: f64) -> Result<Self, CurveError> {
        if a.is_finite() && b.is_finite() && a < b {
            Ok(MembershipCurve::LeftShoulder { a, b })
        } else {
            Err(CurveError::InvalidParameters {
                shape: "left shoulder",
                requirement: "a < b",
                params: vec![a, b],
            })
        }
    }

    pub fn triangle(a: f64, m: f64, b: f64) -> Result<Self, CurveError> {
        if a.is_finite() && m.is_finite() && b.is_finite() && a < m && m < b {
            Ok(MembershipCurve::Triangle { a, m, b })
        } else {
            Err(CurveError::InvalidParameters {
                shape: "triangle",
                requirement: "a < m < b",
                params: vec![a, m, b],
            })
        }
    }

    pub fn right_shoulder(a: f64, b: f64) -> Result<Self, CurveError> {
        if a.is_finite() && b.is_finite() && a < b {
            Ok(MembershipCurve::RightShoulder { a, b })
        } else {
            Err(CurveError::InvalidParameters {
                shape: "right shoulder",
                requirement: "a < b",
                params: vec![a, b],
            })
        }
    }

    /// Evaluates the curve at a crisp value.
    ///
    /// Exactly 0 or exactly 1 on the flat segments, linear in between,
    /// continuous at the breakpoints.
    pub fn membership(&self, x: f64) -> MembershipDegree {
        let degree = match *self {
            MembershipCurve::LeftShoulder { a, b } => {
                if x <= a {
                    1.0
                } else if x >= b {
                    0.0
                } else {
                    (b - x) / (b - a)
                }
            }
            MembershipCurve::Triangle { a, m, b } => {
                if x <= a || x >= b {
                    0.0
                } else if x <= m {
                    (x - a) / (m - a)
                } else {
                    (b - x) / (b - m)
                }
            }
            MembershipCurve::RightShoulder { a, b } => {
                if x <= a {
                    0.0
                } else if x >= b {
                    1.0
                } else {
                    (x - a) / (b - a)
                }
            }
        };
        MembershipDegree::from_unit(degree)
    }
}
