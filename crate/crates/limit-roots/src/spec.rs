//! Input description of a Coxeter group: the label matrix (m_{s,t}) plus
//! optional bilinear overrides on ∞-labeled pairs.
//!
//! The JSON form uses `0` as the sentinel for an infinite label:
//!
//! ```json
//! {"rank": 2, "labels": [[1, 0], [0, 1]], "b_overrides": [{"i": 0, "j": 1, "value": -1.5}]}
//! ```
//!
//! An ∞ label without an override contributes the classical value −1; an
//! override pins B(α_i, α_j) to any value ≤ −1, mirroring the `∞(-1.5)`
//! edge notation of Coxeter graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Label value encoding m_{s,t} = ∞.
pub const INFINITE: u32 = 0;

/// Pins B(α_i, α_j) on an ∞-labeled pair to `value` ≤ −1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BOverride {
    pub i: usize,
    pub j: usize,
    pub value: f64,
}

/// A Coxeter group given by its symmetric label matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoxeterSpec {
    pub rank: usize,
    /// Symmetric matrix of m_{s,t}: diagonal 1, off-diagonal ≥ 2, with 0
    /// standing for ∞.
    pub labels: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub b_overrides: Vec<BOverride>,
}

impl CoxeterSpec {
    pub fn new(labels: Vec<Vec<u32>>) -> Result<Self> {
        let spec = CoxeterSpec {
            rank: labels.len(),
            labels,
            b_overrides: Vec::new(),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_overrides(labels: Vec<Vec<u32>>, b_overrides: Vec<BOverride>) -> Result<Self> {
        let spec = CoxeterSpec {
            rank: labels.len(),
            labels,
            b_overrides,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Rank-2 group with a finite label m ≥ 2, or ∞ when `label == 0`.
    pub fn dihedral(label: u32) -> Self {
        CoxeterSpec {
            rank: 2,
            labels: vec![vec![1, label], vec![label, 1]],
            b_overrides: Vec::new(),
        }
    }

    /// Infinite dihedral group with B(α, β) = `b` ≤ −1.
    pub fn dihedral_with_b(b: f64) -> Self {
        CoxeterSpec {
            rank: 2,
            labels: vec![vec![1, 0], vec![0, 1]],
            b_overrides: vec![BOverride {
                i: 0,
                j: 1,
                value: b,
            }],
        }
    }

    /// Rank-3 group with labels (m01, m02, m12); 0 stands for ∞.
    pub fn triangle(m01: u32, m02: u32, m12: u32) -> Self {
        CoxeterSpec {
            rank: 3,
            labels: vec![vec![1, m01, m02], vec![m01, 1, m12], vec![m02, m12, 1]],
            b_overrides: Vec::new(),
        }
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serialization cannot fail")
    }

    pub fn validate(&self) -> Result<()> {
        if self.labels.len() != self.rank || self.labels.iter().any(|r| r.len() != self.rank) {
            return Err(Error::InvalidLabel {
                i: self.labels.len(),
                j: 0,
                value: -1,
            });
        }
        for i in 0..self.rank {
            if self.labels[i][i] != 1 {
                return Err(Error::InvalidLabel {
                    i,
                    j: i,
                    value: self.labels[i][i] as i64,
                });
            }
            for j in (i + 1)..self.rank {
                if self.labels[i][j] != self.labels[j][i] {
                    return Err(Error::AsymmetricLabels { i, j });
                }
                let m = self.labels[i][j];
                if m == 1 {
                    return Err(Error::InvalidLabel { i, j, value: 1 });
                }
            }
        }
        for ov in &self.b_overrides {
            if ov.i >= self.rank || ov.j >= self.rank || ov.i == ov.j {
                return Err(Error::IndexOutOfRange {
                    index: ov.i.max(ov.j),
                    rank: self.rank,
                });
            }
            if self.labels[ov.i][ov.j] != INFINITE {
                return Err(Error::OverrideOnFinitePair { i: ov.i, j: ov.j });
            }
            if ov.value > -1.0 {
                return Err(Error::OverrideAboveMinusOne {
                    i: ov.i,
                    j: ov.j,
                    value: ov.value,
                });
            }
        }
        Ok(())
    }
}
