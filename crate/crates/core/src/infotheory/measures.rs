use std::fmt;
use std::str::FromStr;

use super::{Histogram, JointHistogram};
use crate::error::{Error, Result};

/// Sum of `-p log2 p` over the non-zero counts, in iteration order.
///
/// Marginal and joint entropies both go through here so that the joint
/// entropy of a frame with itself is bit-identical to its marginal entropy.
fn entropy_of_counts(counts: impl Iterator<Item = u64>, total: u64) -> f64 {
    let n = total as f64;
    let mut h = 0.0;
    for c in counts.filter(|&c| c > 0) {
        let p = c as f64 / n;
        h -= p * p.log2();
    }
    // a single occupied bin gives -1 * log2(1) = -0.0
    h.max(0.0)
}

/// Shannon entropy of an intensity histogram.
pub fn entropy(h: &Histogram) -> Result<f64> {
    if h.is_empty() {
        return Err(Error::EmptyDistribution);
    }
    Ok(entropy_of_counts(h.counts().iter().copied(), h.total()))
}

/// Entropy of the co-occurrence distribution.
pub fn joint_entropy(j: &JointHistogram) -> Result<f64> {
    if j.is_empty() {
        return Err(Error::EmptyDistribution);
    }
    Ok(entropy_of_counts(j.nonzero().map(|(_, _, n)| n), j.total()))
}

/// Which variable of a joint histogram is conditioned on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conditioning {
    /// `H(col | row)`
    Row,
    /// `H(row | col)`
    Column,
}

/// Conditional entropy `H(X,Y) - H(conditioning marginal)`, clamped at zero.
pub fn conditional_entropy(j: &JointHistogram, conditioning: Conditioning) -> Result<f64> {
    let m = JointMeasures::of(j)?;
    let given = match conditioning {
        Conditioning::Row => m.h_row,
        Conditioning::Column => m.h_col,
    };
    Ok((m.h_joint - given).max(0.0))
}

/// Mutual information `H(row) + H(col) - H(row, col)`, clamped at zero.
pub fn mutual_information(j: &JointHistogram) -> Result<f64> {
    Ok(JointMeasures::of(j)?.mi)
}

/// How mutual information is normalized into a change score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum NormalizationMode {
    /// `I / H(previous)`, the uncertainty coefficient `U(previous | later)`.
    #[default]
    UcPrev,
    /// `I / sqrt(H(previous) · H(later))`.
    Symmetric,
    /// Unnormalized mutual information in bits.
    RawMi,
}

impl NormalizationMode {
    pub const ALL: [NormalizationMode; 3] = [Self::UcPrev, Self::Symmetric, Self::RawMi];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::UcPrev => "uc",
            Self::Symmetric => "symmetric",
            Self::RawMi => "mi",
        }
    }

    pub fn is_normalized(self) -> bool {
        !matches!(self, Self::RawMi)
    }
}

impl fmt::Display for NormalizationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NormalizationMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uc" => Ok(Self::UcPrev),
            "symmetric" => Ok(Self::Symmetric),
            "mi" => Ok(Self::RawMi),
            other => Err(format!(
                "unknown mode `{other}` (expected uc, symmetric or mi)"
            )),
        }
    }
}

/// A normalized score together with whether the degenerate convention fired.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficient {
    pub value: f64,
    /// The normalizing entropy was zero; `value` is pinned to 1.0.
    pub degenerate: bool,
}

/// Every entropy of one joint histogram, computed once.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointMeasures {
    pub h_row: f64,
    pub h_col: f64,
    pub h_joint: f64,
    pub mi: f64,
}

impl JointMeasures {
    pub fn of(j: &JointHistogram) -> Result<Self> {
        if j.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        let h_row = entropy(&j.row_marginal())?;
        let h_col = entropy(&j.col_marginal())?;
        let h_joint = joint_entropy(j)?;
        let mi = (h_row + h_col - h_joint).max(0.0);
        Ok(Self {
            h_row,
            h_col,
            h_joint,
            mi,
        })
    }

    pub fn coefficient(&self, mode: NormalizationMode) -> Coefficient {
        let denominator = match mode {
            NormalizationMode::UcPrev => self.h_row,
            NormalizationMode::Symmetric => (self.h_row * self.h_col).sqrt(),
            NormalizationMode::RawMi => {
                return Coefficient {
                    value: self.mi,
                    degenerate: false,
                }
            }
        };
        if denominator <= 0.0 {
            // constant frame: nothing to explain, so nothing changed
            return Coefficient {
                value: 1.0,
                degenerate: true,
            };
        }
        Coefficient {
            value: (self.mi / denominator).clamp(0.0, 1.0),
            degenerate: false,
        }
    }
}

/// Mutual information normalized according to `mode`.
///
/// Rows are the previous frame, so [`NormalizationMode::UcPrev`] yields
/// `U(previous | later) = I / H(previous)`.
pub fn uncertainty_coefficient(j: &JointHistogram, mode: NormalizationMode) -> Result<Coefficient> {
    Ok(JointMeasures::of(j)?.coefficient(mode))
}
