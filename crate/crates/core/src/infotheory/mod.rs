//! Plug-in information measures over intensity histograms, in bits.
//!
//! All quantities use relative frequencies straight from the counts, base-2
//! logarithms and the `0 · log 0 = 0` convention.

mod histogram;
mod measures;

pub use histogram::{Histogram, JointHistogram};
pub use measures::{
    conditional_entropy, entropy, joint_entropy, mutual_information, uncertainty_coefficient,
    Coefficient, Conditioning, JointMeasures, NormalizationMode,
};
