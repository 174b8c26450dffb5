//! Change detection for image sequences based on the uncertainty coefficient.
//!
//! Each frame is treated as a distribution of pixel intensities. Adjacent
//! frames are compared through the uncertainty coefficient
//! `U(previous | later) = I(previous; later) / H(previous)`; the pair with the
//! smallest coefficient is the most abrupt change in a sequence, and
//! sequences are ranked by that minimum.
//!
//! ```
//! use ccuc::analysis::analyze_frames;
//! use ccuc::infotheory::NormalizationMode;
//! use ccuc::ingest::PreprocessConfig;
//! use ccuc::synthetic::SceneSpec;
//!
//! let frames = SceneSpec::default().teleport_sequence(20, 10);
//! let cfg = PreprocessConfig { scale_factor: 1.0, levels: 32 };
//! let report = analyze_frames("demo", &frames, NormalizationMode::UcPrev, cfg).unwrap();
//! assert_eq!(report.target_index, 9);
//! ```

pub mod analysis;
mod error;
pub mod infotheory;
pub mod ingest;
pub mod synthetic;

pub use error::{Error, Result};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/information.md")]
    mod information {}
    #[doc = include_str!("../../../book/src/frames.md")]
    mod frames {}
    #[doc = include_str!("../../../book/src/change.md")]
    mod change {}
    #[doc = include_str!("../../../book/src/ranking.md")]
    mod ranking {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
