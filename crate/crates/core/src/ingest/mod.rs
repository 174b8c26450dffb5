//! Turning image files into quantized grayscale frame sequences.
//!
//! Every frame goes through the same pipeline: luma conversion, box-filter
//! downscaling, then quantization to the configured number of levels.

mod decode;
mod frame;
mod preprocess;

pub use decode::{decode_sequence, SequenceSource, SourceKind};
pub use frame::GrayFrame;
pub use preprocess::{
    downscale, preprocess_rgba, quantize, quantize_value, to_grayscale, PreprocessConfig,
};
