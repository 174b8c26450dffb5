use std::path::PathBuf;

use thiserror::Error;

/// Errors produced while decoding, measuring or ranking image sequences.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty distribution")]
    EmptyDistribution,

    #[error("joint histogram bins mismatch: {rows} rows vs {cols} columns")]
    MalformedHistogram { rows: usize, cols: usize },

    #[error("levels must be in [2, {max}], got {levels}")]
    InvalidLevels { levels: u32, max: u32 },

    #[error("scale factor must be in (0, 1], got {0}")]
    InvalidScale(f64),

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("frames differ: frame {index} is {found}, expected {expected}")]
    HeterogeneousFrames {
        index: usize,
        expected: String,
        found: String,
    },

    #[error("sequence too short: {frames} frame(s), need at least 2")]
    SequenceTooShort { frames: usize },

    #[error("no pair records to search")]
    EmptySeries,

    #[error("no sequences to compare")]
    NoSequences,

    #[error("cannot compare sequences analyzed with different modes ({first} vs {other})")]
    MixedModes { first: String, other: String },

    #[error("cannot compare sequences quantized to different levels ({first} vs {other})")]
    MixedLevels { first: u32, other: u32 },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: no decodable frames", path.display())]
    NoFrames { path: PathBuf },

    #[error("{}: frame {frame} failed to decode: {message}", path.display())]
    Decode {
        path: PathBuf,
        frame: String,
        message: String,
    },

    #[error("{}: frame {frame} is {found}, expected {expected}", path.display())]
    FrameSizeMismatch {
        path: PathBuf,
        frame: String,
        expected: String,
        found: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
