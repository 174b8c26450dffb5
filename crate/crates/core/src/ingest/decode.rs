use std::fs::{self, File};
use std::io::BufReader;
use std::path::{Path, PathBuf};

use image::codecs::gif::GifDecoder;
use image::{AnimationDecoder, ImageFormat, ImageReader};

use super::{preprocess_rgba, GrayFrame, PreprocessConfig};
use crate::error::{Error, Result};

const STILL_EXTENSIONS: [&str; 5] = ["png", "jpg", "jpeg", "bmp", "gif"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceKind {
    /// One file holding every frame (animated GIF, or a single still).
    AnimatedImage,
    /// A directory of still images, ordered by file name.
    FrameDirectory,
}

/// Where a sequence comes from, plus the label it is reported under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSource {
    pub id: String,
    pub kind: SourceKind,
    pub path: PathBuf,
}

impl SequenceSource {
    /// Classifies `path` as a frame directory or an image file. The id is the
    /// path as given.
    pub fn resolve(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let meta = fs::metadata(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let kind = if meta.is_dir() {
            SourceKind::FrameDirectory
        } else {
            SourceKind::AnimatedImage
        };
        Ok(Self {
            id: path.display().to_string(),
            kind,
            path: path.to_path_buf(),
        })
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }
}

/// Decodes and preprocesses every frame of `src`, in temporal order.
///
/// Animated GIF frames are composited onto the running canvas (honoring each
/// frame's disposal method) before conversion, so every emitted frame is a
/// full picture. Directory entries with a supported image extension are read
/// in lexicographic file-name order; other files are skipped.
pub fn decode_sequence(src: &SequenceSource, cfg: &PreprocessConfig) -> Result<Vec<GrayFrame>> {
    cfg.validate()?;
    let frames = match src.kind {
        SourceKind::AnimatedImage => decode_file(&src.path, cfg)?,
        SourceKind::FrameDirectory => decode_directory(&src.path, cfg)?,
    };
    if frames.is_empty() {
        return Err(Error::NoFrames {
            path: src.path.clone(),
        });
    }
    Ok(frames)
}

fn decode_error(path: &Path, frame: impl Into<String>, err: impl ToString) -> Error {
    Error::Decode {
        path: path.to_path_buf(),
        frame: frame.into(),
        message: err.to_string(),
    }
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn check_homogeneous(
    path: &Path,
    frames: &[GrayFrame],
    next: &GrayFrame,
    label: impl FnOnce() -> String,
) -> Result<()> {
    match frames.first() {
        Some(first) if !first.same_shape(next) => Err(Error::FrameSizeMismatch {
            path: path.to_path_buf(),
            frame: label(),
            expected: first.shape_label(),
            found: next.shape_label(),
        }),
        _ => Ok(()),
    }
}

fn decode_file(path: &Path, cfg: &PreprocessConfig) -> Result<Vec<GrayFrame>> {
    let reader = ImageReader::open(path)
        .map_err(io_error(path))?
        .with_guessed_format()
        .map_err(io_error(path))?;

    if reader.format() == Some(ImageFormat::Gif) {
        let file = BufReader::new(File::open(path).map_err(io_error(path))?);
        let decoder = GifDecoder::new(file).map_err(|e| decode_error(path, "0", e))?;
        let mut frames = Vec::new();
        for (i, frame) in decoder.into_frames().enumerate() {
            let frame = frame.map_err(|e| decode_error(path, i.to_string(), e))?;
            let gray = preprocess_rgba(frame.buffer(), cfg)?;
            check_homogeneous(path, &frames, &gray, || i.to_string())?;
            frames.push(gray);
        }
        return Ok(frames);
    }

    let image = reader.decode().map_err(|e| decode_error(path, "0", e))?;
    Ok(vec![preprocess_rgba(&image.to_rgba8(), cfg)?])
}

fn has_still_extension(path: &Path) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .map(|e| STILL_EXTENSIONS.contains(&e.to_ascii_lowercase().as_str()))
        .unwrap_or(false)
}

fn decode_directory(dir: &Path, cfg: &PreprocessConfig) -> Result<Vec<GrayFrame>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(io_error(dir))? {
        let entry = entry.map_err(io_error(dir))?;
        let path = entry.path();
        if path.is_file() && has_still_extension(&path) {
            files.push(path);
        }
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));

    let mut frames = Vec::with_capacity(files.len());
    for file in &files {
        let name = || {
            file.file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default()
        };
        let image = image::open(file).map_err(|e| decode_error(dir, name(), e))?;
        let gray = preprocess_rgba(&image.to_rgba8(), cfg)?;
        check_homogeneous(dir, &frames, &gray, name)?;
        frames.push(gray);
    }
    Ok(frames)
}
