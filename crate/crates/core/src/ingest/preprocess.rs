use image::RgbaImage;

use super::GrayFrame;
use crate::error::{Error, Result};

/// Frame preprocessing parameters shared by every frame of a sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PreprocessConfig {
    /// Spatial downscale factor in `(0, 1]`.
    pub scale_factor: f64,
    /// Number of intensity levels after quantization.
    pub levels: u32,
}

impl PreprocessConfig {
    /// ITU-R BT.601 luma weights for R, G and B.
    pub const LUMA_WEIGHTS: [f64; 3] = [0.299, 0.587, 0.114];

    pub fn new(scale_factor: f64, levels: u32) -> Result<Self> {
        let cfg = Self {
            scale_factor,
            levels,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        check_scale(self.scale_factor)?;
        if !(2..=GrayFrame::MAX_LEVELS).contains(&self.levels) {
            return Err(Error::InvalidLevels {
                levels: self.levels,
                max: GrayFrame::MAX_LEVELS,
            });
        }
        Ok(())
    }
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        Self {
            scale_factor: 1.0,
            levels: 256,
        }
    }
}

fn check_scale(scale_factor: f64) -> Result<()> {
    if scale_factor > 0.0 && scale_factor <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidScale(scale_factor))
    }
}

/// Luma of an 8-bit RGB triple, rounded to the nearest integer.
pub fn to_grayscale(r: u8, g: u8, b: u8) -> u8 {
    let [wr, wg, wb] = PreprocessConfig::LUMA_WEIGHTS;
    let y = wr * r as f64 + wg * g as f64 + wb * b as f64;
    y.round().clamp(0.0, 255.0) as u8
}

fn scaled_dim(dim: usize, scale_factor: f64) -> usize {
    // the epsilon keeps e.g. 100 * 0.29 from flooring to 28
    ((dim as f64 * scale_factor + 1e-9).floor() as usize).max(1)
}

/// Area-averaging downscale. Output dimensions are `max(1, floor(dim · factor))`
/// and each output pixel is the rounded mean of the source pixels in its box.
pub fn downscale(frame: &GrayFrame, scale_factor: f64) -> Result<GrayFrame> {
    check_scale(scale_factor)?;
    let (w, h) = (frame.width(), frame.height());
    let (out_w, out_h) = (scaled_dim(w, scale_factor), scaled_dim(h, scale_factor));
    if out_w == w && out_h == h {
        return Ok(frame.clone());
    }

    let src = frame.pixels();
    let mut pixels = Vec::with_capacity(out_w * out_h);
    for oy in 0..out_h {
        let (y0, y1) = (oy * h / out_h, (oy + 1) * h / out_h);
        for ox in 0..out_w {
            let (x0, x1) = (ox * w / out_w, (ox + 1) * w / out_w);
            let mut sum = 0u64;
            for y in y0..y1 {
                sum += src[y * w + x0..y * w + x1]
                    .iter()
                    .map(|&v| v as u64)
                    .sum::<u64>();
            }
            let n = ((y1 - y0) * (x1 - x0)) as u64;
            pixels.push(((2 * sum + n) / (2 * n)) as u16);
        }
    }
    GrayFrame::new(out_w, out_h, frame.levels(), pixels)
}

/// Bin index `floor(v · levels / 256)` of an 8-bit intensity.
pub fn quantize_value(v: u8, levels: u32) -> u16 {
    ((v as u32 * levels) / 256) as u16
}

/// Requantizes an 8-bit (256-level) frame to `levels` bins.
pub fn quantize(frame: &GrayFrame, levels: u32) -> Result<GrayFrame> {
    if frame.levels() != 256 {
        return Err(Error::InvalidFrame(format!(
            "quantization expects an 8-bit frame, got {} levels",
            frame.levels()
        )));
    }
    if !(2..=256).contains(&levels) {
        return Err(Error::InvalidLevels { levels, max: 256 });
    }
    if levels == 256 {
        return Ok(frame.clone());
    }
    let pixels = frame
        .pixels()
        .iter()
        .map(|&v| quantize_value(v as u8, levels))
        .collect();
    GrayFrame::new(frame.width(), frame.height(), levels, pixels)
}

/// Grayscale, downscale and quantize one decoded RGBA image. Alpha is ignored.
pub fn preprocess_rgba(image: &RgbaImage, cfg: &PreprocessConfig) -> Result<GrayFrame> {
    cfg.validate()?;
    let pixels = image
        .pixels()
        .map(|p| to_grayscale(p[0], p[1], p[2]) as u16)
        .collect();
    let gray = GrayFrame::new(image.width() as usize, image.height() as usize, 256, pixels)?;
    let small = downscale(&gray, cfg.scale_factor)?;
    quantize(&small, cfg.levels)
}
