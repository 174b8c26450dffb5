use crate::error::{Error, Result};
use crate::infotheory::Histogram;

/// A quantized grayscale raster: the frame viewed as a distribution of
/// pixel intensities.
///
/// Pixels are stored row-major and every value is below `levels`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrayFrame {
    width: usize,
    height: usize,
    levels: u32,
    pixels: Vec<u16>,
}

impl GrayFrame {
    pub const MAX_LEVELS: u32 = 65536;

    pub fn new(width: usize, height: usize, levels: u32, pixels: Vec<u16>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidFrame(format!(
                "empty raster {width}x{height}"
            )));
        }
        if !(2..=Self::MAX_LEVELS).contains(&levels) {
            return Err(Error::InvalidLevels {
                levels,
                max: Self::MAX_LEVELS,
            });
        }
        if pixels.len() != width * height {
            return Err(Error::InvalidFrame(format!(
                "{} pixels for a {width}x{height} raster",
                pixels.len()
            )));
        }
        if let Some((i, &v)) = pixels.iter().enumerate().find(|(_, &v)| v as u32 >= levels) {
            return Err(Error::InvalidFrame(format!(
                "pixel {i} has value {v}, not below {levels} levels"
            )));
        }
        Ok(Self {
            width,
            height,
            levels,
            pixels,
        })
    }

    /// A frame where every pixel has value `value`.
    pub fn filled(width: usize, height: usize, levels: u32, value: u16) -> Result<Self> {
        Self::new(width, height, levels, vec![value; width * height])
    }

    /// Builds a frame by evaluating `f(x, y)` for each pixel.
    pub fn from_fn(
        width: usize,
        height: usize,
        levels: u32,
        mut f: impl FnMut(usize, usize) -> u16,
    ) -> Result<Self> {
        let mut pixels = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        Self::new(width, height, levels, pixels)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn levels(&self) -> u32 {
        self.levels
    }

    pub fn pixels(&self) -> &[u16] {
        &self.pixels
    }

    pub fn get(&self, x: usize, y: usize) -> u16 {
        self.pixels[y * self.width + x]
    }

    pub fn histogram(&self) -> Histogram {
        Histogram::from_frame(self)
    }

    /// Same width, height and levels.
    pub fn same_shape(&self, other: &GrayFrame) -> bool {
        self.width == other.width && self.height == other.height && self.levels == other.levels
    }

    pub(crate) fn shape_label(&self) -> String {
        format!("{}x{} with {} levels", self.width, self.height, self.levels)
    }
}
