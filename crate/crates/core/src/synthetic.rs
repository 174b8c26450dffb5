//! Programmatic frame generators with known information content.
//!
//! Used by tests, benchmarks and the guide; every generator is deterministic
//! for a given seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::ingest::{quantize_value, GrayFrame};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Split {
    /// Left half low, right half high.
    LeftRight,
    /// Top half low, bottom half high.
    TopBottom,
}

/// Two-valued frame split down the middle, using intensities `0` and `levels - 1`.
///
/// On a square frame with even sides, a `LeftRight` and a `TopBottom` frame
/// are statistically independent: their joint histogram is uniform.
pub fn half_split(width: usize, height: usize, levels: u32, split: Split) -> Result<GrayFrame> {
    let high = (levels - 1) as u16;
    GrayFrame::from_fn(width, height, levels, |x, y| {
        let upper = match split {
            Split::LeftRight => x >= width / 2,
            Split::TopBottom => y >= height / 2,
        };
        if upper {
            high
        } else {
            0
        }
    })
}

/// Checkerboard of `cell × cell` squares using intensities `0` and `levels - 1`.
pub fn checkerboard(width: usize, height: usize, levels: u32, cell: usize) -> Result<GrayFrame> {
    let high = (levels - 1) as u16;
    let cell = cell.max(1);
    GrayFrame::from_fn(width, height, levels, |x, y| {
        if (x / cell + y / cell).is_multiple_of(2) {
            0
        } else {
            high
        }
    })
}

/// Frame with i.i.d. uniform pixel values.
pub fn random_frame<R: Rng>(width: usize, height: usize, levels: u32, rng: &mut R) -> GrayFrame {
    let pixels = (0..width * height)
        .map(|_| rng.random_range(0..levels) as u16)
        .collect();
    GrayFrame::new(width, height, levels, pixels).expect("valid random frame")
}

/// A textured scene with a square high-contrast object and per-pixel noise.
///
/// Frames are rendered at 8 bits and then quantized to `levels`.
#[derive(Debug, Clone, PartialEq)]
pub struct SceneSpec {
    pub width: usize,
    pub height: usize,
    pub levels: u32,
    /// Side of the square object, in pixels.
    pub object_size: usize,
    /// Maximum absolute noise, as a fraction of the 8-bit intensity range.
    pub noise_fraction: f64,
    pub seed: u64,
}

impl Default for SceneSpec {
    fn default() -> Self {
        Self {
            width: 64,
            height: 64,
            levels: 32,
            object_size: 24,
            noise_fraction: 0.05,
            seed: 0x5eed,
        }
    }
}

impl SceneSpec {
    fn background(&self, x: usize, y: usize) -> f64 {
        120.0 + 50.0 * (x as f64 / 5.0).sin() * (y as f64 / 7.0).cos()
    }

    fn object(&self, x: usize, y: usize) -> f64 {
        if (x / 4 + y / 4).is_multiple_of(2) {
            10.0
        } else {
            245.0
        }
    }

    pub fn left_x(&self) -> usize {
        self.width / 16
    }

    pub fn right_x(&self) -> usize {
        self.width
            .saturating_sub(self.object_size + self.width / 16)
    }

    fn top_y(&self) -> usize {
        self.height.saturating_sub(self.object_size) / 2
    }

    /// Renders one frame with the object's left edge at `object_x` (or no
    /// object), drawing fresh noise from `rng`.
    pub fn render<R: Rng>(&self, object_x: Option<usize>, rng: &mut R) -> GrayFrame {
        let amp = (self.noise_fraction * 256.0).round() as i32;
        let (oy, size) = (self.top_y(), self.object_size);
        GrayFrame::from_fn(self.width, self.height, self.levels, |x, y| {
            let inside = |ox: usize| x >= ox && x < ox + size && y >= oy && y < oy + size;
            let base = match object_x {
                Some(ox) if inside(ox) => self.object(x - ox, y - oy),
                _ => self.background(x, y),
            };
            let noise = if amp > 0 {
                rng.random_range(-amp..=amp)
            } else {
                0
            };
            let v = (base.round() as i32 + noise).clamp(0, 255) as u8;
            quantize_value(v, self.levels)
        })
        .expect("scene dimensions are positive")
    }

    /// `len` noisy frames; the object sits at the left for frames before
    /// `switch_at` and jumps to the right from `switch_at` on.
    pub fn teleport_sequence(&self, len: usize, switch_at: usize) -> Vec<GrayFrame> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..len)
            .map(|i| {
                let x = if i < switch_at {
                    self.left_x()
                } else {
                    self.right_x()
                };
                self.render(Some(x), &mut rng)
            })
            .collect()
    }

    /// `len` noisy frames with the object parked at the left.
    pub fn static_sequence(&self, len: usize) -> Vec<GrayFrame> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed.wrapping_add(1));
        (0..len)
            .map(|_| self.render(Some(self.left_x()), &mut rng))
            .collect()
    }
}
