//! Image ingestion, degradation, denoising and segmentation.
//!
//! Images are 8-bit grayscale, stored row-major. All operations are pure
//! functions of their inputs (plus an explicit seed where randomness is
//! involved), so they are safe to run concurrently on distinct images.

mod filter;
mod noise;
mod pgm;
mod segment;

pub use filter::{gaussian_filter, mean_filter, median_filter};
pub use noise::{add_noise, NoiseKind};
pub use pgm::{read_pgm, write_pgm};
pub use segment::{region_grow, Connectivity};

use crate::error::{Error, Result};

/// 2D grid of 8-bit intensity values, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    /// Builds an image from row-major pixel data.
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::param("image dimensions must be positive"));
        }
        if pixels.len() != width * height {
            return Err(Error::param(format!(
                "pixel buffer holds {} values, expected {}",
                pixels.len(),
                width * height
            )));
        }
        Ok(GrayImage {
            width,
            height,
            pixels,
        })
    }

    /// Constant-valued image.
    pub fn constant(width: usize, height: usize, value: u8) -> Result<Self> {
        Self::new(width, height, vec![value; width * height])
    }

    /// Builds an image by evaluating `f(row, col)` at every pixel.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> u8) -> Result<Self> {
        let mut pixels = Vec::with_capacity(width * height);
        for r in 0..height {
            for c in 0..width {
                pixels.push(f(r, c));
            }
        }
        Self::new(width, height, pixels)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        debug_assert!(row < self.height && col < self.width);
        self.pixels[row * self.width + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u8) {
        debug_assert!(row < self.height && col < self.width);
        self.pixels[row * self.width + col] = value;
    }

    /// Image with rows and columns swapped.
    pub fn transposed(&self) -> GrayImage {
        GrayImage::from_fn(self.height, self.width, |r, c| self.get(c, r))
            .expect("transpose preserves validity")
    }

    fn same_dims_as_mask(&self, mask: &BinaryMask) -> Result<()> {
        if self.width != mask.width || self.height != mask.height {
            return Err(Error::DimensionMismatch {
                left_width: self.width,
                left_height: self.height,
                right_width: mask.width,
                right_height: mask.height,
            });
        }
        Ok(())
    }

    fn same_dims(&self, other: &GrayImage) -> Result<()> {
        if self.width != other.width || self.height != other.height {
            return Err(Error::DimensionMismatch {
                left_width: self.width,
                left_height: self.height,
                right_width: other.width,
                right_height: other.height,
            });
        }
        Ok(())
    }
}

/// Boolean mask with the same geometry as the image it selects from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMask {
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

impl BinaryMask {
    pub fn new(width: usize, height: usize, bits: Vec<bool>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::param("mask dimensions must be positive"));
        }
        if bits.len() != width * height {
            return Err(Error::param(format!(
                "mask buffer holds {} values, expected {}",
                bits.len(),
                width * height
            )));
        }
        Ok(BinaryMask {
            width,
            height,
            bits,
        })
    }

    pub fn filled(width: usize, height: usize, value: bool) -> Result<Self> {
        Self::new(width, height, vec![value; width * height])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        debug_assert!(row < self.height && col < self.width);
        self.bits[row * self.width + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        debug_assert!(row < self.height && col < self.width);
        self.bits[row * self.width + col] = value;
    }

    /// Number of selected pixels.
    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

/// Signal-to-noise ratio outcome. Identical images have no noise power, so
/// the ratio is reported as a distinct variant instead of a number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Snr {
    Decibels(f64),
    Infinite,
}

impl std::fmt::Display for Snr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Snr::Decibels(db) => write!(f, "{db:.4} dB"),
            Snr::Infinite => write!(f, "inf dB"),
        }
    }
}

/// Signal-to-noise ratio of `processed` against `original`, in decibels:
/// `10·log10(Σ s² / Σ (ŝ − s)²)` over all pixels.
pub fn snr(original: &GrayImage, processed: &GrayImage) -> Result<Snr> {
    original.same_dims(processed)?;
    let mut signal = 0.0f64;
    let mut noise = 0.0f64;
    for (&s, &p) in original.pixels.iter().zip(&processed.pixels) {
        let s = s as f64;
        let d = p as f64 - s;
        signal += s * s;
        noise += d * d;
    }
    if noise == 0.0 {
        return Ok(Snr::Infinite);
    }
    Ok(Snr::Decibels(10.0 * (signal / noise).log10()))
}

/// Zeroes every pixel outside the mask; pixels inside are unchanged.
pub fn apply_mask(image: &GrayImage, mask: &BinaryMask) -> Result<GrayImage> {
    image.same_dims_as_mask(mask)?;
    let pixels = image
        .pixels
        .iter()
        .zip(&mask.bits)
        .map(|(&p, &m)| if m { p } else { 0 })
        .collect();
    GrayImage::new(image.width, image.height, pixels)
}

/// Rounds half away from zero and clamps into the 8-bit range.
pub(crate) fn clamp_u8(value: f64) -> u8 {
    value.round().clamp(0.0, 255.0) as u8
}
