//! Spatial denoising filters: mean, Gaussian and median.
//!
//! All filters use edge replication at the borders, round half away from
//! zero and clamp into [0, 255], so dimensions and value range are always
//! preserved.

use super::{clamp_u8, GrayImage};
use crate::error::{Error, Result};

fn check_window(window: usize) -> Result<isize> {
    if window < 3 || window % 2 == 0 {
        return Err(Error::param(format!(
            "filter window {window} must be odd and >= 3"
        )));
    }
    Ok((window / 2) as isize)
}

/// Pixel lookup with edge replication.
fn pixel_clamped(image: &GrayImage, row: isize, col: isize) -> u8 {
    let r = row.clamp(0, image.height() as isize - 1) as usize;
    let c = col.clamp(0, image.width() as isize - 1) as usize;
    image.get(r, c)
}

/// Arithmetic-mean filter over an odd square window.
pub fn mean_filter(image: &GrayImage, window: usize) -> Result<GrayImage> {
    let half = check_window(window)?;
    let area = (window * window) as f64;
    let out = GrayImage::from_fn(image.width(), image.height(), |r, c| {
        let mut sum = 0u32;
        for dr in -half..=half {
            for dc in -half..=half {
                sum += pixel_clamped(image, r as isize + dr, c as isize + dc) as u32;
            }
        }
        clamp_u8(sum as f64 / area)
    })?;
    Ok(out)
}

/// Normalized 2D Gaussian kernel sampled on an odd square window.
/// Weights sum to exactly 1.
pub(crate) fn gaussian_kernel(window: usize, sigma: f64) -> Result<Vec<f64>> {
    let half = check_window(window)?;
    if sigma <= 0.0 || !sigma.is_finite() {
        return Err(Error::param(format!("gaussian sigma {sigma} must be > 0")));
    }
    let mut weights = Vec::with_capacity(window * window);
    let two_sigma_sq = 2.0 * sigma * sigma;
    for dr in -half..=half {
        for dc in -half..=half {
            let d2 = (dr * dr + dc * dc) as f64;
            weights.push((-d2 / two_sigma_sq).exp());
        }
    }
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    Ok(weights)
}

/// Convolution with a sampled, renormalized Gaussian kernel.
pub fn gaussian_filter(image: &GrayImage, window: usize, sigma: f64) -> Result<GrayImage> {
    let kernel = gaussian_kernel(window, sigma)?;
    let half = (window / 2) as isize;
    let out = GrayImage::from_fn(image.width(), image.height(), |r, c| {
        let mut acc = 0.0f64;
        let mut k = 0usize;
        for dr in -half..=half {
            for dc in -half..=half {
                acc += kernel[k] * pixel_clamped(image, r as isize + dr, c as isize + dc) as f64;
                k += 1;
            }
        }
        clamp_u8(acc)
    })?;
    Ok(out)
}

/// Median filter over an odd square window.
pub fn median_filter(image: &GrayImage, window: usize) -> Result<GrayImage> {
    let half = check_window(window)?;
    let mut values = Vec::with_capacity(window * window);
    let out = GrayImage::from_fn(image.width(), image.height(), |r, c| {
        values.clear();
        for dr in -half..=half {
            for dc in -half..=half {
                values.push(pixel_clamped(image, r as isize + dr, c as isize + dc));
            }
        }
        values.sort_unstable();
        values[values.len() / 2]
    })?;
    Ok(out)
}
