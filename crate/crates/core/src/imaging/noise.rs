//! Seeded noise injection.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use super::{clamp_u8, GrayImage};
use crate::error::{Error, Result};

/// Noise model applied by [`add_noise`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NoiseKind {
    /// Additive zero-mean Gaussian noise with the given standard deviation.
    Gaussian { sigma: f64 },
    /// Impulse noise: exactly `round(fraction · K)` pixels are forced to 0
    /// or 255, and every corrupted pixel is guaranteed to change value.
    SaltPepper { fraction: f64 },
}

/// Degrades `image` with the chosen noise model. Deterministic per seed.
pub fn add_noise(image: &GrayImage, kind: NoiseKind, seed: u64) -> Result<GrayImage> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        NoiseKind::Gaussian { sigma } => {
            if sigma < 0.0 || !sigma.is_finite() {
                return Err(Error::param(format!("gaussian sigma {sigma} must be >= 0")));
            }
            if sigma == 0.0 {
                return Ok(image.clone());
            }
            let normal = Normal::new(0.0, sigma).expect("validated sigma");
            let pixels = image
                .pixels()
                .iter()
                .map(|&p| clamp_u8(p as f64 + normal.sample(&mut rng)))
                .collect();
            GrayImage::new(image.width(), image.height(), pixels)
        }
        NoiseKind::SaltPepper { fraction } => {
            if !(0.0..=1.0).contains(&fraction) || !fraction.is_finite() {
                return Err(Error::param(format!(
                    "salt-and-pepper fraction {fraction} must lie in [0, 1]"
                )));
            }
            let total = image.pixels().len();
            let hits = (fraction * total as f64).round() as usize;
            let mut out = image.clone();
            let targets = rand::seq::index::sample(&mut rng, total, hits);
            for idx in targets {
                let old = out.pixels()[idx];
                let mut new = if rand::Rng::random_bool(&mut rng, 0.5) {
                    255
                } else {
                    0
                };
                if new == old {
                    // Guarantee the pixel actually changes.
                    new = if old == 0 { 255 } else { 0 };
                }
                let (w, r, c) = (out.width(), idx / out.width(), idx % out.width());
                debug_assert_eq!(r * w + c, idx);
                out.set(r, c, new);
            }
            Ok(out)
        }
    }
}
