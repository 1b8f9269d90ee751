//! Seeded region growing.

use std::collections::VecDeque;

use super::{BinaryMask, GrayImage};
use crate::error::{Error, Result};

/// Pixel neighborhood used during growth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    Four,
    Eight,
}

impl Connectivity {
    /// Neighbor offsets in fixed order: N, E, S, W, then NE, SE, SW, NW.
    fn offsets(self) -> &'static [(isize, isize)] {
        const FOUR: [(isize, isize); 4] = [(-1, 0), (0, 1), (1, 0), (0, -1)];
        const EIGHT: [(isize, isize); 8] = [
            (-1, 0),
            (0, 1),
            (1, 0),
            (0, -1),
            (-1, 1),
            (1, 1),
            (1, -1),
            (-1, -1),
        ];
        match self {
            Connectivity::Four => &FOUR,
            Connectivity::Eight => &EIGHT,
        }
    }
}

/// Grows a region from `seeds`: a pixel joins when its intensity differs
/// from the running region mean by at most `threshold`. Growth is FIFO with
/// a fixed neighbor order, so the result is deterministic. Every seed is
/// part of the region unconditionally.
pub fn region_grow(
    image: &GrayImage,
    seeds: &[(usize, usize)],
    threshold: f64,
    connectivity: Connectivity,
) -> Result<BinaryMask> {
    if seeds.is_empty() {
        return Err(Error::param("region growing needs at least one seed"));
    }
    if threshold < 0.0 || !threshold.is_finite() {
        return Err(Error::param(format!("threshold {threshold} must be >= 0")));
    }
    for &(r, c) in seeds {
        if r >= image.height() || c >= image.width() {
            return Err(Error::param(format!(
                "seed ({r}, {c}) outside {}x{} image",
                image.width(),
                image.height()
            )));
        }
    }

    let mut mask = BinaryMask::filled(image.width(), image.height(), false)?;
    let mut queue = VecDeque::new();
    let mut sum = 0.0f64;
    let mut count = 0usize;
    for &(r, c) in seeds {
        if mask.get(r, c) {
            continue; // duplicate seed
        }
        mask.set(r, c, true);
        sum += image.get(r, c) as f64;
        count += 1;
        queue.push_back((r, c));
    }

    while let Some((r, c)) = queue.pop_front() {
        for &(dr, dc) in connectivity.offsets() {
            let nr = r as isize + dr;
            let nc = c as isize + dc;
            if nr < 0 || nc < 0 || nr >= image.height() as isize || nc >= image.width() as isize {
                continue;
            }
            let (nr, nc) = (nr as usize, nc as usize);
            if mask.get(nr, nc) {
                continue;
            }
            let mean = sum / count as f64;
            if (image.get(nr, nc) as f64 - mean).abs() <= threshold {
                mask.set(nr, nc, true);
                sum += image.get(nr, nc) as f64;
                count += 1;
                queue.push_back((nr, nc));
            }
        }
    }
    Ok(mask)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plateau_image() -> GrayImage {
        // left half 50, right half 200
        GrayImage::from_fn(8, 8, |_, c| if c < 4 { 50 } else { 200 }).unwrap()
    }

    #[test]
    fn constant_image_fills_entirely() {
        let img = GrayImage::constant(6, 4, 99).unwrap();
        let mask = region_grow(&img, &[(0, 0)], 0.0, Connectivity::Four).unwrap();
        assert_eq!(mask.count(), 24);
    }

    #[test]
    fn plateau_is_segmented_exactly() {
        let img = plateau_image();
        let mask = region_grow(&img, &[(2, 1)], 10.0, Connectivity::Four).unwrap();
        assert_eq!(mask.count(), 32);
        for r in 0..8 {
            for c in 0..8 {
                assert_eq!(mask.get(r, c), c < 4);
            }
        }
    }

    #[test]
    fn zero_threshold_keeps_lonely_seed() {
        let img = GrayImage::from_fn(3, 3, |r, c| if (r, c) == (1, 1) { 100 } else { 10 }).unwrap();
        let mask = region_grow(&img, &[(1, 1)], 0.0, Connectivity::Eight).unwrap();
        assert_eq!(mask.count(), 1);
        assert!(mask.get(1, 1));
    }

    #[test]
    fn empty_seed_list_rejected() {
        let img = GrayImage::constant(2, 2, 0).unwrap();
        assert!(region_grow(&img, &[], 1.0, Connectivity::Four).is_err());
    }

    #[test]
    fn out_of_bounds_seed_rejected() {
        let img = GrayImage::constant(2, 2, 0).unwrap();
        assert!(region_grow(&img, &[(2, 0)], 1.0, Connectivity::Four).is_err());
    }

    #[test]
    fn mask_contains_all_seeds_even_dissimilar_ones() {
        let img = plateau_image();
        let mask = region_grow(&img, &[(0, 0), (0, 7)], 0.0, Connectivity::Four).unwrap();
        assert!(mask.get(0, 0));
        assert!(mask.get(0, 7));
    }

    #[test]
    fn grown_region_is_connected() {
        // oracle: BFS restricted to the mask must reach every masked pixel
        let img = GrayImage::from_fn(10, 10, |r, c| ((r * 29 + c * 13) % 97) as u8).unwrap();
        let seeds = [(5, 5)];
        let mask = region_grow(&img, &seeds, 30.0, Connectivity::Eight).unwrap();

        let mut seen = vec![false; 100];
        let mut queue = std::collections::VecDeque::from([seeds[0]]);
        seen[seeds[0].0 * 10 + seeds[0].1] = true;
        let mut reached = 1;
        while let Some((r, c)) = queue.pop_front() {
            for &(dr, dc) in Connectivity::Eight.offsets() {
                let (nr, nc) = (r as isize + dr, c as isize + dc);
                if nr < 0 || nc < 0 || nr >= 10 || nc >= 10 {
                    continue;
                }
                let (nr, nc) = (nr as usize, nc as usize);
                if mask.get(nr, nc) && !seen[nr * 10 + nc] {
                    seen[nr * 10 + nc] = true;
                    reached += 1;
                    queue.push_back((nr, nc));
                }
            }
        }
        assert_eq!(reached, mask.count());
    }
}
