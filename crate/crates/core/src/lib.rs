//! Unsupervised feature selection over image texture features.
//!
//! The crate covers the full path from raw grayscale images to a reduced
//! feature subset and its clustering-based evaluation:
//!
//! - [`imaging`] — PGM i/o, noise injection, denoising filters, SNR scoring
//!   and region-growing segmentation.
//! - [`texture`] — gray level co-occurrence (GLCM) and difference (GLDM)
//!   matrices plus the nineteen Haralick-style texture features.
//! - [`tabular`] — continuous feature tables, equal-width discretization
//!   into categorical information tables, CSV persistence.
//! - [`softset`] — multi-soft-set decomposition, the AND product, and the
//!   SSUSQR greedy reduct search with an exhaustive reduct oracle.
//! - [`roughset`] — USQR and URR rough-set baselines.
//! - [`clustering`] — k-means, a self-organizing map, Dunn and silhouette
//!   validity indices, and subset evaluation.
//! - [`synthetic`] — deterministic synthetic fixtures used by tests and the
//!   bundled demo pipeline.

pub mod clustering;
pub mod error;
pub mod fixtures;
pub mod imaging;
pub mod roughset;
pub mod softset;
pub mod synthetic;
pub mod tabular;
pub mod texture;

pub use error::{Error, Result};
