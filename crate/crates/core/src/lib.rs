//! Deterministic core of the Mirage one-step video editing pipeline.
//!
//! Everything in this crate is pure computation over heap buffers: causal 3D
//! video autoencoding with per-frame 2D latent injection, low-rank adapter
//! families, the fixed-timestep one-step denoising path, the two training
//! stages, 3D splat alignment with 2D bounding-box refinement, the synthetic
//! scene generator, and the evaluation metrics.
//!
//! The crate is `no_std` (with `alloc`): file formats, image decoding and the
//! command-line layer live in the companion `mirage` crate. All operations are
//! single-threaded and bitwise deterministic given an [`rng::RngSeed`], which
//! is what the causality, zero-init-identity and reproducibility test suites
//! rely on.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod adapters;
pub mod alignment;
pub mod clip;
pub mod denoiser;
pub mod error;
pub mod graph;
pub mod injection;
pub mod losses;
pub mod metrics;
pub mod model;
pub mod ops;
pub mod params;
pub mod perceptual;
pub mod pipeline;
pub mod rng;
pub mod scalar;
pub mod tensor;
pub mod training;
pub mod vae;

pub use error::{Error, Result};
pub use rng::RngSeed;
pub use scalar::Scalar;
pub use tensor::Tensor;
