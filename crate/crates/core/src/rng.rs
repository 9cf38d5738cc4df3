//! Seeded randomness.
//!
//! A single [`RngSeed`] pins every random choice in the repository: synthetic
//! data, parameter initialization, batch sampling and noise draws. Streams are
//! ChaCha8 so they are identical across platforms and runs.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// 64-bit seed; the sole source of randomness for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngSeed(pub u64);

impl RngSeed {
    /// Derives an independent child seed for a named substream.
    pub fn child(self, label: &str) -> RngSeed {
        // FNV-1a over the label, folded into the parent seed.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in label.as_bytes() {
            h ^= u64::from(*b);
            h = h.wrapping_mul(0x1000_0000_01b3);
        }
        RngSeed(self.0.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ h)
    }

    pub fn rng(self) -> Rng {
        Rng::new(self)
    }
}

/// Deterministic random stream with the handful of draws the crate needs.
pub struct Rng {
    inner: ChaCha8Rng,
    spare_normal: Option<f64>,
}

impl Rng {
    pub fn new(seed: RngSeed) -> Self {
        Rng {
            inner: ChaCha8Rng::seed_from_u64(seed.0),
            spare_normal: None,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform in [0, 1) with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Uniform integer in [0, n).
    pub fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.uniform() * n as f64) as usize % n
    }

    /// Standard normal via Box-Muller; pairs are cached so the stream is
    /// consumed two uniforms at a time.
    pub fn normal(&mut self) -> f64 {
        if let Some(z) = self.spare_normal.take() {
            return z;
        }
        // u in (0,1] to keep ln finite.
        let u = 1.0 - self.uniform();
        let v = self.uniform();
        let r = (-2.0 * num_traits::Float::ln(u)).sqrt();
        let theta = 2.0 * core::f64::consts::PI * v;
        let (s, c) = num_traits::Float::sin_cos(theta);
        self.spare_normal = Some(r * s);
        r * c
    }

    pub fn normal_scalar<T: Scalar>(&mut self, mean: f64, std: f64) -> T {
        T::from_f64(mean + std * self.normal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = RngSeed(7).rng();
        let mut b = RngSeed(7).rng();
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn child_streams_differ() {
        let mut a = RngSeed(7).child("init").rng();
        let mut b = RngSeed(7).child("data").rng();
        assert_ne!(a.next_u64(), b.next_u64());
    }

    #[test]
    fn normal_moments() {
        let mut r = RngSeed(3).rng();
        let n = 200_000;
        let mut sum = 0.0;
        let mut sq = 0.0;
        for _ in 0..n {
            let z = r.normal();
            sum += z;
            sq += z * z;
        }
        let mean = sum / n as f64;
        let var = sq / n as f64 - mean * mean;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 1.0).abs() < 0.02, "var {var}");
    }
}
