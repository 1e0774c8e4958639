//! Seeded pseudorandom elements with small exact coefficients.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::albert::AlbertElem;
use crate::composition::{Oct, Quat};
use crate::linalg::Vector;
use crate::scalar::Scalar;

/// Default seed for reproducible sampling.
pub const DEFAULT_SEED: u64 = 0x414C42;

/// Draws every rational coefficient uniformly from `{-2, -1, 0, 1, 2}`.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn small(&mut self) -> i64 {
        self.rng.gen_range(-2..=2)
    }

    pub fn scalar(&mut self) -> Scalar {
        let (a, b) = (self.small(), self.small());
        Scalar::from_ints(a, b)
    }

    /// Rational-only scalar.
    pub fn rational(&mut self) -> Scalar {
        Scalar::from(self.small())
    }

    pub fn quat(&mut self) -> Quat {
        Quat { m: std::array::from_fn(|_| self.scalar()) }
    }

    pub fn oct(&mut self) -> Oct {
        Oct::new(self.quat(), self.quat())
    }

    pub fn albert(&mut self) -> AlbertElem {
        AlbertElem::new(std::array::from_fn(|_| self.scalar()), std::array::from_fn(|_| self.oct()))
    }

    pub fn vector(&mut self, n: usize) -> Vector {
        (0..n).map(|_| self.scalar()).collect()
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}
