//! Seeded sampling of rational parameters.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::{ratio, Rational};

/// Deterministic source of small rationals.
pub struct RationalSampler {
    rng: ChaCha8Rng,
    max_num: i64,
    max_den: i64,
}

impl RationalSampler {
    /// Samples `p/q` with `|p| ≤ 24` and `1 ≤ q ≤ 12`.
    pub fn new(seed: u64) -> Self {
        Self::with_bounds(seed, 24, 12)
    }

    pub fn with_bounds(seed: u64, max_num: i64, max_den: i64) -> Self {
        assert!(max_num >= 0 && max_den >= 1);
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_num,
            max_den,
        }
    }

    pub fn rational(&mut self) -> Rational {
        let p = self.rng.random_range(-self.max_num..=self.max_num);
        let q = self.rng.random_range(1..=self.max_den);
        ratio(p, q)
    }

    pub fn index(&mut self, range: std::ops::RangeInclusive<usize>) -> usize {
        self.rng.random_range(range)
    }

    /// `t` rationals summing to zero: `t − 1` free samples and their
    /// negated sum.
    pub fn zero_sum_offsets(&mut self, t: usize) -> Vec<Rational> {
        assert!(t >= 1);
        let mut v: Vec<Rational> = (0..t - 1).map(|_| self.rational()).collect();
        let total: Rational = v.iter().sum();
        v.push(-total);
        v
    }
}
