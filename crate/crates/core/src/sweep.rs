//! Exhaustive verification of the bijection for a fixed length.

use std::collections::HashSet;

use crate::bijection::{phi, phi_inverse, phi_traced};
use crate::configuration::{enumerate_ordered, tower_free_at, Configuration};
use crate::exec::Execution;

/// Outcome of checking every ordered and every tower-free `n`-configuration.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BijectionSweep {
    pub n: usize,
    /// `|𝒪_n|`, as enumerated.
    pub ordered: usize,
    /// `|𝒯_n| = 4^n`.
    pub tower_free: usize,
    /// Distinct images of the ordered configurations.
    pub image_size: usize,
    /// Inputs where the map failed or left the tower-free length-`n` set.
    pub codomain_failures: usize,
    /// `phi_inverse(phi(R)) ≠ R`.
    pub left_inverse_failures: usize,
    /// `phi(phi_inverse(Q)) ≠ Q`, including inverse errors.
    pub right_inverse_failures: usize,
    /// Descent count of the image differs from the tower count.
    pub descent_law_failures: usize,
    /// `phi(R) = R` exactly when `R` is tower-free, violated.
    pub fixed_point_failures: usize,
    /// Top-level sections not anchored at the even columns of `R`.
    pub anchor_failures: usize,
}

impl BijectionSweep {
    pub fn passed(&self) -> bool {
        self.ordered == self.tower_free
            && self.image_size == self.tower_free
            && self.codomain_failures == 0
            && self.left_inverse_failures == 0
            && self.right_inverse_failures == 0
            && self.descent_law_failures == 0
            && self.fixed_point_failures == 0
            && self.anchor_failures == 0
    }
}

#[derive(Default)]
struct Forward {
    image: Option<Configuration>,
    codomain: bool,
    left_inverse: bool,
    descent_law: bool,
    fixed_point: bool,
    anchored: bool,
}

fn check_forward(r: &Configuration) -> Forward {
    let Ok((q, trace)) = phi_traced(r) else {
        return Forward::default();
    };
    let even: Vec<usize> = (1..=r.len()).filter(|&k| r.column(k).is_even()).collect();
    let anchored = match trace.last() {
        Some(top) if top.depth == 0 => top
            .sections
            .iter()
            .zip(even.chunks(2))
            .all(|(s, pair)| (s.start, s.end) == (pair[0], pair[1])),
        _ => even.is_empty(),
    };
    Forward {
        codomain: q.len() == r.len() && q.is_tower_free(),
        left_inverse: phi_inverse(&q).as_ref() == Ok(r),
        descent_law: q.descents().len() == r.tower_count(),
        fixed_point: (q == *r) == r.is_tower_free(),
        anchored,
        image: Some(q),
    }
}

pub fn bijection_sweep(n: usize, exec: Execution) -> BijectionSweep {
    let ordered: Vec<Configuration> = enumerate_ordered(n).collect();
    let forward = exec.map(ordered, |r| check_forward(&r));

    let count = 1u64 << (2 * n);
    let indices: Vec<u64> = (0..count).collect();
    let backward = exec.map(indices, |k| {
        let q = tower_free_at(n, k);
        matches!(phi_inverse(&q).and_then(|r| phi(&r)), Ok(back) if back == q)
    });

    let fails = |f: fn(&Forward) -> bool| forward.iter().filter(|x| !f(x)).count();
    let images: HashSet<&Configuration> = forward.iter().filter_map(|f| f.image.as_ref()).collect();
    BijectionSweep {
        n,
        ordered: forward.len(),
        tower_free: count as usize,
        image_size: images.len(),
        codomain_failures: fails(|f| f.codomain),
        left_inverse_failures: fails(|f| f.left_inverse),
        right_inverse_failures: backward.iter().filter(|ok| !**ok).count(),
        descent_law_failures: fails(|f| f.descent_law),
        fixed_point_failures: fails(|f| f.fixed_point),
        anchor_failures: fails(|f| f.anchored),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass_both_ways() {
        for n in 0..=5 {
            let seq = bijection_sweep(n, Execution::Sequential);
            assert!(seq.passed(), "{seq:?}");
            assert_eq!(seq, bijection_sweep(n, Execution::Parallel));
        }
    }
}
