//! Exact checkers for the central binomial convolution identities.
//!
//! The basic object is the convolution
//! `Σ_{i_1+…+i_t=n} Π_k C(2 i_k + o_k, i_k)` for rational offsets `o_k`.
//! With all offsets zero this is `S_t(n)`, which equals
//! `4^n · C(n + t/2 − 1, n)`; the same value is obtained whenever the
//! offsets sum to zero.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{
    binomial, factorial, falling_factorial, finite_difference, four_pow, int, sign, BinomialArg,
    Polynomial, Rational,
};

/// A convolution of `t = offsets.len()` shifted central binomial sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvolutionSpec {
    n: usize,
    offsets: Vec<Rational>,
}

impl ConvolutionSpec {
    pub fn new(n: usize, offsets: Vec<Rational>) -> Result<Self> {
        if offsets.is_empty() {
            return Err(Error::Precondition(
                "a convolution needs at least one factor".into(),
            ));
        }
        Ok(ConvolutionSpec { n, offsets })
    }

    /// `t` factors with offset zero.
    pub fn central(t: usize, n: usize) -> Result<Self> {
        Self::new(n, vec![Rational::zero(); t])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn offsets(&self) -> &[Rational] {
        &self.offsets
    }
}

/// `C(2i + offset, i)` for `i = 0..=n`.
pub fn shifted_central_sequence(offset: &Rational, n: usize) -> Vec<Rational> {
    (0..=n)
        .map(|i| binomial(&(int(2 * i as i64) + offset), i as i64))
        .collect()
}

fn convolve(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    (0..a.len())
        .map(|k| (0..=k).map(|i| &a[i] * &b[k - i]).sum())
        .collect()
}

/// The exact convolution sum over all compositions of `n` into `t` parts.
///
/// Computed by folding the `t` sequences together with truncated Cauchy
/// products, which gives the composition sum by distributivity.
pub fn convolution_sum(spec: &ConvolutionSpec) -> Rational {
    let n = spec.n;
    let mut acc = shifted_central_sequence(&spec.offsets[0], n);
    for o in &spec.offsets[1..] {
        acc = convolve(&acc, &shifted_central_sequence(o, n));
    }
    acc.swap_remove(n)
}

/// `S_t(n)`: the t-fold convolution of `C(2i, i)`.
pub fn central_convolution(t: usize, n: usize) -> Rational {
    convolution_sum(&ConvolutionSpec::central(t.max(1), n).expect("t >= 1"))
}

/// `4^n · C(n + t/2 − 1, n)`.
pub fn closed_form(n: usize, t: &Rational) -> Rational {
    let upper = int(n as i64) + t / int(2) - int(1);
    four_pow(n as u32) * binomial(&upper, n as i64)
}

/// The closed form at `t = 2L + 1` together with its two quotient forms
/// `C(2n+2L, 2n)/C(n+L, n)·C(2n, n)` and `C(2n+2L, n+L)/C(2L, L)·C(n+L, n)`.
pub fn odd_t_values(n: usize, big_l: usize) -> [Rational; 3] {
    let (n, l) = (n as i64, big_l as i64);
    let c = |top: i64, k: i64| binomial(&int(top), k);
    [
        closed_form(n as usize, &int(2 * l + 1)),
        c(2 * n + 2 * l, 2 * n) / c(n + l, n) * c(2 * n, n),
        c(2 * n + 2 * l, n + l) / c(2 * l, l) * c(n + l, n),
    ]
}

pub fn odd_t_forms(n: usize, big_l: usize) -> bool {
    let [a, b, c] = odd_t_values(n, big_l);
    a == b && b == c
}

/// `S_{t+2}(n+1) = S_t(n+1) + 4·S_{t+2}(n)`.
pub fn recurrence_check(t: usize, n: usize) -> bool {
    if t == 0 {
        return false;
    }
    central_convolution(t + 2, n + 1)
        == central_convolution(t, n + 1) + int(4) * central_convolution(t + 2, n)
}

/// `Σ_{i=0..p} (−1)^i C(L−i, p−i) C(L−p, i)`, which is identically 1.
///
/// This is the form whose summand is polynomial in `L`; for integers
/// `L ≥ p` it agrees term by term with [`inclusion_exclusion_set_form`].
pub fn inclusion_exclusion_sum<X: BinomialArg>(big_l: &X, p: usize) -> X {
    let p = p as i64;
    let rest = big_l.sub_int(p);
    (0..=p).fold(X::nil(), |acc, i| {
        let term = binomial(&big_l.sub_int(i), p - i)
            .times(&binomial(&rest, i))
            .scale(&sign(i as usize));
        acc.plus(&term)
    })
}

/// `Σ_{i=0..p} (−1)^i C(L−i, L−p) C(L−p, i)` for integers `L ≥ p`: the
/// alternating count of `(L−p)`-subsets of `[L]` avoiding a given `i`-set.
pub fn inclusion_exclusion_set_form(big_l: usize, p: usize) -> Result<Rational> {
    if p > big_l {
        return Err(Error::OutOfRange(format!("p = {p} exceeds L = {big_l}")));
    }
    let (l, p) = (big_l as i64, p as i64);
    Ok((0..=p)
        .map(|i| sign(i as usize) * binomial(&int(l - i), l - p) * binomial(&int(l - p), i))
        .sum())
}

/// `Σ_{i+j=n} C(2i−L, i) C(2j+L, j) = 4^n`.
pub fn opposite_offsets_check(n: usize, big_l: &Rational) -> bool {
    let spec = ConvolutionSpec::new(n, vec![-big_l.clone(), big_l.clone()]).expect("two factors");
    convolution_sum(&spec) == four_pow(n as u32)
}

/// `Σ_{i+j=n} C(2i + a − ℓ, i) C(2j + ℓ, j)` as a polynomial in `ℓ`.
pub fn shift_invariance_poly(n: usize, a: &Rational) -> Polynomial {
    (0..=n).fold(Polynomial::zero(), |acc, i| {
        let j = n - i;
        let left = Polynomial::linear(int(2 * i as i64) + a, -Rational::one());
        let right = Polynomial::linear(int(2 * j as i64), Rational::one());
        &acc + &(&binomial(&left, i as i64) * &binomial(&right, j as i64))
    })
}

/// `p_i = (ℓ − a + i − 1)_i · (ℓ + 2n)_{n−i}` for `0 ≤ i ≤ n`.
pub fn difference_base(n: usize, a: &Rational, i: usize) -> Polynomial {
    let first = Polynomial::linear(int(i as i64 - 1) - a, Rational::one());
    let second = Polynomial::linear(int(2 * n as i64), Rational::one());
    &falling_factorial(&first, i as u32) * &falling_factorial(&second, (n - i) as u32)
}

/// `(−1)^m (a+n+m)_m · (ℓ − a + i − 1)_i · (ℓ + 2n)_{n−i−m}`.
pub fn difference_closed_form(n: usize, a: &Rational, i: usize, m: usize) -> Polynomial {
    let lead = sign(m) * falling_factorial(&(a + int((n + m) as i64)), m as u32);
    let first = Polynomial::linear(int(i as i64 - 1) - a, Rational::one());
    let second = Polynomial::linear(int(2 * n as i64), Rational::one());
    (&falling_factorial(&first, i as u32) * &falling_factorial(&second, (n - i - m) as u32))
        .scale(&lead)
}

/// `Σ_i (−1)^i C(n,i) q_i`, where `q_i(ℓ) = p_i(ℓ − 2i)`.
pub fn alternating_shifted_sum(n: usize, a: &Rational) -> Polynomial {
    (0..=n).fold(Polynomial::zero(), |acc, i| {
        let q = difference_base(n, a, i).shift(&int(-2 * i as i64));
        let w = sign(i) * binomial(&int(n as i64), i as i64);
        &acc + &q.scale(&w)
    })
}

/// Checks `Δ^m p_i` against its closed form, and that the alternating sum
/// of the shifted `q_i` equals `n!` times the convolution with offsets
/// `[a, 0]`.
pub fn delta_formula_check(n: usize, a: &Rational, i: usize, m: usize) -> Result<bool> {
    if m == 0 || i + m > n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= m <= n - i, got n={n} i={i} m={m}"
        )));
    }
    let difference = finite_difference(|k| difference_base(n, a, k), m, i);
    let formula_ok = difference == difference_closed_form(n, a, i, m);

    let target = factorial(n as u32)
        * convolution_sum(&ConvolutionSpec::new(n, vec![a.clone(), Rational::zero()])?);
    let bridge_ok = alternating_shifted_sum(n, a) == Polynomial::constant(target);
    Ok(formula_ok && bridge_ok)
}
