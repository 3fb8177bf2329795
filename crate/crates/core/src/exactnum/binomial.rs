use num_traits::{One, Zero};

use super::{int, sign, Polynomial, Rational};

/// Values that can be fed to [`falling_factorial`] and [`binomial`]:
/// exact rationals and polynomials in `ℓ`.
pub trait BinomialArg: Clone {
    fn unit() -> Self;
    fn nil() -> Self;
    /// `self - m`.
    fn sub_int(&self, m: i64) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scale(&self, by: &Rational) -> Self;
}

impl BinomialArg for Rational {
    fn unit() -> Self {
        One::one()
    }

    fn nil() -> Self {
        Zero::zero()
    }

    fn sub_int(&self, m: i64) -> Self {
        self - int(m)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn scale(&self, by: &Rational) -> Self {
        self * by
    }
}

impl BinomialArg for Polynomial {
    fn unit() -> Self {
        Polynomial::one()
    }

    fn nil() -> Self {
        Polynomial::zero()
    }

    fn sub_int(&self, m: i64) -> Self {
        self - &Polynomial::constant(int(m))
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn scale(&self, by: &Rational) -> Self {
        Polynomial::scale(self, by)
    }
}

/// `k!` as a rational.
pub fn factorial(k: u32) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, m| acc * int(m))
}

/// `(x)_k = x (x−1) ⋯ (x−k+1)`; the empty product for `k = 0` is 1.
pub fn falling_factorial<X: BinomialArg>(x: &X, k: u32) -> X {
    (0..k as i64).fold(X::unit(), |acc, m| acc.times(&x.sub_int(m)))
}

/// Generalized binomial coefficient `(x)_k / k!`, zero for negative `k`.
pub fn binomial<X: BinomialArg>(x: &X, k: i64) -> X {
    if k < 0 {
        return X::nil();
    }
    let k = k as u32;
    falling_factorial(x, k).scale(&factorial(k).recip())
}

/// `Δ^m f` at index `i`, as `Σ_{r=0..m} (−1)^{m−r} C(m,r) f(i+r)`.
pub fn finite_difference<F>(f: F, m: usize, i: usize) -> Polynomial
where
    F: Fn(usize) -> Polynomial,
{
    (0..=m).fold(Polynomial::zero(), |acc, r| {
        let weight = sign(m - r) * binomial(&int(m as i64), r as i64);
        &acc + &f(i + r).scale(&weight)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;
    use proptest::prelude::*;

    fn iterated_difference(f: &dyn Fn(usize) -> Polynomial, m: usize, i: usize) -> Polynomial {
        if m == 0 {
            f(i)
        } else {
            &iterated_difference(f, m - 1, i + 1) - &iterated_difference(f, m - 1, i)
        }
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(&ratio(5, 2), 2), ratio(15, 4));
        assert_eq!(falling_factorial(&ratio(-7, 3), 0), int(1));
        assert_eq!(falling_factorial(&Polynomial::ell(), 0), Polynomial::one());
        let sq = falling_factorial(&Polynomial::ell(), 2);
        assert_eq!(sq, Polynomial::from_coeffs(vec![int(0), int(-1), int(1)]));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&ratio(5, 2), 2), ratio(15, 8));
        assert_eq!(binomial(&int(-1), 0), int(1));
        assert_eq!(binomial(&int(4), 2), int(6));
        assert_eq!(binomial(&int(4), -1), int(0));
        assert_eq!(binomial(&int(3), 5), int(0));
        assert!(binomial(&Polynomial::ell(), -2).is_zero());
    }

    #[test]
    fn finite_difference_examples() {
        // p_0 = ℓ + 2, p_1 = ℓ
        let p = |i: usize| Polynomial::linear(int(2 - 2 * i as i64), int(1));
        assert_eq!(finite_difference(p, 0, 0), p(0));
        assert_eq!(finite_difference(p, 1, 0), Polynomial::constant(int(-2)));
        let c = |_: usize| Polynomial::linear(int(3), int(5));
        for m in 1..5 {
            assert!(finite_difference(c, m, 2).is_zero());
        }
    }

    #[test]
    fn upper_negation() {
        for big_l in -8i64..=25 {
            for i in 0..=20i64 {
                let lhs = binomial(&int(2 * i - big_l), i);
                let rhs = sign(i as usize) * binomial(&int(big_l - 1 - i), i);
                assert_eq!(lhs, rhs, "L={big_l} i={i}");
            }
        }
    }

    #[test]
    fn vandermonde_split() {
        for n in 0..6i64 {
            for i in 0..=n {
                for ell in [int(0), int(7), ratio(5, 3), ratio(-9, 4)] {
                    let a = int(2 * n + 1);
                    let b = &ell - int(1 + 2 * i);
                    for j in 0..=12 {
                        let lhs = binomial(&(&a + &b), j);
                        let rhs: Rational =
                            (0..=j).map(|k| binomial(&a, k) * binomial(&b, j - k)).sum();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn difference_matches_iterated_differences() {
        let f = |i: usize| {
            let base = Polynomial::linear(int(i as i64 * i as i64), ratio(1, 1 + i as i64));
            falling_factorial(&base, 3)
        };
        for m in 0..6 {
            for i in 0..4 {
                assert_eq!(finite_difference(f, m, i), iterated_difference(&f, m, i));
            }
        }
    }

    proptest! {
        #[test]
        fn binomial_times_factorial_is_falling(num in -60i64..60, den in 1i64..12, k in 0u32..10) {
            let x = ratio(num, den);
            prop_assert_eq!(binomial(&x, k as i64) * factorial(k), falling_factorial(&x, k));
        }

        #[test]
        fn polynomial_binomial_evaluates_pointwise(c in -20i64..20, s in -4i64..4, k in 0i64..7, at in -10i64..10) {
            let x = Polynomial::linear(int(c), int(s));
            let direct = binomial(&x.eval(&int(at)), k);
            prop_assert_eq!(binomial(&x, k).eval(&int(at)), direct);
        }

        #[test]
        fn difference_is_linear(a in -5i64..5, b in -5i64..5, m in 0usize..5) {
            let f = |i: usize| falling_factorial(&Polynomial::linear(int(i as i64), int(1)), 2);
            let g = |i: usize| Polynomial::linear(int(3 * i as i64), int(i as i64));
            let combo = |i: usize| &f(i).scale(&int(a)) + &g(i).scale(&int(b));
            let lhs = finite_difference(combo, m, 1);
            let rhs = &finite_difference(f, m, 1).scale(&int(a)) + &finite_difference(g, m, 1).scale(&int(b));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
