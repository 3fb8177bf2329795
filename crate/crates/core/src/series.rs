//! Truncated formal power series over the rationals, the generating
//! functions `g(x) = Σ C(2n,n) xⁿ` and `C(x) = Σ C(2n,n)/(n+1) xⁿ`, and the
//! checks of their power, derivative and coefficient formulas.
//!
//! Rational powers are computed as `exp(r · log f)`, independently of any
//! closed form for the coefficients.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{
    binomial, factorial, falling_factorial, four_pow, int, pow, Polynomial, Rational,
};

/// Coefficients `c_0..=c_N` of a power series known up to `x^N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// # Panics
    /// If `coeffs` is empty; a series always has an order `N ≥ 0`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series has at least one coefficient"
        );
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// Largest exponent `N` carried.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    /// Drops every coefficient beyond `x^order`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Term-wise derivative; the order drops by one.
    pub fn derivative(&self) -> Result<Self> {
        self.nth_derivative(1)
    }

    /// `n`-fold term-wise derivative, of order `N − n`.
    pub fn nth_derivative(&self, n: usize) -> Result<Self> {
        if n > self.order() {
            return Err(Error::OrderExhausted {
                requested: n,
                order: self.order(),
            });
        }
        let coeffs = (0..=self.order() - n)
            .map(|k| &self.coeffs[k + n] * falling_factorial(&int((k + n) as i64), n as u32))
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// `log f`, for `f` with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let order = self.order();
        let mut out = Self::zero(order);
        if order == 0 {
            return Ok(out);
        }
        // h = f'/f up to x^{N-1}, then integrate.
        let d = self.derivative()?;
        let mut h: Vec<Rational> = Vec::with_capacity(order);
        for k in 0..order {
            let mut v = d.coeffs[k].clone();
            for j in 1..=k {
                v -= &self.coeffs[j] * &h[k - j];
            }
            h.push(v);
        }
        for (k, hk) in h.into_iter().enumerate() {
            out.coeffs[k + 1] = hk / int(k as i64 + 1);
        }
        Ok(out)
    }

    /// `exp f`, for `f` with constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition("exp needs a zero constant term".into()));
        }
        let order = self.order();
        let mut e: Vec<Rational> = Vec::with_capacity(order + 1);
        e.push(Rational::one());
        for n in 1..=order {
            let mut v = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    v += &self.coeffs[k] * int(k as i64) * &e[n - k];
                }
            }
            e.push(v / int(n as i64));
        }
        Ok(TruncatedSeries { coeffs: e })
    }

    /// `f^r = exp(r · log f)`.
    pub fn pow(&self, r: &Rational) -> Result<Self> {
        self.log()?.scale(r).exp()
    }

    /// Coefficient-wise equality on the common prefix `0..=order`.
    pub fn agrees_to(&self, other: &TruncatedSeries, order: usize) -> bool {
        order <= self.order()
            && order <= other.order()
            && self.coeffs[..=order] == other.coeffs[..=order]
    }
}

/// `series_pow(f, r)`.
pub fn series_pow(f: &TruncatedSeries, r: &Rational) -> Result<TruncatedSeries> {
    f.pow(r)
}

impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// # Panics
    /// If the orders differ.
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
        let order = self.order();
        let coeffs = (0..=order)
            .map(|k| {
                (0..=k)
                    .filter(|&i| !self.coeffs[i].is_zero())
                    .map(|i| &self.coeffs[i] * &rhs.coeffs[k - i])
                    .sum()
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

/// Independent constructions of the basic series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseSeries {
    /// `g`, from `b_{n+1} = b_n (4n+2)/(n+1)`.
    CentralBinomial,
    /// `C`, from `c_{n+1} = Σ_{i=0..n} c_i c_{n−i}`.
    Catalan,
    /// `(1 − 4x)^s`, coefficients `(−4)^n C(s, n)`.
    BinomialPower(Rational),
}

pub fn base_series(kind: &BaseSeries, order: usize) -> TruncatedSeries {
    let coeffs = match kind {
        BaseSeries::CentralBinomial => {
            let mut b = vec![Rational::one()];
            for n in 0..order as i64 {
                let next = &b[n as usize] * int(4 * n + 2) / int(n + 1);
                b.push(next);
            }
            b
        }
        BaseSeries::Catalan => {
            let mut c = vec![Rational::one()];
            for n in 0..order {
                let next = (0..=n).map(|i| &c[i] * &c[n - i]).sum();
                c.push(next);
            }
            c
        }
        BaseSeries::BinomialPower(s) => (0..=order)
            .map(|n| pow(&int(-4), n as u32) * binomial(s, n as i64))
            .collect(),
    };
    TruncatedSeries::new(coeffs)
}

/// The three families `g^t`, `g·C^ℓ` and `C^ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    GPower,
    GTimesCatalanPower,
    CatalanPower,
}

/// `[x^n] C^ℓ = ℓ (2n+ℓ−1)_{n−1} / n!` for `n ≥ 1`, and 1 for `n = 0`.
///
/// Polynomial in `ℓ`, so it stays finite at `ℓ = −2n`.
pub fn catalan_power_coefficient(n: usize, ell: &Rational) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let top = int(2 * n as i64 - 1) + ell;
    ell * falling_factorial(&top, (n - 1) as u32) / factorial(n as u32)
}

/// Coefficient predicted for `[x^n]` of the family member with parameter
/// `param`.
pub fn predicted_coefficient(family: Family, param: &Rational, n: usize) -> Rational {
    match family {
        Family::GPower => {
            four_pow(n as u32) * binomial(&(int(n as i64) + param / int(2) - int(1)), n as i64)
        }
        Family::GTimesCatalanPower => binomial(&(int(2 * n as i64) + param), n as i64),
        Family::CatalanPower => catalan_power_coefficient(n, param),
    }
}

/// `g` and `C` at a fixed order with their logarithms cached, so that
/// arbitrary rational powers cost one series exponential each.
#[derive(Debug, Clone)]
pub struct GeneratingFunctions {
    order: usize,
    g: TruncatedSeries,
    c: TruncatedSeries,
    log_g: TruncatedSeries,
    log_c: TruncatedSeries,
}

impl GeneratingFunctions {
    pub fn new(order: usize) -> Self {
        let g = base_series(&BaseSeries::CentralBinomial, order);
        let c = base_series(&BaseSeries::Catalan, order);
        let log_g = g.log().expect("g has constant term 1");
        let log_c = c.log().expect("C has constant term 1");
        GeneratingFunctions {
            order,
            g,
            c,
            log_g,
            log_c,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn g(&self) -> &TruncatedSeries {
        &self.g
    }

    pub fn catalan(&self) -> &TruncatedSeries {
        &self.c
    }

    pub fn g_pow(&self, t: &Rational) -> TruncatedSeries {
        self.log_g
            .scale(t)
            .exp()
            .expect("log has zero constant term")
    }

    pub fn catalan_pow(&self, ell: &Rational) -> TruncatedSeries {
        self.log_c
            .scale(ell)
            .exp()
            .expect("log has zero constant term")
    }

    pub fn family(&self, family: Family, param: &Rational) -> TruncatedSeries {
        match family {
            Family::GPower => self.g_pow(param),
            Family::GTimesCatalanPower => &self.g * &self.catalan_pow(param),
            Family::CatalanPower => self.catalan_pow(param),
        }
    }

    /// Every coefficient up to the working order matches
    /// [`predicted_coefficient`].
    pub fn coefficient_identity(&self, family: Family, param: &Rational) -> bool {
        let s = self.family(family, param);
        (0..=self.order).all(|n| *s.coeff(n) == predicted_coefficient(family, param, n))
    }

    /// The `n`-th derivative formula of the family, compared at order
    /// `N − n`.
    pub fn derivative_identity(&self, family: Family, param: &Rational, n: usize) -> Result<bool> {
        if n == 0 || self.order < n + 8 {
            return Err(Error::Precondition(format!(
                "need n >= 1 and order >= n + 8, got n={n} order={}",
                self.order
            )));
        }
        let cmp = self.order - n;
        let nf = factorial(n as u32);
        let ni = n as i64;
        let ok = match family {
            Family::GPower => {
                let lhs = self.g_pow(param).nth_derivative(n)?.scale(&nf.recip());
                let rhs = self
                    .g_pow(&(param + int(2 * ni)))
                    .truncate(cmp)
                    .scale(&predicted_coefficient(Family::GPower, param, n));
                lhs == rhs
            }
            Family::GTimesCatalanPower => {
                let lhs = self
                    .family(family, param)
                    .nth_derivative(n)?
                    .scale(&nf.recip());
                let mut rhs = TruncatedSeries::zero(self.order);
                for i in 0..=ni {
                    let weight =
                        binomial(&int(2 * ni - i), ni - i) * binomial(&(param + int(i - 1)), i);
                    let term =
                        &self.g_pow(&int(1 + 2 * ni - i)) * &self.catalan_pow(&(param + int(i)));
                    rhs = &rhs + &term.scale(&weight);
                }
                lhs == rhs.truncate(cmp)
            }
            Family::CatalanPower => {
                let lhs = self.catalan_pow(param).nth_derivative(n)?;
                let inner = (&self.g * &self.catalan_pow(&(param + int(1)))).scale(param);
                let rhs = inner.nth_derivative(n - 1)?.truncate(cmp);
                lhs == rhs
            }
        };
        Ok(ok)
    }
}

pub fn derivative_identity_check(
    family: Family,
    param: &Rational,
    n: usize,
    order: usize,
) -> Result<bool> {
    GeneratingFunctions::new(order).derivative_identity(family, param, n)
}

pub fn coefficient_identity_check(family: Family, param: &Rational, order: usize) -> bool {
    GeneratingFunctions::new(order).coefficient_identity(family, param)
}

/// `F(n, i) = C(2n−i, n−i) · C(ℓ+i−1, i)`.
pub fn wz_summand(n: i64, i: i64) -> Polynomial {
    let head = binomial(&int(2 * n - i), n - i);
    let tail = binomial(&Polynomial::linear(int(i - 1), Rational::one()), i);
    tail.scale(&head)
}

/// `G(n, i) = i (i+1) · C(2n+1−i, n+1−i) · C(ℓ+i, i+1)`.
pub fn wz_certificate(n: i64, i: i64) -> Polynomial {
    let head = int(i * (i + 1)) * binomial(&int(2 * n + 1 - i), n + 1 - i);
    let tail = binomial(&Polynomial::linear(int(i), Rational::one()), i + 1);
    tail.scale(&head)
}

fn linear(c: i64) -> Polynomial {
    Polynomial::linear(int(c), Rational::one())
}

/// `(2n+ℓ+1)(2n+ℓ+2)·X(n) − (n+ℓ+1)(n+1)·X(n+1)`.
fn recurrence_operator(n: i64, at_n: &Polynomial, at_next: &Polynomial) -> Polynomial {
    let a = &linear(2 * n + 1) * &linear(2 * n + 2);
    let b = linear(n + 1).scale(&int(n + 1));
    &(&a * at_n) - &(&b * at_next)
}

/// The telescoping relation between `F` and `G` at `(n, i)` together with
/// the boundary values `F(n, n+1) = G(n, 0) = G(n, n+2) = 0`.
pub fn wz_certificate_check(n: usize, i: i64) -> Result<bool> {
    let n = n as i64;
    if i < 0 || i > n + 1 {
        return Err(Error::OutOfRange(format!(
            "need 0 <= i <= n + 1, got n={n} i={i}"
        )));
    }
    let lhs = recurrence_operator(n, &wz_summand(n, i), &wz_summand(n + 1, i));
    let rhs = &wz_certificate(n, i + 1) - &wz_certificate(n, i);
    let boundary = wz_summand(n, n + 1).is_zero()
        && wz_certificate(n, 0).is_zero()
        && wz_certificate(n, n + 2).is_zero();
    Ok(lhs == rhs && boundary)
}

/// `T(n) = Σ_{i=0..n} F(n, i)`.
pub fn wz_sum(n: usize) -> Polynomial {
    let n = n as i64;
    (0..=n).fold(Polynomial::zero(), |acc, i| &acc + &wz_summand(n, i))
}

/// `C(2n + ℓ, n)` as a polynomial in `ℓ`.
pub fn wz_target(n: usize) -> Polynomial {
    binomial(&linear(2 * n as i64), n as i64)
}

/// `Σ_i F(n, i) = C(2n+ℓ, n)`, and both sides obey the first-order
/// recurrence with `T(0) = 1`.
pub fn telescoped_sum_check(n: usize) -> bool {
    let ni = n as i64;
    let (sum, target) = (wz_sum(n), wz_target(n));
    sum == target
        && recurrence_operator(ni, &sum, &wz_sum(n + 1)).is_zero()
        && recurrence_operator(ni, &target, &wz_target(n + 1)).is_zero()
        && wz_sum(0) == Polynomial::one()
        && wz_target(0) == Polynomial::one()
}
