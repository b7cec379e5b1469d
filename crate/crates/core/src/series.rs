//! Truncated power series at the origin.
//!
//! A [`Series`] stores the coefficients of `z^0 ..= z^N` and represents its
//! function modulo `O(z^{N+1})`. Every operation returns the largest order at
//! which its result is guaranteed correct given the orders of its inputs:
//!
//! * add, sub, mul, divide: `min(N_a, N_b)`
//! * compose: `min(N_outer * v, N_inner)` where `v >= 1` is the valuation of the inner series
//! * derivative: `N - 1`; integral: `N + 1`
//! * exp, log, powers: `N`
//!
//! The same code runs over exact rationals ([`TaylorSeries`]) and over complex
//! doubles ([`FloatSeries`], used only by the numeric sharpness search).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact arbitrary-precision rational, always in lowest terms.
pub type Rational = BigRational;

/// Exact truncated series over the rationals.
pub type TaylorSeries = Series<Rational>;

/// Double-precision complex series for the numeric search.
pub type FloatSeries = Series<Complex64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("divisor has zero constant term")]
    ZeroConstantTerm,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("{op}: {detail}")]
    DomainError { op: &'static str, detail: String },
    #[error("series is not normalized (needs f(0) = 0 and f'(0) = 1)")]
    NotNormalized,
    #[error("no coefficient survives: {0}")]
    OrderExhausted(&'static str),
    #[error("index n = 0 is not covered by the inverse-power relation; use the logarithmic derivative")]
    ZeroIndex,
    #[error("need a series of order at least {needed}, got {available}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("independent routes disagree at index {index}")]
    RouteMismatch { index: usize },
}

/// Coefficient field for [`Series`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self;
}

impl Coeff for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

impl Coeff for Complex64 {
    fn from_rational(r: &Rational) -> Self {
        Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`, reduced.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, PartialEq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Series<T> {
    /// Build a series of the given order, zero-padding or truncating `coeffs`.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The identity series `z`.
    pub fn var(order: usize) -> Self {
        Self::monomial(T::one(), 1, order)
    }

    /// `c * z^k`.
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_int(c)).collect(), order)
    }

    pub fn from_rationals(coeffs: &[Rational], order: usize) -> Self {
        Self::new(coeffs.iter().map(T::from_rational).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `z^k`; panics when `k` exceeds the order.
    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    /// Index of the first nonzero coefficient, `None` if all known ones vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn is_normalized(&self) -> bool {
        self.order() >= 1 && self.coeffs[0].is_zero() && self.coeffs[1].is_one()
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Series<U> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// Multiply by `z^k`. The result is known through `N + k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Divide by `z`; requires a zero constant term and order at least 1.
    pub fn div_z(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::DomainError { op: "div_z", detail: "constant term is nonzero".into() });
        }
        if self.order() == 0 {
            return Err(SeriesError::OrderExhausted("div_z of an order-0 series"));
        }
        Ok(Series { coeffs: self.coeffs[1..].to_vec() })
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|k| self.coeffs[k].clone() + other.coeffs[k].clone()).collect();
        Series { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|k| self.coeffs[k].clone() - other.coeffs[k].clone()).collect();
        Series { coeffs }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        self.mul_to(other, n)
    }

    fn mul_to(&self, other: &Self, n: usize) -> Self {
        let mut coeffs = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series { coeffs }
    }

    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        Self::one(self.order()).divide(self)
    }

    /// `self / divisor` by the linear recurrence `q_k = (a_k - sum_{j>=1} b_j q_{k-j}) / b_0`.
    pub fn divide(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let b0 = &divisor.coeffs[0];
        if b0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = self.order().min(divisor.order());
        let mut q: Vec<T> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                let bj = &divisor.coeffs[j];
                if !bj.is_zero() {
                    acc = acc - bj.clone() * q[k - j].clone();
                }
            }
            q.push(acc / b0.clone());
        }
        Ok(Series { coeffs: q })
    }

    /// `outer(inner(z))` by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroInnerConstant);
        }
        let n = match inner.valuation() {
            Some(v) => (self.order() * v).min(inner.order()),
            None => inner.order(),
        };
        // powers beyond n contribute nothing since inner has valuation >= 1
        let top = self.order().min(n);
        let inner = inner.truncate(n);
        let mut acc = Self::constant(self.coeffs[top].clone(), n);
        for k in (0..top).rev() {
            acc = acc.mul_to(&inner, n);
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[k].clone();
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Result<Self, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::OrderExhausted("derivative of an order-0 series"));
        }
        let coeffs = (1..=self.order()).map(|k| T::from_int(k as i64) * self.coeffs[k].clone()).collect();
        Ok(Series { coeffs })
    }

    /// Antiderivative with zero constant of integration.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.clone() / T::from_int(k as i64 + 1));
        }
        Series { coeffs }
    }

    /// Formal exponential via `n e_n = sum_{k=1}^{n} k a_k e_{n-k}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::DomainError { op: "exp", detail: "constant term must be 0".into() });
        }
        let n = self.order();
        let mut e: Vec<T> = Vec::with_capacity(n + 1);
        e.push(T::one());
        for m in 1..=n {
            let mut acc = T::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc = acc + T::from_int(k as i64) * a.clone() * e[m - k].clone();
                }
            }
            e.push(acc / T::from_int(m as i64));
        }
        Ok(Series { coeffs: e })
    }

    /// Formal logarithm via `n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::DomainError { op: "log", detail: "constant term must be 1".into() });
        }
        let n = self.order();
        let mut l: Vec<T> = Vec::with_capacity(n + 1);
        l.push(T::zero());
        for m in 1..=n {
            let mut acc = T::from_int(m as i64) * self.coeffs[m].clone();
            for k in 1..m {
                let a = &self.coeffs[m - k];
                if !a.is_zero() {
                    acc = acc - T::from_int(k as i64) * l[k].clone() * a.clone();
                }
            }
            l.push(acc / T::from_int(m as i64));
        }
        Ok(Series { coeffs: l })
    }

    /// Integer power by repeated squaring; negative exponents go through the reciprocal.
    pub fn powi(&self, e: i64) -> Result<Self, SeriesError> {
        let base = if e < 0 { self.reciprocal()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut result = Self::one(self.order());
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(result)
    }

    /// `a^e` for `a(0) = 1`: the binomial series `sum C(e,k) u^k` composed with `u = a - 1`.
    pub fn pow_rational(&self, e: &Rational) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::DomainError { op: "pow_rational", detail: "constant term must be 1".into() });
        }
        let n = self.order();
        let mut binom = Vec::with_capacity(n + 1);
        let mut c = Rational::one();
        for k in 0..=n {
            binom.push(T::from_rational(&c));
            c = c * (e - rat(k as i64)) / rat(k as i64 + 1);
        }
        let mut u = self.clone();
        u.coeffs[0] = T::zero();
        Series { coeffs: binom }.compose(&u)
    }

    /// Compositional inverse by order-by-order solving of `f(F(w)) = w`.
    ///
    /// Keeps a table `P[k][m] = [w^m] F^k`; the entries of row `m` only need
    /// `gamma_1 ..= gamma_{m-1}` for `k >= 2`, after which
    /// `gamma_m = -sum_{k=2}^{m} a_k P[k][m]`.
    pub fn revert(&self) -> Result<Self, SeriesError> {
        if !self.is_normalized() {
            return Err(SeriesError::NotNormalized);
        }
        let n = self.order();
        let a = &self.coeffs;
        let mut gamma = vec![T::zero(); n + 1];
        gamma[1] = T::one();
        // powers[k][m] for 1 <= k <= m <= n
        let mut powers: Vec<Vec<T>> = vec![vec![T::zero(); n + 1]; n + 1];
        powers[1][1] = T::one();
        for m in 2..=n {
            for k in 2..=m {
                let mut acc = T::zero();
                for i in 1..=(m - k + 1) {
                    let g = &gamma[i];
                    let p = &powers[k - 1][m - i];
                    if !g.is_zero() && !p.is_zero() {
                        acc = acc + g.clone() * p.clone();
                    }
                }
                powers[k][m] = acc;
            }
            let mut s = T::zero();
            for k in 2..=m {
                if !a[k].is_zero() {
                    s = s + a[k].clone() * powers[k][m].clone();
                }
            }
            gamma[m] = -s;
            powers[1][m] = gamma[m].clone();
        }
        Ok(Series { coeffs: gamma })
    }
}

impl TaylorSeries {
    pub fn to_float(&self) -> FloatSeries {
        self.map(Complex64::from_rational)
    }

    /// Coefficients as `p/q` strings.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn abs_coeffs(&self) -> Vec<Rational> {
        self.coeffs.iter().map(|c| c.abs()).collect()
    }
}

impl<T: Coeff> Add for &Series<T> {
    type Output = Series<T>;
    fn add(self, rhs: Self) -> Series<T> {
        Series::add(self, rhs)
    }
}

impl<T: Coeff> Sub for &Series<T> {
    type Output = Series<T>;
    fn sub(self, rhs: Self) -> Series<T> {
        Series::sub(self, rhs)
    }
}

impl<T: Coeff> Mul for &Series<T> {
    type Output = Series<T>;
    fn mul(self, rhs: Self) -> Series<T> {
        Series::mul(self, rhs)
    }
}

impl<T: Coeff> Neg for &Series<T> {
    type Output = Series<T>;
    fn neg(self) -> Series<T> {
        Series::neg(self)
    }
}

impl<T: Coeff> fmt::Debug for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Series").field("order", &self.order()).field("coeffs", &self.coeffs).finish()
    }
}

impl fmt::Display for TaylorSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let body = match k {
                0 => mag.to_string(),
                _ => {
                    let var = if k == 1 { "z".to_string() } else { format!("z^{k}") };
                    if mag.is_one() {
                        var
                    } else if mag.is_integer() {
                        format!("{mag}{var}")
                    } else {
                        format!("({mag}){var}")
                    }
                }
            };
            write!(f, "{body}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], n: usize) -> TaylorSeries {
        TaylorSeries::from_ints(c, n)
    }

    fn q(c: &[(i64, i64)], n: usize) -> TaylorSeries {
        let v: Vec<Rational> = c.iter().map(|&(a, b)| ratio(a, b)).collect();
        TaylorSeries::from_rationals(&v, n)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(s(&[1, 1], 4).add(&s(&[1, -1], 4)), s(&[2], 4));
        assert_eq!(s(&[1, 1], 4).mul(&s(&[1, 1], 4)), s(&[1, 2, 1], 4));
        assert_eq!(s(&[0, 1, 2, 1], 5).mul(&TaylorSeries::one(5)), s(&[0, 1, 2, 1], 5));
    }

    #[test]
    fn binary_ops_take_min_order() {
        let a = s(&[1, 1], 3);
        let b = s(&[1, 2, 3], 6);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(b.divide(&a).unwrap().order(), 3);
    }

    #[test]
    fn division_examples() {
        // (1+3z)/(1+z) = 1 + 2z - 2z^2 + 2z^3 - ...
        let quot = s(&[1, 3], 5).divide(&s(&[1, 1], 5)).unwrap();
        assert_eq!(quot, s(&[1, 2, -2, 2, -2, 2], 5));
        let geo = s(&[1, -1], 6).reciprocal().unwrap();
        assert_eq!(geo, s(&[1, 1, 1, 1, 1, 1, 1], 6));
        assert_eq!(s(&[1], 3).divide(&s(&[0, 1], 3)), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn compose_examples() {
        let outer = s(&[1, 1, 1], 2);
        assert_eq!(outer.compose(&TaylorSeries::var(2)).unwrap(), s(&[1, 1, 1], 2));

        let geo = s(&[1, -1], 5).reciprocal().unwrap();
        let two_z = s(&[0, 2], 5);
        assert_eq!(geo.compose(&two_z).unwrap(), s(&[1, 2, 4, 8, 16, 32], 5));

        assert_eq!(outer.compose(&s(&[1, 1], 2)), Err(SeriesError::NonzeroInnerConstant));
    }

    #[test]
    fn compose_order_rule() {
        // outer known through 3, inner z^2 known through 10: result known through 6
        let outer = s(&[1, 1, 1, 1], 3);
        let inner = TaylorSeries::monomial(rat(1), 2, 10);
        let r = outer.compose(&inner).unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r, s(&[1, 0, 1, 0, 1, 0, 1], 6));
    }

    #[test]
    fn calculus_examples() {
        assert_eq!(s(&[0, 1, 1], 2).derivative().unwrap(), s(&[1, 2], 1));
        assert_eq!(s(&[1, -1], 1).integral(), q(&[(0, 1), (1, 1), (-1, 2)], 2));
        assert_eq!(s(&[1, -2, 1], 2).integral(), q(&[(0, 1), (1, 1), (-1, 1), (1, 3)], 3));
        assert!(matches!(s(&[5], 0).derivative(), Err(SeriesError::OrderExhausted(_))));
    }

    #[test]
    fn exp_log_examples() {
        assert_eq!(TaylorSeries::zero(4).exp().unwrap(), TaylorSeries::one(4));
        let e3 = s(&[0, 3], 4).exp().unwrap();
        assert_eq!(e3, q(&[(1, 1), (3, 1), (9, 2), (9, 2), (27, 8)], 4));
        let l = s(&[1, 1], 5).log().unwrap();
        assert_eq!(l, q(&[(0, 1), (1, 1), (-1, 2), (1, 3), (-1, 4), (1, 5)], 5));
        assert!(matches!(s(&[1, 1], 3).exp(), Err(SeriesError::DomainError { .. })));
        assert!(matches!(s(&[2, 1], 3).log(), Err(SeriesError::DomainError { .. })));
    }

    #[test]
    fn pow_rational_examples() {
        assert_eq!(s(&[1, 1], 4).pow_rational(&rat(2)).unwrap(), s(&[1, 2, 1], 4));
        let sqrt = s(&[1, -1], 4).pow_rational(&ratio(1, 2)).unwrap();
        // binomial(1/2, k) (-1)^k: 1, -1/2, -1/8, -1/16, -5/128
        assert_eq!(sqrt, q(&[(1, 1), (-1, 2), (-1, 8), (-1, 16), (-5, 128)], 4));
        assert_eq!(s(&[1, 1], 4).pow_rational(&rat(0)).unwrap(), TaylorSeries::one(4));
        assert!(s(&[2, 1], 4).pow_rational(&rat(2)).is_err());
    }

    #[test]
    fn pow_rational_integer_matches_powi() {
        let a = s(&[1, 2, -3, 1], 8);
        for e in -4..=4 {
            assert_eq!(a.pow_rational(&rat(e)).unwrap(), a.powi(e).unwrap(), "e = {e}");
        }
    }

    #[test]
    fn revert_examples() {
        assert_eq!(TaylorSeries::var(6).revert().unwrap(), TaylorSeries::var(6));
        let f = s(&[0, 1, 2, 1], 5);
        assert_eq!(f.revert().unwrap(), s(&[0, 1, -2, 7, -30, 143], 5));
        let g = q(&[(0, 1), (1, 1), (-1, 2)], 4);
        assert_eq!(g.revert().unwrap(), q(&[(0, 1), (1, 1), (1, 2), (1, 2), (5, 8)], 4));
        assert_eq!(s(&[0, 2], 3).revert(), Err(SeriesError::NotNormalized));
        assert_eq!(s(&[1, 1], 3).revert(), Err(SeriesError::NotNormalized));
    }

    #[test]
    fn display_is_readable() {
        let f = q(&[(0, 1), (1, 1), (-1, 2)], 3);
        assert_eq!(f.to_string(), "z - (1/2)z^2 + O(z^4)");
        assert_eq!(TaylorSeries::zero(1).to_string(), "0 + O(z^2)");
    }

    #[test]
    fn float_series_tracks_exact() {
        let f = s(&[0, 1, 2, 1], 8);
        let exact = f.revert().unwrap().to_float();
        let numeric = f.to_float().revert().unwrap();
        for (a, b) in exact.coeffs().iter().zip(numeric.coeffs()) {
            assert!((a - b).norm() <= 1e-9 * a.norm().max(1.0));
        }
    }
}
