//! Inverse-function machinery: Lagrange inversion through negative powers of
//! `f(z)/z`, the inverse-power relation `b_n^(t) = (t/n) a_{-t}^(-n)`, the
//! ratio `F/F'`, and the transform between `S*[A,B]` and `Σ*[A,B]`.

use num::traits::{One, Zero};
use serde::Serialize;

use crate::series::{rat, Rational, SeriesError, TaylorSeries};

fn require_normalized(f: &TaylorSeries) -> Result<(), SeriesError> {
    if f.is_normalized() {
        Ok(())
    } else {
        Err(SeriesError::NotNormalized)
    }
}

fn require_order(f: &TaylorSeries, needed: usize) -> Result<(), SeriesError> {
    if f.order() < needed {
        Err(SeriesError::InsufficientOrder { needed, available: f.order() })
    } else {
        Ok(())
    }
}

/// Integer power `(f(z)/z)^e` through `z^n`.
fn quotient_power(f: &TaylorSeries, e: i64, n: usize) -> Result<TaylorSeries, SeriesError> {
    require_normalized(f)?;
    require_order(f, n + 1)?;
    f.truncate(n + 1).div_z()?.powi(e)
}

/// `(f(z)/z)^{-t} = 1 + sum_{j=1}^{n} a_j^(-t) z^j`.
pub fn negative_power_coeffs(f: &TaylorSeries, t: u32, n: usize) -> Result<TaylorSeries, SeriesError> {
    quotient_power(f, -i64::from(t), n)
}

/// Reversion by Lagrange inversion: `gamma_n = (1/n) [z^{n-1}] (f(z)/z)^{-n}`.
pub fn revert_lagrange(f: &TaylorSeries, n: usize) -> Result<TaylorSeries, SeriesError> {
    require_normalized(f)?;
    require_order(f, n)?;
    let mut gamma = vec![Rational::zero(); n + 1];
    gamma[1] = Rational::one();
    for m in 2..=n {
        let p = quotient_power(f, -(m as i64), m - 1)?;
        gamma[m] = p.coeff(m - 1) / rat(m as i64);
    }
    Ok(TaylorSeries::new(gamma, n))
}

/// Coefficient of `w^n` in `F(w)^t` where `F = f^{-1}`, from the inverse-power
/// relation `b_n^(t) = (t/n) [z^{-t}] f(z)^{-n}`.
pub fn inverse_power_coeff(f: &TaylorSeries, t: i64, n: i64) -> Result<Rational, SeriesError> {
    if n == 0 {
        return Err(SeriesError::ZeroIndex);
    }
    require_normalized(f)?;
    // [z^{-t}] z^{-n} (f/z)^{-n} = [z^{n-t}] (f/z)^{-n}
    let k = n - t;
    if k < 0 {
        return Ok(Rational::zero());
    }
    let k = k as usize;
    let p = quotient_power(f, -n, k)?;
    Ok(Rational::new(t.into(), n.into()) * p.coeff(k))
}

/// Coefficient of `w^n` in `G(w)^t` by direct expansion, for normalized `G`.
///
/// `G^t = w^t (G/w)^t`, so the coefficient is `[w^{n-t}] (G/w)^t`.
pub fn direct_power_coeff(g: &TaylorSeries, t: i64, n: i64) -> Result<Rational, SeriesError> {
    require_normalized(g)?;
    let k = n - t;
    if k < 0 {
        return Ok(Rational::zero());
    }
    let k = k as usize;
    require_order(g, k + 1)?;
    let p = g.truncate(k + 1).div_z()?.powi(t)?;
    Ok(p.coeff(k).clone())
}

/// `z f'(z) / f(z)`, with constant term 1.
pub fn log_derivative_coeffs(f: &TaylorSeries) -> Result<TaylorSeries, SeriesError> {
    require_normalized(f)?;
    f.derivative()?.divide(&f.div_z()?)
}

/// `F(w) / F'(w) = w + sum delta_n w^n`.
pub fn ratio_f_over_fprime(big_f: &TaylorSeries) -> Result<TaylorSeries, SeriesError> {
    require_normalized(big_f)?;
    let q = big_f.div_z()?.divide(&big_f.derivative()?)?;
    Ok(q.shift_up(1))
}

/// Expansion at infinity `z + b_0 + b_1/z + ... + b_M/z^M`.
///
/// Stored through the substitution `u = 1/z` as the Taylor series
/// `g(1/u) u = 1 + b_0 u + b_1 u^2 + ...` of order `M + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentTail {
    scaled: TaylorSeries,
}

impl LaurentTail {
    /// Wrap `1 + b_0 u + b_1 u^2 + ...`; the constant term must be 1.
    pub fn from_scaled(scaled: TaylorSeries) -> Result<Self, SeriesError> {
        if !scaled.coeff(0).is_one() {
            return Err(SeriesError::DomainError {
                op: "LaurentTail",
                detail: "leading coefficient of z must be 1".into(),
            });
        }
        if scaled.order() == 0 {
            return Err(SeriesError::OrderExhausted("LaurentTail without b_0"));
        }
        Ok(LaurentTail { scaled })
    }

    pub fn from_coeffs(b: &[Rational]) -> Self {
        let mut c = vec![Rational::one()];
        c.extend(b.iter().cloned());
        let order = c.len() - 1;
        LaurentTail { scaled: TaylorSeries::new(c, order.max(1)) }
    }

    /// `M`, the index of the last known `b_M`.
    pub fn order(&self) -> usize {
        self.scaled.order() - 1
    }

    pub fn b(&self, n: usize) -> &Rational {
        self.scaled.coeff(n + 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.scaled.coeffs()[1..]
    }

    pub fn scaled(&self) -> &TaylorSeries {
        &self.scaled
    }

    /// Recover the Taylor `f` with `g(z) = 1/f(1/z)`, i.e. `f(z) = z / (g(1/z) / (1/z))`.
    pub fn to_taylor(&self) -> Result<TaylorSeries, SeriesError> {
        Ok(self.scaled.reciprocal()?.shift_up(1))
    }
}

impl Serialize for LaurentTail {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// `g(z) = 1/f(1/z)`, with `b_n = a_{n+1}^(-1)` where `z/f(z) = 1 + sum a_n^(-1) z^n`.
pub fn to_meromorphic(f: &TaylorSeries) -> Result<LaurentTail, SeriesError> {
    require_normalized(f)?;
    require_order(f, 2)?;
    LaurentTail::from_scaled(f.div_z()?.reciprocal()?)
}

/// Coefficients `gamma~_0 ..= gamma~_n` of `g^{-1}(w) = w + sum gamma~_k w^{-k}`
/// by direct Laurent manipulation of `1/F(1/w)` with `F = f^{-1}`.
pub fn meromorphic_inverse_laurent(f: &TaylorSeries, n: usize) -> Result<LaurentTail, SeriesError> {
    require_normalized(f)?;
    require_order(f, n + 2)?;
    let big_f = f.truncate(n + 2).revert()?;
    // 1/F(u) = (1/u) * 1/(F(u)/u)
    LaurentTail::from_scaled(big_f.div_z()?.reciprocal()?)
}

/// The same coefficients from the inverse-power relation:
/// `gamma~_0 = [z] z f'/f` and `gamma~_k = b_k^(-1)` for `k >= 1`.
pub fn meromorphic_inverse_lemma(f: &TaylorSeries, n: usize) -> Result<LaurentTail, SeriesError> {
    require_normalized(f)?;
    require_order(f, n + 2)?;
    let q = log_derivative_coeffs(&f.truncate(n + 2))?;
    let mut b = vec![q.coeff(1).clone()];
    for k in 1..=n {
        b.push(inverse_power_coeff(f, -1, k as i64)?);
    }
    Ok(LaurentTail::from_coeffs(&b))
}

/// `g^{-1}` coefficients, cross-checked between the two independent routes.
pub fn meromorphic_inverse(f: &TaylorSeries, n: usize) -> Result<LaurentTail, SeriesError> {
    let direct = meromorphic_inverse_laurent(f, n)?;
    let lemma = meromorphic_inverse_lemma(f, n)?;
    for k in 0..=n {
        if direct.b(k) != lemma.b(k) {
            return Err(SeriesError::RouteMismatch { index: k });
        }
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    fn s(c: &[i64], n: usize) -> TaylorSeries {
        TaylorSeries::from_ints(c, n)
    }

    fn z_one_plus_z_sq(n: usize) -> TaylorSeries {
        s(&[0, 1, 2, 1], n)
    }

    fn z_over_one_minus_z(n: usize) -> TaylorSeries {
        s(&[1, -1], n - 1).reciprocal().unwrap().shift_up(1)
    }

    fn z_exp_3z(n: usize) -> TaylorSeries {
        s(&[0, 3], n - 1).exp().unwrap().shift_up(1)
    }

    #[test]
    fn negative_powers() {
        let id = TaylorSeries::var(6);
        assert_eq!(negative_power_coeffs(&id, 4, 5).unwrap(), TaylorSeries::one(5));
        // (1+z)^-6 = 1 - 6z + 21z^2 - ...
        let p = negative_power_coeffs(&z_one_plus_z_sq(8), 3, 3).unwrap();
        assert_eq!(p, s(&[1, -6, 21, -56], 3));
        let p = negative_power_coeffs(&z_over_one_minus_z(6), 3, 5).unwrap();
        assert_eq!(p, s(&[1, -3, 3, -1], 5));
        assert_eq!(negative_power_coeffs(&s(&[0, 2], 4), 1, 2), Err(SeriesError::NotNormalized));
        assert!(matches!(negative_power_coeffs(&z_one_plus_z_sq(3), 1, 5), Err(SeriesError::InsufficientOrder { .. })));
    }

    #[test]
    fn lagrange_examples() {
        assert_eq!(revert_lagrange(&TaylorSeries::var(5), 5).unwrap(), TaylorSeries::var(5));
        let big_f = revert_lagrange(&z_one_plus_z_sq(5), 5).unwrap();
        assert_eq!(big_f.coeff(3), &rat(7));
        let convex = TaylorSeries::from_rationals(&[rat(0), rat(1), rat(-1), ratio(1, 3)], 6);
        assert_eq!(revert_lagrange(&convex, 4).unwrap().coeff(4), &ratio(10, 3));
    }

    #[test]
    fn lagrange_agrees_with_iterative() {
        for f in [z_one_plus_z_sq(12), z_over_one_minus_z(12), z_exp_3z(12)] {
            assert_eq!(revert_lagrange(&f, 12).unwrap(), f.revert().unwrap());
        }
    }

    #[test]
    fn inverse_power_examples() {
        assert_eq!(inverse_power_coeff(&z_over_one_minus_z(8), 2, 3).unwrap(), rat(-2));
        for t in 1..=4 {
            assert_eq!(inverse_power_coeff(&TaylorSeries::var(8), t, t).unwrap(), rat(1));
        }
        assert_eq!(inverse_power_coeff(&z_one_plus_z_sq(8), 1, 2).unwrap(), rat(-2));
        assert_eq!(inverse_power_coeff(&z_one_plus_z_sq(8), 1, 0), Err(SeriesError::ZeroIndex));
        // below the leading power the coefficient vanishes
        assert_eq!(inverse_power_coeff(&z_one_plus_z_sq(8), 3, 2).unwrap(), rat(0));
    }

    #[test]
    fn inverse_power_matches_direct_expansion_for_negative_t() {
        let f = z_one_plus_z_sq(14);
        let big_f = f.revert().unwrap();
        for t in -3..=3i64 {
            for n in (-3..=10i64).filter(|&n| n != 0) {
                if n - t + 1 > 13 {
                    continue;
                }
                assert_eq!(
                    inverse_power_coeff(&f, t, n).unwrap(),
                    direct_power_coeff(&big_f, t, n).unwrap(),
                    "t = {t}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn log_derivative_examples() {
        assert_eq!(log_derivative_coeffs(&TaylorSeries::var(5)).unwrap(), TaylorSeries::one(4));
        let q = log_derivative_coeffs(&z_one_plus_z_sq(5)).unwrap();
        assert_eq!(q, s(&[1, 2, -2, 2, -2], 4));
        let q = log_derivative_coeffs(&z_exp_3z(6)).unwrap();
        assert_eq!(q, s(&[1, 3], 5));
    }

    #[test]
    fn ratio_examples() {
        let id = TaylorSeries::var(5);
        assert_eq!(ratio_f_over_fprime(&id).unwrap(), id);

        let convex = TaylorSeries::from_rationals(&[rat(0), rat(1), rat(-1), ratio(1, 3)], 6);
        let d = ratio_f_over_fprime(&convex.revert().unwrap()).unwrap();
        assert_eq!(d.coeff(2), &rat(-1));
        assert_eq!(d.coeff(3), &ratio(-4, 3));

        let star = s(&[0, 1, -2, 1], 6);
        let d = ratio_f_over_fprime(&star.revert().unwrap()).unwrap();
        assert_eq!(d.coeff(2), &rat(-2));
        assert_eq!(d.coeff(3), &rat(-6));
    }

    #[test]
    fn meromorphic_examples() {
        let g = to_meromorphic(&TaylorSeries::var(6)).unwrap();
        assert!(g.coeffs().iter().all(Zero::is_zero));

        let g = to_meromorphic(&z_one_plus_z_sq(8)).unwrap();
        assert_eq!(g.order(), 6);
        for n in 0..=6 {
            let sign = if n % 2 == 0 { -1 } else { 1 };
            assert_eq!(g.b(n), &rat(sign * (n as i64 + 2)), "b_{n}");
        }

        // z/f = e^{-3z}: b_n = (-3)^{n+1} / (n+1)!
        let g = to_meromorphic(&z_exp_3z(8)).unwrap();
        let mut fact = 1i64;
        for n in 0..=6usize {
            fact *= n as i64 + 1;
            assert_eq!(g.b(n), &ratio((-3i64).pow(n as u32 + 1), fact));
        }
    }

    #[test]
    fn meromorphic_round_trip() {
        let f = z_exp_3z(9);
        let back = to_meromorphic(&f).unwrap().to_taylor().unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn meromorphic_inverse_examples() {
        let zero = meromorphic_inverse(&TaylorSeries::var(6), 3).unwrap();
        assert!(zero.coeffs().iter().all(Zero::is_zero));

        let inv = meromorphic_inverse(&z_one_plus_z_sq(6), 2).unwrap();
        assert_eq!(inv.coeffs(), &[rat(2), rat(-3), rat(10)]);
    }
}
