//! Closed-form coefficient bounds, recursions and identities, evaluated exactly.
//!
//! Empty products are 1. Hypotheses are checked with exact rational
//! comparisons and reported as [`BoundError`] when they fail.

use num::traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::classes::{ClassKind, ClassSpec};
use crate::series::{rat, Rational, TaylorSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("hypothesis violated: {0}")]
    RegimeError(String),
    #[error("condition not met: {0}")]
    ConditionNotMet(String),
}

type Result<T> = std::result::Result<T, BoundError>;

fn regime(msg: impl Into<String>) -> BoundError {
    BoundError::RegimeError(msg.into())
}

/// `-1 <= B <= 1 < A`
fn require_generalized(a: &Rational, b: &Rational) -> Result<()> {
    if b < &rat(-1) || b > &rat(1) || a <= &rat(1) {
        return Err(regime(format!("need -1 <= B <= 1 < A, got A = {a}, B = {b}")));
    }
    Ok(())
}

/// `A > B`, `-1 <= B <= 1`
fn require_ordered(a: &Rational, b: &Rational) -> Result<()> {
    if b < &rat(-1) || b > &rat(1) || a <= b {
        return Err(regime(format!("need A > B and -1 <= B <= 1, got A = {a}, B = {b}")));
    }
    Ok(())
}

fn require_beta(beta: &Rational) -> Result<()> {
    if beta <= &rat(1) {
        return Err(regime(format!("need beta > 1, got beta = {beta}")));
    }
    Ok(())
}

fn require_index(n: i64, min: i64) -> Result<()> {
    if n < min {
        return Err(regime(format!("need n >= {min}, got n = {n}")));
    }
    Ok(())
}

/// `prod_{m=0}^{count-1} (base + m * step) / (m + 1)`
fn rising_product(base: &Rational, step: &Rational, count: i64) -> Rational {
    (0..count).fold(Rational::one(), |acc, m| acc * (base + step * rat(m)) / rat(m + 1))
}

/// Inverse coefficients of `S*[A,B]`:
/// `|gamma_n| <= (1/n) prod_{m=0}^{n-2} (n(A-B) + mB)/(m+1)`.
pub fn bound_starlike_inverse(a: &Rational, b: &Rational, n: i64) -> Result<Rational> {
    require_generalized(a, b)?;
    require_index(n, 2)?;
    let base = rat(n) * (a - b);
    Ok(rising_product(&base, b, n - 1) / rat(n))
}

/// Smallest `t` for which the power bound applies: `(s-1)(1-B)/(A-B)`.
pub fn power_threshold(a: &Rational, b: &Rational, s: i64) -> Rational {
    rat(s - 1) * (rat(1) - b) / (a - b)
}

/// `|a_s^(-t)| <= prod_{m=0}^{s-1} ((A-B)t + mB)/(m+1)` for `t >= (s-1)(1-B)/(A-B)`.
pub fn bound_power_schur(a: &Rational, b: &Rational, t: i64, s: i64) -> Result<Rational> {
    require_ordered(a, b)?;
    require_index(s, 1)?;
    let threshold = power_threshold(a, b, s);
    if rat(t) < threshold {
        return Err(BoundError::ConditionNotMet(format!("t = {t} < (s-1)(1-B)/(A-B) = {threshold}")));
    }
    let base = (a - b) * rat(t);
    Ok(rising_product(&base, b, s))
}

/// `delta_n` of `F/F'` for `S*[2β-1, 1]`.
pub fn bound_delta_starlike(beta: &Rational, n: i64) -> Result<Rational> {
    require_beta(beta)?;
    require_index(n, 2)?;
    let lead = rat(2) * (beta - rat(1));
    let scale = rat(2 * (n - 1)) * (beta - rat(1));
    Ok((2..n).fold(lead, |acc, j| acc * (&scale + rat(j)) / rat(j)))
}

/// `|b_n|` for `Σ*[A,B]`; the flag records whether `n(1-B) <= A-B` holds.
pub fn bound_merom_coeff(a: &Rational, b: &Rational, n: i64) -> Result<(Rational, bool)> {
    require_generalized(a, b)?;
    require_index(n, 0)?;
    let proven = rat(n) * (rat(1) - b) <= a - b;
    Ok((rising_product(&(a - b), b, n + 1), proven))
}

/// `|gamma~_0| <= A-B`, `|gamma~_n| <= (1/n) prod_{m=0}^{n} ((A-B)n + mB)/(m+1)`.
pub fn bound_merom_inverse(a: &Rational, b: &Rational, n: i64) -> Result<Rational> {
    require_generalized(a, b)?;
    require_index(n, 0)?;
    if n == 0 {
        return Ok(a - b);
    }
    let base = (a - b) * rat(n);
    Ok(rising_product(&base, b, n + 1) / rat(n))
}

/// Inverse coefficients of `∫ (1-t)/(1-Bt) dt` by the recursion
/// `2A_2 = 1-B`, `3A_3 = (3-B)A_2`,
/// `(n+1)A_{n+1} = (1-B+n)A_n + sum_{k=1}^{n-2} (k+1) A_{k+1} A_{n-k}`,
/// returned as the series `w + A_2 w^2 + ... + A_n w^n`.
pub fn noshiro_inverse_coeffs(b: &Rational, n: usize) -> Result<TaylorSeries> {
    if b < &rat(-1) || b >= &rat(1) {
        return Err(regime(format!("need -1 <= B < 1, got B = {b}")));
    }
    let mut c = vec![Rational::zero(); n.max(1) + 1];
    c[1] = Rational::one();
    let one_minus_b = rat(1) - b;
    for m in 1..n {
        // computes A_{m+1}
        let mut rhs = if m == 1 { one_minus_b.clone() } else { (&one_minus_b + rat(m as i64)) * &c[m] };
        for k in 1..m.saturating_sub(1) {
            rhs += rat(k as i64 + 1) * &c[k + 1] * &c[m - k];
        }
        c[m + 1] = rhs / rat(m as i64 + 1);
    }
    Ok(TaylorSeries::new(c, n.max(1)))
}

/// Inverse coefficients of `K[2β-1, 1]`: `(1/n) prod_{m=0}^{n-2} (2(β-1) + m(2β-1))/(m+1)`.
pub fn bound_convex_beta(beta: &Rational, n: i64) -> Result<Rational> {
    require_beta(beta)?;
    require_index(n, 2)?;
    let base = rat(2) * (beta - rat(1));
    let step = rat(2) * beta - rat(1);
    Ok(rising_product(&base, &step, n - 1) / rat(n))
}

/// `delta_n` of `F/F'` for `K[2β-1, 1]`.
pub fn bound_delta_convex(beta: &Rational, n: i64) -> Result<Rational> {
    require_beta(beta)?;
    require_index(n, 2)?;
    if n == 2 {
        return Ok(beta - rat(1));
    }
    let lead = rat(2) * (beta - rat(1)) / rat(n * (n - 1));
    let base = rat(2) * beta;
    let step = rat(2) * beta - rat(1);
    Ok(lead * rising_product(&base, &step, n - 2))
}

/// Inverse coefficients of `K[A,B]`: `(1/n) prod_{m=0}^{n-2} ((A-B) + mA)/(m+1)`.
/// Proven for `n = 2..=6`; larger `n` is evaluated but flagged unproven.
pub fn bound_convex_general(a: &Rational, b: &Rational, n: i64) -> Result<(Rational, bool)> {
    require_generalized(a, b)?;
    require_index(n, 2)?;
    Ok((rising_product(&(a - b), a, n - 1) / rat(n), n <= 6))
}

/// Both sides of
/// `m^2 P_m = (A-B)^2 t^2 + sum_{k=1}^{m-1} (((A-B)t + Bk)^2 - k^2) P_k`
/// with `P_k = prod_{j=0}^{k-1} ((A-B)t + Bj)^2/(j+1)^2`.
pub fn lemma4_sides(a: &Rational, b: &Rational, t: i64, m: i64) -> Result<(Rational, Rational)> {
    require_ordered(a, b)?;
    require_index(m, 1)?;
    let base = (a - b) * rat(t);
    let mut p = Rational::one();
    let mut rhs = &base * &base;
    for k in 1..m {
        let f = (&base + b * rat(k - 1)) / rat(k);
        p *= &f * &f;
        let g = &base + b * rat(k);
        rhs += (&g * &g - rat(k * k)) * &p;
    }
    let f = (&base + b * rat(m - 1)) / rat(m);
    let lhs = rat(m * m) * &p * &f * &f;
    Ok((lhs, rhs))
}

/// The four auxiliary polynomials in the general convex inverse coefficients.
pub fn pqrs(a: &Rational, b: &Rational) -> [Rational; 4] {
    let a2 = a * a;
    let b2 = b * b;
    let ab = a * b;
    let p = rat(4) * (rat(23) * &a2 - rat(17) * &ab - rat(29) * a + rat(3) * &b2 + rat(11) * b + rat(9));
    let q = rat(8) * (rat(101) * &a2 - rat(81) * &ab - rat(121) * a + rat(16) * &b2 + rat(49) * b + rat(36));
    let r = rat(4) * (rat(127) * &a2 - rat(58) * &ab - rat(196) * a + rat(3) * &b2 + rat(52) * b + rat(72));
    let s = rat(4)
        * (rat(163) * &a2 * a - rat(160) * &a2 * b - rat(329) * &a2
            + rat(50) * a * &b2
            + rat(220) * &ab
            + rat(219) * a
            - rat(5) * &b2 * b
            - rat(35) * &b2
            - rat(75) * b
            - rat(48));
    [p, q, r, s]
}

/// Closed forms for `K[A,B]` in terms of the Carathéodory coefficients `c_1..c_5`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvexClosedForms {
    /// `a_2 ..= a_6`
    #[serde(serialize_with = "ser_vec")]
    pub a: Vec<Rational>,
    /// `gamma_2 ..= gamma_6`
    #[serde(serialize_with = "ser_vec")]
    pub gamma: Vec<Rational>,
    /// `p, q, r, s` at `(A, B)`
    #[serde(serialize_with = "ser_vec")]
    pub pqrs: Vec<Rational>,
}

fn ser_vec<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<String> = v.iter().map(|r| r.to_string()).collect();
    v.serialize(s)
}

/// `gamma_2..gamma_6` of the inverse of `z + a_2 z^2 + ... + a_6 z^6`.
pub fn inverse_from_taylor(a: &[Rational; 5]) -> [Rational; 5] {
    let [a2, a3, a4, a5, a6] = a;
    let g2 = -a2.clone();
    let g3 = rat(2) * a2 * a2 - a3;
    let g4 = rat(-5) * a2 * a2 * a2 + rat(5) * a2 * a3 - a4;
    let g5 = rat(14) * a2 * a2 * a2 * a2 - rat(21) * a2 * a2 * a3 + rat(6) * a2 * a4 + rat(3) * a3 * a3 - a5;
    let g6 = rat(7)
        * (rat(-6) * a2 * a2 * a2 * a2 * a2 + rat(12) * a2 * a2 * a2 * a3 - rat(4) * a2 * a2 * a4
            + a2 * (a5 - rat(4) * a3 * a3)
            + a3 * a4)
        - a6;
    [g2, g3, g4, g5, g6]
}

/// Taylor and inverse coefficients of `K[A,B]` as polynomials in `c_1..c_5`.
pub fn thm5_closed_forms(a: &Rational, b: &Rational, c: &[Rational; 5]) -> Result<ConvexClosedForms> {
    require_generalized(a, b)?;
    let (aa, bb) = (a, b);
    let [c1, c2, c3, c4, c5] = c;
    let d = aa - bb;
    let k = |x: i64| rat(x);

    let t21 = aa - k(2) * bb + k(1);
    let t32 = aa - k(3) * bb + k(2);
    let t43 = aa - k(4) * bb + k(3);
    let t54 = aa - k(5) * bb + k(4);
    let a2 = -(&d * c1) / k(4);
    let a3 = &d * (&t21 * c1 * c1 - k(2) * c2) / k(24);
    let a4 =
        -(&d * (&t21 * &t32 * c1 * c1 * c1 - k(2) * (k(3) * aa - k(7) * bb + k(4)) * c1 * c2 + k(8) * c3)) / k(192);
    let a5 = &d
        * (k(-4)
            * (k(3) * aa * aa - k(17) * aa * bb + k(11) * aa + k(23) * bb * bb - k(29) * bb + k(9))
            * c1
            * c1
            * c2
            + &t21 * &t32 * &t43 * c1 * c1 * c1 * c1
            + k(16) * (k(2) * aa - k(5) * bb + k(3)) * c1 * c3
            + k(12) * &t32 * c2 * c2
            - k(48) * c4)
        / k(1920);
    let cubic = k(5) * aa * aa * aa - k(50) * aa * aa * bb + k(35) * aa * aa + k(160) * aa * bb * bb - k(220) * aa * bb
        + k(75) * aa
        - k(163) * bb * bb * bb
        + k(329) * bb * bb
        - k(219) * bb
        + k(48);
    let a6 = &d
        * (-(&t54 * &t43 * &t32 * &t21) * c1 * c1 * c1 * c1 * c1 + k(4) * cubic * c1 * c1 * c1 * c2
            - k(16)
                * (k(5) * aa * aa - k(30) * aa * bb + k(20) * aa + k(43) * bb * bb - k(56) * bb + k(18))
                * c1
                * c1
                * c3
            + k(32) * (k(5) * aa - k(17) * bb + k(12)) * c2 * c3
            - k(4)
                * (k(15) * aa * aa - k(100) * aa * bb + k(70) * aa + k(157) * bb * bb - k(214) * bb + k(72))
                * c1
                * c2
                * c2
            + k(48) * (k(5) * aa - k(13) * bb + k(8)) * c1 * c4
            - k(384) * c5)
        / k(23040);

    let [p, q, r, s] = pqrs(aa, bb);
    let u2 = k(2) * aa - bb - k(1);
    let u3 = k(3) * aa - bb - k(2);
    let u4 = k(4) * aa - bb - k(3);
    let u5 = k(5) * aa - bb - k(4);
    let g2 = &d * c1 / k(4);
    let g3 = &d * (&u2 * c1 * c1 + k(2) * c2) / k(24);
    let g4 = &d * (&u2 * &u3 * c1 * c1 * c1 + k(2) * (k(7) * aa - k(3) * bb - k(4)) * c1 * c2 + k(8) * c3) / k(192);
    let g5 = &d
        * (&p * c1 * c1 * c2
            + &u2 * &u3 * &u4 * c1 * c1 * c1 * c1
            + k(8) * (k(11) * aa - k(5) * bb - k(6)) * c1 * c3
            + k(4) * (k(7) * aa - bb - k(6)) * c2 * c2
            + k(48) * c4)
        / k(1920);
    let g6 = &d
        * (&q * c1 * c1 * c3
            + &r * c1 * c2 * c2
            + k(384) * &u2 * c1 * c4
            + &s * c1 * c1 * c1 * c2
            + &u2 * &u3 * &u4 * &u5 * c1 * c1 * c1 * c1 * c1
            + k(16) * (k(25) * aa - bb - k(24)) * c2 * c3
            + k(384) * c5)
        / k(23040);

    Ok(ConvexClosedForms { a: vec![a2, a3, a4, a5, a6], gamma: vec![g2, g3, g4, g5, g6], pqrs: vec![p, q, r, s] })
}

/// Solve `(n-1) n a_n = sum_{k=1}^{n-1} (n-k) b_k a_{n-k}` with `a_1 = 1`,
/// where `b` holds the coefficients of `p - 1` for `p = z g'/g`, `g = z f'`.
pub fn convex_coeff_recursion(b: &TaylorSeries, n: usize) -> TaylorSeries {
    let n = n.min(b.order() + 1);
    let mut a = vec![Rational::zero(); n.max(1) + 1];
    a[1] = Rational::one();
    for m in 2..=n {
        let mut acc = Rational::zero();
        for k in 1..m {
            if !b.coeff(k).is_zero() {
                acc += rat((m - k) as i64) * b.coeff(k) * &a[m - k];
            }
        }
        a[m] = acc / rat(((m - 1) * m) as i64);
    }
    TaylorSeries::new(a, n.max(1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    StarlikeInverse,
    ConvexInverse,
    ConvexGeneralInverse,
    NoshiroInverse,
    MeromCoeff,
    MeromInverse,
    DeltaStarlike,
    DeltaConvex,
}

impl BoundKind {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "starlike" => BoundKind::StarlikeInverse,
            "convex" => BoundKind::ConvexInverse,
            "convex-general" => BoundKind::ConvexGeneralInverse,
            "noshiro" => BoundKind::NoshiroInverse,
            "meromorphic" => BoundKind::MeromCoeff,
            "meromorphic-inverse" => BoundKind::MeromInverse,
            "delta-starlike" => BoundKind::DeltaStarlike,
            "delta-convex" => BoundKind::DeltaConvex,
            _ => return None,
        })
    }

    pub fn class_kind(self) -> ClassKind {
        match self {
            BoundKind::StarlikeInverse | BoundKind::DeltaStarlike => ClassKind::Starlike,
            BoundKind::ConvexInverse | BoundKind::ConvexGeneralInverse | BoundKind::DeltaConvex => ClassKind::Convex,
            BoundKind::NoshiroInverse => ClassKind::Noshiro,
            BoundKind::MeromCoeff | BoundKind::MeromInverse => ClassKind::MeromorphicStarlike,
        }
    }

    pub fn min_index(self) -> i64 {
        match self {
            BoundKind::MeromCoeff | BoundKind::MeromInverse => 0,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRow {
    pub n: i64,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub bound: Rational,
    pub proven: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundTable {
    pub class: ClassKind,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub a: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub b: Rational,
    pub kind: BoundKind,
    pub rows: Vec<BoundRow>,
}

/// Single bound value with its `proven` flag.
pub fn bound_value(kind: BoundKind, a: &Rational, b: &Rational, n: i64) -> Result<(Rational, bool)> {
    let beta = || -> Result<Rational> {
        if !b.is_one() {
            return Err(regime(format!("this bound needs B = 1 (A = 2β-1), got B = {b}")));
        }
        Ok((a + rat(1)) / rat(2))
    };
    match kind {
        BoundKind::StarlikeInverse => Ok((bound_starlike_inverse(a, b, n)?, true)),
        BoundKind::ConvexInverse => Ok((bound_convex_beta(&beta()?, n)?, true)),
        BoundKind::ConvexGeneralInverse => bound_convex_general(a, b, n),
        BoundKind::NoshiroInverse => {
            if !a.is_one() {
                return Err(regime(format!("Noshiro class needs A = 1, got A = {a}")));
            }
            require_index(n, 2)?;
            let g = noshiro_inverse_coeffs(b, n as usize)?;
            Ok((g.coeff(n as usize).clone(), true))
        }
        BoundKind::MeromCoeff => bound_merom_coeff(a, b, n),
        BoundKind::MeromInverse => Ok((bound_merom_inverse(a, b, n)?, true)),
        BoundKind::DeltaStarlike => Ok((bound_delta_starlike(&beta()?, n)?, true)),
        BoundKind::DeltaConvex => Ok((bound_delta_convex(&beta()?, n)?, true)),
    }
}

pub fn bound_table(
    kind: BoundKind,
    a: &Rational,
    b: &Rational,
    range: std::ops::RangeInclusive<i64>,
) -> Result<BoundTable> {
    let rows = range
        .map(|n| bound_value(kind, a, b, n).map(|(bound, proven)| BoundRow { n, bound, proven }))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundTable { class: kind.class_kind(), a: a.clone(), b: b.clone(), kind, rows })
}

/// Class spec a bound kind refers to.
pub fn spec_for(kind: BoundKind, a: &Rational, b: &Rational) -> ClassSpec {
    ClassSpec::new(kind.class_kind(), a.clone(), b.clone())
}

/// True iff every factor of the starlike inverse product is positive.
pub fn starlike_factors_positive(a: &Rational, b: &Rational, n: i64) -> bool {
    (0..=(n - 2)).all(|m| (rat(n) * (a - b) + rat(m) * b).is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    #[test]
    fn starlike_inverse_examples() {
        let (a, b) = (rat(3), rat(1));
        assert_eq!(bound_starlike_inverse(&a, &b, 2).unwrap(), rat(2));
        assert_eq!(bound_starlike_inverse(&a, &b, 3).unwrap(), rat(7));
        assert_eq!(bound_starlike_inverse(&a, &b, 4).unwrap(), rat(30));
        assert_eq!(bound_starlike_inverse(&a, &b, 5).unwrap(), rat(143));
        assert!(matches!(bound_starlike_inverse(&rat(1), &rat(1), 3), Err(BoundError::RegimeError(_))));
        assert!(matches!(bound_starlike_inverse(&a, &b, 1), Err(BoundError::RegimeError(_))));
    }

    #[test]
    fn power_schur_examples() {
        assert_eq!(bound_power_schur(&rat(3), &rat(1), 1, 1).unwrap(), rat(2));
        assert_eq!(bound_power_schur(&rat(3), &rat(1), 3, 3).unwrap(), rat(56));
        assert_eq!(bound_power_schur(&rat(3), &rat(0), 1, 4).unwrap(), ratio(27, 8));
        assert!(matches!(bound_power_schur(&rat(3), &rat(0), 0, 4), Err(BoundError::ConditionNotMet(_))));
    }

    #[test]
    fn delta_starlike_examples() {
        assert_eq!(bound_delta_starlike(&rat(2), 2).unwrap(), rat(2));
        assert_eq!(bound_delta_starlike(&rat(2), 3).unwrap(), rat(6));
        let near_one = rat(1) + ratio(1, 1_000_000);
        assert!(bound_delta_starlike(&near_one, 4).unwrap() < ratio(1, 100_000));
        assert!(bound_delta_starlike(&rat(1), 2).is_err());
    }

    #[test]
    fn merom_examples() {
        assert_eq!(bound_merom_coeff(&rat(3), &rat(1), 0).unwrap(), (rat(2), true));
        assert_eq!(bound_merom_coeff(&rat(3), &rat(1), 4).unwrap(), (rat(6), true));
        assert_eq!(bound_merom_coeff(&rat(3), &rat(0), 4).unwrap(), (ratio(81, 40), false));
        assert_eq!(bound_merom_inverse(&rat(3), &rat(1), 0).unwrap(), rat(2));
        assert_eq!(bound_merom_inverse(&rat(3), &rat(1), 1).unwrap(), rat(3));
        assert_eq!(bound_merom_inverse(&rat(3), &rat(1), 2).unwrap(), rat(10));
    }

    #[test]
    fn noshiro_examples() {
        let g = noshiro_inverse_coeffs(&rat(0), 4).unwrap();
        assert_eq!(g.coeffs(), &[rat(0), rat(1), ratio(1, 2), ratio(1, 2), ratio(5, 8)]);
        assert_eq!(noshiro_inverse_coeffs(&rat(-1), 2).unwrap().coeff(2), &rat(1));
        let near = noshiro_inverse_coeffs(&(rat(1) - ratio(1, 1000)), 6).unwrap();
        assert!(near.coeffs()[2..].iter().all(|c| c < &ratio(1, 100)));
        assert!(noshiro_inverse_coeffs(&rat(1), 4).is_err());
    }

    #[test]
    fn convex_examples() {
        assert_eq!(bound_convex_beta(&rat(2), 2).unwrap(), rat(1));
        assert_eq!(bound_convex_beta(&rat(2), 3).unwrap(), ratio(5, 3));
        assert_eq!(bound_convex_beta(&rat(2), 4).unwrap(), ratio(10, 3));
        assert_eq!(bound_delta_convex(&rat(2), 2).unwrap(), rat(1));
        assert_eq!(bound_delta_convex(&rat(2), 3).unwrap(), ratio(4, 3));
        assert_eq!(bound_delta_convex(&rat(2), 4).unwrap(), ratio(7, 3));
        assert_eq!(bound_convex_general(&rat(3), &rat(1), 2).unwrap(), (rat(1), true));
        assert_eq!(bound_convex_general(&rat(3), &rat(1), 3).unwrap(), (ratio(5, 3), true));
        assert_eq!(bound_convex_general(&rat(3), &rat(0), 2).unwrap(), (ratio(3, 2), true));
        assert!(!bound_convex_general(&rat(3), &rat(1), 7).unwrap().1);
    }

    #[test]
    fn lemma4_examples() {
        assert_eq!(lemma4_sides(&rat(3), &rat(1), 1, 2).unwrap(), (rat(36), rat(36)));
        assert_eq!(lemma4_sides(&rat(3), &rat(1), 0, 1).unwrap(), (rat(0), rat(0)));
        assert_eq!(lemma4_sides(&rat(3), &rat(1), 1, 1).unwrap(), (rat(4), rat(4)));
    }

    #[test]
    fn pqrs_anchor_values() {
        for b in [rat(-1), ratio(-1, 3), rat(0), ratio(1, 2), rat(1)] {
            let one_minus = rat(1) - &b;
            let sq = &one_minus * &one_minus;
            let [p, q, r, s] = pqrs(&rat(1), &b);
            assert_eq!(p, rat(12) * &sq);
            assert_eq!(q, rat(128) * &sq);
            assert_eq!(r, rat(12) * &sq);
            assert_eq!(s, rat(20) * &sq * &one_minus);
        }
    }

    #[test]
    fn closed_forms_examples() {
        let two = [rat(2), rat(2), rat(2), rat(2), rat(2)];
        let f = thm5_closed_forms(&rat(3), &rat(1), &two).unwrap();
        assert_eq!(f.a[0], rat(-1));
        assert_eq!(f.a[1], ratio(1, 3));
        assert_eq!(f.gamma[0], rat(1));
        assert_eq!(f.gamma[1], ratio(5, 3));

        let zero: [Rational; 5] = Default::default();
        let f = thm5_closed_forms(&rat(4), &ratio(-1, 2), &zero).unwrap();
        assert!(f.a.iter().chain(&f.gamma).all(Zero::is_zero));
    }

    #[test]
    fn gamma_in_c_matches_gamma_in_a() {
        let c = [rat(1), ratio(-1, 2), rat(2), ratio(3, 4), rat(-1)];
        let f = thm5_closed_forms(&ratio(7, 2), &ratio(1, 3), &c).unwrap();
        let a: [Rational; 5] = f.a.clone().try_into().unwrap();
        assert_eq!(inverse_from_taylor(&a).to_vec(), f.gamma);
    }

    #[test]
    fn convex_recursion_examples() {
        assert_eq!(convex_coeff_recursion(&TaylorSeries::zero(5), 6), TaylorSeries::var(6));
        let minus_two = TaylorSeries::new(vec![rat(0), rat(-2), rat(-2), rat(-2), rat(-2)], 4);
        let f = convex_coeff_recursion(&minus_two, 3);
        assert_eq!(f.coeffs(), &[rat(0), rat(1), rat(-1), ratio(1, 3)]);
        // (1+3z)/(1+z) - 1 = 2z - 2z^2 + 2z^3 - ...
        let alt = TaylorSeries::new(vec![rat(0), rat(2), rat(-2), rat(2), rat(-2)], 4);
        let f = convex_coeff_recursion(&alt, 3);
        assert_eq!(f.coeffs(), &[rat(0), rat(1), rat(1), ratio(1, 3)]);
    }

    #[test]
    fn table_rows() {
        let t = bound_table(BoundKind::StarlikeInverse, &rat(3), &rat(1), 2..=5).unwrap();
        let v: Vec<_> = t.rows.iter().map(|r| r.bound.clone()).collect();
        assert_eq!(v, [rat(2), rat(7), rat(30), rat(143)]);
        let t = bound_table(BoundKind::ConvexGeneralInverse, &rat(3), &rat(1), 7..=7).unwrap();
        assert!(!t.rows[0].proven);
        assert!(bound_table(BoundKind::StarlikeInverse, &rat(1), &rat(1), 2..=3).is_err());
    }
}
