//! Members and extremal functions of `S*[A,B]`, `K[A,B]`, `I[1,B]` and `Σ*[A,B]`.
//!
//! Members are parameterized by a Schwarz function `w` through
//! `p = (1 + A w) / (1 + B w)`:
//!
//! * starlike: `z f'/f = p`, so `f = z exp(∫ (p(t) - 1)/t dt)`
//! * convex: `1 + z f''/f' = p`, so `f' = exp(∫ (p(t) - 1)/t dt)`
//! * Noshiro: `f' = p` with `A = 1`
//! * meromorphic starlike: `g(z) = 1/f(1/z)` for the starlike member `f`

use std::fmt;
use std::str::FromStr;

use num::traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::inversion::{self, LaurentTail};
use crate::series::{rat, Coeff, Rational, Series, SeriesError, TaylorSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("invalid class parameters: {0}")]
    InvalidSpec(String),
    #[error("Schwarz series must vanish at the origin")]
    NonSchwarz,
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    Starlike,
    Convex,
    Noshiro,
    MeromorphicStarlike,
}

impl ClassKind {
    pub const ALL: [ClassKind; 4] =
        [ClassKind::Starlike, ClassKind::Convex, ClassKind::Noshiro, ClassKind::MeromorphicStarlike];

    pub fn name(self) -> &'static str {
        match self {
            ClassKind::Starlike => "starlike",
            ClassKind::Convex => "convex",
            ClassKind::Noshiro => "noshiro",
            ClassKind::MeromorphicStarlike => "meromorphic",
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassKind {
    type Err = ClassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "starlike" => Ok(ClassKind::Starlike),
            "convex" => Ok(ClassKind::Convex),
            "noshiro" => Ok(ClassKind::Noshiro),
            "meromorphic" | "meromorphic-starlike" => Ok(ClassKind::MeromorphicStarlike),
            other => Err(ClassError::InvalidSpec(format!("unknown class `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// `-1 <= B < A <= 1`
    Janowski,
    /// `-1 <= B <= 1 < A`
    Generalized,
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSpec {
    pub kind: ClassKind,
    pub a: Rational,
    pub b: Rational,
}

impl ClassSpec {
    pub fn new(kind: ClassKind, a: Rational, b: Rational) -> Self {
        ClassSpec { kind, a, b }
    }

    /// The `B = 1`, `A = 2β - 1` specialization.
    pub fn from_beta(kind: ClassKind, beta: &Rational) -> Self {
        ClassSpec { kind, a: rat(2) * beta - rat(1), b: rat(1) }
    }

    pub fn validate(&self) -> Regime {
        let one = Rational::one();
        if self.a <= self.b || self.b < -one.clone() || self.b > one {
            return Regime::Invalid;
        }
        if self.kind == ClassKind::Noshiro && self.a != one {
            return Regime::Invalid;
        }
        if self.a <= one {
            Regime::Janowski
        } else {
            Regime::Generalized
        }
    }

    pub fn require_valid(&self) -> Result<Regime, ClassError> {
        match self.validate() {
            Regime::Invalid => Err(ClassError::InvalidSpec(format!(
                "{} with A = {}, B = {} (need -1 <= B <= 1, A > B{})",
                self.kind,
                self.a,
                self.b,
                if self.kind == ClassKind::Noshiro { ", A = 1" } else { "" }
            ))),
            r => Ok(r),
        }
    }

    /// `β = (A + 1)/2` when `B = 1`.
    pub fn beta(&self) -> Option<Rational> {
        (self.b.is_one()).then(|| (self.a.clone() + rat(1)) / rat(2))
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.kind, self.a, self.b)
    }
}

/// `w(z) = σ z^j ((a + z)/(1 + a z))^e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchwarzSpec {
    pub j: u32,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub a: Rational,
    pub blaschke: bool,
    pub sign: i8,
}

impl SchwarzSpec {
    /// `σ z^j`.
    pub fn monomial(j: u32, sign: i8) -> Self {
        SchwarzSpec { j, a: Rational::zero(), blaschke: false, sign }
    }

    pub fn blaschke(j: u32, a: Rational, sign: i8) -> Self {
        SchwarzSpec { j, a, blaschke: true, sign }
    }

    pub fn identity() -> Self {
        Self::monomial(1, 1)
    }

    pub fn series(&self, n: usize) -> Result<TaylorSeries, ClassError> {
        schwarz_series(self, n)
    }
}

impl fmt::Display for SchwarzSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        if self.blaschke {
            write!(f, "{sign}z^{}((({})+z)/(1+({})z))", self.j, self.a, self.a)
        } else {
            write!(f, "{sign}z^{}", self.j)
        }
    }
}

/// Taylor coefficients of the Schwarz function through `z^n`.
pub fn schwarz_series(s: &SchwarzSpec, n: usize) -> Result<TaylorSeries, ClassError> {
    if s.a.abs() >= Rational::one() {
        return Err(ClassError::ParameterOutOfRange(format!("|a| = {} must be < 1", s.a.abs())));
    }
    if s.j == 0 {
        return Err(ClassError::ParameterOutOfRange("Schwarz valuation j must be >= 1".into()));
    }
    if s.sign != 1 && s.sign != -1 {
        return Err(ClassError::ParameterOutOfRange("sign must be +1 or -1".into()));
    }
    let factor = if s.blaschke {
        let num = TaylorSeries::new(vec![s.a.clone(), rat(1)], n);
        let den = TaylorSeries::new(vec![rat(1), s.a.clone()], n);
        num.divide(&den)?
    } else {
        TaylorSeries::one(n)
    };
    let w = factor.shift_up(s.j as usize).truncate(n);
    Ok(w.scale(&rat(i64::from(s.sign))))
}

/// `p = (1 + A w)/(1 + B w)`.
pub fn p_series<T: Coeff>(a: &T, b: &T, w: &Series<T>) -> Result<Series<T>, SeriesError> {
    let one = Series::one(w.order());
    let num = one.add(&w.scale(a));
    let den = one.add(&w.scale(b));
    num.divide(&den)
}

/// `exp(∫ (p(t) - 1)/t dt)`, known through the order of `p`.
fn exp_integral<T: Coeff>(p: &Series<T>) -> Result<Series<T>, SeriesError> {
    let mut q = p.clone();
    let pm1 = q.sub(&Series::one(p.order()));
    q = pm1.div_z()?.integral();
    q.exp()
}

/// Taylor member of a non-meromorphic class, through `z^n`, over any coefficient field.
pub fn member_generic<T: Coeff>(
    kind: ClassKind,
    a: &T,
    b: &T,
    w: &Series<T>,
    n: usize,
) -> Result<Series<T>, ClassError> {
    if !w.coeff(0).is_zero() {
        return Err(ClassError::NonSchwarz);
    }
    if w.order() < n {
        return Err(SeriesError::InsufficientOrder { needed: n, available: w.order() }.into());
    }
    let w = w.truncate(n);
    let f = match kind {
        ClassKind::Starlike => exp_integral(&p_series(a, b, &w)?)?.shift_up(1),
        ClassKind::Convex => exp_integral(&p_series(a, b, &w)?)?.integral(),
        ClassKind::Noshiro => p_series(&T::one(), b, &w)?.integral(),
        ClassKind::MeromorphicStarlike => {
            return Err(ClassError::InvalidSpec("meromorphic members have no Taylor form".into()))
        }
    };
    Ok(f.truncate(n))
}

#[derive(Debug, Clone, PartialEq)]
pub enum ClassFunction {
    Taylor(TaylorSeries),
    Laurent(LaurentTail),
}

impl ClassFunction {
    pub fn taylor(&self) -> Option<&TaylorSeries> {
        match self {
            ClassFunction::Taylor(f) => Some(f),
            ClassFunction::Laurent(_) => None,
        }
    }

    pub fn laurent(&self) -> Option<&LaurentTail> {
        match self {
            ClassFunction::Laurent(g) => Some(g),
            ClassFunction::Taylor(_) => None,
        }
    }
}

/// Member generated by the Schwarz series `w`, exact through order `n`
/// (`b_0 ..= b_n` for the meromorphic class).
pub fn member(spec: &ClassSpec, w: &TaylorSeries, n: usize) -> Result<ClassFunction, ClassError> {
    spec.require_valid()?;
    match spec.kind {
        ClassKind::MeromorphicStarlike => {
            let f = member_generic(ClassKind::Starlike, &spec.a, &spec.b, w, n + 2)?;
            Ok(ClassFunction::Laurent(inversion::to_meromorphic(&f)?))
        }
        kind => Ok(ClassFunction::Taylor(member_generic(kind, &spec.a, &spec.b, w, n)?)),
    }
}

/// Convenience wrapper: member from a [`SchwarzSpec`].
pub fn member_from_schwarz(spec: &ClassSpec, w: &SchwarzSpec, n: usize) -> Result<ClassFunction, ClassError> {
    let order = if spec.kind == ClassKind::MeromorphicStarlike { n + 2 } else { n };
    member(spec, &schwarz_series(w, order)?, n)
}

/// `(1 + c z)^e` through `z^n`, with `e` rational.
fn binomial_power<T: Coeff>(c: &T, e: &Rational, n: usize) -> Result<Series<T>, SeriesError> {
    Series::new(vec![T::one(), c.clone()], n).pow_rational(e)
}

/// Sharpness function over any coefficient field. `a`, `b` must be the
/// coefficient-field images of the exact `spec.a`, `spec.b`.
pub fn extremal_generic<T: Coeff>(spec: &ClassSpec, n: usize) -> Result<Series<T>, ClassError> {
    spec.require_valid()?;
    let a = T::from_rational(&spec.a);
    let b = T::from_rational(&spec.b);
    if n == 0 {
        return Ok(Series::zero(0));
    }
    let f = match spec.kind {
        // z (1 + Bz)^{(A-B)/B}, or z e^{Az} when B = 0
        ClassKind::Starlike => {
            let tail = if spec.b.is_zero() {
                Series::new(vec![T::zero(), a], n - 1).exp()?
            } else {
                let e = (&spec.a - &spec.b) / &spec.b;
                binomial_power(&b, &e, n - 1)?
            };
            tail.shift_up(1)
        }
        // f' = (1 - Bz)^{(A-B)/B}, or e^{-Az} when B = 0
        ClassKind::Convex => {
            let deriv = if spec.b.is_zero() {
                Series::new(vec![T::zero(), -a], n - 1).exp()?
            } else {
                let e = (&spec.a - &spec.b) / &spec.b;
                binomial_power(&(-b), &e, n - 1)?
            };
            deriv.integral()
        }
        // ∫ (1 - t)/(1 - Bt) dt
        ClassKind::Noshiro => {
            let num = Series::new(vec![T::one(), -T::one()], n - 1);
            let den = Series::new(vec![T::one(), -b], n - 1);
            num.divide(&den)?.integral()
        }
        ClassKind::MeromorphicStarlike => {
            return Err(ClassError::InvalidSpec("use `extremal` for the meromorphic class".into()))
        }
    };
    Ok(f.truncate(n))
}

/// Sharpness function of the class, exact through order `n`.
pub fn extremal(spec: &ClassSpec, n: usize) -> Result<ClassFunction, ClassError> {
    match spec.kind {
        ClassKind::MeromorphicStarlike => {
            spec.require_valid()?;
            let star = ClassSpec { kind: ClassKind::Starlike, ..spec.clone() };
            let f = extremal_generic::<Rational>(&star, n + 2)?;
            Ok(ClassFunction::Laurent(inversion::to_meromorphic(&f)?))
        }
        _ => Ok(ClassFunction::Taylor(extremal_generic(spec, n)?)),
    }
}

/// Taylor extremal; errors for the meromorphic class.
pub fn extremal_taylor(spec: &ClassSpec, n: usize) -> Result<TaylorSeries, ClassError> {
    extremal_generic(spec, n)
}

/// `-f(-z)`: `a_n -> (-1)^{n-1} a_n`.
pub fn rotate_half_turn<T: Coeff>(f: &Series<T>) -> Series<T> {
    let coeffs = f.coeffs().iter().enumerate().map(|(k, c)| if k % 2 == 0 { -c.clone() } else { c.clone() }).collect();
    Series::new(coeffs, f.order())
}

/// The defining expression minus `p = (1 + Aw)/(1 + Bw)`; identically zero for members.
pub fn membership_residual(spec: &ClassSpec, f: &TaylorSeries, w: &TaylorSeries) -> Result<TaylorSeries, ClassError> {
    let a = if spec.kind == ClassKind::Noshiro { rat(1) } else { spec.a.clone() };
    let p = p_series(&a, &spec.b, w)?;
    let lhs = match spec.kind {
        ClassKind::Starlike => inversion::log_derivative_coeffs(f)?,
        // 1 + z f''/f'
        ClassKind::Convex => {
            let d1 = f.derivative()?;
            let d2 = d1.derivative()?;
            TaylorSeries::one(d2.order()).add(&d2.shift_up(1).divide(&d1)?)
        }
        ClassKind::Noshiro => f.derivative()?,
        ClassKind::MeromorphicStarlike => {
            return Err(ClassError::InvalidSpec("check the underlying starlike member".into()))
        }
    };
    Ok(lhs.sub(&p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    fn spec(kind: ClassKind, a: i64, b: i64) -> ClassSpec {
        ClassSpec::new(kind, rat(a), rat(b))
    }

    fn taylor(f: ClassFunction) -> TaylorSeries {
        f.taylor().cloned().expect("taylor member")
    }

    #[test]
    fn validate_regimes() {
        assert_eq!(spec(ClassKind::Starlike, 3, 1).validate(), Regime::Generalized);
        assert_eq!(spec(ClassKind::Starlike, 1, -1).validate(), Regime::Janowski);
        assert_eq!(spec(ClassKind::Starlike, 1, 1).validate(), Regime::Invalid);
        assert_eq!(spec(ClassKind::Starlike, 3, 2).validate(), Regime::Invalid);
        assert_eq!(spec(ClassKind::Starlike, 0, -2).validate(), Regime::Invalid);
        assert_eq!(spec(ClassKind::Noshiro, 1, 0).validate(), Regime::Janowski);
        assert_eq!(spec(ClassKind::Noshiro, 2, 0).validate(), Regime::Invalid);
        assert_eq!(ClassSpec::from_beta(ClassKind::Convex, &rat(2)), spec(ClassKind::Convex, 3, 1));
        assert_eq!(spec(ClassKind::Convex, 3, 1).beta(), Some(rat(2)));
    }

    #[test]
    fn schwarz_examples() {
        assert_eq!(SchwarzSpec::identity().series(4).unwrap(), TaylorSeries::var(4));
        let w = SchwarzSpec::blaschke(1, ratio(1, 2), 1).series(3).unwrap();
        assert_eq!(w.coeffs(), &[rat(0), ratio(1, 2), ratio(3, 4), ratio(-3, 8)]);
        let w = SchwarzSpec::monomial(2, -1).series(4).unwrap();
        assert_eq!(w, TaylorSeries::monomial(rat(-1), 2, 4));
        assert!(matches!(SchwarzSpec::blaschke(1, rat(1), 1).series(3), Err(ClassError::ParameterOutOfRange(_))));
    }

    #[test]
    fn member_examples() {
        let z = TaylorSeries::var(6);
        let f = taylor(member(&spec(ClassKind::Starlike, 3, 1), &z, 6).unwrap());
        assert_eq!(f, TaylorSeries::from_ints(&[0, 1, 2, 1], 6));

        let f = taylor(member(&spec(ClassKind::Convex, 3, 1), &z.neg(), 6).unwrap());
        assert_eq!(f, TaylorSeries::from_rationals(&[rat(0), rat(1), rat(-1), ratio(1, 3)], 6));

        let f = taylor(member(&spec(ClassKind::Noshiro, 1, 0), &z.neg(), 6).unwrap());
        assert_eq!(f, TaylorSeries::from_rationals(&[rat(0), rat(1), ratio(-1, 2)], 6));

        let bad = TaylorSeries::from_ints(&[1, 1], 6);
        assert_eq!(member(&spec(ClassKind::Starlike, 3, 1), &bad, 6), Err(ClassError::NonSchwarz));
        assert!(matches!(member(&spec(ClassKind::Starlike, 1, 1), &z, 6), Err(ClassError::InvalidSpec(_))));
    }

    #[test]
    fn extremal_examples() {
        let f = extremal_taylor(&spec(ClassKind::Starlike, 3, 1), 6).unwrap();
        assert_eq!(f, TaylorSeries::from_ints(&[0, 1, 2, 1], 6));
        let f = extremal_taylor(&spec(ClassKind::Starlike, 3, 0), 3).unwrap();
        assert_eq!(f.coeffs(), &[rat(0), rat(1), rat(3), ratio(9, 2)]);
        let f = extremal_taylor(&spec(ClassKind::Convex, 3, 1), 5).unwrap();
        assert_eq!(f, TaylorSeries::from_rationals(&[rat(0), rat(1), rat(-1), ratio(1, 3)], 5));
        let g = extremal(&spec(ClassKind::MeromorphicStarlike, 3, 1), 3).unwrap();
        assert_eq!(g.laurent().unwrap().coeffs(), &[rat(-2), rat(3), rat(-4), rat(5)]);
    }

    #[test]
    fn extremals_sit_in_the_schwarz_family() {
        let z = TaylorSeries::var(10);
        for (a, b) in [(3, 1), (3, 0), (2, -1), (5, 1)] {
            let s = spec(ClassKind::Starlike, a, b);
            assert_eq!(taylor(member(&s, &z, 10).unwrap()), extremal_taylor(&s, 10).unwrap());
            let c = spec(ClassKind::Convex, a, b);
            assert_eq!(taylor(member(&c, &z.neg(), 10).unwrap()), extremal_taylor(&c, 10).unwrap());
        }
        let m = spec(ClassKind::MeromorphicStarlike, 3, 1);
        assert_eq!(member(&m, &TaylorSeries::var(12), 10).unwrap(), extremal(&m, 10).unwrap());
    }

    #[test]
    fn members_satisfy_their_defining_relation() {
        let ws = [
            SchwarzSpec::identity(),
            SchwarzSpec::monomial(2, -1),
            SchwarzSpec::blaschke(1, ratio(1, 3), 1),
            SchwarzSpec::blaschke(2, ratio(-2, 5), -1),
        ];
        for kind in [ClassKind::Starlike, ClassKind::Convex, ClassKind::Noshiro] {
            let (a, b) = if kind == ClassKind::Noshiro { (rat(1), ratio(-1, 2)) } else { (rat(3), rat(1)) };
            let s = ClassSpec::new(kind, a, b);
            for w in &ws {
                let ws = w.series(8).unwrap();
                let f = taylor(member(&s, &ws, 8).unwrap());
                let r = membership_residual(&s, &f, &ws).unwrap();
                assert!(r.coeffs().iter().all(Zero::is_zero), "{s} {w}: {r}");
            }
        }
    }

    #[test]
    fn half_turn_rotation() {
        let f = TaylorSeries::from_ints(&[0, 1, 2, 1], 5);
        let g = rotate_half_turn(&f);
        assert_eq!(g, TaylorSeries::from_ints(&[0, 1, -2, 1], 5));
        assert_eq!(rotate_half_turn(&g), f);
        assert_eq!(rotate_half_turn(&TaylorSeries::var(4)), TaylorSeries::var(4));
    }
}
