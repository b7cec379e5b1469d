//! Floating-point sharpness search over a grid of Schwarz functions
//! `w(z) = σ e^{iθ} z^j ((a + z)/(1 + a z))^e`.

use num::complex::Complex64;
use num::traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds;
use crate::classes::{self, ClassKind, ClassSpec, Regime};
use crate::series::{FloatSeries, Rational};
use crate::verify::checks::CheckError;

/// Relative tolerance of the numeric search.
pub const SEARCH_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchGrid {
    pub j: Vec<u32>,
    pub a: Vec<f64>,
    /// Blaschke factor exponents, from `{0, 1}`.
    pub e: Vec<u8>,
    pub sigma: Vec<i8>,
    /// Rotation angles in radians.
    pub theta: Vec<f64>,
}

impl Default for SearchGrid {
    fn default() -> Self {
        SearchGrid {
            j: vec![1, 2, 3],
            a: (-9..=9).map(|k| f64::from(k) / 10.0).collect(),
            e: vec![0, 1],
            sigma: vec![1, -1],
            theta: (0..16).map(|k| f64::from(k) * std::f64::consts::PI / 8.0).collect(),
        }
    }
}

impl SearchGrid {
    /// All grid points; `a` is dropped when `e = 0`, so no point repeats.
    pub fn points(&self) -> Vec<SearchPoint> {
        let mut out = Vec::new();
        for &j in &self.j {
            for &e in &self.e {
                let a_values: &[f64] = if e == 0 { &[0.0] } else { &self.a };
                for &a in a_values {
                    for &sigma in &self.sigma {
                        for &theta in &self.theta {
                            out.push(SearchPoint { j, a, e, sigma, theta });
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchPoint {
    pub j: u32,
    pub a: f64,
    pub e: u8,
    pub sigma: i8,
    pub theta: f64,
}

impl SearchPoint {
    fn w(&self, n: usize) -> FloatSeries {
        let one = Complex64::new(1.0, 0.0);
        let factor = if self.e == 1 {
            let a = Complex64::new(self.a, 0.0);
            let num = FloatSeries::new(vec![a, one], n);
            let den = FloatSeries::new(vec![one, a], n);
            num.divide(&den).expect("1 + a z is invertible")
        } else {
            FloatSeries::one(n)
        };
        let rot = Complex64::from_polar(f64::from(self.sigma), self.theta);
        factor.shift_up(self.j as usize).truncate(n).scale(&rot)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    pub class: ClassKind,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub a: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub b: Rational,
    pub n: usize,
    pub grid: SearchGrid,
    pub points: usize,
    pub best: SearchPoint,
    pub best_value: f64,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub bound_exact: Rational,
    pub bound: f64,
    /// `bound - best_value`
    pub gap: f64,
    /// `|γ_n|` at the extremal grid point, when the grid contains it.
    pub extremal_value: Option<f64>,
}

impl SearchResult {
    /// `best <= bound` within the relative tolerance.
    pub fn is_sound(&self) -> bool {
        self.gap >= -SEARCH_TOL * self.bound.max(1.0)
    }

    /// The extremal grid point reaches the bound within the relative tolerance.
    pub fn attains(&self) -> bool {
        self.extremal_value.is_some_and(|v| (v - self.bound).abs() <= SEARCH_TOL * self.bound.abs().max(1.0))
    }
}

/// Grid point of the sharpness function: `w = z` for the starlike families,
/// `w = -z` for the convex and Noshiro ones.
pub fn extremal_point(kind: ClassKind) -> SearchPoint {
    let sigma = match kind {
        ClassKind::Starlike | ClassKind::MeromorphicStarlike => 1,
        ClassKind::Convex | ClassKind::Noshiro => -1,
    };
    SearchPoint { j: 1, a: 0.0, e: 0, sigma, theta: 0.0 }
}

fn search_bound(spec: &ClassSpec, n: usize) -> Result<Rational, CheckError> {
    let n = n as i64;
    Ok(match spec.kind {
        ClassKind::Starlike => bounds::bound_starlike_inverse(&spec.a, &spec.b, n)?,
        ClassKind::Convex => match spec.beta() {
            Some(beta) => bounds::bound_convex_beta(&beta, n)?,
            None => bounds::bound_convex_general(&spec.a, &spec.b, n)?.0,
        },
        ClassKind::Noshiro => bounds::noshiro_inverse_coeffs(&spec.b, n as usize)?.coeff(n as usize).clone(),
        ClassKind::MeromorphicStarlike => bounds::bound_merom_inverse(&spec.a, &spec.b, n)?,
    })
}

/// `|γ_n|` (or `|γ~_n|` for the meromorphic class) of the member generated by `w`.
fn value_at(spec: &ClassSpec, a: Complex64, b: Complex64, p: &SearchPoint, n: usize) -> Result<f64, CheckError> {
    let value = match spec.kind {
        ClassKind::MeromorphicStarlike => {
            let order = n + 2;
            let f = classes::member_generic(ClassKind::Starlike, &a, &b, &p.w(order), order)?;
            let big_f = f.revert()?;
            big_f.div_z()?.reciprocal()?.coeff(n + 1).norm()
        }
        kind => {
            let f = classes::member_generic(kind, &a, &b, &p.w(n), n)?;
            f.revert()?.coeff(n).norm()
        }
    };
    Ok(value)
}

/// Exhaustive grid maximization of the inverse coefficient of index `n`.
/// Ties resolve to the earliest grid point, so the result is deterministic.
pub fn sharpness_search(spec: &ClassSpec, n: usize, grid: &SearchGrid) -> Result<SearchResult, CheckError> {
    let regime = spec.require_valid()?;
    if spec.kind != ClassKind::Noshiro && regime != Regime::Generalized {
        return Err(classes::ClassError::InvalidSpec(format!("{spec}: the bound needs A > 1")).into());
    }
    let min_n = if spec.kind == ClassKind::MeromorphicStarlike { 0 } else { 2 };
    if n < min_n {
        return Err(classes::ClassError::InvalidSpec(format!("index n = {n} below {min_n}")).into());
    }
    let bound_exact = search_bound(spec, n)?;
    let a = Complex64::new(spec.a.to_f64().unwrap_or(f64::NAN), 0.0);
    let b = Complex64::new(spec.b.to_f64().unwrap_or(f64::NAN), 0.0);

    let points = grid.points();
    if points.is_empty() {
        return Err(classes::ClassError::InvalidSpec("empty search grid".into()).into());
    }
    let values = points.par_iter().map(|p| value_at(spec, a, b, p, n)).collect::<Result<Vec<_>, _>>()?;
    let (best_idx, best_value) =
        values
            .iter()
            .copied()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, v)| if v > acc.1 { (i, v) } else { acc });

    let ext = extremal_point(spec.kind);
    let extremal_value = points
        .iter()
        .position(|p| p.j == ext.j && p.e == 0 && p.sigma == ext.sigma && p.theta.is_zero())
        .map(|i| values[i]);

    let bound = bound_exact.to_f64().unwrap_or(f64::NAN);
    Ok(SearchResult {
        class: spec.kind,
        a: spec.a.clone(),
        b: spec.b.clone(),
        n,
        grid: grid.clone(),
        points: points.len(),
        best: points[best_idx],
        best_value,
        bound_exact,
        bound,
        gap: bound - best_value,
        extremal_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn small_grid() -> SearchGrid {
        SearchGrid {
            a: vec![-0.5, 0.0, 0.5],
            theta: (0..4).map(|k| f64::from(k) * std::f64::consts::FRAC_PI_2).collect(),
            ..SearchGrid::default()
        }
    }

    #[test]
    fn starlike_peak_at_identity() {
        let spec = ClassSpec::new(ClassKind::Starlike, rat(3), rat(1));
        let r = sharpness_search(&spec, 3, &small_grid()).unwrap();
        assert!((r.best_value - 7.0).abs() < 1e-9);
        assert!(r.is_sound() && r.attains());
    }

    #[test]
    fn convex_peak_at_minus_identity() {
        let spec = ClassSpec::new(ClassKind::Convex, rat(3), rat(1));
        let r = sharpness_search(&spec, 3, &small_grid()).unwrap();
        assert!((r.best_value - 5.0 / 3.0).abs() < 1e-9);
        assert!(r.attains());
    }

    #[test]
    fn restricted_grid_stays_strictly_inside() {
        let spec = ClassSpec::new(ClassKind::Starlike, rat(3), rat(1));
        let grid = SearchGrid { j: vec![2], ..small_grid() };
        let r = sharpness_search(&spec, 3, &grid).unwrap();
        assert!(r.gap > 1e-3, "gap {}", r.gap);
        assert_eq!(r.extremal_value, None);
    }

    #[test]
    fn meromorphic_peak() {
        let spec = ClassSpec::new(ClassKind::MeromorphicStarlike, rat(3), rat(1));
        let r = sharpness_search(&spec, 2, &small_grid()).unwrap();
        assert!((r.best_value - 10.0).abs() < 1e-9, "{}", r.best_value);
        assert!(r.attains());
    }
}
