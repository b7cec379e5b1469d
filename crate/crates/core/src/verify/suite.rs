//! Suite runner: expands a [`SuiteConfig`] into independent checks, runs
//! them in parallel and merges the results in case-id order.

use num::traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::classes::{self, ClassKind, ClassSpec, Regime, SchwarzSpec};
use crate::report::{Case, VerificationReport};
use crate::series::{rat, Rational, TaylorSeries};
use crate::verify::checks::{self, CheckError, CheckOptions};
use crate::verify::config::SuiteConfig;
use crate::verify::search::{self, SearchGrid};

pub const SUITE_NAME: &str = "janowski verification suite";
const CLAIM_SEARCH: &str = "numeric grid maximum equals the bound";

/// Schwarz functions `σ z^j` and `σ z^j (a+z)/(1+az)` over the configured grid.
pub fn schwarz_grid(cfg: &SuiteConfig) -> Vec<SchwarzSpec> {
    let mut out = Vec::new();
    for j in cfg.j_min..=cfg.j_max {
        for sign in [1, -1] {
            out.push(SchwarzSpec::monomial(j, sign));
            if cfg.blaschke {
                for a in cfg.a_values() {
                    out.push(SchwarzSpec::blaschke(j, a, sign));
                }
            }
        }
    }
    out
}

/// Numeric grid with the same `j`, `a` ranges and `theta_steps` rotations.
pub fn search_grid(cfg: &SuiteConfig) -> SearchGrid {
    let steps = cfg.theta_steps;
    SearchGrid {
        j: (cfg.j_min..=cfg.j_max).collect(),
        a: cfg.a_values().iter().map(|a| a.to_f64().unwrap_or(f64::NAN)).collect(),
        e: if cfg.blaschke { vec![0, 1] } else { vec![0] },
        sigma: vec![1, -1],
        theta: (0..steps).map(|k| 2.0 * std::f64::consts::PI * f64::from(k) / f64::from(steps)).collect(),
    }
}

/// Random `(A, B, t, m)` with `-1 <= B <= 1`, `B < A <= B + 10`, `1 <= t <= 10`, `1 <= m <= 12`.
pub fn lemma4_samples(seed: u64, count: usize) -> Vec<(Rational, Rational, i64, i64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let den: i64 = rng.gen_range(1..=12);
            let b = Rational::new(rng.gen_range(-den..=den).into(), den.into());
            let gap_den: i64 = rng.gen_range(1..=12);
            let gap = Rational::new(rng.gen_range(1..=10 * gap_den).into(), gap_den.into());
            let a = &b + gap;
            (a, b, rng.gen_range(1..=10), rng.gen_range(1..=12))
        })
        .collect()
}

enum Task {
    Attain(ClassSpec),
    Member(ClassSpec, SchwarzSpec),
    Schur(String, TaylorSeries),
    Pipeline(Rational, Rational, SchwarzSpec),
    Lemma4(Vec<(Rational, Rational, i64, i64)>),
    Pqrs,
    Consistency(Rational),
    Search(ClassSpec, usize),
}

fn push_unique(v: &mut Vec<ClassSpec>, s: ClassSpec) {
    if !v.contains(&s) {
        v.push(s);
    }
}

struct Plan {
    attain: Vec<ClassSpec>,
    members: Vec<ClassSpec>,
    pipeline_params: Vec<(Rational, Rational)>,
}

fn plan(cfg: &SuiteConfig) -> Plan {
    let mut attain = Vec::new();
    let mut members = Vec::new();
    let mut pipeline_params = Vec::new();
    let analytic = [ClassKind::Starlike, ClassKind::Convex, ClassKind::MeromorphicStarlike];
    let params: Vec<_> =
        std::iter::once((cfg.a.clone(), cfg.b.clone())).chain(cfg.extra_params.iter().cloned()).collect();
    for (i, (a, b)) in params.iter().enumerate() {
        for kind in analytic.into_iter().filter(|k| cfg.class.includes(*k)) {
            let spec = ClassSpec::new(kind, a.clone(), b.clone());
            push_unique(&mut attain, spec.clone());
            if i == 0 {
                push_unique(&mut members, spec);
            }
        }
        if cfg.class.includes(ClassKind::Convex)
            && ClassSpec::new(ClassKind::Convex, a.clone(), b.clone()).validate() == Regime::Generalized
            && !pipeline_params.contains(&(a.clone(), b.clone()))
        {
            pipeline_params.push((a.clone(), b.clone()));
        }
    }
    for beta in &cfg.betas {
        for kind in [ClassKind::Starlike, ClassKind::Convex].into_iter().filter(|k| cfg.class.includes(*k)) {
            push_unique(&mut attain, ClassSpec::from_beta(kind, beta));
        }
    }
    if cfg.class.includes(ClassKind::Noshiro) {
        for b in &cfg.noshiro_b {
            let spec = ClassSpec::new(ClassKind::Noshiro, rat(1), b.clone());
            push_unique(&mut attain, spec.clone());
            push_unique(&mut members, spec);
        }
    }
    Plan { attain, members, pipeline_params }
}

/// Taylor series behind a spec: the starlike member for the meromorphic class.
fn taylor_member(spec: &ClassSpec, w: &SchwarzSpec, n: usize) -> Result<TaylorSeries, CheckError> {
    let (kind, order) = match spec.kind {
        ClassKind::MeromorphicStarlike => (ClassKind::Starlike, n + 2),
        k => (k, n),
    };
    Ok(classes::member_generic(kind, &spec.a, &spec.b, &w.series(order)?, order)?)
}

fn taylor_extremal(spec: &ClassSpec, n: usize) -> Result<TaylorSeries, CheckError> {
    Ok(match spec.kind {
        ClassKind::MeromorphicStarlike => {
            classes::extremal_taylor(&ClassSpec { kind: ClassKind::Starlike, ..spec.clone() }, n + 2)?
        }
        _ => classes::extremal_taylor(spec, n)?,
    })
}

fn needs_generalized(spec: &ClassSpec) -> bool {
    spec.kind != ClassKind::Noshiro
}

fn usable(spec: &ClassSpec) -> bool {
    match spec.validate() {
        Regime::Invalid => false,
        Regime::Janowski => !needs_generalized(spec),
        Regime::Generalized => true,
    }
}

fn search_case(spec: &ClassSpec, n: usize, grid: &SearchGrid) -> Result<Case, CheckError> {
    let r = search::sharpness_search(spec, n, grid)?;
    let ok = r.is_sound() && r.attains();
    Ok(Case::holds(
        format!("search/{}[{},{}]/n={n:03}", spec.kind, spec.a, spec.b),
        CLAIM_SEARCH,
        format!("{} grid points, rel tol {:e}", r.points, search::SEARCH_TOL),
        format!(
            "best {:.12} at j={} a={} e={} sigma={} theta={:.6}; bound {:.12}; extremal {}",
            r.best_value,
            r.best.j,
            r.best.a,
            r.best.e,
            r.best.sigma,
            r.best.theta,
            r.bound,
            r.extremal_value.map_or("absent".to_string(), |v| format!("{v:.12}"))
        ),
        ok,
        || format!("{spec} n = {n}, gap {:e}", r.gap),
    ))
}

fn run_task(
    task: &Task,
    cfg: &SuiteConfig,
    opts: &CheckOptions,
    grid: &SearchGrid,
) -> Result<VerificationReport, CheckError> {
    match task {
        Task::Attain(spec) => checks::check_extremal_attainment(spec, cfg.n, opts),
        Task::Member(spec, w) => checks::check_member_bounds(spec, w, cfg.n, opts),
        Task::Schur(label, f) => checks::check_schur_relation(label, f, cfg.schur_tmax, cfg.schur_nmax),
        Task::Pipeline(a, b, w) => checks::check_thm5_pipeline(a, b, w, opts),
        Task::Lemma4(samples) => checks::check_lemma4(samples),
        Task::Pqrs => Ok(checks::check_pqrs_positivity(&cfg.pqrs_a_max, &cfg.pqrs_step)),
        Task::Consistency(beta) => checks::check_bound_consistency(beta, cfg.n.max(2) as i64),
        Task::Search(spec, n) => Ok(VerificationReport::new("search", vec![search_case(spec, *n, grid)?])),
    }
}

/// Runs every configured check. The reversion oracle runs first over every
/// series the suite constructs; if it fails the theorem checks are skipped.
pub fn run_suite(cfg: &SuiteConfig) -> Result<VerificationReport, CheckError> {
    if cfg.n == 0 {
        return Ok(VerificationReport::new(
            SUITE_NAME,
            vec![Case::skipped("suite/empty", "all", "N = 0", "nothing to check at depth 0")],
        ));
    }
    let plan = plan(cfg);
    for spec in plan.attain.iter().chain(&plan.members) {
        spec.require_valid()?;
    }
    let ws = schwarz_grid(cfg);
    let opts = CheckOptions {
        unproven: cfg.unproven,
        mutate: cfg.mutate,
        power_tmax: cfg.power_tmax,
        power_smax: cfg.power_smax,
        oracle: false,
    };

    // every Taylor series the checks below construct
    let mut series: Vec<(String, TaylorSeries)> = Vec::new();
    for spec in plan.attain.iter().filter(|s| usable(s)) {
        series.push((format!("oracle/{spec}/extremal"), taylor_extremal(spec, cfg.n)?));
    }
    for spec in plan.members.iter().filter(|s| usable(s)) {
        for w in &ws {
            series.push((format!("oracle/{spec}/{w}"), taylor_member(spec, w, cfg.n)?));
        }
    }
    for (a, b) in &plan.pipeline_params {
        for w in &ws {
            let f = classes::member_generic(ClassKind::Convex, a, b, &w.series(6)?.neg(), 6)?;
            series.push((format!("oracle/pipeline[{a},{b}]/{w}"), f));
        }
    }
    let oracle_cases: Vec<Case> = series.par_iter().map(|(id, f)| checks::oracle_case(id.clone(), f)).collect();
    let mut report = VerificationReport::new(SUITE_NAME, oracle_cases);
    if !report.passed() {
        report.merge(VerificationReport::new(
            SUITE_NAME,
            vec![Case::skipped("theorems", "all", "", "reversion oracle failed; theorem checks not run")],
        ));
        return Ok(report);
    }

    let mut tasks = Vec::new();
    for spec in &plan.attain {
        tasks.push(Task::Attain(spec.clone()));
    }
    if ws.is_empty() {
        report.merge(VerificationReport::new(
            SUITE_NAME,
            vec![Case::skipped("members", "member bounds", "", "empty Schwarz grid")],
        ));
    }
    let schur_order = (cfg.schur_nmax + cfg.schur_tmax + 1) as usize;
    for spec in &plan.members {
        for w in &ws {
            tasks.push(Task::Member(spec.clone(), w.clone()));
        }
        if usable(spec) && spec.kind != ClassKind::MeromorphicStarlike {
            tasks.push(Task::Schur(format!("{spec}/extremal"), taylor_extremal(spec, schur_order)?));
            for w in &ws {
                tasks.push(Task::Schur(format!("{spec}/{w}"), taylor_member(spec, w, schur_order)?));
            }
        }
    }
    for (a, b) in &plan.pipeline_params {
        for w in &ws {
            tasks.push(Task::Pipeline(a.clone(), b.clone(), w.clone()));
        }
        tasks.push(Task::Pipeline(a.clone(), b.clone(), SchwarzSpec::identity()));
    }
    if cfg.class.includes(ClassKind::Starlike) || cfg.class.includes(ClassKind::MeromorphicStarlike) {
        tasks.push(Task::Lemma4(lemma4_samples(cfg.seed, cfg.lemma4_samples)));
    }
    if cfg.class.includes(ClassKind::Convex) {
        tasks.push(Task::Pqrs);
    }
    if cfg.class.includes(ClassKind::Starlike) || cfg.class.includes(ClassKind::Convex) {
        for beta in &cfg.betas {
            tasks.push(Task::Consistency(beta.clone()));
        }
    }
    let grid = search_grid(cfg);
    if !cfg.exact_only && !grid.points().is_empty() {
        for spec in plan.members.iter().filter(|s| usable(s)) {
            let min_n = if spec.kind == ClassKind::MeromorphicStarlike { 0 } else { 2 };
            for n in min_n..=cfg.numeric_n {
                tasks.push(Task::Search(spec.clone(), n));
            }
        }
    }

    let reports = tasks.par_iter().map(|t| run_task(t, cfg, &opts, &grid)).collect::<Result<Vec<_>, _>>()?;
    let mut cases = report.cases;
    for r in reports {
        cases.extend(r.cases);
    }
    // the same pipeline may be scheduled twice when w = z is in the grid
    cases.sort_by(|a, b| a.id.cmp(&b.id));
    cases.dedup_by(|a, b| a.id == b.id);
    Ok(VerificationReport::new(SUITE_NAME, cases))
}
