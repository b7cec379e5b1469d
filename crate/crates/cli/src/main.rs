use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use janowski_core::bounds::{self, BoundKind};
use janowski_core::classes::{self, ClassFunction, ClassKind, ClassSpec};
use janowski_core::inversion;
use janowski_core::report::decimal;
use janowski_core::verify::{self, parse_rational, OutputFormat, SearchGrid, SuiteConfig};
use janowski_core::Rational;

#[derive(Parser)]
#[command(name = "janowski", version, about = "Inverse-coefficient bounds for generalized Janowski classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Text => Format::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Table of bound values.
    Bound {
        /// starlike, convex, convex-general, noshiro, meromorphic,
        /// meromorphic-inverse, delta-starlike, delta-convex
        #[arg(long)]
        class: String,
        #[arg(long = "A", allow_hyphen_values = true, default_value = "1")]
        a: String,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: String,
        /// Index or range, e.g. `5`, `2..5`
        #[arg(long, default_value = "2..10")]
        n: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Coefficients of the sharpness function and of its inverse, with bounds.
    Extremal {
        /// starlike, convex, noshiro, meromorphic
        #[arg(long)]
        class: String,
        #[arg(long = "A", allow_hyphen_values = true, default_value = "1")]
        a: String,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: String,
        #[arg(long = "N", default_value_t = 10)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the verification suite described by a TOML config.
    Verify {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Also write the JSON report to this file.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        unproven: bool,
        #[arg(long)]
        exact_only: bool,
        /// Corrupt the attained bounds; the suite must then fail.
        #[arg(long)]
        mutate: bool,
    },
    /// Numeric grid search for the largest inverse coefficient.
    Search {
        #[arg(long)]
        class: String,
        #[arg(long = "A", allow_hyphen_values = true, default_value = "1")]
        a: String,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        n: usize,
        /// Schwarz valuations to include
        #[arg(long, value_delimiter = ',', default_values_t = vec![1u32, 2, 3])]
        j: Vec<u32>,
        #[arg(long, default_value_t = 16)]
        theta_steps: u32,
        /// Only monomial Schwarz functions
        #[arg(long)]
        no_blaschke: bool,
        /// Only the given sign of the Schwarz function
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<i8>,
    },
}

fn rational(name: &str, s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| anyhow!("--{name}: {e}"))
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<i64>> {
    let parse = |t: &str| t.trim().parse::<i64>().with_context(|| format!("bad index `{t}` in `{s}`"));
    if let Some((lo, hi)) = s.split_once("..=").or_else(|| s.split_once("..")) {
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo > hi {
            bail!("empty range `{s}`");
        }
        Ok(lo..=hi)
    } else {
        let n = parse(s)?;
        Ok(n..=n)
    }
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?)?)
}

fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            width[i] = width[i].max(c.len());
        }
    }
    let line = |cells: Vec<&str>| {
        cells.iter().enumerate().map(|(i, c)| format!("{c:>w$}", w = width[i])).collect::<Vec<_>>().join("  ")
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

/// A table rendered as JSON (array of objects), CSV or aligned text.
fn emit<T: Serialize>(format: Format, records: &T, header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(records)? + "\n",
        Format::Csv => csv_string(header, rows)?,
        Format::Text => text_table(header, rows),
    })
}

#[derive(Serialize)]
struct BoundRecord {
    n: i64,
    bound: String,
    decimal: String,
    proven: bool,
}

fn cmd_bound(class: &str, a: &str, b: &str, n: &str, format: Format) -> Result<String> {
    let kind = BoundKind::parse(class).ok_or_else(|| anyhow!("unknown bound class `{class}`"))?;
    let (a, b) = (rational("A", a)?, rational("B", b)?);
    let table = bounds::bound_table(kind, &a, &b, parse_range(n)?)?;
    let records: Vec<BoundRecord> = table
        .rows
        .iter()
        .map(|r| BoundRecord { n: r.n, bound: r.bound.to_string(), decimal: decimal(&r.bound), proven: r.proven })
        .collect();
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| vec![r.n.to_string(), r.bound.clone(), r.decimal.clone(), r.proven.to_string()])
        .collect();
    emit(format, &records, &["n", "bound", "decimal", "proven"], &rows)
}

#[derive(Serialize)]
struct ExtremalRecord {
    n: usize,
    /// `a_n` of the extremal, or `b_n` for the meromorphic class
    coeff: String,
    coeff_bound: Option<String>,
    /// `gamma_n` of the inverse, or `gamma~_n`
    inverse: String,
    inverse_bound: Option<String>,
    proven: Option<bool>,
}

fn spec_from_args(class: &str, a: &str, b: &str) -> Result<ClassSpec> {
    let kind: ClassKind = class.parse()?;
    let spec = ClassSpec::new(kind, rational("A", a)?, rational("B", b)?);
    spec.require_valid()?;
    Ok(spec)
}

fn cmd_extremal(class: &str, a: &str, b: &str, n: usize, format: Format) -> Result<String> {
    let spec = spec_from_args(class, a, b)?;
    let mut records = Vec::new();
    match classes::extremal(&spec, n)? {
        ClassFunction::Taylor(f) => {
            let big_f = f.revert()?;
            for k in 1..=n {
                let bound = if k >= 2 { Some(extremal_bound(&spec, k as i64)?) } else { None };
                records.push(ExtremalRecord {
                    n: k,
                    coeff: f.coeff(k).to_string(),
                    coeff_bound: None,
                    inverse: big_f.coeff(k).to_string(),
                    inverse_bound: bound.as_ref().map(|(v, _)| v.to_string()),
                    proven: bound.map(|(_, p)| p),
                });
            }
        }
        ClassFunction::Laurent(g) => {
            let star = ClassSpec { kind: ClassKind::Starlike, ..spec.clone() };
            let f = classes::extremal_taylor(&star, n + 2)?;
            let inv = inversion::meromorphic_inverse(&f, n)?;
            for k in 0..=n {
                let (bound, proven) = bounds::bound_merom_coeff(&spec.a, &spec.b, k as i64)?;
                let inv_bound = bounds::bound_merom_inverse(&spec.a, &spec.b, k as i64)?;
                records.push(ExtremalRecord {
                    n: k,
                    coeff: g.b(k).to_string(),
                    coeff_bound: Some(bound.to_string()),
                    inverse: inv.b(k).to_string(),
                    inverse_bound: Some(inv_bound.to_string()),
                    proven: Some(proven),
                });
            }
        }
    }
    let header: &[&str] = match spec.kind {
        ClassKind::MeromorphicStarlike => &["n", "b_n", "b_n bound", "gamma~_n", "gamma~_n bound", "proven"],
        _ => &["n", "a_n", "a_n bound", "gamma_n", "gamma_n bound", "proven"],
    };
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.coeff.clone(),
                r.coeff_bound.clone().unwrap_or_default(),
                r.inverse.clone(),
                r.inverse_bound.clone().unwrap_or_default(),
                r.proven.map(|p| p.to_string()).unwrap_or_default(),
            ]
        })
        .collect();
    emit(format, &records, header, &rows)
}

fn extremal_bound(spec: &ClassSpec, n: i64) -> Result<(Rational, bool)> {
    let kind = match spec.kind {
        ClassKind::Starlike => BoundKind::StarlikeInverse,
        ClassKind::Convex if spec.beta().is_some() => BoundKind::ConvexInverse,
        ClassKind::Convex => BoundKind::ConvexGeneralInverse,
        ClassKind::Noshiro => BoundKind::NoshiroInverse,
        ClassKind::MeromorphicStarlike => BoundKind::MeromInverse,
    };
    Ok(bounds::bound_value(kind, &spec.a, &spec.b, n)?)
}

enum Outcome {
    Ok(String),
    Failed(String),
}

fn cmd_verify(
    config: Option<PathBuf>,
    output: Option<PathBuf>,
    format: Option<Format>,
    unproven: bool,
    exact_only: bool,
    mutate: bool,
) -> Result<Outcome> {
    let mut cfg = match &config {
        Some(path) => SuiteConfig::load(path)?,
        None => SuiteConfig::default(),
    };
    cfg.unproven |= unproven;
    cfg.exact_only |= exact_only;
    cfg.mutate |= mutate;
    let report = verify::run_suite(&cfg)?;
    if let Some(path) = output {
        std::fs::write(&path, report.to_json()? + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    let text = match format.unwrap_or_else(|| cfg.format.into()) {
        Format::Json => report.to_json()? + "\n",
        Format::Csv => report.to_csv()?,
        Format::Text => report.to_text(),
    };
    Ok(if report.passed() { Outcome::Ok(text) } else { Outcome::Failed(text) })
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    class: &str,
    a: &str,
    b: &str,
    n: usize,
    j: Vec<u32>,
    theta_steps: u32,
    no_blaschke: bool,
    sigma: Option<i8>,
) -> Result<String> {
    let spec = spec_from_args(class, a, b)?;
    if theta_steps == 0 {
        bail!("--theta-steps must be at least 1");
    }
    let sigma = match sigma {
        None => vec![1, -1],
        Some(s @ (1 | -1)) => vec![s],
        Some(s) => bail!("--sigma must be 1 or -1, got {s}"),
    };
    let grid = SearchGrid {
        j,
        e: if no_blaschke { vec![0] } else { vec![0, 1] },
        sigma,
        theta: (0..theta_steps).map(|k| 2.0 * std::f64::consts::PI * f64::from(k) / f64::from(theta_steps)).collect(),
        ..SearchGrid::default()
    };
    let result = verify::sharpness_search(&spec, n, &grid)?;
    Ok(serde_json::to_string_pretty(&result)? + "\n")
}

fn run(cli: Cli) -> Result<Outcome> {
    Ok(match cli.command {
        Command::Bound { class, a, b, n, format } => Outcome::Ok(cmd_bound(&class, &a, &b, &n, format)?),
        Command::Extremal { class, a, b, n, format } => Outcome::Ok(cmd_extremal(&class, &a, &b, n, format)?),
        Command::Verify { config, output, format, unproven, exact_only, mutate } => {
            cmd_verify(config, output, format, unproven, exact_only, mutate)?
        }
        Command::Search { class, a, b, n, j, theta_steps, no_blaschke, sigma } => {
            Outcome::Ok(cmd_search(&class, &a, &b, n, j, theta_steps, no_blaschke, sigma)?)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(out)) => {
            print!("{out}");
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
