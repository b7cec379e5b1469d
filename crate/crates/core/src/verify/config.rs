//! Suite configuration: a flat TOML table. Rationals are strings such as
//! `"3"`, `"-1/2"`; decimals are rejected so nothing passes through floats.

use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize};

use crate::classes::ClassKind;
use crate::report::ser_rational;
use crate::series::Rational;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Parse(String),
    #[error("field `{field}`: {message}")]
    Invalid { field: &'static str, message: String },
}

/// Exact rational from `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    if t.contains('.') || t.contains('e') || t.contains('E') {
        return Err(format!("`{s}` is not an exact rational (write p/q)"));
    }
    Rational::from_str(t).map_err(|e| format!("`{s}` is not a rational: {e}"))
}

fn de_rational<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    parse_rational(&s).map_err(serde::de::Error::custom)
}

fn de_rationals<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
    Vec::<String>::deserialize(d)?.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect()
}

fn de_pairs<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(Rational, Rational)>, D::Error> {
    Vec::<[String; 2]>::deserialize(d)?
        .iter()
        .map(|[a, b]| {
            let a = parse_rational(a).map_err(serde::de::Error::custom)?;
            let b = parse_rational(b).map_err(serde::de::Error::custom)?;
            Ok((a, b))
        })
        .collect()
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

fn ser_pairs<S: serde::Serializer>(v: &[(Rational, Rational)], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(a, b)| [a.to_string(), b.to_string()]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

/// Which class families the suite covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassSelection {
    All,
    One(ClassKind),
}

impl ClassSelection {
    pub fn includes(self, kind: ClassKind) -> bool {
        match self {
            ClassSelection::All => true,
            ClassSelection::One(k) => k == kind,
        }
    }
}

impl Serialize for ClassSelection {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ClassSelection::All => s.serialize_str("all"),
            ClassSelection::One(k) => k.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for ClassSelection {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "all" {
            return Ok(ClassSelection::All);
        }
        ClassKind::from_str(&s).map(ClassSelection::One).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct SuiteConfig {
    pub class: ClassSelection,
    #[serde(rename = "A", deserialize_with = "de_rational", serialize_with = "ser_rational")]
    pub a: Rational,
    #[serde(rename = "B", deserialize_with = "de_rational", serialize_with = "ser_rational")]
    pub b: Rational,
    /// Exact sweep depth.
    #[serde(rename = "N")]
    pub n: usize,
    /// Further `[A, B]` pairs for attainment and the convex pipeline.
    #[serde(deserialize_with = "de_pairs", serialize_with = "ser_pairs")]
    pub extra_params: Vec<(Rational, Rational)>,
    /// `β` values for the `B = 1` specializations.
    #[serde(deserialize_with = "de_rationals", serialize_with = "ser_rationals")]
    pub betas: Vec<Rational>,
    #[serde(deserialize_with = "de_rationals", serialize_with = "ser_rationals")]
    pub noshiro_b: Vec<Rational>,

    pub j_min: u32,
    pub j_max: u32,
    #[serde(deserialize_with = "de_rational", serialize_with = "ser_rational")]
    pub a_min: Rational,
    #[serde(deserialize_with = "de_rational", serialize_with = "ser_rational")]
    pub a_max: Rational,
    #[serde(deserialize_with = "de_rational", serialize_with = "ser_rational")]
    pub a_step: Rational,
    /// Include Blaschke factors (`e = 1`) in the Schwarz grid.
    pub blaschke: bool,

    /// Largest index of the numeric search.
    pub numeric_n: usize,
    /// Rotation angles `2πk/theta_steps`.
    pub theta_steps: u32,

    pub seed: u64,
    pub lemma4_samples: usize,
    pub schur_tmax: i64,
    pub schur_nmax: i64,
    pub power_tmax: i64,
    pub power_smax: i64,
    #[serde(deserialize_with = "de_rational", serialize_with = "ser_rational")]
    pub pqrs_a_max: Rational,
    #[serde(deserialize_with = "de_rational", serialize_with = "ser_rational")]
    pub pqrs_step: Rational,

    pub format: OutputFormat,
    /// Skip the floating-point search.
    pub exact_only: bool,
    /// Emit observations outside proven ranges.
    pub unproven: bool,
    /// Harness self-test: corrupt the attained bounds.
    pub mutate: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        let r = |s: &str| parse_rational(s).expect("literal");
        SuiteConfig {
            class: ClassSelection::All,
            a: r("3"),
            b: r("1"),
            n: 20,
            extra_params: vec![(r("3"), r("0")), (r("5/2"), r("-1/2"))],
            betas: vec![r("3/2"), r("2"), r("3")],
            noshiro_b: vec![r("-1"), r("-1/2"), r("0"), r("1/2")],
            j_min: 1,
            j_max: 3,
            a_min: r("-9/10"),
            a_max: r("9/10"),
            a_step: r("1/10"),
            blaschke: true,
            numeric_n: 10,
            theta_steps: 16,
            seed: 42,
            lemma4_samples: 1000,
            schur_tmax: 3,
            schur_nmax: 10,
            power_tmax: 10,
            power_smax: 10,
            pqrs_a_max: r("10"),
            pqrs_step: r("1/8"),
            format: OutputFormat::Json,
            exact_only: false,
            unproven: false,
            mutate: false,
        }
    }
}

fn invalid(field: &'static str, message: impl Into<String>) -> ConfigError {
    ConfigError::Invalid { field, message: message.into() }
}

impl SuiteConfig {
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        let cfg: SuiteConfig = toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Io { path: path.display().to_string(), source })?;
        Self::from_toml(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let one = Rational::from_integer(1.into());
        if self.a_min <= -one.clone() {
            return Err(invalid("a_min", "Blaschke parameters need |a| < 1"));
        }
        if self.a_max >= one {
            return Err(invalid("a_max", "Blaschke parameters need |a| < 1"));
        }
        if self.a_step <= Rational::from_integer(0.into()) {
            return Err(invalid("a_step", "must be positive"));
        }
        if self.pqrs_step <= Rational::from_integer(0.into()) {
            return Err(invalid("pqrs_step", "must be positive"));
        }
        if self.j_min == 0 {
            return Err(invalid("j_min", "Schwarz valuation must be >= 1"));
        }
        if self.theta_steps == 0 {
            return Err(invalid("theta_steps", "must be >= 1"));
        }
        if self.n > 200 {
            return Err(invalid("N", "depth above 200 is not supported"));
        }
        Ok(())
    }

    /// Blaschke parameters `a_min, a_min + a_step, ..., <= a_max`.
    pub fn a_values(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        let mut a = self.a_min.clone();
        while a <= self.a_max {
            out.push(a.clone());
            a += &self.a_step;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat, ratio};

    #[test]
    fn defaults_round_trip() {
        let cfg = SuiteConfig::default();
        let back = SuiteConfig::from_toml(&cfg.to_toml()).unwrap();
        assert_eq!(back, cfg);
        assert_eq!(cfg.a_values().len(), 19);
    }

    #[test]
    fn rationals_parse_exactly() {
        let cfg = SuiteConfig::from_toml("A = \"5/2\"\nB = \"-1/2\"\nN = 7\n").unwrap();
        assert_eq!(cfg.a, ratio(5, 2));
        assert_eq!(cfg.b, ratio(-1, 2));
        assert_eq!(cfg.n, 7);
        assert_eq!(parse_rational(" 6/4 ").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn errors_name_line_and_field() {
        let err = SuiteConfig::from_toml("N = 5\nbogus = 1\n").unwrap_err().to_string();
        assert!(err.contains("line 2") && err.contains("bogus"), "{err}");
        let err = SuiteConfig::from_toml("A = \"2.5\"\n").unwrap_err().to_string();
        assert!(err.contains("line 1") && err.contains("2.5"), "{err}");
        let err = SuiteConfig::from_toml("a_max = \"1\"\n").unwrap_err().to_string();
        assert!(err.contains("a_max"), "{err}");
        let err = SuiteConfig::from_toml("class = \"spiral\"\n").unwrap_err().to_string();
        assert!(err.contains("spiral"), "{err}");
    }
}
