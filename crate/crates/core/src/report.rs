//! Verification reports and their JSON / CSV / text serializations.

use std::fmt::Write as _;

use num::traits::{Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::series::Rational;

pub fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Decimal rendering used for display columns only.
pub fn decimal(r: &Rational) -> String {
    match r.to_f64() {
        Some(x) if x.is_finite() => format!("{x:.12}"),
        _ => "nan".to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
    /// Evaluated outside a proven range; never counted as pass or fail.
    Observed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    /// exact equality
    Eq,
    /// `|actual| <= expected`
    AbsLe,
    /// `actual > 0`
    Positive,
    /// predicate stated in the case inputs
    Holds,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Case {
    pub id: String,
    pub claim: String,
    pub inputs: String,
    pub relation: Relation,
    pub expected: String,
    pub actual: String,
    pub verdict: Verdict,
    pub witness: Option<String>,
    pub note: Option<String>,
}

impl Case {
    #[allow(clippy::too_many_arguments)]
    fn build(
        id: String,
        claim: &str,
        inputs: String,
        relation: Relation,
        expected: String,
        actual: String,
        ok: bool,
        witness: impl FnOnce() -> String,
    ) -> Self {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        Case {
            id,
            claim: claim.to_string(),
            inputs,
            relation,
            expected,
            actual,
            verdict,
            witness: (!ok).then(witness),
            note: None,
        }
    }

    /// Pass iff `actual == expected` as rationals.
    pub fn exact_eq(
        id: impl Into<String>,
        claim: &str,
        inputs: impl Into<String>,
        expected: &Rational,
        actual: &Rational,
        witness: impl FnOnce() -> String,
    ) -> Self {
        Self::build(
            id.into(),
            claim,
            inputs.into(),
            Relation::Eq,
            expected.to_string(),
            actual.to_string(),
            expected == actual,
            witness,
        )
    }

    /// Pass iff `|actual| <= bound` as rationals.
    pub fn abs_le(
        id: impl Into<String>,
        claim: &str,
        inputs: impl Into<String>,
        bound: &Rational,
        actual: &Rational,
        witness: impl FnOnce() -> String,
    ) -> Self {
        Self::build(
            id.into(),
            claim,
            inputs.into(),
            Relation::AbsLe,
            bound.to_string(),
            actual.to_string(),
            actual.abs() <= *bound,
            witness,
        )
    }

    pub fn positive(
        id: impl Into<String>,
        claim: &str,
        inputs: impl Into<String>,
        actual: &Rational,
        witness: impl FnOnce() -> String,
    ) -> Self {
        Self::build(
            id.into(),
            claim,
            inputs.into(),
            Relation::Positive,
            "> 0".to_string(),
            actual.to_string(),
            actual.is_positive(),
            witness,
        )
    }

    pub fn holds(
        id: impl Into<String>,
        claim: &str,
        inputs: impl Into<String>,
        actual: impl Into<String>,
        ok: bool,
        witness: impl FnOnce() -> String,
    ) -> Self {
        Self::build(id.into(), claim, inputs.into(), Relation::Holds, "true".to_string(), actual.into(), ok, witness)
    }

    pub fn skipped(id: impl Into<String>, claim: &str, inputs: impl Into<String>, why: &str) -> Self {
        Case {
            id: id.into(),
            claim: claim.to_string(),
            inputs: inputs.into(),
            relation: Relation::Holds,
            expected: String::new(),
            actual: String::new(),
            verdict: Verdict::Skipped,
            witness: None,
            note: Some(why.to_string()),
        }
    }

    /// Downgrade to an observation (unproven range), keeping the computed values.
    pub fn observed(mut self, note: &str) -> Self {
        let matched = self.verdict == Verdict::Pass;
        self.verdict = Verdict::Observed;
        self.witness = None;
        self.note = Some(format!("{note}; relation {}", if matched { "held" } else { "failed" }));
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub observed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, cases: Vec<Case>) -> Self {
        let mut r = VerificationReport { suite: suite.into(), cases, summary: Summary::default() };
        r.finish();
        r
    }

    pub fn empty(suite: impl Into<String>) -> Self {
        Self::new(suite, Vec::new())
    }

    /// Sort cases by id and recompute the summary.
    pub fn finish(&mut self) {
        self.cases.sort_by(|a, b| a.id.cmp(&b.id));
        let mut s = Summary { total: self.cases.len(), ..Summary::default() };
        for c in &self.cases {
            match c.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Skipped => s.skipped += 1,
                Verdict::Observed => s.observed += 1,
            }
        }
        self.summary = s;
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.cases.extend(other.cases);
        self.finish();
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "suite", "id", "claim", "inputs", "relation", "expected", "actual", "verdict", "witness", "note",
        ])?;
        for c in &self.cases {
            w.write_record([
                self.suite.as_str(),
                &c.id,
                &c.claim,
                &c.inputs,
                &format!("{:?}", c.relation),
                &c.expected,
                &c.actual,
                &format!("{:?}", c.verdict),
                c.witness.as_deref().unwrap_or(""),
                c.note.as_deref().unwrap_or(""),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let _ = writeln!(
                out,
                "{:<8} {:<52} expected {:<24} actual {}",
                format!("{:?}", c.verdict),
                c.id,
                c.expected,
                c.actual
            );
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "         witness: {w}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{}: {} cases, {} pass, {} fail, {} skipped, {} observed",
            self.suite, s.total, s.pass, s.fail, s.skipped, s.observed
        );
        out
    }
}
