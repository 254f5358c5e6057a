use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::time::Duration;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    Theorem,
    Conjecture,
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimKind::Theorem => "theorem",
            ClaimKind::Conjecture => "conjecture",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub item: String,
    pub detail: String,
}

impl Counterexample {
    pub fn new(item: impl fmt::Display, detail: impl Into<String>) -> Counterexample {
        Counterexample {
            item: item.to_string(),
            detail: detail.into(),
        }
    }
}

pub type Params = BTreeMap<&'static str, u64>;

/// One checked parameter setting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Point {
    pub params: Params,
    pub expected: String,
    pub observed: String,
    /// Items (pairs, trees, words, lifts) examined at this setting.
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl Point {
    /// A point that passes when `expected == observed`.
    pub fn compare(params: Params, expected: impl fmt::Display, observed: impl fmt::Display) -> Point {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        let counterexamples = if expected == observed {
            vec![]
        } else {
            vec![Counterexample::new(
                "value",
                format!("expected {expected}, observed {observed}"),
            )]
        };
        Point {
            params,
            expected,
            observed,
            checked: 1,
            counterexamples,
        }
    }

    /// A point that passes when no counterexample was found among `checked`
    /// items.
    pub fn sweep(
        params: Params,
        expected: impl Into<String>,
        checked: u64,
        counterexamples: Vec<Counterexample>,
    ) -> Point {
        let observed = if counterexamples.is_empty() {
            format!("all {checked} hold")
        } else {
            format!("{} of {checked} fail", counterexamples.len())
        };
        Point {
            params,
            expected: expected.into(),
            observed,
            checked,
            counterexamples,
        }
    }

    pub fn with_note(mut self, note: impl fmt::Display) -> Point {
        write!(self.observed, "; {note}").expect("string write");
        self
    }

    pub fn status(&self) -> Status {
        if self.counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

pub fn params(pairs: &[(&'static str, u64)]) -> Params {
    pairs.iter().copied().collect()
}

fn render_params(p: &Params) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

/// Outcome of one campaign. The serialized forms leave out `wall`, so they
/// are identical across runs and worker counts.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: &'static str,
    pub kind: ClaimKind,
    pub statement: &'static str,
    pub range: String,
    pub seed: Option<u64>,
    pub points: Vec<Point>,
    #[serde(skip)]
    pub wall: Duration,
}

#[derive(Serialize)]
struct JsonPoint<'a> {
    claim: &'a str,
    params: &'a Params,
    expected: &'a str,
    observed: &'a str,
    status: Status,
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    counterexamples: &'a [Counterexample],
}

impl VerificationReport {
    pub fn status(&self) -> Status {
        if self.points.iter().all(|p| p.status() == Status::Pass) {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn items_checked(&self) -> u64 {
        self.points.iter().map(|p| p.checked).sum()
    }

    pub fn failures(&self) -> impl Iterator<Item = (&Point, &Counterexample)> {
        self.points
            .iter()
            .flat_map(|p| p.counterexamples.iter().map(move |c| (p, c)))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        writeln!(w, "claim {} ({})", self.claim, self.kind).unwrap();
        writeln!(w, "  {}", self.statement).unwrap();
        writeln!(w, "  range {}", self.range).unwrap();
        if let Some(seed) = self.seed {
            writeln!(w, "  seed {seed}").unwrap();
        }
        for p in &self.points {
            writeln!(
                w,
                "  {}: expected {} | observed {} | {}",
                render_params(&p.params),
                p.expected,
                p.observed,
                p.status()
            )
            .unwrap();
        }
        for (p, c) in self.failures() {
            writeln!(
                w,
                "  counterexample {}: {} : {}",
                render_params(&p.params),
                c.item,
                c.detail
            )
            .unwrap();
        }
        writeln!(w, "  points {}, items {}", self.points.len(), self.items_checked()).unwrap();
        writeln!(w, "{} {}", self.status(), self.claim).unwrap();
        out
    }

    /// One JSON object per point.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            let line = JsonPoint {
                claim: self.claim,
                params: &p.params,
                expected: &p.expected,
                observed: &p.observed,
                status: p.status(),
                counterexamples: &p.counterexamples,
            };
            out.push_str(&serde_json::to_string(&line).expect("plain data"));
            out.push('\n');
        }
        out
    }
}
