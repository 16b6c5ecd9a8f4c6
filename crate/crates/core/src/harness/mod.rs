//! Claim registry with exhaustive and seeded random instance generation,
//! counterexample capture and report emission.

mod checks;
mod fixtures;
pub mod generate;
mod report;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

pub use fixtures::{fixture_suite, fixtures, Fixture};
pub use generate::{labeled_graphs_up_to, random_graph, LabeledGraphs, RandomGraphSpec};
pub use report::{emit_report, write_report, ReportFormat, RunInfo};

pub const DEFAULT_SEED: u64 = 1;

/// Largest order for which every labeled graph is scanned (`2^15` graphs).
pub const EXHAUSTIVE_LIMIT: usize = 6;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown check id `{0}`")]
    UnknownId(String),
    #[error("exhaustive order {n_max} exceeds the limit {limit}")]
    ScaleTooLarge { n_max: usize, limit: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("report encoding failed: {0}")]
    Encode(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Scale {
    pub exhaustive_n_max: usize,
    pub random_trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScaleOverrides {
    pub exhaustive_n_max: Option<usize>,
    pub random_trials: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    ErratumConfirmed,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ErratumConfirmed => "erratum_confirmed",
        }
    }

    /// Pass or a confirmed known erratum.
    pub fn is_acceptable(&self) -> bool {
        !matches!(self, Verdict::Fail)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Canonical text, preceded by `#` lines describing the instance.
    pub graph: String,
    pub expected: String,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheckResult {
    pub id: String,
    pub instances_checked: u64,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    pub scale: Scale,
    pub tallies: BTreeMap<String, u64>,
    pub notes: Vec<String>,
}

/// Per-instance answer of a predicate handed to [`exhaustive_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Instance outside the claim's domain; not counted.
    Skip,
    Holds,
    Fails { expected: String, observed: String },
}

/// One registered claim. `generator` and `predicate` describe the instance
/// family and the property evaluated on it.
pub struct TheoremCheck {
    pub id: &'static str,
    pub generator: &'static str,
    pub predicate: &'static str,
    pub default_n_max: usize,
    pub default_trials: usize,
    /// Exhaustive orders above this are clamped (per factor for two-graph claims).
    pub n_max_cap: usize,
    pub(crate) run: fn(&Scale, &mut Recorder),
}

impl fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TheoremCheck").field("id", &self.id).finish()
    }
}

pub fn registry() -> &'static [TheoremCheck] {
    checks::REGISTRY
}

pub fn lookup(id: &str) -> Result<&'static TheoremCheck, HarnessError> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| HarnessError::UnknownId(id.to_string()))
}

pub(crate) struct Recorder {
    instances: u64,
    failures: Vec<Counterexample>,
    errata: Vec<Counterexample>,
    tallies: BTreeMap<String, u64>,
    notes: Vec<String>,
}

impl Recorder {
    fn new() -> Recorder {
        Recorder {
            instances: 0,
            failures: Vec::new(),
            errata: Vec::new(),
            tallies: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn instance(&mut self) {
        self.instances += 1;
    }

    pub(crate) fn tally(&mut self, key: impl Into<String>) {
        *self.tallies.entry(key.into()).or_insert(0) += 1;
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn entry(g: &Graph, context: &str, expected: String, observed: String) -> Counterexample {
        let mut graph = String::new();
        for line in context.lines() {
            graph.push_str("# ");
            graph.push_str(line);
            graph.push('\n');
        }
        graph.push_str(&g.to_text());
        Counterexample {
            graph,
            expected,
            observed,
        }
    }

    pub(crate) fn fail(&mut self, g: &Graph, context: &str, expected: String, observed: String) {
        self.failures.push(Self::entry(g, context, expected, observed));
    }

    /// A failure of a reading already known to be wrong.
    pub(crate) fn erratum(&mut self, g: &Graph, context: &str, expected: String, observed: String) {
        self.errata.push(Self::entry(g, context, expected, observed));
    }

    /// Records a pass/fail comparison of two rendered values.
    pub(crate) fn expect_eq(&mut self, g: &Graph, context: &str, expected: String, observed: String) -> bool {
        if expected == observed {
            true
        } else {
            self.fail(g, context, expected, observed);
            false
        }
    }

    fn finish(self, id: &str, scale: Scale) -> TheoremCheckResult {
        let verdict = if !self.failures.is_empty() {
            Verdict::Fail
        } else if !self.errata.is_empty() {
            Verdict::ErratumConfirmed
        } else {
            Verdict::Pass
        };
        let mut counterexamples = self.failures;
        counterexamples.extend(self.errata);
        TheoremCheckResult {
            id: id.to_string(),
            instances_checked: self.instances,
            verdict,
            counterexamples,
            scale,
            tallies: self.tallies,
            notes: self.notes,
        }
    }
}

/// Runs one registered check at its default scale with `overrides` applied.
pub fn verify(id: &str, overrides: &ScaleOverrides) -> Result<TheoremCheckResult, HarnessError> {
    let check = lookup(id)?;
    let requested = overrides.exhaustive_n_max.unwrap_or(check.default_n_max);
    if requested > EXHAUSTIVE_LIMIT {
        return Err(HarnessError::ScaleTooLarge {
            n_max: requested,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let scale = Scale {
        exhaustive_n_max: requested.min(check.n_max_cap),
        random_trials: overrides.random_trials.unwrap_or(check.default_trials),
        seed: overrides.seed.unwrap_or(DEFAULT_SEED),
    };
    let mut rec = Recorder::new();
    if requested > check.n_max_cap {
        rec.note(format!(
            "exhaustive order clamped from {requested} to {}",
            check.n_max_cap
        ));
    }
    (check.run)(&scale, &mut rec);
    Ok(rec.finish(check.id, scale))
}

/// Runs every registered check in registry order.
pub fn verify_all(overrides: &ScaleOverrides) -> Result<Vec<TheoremCheckResult>, HarnessError> {
    registry().iter().map(|c| verify(c.id, overrides)).collect()
}

/// Evaluates `predicate` on every labeled graph with at most `n_max` vertices.
pub fn exhaustive_scan<P>(n_max: usize, mut predicate: P) -> Result<TheoremCheckResult, HarnessError>
where
    P: FnMut(&Graph) -> Outcome,
{
    if n_max > EXHAUSTIVE_LIMIT {
        return Err(HarnessError::ScaleTooLarge {
            n_max,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let mut rec = Recorder::new();
    for g in labeled_graphs_up_to(n_max) {
        match predicate(&g) {
            Outcome::Skip => {}
            Outcome::Holds => rec.instance(),
            Outcome::Fails { expected, observed } => {
                rec.instance();
                rec.fail(&g, "exhaustive scan", expected, observed);
            }
        }
    }
    let scale = Scale {
        exhaustive_n_max: n_max,
        random_trials: 0,
        seed: 0,
    };
    Ok(rec.finish("scan", scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_scan() {
        let r = exhaustive_scan(4, |_| Outcome::Holds).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.instances_checked, 1 + 1 + 2 + 8 + 64);
        assert!(exhaustive_scan(7, |_| Outcome::Holds).is_err());
    }

    #[test]
    fn failing_scan_keeps_graphs() {
        let r = exhaustive_scan(3, |g| {
            if g.size() == 3 {
                Outcome::Fails {
                    expected: "no triangle".into(),
                    observed: "triangle".into(),
                }
            } else {
                Outcome::Holds
            }
        })
        .unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.counterexamples.len(), 1);
        assert!(r.counterexamples[0].graph.ends_with("n 3\ne 0 1\ne 0 2\ne 1 2\n"));
    }

    #[test]
    fn unknown_ids() {
        assert!(matches!(
            verify("NOPE", &ScaleOverrides::default()),
            Err(HarnessError::UnknownId(_))
        ));
    }

    #[test]
    fn ids_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        ids.sort();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
    }
}
