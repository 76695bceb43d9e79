//! Checks of homological statements over a corpus of algebras, the Nakayama scan, and report records.
//!
//! Every check produces a [`Verdict`]. A check whose inputs hit the
//! computation cap reports [`Status::Inconclusive`] rather than guessing.

mod builtin;
mod checks;
mod corpus;
mod scan;
mod suite;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

pub use checks::{
    verify_ar_construction, verify_ar_direction, verify_cor47, verify_dom_tf, verify_expected, verify_gendo_cor,
    verify_gorenstein, verify_grade_formulas, verify_hereditary_torsion, verify_main_theorem, verify_torsion_oracle,
    Context,
};
pub use corpus::{builtin_file, Corpus, CorpusEntry, Expected, KnownModule};
pub use scan::{scan_nakayama_question, ScanReport, ScanRow};
pub use suite::{exit_code, run_suite, Suite};

pub const DEFAULT_CAP: usize = 30;
pub const DEFAULT_SAMPLE_SIZE: usize = 64;

/// Knobs shared by every check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Settings {
    pub cap: usize,
    pub seed: u64,
    pub sample_size: usize,
    /// Worker threads; 0 picks the number of cores.
    #[serde(skip)]
    pub jobs: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { cap: DEFAULT_CAP, seed: 0, sample_size: DEFAULT_SAMPLE_SIZE, jobs: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    /// The hypotheses of the check do not apply, so it holds trivially.
    Vacuous,
    Inconclusive,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Vacuous => "vacuous",
            Status::Inconclusive => "inconclusive",
            Status::Fail => "fail",
        })
    }
}

/// A concrete instance backing a verdict, re-checkable on its own.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub lhs: String,
    pub rhs: String,
    /// The module in module-file syntax, when the subject is a module.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
}

impl Witness {
    pub fn new(subject: impl Into<String>, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Witness { subject: subject.into(), lhs: lhs.to_string(), rhs: rhs.to_string(), ..Witness::default() }
    }

    pub fn degree(mut self, d: usize) -> Self {
        self.degree = Some(d);
        self
    }

    pub fn module(mut self, text: String) -> Self {
        self.module = Some(text);
        self
    }
}

/// One report record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub algebra: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub status: Status,
    pub detail: String,
    pub values: BTreeMap<String, String>,
    pub witnesses: Vec<Witness>,
    pub cap: usize,
    pub seed: u64,
}

impl Verdict {
    pub fn new(check: &str, algebra: &str, settings: &Settings) -> Self {
        Verdict {
            check: check.into(),
            algebra: algebra.into(),
            n: None,
            status: Status::Pass,
            detail: String::new(),
            values: BTreeMap::new(),
            witnesses: Vec::new(),
            cap: settings.cap,
            seed: settings.seed,
        }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn value(&mut self, key: &str, v: impl fmt::Display) {
        self.values.insert(key.into(), v.to_string());
    }

    pub fn witness(&mut self, w: Witness) {
        self.witnesses.push(w);
    }

    /// Sets the status and detail line, returning the finished record.
    pub fn finish(mut self, status: Status, detail: impl Into<String>) -> Self {
        self.status = status;
        self.detail = detail.into();
        self
    }

    pub fn inconclusive(self, what: &str) -> Self {
        let cap = self.cap;
        self.finish(Status::Inconclusive, format!("{what} undecided at cap {cap}"))
    }

    pub fn is_ok(&self) -> bool {
        matches!(self.status, Status::Pass | Status::Vacuous)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdicts serialize")
    }

    /// One line for the text report.
    pub fn to_text(&self) -> String {
        let n = self.n.map(|n| format!(" n={n}")).unwrap_or_default();
        let values: Vec<String> = self.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut s = format!("{:<12} {:<14}{n:<5} {:<12} {}", self.check, self.algebra, self.status, self.detail);
        if !values.is_empty() {
            s.push_str(&format!(" [{}]", values.join(" ")));
        }
        for w in &self.witnesses {
            let deg = w.degree.map(|d| format!(" degree {d}")).unwrap_or_default();
            s.push_str(&format!("\n    {}{deg}: {} vs {}", w.subject, w.lhs, w.rhs));
        }
        s
    }
}
