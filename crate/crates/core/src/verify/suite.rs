use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;

use super::checks::*;
use super::{Corpus, CorpusEntry, Settings, Status, Verdict};

/// A named group of checks run over a corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Main,
    Gendo,
    Gorenstein,
    Grade,
    Cor47,
    ArDirection,
    Torsion,
    Ar,
    DomTf,
    Hereditary,
    Expected,
    All,
}

const NAMES: [(Suite, &str); 12] = [
    (Suite::Main, "main"),
    (Suite::Gendo, "gendo"),
    (Suite::Gorenstein, "gorenstein"),
    (Suite::Grade, "grade"),
    (Suite::Cor47, "cor47"),
    (Suite::ArDirection, "ar-direction"),
    (Suite::Torsion, "torsion"),
    (Suite::Ar, "ar"),
    (Suite::DomTf, "dom-tf"),
    (Suite::Hereditary, "hereditary"),
    (Suite::Expected, "expected"),
    (Suite::All, "all"),
];

impl Suite {
    pub fn names() -> impl Iterator<Item = &'static str> {
        NAMES.iter().map(|(_, n)| *n)
    }

    /// Degrees used when the caller gives none.
    pub fn default_degrees(self) -> RangeInclusive<usize> {
        match self {
            Suite::DomTf => 1..=2,
            _ => 1..=3,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(NAMES.iter().find(|(s, _)| s == self).unwrap().1)
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NAMES
            .iter()
            .find(|(_, n)| *n == s)
            .map(|(s, _)| *s)
            .ok_or_else(|| format!("unknown suite {s:?}; expected one of {}", Suite::names().collect::<Vec<_>>().join(", ")))
    }
}

fn run_entry(entry: &CorpusEntry, suite: Suite, settings: Settings, degrees: Option<&RangeInclusive<usize>>) -> Vec<Verdict> {
    let cx = Context::for_entry(entry, settings);
    let flags = entry.algebra.flags();
    let mut out = Vec::new();
    let mut run = |s: Suite| {
        let ns = degrees.cloned().unwrap_or_else(|| s.default_degrees());
        match s {
            Suite::Main => out.extend(ns.map(|n| verify_main_theorem(&cx, n))),
            Suite::Gendo if flags.gendo_symmetric => out.extend(ns.map(|n| verify_gendo_cor(&cx, n))),
            Suite::Gorenstein => out.push(verify_gorenstein(&cx)),
            Suite::Grade => out.push(verify_grade_formulas(&cx)),
            Suite::Cor47 if flags.higher_auslander => out.push(verify_cor47(&cx)),
            Suite::ArDirection => out.extend(ns.map(|n| verify_ar_direction(&cx, n))),
            Suite::Torsion => out.push(verify_torsion_oracle(&cx, *ns.end())),
            Suite::Ar => out.push(verify_ar_construction(&cx)),
            Suite::DomTf => out.extend(ns.map(|m| verify_dom_tf(&cx, m))),
            Suite::Hereditary if entry.algebra.is_hereditary_path_algebra() && !entry.indecomposables.is_empty() => {
                out.push(verify_hereditary_torsion(&cx))
            }
            Suite::Expected => out.push(verify_expected(&cx)),
            _ => {}
        }
    };
    if suite == Suite::All {
        NAMES.iter().map(|(s, _)| *s).filter(|&s| s != Suite::All).for_each(&mut run);
    } else {
        run(suite);
    }
    out
}

/// Runs a suite over every applicable corpus entry. Entries are processed in
/// parallel; records come back in corpus order.
pub fn run_suite(corpus: &Corpus, suite: Suite, settings: Settings, degrees: Option<RangeInclusive<usize>>) -> Vec<Verdict> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(settings.jobs).build().expect("thread pool starts");
    let per_entry: Vec<Vec<Verdict>> = pool.install(|| {
        corpus.entries.par_iter().map(|e| run_entry(e, suite, settings, degrees.as_ref())).collect()
    });
    per_entry.into_iter().flatten().collect()
}

/// 0 when everything passed, 1 on any failure, 3 when something is inconclusive.
pub fn exit_code(verdicts: &[Verdict]) -> i32 {
    if verdicts.iter().any(|v| v.status == Status::Fail) {
        1
    } else if verdicts.iter().any(|v| v.status == Status::Inconclusive) {
        3
    } else {
        0
    }
}
