use rayon::prelude::*;
use serde::Serialize;

use super::{Settings, Status, Verdict, Witness};
use crate::algebra::{cyclic_kupisch_series, linear_kupisch_series, nakayama_from_kupisch};
use crate::ar::has_n_tf_ar_sequences;
use crate::error::Result;
use crate::homology::{domdim_algebra, CappedNat};
use crate::linalg::PrimeField;
use crate::modrep::{is_injective, projective};

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub kupisch: Vec<usize>,
    pub cyclic: bool,
    pub dim: usize,
    pub selfinjective: bool,
    pub domdim: CappedNat,
    /// Whether the AR sequences are `2m`-torsion-free; omitted unless requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tf_2m: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub simples: usize,
    pub max_len: usize,
    pub rows: Vec<ScanRow>,
    pub verdict: Verdict,
}

/// Enumerates Nakayama algebras with `m` simples and Kupisch entries `<= max_len`
/// (up to rotation for cyclic series) and checks, on each, that `domdim >= 2m`
/// forces selfinjectivity. With `question`, also searches for a non-selfinjective
/// algebra with `2m`-torsion-free AR sequences.
pub fn scan_nakayama_question(
    m: usize,
    max_len: usize,
    settings: Settings,
    cyclic_only: bool,
    question: bool,
    field: PrimeField,
) -> Result<ScanReport> {
    let mut series: Vec<(Vec<usize>, bool)> = cyclic_kupisch_series(m, max_len).into_iter().map(|c| (c, true)).collect();
    if !cyclic_only {
        series.extend(linear_kupisch_series(m, max_len).into_iter().map(|c| (c, false)));
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(settings.jobs).build().expect("thread pool starts");
    let rows: Vec<ScanRow> = pool.install(|| {
        series
            .par_iter()
            .map(|(c, cyclic)| -> Result<ScanRow> {
                let alg = nakayama_from_kupisch(c, *cyclic, field)?;
                let selfinjective = (0..alg.num_vertices()).all(|v| is_injective(&projective(&alg, v)));
                let domdim = domdim_algebra(&alg, settings.cap);
                let tf_2m = if question { Some(has_n_tf_ar_sequences(&alg, 2 * m)?.0) } else { None };
                Ok(ScanRow { kupisch: c.clone(), cyclic: *cyclic, dim: alg.dim(), selfinjective, domdim, tf_2m })
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let id = format!("nakayama-m{m}-len{max_len}");
    let mut v = Verdict::new("nakayama-question", &id, &settings).with_n(2 * m);
    let mut undecided = false;
    let mut counterexamples = 0;
    for r in &rows {
        let name = format!("{:?}{}", r.kupisch, if r.cyclic { "" } else { " linear" });
        if r.tf_2m == Some(true) && !r.selfinjective {
            counterexamples += 1;
            v.witness(Witness::new(format!("COUNTEREXAMPLE {name}"), "2m-torsion-free AR sequences", "not selfinjective"));
        }
        match r.domdim.at_least(2 * m) {
            Some(true) if !r.selfinjective => {
                v.witness(Witness::new(name, format!("domdim={}", r.domdim), "not selfinjective"));
            }
            None if !r.selfinjective => undecided = true,
            _ => {}
        }
    }
    v.value("algebras", rows.len());
    v.value("selfinjective", rows.iter().filter(|r| r.selfinjective).count());
    v.value("counterexamples", counterexamples);
    let verdict = if !v.witnesses.is_empty() {
        v.finish(Status::Fail, "counterexample or domdim >= 2m without selfinjectivity")
    } else if undecided {
        v.inconclusive("domdim")
    } else if question {
        v.finish(Status::Pass, "no counterexample; domdim >= 2m implies selfinjective on every algebra")
    } else {
        v.finish(Status::Pass, "domdim >= 2m implies selfinjective on every algebra")
    };
    Ok(ScanReport { simples: m, max_len, rows, verdict })
}
