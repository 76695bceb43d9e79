//! End-to-end acceptance run: one line per criterion, then a single assertion.

use std::process::Command;

use ardom::ar::almost_split_from_projective;
use ardom::homology::{domdim_algebra, evaluation_and_torsion, grade, CappedNat};
use ardom::modrep::{is_isomorphic, projective, simple, Iso};
use ardom::verify::{run_suite, Corpus, Settings, Status, Suite, Verdict};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn suite(corpus: &Corpus, s: Suite, degrees: Option<std::ops::RangeInclusive<usize>>) -> Vec<Verdict> {
    run_suite(corpus, s, Settings::default(), degrees)
}

fn all_ok(vs: &[Verdict]) -> Result<(), String> {
    if vs.is_empty() {
        return Err("no records".into());
    }
    match vs.iter().find(|v| !v.is_ok()) {
        Some(v) => Err(v.to_text()),
        None => Ok(()),
    }
}

fn count(vs: &[Verdict], s: Status) -> usize {
    vs.iter().filter(|v| v.status == s).count()
}

fn value(v: &Verdict, key: &str) -> Result<String, String> {
    v.values.get(key).cloned().ok_or_else(|| format!("{} {}: missing value {key}", v.check, v.algebra))
}

fn wild_examples(c: &Corpus) -> Outcome {
    let mut seen = Vec::new();
    for id in ["kronecker", "wild3"] {
        let alg = &c.get(id).ok_or(format!("missing {id}"))?.algebra;
        let d = domdim_algebra(alg, 30);
        let min = (0..alg.num_vertices())
            .map(|s| grade(&evaluation_and_torsion(&simple(alg, s)).torsion, 30))
            .fold(CappedNat::Infinite, CappedNat::min);
        if d != CappedNat::Exact(0) || min != CappedNat::Exact(1) {
            return Err(format!("{id}: domdim={d}, min grade t(S)={min}"));
        }
        seen.push(id);
    }
    Ok(format!("{}: domdim 0, min grade t(S) 1", seen.join(", ")))
}

fn hereditary_torsion(c: &Corpus) -> Outcome {
    let vs = suite(c, Suite::Hereditary, None);
    all_ok(&vs)?;
    if count(&vs, Status::Pass) < 5 {
        return Err(format!("only {} hereditary entries checked", count(&vs, Status::Pass)));
    }
    let modules: usize = vs.iter().map(|v| value(v, "modules").map(|m| m.parse::<usize>().unwrap_or(0))).sum::<Result<_, _>>()?;
    Ok(format!("{} algebras, {modules} indecomposables", vs.len()))
}

fn main_equivalence(c: &Corpus) -> Outcome {
    let vs = suite(c, Suite::Main, Some(1..=3));
    all_ok(&vs)?;
    if count(&vs, Status::Inconclusive) > 0 || vs.len() != 3 * c.len() {
        return Err(format!("{} records, {} inconclusive", vs.len(), count(&vs, Status::Inconclusive)));
    }
    let both_true = vs.iter().filter(|v| v.detail == "both sides true").count();
    Ok(format!("{} records, {both_true} with both sides true", vs.len()))
}

fn ar_direction(c: &Corpus) -> Outcome {
    let vs = suite(c, Suite::ArDirection, Some(1..=3));
    all_ok(&vs)?;
    if count(&vs, Status::Inconclusive) > 0 {
        return Err("inconclusive records".into());
    }
    Ok(format!("{} records, {} non-vacuous, 0 violations", vs.len(), count(&vs, Status::Pass)))
}

fn gendo(c: &Corpus) -> Outcome {
    let vs = suite(c, Suite::Gendo, Some(1..=3));
    all_ok(&vs)?;
    let mut ids: Vec<&str> = vs.iter().map(|v| v.algebra.as_str()).collect();
    ids.dedup();
    if ids.len() < 3 {
        return Err(format!("only {ids:?}"));
    }
    Ok(format!("{} records on {}", vs.len(), ids.join(", ")))
}

fn grade_formulas(c: &Corpus) -> Outcome {
    let vs = suite(c, Suite::Grade, None);
    all_ok(&vs)?;
    let mut sampled = 0;
    for v in &vs {
        let d: CappedNat = value(v, "domdim")?.parse().map_err(|e: String| e)?;
        if let CappedNat::Exact(d) = d {
            if (1..30).contains(&d) {
                let n: usize = value(v, "samples")?.parse().unwrap();
                if n < 50 || v.status != Status::Pass {
                    return Err(format!("{}: {n} samples, {}", v.algebra, v.to_text()));
                }
                sampled += 1;
            }
        }
    }
    if sampled == 0 {
        return Err("no entry with 1 <= domdim < cap".into());
    }
    Ok(format!("{} entries, {sampled} with >= 50 sampled modules", vs.len()))
}

fn auslander_torsion(c: &Corpus) -> Outcome {
    let vs = suite(c, Suite::Cor47, None);
    all_ok(&vs)?;
    let mut parts = Vec::new();
    for v in &vs {
        let found: usize = value(v, "nonzero_torsion")?.parse().unwrap();
        let two = (value(v, "gldim")?, value(v, "domdim")?) == ("2".into(), "2".into());
        if v.status != Status::Pass || found == 0 {
            return Err(format!("{}: {found} nonzero torsion modules", v.algebra));
        }
        if two {
            parts.push(format!("{} ({found})", v.algebra));
        }
    }
    if parts.len() < 2 {
        return Err("fewer than two Auslander algebras checked".into());
    }
    Ok(format!("torsion modules of pdim 2 on {}", parts.join(", ")))
}

fn gorenstein(c: &Corpus) -> Outcome {
    let vs = suite(c, Suite::Gorenstein, None);
    all_ok(&vs)?;
    let mut checked = Vec::new();
    for v in &vs {
        let e = c.get(&v.algebra).unwrap();
        let exact = v.values.get("gorenstein_dim").is_some_and(|g| g.parse::<usize>().is_ok_and(|g| g > 0));
        if e.nakayama && v.status != Status::Vacuous && !exact {
            return Err(format!("{}: {}", v.algebra, v.to_text()));
        }
        if e.nakayama && exact {
            if v.status != Status::Pass {
                return Err(v.to_text());
            }
            checked.push(v.algebra.as_str());
        }
    }
    if checked.is_empty() {
        return Err("no non-selfinjective Nakayama entry".into());
    }
    Ok(format!("Nakayama entries {}", checked.join(", ")))
}

fn torsion_routes(c: &Corpus) -> Outcome {
    let vs = suite(c, Suite::Torsion, Some(1..=3));
    all_ok(&vs)?;
    let samples: usize = vs.iter().filter_map(|v| v.values.get("samples")).map(|s| s.parse::<usize>().unwrap()).sum();
    Ok(format!("{} algebras, {samples} modules, both routes agree", vs.len()))
}

fn ar_sequences(c: &Corpus) -> Outcome {
    let alg = &c.get("kA2").unwrap().algebra;
    let seq = almost_split_from_projective(alg, 1).map_err(|e| e.to_string())?;
    let terms = [(&seq.u, projective(alg, 1)), (&seq.x, projective(alg, 0)), (&seq.v, simple(alg, 0))];
    for (got, want) in terms {
        if is_isomorphic(got, &want) != Iso::Yes {
            return Err(format!("kA2 term of dims {:?} not the expected module", got.dims()));
        }
    }
    let vs = suite(c, Suite::Ar, None);
    all_ok(&vs)?;
    let built: usize = vs.iter().filter_map(|v| v.values.get("sequences")).map(|s| s.parse::<usize>().unwrap()).sum();
    Ok(format!("kA2 gives P2 -> P1 -> S1; {built} sequences built and checked"))
}

fn nakayama_scan() -> Outcome {
    let mut parts = Vec::new();
    for (m, len, question) in [("2", "6", true), ("3", "5", false)] {
        let mut args = vec!["--format", "json", "scan", "nakayama", "--simples", m, "--max-len", len];
        if question {
            args.push("--question");
        }
        let o = Command::new(env!("CARGO_BIN_EXE_ardom")).args(&args).output().map_err(|e| e.to_string())?;
        let text = String::from_utf8_lossy(&o.stdout);
        let last: Value = serde_json::from_str(text.lines().last().unwrap_or("")).map_err(|e| e.to_string())?;
        let ce = last["values"]["counterexamples"].as_str().unwrap_or("?");
        if o.status.code() != Some(0) || last["status"] != "pass" || ce != "0" {
            return Err(format!("m={m}: exit {:?}, {last}", o.status.code()));
        }
        parts.push(format!("m={m} len<={len}: {} algebras", last["values"]["algebras"].as_str().unwrap_or("?")));
    }
    Ok(format!("{}; no counterexample", parts.join(", ")))
}

fn dominant_torsion_free(c: &Corpus) -> Outcome {
    let vs = suite(c, Suite::DomTf, Some(1..=2));
    all_ok(&vs)?;
    for m in 1..=2 {
        if !vs.iter().any(|v| v.n == Some(m) && v.status == Status::Pass) {
            return Err(format!("no non-vacuous record for m={m}"));
        }
    }
    Ok(format!("{} records, {} non-vacuous", vs.len(), count(&vs, Status::Pass)))
}

fn main() {
    let c = Corpus::builtin();
    let criteria: Vec<Criterion> = vec![
        ("wild examples have domdim 0", Box::new(|| wild_examples(&c))),
        ("hereditary torsion is torsionless", Box::new(|| hereditary_torsion(&c))),
        ("torsion-free AR sequences vs dominant dimensions", Box::new(|| main_equivalence(&c))),
        ("torsion-free AR sequences bound domdim", Box::new(|| ar_direction(&c))),
        ("gendo-symmetric Ext formula", Box::new(|| gendo(&c))),
        ("grade formulas for domdim", Box::new(|| grade_formulas(&c))),
        ("torsion over Auslander algebras", Box::new(|| auslander_torsion(&c))),
        ("Gorenstein Nakayama algebras", Box::new(|| gorenstein(&c))),
        ("torsion submodule routes agree", Box::new(|| torsion_routes(&c))),
        ("almost split sequences", Box::new(|| ar_sequences(&c))),
        ("Nakayama scan", Box::new(nakayama_scan)),
        ("dominant dimension is torsion-freeness", Box::new(|| dominant_torsion_free(&c))),
    ];
    let total = criteria.len();
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[{:>2}/{total}] PASS  {name}: {detail}", i + 1),
            Err(why) => {
                println!("[{:>2}/{total}] FAIL  {name}: {why}", i + 1);
                failed.push(*name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("acceptance failed: {failed:?}");
        std::process::exit(1);
    }
}
