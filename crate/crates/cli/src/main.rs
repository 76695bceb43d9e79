use std::fmt::Write as _;
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context as _, Result};
use ardom::algebra::{complete_to_basis, Algebra, Presentation};
use ardom::ar::{has_n_tf_ar_sequences, Term};
use ardom::homology::{
    domdim_algebra, domdim_module, domdim_r_via_mueller, evaluation_and_torsion, gldim, gorenstein_dim, grade, pdim,
    projective_injective_vertices, CappedNat,
};
use ardom::linalg::{PrimeField, DEFAULT_PRIME};
use ardom::modrep::{is_injective, projective, read_module, simple, write_module, ModuleRep};
use ardom::verify::{exit_code, run_suite, scan_nakayama_question, Corpus, Settings, Status, Suite};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

macro_rules! outln {
    ($out:expr) => {{
        let _ = writeln!($out);
    }};
    ($out:expr, $($t:tt)*) => {{
        let _ = writeln!($out, $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "ardom", version, about = "Homological invariants of bound quiver algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Cap on resolution and coresolution lengths.
    #[arg(long, global = true, env = "ARDOM_CAP", default_value_t = ardom::verify::DEFAULT_CAP)]
    cap: usize,
    /// Seed for module sampling and isomorphism search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = ardom::verify::DEFAULT_SAMPLE_SIZE)]
    sample_size: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (0 uses every core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Longest path considered while completing a presentation.
    #[arg(long, global = true, default_value_t = ardom::algebra::DEFAULT_MAX_PATH_LENGTH)]
    max_path_length: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Basis size, flags and the main dimensions of an algebra.
    Info { alg: String },
    /// Dominant dimension of the algebra, or of a module.
    Domdim(Target),
    /// Grade of a module, or of every simple module.
    Grade(Target),
    /// Torsion submodule and evaluation map of a module, or of every simple module.
    Torsion(Target),
    /// Global dimension, or projective dimension of a module.
    Gldim(Target),
    /// Build the almost split sequences at projective non-injective vertices and test n-torsion-freeness.
    ArCheck {
        alg: String,
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite over a corpus directory (or `builtin`).
    Verify {
        #[arg(long)]
        suite: Suite,
        /// Degree range such as `1..3` or a single degree.
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<usize>>,
        corpus: String,
    },
    /// Enumerate Nakayama algebras.
    Scan {
        #[command(subcommand)]
        family: ScanFamily,
    },
}

#[derive(Args)]
struct Target {
    /// Presentation file, or `builtin:<id>` for a shipped corpus entry.
    alg: String,
    #[arg(long)]
    module: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ScanFamily {
    Nakayama {
        #[arg(long)]
        simples: usize,
        #[arg(long)]
        max_len: usize,
        /// Search for non-selfinjective algebras with 2m-torsion-free AR sequences.
        #[arg(long)]
        question: bool,
        /// Include linear Kupisch series as well as cyclic ones.
        #[arg(long)]
        include_linear: bool,
    },
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected N or A..B, got {s:?}");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.parse().map_err(|_| bad())?, b.trim_start_matches('=').parse().map_err(|_| bad())?),
        None => {
            let n = s.parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if a == 0 || a > b {
        return Err(format!("degree range {s:?} must satisfy 1 <= A <= B"));
    }
    Ok(a..=b)
}

struct Loaded {
    id: String,
    alg: Algebra,
}

fn load_algebra(arg: &str, g: &Global) -> Result<Loaded> {
    if let Some(id) = arg.strip_prefix("builtin:") {
        let corpus = Corpus::builtin();
        let Some(e) = corpus.get(id) else {
            bail!("no builtin entry {id:?}");
        };
        return Ok(Loaded { id: id.to_string(), alg: e.algebra.clone() });
    }
    let text = std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
    let pres = Presentation::parse(&text).with_context(|| format!("parsing {arg}"))?;
    let alg = complete_to_basis(&pres, g.max_path_length).with_context(|| format!("completing {arg}"))?;
    let id = Path::new(arg).file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| arg.into());
    Ok(Loaded { id, alg })
}

fn load_module(alg: &Algebra, path: &Path) -> Result<ModuleRep> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_module(alg, &text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: &mut String, g: &Global, v: &Value) {
    match g.format {
        Format::Json => outln!(out, "{v}"),
        Format::Text => print_text(out, v, 0),
    }
}

fn print_text(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        outln!(out, "{pad}{k}:");
                        print_text(out, x, indent + 2);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        outln!(out, "{pad}{k}:");
                        for i in items {
                            print_text(out, i, indent + 2);
                            outln!(out);
                        }
                    }
                    Value::String(s) if s.contains('\n') => {
                        outln!(out, "{pad}{k}:");
                        for line in s.lines() {
                            outln!(out, "{pad}  {line}");
                        }
                    }
                    _ => outln!(out, "{pad}{k}: {}", scalar(x)),
                }
            }
        }
        other => outln!(out, "{pad}{}", scalar(other)),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn names(alg: &Algebra, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| alg.quiver().vertices[v].clone()).collect()
}

fn info(l: &Loaded, g: &Global) -> Value {
    let alg = &l.alg;
    let f = alg.flags();
    let flags: Vec<&str> = [
        (f.selfinjective, "selfinjective"),
        (f.gendo_symmetric, "gendo_symmetric"),
        (f.symmetric, "symmetric"),
        (f.higher_auslander, "higher_auslander"),
    ]
    .into_iter()
    .filter_map(|(on, n)| on.then_some(n))
    .collect();
    let pi = projective_injective_vertices(alg);
    let nv = alg.num_vertices();
    let vertices: Vec<Value> = (0..nv)
        .map(|v| {
            let p = projective(alg, v);
            json!({
                "vertex": alg.quiver().vertices[v],
                "dim_projective": p.dim(),
                "projective_is_injective": is_injective(&p),
                "injective_is_projective": pi[v],
                "pdim_simple": pdim(&simple(alg, v), g.cap),
            })
        })
        .collect();
    json!({
        "algebra": l.id,
        "field": alg.field().p(),
        "dim": alg.dim(),
        "vertices": alg.quiver().vertices,
        "arrows": alg.quiver().arrows.iter().map(|a| format!("{}: {} -> {}", a.name, alg.quiver().vertices[a.source], alg.quiver().vertices[a.target])).collect::<Vec<_>>(),
        "flags": flags,
        "domdim": domdim_algebra(alg, g.cap),
        "gldim": gldim(alg, g.cap),
        "gorenstein_dim": gorenstein_dim(alg, g.cap),
        "per_vertex": vertices,
    })
}

fn per_simple(alg: &Algebra, f: impl Fn(&ModuleRep) -> Value) -> Vec<Value> {
    (0..alg.num_vertices())
        .map(|v| {
            let mut o = f(&simple(alg, v));
            o.as_object_mut().unwrap().insert("vertex".into(), json!(alg.quiver().vertices[v]));
            o
        })
        .collect()
}

fn torsion_value(m: &ModuleRep, cap: usize) -> Value {
    let ev = evaluation_and_torsion(m);
    json!({
        "dim": m.dim(),
        "torsion_dim": ev.torsion.dim(),
        "grade_torsion": grade(&ev.torsion, cap),
        "torsionless": ev.torsionless,
        "reflexive": ev.reflexive,
        "torsion": write_module(&ev.torsion),
    })
}

fn single(cmd: &Command, g: &Global) -> Result<Value> {
    let (t, kind) = match cmd {
        Command::Domdim(t) => (t, "domdim"),
        Command::Grade(t) => (t, "grade"),
        Command::Torsion(t) => (t, "torsion"),
        Command::Gldim(t) => (t, "gldim"),
        _ => unreachable!(),
    };
    let l = load_algebra(&t.alg, g)?;
    let alg = &l.alg;
    let module = t.module.as_deref().map(|p| load_module(alg, p)).transpose()?;
    let mut out = json!({ "algebra": l.id });
    let o = out.as_object_mut().unwrap();
    if let Some(p) = &t.module {
        o.insert("module".into(), json!(p.display().to_string()));
    }
    let cap = g.cap;
    match (kind, &module) {
        ("domdim", Some(m)) => o.insert("domdim".into(), json!(domdim_module(m, cap))),
        ("domdim", None) => o.insert("domdim".into(), json!(domdim_algebra(alg, cap))),
        ("grade", Some(m)) => o.insert("grade".into(), json!(grade(m, cap))),
        ("grade", None) => o.insert("simples".into(), json!(per_simple(alg, |s| json!({ "grade": grade(s, cap) })))),
        ("torsion", Some(m)) => o.insert("result".into(), torsion_value(m, cap)),
        ("torsion", None) => {
            let rows = per_simple(alg, |s| torsion_value(s, cap));
            let min = (0..alg.num_vertices())
                .map(|v| grade(&evaluation_and_torsion(&simple(alg, v)).torsion, cap))
                .fold(CappedNat::Infinite, CappedNat::min);
            o.insert("min_grade_t_simple".into(), json!(min));
            o.insert("simples".into(), json!(rows))
        }
        ("gldim", Some(m)) => o.insert("pdim".into(), json!(pdim(m, cap))),
        ("gldim", None) => o.insert("gldim".into(), json!(gldim(alg, cap))),
        _ => unreachable!(),
    };
    Ok(out)
}

fn ar_check(alg_arg: &str, n: usize, g: &Global) -> Result<Value> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    let l = load_algebra(alg_arg, g)?;
    let alg = &l.alg;
    let (holds, profile) = has_n_tf_ar_sequences(alg, n)?;
    let term = |t: Term| format!("{t:?}");
    let rows: Vec<Value> = profile
        .vertices
        .iter()
        .map(|p| {
            json!({
                "vertex": alg.quiver().vertices[p.vertex],
                "dims_U_X_V": p.dims,
                "first_failure": p.failure(n).map(|(t, d)| format!("{} in degree {d}", term(t))),
            })
        })
        .collect();
    let pi = projective_injective_vertices(alg);
    Ok(json!({
        "algebra": l.id,
        "n": n,
        "tf_ar": holds,
        "sequences": rows,
        "projective_injective_vertices": names(alg, (0..pi.len()).filter(|&v| pi[v])),
        "domdim": domdim_algebra(alg, g.cap),
        "domdim_R": domdim_r_via_mueller(alg, g.cap),
    }))
}

fn run(cli: Cli, out: &mut String) -> Result<u8> {
    let g = &cli.global;
    let settings = Settings { cap: g.cap, seed: g.seed, sample_size: g.sample_size, jobs: g.jobs };
    match &cli.command {
        Command::Info { alg } => {
            let l = load_algebra(alg, g)?;
            emit(out, g, &info(&l, g));
        }
        c @ (Command::Domdim(_) | Command::Grade(_) | Command::Torsion(_) | Command::Gldim(_)) => emit(out, g, &single(c, g)?),
        Command::ArCheck { alg, n } => emit(out, g, &ar_check(alg, *n, g)?),
        Command::Verify { suite, n, corpus } => {
            let corpus = if corpus == "builtin" {
                Corpus::builtin()
            } else {
                Corpus::load(Path::new(corpus), g.max_path_length)?
            };
            let verdicts = run_suite(&corpus, *suite, settings, n.clone());
            for v in &verdicts {
                match g.format {
                    Format::Json => outln!(out, "{}", v.to_json()),
                    Format::Text => outln!(out, "{}", v.to_text()),
                }
            }
            if g.format == Format::Text {
                let count = |s: Status| verdicts.iter().filter(|v| v.status == s).count();
                outln!(out,
                    "{} records: {} pass, {} vacuous, {} inconclusive, {} fail",
                    verdicts.len(),
                    count(Status::Pass),
                    count(Status::Vacuous),
                    count(Status::Inconclusive),
                    count(Status::Fail)
                );
            }
            return Ok(exit_code(&verdicts) as u8);
        }
        Command::Scan { family: ScanFamily::Nakayama { simples, max_len, question, include_linear } } => {
            if *simples == 0 {
                bail!("--simples must be at least 1");
            }
            let field = PrimeField::new(u64::from(DEFAULT_PRIME))?;
            let report = scan_nakayama_question(*simples, *max_len, settings, !include_linear, *question, field)?;
            match g.format {
                Format::Json => {
                    for r in &report.rows {
                        outln!(out, "{}", serde_json::to_string(r)?);
                    }
                    outln!(out, "{}", report.verdict.to_json());
                }
                Format::Text => {
                    outln!(out, "{:<16} {:>4} {:>14} {:>7} {:>6}", "kupisch", "dim", "selfinjective", "domdim", "tf_2m");
                    for r in &report.rows {
                        let k = format!("{:?}{}", r.kupisch, if r.cyclic { "" } else { "L" });
                        let tf = r.tf_2m.map(|b| b.to_string()).unwrap_or_else(|| "-".into());
                        outln!(out, "{k:<16} {:>4} {:>14} {:>7} {tf:>6}", r.dim, r.selfinjective, r.domdim.to_string());
                    }
                    outln!(out, "{}", report.verdict.to_text());
                }
            }
            return Ok(exit_code(std::slice::from_ref(&report.verdict)) as u8);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let mut out = String::new();
    let result = run(Cli::parse(), &mut out);
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
