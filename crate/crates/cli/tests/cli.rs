use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ardom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ardom")).args(args).env_remove("ARDOM_CAP").output().unwrap()
}

fn corpus_dir() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("{l}: {e}"))).collect()
}

#[test]
fn verify_on_shipped_corpus_exits_zero() {
    let o = ardom(&["verify", "--suite", "main", "--n", "1..2", &corpus_dir()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 fail"));
}

#[test]
fn json_records_carry_provenance() {
    let o = ardom(&["--format", "json", "--seed", "7", "verify", "--suite", "grade", "builtin"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json_lines(&o);
    assert!(rows.len() >= 10);
    for r in &rows {
        assert_eq!(r["check"], "grade");
        assert_eq!(r["seed"], 7);
        assert_eq!(r["cap"], 30);
        assert!(["pass", "vacuous"].contains(&r["status"].as_str().unwrap()), "{r}");
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["--format", "json", "--jobs", "4", "verify", "--suite", "all", "builtin"];
    let a = ardom(&args);
    let b = ardom(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exhausted_cap_exits_three() {
    let o = ardom(&["--cap", "0", "verify", "--suite", "main", "--n", "1", "builtin"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("inconclusive"));
    let env = Command::new(env!("CARGO_BIN_EXE_ardom"))
        .args(["verify", "--suite", "main", "--n", "1", "builtin"])
        .env("ARDOM_CAP", "0")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));
}

#[test]
fn wrong_expectation_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(Path::new(&corpus_dir()).join("kronecker.alg"), dir.path().join("kronecker.alg")).unwrap();
    std::fs::write(
        dir.path().join("manifest.toml"),
        "[[entry]]\nid = \"kronecker\"\nfile = \"kronecker.alg\"\ndomdim = \"1\"\ngldim = \"1\"\n",
    )
    .unwrap();
    let o = ardom(&["--format", "json", "verify", "--suite", "expected", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let rows = json_lines(&o);
    assert_eq!(rows[0]["status"], "fail");
    assert!(!rows[0]["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn bad_input_exits_two() {
    let empty = tempfile::tempdir().unwrap();
    for args in [
        vec!["verify", "--suite", "main", empty.path().to_str().unwrap()],
        vec!["verify", "--suite", "nonsense", "builtin"],
        vec!["verify", "--suite", "main", "--n", "3..1", "builtin"],
        vec!["info", "builtin:nope"],
        vec!["info", "/no/such/file.alg"],
        vec!["ar-check", "--n", "0", "builtin:kA2"],
    ] {
        let o = ardom(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "vertices 1\narrow a 1 9\n").unwrap();
    let o = ardom(&["info", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn single_invariants() {
    let dir = corpus_dir();
    let kron = format!("{dir}/kronecker.alg");
    let o = ardom(&["--format", "json", "domdim", &kron]);
    assert_eq!(json_lines(&o)[0]["domdim"], "0");
    let o = ardom(&["--format", "json", "torsion", &kron]);
    assert_eq!(json_lines(&o)[0]["min_grade_t_simple"], "1");
    let o = ardom(&["--format", "json", "gldim", "builtin:aus3"]);
    assert_eq!(json_lines(&o)[0]["gldim"], "2");
    let o = ardom(&["--format", "json", "domdim", "builtin:nak_c33"]);
    assert_eq!(json_lines(&o)[0]["domdim"], "inf");

    let s1 = format!("{dir}/modules/kronecker/S1.mod");
    let o = ardom(&["--format", "json", "grade", &kron, "--module", &s1]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o)[0]["grade"], "1");
    let o = ardom(&["--format", "json", "gldim", &kron, "--module", &s1]);
    assert_eq!(json_lines(&o)[0]["pdim"], "1");
}

#[test]
fn info_and_ar_check() {
    let o = ardom(&["info", "builtin:aus2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("dim: 5"), "{text}");
    assert!(text.contains("gendo_symmetric"));

    let o = ardom(&["--format", "json", "ar-check", "builtin:nak_l221", "--n", "1"]);
    let v = &json_lines(&o)[0];
    assert_eq!(v["tf_ar"], true);
    assert_eq!(v["domdim"], "2");
    assert_eq!(v["domdim_R"], "3");
    let o = ardom(&["--format", "json", "ar-check", "builtin:nak_l221", "--n", "2"]);
    assert_eq!(json_lines(&o)[0]["sequences"][0]["first_failure"], "V in degree 2");
    let o = ardom(&["--format", "json", "ar-check", "builtin:kronecker", "--n", "1"]);
    let v = &json_lines(&o)[0];
    assert_eq!(v["tf_ar"], false);
    assert!(v["sequences"][0]["first_failure"].as_str().unwrap().contains("degree 1"));
}

#[test]
fn scan_lines_are_json() {
    let o = ardom(&["--format", "json", "scan", "nakayama", "--simples", "2", "--max-len", "4", "--include-linear"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json_lines(&o);
    let verdict = rows.last().unwrap();
    assert_eq!(verdict["status"], "pass");
    assert_eq!(verdict["values"]["algebras"].as_str().unwrap().parse::<usize>().unwrap(), rows.len() - 1);
    assert!(rows.iter().any(|r| r["cyclic"] == false));
}

#[test]
fn book_commands_run_as_documented() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let text = std::fs::read_to_string(root.join("book/src/cli.md")).unwrap();
    let mut seen = 0;
    for line in text.lines().filter_map(|l| l.strip_prefix("$ ardom ")) {
        let (cmd, expect) = match line.split_once("# exit ") {
            Some((c, code)) => (c, code.trim().parse::<i32>().unwrap()),
            None => (line, 0),
        };
        let o = Command::new(env!("CARGO_BIN_EXE_ardom"))
            .args(cmd.split_whitespace())
            .current_dir(&root)
            .env_remove("ARDOM_CAP")
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(expect), "ardom {cmd}\n{}", String::from_utf8_lossy(&o.stderr));
        seen += 1;
    }
    assert!(seen >= 10);
}
