use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const DIM3: &str = r#"{"k0": 1, "l0": 0, "m": 1, "lambda": [["1"]]}"#;
const DIM4: &str = r#"{"k0": 1, "l0": 1, "m": 1, "lambda": [["1"]]}"#;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Workspace {
        let ws = Workspace {
            dir: TempDir::new().unwrap(),
        };
        ws.write("dim3.json", DIM3);
        ws.write("dim4.json", DIM4);
        ws
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        fs::write(&path, text).unwrap();
        path
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn run(&self, args: &[&str]) -> Output {
        Command::new(env!("CARGO_BIN_EXE_flatbialg"))
            .current_dir(self.dir.path())
            .args(args)
            .output()
            .unwrap()
    }

    /// Run with `--format json`, returning the exit code and parsed report.
    fn json(&self, args: &[&str]) -> (i32, Value) {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let out = self.run(&full);
        let report = serde_json::from_slice(&out.stdout)
            .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
        (out.status.code().unwrap(), report)
    }

    fn cochain(&self, name: &str, algebra: &str, entries: &str) -> PathBuf {
        self.write(name, &format!(r#"{{"algebra": "{algebra}", "entries": {entries}}}"#))
    }
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn summary(report: &Value) -> &str {
    report["data"]["summary"].as_str().unwrap()
}

/// Dim-3 cocycle with parameters `(a, b, c, e)`.
fn dim3_cochain(ws: &Workspace, name: &str, p: [i64; 4]) -> PathBuf {
    let [a, b, c, e] = p;
    ws.cochain(
        name,
        "dim3.json",
        &format!(
            r#"{{"s1": {{"s1^d1": "{a}", "s1^d2": "{b}", "d1^d2": "{c}"}},
                "d1": {{"s1^d1": "{e}", "d1^d2": "{b}"}},
                "d2": {{"s1^d2": "{e}", "d1^d2": "{}"}}}}"#,
            -a
        ),
    )
}

#[test]
fn info_reports_degeneracy_and_flatness() {
    let ws = Workspace::new();
    let out = ws.run(&["info", "-a", "dim3.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("nondegenerate, dim 3, flat ✓\n"));

    ws.write("deg.json", r#"{"k0": 1, "l0": 0, "m": 2, "lambda": [["1"], ["-1"]]}"#);
    let (code, report) = ws.json(&["info", "-a", "deg.json"]);
    assert_eq!(code, 0);
    assert!(summary(&report).starts_with("degenerate, pairs: (1,2,ε=−1)"));
    assert_eq!(report["data"]["degeneracy"]["pairs"][0]["epsilon"], -1);

    ws.write("zero.json", r#"{"k0": 1, "l0": 0, "m": 2, "lambda": [["1"], ["0"]]}"#);
    let out = ws.run(&["info", "-a", "zero.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("center intersects derived ideal"));
    assert!(out.stdout.is_empty());
}

#[test]
fn invariants_in_both_modes() {
    let ws = Workspace::new();
    let (code, report) = ws.json(&["invariants", "-a", "dim3.json", "--degree", "2", "--mode", "both"]);
    assert_eq!(code, 0);
    assert_eq!(report["data"]["nullspace"]["dim"], 1);
    assert_eq!(report["data"]["equal"], true);

    ws.write("same.json", r#"{"k0": 1, "l0": 0, "m": 2, "lambda": [["1"], ["1"]]}"#);
    let (code, report) = ws.json(&["invariants", "-a", "same.json"]);
    assert_eq!(code, 0);
    assert_eq!(report["data"]["closed_form"]["dim"], 4);
    assert_eq!(report["data"]["equal"], true);

    let (code, report) = ws.json(&["invariants", "-a", "dim4.json", "--degree", "3"]);
    assert_eq!(code, 0);
    let basis = report["data"]["nullspace"]["basis"].as_array().unwrap();
    assert_eq!(basis.len(), report["data"]["nullspace"]["dim"].as_u64().unwrap() as usize);
    assert!(basis.iter().all(|v| v.as_object().unwrap().keys().all(|k| k.split('^').count() == 3)));

    let out = ws.run(&["invariants", "-a", "dim4.json", "--degree", "3", "--mode", "closed-form"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ws.run(&["invariants", "-a", "dim4.json", "--degree", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cocycle_and_coboundary_dimensions() {
    let ws = Workspace::new();
    let (code, report) = ws.json(&["cocycles", "-a", "dim3.json", "--basis", "basis.json"]);
    assert_eq!(code, 0);
    assert_eq!(summary(&report), "dims (4, 2), H¹ dim 2");
    let basis: Vec<Value> = serde_json::from_str(&fs::read_to_string(ws.path("basis.json")).unwrap()).unwrap();
    assert_eq!(basis.len(), 4);
    for (k, b) in basis.iter().enumerate() {
        let name = format!("b{k}.json");
        ws.write(&name, &b.to_string());
        let (code, report) = ws.json(&["decompose", "-x", &name]);
        assert_eq!(code, 0, "{report}");
    }

    let (_, report) = ws.json(&["cocycles", "-a", "dim4.json"]);
    assert_eq!(report["data"]["cocycle_dim"], 9);

    ws.write("g2.json", r#"{"k0": 1, "l0": 0, "m": 2, "lambda": [["1"], ["2"]]}"#);
    let (code, report) = ws.json(&["cocycles", "-a", "g2.json"]);
    assert_eq!(code, 0);
    assert_eq!(report["data"]["cocycle_dim"], report["data"]["cocycle_dim_dense"]);
    assert_eq!(report["data"]["assembly_paths_agree"], true);
    let (code, report) = ws.json(&["coboundaries", "-a", "g2.json"]);
    assert_eq!(code, 0);
    assert_eq!(report["data"]["paths_agree"], true);
}

#[test]
fn decompose_examples() {
    let ws = Workspace::new();
    dim3_cochain(&ws, "x.json", [1, 1, 1, 1]);
    let (code, report) = ws.json(&["decompose", "-x", "x.json"]);
    assert_eq!(code, 0);
    let data = &report["data"];
    assert_eq!(data["r"]["s1"], serde_json::json!({"d1^d2": "1"}));
    let r0 = data["r0"].as_object().unwrap();
    assert!(!r0.is_empty());
    assert!(r0.keys().all(|k| k.starts_with("s1^d")));

    ws.cochain("cob.json", "dim3.json", r#"{"s1": {"s1^d1": "1"}, "d2": {"d1^d2": "-1"}}"#);
    let (code, report) = ws.json(&["decompose", "-x", "cob.json"]);
    assert_eq!(code, 0);
    assert_eq!(report["data"]["r_is_zero"], true);

    ws.cochain("bad.json", "dim3.json", r#"{"d1": {"d1^d2": "1"}}"#);
    let (code, report) = ws.json(&["decompose", "-x", "bad.json"]);
    assert_eq!(code, 1);
    assert_eq!(report["verdict"], "fail");
    assert!(report["data"]["witness"].as_str().unwrap().contains("d1^d2"));
}

#[test]
fn bialgebra_decisions() {
    let ws = Workspace::new();
    dim3_cochain(&ws, "ok.json", [1, 1, 0, 1]);
    let (code, report) = ws.json(&["check-bialgebra", "-x", "ok.json"]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "pass");

    dim3_cochain(&ws, "no.json", [0, 0, 1, 1]);
    let (code, report) = ws.json(&["check-bialgebra", "-x", "no.json", "-a", "dim3.json"]);
    assert_eq!(code, 1);
    assert_eq!(report["data"]["witness"], "J(s1*,d1*,d2*) = -2 s1*");

    // c11 = c11^(1) = 1, every other parameter zero
    ws.cochain(
        "d4.json",
        "dim4.json",
        r#"{"s1": {"s1^d1": "1"}, "d1": {"s1^d1": "1"}, "d2": {"s1^d2": "1", "d1^d2": "-1"}}"#,
    );
    let (code, report) = ws.json(&["check-bialgebra", "-x", "d4.json"]);
    assert_eq!(code, 0, "{report}");
}

#[test]
fn schouten_and_cybe() {
    let ws = Workspace::new();
    ws.write("r1.json", r#"{"algebra": "dim3.json", "entries": {"d1^d2": "1"}}"#);
    ws.write("r2.json", r#"{"algebra": "dim3.json", "entries": {"s1^d1": "1"}}"#);
    ws.write("r4.json", r#"{"algebra": "dim4.json", "entries": {"s1^z1": "1", "z1^d1": "1"}}"#);

    let (code, report) = ws.json(&["cybe", "-r", "r1.json"]);
    assert_eq!(code, 0);
    assert_eq!(report["data"]["class"], "triangular");

    let (_, report) = ws.json(&["cybe", "-r", "r2.json"]);
    assert_eq!(report["data"]["class"], "invariant_nonzero");
    assert_eq!(report["data"]["bracket_square"], serde_json::json!({"s1^d1^d2": "2"}));

    let (_, report) = ws.json(&["cybe", "-r", "r4.json"]);
    assert_eq!(report["data"]["class"], "triangular");

    let (code, report) = ws.json(&["schouten", "-r", "r2.json", "-r", "r1.json"]);
    assert_eq!(code, 0);
    assert_eq!(report["data"]["oracle_agrees"], true);

    let out = ws.run(&["schouten", "-r", "r2.json", "-r", "r4.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ws.run(&["cybe", "-r", "r4.json", "-a", "dim3.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_is_rejected() {
    let ws = Workspace::new();
    let cases = [
        (r#"{"s1": {"d1^s1": "1"}}"#, "canonical order (expected s1^d1)"),
        (r#"{"s1": {"d1^d1": "1"}}"#, "canonical order"),
        (r#"{"s1": {"z1^d1": "1"}}"#, "z1"),
        (r#"{"s2": {"d1^d2": "1"}}"#, "s2"),
        (r#"{"s1": {"d1^d2": "0.5"}}"#, "0.5"),
        (r#"{"s1": {"d1^d2": "1/0"}}"#, "1/0"),
    ];
    for (k, (entries, needle)) in cases.iter().enumerate() {
        let name = format!("m{k}.json");
        ws.cochain(&name, "dim3.json", entries);
        let out = ws.run(&["check-bialgebra", "-x", &name]);
        assert_eq!(out.status.code(), Some(2), "{entries}");
        assert!(stderr(&out).contains(needle), "{entries}: {}", stderr(&out));
        assert!(stderr(&out).contains(&name));
    }
    ws.write("extra.json", r#"{"k0": 1, "l0": 0, "m": 1, "lambda": [["1"]], "n": 3}"#);
    assert_eq!(ws.run(&["info", "-a", "extra.json"]).status.code(), Some(2));
    ws.write("shape.json", r#"{"k0": 1, "l0": 0, "m": 2, "lambda": [["1"]]}"#);
    assert_eq!(ws.run(&["info", "-a", "shape.json"]).status.code(), Some(2));
    ws.write("noalg.json", r#"{"entries": {"s1": {"d1^d2": "1"}}}"#);
    assert_eq!(ws.run(&["decompose", "-x", "noalg.json"]).status.code(), Some(2));
    assert_eq!(
        ws.run(&["decompose", "-x", "noalg.json", "-a", "dim3.json"]).status.code(),
        Some(0)
    );
    assert_eq!(ws.run(&["info", "-a", "missing.json"]).status.code(), Some(2));
    assert_eq!(ws.run(&["verify-paper", "--case", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_paper_cases() {
    let ws = Workspace::new();
    let (code, report) = ws.json(&["verify-paper", "--case", "dim3"]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "pass");
    let claims = report["data"]["cases"][0]["claims"].as_array().unwrap();
    assert!(claims.iter().all(|c| c["verdict"] == "pass"));

    let (code, report) = ws.json(&["verify-paper", "--case", "lemma"]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "pass");

    let (code, report) = ws.json(&["verify-paper", "--case", "dim4"]);
    assert_eq!(code, 1);
    let failing: Vec<&Value> = report["data"]["cases"][0]["claims"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["verdict"] == "fail")
        .collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|c| c["witness"].is_string()));
}

#[test]
fn verify_paper_is_deterministic() {
    let ws = Workspace::new();
    let a = ws.run(&["verify-paper", "--format", "json"]);
    let b = ws.run(&["verify-paper", "--format", "json", "-o", "b.json"]);
    assert!(b.stdout.is_empty());
    assert_eq!(a.stdout, fs::read(ws.path("b.json")).unwrap());
    assert_eq!(a.status.code(), b.status.code());
    let report: Value = serde_json::from_slice(&a.stdout).unwrap();
    let names: Vec<&str> = report["data"]["cases"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
    assert_eq!(names.len(), 6);
    let code = a.status.code().unwrap();
    assert_eq!(code == 0, report["verdict"] == "pass");
}

fn leaves(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                leaves(&p, x, out);
            }
        }
        Value::Array(a) if !a.is_empty() => {
            for (i, x) in a.iter().enumerate() {
                leaves(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push((prefix.into(), s.clone())),
        other => out.push((prefix.into(), other.to_string())),
    }
}

#[test]
fn text_form_is_derived_from_json() {
    let ws = Workspace::new();
    dim3_cochain(&ws, "x.json", [0, 0, 1, 1]);
    for args in [
        vec!["info", "-a", "dim3.json"],
        vec!["check-bialgebra", "-x", "x.json"],
        vec!["invariants", "-a", "dim4.json", "--degree", "3"],
    ] {
        let (_, report) = ws.json(&args);
        let text = stdout(&ws.run(&args));
        let mut all = Vec::new();
        leaves("", &report, &mut all);
        for (path, value) in all {
            let found = text.lines().any(|line| {
                line.starts_with(&path)
                    && line[path.len()..].trim_start() == value
                    && line[path.len()..].starts_with("  ")
            });
            assert!(found, "{path} = {value} missing from\n{text}");
        }
    }
}

#[test]
fn relative_algebra_paths_follow_the_cochain_file() {
    let ws = Workspace::new();
    fs::create_dir(ws.path("sub")).unwrap();
    ws.write("sub/alg.json", DIM3);
    ws.write("sub/x.json", r#"{"algebra": "alg.json", "entries": {"s1": {"d1^d2": "1"}}}"#);
    let out = ws.run(&["decompose", "-x", Path::new("sub").join("x.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}
