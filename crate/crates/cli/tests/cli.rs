use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const FIXTURES: [&str; 9] = [
    "ex1",
    "ex2",
    "ex3",
    "z2-standard",
    "z2-characters",
    "iwahori-order",
    "clusters-p2-1-5",
    "clusters-p2-1-3-5-7",
    "clusters-p3-1-4-7",
];

fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

fn fixture(name: &str) -> PathBuf {
    manifest_dir().join("fixtures").join(format!("{name}.json"))
}

fn repred(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_repred"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn analyze(name: &str, format: &str) -> Output {
    repred(&["analyze", fixture(name).to_str().unwrap(), "--format", format])
}

/// Set `REPRED_BLESS=1` to rewrite the golden files from the current output.
#[test]
fn golden_json_reports() {
    let bless = std::env::var_os("REPRED_BLESS").is_some();
    for name in FIXTURES {
        let out = analyze(name, "json");
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let golden = manifest_dir().join("tests/golden").join(format!("{name}.json"));
        if bless {
            std::fs::write(&golden, &out.stdout).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&golden).unwrap();
        assert_eq!(stdout(&out), expected, "{name} differs from its golden report");
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for name in FIXTURES {
        for format in ["json", "text"] {
            assert_eq!(analyze(name, format).stdout, analyze(name, format).stdout, "{name} {format}");
        }
    }
}

#[test]
fn text_reports() {
    let ex1 = stdout(&analyze("ex1", "text"));
    assert!(ex1.contains("verdict: InconclusiveNonSemisimpleReduction"));
    assert!(ex1.contains("proves nothing"));

    let ex2 = stdout(&analyze("ex2", "text"));
    assert!(ex2.contains("IrreducibleByFullReduction"));
    assert!(ex2.contains("component: M_2(F_2), dim 4"));

    let z2 = stdout(&analyze("z2-characters", "text"));
    assert!(z2.contains("verdict: SemisimpleByTheorem"));
    assert!(z2.contains("component dims: [1, 1]"));
}

#[test]
fn json_report_fields() {
    let ex1: serde_json::Value = serde_json::from_slice(&analyze("ex1", "json").stdout).unwrap();
    assert_eq!(ex1["reduced"]["semisimple"], false);
    assert_eq!(ex1["reduced"]["radical_dim"], 1);
    assert_eq!(ex1["alpha_dims"], serde_json::json!([2]));

    let ex3: serde_json::Value = serde_json::from_slice(&analyze("ex3", "json").stdout).unwrap();
    assert_eq!(ex3["alpha_dims"], serde_json::json!([2, 4]));
    assert_eq!(ex3["verdict"], "IrreducibleByFullReduction");

    let z2: serde_json::Value = serde_json::from_slice(&analyze("z2-characters", "json").stdout).unwrap();
    assert_eq!(z2["component_dims"], serde_json::json!([1, 1]));
}

#[test]
fn input_echo_reproduces_the_hash() {
    let out: serde_json::Value = serde_json::from_slice(&analyze("ex3", "json").stdout).unwrap();
    let dir = std::env::temp_dir().join(format!("repred-echo-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let echo = dir.join("echo.json");
    std::fs::write(&echo, serde_json::to_string(&out["input"]).unwrap()).unwrap();
    let again: serde_json::Value =
        serde_json::from_slice(&repred(&["analyze", echo.to_str().unwrap(), "--format", "json"]).stdout).unwrap();
    assert_eq!(again, out);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cluster_subcommand_matches_fixture() {
    let out = repred(&["cluster", "--p", "2", "--chars", "1,5", "--max-level", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let a: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&analyze("clusters-p2-1-5", "json").stdout).unwrap();
    assert_eq!(a["cluster"], b["cluster"]);
    assert_eq!(a["input_sha256"], b["input_sha256"]);
}

#[test]
fn order_reduce_subcommand() {
    let out = repred(&["order-reduce", fixture("iwahori-order").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("radical dim 2"));
    let wrong = repred(&["order-reduce", fixture("ex1").to_str().unwrap()]);
    assert_eq!(wrong.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(repred(&["analyze", "/nonexistent/input.json"]).status.code(), Some(2));
    assert_eq!(
        repred(&["cluster", "--p", "2", "--chars", "1,2", "--max-level", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        repred(&["cluster", "--p", "4", "--chars", "1", "--max-level", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        repred(&["cluster", "--p", "2", "--chars", "1/0", "--max-level", "1"]).status.code(),
        Some(2)
    );
    // a step budget below the chain length is reported as an internal failure
    let out = repred(&["analyze", fixture("ex3").to_str().unwrap(), "--max-steps", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("fixpoint not reached"));
    assert_eq!(repred(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn invalid_files_exit_2() {
    let dir = std::env::temp_dir().join(format!("repred-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        ("not-json", "{"),
        ("unknown-field", r#"{"p": 2, "n": 2, "mode": "representation", "generators": [], "colour": 1}"#),
        ("wrong-mode-field", r#"{"p": 2, "n": 2, "mode": "order", "order_basis": [[["1","0"],["0","1"]]], "chars": ["1"]}"#),
        ("non-integral", r#"{"p": 2, "n": 1, "mode": "representation", "generators": [[["1/2"]]]}"#),
        ("not-unitary", r#"{"p": 2, "n": 2, "mode": "representation", "generators": [[[1,1],[0,1]]], "v_lattice_basis": [["1","0"],["0","1/2"]]}"#),
        ("ragged", r#"{"p": 2, "n": 2, "mode": "representation", "generators": [[[1,1],[0]]]}"#),
        ("order-not-closed", r#"{"p": 2, "n": 2, "mode": "order", "order_basis": [[[1,0],[0,1]], [[0,1],[0,0]], [[0,0],[1,0]]]}"#),
    ];
    for (name, body) in cases {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, body).unwrap();
        let out = repred(&["analyze", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    }
    std::fs::remove_dir_all(&dir).unwrap();
}
