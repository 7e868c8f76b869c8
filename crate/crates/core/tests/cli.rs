use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_nsgraph");

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn validate_prints_canonical_forms() {
    let out = run(&["validate", "--compact", "2,2,3,1,1,2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("minimum=011000101\n"));
    assert!(text.contains("full=00110001011\n"));
    assert!(text.contains("vertices=11\n"));

    let out = run(&["validate", "--bits", "011000101"]);
    assert!(stdout(&out).contains("compact=2,2,3,1,1,2\n"));
    let out = run(&["validate", "--full-bits", "00110001011"]);
    assert!(stdout(&out).contains("compact=2,2,3,1,1,2\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["validate", "--compact", "1,2,3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["validate", "--full-bits", "1001"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["validate"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let missing = fixture("no_such_file.txt");
    assert_eq!(
        run(&[
            "distance",
            missing.to_str().unwrap(),
            missing.to_str().unwrap()
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn indices_fast_and_oracle_agree() {
    let fast = stdout(&run(&["indices", "--compact", "1,1,1,1,7,1"]));
    let oracle = stdout(&run(&[
        "indices",
        "--compact",
        "1,1,1,1,7,1",
        "--mode",
        "oracle",
    ]));
    assert_eq!(fast, oracle);
    assert!(fast.contains("wiener=117\n"));
    assert!(fast.contains("estrada=63.36\n"));

    let path = fixture("nsg_1_1_1_1_7_1.txt");
    let from_graph = stdout(&run(&[
        "indices",
        "--graph",
        path.to_str().unwrap(),
        "--mode",
        "fast",
    ]));
    assert_eq!(from_graph, fast);

    let csv = stdout(&run(&["indices", "--compact", "1,1,1,1,7,1", "--csv"]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "edges,entropy,randic,wiener,szeged,copi,estrada,gutman,resolvent"
    );
    assert!(lines[1].starts_with("15,3.90689"));

    let not_nsg = fixture("c4.txt");
    let out = run(&[
        "indices",
        "--graph",
        not_nsg.to_str().unwrap(),
        "--mode",
        "fast",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn distance_examples() {
    let f = |name| fixture(name).to_str().unwrap().to_string();
    let d = |a: &str, b: &str, metric: &str| {
        let out = run(&["distance", a, b, "--metric", metric]);
        (out.status.code(), stdout(&out))
    };
    assert_eq!(
        d(&f("k2.txt"), &f("k2.txt"), "walk"),
        (Some(0), "0.000000\n".into())
    );
    assert_eq!(
        d(&f("k2.txt"), &f("empty2.txt"), "spectral"),
        (Some(0), "1.414214\n".into())
    );
    assert_eq!(
        d(&f("c4.txt"), &f("c4_relabeled.txt"), "spectral"),
        (Some(0), "0.000000\n".into())
    );
    assert_eq!(d(&f("k2.txt"), &f("empty2.txt"), "walk").0, Some(2));
    assert_eq!(d(&f("c4.txt"), &f("k5.txt"), "spectral").0, Some(2));
}

#[test]
fn approximate_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "approximate",
        fixture("nsg_1_1_1_1_7_1.txt").to_str().unwrap(),
        "--perturbation",
        "move",
        "--steps",
        "20000",
        "--seed",
        "3",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report = fs::read_to_string(dir.path().join("report.csv")).unwrap();
    assert!(report.contains("best_compact,\"1,1,1,1,7,1\"\n"));
    let timeline = fs::read_to_string(dir.path().join("timeline.csv")).unwrap();
    assert_eq!(timeline.lines().count(), 101);
    let indices = fs::read_to_string(dir.path().join("indices.csv")).unwrap();
    assert_eq!(indices.lines().count(), 3);
}

#[test]
fn approximate_rejects_bad_schedules() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "approximate",
        fixture("k5.txt").to_str().unwrap(),
        "--t0",
        "1e-9",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}
