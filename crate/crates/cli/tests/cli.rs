use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lllcolor")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", path.to_str().unwrap()]);
    let o = run(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}; rerun with UPDATE_GOLDEN=1", path.display()));
    assert_eq!(actual, expected, "{name} differs from the golden file");
}

#[test]
fn help_matches_golden_files() {
    golden("help.txt", &stdout(&run(&["--help"])));
    for sub in ["gen", "bounds", "lll-check", "color", "verify"] {
        let o = run(&[sub, "--help"]);
        assert!(o.status.success());
        golden(&format!("{sub}.txt"), &stdout(&o));
    }
}

#[test]
fn bounds_examples() {
    let o = run(&["bounds", "--variant", "acyclic-edge", "--delta", "3", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["colors"], 20);
    assert_eq!(v[0]["constant"], 9.613000165);

    let o = run(&["bounds", "--variant", "frugal", "--delta", "3", "--beta", "2", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["colors"], 19);

    let o = run(&["bounds", "--delta", "3"]);
    let text = stdout(&o);
    assert!(text.starts_with("variant"));
    assert_eq!(text.lines().filter(|l| !l.starts_with("note")).count(), 8);
}

#[test]
fn color_and_verify_a_four_regular_graph() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "g.col", &["--kind", "random-regular", "-n", "50", "-d", "4", "--seed", "3"]);
    let g = g.to_str().unwrap();
    let o = run(&["color", "--graph", g, "--variant", "acyclic-edge", "--colors", "29", "--seed", "7"]);
    assert!(o.status.success());
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["valid"], true);
    assert_eq!(report["colors"], 29);

    let path = dir.path().join("c.json");
    fs::write(&path, &o.stdout).unwrap();
    let v = run(&["verify", "--graph", g, "--coloring", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(v.status.code(), Some(0));
    let verdict: Value = serde_json::from_slice(&v.stdout).unwrap();
    assert_eq!(verdict["valid"], true);

    // same report, stricter property
    let v = run(&["verify", "--graph", g, "--coloring", path.to_str().unwrap(), "--variant", "proper-edge"]);
    assert_eq!(v.status.code(), Some(0));
}

#[test]
fn verify_reports_violations() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "c4.col", &["--kind", "cycle", "-n", "4"]);
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"variant":"acyclic-edge","colors":2,"assignment":[0,1,0,1]}"#).unwrap();
    let o = run(&["verify", "--graph", g.to_str().unwrap(), "--coloring", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("invalid"));
}

#[test]
fn seed_ranges_are_ordered_and_reproducible() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "p.col", &["--kind", "petersen"]);
    let args = ["color", "--graph", g.to_str().unwrap(), "--variant", "star", "--colors", "28", "--seeds", "0..8"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let seeds: Vec<u64> = stdout(&a)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["seed"].as_u64().unwrap())
        .collect();
    assert_eq!(seeds, (0..8).collect::<Vec<_>>());
}

#[test]
fn stage_one_expansion_and_delta_plus_2() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "p.col", &["--kind", "petersen"]);
    let g = g.to_str().unwrap();
    let o = run(&["color", "--graph", g, "--variant", "eta-stage:2", "--colors", "7", "--expand", "--seed", "1"]);
    assert!(o.status.success());
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["variant"], "acyclic-edge");
    assert_eq!(r["colors"], 14);

    let t = gen(&dir, "t.col", &["--kind", "complete", "-n", "4", "--subdivide", "20"]);
    let o = run(&["color", "--graph", t.to_str().unwrap(), "--variant", "delta-plus-2"]);
    assert!(o.status.success());
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["colors"], 5);
    assert_eq!(r["valid"], true);
}

#[test]
fn lll_check_round_trip_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "k33.col", &["--kind", "complete-bipartite", "--sides", "3", "3"]);
    let export = dir.path().join("dg.json");
    let o = run(&[
        "lll-check", "--graph", g.to_str().unwrap(), "--variant", "frugal:2", "--colors", "19",
        "--export", export.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["pass"], true);

    let again = run(&["lll-check", "--input", export.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(again.stdout, o.stdout);

    let o = run(&["lll-check", "--graph", g.to_str().unwrap(), "--variant", "frugal:2", "--colors", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn errors_exit_with_one() {
    assert_eq!(run(&["bounds", "--delta", "2"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["color", "--graph", "/definitely/missing", "--variant", "star", "--colors", "3"]).status.code(), Some(1));
    assert_eq!(run(&["gen", "--kind", "cycle"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
