use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    p.to_string_lossy().into_owned()
}

fn curvlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn ring_summary_of_r3() {
    let o = curvlab(&["ring", &fixture("r3.toml")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("e = 6, length = 6, embdim = 3, dim = 0, CI = false"), "{s}");
    let o = curvlab(&["ring", &fixture("r3.toml"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["e"], 6);
    assert_eq!(v["ci"], false);
}

#[test]
fn betti_of_periodic_module() {
    let o = curvlab(&["betti", &fixture("r3.toml"), "--module", &fixture("mod-a.toml"), "--steps", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), vec!["1"; 13].join(" "));
}

#[test]
fn audit_third_passes_and_exits_zero() {
    let o = curvlab(&["audit", "third", &fixture("r3.toml"), "--module", &fixture("mod-bc.toml")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("2 > 1") && s.ends_with("overall: PASS\n"), "{s}");
}

#[test]
fn setup_violation_exits_one() {
    let o = curvlab(&["audit", "first", &fixture("r1.toml")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("SETUP_VIOLATION"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(curvlab(&["betti", &fixture("r3.toml"), "--steps", "5"]).status.code(), Some(2));
    assert_eq!(curvlab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(curvlab(&["preset", "nope"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "[ring]\nvars = [\"x\"]\nideal = [\"x^2\"]\ncolor = \"red\"\n").unwrap();
    assert_eq!(curvlab(&["ring", bad.to_str().unwrap()]).status.code(), Some(2));
    let o = curvlab(&["audit", "third", &fixture("r3.toml"), "--module", &fixture("mod-a.toml"), "--i0", "0"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn budget_exceeded_exits_three() {
    let o = curvlab(&["betti", &fixture("r3.toml"), "--steps", "20", "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn json_is_byte_identical() {
    let args = ["audit", "invariants", &fixture("r3.toml"), "--count", "4", "--seed", "3", "--json"];
    let a = curvlab(&args);
    let b = curvlab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
}

#[test]
fn presets_pass_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    for name in ["ex1", "msquare", "hypersurface", "modx"] {
        assert_eq!(curvlab(&["preset", name, "--out", out]).status.code(), Some(0));
    }
    for ring in ["r1.toml", "r2.toml", "r3.toml"] {
        let path = dir.path().join(ring);
        let o = curvlab(&["audit", "invariants", path.to_str().unwrap(), "--count", "5", "--steps", "6"]);
        assert_eq!(o.status.code(), Some(0), "{ring}: {}", stdout(&o));
    }
    let r4 = dir.path().join("r4.toml");
    let o = curvlab(&["audit", "modx", r4.to_str().unwrap(), "--x", "x"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = curvlab(&["audit", "modx", r4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = curvlab(&["audit", "modx", r4.to_str().unwrap(), "--x", "y"]);
    assert_eq!(o.status.code(), Some(2));
    let fixed = std::fs::read_to_string(fixture("r3.toml")).unwrap();
    assert_eq!(std::fs::read_to_string(dir.path().join("r3.toml")).unwrap(), fixed);
}

#[test]
fn homology_commands() {
    let r3 = fixture("r3.toml");
    let ma = fixture("mod-a.toml");
    let o = curvlab(&["tor", &r3, "--module", &ma, "--module2", &ma, "--steps", "6"]);
    assert!(stdout(&o).starts_with("tor      3 3 3 3 3 3 3"), "{}", stdout(&o));
    let o = curvlab(&["ext", &r3, "--module", &ma, "--module2", &ma, "--steps", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let o = curvlab(&["injcurv", &r3, "--steps", "8"]);
    assert!(stdout(&o).starts_with("bass     1 3 7 15"), "{}", stdout(&o));
    let o = curvlab(&["resolve", &r3, "--module", &ma, "--steps", "6"]);
    assert!(stdout(&o).contains("d1: 1 x 1\n  [a]"), "{}", stdout(&o));
    let o = curvlab(&["curv", &r3, "--module", &ma, "--steps", "8", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["curvature"]["classification"], "periodic");
}
