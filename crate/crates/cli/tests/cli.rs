use std::path::PathBuf;
use std::process::{Command, Output};

fn fdw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fdw")).args(args).output().expect("spawn fdw")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn manufactured_row() {
    let o = fdw(&["simulate", "--bulk", "manufactured", "--courant", "1/2", "--nmax", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "4,2,0.25"), "{out}");

    let o = fdw(&["simulate", "--bulk", "manufactured", "--courant", "1/2", "--nmax", "4", "--exact"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "4,2,1/4"));
}

#[test]
fn compare_front_csv() {
    let o = fdw(&[
        "compare",
        "--bulk",
        "leapfrog",
        "--courant",
        "-1/2",
        "--boundary",
        "upwind.json",
        "--zone",
        "front",
        "--nmax",
        "10000",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,j,zone,simulated,predicted,abs_err,scaled_err"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows.last().unwrap()[0], "10000");
    for r in &rows {
        assert_eq!(r.len(), 7);
        assert_eq!(r[2], "front");
        let sim: f64 = r[3].parse().unwrap();
        let pred: f64 = r[4].parse().unwrap();
        let abs: f64 = r[5].parse().unwrap();
        assert_eq!(abs, (sim - pred).abs());
    }
}

#[test]
fn stability_verdict_json() {
    let o = fdw(&["stability", "--boundary", "ex29.json", "--courant", "-1/2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["class"], "UnstableSimpleZero");
    let z = &v["zeros"][0];
    assert!((z["re"].as_f64().unwrap() + 1.0).abs() < 1e-9);
    assert!(z["im"].as_f64().unwrap().abs() < 1e-9);

    let o = fdw(&["stability", "--boundary", "upwind", "--courant", "-1/2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["class"], "Stable");
}

#[test]
fn validation_errors_exit_2() {
    for args in [
        &["simulate", "--courant", "1/2", "--nmax", "4", "--bogus"][..],
        &["no-such-command"],
        &["simulate", "--courant", "abc", "--nmax", "4"],
        &["simulate", "--bulk", "manufactured", "--courant", "3/2", "--nmax", "4"],
        &["predict", "--courant", "-1/2", "--n", "10", "--nu", "1/4"],
        &["stability", "--courant", "-1/2", "--boundary", "missing-file.json"],
    ] {
        let o = fdw(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn numerical_failure_exit_3() {
    let o = fdw(&["l2", "--courant", "-1/2", "--boundary", "ex29.json"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("numerical"));
}

#[test]
fn dump_config_round_trip() {
    let o = fdw(&["predict", "--courant", "-1/2", "--nu", "1/4", "--n", "400", "--dump-config"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"]["command"], "predict");
    assert_eq!(v["command"]["courant"], "-1/2");
    assert_eq!(v["command"]["nu"], "1/4");
    assert_eq!(v["format"], "csv");
}

#[test]
fn identical_config_identical_bytes() {
    let a = scratch("det_a.csv");
    let b = scratch("det_b.csv");
    for (path, threads) in [(&a, "1"), (&b, "4")] {
        let o = Command::new(env!("CARGO_BIN_EXE_fdw"))
            .env("FDW_THREADS", threads)
            .args(["compare", "--courant", "-1/2", "--nu", "1/4", "--nmax", "4000", "-o", path.to_str().unwrap()])
            .output()
            .unwrap();
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(!x.is_empty());
    assert_eq!(x, y);
}

#[test]
fn floats_round_trip() {
    let o = fdw(&["simulate", "--courant", "-1/2", "--nmax", "30", "--snapshots", "30"]);
    for l in stdout(&o).lines().skip(1) {
        let v = l.rsplit(',').next().unwrap();
        let x: f64 = v.parse().unwrap();
        assert_eq!(format!("{x:?}"), v);
    }
}

#[test]
fn oracle_check_passes() {
    let o = fdw(&["oracle-check", "--which", "manufactured", "--courant", "1/3,1/2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().skip(1).all(|l| l.ends_with(",0")), "{out}");
}
