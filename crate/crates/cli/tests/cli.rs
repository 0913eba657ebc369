//! End-to-end runs of the `fracfield` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use fracfield::problem::BoundaryTransform;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracfield")).args(args).output().expect("binary runs")
}

fn value(out: &Output) -> (f64, f64) {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["trunc_bound"].as_f64().unwrap() >= 0.0);
    (v["re"].as_f64().unwrap(), v["im"].as_f64().unwrap())
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

struct Row {
    x: f64,
    y: f64,
    n: f64,
    method: String,
    error_flag: String,
}

fn read_csv(path: &str) -> (String, Vec<Row>) {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().to_string();
    let rows = lines
        .map(|l| {
            let c: Vec<&str> = l.split(',').collect();
            assert_eq!(c.len(), 6, "row {l}");
            Row {
                x: c[0].parse().unwrap(),
                y: c[1].parse().unwrap(),
                n: c[2].parse().unwrap(),
                method: c[4].to_string(),
                error_flag: c[5].to_string(),
            }
        })
        .collect();
    (header, rows)
}

const WAVE: &str = r#"{"kind":"wave","variant":"quantum","alpha":2.0,"theta":0.0,"mu":2.0,"nu":1.0,
    "f":{"preset":"gaussian","width":0.5},"g":{"preset":"zero"},"source":{"preset":"zero"}}"#;
const POISSON_DELTA: &str = r#"{"kind":"poisson","variant":"quantum","alpha":2.0,"theta":0.0,"mu":1.5,"nu":0.5,
    "k":0.0,"f":{"preset":"delta"},"g":{"preset":"zero"},"source":{"preset":"delta_delta"}}"#;
const GRID: &str = r#"{"x_list":[-2.0,-0.5,0.0,0.3,1.1,2.5],"y_list":[0.4,1.0,1.6]}"#;

#[test]
fn eval_ml_exponential() {
    let (re, im) = value(&run(&["eval", "ml", "--alpha", "1", "--beta", "1", "--z", "1"]));
    assert!((re - std::f64::consts::E).abs() <= 1e-12 && im == 0.0);
}

#[test]
fn eval_wright_at_origin() {
    let (re, _) = value(&run(&["eval", "wright", "--a", "-0.5", "--b", "0.5", "--z", "0"]));
    assert!((re - 0.564189583547756).abs() <= 1e-12, "{re}");
}

#[test]
fn eval_foxh_matches_ml() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "h.json", r#"{"m":1,"n":1,"p":1,"q":2,"upper":[[0.0,1.0]],"lower":[[0.0,1.0],[-0.2,1.5]]}"#);
    let h = value(&run(&["eval", "foxh", "--spec", &spec, "--z", "0.8"]));
    let ml = value(&run(&["eval", "ml", "--alpha", "1.5", "--beta", "1.2", "--z", "-0.8"]));
    assert!((h.0 - ml.0).abs() <= 1e-12 * ml.0.abs(), "{h:?} vs {ml:?}");
}

#[test]
fn eval_error_codes() {
    assert_eq!(run(&["eval", "ml", "--alpha", "-1", "--z", "1"]).status.code(), Some(3));
    assert_eq!(run(&["eval", "ml", "--alpha", "one", "--z", "1"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "h.json", "{not json");
    assert_eq!(run(&["eval", "foxh", "--spec", &spec, "--z", "1"]).status.code(), Some(2));
}

#[test]
fn solve_reproduces_dalembert() {
    let dir = tempfile::tempdir().unwrap();
    let problem = write(dir.path(), "p.json", WAVE);
    let grid = write(dir.path(), "g.json", GRID);
    let out = dir.path().join("out.csv").to_str().unwrap().to_string();
    let status = run(&["solve", "--problem", &problem, "--grid", &grid, "--out", &out]);
    assert!(status.status.success(), "{}", String::from_utf8_lossy(&status.stderr));
    let (header, rows) = read_csv(&out);
    assert_eq!(header, "x,y,N,imag_residual,method,error_flag");
    assert_eq!(rows.len(), 18);
    let f = BoundaryTransform::Gaussian { width: 0.5 };
    let data = |x: f64| f.physical(x).unwrap();
    for r in &rows {
        let want = 0.5 * (data(r.x - r.y) + data(r.x + r.y));
        assert!((r.n - want).abs() <= 1e-6, "({}, {}): {} vs {want}", r.x, r.y, r.n);
        assert_eq!(r.method, "pointwise");
        assert!(r.error_flag.is_empty());
    }
}

#[test]
fn solve_rejects_alpha_outside_range() {
    let dir = tempfile::tempdir().unwrap();
    let problem = write(dir.path(), "p.json", &WAVE.replace("\"alpha\":2.0", "\"alpha\":0.5"));
    let grid = write(dir.path(), "g.json", GRID);
    let out = dir.path().join("out.csv").to_str().unwrap().to_string();
    let res = run(&["solve", "--problem", &problem, "--grid", &grid, "--out", &out]);
    assert_eq!(res.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&res.stderr).contains("1 < alpha <= 2"));
}

#[test]
fn series_and_closed_form_agree() {
    let dir = tempfile::tempdir().unwrap();
    let problem = write(dir.path(), "p.json", POISSON_DELTA);
    let grid = write(dir.path(), "g.json", GRID);
    let mut values = Vec::new();
    for method in ["series", "closed_form"] {
        let out = dir.path().join(format!("{method}.csv")).to_str().unwrap().to_string();
        let res = run(&["solve", "--problem", &problem, "--grid", &grid, "--out", &out, "--method", method]);
        assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
        let (_, rows) = read_csv(&out);
        assert!(rows.iter().all(|r| r.method == method && r.error_flag.is_empty()));
        values.push(rows);
    }
    for (s, c) in values[0].iter().zip(&values[1]) {
        assert_eq!((s.x, s.y), (c.x, c.y));
        assert!((s.n - c.n).abs() <= 1e-8 * c.n.abs().max(1e-300), "({}, {}): {} vs {}", s.x, s.y, s.n, c.n);
    }
}

#[test]
fn failing_points_are_flagged() {
    let dir = tempfile::tempdir().unwrap();
    // Delta data without regularization cannot use the pointwise path.
    let problem = write(dir.path(), "p.json", POISSON_DELTA);
    let grid = write(dir.path(), "g.json", GRID);
    let out = dir.path().join("out.csv").to_str().unwrap().to_string();
    let res = run(&["solve", "--problem", &problem, "--grid", &grid, "--out", &out, "--method", "pointwise"]);
    assert_eq!(res.status.code(), Some(3));
    let (_, rows) = read_csv(&out);
    assert!(rows.iter().all(|r| r.n.is_nan() && r.error_flag == "slow_decay"));
}

#[test]
fn verify_identities_passes() {
    let res = run(&["verify", "--suite", "identities"]);
    assert_eq!(res.status.code(), Some(0), "{}", String::from_utf8_lossy(&res.stderr));
    let report: serde_json::Value = serde_json::from_slice(&res.stdout).unwrap();
    assert_eq!(report["passed"], true);
    assert!(report["checks"][0]["error"].as_f64().unwrap() <= report["checks"][0]["tolerance"].as_f64().unwrap());
}

#[test]
fn verify_fails_with_impossible_tolerance() {
    let res = run(&["verify", "--suite", "hfunction", "--tol", "0"]);
    assert_eq!(res.status.code(), Some(1));
}

#[test]
fn verify_is_reproducible_with_seed() {
    let a = run(&["verify", "--suite", "hfunction", "--seed", "11"]);
    let b = run(&["verify", "--suite", "hfunction", "--seed", "11"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
