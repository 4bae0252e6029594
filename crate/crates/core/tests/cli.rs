use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn momentkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_momentkit")).args(args).output().unwrap()
}

fn json_file(p: &Path) -> Value {
    serde_json::from_slice(&std::fs::read(p).unwrap()).unwrap()
}

fn with_suffix(p: &Path, suffix: &str) -> PathBuf {
    let mut s = p.as_os_str().to_os_string();
    s.push(suffix);
    PathBuf::from(s)
}

fn close(v: &Value, x: f64) -> bool {
    (v.as_f64().unwrap() - x).abs() <= 1e-12
}

#[test]
fn minimal_check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = out.to_str().unwrap();
    let [py, dg, nt, nh, missing] =
        ["pauli_y.json", "diag.json", "near_tangent.json", "not_hermitian.json", "missing.json"].map(data);
    let cases = [
        (vec!["--matrix", &py], 0, Some("MINIMAL")),
        (vec!["--matrix", &dg], 1, Some("NOT_MINIMAL")),
        (vec!["--matrix", &nt, "--tol", "1e-13", "--max-iter", "200"], 2, Some("INDETERMINATE")),
        (vec!["--matrix", &nh], 3, None),
        (vec!["--matrix", &missing], 3, None),
    ];
    for (args, code, verdict) in cases {
        let _ = std::fs::remove_file(&out);
        let mut argv = vec!["minimal-check"];
        argv.extend(args.iter().copied());
        argv.extend(["--out", o]);
        let r = momentkit(&argv);
        assert_eq!(r.status.code(), Some(code), "{argv:?}: {}", String::from_utf8_lossy(&r.stderr));
        if let Some(v) = verdict {
            assert_eq!(json_file(&out)["verdict"], v);
            assert_eq!(json_file(&with_suffix(&out, ".run.json"))["exit_code"], code);
        }
    }
}

#[test]
fn malformed_input_reports_position() {
    let r = momentkit(&["centroid", "--subspace", &data("malformed.json")]);
    assert_eq!(r.status.code(), Some(3));
    let err = String::from_utf8_lossy(&r.stderr);
    assert!(err.contains("malformed.json:3:"), "{err}");

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\": 2,\n \"vectors\": [[[1, 0], [0, 0]]],\n \"basis\": 1}\n").unwrap();
    let r = momentkit(&["centroid", "--subspace", bad.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&r.stderr).contains("bad.json:3:"));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(momentkit(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(momentkit(&["centroid"]).status.code(), Some(3));
    let h = momentkit(&["--help"]);
    assert_eq!(h.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&h.stdout).contains("minimal-check"));
    assert_eq!(momentkit(&["--version"]).status.code(), Some(0));
    let s = data("plane_v.json");
    assert_eq!(momentkit(&["curve", "--subspace", &s, "--j", "1", "--k", "2"]).status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let o = dir.path().join("c.csv").display().to_string();
    assert_eq!(momentkit(&["curve", "--subspace", &s, "--j", "2", "--k", "2", "--out", &o]).status.code(), Some(3));
    assert_eq!(momentkit(&["curve", "--subspace", &s, "--j", "0", "--k", "2", "--out", &o]).status.code(), Some(3));
    assert_eq!(momentkit(&["support", "--subspace", &s, "--c", "1,2"]).status.code(), Some(3));
}

#[test]
fn curve_csv_and_ellipse_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("curve.csv");
    let r = momentkit(&["curve", "--subspace", &data("plane_v.json"), "--j", "1", "--k", "2", "--steps", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    let mut reader = csv::Reader::from_path(&out).unwrap();
    assert_eq!(reader.headers().unwrap().iter().collect::<Vec<_>>(), ["t", "x1", "x2", "x3", "mod1", "mod2"]);
    let rows: Vec<Vec<f64>> = reader.records().map(|r| r.unwrap().iter().map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 5);
    for (got, want) in rows[0][1..4].iter().zip([2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0]) {
        assert!((got - want).abs() <= 1e-12);
    }
    let e = json_file(&with_suffix(&out, ".ellipse.json"));
    assert!(close(&e["t0"], std::f64::consts::FRAC_PI_3));
    assert_eq!(e["segment"], false);

    let r = momentkit(&["curve", "--subspace", &data("segment.json"), "--j", "1", "--k", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(json_file(&with_suffix(&out, ".ellipse.json"))["segment"], true);
}

#[test]
fn json_outputs() {
    let r = momentkit(&["centroid", "--subspace", &data("plane_v.json")]);
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    for x in v["centroid"].as_array().unwrap() {
        assert!(close(x, 1.0 / 3.0));
    }
    let report: Value = serde_json::from_slice(r.stderr.trim_ascii()).unwrap();
    assert_eq!(report["command"], "centroid");
    assert_eq!(report["inputs_digest"].as_str().unwrap().len(), 64);

    let r = momentkit(&["support", "--subspace", &data("whole3.json"), "--c", "3,1,2"]);
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert!(close(&v["value"], 3.0));
    let r = momentkit(&["support", "--subspace", &data("e1.json"), "--c", "-1,-2", "--jnr"]);
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v["set"], "jnr");
    assert!(close(&v["value"], 0.0));

    let r = momentkit(&["intersect", "--v", &data("conjugate_v.json"), "--w", &data("conjugate_w.json")]);
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v["status"], "INTERSECT");
    let r = momentkit(&["intersect", "--v", &data("e1.json"), "--w", &data("e2.json")]);
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v["status"], "DISJOINT");
    assert!(v["margin"].as_f64().unwrap() > 1e-9);

    let r = momentkit(&["hausdorff", "--v", &data("conjugate_v.json"), "--w", &data("conjugate_w.json")]);
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert!(close(&v["projector_distance_hs"], 2f64.sqrt()));
}

#[test]
fn csv_outputs_have_headers() {
    let r = momentkit(&["moment-sample", "--subspace", &data("plane_v.json"), "--count", "10", "--seed", "3"]);
    let mut reader = csv::Reader::from_reader(r.stdout.as_slice());
    assert_eq!(reader.headers().unwrap().len(), 3);
    for rec in reader.records() {
        let s: f64 = rec.unwrap().iter().map(|x| x.parse::<f64>().unwrap()).sum();
        assert!((s - 1.0).abs() <= 1e-12);
    }
    let r = momentkit(&["jnr-boundary", "--subspace", &data("plane_v.json"), "--directions", "fibonacci:7"]);
    let mut reader = csv::Reader::from_reader(r.stdout.as_slice());
    assert_eq!(reader.headers().unwrap().len(), 7);
    assert_eq!(reader.records().count(), 7);
}

#[test]
fn thread_setting_is_validated() {
    let run = |t: &str| {
        Command::new(env!("CARGO_BIN_EXE_momentkit"))
            .args(["centroid", "--subspace", &data("plane_v.json")])
            .env("MOMENTKIT_THREADS", t)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("2"), Some(0));
    assert_eq!(run("0"), Some(3));
    assert_eq!(run("many"), Some(3));
}
