use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eigencubic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn scratch(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("eigencubic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn analyze_two_cubes() {
    let v = json(&["analyze", "x0^3+x1^3"]);
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["delta"], 0);
    assert_eq!(v["eigenpoints"], 3);
    assert_eq!(v["regular"]["degree"], 3);
}

#[test]
fn analyze_cone_over_sphere() {
    let v = json(&["analyze", "x0*(x1^2+x2^2+x3^2)"]);
    assert_eq!((v["delta"].as_i64(), v["epsilon"].as_i64()), (Some(2), Some(1)));
}

#[test]
fn analyze_output_is_reingestible() {
    let cubic = "x0^3+x1^2*x2+x2*x3^2";
    let plane = run(&["grass", "plane", cubic]);
    let path = scratch("reingest.json", &String::from_utf8(plane.stdout).unwrap());
    let t = json(&["grass", "recover", &path]);
    let quadrics: Vec<&str> = t["tensor"].as_array().unwrap().iter().map(|q| q.as_str().unwrap()).collect();
    let a = json(&["analyze", cubic]);
    let b = json(&["analyze", &quadrics.join(" ; "), "--n", "3"]);
    assert_eq!(a["regular"], b["regular"]);
    assert_eq!(a["irregular"], b["irregular"]);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["analyze", "x0^2+x1^2"]), 3);
    assert_eq!(code(&["analyze", "x0^3+*x1"]), 2);
    assert_eq!(code(&["analyze", "x0^3+y^3"]), 2);
    assert_eq!(code(&["solve", "x0*(x1^2+x2^2)"]), 4);
    assert_eq!(code(&["--field", "nonsense", "analyze", "x0^3"]), 2);
}

#[test]
fn positive_dimension_points_to_analyze() {
    let out = run(&["solve", "x0*(x1^2+x2^2)"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("eigencubic analyze"));
}

#[test]
fn solve_real_counts() {
    let v = json(&["solve", "x0*x1*x2+x3^3"]);
    assert_eq!(v["realCount"], 9);
    let v = json(&["solve", "x0^3+x1^3+x2^3+x3^3"]);
    assert_eq!(v["realCount"], 15);
    assert!(v["maxResidual"].as_f64().unwrap() <= 1e-8);
    let exact = v["points"].as_array().unwrap().iter().filter(|p| p["exact"].is_array()).count();
    assert_eq!(exact, 15);
}

#[test]
fn solve_is_deterministic() {
    let a = run(&["solve", "x0^2*x1+x0^2*x2+x1*x2^2+x3^3", "--seed", "3"]);
    let b = run(&["solve", "x0^2*x1+x0^2*x2+x1*x2^2+x3^3", "--seed", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn tables_pass() {
    for (t, n) in [("1", 6), ("2", 10), ("3", 16)] {
        let v = json(&["tables", t]);
        assert_eq!(v["passed"], n, "table {t}");
        assert_eq!(v["total"], n, "table {t}");
    }
}

#[test]
fn built_in_extension_instance() {
    let v = json(&["analyze", "--paper-example", "table2:delta-1-eps0"]);
    assert_eq!(v["field"], "theta-gaussian");
    assert_eq!((v["delta"].as_i64(), v["epsilon"].as_i64()), (Some(-1), Some(0)));
    assert_eq!(code(&["analyze", "--paper-example", "no-such-cell"]), 2);
}

#[test]
fn gaussian_field_input() {
    let v = json(&["--field", "gaussian", "analyze", "x0^2*(x1+i*x2)"]);
    assert_eq!((v["delta"].as_i64(), v["epsilon"].as_i64()), (Some(-1), Some(1)));
}

#[test]
fn custom_extension_field() {
    let v = json(&["--field", "ext:t^2-2", "analyze", "x0^3+t*x1^3+x2^3"]);
    assert_eq!(v["delta"], 0);
    assert_eq!(v["eigenpoints"], 7);
}

#[test]
fn grass_plane_check_recover() {
    let plane = run(&["grass", "plane", "x0^3+x1^2*x2+x2*x3^2"]);
    assert!(plane.status.success());
    let path = scratch("plane.json", &String::from_utf8(plane.stdout).unwrap());
    let c = json(&["grass", "check", &path]);
    assert_eq!(c["lambdaSquaredZero"], true);
    assert_eq!(c["lambdaBlockInvertible"], true);
    let r = json(&["grass", "recover", &path]);
    assert_eq!(r["cubic"], "x0^3 + x1^2*x2 + x2*x3^2");
    let s = json(&["grass", "symmetric?", &path]);
    assert_eq!(s["symmetric"], true);
}

#[test]
fn grass_recover_rejects_bad_plane() {
    let rows = ["1,0,0,0,0,0,0,0,0,0,0,0,0,0,1", "0,1,0,0,0,0,0,0,0,0,0,1,0,0,0", "0,0,1,0,0,0,0,0,0,0,0,0,1,0,0", "0,0,0,1,0,0,0,0,0,0,0,0,0,1,0"];
    let path = scratch("bad.txt", &rows.join("\n"));
    assert_eq!(code(&["grass", "recover", &path]), 3);
    let c = json(&["grass", "check", &path]);
    assert_eq!(c["holds"], false);
}

#[test]
fn grass_pluecker_layout() {
    let v = json(&["grass", "pluecker", "x0^3+x1^3+x2^3+x3^3"]);
    let p = v["pluecker"].as_array().unwrap();
    assert_eq!(p.len(), 1365);
    let subsets = v["subsets"].as_array().unwrap();
    assert_eq!(subsets[0], serde_json::json!([0, 1, 2, 3]));
    let k = subsets.iter().position(|s| *s == serde_json::json!([10, 11, 12, 13])).unwrap();
    assert_eq!(p[k], "1");
}

#[test]
fn grass_binary_hurwitz() {
    let v = json(&["grass", "binary-hurwitz"]);
    assert_eq!(v["ratio"], "-1");
    assert_eq!(v["agreesUpToSign"], true);
    assert!(!v["printedDiff"]["anomalies"].as_array().unwrap().is_empty());
}

#[test]
fn fit_fano_points() {
    let path = scratch("fano.txt", "1,0,0\n0,1,0\n0,0,1\n1,1,0\n1,0,1\n0,1,1\n1,1,1\n");
    let v = json(&["fit", &path]);
    assert_eq!(v["dimension"], 1);
    assert_eq!(v["cubics"][0], "x0^3 + x1^3 + x2^3");
}

#[test]
fn text_output() {
    let out = run(&["--text", "analyze", "x0^3+x1^3+x2^3"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.lines().any(|l| l == "delta: 0"));
}
