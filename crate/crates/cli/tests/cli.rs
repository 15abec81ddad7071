use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qaffine(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qaffine")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn single_segment_check_reports_polynomial() {
    let o = qaffine(&["check", "thm-7.6", "--n", "3", "--segments", "1@0:2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("P_2(u) = u - 1"), "{}", stdout(&o));
}

#[test]
fn linked_pair_polynomials() {
    let o = qaffine(&["drinfeld", "--n", "2", "--segments", "1@0:1,1@4:1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("P_1(u) = (u - 1)(u - q^-2)"), "{out}");
    assert!(out.contains("P_2(u) = 1"), "{out}");

    let o = qaffine(&["--json", "drinfeld", "--n", "2", "--segments", "1@0:1,1@4:1"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["degrees"], serde_json::json!([2, 0]));
}

#[test]
fn malformed_segments_exit_with_usage_error() {
    let o = qaffine(&["build", "--segments", "1@0:0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position"), "{}", stderr(&o));

    let o = qaffine(&["drinfeld", "--segments", "1@0:1,2#1:1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position 7"), "{}", stderr(&o));
}

#[test]
fn usage_errors() {
    assert_eq!(qaffine(&["check", "thm-9.9"]).status.code(), Some(2));
    assert_eq!(qaffine(&["--backend", "rational:1", "check", "eq-12"]).status.code(), Some(2));
    assert_eq!(qaffine(&["--backend", "float", "check", "eq-12"]).status.code(), Some(2));
    assert_eq!(qaffine(&["check", "eq-12", "--n", "0"]).status.code(), Some(2));
    assert_eq!(qaffine(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn rank_bound_needs_override() {
    let o = qaffine(&["check", "thm-5.5", "--n", "1", "--ell", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("SKIP"));
    let o = qaffine(&["check", "thm-5.5", "--n", "1", "--ell", "2", "--force"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn exit_codes_agree_across_backends() {
    for backend in ["symbolic", "rational:5/3", "rational:-2/7"] {
        let o = qaffine(&["--backend", backend, "check", "all", "--n", "2", "--ell", "1,2"]);
        assert_eq!(o.status.code(), Some(0), "{backend}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

fn write_part(dir: &Path, bundle: &Value, key: &str) -> String {
    let path = dir.join(format!("{key}.json"));
    std::fs::write(&path, serde_json::to_string(&bundle[key]).unwrap()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn build_output_round_trips_through_relations() {
    let dir = tempfile::tempdir().unwrap();
    for backend in ["symbolic", "rational:5/3"] {
        let bundle_path = dir.path().join("bundle.json");
        let b = bundle_path.to_str().unwrap();
        let o = qaffine(&["--backend", backend, "build", "--n", "2", "--segments", "1@0:1,2@2:1", "--output", b]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let bundle: Value = serde_json::from_str(&std::fs::read_to_string(&bundle_path).unwrap()).unwrap();
        assert_eq!(bundle["hecke"]["algebra"], "Hhat");
        assert_eq!(bundle["quantum"]["algebra"], "Uhat");
        let hecke = write_part(dir.path(), &bundle, "hecke");
        let quantum = write_part(dir.path(), &bundle, "quantum");

        let reports: Vec<Vec<u8>> = [b, hecke.as_str(), quantum.as_str()]
            .iter()
            .map(|f| {
                let o = qaffine(&["--backend", backend, "--json", "relations", "--module-file", f]);
                assert_eq!(o.status.code(), Some(0), "{f}: {}", stderr(&o));
                o.stdout
            })
            .collect();
        assert_eq!(reports[0], reports[1]);
        assert_eq!(reports[0], reports[2]);
        let v: Value = serde_json::from_slice(&reports[0]).unwrap();
        assert_eq!(v["pass"], true);
        assert_eq!(v["dim"], 9);
    }
}

#[test]
fn broken_module_fails_relations() {
    let dir = tempfile::tempdir().unwrap();
    let o = qaffine(&["build", "--n", "2", "--segments", "1@0:2"]);
    let mut bundle: Value = serde_json::from_slice(&o.stdout).unwrap();
    let x0 = bundle["quantum"]["generators"]["x+0"].as_array_mut().unwrap();
    x0[0][2] = Value::from("7");
    let path = dir.path().join("broken.json");
    std::fs::write(&path, bundle.to_string()).unwrap();
    let o = qaffine(&["relations", "--module-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("FAIL"));
}

#[test]
fn character_and_isomorphism() {
    let dir = tempfile::tempdir().unwrap();
    let o = qaffine(&["--json", "character", "--n", "2", "--segments", "1@0:1,2@2:1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let total: u64 = v["character"].as_array().unwrap().iter().map(|r| r["multiplicity"].as_u64().unwrap()).sum();
    assert_eq!(total, 9);

    let mut paths = Vec::new();
    for (k, segs) in ["1@0:1,2@2:1", "2@2:1,1@0:1", "1@0:2"].iter().enumerate() {
        let p = dir.path().join(format!("m{k}.json"));
        let o = qaffine(&["build", "--n", "2", "--segments", segs, "--output", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        paths.push(p.to_string_lossy().into_owned());
    }
    assert_eq!(qaffine(&["isomorphic", &paths[0], &paths[1]]).status.code(), Some(0));
    assert_eq!(qaffine(&["isomorphic", &paths[0], &paths[2]]).status.code(), Some(1));
}
