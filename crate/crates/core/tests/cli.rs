//! End-to-end runs of the `bc` binary.

use std::process::Command;

use brauer_chen::group::{parse_group_file, ReflectionGroup};
use brauer_chen::scalars::CycNumber;
use serde_json::Value;

fn bc(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bc")).args(args).output().expect("bc runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (code, out) = bc(&a);
    (code, serde_json::from_str(&out).expect("json output"))
}

#[test]
fn group_info_examples() {
    let (code, v) = json(&["group-info", "--group", "G:4,2,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 16);
    assert_eq!(v["reflections"], 6);
    assert_eq!(v["orbits"].as_array().unwrap().len(), 3);
    assert!(v["transverse_pairs"].as_array().unwrap().is_empty());
    assert_eq!(v["schema"], 1);

    let (_, v) = json(&["group-info", "--group", "G:3,3,3"]);
    assert_eq!(v["order"], 54);
    assert_eq!(v["reflections"], 9);
    assert_eq!(v["orbits"][0]["quotient_order"], 3);
    assert_eq!(v["orbits"][0]["quotient_cyclic"], true);

    let (_, v) = json(&["group-info", "--group", "G:1,1,2"]);
    assert_eq!(v["order"], 2);
    assert_eq!(v["reflections"], 1);
}

#[test]
fn bad_group_is_an_error() {
    let (code, _) = bc(&["dim", "--group", "G:4,3,2"]);
    assert_eq!(code, 2);
}

#[test]
fn dim_and_gb() {
    let (code, v) = json(&["dim", "--group", "G:3,3,3"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 297);
    let (code, v) = json(&["gb", "--group", "G:4,2,2", "--variant", "chen+1p", "--delta", "2", "--mu", "1", "--cap", "12"]);
    assert_eq!(code, 0);
    assert_eq!(v["dimension"], 28);
    assert_eq!(v["complete"], true);
    assert_eq!(v["variant"], "chen+1p");
}

#[test]
fn capped_gb_fails() {
    let (code, v) = json(&["gb", "--group", "G:4,2,2", "--cap", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["complete"], false);
}

#[test]
fn exports_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let pres = dir.path().join("p.txt");
    let (code, v) = json(&["export", "presentation", "--group", "G:4,2,2", "--out", pres.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["round_trip"], true);
    let text = std::fs::read_to_string(&pres).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("gen ")).count(), 22);

    let (code, v) = json(&["gb", "--group", "G:4,2,2", "--presentation", pres.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["dimension"], 64);

    let lat = dir.path().join("l.json");
    let (code, _) = json(&["export", "lattice", "--group", "G:1,1,3", "--out", lat.to_str().unwrap()]);
    assert_eq!(code, 0);
    let l: Value = serde_json::from_str(&std::fs::read_to_string(&lat).unwrap()).unwrap();
    assert_eq!(l["nodes"].as_array().unwrap().len(), 5);

    for artifact in ["matrices", "gb"] {
        let (code, v) = json(&["export", artifact, "--group", "G:1,1,3"]);
        assert_eq!(code, 0, "{artifact}");
        assert_eq!(v["round_trip"], true);
    }
}

#[test]
fn reps_csv_and_theta_file() {
    let (code, out) = bc(&["reps", "--group", "G:4,2,2", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "orbit_id,theta_label,dim,holds_1prime,holds_1doubleprime,commutant_dim");
    assert_eq!(lines.len(), 13);

    // B2 from explicit matrices; H0 = {x2 = 0}, N0 the diagonal subgroup,
    // theta the sign of the first diagonal entry
    let dir = tempfile::tempdir().unwrap();
    let gf = dir.path().join("g.txt");
    let text = "conductor 1\ndim 2\ngenerator\n0, 1\n1, 0\ngenerator\n1, 0\n0, -1\n";
    std::fs::write(&gf, text).unwrap();
    let (code, v) = json(&["group-info", "--group-file", gf.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 8);
    let w = ReflectionGroup::build(&parse_group_file(text).unwrap()).unwrap();
    let h0 = w.hyperplane_of_form(&[CycNumber::zero(), CycNumber::one()]).unwrap();
    let theta = dir.path().join("t.json");
    let body = format!(
        r#"{{"hyperplane": {h0}, "label": "sign", "generators": [
            {{"element": [["-1","0"],["0","1"]], "image": [["-1"]]}},
            {{"element": [["1","0"],["0","-1"]], "image": [["1"]]}}]}}"#
    );
    std::fs::write(&theta, body).unwrap();
    let (code, v) = json(&["reps", "--group-file", gf.to_str().unwrap(), "--theta-file", theta.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["module"]["dim"], 2);
    assert_eq!(v["commutant_dim"], 1);
}

#[test]
fn checks_report_status() {
    for (cmd, group) in [("assoc-check", "G:1,1,3"), ("vogel-check", "G:1,1,4"), ("cfw-check", "G:2,2,4")] {
        let (code, v) = json(&[cmd, "--group", group]);
        assert_eq!(code, 0, "{cmd}");
        assert_eq!(v["status"], "pass");
    }
    let (code, v) = json(&["cfw-check", "--group", "G:1,1,3", "--map", "literal"]);
    assert_eq!(code, 1);
    assert!(v["counterexample"].is_string());
}

#[test]
fn flat_flavors() {
    for flavor in ["chen", "lattice-group", "lattice-brauer"] {
        let (code, v) = json(&["flat", "--group", "G:1,1,3", "--flavor", flavor]);
        assert_eq!(code, 0, "{flavor}");
        assert_eq!(v["aggregate"], true);
    }
}

#[test]
fn seeded_reports_are_identical() {
    let args = ["assoc-check", "--group", "G:3,3,3", "--triple-budget", "1", "--seed", "5", "--format", "json"];
    let (_, a) = bc(&args);
    let (_, b) = bc(&args);
    assert_eq!(a, b);
}

#[test]
fn reproduce_variant_subset() {
    let (code, v) = json(&["reproduce-paper", "--variant", "chen+1pp"]);
    assert_eq!(code, 0);
    let claims = v["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 1);
    assert!(claims[0]["detail"].as_str().unwrap().starts_with("dimension 40"));
}
