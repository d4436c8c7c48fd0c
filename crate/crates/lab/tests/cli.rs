use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_banach-geom")).args(args).env_remove("BANACH_GEOM_SEED").output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn check_exit_codes_follow_the_verdict() {
    let out = bin(&["check", "linf_2", "hlur"]);
    assert_eq!(out.status.code(), Some(1));
    let v = report(&out);
    assert_eq!(v["status"], "fails");
    assert_eq!(v["certificate"]["x"], serde_json::json!([1.0, 1.0]));
    let out = bin(&["check", "l2_2", "rotund"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["status"], "holds-exact");
    let out = bin(&["check", "stadium_default", "hlur"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(report(&out)["status"].as_str().unwrap().starts_with("holds"));
}

#[test]
fn unknown_names_exit_two() {
    let out = bin(&["check", "nowhere", "hlur"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown space"));
    let out = bin(&["check", "l2_2", "sparkle"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown property"));
}

#[test]
fn verify_mode_reproduces_a_certificate() {
    let cert = report(&bin(&["check", "linf_2", "acs"]))["certificate"].to_string();
    let out = bin(&["check", "linf_2", "acs", "--verify", &cert]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["status"], "fails");
    let out = bin(&["check", "l2_2", "acs", "--verify", &cert]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(report(&out)["status"], "inconclusive");
}

#[test]
fn repro_prints_the_square_values() {
    let out = bin(&["repro", "example-5-5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    assert_eq!(v["norm_sum"], 2.0);
    assert_eq!(v["functional_value"], 1.0);
    assert_eq!(v["distance"], 1.0);
    assert_eq!(v["face"], serde_json::json!([[1.0, 1.0]]));
    let v = report(&bin(&["repro", "example-5-5", "--perturb", "1e-3"]));
    assert!((v["distance"].as_f64().unwrap() - 0.999).abs() < 1e-12);
    assert_eq!(v["asserted"], false);
}

#[test]
fn daugavet_and_farthest_reports() {
    let v = report(&bin(&["daugavet", "linf_2", "--matrix", "[[0,1],[0,0]]"]));
    assert_eq!(v["spectrum"]["daugavet_residual"], 0.0);
    assert!((v["spectrum"]["eigen_residual_at_norm"].as_f64().unwrap() - 0.5).abs() < 1e-9);
    let out = bin(&["daugavet", "linf_2"]);
    assert_eq!(out.status.code(), Some(1));
    let sq = "[[1,1],[1,-1],[-1,1],[-1,-1]]";
    let v = report(&bin(&["farthest", "linf_2", "--points", sq, "--query", "2,0"]));
    assert_eq!(v["far_distance"], 3.0);
    let out = bin(&["farthest", "l2_2", "--points", sq, "--samples", "500"]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    assert_eq!(v["far_indices"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(v["hull_equality"]["status"], "holds-numerical");
}

#[test]
fn converge_reports_profiles() {
    let out = bin(&["converge", "linf_2", "--point", "1,1"]);
    assert_eq!(out.status.code(), Some(1));
    let v = report(&out);
    assert_eq!(v["verdict"]["certificate"]["kind"], "face-coincidence");
    assert_eq!(v["profile"]["deltas"].as_array().unwrap().len(), 20);
    let v = report(&bin(&["converge", "l2_2", "--point", "1,0", "--generator", "cap-shrink"]));
    assert_eq!(v["generator"], "cap-shrink");
    let out = bin(&["converge", "l2_2", "--point", "1,0", "--generator", "spiral"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seed_comes_from_the_environment_when_not_given() {
    let out = Command::new(env!("CARGO_BIN_EXE_banach-geom"))
        .args(["check", "l2_2", "hs"])
        .env("BANACH_GEOM_SEED", "17")
        .output()
        .unwrap();
    assert_eq!(report(&out)["stats"]["seed"], 17);
    let out = Command::new(env!("CARGO_BIN_EXE_banach-geom"))
        .args(["check", "l2_2", "hs", "--seed", "3"])
        .env("BANACH_GEOM_SEED", "17")
        .output()
        .unwrap();
    assert_eq!(report(&out)["stats"]["seed"], 3);
}

#[test]
fn json_out_and_custom_catalogue() {
    let dir = std::env::temp_dir().join(format!("banach-geom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cat = dir.join("cat.json");
    std::fs::write(&cat, r#"{"l3_2": {"dim": 2, "family": {"kind": "lp", "p": 3}}}"#).unwrap();
    let out_path = dir.join("out.json");
    let out = bin(&[
        "check",
        "l3_2",
        "rotund",
        "--catalogue",
        cat.to_str().unwrap(),
        "--json-out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read(&out_path).unwrap();
    assert_eq!(written, out.stdout);
    assert!(written.ends_with(b"\n"));
    let info = report(&bin(&["space", "info", "hexagon"]));
    assert_eq!(info["polyhedral"], true);
    assert_eq!(info["ball_vertices"].as_array().unwrap().len(), 6);
    std::fs::remove_dir_all(dir).unwrap();
}
