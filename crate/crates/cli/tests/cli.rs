//! End-to-end runs of the `dimer` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn dimer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dimer"))
        .args(args)
        .env_remove("DIMER_FIXTURES")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn reports_carry_the_schema_version_and_command() {
    let out = dimer(&["type", "gr37"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "type");
    assert_eq!(v["result"]["k"], 3);
    assert_eq!(v["result"]["n"], 7);
}

#[test]
fn text_format() {
    let out = dimer(&["--format", "text", "type", "gr37"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "(3, 7)");
}

#[test]
fn fixtures_are_written_and_validate() {
    let dir = tempfile::tempdir().unwrap();
    let out = dimer(&["fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    for name in [
        "triangle",
        "gr37",
        "inconsistent",
        "uniform-1-3",
        "uniform-2-4",
        "uniform-2-5",
        "uniform-3-6",
    ] {
        let path = dir.path().join(format!("{name}.json"));
        assert_eq!(
            code(&dimer(&["validate", path.to_str().unwrap()])),
            0,
            "{name}"
        );
    }
    let check = |name: &str| {
        code(&dimer(&[
            "check",
            dir.path().join(format!("{name}.json")).to_str().unwrap(),
        ]))
    };
    assert_eq!(check("gr37"), 0);
    assert_eq!(check("inconsistent"), 1);
}

#[test]
fn fixture_directory_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&dimer(&["fixtures", dir.path().to_str().unwrap()])), 0);
    std::fs::rename(dir.path().join("gr37.json"), dir.path().join("mine.json")).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_dimer"))
        .args(["type", "mine"])
        .env("DIMER_FIXTURES", dir.path())
        .output()
        .unwrap();
    assert_eq!(json(&out)["result"]["n"], 7);
}

#[test]
fn verify_exit_codes() {
    let out = dimer(&["verify", "gr37"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["result"]["passed"], true);
    assert_eq!(v["result"]["seed"], 0);
    assert_eq!(v["result"]["checks"].as_array().unwrap().len(), 13);

    let out = dimer(&["verify", "inconsistent"]);
    assert_eq!(code(&out), 1);
    let checks = json(&out)["result"]["checks"].clone();
    let status = |name: &str| {
        checks
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["name"] == name)
            .unwrap()["status"]
            .as_str()
            .unwrap()
            .to_string()
    };
    assert_eq!(status("validate"), "pass");
    assert_eq!(status("check_postnikov"), "fail");
    assert_eq!(status("eta_unimodular"), "fail");
}

#[test]
fn verify_reports_are_byte_stable() {
    let a = dimer(&["--seed", "11", "verify", "uniform-2-4"]);
    let b = dimer(&["--seed", "11", "verify", "uniform-2-4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn structural_errors_give_a_json_error_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, r#"{"vertices": [], "arrows": [{"id": 0, "tail": 0, "head": 1, "is_boundary": false}], "faces": []}"#)
        .unwrap();
    let out = dimer(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["error"]["kind"], "structural");
    assert_eq!(code(&dimer(&["type", "no-such-model"])), 2);
}

#[test]
fn build_uniform_then_opposite_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("u.json");
    let f = file.to_str().unwrap();
    assert_eq!(
        code(&dimer(&["build-uniform", "-k", "2", "-n", "5", "-o", f])),
        0
    );
    let once = dir.path().join("op.json");
    assert_eq!(
        code(&dimer(&["opposite", f, "-o", once.to_str().unwrap()])),
        0
    );
    let twice = dimer(&["opposite", once.to_str().unwrap()]);
    let original: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(
        serde_json::from_slice::<Value>(&twice.stdout).unwrap(),
        original
    );
}

#[test]
fn standardised_model_is_printed_as_a_model() {
    let out = dimer(&["standardise", "gr37", "--color", "black"]);
    let v = json(&out);
    assert!(v["faces"].as_array().unwrap().len() > 9);
    assert!(v.get("schema_version").is_none());
}

#[test]
fn matchings_and_labels() {
    let v = json(&dimer(&["matchings", "gr37", "--boundary", "135"]));
    assert_eq!(v["result"]["count"], 3);
    assert!(v["result"]["matchings"]
        .as_array()
        .unwrap()
        .iter()
        .any(|m| m["arrows"] == serde_json::json!([4, 8, 10, 16, 17])));
    let v = json(&dimer(&["labels", "gr37", "--target"]));
    let row = v["result"]["labels"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["vertex"]["name"] == "247")
        .unwrap()
        .clone();
    assert_eq!(row["label"], "{1,5,7}");
    let v = json(&dimer(&["positroid", "gr37"]));
    assert_eq!(v["result"]["size"], 30);
}

#[test]
fn extremes_wedge_and_projective_matchings() {
    let v = json(&dimer(&["extremes", "gr37", "--boundary", "{1,3,5}"]));
    assert_eq!(v["result"]["count"], 3);
    assert_ne!(v["result"]["min"], v["result"]["max"]);
    let v = json(&dimer(&["ms-matchings", "gr37"]));
    let row = v["result"]["matchings"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["vertex"]["name"] == "247")
        .unwrap()
        .clone();
    assert_eq!(row["arrows"], serde_json::json!([4, 8, 10, 16, 17]));
    assert_eq!(row["boundary"], "{1,3,5}");
    assert_eq!(code(&dimer(&["verify-msmatch", "gr37"])), 0);
    let v = json(&dimer(&["wedge", "triangle", "--arrow", "0"]));
    assert_eq!(v["result"]["tiles"][0]["name"], "b");
    assert_eq!(code(&dimer(&["wedge", "triangle", "--arrow", "99"])), 2);
}

#[test]
fn lattice_ensemble_exit_codes() {
    assert_eq!(code(&dimer(&["lattice", "gr37", "--check-ensemble"])), 0);
    assert_eq!(
        code(&dimer(&["lattice", "inconsistent", "--check-ensemble"])),
        1
    );
    let v = json(&dimer(&["lattice", "gr37"]));
    assert_eq!(v["result"]["unimodular"], true);
}

#[test]
fn kclass_of_the_drawn_matching_is_a_single_projective() {
    let v = json(&dimer(&["kclass", "gr37", "--matching", "4,8,10,16,17"]));
    assert_eq!(v["result"]["rank"], 1);
    assert_eq!(v["result"]["eta_agrees"], true);
    assert_eq!(v["result"]["class"].as_object().unwrap().len(), 1);
    assert_eq!(code(&dimer(&["kclass", "gr37", "--matching", "4,8"])), 2);
}

#[test]
fn partition_functions() {
    let v = json(&dimer(&["ms", "uniform-2-4", "--subset", "13"]));
    assert_eq!(
        v["result"]["polynomial"]["terms"].as_array().unwrap().len(),
        2
    );
    assert_eq!(v["result"]["standardised_copy"], true);
    let black = json(&dimer(&["ms", "uniform-2-4", "--subset", "13", "--black"]));
    assert_eq!(black["result"]["color"], "black");
    let v = json(&dimer(&["twist-expr", "gr37", "--subset", "135"]));
    let total: i64 = v["result"]["polynomial"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["coefficient"].as_i64().unwrap())
        .sum();
    assert_eq!(total, 3);
    assert_eq!(code(&dimer(&["ms", "gr37", "--subset", "12"])), 2);
}

fn write_weights(dir: &Path, arrows: usize, weight: &str) -> String {
    let map: serde_json::Map<String, Value> = (0..arrows)
        .map(|a| (a.to_string(), Value::from(weight)))
        .collect();
    let path = dir.join("w.json");
    std::fs::write(&path, serde_json::to_string(&map).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn measurements_and_plucker_relations() {
    let v = json(&dimer(&["measure", "gr37", "--weights", "unit"]));
    assert_eq!(v["result"]["measurement"]["values"]["{1,3,5}"], "3");
    assert_eq!(v["result"]["measurement"]["values"]["{2,3,4}"], "0");
    assert_eq!(
        code(&dimer(&[
            "--seed",
            "3",
            "measure",
            "uniform-2-5",
            "--weights",
            "random",
            "--check-plucker"
        ])),
        0
    );

    let dir = tempfile::tempdir().unwrap();
    let arrows = json(&dimer(&["lattice", "uniform-2-4"]))["result"]["arrow_ids"]
        .as_array()
        .unwrap()
        .len();
    let weights = write_weights(dir.path(), arrows, "1/2");
    let v = json(&dimer(&[
        "measure",
        "uniform-2-4",
        "--weights",
        &weights,
        "--check-plucker",
    ]));
    assert_eq!(v["result"]["plucker"]["passed"], true);
    let bad = write_weights(dir.path(), arrows, "-1");
    assert_eq!(
        code(&dimer(&["measure", "uniform-2-4", "--weights", &bad])),
        2
    );
}

#[test]
fn resolution_and_rotation() {
    let out = dimer(&["resolution", "gr37", "--matching", "4,8,10,16,17"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["result"]["saturation"], 2);
    assert_eq!(v["result"]["pieces_checked"], 40);
    assert_eq!(
        code(&dimer(&[
            "resolution",
            "gr37",
            "--matching",
            "4,8,10,16,17",
            "--dmax",
            "1"
        ])),
        1
    );

    let v = json(&dimer(&[
        "rotate",
        "gr37",
        "--matching",
        "4,8,10,16,17",
        "--vertex",
        "247",
        "--degree",
        "2",
    ]));
    assert_eq!(v["result"]["identity_holds"], true);
    assert_eq!(
        code(&dimer(&[
            "rotate",
            "gr37",
            "--matching",
            "4,8,10,16,17",
            "--vertex",
            "247",
            "--degree",
            "0"
        ])),
        2
    );
}

#[test]
fn strands_report_the_permutation() {
    let v = json(&dimer(&["strands", "gr37"]));
    assert_eq!(v["result"]["permutation"]["1"], 5);
    assert_eq!(v["result"]["strands"].as_array().unwrap().len(), 7);
}
