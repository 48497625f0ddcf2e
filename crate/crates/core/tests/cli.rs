use std::path::PathBuf;
use std::process::Command;

use reflekt::symbolic::{truncate, SpaceId};
use reflekt::order::PosetJson;
use reflekt::FinitePoset;
use serde_json::Value;

fn reflekt(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_reflekt")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = reflekt(args);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}")))
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("reflekt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn johnstone_is_not_well_filtered() {
    let (code, v) = json(&["check", "--space", "builtin:johnstone", "--property", "well-filtered"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness"]["space"], "johnstone");
    assert!(v["witness"]["clauses"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn expect_controls_the_exit_code() {
    let args = ["check", "builtin:nat-top", "--property", "sober"];
    assert_eq!(reflekt(&[&args[..], &["--expect", "true"]].concat()).0, 0);
    assert_eq!(reflekt(&[&args[..], &["--expect", "false"]].concat()).0, 1);
}

#[test]
fn ideals_of_a_chain() {
    let path = temp_file("chain3.json", r#"{"elements":["0","1","2"],"leq":[["0","1"],["1","2"]]}"#);
    let (code, v) = json(&["ideals", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let ideals = v["ideals"].as_array().unwrap();
    assert_eq!(ideals.len(), 3);
    assert!(ideals.iter().all(|i| !i["principal"].is_null()));
}

#[test]
fn every_builtin_truncates_to_a_valid_poset() {
    for id in SpaceId::ALL {
        let tag = format!("builtin:{id}");
        let (code, out, err) = reflekt(&["truncate", &tag, "--trunc", "3"]);
        assert_eq!(code, 0, "{err}");
        let raw: PosetJson = serde_json::from_str(&out).unwrap();
        assert_eq!(FinitePoset::from_json(&raw).unwrap(), truncate(id, 3).unwrap());
    }
}

#[test]
fn usage_errors_exit_2_with_one_line() {
    for args in [
        &["frobnicate"][..],
        &["check", "builtin:nat"],
        &["reflect", "builtin:nowhere"],
        &["laws", "--law", "L99"],
        &["laws", "--scale", "colour=3"],
        &["witness", "builtin:nat", "--dot"],
        &["ideals", "/no/such/file.json"],
    ] {
        let (code, out, err) = reflekt(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(out.is_empty());
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn cyclic_poset_is_rejected() {
    let path = temp_file("cycle.json", r#"{"elements":["a","b"],"leq":[["a","b"],["b","a"]]}"#);
    assert_eq!(reflekt(&["ideals", path.to_str().unwrap()]).0, 2);
}

#[test]
fn single_law_at_small_scale() {
    let (code, v) = json(&["laws", "--law", "L1", "--scale", "carrier=3"]);
    assert_eq!(code, 0);
    let certs = v.as_array().unwrap();
    assert_eq!(certs.len(), 1);
    assert_eq!(certs[0]["law"], "L1-finite-collapse");
    assert_eq!(certs[0]["status"], "pass");
}

#[test]
fn symbolic_reflections() {
    let (code, v) = json(&["reflect", "builtin:nat-ab", "--kind", "wf"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["target"], "q");
    let (_, v) = json(&["sobrify", "builtin:johnstone"]);
    assert!(v["report"]["target"].is_null());
    assert!(v["report"]["note"].as_str().unwrap().starts_with("not a Scott space"));
}

#[test]
fn seeded_extensions_are_deterministic() {
    let path = temp_file("vee.json", r#"{"elements":["a","b","c"],"leq":[["a","c"],["b","c"]]}"#);
    let p = path.to_str().unwrap();
    let run = |seed: &str| reflekt(&["reflect", p, "--topology", "scott", "--seed", seed, "--samples", "5"]).1;
    let first = run("11");
    assert_eq!(first, run("11"));
    let v: Value = serde_json::from_str(&first).unwrap();
    let samples = v["sampled_extensions"].as_array().unwrap();
    assert!(!samples.is_empty());
    assert!(samples.iter().all(|s| s["factorings"] == 1));
}

#[test]
fn dot_draws_hasse_edges() {
    let (code, out, _) = reflekt(&["truncate", "builtin:nat-ab", "--trunc", "2", "--dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    assert_eq!(out.matches("->").count(), 3);
}

#[test]
fn completions_of_a_file_poset() {
    let path = temp_file("v.json", r#"{"elements":["x","y","z"],"leq":[["x","z"],["y","z"]]}"#);
    for verb in [&["dcomplete"][..], &["complete", "--kind", "sob"]] {
        let mut args = verb.to_vec();
        args.push(path.to_str().unwrap());
        let (code, v) = json(&args);
        assert_eq!(code, 0);
        assert_eq!(v["target"]["elements"].as_array().unwrap().len(), 3);
    }
}
