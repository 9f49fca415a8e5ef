use std::path::Path;
use std::process::Command;

use pcross_cli::instance::{parse_instance, parse_value, InstanceError};
use pcross_core::paction::instances::{desk, desk_twisted};
use serde_json::{json, Value};

fn pcross(args: &[&str]) -> (i32, Value, String) {
    let out =
        Command::new(env!("CARGO_BIN_EXE_pcross")).args(args).current_dir(env!("CARGO_MANIFEST_DIR")).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v, String::from_utf8(out.stderr).unwrap())
}

fn shipped(name: &str) -> String {
    format!("{}/../../instances/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn shipped_desk_parses_to_the_desk_instance() {
    let inst = parse_instance(Path::new(&shipped("desk"))).unwrap();
    assert_eq!(inst.action(), &desk());
    assert_eq!(inst.tpa, desk_twisted());
    assert!(inst.validate().is_valid());
}

#[test]
fn minimal_trivial_instance() {
    let inst = parse_value(&json!({"group": {"kind": "cyclic", "n": 1}, "ring": {"moduli": [2]}}), "t").unwrap();
    assert_eq!(inst.action().group().order(), 1);
    assert_eq!(inst.name, "t");
}

#[test]
fn non_idempotent_is_a_semantic_error_with_pointer() {
    let v = json!({
        "group": {"kind": "cyclic", "n": 2},
        "ring": {"moduli": [3, 3]},
        "paction": {"idem": {"1": [2, 0]}, "alpha": {"1": "identity"}}
    });
    let e = parse_value(&v, "bad").unwrap_err();
    assert!(matches!(e, InstanceError::Semantic { .. }));
    assert_eq!(e.to_string(), "/paction/idem/1: not idempotent");
}

#[test]
fn axiom_violations_point_into_the_file() {
    // alpha_g swaps the factors but 1_g = (1,0) is not fixed by the swap
    let v = json!({
        "group": {"kind": "cyclic", "n": 2},
        "ring": {"moduli": [3, 3]},
        "paction": {"idem": {"1": [1, 0]}, "alpha": {"1": {"map": {"0": 0, "3": 6, "6": 3}}}}
    });
    let e = parse_value(&v, "bad").unwrap_err();
    assert_eq!(e.pointer().map(|p| p.starts_with("/paction")), Some(true), "{e}");
    let twist = json!({
        "group": {"kind": "cyclic", "n": 2},
        "ring": {"moduli": [3, 3]},
        "paction": {"idem": {"1": [1, 0]}, "alpha": {"1": "identity"}},
        "twist": {"0,1": [2, 0]}
    });
    assert_eq!(parse_value(&twist, "bad").unwrap_err().pointer(), Some("/twist/0,1"));
}

#[test]
fn schema_errors() {
    let e = parse_value(&json!({"ring": {"moduli": [3]}}), "x").unwrap_err();
    assert_eq!(e.pointer(), Some("/group"));
    let e = parse_value(&json!({"group": {"kind": "free"}, "ring": {"moduli": [3]}}), "x").unwrap_err();
    assert_eq!(e.pointer(), Some("/group/kind"));
}

#[test]
fn validate_desk_exits_zero() {
    let (code, v, _) = pcross(&["validate", "--instance", &shipped("desk")]);
    assert_eq!(code, 0);
    assert_eq!(v["valid"], true);
}

#[test]
fn cohomology_degree_two_is_c2() {
    let (code, v, _) = pcross(&["cohomology", "--instance", &shipped("desk"), "--degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["H"], "C2");
    assert_eq!(v["orders"]["Z"], "8");
}

#[test]
fn trivial_sequence_is_all_trivial() {
    let (code, v, _) = pcross(&["sequence", "--instance", &shipped("trivial")]);
    assert_eq!(code, 0);
    assert_eq!(v["all_pass"], true);
    for h in ["h1", "h2", "h3"] {
        assert_eq!(v[h]["h"], "1");
    }
}

#[test]
fn error_exit_codes() {
    let (code, _, err) = pcross(&["validate", "--instance", "/nonexistent/x.json"]);
    assert_eq!(code, 2);
    let e: Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(e["error"], "IoError");
    let (code, _, err) = pcross(&["sequence", "--instance", "desk", "--cap-families", "1"]);
    assert_eq!(code, 3);
    assert!(err.contains("SizeCapExceeded"));
}

#[test]
fn crossed_tables_and_checks() {
    let (code, v, _) = pcross(&["crossed", "--instance", "swap", "--tables"]);
    assert_eq!(code, 0);
    assert_eq!(v["size"], "81");
    assert_eq!(v["tables"]["mul"].as_array().unwrap().len(), 81);
    for check in ["assoc", "pentagon", "obstruction"] {
        let (code, v, _) = pcross(&["crossed", "--instance", "desk", "--check", check]);
        assert_eq!((code, &v["pass"]), (0, &json!(true)), "{check}");
    }
}

#[test]
fn non_cocycle_twist_fails_the_pentagon() {
    let dir = std::env::temp_dir().join(format!("pcross-twist-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("twist.json");
    std::fs::write(&file, r#"{"degree": 2, "values": {"1,0": [2, 0]}}"#).unwrap();
    let f = file.to_str().unwrap();
    let (code, v, _) = pcross(&["crossed", "--instance", "desk", "--twist", f, "--check", "pentagon"]);
    assert_eq!(code, 1);
    assert!(v["witness"].is_array());
    let (code, v, _) = pcross(&["obstruction", "--instance", "desk", "--twist", f]);
    assert_eq!(code, 0, "the obstruction law holds even when the twist is not a cocycle");
    assert_eq!((v["unit"].clone(), v["twist_is_cocycle"].clone()), (json!(false), json!(false)));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn zeta_and_oracle() {
    let (code, v, _) = pcross(&["zeta", "--instance", "desk"]);
    assert_eq!(code, 0);
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
    let (code, v, _) = pcross(&["oracle", "--instance", "desk"]);
    assert_eq!(code, 0);
    assert_eq!(v["all_pass"], true);
}

#[test]
fn out_flag_writes_the_report() {
    let file = std::env::temp_dir().join(format!("pcross-report-{}.json", std::process::id()));
    let (code, _, _) = pcross(&["sequence", "--instance", "desk", "--out", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(v["schema_version"], 1);
    std::fs::remove_file(file).unwrap();
}

#[test]
fn report_keys_match_the_schema() {
    let schema: Value = serde_json::from_str(
        &std::fs::read_to_string(format!("{}/../../docs/report.schema.json", env!("CARGO_MANIFEST_DIR"))).unwrap(),
    )
    .unwrap();
    let (_, v, _) = pcross(&["sequence", "--instance", "desk"]);
    let keys = |o: &Value| o.as_object().unwrap().keys().cloned().collect::<Vec<_>>();
    // serde_json maps iterate in key order, so both sides come out sorted
    assert_eq!(keys(&v), keys(&schema["properties"]));
    let props = &schema["properties"];
    for (field, def) in
        [("automorphisms", &props["automorphisms"]), ("pics", &props["pics"]), ("h2", &schema["$defs"]["cohomology"])]
    {
        assert_eq!(keys(&v[field]), keys(&def["properties"]), "{field}");
    }
}
