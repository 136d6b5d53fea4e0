use std::process::Command;

use clap::Parser;
use serde_json::{json, Value};
use selfinj::cli::{run, Cli, Report};

fn exec(args: &[&str]) -> Report {
    let mut full = vec!["selfinj"];
    full.extend_from_slice(args);
    run(&Cli::try_parse_from(full).unwrap())
}

fn tmp(name: &str) -> String {
    let dir = std::env::temp_dir().join(format!("selfinj-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name).to_string_lossy().into_owned()
}

fn write(name: &str, v: &Value) -> String {
    let path = tmp(name);
    std::fs::write(&path, v.to_string()).unwrap();
    path
}

#[test]
fn classify_symmetric_nakayama_algebra() {
    let r = exec(&["classify", "N(2,3)"]);
    assert_eq!(r.code, 0);
    let res = &r.json["result"];
    assert_eq!(res["self_injective"], json!(true));
    assert_eq!(res["weakly_symmetric"], json!(true));
    assert_eq!(res["symmetric"], json!("yes"));
    let r = exec(&["classify", "N(2,2)", "--field", "Q"]);
    assert_eq!(r.json["result"]["symmetric"], json!("no"));
    assert_eq!(r.json["field"], json!("Q"));
}

#[test]
fn envelope_records_run_configuration() {
    let r = exec(&["nakayama", "N(3,3)", "--seed", "17", "--depth", "3", "--max-mult", "2"]);
    assert_eq!(r.json["tool"], json!("selfinj"));
    assert_eq!(r.json["command"], json!("nakayama"));
    assert_eq!(r.json["seed"], json!(17));
    assert_eq!(r.json["bounds"], json!({ "depth": 3, "max_mult": 2, "coeff_range": 2 }));
    assert_eq!(r.json["result"]["sigma"]["cycle_type"], json!([3]));
    assert_eq!(r.json["result"]["sigma"]["transitive"], json!(true));
}

#[test]
fn verify_theorem_on_regular_complex_passes() {
    let r = exec(&["verify-theorem", "N(2,2)", "A"]);
    assert_eq!(r.code, 0, "{}", r.rendered);
    assert_eq!(r.json["status"], json!("pass"));
    assert_eq!(r.json["result"]["failures"], json!([]));
    let r = exec(&["verify-theorem", "N(2,2)", "A[3]"]);
    assert_eq!(r.code, 0);
}

#[test]
fn validate_reports_non_associative_tables() {
    let bad = json!({
        "field": "Q", "basis": ["1", "x", "y"], "unit": ["1", "0", "0"],
        "products": [[0,0,[[0,"1"]]],[0,1,[[1,"1"]]],[1,0,[[1,"1"]]],[0,2,[[2,"1"]]],[2,0,[[2,"1"]]],
                     [1,1,[[2,"1"]]],[1,2,[[1,"1"]]]]
    });
    let r = exec(&["validate", &write("bad.json", &bad)]);
    assert_eq!(r.code, 2);
    assert!(r.json["error"].as_str().unwrap().contains("(1, 1, 1)"), "{}", r.json["error"]);
}

#[test]
fn input_errors_exit_with_two() {
    let path = tmp("garbage.json");
    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(exec(&["classify", &path]).code, 2);
    assert_eq!(exec(&["classify", "/nonexistent/algebra.json"]).code, 2);
    assert_eq!(exec(&["classify", "N(2,3)", "--field", "R"]).code, 2);
    assert_eq!(exec(&["gen", "0", "3"]).code, 2);
    assert_eq!(exec(&["tilt-search", "N(2,3)", "--field", "Q", "--coeff-range", "40", "--max-mult", "2"]).code, 2);
}

#[test]
fn mathematical_failures_exit_with_one() {
    let terms = |lo: i64| json!({ "lo": lo, "terms": [[1, 1]], "diff": [] });
    let doc = json!({ "summands": [
        { "lo": 0, "terms": [[1, 0]] }, { "lo": 0, "terms": [[0, 1]] },
        { "lo": -1, "terms": [[1, 0]] }, { "lo": -1, "terms": [[0, 1]] }
    ]});
    let r = exec(&["tilt-verify", "N(2,3)", &write("both.json", &doc)]);
    assert_eq!(r.code, 1, "{}", r.rendered);
    assert_eq!(r.json["result"]["report"]["verdict"], json!("not_tilting"));
    assert!(r.json["result"]["report"]["vanishing_witness"].is_object());
    let r = exec(&["tilt-verify", "N(2,3)", &write("single.json", &terms(0))]);
    assert_eq!(r.code, 0, "{}", r.rendered);
    let r = exec(&["nakayama", &write("a2.json", &json!({ "vertices": 2, "arrows": [[0, 1, "a"]] }))]);
    assert_eq!(r.code, 1);
}

#[test]
fn stable_k0_values() {
    let r = exec(&["stable-k0", "N(2,3)"]);
    assert_eq!(r.json["result"], json!({ "elementary_divisors": ["1", "3"], "free": false }));
    let r = exec(&["stable-k0", "N(2,2)"]);
    assert_eq!(r.json["result"], json!({ "elementary_divisors": ["1", "0"], "free": true }));
}

#[test]
fn cartan_and_radical() {
    let r = exec(&["cartan", "N(2,3)"]);
    assert_eq!(r.json["result"]["cartan"], json!([[2, 1], [1, 2]]));
    let r = exec(&["radical", "N(2,3)", "--field", "Fp:3"]);
    assert_eq!(r.json["result"]["dim"], json!(4));
}

#[test]
fn gen_output_is_a_valid_input() {
    let r = exec(&["gen", "2", "3"]);
    assert_eq!(r.json["result"]["vertices"], json!(2));
    let q = write("q.json", &r.json);
    let v = exec(&["validate", &q]);
    assert_eq!(v.json["result"]["dim"], json!(6));

    let r = exec(&["gen", "1", "2", "--algebra", "--field", "Q"]);
    assert_eq!(r.json["result"]["dim"], json!(2));
    let r = exec(&["gen", "3", "1", "--algebra"]);
    let a = write("ss.json", &r.json);
    assert_eq!(exec(&["radical", &a]).json["result"]["dim"], json!(0));
}

#[test]
fn tensor_and_extension_outputs_feed_back() {
    let r = exec(&["tensor", "N(2,2)", "N(1,2)"]);
    assert_eq!(r.code, 0);
    let t = write("t.json", &r.json);
    let c = exec(&["classify", &t]);
    assert_eq!(c.json["result"]["self_injective"], json!(true));
    assert_eq!(c.json["result"]["weakly_symmetric"], json!(false));

    let r = exec(&["extend-scalars", "N(2,3)", "3"]);
    assert_eq!(r.json["result"]["field"], json!({ "p": 2, "degree": 3 }));
    let e = write("e.json", &r.json);
    assert_eq!(exec(&["classify", &e]).json["result"]["self_injective"], json!(true));
    assert_eq!(exec(&["extend-scalars", "N(2,3)", "2", "--field", "Q"]).code, 2);
}

#[test]
fn search_then_verify_and_build_end_algebra() {
    let r = exec(&["tilt-search", "N(2,3)", "--max-mult", "2"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["result"]["tilting_count"], json!(6));
    assert_eq!(r.json["result"]["two_term_count"], json!(4));
    let found = r.json["result"]["tilting"].as_array().unwrap();
    let two = found.iter().find(|c| c["two_term_summand"] == json!(true)).unwrap();
    let summands: Vec<Value> = two["summands"].as_array().unwrap().iter().map(|s| s["complex"].clone()).collect();
    let path = write("two.json", &json!({ "summands": summands }));
    let v = exec(&["tilt-verify", "N(2,3)", &path]);
    assert_eq!(v.code, 0);
    assert_eq!(v.json["result"]["report"]["verdict"], json!("tilting"));
    let e = exec(&["end-algebra", "N(2,3)", &path]);
    assert_eq!(e.json["result"]["dim"], json!(6));
    let t = exec(&["verify-theorem", "N(2,3)", &path]);
    assert_eq!(t.code, 0, "{}", t.rendered);
}

#[test]
fn hom_lists_every_shift() {
    let x = write("x.json", &json!({ "lo": -1, "terms": [[0, 1], [1, 0]], "diff": [[-1, 0, 0, ["1"]]] }));
    let r = exec(&["hom", "N(2,3)", &x, &x]);
    assert_eq!(r.code, 0, "{}", r.rendered);
    let dims = r.json["result"]["hom"].as_array().unwrap();
    let at = |k: i64| dims.iter().find(|d| d["shift"] == json!(k)).map(|d| d["dim"].clone());
    assert_eq!(at(0), Some(json!(2)));
    assert_eq!(at(1), Some(json!(0)));
    assert_eq!(at(-1), Some(json!(0)));
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["tilt-search", "N(2,2)", "--max-mult", "2", "--seed", "9"],
        vec!["verify-theorem", "N(2,3)", "A", "--seed", "9"],
        vec!["classify", "N(3,4)", "--field", "Q"],
    ] {
        assert_eq!(exec(&args).rendered, exec(&args).rendered);
    }
}

#[test]
fn text_rendering() {
    let r = exec(&["classify", "N(2,3)", "--format", "text"]);
    assert!(r.rendered.contains("status: pass"));
    assert!(r.rendered.contains("  self_injective: true"));
}

#[test]
fn binary_exit_codes_and_output_file() {
    let bin = env!("CARGO_BIN_EXE_selfinj");
    let out = tmp("report.json");
    let s = Command::new(bin).args(["classify", "N(2,3)", "--out", &out]).status().unwrap();
    assert_eq!(s.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["result"]["self_injective"], json!(true));
    let s = Command::new(bin).arg("frobnicate").output().unwrap();
    assert_eq!(s.status.code(), Some(2));
    let s = Command::new(bin).args(["stable-k0", "N(2,3)"]).output().unwrap();
    assert_eq!(s.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&s.stdout).contains("\"elementary_divisors\""));
}
