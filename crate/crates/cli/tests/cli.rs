use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn affmon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affmon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn text(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

const MATRIX: &[&[&str]] = &[
    &["rank0", "--n", "3"],
    &["toric", "--n", "2"],
    &["truncated", "--n", "3"],
    &["corank1", "--b", "0,1,3"],
    &["a2-mba", "--b", "2"],
    &["a3-mbaca", "--b", "1", "--c", "3"],
    &["a3-mbabca", "--b", "1", "--c", "2"],
    &["a3-mbabca", "--b", "2", "--c", "5"],
    &["a3-mmbca", "--b", "1", "--c", "2"],
    &["bilinear", "--algebra", "kt1t2"],
    &["bilinear", "--algebra", "k-kt2"],
    &["hirzebruch", "--d", "2"],
    &["hirzebruch", "--d", "2", "--normalized", "false"],
];

#[test]
fn build_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (i, fam) in MATRIX.iter().enumerate() {
        let mut args = vec!["catalog", "build"];
        args.extend_from_slice(fam);
        let built = affmon(&args);
        assert_eq!(code(&built), 0, "{fam:?}: {}", String::from_utf8_lossy(&built.stderr));
        let path = write(dir.path(), &format!("m{i}.json"), &text(&built));
        let v = affmon(&["verify", &path]);
        assert_eq!(code(&v), 0, "{fam:?}: {}", text(&v));
        assert_eq!(json(&v)["all_pass"], true);
    }
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("toric.json");
    let o = affmon(&["catalog", "build", "toric", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v = affmon(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&v), 0);
}

#[test]
fn corrupted_component_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let mut m = json(&affmon(&["catalog", "build", "toric", "--n", "2"]));
    m["mu"][0] = Value::String("x1*y1 + x1".into());
    let path = write(dir.path(), "bad.json", &m.to_string());
    let v = affmon(&["verify", &path]);
    assert_eq!(code(&v), 1);
    let r = json(&v);
    assert_eq!(r["all_pass"], false);
    assert_eq!(r["commutative"]["holds"], false);
    assert_eq!(r["commutative"]["witness"]["component"], 1);
}

#[test]
fn parse_and_usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "empty.json", "");
    assert_eq!(code(&affmon(&["verify", &empty])), 2);
    let junk = write(dir.path(), "junk.json", "{\"dim\": 2");
    assert_eq!(code(&affmon(&["verify", &junk])), 2);
    assert_eq!(code(&affmon(&["verify", "/nonexistent/m.json"])), 2);
    assert_eq!(code(&affmon(&["frobnicate"])), 2);
    assert_eq!(code(&affmon(&["catalog", "build", "nosuch"])), 2);
    assert_eq!(code(&affmon(&["catalog", "build", "corank1", "--b", "3,1"])), 2);
    assert_eq!(code(&affmon(&["classify", "wpp", "--b", "2", "--c", "4"])), 2);
}

#[test]
fn output_is_deterministic() {
    let runs = [
        vec!["catalog", "list"],
        vec!["classify", "distinguish", "--b", "1", "--c", "2"],
        vec!["classify", "wpp", "--b", "2", "--c", "3", "--seed", "7"],
        vec!["structure", "idempotents", "--family", "a3-mmbca", "--b", "1", "--c", "1"],
    ];
    for args in runs {
        let a = affmon(&args);
        let b = affmon(&args);
        assert_eq!(code(&a), 0, "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn catalog_list_names_every_family() {
    let rows = json(&affmon(&["catalog", "list"]));
    let names: Vec<&str> = rows.as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap()).collect();
    for fam in MATRIX {
        assert!(names.contains(&fam[0]), "{}", fam[0]);
    }
}

#[test]
fn distinguish_separates_the_families() {
    let o = affmon(&["classify", "distinguish", "--b", "1", "--c", "2"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["verdict"], "non_isomorphic");
    assert_eq!(r["families"][0]["lines"].as_array().unwrap().len(), 1);
    assert!(r["families"][1]["lines"].as_array().unwrap().len() >= 3);

    let few = affmon(&["classify", "distinguish", "--b", "1", "--c", "2", "--samples", "0,1"]);
    assert_eq!(code(&few), 1);
    assert_eq!(json(&few)["verdict"], "insufficient_samples");
}

#[test]
fn wpp_actions_verify() {
    let o = affmon(&["classify", "wpp", "--b", "2", "--c", "3"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    for a in r["actions"].as_array().unwrap() {
        assert_eq!(a["all_pass"], true);
    }
}

#[test]
fn verify_action_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(
        dir.path(),
        "good.json",
        r#"{"dim": 2, "params": ["a"], "components": ["x1", "x2 + a*x1"], "weights": [1, 1]}"#,
    );
    assert_eq!(code(&affmon(&["classify", "verify-action", "--action", &good])), 0);
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"dim": 2, "params": ["a"], "components": ["x1", "x2 + a*x1^2"], "weights": [1, 1]}"#,
    );
    let o = affmon(&["classify", "verify-action", "--action", &bad]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["homogeneous"], false);
}

#[test]
fn normalize_worked_pair() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(
        dir.path(),
        "pair.json",
        r#"{"delta1": {"vars": 3, "images": ["0", "x1", "x1*x2"]},
            "delta2": {"vars": 3, "images": ["0", "0", "x1^2"]}}"#,
    );
    let o = affmon(&["classify", "normalize", "--weights", "1,1,2", "--pair", &pair]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&o);
    assert_eq!(r["type"], 2);
    assert_eq!(r["d"], 2);
    assert_eq!(r["normalized"]["delta1"], serde_json::json!(["0", "x1", "0"]));

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"weights": [1, 1, 2],
            "delta1": {"vars": 3, "images": ["0", "x1", "x1*x2"]},
            "delta2": {"vars": 3, "images": ["0", "x2", "x1^2"]}}"#,
    );
    let o = affmon(&["classify", "normalize", "--pair", &bad]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["valid"], false);
}

#[test]
fn dichotomy_on_the_default_grid() {
    let o = affmon(&["structure", "dichotomy", "--family", "a3-mbabca", "--b", "1", "--c", "2", "--format", "text"]);
    assert_eq!(code(&o), 0);
    assert!(text(&o).starts_with("holds at 125/125 points"), "{}", text(&o));
    let toric = affmon(&["structure", "dichotomy", "--family", "toric", "--n", "2"]);
    assert_eq!(code(&toric), 2);
}

#[test]
fn hirzebruch_idempotents() {
    for normalized in ["true", "false"] {
        let o = affmon(&["structure", "idempotents", "--family", "hirzebruch", "--d", "1", "--normalized", normalized]);
        assert_eq!(code(&o), 0);
        let r = json(&o);
        assert_eq!(r["count"], 4);
        assert_eq!(r["bound"]["holds"], true);
    }
}

#[test]
fn nilpotent_and_group_like_points() {
    let base = ["--family", "a3-mbaca", "--b", "1", "--c", "2"];
    let mut args = vec!["structure", "nilpotent"];
    args.extend_from_slice(&base);
    args.extend_from_slice(&["--point", "0,1,-1/2"]);
    let r = json(&affmon(&args));
    assert_eq!(r["nilpotent"], true);
    assert_eq!(r["index"], 1);

    let mut args = vec!["structure", "group-like"];
    args.extend_from_slice(&base);
    args.extend_from_slice(&["--point", "2,1,0"]);
    let r = json(&affmon(&args));
    assert_eq!(r["k"], 0);

    let mut args = vec!["structure", "nilpotent"];
    args.extend_from_slice(&base);
    args.extend_from_slice(&["--point", "1,2"]);
    assert_eq!(code(&affmon(&args)), 2);
}

#[test]
fn monoid_file_source() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "m.json",
        &text(&affmon(&["catalog", "build", "a2-mba", "--b", "1"])),
    );
    let o = affmon(&["structure", "idempotents", "--monoid", &path]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["count"], 2);
}
