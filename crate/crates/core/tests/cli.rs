use std::process::Command;

use ncsym::cli::run;
use ncsym::hopf::json::{element_from_json, tensor_from_json};
use ncsym::{NCSymElement, SetPartition, TensorElement, Word};
use serde_json::Value;

/// In-process run: `(exit code, stdout, stderr)`.
fn ncsym(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        std::iter::once("ncsym").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = ncsym(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.trim_end_matches('\n').to_string()
}

fn text_and_json(args: &[&str]) -> (String, Value) {
    let text = ok(args);
    let mut with_json = vec!["--format", "json"];
    with_json.extend_from_slice(args);
    let json = serde_json::from_str(&ok(&with_json)).unwrap();
    (text, json)
}

fn blocks(v: &Value) -> Vec<Vec<u32>> {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn element_commands_round_trip() {
    for args in [
        &["product", "13.2", "1", "(12) - 2(1.2)"][..],
        &["antipode", "14.2.3"],
        &["antipode", "(13.2.4) + 3(12)", "--method", "direct"],
        &["antipode", "13.2.4", "--method", "oracle"],
        &["primitive", "14.2.3"],
        &["primitive", "12.3"],
        &["hall", "--atoms", "12", "1"],
    ] {
        let (text, json) = text_and_json(args);
        let from_text = NCSymElement::from_text(&text).unwrap();
        assert_eq!(
            element_from_json(&json.to_string()).unwrap(),
            from_text,
            "{args:?}"
        );
    }
}

#[test]
fn scalar_and_structure_commands_round_trip() {
    let (text, json) = text_and_json(&["coproduct", "13.2"]);
    assert_eq!(
        tensor_from_json(&json.to_string()).unwrap(),
        TensorElement::from_text(&text).unwrap()
    );

    let (text, json) = text_and_json(&["counit", "3(∅) - (1)"]);
    assert_eq!((text.as_str(), json), ("3", Value::from("3")));

    let (text, json) = text_and_json(&["is-atomic", "17.235.4.68"]);
    assert_eq!((text.as_str(), json), ("true", Value::Bool(true)));

    let (text, json) = text_and_json(&["atoms", "12.346.57.8"]);
    let atoms: Vec<SetPartition> = text.split(" | ").map(|s| s.parse().unwrap()).collect();
    let from_json: Vec<SetPartition> = json
        .as_array()
        .unwrap()
        .iter()
        .map(|b| SetPartition::new(blocks(b)).unwrap())
        .collect();
    assert_eq!(atoms, from_json);

    let (text, json) = text_and_json(&["eval", "13|2", "13.29.458.7"]);
    assert_eq!(text, "12.345.67");
    assert_eq!(
        text.parse::<SetPartition>().unwrap(),
        SetPartition::new(blocks(&json)).unwrap()
    );

    let (text, json) = text_and_json(&["lyndon", "aabb"]);
    assert_eq!(text, "true\n(a, abb)");
    assert_eq!(
        json,
        serde_json::json!({"lyndon": true, "factorization": ["a", "abb"]})
    );

    let (text, json) = text_and_json(&["hall", "aabb"]);
    assert_eq!(Value::from(text), json);
}

#[test]
fn listing_commands_round_trip() {
    let words = |b: Vec<Vec<u32>>| Word::new(b).unwrap().to_string();
    let partitions = |b: Vec<Vec<u32>>| SetPartition::new(b).unwrap().to_string();
    type Render<'a> = &'a dyn Fn(Vec<Vec<u32>>) -> String;
    let cases: [(&[&str], Render); 6] = [
        (&["qshuffle", "1|3", "24", "--left"], &words),
        (&["qshuffle", "1|2", "3|4"], &words),
        (&["enumerate", "partitions", "4"], &partitions),
        (&["enumerate", "atomic", "4"], &partitions),
        (&["enumerate", "compositions", "3"], &words),
        (&["enumerate", "anchored", "3"], &words),
    ];
    for (args, render) in cases {
        let (text, json) = text_and_json(args);
        let from_json: Vec<String> = json
            .as_array()
            .unwrap()
            .iter()
            .map(|b| render(blocks(b)))
            .collect();
        assert_eq!(text.lines().collect::<Vec<_>>(), from_json, "{args:?}");
    }
    assert_eq!(ok(&["qshuffle", "1|3", "24", "--left"]).lines().count(), 4);
    let (text, json) = text_and_json(&["enumerate", "partitions", "8", "--count"]);
    assert_eq!((text.as_str(), json), ("4140", Value::from(4140)));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--max-weight", "6", "--seed", "7", "--samples", "3"];
    let first = ncsym(&args);
    assert_eq!(first.0, 0, "{}", first.2);
    assert_eq!(first, ncsym(&args));
    let (_, json) = text_and_json(&["verify", "--max-weight", "3", "--checks", "lemma,pairing"]);
    assert_eq!(json["passed"], Value::Bool(true));
    assert_eq!(json["checks"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    let (code, _, err) = ncsym(&["antipode", "13.x"]);
    assert_eq!(code, 2);
    assert!(err.contains("`x`"), "{err}");
    assert_eq!(ncsym(&["antipode", "12.4"]).0, 2);
    assert_eq!(ncsym(&["eval", "13|4", "12.3"]).0, 2);
    assert_eq!(ncsym(&["qshuffle", "12", "23"]).0, 2);
    assert_eq!(ncsym(&["hall", "ba"]).0, 2);
    assert_eq!(ncsym(&["verify", "--max-weight", "2", "--checks", "nope"]).0, 2);
    assert_eq!(ncsym(&["frobnicate"]).0, 2);
    assert_eq!(ncsym(&["--help"]).0, 0);
}

#[test]
fn wide_partitions_warn() {
    let (code, _, err) = ncsym(&["primitive", "1.2.3.4.5.6.7.8.9"]);
    assert_eq!(code, 0);
    assert!(err.starts_with("warning:"), "{err}");
}

#[test]
fn binary_matches_library_entry_point() {
    let out = Command::new(env!("CARGO_BIN_EXE_ncsym"))
        .args(["antipode", "13.2.4", "--method", "direct"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "(1.24.3) - (1.23.4) - (1.2.34)\n"
    );
    let bad = Command::new(env!("CARGO_BIN_EXE_ncsym"))
        .args(["atoms", "1.1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
