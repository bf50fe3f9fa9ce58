use std::path::PathBuf;
use std::process::{Command, Output};

use proptest::prelude::*;
use quadalg::algebra::{Alphabet, Field, FreeAlgebra, Polynomial, Presentation, Word};
use quadalg::rank::random_presentation;
use quadalg_cli::{parse_presentation, serialize_presentation, Report};
use serde_json::Value;

fn data_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn quadalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadalg")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> Report {
    let mut full = args.to_vec();
    full.push("--json");
    let out = quadalg(&full);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("report parses")
}

#[test]
fn hilbert_of_reference_file() {
    let input = data_file("f17_three_generators.json");
    let r = report(&["hilbert", "--input", input.to_str().unwrap(), "--degree", "6", "--cross-check"]);
    assert_eq!(r.series, Some(vec![1, 3, 6, 9, 9, 0, 0]));
    assert!(r.flags["certified"]);
    assert!(r.flags["methods_agree"]);
    assert_eq!(r.data["relations"], 3);

    let text = std::fs::read_to_string(&input).unwrap();
    let pres = parse_presentation(&text).unwrap();
    assert_eq!(pres.relations().iter().map(Polynomial::len).max(), Some(9));
}

#[test]
fn classify_two_by_two() {
    let r = report(&["rit", "classify", "--m", "2", "--n", "2", "--degree", "4"]);
    assert_eq!(r.data["classes"], 7);
    assert_eq!(r.data["non_maximal"], 3);
    assert_eq!(r.witnesses.len(), 3);
}

#[test]
fn anick_five_generators() {
    let r = report(&["anick", "--n", "5", "--degree", "4", "--prime", "17", "--trials", "20", "--seed", "1"]);
    assert!(r.flags["attained"]);
    assert_eq!(r.series, Some(vec![1, 5, 15, 25, 0]));
}

#[test]
fn family_commands() {
    let r = report(&["rit", "check", "--maps", "1,1;2,2", "--degree", "4"]);
    assert_eq!(r.series, Some(vec![1, 4, 10, 20, 35]));
    assert!(r.flags["maximal"] && r.flags["pair_sets"] && r.flags["quadratic_groebner"]);

    let r = report(&["rit", "check", "--maps", "1,2;2,1", "--degree", "4"]);
    assert_eq!(r.series, Some(vec![1, 4, 10, 19, 31]));
    assert!(!r.flags["maximal"]);
    assert!(r.witnesses[0].contains("point 1"));

    let r = report(&["rit", "decompose", "--maps", "1,1;2,2"]);
    assert_eq!(r.data["p"], serde_json::json!([1, 2]));
    assert!(r.flags["valid"]);

    let r = report(&["omega", "build", "--m", "27"]);
    assert_eq!(r.data["n"], 9);
    assert!(r.flags["faithful"]);

    let r = report(&["omega", "check", "--maps", "1,1,3"]);
    assert_eq!(r.data["classes"][0]["points"], serde_json::json!([1, 2]));

    let r = report(&["ybe", "check", "--maps", "1"]);
    assert!(r.flags["is_zero"]);
    let r = report(&["ybe", "check", "--maps", "1,2;2,1"]);
    assert!(!r.flags["is_zero"]);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| quadalg(args).status.code();
    assert_eq!(code(&["rit", "classify", "--m", "3", "--n", "4"]), Some(3));
    assert_eq!(code(&["rit", "classify", "--m", "2", "--n", "5"]), Some(3));
    assert_eq!(code(&["rit", "check", "--maps", "1,3"]), Some(2));
    assert_eq!(code(&["rit", "decompose", "--maps", "1,2"]), Some(2));
    assert_eq!(code(&["anick", "--n", "4", "--prime", "16"]), Some(2));
    assert_eq!(code(&["hilbert", "--input", "/nonexistent/file.json"]), Some(2));
    assert_eq!(code(&["omega", "build", "--m", "0"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let cubic = dir.path().join("cubic.json");
    std::fs::write(
        &cubic,
        r#"{"field":{"kind":"rational"},"generators":["x"],"relations":[[{"c":"1","w":["x","x","x"]}]]}"#,
    )
    .unwrap();
    assert_eq!(code(&["hilbert", "--input", cubic.to_str().unwrap()]), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let input = data_file("f17_three_generators.json");
    let commands: [&[&str]; 3] = [
        &["anick", "--n", "4", "--degree", "5", "--trials", "3", "--seed", "7"],
        &["hilbert", "--input", input.to_str().unwrap(), "--degree", "7"],
        &["rit", "classify", "--m", "1", "--n", "3", "--degree", "5"],
    ];
    for args in commands {
        let strip = |out: Output| {
            let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
            v["elapsed_ms"] = Value::from(0);
            serde_json::to_string(&v).unwrap()
        };
        let mut json_args = args.to_vec();
        json_args.push("--json");
        assert_eq!(strip(quadalg(&json_args)), strip(quadalg(&json_args)), "{args:?}");
    }
}

fn rational_presentation(coeffs: Vec<(i64, i64)>) -> Presentation {
    let ring = FreeAlgebra::new(Alphabet::new(["u", "v"]).unwrap(), Field::Rational);
    let terms = Word::all_of_degree(2, 2)
        .zip(coeffs)
        .map(|(w, (n, d))| (w, Field::Rational.parse(&format!("{n}/{d}")).unwrap()));
    let rel = Polynomial::from_terms(&ring, terms).unwrap();
    let relations = if rel.is_zero() { vec![] } else { vec![rel] };
    Presentation::new(ring, relations).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn presentation_round_trip(g in 1usize..=4, r in 1usize..=4, seed in any::<u64>()) {
        let pres = random_presentation(g, r, 17, seed).unwrap();
        prop_assert_eq!(parse_presentation(&serialize_presentation(&pres)).unwrap(), pres);
    }

    #[test]
    fn rational_round_trip(coeffs in prop::collection::vec((-30i64..30, 1i64..9), 4)) {
        let pres = rational_presentation(coeffs);
        prop_assert_eq!(parse_presentation(&serialize_presentation(&pres)).unwrap(), pres);
    }

    #[test]
    fn report_round_trip(series in prop::option::of(prop::collection::vec(any::<i64>(), 0..6)), flag in any::<bool>()) {
        let mut r = Report::new("hilbert").param("degree", 3);
        r.series = series;
        r.flag("certified", flag);
        r.witnesses.push("w".into());
        r.data = serde_json::json!({"k": [1, 2]});
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        prop_assert_eq!(back, r);
    }
}
