use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use uqzoo::export::{from_json, Importer};
use uqzoo::hopf::verify_hopf;
use uqzoo::report::Mode;

fn uqzoo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uqzoo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

#[test]
fn verify_passes_at_three() {
    let o = uqzoo(&["verify", "--N", "3"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains(" 0 failed"));
}

#[test]
fn even_order_is_a_usage_error() {
    for args in [
        &["verify", "--N", "4"][..],
        &["classify", "--N", "4"],
        &["export", "gr_uq", "--N", "1"],
    ] {
        let o = uqzoo(args);
        assert_eq!(o.status.code(), Some(2));
        assert!(String::from_utf8_lossy(&o.stderr).contains("N must be odd and > 1"));
    }
    assert_eq!(
        uqzoo(&["verify", "--suites", "bogus"]).status.code(),
        Some(2)
    );
}

#[test]
fn reduced_cocycle_run_at_five() {
    let o = uqzoo(&[
        "verify",
        "--N",
        "5",
        "--suites",
        "cocycle",
        "--sample-count",
        "300",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report = json(&o);
    assert_eq!(report["config"]["N"], 5);
    assert_eq!(report["config"]["mode"], "sampled");
    assert_eq!(report["summary"]["failed"], 0);
    let ids: Vec<&str> = report["claims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["claim_id"].as_str().unwrap())
        .collect();
    assert!(ids.contains(&"cocycle.cocycle"));
    assert!(ids.contains(&"cocycle.inverse.left"));
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = ["a.json", "b.json"]
        .iter()
        .map(|f| dir.path().join(f))
        .collect();
    for p in &paths {
        let o = uqzoo(&[
            "verify",
            "--N",
            "3",
            "--suites",
            "families,minpoly",
            "--seed",
            "9",
            "--output",
            p.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (a, b) = (fs::read(&paths[0]).unwrap(), fs::read(&paths[1]).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

fn r_values(table: &Value, tag: &str) -> Vec<Value> {
    let f = table["families"]
        .as_array()
        .unwrap()
        .iter()
        .find(|f| f["tag"] == tag)
        .unwrap_or_else(|| panic!("no {tag}"));
    f["param_domain"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["r"].clone())
        .collect()
}

#[test]
fn classification_tables() {
    let t = json(&uqzoo(&["classify", "--N", "3", "--format", "json"]));
    assert_eq!(t["families"].as_array().unwrap().len(), 5);
    assert_eq!(r_values(&t, "F3"), vec![Value::from(1), Value::from(3)]);
    let t = json(&uqzoo(&["classify", "--N", "15", "--format", "json"]));
    assert_eq!(r_values(&t, "F0").len(), 4);
    assert_eq!(r_values(&t, "F1").len(), 3);
    let text = stdout(&uqzoo(&["classify", "--N", "3"]));
    assert!(text.starts_with("N = 3"));
}

#[test]
fn minpoly_examples() {
    for args in [
        &[
            "minpoly", "--N", "3", "--alpha", "1", "--beta", "1", "--gamma", "0",
        ][..],
        &[
            "minpoly", "--N", "3", "--alpha", "0", "--beta", "2", "--gamma", "q",
        ],
        &[
            "minpoly", "--N", "5", "--alpha", "q", "--beta", "-1", "--gamma", "2+q^2",
        ],
    ] {
        let o = uqzoo(args);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("match: yes"), "{}", stdout(&o));
    }
    let o = uqzoo(&["minpoly", "--alpha", "0", "--beta", "0", "--gamma", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn export_and_reimport() {
    let o = uqzoo(&["export", "gr_uq", "--N", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.basis.len(), 27);
    let h = Importer::for_doc(&doc).unwrap().hopf(&doc).unwrap();
    assert!(verify_hopf(&h, &Mode::Exhaustive).passed());

    let o = uqzoo(&["export", "sigma", "--N", "3"]);
    let doc = from_json(&stdout(&o)).unwrap();
    assert!(Importer::for_doc(&doc).unwrap().form(&doc).is_ok());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("l4.json");
    let o = uqzoo(&[
        "export",
        "family",
        "--tag",
        "L4",
        "--alpha",
        "1",
        "--beta",
        "0",
        "--xi",
        "2",
        "--deformed",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    let doc = from_json(&text).unwrap();
    assert_eq!(doc.basis, ["1", "W", "W^2"]);
    let a = Importer::for_doc(&doc).unwrap().comodule(&doc).unwrap();
    assert!(a.verify(&Mode::Exhaustive).passed());

    assert_eq!(uqzoo(&["export", "family"]).status.code(), Some(2));
}
