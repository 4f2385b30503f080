use std::process::{Command, Output};

use lerchlab::catalog::{build_catalog, catalog_to_json, ClosedForm};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lerchlab")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn full_catalog_passes() {
    let out = run(&["verify", "--format", "json", "--workers", "4"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let report = json(&out);
    assert_eq!(report["schema"], "lerchlab-report/1");
    assert_eq!(report["records"].as_array().unwrap().len(), 13);
    assert_eq!(report["summary"]["pass"], 13);
    assert!(report["property_checks"][0]["passed"].as_bool().unwrap());
}

#[test]
fn json_report_is_byte_identical_across_runs() {
    let args = ["verify", "--format", "json", "--seed", "5", "--entry", "3.1.3.6*"];
    let a = run(&[&args[..], &["--workers", "1"]].concat());
    let b = run(&[&args[..], &["--workers", "3"]].concat());
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn entry_glob_selects_records() {
    let report = json(&run(&["verify", "--format", "json", "--entry", "3.1.3.6?"]));
    let ids: Vec<&str> =
        report["records"].as_array().unwrap().iter().map(|r| r["entry_id"].as_str().unwrap()).collect();
    assert_eq!(ids.len(), 10);
    assert!(ids.iter().all(|id| id.starts_with("3.1.3.6")));
    assert!(ids.windows(2).all(|w| w[0] < w[1]));
    let report = json(&run(&["verify", "--format", "json", "--entry", "3.1.3.48"]));
    assert_eq!(report["records"].as_array().unwrap().len(), 1);
}

#[test]
fn timings_only_on_request() {
    let plain = String::from_utf8(run(&["verify", "--format", "json", "--entry", "3.1.3.48"]).stdout).unwrap();
    assert!(!plain.contains("runtime_ms"));
    let timed = json(&run(&["verify", "--format", "json", "--entry", "3.1.3.48", "--timings"]));
    assert!(timed["records"][0]["runtime_ms"].is_number());
}

#[test]
fn markdown_and_csv_formats() {
    let md = run(&["verify", "--entry", "3.1.3.6[01]"]);
    assert_eq!(code(&md), 0);
    let text = String::from_utf8(md.stdout).unwrap();
    assert!(text.contains("| 3.1.3.60 |") && text.contains("| 3.1.3.61 |"), "{text}");

    let csv = run(&["verify", "--format", "csv", "--entry", "3.1.3.6[01]"]);
    assert_eq!(code(&csv), 0);
    let mut reader = csv::Reader::from_reader(csv.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    let id_col = headers.iter().position(|h| h == "entry_id").unwrap();
    let status_col = headers.iter().position(|h| h == "status").unwrap();
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(&rows[0][id_col], "3.1.3.60");
    assert!(rows.iter().all(|r| &r[status_col] == "PASS"));
}

#[test]
fn perturbed_closed_forms_fail() {
    let out = run(&["verify", "--format", "json", "--perturb-closed-form", "1e-3"]);
    assert_eq!(code(&out), 1);
    let report = json(&out);
    assert_eq!(report["summary"]["pass"], 0);
    for r in report["records"].as_array().unwrap() {
        let status = r["status"].as_str().unwrap();
        assert!(status == "FAIL" || status == "DISPUTED", "{r}");
    }
}

#[test]
fn perturbed_catalog_file_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.json");
    let entries: Vec<_> = build_catalog()
        .into_iter()
        .map(|e| {
            if e.id == "3.1.3.64" {
                let base = Box::new(e.closed_form.clone());
                e.with_closed_form(ClosedForm::Perturbed { base, rel: 1e-4 })
            } else {
                e
            }
        })
        .collect();
    std::fs::write(&path, catalog_to_json(&entries)).unwrap();
    let out = run(&["verify", "--format", "json", "--catalog", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let report = json(&out);
    let bad = report["records"].as_array().unwrap().iter().find(|r| r["entry_id"] == "3.1.3.64").unwrap();
    assert_eq!(bad["status"], "FAIL");
    assert_eq!(report["summary"]["pass"], 12);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--rel-tol", "-1"][..],
        &["verify", "--rel-tol", "abc"],
        &["verify", "--format", "xml"],
        &["verify", "--workers", "0"],
        &["verify", "--entry", "[unclosed"],
        &["verify", "--catalog", "/nonexistent/catalog.json"],
        &["verify", "--bogus"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(code(&out), 2, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn catalog_subcommand_prints_the_document() {
    let out = run(&["catalog"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["schema"], "lerchlab-catalog/1");
    assert_eq!(doc["entries"].as_array().unwrap().len(), 13);
}
