mod support;

use std::fs;

use blockbasis::blocks::{BlockData, GroupAlgebra};
use blockbasis::report::{
    block_table, check_golden, compute_invariants, emit_report, golden_path, golden_record, load_manifest,
    run_regression, to_canonical_json, write_golden, GoldenStatus,
};

use support::*;

#[test]
fn shipped_catalog_passes_with_goldens() {
    let root = catalog_dir();
    let summary = run_regression(&root, Some(&root.join("goldens")), 1).unwrap();
    let failed: Vec<_> = summary.entries.iter().filter(|e| !e.passed).collect();
    assert!(summary.passed, "{failed:#?}");
    assert!(summary.entries.len() >= 20);
}

#[test]
fn regression_is_deterministic() {
    let root = catalog_dir();
    let a = run_regression(&root, None, 1).unwrap();
    let b = run_regression(&root, None, 1).unwrap();
    assert_eq!(to_canonical_json(&a).unwrap(), to_canonical_json(&b).unwrap());
}

#[test]
fn invariants_do_not_depend_on_the_seed() {
    let g = catalog_group("s4");
    assert_eq!(compute_invariants(&g, 2, None, 1).unwrap(), compute_invariants(&g, 2, None, 77).unwrap());
}

fn scratch_catalog(manifest: &str) -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    fs::create_dir_all(dir.path().join("groups")).unwrap();
    fs::create_dir_all(dir.path().join("manifest")).unwrap();
    fs::copy(catalog_dir().join("groups/s3.txt"), dir.path().join("groups/s3.txt")).unwrap();
    fs::write(dir.path().join("manifest/s3_p2.json"), manifest).unwrap();
    dir
}

#[test]
fn corrupted_expectation_is_reported() {
    let text = fs::read_to_string(catalog_dir().join("manifest/s3_p2.json")).unwrap();
    let bad = text.replacen("\"value\": 2,", "\"value\": 5,", 1);
    assert_ne!(bad, text);
    let dir = scratch_catalog(&bad);
    let summary = run_regression(dir.path(), None, 1).unwrap();
    assert!(!summary.passed);
    let diffs = &summary.entries[0].diffs;
    assert_eq!(diffs.len(), 1);
    assert!(diffs[0].contains("expected 5, got 2"), "{diffs:?}");
}

#[test]
fn derived_value_without_oracle_is_rejected() {
    let text = fs::read_to_string(catalog_dir().join("manifest/s3_p2.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let exp = v["expect"].as_array_mut().unwrap();
    let k = exp.iter().position(|e| e["tag"] == "DERIVED").unwrap();
    exp[k].as_object_mut().unwrap().remove("oracle");
    let dir = scratch_catalog(&serde_json::to_string_pretty(&v).unwrap());
    assert!(load_manifest(&dir.path().join("manifest/s3_p2.json")).is_err());
    let summary = run_regression(dir.path(), None, 1).unwrap();
    assert!(!summary.passed);
    assert!(summary.entries[0].error.is_some());
}

#[test]
fn empty_catalog_passes_vacuously() {
    let dir = tempfile::tempdir().unwrap();
    fs::create_dir_all(dir.path().join("manifest")).unwrap();
    let summary = run_regression(dir.path(), None, 1).unwrap();
    assert!(summary.passed);
    assert!(summary.entries.is_empty());
}

#[test]
fn golden_lifecycle() {
    let dir = tempfile::tempdir().unwrap();
    let kg = GroupAlgebra::over_splitting_field(&s3(), 2, None).unwrap();
    let b = BlockData::nth(&kg, 0, 1).unwrap();
    let rec = golden_record("s3", &b, 1).unwrap();
    assert!(matches!(check_golden(dir.path(), &rec).unwrap(), GoldenStatus::Missing(_)));
    let path = write_golden(dir.path(), &rec).unwrap();
    assert_eq!(path, golden_path(dir.path(), &rec));
    assert_eq!(check_golden(dir.path(), &rec).unwrap(), GoldenStatus::Match);
    let stored = fs::read_to_string(&path).unwrap();
    fs::write(&path, stored.replace("\"source_dim\": 2", "\"source_dim\": 3")).unwrap();
    match check_golden(dir.path(), &rec).unwrap() {
        GoldenStatus::Differs(msg) => assert!(msg.contains("source_dim"), "{msg}"),
        other => panic!("expected a difference, got {other:?}"),
    }
}

#[test]
fn reports_roundtrip_through_json() {
    let kg = GroupAlgebra::over_splitting_field(&a4(), 3, None).unwrap();
    let blocks = BlockData::all(&kg, 1).unwrap();
    let table = block_table(&kg, &blocks);
    let (json, text) = emit_report(&table).unwrap();
    assert!(json.ends_with('\n'));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["group_order"], 12);
    assert_eq!(value["blocks"].as_array().unwrap().len(), blocks.len());
    let again: serde_json::Value = serde_json::from_str(&to_canonical_json(&value).unwrap()).unwrap();
    assert_eq!(again, value);
    assert_eq!(emit_report(&table).unwrap().0, json);
    assert!(text.contains("|G| = 12"));
}
