use std::io::Write;

use factorforge::catalog::{
    classify_catalog, emit_report, parse_csv_report, registry, Catalog, ClassificationReport, CsvRow, ReportFormat,
};
use factorforge::search::SearchOptions;
use factorforge::Error;

fn exceptional_catalog() -> Catalog {
    let mut text = String::new();
    for r in &registry().records {
        if r.tags.iter().any(|t| t == "exceptional") {
            text.push_str(&serde_json::to_string(r).unwrap());
            text.push('\n');
        }
    }
    Catalog::parse(&text).unwrap()
}

#[test]
fn eight_group_run_lists_a4_first() {
    let cat = exceptional_catalog();
    let report = classify_catalog(&cat, 100, &SearchOptions::default(), 2).unwrap();
    assert_eq!(report.entries.len(), 8);
    assert_eq!(report.entries[0].id, "A4");
    assert!(report.entries.iter().all(|e| e.multifold == "not-multifold" && e.failing_shape.is_some()));
    let json: serde_json::Value = serde_json::from_slice(&emit_report(&report, ReportFormat::Json)).unwrap();
    assert_eq!(json["entries"][0]["id"], "A4");
    let orders: Vec<u64> = json["entries"].as_array().unwrap().iter().map(|e| e["order"].as_u64().unwrap()).collect();
    assert_eq!(orders, [12, 36, 36, 56, 60, 60, 84, 84]);
}

#[test]
fn empty_run_is_a_valid_document() {
    let empty = ClassificationReport::default();
    let json: serde_json::Value = serde_json::from_slice(&emit_report(&empty, ReportFormat::Json)).unwrap();
    assert_eq!(json["entries"].as_array().unwrap().len(), 0);
    assert!(parse_csv_report(&emit_report(&empty, ReportFormat::Csv)).unwrap().is_empty());
    assert!(emit_report(&empty, ReportFormat::Text).is_empty());
}

#[test]
fn csv_round_trip_and_determinism() {
    let cat = Catalog::parse(&registry().to_jsonl()).unwrap();
    let report = classify_catalog(&cat, 24, &SearchOptions::default(), 3).unwrap();
    let again = classify_catalog(&cat, 24, &SearchOptions::default(), 1).unwrap();
    let strip = |r: &ClassificationReport| {
        let mut r = r.clone();
        r.entries.iter_mut().for_each(|e| e.millis = 0);
        r
    };
    assert_eq!(emit_report(&strip(&report), ReportFormat::Json), emit_report(&strip(&again), ReportFormat::Json));
    let csv = emit_report(&report, ReportFormat::Csv);
    let header = String::from_utf8_lossy(&csv).lines().next().unwrap().to_string();
    assert_eq!(header, "id,order,supersolvable,multifold,failing_shape,nodes,millis");
    let rows = parse_csv_report(&csv).unwrap();
    let want: Vec<CsvRow> = report.entries.iter().map(CsvRow::from).collect();
    assert_eq!(rows, want);
    let ids: Vec<&str> = report.non_multifold();
    assert_eq!(ids, ["A4", "G4"]);
}

#[test]
fn load_from_file_and_errors() {
    let dir = std::env::temp_dir().join(format!("factorforge-catalog-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.jsonl");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, r#"{{"id":"C12","name":"","construction":{{"kind":"cyclic","n":12}},"expected_order":13,"tags":[]}}"#)
        .unwrap();
    writeln!(f, "not json").unwrap();
    drop(f);
    match Catalog::load(&path).unwrap_err() {
        Error::Parse { line, column, .. } => assert_eq!((line, column), (2, 2)),
        other => panic!("{other:?}"),
    }
    std::fs::write(&path, "").unwrap();
    assert!(Catalog::load(&path).unwrap().records.is_empty());
    std::fs::write(&path, r#"{"id":"C12","construction":{"kind":"cyclic","n":12},"expected_order":13}"#).unwrap();
    let cat = Catalog::load(&path).unwrap();
    assert_eq!(cat.build("C12").unwrap_err(), Error::OrderMismatch { id: "C12".into(), built: 12, expected: 13 });
    assert!(classify_catalog(&cat, 100, &SearchOptions::default(), 1).is_err());
    assert!(matches!(Catalog::load(dir.join("missing.jsonl")).unwrap_err(), Error::Io(_)));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn identical_files_give_identical_tables() {
    let text = registry().to_jsonl();
    let a = Catalog::parse(&text).unwrap();
    let b = Catalog::parse(&text).unwrap();
    for r in &a.records {
        assert_eq!(a.build(&r.id).unwrap().table(), b.build(&r.id).unwrap().table(), "{}", r.id);
    }
}
