use jsonschema::JSONSchema;
use serde_json::Value;
use skeinlab::report::Report;

fn schema() -> JSONSchema {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json");
    let text = std::fs::read_to_string(path).expect("schema file");
    let value: Value = serde_json::from_str(&text).expect("schema is JSON");
    JSONSchema::compile(&value).expect("schema compiles")
}

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = skeinlab::cli::run_with(args.iter().copied(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn validate(text: &str) -> Value {
    let value: Value = serde_json::from_str(text).expect("report is JSON");
    let schema = schema();
    if let Err(errors) = schema.validate(&value) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {msgs:?}");
    }
    value
}

#[test]
fn passing_report_validates() {
    let (code, text) = run(&["skeinlab", "verify", "braidop", "--json", "--max-degree", "2"]);
    assert_eq!(code, 0);
    let v = validate(&text);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["parameters"]["seed"], Value::Null);
    assert_eq!(v["parameters"]["specializations"], serde_json::json!(["7/5", "11/7"]));
}

#[test]
fn seeded_report_validates() {
    let (code, text) = run(&["skeinlab", "verify", "hopf", "--json", "--max-degree", "1", "--seed", "9", "--spec", "3/2"]);
    assert_eq!(code, 0);
    let v = validate(&text);
    assert_eq!(v["parameters"]["seed"], 9);
    assert_eq!(v["parameters"]["specializations"].as_array().unwrap().len(), 2);
}

#[test]
fn failing_report_validates() {
    let report = Report::new(
        "demo".into(),
        skeinlab::report::Parameters { max_degree: 1, specializations: vec!["7/5".into()], seed: None },
        vec![skeinlab::report::CaseResult {
            name: "broken".into(),
            status: skeinlab::report::Status::Fail,
            witness: Some("1 != 0".into()),
            wall_time_ms: 3,
        }],
        3,
    );
    let v = validate(&report.to_json());
    assert_eq!(v["status"], "fail");
    assert_eq!(v["totals"]["failed"], 1);
    assert_eq!(Report::from_json(&report.to_json()).unwrap(), report);
}

#[test]
fn schema_rejects_malformed_reports() {
    let (_, text) = run(&["skeinlab", "verify", "braidop", "--json", "--max-degree", "1"]);
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["status"] = "ok".into();
    assert!(!schema().is_valid(&v));
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v.as_object_mut().unwrap().remove("totals");
    assert!(!schema().is_valid(&v));
}

#[test]
fn text_and_json_agree() {
    let (_, json) = run(&["skeinlab", "verify", "leftright", "--json", "--max-degree", "2"]);
    let (_, text) = run(&["skeinlab", "verify", "leftright", "--max-degree", "2"]);
    let report = Report::from_json(&json).unwrap();
    for c in &report.cases {
        let line = text.lines().find(|l| l.contains(&format!(" {} (", c.name))).expect("case line");
        assert!(line.starts_with(&c.status.to_string()), "{line}");
    }
    let summary = text.lines().last().unwrap();
    assert!(summary.contains(&format!("{} passed, {} failed of {}", report.totals.passed, report.totals.failed, report.totals.total)));
}
