use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factorforge"))
        .args(args)
        .env_remove("FACTORFORGE_BUDGET")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

const IDENTITIES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/src/suite/identities");

#[test]
fn factorize_exit_codes() {
    let o = ff(&["factorize", "A4", "--shape", "2,3,2"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("no (2,3,2)-factorization"));
    let o = ff(&["factorize", "C6", "--shape", "2,3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("found (2,3)-factorization"));
    let o = Command::new(env!("CARGO_BIN_EXE_factorforge"))
        .args(["factorize", "A5", "--shape", "2,3,5,2"])
        .env("FACTORFORGE_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(code(&o), 4);
    assert_eq!(code(&ff(&["factorize", "A4", "--shape", "2,2,2"])), 2);
    assert_eq!(code(&ff(&["factorize", "Nope", "--shape", "2"])), 2);
    assert_eq!(code(&ff(&["factorize", "A4"])), 1);
    assert_eq!(code(&ff(&["frobnicate"])), 1);
    assert_eq!(code(&ff(&["--help"])), 0);
}

#[test]
fn factorize_json_echoes_shape() {
    let o = ff(&["factorize", "S4", "--shape", "2,3,2,2", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["group"], "S4");
    assert_eq!(v["order"], 24);
    assert_eq!(v["shape"], "2,3,2,2");
    assert_eq!(v["outcome"], "found");
    assert_eq!(v["witness"]["factors"].as_array().unwrap().len(), 4);
    assert!(v["stats"]["nodes"].is_u64());
    let o = ff(&["factorize", "A4", "--shape", "2,3,2", "--json"]);
    assert_eq!(json(&o)["witness"], Value::Null);
}

#[test]
fn json_output_is_deterministic() {
    let strip = |mut v: Value| {
        v["stats"]["millis"] = Value::Null;
        v
    };
    for args in [&["multifold", "S4", "--json"][..], &["factorize", "C3^2:C4", "--shape", "2,9,2", "--json", "--jobs", "3"]] {
        let a = strip(json(&ff(args)));
        let b = strip(json(&ff(args)));
        assert_eq!(a, b);
    }
    let one = strip(json(&ff(&["factorize", "S4", "--shape", "3,2,2,2", "--json"])));
    let four = strip(json(&ff(&["factorize", "S4", "--shape", "3,2,2,2", "--json", "--jobs", "4"])));
    assert_eq!(one["witness"], four["witness"]);
}

#[test]
fn multifold_and_info() {
    let v = json(&ff(&["multifold", "A4", "--json"]));
    assert_eq!(v["verdict"], "not-multifold");
    assert_eq!(v["failing_shape"], "(2,3,2)");
    let v = json(&ff(&["multifold", "S4", "--json"]));
    assert_eq!(v["verdict"], "multifold");
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 4);
    let v = json(&ff(&["info", "A4", "--json"]));
    assert_eq!(v["class_sizes"], serde_json::json!([1, 3, 4, 4]));
    assert_eq!(v["center_order"], 1);
    assert_eq!(v["supersolvable"], false);
    assert_eq!(v["clt"], false);
    assert_eq!(v["thm12_hypotheses"], true);
    assert_eq!(v["sylow_orders"], serde_json::json!([{"p": 2, "order": 4}, {"p": 3, "order": 3}]));
    let o = ff(&["info", "C15"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("supersolvable: true"));
}

#[test]
fn construct_dumps() {
    let o = ff(&["construct", "S3", "--dump", "labels"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("S3: order 6"));
    assert!(out.contains("0\te"));
    let o = ff(&["construct", "C3", "--dump", "table"]);
    assert!(stdout(&o).contains("0 1 2\n1 2 0\n2 0 1"));
}

#[test]
fn subgroup_specs_resolve_identically() {
    let named = json(&ff(&["dcoset", "S5", "--a", "named:V", "--b", "named:S3", "--json"]));
    let by_gen = json(&ff(&["dcoset", "S5", "--a", "gen:(12)(34),(13)(24)", "--b", "gen:(12),(123)", "--json"]));
    assert_eq!(named, by_gen);
    let d = &named["decomposition"]["factors"];
    assert_eq!(d[1].as_array().unwrap().len(), 5);
    let idx = &named["decomposition"]["indices"][0];
    let list: Vec<String> = idx.as_array().unwrap().iter().map(|x| x.to_string()).collect();
    let by_index = json(&ff(&["dcoset", "S5", "--a", &format!("gen:{}", list.join(",")), "--b", "named:S3", "--json"]));
    assert_eq!(named, by_index);
    let o = ff(&["dcoset", "S5", "--a", "sylow:2", "--b", "sylow:2"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).starts_with("refused"));
    assert_eq!(code(&ff(&["dcoset", "S5", "--a", "named:Nope", "--b", "sylow:2"])), 2);
    assert_eq!(code(&ff(&["dcoset", "S5", "--a", "bogus", "--b", "sylow:2"])), 2);
}

#[test]
fn algebra_identity_files() {
    let path = Path::new(IDENTITIES).join("order48a.txt");
    let o = ff(&["algebra", "C4^2:C3", "--identity", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["holds"], true);
    assert_eq!(v["factorization"]["factors"].as_array().unwrap().len(), 5);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "e + g\ne + g\n").unwrap();
    let o = ff(&["algebra", "C4", "--identity", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("coefficient of g is 2"));
    std::fs::write(&bad, "e + g\ne + h\n").unwrap();
    let o = ff(&["algebra", "C4", "--identity", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 5"));
}

#[test]
fn verify_paper_claims() {
    let o = ff(&["verify-paper", "--claims", "bergman-a4,lemma7-identities"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() == 2);
    let v = json(&ff(&["verify-paper", "--claims", "gq-family", "--json"]));
    assert_eq!(v["claims"][0]["outcome"], "pass");
    assert!(v["claims"][0]["anchor"].is_string());
    assert_eq!(v["entries"].as_array().unwrap().len(), 0);
    let v = json(&ff(&["verify-paper", "--claims", "", "--json"]));
    assert_eq!(v["claims"].as_array().unwrap().len(), 0);
    assert_eq!(code(&ff(&["verify-paper", "--claims", "nope"])), 1);
    let o = ff(&["verify-paper", "--claims", "a5-2352", "--budget", "1000"]);
    assert_eq!(code(&o), 4);
    assert_eq!(code(&ff(&["explore", "nothing"])), 1);
}

#[test]
fn classify_catalog_file() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("cat.jsonl");
    std::fs::write(
        &cat,
        concat!(
            r#"{"id":"A4","construction":{"kind":"permutations","degree":4,"generators":[{"name":"a","cycles":"(12)(34)"},{"name":"t","cycles":"(123)"}]},"expected_order":12}"#,
            "\n",
            r#"{"id":"C6","construction":{"kind":"cyclic","n":6},"expected_order":6}"#,
            "\n",
            r#"{"id":"S4","construction":{"kind":"permutations","degree":4,"generators":[{"name":"r","images":[2,3,4,1]},{"name":"s","images":[2,1,3,4]}]},"expected_order":24}"#,
            "\n",
        ),
    )
    .unwrap();
    let out = dir.path().join("report.csv");
    let o = ff(&["classify", "--catalog", cat.to_str().unwrap(), "--format", "csv", "--out", out.to_str().unwrap(), "--jobs", "2"]);
    assert_eq!(code(&o), 0);
    let csv = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "id,order,supersolvable,multifold,failing_shape,nodes,millis");
    assert!(lines[1].starts_with("C6,6,true,multifold,,"));
    assert!(lines[2].starts_with("A4,12,false,not-multifold,\"(2,3,2)\","));
    assert!(lines[3].starts_with("S4,24,false,multifold,,"));
    let v = json(&ff(&["classify", "--catalog", cat.to_str().unwrap(), "--max-order", "12"]));
    assert_eq!(v["entries"].as_array().unwrap().len(), 2);
    let o = ff(&["factorize", "S4", "--catalog", cat.to_str().unwrap(), "--shape", "2,2,3,2"]);
    assert_eq!(code(&o), 0);

    std::fs::write(&cat, r#"{"id":"C12","construction":{"kind":"cyclic","n":12},"expected_order":13}"#).unwrap();
    let o = ff(&["classify", "--catalog", cat.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("C12"));
}
