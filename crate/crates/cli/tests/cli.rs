use std::process::{Command, Output};

use seminormal_core::json::{to_json, ExpansionDoc};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seminormal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expansion_json_round_trips() {
    let o = run(&["expand", "--shape", "3,1,1", "--tableau", "1,4,5/2/3", "--method", "projector"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let doc: ExpansionDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.terms.len(), 5);
    assert_eq!(to_json(&doc).unwrap().trim_end(), text.trim_end());
}

#[test]
fn methods_give_the_same_terms() {
    let get = |m: &str| {
        let o = run(&["expand", "--shape", "3,2", "--tableau", "1,3,5/2,4", "--method", m]);
        assert!(o.status.success(), "{m}");
        serde_json::from_slice::<ExpansionDoc>(&o.stdout).unwrap().terms
    };
    let fast = get("fast");
    for m in ["projector", "stepwise", "gram-schmidt"] {
        assert_eq!(get(m), fast, "{m}");
    }
}

#[test]
fn nonstandard_tableau_is_rejected() {
    let o = run(&["expand", "--shape", "2,2", "--tableau", "1,3/4,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert!(o.stdout.is_empty());
}

#[test]
fn shape_mismatch_is_rejected() {
    let o = run(&["expand", "--shape", "2,2", "--tableau", "1,2,3/4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn small_verify_succeeds() {
    let o = run(&["verify", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.is_array() || v.is_object());
}

#[test]
fn bench_csv_has_header() {
    let o = run(&["bench", "--shape", "3,2,2", "--repeat", "1", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("shape,method,terms,millis"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().any(|r| r.starts_with("\"3,2,2\",stepwise,16,") || r.starts_with("3,2,2,stepwise,16,")), "{rows:?}");
}

#[test]
fn modular_report_fields() {
    let o = run(&["modular", "--shape", "2,1", "--e", "3", "--node", "1,2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let keys: Vec<&str> = v[0].as_object().unwrap().keys().map(String::as_str).collect();
    for k in ["shape", "node", "e", "hypothesis", "pole_free", "generators_checked", "verdict"] {
        assert!(keys.contains(&k), "missing {k} in {keys:?}");
    }
}

#[test]
fn gram_sources_agree() {
    let get = |src: &str| {
        let o = run(&["gram", "--shape", "2,2", "--source", src]);
        assert!(o.status.success(), "{src}");
        serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap()
    };
    let a = get("seminormal");
    assert_eq!(a, get("definition"));
    assert_eq!(a, get("oracle"));
}
