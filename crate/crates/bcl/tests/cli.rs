use std::process::{Command, Output};

fn bcl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bcl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

#[test]
fn gen_boolean_graph() {
    let o = bcl(&["gen", "bool:3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn gen_dual_complex() {
    let v = json(&bcl(&["gen", "dual:ind-complex:bool:3"]));
    let facets = v["facets"].as_array().unwrap();
    assert_eq!(facets.len(), 6);
    assert!(facets.iter().all(|f| f.as_array().unwrap().len() == 4));
}

#[test]
fn gen_rejects_bad_tokens() {
    let o = bcl(&["gen", "bool:0"]);
    assert_eq!(o.status.code(), Some(64));
    assert!(stderr(&o).contains("`0`"));
    let o = bcl(&["gen", "ind-complex:wheel:5"]);
    assert_eq!(o.status.code(), Some(64));
    assert!(stderr(&o).contains("`wheel`"));
}

#[test]
fn gen_dot_and_conditions() {
    let dot = stdout(&bcl(&["gen", "--dot", "bool:2"]));
    assert!(dot.starts_with("graph G {"));
    assert!(dot.contains("\"1\" -- \"2\";"));
    let v = json(&bcl(&["gen", "--conditions", "bool:2"]));
    let conds = v.as_array().unwrap();
    assert_eq!(conds.len(), 1);
    assert_eq!(conds[0]["text"], "x_1 = x_2");
    assert_eq!(conds[0]["coefficients"]["x_1"], 1);
    assert_eq!(conds[0]["coefficients"]["x_2"], -1);
}

#[test]
fn check_boolean_graph_properties() {
    let o = bcl(&["check", "bool:4", "vd", "unmixed"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&bcl(&["check", "bool:4", "vd", "unmixed", "--json"]));
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    assert!(results.iter().all(|r| r["verdict"] == "true"));

    let o = bcl(&["check", "bool:2", "chordal"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("true"));
}

#[test]
fn check_reports_obstruction_witness() {
    let v = json(&bcl(&[
        "check",
        "dual:ind-complex:bool:4",
        "obstruction",
        "--json",
    ]));
    let r = &v["results"][0];
    assert_eq!(r["property"], "obstruction");
    assert_eq!(r["verdict"], "true");
    assert!(r["detail"].as_str().unwrap().contains("cannot follow"));
}

#[test]
fn check_exit_codes() {
    let o = bcl(&["check", "bool:4", "chordal"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("chordless cycle"));
    let o = bcl(&["check", "dual:ind-complex:bool:4", "shellable"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("undecided:budget"));
    let o = bcl(&["check", "--memo-cap", "0", "bool:3", "vd"]);
    assert_eq!(o.status.code(), Some(2));
    let o = bcl(&["check", "ind-complex:bool:3", "chordal"]);
    assert_eq!(o.status.code(), Some(64));
    let o = bcl(&["check", "bool:3", "planar"]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn each_property_is_reported_once() {
    let v = json(&bcl(&["check", "bool:3", "vd", "vd", "cm", "--json"]));
    let names: Vec<&str> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["property"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["vd", "cm"]);
}

#[test]
fn certify_and_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let cert = cert.to_str().unwrap();
    let o = bcl(&["certify", "bool:5", "--schedule", "paper", "-o", cert]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = bcl(&["verify", "bool:5", cert]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("accepted"));

    for wrong in ["bool:4", "bool:6"] {
        let o = bcl(&["verify", wrong, cert]);
        assert_eq!(o.status.code(), Some(1), "{wrong}");
        assert!(stdout(&o).contains("rejected at root"), "{wrong}");
    }
}

#[test]
fn certify_complement_with_layered_schedule() {
    let o = bcl(&["certify", "bool-complement:4", "--schedule", "layered"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["object"], "bool-complement:4");
    assert_eq!(v["certificate"]["kind"], "shed");
}

#[test]
fn certify_without_schedule_and_with_a_user_schedule() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json");
    let cert = cert.to_str().unwrap();
    let o = bcl(&["certify", "cycle:5", "-o", cert]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(bcl(&["verify", "cycle:5", cert]).status.code(), Some(0));

    let o = bcl(&["certify", "cycle:4"]);
    assert_eq!(o.status.code(), Some(1));

    let o = bcl(&["certify", "bool:3", "--schedule", r#"["3","2","1"]"#]);
    assert_eq!(o.status.code(), Some(0));
    let o = bcl(&["certify", "bool:3", "--schedule", r#"["321"]"#]);
    assert_eq!(o.status.code(), Some(1));
    let o = bcl(&["certify", "cycle:5", "--schedule", "paper"]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn tampered_certificate_names_the_node() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let o = bcl(&["certify", "bool:3"]);
    let mut v = json(&o);
    v["certificate"]["deletion"] = serde_json::json!({"kind": "simplex"});
    std::fs::write(&path, v.to_string()).unwrap();
    let o = bcl(&["verify", "bool:3", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("root.deletion"));
}

#[test]
fn file_specs_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    std::fs::write(&path, bcl(&["gen", "bool:3"]).stdout).unwrap();
    let spec = format!("file:{}", path.display());
    let direct = json(&bcl(&["gen", "ind-complex:bool:3"]));
    let via_file = json(&bcl(&["gen", &format!("ind-complex:{spec}")]));
    assert_eq!(direct, via_file);
}

#[test]
fn dual_of_a_graph_is_the_dual_of_its_independence_complex() {
    let a = json(&bcl(&["dual", "bool:3"]));
    let b = json(&bcl(&["gen", "dual:ind-complex:bool:3"]));
    assert_eq!(a, b);
}

#[test]
fn reproduce_small_rows() {
    let o = bcl(&["reproduce", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("vd/n3"));
    assert!(!text.contains("/n4"));

    let v = json(&bcl(&["reproduce", "--max-n", "3", "--json"]));
    let rows = v.as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows
        .iter()
        .all(|r| r["status"] == "PASS" && r["n"].as_u64().unwrap() <= 3));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(bcl(&[]).status.code(), Some(64));
    assert_eq!(bcl(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(bcl(&["check", "bool:3"]).status.code(), Some(64));
    assert_eq!(bcl(&["--help"]).status.code(), Some(0));
}
