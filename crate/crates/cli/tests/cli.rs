use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl3lam"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn casimir_of_the_first_basis_point() {
    let out = run(&[
        "casimir",
        "--chart",
        "dstar:p",
        "--point",
        r#"{"flavor":"X","coords":["1","0","0","0","0","0","0","0","0","0"]}"#,
    ]);
    assert_eq!(stdout_json(&out), serde_json::json!({"w1":"0","w2":"1"}));
}

#[test]
fn mutate_zero_point_is_zero() {
    let zero = r#"{"flavor":"X","coords":["0","0","0","0","0","0","0","0","0","0"]}"#;
    let out = run(&["mutate", "--path", r#"[{"mutate":1}]"#, "--point", zero]);
    let v = stdout_json(&out);
    assert_eq!(v["flavor"], "X");
    assert!(v["coords"].as_array().unwrap().iter().all(|c| c == "0"));
}

#[test]
fn quiver_counts_for_dstar() {
    let out = run(&["quiver", "--surface", "dstar"]);
    let v = stdout_json(&out);
    assert_eq!(v["counts"]["vertices"], 10);
    assert_eq!(v["counts"]["unfrozen"], 6);
    assert_eq!(v["seed"]["size"], 10);
}

#[test]
fn surface_file_paths_work() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/dstar.json");
    let out = run(&["verify", "--suite", "weyl-relations", "--surface", path]);
    let v = stdout_json(&out);
    assert_eq!(v[0]["suite"], "weyl-relations");
    assert_eq!(v[0]["passed"], true);
}

#[test]
fn verify_single_suite_passes() {
    let out = run(&["verify", "--suite", "casimir-table"]);
    let v = stdout_json(&out);
    assert_eq!(v[0]["anchor"], "Prop. Casimir");
    assert_eq!(v[0]["passed"], true);
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = run(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn ends_actions() {
    let out = run(&["ends", "--multiset", "o+", "--action", "r1"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"], "1*i+ 1*i-");
    assert_eq!(v["theta"]["w1"], "-1");
    assert_eq!(v["theta"]["w2"], "1");

    let out = run(&["ends", "--tag-of", "i-"]);
    assert_eq!(stdout_json(&out)["tag"], serde_json::json!([2, 3]));
}

#[test]
fn catalog_lists_eleven() {
    let out = run(&["catalog"]);
    assert_eq!(stdout_json(&out).as_array().unwrap().len(), 11);
    let out = run(&["catalog", "--expand"]);
    assert_eq!(stdout_json(&out).as_array().unwrap().len(), 33);
}

#[test]
fn weyl_closed_form_on_the_first_basis_point() {
    let out = run(&[
        "weyl",
        "--chart",
        "dstar:1",
        "--generator",
        "2",
        "--point",
        r#"{"flavor":"X","coords":["1","0","0","0","0","0","0","0","0","0"]}"#,
    ]);
    let v = stdout_json(&out);
    // image is -e2 + e6 in chart labels; label 2 sits at the second spoke
    let coords: Vec<&str> =
        v["coords"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(coords.iter().filter(|&&c| c != "0").count(), 2);
    assert!(coords.contains(&"-1"));
    assert!(coords.contains(&"1"));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify", "--suite", "p-cluster-tracks"]);
    let b = run(&["verify", "--suite", "p-cluster-tracks"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn track_outputs_stations() {
    let out = run(&["track", "--chart", "dstar", "--path", r#"[{"mutate":4}]"#]);
    let v = stdout_json(&out);
    assert_eq!(v["stations"].as_array().unwrap().len(), 2);
}

#[test]
fn pretty_flag_formats_output() {
    let out = run(&["--pretty", "quiver", "--surface", "triangle"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\n  "));
}

#[test]
fn flip_rejects_boundary_and_spoke_edges() {
    let out = run(&["flip", "--surface", "square", "--edge", "2"]);
    assert_eq!(out.status.code(), Some(2));
    // the punctured-bigon spokes cannot flip without a self-fold
    let out = run(&["flip", "--surface", "dstar", "--edge", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // the square diagonal flips fine
    let out = run(&["flip", "--surface", "square", "--edge", "1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["path"].as_array().unwrap().len(), 4);
}
