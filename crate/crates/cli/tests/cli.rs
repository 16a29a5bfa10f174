use assert_cmd::Command;
use serde_json::Value;

fn bin() -> Command {
    Command::cargo_bin("cominuscule").unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = bin().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).unwrap()
}

fn csv_header(args: &[&str]) -> String {
    let mut full = vec!["--format", "csv"];
    full.extend_from_slice(args);
    stdout_of(&full).lines().next().unwrap_or_default().to_string()
}

#[test]
fn omega_json_has_the_documented_shape() {
    let v = json_of(&["omega", "decompose", "--space", "G:2:4", "--p", "2"]);
    assert_eq!(v["space"], "G:2:4");
    assert_eq!(v["p"], 2);
    assert_eq!(v["method"], "CauchyA");
    let summands = v["summands"].as_array().unwrap();
    assert_eq!(summands.len(), 2);
    for s in summands {
        assert!(s["weight"].is_array());
        assert!(s["levi_dim"].is_u64());
        assert_eq!(s["twist"], -3);
    }
    assert_eq!(v["rank_check"]["expected"], 6);
    assert_eq!(v["rank_check"]["got"], 6);
}

#[test]
fn e6_second_grade_matches_the_table() {
    let v = json_of(&["omega", "decompose", "--space", "E6", "--p", "2"]);
    let weights: Vec<Value> = v["summands"].as_array().unwrap().iter().map(|s| s["weight"].clone()).collect();
    assert_eq!(weights, vec![serde_json::json!([-3, 0, 0, 1, 0, 0])]);
}

#[test]
fn csv_headers_are_stable() {
    assert_eq!(csv_header(&["min-twist", "--space", "G:2:5", "--p", "3"]), "space,p,l,d,h0_dim");
    assert_eq!(
        csv_header(&["foliation", "rect", "--k", "2", "--n", "5", "--p", "4"]),
        "space,p,l,degree,kind,parameter_space,tf_rank,tf_c1,minimal"
    );
    assert_eq!(
        csv_header(&["table-audit", "--which", "E7", "--max-p", "2"]),
        "p,cell,weight,found,l_transcribed,l_computed,row_match"
    );
    assert_eq!(
        csv_header(&["catalog", "list", "--max-rank", "2"]),
        "space,lie_type,marked_node,dim,index_c1,cotangent_weight"
    );
}

#[test]
fn min_twist_on_a_grassmannian() {
    let out = stdout_of(&["--format", "csv", "min-twist", "--space", "G:2:5", "--p", "3"]);
    assert_eq!(out.lines().nth(1), Some("G:2:5,3,4,0,210"));
}

#[test]
fn quadric_min_twist_reports_the_closed_form() {
    let v = json_of(&["min-twist", "--space", "Q:5", "--p", "5"]);
    assert_eq!(v["space"], "Q:5");
    assert_eq!(v["l"], 5);
    assert_eq!(v["source"], "ClosedForm");
    assert_eq!(v["closed_form"], 5);
}

#[test]
fn parse_errors_name_the_column_and_exit_2() {
    bin()
        .args(["min-twist", "--space", "G:0:5"])
        .assert()
        .code(2)
        .stderr(predicates::str::contains("column 3"));
    bin().args(["rootsys", "dump", "--type", "X9"]).assert().code(2);
    bin().args(["omega", "decompose", "--space", "G:2:4"]).assert().code(2);
    bin().args(["omega", "decompose", "--space", "G:2:4", "--p", "9"]).assert().code(2);
}

#[test]
fn audit_exit_codes_follow_the_outcome() {
    bin().args(["table-audit", "--which", "E7", "--max-p", "4"]).assert().code(0);
    bin()
        .args(["--format", "csv", "table-audit", "--which", "E6"])
        .assert()
        .code(1)
        .stdout(predicates::str::contains("8,2,-9λ1+λ2+λ3+6λ6,false"));
}

#[test]
fn verify_passes_on_classical_families() {
    let v = json_of(&["verify", "--families", "A,C,D", "--max-rank", "4"]);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn out_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.json");
    bin()
        .args(["catalog", "list", "--max-rank", "3", "--out"])
        .arg(&path)
        .assert()
        .success()
        .stdout("");
    let text = std::fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert!(v.as_array().is_some_and(|a| !a.is_empty()));
}

#[test]
fn output_is_deterministic_across_runs_and_job_counts() {
    let args = ["--format", "csv", "nonvanishing", "--max-rank", "4"];
    let a = stdout_of(&args);
    let b = stdout_of(&args);
    let mut seq = vec!["--jobs", "1"];
    seq.extend_from_slice(&args);
    let c = stdout_of(&seq);
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn foliation_subcommands_run() {
    let v = json_of(&["foliation", "cayley"]);
    assert_eq!(v["space"], "E6");
    assert_eq!(v["p"], 8);
    assert_eq!(v["l"], 8);
    assert_eq!(v["degree"], -1);
    stdout_of(&["foliation", "sympl", "--n", "4", "--a", "2"]);
    stdout_of(&["foliation", "ortho", "--n", "5", "--a", "2"]);
    stdout_of(&["foliation", "scan", "--max-rank", "4"]);
}
