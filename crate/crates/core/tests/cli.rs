use gsp4_core::cli::{run, Outcome, VERBS};
use serde_json::{json, Value};
use std::io::Write;
use std::process::{Command, Stdio};

fn call(args: &[&str]) -> Outcome {
    run(std::iter::once("gsp4").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> Value {
    let o = call(args);
    assert_eq!(o.code, 0, "{:?}: {}", args, o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

fn temp_file(name: &str, body: &str) -> String {
    let p = std::env::temp_dir().join(format!("gsp4-cli-{}-{}", std::process::id(), name));
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn documented_examples() {
    let v = ok(&["table", "--type", "IVa"]);
    assert_eq!((v["N"].clone(), v["dims"].clone()), (json!("N3"), json!([0, 0, 0, 0, 1])));
    assert_eq!(ok(&["weights", "--mu1", "0", "--mu2", "0", "--w", "0"])["ht_weights"], json!([0, 1, 2, 3]));
    assert_eq!(ok(&["split", "--d", "-1", "--p", "5"])["splitting"], "split");
}

#[test]
fn nilpotent_and_dims() {
    let v = ok(&["classify-nilpotent", "--json", r#"[[0,1,0,0],[0,0,0,0],[0,0,0,-1],[0,0,0,0]]"#]);
    assert_eq!(v["orbit"], "N2");
    assert_eq!(ok(&["classify-nilpotent", "--partition", "3,1"])["symplectic"], false);
    assert_eq!(ok(&["classify-dims", "--dims", "0,0,1,1,3"])["type"], "VIa");
    assert_eq!(ok(&["classify-dims", "--dims", "9,9,9,9,9"])["type"], Value::Null);
    assert_eq!(call(&["classify-dims", "--dims", "1,2"]).code, 2);
}

#[test]
fn wd_output_feeds_purity() {
    let twist = "q^{3/2}";
    let st = call(&["wd", "--steinberg", "gsp4_steinberg", "--q", "3", "--twist", twist]);
    assert_eq!(st.code, 0, "{}", st.stderr);
    let v: Value = serde_json::from_str(&st.stdout).unwrap();
    assert_eq!(v["analysis"]["monodromy_rank"], 3);
    assert_eq!(v["analysis"]["indecomposable"], true);
    let path = temp_file("st.json", &st.stdout);
    assert_eq!(ok(&["purity", "--input", &path, "--weight", "3"])["pure"], true);
    assert_eq!(ok(&["purity", "--input", &path, "--weight", "2"])["pure"], false);
    let bc = ok(&["base-change", "--input", &path]);
    assert_eq!(bc["analysis"]["monodromy_rank"], 3);
}

#[test]
fn conductor_and_depth() {
    let doc = r#"{"group": {"named": "C3"}, "rep": {"dim": 2, "images": {"1": [["z3", "0"], ["0", "z3^2"]]}},
                  "filtration": [["0","1","2"], ["0","1","2"], ["0"]], "genuine": true}"#;
    let v = ok(&["conductor", "--json", doc]);
    assert_eq!((v["artin"].clone(), v["swan"].clone()), (json!("4"), json!("2")));
    assert_eq!(ok(&["depth", "--f", "8", "--n", "4"])["depth"], "1");
    assert_eq!(call(&["depth", "--f", "3", "--n", "4"]).code, 1);
}

#[test]
fn parameters_and_descent() {
    let v = ok(&["descend", "--n", "1", "--lambda", "2", "--n-prime", "5", "--lambda-prime", "0"]);
    assert_eq!(v["descends"], true);
    assert!(ok(&["parameter", "--n", "3", "--lambda", "1/2"]).is_object());
    assert!(ok(&["parameter", "--mu0", "0", "--nu1", "3", "--nu2", "1"]).is_object());
    assert_eq!(call(&["parameter", "--n", "3"]).code, 2);
}

#[test]
fn patch_and_verify_round_trip() {
    let fam = temp_file(
        "v4.json",
        r#"{"group": {"named": "V4"}, "members": [{"subgroup": ["1"]}, {"subgroup": ["2"]}, {"subgroup": ["3"]}],
            "global": {"dim": 1, "images": {"1": [["-1"]], "2": [["1"]]}}}"#,
    );
    let out = call(&["patch", "--family", &fam, "--oracle"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["oracle"]["agrees"], true);
    let cert = temp_file("cert.json", &out.stdout);
    assert_eq!(ok(&["verify", "--family", &fam, "--rep", &cert])["verified"], true);

    let amb = temp_file(
        "amb.json",
        r#"{"group": {"named": "V4"}, "members": [{"subgroup": ["1"]}], "global": {"dim": 1, "images": {"1": [["1"]], "2": [["1"]]}}}"#,
    );
    let o = call(&["patch", "--family", &amb]);
    assert_eq!(o.code, 1);
    let e: Value = serde_json::from_str(&o.stderr).unwrap();
    assert_eq!(e["detail"]["candidates"].as_array().unwrap().len(), 2);
    assert_eq!(call(&["patch", "--family", "/nonexistent/family.json"]).code, 2);
}

#[test]
fn cm_family() {
    let v = ok(&["cm-family", "--primes", "3,7", "--bound", "40"]);
    assert!(v["fields"].as_array().unwrap().iter().all(|d| d.as_i64().unwrap() < 0));
}

#[test]
fn schemas_for_every_verb() {
    for verb in VERBS {
        let v = ok(&[verb, "--schema"]);
        assert!(v.get("$schema").is_some(), "{}", verb);
    }
}

#[test]
fn binary_exit_codes_and_stdin() {
    let bin = env!("CARGO_BIN_EXE_gsp4");
    let st = Command::new(bin).args(["wd", "--partition", "2,2", "--q", "5"]).output().unwrap();
    assert!(st.status.success());
    let mut child = Command::new(bin)
        .args(["purity", "--input", "-", "--weight", "0"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&st.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pure"], true);
    assert_eq!(Command::new(bin).args(["split", "--d", "4", "--p", "5"]).output().unwrap().status.code(), Some(1));
    assert_eq!(Command::new(bin).arg("bogus").output().unwrap().status.code(), Some(2));
    assert_eq!(Command::new(bin).arg("--help").output().unwrap().status.code(), Some(0));
}
