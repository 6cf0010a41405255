use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture(name: &str) -> String {
    root().join("fixtures").join(name).display().to_string()
}

fn surfcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surfcount"))
        .args(args)
        .env_remove("SURFCOUNT_WORKERS")
        .output()
        .unwrap()
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn error_code(out: &Output) -> (i32, String) {
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    (
        out.status.code().unwrap(),
        v["error"]["code"].as_str().unwrap().to_string(),
    )
}

#[test]
fn validate_trefoil() {
    let v = stdout_json(&surfcount(&["validate", "--pd", &fixture("trefoil.pd")]));
    assert_eq!(v["alternating"], "yes");
    assert_eq!(v["weakly_prime"], "yes");
    assert_eq!(v["genus"], 0);
}

#[test]
fn gauss_and_pd_agree() {
    let pd = stdout_json(&surfcount(&["chunk", "--pd", &fixture("trefoil.pd")]));
    let gauss = stdout_json(&surfcount(&["chunk", "--gauss", &fixture("trefoil.gauss")]));
    assert_eq!(pd["sides"].as_array().unwrap().len(), 2);
    assert_eq!(
        pd["sides"][0]["edges"].as_array().unwrap().len(),
        gauss["sides"][0]["edges"].as_array().unwrap().len()
    );
}

#[test]
fn sphere_bound_is_exact() {
    let out = surfcount(&[
        "--format",
        "csv",
        "bound",
        "--theorem",
        "sphere_mi",
        "--n",
        "3",
        "--chi",
        "-1",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    // (6 * 3)^80
    let expected = num_bigint::BigUint::from(18u8).pow(80).to_string();
    assert!(text.contains(&format!("value,{expected}")), "{text}");
}

#[test]
fn farey_path_to_four_thirds() {
    let v = stdout_json(&surfcount(&["farey", "--target", "4/3"]));
    assert_eq!(v["path"], serde_json::json!(["0/1", "2/1", "4/3"]));
    assert_eq!(v["surface"]["genus"], 2);
}

#[test]
fn dehn_terms_for_four_pi() {
    let v = stdout_json(&surfcount(&[
        "dehn",
        "--n",
        "3",
        "--genus",
        "2",
        "--slope",
        "1/1",
        "--length",
        "4pi",
        "--terms-only",
    ]));
    assert_eq!(v["boundary_budget"], 2);
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn exit_codes() {
    assert_eq!(
        error_code(&surfcount(&["validate", "--pd", &fixture("malformed.pd")])).0,
        1
    );
    assert_eq!(
        error_code(&surfcount(&["farey", "--target", "3/2"])),
        (2, "not_even_slope".into())
    );
    assert_eq!(error_code(&surfcount(&["frobnicate"])), (1, "usage".into()));
    assert_eq!(
        error_code(&surfcount(&["validate", "--pd", "/nonexistent/x.pd"])).0,
        1
    );
    let big = surfcount(&["curves", "--pd", &fixture("trefoil.pd"), "--max-hits", "13"]);
    assert_eq!(error_code(&big).0, 2);
}

#[test]
fn config_file_supplies_defaults() {
    let dir = std::env::temp_dir().join(format!("surfcount-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("c.toml");
    std::fs::write(
        &cfg,
        format!("format = \"csv\"\npd = {:?}\n", fixture("trefoil.pd")),
    )
    .unwrap();
    let cfg = cfg.display().to_string();
    let out = surfcount(&["--config", &cfg, "curves", "--census"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("class,count\n"));

    // A flag overrides the file.
    let out = surfcount(&["--config", &cfg, "--format", "json", "curves", "--census"]);
    stdout_json(&out);

    std::fs::write(dir.join("bad.toml"), "bogus = 1\n").unwrap();
    let bad = dir.join("bad.toml").display().to_string();
    assert_eq!(
        error_code(&surfcount(&["--config", &bad, "farey", "--target", "2/1"])).0,
        1
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn workers_do_not_change_output() {
    let args = [
        "curves",
        "--pd",
        &fixture("figure_eight.pd"),
        "--max-hits",
        "6",
    ];
    let one = Command::new(env!("CARGO_BIN_EXE_surfcount"))
        .args(args)
        .env("SURFCOUNT_WORKERS", "1")
        .output()
        .unwrap();
    let four = surfcount(&[&["--workers", "4"][..], &args].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}
