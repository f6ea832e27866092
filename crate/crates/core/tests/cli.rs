use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kn-embed")).current_dir(root()).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn k8_type5_is_refused() {
    let o = run(&["construct", "--n", "8", "--type", "5"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not have a nearly triangular"));
}

#[test]
fn verify_k10_table() {
    let o = run(&["verify", "fixtures/k10_p3.rot"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("surface S3"), "{s}");
    assert!(s.contains("triangular true"));
    assert!(s.contains("rule R* pass"));
}

#[test]
fn verify_json() {
    let o = run(&["--format", "json", "verify", "fixtures/k10_p3.rot"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["surface"], "S3");
    assert_eq!(v["faces"], 28);
    assert_eq!(v["rule_r_star"], true);
}

#[test]
fn classify_k5_lists_types() {
    let o = run(&["--format", "json", "classify-k5"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["systems"], 7776);
    assert_eq!(v["realized"].as_array().unwrap().len(), 5);
    assert_eq!(v["absent"], serde_json::json!(["(6,5)", "(5,4,4,4)"]));
}

#[test]
fn certificate_round_trip() {
    let o = run(&["construct", "--n", "10", "--type", "5,4"]);
    assert_eq!(o.status.code(), Some(0));
    let dir = std::env::temp_dir().join(format!("kn-embed-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cert = dir.join("k10.cert");
    std::fs::write(&cert, &o.stdout).unwrap();
    let v = run(&["verify", cert.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0), "{}", String::from_utf8_lossy(&v.stderr));
    assert!(stdout(&v).starts_with("certificate ok: K10 type (5,4)"));

    // a tampered digest is a verification failure
    let bad = stdout(&o).replacen("F=", "F=1", 1);
    std::fs::write(&cert, bad).unwrap();
    assert_eq!(run(&["verify", cert.to_str().unwrap()]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["construct", "--n", "50", "--type", "6,5"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "Cargo.toml"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "--n", "10", "--type", "6", "--fixtures", "/nonexistent"]).status.code(), Some(3));
}

#[test]
fn derive_and_search() {
    let o = run(&["derive", "fixtures/z18_example.cur"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0. 11 x 7 a 8 w 13 1 15 9 6 5 u 16 y_0 2 v 10 c 14 17 12 3 4 b"));
    let s = run(&["search", "--graph", "K7"]);
    assert_eq!(s.status.code(), Some(0));
    let e = kn_embed::Embedding::new(kn_embed::rotfmt::parse_rot(&stdout(&s)).unwrap()).unwrap();
    assert!(e.is_triangular());
    let j = run(&["--format", "json", "search", "--graph", "K7", "--budget", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert!(v["status"] == "budget" || v["status"] == "found", "{v}");
}

#[test]
fn surgery_replays_script() {
    let dir = std::env::temp_dir().join(format!("kn-embed-surgery-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let script = dir.join("s.txt");
    std::fs::write(&script, "delvtx p\n").unwrap();
    let o = run(&["--format", "json", "surgery", "fixtures/k23_p.rot", "--script", script.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["embedding_type"], "(5)");
    assert_eq!(v["summary"]["surface"], "S32");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn maxgenus_k9() {
    let o = run(&["--format", "json", "maxgenus", "--n", "9"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["faces"], 1);
    assert_eq!(v["summary"]["surface"], "S14");
}
