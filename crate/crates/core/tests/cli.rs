use std::process::Command;

use serde_json::Value;

fn wgalg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_wgalg")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned(), String::from_utf8_lossy(&out.stderr).into_owned())
}

#[test]
fn verify_conjecture_passes_for_a3() {
    let (code, out, _) = wgalg(&["verify-conjecture", "--type", "A3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["dim"], 204);
}

#[test]
fn export_graph_writes_the_files() {
    let dir = std::env::temp_dir().join(format!("wgalg-cli-{}", std::process::id()));
    let (code, _, err) = wgalg(&["export-graph", "--type", "I2", "--m", "5", "--out-dir", dir.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let dot = std::fs::read_to_string(dir.join("I2_5_compat.dot")).unwrap();
    assert!(dot.starts_with("graph"));
    assert!(dir.join("I2_5_refined.json").exists());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_wgraph_reads_a_file() {
    let dir = std::env::temp_dir().join(format!("wgalg-wg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("sign.json");
    std::fs::write(&good, r#"{"vertices":["s"],"labels":{"s":["1","2","3"]},"weights":{}}"#).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "not json").unwrap();
    let (code, _, err) = wgalg(&["verify-wgraph", good.to_str().unwrap(), "--type", "A3"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(wgalg(&["verify-wgraph", bad.to_str().unwrap(), "--type", "A3"]).0, 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes_distinguish_usage_and_unsupported() {
    assert_eq!(wgalg(&["build-omega", "--type", "Q7"]).0, 2);
    assert_eq!(wgalg(&["build-omega", "--type", "H3"]).0, 3);
    assert_eq!(wgalg(&["build-omega", "--type", "A3", "--max-length", "2"]).0, 3);
}
