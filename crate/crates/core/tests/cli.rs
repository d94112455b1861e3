use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const SAMPLE: &str = "n 9\n1 2\n3 4\n5 6\n1 7\n2 7\n2 8\n3 8\n4 8\n5 8\n5 9\n6 9\n";

fn dimspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dimspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn generated(dir: &TempDir, m: usize, sz: usize) -> PathBuf {
    let p = dir.path().join(format!("cdim_{m}_{sz}.txt"));
    let o = dimspec(&[
        "generate",
        "--m",
        &m.to_string(),
        "--s",
        &sz.to_string(),
        s(&p),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    p
}

#[test]
fn laplacian_spectrum_of_generated_graph() {
    let dir = TempDir::new().unwrap();
    let g = generated(&dir, 3, 3);
    let o = dimspec(&["spectra", s(&g), "--matrix", "l"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "9, 6^[2], 5^[3], 3^[2], 0");
}

#[test]
fn spectra_of_small_graphs() {
    let dir = TempDir::new().unwrap();
    let k2 = write(&dir, "k2.txt", "n 2\n1 2\n");
    assert_eq!(stdout(&dimspec(&["spectra", s(&k2)])).trim(), "1, -1");
    let sample = write(&dir, "sample.txt", SAMPLE);
    let o = dimspec(&["spectra", s(&sample), "--matrix", "q"]);
    assert_eq!(
        stdout(&o).trim(),
        "5.7321, 4.4142, 4, 2.2679, 1.5858, 1^[4]"
    );
}

#[test]
fn generate_to_stdout_parses_back() {
    let o = dimspec(&["generate", "--m", "1", "--s", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let g = dimspec::io::parse_graph(&stdout(&o)).unwrap();
    assert_eq!((g.order(), g.size()), (3, 3));
}

#[test]
fn generate_rejects_empty_parts() {
    for args in [["--m", "0", "--s", "2"], ["--m", "2", "--s", "0"]] {
        let mut full = vec!["generate"];
        full.extend(args);
        let o = dimspec(&full);
        assert_eq!(o.status.code(), Some(2));
        assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    }
}

#[test]
fn recognize_outputs() {
    let dir = TempDir::new().unwrap();
    let g = generated(&dir, 3, 3);
    for extra in [&[][..], &["--spectral"][..]] {
        let mut args = vec!["recognize", s(&g)];
        args.extend(extra);
        assert_eq!(stdout(&dimspec(&args)).trim(), "complete DIM: 1-2 3-4 5-6");
    }
    let c4 = write(&dir, "c4.txt", "n 4\n1 2\n2 3\n3 4\n4 1\n");
    assert_eq!(stdout(&dimspec(&["recognize", s(&c4)])).trim(), "none");
    let k3 = write(&dir, "k3.txt", "n 3\n1 2\n1 3\n2 3\n");
    assert_eq!(
        stdout(&dimspec(&["recognize", s(&k3)])).trim(),
        "complete DIM: 1-2"
    );
}

#[test]
fn bounds_report() {
    let dir = TempDir::new().unwrap();
    let sample = write(&dir, "sample.txt", SAMPLE);
    let text = stdout(&dimspec(&["bounds", s(&sample)]));
    assert!(text.contains("size window: [1, 4]"), "{text}");
    assert!(
        text.contains("adjacency lower bound: 3 (raw 2.0454)"),
        "{text}"
    );
    assert!(text.contains("laplacian lower bound: 1"), "{text}");
    assert!(text.contains("signless lower bound: 2"), "{text}");
    assert!(text.contains("induced matching upper bound: 3"), "{text}");

    let empty = write(&dir, "empty.txt", "n 3\n");
    let o = dimspec(&["bounds", s(&empty)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("adjacency lower bound: not applicable"));
}

#[test]
fn oracle_outputs_and_guard() {
    let dir = TempDir::new().unwrap();
    let sample = write(&dir, "sample.txt", SAMPLE);
    let text = stdout(&dimspec(&["oracle", s(&sample)]));
    assert!(text.starts_with("DIMs (6):"), "{text}");
    assert!(text.contains("  1-2 3-4 5-6\n"));
    assert!(text.contains("max induced matching: 3"));

    let c4 = write(&dir, "c4.txt", "n 4\n1 2\n2 3\n3 4\n4 1\n");
    assert!(stdout(&dimspec(&["oracle", s(&c4)])).starts_with("no DIM"));

    let o = dimspec(&["oracle", s(&sample), "--max-edges", "5"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn sweep_exit_codes() {
    let o = dimspec(&["sweep", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violations: 0"));
    let o = dimspec(&["sweep", "--n", "7", "--mode", "exhaustive"]);
    assert_eq!(o.status.code(), Some(4));
    let o = dimspec(&[
        "sweep", "--n", "7", "--mode", "random", "--count", "50", "--seed", "3", "--jobs", "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn json_envelope() {
    let dir = TempDir::new().unwrap();
    let g = generated(&dir, 2, 2);
    for cmd in ["spectra", "recognize", "bounds", "oracle"] {
        let o = dimspec(&[cmd, s(&g), "--json"]);
        assert_eq!(o.status.code(), Some(0), "{cmd}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["command"], cmd);
        assert_eq!(v["format_version"], 1);
        let digest = v["input_digest"].as_str().unwrap();
        assert!(
            digest.starts_with("sha256:") && digest.len() == 7 + 64,
            "{digest}"
        );
        assert!(!v["result"].is_null());
    }
    let o = dimspec(&["sweep", "--n", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["report"]["graphs"], 64);
}

#[test]
fn digest_covers_input_bytes() {
    use sha2::{Digest, Sha256};
    let dir = TempDir::new().unwrap();
    let text = "# path\nn 3\n1 2\n2 3\n";
    let p = write(&dir, "p3.txt", text);
    let v: serde_json::Value =
        serde_json::from_slice(&dimspec(&["bounds", s(&p), "--json"]).stdout).unwrap();
    let hex: String = Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect();
    assert_eq!(v["input_digest"], format!("sha256:{hex}"));
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(dimspec(&["spectra"]).status.code(), Some(2));
    assert_eq!(dimspec(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        dimspec(&["spectra", "/nonexistent/graph.txt"])
            .status
            .code(),
        Some(2)
    );
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "n 3\n1 4\n");
    let o = dimspec(&["spectra", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}
