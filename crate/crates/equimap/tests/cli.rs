//! End-to-end checks of the command-line interface.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_equimap"))
}

fn catalog_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("catalog/{name}.map"))
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn classify_catalog_maps() {
    for (name, want) in [
        ("T5", "[3^1,4^1,6^1,4^1]"),
        ("K10", "[4^4]"),
        ("T3", "[3^1,12^2]"),
    ] {
        let out = bin()
            .arg("classify")
            .arg(catalog_path(name))
            .output()
            .unwrap();
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), want, "{name}");
    }
}

#[test]
fn classify_mixed_map_exits_zero_with_witness() {
    let dir = std::env::temp_dir().join("equimap-cli-mixed");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pyramid.map");
    // pentagonal pyramid: apex type [3^5], base type [3^2,5^1]
    std::fs::write(
        &path,
        "f 1 2 3 4 5\nf 0 1 2\nf 0 2 3\nf 0 3 4\nf 0 4 5\nf 0 5 1\n",
    )
    .unwrap();
    let out = bin().arg("classify").arg(&path).output().unwrap();
    assert!(out.status.success());
    assert!(
        stdout(&out).contains("not semi-equivelar"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn classify_rejects_bad_input() {
    let dir = std::env::temp_dir().join("equimap-cli-bad");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.map");
    std::fs::write(&path, "f 0 1 2\n").unwrap(); // open disk: edges in one face
    let out = bin().arg("classify").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("expected 2"), "stderr: {err}");
}

#[test]
fn orbits_report_transitivity() {
    let out = bin()
        .arg("orbits")
        .arg(catalog_path("T1"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("vertex-orbits: 1 (transitive)"), "{text}");

    let out = bin()
        .arg("orbits")
        .arg(catalog_path("K1"))
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(!text.contains("(transitive)"), "{text}");

    let out = bin()
        .arg("orbits")
        .arg(catalog_path("T6"))
        .output()
        .unwrap();
    let text = stdout(&out);
    let n: usize = text
        .lines()
        .next()
        .unwrap()
        .trim_start_matches("vertex-orbits: ")
        .trim()
        .parse()
        .unwrap();
    assert!(n <= 3, "T6 must have at most 3 orbits, got {n}");
}

#[test]
fn enumerate_lists_admissible_types() {
    let out = bin()
        .args(["enumerate", "--surface", "torus"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 11);
    assert!(lines.contains(&"[3^4,6^1]".to_string()));

    let out = bin()
        .args(["enumerate", "--surface", "klein-bottle"])
        .output()
        .unwrap();
    let lines: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 10);
    assert!(!lines.contains(&"[3^4,6^1]".to_string()));

    let out = bin()
        .args(["enumerate", "--surface", "sphere"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_then_classify_round_trips() {
    let dir = std::env::temp_dir().join("equimap-cli-gen");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.map");
    let out = bin()
        .args([
            "generate", "--tiling", "[3^6]", "--basis", "3", "0", "0", "3", "--out",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# tiling [3^6] basis 3 0 0 3\n"));

    let out = bin().arg("classify").arg(&path).output().unwrap();
    assert_eq!(stdout(&out).trim(), "[3^6]");

    // degenerate basis is an input error
    let out = bin()
        .args([
            "generate", "--tiling", "[3^6]", "--basis", "2", "4", "1", "2", "--out",
        ])
        .arg(dir.join("bad.map"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dual_writes_the_dual_map() {
    let dir = std::env::temp_dir().join("equimap-cli-dual");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("tri.map");
    let dst = dir.join("hex.map");
    bin()
        .args([
            "generate", "--tiling", "[3^6]", "--basis", "4", "0", "0", "4", "--out",
        ])
        .arg(&src)
        .output()
        .unwrap();
    let out = bin().arg("dual").arg(&src).arg(&dst).output().unwrap();
    assert!(out.status.success());
    let out = bin().arg("classify").arg(&dst).output().unwrap();
    assert_eq!(stdout(&out).trim(), "[6^3]");
}

#[test]
fn aux_graph_reports_witness() {
    let out = bin()
        .args(["aux-graph", "--map"])
        .arg(catalog_path("T2"))
        .args(["--selector", "quad-diagonals"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("cycle components: 4 4 4 12"), "{text}");
    assert!(text.contains("not vertex-transitive"), "{text}");

    let out = bin()
        .args(["aux-graph", "--map"])
        .arg(catalog_path("K10"))
        .args(["--selector", "induced-3-cycles"])
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(text.contains("not 2-regular"), "{text}");
    assert!(text.contains("different degrees"), "{text}");
}

#[test]
fn verify_paper_exit_code_matches_report() {
    let all_pass = equimap::verify::paper_report().all_pass();
    let out = bin().arg("verify-paper").output().unwrap();
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(if all_pass { 0 } else { 1 }));
    assert_eq!(
        text.lines()
            .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
            .count(),
        9
    );

    let out = bin().args(["verify-paper", "--json"]).output().unwrap();
    let json = stdout(&out);
    assert!(json.contains("\"sections\""));
    assert!(json.contains("\"all_pass\""));
}

#[test]
fn cli_output_is_deterministic() {
    let once = bin()
        .arg("orbits")
        .arg(catalog_path("K6"))
        .output()
        .unwrap();
    let twice = bin()
        .arg("orbits")
        .arg(catalog_path("K6"))
        .output()
        .unwrap();
    assert_eq!(stdout(&once), stdout(&twice));
}
