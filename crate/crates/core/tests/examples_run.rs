//! Every example runs to completion on small arguments.

use std::path::PathBuf;
use std::process::Command;

fn examples_dir() -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_BIN_EXE_bookgraph")).parent().unwrap().join("examples");
    if !dir.join("verify_conjecture").exists() {
        let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".into());
        let status = Command::new(cargo)
            .args(["build", "-q", "--examples", "-p", "bookgraph"])
            .status()
            .unwrap();
        assert!(status.success());
    }
    dir
}

#[test]
fn examples_run() {
    let dir = examples_dir();
    let cases: &[(&str, &[&str])] = &[
        ("bipartite_extraction", &["5", "24", "1"]),
        ("classical_suite", &["6"]),
        ("enumerate_classes", &["6"]),
        ("graph6_io", &[]),
        ("mubayi_upper", &["2", "12"]),
        ("neighbourhood_cut", &["30", "0.5", "3"]),
        ("prism_blowup", &["1", "2", "3", "1", "2", "3"]),
        ("s_graph_census", &["20"]),
        ("stress_search", &["10", "2", "20000", "1"]),
        ("surgery_pipeline", &["2", "12"]),
        ("verify_conjecture", &["8", "1"]),
    ];
    let on_disk = std::fs::read_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/examples"))
        .unwrap()
        .count();
    assert_eq!(on_disk, cases.len(), "an example is missing from the smoke list");
    for (name, args) in cases {
        let out = Command::new(dir.join(name)).args(*args).output().unwrap();
        assert!(
            out.status.success(),
            "{name} {args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stdout.is_empty(), "{name} printed nothing");
    }
}
