use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_bookgraph");

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn bookgraph");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_of(args: &[&str], stdin: &str) -> String {
    let out = run(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn s_graph_line(b: usize, n: usize) -> String {
    let (b, n) = (b.to_string(), n.to_string());
    let out = stdout_of(&["construct", "s-graph", "--b", &b, "--n", &n], "");
    out.lines().next().unwrap().to_string() + "\n"
}

/// Every subcommand with the input it reads.
fn cases() -> Vec<(Vec<&'static str>, String)> {
    let s = s_graph_line(2, 10);
    let corpus = format!("{s}{}", s_graph_line(3, 14));
    vec![
        (vec!["construct", "s-graph", "--b", "3", "--n", "15"], String::new()),
        (vec!["construct", "prism", "--sizes", "1,2,3,1,2,3"], String::new()),
        (vec!["construct", "mubayi-upper", "--b", "2", "--n", "11"], String::new()),
        (vec!["stats"], corpus.clone()),
        (vec!["cut"], corpus.clone()),
        (vec!["extract", "--b-cap", "2"], corpus),
        (vec!["surgery", "--b-cap", "2"], s),
        (vec!["verify", "--n", "8", "--b", "1"], String::new()),
        (vec!["verify", "--n", "10", "--b", "2", "--stress", "--iterations", "20000"], String::new()),
        (vec!["stress", "--n", "12", "--b", "2", "--iterations", "20000"], String::new()),
        (vec!["suite", "--n-max", "6"], String::new()),
    ]
}

#[test]
fn output_is_identical_across_runs_and_worker_counts() {
    for (args, input) in cases() {
        let first = stdout_of(&args, &input);
        assert!(!first.is_empty(), "{args:?}");
        assert_eq!(first, stdout_of(&args, &input), "{args:?} differs between runs");
        for workers in ["1", "4"] {
            let mut with = vec!["--workers", workers];
            with.extend(&args);
            assert_eq!(first, stdout_of(&with, &input), "{args:?} differs with {workers} workers");
        }
    }
}

#[test]
fn seed_changes_stress_output() {
    let args = ["stress", "--n", "12", "--b", "2", "--iterations", "10000"];
    let a = stdout_of(&args, "");
    let mut seeded = vec!["--seed", "7"];
    seeded.extend(args);
    assert_ne!(a, stdout_of(&seeded, ""));
}

#[test]
fn certificate_is_json() {
    let out = stdout_of(&["verify", "--n", "9", "--b", "2"], "");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["min_triangles_found"], 4);
    assert_eq!(v["violation"], false);
    assert_eq!(v["extremal_witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
    assert_eq!(run(&["bogus"], "").status.code(), Some(64));
    assert_eq!(run(&["verify", "--n", "9"], "").status.code(), Some(64));
    assert_eq!(run(&["stats"], "xyz\n").status.code(), Some(1));
    assert_eq!(run(&["construct", "s-graph", "--b", "3", "--n", "5"], "").status.code(), Some(1));
    // Guard rail without the override.
    assert_eq!(run(&["verify", "--n", "12", "--b", "2"], "").status.code(), Some(1));
    assert_eq!(run(&["suite", "--n-max", "9"], "").status.code(), Some(1));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("bookgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("stats.jsonl");
    let path_str = path.to_str().unwrap();
    let printed = stdout_of(&["stats"], "Bw\n");
    assert!(stdout_of(&["--out", path_str, "stats"], "Bw\n").is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), printed);
    std::fs::remove_dir_all(dir).unwrap();
}
