use std::io::Write;
use std::process::{Command, Output, Stdio};

use cordial::io::ReportRecord;

fn cordial(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cordial"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
}

fn csv_rows(out: &str) -> Vec<ReportRecord> {
    csv::Reader::from_reader(out.as_bytes())
        .deserialize()
        .collect::<Result<_, _>>()
        .unwrap()
}

#[test]
fn compute_k4_from_stdin() {
    let o = cordial(&["compute", "--format", "graph6"], Some(b"C~\n"));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "d1"), "2");
    assert_eq!(field(&out, "d2"), "2");
    assert_eq!(field(&out, "cordial"), "false");
}

#[test]
fn compute_edge_list_file() {
    let dir = std::env::temp_dir().join(format!("cordial-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c8.txt");
    let mut text = String::from("# eight-cycle\nn 8\n");
    for i in 0..8 {
        text += &format!("{} {}\n", i, (i + 1) % 8);
    }
    std::fs::write(&path, text).unwrap();
    let o = cordial(&["compute", "--input", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert_eq!((field(&out, "d1"), field(&out, "d2")), ("0", "0"));
    assert_eq!(field(&out, "cordial"), "true");
}

#[test]
fn compute_family() {
    let o = cordial(&["compute", "--family", "multipartite", "--parts", "3,3,3"], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "d2"), "1");
}

#[test]
fn exit_codes() {
    let o = cordial(&["compute", "--family", "complete", "--n", "31"], None);
    assert_eq!(o.status.code(), Some(3));
    let o = cordial(&["compute", "--format", "graph6"], Some(b"D h"));
    assert_eq!(o.status.code(), Some(2));
    let o = cordial(&["compute", "--family", "cycle", "--n", "2"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = cordial(&["compute", "--input", "/nonexistent/graph.g6"], None);
    assert_eq!(o.status.code(), Some(4));
    let o = cordial(&["frobnicate"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = cordial(
        &["sweep", "--family", "cycle", "--max", "4", "--out", "/nonexistent/dir/x.csv"],
        None,
    );
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn verify_cycles() {
    let o = cordial(&["verify", "--family", "cycle", "--min", "3", "--max", "18"], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.trim_end().ends_with("EQUAL")).count(), 16);
    assert!(!out.contains("MISMATCH"));
}

#[test]
fn verify_multipartite() {
    let o = cordial(&["verify", "--family", "multipartite", "--total-max", "8"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("IN-INTERVAL"));
    assert!(out.contains("EQUAL"));
}

#[test]
fn verify_join() {
    let o = cordial(&["verify", "--family", "join", "--samples", "200", "--seed", "7"], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("# prng=ChaCha8 seed=7"));
    assert_eq!(out.lines().filter(|l| l.ends_with("BOUND-HELD")).count(), 200);
}

#[test]
fn sweep_wheels_is_deterministic() {
    let args = ["sweep", "--family", "wheel", "--min", "4", "--max", "12"];
    let a = cordial(&args, None);
    let b = cordial(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let rows = csv_rows(&stdout(&a));
    assert_eq!(rows.len(), 9);
    for r in &rows {
        assert!(r.d1_lower <= r.d1 && r.d1 <= r.d1_upper);
        assert_eq!(r.witness_d1.len(), r.n);
        assert_eq!(r.elapsed_ms, 0);
    }
}

#[test]
fn sweep_complete_second_measure() {
    let rows = csv_rows(&stdout(&cordial(
        &["sweep", "--family", "complete", "--min", "1", "--max", "12"],
        None,
    )));
    for r in rows {
        assert_eq!(r.d2, r.n / 2);
        assert_eq!(r.cordial, r.n <= 3);
    }
}

#[test]
fn sweep_trees_json() {
    let args = ["sweep", "--family", "tree", "--samples", "50", "--n", "10", "--seed", "1", "--format", "json"];
    let a = cordial(&args, None);
    assert_eq!(a.status.code(), Some(0));
    let rows: Vec<ReportRecord> = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(rows.len(), 50);
    assert!(rows.iter().all(|r| r.n == 10 && r.m == 9 && r.d1 == 1 && r.d2 == 1));
    assert_eq!(cordial(&args, None).stdout, a.stdout);
}

#[test]
fn bench_reports_rates() {
    let o = cordial(&["bench", "--family", "cycle", "--n", "12", "--threads", "2"], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("labellings/s"));
    assert!(out.contains("speedup:"));
}
