//! End-to-end behaviour of the `finlift` binary: exit codes, output shape,
//! determinism, and the verification report.

mod common;

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use finlift::enumerate_preorders;
use finlift_cli::verify_paper;
use serde_json::Value;

fn finlift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finlift"))
        .args(args)
        .output()
        .expect("spawn finlift")
}

fn finlift_threads(args: &[&str], threads: usize) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finlift"))
        .args(args)
        .env("RAYON_NUM_THREADS", threads.to_string())
        .output()
        .expect("spawn finlift")
}

struct TempFile(PathBuf);

impl TempFile {
    fn new(tag: &str, text: &str) -> Self {
        let path = std::env::temp_dir().join(format!("finlift-{}-{tag}.lift", std::process::id()));
        let mut f = std::fs::File::create(&path).unwrap();
        f.write_all(text.as_bytes()).unwrap();
        TempFile(path)
    }

    fn path(&self) -> &str {
        self.0.to_str().unwrap()
    }
}

impl Drop for TempFile {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn empty_file_runs_nothing() {
    let f = TempFile::new("empty", "");
    let o = finlift(&["run", f.path()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn holds_and_fails_are_both_successful_outcomes() {
    let f = TempFile::new("holds", "lift EMPTY_TO_PT |> CODIAG\n");
    let o = finlift(&["run", f.path()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("HOLDS"), "{}", stdout(&o));

    let f = TempFile::new("fails", "lift CODIAG |> CODIAG\n");
    let o = finlift(&["run", "--input", f.path()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("FAILS") && text.contains("counterexample"), "{text}");
}

#[test]
fn input_errors_exit_one_with_a_location() {
    let f = TempFile::new("syntax", "space S = { a <\n");
    let o = finlift(&["run", f.path()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());

    let f = TempFile::new("monotone", "space S = { b < s }\nmap f : S -> S = { b |-> s, s |-> b }\nlift f |> f\n");
    let o = finlift(&["run", f.path()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not monotone"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());

    let o = finlift(&["run", "/nonexistent/finlift/input.lift"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn config_errors_exit_one() {
    assert_eq!(finlift(&["--max-size", "6", "enumerate"]).status.code(), Some(1));
    assert_eq!(finlift(&["--max-size", "5", "verify-paper"]).status.code(), Some(1));
    assert_eq!(finlift(&["--max-size", "0", "verify-paper"]).status.code(), Some(1));
    assert_eq!(finlift(&["lift", "CODIAG", "nope"]).status.code(), Some(1));
    assert_eq!(finlift(&["check", "T2", "PT"]).status.code(), Some(1));
    assert_eq!(finlift(&["check", "T0", "CODIAG"]).status.code(), Some(1));
    assert_eq!(finlift(&["orthogonal", "middle", "CODIAG"]).status.code(), Some(1));
    assert_eq!(finlift(&["bogus"]).status.code(), Some(1));
    assert_eq!(finlift(&[]).status.code(), Some(1));
    assert_eq!(finlift(&["--help"]).status.code(), Some(0));
}

#[test]
fn one_shot_commands() {
    let o = finlift(&["lift", "EMPTY_TO_PT", "CODIAG"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("lift EMPTY_TO_PT |> CODIAG: HOLDS"));

    let o = finlift(&["check", "T1", "SIERP"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("FAILS"));

    let o = finlift(&["--max-size", "4", "enumerate"]);
    assert!(stdout(&o).contains("1, 1, 4, 29, 355"), "{}", stdout(&o));

    let o = finlift(&["hom", "SIERP", "SIERP"]);
    assert!(stdout(&o).starts_with("hom SIERP SIERP: 3 maps"));

    let o = finlift(&["--max-size", "2", "orthogonal", "right", "EMPTY_TO_PT"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("orthogonal right [EMPTY_TO_PT] size 2: 24 maps"));

    let f = TempFile::new("decls", "space S = { b < s }\nmap c : S -> PT = { b |-> pt, s |-> pt }\n");
    let o = finlift(&["check", "surjective", "c", "--input", f.path()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("HOLDS"));
}

#[test]
fn machine_output_is_sorted_json_lines() {
    let f = TempFile::new(
        "machine",
        "lift CODIAG |> CODIAG\ncheck T0 SIERP\nhom TWO SIERP\nenumerate 2\nmono CODIAG size 1\n",
    );
    let o = finlift(&["--machine", "run", f.path()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    for line in &lines {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["format"], 1);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        // serde_json's default map is ordered, so re-encoding is a fixpoint
        assert_eq!(serde_json::to_string(&v).unwrap(), *line);
    }
    let first: Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["holds"], false);
    assert!(first["counterexample"].is_object());
    let hom: Value = serde_json::from_str(lines[2]).unwrap();
    assert_eq!(hom["count"], 4);
}

#[test]
fn machine_output_ignores_thread_count() {
    let args = ["--machine", "--max-size", "2", "verify-paper"];
    let one = finlift_threads(&args, 1);
    let four = finlift_threads(&args, 4);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);

    let corpus = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/corpus/20_mixed.lift");
    let one = finlift_threads(&["--machine", "run", corpus], 1);
    let four = finlift_threads(&["--machine", "run", corpus], 4);
    assert_eq!(one.stdout, four.stdout);

    let in_pool = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| verify_paper(2).unwrap().to_json())
    };
    assert_eq!(in_pool(1), in_pool(3));
}

#[test]
fn verify_paper_small_universe_counts() {
    let report = verify_paper(2).unwrap();
    assert!(report.passed(), "{}", report.to_table());
    let spaces = enumerate_preorders(2).unwrap();
    assert_eq!(spaces.len(), 6);
    let maps: usize = spaces
        .iter()
        .flat_map(|p| spaces.iter().map(move |q| common::monotone_functions(p, q).len()))
        .sum();
    assert_eq!(maps, 69);
    let surj = report.suites.iter().find(|s| s.name == "surjective").unwrap();
    assert_eq!(surj.instances, maps);
    for sq in report.suites.iter().flat_map(|s| &s.counterexamples) {
        common::audit(sq).unwrap();
    }
}

#[test]
fn verify_paper_space_suites_grow_with_max_size() {
    let three = verify_paper(3).unwrap();
    assert!(three.passed(), "{}", three.to_table());
    let connected = |r: &finlift_cli::Report| r.suites.iter().find(|s| s.name == "connected").unwrap().instances;
    assert_eq!(connected(&three), 35);

    let four = verify_paper(4).unwrap();
    assert!(four.passed(), "{}", four.to_table());
    assert_eq!(connected(&four) - connected(&three), 355);
    // map suites stay at the size-3 universe
    let surj = |r: &finlift_cli::Report| r.suites.iter().find(|s| s.name == "surjective").unwrap().instances;
    assert_eq!(surj(&four), surj(&three));
}

#[test]
fn verify_paper_table_and_json() {
    let o = finlift(&["--max-size", "1", "verify-paper"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().starts_with("suite"));
    assert!(text.trim_end().ends_with("all suites pass"));

    let o = finlift(&["--machine", "--max-size", "1", "verify-paper"]);
    let v: Value = serde_json::from_str(stdout(&o).trim_end()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["max_size"], 1);
    assert!(v["suites"].as_array().unwrap().iter().all(|s| s["mismatches"] == 0));
}
