use std::path::PathBuf;
use std::process::{Command, Output};

struct Scratch(tempfile::TempDir);

impl Scratch {
    fn new() -> Self {
        Scratch(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, contents: &[u8]) -> PathBuf {
        let path = self.0.path().join(name);
        std::fs::write(&path, contents).unwrap();
        path
    }
}

fn prefsuf(args: &[&std::ffi::OsStr]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prefsuf"))
        .args(args)
        .output()
        .unwrap()
}

macro_rules! run {
    ($($arg:expr),* $(,)?) => {
        prefsuf(&[$(std::ffi::OsStr::new(&$arg)),*])
    };
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn period_command() {
    let s = Scratch::new();
    let t = s.file("t.txt", b"aabaabaabaaba\n");
    let o = run!("period", t);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "period=3 periodic=true\n");

    let t = s.file("r.txt", b"aababaab\n");
    assert_eq!(stdout(&run!("period", t)), "period=5 periodic=false\n");

    // Keeping the newline makes it part of the text.
    let t = s.file("a.txt", b"aaaa\n");
    assert_eq!(
        stdout(&run!("period", t, "--strip-newline", "false")),
        "period=5 periodic=false\n"
    );
    assert_eq!(stdout(&run!("period", t)), "period=1 periodic=true\n");
}

#[test]
fn period_errors_exit_one() {
    let s = Scratch::new();
    let empty = s.file("e.txt", b"\n");
    let o = run!("period", empty);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("empty text"));
    assert_eq!(
        run!("period", s.0.path().join("missing")).status.code(),
        Some(1)
    );
    assert_eq!(run!("frobnicate").status.code(), Some(1));
    assert_eq!(run!("bench", "--mode", "nope").status.code(), Some(1));
}

#[test]
fn query_command_with_oracle() {
    let s = Scratch::new();
    let t = s.file("t.txt", b"aabaabaabaaba\n");
    let q = s.file("q.txt", b"9\t4\n0\t0\n12\t0\n3\t9\n");
    let plain = run!("query", t, q);
    assert_eq!(plain.status.code(), Some(0));
    assert_eq!(stdout(&plain).lines().next(), Some("9\t4\t0\t3\t3"));

    let checked = run!("query", t, q, "--oracle");
    assert_eq!(checked.status.code(), Some(0));
    assert_eq!(
        stdout(&checked),
        format!("{}# oracle: OK\n", stdout(&plain))
    );
    assert_eq!(stdout(&run!("query", t, q)), stdout(&plain));
}

#[test]
fn query_out_of_range_lines() {
    let s = Scratch::new();
    let t = s.file("t.txt", b"aababaab");
    let q = s.file("q.txt", b"5\t1\n8\t0\n1\t3\n");
    let o = run!("query", t, q);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "5\t1\t0\t5\t2\n8\t0\tERR\n1\t3\t0\t0\t0\n");
}

#[test]
fn bipartite_command() {
    let s = Scratch::new();
    let p = s.file("p.txt", b"aaaa\n");
    let g = s.file("g.tsv", b"U\tu1\tbaaa\nV\tv1\taaab\nE\tu1\tv1\n");
    let o = run!("bipartite", p, g, "--oracle");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "u1\tv1\t3\t1\t3\n# oracle: OK\n");

    let p = s.file("q.txt", b"ab\n");
    let g = s.file("h.tsv", b"U\tu1\tzz\nV\tv1\tzz\nE\tu1\tv1\n");
    let o = run!("bipartite", p, g);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");
}

#[test]
fn bipartite_format_errors_name_the_line() {
    let s = Scratch::new();
    let p = s.file("p.txt", b"ab\n");
    let g = s.file("g.tsv", b"U\tu1\tab\nV\tv1\tab\nE\tu1\tv2\n");
    let o = run!("bipartite", p, g);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn bench_and_selftest() {
    let o = run!(
        "bench",
        "--mode",
        "query",
        "--size",
        "1000",
        "--repetitions",
        "10000"
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("seed=42"));
    let o = run!(
        "bench",
        "--mode",
        "build",
        "--size",
        "1000",
        "--repetitions",
        "2"
    );
    assert!(stdout(&o).contains("mean_ms"));
    let o = run!("selftest", "--max-len", "6", "--bipartite-instances", "200");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        out.lines().filter(|l| l.starts_with("PASS")).count(),
        5,
        "{out}"
    );
}
