//! Command implementations behind the `prefsuf` binary.
//!
//! Each command writes its primary output to `out` and returns the process
//! exit code: [`EXIT_OK`], [`EXIT_FAILURE`] for usage, input and I/O
//! problems, or [`EXIT_MISMATCH`] when an oracle cross-check disagrees.

use std::io::{self, Write};
use std::time::{Duration, Instant};

use rand::Rng;
use thiserror::Error;

use crate::bipartite::{BipartiteGraph, MatchStats, PatternMatcher};
use crate::error::Error;
use crate::oracle::{naive_bipartite, naive_prefsuf, SplitRecord};
use crate::prefsuf::{PrefSufIndex, QueryStats};
use crate::selfcheck;
use crate::text::period;
use crate::workload;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Index(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Drops one trailing `\n`, if present.
pub fn strip_newline(mut bytes: Vec<u8>) -> Vec<u8> {
    if bytes.last() == Some(&b'\n') {
        bytes.pop();
    }
    bytes
}

/// Prints `period=<p> periodic=<bool>`.
pub fn cmd_period(text: &[u8], out: &mut dyn Write) -> Result<i32, CliError> {
    let info = period(text)?;
    writeln!(out, "period={} periodic={}", info.period, info.periodic)?;
    Ok(EXIT_OK)
}

fn oracle_footer(out: &mut dyn Write, mismatches: usize) -> io::Result<()> {
    writeln!(
        out,
        "# oracle: {}",
        if mismatches == 0 { "OK" } else { "MISMATCH" }
    )
}

/// Answers one `i<TAB>j` query per line of `queries`.
pub fn cmd_query(
    text: &[u8],
    queries: &[u8],
    oracle: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let idx = PrefSufIndex::build(text)?;
    let n = text.len() as i64;
    let (mut range_errors, mut mismatches) = (0usize, 0usize);
    for (k, line) in queries.split(|&c| c == b'\n').enumerate() {
        let line = line.strip_suffix(b"\r").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&[u8]> = line.split(|&c| c == b'\t').collect();
        let parse = |f: &[u8]| {
            std::str::from_utf8(f)
                .ok()
                .and_then(|s| s.parse::<i64>().ok())
        };
        let (i, j) = match fields.as_slice() {
            [a, b] => match (parse(a), parse(b)) {
                (Some(i), Some(j)) => (i, j),
                _ => {
                    return Err(CliError::Input(format!(
                        "line {}: expected two decimal integers",
                        k + 1
                    )))
                }
            },
            _ => {
                return Err(CliError::Input(format!(
                    "line {}: expected `i<TAB>j`",
                    k + 1
                )))
            }
        };
        if !(0..n).contains(&i) || !(0..n).contains(&j) {
            writeln!(out, "{i}\t{j}\tERR")?;
            range_errors += 1;
            continue;
        }
        let (i, j) = (i as usize, j as usize);
        let answer = idx.query(i, j)?;
        writeln!(out, "{i}\t{j}\t{answer}")?;
        if oracle && answer.expand() != naive_prefsuf(text, i, j)? {
            mismatches += 1;
        }
    }
    if oracle {
        oracle_footer(out, mismatches)?;
    }
    Ok(if mismatches > 0 {
        EXIT_MISMATCH
    } else if range_errors > 0 {
        EXIT_FAILURE
    } else {
        EXIT_OK
    })
}

/// Prints `<u-id> <v-id> <first-split> <step> <count>` per matched edge, in
/// edge order. The first split belongs to the leftmost occurrence of the
/// pattern, so splits descend by `step` from it.
pub fn cmd_bipartite(
    pattern: &[u8],
    graph: &[u8],
    oracle: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = BipartiteGraph::parse(graph)?;
    let matcher = PatternMatcher::new(pattern)?;
    let matches = matcher.match_graph(&g);
    for m in &matches {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            g.u_node(m.u).id,
            g.v_node(m.v).id,
            m.splits.last().unwrap(),
            m.splits.step(),
            m.splits.count()
        )?;
    }
    if !oracle {
        return Ok(EXIT_OK);
    }
    let mut got: Vec<SplitRecord> = matches.iter().flat_map(|m| m.records()).collect();
    got.sort();
    let mismatches = usize::from(got != naive_bipartite(&g, pattern)?);
    oracle_footer(out, mismatches)?;
    Ok(if mismatches > 0 {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchMode {
    Build,
    Query,
    Bipartite,
}

impl std::str::FromStr for BenchMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "build" => Ok(BenchMode::Build),
            "query" => Ok(BenchMode::Query),
            "bipartite" => Ok(BenchMode::Bipartite),
            _ => Err(format!(
                "unknown bench mode {s:?} (expected build, query or bipartite)"
            )),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub mode: BenchMode,
    /// Text length, or total label length for `bipartite`.
    pub size: usize,
    /// Builds, queries or matching runs, depending on the mode.
    pub repetitions: usize,
    pub seed: u64,
    pub threads: usize,
    /// Alphabet size of random texts.
    pub sigma: u8,
    /// Edge count for `bipartite`; defaults to `size / 10`.
    pub edges: Option<usize>,
}

/// Runs `count` uniformly random queries and returns the elapsed time.
///
/// Query positions come from a seeded generator inside the timed loop, so the
/// generator's cost is the same for every index.
pub fn timed_random_queries(idx: &PrefSufIndex, count: usize, seed: u64) -> Duration {
    let n = idx.len();
    let mut rng = workload::rng(seed);
    let start = Instant::now();
    let mut sink = 0usize;
    for _ in 0..count {
        let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
        let p = idx.query(i, j).unwrap();
        sink = sink.wrapping_add(p.start() ^ p.step() ^ p.count());
    }
    let elapsed = start.elapsed();
    std::hint::black_box(sink);
    elapsed
}

/// Counters over `count` random queries drawn as in [`timed_random_queries`].
pub fn counted_random_queries(idx: &PrefSufIndex, count: usize, seed: u64) -> QueryStats {
    let n = idx.len();
    let mut rng = workload::rng(seed);
    let mut stats = QueryStats::default();
    for _ in 0..count {
        let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
        idx.query_counted(i, j, &mut stats).unwrap();
    }
    stats
}

/// Wall time per query, spreading `count` queries over `threads` readers.
fn parallel_query_time(idx: &PrefSufIndex, count: usize, seed: u64, threads: usize) -> Duration {
    if threads <= 1 {
        return timed_random_queries(idx, count, seed);
    }
    let start = Instant::now();
    std::thread::scope(|s| {
        for t in 0..threads {
            let share = count / threads + usize::from(t < count % threads);
            s.spawn(move || timed_random_queries(idx, share, seed.wrapping_add(t as u64)));
        }
    });
    start.elapsed()
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let k = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[k]
    } else {
        (xs[k - 1] + xs[k]) / 2.0
    }
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub fn cmd_bench(opts: &BenchOptions, out: &mut dyn Write) -> Result<i32, CliError> {
    if opts.size == 0 || opts.repetitions == 0 {
        return Err(CliError::Input(
            "size and repetitions must be at least 1".into(),
        ));
    }
    let mut rng = workload::rng(opts.seed);
    writeln!(
        out,
        "# bench mode={:?} size={} repetitions={} seed={} threads={}",
        opts.mode, opts.size, opts.repetitions, opts.seed, opts.threads
    )?;
    match opts.mode {
        BenchMode::Build => {
            let text = workload::random_text(&mut rng, opts.size, opts.sigma);
            let times: Vec<f64> = (0..opts.repetitions)
                .map(|_| {
                    let start = Instant::now();
                    std::hint::black_box(PrefSufIndex::build(text.as_slice()).unwrap());
                    ms(start.elapsed())
                })
                .collect();
            writeln!(out, "op\tmean_ms\tmedian_ms")?;
            writeln!(
                out,
                "build\t{:.3}\t{:.3}",
                mean(&times),
                median(times.clone())
            )?;
        }
        BenchMode::Query => {
            writeln!(
                out,
                "text\tbuild_ms\tmean_ns_per_query\tmedian_ns_per_query\tlce_queries\tmax_lce_per_query\tperiodic_answers\tend_answers"
            )?;
            let texts = [
                (
                    "random",
                    workload::random_text(&mut rng, opts.size, opts.sigma),
                ),
                ("unary", workload::unary_text(opts.size)),
            ];
            for (name, text) in texts {
                let start = Instant::now();
                let idx = PrefSufIndex::build(text)?;
                let build = ms(start.elapsed());
                let batches = opts.repetitions.min(10);
                let per_batch = opts.repetitions / batches;
                let ns: Vec<f64> = (0..batches)
                    .map(|b| {
                        let t = parallel_query_time(
                            &idx,
                            per_batch,
                            opts.seed ^ (b as u64 + 1),
                            opts.threads,
                        );
                        t.as_secs_f64() * 1e9 / per_batch as f64
                    })
                    .collect();
                let stats =
                    counted_random_queries(&idx, opts.repetitions.min(1_000_000), opts.seed);
                writeln!(
                    out,
                    "{name}\t{build:.3}\t{:.2}\t{:.2}\t{}\t{}\t{}\t{}",
                    mean(&ns),
                    median(ns.clone()),
                    stats.lce_queries,
                    stats.max_lce_per_query,
                    stats.periodic,
                    stats.ends
                )?;
            }
        }
        BenchMode::Bipartite => {
            let pattern = workload::periodic_text(b"aabaab", 62);
            let nodes = (opts.size / 200).max(1);
            let edges = opts.edges.unwrap_or(opts.size / 10);
            let g = workload::spanning_bipartite(&mut rng, &pattern, opts.size, nodes, edges);
            let matcher = PatternMatcher::new(pattern)?;
            let mut stats = MatchStats::default();
            let matched = matcher.match_graph_counted(&g, &mut stats).len();
            let times: Vec<f64> = (0..opts.repetitions)
                .map(|_| {
                    let start = Instant::now();
                    if opts.threads > 1 {
                        std::hint::black_box(matcher.match_graph_parallel(&g, opts.threads));
                    } else {
                        std::hint::black_box(matcher.match_graph(&g));
                    }
                    ms(start.elapsed())
                })
                .collect();
            writeln!(out, "N\tedges\tmean_ms\tmedian_ms\tletters_fed\tfailure_steps\tprefsuf_queries\tmatched_edges")?;
            writeln!(
                out,
                "{}\t{}\t{:.3}\t{:.3}\t{}\t{}\t{}\t{}",
                g.total_label_len(),
                g.edges().len(),
                mean(&times),
                median(times.clone()),
                stats.scan.letters_fed,
                stats.scan.failure_steps,
                stats.query.queries,
                matched
            )?;
        }
    }
    Ok(EXIT_OK)
}

/// Exhaustive checks over all binary strings up to `max_len`, plus
/// `bipartite_instances` random graphs.
pub fn cmd_selftest(
    max_len: usize,
    bipartite_instances: usize,
    seed: u64,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    writeln!(
        out,
        "# selftest max_len={max_len} bipartite_instances={bipartite_instances} seed={seed}"
    )?;
    let mut rng = workload::rng(seed);
    let reports = [
        selfcheck::exhaustive_lce(max_len),
        selfcheck::exhaustive_prefsuf(max_len),
        selfcheck::exhaustive_middle_occurrences(max_len),
        selfcheck::exhaustive_progressions(max_len),
        selfcheck::random_bipartite(&mut rng, bipartite_instances),
    ];
    let mut failed = false;
    for r in &reports {
        writeln!(out, "{r}")?;
        failed |= !r.passed();
    }
    Ok(if failed { EXIT_MISMATCH } else { EXIT_OK })
}
