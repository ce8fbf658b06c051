use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use prefsuf::cli::{self, BenchMode, BenchOptions, CliError, EXIT_FAILURE};

/// Constant-time prefix-suffix queries and bipartite pattern matching.
#[derive(Parser, Debug)]
#[command(name = "prefsuf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the smallest period of a text file.
    Period {
        text: PathBuf,
        /// Drop one trailing newline from the file (pass `false` to keep it).
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        strip_newline: bool,
    },
    /// Answer `i<TAB>j` prefix-suffix queries against a text file.
    Query {
        text: PathBuf,
        queries: PathBuf,
        /// Cross-check every answer against brute force.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        strip_newline: bool,
    },
    /// Match a pattern across the edges of a bipartite graph file.
    Bipartite {
        pattern: PathBuf,
        graph: PathBuf,
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        strip_newline: bool,
    },
    /// Time index construction, queries or bipartite matching.
    Bench {
        #[arg(long, default_value = "query")]
        mode: BenchMode,
        #[arg(long, default_value_t = 1_000_000)]
        size: usize,
        #[arg(long, default_value_t = 10_000_000)]
        repetitions: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Alphabet size of random texts (1..=26).
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=26))]
        sigma: u8,
        #[arg(long)]
        edges: Option<usize>,
    },
    /// Check the indexes against brute force on every small binary string.
    Selftest {
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, default_value_t = 10_000)]
        bipartite_instances: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn read(path: &Path, strip: bool) -> Result<Vec<u8>, CliError> {
    let bytes =
        std::fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(if strip {
        cli::strip_newline(bytes)
    } else {
        bytes
    })
}

fn run(command: Command) -> Result<i32, CliError> {
    let mut stdout = std::io::stdout().lock();
    let out = &mut stdout;
    match command {
        Command::Period {
            text,
            strip_newline,
        } => cli::cmd_period(&read(&text, strip_newline)?, out),
        Command::Query {
            text,
            queries,
            oracle,
            strip_newline,
        } => cli::cmd_query(
            &read(&text, strip_newline)?,
            &read(&queries, false)?,
            oracle,
            out,
        ),
        Command::Bipartite {
            pattern,
            graph,
            oracle,
            strip_newline,
        } => cli::cmd_bipartite(
            &read(&pattern, strip_newline)?,
            &read(&graph, false)?,
            oracle,
            out,
        ),
        Command::Bench {
            mode,
            size,
            repetitions,
            seed,
            threads,
            sigma,
            edges,
        } => {
            let opts = BenchOptions {
                mode,
                size,
                repetitions,
                seed,
                threads,
                sigma,
                edges,
            };
            cli::cmd_bench(&opts, out)
        }
        Command::Selftest {
            max_len,
            bipartite_instances,
            seed,
        } => cli::cmd_selftest(max_len, bipartite_instances, seed, out),
    }
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { EXIT_FAILURE as u8 } else { 0 });
        }
    };
    match run(args.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("prefsuf: {e}");
            ExitCode::from(EXIT_FAILURE as u8)
        }
    }
}
