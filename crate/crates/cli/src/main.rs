mod output;

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use earspec::ear::{find_bipartite_ear_decomposition, find_odd_ear_decomposition};
use earspec::extremal::{
    enumerate_minimal_factor_critical, enumerate_minimal_mc_bipartite, gen_cycle, gen_friendship, gen_p3star,
    verify_theorem_1, verify_theorem_2,
};
use earspec::matching::{
    is_factor_critical, is_matching_covered, is_minimal_factor_critical, is_minimal_matching_covered,
};
use earspec::spectral::spectral_radius;
use earspec::{parse_graph6, to_graph6, Graph, SpectralOptions};

use output::Format;

const TOL_ENV: &str = "EARSPEC_TOL";
const DEFAULT_TOL: f64 = 1e-12;

#[derive(Parser, Debug)]
#[command(name = "earspec", version, about = "Matching covered and factor-critical graph toolkit")]
struct Cli {
    /// Output format (json by default; gen and enumerate print graph6 lines
    /// unless a format is given).
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Eigen-residual tolerance; overrides EARSPEC_TOL.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Matching covered / factor-critical certificates for each input graph.
    Check(Input),
    /// Spectral radius and Perron vector for each input graph.
    Rho {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1_000_000)]
        max_iter: usize,
    },
    /// Print a graph of a named family.
    Gen {
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Ear decomposition of each input graph.
    Decompose {
        #[arg(long, value_enum)]
        kind: Kind,
        #[command(flatten)]
        input: Input,
    },
    /// Canonical graph6 codes of a class at one order.
    Enumerate {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long)]
        n: usize,
    },
    /// Spectral extremal check over a whole class at one order.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theorem: u8,
        #[arg(long)]
        n: usize,
    },
}

#[derive(clap::Args, Debug)]
struct Input {
    /// Read graph6 lines from a file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    P3star,
    Friendship,
    Cycle,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Bipartite,
    Odd,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Class {
    MinimalMcBipartite,
    MinimalFactorCritical,
}

/// Failure classes, each with its own exit code.
enum Failure {
    Usage(String),
    Malformed { line: usize, message: String },
    Verification,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn tolerance(flag: Option<f64>) -> Result<f64, Failure> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(raw) => raw
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("{TOL_ENV}={raw:?} is not a number")))?,
            Err(_) => DEFAULT_TOL,
        },
    };
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(Failure::Usage(format!("tolerance must be positive, got {tol}")))
    }
}

/// Reads graph6 lines, skipping blanks and `#` comments; the first
/// malformed line aborts with its 1-based line number.
fn read_graphs(input: &Input) -> Result<Vec<(String, Graph)>, Failure> {
    let reader: Box<dyn BufRead> = match &input.input {
        Some(path) => Box::new(BufReader::new(
            File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(io::stdin().lock()),
    };
    let mut graphs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let g = parse_graph6(text).map_err(|e| Failure::Malformed { line: i + 1, message: e.to_string() })?;
        graphs.push((text.to_string(), g));
    }
    Ok(graphs)
}

fn write_lines(lines: &[String]) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    for line in lines {
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let tol = tolerance(cli.tol)?;
    let format = cli.format;
    let json_default = format.unwrap_or(Format::Json);
    match cli.command {
        Command::Check(input) => {
            let graphs = read_graphs(&input)?;
            let lines: Vec<String> = graphs
                .par_iter()
                .map(|(code, g)| {
                    let certs = [
                        ("matching-covered", is_matching_covered(g)),
                        ("minimal-matching-covered", is_minimal_matching_covered(g)),
                        ("factor-critical", is_factor_critical(g)),
                        ("minimal-factor-critical", is_minimal_factor_critical(g)),
                    ];
                    output::certificates(json_default, code, &certs)
                })
                .collect();
            write_lines(&lines)
        }
        Command::Rho { input, max_iter } => {
            let graphs = read_graphs(&input)?;
            let opts = SpectralOptions { tol, max_iter };
            let lines: Vec<String> = graphs
                .par_iter()
                .map(|(code, g)| match spectral_radius(g, &opts) {
                    Ok(r) => output::spectral(json_default, code, &r),
                    Err(e) => output::failure(json_default, code, &e.to_string()),
                })
                .collect();
            write_lines(&lines)
        }
        Command::Gen { family, n } => {
            let g = match family {
                Family::P3star => gen_p3star(n),
                Family::Friendship => gen_friendship(n),
                Family::Cycle => gen_cycle(n),
            }
            .map_err(|e| Failure::Usage(e.to_string()))?;
            let code = to_graph6(&g).map_err(|e| Failure::Usage(e.to_string()))?;
            write_lines(&[output::generated(format, &code)])
        }
        Command::Decompose { kind, input } => {
            let graphs = read_graphs(&input)?;
            let lines: Vec<String> = graphs
                .par_iter()
                .map(|(code, g)| {
                    let found = match kind {
                        Kind::Bipartite => Ok(find_bipartite_ear_decomposition(g)),
                        Kind::Odd => find_odd_ear_decomposition(g).map_err(|e| e.to_string()),
                    };
                    output::decomposition(json_default, code, found)
                })
                .collect();
            write_lines(&lines)
        }
        Command::Enumerate { class, n } => {
            let (name, codes) = match class {
                Class::MinimalMcBipartite => ("minimal-mc-bipartite", enumerate_minimal_mc_bipartite(n)),
                Class::MinimalFactorCritical => ("minimal-factor-critical", enumerate_minimal_factor_critical(n)),
            };
            let codes = codes.map_err(|e| Failure::Usage(e.to_string()))?;
            write_lines(&output::enumeration(format, name, n, &codes))
        }
        Command::Verify { theorem, n } => {
            let opts = SpectralOptions { tol, max_iter: 1_000_000 };
            let report = if theorem == 1 { verify_theorem_1(n, &opts) } else { verify_theorem_2(n, &opts) }
                .map_err(|e| Failure::Usage(e.to_string()))?;
            write_lines(&output::report(json_default, theorem, &report))?;
            if report.bound_met && report.extremal_match {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("earspec: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Malformed { line, message }) => {
            eprintln!("earspec: line {line}: {message}");
            ExitCode::from(3)
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("earspec: {e}");
            ExitCode::from(1)
        }
    }
}
