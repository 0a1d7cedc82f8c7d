//! Command-line front end. [`run`] takes the argument list and output
//! streams so it can be driven from tests.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{error::ErrorKind, CommandFactory, Parser, Subcommand, ValueEnum};
use kreg_core::{
    build_with, classify, erdos_gallai_graphic, exhaustive_exists, havel_hakimi_realize,
    verify_target, BuildOptions, Error, Realization, Target,
};

use crate::format::{encode_dot, encode_edgelist, parse_edgelist, OutputDocument};
use crate::sweep::{render_table, sweep};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

const PARITY_RULE: &str = "a connected k-regular graph on n vertices exists iff k >= 2, n >= k + 1 \
and n*k is even; when n*k is odd (n, k both odd) a connected nearly k-regular graph is built instead";

#[derive(Debug, Parser)]
#[command(
    name = "kreg",
    version,
    about = "Build and verify connected k-regular graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct a connected (nearly) k-regular graph on n vertices.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
        /// Write the construction trace document to this path.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Skip per-step degree and connectivity checks.
        #[arg(long)]
        no_step_checks: bool,
        /// Write the graph here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check an edge-list file against a regular or nearly regular target.
    Verify {
        #[arg(long)]
        k: usize,
        /// Expect one vertex of degree k - 1.
        #[arg(long)]
        nearly: bool,
        /// Edge-list file, or `-` for standard input.
        file: PathBuf,
    },
    /// Build and verify every constructible (n, k) in range.
    Sweep {
        #[arg(long)]
        k_max: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Run the Erdős–Gallai and Havel–Hakimi oracles on a degree sequence.
    CheckSeq {
        /// Degrees in non-increasing order.
        #[arg(required = true, num_args = 1..)]
        degrees: Vec<usize>,
    },
    /// Exhaustively search for a connected graph with the target profile (n <= 8).
    Exists {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let rendered = e.render().to_string();
                    let _ = write!(err, "{rendered}");
                    if !rendered.contains("Usage:") {
                        let _ = writeln!(err, "\n{}", Cli::command().render_usage());
                    }
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    match command {
        Command::Build {
            n,
            k,
            format,
            trace,
            no_step_checks,
            out: out_path,
        } => {
            let options = BuildOptions {
                step_checks: !no_step_checks,
            };
            let (g, construction) = match build_with(n, k, options) {
                Ok(built) => built,
                Err(e @ (Error::Infeasible { .. } | Error::UnsupportedDegree { .. })) => {
                    writeln!(err, "error: {e}")?;
                    writeln!(err, "note: {PARITY_RULE}")?;
                    return Ok(EXIT_INFEASIBLE);
                }
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_FAILURE);
                }
            };
            let class = classify(n, k).class;
            if let Some(path) = trace {
                let doc = OutputDocument::new(&g, k, class, Some(construction));
                std::fs::write(path, doc.encode())?;
            }
            let text = match format {
                Format::Edgelist => encode_edgelist(&g),
                Format::Dot => encode_dot(&g),
            };
            match out_path {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            writeln!(
                err,
                "built {class} graph: n = {n}, k = {k}, {} edges",
                g.edge_count()
            )?;
            Ok(EXIT_OK)
        }
        Command::Verify { k, nearly, file } => {
            let text = if file.as_os_str() == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            } else {
                std::fs::read_to_string(&file)?
            };
            let g = match parse_edgelist(&text) {
                Ok(g) => g,
                Err(e) => {
                    writeln!(err, "error: {}: {e}", file.display())?;
                    return Ok(EXIT_FAILURE);
                }
            };
            let target = if nearly {
                Target::NearlyRegular
            } else {
                Target::Regular
            };
            let report = verify_target(&g, k, target);
            writeln!(out, "{report}")?;
            if report.passed() {
                writeln!(out, "overall: pass")?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "overall: FAIL")?;
                Ok(EXIT_FAILURE)
            }
        }
        Command::Sweep { k_max, n_max, jobs } => {
            let rows = sweep(k_max, n_max, jobs as usize, BuildOptions::default());
            out.write_all(render_table(&rows).as_bytes())?;
            if rows.iter().all(|r| r.outcome.is_ok()) {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_FAILURE)
            }
        }
        Command::CheckSeq { degrees } => {
            let eg = match erdos_gallai_graphic(&degrees) {
                Ok(v) => v,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_USAGE);
                }
            };
            let verdict = |b: bool| if b { "graphic" } else { "non-graphic" };
            writeln!(out, "erdos-gallai: {}", verdict(eg))?;
            match havel_hakimi_realize(&degrees).expect("sequence already validated") {
                Realization::Realized(g) => {
                    let connected = if g.is_connected() {
                        "connected"
                    } else {
                        "disconnected"
                    };
                    writeln!(out, "havel-hakimi: graphic ({connected} realization)")?;
                    out.write_all(encode_edgelist(&g).as_bytes())?;
                }
                Realization::NonGraphic => writeln!(out, "havel-hakimi: non-graphic")?,
            }
            Ok(EXIT_OK)
        }
        Command::Exists { n, k } => {
            let target = if n * k % 2 == 0 {
                Target::Regular
            } else {
                Target::NearlyRegular
            };
            match exhaustive_exists(n, k, target) {
                Ok(found) => {
                    let class = target.class();
                    writeln!(out, "n = {n}, k = {k}, target = {class}: {found}")?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    Ok(EXIT_USAGE)
                }
            }
        }
    }
}
