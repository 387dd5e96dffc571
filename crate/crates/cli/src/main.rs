//! `ivfg`: analyze interval-valued fuzzy graphs from the command line.
//!
//! Exit codes: 0 on success, 1 on a negative decision (an invalid graph
//! under `validate`, no witness under `iso`), 2 on input or usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ivfg::antipodal::antipodal_graph;
use ivfg::generate;
use ivfg::metrics::DEFAULT_VERTEX_CAP;
use ivfg::morphism::{find_morphism, MorphismKind, DEFAULT_MORPHISM_CAP};
use ivfg::status::status_summary;
use ivfg::{IvfGraph, MembershipInterval};
use ivfg_cli::{format, render};

/// Environment variable raising or lowering the vertex caps of the
/// exhaustive searches.
const CAP_VAR: &str = "IVFG_MAX_VERTICES";

#[derive(Parser)]
#[command(name = "ivfg", version, about = "Analyze interval-valued fuzzy graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a graph document and report every violated invariant.
    Validate { file: PathBuf },
    /// Print the distance matrix, eccentricities, radius and diameter.
    Report { file: PathBuf },
    /// Build the antipodal graph; print the diameter and each antipodal
    /// pair, and write the constructed graph.
    Antipodal {
        file: PathBuf,
        /// Write the constructed graph here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the complement graph.
    Complement {
        file: PathBuf,
        /// Write the complement here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the status table, median sets and self-median verdict.
    Status { file: PathBuf },
    /// Search for a morphism between two graphs; print the witness.
    Iso {
        file1: PathBuf,
        file2: PathBuf,
        /// hom, iso or co-weak.
        #[arg(long)]
        kind: MorphismKind,
    },
    /// Generate a graph from a standard family.
    Gen {
        #[arg(long)]
        kind: GenKind,
        /// Vertex count.
        #[arg(long)]
        n: usize,
        /// Weight of every vertex and edge (complete-constant), as MU,NU.
        #[arg(long)]
        weight: Option<MembershipInterval>,
        /// Vertex weight (even-cycle-alternating, path), as MU,NU.
        #[arg(long)]
        vertex: Option<MembershipInterval>,
        /// Weight of the odd-numbered cycle edges, as MU,NU.
        #[arg(long)]
        first: Option<MembershipInterval>,
        /// Weight of the even-numbered cycle edges, as MU,NU.
        #[arg(long)]
        second: Option<MembershipInterval>,
        /// Path edge weight, as MU,NU; give once to repeat or n-1 times.
        #[arg(long)]
        edge: Vec<MembershipInterval>,
        /// Write the generated graph here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    CompleteConstant,
    EvenCycleAlternating,
    Path,
}

/// An error that ends the run with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> InputError {
        InputError(e.to_string())
    }
}

/// What a successful command decided: exit 0, or 1 for a negative answer.
enum Decision {
    Done,
    Negative,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Decision::Done) => ExitCode::SUCCESS,
        Ok(Decision::Negative) => ExitCode::from(1),
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn caps() -> Result<(usize, usize), InputError> {
    match std::env::var(CAP_VAR) {
        Ok(value) => {
            let cap: usize = value.parse().map_err(|_| {
                InputError(format!("{CAP_VAR} must be a vertex count, got `{value}`"))
            })?;
            Ok((cap, cap))
        }
        Err(_) => Ok((DEFAULT_VERTEX_CAP, DEFAULT_MORPHISM_CAP)),
    }
}

fn load(path: &Path) -> Result<IvfGraph, InputError> {
    let text =
        fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok(format::parse_validated(&text)?)
}

fn write_graph(g: &IvfGraph, output: Option<&Path>) -> Result<(), InputError> {
    let document = format::serialize(g);
    match output {
        Some(path) => {
            fs::write(path, document).map_err(|e| InputError(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{document}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<Decision, InputError> {
    let (metrics_cap, morphism_cap) = caps()?;
    match cli.command {
        Command::Validate { file } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| InputError(format!("{}: {e}", file.display())))?;
            let g = format::parse_document(&text)?;
            let report = g.validate();
            println!("{report}");
            if report.is_valid() {
                Ok(Decision::Done)
            } else {
                Ok(Decision::Negative)
            }
        }
        Command::Report { file } => {
            let g = load(&file)?;
            print!("{}", render::report(&g, metrics_cap)?);
            Ok(Decision::Done)
        }
        Command::Antipodal { file, output } => {
            let g = load(&file)?;
            let result = antipodal_graph(&g, metrics_cap)?;
            print!("{}", render::antipodal_info(&result));
            write_graph(&result.graph, output.as_deref())?;
            Ok(Decision::Done)
        }
        Command::Complement { file, output } => {
            let g = load(&file)?;
            write_graph(&g.complement()?, output.as_deref())?;
            Ok(Decision::Done)
        }
        Command::Status { file } => {
            let g = load(&file)?;
            print!("{}", render::status(&status_summary(&g, metrics_cap)?));
            Ok(Decision::Done)
        }
        Command::Iso { file1, file2, kind } => {
            let g1 = load(&file1)?;
            let g2 = load(&file2)?;
            match find_morphism(&g1, &g2, kind, morphism_cap)? {
                Some(witness) => {
                    println!("{witness}");
                    Ok(Decision::Done)
                }
                None => {
                    println!("NotFound");
                    Ok(Decision::Negative)
                }
            }
        }
        Command::Gen {
            kind,
            n,
            weight,
            vertex,
            first,
            second,
            edge,
            output,
        } => {
            let g = match kind {
                GenKind::CompleteConstant => {
                    let weight = weight.ok_or(InputError("--weight is required".into()))?;
                    generate::complete_constant(n, weight)?
                }
                GenKind::EvenCycleAlternating => {
                    let vertex = vertex.ok_or(InputError("--vertex is required".into()))?;
                    let first = first.ok_or(InputError("--first is required".into()))?;
                    let second = second.ok_or(InputError("--second is required".into()))?;
                    generate::even_cycle_alternating(n, vertex, first, second)?
                }
                GenKind::Path => {
                    let vertex = vertex.ok_or(InputError("--vertex is required".into()))?;
                    let weights = match edge.as_slice() {
                        [] => return Err(InputError("--edge is required".into())),
                        [single] if n > 0 => vec![*single; n - 1],
                        many => many.to_vec(),
                    };
                    generate::path(n, vertex, &weights)?
                }
            };
            write_graph(&g, output.as_deref())?;
            Ok(Decision::Done)
        }
    }
}
