//! Command-line front end for `tube-cluster`.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 bad input or
//! I/O trouble.

pub mod objspec;
pub mod render;

use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use tube_cluster::mutation::build_exchange_graph;
use tube_cluster::polygon::triangulation_of;
use tube_cluster::rigid::enumerate_maximal_rigid;
use tube_cluster::tube::hom_dims;
use tube_cluster::verify::{run_all, run_suite, Suite};
use tube_cluster::{MaximalRigid, TubeRank};

use crate::objspec::{format_list, format_object, parse_list, parse_object};

/// Ranks accepted by `verify`.
pub const VERIFY_RANKS: std::ops::RangeInclusive<u32> = 2..=8;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(tube_cluster::Error),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<tube_cluster::Error> for CliError {
    fn from(e: tube_cluster::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "cluster-tube", version, about = "Cluster combinatorics of rank-n tubes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hom and Ext dimensions between two indecomposables, as JSON.
    Hom {
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// List every maximal rigid object.
    Enumerate {
        #[arg(long)]
        rank: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Export the exchange graph with its exchange matrices.
    ExchangeGraph {
        #[arg(long)]
        rank: u32,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exchange matrix of a maximal rigid object, in the order given.
    Bmatrix {
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        object: String,
        /// Also print the Cartan counterpart.
        #[arg(long)]
        cartan: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Exchange one summand and mutate the matrix.
    Mutate {
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        object: String,
        #[arg(long)]
        at: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Centrally symmetric triangulation of a maximal rigid object.
    Polygon {
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        object: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run the consistency suites.
    Verify {
        #[arg(long)]
        rank: u32,
        /// all, hom, counts, mutation, polygon or no-ct
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

fn rank(n: u32) -> Result<TubeRank, CliError> {
    Ok(TubeRank::new(n)?)
}

fn only(format: Format, allowed: &[Format]) -> Result<(), CliError> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("format {format:?} is not available for this command")))
    }
}

fn maximal_rigid(r: TubeRank, spec: &str) -> Result<(Vec<tube_cluster::TubeObject>, MaximalRigid), CliError> {
    let listed = parse_list(r, spec)?;
    let mut sorted = listed.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(CliError::Usage("object lists a summand twice".into()));
    }
    let t = MaximalRigid::new(r, listed.clone())?;
    Ok((listed, t))
}

/// Runs one command, writing its output to `out`. Returns the exit code for
/// a completed run; errors map to exit code 2.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Hom { rank: n, from, to } => {
            let r = rank(n)?;
            let (x, y) = (parse_object(r, &from)?, parse_object(r, &to)?);
            writeln!(out, "{}", render::hom_json(&hom_dims(&x, &y)?))?;
        }
        Command::Enumerate { rank: n, format } => {
            only(format, &[Format::Json, Format::Table])?;
            let r = rank(n)?;
            let all = enumerate_maximal_rigid(r)?;
            match format {
                Format::Json => writeln!(out, "{}", render::enumerate_json(r, &all))?,
                _ => write!(out, "{}", render::enumerate_table(&all))?,
            }
        }
        Command::ExchangeGraph { rank: n, format, out: path } => {
            only(format, &[Format::Dot, Format::Json])?;
            let g = build_exchange_graph(rank(n)?)?;
            let text = match format {
                Format::Json => render::exchange_graph_json(&g),
                _ => render::exchange_graph_dot(&g),
            };
            match path {
                Some(p) => std::fs::write(&p, text)
                    .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display())))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Bmatrix { rank: n, object, cartan, format } => {
            only(format, &[Format::Table, Format::Json])?;
            let r = rank(n)?;
            let (listed, t) = maximal_rigid(r, &object)?;
            let g = build_exchange_graph(r)?;
            let b = g.b_matrix(&t)?.reindexed(&listed)?;
            let a = b.cartan_counterpart();
            match format {
                Format::Json => {
                    let mut v = serde_json::json!({
                        "order": render::coords(b.order()),
                        "matrix": b.entries().to_rows(),
                    });
                    if cartan {
                        v["cartan"] = serde_json::json!(a.to_rows());
                    }
                    writeln!(out, "{v}")?;
                }
                _ => {
                    write!(out, "{}", render::matrix_table(b.order(), b.entries()))?;
                    if cartan {
                        write!(out, "cartan:\n{a}")?;
                    }
                }
            }
        }
        Command::Mutate { rank: n, object, at, format } => {
            only(format, &[Format::Table, Format::Json])?;
            let r = rank(n)?;
            let (_, t) = maximal_rigid(r, &object)?;
            let at = parse_object(r, &at)?;
            let k = t
                .index_of(&at)
                .ok_or_else(|| CliError::Usage(format!("{} is not a summand of {t}", format_object(&at))))?;
            let g = build_exchange_graph(r)?;
            let (next, slot) = g.seed(&t)?.mutate(k)?;
            let replacement = next.object().summands()[slot];
            let b = next.matrix();
            match format {
                Format::Json => {
                    let v = serde_json::json!({
                        "object": render::coords(next.object().summands()),
                        "exchanged": render::coord(&at),
                        "replacement": render::coord(&replacement),
                        "order": render::coords(b.order()),
                        "matrix": b.entries().to_rows(),
                    });
                    writeln!(out, "{v}")?;
                }
                _ => {
                    writeln!(out, "object: {}", format_list(next.object().summands()))?;
                    writeln!(out, "exchanged: {} -> {}", format_object(&at), format_object(&replacement))?;
                    write!(out, "{}", render::matrix_table(b.order(), b.entries()))?;
                }
            }
        }
        Command::Polygon { rank: n, object, format } => {
            only(format, &[Format::Table, Format::Json])?;
            let r = rank(n)?;
            let (_, t) = maximal_rigid(r, &object)?;
            let tri = triangulation_of(&t)?;
            match format {
                Format::Json => writeln!(out, "{}", render::polygon_json(&t, &tri))?,
                _ => write!(out, "{}", render::polygon_table(&t, &tri))?,
            }
        }
        Command::Verify { rank: n, suite, format } => {
            only(format, &[Format::Table, Format::Json])?;
            if !VERIFY_RANKS.contains(&n) {
                return Err(CliError::Usage(format!(
                    "verify supports ranks {}..={}, got {n}",
                    VERIFY_RANKS.start(),
                    VERIFY_RANKS.end()
                )));
            }
            let r = rank(n)?;
            let outcomes = if suite == "all" {
                run_all(r)
            } else {
                let s = Suite::from_name(&suite)
                    .ok_or_else(|| CliError::Usage(format!("unknown suite {suite:?}")))?;
                run_suite(r, s)
            };
            let code = if outcomes.iter().all(|o| o.passed()) { 0 } else { 1 };
            match format {
                Format::Json => writeln!(out, "{}", render::verify_json(r, &suite, &outcomes, code))?,
                _ => write!(out, "{}", render::verify_table(r, &outcomes))?,
            }
            return Ok(code);
        }
    }
    Ok(0)
}
