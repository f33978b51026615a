use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use cli::commands::{act, decompose, decompose_text};
use cli::tables::{rows_csv, rows_json, rows_text};
use cli::{all_checks, find_check, homspace_show, parse_partition, parse_range, reports_json, verify_all, DimsQuery, Settings, Space, Status};
use homspaces::DiskCache;
use modwin::WindowSpec;
use symgrp::Partition;

/// Dimension tables, window decompositions and the verification checklist
/// for the chord diagram categories.
#[derive(Parser)]
#[command(name = "diagcat", version)]
struct Cli {
    /// Store and reuse computed dimensions as `<DIR>/<label>.json`.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions of a family of spaces, one row per parameter tuple.
    Dims(DimsArgs),
    /// Dimensions, factors, filtration and idempotents of a window module.
    Decompose {
        /// A0modA2, TA2, A3Q, AQmodAQ4, AL1, AL2Q, zero, ...
        #[arg(value_parser = parse_spec)]
        module: WindowSpec,
        /// Largest arity of the window.
        #[arg(long = "N")]
        window: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run checks by id or number, or all of them.
    Verify {
        #[arg(required_unless_present = "all")]
        checks: Vec<String>,
        #[arg(long, conflicts_with = "checks")]
        all: bool,
        /// Largest degree on the Casimir Lie side of the quadratic check.
        #[arg(long, default_value_t = 3)]
        dmax: usize,
        /// Write the reports to this file.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
        /// Include runtimes in the written reports.
        #[arg(long)]
        timings: bool,
    },
    /// Hom-space listings.
    Homspace {
        #[command(subcommand)]
        command: HomspaceCommand,
    },
    /// Apply a morphism expression to basis elements of a window module.
    Act {
        #[arg(long, value_parser = parse_spec)]
        module: WindowSpec,
        #[arg(long = "N")]
        window: usize,
        #[arg(long)]
        expr: String,
        /// Arity of the input elements.
        #[arg(long)]
        n: usize,
        /// A single basis element instead of all of them.
        #[arg(long)]
        index: Option<usize>,
        /// Position of the expression's source among the strands.
        #[arg(long, default_value_t = 0)]
        offset: usize,
    },
}

#[derive(Subcommand)]
enum HomspaceCommand {
    /// Dimension and basis of one space.
    Show {
        #[arg(value_parser = parse_space)]
        space: Space,
        #[arg(long, default_value_t = 0)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct DimsArgs {
    /// catass, catlie, clc0, al0, jac or coend.
    #[arg(value_parser = parse_space)]
    space: Space,
    /// Degree range, e.g. 0..3 (inclusive).
    #[arg(long, value_parser = parse_range, default_value = "0")]
    d: RangeInclusive<usize>,
    /// Upper arity range.
    #[arg(long, value_parser = parse_range, default_value = "0")]
    m: RangeInclusive<usize>,
    /// Lower arity range.
    #[arg(long, value_parser = parse_range, default_value = "0")]
    n: RangeInclusive<usize>,
    /// For coend: induce the Specht module of this partition, e.g. 2,1.
    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
}

fn parse_spec(s: &str) -> Result<WindowSpec, String> {
    s.parse().map_err(|e: modwin::WinError| e.to_string())
}

fn parse_space(s: &str) -> Result<Space, String> {
    s.parse()
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(k) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global().context("setting up the worker pool")?;
    }
    let cache = cli.cache_dir.as_ref().map(DiskCache::new).transpose()?;
    match cli.command {
        Command::Dims(a) => {
            let q = DimsQuery { space: a.space, d: a.d, m: a.m, n: a.n, lambda: a.lambda };
            let rows = q.table(cache.as_ref())?;
            if a.json {
                println!("{}", pretty(&rows_json(a.space, &rows)));
            } else if a.csv {
                print!("{}", rows_csv(&rows)?);
            } else {
                println!("{}", rows_text(&rows));
            }
        }
        Command::Decompose { module, window, json } => {
            let v = decompose(module, window)?;
            println!("{}", if json { pretty(&v) } else { decompose_text(&v) });
        }
        Command::Verify { checks, all, dmax, json, timings } => {
            let selected = if all {
                all_checks()
            } else {
                let mut out = Vec::new();
                for k in &checks {
                    match find_check(k) {
                        Some(c) => out.push(c),
                        None => {
                            eprintln!("unknown check {k:?}; known: {}", all_checks().iter().map(|c| c.id).collect::<Vec<_>>().join(", "));
                            return Ok(ExitCode::from(2));
                        }
                    }
                }
                out
            };
            let settings = Settings { quadratic_dmax: dmax };
            let reports = verify_all(&selected, &settings);
            for r in &reports {
                println!("{}", r.line());
            }
            if let Some(path) = json {
                std::fs::write(&path, pretty(&reports_json(&reports, timings)) + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if reports.iter().any(|r| r.status == Status::Fail) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Homspace { command: HomspaceCommand::Show { space, d, m, n, json } } => {
            let v = homspace_show(space, d, m, n)?;
            if json {
                println!("{}", pretty(&v));
            } else {
                println!("{}: dim {}", v["label"].as_str().unwrap_or(""), v["dim"]);
                for (i, b) in v["basis"].as_array().into_iter().flatten().enumerate() {
                    println!("  [{i}] {}", b.as_str().unwrap_or(""));
                }
            }
        }
        Command::Act { module, window, expr, n, index, offset } => {
            for (x, y) in act(module, window, &expr, n, index, offset)? {
                println!("{x}  ↦  {y}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
