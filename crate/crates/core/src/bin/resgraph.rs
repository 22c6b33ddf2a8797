use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use resgraph::census::{self, CensusRow, CensusSummary, EnumerationConfig};
use resgraph::quotient::{graph_from_pd, Fraction};
use resgraph::report::{self, QuotientDocument, SCHEMA_VERSION};
use resgraph::reproduce::{reproduce_arng, reproduce_ding};
use resgraph::{dsl, Error, WeightedDualGraph};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "resgraph",
    version,
    about = "Invariants of rational surface singularities from weighted dual graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a graph file.
    Check { file: PathBuf },
    /// Cycles, rationality, Gorenstein and nearly Gorenstein status.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Quotient data: branches, discrepancies, Pinkham–Demazure divisor.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Classify every weighted graph up to isomorphism within the bounds.
    Enumerate(EnumerateArgs),
    /// Check a classification against an exhaustive search.
    Reproduce {
        #[command(subcommand)]
        which: Reproduction,
    },
    /// Print the star graph of a Pinkham–Demazure divisor in the graph language.
    FromPd {
        /// Degree of the central curve (its weight `b`).
        #[arg(long)]
        center: i64,
        /// Branch fraction `q/p`; repeat once per branch.
        #[arg(long = "branch", required = true)]
        branches: Vec<Fraction>,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    max_vertices: usize,
    #[arg(long)]
    max_weight: i64,
    #[arg(long, default_value_t = 1)]
    min_vertices: usize,
    /// Restrict to trees (the default).
    #[arg(long, conflicts_with = "all_graphs")]
    trees_only: bool,
    /// Admit graphs with cycles (at most six vertices).
    #[arg(long)]
    all_graphs: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Reproduction {
    /// Almost reduced nearly Gorenstein graphs against the ADE-shaped lists.
    Arng {
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        #[arg(long, default_value_t = 5)]
        max_weight: i64,
        #[arg(long)]
        json: bool,
    },
    /// Nearly Gorenstein quotient singularities against the divisor list.
    Ding {
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[arg(long, default_value_t = 8)]
        s_max: i64,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Input(String),
    Internal(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(format!("{} ({})", e, e.code()))
        } else {
            Failure::Input(format!("{} ({})", e, e.code()))
        }
    }
}

fn load(file: &PathBuf) -> Result<WeightedDualGraph, Failure> {
    let text =
        std::fs::read_to_string(file).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
    dsl::parse_graph(&text).map_err(|e| Failure::Input(format!("{}:{e} ({})", file.display(), e.code())))
}

/// Writes to stdout; a closed pipe ends output silently.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn print_json<T: Serialize>(value: &T) {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    emit(&text);
}

#[derive(Serialize)]
struct EnumerationDocument<'a> {
    schema_version: u32,
    max_vertices: usize,
    max_weight: i64,
    all_graphs: bool,
    summary: CensusSummary,
    rows: &'a [CensusRow],
}

fn flag(b: bool, c: char) -> char {
    if b {
        c
    } else {
        '.'
    }
}

fn enumerate(args: EnumerateArgs) -> Result<(), Failure> {
    let mut config =
        EnumerationConfig::new(args.max_vertices, args.max_weight).with_min_vertices(args.min_vertices);
    if args.all_graphs {
        config = config.all_graphs();
    }
    let rows = census::enumerate_graphs(&config)?;
    let summary = census::summarize(&rows);
    if args.json {
        print_json(&EnumerationDocument {
            schema_version: SCHEMA_VERSION,
            max_vertices: args.max_vertices,
            max_weight: args.max_weight,
            all_graphs: args.all_graphs,
            summary,
            rows: &rows,
        });
        return Ok(());
    }
    let mut text = String::from(
        "# flags: d negative definite, m minimal, r rational, g Gorenstein, n nearly Gorenstein, a almost reduced, l log terminal\n",
    );
    for r in &rows {
        let f = &r.flags;
        let flags: String = [
            flag(f.negative_definite, 'd'),
            flag(f.minimal, 'm'),
            flag(f.rational, 'r'),
            flag(f.gorenstein, 'g'),
            flag(f.nearly_gorenstein, 'n'),
            flag(f.almost_reduced, 'a'),
            flag(f.log_terminal == Some(true), 'l'),
        ]
        .into_iter()
        .collect();
        let e = r.multiplicity.map_or("-".into(), |e| e.to_string());
        let ell = r.trace_colength.map_or("-".into(), |l| l.to_string());
        let ade = r.ade.map_or("-".into(), |p| p.to_string());
        let _ = writeln!(text, "{:>2} {flags} e={e:<3} l={ell:<3} {ade:<4} {}", r.n, r.key);
    }
    let _ = writeln!(
        text,
        "# {} rows, {} negative definite, {} rational, {} Gorenstein, {} nearly Gorenstein",
        summary.rows,
        summary.negative_definite,
        summary.rational,
        summary.gorenstein,
        summary.nearly_gorenstein
    );
    emit(&text);
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check { file } => {
            let g = load(&file)?;
            emit(&format!(
                "ok: {} vertices, {} edges, {}\n",
                g.len(),
                g.edges().len(),
                if g.is_tree() { "tree" } else { "has cycles" }
            ));
        }
        Command::Classify { file, json } => {
            let r = report::classify_report(&load(&file)?)?;
            if json {
                print_json(&r);
            } else {
                emit(&report::render_classify(&r));
            }
        }
        Command::Quotient { file, json } => {
            let r = report::quotient_report(&load(&file)?)?;
            if json {
                print_json(&QuotientDocument {
                    schema_version: SCHEMA_VERSION,
                    report: r,
                });
            } else {
                emit(&report::render_quotient(&r));
            }
        }
        Command::Enumerate(args) => enumerate(args)?,
        Command::Reproduce { which } => {
            let passed = match which {
                Reproduction::Arng {
                    max_vertices,
                    max_weight,
                    json,
                } => {
                    let r = reproduce_arng(max_vertices, max_weight)?;
                    if json {
                        print_json(&r);
                    } else {
                        emit(&r.to_string());
                    }
                    r.passes()
                }
                Reproduction::Ding { k_max, s_max, json } => {
                    let r = reproduce_ding(k_max, s_max)?;
                    if json {
                        print_json(&r);
                    } else {
                        emit(&r.to_string());
                    }
                    r.passes()
                }
            };
            if !passed {
                return Err(Failure::Mismatch);
            }
        }
        Command::FromPd { center, branches } => {
            emit(&dsl::emit(&graph_from_pd(center, &branches)?));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => {
            eprintln!("error: reproduction mismatch");
            ExitCode::from(EXIT_MISMATCH)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
