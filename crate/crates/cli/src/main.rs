use std::collections::BTreeMap;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use nglab::analyze::analyze_graph;
use nglab::enumerate::{enumerate_reports, Filter};
use nglab::tables::{cmd_tables, render};
use nglab::verify::cmd_verify;
use nglab_core::generators::fixture_catalog;
use nglab_core::graph6::{emit_graph6, parse_graph6, parse_lines};

/// Nordhaus-Gaddum graph analysis: NG recognition, NGD decisions, and
/// exhaustive verification against brute-force oracles.
#[derive(Parser)]
#[command(name = "nglab", version)]
struct Cli {
    /// Largest vertex count for which exhaustive oracles may run.
    #[arg(long, global = true, env = "NGLAB_MAX_ORACLE_N", default_value_t = 8)]
    max_oracle_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze graphs given in graph6, printing one JSON object per graph.
    Analyze {
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        g6: Option<String>,
        /// File of graph6 lines.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Report every isomorphism class on n vertices that passes the filter.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        filter: Filter,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Run the invariant suites over all graphs up to max-n vertices.
    Verify {
        #[arg(long)]
        max_n: usize,
        /// Check only the NG recognizer (allows max-n = 7).
        #[arg(long)]
        recognizer_only: bool,
    },
    /// Recompute the reference tables.
    Tables,
    /// Print the named fixtures as a JSON manifest of graph6 strings.
    Fixtures,
}

/// Exit status for a run that completed but found a disagreement.
const COUNTEREXAMPLE: u8 = 1;
const INPUT_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(COUNTEREXAMPLE),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

/// Returns whether the run was clean.
fn run(cli: Cli) -> Result<bool> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let clean = match cli.command {
        Command::Analyze { g6, file } => {
            let graphs = match (g6, file) {
                (Some(s), _) => vec![parse_graph6(s.trim()).context("parsing --g6")?],
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    match parse_lines(&text) {
                        Ok(gs) => gs,
                        Err((line, e)) => bail!("{}:{line}: {e}", path.display()),
                    }
                }
                (None, None) => bail!("one of --g6 or --file is required"),
            };
            let mut clean = true;
            for g in &graphs {
                let r = analyze_graph(g, cli.max_oracle_n);
                clean &= !r.has_disagreement();
                writeln!(out, "{}", serde_json::to_string(&r)?)?;
            }
            clean
        }
        Command::Enumerate { n, filter, jobs } => {
            let reports = enumerate_reports(n, filter, jobs, cli.max_oracle_n)?;
            for r in &reports {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
            reports.iter().all(|r| !r.has_disagreement())
        }
        Command::Verify { max_n, recognizer_only } => {
            let report = cmd_verify(max_n, recognizer_only)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            report.passed
        }
        Command::Tables => {
            let tables = cmd_tables()?;
            write!(out, "{}", render(&tables))?;
            tables.all_match()
        }
        Command::Fixtures => {
            let manifest: BTreeMap<String, String> =
                fixture_catalog().into_iter().map(|(name, g)| (name, emit_graph6(&g))).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&manifest)?)?;
            true
        }
    };
    out.flush()?;
    Ok(clean)
}
