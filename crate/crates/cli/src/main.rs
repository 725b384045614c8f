//! `mmcayley`: feasibility tables, Kautz graphs, the Moore verifier and the
//! Cayley graph search from the command line.
//!
//! Exit codes: 0 success, 1 verifier said "not Moore", 2 bad flags or an
//! unreadable input file, 3 infeasible parameters, 4 no complete group list
//! for the requested order.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mixed_moore::catalog::{Catalog, OrderCatalog};
use mixed_moore::feasibility::{bosak_feasible, enumerate_feasible, FeasibleParams};
use mixed_moore::graph::{kautz, read_graph, verify_moore, write_graph};
use mixed_moore::group::{automorphism_group, index2_subgroups};
use mixed_moore::search::{
    search_catalog, write_plain, write_records, write_result_lines, SearchOptions,
};

const EXIT_NOT_MOORE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;
const EXIT_NO_GROUPS: u8 = 4;

#[derive(Parser)]
#[command(
    name = "mmcayley",
    version,
    about = "Search for mixed Moore Cayley graphs of diameter 2"
)]
struct Cli {
    /// More log output on stderr (-v info, -vv debug).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every degree pair (r, z) passing the arithmetic conditions.
    Feasible {
        #[arg(long)]
        max_order: u64,
    },
    /// Search the groups of one order for Moore generating sets.
    Search(SearchArgs),
    /// Check whether a graph file is a mixed Moore graph.
    Verify { file: PathBuf },
    /// Write the Kautz digraph Ka(d,2) as a mixed graph file.
    Kautz {
        #[arg(long, value_parser = clap::value_parser!(u16).range(2..))]
        d: u16,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the groups available at one order.
    Catalog {
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        groups: GroupDir,
    },
}

#[derive(Args)]
struct GroupDir {
    /// Directory of *.gtab / *.gperm files and an optional counts.txt.
    #[arg(long = "groups", env = "MMC_GROUP_DIR")]
    dir: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Records,
}

#[derive(Args)]
struct SearchArgs {
    /// Group order; every feasible (r, z) at this order is searched.
    #[arg(long, conflicts_with_all = ["r", "z"], required_unless_present_all = ["r", "z"])]
    order: Option<u64>,
    #[arg(long, requires = "z")]
    r: Option<u64>,
    #[arg(long, requires = "r")]
    z: Option<u64>,
    #[command(flatten)]
    groups: GroupDir,
    /// Worker threads.
    #[arg(long, env = "MMC_JOBS", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    /// Wall-clock seconds per group; 0 means unlimited.
    #[arg(long, default_value_t = 0)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write the results here; the summary line still goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new()
        .filter_level(level)
        .parse_env("MMC_LOG")
        .init();

    let result = match cli.command {
        Command::Feasible { max_order } => cmd_feasible(max_order),
        Command::Search(args) => cmd_search(&args),
        Command::Verify { file } => cmd_verify(&file),
        Command::Kautz { d, out } => cmd_kautz(d as usize, out.as_deref()),
        Command::Catalog { order, groups } => cmd_catalog(order, groups.dir.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl ToString) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

type CmdResult = Result<u8, Failure>;

fn io_fail(err: io::Error) -> Failure {
    fail(EXIT_USAGE, err)
}

fn cmd_feasible(max_order: u64) -> CmdResult {
    let mut out = io::stdout().lock();
    writeln!(out, "# n r z c s").map_err(io_fail)?;
    for p in enumerate_feasible(max_order) {
        writeln!(out, "{p}").map_err(io_fail)?;
    }
    Ok(0)
}

fn load_catalog(dir: Option<&Path>) -> Result<Catalog, Failure> {
    match dir {
        Some(dir) => Catalog::from_dir(dir).map_err(|e| fail(EXIT_USAGE, e)),
        None => Ok(Catalog::builtin()),
    }
}

fn order_catalog(catalog: &Catalog, n: usize) -> Result<OrderCatalog, Failure> {
    catalog.for_order(n).map_err(|e| fail(EXIT_USAGE, e))
}

fn cmd_search(args: &SearchArgs) -> CmdResult {
    let params: Vec<FeasibleParams> = match (args.order, args.r, args.z) {
        (Some(n), _, _) => {
            let found: Vec<_> = enumerate_feasible(n)
                .into_iter()
                .filter(|p| p.n == n)
                .collect();
            if found.is_empty() {
                return Err(fail(
                    EXIT_INFEASIBLE,
                    format!("order {n} is not Bosák-feasible for any (r, z)"),
                ));
            }
            found
        }
        (None, Some(r), Some(z)) => match FeasibleParams::new(r, z) {
            Some(p) if bosak_feasible(r, z).is_some() => vec![p],
            _ => {
                return Err(fail(
                    EXIT_INFEASIBLE,
                    format!("r={r} z={z} is not Bosák-feasible"),
                ))
            }
        },
        _ => return Err(fail(EXIT_USAGE, "give --order or both --r and --z")),
    };
    let catalog = load_catalog(args.groups.dir.as_deref())?;
    let options = SearchOptions {
        jobs: args.jobs as usize,
        budget: (args.budget > 0).then(|| Duration::from_secs(args.budget)),
        ..SearchOptions::default()
    };

    let mut results: Box<dyn Write> = match &args.out {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).map_err(|e| {
                fail(EXIT_USAGE, format!("{}: {e}", path.display()))
            })?))
        }
        None => Box::new(io::stdout().lock()),
    };
    let mut summaries = Vec::new();
    let mut all_complete = true;
    for p in &params {
        let groups = order_catalog(&catalog, p.n as usize)?;
        if groups.groups.is_empty() {
            return Err(fail(
                EXIT_NO_GROUPS,
                format!("no groups of order {} available", p.n),
            ));
        }
        let report = search_catalog(p, &groups, &options).map_err(|e| fail(EXIT_USAGE, e))?;
        if report.verifier_rejections > 0 {
            log::error!(
                "{} candidate(s) failed verification",
                report.verifier_rejections
            );
        }
        let written = match args.format {
            Format::Plain if args.out.is_some() => write_plain(&report, &mut results),
            // On stdout the summary follows separately.
            Format::Plain => write_result_lines(&report, &mut results),
            Format::Records => write_records(&report, &mut results),
        };
        written.map_err(io_fail)?;
        all_complete &= groups.complete;
        summaries.push(report.summary_line());
    }
    results.flush().map_err(io_fail)?;
    drop(results);
    let mut out = io::stdout().lock();
    for line in summaries {
        writeln!(out, "{line}").map_err(io_fail)?;
    }
    if !all_complete {
        return Err(fail(
            EXIT_NO_GROUPS,
            "the group list for this order is possibly incomplete; supply every group with --groups",
        ));
    }
    Ok(0)
}

fn cmd_verify(file: &Path) -> CmdResult {
    let graph =
        read_graph(file).map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", file.display())))?;
    let report = verify_moore(&graph);
    println!("{report}");
    Ok(if report.verdict { 0 } else { EXIT_NOT_MOORE })
}

fn cmd_kautz(d: usize, out: Option<&Path>) -> CmdResult {
    let graph = kautz(d).map_err(|e| fail(EXIT_USAGE, e))?;
    match out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            write_graph(&graph, &mut w)
                .and_then(|_| w.flush())
                .map_err(io_fail)?;
        }
        None => write_graph(&graph, &mut io::stdout().lock()).map_err(io_fail)?,
    }
    Ok(0)
}

fn cmd_catalog(order: usize, dir: Option<&Path>) -> CmdResult {
    let catalog = load_catalog(dir)?;
    let groups = order_catalog(&catalog, order)?;
    let mut out = io::stdout().lock();
    writeln!(out, "# name abelian index2 aut").map_err(io_fail)?;
    for g in &groups.groups {
        let auts = automorphism_group(g)
            .map(|a| a.len().to_string())
            .unwrap_or_else(|_| "?".into());
        let abelian = if g.is_abelian() { "yes" } else { "no" };
        writeln!(
            out,
            "{} {abelian} {} {auts}",
            g.name(),
            index2_subgroups(g).len()
        )
        .map_err(io_fail)?;
    }
    writeln!(
        out,
        "order {order}: {} groups, {}",
        groups.groups.len(),
        groups.completeness_label()
    )
    .map_err(io_fail)?;
    Ok(0)
}
