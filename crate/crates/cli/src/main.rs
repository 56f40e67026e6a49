mod analyze;
mod nscheck;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use grouplab::corpus::{self, CorpusEntry};
use grouplab::harness::{self, VerifyOptions};
use grouplab::Caps;

#[derive(Parser)]
#[command(name = "grouplab", version, about = "Finite permutation groups and NS-supplement checks")]
struct Cli {
    /// Largest group whose elements are enumerated.
    #[arg(long, global = true, default_value_t = Caps::default().element_cap)]
    element_cap: usize,
    /// Largest group whose subgroup lattice is built.
    #[arg(long, global = true, default_value_t = Caps::default().lattice_cap)]
    lattice_cap: usize,
    /// Manifest file replacing the built-in corpus.
    #[arg(long, global = true, env = "GROUPLAB_CORPUS")]
    corpus: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure profile, Sylow counts and maximal subgroups of a group.
    Analyze {
        /// Corpus name, group file or recipe such as `sym:4`.
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Search for an NS-supplement of one subgroup.
    NsCheck(nscheck::NsCheckArgs),
    /// Run verification suites over the corpus.
    Verify(VerifyArgs),
    /// Inspect the corpus.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    List,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Entries above this order are skipped.
    #[arg(long, default_value_t = VerifyOptions::default().max_order)]
    max_order: u128,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Worker threads (default: one per CPU).
    #[arg(long)]
    jobs: Option<usize>,
    /// Exit with status 2 when entries were skipped for size.
    #[arg(long)]
    strict: bool,
    /// Suppress per-entry lines in the text report.
    #[arg(long, short)]
    quiet: bool,
}

fn load_corpus(path: Option<&Path>) -> Result<Vec<CorpusEntry>> {
    let Some(path) = path else {
        return Ok(corpus::default_manifest());
    };
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading manifest {}", path.display()))?;
    let base = path.parent().unwrap_or(Path::new("."));
    corpus::parse_manifest(&text, base).with_context(|| format!("in manifest {}", path.display()))
}

fn run_verify(args: &VerifyArgs, caps: Caps, entries: Vec<CorpusEntry>) -> Result<ExitCode> {
    let names = harness::resolve_suites(&args.suite)?;
    let opts = VerifyOptions {
        max_order: args.max_order,
        caps,
        jobs: args.jobs,
        ..Default::default()
    };
    let report = harness::verify(entries, &names, opts)?;
    if let Some(path) = &args.json {
        std::fs::write(path, report.to_json())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let text = report.to_text();
    if args.quiet {
        text.lines()
            .filter(|l| l.contains("summary:") || l.starts_with("total:"))
            .for_each(|l| println!("{l}"));
    } else {
        print!("{text}");
    }
    let s = report.summary;
    Ok(if s.violation > 0 || s.skipped_errors > 0 {
        ExitCode::from(1)
    } else if args.strict && s.skipped > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn list_corpus(entries: &[CorpusEntry]) {
    println!("{:<10} {:>6}  {:<32} notes", "name", "order", "recipe");
    for e in entries {
        let mark = if e.lattice_eligible() { "" } else { " [over lattice bound]" };
        println!(
            "{:<10} {:>6}  {:<32} {}{}",
            e.name,
            e.order,
            e.recipe,
            e.notes.as_deref().unwrap_or(""),
            mark
        );
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let caps = Caps {
        element_cap: cli.element_cap,
        lattice_cap: cli.lattice_cap,
    };
    let entries = load_corpus(cli.corpus.as_deref())?;
    match &cli.command {
        Command::Analyze { group, json } => analyze::run(group, *json, caps, &entries)?,
        Command::NsCheck(args) => nscheck::run(args, caps, &entries)?,
        Command::Verify(args) => return run_verify(args, caps, entries),
        Command::Corpus { command: CorpusCommand::List } => list_corpus(&entries),
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
