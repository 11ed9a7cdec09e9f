//! `bench`: run the sort matrix, sweep List Sort's run capacity, or fuzz
//! every sort against a reference.
//!
//! Exit status is 0 on success, 1 on a configuration error and 2 when a sort
//! returns a wrong result.
//!
//! `BENCH_THREADS` sets the worker count for `verify`. Timed runs are always
//! single-threaded and ignore it.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use listsort::bench::{
    emit_table, run_matrix_with, sweep_capacity, sweep_csv, BenchConfig, BenchError, Format, SortReport,
    SweepConfig, TableValue,
};
use listsort::fuzz::{self, FuzzConfig};
use listsort::{Algorithm, Capacity, Pattern};

/// Union of the input sizes used by the comparison tables.
const DEFAULT_SIZES: [usize; 11] = [
    5_000, 10_000, 20_000, 30_000, 40_000, 50_000, 100_000, 200_000, 300_000, 400_000, 500_000,
];

#[derive(Parser)]
#[command(name = "bench", about = "List Sort benchmark harness", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Time and count every algorithm x pattern x size cell.
    Run(RunArgs),
    /// Run List Sort at several fixed run capacities.
    Sweep(SweepArgs),
    /// Randomized oracle-equivalence suite over all sorts.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Markdown,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Markdown => Format::Markdown,
        }
    }
}

fn parse_capacity(s: &str) -> Result<Capacity, String> {
    let runs: usize = s.parse().map_err(|e| format!("`{s}`: {e}"))?;
    Capacity::new(runs).map_err(|e| e.to_string())
}

#[derive(clap::Args)]
struct RunArgs {
    #[arg(long, value_delimiter = ',', default_value = "listsort,bubble,selection,insertion,quick,mergearr,mergelinked")]
    algos: Vec<Algorithm>,
    #[arg(long, value_delimiter = ',', default_value = "random")]
    patterns: Vec<Pattern>,
    /// Defaults to the table sizes 5000..500000, trimmed by --max-n.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Upper bound applied to the default size grid.
    #[arg(long, default_value_t = 100_000)]
    max_n: usize,
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Fixed List Sort run capacity (at least 2).
    #[arg(long, value_parser = parse_capacity)]
    capacity: Option<Capacity>,
    /// Markdown cells show median comparisons instead of median time.
    #[arg(long)]
    counts: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write List Sort's measured/predicted comparison ratios here.
    #[arg(long)]
    predictions: Option<PathBuf>,
    /// Suppress per-cell progress on stderr.
    #[arg(long)]
    quiet: bool,
}

#[derive(clap::Args)]
struct SweepArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_delimiter = ',', value_parser = parse_capacity, required = true)]
    capacities: Vec<Capacity>,
    #[arg(long, default_value = "random")]
    pattern: Pattern,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Number of random cases.
    #[arg(long, default_value_t = 10_000)]
    fuzz: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 512)]
    max_len: usize,
    #[arg(long, value_delimiter = ',')]
    algos: Option<Vec<Algorithm>>,
}

fn open_out(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn write_predictions(path: &PathBuf, reports: &[SortReport]) -> io::Result<()> {
    let mut w = File::create(path)?;
    writeln!(w, "algo,pattern,n,trial,regime,predicted,measured,ratio")?;
    for r in reports {
        if let Some(rec) = r.ratio() {
            writeln!(
                w,
                "{},{},{},{},{},{},{},{:.4}",
                r.algorithm, r.pattern, r.n, r.trial, rec.regime, rec.predicted, rec.measured, rec.ratio
            )?;
        }
    }
    Ok(())
}

fn run(args: RunArgs) -> Result<(), BenchError> {
    let sizes = match args.sizes {
        Some(sizes) => sizes,
        None => DEFAULT_SIZES.into_iter().filter(|&n| n <= args.max_n).collect(),
    };
    let cfg = BenchConfig {
        algorithms: args.algos,
        patterns: args.patterns,
        sizes,
        trials: args.trials,
        seed: args.seed,
        capacity: args.capacity,
    };
    let quiet = args.quiet;
    let reports = run_matrix_with(&cfg, |r| {
        if !quiet {
            eprintln!(
                "{:>11} {:>10} n={:<7} trial={} {:>10.3} ms {:>12} cmp",
                r.algorithm.name(),
                r.pattern.to_string(),
                r.n,
                r.trial,
                r.elapsed_ns as f64 / 1e6,
                r.metrics.comparisons
            );
        }
    })?;
    let value = if args.counts { TableValue::Comparisons } else { TableValue::ElapsedMs };
    let text = emit_table(&reports, args.format.into(), value)?;
    open_out(args.out.as_ref())?.write_all(text.as_bytes())?;
    if let Some(path) = &args.predictions {
        write_predictions(path, &reports)?;
    }
    Ok(())
}

fn sweep(args: SweepArgs) -> Result<(), BenchError> {
    let cfg = SweepConfig {
        n: args.n,
        capacities: args.capacities,
        pattern: args.pattern,
        seed: args.seed,
        trials: args.trials,
    };
    let rows = sweep_capacity(&cfg)?;
    let text = match args.format {
        OutputFormat::Csv => sweep_csv(&rows),
        OutputFormat::Markdown => {
            let mut s = String::from("| L | median time (ms) | median comparisons |\n|---:|---:|---:|\n");
            for r in &rows {
                s.push_str(&format!(
                    "| {} | {:.2} | {} |\n",
                    r.capacity,
                    r.median_elapsed_ns as f64 / 1e6,
                    r.median_comparisons
                ));
            }
            s
        }
    };
    open_out(args.out.as_ref())?.write_all(text.as_bytes())?;
    Ok(())
}

fn verify(args: VerifyArgs) -> ExitCode {
    let mut cfg = FuzzConfig::new(args.fuzz, args.seed);
    cfg.max_len = args.max_len;
    if let Some(algos) = args.algos {
        cfg.algorithms = algos;
    }
    let threads = std::env::var("BENCH_THREADS").ok().and_then(|v| v.parse().ok());
    match fuzz::run_with_threads(&cfg, threads) {
        Ok(summary) => {
            println!("ok: {} cases, {} checks", summary.cases, summary.checks);
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Run(args) => run(args),
        Command::Sweep(args) => sweep(args),
        Command::Verify(args) => return verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
