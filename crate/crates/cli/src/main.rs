use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use loopreps_cli::{render_report, run_file, Options};

/// Runs a loopreps job file.
#[derive(Parser, Debug)]
#[command(name = "loopreps", version)]
struct Args {
    /// Job file (UTF-8 JSON).
    job: PathBuf,
    /// Write the machine-readable report here.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Suppress the text report.
    #[arg(long)]
    quiet: bool,
    /// Default step bound for link-chain.
    #[arg(long, value_name = "N")]
    max_steps: Option<usize>,
    /// Default truncation order for series-check.
    #[arg(long, value_name = "N")]
    order: Option<usize>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let opts = Options { json: args.json, quiet: args.quiet, max_steps: args.max_steps, order: args.order };
    let outcome = run_file(&args.job, &opts);
    if !opts.quiet {
        print!("{}", outcome.text);
    }
    if let (Some(path), Some(report)) = (&opts.json, &outcome.report) {
        if let Err(e) = std::fs::write(path, render_report(report)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    if let Some(msg) = &outcome.error {
        eprintln!("error: {msg}");
    }
    ExitCode::from(outcome.code as u8)
}
