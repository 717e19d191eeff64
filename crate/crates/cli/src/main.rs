//! Command-line front end: stage orchestration, artifact persistence,
//! golden-fixture checking and geometry export.

mod appendix;
mod explore;
mod export;
mod stages;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "boxclique",
    about = "Exhaustive search and classification of nearly neighbourly box families",
    version
)]
struct Cli {
    /// Output directory for artifacts
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    /// Directory holding the golden data files
    #[arg(long, global = true, default_value = "fixtures")]
    fixtures: PathBuf,
    /// Worker threads (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Treat every warning-level deviation as an error
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate candidate axis profiles and their orbit representatives
    Profiles {
        /// Level (3..=9); with --v, restrict to one bucket
        #[arg(long)]
        s: Option<u32>,
        /// Mass (12..=17)
        #[arg(long)]
        v: Option<u32>,
        /// Compare the published profile tables against the engine
        #[arg(long)]
        check_appendix_b: bool,
    },
    /// Run the staged clique search and print the dimension-3 certificate
    Pipeline {
        /// Restrict to one mass (12 or 13); default runs both plus the
        /// certificate
        #[arg(long)]
        v: Option<u32>,
    },
    /// Classify the clique families and verify the published classification
    Classify {
        /// Also run the exploratory search for dominated compressible types
        #[arg(long)]
        explore_compressible: bool,
    },
    /// Export geometry or raw data for an artifact
    Export {
        /// obj, svg or json
        kind: String,
        /// e.g. example, d1, c2, cq_clubs[3], figure2
        target: String,
    },
}

fn main() {
    let cli = Cli::parse();
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .expect("thread pool configured once");
    }
    let code = match run(&cli) {
        Ok(failures) if failures == 0 => 0,
        Ok(failures) => {
            eprintln!("{failures} check(s) failed");
            1
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli) -> Result<usize> {
    std::fs::create_dir_all(&cli.out)
        .with_context(|| format!("creating output directory {}", cli.out.display()))?;
    match &cli.command {
        Command::Profiles {
            s,
            v,
            check_appendix_b,
        } => {
            let mut failures = stages::run_profiles(&cli.out, *s, *v)?;
            if *check_appendix_b {
                failures += appendix::check(&cli.fixtures, cli.strict)?;
            }
            Ok(failures)
        }
        Command::Pipeline { v } => stages::run_pipeline(&cli.out, *v),
        Command::Classify {
            explore_compressible,
        } => {
            let mut failures = stages::run_classify(&cli.out, &cli.fixtures)?;
            if *explore_compressible {
                failures += explore::run(&cli.fixtures)?;
            }
            Ok(failures)
        }
        Command::Export { kind, target } => {
            export::run(&cli.out, &cli.fixtures, kind, target)?;
            Ok(0)
        }
    }
}
