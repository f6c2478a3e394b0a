use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use tihany::families::random::{generate, Family};
use tihany::harness::{exit, explain, hunt, run_sweep, write_instances, Bundle, SweepConfig, SweepReport};

#[derive(Parser)]
#[command(name = "tihany", version, about = "Search claw-free graphs for small Tihany cliques")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write seeded instances of a family as graph6 files with label sidecars.
    Gen {
        #[arg(long)]
        family: String,
        /// Comma-separated key=value pairs; only `max_n` is understood.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a sweep and write the JSON report.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep with the partition check on; violations are written as bundles.
    Hunt {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value = "bundles")]
        out: PathBuf,
        /// Also write the full report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print the certificate behind one instance of a report.
    Explain {
        #[arg(long)]
        report: PathBuf,
        #[arg(long)]
        id: String,
    },
    /// Re-run the instance stored in a hunt bundle.
    Replay {
        #[arg(long)]
        bundle: PathBuf,
    },
}

fn parse_max_n(params: &str) -> Result<usize> {
    let mut max_n = 20;
    for part in params.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once('=') {
            Some(("max_n", v)) => max_n = v.parse().with_context(|| format!("bad max_n {v:?}"))?,
            _ => bail!("unknown parameter {part:?} (expected max_n=N)"),
        }
    }
    Ok(max_n)
}

fn summarize(report: &SweepReport) {
    let s = &report.summary;
    eprintln!(
        "{} instances, {} in scope, {} violations, {} unknowns, largest minimum Tihany clique {}",
        s.instances,
        s.in_scope,
        s.violations.len(),
        s.unknowns,
        s.max_min_tihany_size.map_or("-".into(), |k| k.to_string())
    );
    for v in &s.violations {
        eprintln!("  {}: {:?} {}", v.id, v.kind, v.detail);
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Gen { family, params, seed, count, out } => {
            let Some(f) = Family::parse(&family) else {
                let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
                bail!("unknown family {family:?}; one of {}", names.join(", "));
            };
            let max_n = parse_max_n(&params)?;
            let instances = (seed..seed + count)
                .map(|s| generate(f, s, max_n))
                .collect::<Result<Vec<_>, _>>()?;
            for path in write_instances(&out, &instances)? {
                println!("{}", path.display());
            }
            Ok(exit::CLEAN)
        }
        Command::Sweep { config, out } => {
            let config = SweepConfig::load(&config)?;
            let report = run_sweep(&config)?;
            report.save(&out)?;
            summarize(&report);
            Ok(report.exit_code())
        }
        Command::Hunt { config, out, report } => {
            let config = SweepConfig::load(&config)?;
            let outcome = hunt(&config, &out)?;
            if let Some(path) = report {
                outcome.report.save(&path)?;
            }
            summarize(&outcome.report);
            for b in &outcome.bundles {
                println!("{}", b.display());
            }
            Ok(outcome.report.exit_code())
        }
        Command::Explain { report, id } => {
            let report = SweepReport::load(&report)?;
            print!("{}", explain(&report, &id)?);
            Ok(exit::CLEAN)
        }
        Command::Replay { bundle } => {
            let bundle = Bundle::load(&bundle)?;
            if bundle.replay()? {
                println!("{}: violations reproduced", bundle.record.id);
                Ok(exit::VIOLATION)
            } else {
                println!("{}: violations did not reproduce", bundle.record.id);
                Ok(exit::CLEAN)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit::USAGE as u8)
        }
    }
}
