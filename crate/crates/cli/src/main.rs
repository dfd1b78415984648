//! `nsgtree`: count, list and verify numerical semigroups by genus.

mod render;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};

use nsg_core::known::KNOWN_COUNTS;
use nsg_core::verify::{self, Fault, VERIFY_MAX_GENUS};
use nsg_core::{parallel_count_with, Explorer, GenusBound, GenusCounts, Kernel};

use render::{Format, ListRow};

/// Largest genus `list` will enumerate.
const LIST_MAX_GENUS: u32 = 14;

#[derive(Debug, Parser)]
#[command(
    name = "nsgtree",
    version,
    about = "Count numerical semigroups by genus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print n_g and n_g/n_{g-1} for every genus up to the bound.
    Count {
        #[arg(long)]
        genus: u32,
        #[arg(long, env = "NSG_THREADS", default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value = "auto")]
        kernel: Kernel,
    },
    /// List every semigroup up to a small genus.
    List {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check the fast path against the brute-force oracle.
    Verify {
        #[arg(long)]
        genus: u32,
        #[arg(long, hide = true)]
        corrupt_lane: Option<usize>,
        #[arg(long, hide = true, default_value_t = 0)]
        corrupt_value: u8,
    },
    /// Time the count for each genus up to the bound.
    Bench {
        #[arg(long)]
        genus: u32,
        /// First genus to time.
        #[arg(long, default_value_t = 0)]
        from: u32,
        #[arg(long, env = "NSG_THREADS", default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value = "auto")]
        kernel: Kernel,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn count(bound: GenusBound, threads: usize, kernel: Kernel) -> Result<GenusCounts> {
    let counts = if threads <= 1 {
        if threads == 0 {
            bail!("--threads must be at least 1");
        }
        Explorer::new(bound).kernel(kernel).count()?
    } else {
        parallel_count_with(bound, threads, kernel)?
    };
    Ok(counts)
}

/// Returns whether the command succeeded.
fn run(command: Command, out: &mut impl Write) -> Result<bool> {
    match command {
        Command::Count {
            genus,
            threads,
            format,
            kernel,
        } => {
            let bound = GenusBound::new(genus)?;
            let counts = count(bound, threads, kernel)?;
            render::counts(out, format, &nsg_core::report::records(&counts))?;
            Ok(true)
        }
        Command::List { genus, format } => {
            if genus > LIST_MAX_GENUS {
                bail!("list is limited to genus {LIST_MAX_GENUS}, got {genus}");
            }
            let mut rows: Vec<ListRow> = nsg_core::collect(GenusBound::new(genus)?)
                .iter()
                .map(ListRow::from)
                .collect();
            rows.sort_by(|a, b| (a.genus, &a.gaps).cmp(&(b.genus, &b.gaps)));
            render::list(out, format, &rows)?;
            Ok(true)
        }
        Command::Verify {
            genus,
            corrupt_lane,
            corrupt_value,
        } => {
            if genus > VERIFY_MAX_GENUS {
                bail!("verify is limited to genus {VERIFY_MAX_GENUS}, got {genus}");
            }
            let bound = GenusBound::new(genus)?;
            let fault = corrupt_lane.map(|lane| Fault::CorruptLane {
                lane,
                value: corrupt_value,
            });
            let reports = verify::run_all(bound, fault);
            for report in &reports {
                writeln!(out, "{report}")?;
            }
            let counts = Explorer::new(bound).count::<u64>()?;
            writeln!(out, "counts {:?}", counts.as_slice())?;
            Ok(reports.iter().all(|r| r.passed()))
        }
        Command::Bench {
            genus,
            from,
            threads,
            format,
            kernel,
        } => {
            let bound = GenusBound::new(genus)?;
            let mut rows = Vec::new();
            let mut consistent = true;
            for g in from.min(genus)..=genus {
                let start = Instant::now();
                let counts = count(GenusBound::new(g)?, threads, kernel)?;
                let seconds = start.elapsed().as_secs_f64();
                let n = counts.last();
                if KNOWN_COUNTS
                    .get(g as usize)
                    .is_some_and(|&known| known != n)
                {
                    consistent = false;
                }
                rows.push(render::BenchRow {
                    genus: g,
                    seconds,
                    count: n,
                });
            }
            let final_counts = count(bound, 1, Kernel::Scalar)?;
            for row in &rows {
                if final_counts[row.genus] != row.count {
                    consistent = false;
                }
            }
            render::bench(out, format, kernel, threads, &rows)?;
            if !consistent {
                eprintln!("bench counts disagree with the serial scalar count");
            }
            Ok(consistent)
        }
    }
}
