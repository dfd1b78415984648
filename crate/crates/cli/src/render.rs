use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;

use nsg_core::report::OutputRecord;
use nsg_core::{Kernel, Semigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Serialize)]
struct CountJson<'a> {
    genus: u32,
    count: u128,
    ratio: &'a str,
}

pub fn counts(out: &mut impl Write, format: Format, records: &[OutputRecord]) -> Result<()> {
    match format {
        Format::Table => {
            writeln!(out, "{:>4}  {:>16}  {:>9}", "g", "n_g", "n_g/n_g-1")?;
            for r in records {
                writeln!(out, "{:>4}  {:>16}  {:>9}", r.genus, r.count, r.ratio)?;
            }
        }
        Format::Csv => {
            writeln!(out, "genus,count,ratio")?;
            for r in records {
                writeln!(out, "{},{},{}", r.genus, r.count, r.ratio)?;
            }
        }
        Format::Json => {
            let rows: Vec<CountJson<'_>> = records
                .iter()
                .map(|r| CountJson {
                    genus: r.genus,
                    count: r.count,
                    ratio: &r.ratio,
                })
                .collect();
            serde_json::to_writer(&mut *out, &rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct ListRow {
    pub genus: u32,
    pub conductor: u32,
    pub multiplicity: u32,
    pub generators: Vec<u32>,
    pub gaps: Vec<u32>,
}

impl From<&Semigroup> for ListRow {
    fn from(s: &Semigroup) -> Self {
        ListRow {
            genus: s.genus(),
            // The root caches 1; report the actual conductor of the naturals.
            conductor: if s.genus() == 0 { 0 } else { s.conductor() },
            multiplicity: s.multiplicity(),
            generators: s.irreducibles(),
            gaps: s.gaps(),
        }
    }
}

fn joined(xs: &[u32], sep: &str) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(sep)
}

pub fn list(out: &mut impl Write, format: Format, rows: &[ListRow]) -> Result<()> {
    match format {
        Format::Table => {
            for r in rows {
                writeln!(
                    out,
                    "g={} c={} m={} <{}> gaps {{{}}}",
                    r.genus,
                    r.conductor,
                    r.multiplicity,
                    joined(&r.generators, ","),
                    joined(&r.gaps, ",")
                )?;
            }
        }
        Format::Csv => {
            writeln!(out, "genus,conductor,multiplicity,generators,gaps")?;
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.genus,
                    r.conductor,
                    r.multiplicity,
                    joined(&r.generators, " "),
                    joined(&r.gaps, " ")
                )?;
            }
        }
        Format::Json => {
            serde_json::to_writer(&mut *out, rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub genus: u32,
    pub seconds: f64,
    pub count: u64,
}

pub fn bench(
    out: &mut impl Write,
    format: Format,
    kernel: Kernel,
    threads: usize,
    rows: &[BenchRow],
) -> Result<()> {
    match format {
        Format::Table => {
            writeln!(
                out,
                "# kernel {} [{}], {} thread(s)",
                kernel,
                kernel.backend(),
                threads
            )?;
            writeln!(out, "{:>4}  {:>12}  {:>16}", "g", "seconds", "n_g")?;
            for r in rows {
                writeln!(out, "{:>4}  {:>12.4}  {:>16}", r.genus, r.seconds, r.count)?;
            }
        }
        Format::Csv => {
            writeln!(out, "genus,seconds,count,kernel,threads")?;
            for r in rows {
                writeln!(
                    out,
                    "{},{:.6},{},{},{}",
                    r.genus, r.seconds, r.count, kernel, threads
                )?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Report<'a> {
                kernel: &'a str,
                backend: &'a str,
                threads: usize,
                rows: &'a [BenchRow],
            }
            serde_json::to_writer(
                &mut *out,
                &Report {
                    kernel: kernel.name(),
                    backend: kernel.backend(),
                    threads,
                    rows,
                },
            )?;
            writeln!(out)?;
        }
    }
    Ok(())
}
