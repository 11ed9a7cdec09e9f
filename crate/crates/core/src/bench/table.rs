use std::fmt::Write as _;
use std::io;

use serde::{Deserialize, Serialize};

use crate::algorithm::Algorithm;
use crate::datagen::Pattern;
use crate::key::Metrics;

use super::{median, BenchError, SortReport};

pub const CSV_HEADER: &str = "algo,pattern,n,seed,trial,elapsed_ns,comparisons,relinks,runs_created,merges,capacity_used";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Markdown,
}

/// What a pivoted cell holds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TableValue {
    #[default]
    ElapsedMs,
    Comparisons,
}

// Field order is the CSV column order.
#[derive(Serialize, Deserialize)]
struct CsvRow {
    algo: String,
    pattern: String,
    n: usize,
    seed: u64,
    trial: usize,
    elapsed_ns: u64,
    comparisons: u64,
    relinks: u64,
    runs_created: u64,
    merges: u64,
    capacity_used: u64,
}

impl From<&SortReport> for CsvRow {
    fn from(r: &SortReport) -> Self {
        CsvRow {
            algo: r.algorithm.to_string(),
            pattern: r.pattern.to_string(),
            n: r.n,
            seed: r.seed,
            trial: r.trial,
            elapsed_ns: r.elapsed_ns,
            comparisons: r.metrics.comparisons,
            relinks: r.metrics.relinks,
            runs_created: r.metrics.runs_created,
            merges: r.metrics.merges,
            capacity_used: r.metrics.capacity_used,
        }
    }
}

impl TryFrom<CsvRow> for SortReport {
    type Error = BenchError;

    fn try_from(row: CsvRow) -> Result<Self, Self::Error> {
        let config = |e: &dyn std::fmt::Display| BenchError::Config(e.to_string());
        Ok(SortReport {
            algorithm: row.algo.parse().map_err(|e| config(&e))?,
            pattern: row.pattern.parse().map_err(|e| config(&e))?,
            n: row.n,
            seed: row.seed,
            trial: row.trial,
            elapsed_ns: row.elapsed_ns,
            metrics: Metrics {
                comparisons: row.comparisons,
                relinks: row.relinks,
                runs_created: row.runs_created,
                merges: row.merges,
                capacity_used: row.capacity_used,
            },
        })
    }
}

pub fn write_csv<W: io::Write>(reports: &[SortReport], out: W) -> Result<(), BenchError> {
    let mut w = csv::Writer::from_writer(out);
    for r in reports {
        w.serialize(CsvRow::from(r))?;
    }
    if reports.is_empty() {
        w.write_record(CSV_HEADER.split(','))?;
    }
    w.flush()?;
    Ok(())
}

pub fn parse_csv<R: io::Read>(input: R) -> Result<Vec<SortReport>, BenchError> {
    let mut rdr = csv::Reader::from_reader(input);
    let header = rdr.headers()?.iter().collect::<Vec<_>>().join(",");
    if header != CSV_HEADER {
        return Err(BenchError::Config(format!("unexpected CSV header `{header}`")));
    }
    rdr.deserialize::<CsvRow>()
        .map(|row| SortReport::try_from(row?))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotRow {
    pub n: usize,
    /// One cell per algorithm column; `None` where no report exists.
    pub cells: Vec<Option<u64>>,
}

/// Medians for one pattern: one row per size, one column per algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotTable {
    pub pattern: Pattern,
    pub algorithms: Vec<Algorithm>,
    pub rows: Vec<PivotRow>,
}

fn first_seen<T: PartialEq + Copy>(items: impl Iterator<Item = T>) -> Vec<T> {
    let mut seen = Vec::new();
    for item in items {
        if !seen.contains(&item) {
            seen.push(item);
        }
    }
    seen
}

/// Groups reports per pattern and reduces each (size, algorithm) cell to the
/// median over trials. Elapsed cells stay in nanoseconds.
pub fn pivot(reports: &[SortReport], value: TableValue) -> Vec<PivotTable> {
    let patterns = first_seen(reports.iter().map(|r| r.pattern));
    patterns
        .into_iter()
        .map(|pattern| {
            let of_pattern: Vec<&SortReport> = reports.iter().filter(|r| r.pattern == pattern).collect();
            let algorithms = first_seen(of_pattern.iter().map(|r| r.algorithm));
            let mut sizes = first_seen(of_pattern.iter().map(|r| r.n));
            sizes.sort_unstable();
            let rows = sizes
                .into_iter()
                .map(|n| {
                    let cells = algorithms
                        .iter()
                        .map(|&algo| {
                            let mut samples: Vec<u64> = of_pattern
                                .iter()
                                .filter(|r| r.n == n && r.algorithm == algo)
                                .map(|r| match value {
                                    TableValue::ElapsedMs => r.elapsed_ns,
                                    TableValue::Comparisons => r.metrics.comparisons,
                                })
                                .collect();
                            (!samples.is_empty()).then(|| median(&mut samples))
                        })
                        .collect();
                    PivotRow { n, cells }
                })
                .collect();
            PivotTable { pattern, algorithms, rows }
        })
        .collect()
}

pub fn render_markdown(tables: &[PivotTable], value: TableValue) -> String {
    let mut out = String::new();
    for (i, table) in tables.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let unit = match value {
            TableValue::ElapsedMs => "median time, ms",
            TableValue::Comparisons => "median comparisons",
        };
        let _ = writeln!(out, "Pattern `{}` ({unit})\n", table.pattern);
        out.push_str("| Number of Elements |");
        for algo in &table.algorithms {
            let _ = write!(out, " {algo} |");
        }
        out.push_str("\n|---:|");
        out.push_str(&"---:|".repeat(table.algorithms.len()));
        out.push('\n');
        for row in &table.rows {
            let _ = write!(out, "| {} |", row.n);
            for cell in &row.cells {
                match (cell, value) {
                    (None, _) => out.push_str(" - |"),
                    (Some(ns), TableValue::ElapsedMs) => {
                        let _ = write!(out, " {:.2} |", *ns as f64 / 1e6);
                    }
                    (Some(count), TableValue::Comparisons) => {
                        let _ = write!(out, " {count} |");
                    }
                }
            }
            out.push('\n');
        }
    }
    out
}

/// CSV emits one row per report; markdown emits the pivoted medians.
pub fn emit_table(reports: &[SortReport], format: Format, value: TableValue) -> Result<String, BenchError> {
    match format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_csv(reports, &mut buf)?;
            Ok(String::from_utf8(buf).expect("csv output is utf-8"))
        }
        Format::Markdown => Ok(render_markdown(&pivot(reports, value), value)),
    }
}
