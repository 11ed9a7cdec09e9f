//! Benchmark harness: the algorithm x pattern x size matrix, table output
//! and the run-capacity sweep.
//!
//! Only the sort call itself is timed. Input generation happens before the
//! clock starts and verification after it stops; every output is verified
//! and a single wrong answer aborts the whole run.

mod matrix;
mod sweep;
mod table;

pub use matrix::{run_matrix, run_matrix_with, BenchConfig, SortReport};
pub use sweep::{sweep_capacity, sweep_csv, SweepConfig, SweepRow};
pub use table::{emit_table, parse_csv, pivot, render_markdown, write_csv, Format, PivotRow, PivotTable, TableValue, CSV_HEADER};

use thiserror::Error;

use crate::algorithm::Algorithm;
use crate::datagen::Pattern;
use crate::verify::Violation;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{algorithm} produced a wrong result on {pattern} n={n} trial {trial}: {violation}")]
    Verification {
        algorithm: Algorithm,
        pattern: Pattern,
        n: usize,
        trial: usize,
        violation: Violation,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl BenchError {
    /// Process exit status: 2 for a wrong sort result, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Verification { .. } => 2,
            _ => 1,
        }
    }
}

/// Lower median; `values` must be non-empty.
pub(crate) fn median(values: &mut [u64]) -> u64 {
    values.sort_unstable();
    values[(values.len() - 1) / 2]
}
