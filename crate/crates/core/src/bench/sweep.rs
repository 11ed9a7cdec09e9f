use std::fmt::Write as _;

use crate::algorithm::Algorithm;
use crate::datagen::{cell_seed, generate, Pattern};
use crate::listsort::Capacity;
use crate::verify::verify_sorted;

use super::matrix::time_sort;
use super::{median, BenchError};

/// List Sort on one input class at several fixed run capacities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub n: usize,
    pub capacities: Vec<Capacity>,
    pub pattern: Pattern,
    pub seed: u64,
    pub trials: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub capacity: usize,
    pub median_elapsed_ns: u64,
    pub median_comparisons: u64,
}

/// One row per capacity. Trial `t` sees the same input for every capacity.
pub fn sweep_capacity(cfg: &SweepConfig) -> Result<Vec<SweepRow>, BenchError> {
    if cfg.capacities.is_empty() {
        return Err(BenchError::Config("no capacities given".into()));
    }
    if cfg.trials == 0 {
        return Err(BenchError::Config("trials must be at least 1".into()));
    }
    let inputs: Vec<_> = (0..cfg.trials)
        .map(|t| generate(cfg.pattern, cfg.n, cell_seed(cfg.seed, t as u64, cfg.n as u64)))
        .collect();

    let mut rows = Vec::with_capacity(cfg.capacities.len());
    for &capacity in &cfg.capacities {
        let mut elapsed = Vec::with_capacity(cfg.trials);
        let mut comparisons = Vec::with_capacity(cfg.trials);
        for (trial, input) in inputs.iter().enumerate() {
            let (ns, metrics, output) = time_sort(Algorithm::ListSort, input, Some(capacity));
            verify_sorted(input, &output).map_err(|violation| BenchError::Verification {
                algorithm: Algorithm::ListSort,
                pattern: cfg.pattern,
                n: cfg.n,
                trial,
                violation,
            })?;
            elapsed.push(ns);
            comparisons.push(metrics.comparisons);
        }
        rows.push(SweepRow {
            capacity: capacity.get(),
            median_elapsed_ns: median(&mut elapsed),
            median_comparisons: median(&mut comparisons),
        });
    }
    Ok(rows)
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("capacity,median_elapsed_ns,median_comparisons\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{}", r.capacity, r.median_elapsed_ns, r.median_comparisons);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(capacities: &[usize]) -> SweepConfig {
        SweepConfig {
            n: 2000,
            capacities: capacities.iter().map(|&l| Capacity::new(l).unwrap()).collect(),
            pattern: Pattern::Random,
            seed: 42,
            trials: 1,
        }
    }

    #[test]
    fn one_row_per_capacity() {
        let rows = sweep_capacity(&cfg(&[10, 25, 50, 100, 200, 400])).unwrap();
        assert_eq!(rows.iter().map(|r| r.capacity).collect::<Vec<_>>(), vec![10, 25, 50, 100, 200, 400]);
    }

    #[test]
    fn minimum_capacity_is_valid() {
        let rows = sweep_capacity(&cfg(&[2])).unwrap();
        assert_eq!(rows.len(), 1);
    }

    #[test]
    fn rerun_gives_same_counts() {
        let c = cfg(&[5, 15, 50]);
        let a: Vec<_> = sweep_capacity(&c).unwrap().iter().map(|r| r.median_comparisons).collect();
        let b: Vec<_> = sweep_capacity(&c).unwrap().iter().map(|r| r.median_comparisons).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn csv_layout() {
        let rows = [SweepRow { capacity: 5, median_elapsed_ns: 10, median_comparisons: 20 }];
        assert_eq!(sweep_csv(&rows), "capacity,median_elapsed_ns,median_comparisons\n5,10,20\n");
    }
}
