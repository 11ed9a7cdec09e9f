use std::time::Instant;

use crate::algorithm::Algorithm;
use crate::analysis::{compare_prediction, predict, RatioRecord};
use crate::datagen::{cell_seed, generate, Pattern};
use crate::key::{Key, Metrics};
use crate::listsort::Capacity;
use crate::verify::verify_sorted;

use super::BenchError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub algorithms: Vec<Algorithm>,
    pub patterns: Vec<Pattern>,
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub capacity: Option<Capacity>,
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), BenchError> {
        if self.algorithms.is_empty() {
            return Err(BenchError::Config("no algorithms selected".into()));
        }
        if self.patterns.is_empty() {
            return Err(BenchError::Config("no patterns selected".into()));
        }
        if self.sizes.is_empty() {
            return Err(BenchError::Config("no sizes selected".into()));
        }
        if self.trials == 0 {
            return Err(BenchError::Config("trials must be at least 1".into()));
        }
        Ok(())
    }
}

/// One timed, verified sort.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortReport {
    pub algorithm: Algorithm,
    pub pattern: Pattern,
    pub n: usize,
    pub seed: u64,
    pub trial: usize,
    pub elapsed_ns: u64,
    pub metrics: Metrics,
}

impl SortReport {
    /// Measured comparisons against the predictor for this report's
    /// pattern. Only List Sort reports have a prediction.
    pub fn ratio(&self) -> Option<RatioRecord> {
        if self.algorithm != Algorithm::ListSort {
            return None;
        }
        let m = &self.metrics;
        let pred = predict(self.n as u64, m.runs_created, m.capacity_used).ok()?;
        Some(compare_prediction(self.pattern, m.comparisons, &pred))
    }
}

pub fn run_matrix(cfg: &BenchConfig) -> Result<Vec<SortReport>, BenchError> {
    run_matrix_with(cfg, |_| {})
}

/// Like [`run_matrix`], calling `on_report` after each verified sort.
pub fn run_matrix_with<F>(cfg: &BenchConfig, mut on_report: F) -> Result<Vec<SortReport>, BenchError>
where
    F: FnMut(&SortReport),
{
    cfg.validate()?;
    let mut reports = Vec::with_capacity(
        cfg.patterns.len() * cfg.sizes.len() * cfg.algorithms.len() * cfg.trials,
    );
    for &pattern in &cfg.patterns {
        for &n in &cfg.sizes {
            for trial in 0..cfg.trials {
                let seed = cell_seed(cfg.seed, trial as u64, n as u64);
                let input = generate(pattern, n, seed);
                for &algorithm in &cfg.algorithms {
                    let (elapsed_ns, metrics, output) = time_sort(algorithm, &input, cfg.capacity);
                    verify_sorted(&input, &output).map_err(|violation| BenchError::Verification {
                        algorithm,
                        pattern,
                        n,
                        trial,
                        violation,
                    })?;
                    let report = SortReport { algorithm, pattern, n, seed, trial, elapsed_ns, metrics };
                    on_report(&report);
                    reports.push(report);
                }
            }
        }
    }
    Ok(reports)
}

pub(crate) fn time_sort(
    algorithm: Algorithm,
    input: &[Key],
    capacity: Option<Capacity>,
) -> (u64, Metrics, Vec<Key>) {
    let buffer = input.to_vec();
    let start = Instant::now();
    let outcome = algorithm.run(buffer, capacity);
    let elapsed = start.elapsed();
    (elapsed.as_nanos() as u64, outcome.metrics, outcome.output)
}
