//! Randomized oracle equivalence.
//!
//! Each case draws a length and a value distribution from its own seed,
//! sorts the input with every selected algorithm and checks the result
//! against the standard library's stable sort: values always, tags for the
//! stable algorithms. Optionally List Sort is also run with the
//! smaller-into-bigger merge direction turned off and must produce the
//! identical output.
//!
//! Cases are independent, so with the `parallel` feature they are spread
//! over the rayon pool; [`run_sequential`] is always available.

use thiserror::Error;

use crate::algorithm::Algorithm;
use crate::datagen::{cell_seed, mix64, SplitMix64};
use crate::key::{keys_from_values, Key};
use crate::listsort::{ListSort, MergeDirection};
use crate::verify::{verify_sorted, Violation};

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub cases: usize,
    pub max_len: usize,
    pub seed: u64,
    pub algorithms: Vec<Algorithm>,
    /// Also compare List Sort across both merge directions.
    pub check_direction: bool,
}

impl FuzzConfig {
    pub fn new(cases: usize, seed: u64) -> Self {
        FuzzConfig {
            cases,
            max_len: 512,
            seed,
            algorithms: Algorithm::ALL.to_vec(),
            check_direction: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Mismatch {
    #[error(transparent)]
    Invalid(#[from] Violation),
    #[error("values differ from the reference sort at index {0}")]
    Values(usize),
    #[error("tag order differs from the stable reference at index {0}")]
    Tags(usize),
    #[error("merge direction changed the output at index {0}")]
    Direction(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("fuzz case {case} (seed {seed:#018x}, n = {len}) failed for {algorithm}: {mismatch}")]
pub struct FuzzFailure {
    pub case: usize,
    pub seed: u64,
    pub len: usize,
    pub algorithm: Algorithm,
    pub mismatch: Mismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzSummary {
    pub cases: usize,
    pub checks: usize,
}

/// The input for one case.
pub fn case_input(base_seed: u64, case: usize, max_len: usize) -> (u64, Vec<Key>) {
    let seed = cell_seed(base_seed, case as u64, mix64(max_len as u64));
    let mut rng = SplitMix64::new(seed);
    let len = rng.below(max_len as u64 + 1) as usize;
    let values: Vec<i64> = match case % 4 {
        // full positive range
        0 => (0..len).map(|_| rng.next_u31()).collect(),
        // heavy duplicates
        1 => {
            let distinct = (len as u64 / 8).max(1);
            (0..len).map(|_| rng.below(distinct) as i64).collect()
        }
        // signed values
        2 => (0..len).map(|_| rng.next_u64() as i64).collect(),
        // a few sorted stretches in both directions
        _ => {
            let mut v = Vec::with_capacity(len);
            while v.len() < len {
                let stretch = (rng.below(32) as usize + 1).min(len - v.len());
                let base = rng.below(256) as i64;
                let step = if rng.below(2) == 0 { 1 } else { -1 };
                v.extend((0..stretch as i64).map(|i| base + step * i));
            }
            v
        }
    };
    (seed, keys_from_values(values))
}

fn first_difference<T: PartialEq>(a: impl Iterator<Item = T>, b: impl Iterator<Item = T>) -> Option<usize> {
    a.zip(b).position(|(x, y)| x != y)
}

fn check_case(cfg: &FuzzConfig, case: usize) -> Result<usize, FuzzFailure> {
    let (seed, input) = case_input(cfg.seed, case, cfg.max_len);
    let mut reference = input.clone();
    reference.sort_by_key(|k| k.value);
    let fail = |algorithm, mismatch| FuzzFailure { case, seed, len: input.len(), algorithm, mismatch };

    let mut checks = 0;
    for &algo in &cfg.algorithms {
        let out = algo.run(input.clone(), None).output;
        verify_sorted(&input, &out).map_err(|v| fail(algo, v.into()))?;
        if let Some(i) = first_difference(out.iter().map(|k| k.value), reference.iter().map(|k| k.value)) {
            return Err(fail(algo, Mismatch::Values(i)));
        }
        if algo.is_stable() {
            if let Some(i) = first_difference(out.iter().map(|k| k.tag), reference.iter().map(|k| k.tag)) {
                return Err(fail(algo, Mismatch::Tags(i)));
            }
        }
        checks += 1;
    }

    if cfg.check_direction {
        let plain = ListSort::new().direction(MergeDirection::LaterIntoEarlier).sort(&input).output;
        let optimized = ListSort::new().direction(MergeDirection::SmallerIntoBigger).sort(&input).output;
        if let Some(i) = first_difference(plain.iter(), optimized.iter()) {
            return Err(fail(Algorithm::ListSort, Mismatch::Direction(i)));
        }
        checks += 1;
    }
    Ok(checks)
}

/// Keeps the lowest-numbered failure so the report does not depend on
/// scheduling.
fn fold(results: impl Iterator<Item = Result<usize, FuzzFailure>>, cases: usize) -> Result<FuzzSummary, FuzzFailure> {
    let mut checks = 0;
    let mut first: Option<FuzzFailure> = None;
    for r in results {
        match r {
            Ok(c) => checks += c,
            Err(f) if first.as_ref().is_none_or(|g| f.case < g.case) => first = Some(f),
            Err(_) => {}
        }
    }
    match first {
        Some(f) => Err(f),
        None => Ok(FuzzSummary { cases, checks }),
    }
}

pub fn run_sequential(cfg: &FuzzConfig) -> Result<FuzzSummary, FuzzFailure> {
    fold((0..cfg.cases).map(|case| check_case(cfg, case)), cfg.cases)
}

#[cfg(feature = "parallel")]
pub fn run_parallel(cfg: &FuzzConfig) -> Result<FuzzSummary, FuzzFailure> {
    use rayon::prelude::*;

    let results: Vec<_> = (0..cfg.cases).into_par_iter().map(|case| check_case(cfg, case)).collect();
    fold(results.into_iter(), cfg.cases)
}

/// Runs the suite on the rayon pool when built with `parallel`, otherwise
/// on the calling thread.
pub fn run(cfg: &FuzzConfig) -> Result<FuzzSummary, FuzzFailure> {
    #[cfg(feature = "parallel")]
    {
        run_parallel(cfg)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_sequential(cfg)
    }
}

/// [`run`] with an explicit worker count; `None` uses the global pool.
/// Without the `parallel` feature the count is ignored.
pub fn run_with_threads(cfg: &FuzzConfig, threads: Option<usize>) -> Result<FuzzSummary, FuzzFailure> {
    #[cfg(feature = "parallel")]
    if let Some(threads) = threads {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            return pool.install(|| run_parallel(cfg));
        }
    }
    let _ = threads;
    run(cfg)
}
