//! Closed-form operation-count predictors for List Sort and their
//! comparison against measured counters.
//!
//! * best case: `n`
//! * average case: `n * T / (L - 1)`, with `T` the number of runs created
//! * worst case: `n * L` for insertion plus `n^2 / (8 L)` for merging

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::datagen::Pattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("capacity must be at least 2 for the average-case predictor, got {0}")]
    Capacity(u64),
}

/// Predicted counts, each rounded to three significant figures.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Prediction {
    pub best: f64,
    pub average: f64,
    pub worst_insertion: f64,
    pub worst_merging: f64,
}

/// Rounds to `digits` significant figures.
pub fn round_sig(x: f64, digits: i32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(digits - 1 - magnitude);
    (x * scale).round() / scale
}

pub fn predict(n: u64, runs_created: u64, capacity: u64) -> Result<Prediction, AnalysisError> {
    if capacity < 2 {
        return Err(AnalysisError::Capacity(capacity));
    }
    let (n, t, l) = (n as f64, runs_created as f64, capacity as f64);
    Ok(Prediction {
        best: round_sig(n, 3),
        average: round_sig(n * t / (l - 1.0), 3),
        worst_insertion: round_sig(n * l, 3),
        worst_merging: round_sig(n * n / (8.0 * l), 3),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Best,
    Average,
    Worst,
}

impl Regime {
    pub fn of(pattern: Pattern) -> Self {
        match pattern {
            Pattern::Ascending | Pattern::Descending => Regime::Best,
            Pattern::WorstInterleave => Regime::Worst,
            Pattern::Random | Pattern::SortedChunks { .. } => Regime::Average,
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Best => "best",
            Regime::Average => "average",
            Regime::Worst => "worst",
        })
    }
}

/// Measured comparisons against the predictor for the pattern's regime.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatioRecord {
    pub regime: Regime,
    pub predicted: f64,
    pub measured: u64,
    pub ratio: f64,
}

pub fn compare_prediction(pattern: Pattern, measured_comparisons: u64, pred: &Prediction) -> RatioRecord {
    let regime = Regime::of(pattern);
    let predicted = match regime {
        Regime::Best => pred.best,
        Regime::Average => pred.average,
        Regime::Worst => pred.worst_insertion + pred.worst_merging,
    };
    let ratio = if predicted > 0.0 {
        measured_comparisons as f64 / predicted
    } else {
        f64::NAN
    };
    RatioRecord { regime, predicted, measured: measured_comparisons, ratio }
}
