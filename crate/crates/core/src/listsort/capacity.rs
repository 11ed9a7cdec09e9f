use std::fmt;

use thiserror::Error;

/// Smallest capacity that still leaves room for a run besides the merged one.
pub const MIN_CAPACITY: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("run capacity must be at least {MIN_CAPACITY}, got {0}")]
pub struct CapacityError(pub usize);

/// Maximum number of runs the pool holds before it is forced to collapse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Capacity(usize);

impl Capacity {
    pub fn new(runs: usize) -> Result<Self, CapacityError> {
        if runs < MIN_CAPACITY {
            return Err(CapacityError(runs));
        }
        Ok(Capacity(runs))
    }

    /// The capacity prescribed for an input of `n` elements.
    pub fn for_len(n: usize) -> Self {
        Capacity(list_capacity(n))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for Capacity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `numerator / denominator` rounded half-up, for non-negative operands.
fn div_round_half_up(numerator: usize, denominator: usize) -> usize {
    (2 * numerator + denominator) / (2 * denominator)
}

/// Run capacity as a function of input length.
///
/// Piecewise-linear in the number of whole ten-thousands in `n`. The
/// fractional slopes are evaluated in integer arithmetic and rounded
/// half-up; the result never drops below [`MIN_CAPACITY`].
pub fn list_capacity(n: usize) -> usize {
    let tt = n / 10_000;
    let runs = match tt {
        0 => 15,
        1..=10 => tt * 5,
        11..=50 => 50 + (tt - 10) * 3,
        51..=100 => 170 + (tt - 50),
        101..=500 => 220 + div_round_half_up(45 * (tt - 100), 100),
        501..=1000 => 400 + div_round_half_up(15 * (tt - 500), 100),
        1001..=10_000 => 475 + div_round_half_up(32 * (tt - 1000), 1000),
        _ => 10_000,
    };
    runs.max(MIN_CAPACITY)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_anchor_points() {
        assert_eq!(list_capacity(0), 15);
        assert_eq!(list_capacity(5_000), 15);
        assert_eq!(list_capacity(9_999), 15);
        assert_eq!(list_capacity(10_000), 5);
        assert_eq!(list_capacity(100_000), 50);
        assert_eq!(list_capacity(500_000), 170);
        assert_eq!(list_capacity(1_000_000), 220);
        assert_eq!(list_capacity(2_000_000), 265);
        assert_eq!(list_capacity(5_000_000), 400);
        assert_eq!(list_capacity(10_000_000), 475);
        assert_eq!(list_capacity(100_000_000), 763);
        assert_eq!(list_capacity(100_010_000), 10_000);
    }

    #[test]
    fn fractional_steps_round_half_up() {
        // 220 + 0.45 * 1 = 220.45, 220 + 0.45 * 10 = 224.5
        assert_eq!(list_capacity(1_010_000), 220);
        assert_eq!(list_capacity(1_100_000), 225);
        // 400 + 0.15 * 10 = 401.5
        assert_eq!(list_capacity(5_100_000), 402);
        // 475 + 0.032 * 500 = 491
        assert_eq!(list_capacity(15_000_000), 491);
    }

    #[test]
    fn capacity_rejects_below_two() {
        assert_eq!(Capacity::new(0), Err(CapacityError(0)));
        assert_eq!(Capacity::new(1), Err(CapacityError(1)));
        assert_eq!(Capacity::new(2).map(Capacity::get), Ok(2));
    }
}
