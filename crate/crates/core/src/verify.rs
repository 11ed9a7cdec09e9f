//! Output verification, run outside any timed region.

use thiserror::Error;

use crate::key::Key;

/// Why an output failed verification.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("output out of order at index {index}: {left} > {right}")]
    OutOfOrder { index: usize, left: i64, right: i64 },
    #[error("output contains value {value} (tag {tag}) not present in the input")]
    Unexpected { value: i64, tag: u64 },
    #[error("input value {value} (tag {tag}) missing from the output")]
    Missing { value: i64, tag: u64 },
}

/// Checks that `output` is non-decreasing by value and is a permutation of
/// `input` over `(value, tag)` pairs.
pub fn verify_sorted(input: &[Key], output: &[Key]) -> Result<(), Violation> {
    if let Some(index) = output.windows(2).position(|w| w[0].value > w[1].value) {
        return Err(Violation::OutOfOrder {
            index,
            left: output[index].value,
            right: output[index + 1].value,
        });
    }

    let mut expected: Vec<(i64, u64)> = input.iter().map(|k| (k.value, k.tag)).collect();
    let mut actual: Vec<(i64, u64)> = output.iter().map(|k| (k.value, k.tag)).collect();
    expected.sort_unstable();
    actual.sort_unstable();

    // Walk both sorted multisets; a foreign element is reported ahead of a
    // dropped one since it usually points at the bug more directly.
    let (mut i, mut j) = (0, 0);
    let mut missing = None;
    while i < expected.len() || j < actual.len() {
        match (expected.get(i), actual.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                missing.get_or_insert(*x);
                i += 1;
            }
            (_, Some(&(value, tag))) => return Err(Violation::Unexpected { value, tag }),
            (Some(x), None) => {
                missing.get_or_insert(*x);
                i += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    if let Some((value, tag)) = missing {
        return Err(Violation::Missing { value, tag });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::key::keys_from_values;

    #[test]
    fn accepts_sorted_permutation() {
        let input = keys_from_values([3, 1, 2]);
        let output = vec![input[1], input[2], input[0]];
        assert_eq!(verify_sorted(&input, &output), Ok(()));
    }

    #[test]
    fn reports_first_descent() {
        let input = keys_from_values([3, 1, 2]);
        let output = vec![input[1], input[0], input[2]];
        assert!(matches!(
            verify_sorted(&input, &output),
            Err(Violation::OutOfOrder { index: 1, left: 3, right: 2 })
        ));
    }

    #[test]
    fn reports_foreign_value() {
        let input = keys_from_values([3, 1, 2]);
        let output = vec![input[1], input[2], Key::new(4, 0)];
        assert_eq!(
            verify_sorted(&input, &output),
            Err(Violation::Unexpected { value: 4, tag: 0 })
        );
    }

    #[test]
    fn reports_dropped_value() {
        let input = keys_from_values([3, 1, 2]);
        let output = vec![input[1], input[2]];
        assert_eq!(
            verify_sorted(&input, &output),
            Err(Violation::Missing { value: 3, tag: 0 })
        );
    }

    #[test]
    fn tags_are_part_of_the_multiset() {
        let input = keys_from_values([5, 5]);
        let output = vec![input[0], input[0]];
        assert_eq!(
            verify_sorted(&input, &output),
            Err(Violation::Unexpected { value: 5, tag: 0 })
        );
    }

    #[test]
    fn empty_is_sorted() {
        assert_eq!(verify_sorted(&[], &[]), Ok(()));
    }
}
