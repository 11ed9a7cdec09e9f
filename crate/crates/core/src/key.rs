//! Sort keys, operation counters and the counting comparison channel.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// A 64-bit sort key with its original input position.
///
/// Ordering looks at `value` only. `tag` rides along so stability can be
/// checked after the fact; no sort in this crate ever compares it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Key {
    pub value: i64,
    pub tag: u64,
}

impl Key {
    pub const fn new(value: i64, tag: u64) -> Self {
        Key { value, tag }
    }
}

/// Tags the values with their positions `0..n`.
pub fn keys_from_values<I>(values: I) -> Vec<Key>
where
    I: IntoIterator<Item = i64>,
{
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| Key::new(v, i as u64))
        .collect()
}

pub fn values_of(keys: &[Key]) -> Vec<i64> {
    keys.iter().map(|k| k.value).collect()
}

pub fn tags_of(keys: &[Key]) -> Vec<u64> {
    keys.iter().map(|k| k.tag).collect()
}

/// Operation counters owned by a single sort invocation.
///
/// `relinks` counts node pointer writes for linked sorts and element writes
/// for the array sorts. `runs_created` and `merges` stay zero for sorts that
/// have no notion of runs. `capacity_used` is the run capacity in force for
/// List Sort and zero for everything else.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metrics {
    pub comparisons: u64,
    pub relinks: u64,
    pub runs_created: u64,
    pub merges: u64,
    pub capacity_used: u64,
}

impl Metrics {
    pub fn new() -> Self {
        Self::default()
    }

    /// Orders two keys by value and counts the comparison.
    #[inline]
    pub fn compare(&mut self, a: &Key, b: &Key) -> Ordering {
        self.comparisons += 1;
        a.value.cmp(&b.value)
    }

    #[inline]
    pub(crate) fn relinked(&mut self, count: u64) {
        self.relinks += count;
    }
}

/// Free-function form of [`Metrics::compare`].
#[inline]
pub fn counting_compare(a: &Key, b: &Key, metrics: &mut Metrics) -> Ordering {
    metrics.compare(a, b)
}

/// Sorted output together with the counters gathered while producing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortOutcome {
    pub output: Vec<Key>,
    pub metrics: Metrics,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compare_counts_every_call() {
        let mut m = Metrics::new();
        assert_eq!(counting_compare(&Key::new(3, 0), &Key::new(7, 1), &mut m), Ordering::Less);
        assert_eq!(m.comparisons, 1);
        assert_eq!(counting_compare(&Key::new(5, 0), &Key::new(5, 1), &mut m), Ordering::Equal);
        assert_eq!(counting_compare(&Key::new(10, 0), &Key::new(2, 1), &mut m), Ordering::Greater);
        assert_eq!(m.comparisons, 3);
    }

    #[test]
    fn tag_is_ignored_by_ordering() {
        let mut m = Metrics::new();
        assert_eq!(m.compare(&Key::new(1, 99), &Key::new(1, 0)), Ordering::Equal);
    }

    #[test]
    fn tags_follow_positions() {
        let keys = keys_from_values([9, -4, 9]);
        assert_eq!(tags_of(&keys), vec![0, 1, 2]);
        assert_eq!(values_of(&keys), vec![9, -4, 9]);
    }
}
