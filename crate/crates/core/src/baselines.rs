//! Instrumented comparison sorts used as reference points for List Sort.
//!
//! Every sort takes ownership of its input buffer and routes all key
//! inspection through [`Metrics::compare`]. For the array sorts `relinks`
//! counts element writes, so a swap costs two.

use std::cmp::Ordering;

use crate::key::{Key, Metrics, SortOutcome};
use crate::listsort::{merge_pair, MergeDirection, NodeArena, Run};

/// Adjacent-swap passes with early exit once a pass makes no swap.
pub fn bubble_sort(mut v: Vec<Key>) -> SortOutcome {
    let mut m = Metrics::new();
    let mut end = v.len();
    while end > 1 {
        let mut swapped = false;
        for i in 1..end {
            if m.compare(&v[i - 1], &v[i]) == Ordering::Greater {
                v.swap(i - 1, i);
                m.relinked(2);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
        end -= 1;
    }
    SortOutcome { output: v, metrics: m }
}

/// Always scans the whole unsorted suffix, so it makes exactly
/// `n(n-1)/2` comparisons regardless of input order.
pub fn selection_sort(mut v: Vec<Key>) -> SortOutcome {
    let mut m = Metrics::new();
    let n = v.len();
    for i in 0..n.saturating_sub(1) {
        let mut min = i;
        for j in i + 1..n {
            if m.compare(&v[j], &v[min]) == Ordering::Less {
                min = j;
            }
        }
        if min != i {
            v.swap(i, min);
            m.relinked(2);
        }
    }
    SortOutcome { output: v, metrics: m }
}

pub fn insertion_sort(mut v: Vec<Key>) -> SortOutcome {
    let mut m = Metrics::new();
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && m.compare(&v[j - 1], &v[j]) == Ordering::Greater {
            v.swap(j - 1, j);
            m.relinked(2);
            j -= 1;
        }
    }
    SortOutcome { output: v, metrics: m }
}

/// Quicksort with the last element of each range as pivot (Lomuto
/// partition). Ranges wait on an explicit stack, and the smaller side is
/// always handled first, so the stack stays logarithmic even when sorted
/// input degrades every partition to size `n - 1`.
pub fn quick_sort(mut v: Vec<Key>) -> SortOutcome {
    let mut m = Metrics::new();
    // half-open ranges
    let mut stack: Vec<(usize, usize)> = vec![(0, v.len())];
    while let Some((mut lo, mut hi)) = stack.pop() {
        while hi - lo > 1 {
            let p = partition(&mut v, lo, hi - 1, &mut m);
            let left = (lo, p);
            let right = (p + 1, hi);
            let (small, large) = if p - lo < hi - p { (left, right) } else { (right, left) };
            if large.1 - large.0 > 1 {
                stack.push(large);
            }
            (lo, hi) = small;
        }
    }
    SortOutcome { output: v, metrics: m }
}

fn partition(v: &mut [Key], lo: usize, hi: usize, m: &mut Metrics) -> usize {
    let pivot = v[hi];
    let mut store = lo;
    for j in lo..hi {
        if m.compare(&v[j], &pivot) != Ordering::Greater {
            if store != j {
                v.swap(store, j);
                m.relinked(2);
            }
            store += 1;
        }
    }
    if store != hi {
        v.swap(store, hi);
        m.relinked(2);
    }
    store
}

/// Top-down merge sort over the buffer with one scratch buffer of equal size.
pub fn merge_sort_array(mut v: Vec<Key>) -> SortOutcome {
    let mut m = Metrics::new();
    let mut scratch = v.clone();
    sort_range(&mut v, &mut scratch, &mut m);
    SortOutcome { output: v, metrics: m }
}

fn sort_range(v: &mut [Key], scratch: &mut [Key], m: &mut Metrics) {
    let n = v.len();
    if n < 2 {
        return;
    }
    let mid = n / 2;
    {
        let (left, right) = v.split_at_mut(mid);
        let (sl, sr) = scratch.split_at_mut(mid);
        sort_range(left, sl, m);
        sort_range(right, sr, m);
    }
    scratch[..n].copy_from_slice(v);
    let (left, right) = scratch[..n].split_at(mid);
    let (mut i, mut j) = (0, 0);
    for slot in v.iter_mut() {
        let take_left = j == right.len()
            || (i < left.len() && m.compare(&left[i], &right[j]) != Ordering::Greater);
        if take_left {
            *slot = left[i];
            i += 1;
        } else {
            *slot = right[j];
            j += 1;
        }
    }
    m.relinked(n as u64);
}

/// Bottom-up merge sort on a linked node chain.
///
/// Sorted lists of `2^i` nodes are kept in bins, like carry propagation in a
/// binary counter; each merge is a splice merge with the older list winning
/// ties.
pub fn merge_sort_linked(v: Vec<Key>) -> SortOutcome {
    let mut m = Metrics::new();
    let mut arena = NodeArena::with_capacity(v.len());
    let mut bins: Vec<Option<Run>> = Vec::new();

    for key in v {
        let mut carry = Run::seed(arena.alloc(key), 0);
        let mut level = 0;
        loop {
            if level == bins.len() {
                bins.push(None);
            }
            match bins[level].take() {
                Some(older) => {
                    carry = merge_pair(&mut arena, older, carry, MergeDirection::LaterIntoEarlier, &mut m);
                    level += 1;
                }
                None => {
                    bins[level] = Some(carry);
                    break;
                }
            }
        }
    }

    // higher bins hold earlier elements
    let mut acc: Option<Run> = None;
    for older in bins.into_iter().flatten() {
        acc = Some(match acc {
            None => older,
            Some(newer) => merge_pair(&mut arena, older, newer, MergeDirection::LaterIntoEarlier, &mut m),
        });
    }
    let output = acc.map(|run| run.keys(&arena)).unwrap_or_default();
    SortOutcome { output, metrics: m }
}
