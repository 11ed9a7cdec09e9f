use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::baselines;
use crate::key::{Key, SortOutcome};
use crate::listsort::{list_sort, Capacity};

/// Every sort the harness can run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    ListSort,
    Bubble,
    Selection,
    Insertion,
    Quick,
    MergeArray,
    MergeLinked,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown algorithm `{0}` (expected one of: listsort, bubble, selection, insertion, quick, mergearr, mergelinked)")]
pub struct UnknownAlgorithm(pub String);

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::ListSort,
        Algorithm::Bubble,
        Algorithm::Selection,
        Algorithm::Insertion,
        Algorithm::Quick,
        Algorithm::MergeArray,
        Algorithm::MergeLinked,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::ListSort => "listsort",
            Algorithm::Bubble => "bubble",
            Algorithm::Selection => "selection",
            Algorithm::Insertion => "insertion",
            Algorithm::Quick => "quick",
            Algorithm::MergeArray => "mergearr",
            Algorithm::MergeLinked => "mergelinked",
        }
    }

    /// Whether equal keys keep their input order.
    pub fn is_stable(self) -> bool {
        !matches!(self, Algorithm::Selection | Algorithm::Quick)
    }

    /// Runs the sort. `capacity` only affects List Sort.
    pub fn run(self, input: Vec<Key>, capacity: Option<Capacity>) -> SortOutcome {
        match self {
            Algorithm::ListSort => list_sort(&input, capacity),
            Algorithm::Bubble => baselines::bubble_sort(input),
            Algorithm::Selection => baselines::selection_sort(input),
            Algorithm::Insertion => baselines::insertion_sort(input),
            Algorithm::Quick => baselines::quick_sort(input),
            Algorithm::MergeArray => baselines::merge_sort_array(input),
            Algorithm::MergeLinked => baselines::merge_sort_linked(input),
        }
    }
}

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "listsort" | "list" => Algorithm::ListSort,
            "bubble" => Algorithm::Bubble,
            "selection" => Algorithm::Selection,
            "insertion" => Algorithm::Insertion,
            "quick" | "quicksort" => Algorithm::Quick,
            "mergearr" | "mergesort_array" => Algorithm::MergeArray,
            "mergelinked" | "mergesort_linked" => Algorithm::MergeLinked,
            _ => return Err(UnknownAlgorithm(s.to_owned())),
        })
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
