//! List Sort and friends.
//!
//! * [`listsort`]: the run-pool sort with splice merging.
//! * [`baselines`]: bubble, selection, insertion, quick and two merge sorts,
//!   all counting comparisons through the same channel.
//! * [`datagen`]: seeded input generators.
//! * [`analysis`]: closed-form count predictors.
//! * [`fuzz`]: randomized oracle equivalence, parallel with the `parallel`
//!   feature (on by default).
//! * [`bench`]: the timing harness behind the `bench` binary.

pub mod algorithm;
pub mod analysis;
pub mod baselines;
pub mod bench;
pub mod datagen;
pub mod fuzz;
pub mod key;
pub mod listsort;
pub mod verify;

pub use algorithm::Algorithm;
pub use datagen::{generate, Pattern};
pub use key::{counting_compare, Key, Metrics, SortOutcome};
pub use listsort::{list_capacity, list_sort, Capacity, ListSort, MergeDirection};
pub use verify::{verify_sorted, Violation};
