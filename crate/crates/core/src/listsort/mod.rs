//! List Sort.
//!
//! Elements are fed one at a time into a pool of at most `L` sorted runs.
//! A new element extends the newest run at whichever end it fits; if it
//! fits neither end a fresh run is opened. Once the pool is full the runs
//! are folded from last to first into one by splice merging, and insertion
//! resumes. Already sorted input, in either direction, ends up in a single
//! run with no merging at all.

mod capacity;
mod run;

pub use capacity::{list_capacity, Capacity, CapacityError, MIN_CAPACITY};
pub use run::{merge_pair, Extension, MergeDirection, NodeArena, NodeId, Run};

use crate::key::{Key, Metrics, SortOutcome};

/// How an incoming element finds a run that will take it.
///
/// When every run is offered the element oldest first, run ranges stay
/// nested: heads never decrease and tails never increase with creation
/// order. The runs that reject an element are then always a prefix of the
/// pool, so [`Probe::Bisect`] can find the first run that accepts it by
/// binary search and lands it exactly where [`Probe::Scan`] would.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Probe {
    /// Binary search over the nested run ranges, `O(log L)` probes.
    #[default]
    Bisect,
    /// Every run in creation order until one takes the element, up to two
    /// comparisons per run.
    Scan,
    /// Only the newest run. Ranges are not nested under this strategy and
    /// runs stay short on random input.
    Newest,
}

/// Hooks into the life of a [`RunPool`]. Both methods default to no-ops.
pub trait PoolObserver {
    /// Called with the current runs right before a full merge.
    fn before_merge(&mut self, _runs: &[Run]) {}
    /// Called after every element has been placed.
    fn after_insert(&mut self, _runs: &[Run]) {}
}

/// Observer that ignores everything.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoObserver;

impl PoolObserver for NoObserver {}

/// The ordered collection of runs, newest last.
#[derive(Clone, Debug)]
pub struct RunPool {
    arena: NodeArena,
    runs: Vec<Run>,
    capacity: Capacity,
    direction: MergeDirection,
    probe: Probe,
}

impl RunPool {
    pub fn new(capacity: Capacity, direction: MergeDirection) -> Self {
        Self::with_expected_len(capacity, direction, 0)
    }

    pub fn with_expected_len(capacity: Capacity, direction: MergeDirection, n: usize) -> Self {
        RunPool {
            arena: NodeArena::with_capacity(n),
            runs: Vec::with_capacity(capacity.get()),
            capacity,
            direction,
            probe: Probe::default(),
        }
    }

    pub fn with_probe(mut self, probe: Probe) -> Self {
        self.probe = probe;
        self
    }

    pub fn capacity(&self) -> Capacity {
        self.capacity
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn arena(&self) -> &NodeArena {
        &self.arena
    }

    /// The insertion target, if any element has been inserted.
    pub fn current(&self) -> Option<&Run> {
        self.runs.last()
    }

    pub fn run_keys(&self) -> Vec<Vec<Key>> {
        self.runs.iter().map(|r| r.keys(&self.arena)).collect()
    }

    pub fn insert(&mut self, key: Key, m: &mut Metrics) {
        self.insert_observed(key, m, &mut NoObserver);
    }

    pub fn insert_observed<O: PoolObserver>(&mut self, key: Key, m: &mut Metrics, observer: &mut O) {
        let node = self.arena.alloc(key);
        self.place(node, m, observer);
        observer.after_insert(&self.runs);
    }

    fn place<O: PoolObserver>(&mut self, node: NodeId, m: &mut Metrics, observer: &mut O) {
        if self.offer(node, m) {
            return;
        }
        if self.runs.is_empty() || self.runs.len() < self.capacity.get() {
            self.open_run(node, m);
            return;
        }
        observer.before_merge(&self.runs);
        self.merge_all(m);
        let merged = self.runs.last_mut().expect("merge leaves one run");
        if merged.try_extend(&mut self.arena, node, m) == Extension::Rejected {
            self.open_run(node, m);
        }
    }

    /// Tries to place `node` in an existing run according to the probe
    /// strategy. Returns false when no run takes it.
    fn offer(&mut self, node: NodeId, m: &mut Metrics) -> bool {
        let key = *self.arena.key(node);
        let slot = match self.probe {
            Probe::Newest => self
                .runs
                .len()
                .checked_sub(1)
                .map(|last| (last, self.runs[last].classify(&self.arena, &key, m))),
            Probe::Scan => self
                .runs
                .iter()
                .enumerate()
                .map(|(i, run)| (i, run.classify(&self.arena, &key, m)))
                .find(|&(_, at)| at != Extension::Rejected),
            Probe::Bisect => {
                // runs[..lo] reject the key; runs[hi..] accept it
                let (mut lo, mut hi) = (0, self.runs.len());
                let mut accepted = None;
                while lo < hi {
                    let mid = lo + (hi - lo) / 2;
                    match self.runs[mid].classify(&self.arena, &key, m) {
                        Extension::Rejected => lo = mid + 1,
                        at => {
                            hi = mid;
                            accepted = Some((mid, at));
                        }
                    }
                }
                accepted
            }
        };
        match slot {
            Some((i, at)) if at != Extension::Rejected => {
                self.runs[i].attach(&mut self.arena, node, at, m);
                true
            }
            _ => false,
        }
    }

    fn open_run(&mut self, node: NodeId, m: &mut Metrics) {
        self.runs.push(Run::seed(node, self.runs.len() + 1));
        m.runs_created += 1;
    }

    /// Folds the runs from newest to oldest until one remains.
    pub fn merge_all(&mut self, m: &mut Metrics) {
        while self.runs.len() > 1 {
            let later = self.runs.pop().expect("len > 1");
            let earlier = self.runs.pop().expect("len > 1");
            let merged = merge_pair(&mut self.arena, earlier, later, self.direction, m);
            self.runs.push(merged);
        }
        if let Some(only) = self.runs.last_mut() {
            only.set_created_at(1);
        }
    }

    /// Merges whatever is left and returns the elements in order.
    pub fn into_sorted(mut self, m: &mut Metrics) -> Vec<Key> {
        self.merge_all(m);
        match self.runs.first() {
            Some(run) => run.keys(&self.arena),
            None => Vec::new(),
        }
    }
}

/// Configured List Sort.
#[derive(Clone, Copy, Debug, Default)]
pub struct ListSort {
    capacity: Option<Capacity>,
    direction: MergeDirection,
    probe: Probe,
}

impl ListSort {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fixes the run capacity instead of deriving it from the input length.
    pub fn capacity(mut self, capacity: Option<Capacity>) -> Self {
        self.capacity = capacity;
        self
    }

    pub fn direction(mut self, direction: MergeDirection) -> Self {
        self.direction = direction;
        self
    }

    pub fn probe(mut self, probe: Probe) -> Self {
        self.probe = probe;
        self
    }

    pub fn sort(&self, input: &[Key]) -> SortOutcome {
        self.sort_observed(input, &mut NoObserver)
    }

    pub fn sort_observed<O: PoolObserver>(&self, input: &[Key], observer: &mut O) -> SortOutcome {
        let capacity = self.capacity.unwrap_or_else(|| Capacity::for_len(input.len()));
        let mut metrics = Metrics { capacity_used: capacity.get() as u64, ..Metrics::default() };
        if input.is_empty() {
            return SortOutcome { output: Vec::new(), metrics };
        }
        let mut pool = RunPool::with_expected_len(capacity, self.direction, input.len()).with_probe(self.probe);
        for &key in input {
            pool.insert_observed(key, &mut metrics, observer);
        }
        if pool.runs().len() > 1 {
            observer.before_merge(pool.runs());
        }
        let output = pool.into_sorted(&mut metrics);
        SortOutcome { output, metrics }
    }
}

/// Sorts `input` with the capacity prescribed by [`list_capacity`] unless
/// `capacity` overrides it.
pub fn list_sort(input: &[Key], capacity: Option<Capacity>) -> SortOutcome {
    ListSort::new().capacity(capacity).sort(input)
}
