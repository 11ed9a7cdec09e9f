//! Node storage and double-ended sorted runs.
//!
//! Nodes live in one arena per sort and are linked by index. A [`Run`] is a
//! singly linked chain `head -> ... -> tail` with both ends cached, which is
//! all the structure needed for constant-time insertion at either end and
//! for merging by relinking.

use std::cmp::Ordering;

use crate::key::{Key, Metrics};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NodeId(u32);

#[derive(Clone, Debug)]
struct Node {
    key: Key,
    next: Option<NodeId>,
}

#[derive(Clone, Debug, Default)]
pub struct NodeArena {
    nodes: Vec<Node>,
}

impl NodeArena {
    pub fn with_capacity(n: usize) -> Self {
        NodeArena { nodes: Vec::with_capacity(n) }
    }

    pub fn alloc(&mut self, key: Key) -> NodeId {
        let id = u32::try_from(self.nodes.len()).expect("node arena exceeds u32 index space");
        self.nodes.push(Node { key, next: None });
        NodeId(id)
    }

    #[inline]
    pub fn key(&self, id: NodeId) -> &Key {
        &self.nodes[id.0 as usize].key
    }

    #[inline]
    fn next(&self, id: NodeId) -> Option<NodeId> {
        self.nodes[id.0 as usize].next
    }

    #[inline]
    fn set_next(&mut self, id: NodeId, next: Option<NodeId>) {
        self.nodes[id.0 as usize].next = next;
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Walks the chain starting at `head`.
    pub fn chain(&self, head: NodeId) -> impl Iterator<Item = &Key> + '_ {
        std::iter::successors(Some(head), move |&id| self.next(id)).map(move |id| self.key(id))
    }
}

/// Result of offering a key to the ends of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extension {
    Prepended,
    Appended,
    Rejected,
}

/// A non-empty sorted run. `created_at` is its 1-based position in the pool.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    head: NodeId,
    tail: NodeId,
    len: usize,
    created_at: usize,
}

impl Run {
    /// A single-element run. The node must not belong to another chain.
    pub fn seed(node: NodeId, created_at: usize) -> Self {
        Run { head: node, tail: node, len: 1, created_at }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn created_at(&self) -> usize {
        self.created_at
    }

    pub(crate) fn set_created_at(&mut self, ordinal: usize) {
        self.created_at = ordinal;
    }

    pub fn head(&self) -> NodeId {
        self.head
    }

    pub fn first<'a>(&self, arena: &'a NodeArena) -> &'a Key {
        arena.key(self.head)
    }

    pub fn last<'a>(&self, arena: &'a NodeArena) -> &'a Key {
        arena.key(self.tail)
    }

    pub fn keys(&self, arena: &NodeArena) -> Vec<Key> {
        let mut out = Vec::with_capacity(self.len);
        out.extend(arena.chain(self.head).copied());
        out
    }

    /// Decides where `key` would go without touching the run: before the
    /// head if strictly smaller, after the tail if at least as large,
    /// otherwise nowhere. Uses at most two comparisons.
    pub fn classify(&self, arena: &NodeArena, key: &Key, m: &mut Metrics) -> Extension {
        if m.compare(key, arena.key(self.head)) == Ordering::Less {
            Extension::Prepended
        } else if m.compare(key, arena.key(self.tail)) != Ordering::Less {
            Extension::Appended
        } else {
            Extension::Rejected
        }
    }

    /// Links `node` at the end chosen by [`Run::classify`].
    pub(crate) fn attach(&mut self, arena: &mut NodeArena, node: NodeId, at: Extension, m: &mut Metrics) {
        match at {
            Extension::Prepended => {
                arena.set_next(node, Some(self.head));
                self.head = node;
            }
            Extension::Appended => {
                arena.set_next(node, None);
                arena.set_next(self.tail, Some(node));
                self.tail = node;
            }
            Extension::Rejected => return,
        }
        self.len += 1;
        m.relinked(1);
    }

    /// Offers `node` to the run: prepend if strictly below the head, append
    /// if at or above the tail, otherwise leave the run untouched.
    pub fn try_extend(&mut self, arena: &mut NodeArena, node: NodeId, m: &mut Metrics) -> Extension {
        let key = *arena.key(node);
        let at = self.classify(arena, &key, m);
        self.attach(arena, node, at, m);
        at
    }
}

/// Which run's nodes get threaded into the other during a merge.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MergeDirection {
    /// Always thread the later run into the earlier one.
    LaterIntoEarlier,
    /// Thread the shorter run into the longer one; ties keep the earlier run
    /// as the receiver.
    #[default]
    SmallerIntoBigger,
}

/// Merges two sorted runs into one by relinking nodes.
///
/// `earlier` must have been created before `later`. Equal values keep the
/// element from `earlier` first, whichever run is being threaded, so the
/// output order does not depend on `direction`. The merged run keeps
/// `earlier`'s ordinal.
pub fn merge_pair(
    arena: &mut NodeArena,
    earlier: Run,
    later: Run,
    direction: MergeDirection,
    m: &mut Metrics,
) -> Run {
    m.merges += 1;
    let thread_earlier = direction == MergeDirection::SmallerIntoBigger && earlier.len < later.len;
    let (host, guest) = if thread_earlier { (later, earlier) } else { (earlier, later) };
    let (head, tail) = thread(arena, host, guest, thread_earlier, m);
    Run { head, tail, len: earlier.len + later.len, created_at: earlier.created_at }
}

/// Splices every node of `guest` into `host` at its sorted position and
/// returns the new `(head, tail)`. When `guest_first_on_tie` is set a guest
/// node goes in front of an equal host node, otherwise behind it.
fn thread(
    arena: &mut NodeArena,
    host: Run,
    guest: Run,
    guest_first_on_tie: bool,
    m: &mut Metrics,
) -> (NodeId, NodeId) {
    let mut head = host.head;
    let mut tail = host.tail;
    let mut prev: Option<NodeId> = None;
    let mut cursor = Some(host.head);
    let mut pending = Some(guest.head);

    while let Some(g) = pending {
        let Some(c) = cursor else {
            // Host exhausted: the rest of the guest chain hangs off the end.
            let last = prev.expect("host run is non-empty");
            arena.set_next(last, Some(g));
            m.relinked(1);
            tail = guest.tail;
            break;
        };
        let goes_before = match m.compare(arena.key(g), arena.key(c)) {
            Ordering::Less => true,
            Ordering::Equal => guest_first_on_tie,
            Ordering::Greater => false,
        };
        if goes_before {
            pending = arena.next(g);
            match prev {
                Some(p) => arena.set_next(p, Some(g)),
                None => head = g,
            }
            arena.set_next(g, Some(c));
            m.relinked(2);
            prev = Some(g);
        } else {
            prev = Some(c);
            cursor = arena.next(c);
        }
    }
    (head, tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::key::{tags_of, values_of};

    fn build(arena: &mut NodeArena, values: &[i64], first_tag: u64, created_at: usize) -> Run {
        let mut m = Metrics::new();
        let nodes: Vec<NodeId> =
            values.iter().enumerate().map(|(i, &v)| arena.alloc(Key::new(v, first_tag + i as u64))).collect();
        let mut run = Run::seed(nodes[0], created_at);
        for &node in &nodes[1..] {
            assert_eq!(run.try_extend(arena, node, &mut m), Extension::Appended);
        }
        run
    }

    fn merged(a: &[i64], b: &[i64], direction: MergeDirection) -> (Vec<Key>, Metrics) {
        let mut arena = NodeArena::default();
        let ra = build(&mut arena, a, 0, 1);
        let rb = build(&mut arena, b, 100, 2);
        let mut m = Metrics::new();
        let run = merge_pair(&mut arena, ra, rb, direction, &mut m);
        assert_eq!(run.len(), a.len() + b.len());
        assert_eq!(run.created_at(), 1);
        let keys = run.keys(&arena);
        assert_eq!(run.first(&arena), &keys[0]);
        assert_eq!(run.last(&arena), keys.last().unwrap());
        (keys, m)
    }

    #[test]
    fn extend_prepends_below_head() {
        let mut arena = NodeArena::default();
        let mut run = build(&mut arena, &[5, 10], 0, 1);
        let node = arena.alloc(Key::new(3, 9));
        let mut m = Metrics::new();
        assert_eq!(run.try_extend(&mut arena, node, &mut m), Extension::Prepended);
        assert_eq!(values_of(&run.keys(&arena)), vec![3, 5, 10]);
        assert_eq!(m.comparisons, 1);
    }

    #[test]
    fn extend_appends_equal_tail() {
        let mut arena = NodeArena::default();
        let mut run = build(&mut arena, &[5, 10], 0, 1);
        let node = arena.alloc(Key::new(10, 9));
        let mut m = Metrics::new();
        assert_eq!(run.try_extend(&mut arena, node, &mut m), Extension::Appended);
        assert_eq!(values_of(&run.keys(&arena)), vec![5, 10, 10]);
        assert_eq!(tags_of(&run.keys(&arena)), vec![0, 1, 9]);
        assert_eq!(m.comparisons, 2);
    }

    #[test]
    fn extend_rejects_interior_key() {
        let mut arena = NodeArena::default();
        let mut run = build(&mut arena, &[5, 10], 0, 1);
        let node = arena.alloc(Key::new(7, 9));
        let mut m = Metrics::new();
        assert_eq!(run.try_extend(&mut arena, node, &mut m), Extension::Rejected);
        assert_eq!(values_of(&run.keys(&arena)), vec![5, 10]);
        assert_eq!(run.len(), 2);
        assert_eq!(m.comparisons, 2);
        assert_eq!(m.relinks, 0);
    }

    #[test]
    fn merge_interleaved_pair() {
        for dir in [MergeDirection::LaterIntoEarlier, MergeDirection::SmallerIntoBigger] {
            let (keys, _) = merged(&[1, 10], &[2, 9], dir);
            assert_eq!(values_of(&keys), vec![1, 2, 9, 10]);
        }
    }

    #[test]
    fn merge_later_head_below_earlier_head() {
        for dir in [MergeDirection::LaterIntoEarlier, MergeDirection::SmallerIntoBigger] {
            let (keys, _) = merged(&[5, 7], &[1, 6], dir);
            assert_eq!(values_of(&keys), vec![1, 5, 6, 7]);
        }
    }

    #[test]
    fn merge_ties_favor_earlier_run() {
        for dir in [MergeDirection::LaterIntoEarlier, MergeDirection::SmallerIntoBigger] {
            let (keys, _) = merged(&[3], &[3], dir);
            assert_eq!(tags_of(&keys), vec![0, 100]);
            // earlier run shorter, so the optimized path threads it into the later one
            let (keys, _) = merged(&[3], &[3, 3, 4], dir);
            assert_eq!(tags_of(&keys), vec![0, 100, 101, 102]);
        }
    }

    #[test]
    fn merge_either_side_exhausts_first() {
        for dir in [MergeDirection::LaterIntoEarlier, MergeDirection::SmallerIntoBigger] {
            let (keys, _) = merged(&[1, 2, 3], &[4], dir);
            assert_eq!(values_of(&keys), vec![1, 2, 3, 4]);
            let (keys, _) = merged(&[4], &[1, 2, 3], dir);
            assert_eq!(values_of(&keys), vec![1, 2, 3, 4]);
            let (keys, _) = merged(&[1, 8, 9], &[2, 3, 4, 5, 6], dir);
            assert_eq!(values_of(&keys), vec![1, 2, 3, 4, 5, 6, 8, 9]);
        }
    }

    #[test]
    fn smaller_into_bigger_relinks_less() {
        let (_, plain) = merged(&[50], &[1, 2, 3, 4, 5, 6], MergeDirection::LaterIntoEarlier);
        let (_, opt) = merged(&[50], &[1, 2, 3, 4, 5, 6], MergeDirection::SmallerIntoBigger);
        assert_eq!(plain.comparisons, opt.comparisons);
        assert!(opt.relinks < plain.relinks, "{} vs {}", opt.relinks, plain.relinks);
        assert_eq!(plain.merges, 1);
    }
}
