use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::instance::Instance;
use crate::num::Element;
use crate::partition::{Partition, Side};
use crate::solvers::normalize;

/// Heap entry ordered by value, then by smaller node id on equal values,
/// so pop order (and with it the whole run) is deterministic.
struct HeapItem<T> {
    value: T,
    id: usize,
}

impl<T: Element> Ord for HeapItem<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value
            .total_cmp(other.value)
            .then_with(|| other.id.cmp(&self.id))
    }
}

impl<T: Element> PartialOrd for HeapItem<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Element> PartialEq for HeapItem<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T: Element> Eq for HeapItem<T> {}

/// Differencing record: committing two values to opposite sides leaves
/// their difference in play on the larger value's side.
enum Node {
    Leaf(usize),
    Pair { same: usize, opposite: usize },
}

/// Largest-two differencing. Repeatedly replaces the two largest
/// magnitudes with their difference, recording each pairing; the last
/// value standing is the residual gap. The recorded pairings form a tree
/// whose two-coloring (difference children on opposite sides of their
/// parent) reconstructs an assignment realizing exactly that residual.
///
/// Returns the partition and the residual. In integer mode the partition's
/// `|s1 - s2|` equals the residual exactly; in float mode the two are
/// computed by differently ordered roundings and may disagree in the last
/// units of precision.
pub fn kk<T: Element>(instance: &Instance<T>) -> (Partition<T>, T) {
    let ws = normalize(instance);
    let m = ws.len();
    if m == 0 {
        return (ws.denormalize(instance), T::ZERO);
    }

    let mut nodes: Vec<Node> = (1..=m).map(Node::Leaf).collect();
    let mut heap: BinaryHeap<HeapItem<T>> = (1..=m)
        .map(|p| HeapItem { value: ws.value(p), id: p - 1 })
        .collect();

    while heap.len() > 1 {
        let a = heap.pop().expect("len > 1");
        let b = heap.pop().expect("len > 1");
        let id = nodes.len();
        nodes.push(Node::Pair { same: a.id, opposite: b.id });
        heap.push(HeapItem { value: a.value - b.value, id });
    }
    let root = heap.pop().expect("one node remains");
    let residual = root.value;

    // Color the tree: the root's side is side 1; a pair's `same` child
    // inherits its side, the `opposite` child gets the other.
    let mut abs_side = vec![Side::One; m + 1];
    let mut stack = vec![(root.id, Side::One)];
    while let Some((id, side)) = stack.pop() {
        match nodes[id] {
            Node::Leaf(p) => abs_side[p] = side,
            Node::Pair { same, opposite } => {
                stack.push((same, side));
                stack.push((opposite, side.other()));
            }
        }
    }

    (ws.partition_with(instance, |p| abs_side[p]), residual)
}
