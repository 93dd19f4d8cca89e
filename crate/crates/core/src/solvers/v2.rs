use crate::instance::Instance;
use crate::num::Element;
use crate::partition::Partition;
use crate::solvers::{normalize, WorkingSet};
use crate::trace::{SolveTrace, StopReason, TraceStep};

/// Nearest-alive neighbor index over the static sorted positions.
///
/// Killing a position splices it out by pointing its hints at the
/// neighbors; lookups follow hint chains and path-compress as they go.
/// Position 0 (the dummy) is never killed, so leftward walks terminate;
/// rightward walks may run off the end, reported as `None`.
struct AliveLinks {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl AliveLinks {
    fn new(m: usize) -> Self {
        AliveLinks {
            left: (0..=m).collect(),
            right: (0..=m).collect(),
        }
    }

    fn kill(&mut self, p: usize) {
        self.left[p] = p - 1;
        self.right[p] = p + 1;
    }

    fn resolve_left<T: Element>(&mut self, ws: &WorkingSet<T>, start: usize) -> usize {
        let mut p = start;
        while !ws.is_alive(p) {
            p = self.left[p];
        }
        let mut q = start;
        while !ws.is_alive(q) {
            let next = self.left[q];
            self.left[q] = p;
            q = next;
        }
        p
    }

    fn resolve_right<T: Element>(&mut self, ws: &WorkingSet<T>, start: usize) -> Option<usize> {
        let m = self.left.len() - 1;
        let mut p = start;
        while p <= m && !ws.is_alive(p) {
            p = self.right[p];
        }
        let found = (p <= m).then_some(p);
        let mut q = start;
        while q <= m && !ws.is_alive(q) {
            let next = self.right[q];
            self.right[q] = p;
            q = next;
        }
        found
    }
}

/// Best-single-transfer solver.
///
/// All magnitudes start on side 1. Each round considers every side-1
/// magnitude plus a zero dummy, and transfers the candidate that minimizes
/// the absolute gap after the move, breaking ties toward the smallest
/// working position. Selecting the dummy means no real transfer can
/// strictly shrink the gap, so the loop stops there. Each transfer
/// strictly shrinks the absolute gap, and no element moves twice.
///
/// Per round the minimizer must be adjacent to the value `gap / 2` in
/// sorted order, so a binary search plus the nearest-alive links find it
/// in `O(log N)`; the whole run is `O(N log N)`. The result is locally
/// optimal: no single element can switch sides and strictly shrink the gap.
pub fn solve_v2<T: Element>(instance: &Instance<T>) -> (Partition<T>, SolveTrace<T>) {
    let mut ws = normalize(instance);
    let m = ws.len();
    let mut links = AliveLinks::new(m);
    let mut diff = ws.initial_diff();
    let mut steps = Vec::new();

    let stop_reason = loop {
        // Transferring a position at or before `boundary` keeps the gap
        // nonnegative; any later position flips it negative. The minimizer
        // is therefore alive-adjacent to the boundary on one of the two
        // sides. No position qualifies exactly when the gap is negative,
        // dummy included.
        let count = partition_point(m + 1, |p| ws.value(p).twice() <= diff);
        let boundary = count.checked_sub(1);

        let left = boundary.map(|b| links.resolve_left(&ws, b));
        let right = links.resolve_right(&ws, boundary.map_or(0, |b| b + 1));

        let gap_after = |p: usize| (diff - ws.value(p).twice()).abs();
        let winner = match (left, right) {
            (Some(l), Some(r)) => {
                // l < r, so a tie resolves to the smaller position.
                if gap_after(l) <= gap_after(r) {
                    l
                } else {
                    r
                }
            }
            (Some(l), None) => l,
            (None, Some(r)) => r,
            (None, None) => unreachable!("dummy candidate is always alive"),
        };

        if winner == 0 {
            break StopReason::ZeroSelected;
        }

        // The winner fixes the magnitude; the actual transfer goes to the
        // smallest alive position carrying it. Dead positions cluster at
        // the front of an equal run, so one rightward resolve finds it.
        let value = ws.value(winner);
        let run_start = partition_point(m + 1, |p| {
            ws.value(p).total_cmp(value) == std::cmp::Ordering::Less
        });
        let victim = links
            .resolve_right(&ws, run_start)
            .expect("winner is alive at or after its run start");
        debug_assert!(ws.value(victim) == value);

        diff = diff - value.twice();
        ws.kill(victim);
        links.kill(victim);
        steps.push(TraceStep { index: ws.original_index(victim), value, diff_after: diff });
    };

    (ws.denormalize(instance), SolveTrace { steps, stop_reason })
}

/// First index in `0..len` where `pred` turns false; `pred` must be true
/// on a prefix and false on the rest.
fn partition_point(len: usize, pred: impl Fn(usize) -> bool) -> usize {
    let mut lo = 0;
    let mut hi = len;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{local_optimality_violations, objective, Side};

    fn side_values<T: Element>(
        inst: &Instance<T>,
        part: &Partition<T>,
        side: Side,
    ) -> Vec<T> {
        inst.values()
            .iter()
            .zip(part.sides())
            .filter(|(_, &s)| s == side)
            .map(|(&v, _)| v)
            .collect()
    }

    #[test]
    fn golden_primes_run() {
        let inst = Instance::new(vec![2i128, 3, 5, 7, 11, 13, 17, 19, 23, 29]).unwrap();
        let (part, trace) = solve_v2(&inst);

        let moved: Vec<i128> = trace.steps.iter().map(|s| s.value).collect();
        assert_eq!(moved, vec![29, 23, 13]);
        let diffs: Vec<i128> = trace.steps.iter().map(|s| s.diff_after).collect();
        assert_eq!(diffs, vec![71, 25, -1]);
        assert_eq!(trace.stop_reason, StopReason::ZeroSelected);

        assert_eq!(side_values(&inst, &part, Side::One), vec![2, 3, 5, 7, 11, 17, 19]);
        assert_eq!(side_values(&inst, &part, Side::Two), vec![13, 23, 29]);
        assert_eq!((part.s1(), part.s2()), (64, 65));
        assert_eq!(objective(&part).diff, 1);
        assert!(local_optimality_violations(&inst, &part).is_empty());
    }

    #[test]
    fn golden_signed_run() {
        let inst = Instance::new(vec![
            -23i128, -17, -11, -5, -2, 3, 7, 13, 19, 29,
        ])
        .unwrap();
        let (part, trace) = solve_v2(&inst);

        let moved: Vec<i128> = trace.steps.iter().map(|s| s.value).collect();
        assert_eq!(moved, vec![29, 23, 13]);

        assert_eq!(side_values(&inst, &part, Side::One), vec![-23, 3, 7, 19]);
        assert_eq!(
            side_values(&inst, &part, Side::Two),
            vec![-17, -11, -5, -2, 13, 29]
        );
        assert_eq!((part.s1(), part.s2()), (6, 7));
        assert_eq!(objective(&part).diff, 1);
        assert!(local_optimality_violations(&inst, &part).is_empty());
    }

    #[test]
    fn signed_run_survives_input_shuffle() {
        // Same multiset as the signed golden run, shuffled. Magnitudes are
        // distinct, so the resulting split must be the same value sets.
        let inst = Instance::new(vec![
            13i128, -2, -23, 3, -11, 29, 7, -5, -17, 19,
        ])
        .unwrap();
        let (part, _) = solve_v2(&inst);
        let mut s1_vals = side_values(&inst, &part, Side::One);
        s1_vals.sort_unstable();
        assert_eq!(s1_vals, vec![-23, 3, 7, 19]);
        assert_eq!((part.s1(), part.s2()), (6, 7));
    }

    #[test]
    fn singleton_selects_dummy_immediately() {
        // Gap 5: moving 5 gives |-5|, no improvement, dummy ties and has
        // the smaller position.
        let inst = Instance::new(vec![5i128]).unwrap();
        let (part, trace) = solve_v2(&inst);
        assert_eq!(trace.stop_reason, StopReason::ZeroSelected);
        assert!(trace.steps.is_empty());
        assert_eq!((part.s1(), part.s2()), (5, 0));
        assert!(local_optimality_violations(&inst, &part).is_empty());
    }

    #[test]
    fn unshrinkable_gap_selects_dummy() {
        let inst = Instance::new(vec![5i128, 6, 10]).unwrap();
        let (part, trace) = solve_v2(&inst);
        assert_eq!(trace.stop_reason, StopReason::ZeroSelected);
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].value, 10);
        assert_eq!(objective(&part).diff, 1);
    }

    #[test]
    fn equal_magnitudes_transfer_earliest_position() {
        // Three equal values: the first transfer must pick the earliest
        // working position, which is the earliest input index here.
        let inst = Instance::new(vec![4i128, 4, 4]).unwrap();
        let (part, trace) = solve_v2(&inst);
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].index, 0);
        assert_eq!(objective(&part).diff, 4);
    }

    #[test]
    fn all_zeros_stop_immediately() {
        let inst = Instance::new(vec![0i128, 0]).unwrap();
        let (part, trace) = solve_v2(&inst);
        assert_eq!(trace.stop_reason, StopReason::ZeroSelected);
        assert!(trace.steps.is_empty());
        assert_eq!(part.sides(), &[Side::One, Side::One]);
    }

    #[test]
    fn float_golden_run() {
        let inst = Instance::new(vec![0.5f64, 1.5, 2.5]).unwrap();
        let (part, trace) = solve_v2(&inst);
        // Gap 4.5: best transfer is 2.5 (gap -0.5), then dummy.
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].value, 2.5);
        assert_eq!(trace.steps[0].diff_after, -0.5);
        assert_eq!(objective(&part).diff, 0.5);
        assert!(local_optimality_violations(&inst, &part).is_empty());
    }

    #[test]
    fn gap_shrinks_strictly_each_step() {
        let inst = Instance::new(vec![37i128, 12, 94, 3, 55, 21, 76, 40]).unwrap();
        let (_, trace) = solve_v2(&inst);
        let mut prev = 338i128;
        for step in &trace.steps {
            assert!(step.diff_after.abs() < prev.abs());
            prev = step.diff_after;
        }
    }
}
