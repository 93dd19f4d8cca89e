use crate::instance::Instance;
use crate::num::Element;
use crate::partition::Partition;
use crate::solvers::normalize;
use crate::trace::{SolveTrace, StopReason, TraceStep};

/// Largest-admissible-transfer solver.
///
/// All magnitudes start on side 1, so the gap starts at their sum. Each
/// round transfers the largest magnitude strictly below the current gap.
/// The loop stops when the gap is no longer positive, or when every
/// remaining side-1 magnitude is at least the gap (then no transfer is
/// admissible and the gap is already as small as one transfer can make it).
///
/// Transferred magnitudes are nonincreasing, which is what lets a single
/// descending cursor find each round's candidate: once a position is
/// skipped because its value reached the gap, the gap only shrinks from
/// there, so the position never becomes admissible again.
///
/// Runs in `O(N log N)` (the sort dominates). The result is locally
/// optimal: no single element can switch sides and strictly shrink the gap.
pub fn solve_v1<T: Element>(instance: &Instance<T>) -> (Partition<T>, SolveTrace<T>) {
    let mut ws = normalize(instance);
    let mut diff = ws.initial_diff();
    let mut steps = Vec::new();
    let mut cur = ws.len();

    let stop_reason = loop {
        if diff <= T::ZERO {
            break StopReason::DiffNonpositive;
        }
        while cur >= 1 && ws.value(cur) >= diff {
            cur -= 1;
        }
        if cur == 0 {
            break StopReason::NoCandidate;
        }
        let value = ws.value(cur);
        diff = diff - value.twice();
        ws.kill(cur);
        steps.push(TraceStep { index: ws.original_index(cur), value, diff_after: diff });
        cur -= 1;
    };

    (ws.denormalize(instance), SolveTrace { steps, stop_reason })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{local_optimality_violations, objective, Side};

    fn side1_values<T: Element>(inst: &Instance<T>, part: &Partition<T>) -> Vec<T> {
        inst.values()
            .iter()
            .zip(part.sides())
            .filter(|(_, &s)| s == Side::One)
            .map(|(&v, _)| v)
            .collect()
    }

    #[test]
    fn golden_primes_run() {
        let inst = Instance::new(vec![2i128, 3, 5, 7, 11, 13, 17, 19, 23, 29]).unwrap();
        let (part, trace) = solve_v1(&inst);

        let moved: Vec<i128> = trace.steps.iter().map(|s| s.value).collect();
        assert_eq!(moved, vec![29, 23, 19]);
        let diffs: Vec<i128> = trace.steps.iter().map(|s| s.diff_after).collect();
        assert_eq!(diffs, vec![71, 25, -13]);
        assert_eq!(trace.stop_reason, StopReason::DiffNonpositive);

        assert_eq!(side1_values(&inst, &part), vec![2, 3, 5, 7, 11, 13, 17]);
        assert_eq!((part.s1(), part.s2()), (58, 71));
        assert_eq!(objective(&part).diff, 13);
        assert!(local_optimality_violations(&inst, &part).is_empty());
    }

    #[test]
    fn stops_without_candidate_when_gap_is_unshrinkable() {
        // After transferring 10 the gap is 1 and both remaining values
        // exceed it, so the run ends with a positive gap.
        let inst = Instance::new(vec![5i128, 6, 10]).unwrap();
        let (part, trace) = solve_v1(&inst);
        assert_eq!(trace.stop_reason, StopReason::NoCandidate);
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].value, 10);
        assert_eq!(trace.steps[0].diff_after, 1);
        assert_eq!(side1_values(&inst, &part), vec![5, 6]);
        assert!(local_optimality_violations(&inst, &part).is_empty());
    }

    #[test]
    fn singleton_has_no_candidate() {
        let inst = Instance::new(vec![5i128]).unwrap();
        let (part, trace) = solve_v1(&inst);
        assert_eq!(trace.stop_reason, StopReason::NoCandidate);
        assert!(trace.steps.is_empty());
        assert_eq!((part.s1(), part.s2()), (5, 0));
    }

    #[test]
    fn equal_pair_balances_exactly() {
        let inst = Instance::new(vec![5i128, 5]).unwrap();
        let (part, trace) = solve_v1(&inst);
        assert_eq!(trace.stop_reason, StopReason::DiffNonpositive);
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(objective(&part).diff, 0);
    }

    #[test]
    fn all_zeros_stop_immediately() {
        let inst = Instance::new(vec![0i128, 0, 0]).unwrap();
        let (part, trace) = solve_v1(&inst);
        assert_eq!(trace.stop_reason, StopReason::DiffNonpositive);
        assert!(trace.steps.is_empty());
        assert_eq!(part.sides(), &[Side::One, Side::One, Side::One]);
    }

    #[test]
    fn signed_input_keeps_gap_arithmetic() {
        // Same magnitudes as the golden run but with signs flipped on
        // every other element; the traced gaps must be identical.
        let inst = Instance::new(vec![
            -2i128, 3, -5, 7, -11, 13, -17, 19, -23, 29,
        ])
        .unwrap();
        let (part, trace) = solve_v1(&inst);
        let diffs: Vec<i128> = trace.steps.iter().map(|s| s.diff_after).collect();
        assert_eq!(diffs, vec![71, 25, -13]);
        assert_eq!(objective(&part).diff, 13);
        assert_eq!(part.signed_diff(), -13);
        assert!(local_optimality_violations(&inst, &part).is_empty());
    }

    #[test]
    fn float_run_matches_integer_shape() {
        let inst = Instance::new(vec![2.0f64, 3.0, 5.0, 7.0, 11.0, 13.0, 17.0, 19.0, 23.0, 29.0])
            .unwrap();
        let (part, trace) = solve_v1(&inst);
        let moved: Vec<f64> = trace.steps.iter().map(|s| s.value).collect();
        assert_eq!(moved, vec![29.0, 23.0, 19.0]);
        assert_eq!(objective(&part).diff, 13.0);
        assert!(local_optimality_violations(&inst, &part).is_empty());
    }
}
