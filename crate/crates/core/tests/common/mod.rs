//! Naive reference solvers for differential testing.
//!
//! These mirror the production selection rules with deliberately dumb
//! data structures: a full rescan of every candidate per round instead of
//! sorted-order bookkeeping. Every arithmetic step uses the same
//! expressions in the same order as the real solvers, so traces must
//! match bit for bit, float mode included.

use setpart::{Element, Instance, Partition, Side, SolveTrace, StopReason, TraceStep};

struct Item<T> {
    orig: usize,
    mag: T,
    neg: bool,
    alive: bool,
}

struct Normalized<T> {
    items: Vec<Item<T>>,
    zeros: Vec<usize>,
    diff: T,
}

fn normalize_ref<T: Element>(instance: &Instance<T>) -> Normalized<T> {
    let mut items: Vec<Item<T>> = Vec::new();
    let mut zeros = Vec::new();
    for (i, &v) in instance.values().iter().enumerate() {
        if v.is_zero() {
            zeros.push(i);
        } else {
            items.push(Item { orig: i, mag: v.abs(), neg: v < T::ZERO, alive: true });
        }
    }
    // Stable ascending magnitude sort, ties kept in input order.
    items.sort_by(|a, b| a.mag.total_cmp(b.mag));
    let mut diff = T::ZERO;
    for it in &items {
        diff = diff + it.mag;
    }
    Normalized { items, zeros, diff }
}

fn finish<T: Element>(
    instance: &Instance<T>,
    norm: &Normalized<T>,
    steps: Vec<TraceStep<T>>,
    stop_reason: StopReason,
) -> (Partition<T>, SolveTrace<T>) {
    let mut sides = vec![Side::One; instance.len()];
    for z in &norm.zeros {
        sides[*z] = Side::One;
    }
    for it in &norm.items {
        sides[it.orig] = if it.alive != it.neg { Side::One } else { Side::Two };
    }
    let partition = Partition::from_sides(instance, sides).unwrap();
    (partition, SolveTrace { steps, stop_reason })
}

/// Reference rule: while the gap is positive, flip the largest remaining
/// magnitude strictly below it (highest position on value ties).
pub fn naive_v1<T: Element>(instance: &Instance<T>) -> (Partition<T>, SolveTrace<T>) {
    let mut norm = normalize_ref(instance);
    let mut steps = Vec::new();
    let stop_reason = loop {
        if norm.diff <= T::ZERO {
            break StopReason::DiffNonpositive;
        }
        let diff = norm.diff;
        let pick = norm.items.iter().rposition(|it| it.alive && it.mag < diff);
        match pick {
            None => break StopReason::NoCandidate,
            Some(p) => {
                norm.items[p].alive = false;
                norm.diff = norm.diff - norm.items[p].mag.twice();
                steps.push(TraceStep {
                    index: norm.items[p].orig,
                    value: norm.items[p].mag,
                    diff_after: norm.diff,
                });
            }
        }
    };
    finish(instance, &norm, steps, stop_reason)
}

/// Reference rule: per round score every remaining magnitude (plus a zero
/// dummy) by the gap left after flipping it, flip the best scorer, stop
/// when the dummy wins. Ties keep the smallest working position, dummy
/// first.
pub fn naive_v2<T: Element>(instance: &Instance<T>) -> (Partition<T>, SolveTrace<T>) {
    let mut norm = normalize_ref(instance);
    let mut steps = Vec::new();
    let stop_reason = loop {
        let mut best_pos = 0usize;
        let mut best_score = norm.diff.abs();
        for (k, it) in norm.items.iter().enumerate() {
            if !it.alive {
                continue;
            }
            let score = (norm.diff - it.mag.twice()).abs();
            if score < best_score {
                best_score = score;
                best_pos = k + 1;
            }
        }
        if best_pos == 0 {
            break StopReason::ZeroSelected;
        }
        let it = &mut norm.items[best_pos - 1];
        it.alive = false;
        norm.diff = norm.diff - it.mag.twice();
        steps.push(TraceStep { index: it.orig, value: it.mag, diff_after: norm.diff });
    };
    finish(instance, &norm, steps, stop_reason)
}

/// Optimal diff and the lexicographically smallest optimal assignment
/// (element 0 pinned to side 1), by checking every assignment in lex
/// order with sums recomputed the same way the public checker does.
pub fn exhaustive_optimum<T: Element>(instance: &Instance<T>) -> (T, Vec<Side>) {
    let n = instance.len();
    assert!(n <= 20, "exhaustive oracle limited to tiny instances");
    let mut best: Option<(T, Vec<Side>)> = None;
    for mask in 0u32..(1u32 << (n - 1)) {
        // Element i sits at bit n-1-i, so element 1 is the most
        // significant decision and ascending masks enumerate assignments
        // in lex order; a set bit means side 2.
        let sides: Vec<Side> = (0..n)
            .map(|i| {
                if i > 0 && (mask >> (n - 1 - i)) & 1 == 1 {
                    Side::Two
                } else {
                    Side::One
                }
            })
            .collect();
        let p = Partition::from_sides(instance, sides.clone()).unwrap();
        let d = p.signed_diff().abs();
        let better = match &best {
            None => true,
            Some((b, _)) => d < *b,
        };
        if better {
            best = Some((d, sides));
        }
    }
    best.unwrap()
}
