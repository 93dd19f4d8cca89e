use crate::baselines::greedy::greedy_abs_sides;
use crate::baselines::CapExceeded;
use crate::instance::IntInstance;
use crate::partition::{Partition, Side};
use crate::solvers::normalize;

/// Subset of one half: its sum and the membership mask over that half's
/// working positions.
type Entry = (i128, u64);

/// Scan state: the best-known bracket around the unreachable ideal S/2.
/// `s_upper` is the best max side sum seen so far, `s_lower = S - s_upper`
/// its complement; the optimal max side sum lies in [S/2, s_upper]. The
/// two subset-sum lists are scanned jointly, list_a ascending and list_b
/// descending, tightening the bracket on strict improvements only.
struct HsState {
    s_upper: i128,
    s_lower: i128,
    list_a: Vec<Entry>,
    list_b: Vec<Entry>,
}

impl HsState {
    fn best_diff(&self) -> i128 {
        self.s_upper - self.s_lower
    }
}

/// Meet-in-the-middle exact solver. Integer instances with at most `cap`
/// elements (the lists hold `2^(N/2)` sums each).
///
/// The magnitudes are split into two halves; all subset sums of each half
/// are enumerated with back-references to their members. Sorting one list
/// ascending and the other descending lets a single joint pass consider
/// every candidate combined sum `a + b` in a useful order: too-small sums
/// advance the ascending list, too-large sums advance the descending one,
/// and each strict improvement narrows the bracket around S/2. Hitting
/// S/2 exactly ends the scan early. The bound is seeded from greedy, whose
/// partition also serves as the fallback result if the scan never improves
/// on it.
///
/// Returns the optimal gap and a partition achieving it.
pub fn hs(instance: &IntInstance, cap: usize) -> Result<(i128, Partition<i128>), CapExceeded> {
    let n = instance.len();
    if n > cap {
        return Err(CapExceeded { n, cap });
    }
    let ws = normalize(instance);
    let m = ws.len();

    // Halves over working positions, larger magnitudes in half A.
    let half_a: Vec<usize> = ((m / 2 + 1)..=m).collect();
    let half_b: Vec<usize> = (1..=(m / 2)).collect();

    let greedy_sides = greedy_abs_sides(&ws);
    let total: i128 = ws.initial_diff();
    let greedy_max = {
        let s1: i128 = (1..=m)
            .filter(|&p| greedy_sides[p] == Side::One)
            .map(|p| ws.value(p))
            .sum();
        s1.max(total - s1)
    };

    let mut state = HsState {
        s_upper: greedy_max,
        s_lower: total - greedy_max,
        list_a: subset_sums(&ws, &half_a),
        list_b: subset_sums(&ws, &half_b),
    };
    state.list_a.sort_unstable();
    state.list_b.sort_unstable_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));

    // Masks of the max-sum side, when the scan beats the greedy seed.
    let mut best: Option<(u64, u64)> = None;
    let mut i = 0;
    let mut j = 0;
    while i < state.list_a.len() && j < state.list_b.len() && state.best_diff() > 0 {
        let (a, mask_a) = state.list_a[i];
        let (b, mask_b) = state.list_b[j];
        // 2(a+b) - S is positive when a+b is a max side sum, negative
        // when it is a min side sum; either sign may tighten its bound.
        let t = 2 * (a + b) - total;
        if t >= 0 {
            if a + b < state.s_upper {
                state.s_upper = a + b;
                state.s_lower = total - state.s_upper;
                best = Some((mask_a, mask_b));
            }
            j += 1;
        } else {
            if a + b > state.s_lower {
                state.s_lower = a + b;
                state.s_upper = total - state.s_lower;
                best = Some((mask_a, mask_b));
            }
            i += 1;
        }
    }

    let diff = state.best_diff();
    let partition = match best {
        None => ws.partition_with(instance, |p| greedy_sides[p]),
        Some((mask_a, mask_b)) => {
            // The recorded subset is a max side; call it side 1.
            let mut sides = vec![Side::Two; m + 1];
            for (k, &p) in half_a.iter().enumerate() {
                if mask_a >> k & 1 == 1 {
                    sides[p] = Side::One;
                }
            }
            for (k, &p) in half_b.iter().enumerate() {
                if mask_b >> k & 1 == 1 {
                    sides[p] = Side::One;
                }
            }
            ws.partition_with(instance, |p| sides[p])
        }
    };
    Ok((diff, partition))
}

/// All subset sums of the given working positions, mask bit k meaning
/// positions[k] is a member. Built in mask order: each sum extends the
/// one with its lowest set bit removed.
fn subset_sums(ws: &crate::solvers::WorkingSet<i128>, positions: &[usize]) -> Vec<Entry> {
    let mut out = Vec::with_capacity(1 << positions.len());
    out.push((0, 0));
    for mask in 1..(1u64 << positions.len()) {
        let low = mask.trailing_zeros() as usize;
        let rest = out[(mask & (mask - 1)) as usize].0;
        out.push((rest + ws.value(positions[low]), mask));
    }
    out
}
