use crate::instance::IntInstance;
use crate::partition::{Partition, Side};
use crate::solvers::normalize;

/// Reachable subset sums of a prefix of the magnitudes, one bit per sum
/// in `0..=total`. Bit 0 (the empty subset) is always set, and row
/// updates only add bits.
#[derive(Clone)]
struct DpRow {
    bits: Vec<u64>,
}

impl DpRow {
    fn new(nbits: usize) -> Self {
        let mut bits = vec![0u64; nbits.div_ceil(64)];
        bits[0] = 1;
        DpRow { bits }
    }

    /// Adds one magnitude: every reachable sum also becomes reachable
    /// shifted up by `x`. In place, processing words top-down so each
    /// word is read before it is written.
    fn absorb(&mut self, x: usize) {
        let word_shift = x / 64;
        let bit_shift = x % 64;
        let words = self.bits.len();
        for i in (word_shift..words).rev() {
            let mut v = self.bits[i - word_shift] << bit_shift;
            if bit_shift > 0 && i > word_shift {
                v |= self.bits[i - word_shift - 1] >> (64 - bit_shift);
            }
            self.bits[i] |= v;
        }
    }

    fn get(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    /// Smallest set bit at or above `from`, if any.
    fn next_set(&self, from: usize) -> Option<usize> {
        let mut word = from / 64;
        let mut masked = self.bits.get(word)? >> (from % 64) << (from % 64);
        loop {
            if masked != 0 {
                return Some(word * 64 + masked.trailing_zeros() as usize);
            }
            word += 1;
            masked = *self.bits.get(word)?;
        }
    }
}

/// Exact optimum and, when reconstructable, a partition achieving it.
#[derive(Debug, Clone, PartialEq)]
pub struct DpResult {
    pub diff: i128,
    /// None when every prefix row would not fit the bit budget; the diff
    /// alone only needs one row.
    pub partition: Option<Partition<i128>>,
}

/// Even a single table row would not fit the budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("subset-sum table needs {needed_bits} bits, budget is {budget_bits}")]
pub struct BudgetExceeded {
    pub needed_bits: u128,
    pub budget_bits: u64,
}

/// Exact solver over the subset sums of the magnitudes.
///
/// A bit table over sums `0..=S` (S = sum of magnitudes) is grown one
/// magnitude at a time; the optimal max side sum is the smallest reachable
/// `c` with `2c >= S`, and the optimal gap is `2c - S`. Runs in `O(N*S)`
/// bit operations and `O(S)` space, so it is only viable while `S` stays
/// within `budget_bits`. Keeping every prefix row permits backtracking an
/// actual assignment (each magnitude is excluded from the sum-`c` side if
/// the previous row already reaches `c`); if `N*S` exceeds the budget the
/// result carries the exact diff but no partition.
pub fn dp_optimal(instance: &IntInstance, budget_bits: u64) -> Result<DpResult, BudgetExceeded> {
    let ws = normalize(instance);
    let m = ws.len();
    let s = ws.initial_diff();
    debug_assert!(s >= 0);
    let row_bits = s as u128 + 1;
    if row_bits > u128::from(budget_bits) {
        return Err(BudgetExceeded { needed_bits: row_bits, budget_bits });
    }
    let nbits = s as usize + 1;
    let keep_rows = (m as u128 + 1) * row_bits <= u128::from(budget_bits);

    // rows[r] covers magnitudes at working positions 1..=r.
    let mut rows: Vec<DpRow> = Vec::new();
    let mut row = DpRow::new(nbits);
    if keep_rows {
        rows.push(row.clone());
    }
    for p in 1..=m {
        row.absorb(ws.value(p) as usize);
        if keep_rows {
            rows.push(row.clone());
        }
    }

    // Smallest c with 2c >= s is the best max side sum.
    let target = (s as usize).div_ceil(2);
    let c = row
        .next_set(target)
        .expect("the full-set sum is always reachable");
    let diff = 2 * c as i128 - s;

    if !keep_rows {
        return Ok(DpResult { diff, partition: None });
    }

    // Backtrack: the sum-c side is side 1. Prefer exclusion on ties so
    // the reconstruction is canonical.
    let mut sides = vec![Side::Two; m + 1];
    let mut need = c;
    for p in (1..=m).rev() {
        if !rows[p - 1].get(need) {
            sides[p] = Side::One;
            need -= ws.value(p) as usize;
        }
    }
    debug_assert_eq!(need, 0);
    let partition = ws.partition_with(instance, |p| sides[p]);
    Ok(DpResult { diff, partition: Some(partition) })
}
