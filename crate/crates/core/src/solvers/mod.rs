//! Locally optimal solvers and the sign-normalized working set they share.
//!
//! Both solvers operate on magnitudes: [`normalize`] strips signs, sets
//! zeros aside, and sorts the remaining magnitudes ascending. A solver then
//! starts from "everything on side 1" and repeatedly transfers one element
//! to side 2, driving the running gap `s1 - s2` toward zero. Transfers are
//! recorded in a [`SolveTrace`](crate::SolveTrace). At the end
//! [`WorkingSet::denormalize`] folds the signs back in: an element whose
//! sign was flipped during normalization lands on the opposite side of
//! where its magnitude ended up, which preserves the gap exactly.
//!
//! The two solvers differ only in the selection rule:
//!
//! * [`solve_v1`]: transfer the largest magnitude strictly below the
//!   current gap; stop when the gap is no longer positive or no such
//!   magnitude exists.
//! * [`solve_v2`]: transfer the magnitude whose move minimizes the new
//!   absolute gap, smallest working index on ties; a zero-valued dummy
//!   candidate is always in the running, and selecting it stops the loop.
//!
//! Both outputs are locally optimal: no single element can switch sides
//! and strictly shrink `|s1 - s2|`.

mod v1;
mod v2;

pub use v1::solve_v1;
pub use v2::solve_v2;

use crate::instance::Instance;
use crate::num::{total, Element};
use crate::partition::{Partition, Side};

/// Sign-normalized view of an instance, the state both solvers mutate.
///
/// Working positions are 1-based: position 0 holds a permanently alive
/// zero sentinel, the dummy candidate of [`solve_v2`]. Positions `1..=len`
/// hold the magnitudes of the nonzero input values, sorted ascending;
/// equal magnitudes keep their input order. `alive` tracks side membership
/// of each magnitude: alive means side 1, killed means transferred.
#[derive(Debug, Clone)]
pub struct WorkingSet<T> {
    vals: Vec<T>,
    negative: Vec<bool>,
    perm: Vec<usize>,
    alive: Vec<bool>,
    zeros: Vec<usize>,
}

/// Builds the working set: zeros set aside, magnitudes sorted ascending
/// with ties in input order, original signs and indices remembered.
pub fn normalize<T: Element>(instance: &Instance<T>) -> WorkingSet<T> {
    let mut order: Vec<usize> = Vec::with_capacity(instance.len());
    let mut zeros = Vec::new();
    for (i, &v) in instance.values().iter().enumerate() {
        if v.is_zero() {
            zeros.push(i);
        } else {
            order.push(i);
        }
    }
    // Stable sort keeps equal magnitudes in input order, which pins down
    // every later tie break.
    order.sort_by(|&a, &b| {
        instance.values()[a]
            .abs()
            .total_cmp(instance.values()[b].abs())
    });

    let m = order.len();
    let mut vals = Vec::with_capacity(m + 1);
    let mut negative = Vec::with_capacity(m + 1);
    let mut perm = Vec::with_capacity(m + 1);
    vals.push(T::ZERO);
    negative.push(false);
    perm.push(usize::MAX);
    for &i in &order {
        let v = instance.values()[i];
        vals.push(v.abs());
        negative.push(v < T::ZERO);
        perm.push(i);
    }
    WorkingSet { vals, negative, perm, alive: vec![true; m + 1], zeros }
}

impl<T: Element> WorkingSet<T> {
    /// Number of real working positions (zeros and dummy excluded).
    pub fn len(&self) -> usize {
        self.vals.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Magnitude at working position `p` (0 is the dummy and reads as zero).
    pub fn value(&self, p: usize) -> T {
        self.vals[p]
    }

    /// Whether the input value behind position `p` was negative.
    pub fn is_negative(&self, p: usize) -> bool {
        self.negative[p]
    }

    /// Original instance index behind working position `p >= 1`.
    pub fn original_index(&self, p: usize) -> usize {
        self.perm[p]
    }

    pub fn is_alive(&self, p: usize) -> bool {
        self.alive[p]
    }

    /// Original indices of zero-valued elements, excluded from the search.
    pub fn zeros(&self) -> &[usize] {
        &self.zeros
    }

    /// Gap `s1 - s2` of the all-on-side-1 start: the sum of magnitudes,
    /// accumulated in ascending position order.
    pub fn initial_diff(&self) -> T {
        total(&self.vals[1..])
    }

    fn kill(&mut self, p: usize) {
        debug_assert!(p >= 1 && self.alive[p]);
        self.alive[p] = false;
    }

    /// Maps working-space sides back to an input-space partition.
    /// `abs_side` gives the side of each magnitude (positions `1..=len`);
    /// a remembered negative sign flips the side. Zeros go to side 1.
    pub(crate) fn partition_with<F>(
        &self,
        instance: &Instance<T>,
        abs_side: F,
    ) -> Partition<T>
    where
        F: Fn(usize) -> Side,
    {
        let mut sides = vec![Side::One; instance.len()];
        for p in 1..=self.len() {
            let side = if self.negative[p] { abs_side(p).other() } else { abs_side(p) };
            sides[self.perm[p]] = side;
        }
        Partition::from_sides(instance, sides)
            .expect("working set covers exactly the instance indices")
    }

    /// Final partition of a solver run: alive magnitudes are on side 1,
    /// transferred ones on side 2, signs folded back in.
    pub fn denormalize(&self, instance: &Instance<T>) -> Partition<T> {
        self.partition_with(instance, |p| {
            if self.alive[p] { Side::One } else { Side::Two }
        })
    }
}
