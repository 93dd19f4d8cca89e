use crate::instance::Instance;
use crate::num::Element;
use crate::partition::{Partition, Side};
use crate::solvers::{normalize, WorkingSet};

/// Places each magnitude, largest first, on the side with the smaller
/// running sum; ties go to side 1. Equal magnitudes are taken in reverse
/// input order (a consequence of the ascending stable sort), which fixes
/// the output deterministically.
///
/// Max side sum is at most 4/3 of the optimal max side sum, and the result
/// is exactly optimal for instances of up to four elements.
pub fn greedy<T: Element>(instance: &Instance<T>) -> Partition<T> {
    let ws = normalize(instance);
    let sides = greedy_abs_sides(&ws);
    ws.partition_with(instance, |p| sides[p])
}

/// The placement loop on the magnitude side, shared with the
/// meet-in-the-middle baseline which seeds its bound from greedy's result.
/// Returns the side per working position (entry 0 unused).
pub(crate) fn greedy_abs_sides<T: Element>(ws: &WorkingSet<T>) -> Vec<Side> {
    let m = ws.len();
    let mut sides = vec![Side::One; m + 1];
    let mut s1 = T::ZERO;
    let mut s2 = T::ZERO;
    for p in (1..=m).rev() {
        let v = ws.value(p);
        if s2 < s1 {
            sides[p] = Side::Two;
            s2 = s2 + v;
        } else {
            s1 = s1 + v;
        }
    }
    sides
}
