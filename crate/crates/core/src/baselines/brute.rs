use crate::baselines::CapExceeded;
use crate::instance::Instance;
use crate::num::Element;
use crate::partition::{Partition, Side};

/// Exhaustive oracle. Enumerates every assignment with element 0 pinned to
/// side 1 (its side is a pure relabeling), keeping the first strict
/// improvement, so the result is the lexicographically smallest optimal
/// assignment under side order 1 < 2.
///
/// Works directly on the signed input values, independent of the
/// normalization machinery the other algorithms share; that independence
/// is what makes it a trustworthy oracle for them. In integer mode the
/// gap is maintained incrementally across the enumeration (exact either
/// way); in float mode each candidate's sums are recomputed in canonical
/// ascending index order, so the reported optimum is the minimum over
/// exactly the quantity `partition_sums` defines.
pub fn brute_force<T: Element>(
    instance: &Instance<T>,
    cap: usize,
) -> Result<(T, Partition<T>), CapExceeded> {
    let n = instance.len();
    if n > cap {
        return Err(CapExceeded { n, cap });
    }
    let vals = instance.values();
    let free = n - 1;

    // Bit `free - i` of a mask holds element i's side (set = side 2), so
    // ascending mask order is lexicographic assignment order.
    let mut best_mask: u64 = 0;
    let mut best_diff = instance.total().abs();

    if T::EXACT {
        let mut diff = instance.total();
        let mut prev: u64 = 0;
        for mask in 1..(1u64 << free) {
            let mut toggled = mask ^ prev;
            prev = mask;
            while toggled != 0 {
                let bit = toggled.trailing_zeros();
                toggled &= toggled - 1;
                let moved = vals[n - 1 - bit as usize].twice();
                if mask >> bit & 1 == 1 {
                    diff = diff - moved;
                } else {
                    diff = diff + moved;
                }
            }
            if diff.abs() < best_diff {
                best_diff = diff.abs();
                best_mask = mask;
            }
        }
    } else {
        for mask in 1..(1u64 << free) {
            let mut s1 = T::ZERO;
            let mut s2 = T::ZERO;
            for (i, &v) in vals.iter().enumerate() {
                if i != 0 && mask >> (n - 1 - i) & 1 == 1 {
                    s2 = s2 + v;
                } else {
                    s1 = s1 + v;
                }
            }
            let diff = (s1 - s2).abs();
            if diff < best_diff {
                best_diff = diff;
                best_mask = mask;
            }
        }
    }

    let sides: Vec<Side> = (0..n)
        .map(|i| {
            if i != 0 && best_mask >> (n - 1 - i) & 1 == 1 {
                Side::Two
            } else {
                Side::One
            }
        })
        .collect();
    let partition =
        Partition::from_sides(instance, sides).expect("sides built to instance length");
    debug_assert!(partition.signed_diff().abs() == best_diff);
    Ok((best_diff, partition))
}
