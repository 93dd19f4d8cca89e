use crate::instance::Instance;
use crate::num::Element;

/// Which side of the split an element is assigned to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn as_num(self) -> u8 {
        match self {
            Side::One => 1,
            Side::Two => 2,
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }
}

impl serde::Serialize for Side {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.as_num())
    }
}

/// Invalid side assignments, reported against the first offending index.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AssignmentError {
    #[error("assignment has {got} entries, instance has {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("assignment entry {index} is {value}, expected 1 or 2")]
    BadSide { index: usize, value: i64 },
}

/// Decodes raw side labels (as read from JSON) into [`Side`]s. Entries must
/// be exactly 1 or 2.
pub fn sides_from_raw(raw: &[i64]) -> Result<Vec<Side>, AssignmentError> {
    raw.iter()
        .enumerate()
        .map(|(index, &value)| match value {
            1 => Ok(Side::One),
            2 => Ok(Side::Two),
            _ => Err(AssignmentError::BadSide { index, value }),
        })
        .collect()
}

/// Validates a raw side assignment against an instance: the lengths must
/// match and every entry must be 1 or 2.
pub fn check_partition<T: Element>(
    instance: &Instance<T>,
    raw: &[i64],
) -> Result<(), AssignmentError> {
    if raw.len() != instance.len() {
        return Err(AssignmentError::LengthMismatch {
            expected: instance.len(),
            got: raw.len(),
        });
    }
    sides_from_raw(raw).map(|_| ())
}

/// Computes the two side sums. Each side is accumulated in ascending
/// original index order, which pins down the float result exactly.
pub fn partition_sums<T: Element>(
    instance: &Instance<T>,
    sides: &[Side],
) -> Result<(T, T), AssignmentError> {
    if sides.len() != instance.len() {
        return Err(AssignmentError::LengthMismatch {
            expected: instance.len(),
            got: sides.len(),
        });
    }
    let mut s1 = T::ZERO;
    let mut s2 = T::ZERO;
    for (&v, &side) in instance.values().iter().zip(sides) {
        match side {
            Side::One => s1 = s1 + v,
            Side::Two => s2 = s2 + v,
        }
    }
    Ok((s1, s2))
}

/// A side assignment together with its side sums.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition<T> {
    sides: Vec<Side>,
    s1: T,
    s2: T,
}

impl<T: Element> Partition<T> {
    pub fn from_sides(instance: &Instance<T>, sides: Vec<Side>) -> Result<Self, AssignmentError> {
        let (s1, s2) = partition_sums(instance, &sides)?;
        Ok(Partition { sides, s1, s2 })
    }

    pub fn from_raw(instance: &Instance<T>, raw: &[i64]) -> Result<Self, AssignmentError> {
        check_partition(instance, raw)?;
        Self::from_sides(instance, sides_from_raw(raw)?)
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn s1(&self) -> T {
        self.s1
    }

    pub fn s2(&self) -> T {
        self.s2
    }

    /// Signed gap `s1 - s2`.
    pub fn signed_diff(&self) -> T {
        self.s1 - self.s2
    }
}

/// The quantities a solver is judged on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Objective<T> {
    /// `|s1 - s2|`, the value being minimized.
    pub diff: T,
    pub max_sum: T,
    pub min_sum: T,
}

pub fn objective<T: Element>(partition: &Partition<T>) -> Objective<T> {
    let (s1, s2) = (partition.s1, partition.s2);
    let d = s1 - s2;
    if d < T::ZERO {
        Objective { diff: -d, max_sum: s2, min_sum: s1 }
    } else {
        Objective { diff: d, max_sum: s1, min_sum: s2 }
    }
}

/// Indices whose single-element transfer to the other side would strictly
/// shrink `|s1 - s2|`. An empty result certifies local optimality.
///
/// Moving index `i` from side 1 turns the signed gap `d` into `d - 2*x_i`;
/// from side 2 into `d + 2*x_i`. The comparison is strict and runs in the
/// instance's own arithmetic, so the certificate carries no tolerance.
pub fn local_optimality_violations<T: Element>(
    instance: &Instance<T>,
    partition: &Partition<T>,
) -> Vec<usize> {
    let d = partition.signed_diff();
    let bar = d.abs();
    let mut out = Vec::new();
    for (i, (&x, &side)) in instance.values().iter().zip(partition.sides()).enumerate() {
        let moved = match side {
            Side::One => d - x.twice(),
            Side::Two => d + x.twice(),
        };
        if moved.abs() < bar {
            out.push(i);
        }
    }
    out
}
