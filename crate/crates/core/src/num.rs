use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Add, Neg, Sub};

/// Arithmetic mode of an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Exact `i128` arithmetic. Every quantity the toolkit computes is exact.
    Int,
    /// `f64` arithmetic with a fixed summation order and strict comparisons.
    Float,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Int => "int",
            Mode::Float => "float",
        }
    }
}

impl Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Element arithmetic shared by solvers, baselines and checkers.
///
/// Implemented for `i128` and `f64` only. The contract that makes the
/// solvers overflow-free: instance construction guarantees that twice the
/// sum of absolute values is representable, and every quantity computed at
/// runtime (side sums, signed differences, transfer deltas) is bounded by
/// that in magnitude.
pub trait Element:
    Copy
    + PartialOrd
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + serde::Serialize
    + private::Sealed
    + 'static
{
    const ZERO: Self;
    const MODE: Mode;
    /// Whether add/sub round. Exact arithmetic lets algorithms maintain
    /// running sums incrementally; rounding arithmetic forces them to
    /// recompute sums in the canonical ascending index order instead.
    const EXACT: bool;

    fn abs(self) -> Self;

    fn twice(self) -> Self;

    /// Inverse of [`twice`](Element::twice) on values known to be doubled:
    /// exact for even integers and for every finite float.
    fn halve(self) -> Self;

    fn is_zero(self) -> bool;

    /// Total order consistent with `PartialOrd`. Instances never contain
    /// NaN, so for `f64` this is `f64::total_cmp` restricted to reals.
    fn total_cmp(self, other: Self) -> Ordering;

    /// Renders the value so that re-parsing it recovers the exact value and
    /// the arithmetic mode. Integers print plainly; floats keep a mark of
    /// floatness (`4.0`, not `4`).
    fn render(self) -> String;

    /// Mode-specific construction check over raw values. Validates that
    /// every value is usable and that `2 * sum(|x|)` is representable.
    fn validate(values: &[Self]) -> Result<(), crate::InstanceError>;
}

mod private {
    pub trait Sealed {}
    impl Sealed for i128 {}
    impl Sealed for f64 {}
}

impl Element for i128 {
    const ZERO: Self = 0;
    const MODE: Mode = Mode::Int;
    const EXACT: bool = true;

    fn abs(self) -> Self {
        self.abs()
    }

    fn twice(self) -> Self {
        self * 2
    }

    fn halve(self) -> Self {
        self / 2
    }

    fn is_zero(self) -> bool {
        self == 0
    }

    fn total_cmp(self, other: Self) -> Ordering {
        self.cmp(&other)
    }

    fn render(self) -> String {
        self.to_string()
    }

    fn validate(values: &[Self]) -> Result<(), crate::InstanceError> {
        let mut acc: i128 = 0;
        for &v in values {
            // i128::MIN has no absolute value; fold it into the same error.
            let a = v.checked_abs().ok_or(crate::InstanceError::Overflow)?;
            acc = acc.checked_add(a).ok_or(crate::InstanceError::Overflow)?;
        }
        acc.checked_mul(2).ok_or(crate::InstanceError::Overflow)?;
        Ok(())
    }
}

impl Element for f64 {
    const ZERO: Self = 0.0;
    const MODE: Mode = Mode::Float;
    const EXACT: bool = false;

    fn abs(self) -> Self {
        self.abs()
    }

    fn twice(self) -> Self {
        self * 2.0
    }

    fn halve(self) -> Self {
        self / 2.0
    }

    fn is_zero(self) -> bool {
        self == 0.0
    }

    fn total_cmp(self, other: Self) -> Ordering {
        f64::total_cmp(&self, &other)
    }

    fn render(self) -> String {
        // Shortest representation that round-trips; always keeps a `.0`
        // or exponent marker so mode inference sees a float.
        format!("{self:?}")
    }

    fn validate(values: &[Self]) -> Result<(), crate::InstanceError> {
        let mut acc: f64 = 0.0;
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(crate::InstanceError::NonFinite { index: i });
            }
            acc += v.abs();
        }
        if !(acc * 2.0).is_finite() {
            return Err(crate::InstanceError::Overflow);
        }
        Ok(())
    }
}

/// Sums a slice in ascending index order. The fixed order is what makes
/// float results reproducible across runs and platforms.
pub(crate) fn total<T: Element>(values: &[T]) -> T {
    values.iter().fold(T::ZERO, |acc, &v| acc + v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_validate_rejects_huge_totals() {
        assert!(i128::validate(&[i128::MAX / 2, i128::MAX / 2]).is_err());
        assert!(i128::validate(&[i128::MIN]).is_err());
        assert!(i128::validate(&[i128::MAX / 4, i128::MAX / 8]).is_ok());
    }

    #[test]
    fn float_validate_rejects_non_finite() {
        assert!(matches!(
            f64::validate(&[1.0, f64::NAN]),
            Err(crate::InstanceError::NonFinite { index: 1 })
        ));
        assert!(matches!(
            f64::validate(&[f64::INFINITY]),
            Err(crate::InstanceError::NonFinite { index: 0 })
        ));
        assert!(f64::validate(&[f64::MAX / 4.0]).is_ok());
        assert!(f64::validate(&[f64::MAX / 2.0, f64::MAX / 2.0]).is_err());
    }

    #[test]
    fn render_keeps_float_mark() {
        assert_eq!(4.0f64.render(), "4.0");
        assert_eq!(1e300f64.render(), "1e300");
        assert_eq!(4i128.render(), "4");
        assert_eq!((-0.5f64).render(), "-0.5");
    }

    #[test]
    fn total_is_ascending_order_fold() {
        assert_eq!(total(&[1i128, 2, 3]), 6);
        let vals = [0.1f64, 0.2, 0.3];
        assert_eq!(total(&vals), 0.1 + 0.2 + 0.3);
    }
}
