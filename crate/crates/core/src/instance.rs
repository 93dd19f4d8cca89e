use crate::num::{total, Element, Mode};

/// Construction failures for [`Instance`].
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("instance must contain at least one value")]
    Empty,
    #[error("value at index {index} is not finite")]
    NonFinite { index: usize },
    #[error("twice the sum of absolute values overflows the arithmetic")]
    Overflow,
}

/// An immutable problem instance: the multiset of numbers to split.
///
/// Invariants, established at construction: at least one value; every value
/// finite; `2 * sum(|x|)` representable in `T`. The last one bounds every
/// quantity the solvers compute, so downstream arithmetic is unchecked.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance<T> {
    values: Vec<T>,
}

pub type IntInstance = Instance<i128>;
pub type FloatInstance = Instance<f64>;

impl<T: Element> Instance<T> {
    pub fn new(values: Vec<T>) -> Result<Self, InstanceError> {
        if values.is_empty() {
            return Err(InstanceError::Empty);
        }
        T::validate(&values)?;
        Ok(Instance { values })
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn mode(&self) -> Mode {
        T::MODE
    }

    /// Sum of all values, accumulated in ascending index order.
    pub fn total(&self) -> T {
        total(&self.values)
    }
}

/// An instance of either arithmetic mode, as produced by parsing or
/// generation when the mode is only known at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyInstance {
    Int(IntInstance),
    Float(FloatInstance),
}

impl AnyInstance {
    pub fn len(&self) -> usize {
        match self {
            AnyInstance::Int(i) => i.len(),
            AnyInstance::Float(i) => i.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn mode(&self) -> Mode {
        match self {
            AnyInstance::Int(_) => Mode::Int,
            AnyInstance::Float(_) => Mode::Float,
        }
    }

    /// Converts to float mode. Lossless for integers up to 2^53; beyond
    /// that values round to the nearest representable `f64`.
    pub fn into_float(self) -> Result<FloatInstance, InstanceError> {
        match self {
            AnyInstance::Float(i) => Ok(i),
            AnyInstance::Int(i) => {
                Instance::new(i.values.into_iter().map(|v| v as f64).collect())
            }
        }
    }
}
