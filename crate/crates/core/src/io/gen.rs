//! Deterministic instance generation.
//!
//! Reproducibility matters more than statistical quality here: benchmark
//! rows and regression fixtures must be recomputable from `(spec, seed)`
//! alone, in any language. The stream is therefore pinned to SplitMix64
//! (documented on [`SplitMix64`]) and every draw rule is spelled out on
//! its [`Distribution`] variant. Integer draws reproduce exactly; real
//! draws reproduce to IEEE-754 double rounding of the stated formulas.

use std::fmt;
use std::str::FromStr;

use crate::instance::{AnyInstance, Instance, InstanceError};

/// SplitMix64 stream.
///
/// State advances by `0x9E3779B97F4A7C15` per draw; the output of a draw
/// is the new state mixed as
///
/// ```text
/// z  = state
/// z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
/// z ^= z >> 27;  z *= 0x94D049BB133111EB
/// out = z ^ (z >> 31)
/// ```
///
/// with all arithmetic modulo 2^64. The seed is the initial state as-is.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `[lo, hi]` as `lo + (next_u64() mod range)`.
    ///
    /// The modulo introduces a bias of at most `range / 2^64`; that is
    /// accepted deliberately because the takes-one-draw rule is trivial
    /// to reimplement, and the bias is far below anything the solvers or
    /// benchmarks could observe.
    pub fn next_range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = hi.wrapping_sub(lo) as u64;
        if span == u64::MAX {
            return self.next_u64() as i64;
        }
        let x = self.next_u64() % (span + 1);
        // The true value lies in [lo, hi], so the wrap is representation only.
        lo.wrapping_add(x as i64)
    }

    /// Uniform draw from `[0, 1)` as `(next_u64() >> 11) * 2^-53`, the
    /// standard 53-bit dyadic rule.
    pub fn next_unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * 2.0_f64.powi(-53)
    }
}

/// Value distribution for generated instances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Distribution {
    /// Integers uniform on `[lo, hi]`, one [`SplitMix64::next_range_i64`]
    /// draw per value. Produces an integer-mode instance.
    UniformInt { lo: i64, hi: i64 },
    /// Reals `lo + (hi - lo) * u` with one unit draw `u` per value.
    /// Produces a float-mode instance.
    UniformReal { lo: f64, hi: f64 },
    /// Same draw rule as `UniformInt`, but the range must straddle zero
    /// (`lo < 0 < hi`) so both signs actually occur.
    MixedSignInt { lo: i64, hi: i64 },
    /// Full-mantissa reals across a wide dynamic range: per value, a unit
    /// draw `u` maps to a mantissa `0.5 + u/2` in `[0.5, 1)`, then an
    /// integer draw picks an exponent `e` in `[-24, 24]`, and the value is
    /// `mantissa * 2^e`. Exercises float summation where magnitudes span
    /// ~14 decimal orders.
    HighPrecisionReal,
}

/// Rejections for the `name(lo,hi)` distribution tag syntax.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DistParseError {
    #[error("unknown distribution `{0}`")]
    Unknown(String),
    #[error("`{name}` takes two comma-separated bounds")]
    Bounds { name: String },
    #[error("bad bound `{token}`")]
    BadBound { token: String },
}

impl FromStr for Distribution {
    type Err = DistParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "high-precision-real" {
            return Ok(Self::HighPrecisionReal);
        }
        let (name, rest) = s.split_once('(').ok_or_else(|| {
            DistParseError::Unknown(s.to_string())
        })?;
        let name = name.trim();
        if !matches!(name, "uniform-int" | "uniform-real" | "mixed-sign-int") {
            return Err(DistParseError::Unknown(s.to_string()));
        }
        let args = rest
            .strip_suffix(')')
            .filter(|a| !a.contains(['(', ')']))
            .ok_or_else(|| DistParseError::Bounds { name: name.to_string() })?;
        let mut bounds = args.split(',');
        let (lo, hi) = match (bounds.next(), bounds.next(), bounds.next()) {
            (Some(lo), Some(hi), None) => (lo.trim(), hi.trim()),
            _ => return Err(DistParseError::Bounds { name: name.to_string() }),
        };
        let int = |t: &str| {
            t.parse::<i64>().map_err(|_| DistParseError::BadBound { token: t.to_string() })
        };
        let real = |t: &str| {
            t.parse::<f64>().map_err(|_| DistParseError::BadBound { token: t.to_string() })
        };
        match name {
            "uniform-int" => Ok(Self::UniformInt { lo: int(lo)?, hi: int(hi)? }),
            "uniform-real" => Ok(Self::UniformReal { lo: real(lo)?, hi: real(hi)? }),
            _ => Ok(Self::MixedSignInt { lo: int(lo)?, hi: int(hi)? }),
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UniformInt { lo, hi } => write!(f, "uniform-int({lo},{hi})"),
            Self::UniformReal { lo, hi } => write!(f, "uniform-real({lo:?},{hi:?})"),
            Self::MixedSignInt { lo, hi } => write!(f, "mixed-sign-int({lo},{hi})"),
            Self::HighPrecisionReal => write!(f, "high-precision-real"),
        }
    }
}

/// What to generate: `n` values from `dist`, streamed from `seed`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub dist: Distribution,
    pub seed: u64,
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum GenError {
    #[error("instance size must be at least 1")]
    InvalidCount,
    #[error("integer range requires lo <= hi, got [{lo}, {hi}]")]
    BadIntRange { lo: i64, hi: i64 },
    #[error("real range requires finite lo <= hi with finite width, got [{lo}, {hi}]")]
    BadRealRange { lo: f64, hi: f64 },
    #[error("mixed-sign range must straddle zero, got [{lo}, {hi}]")]
    BadMixedRange { lo: i64, hi: i64 },
    #[error("generated values overflow the arithmetic")]
    Overflow,
}

fn int_values(n: usize, lo: i64, hi: i64, seed: u64) -> Result<AnyInstance, GenError> {
    let mut rng = SplitMix64::new(seed);
    let values: Vec<i128> = (0..n).map(|_| i128::from(rng.next_range_i64(lo, hi))).collect();
    // n is bounded by memory, so 2 * n * 2^63 cannot reach 2^127.
    Ok(AnyInstance::Int(Instance::new(values).expect("i64 draws cannot overflow i128 sums")))
}

fn float_values(
    n: usize,
    mut draw: impl FnMut(&mut SplitMix64) -> f64,
    seed: u64,
) -> Result<AnyInstance, GenError> {
    let mut rng = SplitMix64::new(seed);
    let values: Vec<f64> = (0..n).map(|_| draw(&mut rng)).collect();
    Instance::new(values).map(AnyInstance::Float).map_err(|e| match e {
        InstanceError::Overflow => GenError::Overflow,
        InstanceError::Empty | InstanceError::NonFinite { .. } => {
            unreachable!("draws are finite and n >= 1")
        }
    })
}

/// Generates an instance. Pure in `(spec)`: the same spec yields the same
/// instance on every call, platform, and thread.
pub fn generate(spec: &GenSpec) -> Result<AnyInstance, GenError> {
    if spec.n == 0 {
        return Err(GenError::InvalidCount);
    }
    match spec.dist {
        Distribution::UniformInt { lo, hi } => {
            if lo > hi {
                return Err(GenError::BadIntRange { lo, hi });
            }
            int_values(spec.n, lo, hi, spec.seed)
        }
        Distribution::MixedSignInt { lo, hi } => {
            if !(lo < 0 && 0 < hi) {
                return Err(GenError::BadMixedRange { lo, hi });
            }
            int_values(spec.n, lo, hi, spec.seed)
        }
        Distribution::UniformReal { lo, hi } => {
            if !(lo.is_finite() && hi.is_finite() && lo <= hi && (hi - lo).is_finite()) {
                return Err(GenError::BadRealRange { lo, hi });
            }
            // Monotone rounding keeps lo + (hi-lo)*u inside [lo, hi].
            float_values(spec.n, |rng| lo + (hi - lo) * rng.next_unit_f64(), spec.seed)
        }
        Distribution::HighPrecisionReal => float_values(
            spec.n,
            |rng| {
                let mantissa = 0.5 + rng.next_unit_f64() / 2.0;
                let exp = rng.next_range_i64(-24, 24) as i32;
                mantissa * 2.0_f64.powi(exp)
            },
            spec.seed,
        ),
    }
}
