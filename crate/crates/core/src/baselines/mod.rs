//! Reference algorithms: a quality ladder from cheap heuristics to exact
//! oracles.
//!
//! * [`greedy`]: largest value to the lighter side. Fast, max side sum
//!   within 4/3 of optimal, exact for up to four elements.
//! * [`kk`]: largest-two differencing. Usually much closer than greedy.
//! * [`dp_optimal`]: exact via a subset-sum bit table, pseudo-polynomial,
//!   integers only, memory capped by an explicit bit budget.
//! * [`hs`]: exact via meet-in-the-middle enumeration, integers only,
//!   `O(N * 2^(N/2))`, capped by element count.
//! * [`brute_force`]: exact via exhaustive enumeration with a canonical
//!   tie break; the independent oracle the others are tested against.
//!
//! All baselines accept signed input through the same normalization
//! wrapper as the solvers (magnitudes solved, signs folded back, zeros to
//! side 1), so every algorithm in the crate shares one input contract.
//! None of them promise local optimality; run the checker if you need the
//! certificate.

mod brute;
mod dp;
mod greedy;
mod hs;
mod kk;

pub use brute::brute_force;
pub use dp::{dp_optimal, BudgetExceeded, DpResult};
pub use greedy::greedy;
pub use hs::hs;
pub use kk::kk;

/// Instance is too large for an enumeration-based baseline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("instance has {n} elements, cap is {cap}")]
pub struct CapExceeded {
    pub n: usize,
    pub cap: usize,
}
