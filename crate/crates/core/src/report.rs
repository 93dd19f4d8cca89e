use std::fmt;
use std::str::FromStr;
use std::time::Duration;

/// Every algorithm the toolkit can run on an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    V1,
    V2,
    Greedy,
    Kk,
    Dp,
    Hs,
    Bf,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::V1,
        Algorithm::V2,
        Algorithm::Greedy,
        Algorithm::Kk,
        Algorithm::Dp,
        Algorithm::Hs,
        Algorithm::Bf,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::V1 => "v1",
            Algorithm::V2 => "v2",
            Algorithm::Greedy => "greedy",
            Algorithm::Kk => "kk",
            Algorithm::Dp => "dp",
            Algorithm::Hs => "hs",
            Algorithm::Bf => "bf",
        }
    }

    /// Exact algorithms run on `i128` tables or enumerations and reject
    /// float instances with a typed error instead of approximating.
    pub fn int_only(self) -> bool {
        matches!(self, Algorithm::Dp | Algorithm::Hs)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| format!("unknown algorithm `{s}` (expected one of v1, v2, greedy, kk, dp, hs, bf)"))
    }
}

/// Summary of one algorithm run, arithmetic in the instance's own type.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgoReport<T> {
    pub algorithm: Algorithm,
    /// `|s1 - s2|` achieved.
    pub diff: T,
    pub max_sum: T,
    pub min_sum: T,
    /// Recomputed by the violation checker, never taken from the solver.
    /// For an exact baseline that returned no assignment it is true by
    /// optimality: nothing can improve on the optimal gap.
    pub locally_optimal: bool,
    /// Trace length for the iterative solvers, 0 for baselines.
    pub transfers: usize,
    pub elapsed: Duration,
}
