use serde::Serialize;

/// Why a solver run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    /// The running gap `s1 - s2` reached zero or went negative.
    DiffNonpositive,
    /// The selection rule picked the zero-valued dummy candidate, meaning
    /// no real transfer could shrink the gap further.
    ZeroSelected,
    /// The gap is still positive but no untransferred value lies strictly
    /// below it, so no admissible transfer exists.
    NoCandidate,
}

impl StopReason {
    pub fn as_str(self) -> &'static str {
        match self {
            StopReason::DiffNonpositive => "diff_nonpositive",
            StopReason::ZeroSelected => "zero_selected",
            StopReason::NoCandidate => "no_candidate",
        }
    }
}

/// One transfer performed by a solver.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceStep<T> {
    /// Original 0-based index of the moved element.
    pub index: usize,
    /// Magnitude moved, i.e. the absolute value of the element.
    pub value: T,
    /// Running gap `s1 - s2` immediately after the transfer.
    pub diff_after: T,
}

/// Full record of a solver run: every transfer in order, plus the reason
/// the loop stopped.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveTrace<T> {
    pub steps: Vec<TraceStep<T>>,
    pub stop_reason: StopReason,
}

impl<T: Copy> SolveTrace<T> {
    /// Number of transfers performed.
    pub fn transfers(&self) -> usize {
        self.steps.len()
    }
}
