use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Variants fall into three families that the CLI maps onto exit codes:
/// input errors (bad words, graphs, preconditions), resource errors (state
/// caps and search budgets) and internal invariant breaches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("vertex tokens must be nonempty and free of whitespace")]
    InvalidToken,
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("factor must be nonempty")]
    EmptyFactor,
    #[error("vertex `{0}` does not occur in the word")]
    Uncovered(String),
    #[error("letter `{0}` is not in the word")]
    MissingLetter(String),
    #[error("letters of a pair must be distinct (got `{0}` twice)")]
    SameLetter(String),
    #[error("not permutational: {0}")]
    NotPermutational(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("cube at {start} has period {period}, not a multiple of {n}")]
    PeriodNotMultiple { start: usize, period: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid automaton: {0}")]
    InvalidDfa(String),
    #[error("explored-state cap of {cap} exceeded (frontier size {frontier})")]
    CapExceeded { cap: usize, frontier: usize },
    #[error("search budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("no representation found within bound {bound}")]
    NotFound { bound: usize },
}

impl Error {
    /// True for errors caused by exhausting a configured cap or budget.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::BudgetExceeded { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
