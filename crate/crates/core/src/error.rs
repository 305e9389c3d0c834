use thiserror::Error;

/// Errors raised anywhere in the coloring pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed PD code: {0}")]
    Syntax(String),

    #[error("edge label {label} appears {count} time(s); every label must appear exactly twice")]
    LabelCount { label: i64, count: usize },

    #[error("edge label {0} is not a positive integer")]
    NonPositiveLabel(i64),

    #[error("unknown catalog entry `{0}`")]
    UnknownKnot(String),

    #[error("edge {0} does not exist in this diagram")]
    NoSuchEdge(u32),

    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),

    #[error("unsupported diagram: {0}")]
    Unsupported(String),

    #[error("crossing-free diagram has no coloring matrix")]
    CrossingFree,

    #[error("modulus {0} is out of range (need at least {1})")]
    BadModulus(u64, u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("nullity {0} is out of range (need at least 2)")]
    BadNullity(u32),

    #[error("matrix too large for the minor oracle ({rows}x{cols})")]
    OracleTooLarge { rows: usize, cols: usize },

    #[error("enumeration of {count} assignments exceeds the budget of {budget}")]
    BudgetExceeded { count: u128, budget: u128 },

    #[error("no zero invariant factor: input is not a coloring matrix")]
    NotColoringMatrix,

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("coloring set is not closed under the group action")]
    NotClosed,

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// True for errors caused by the enumeration budget.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
