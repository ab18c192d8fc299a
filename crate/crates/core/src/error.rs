use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Two index sets that must share the same ambient (d, n) do not.
    #[error("dimension mismatch: expected (d, n) = ({expected_d}, {expected_n}), got ({got_d}, {got_n})")]
    DimensionMismatch {
        expected_d: usize,
        expected_n: usize,
        got_d: usize,
        got_n: usize,
    },

    /// Input violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An enumeration exceeded the node budget (see `SCHUBERT_NODE_BUDGET`).
    #[error("enumeration budget exceeded: more than {limit} nodes explored")]
    BudgetExceeded { limit: u64 },

    /// A computation contradicted a statement that holds for all valid
    /// inputs. This is never a recoverable condition: it means a bug, not a
    /// property of the input.
    #[error("falsified invariant: {0}")]
    Falsified(String),
}

pub type Result<T> = std::result::Result<T, Error>;
