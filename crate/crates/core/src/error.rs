use num::BigInt;
use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// Negative radicands are rejected rather than widened to complex fields.
    #[error("unsupported field: negative radicand {0}")]
    UnsupportedField(BigInt),

    /// Arithmetic between surds of distinct squarefree radicands.
    #[error("field mismatch: sqrt({0}) vs sqrt({1})")]
    FieldMismatch(BigInt, BigInt),

    /// A continued-fraction expansion did not close its period in budget.
    #[error("expansion budget of {max_terms} terms exceeded")]
    BudgetExceeded { max_terms: usize },

    /// Index past the end of a finite expansion, or n = 0 where n >= 1 is required.
    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("domain error: {0}")]
    Domain(String),

    /// Operation requires an eventually periodic (irrational) expansion.
    #[error("expansion is not periodic")]
    NotPeriodic,

    /// Adaptive refinement hit the precision cap without separating the
    /// operands and without a symbolic equality certificate. Carries both
    /// final enclosures so the caller can inspect the near-tie.
    #[error("comparison inconclusive at {bits} bits: [{lhs_lo}, {lhs_hi}] vs [{rhs_lo}, {rhs_hi}]")]
    Indeterminate {
        bits: u32,
        lhs_lo: String,
        lhs_hi: String,
        rhs_lo: String,
        rhs_hi: String,
    },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Exhaustive-search request larger than the configured cap.
    #[error("search budget {required} exceeds cap {cap}")]
    SearchBudget { required: u128, cap: u128 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
