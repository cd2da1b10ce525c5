use alloc::string::String;

fn progress(ranks_excluded: &Option<usize>) -> String {
    match ranks_excluded {
        Some(k) => alloc::format!("rank > {k} established"),
        None => String::from("no rank excluded yet"),
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    InvalidCharacteristic(u64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live over different fields or ambient spaces")]
    AmbientMismatch,
    #[error("complement precondition failed: A is not contained in Q")]
    ComplementBaseNotInQ,
    #[error("complement precondition failed: T is not contained in Q")]
    ComplementTargetNotInQ,
    #[error("complement precondition failed: A and T intersect nontrivially")]
    ComplementNotTransverse,
    #[error("search budget exceeded: {needed} visits needed, cap is {cap} ({})", progress(ranks_excluded))]
    BudgetExceeded {
        needed: u128,
        cap: u64,
        ranks_excluded: Option<usize>,
    },
    #[error("deadline reached after {visits} visits ({})", progress(ranks_excluded))]
    DeadlineReached {
        visits: u64,
        ranks_excluded: Option<usize>,
    },
    #[error("operation requires a finite field")]
    InfiniteField,
    #[error("operation requires GF(2)")]
    RequiresGf2,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("variable {0} has no image in the substitution")]
    UnassignedVariable(usize),
    #[error("variable index {index} out of range for {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },
    #[error("the zero linear form does not define a quotient")]
    ZeroLinearForm,
    #[error("degree must be at least 1")]
    DegreeTooSmall,
    #[error("a linear ideal family needs at least one member")]
    EmptyFamily,
    #[error("slice rank search is implemented for cubics only, got degree {0}")]
    NotCubic(u32),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("resampling cap of {0} attempts exceeded")]
    ResampleCapExceeded(usize),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
}
