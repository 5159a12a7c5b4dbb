use thiserror::Error;

/// Errors produced by partition construction, enumeration and the cohomology pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be non-increasing (index {index} is smaller than index {next})", next = index + 1)]
    NotMonotone { index: usize },

    #[error("negative part {value} at index {index}")]
    NegativePart { index: usize, value: i64 },

    #[error("box ({row},{col}) lies outside the diagram")]
    OutOfDiagram { row: usize, col: usize },

    #[error("partition does not fit in a rectangle of width {width} and height {height}")]
    NotBounded { width: usize, height: usize },

    #[error("rectangle dimensions must be positive (got width {width}, height {height})")]
    InvalidRectangle { width: usize, height: usize },

    #[error("partition has a hook of length {t} at box ({row},{col}), so it is not a {t}-core")]
    NotTCore { t: usize, row: usize, col: usize },

    #[error("largest part {largest} is not at most t-1 = {bound}")]
    NotBoundedByTMinus1 { largest: usize, bound: usize },

    #[error("operation requires a nonempty partition")]
    EmptyPartition,

    #[error("{what}: {needed} exceeds the configured cap of {cap}")]
    LimitExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
