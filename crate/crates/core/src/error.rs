use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("enumeration of {what} exceeded the cap of {limit} items")]
    CapExceeded { what: &'static str, limit: usize },

    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),

    #[error("random regular generation rejected {attempts} pairings in a row")]
    RejectionLimit { attempts: usize },

    #[error("DIMACS line {line}: {message}")]
    Dimacs { line: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid dependency graph: {0}")]
    InvalidDependencyGraph(String),

    #[error("invalid clique cover for event {event}: {message}")]
    InvalidCover { event: usize, message: String },

    #[error("neighbourhood of event {event} has {size} members; exact evaluation is capped at {cap}, use the clique bound")]
    ExactCapExceeded { event: usize, size: usize, cap: usize },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("coloring target {found} does not match variant target {expected}")]
    TargetMismatch { expected: &'static str, found: &'static str },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("brute force search over {variables} variables with {colors} colors exceeds the size cap")]
    BruteForceCap { variables: usize, colors: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
