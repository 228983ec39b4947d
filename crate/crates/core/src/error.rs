use thiserror::Error;

/// Errors shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division was requested but the divisor does not divide the dividend.
    #[error("inexact division")]
    InexactDivision,

    /// The input is structurally unusable (zero polynomial, vanishing constant
    /// term where one is required, empty word, mismatched dimensions, ...).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// A numeric argument is outside the domain of the operation.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// The algorithm could not certify an answer. This is never a claim that
    /// the opposite holds.
    #[error("inconclusive: {0}")]
    Inconclusive(String),

    /// The graph (or the bipartite graph induced by an intersection matrix)
    /// is not connected.
    #[error("disconnected graph")]
    Disconnected,

    /// The configuration has intersection numbers > 1, so its configuration
    /// graph would need multiple edges.
    #[error("not a Coxeter graph: {0}")]
    NotCoxeter(String),

    /// The graph is not non-critical dominant (spectral radius <= 2).
    #[error("graph is not non-critical dominant")]
    NotDominant,

    /// The trace condition |tr| > 2 fails, so there is no hyperbolic stretch.
    #[error("not hyperbolic: {0}")]
    NotHyperbolic(String),

    /// A twist word references a curve label missing from the class table.
    #[error("unknown curve label: {0}")]
    UnknownCurve(String),

    /// A curve-class table failed its build-time calibration.
    #[error("convention error: {0}")]
    ConventionError(String),

    /// Malformed external input (dataset rows, polynomial strings, ...).
    #[error("input error: {0}")]
    InputError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
