use alloc::string::String;
use core::fmt;

/// Errors produced by graph mutation, construction and the oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument was outside its documented domain.
    InvalidArgument(String),
    /// An edge from a vertex to itself was requested.
    SelfLoop(usize),
    /// The edge is already present.
    DuplicateEdge(usize, usize),
    /// The edge is not present.
    MissingEdge(usize, usize),
    /// The input graph does not satisfy a construction step's precondition.
    InvalidInput(String),
    /// The tail-extension path finder got stuck. Unreachable when the
    /// minimum degree is at least the requested edge count.
    InternalContradiction(String),
    /// `n < k + 1`: no simple graph has every degree equal to `k`.
    Infeasible { n: usize, k: usize },
    /// `k < 2`.
    UnsupportedDegree { k: usize },
    /// The exhaustive search was asked for more vertices than it enumerates.
    BudgetExceeded { n: usize, max: usize },
    /// A runtime invariant check on a constructed graph failed.
    Verification(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::DuplicateEdge(u, v) => write!(f, "duplicate edge ({u},{v})"),
            Error::MissingEdge(u, v) => write!(f, "missing edge ({u},{v})"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::InternalContradiction(msg) => write!(f, "internal contradiction: {msg}"),
            Error::Infeasible { n, k } => write!(
                f,
                "infeasible: n = {n} < k + 1 = {}; a k-regular graph needs at least k + 1 vertices (n >= k + 1)",
                k + 1
            ),
            Error::UnsupportedDegree { k } => {
                write!(f, "unsupported degree: k = {k} < 2; construction requires k >= 2")
            }
            Error::BudgetExceeded { n, max } => {
                write!(f, "enumeration budget exceeded: n = {n} > {max}")
            }
            Error::Verification(msg) => write!(f, "verification failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
