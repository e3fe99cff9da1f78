use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {id} has negative cost")]
    NegativeCost { id: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge set is not a matching of the graph: {0}")]
    NotAMatching(String),
    /// A negative cycle in a residual digraph; the supplied matching was not optimal.
    #[error("matching not optimal: residual digraph has a negative cycle")]
    MatchingNotOptimal,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("no triangle with the given side and median lengths")]
    NoTriangle,
    #[error("instance too large for brute-force oracle: {0}")]
    OracleGuard(String),
    #[error("compared maps have different element universes")]
    UniverseMismatch,
}
