use thiserror::Error;

/// Errors produced by graph construction, factor search and the analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge #{position}: vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange {
        position: usize,
        vertex: usize,
        n: usize,
    },

    #[error("edge #{position}: self-loop at vertex {vertex}")]
    SelfLoop { position: usize, vertex: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("the graph has no vertices")]
    EmptyGraph,

    #[error("operation needs at least {needed} vertices, graph has {actual}")]
    TooFewVertices { needed: usize, actual: usize },

    #[error("vertex sets overlap at vertex {vertex}")]
    OverlappingSets { vertex: usize },

    #[error("invalid parameters: {}", .0.join("; "))]
    InvalidParameters(Vec<String>),

    #[error("degree bounds violated: {}", .0.join("; "))]
    DegreeBounds(Vec<String>),

    #[error("{what}: size {actual} exceeds the exhaustive limit {limit}")]
    Scale {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("search budget of {budget} nodes exhausted before a decision")]
    BudgetExhausted { budget: u64 },

    #[error("power iteration did not reach residual {tolerance:e} within {iterations} iterations (residual {residual:e})")]
    NonConvergence {
        iterations: usize,
        residual: f64,
        tolerance: f64,
    },

    #[error("no sign change of the cubic on [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },

    #[error("edge ({u}, {v}) is not an edge of the host graph")]
    ForeignEdge { u: usize, v: usize },

    #[error("vertex {vertex} has degree {degree} but the gadget needs at least {needed}")]
    DeficientVertex {
        vertex: usize,
        degree: usize,
        needed: usize,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParameters(vec![msg.into()])
    }

    /// True for errors caused by instance size or search budget rather than bad input.
    pub fn is_scale(&self) -> bool {
        matches!(self, Error::Scale { .. } | Error::BudgetExhausted { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
