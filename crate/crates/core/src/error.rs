use thiserror::Error;

use crate::diagnostic::DiagnosticBundle;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("graph has no edges; brushing number is only defined for graphs with edges")]
    NoEdges,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("bad token {token:?} on line {line}")]
    BadToken { line: usize, token: String },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("node budget or deadline exhausted after {nodes} search nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("vertex set is not a zero forcing set")]
    NotForcing,
    #[error("orientation is not acyclic")]
    NotAcyclic,
    #[error("orientation leaves {0} edge(s) unoriented")]
    NotFull(usize),
    #[error("vertex order is not a valid topological order: {0}")]
    InvalidOrder(String),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("invalid family parameters: {0}")]
    BadParams(String),
    #[error("malformed witness document: {0}")]
    MalformedWitness(String),

    // Internal-consistency failures. Each carries a reproducer.
    #[error("forcing chain is not an induced path in the line graph")]
    NotInducedPath(Box<DiagnosticBundle>),
    #[error("orientation rules disagree on an edge")]
    ConflictingRules(Box<DiagnosticBundle>),
    #[error("partial orientation contains a directed cycle")]
    CycleFound(Box<DiagnosticBundle>),
    #[error("derived brush witness failed verification")]
    WitnessInvalid(Box<DiagnosticBundle>),
    #[error("structural out-edge property violated")]
    PropertyViolated(Box<DiagnosticBundle>),
    #[error("transferred vertex set failed to force the graph")]
    TransferNotForcing(Box<DiagnosticBundle>),

    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// The reproducer attached to an internal-consistency failure, if any.
    pub fn diagnostic(&self) -> Option<&DiagnosticBundle> {
        match self {
            Error::NotInducedPath(b)
            | Error::ConflictingRules(b)
            | Error::CycleFound(b)
            | Error::WitnessInvalid(b)
            | Error::PropertyViolated(b)
            | Error::TransferNotForcing(b) => Some(b),
            _ => None,
        }
    }

    /// Adds context to an attached reproducer; other errors pass through.
    pub fn enrich(mut self, f: impl FnOnce(&mut DiagnosticBundle)) -> Self {
        match &mut self {
            Error::NotInducedPath(b)
            | Error::ConflictingRules(b)
            | Error::CycleFound(b)
            | Error::WitnessInvalid(b)
            | Error::PropertyViolated(b)
            | Error::TransferNotForcing(b) => f(b),
            _ => {}
        }
        self
    }
}
