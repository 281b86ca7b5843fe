use thiserror::Error;

/// Everything that can go wrong while loading graphs or computing bounds.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge {u}-{v} has negative weight {weight}")]
    NegativeWeight { u: usize, v: usize, weight: f64 },
    #[error("edge {u}-{v} has non-finite weight")]
    NonFiniteWeight { u: usize, v: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("header declares {declared} edges but {found} were read")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("missing header line \"p <vertices> <edges>\"")]
    MissingHeader,

    #[error("graph is disconnected")]
    Disconnected,
    #[error("triangle found: {0}-{1}-{2}")]
    TriangleFound(usize, usize, usize),
    #[error("vertex {vertex} has degree {degree}, maximum allowed is {max}")]
    DegreeTooLarge { vertex: usize, degree: usize, max: usize },
    #[error("girth {girth} is too small: {reason}")]
    GirthTooSmall { girth: usize, reason: String },
    #[error("edge {edge} is not an edge of the graph")]
    UnknownEdge { edge: usize },
    #[error("edge set is not a matching: edges {first} and {second} share vertex {vertex}")]
    NotAMatching { first: usize, second: usize, vertex: usize },

    #[error("not induced: edge {u}-{v} lies inside a component but outside the edge set")]
    NotInduced { u: usize, v: usize },
    #[error("not bipartite: edge {u}-{v} closes an odd cycle")]
    NotBipartite { u: usize, v: usize },
    #[error("not a spanning tree: {0}")]
    NotASpanningTree(String),
    #[error("odd cycle of length {length} through non-tree edge {edge} violates the layer precondition (needs > {limit})")]
    OddCyclePrecondition { edge: usize, length: usize, limit: usize },
    #[error("improper coloring: edge {u}-{v} is monochromatic")]
    ImproperColoring { u: usize, v: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{quantity}: n = {n} exceeds the size guard {limit}")]
    SizeGuard { quantity: &'static str, n: usize, limit: usize },
    #[error("structural assertion failed: {0}")]
    Structural(String),
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by bad input rather than a broken invariant.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Structural(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
