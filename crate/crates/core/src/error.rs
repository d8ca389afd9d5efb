use thiserror::Error;

/// Everything that can go wrong while validating input or computing a separator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {n} vertices; at least 4 are required")]
    TooSmall { n: usize },

    #[error("expected {expected} rotations, got {got}")]
    RotationCount { expected: usize, got: usize },

    #[error("vertex {vertex} lists neighbor {neighbor}, which is out of range")]
    VertexOutOfRange { vertex: usize, neighbor: usize },

    #[error("rotation of vertex {vertex} is not simple (self-loop or repeated neighbor {neighbor})")]
    NotSimple { vertex: usize, neighbor: usize },

    #[error("edge {from}->{to} has no reverse entry in the rotation of {to}")]
    NotSymmetric { from: usize, to: usize },

    #[error("graph is disconnected: vertex {unreached} is unreachable from vertex 0")]
    Disconnected { unreached: usize },

    #[error("face traced from edge {from}->{to} has {len} sides, expected 3")]
    NotTriangulated { from: usize, to: usize, len: usize },

    #[error(
        "Euler count violated: n={n}, E={edges} (expected {expected_edges}), F={faces} (expected {expected_faces})"
    )]
    EulerViolation {
        n: usize,
        edges: usize,
        faces: usize,
        expected_edges: usize,
        expected_faces: usize,
    },

    #[error("outer triple ({0}, {1}, {2}) is not a face of the embedding")]
    BadOuterFace(usize, usize, usize),

    #[error("tree has a single node; no edge to cut")]
    SingleNode,

    #[error("edge list does not form a tree: {0}")]
    NotATree(String),

    #[error("bad seed path: {0}")]
    BadSeedPath(String),

    #[error("boundary trace at level {level} failed: {reason}")]
    TraceFailure { level: usize, reason: String },

    #[error("every ladder offset has weight zero")]
    LadderEmpty,

    #[error("rung {rung} meets the fundamental cycle in {count} vertices, expected 2")]
    DegenerateIntersection { rung: usize, count: usize },

    #[error("faces_in={faces_in} and cycle length {len} do not describe a simple cycle in a triangulation")]
    ParityViolation { faces_in: usize, len: usize },

    #[error("no separator branch applies: {0}")]
    InternalContradiction(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Errors caused by malformed or invalid input, as opposed to broken invariants.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::TooSmall { .. }
                | Error::RotationCount { .. }
                | Error::VertexOutOfRange { .. }
                | Error::NotSimple { .. }
                | Error::NotSymmetric { .. }
                | Error::Disconnected { .. }
                | Error::NotTriangulated { .. }
                | Error::EulerViolation { .. }
                | Error::BadOuterFace(..)
                | Error::SingleNode
                | Error::NotATree(_)
                | Error::BadSeedPath(_)
                | Error::Parse { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
