use thiserror::Error;

/// The first invariant a face list violated while being turned into a
/// [`SurfaceComplex`](crate::SurfaceComplex).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("complex has no faces")]
    Empty,
    #[error("face {index} has {len} vertices; at least 3 are required")]
    ShortFace { index: usize, len: usize },
    #[error("face {index} repeats vertex {vertex}")]
    RepeatedVertex { index: usize, vertex: String },
    #[error("edge {u}-{v} lies on {count} face slot(s); exactly 2 in distinct faces are required")]
    EdgeFaceCount { u: String, v: String, count: usize },
    #[error("edge {u}-{v} is used by several faces in a way only a multi-edge could realize")]
    MultiEdge { u: String, v: String },
    #[error("underlying graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("vertex {vertex} has degree {degree}; degree at least 3 is required")]
    LowDegree { vertex: String, degree: usize },
    #[error("faces around vertex {vertex} do not form a single disk")]
    BrokenVertexLink { vertex: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid complex: {0}")]
    Validation(#[from] ValidationError),
    #[error("incidence error: {0}")]
    Incidence(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("structure error: {0}")]
    Structure(String),
    #[error("{count} zigzag pairs exceed the orientation-scan limit of {limit}")]
    TooManyZigzags { count: usize, limit: usize },
    #[error("invalid z-orientation: {0}")]
    Orientation(String),
    #[error("monodromy error: {0}")]
    Monodromy(String),
    #[error("gadget catalog check failed for {gadget}: {reason}")]
    Catalog { gadget: String, reason: String },
    #[error("assumption (*) violated: both pairs have adjacent endpoints ({a} and {b})")]
    StarViolation { a: String, b: String },
    #[error("gluing failed: {0}")]
    Glue(String),
    #[error("no special pair is traversed by two or more zigzags")]
    Selection,
    #[error("no catalog gadget merges the zigzags through a pair with monodromy {0}")]
    GadgetSearch(String),
    #[error("zigzag count did not decrease at step {step} ({before} -> {after})")]
    LoopGuard {
        step: usize,
        before: usize,
        after: usize,
    },
}

impl Error {
    /// True for errors caused by malformed or invalid input data, as opposed
    /// to well-formed input on which a domain operation is not possible.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Validation(_)
                | Error::UnknownVertex(_)
                | Error::Orientation(_)
                | Error::Incidence(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
