use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A single reason a raw tree description is not a Brauer tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeViolation {
    NoEdges,
    DuplicateVertex(String),
    MissingExceptional(String),
    ZeroMultiplicity,
    /// Edge label present in only one rotation.
    DanglingEdge(String),
    /// Edge label present in more than two rotation slots.
    OverusedEdge(String, usize),
    /// Edge listed twice at the same vertex.
    Loop(String),
    Disconnected,
    NotAcyclic,
    /// A vertex outside the exceptional one with no incident edges.
    IsolatedVertex(String),
}

impl fmt::Display for TreeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeViolation::NoEdges => write!(f, "tree has no edges"),
            TreeViolation::DuplicateVertex(v) => write!(f, "duplicate vertex {v:?}"),
            TreeViolation::MissingExceptional(v) => write!(f, "missing exceptional vertex {v:?}"),
            TreeViolation::ZeroMultiplicity => write!(f, "multiplicity must be at least 1"),
            TreeViolation::DanglingEdge(e) => write!(f, "dangling edge {e:?}: appears in only one rotation"),
            TreeViolation::OverusedEdge(e, n) => write!(f, "edge {e:?} appears {n} times, expected 2"),
            TreeViolation::Loop(e) => write!(f, "not acyclic: edge {e:?} is a loop"),
            TreeViolation::Disconnected => write!(f, "disconnected"),
            TreeViolation::NotAcyclic => write!(f, "not acyclic"),
            TreeViolation::IsolatedVertex(v) => write!(f, "vertex {v:?} has no edges"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid Brauer tree: {}", join(.0))]
    InvalidTree(Vec<TreeViolation>),
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("edge {0:?} is not incident to the exceptional vertex")]
    NotAtExceptional(String),
    #[error("operation undefined at the exceptional vertex")]
    ExceptionalVertex,
    #[error("operation needs at least {0} edges")]
    TooFewEdges(usize),
    #[error("invalid pointing at vertex {0:?}")]
    InvalidPointing(String),
    #[error("invalid numbering: {0}")]
    InvalidNumbering(String),
    #[error("star algebra needs e > 1 and m >= 1, got e={e}, m={m}")]
    InvalidAlgebra { e: u32, m: u32 },
    #[error("invalid basis map: {0}")]
    InvalidBasisMap(String),
    #[error("morphisms are not composable: {0}")]
    NotComposable(String),
    #[error("differential squares to a nonzero map in degree {0}")]
    NotAComplex(i32),
    #[error("degreewise maps do not commute with the differentials in degree {0}")]
    NotAChainMap(i32),
    #[error("elementary complex T_ij needs i != j")]
    DegenerateElementary,
    #[error("reduction certificate failed: {0}")]
    CertificateFailed(&'static str),
    #[error("complex is not homogeneous, hom space cannot be graded")]
    NotGraded,
    #[error("no nonzero non-invertible class between the entries")]
    ZeroHom,
    #[error("{0} distinct classes share the minimal degree")]
    AmbiguousConnectingMap(usize),
    #[error("family is not partial tilting: {0}")]
    NotTilting(String),
    #[error("families have mismatched index sets ({0} vs {1})")]
    IndexMismatch(usize, usize),
    #[error("no permutation of rows matches the families")]
    NoRowMatching,
    #[error("unknown verification mode {0:?}")]
    UnknownMode(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("mutation log is inconsistent at step {0}")]
    InconsistentLog(usize),
}

fn join(v: &[TreeViolation]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            s.push_str("; ");
        }
        let _ = write!(s, "{x}");
    }
    s
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
