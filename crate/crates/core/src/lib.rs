//! Exact Brauer tree combinatorics and homotopy calculus over the Brauer star
//! algebra.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is a pure function
//! on immutable values:
//!
//! * [`tree`]: planar Brauer trees, Green's walks, pointings and numberings.
//! * [`mutation`]: the combinatorial tilting mutations and the two complete
//!   mutation-reduction algorithms.
//! * [`algebra`]: normal homogeneous morphisms between star projectives.
//! * [`complex`]: bounded complexes of star projectives, cones, hom spaces
//!   modulo homotopy and Gaussian elimination with certificates.
//! * [`pipeline`]: star-to-tree families, transport along inverse mutations
//!   and the permutation relating Aihara's family to the left-alternating one.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod complex;
pub mod error;
pub mod linalg;
pub mod mutation;
pub mod pipeline;
pub mod scalar;
pub mod tree;
pub mod verify;

pub use algebra::{BasisMap, Morphism, StarAlgebra};
pub use complex::{ChainMap, HomSpace, MorphismMatrix, ProjComplex, ReductionCertificate};
pub use error::{Error, Result};
pub use mutation::{Direction, MutationLog, MutationStep};
pub use pipeline::{Permutation, Provenance, TiltingFamily};
pub use scalar::Scalar;
pub use tree::{BrauerTree, EdgeId, EdgeNumbering, Pointing, PointingKind, VertexId};
pub use verify::{verify, Mode, Report};
