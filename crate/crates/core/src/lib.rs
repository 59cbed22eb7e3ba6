//! Exact prolongations of linear Lie algebras and infinitesimal automorphism
//! algebras of projective cones.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: exact rational and modular linear algebra (kernels, ranks,
//!   canonical subspaces).
//! * [`sym`]: symmetric multi-indices, symmetric multilinear maps and
//!   quadratic forms.
//! * [`prolong`]: the prolongation `g^(k)` of a matrix Lie algebra.
//! * [`zoo`]: the named varieties (Veronese, Segre, Grassmannians, quadrics,
//!   the spinor tenfold, the Cayley plane, symplectic-Grassmannian VMRTs and
//!   hyperplane sections) as quadric-cut cones with rational samplers.
//! * [`probes`]: cone automorphism algebras, tangent spaces, secant and VMRT
//!   dimensions, projection formulas.
//! * [`report`]: the case battery and machine-readable reports.

pub mod error;
pub mod linalg;
pub mod par;
pub mod probes;
pub mod prolong;
pub mod report;
pub mod rng;
pub mod sym;
pub mod zoo;

pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar, SparseMatrix, Subspace};
pub use prolong::{prolong, Arithmetic, ProlongOptions, ProlongationResult, Strategy};
pub use sym::{MultiIndex, QuadraticForm, SymMultiMap};
pub use zoo::{QuadraticIdeal, Variety};
