//! Exact computational kernel for finite-dimensional (and locally finite)
//! Hopf algebras: axiom checkers, Hopf braces, bijective 1-cocycles, Hopf
//! matched pairs, weak R-matrices and bicrossed coproducts, all over exact
//! fields (arbitrary-precision rationals or prime fields).
//!
//! Every structure map is stored as sparse structure constants on a chosen
//! basis; every axiom is checked as a literal equality of tables. No
//! floating point anywhere.

pub mod bicrossed;
pub mod brace;
pub mod cocycle;
pub mod error;
pub mod hopf;
pub mod lazy;
pub mod linalg;
pub mod map;
pub mod matched;
pub mod report;
pub mod scalar;
pub mod sparse;
pub mod zoo;

pub use error::HopfError;
pub use hopf::{AlgebraData, CoalgebraData, HopfData};
pub use report::{CheckReport, CheckStatus};
pub use scalar::{FieldSpec, Scalar};
pub use sparse::{SparseVec, Tensor};
pub use map::StructureMap;
