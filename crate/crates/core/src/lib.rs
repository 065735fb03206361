//! Exact structure-constant computations for finite-dimensional Jordan and
//! Lie algebras.
//!
//! Algebras are given by structure constants over an exact field (the
//! rationals by default). Derivation, triple-derivation and inner-derivation
//! spaces, centers and ideals are all computed as nullspaces of exact linear
//! systems and returned in canonical reduced row-echelon form, so equality of
//! subspaces is a plain `==`.

pub mod algebra;
pub mod constructors;
pub mod derivations;
pub mod error;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod scalar;
pub mod verify;

pub use algebra::{JordanAlgebra, LinearOperator, StructureTable};
pub use derivations::OperatorSubspace;
pub use error::{Error, ValidationKind};
pub use lie::{LieTable, SimplicityStatus, SimplicityVerdict};
pub use linalg::{Matrix, RowBasis, Solver, Strategy};
pub use scalar::{Fp, Scalar};

/// Arbitrary-precision rationals, the default scalar.
pub type Q = num_rational::BigRational;

pub type QMatrix = Matrix<Q>;
pub type QRowBasis = RowBasis<Q>;
pub type QStructureTable = StructureTable<Q>;
pub type Jordan = JordanAlgebra<Q>;
pub type Lie = LieTable<Q>;
pub type QOperatorSubspace = OperatorSubspace<Q>;
