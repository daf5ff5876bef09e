//! Fock-space substrate: the twelve boson modes, state vectors in the
//! unnormalized monomial basis, ladder-operator polynomials, exact sector
//! matrices, nullspaces and generalized eigenproblems.

pub mod basis;
pub mod eigen;
pub mod linalg;
pub mod matrix;
pub mod operator;
pub mod state;

pub use basis::{enumerate_sector, Family, FockMonomial, Mode, SectorBasis};
pub use eigen::{generalized_eigen, EigenSpace, EigenValue};
pub use linalg::Matrix;
pub use matrix::{matrix_of, ExactMatrix};
pub use operator::{apply, ApplyCache, commutator, CountFn, Factor, LinearOperator};
pub use state::{gram_inner, StateVector};
