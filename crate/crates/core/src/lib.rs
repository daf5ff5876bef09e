//! Exact resolution of SU(3) outer multiplicities.
//!
//! Four families of SU(3) Schwinger bosons (`a`, `c` triplets, `b`, `d`
//! anti-triplets) carry two SU(3) irreps. The SU(3)xSU(3)-invariant
//! bilinears close into so(4,2); the quartic operator `C4'` built from the
//! constraint-compatible bosons separates repeated irreps in the product.
//! All arithmetic is exact over Q(i, sqrt 3).

pub mod battery;
pub mod decompose;
pub mod error;
pub mod factory;
pub mod fock;
pub mod labels;
pub mod oracle;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use labels::{IrrepLabel, Weight};
pub use scalar::{Rational, Scalar};
