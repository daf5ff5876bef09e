//! Operator construction: SU(3) generators, invariant bilinears, the
//! so(4,2) basis and its Casimirs, irreducible Schwinger bosons and `C4'`.

mod gellmann;
mod generators;
mod invariants;
mod isb;
mod so42;

pub use gellmann::GellMannTable;
pub use generators::{
    build_generator, build_magnetic, generator_of_matrix, isospin_raising, uspin_raising, Group, Magnetic,
};
pub use invariants::{build_invariant, InvariantKind, KPair, KappaPair, Part};
pub use isb::{build_c4prime, build_isb, c4prime_pieces, isb_dot, C4PrimeCoefficients, IsbKind};
pub use so42::{
    build_casimir, build_l, generator_pairs, CasimirOrder, GeneratorSet, LCombinationTable, MetricSignature,
    PairArrangement,
};
