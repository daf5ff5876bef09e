//! Irreducible Schwinger bosons and the resolving operator `C4'`.
//!
//! `A+_al = a+_al - 1/(Na+Nb+1) (a+ . b+) b_al`, and likewise for `B+`,
//! `C+`, `D+`. The count function sits to the left, so it is evaluated on
//! the counts of the state produced by the pair term; with that reading
//! the modified creators map traceless states to traceless states.
//! Annihilating kinds are the Fock adjoints.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::invariants::{build_invariant, InvariantKind, KPair, Part};
use crate::fock::{CountFn, Family, LinearOperator, Mode};
use crate::scalar::{Rational, Scalar};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IsbKind {
    ADag,
    BDag,
    CDag,
    DDag,
    A,
    B,
    C,
    D,
}

impl IsbKind {
    fn creator_of(self) -> (IsbKind, bool) {
        match self {
            IsbKind::A => (IsbKind::ADag, true),
            IsbKind::B => (IsbKind::BDag, true),
            IsbKind::C => (IsbKind::CDag, true),
            IsbKind::D => (IsbKind::DDag, true),
            k => (k, false),
        }
    }
}

/// `x+ - 1/(Nx+Ny+1) k+(xy) y` for the creator of `x` with partner `y`.
fn isb_creator(kind: IsbKind, color: u8) -> LinearOperator {
    let (own, partner, pair) = match kind {
        IsbKind::ADag => (Family::A, Family::B, KPair::AB),
        IsbKind::BDag => (Family::B, Family::A, KPair::AB),
        IsbKind::CDag => (Family::C, Family::D, KPair::CD),
        IsbKind::DDag => (Family::D, Family::C, KPair::CD),
        _ => unreachable!("creator kinds only"),
    };
    let (x, y) = pair.families();
    let mut op = LinearOperator::create(Mode::new(own, color));
    let correction = LinearOperator::count(CountFn::inverse_pair_plus_one(x, y))
        .then_after(&build_invariant(InvariantKind::K(pair, Part::Plus)))
        .then_after(&LinearOperator::annihilate(Mode::new(partner, color)));
    op = op.minus(&correction);
    op
}

/// Irreducible Schwinger boson of the given kind and color (1..=3).
pub fn build_isb(kind: IsbKind, color: u8) -> LinearOperator {
    assert!((1..=3).contains(&color), "color {color} outside 1..=3");
    let (creator, is_adjoint) = kind.creator_of();
    let op = isb_creator(creator, color);
    if is_adjoint {
        op.adjoint()
    } else {
        op
    }
}

/// `sum_al X_al Y_al`, expanded.
pub fn isb_dot(x: IsbKind, y: IsbKind) -> LinearOperator {
    let mut out = LinearOperator::zero();
    for c in 1..=3 {
        out = out.plus(&build_isb(x, c).then_after(&build_isb(y, c)));
    }
    out
}

/// The four weights of the `C4'` family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C4PrimeCoefficients {
    pub lambda: [Rational; 4],
}

impl Default for C4PrimeCoefficients {
    fn default() -> Self {
        C4PrimeCoefficients::new([1, 0, 0, 0])
    }
}

impl C4PrimeCoefficients {
    pub fn new(l: [i64; 4]) -> Self {
        C4PrimeCoefficients {
            lambda: l.map(|x| Rational::from_integer(x.into())),
        }
    }

    pub fn from_rationals(lambda: [Rational; 4]) -> Self {
        C4PrimeCoefficients { lambda }
    }

    pub fn is_default(&self) -> bool {
        *self == C4PrimeCoefficients::default()
    }

    /// The weights as `"num"` or `"num/den"` strings.
    pub fn labels(&self) -> [String; 4] {
        self.lambda.each_ref().map(crate::scalar::format_rational)
    }
}

/// The four quartic pieces, each of the form `M+ M`.
pub fn c4prime_pieces() -> [(IsbKind, IsbKind, IsbKind, IsbKind); 4] {
    use IsbKind::*;
    [
        (ADag, C, CDag, A),
        (BDag, D, DDag, B),
        (ADag, DDag, A, D),
        (BDag, CDag, B, C),
    ]
}

/// `l1 (A+.C)(C+.A) + l2 (B+.D)(D+.B) + l3 (A+.D+)(A.D) + l4 (B+.C+)(B.C)`.
pub fn build_c4prime(coeffs: &C4PrimeCoefficients) -> LinearOperator {
    let mut out = LinearOperator::zero();
    for (lam, (w, x, y, z)) in coeffs.lambda.iter().zip(c4prime_pieces()) {
        if num_traits::Zero::is_zero(lam) {
            continue;
        }
        let left = Arc::new(isb_dot(w, x));
        let right = Arc::new(isb_dot(y, z));
        out = out.plus(&LinearOperator::chain(&[left, right]).scaled(&Scalar::from_rational(lam.clone())));
    }
    out
}
