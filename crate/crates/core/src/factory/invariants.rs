//! The eighteen SU(3)xSU(3)-invariant bilinears.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::fock::{Factor, Family, LinearOperator, Mode};
use crate::scalar::Scalar;

/// Triplet/anti-triplet pairs carrying `k` invariants: `(ab)`, `(cd)`,
/// `(ad)`, `(bc)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum KPair {
    AB,
    CD,
    AD,
    BC,
}

impl KPair {
    pub const ALL: [KPair; 4] = [KPair::AB, KPair::CD, KPair::AD, KPair::BC];

    /// `(triplet family, anti-triplet family)`.
    pub fn families(self) -> (Family, Family) {
        match self {
            KPair::AB => (Family::A, Family::B),
            KPair::CD => (Family::C, Family::D),
            KPair::AD => (Family::A, Family::D),
            KPair::BC => (Family::C, Family::B),
        }
    }

    fn label(self) -> &'static str {
        match self {
            KPair::AB => "ab",
            KPair::CD => "cd",
            KPair::AD => "ad",
            KPair::BC => "bc",
        }
    }
}

/// Same-type pairs carrying `kappa` invariants: `(ac)` and `(bd)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum KappaPair {
    AC,
    BD,
}

impl KappaPair {
    pub const ALL: [KappaPair; 2] = [KappaPair::AC, KappaPair::BD];

    pub fn families(self) -> (Family, Family) {
        match self {
            KappaPair::AC => (Family::A, Family::C),
            KappaPair::BD => (Family::B, Family::D),
        }
    }

    fn label(self) -> &'static str {
        match self {
            KappaPair::AC => "ac",
            KappaPair::BD => "bd",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Part {
    Plus,
    Minus,
    Zero,
}

impl Part {
    pub const ALL: [Part; 3] = [Part::Plus, Part::Minus, Part::Zero];
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum InvariantKind {
    K(KPair, Part),
    Kappa(KappaPair, Part),
}

impl InvariantKind {
    pub fn all() -> Vec<InvariantKind> {
        let mut out = Vec::with_capacity(18);
        for p in KPair::ALL {
            for part in Part::ALL {
                out.push(InvariantKind::K(p, part));
            }
        }
        for p in KappaPair::ALL {
            for part in Part::ALL {
                out.push(InvariantKind::Kappa(p, part));
            }
        }
        out
    }

    /// The kind whose operator is the adjoint of this one.
    pub fn adjoint(self) -> InvariantKind {
        let flip = |p: Part| match p {
            Part::Plus => Part::Minus,
            Part::Minus => Part::Plus,
            Part::Zero => Part::Zero,
        };
        match self {
            InvariantKind::K(p, part) => InvariantKind::K(p, flip(part)),
            InvariantKind::Kappa(p, part) => InvariantKind::Kappa(p, flip(part)),
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = |p: Part| match p {
            Part::Plus => "+",
            Part::Minus => "-",
            Part::Zero => "0",
        };
        match self {
            InvariantKind::K(p, part) => write!(f, "k{}({})", sub(*part), p.label()),
            InvariantKind::Kappa(p, part) => write!(f, "kappa{}({})", sub(*part), p.label()),
        }
    }
}

/// `sum_al x_al y_al` with each side a creator or annihilator of color al.
pub(crate) fn contraction(x: Family, x_create: bool, y: Family, y_create: bool) -> LinearOperator {
    let sym = |f: Family, create: bool, c: u8| {
        let m = Mode::new(f, c);
        if create {
            Factor::Create(m)
        } else {
            Factor::Annihilate(m)
        }
    };
    let mut op = LinearOperator::zero();
    for c in 1..=3 {
        op.push(Scalar::one(), vec![sym(x, x_create, c), sym(y, y_create, c)]);
    }
    op
}

pub fn build_invariant(kind: InvariantKind) -> LinearOperator {
    match kind {
        InvariantKind::K(p, Part::Plus) => {
            let (x, y) = p.families();
            contraction(x, true, y, true)
        }
        InvariantKind::K(p, Part::Minus) => {
            let (x, y) = p.families();
            contraction(x, false, y, false)
        }
        InvariantKind::K(p, Part::Zero) => {
            let (x, y) = p.families();
            LinearOperator::number(x)
                .plus(&LinearOperator::number(y))
                .plus(&LinearOperator::scalar(Scalar::from_int(3)))
        }
        InvariantKind::Kappa(p, Part::Plus) => {
            let (x, y) = p.families();
            contraction(x, true, y, false)
        }
        InvariantKind::Kappa(p, Part::Minus) => {
            let (x, y) = p.families();
            contraction(y, true, x, false)
        }
        InvariantKind::Kappa(p, Part::Zero) => {
            let (x, y) = p.families();
            LinearOperator::number(x).minus(&LinearOperator::number(y))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{FockMonomial, StateVector};

    #[test]
    fn eighteen_kinds() {
        let all = InvariantKind::all();
        assert_eq!(all.len(), 18);
        for k in &all {
            assert_eq!(k.adjoint().adjoint(), *k);
        }
    }

    #[test]
    fn examples() {
        let vac = StateVector::vacuum();
        let k0 = build_invariant(InvariantKind::K(KPair::AB, Part::Zero));
        assert_eq!(k0.apply(&vac).unwrap(), vac.scaled(&Scalar::from_int(3)));
        let c1 = StateVector::monomial(FockMonomial::from_modes(&[(Mode::new(Family::C, 1), 1)]));
        let a1 = StateVector::monomial(FockMonomial::from_modes(&[(Mode::new(Family::A, 1), 1)]));
        let kp = build_invariant(InvariantKind::Kappa(KappaPair::AC, Part::Plus));
        assert_eq!(kp.apply(&c1).unwrap(), a1);
        let kp_cd = build_invariant(InvariantKind::K(KPair::CD, Part::Plus));
        let km_cd = build_invariant(InvariantKind::K(KPair::CD, Part::Minus));
        let pair = kp_cd.apply(&vac).unwrap();
        assert_eq!(km_cd.apply(&pair).unwrap(), vac.scaled(&Scalar::from_int(3)));
    }

    #[test]
    fn adjoint_kinds_match_operator_adjoints() {
        for kind in InvariantKind::all() {
            let lhs = build_invariant(kind).adjoint();
            let rhs = build_invariant(kind.adjoint());
            for mono in crate::fock::basis::monomials_up_to(2) {
                let s = StateVector::monomial(mono);
                assert_eq!(lhs.apply(&s).unwrap(), rhs.apply(&s).unwrap(), "{kind}");
            }
        }
    }

    #[test]
    fn display_names() {
        assert_eq!(InvariantKind::K(KPair::AD, Part::Plus).to_string(), "k+(ad)");
        assert_eq!(InvariantKind::Kappa(KappaPair::BD, Part::Zero).to_string(), "kappa0(bd)");
    }
}
