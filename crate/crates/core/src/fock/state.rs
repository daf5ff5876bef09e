use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::basis::{FockMonomial, SectorBasis};
use crate::scalar::Scalar;

/// Finite linear combination of Fock monomials. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StateVector {
    terms: BTreeMap<FockMonomial, Scalar>,
}

impl StateVector {
    pub fn zero() -> Self {
        StateVector::default()
    }

    pub fn vacuum() -> Self {
        StateVector::monomial(FockMonomial::vacuum())
    }

    pub fn monomial(m: FockMonomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, Scalar::one());
        StateVector { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (FockMonomial, Scalar)>>(iter: I) -> Self {
        let mut v = StateVector::zero();
        for (m, c) in iter {
            v.add_term(m, &c);
        }
        v
    }

    /// Expands coefficients given in `basis` order.
    pub fn from_coords(basis: &SectorBasis, coords: &[Scalar]) -> Self {
        StateVector::from_terms(
            basis
                .monomials()
                .iter()
                .zip(coords)
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    pub fn add_term(&mut self, m: FockMonomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &StateVector, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(*m, &(v * c));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> StateVector {
        if c.is_zero() {
            return StateVector::zero();
        }
        StateVector {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &FockMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FockMonomial, &Scalar)> {
        self.terms.iter()
    }

    /// Coordinates in `basis`; `None` if a monomial lies outside it.
    pub fn coords_in(&self, basis: &SectorBasis) -> Option<Vec<Scalar>> {
        let mut out = vec![Scalar::zero(); basis.len()];
        for (m, c) in &self.terms {
            out[basis.position(m)?] = c.clone();
        }
        Some(out)
    }

    pub fn first_coefficient(&self) -> Option<&Scalar> {
        self.terms.values().next()
    }

    /// Relabels `a <-> c`, `b <-> d` on every monomial.
    pub fn swap_pairs(&self) -> StateVector {
        StateVector {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swap_pairs(), c.clone()))
                .collect(),
        }
    }

    /// If `self = lambda * other` for a scalar lambda, returns lambda.
    /// `other` must be nonzero.
    pub fn ratio_to(&self, other: &StateVector) -> Option<Scalar> {
        let (m, c) = other.terms.iter().next()?;
        let lambda = &self.coefficient(m) * &c.invert().ok()?;
        let mut diff = self.clone();
        diff.add_scaled(other, &-&lambda);
        diff.is_zero().then_some(lambda)
    }
}

impl std::ops::Add<&StateVector> for &StateVector {
    type Output = StateVector;
    fn add(self, o: &StateVector) -> StateVector {
        let mut out = self.clone();
        out.add_scaled(o, &Scalar::one());
        out
    }
}

impl std::ops::Sub<&StateVector> for &StateVector {
    type Output = StateVector;
    fn sub(self, o: &StateVector) -> StateVector {
        let mut out = self.clone();
        out.add_scaled(o, &Scalar::from_int(-1));
        out
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({c}) {m}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Fock inner product `<u|v> = sum conj(u_m) v_m prod n!` in the
/// unnormalized monomial basis.
pub fn gram_inner(u: &StateVector, v: &StateVector) -> Scalar {
    let (small, large, flip) = if u.len() <= v.len() {
        (u, v, false)
    } else {
        (v, u, true)
    };
    let mut acc = Scalar::zero();
    for (m, cs) in &small.terms {
        if let Some(cl) = large.terms.get(m) {
            let (cu, cv) = if flip { (cl, cs) } else { (cs, cl) };
            let w = BigRational::from_integer(m.norm_weight());
            acc += &(&cu.conj() * cv).scale(&w);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::basis::{Family, Mode};

    fn mono(pairs: &[(Family, u8, u8)]) -> FockMonomial {
        let v: Vec<(Mode, u8)> = pairs.iter().map(|&(f, c, n)| (Mode::new(f, c), n)).collect();
        FockMonomial::from_modes(&v)
    }

    #[test]
    fn gram_examples() {
        let a1 = StateVector::monomial(mono(&[(Family::A, 1, 1)]));
        let a1sq = StateVector::monomial(mono(&[(Family::A, 1, 2)]));
        let a2 = StateVector::monomial(mono(&[(Family::A, 2, 1)]));
        assert_eq!(gram_inner(&a1, &a1), Scalar::one());
        assert_eq!(gram_inner(&a1sq, &a1sq), Scalar::from_int(2));
        assert_eq!(gram_inner(&a1, &a2), Scalar::zero());
    }

    #[test]
    fn gram_is_sesquilinear() {
        let a1 = StateVector::monomial(mono(&[(Family::A, 1, 1)]));
        let v = a1.scaled(&Scalar::i());
        assert_eq!(gram_inner(&v, &a1), -Scalar::i());
        assert_eq!(gram_inner(&a1, &v), Scalar::i());
    }

    #[test]
    fn cancellation_removes_terms() {
        let a1 = StateVector::monomial(mono(&[(Family::A, 1, 1)]));
        let d = &a1 - &a1;
        assert!(d.is_zero());
        assert_eq!(a1.scaled(&Scalar::from_int(3)).ratio_to(&a1), Some(Scalar::from_int(3)));
    }
}
