//! SU(3) flux operators of the two factor groups, their sum, and the
//! magnetic and raising operators built from the total.

use serde::{Deserialize, Serialize};

use super::gellmann::GellMannTable;
use crate::fock::{Factor, Family, LinearOperator, Matrix, Mode};
use crate::scalar::Scalar;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Group {
    First,
    Second,
    Total,
}

/// `sum x+_al M_{al be} x^be - sum y_al M_{al be} y+^be`, normal ordered as
/// `-sum M_{al be} y+^be y_al - Tr M`.
fn flux(triplet: Family, antitriplet: Family, m: &Matrix) -> LinearOperator {
    let mut op = LinearOperator::zero();
    let mut trace = Scalar::zero();
    for al in 0..3 {
        trace += &m[(al, al)];
        for be in 0..3 {
            let c = &m[(al, be)];
            if c.is_zero() {
                continue;
            }
            op.push(
                c.clone(),
                vec![
                    Factor::Create(Mode::new(triplet, al as u8 + 1)),
                    Factor::Annihilate(Mode::new(triplet, be as u8 + 1)),
                ],
            );
            op.push(
                -c,
                vec![
                    Factor::Create(Mode::new(antitriplet, be as u8 + 1)),
                    Factor::Annihilate(Mode::new(antitriplet, al as u8 + 1)),
                ],
            );
        }
    }
    op.push(-trace, Vec::new());
    op
}

/// Flux operator of an arbitrary 3x3 matrix acting on the chosen group.
pub fn generator_of_matrix(group: Group, m: &Matrix) -> LinearOperator {
    match group {
        Group::First => flux(Family::A, Family::B, m),
        Group::Second => flux(Family::C, Family::D, m),
        Group::Total => flux(Family::A, Family::B, m).plus(&flux(Family::C, Family::D, m)),
    }
}

/// `J^a` with generator matrix `lambda^a / 2`, `a` in 1..=8.
pub fn build_generator(group: Group, a: usize) -> LinearOperator {
    assert!((1..=8).contains(&a), "generator index {a} outside 1..=8");
    let m = GellMannTable::get().lambda(a).scaled(&Scalar::from_ratio(1, 2));
    generator_of_matrix(group, &m)
}

fn unit_matrix(r: usize, c: usize) -> Matrix {
    let mut m = Matrix::zeros(3, 3);
    m[(r, c)] = Scalar::one();
    m
}

/// Total isospin raising `T+ = J^1 + i J^2`.
pub fn isospin_raising() -> LinearOperator {
    generator_of_matrix(Group::Total, &unit_matrix(0, 1))
}

/// Total U-spin raising `U+ = J^6 + i J^7`.
pub fn uspin_raising() -> LinearOperator {
    generator_of_matrix(Group::Total, &unit_matrix(1, 2))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Magnetic {
    IsospinSquared,
    I3,
    Hypercharge,
}

pub fn build_magnetic(which: Magnetic) -> LinearOperator {
    match which {
        Magnetic::I3 => build_generator(Group::Total, 3),
        Magnetic::IsospinSquared => {
            let mut out = LinearOperator::zero();
            for a in 1..=3 {
                let j = build_generator(Group::Total, a);
                out = out.plus(&j.then_after(&j));
            }
            out
        }
        Magnetic::Hypercharge => {
            // (2/sqrt3) lambda^8/2 = diag(1, 1, -2)/3
            let m = Matrix::diagonal(&[
                Scalar::from_ratio(1, 3),
                Scalar::from_ratio(1, 3),
                Scalar::from_ratio(-2, 3),
            ]);
            generator_of_matrix(Group::Total, &m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{enumerate_sector, matrix_of, FockMonomial, StateVector};
    use std::sync::Arc;

    fn one(f: Family, c: u8) -> StateVector {
        StateVector::monomial(FockMonomial::from_modes(&[(Mode::new(f, c), 1)]))
    }

    #[test]
    fn j3_on_single_quanta() {
        let j3 = build_generator(Group::First, 3);
        let a1 = one(Family::A, 1);
        assert_eq!(j3.apply(&a1).unwrap(), a1.scaled(&Scalar::from_ratio(1, 2)));
        let b1 = one(Family::B, 1);
        assert_eq!(j3.apply(&b1).unwrap(), b1.scaled(&Scalar::from_ratio(-1, 2)));
        let m = matrix_of(&j3, &enumerate_sector(1, 0, 0, 0)).unwrap();
        // lexicographic order puts a3, a2, a1
        assert_eq!(
            m.to_dense(),
            Matrix::diagonal(&[Scalar::zero(), Scalar::from_ratio(-1, 2), Scalar::from_ratio(1, 2)])
        );
    }

    #[test]
    fn su2_commutator_on_triplet() {
        let j1 = Arc::new(build_generator(Group::First, 1));
        let j2 = Arc::new(build_generator(Group::First, 2));
        let j3 = build_generator(Group::First, 3);
        let dom = enumerate_sector(1, 0, 0, 0);
        let lhs = matrix_of(&LinearOperator::commutator(&j1, &j2), &dom).unwrap();
        let rhs = matrix_of(&j3.scaled(&Scalar::i()), &dom).unwrap();
        assert_eq!(lhs.to_dense(), rhs.to_dense());
    }

    #[test]
    fn magnetic_values() {
        let y = build_magnetic(Magnetic::Hypercharge);
        let a1 = one(Family::A, 1);
        let a3 = one(Family::A, 3);
        assert_eq!(y.apply(&a1).unwrap(), a1.scaled(&Scalar::from_ratio(1, 3)));
        assert_eq!(y.apply(&a3).unwrap(), a3.scaled(&Scalar::from_ratio(-2, 3)));
        let i2 = build_magnetic(Magnetic::IsospinSquared);
        assert_eq!(i2.apply(&a1).unwrap(), a1.scaled(&Scalar::from_ratio(3, 4)));
        // hypercharge equals (2/sqrt3) J^8
        let j8 = build_generator(Group::Total, 8);
        let scale = Scalar::sqrt3().scale(&crate::scalar::rational(2, 3));
        for mono in crate::fock::basis::monomials_up_to(2) {
            let s = StateVector::monomial(mono);
            assert_eq!(j8.apply(&s).unwrap().scaled(&scale), y.apply(&s).unwrap());
        }
    }

    #[test]
    fn raising_operators_shift_weights() {
        let tp = isospin_raising();
        let up = uspin_raising();
        let a2 = one(Family::A, 2);
        assert_eq!(tp.apply(&a2).unwrap(), one(Family::A, 1));
        let a3 = one(Family::A, 3);
        assert_eq!(up.apply(&a3).unwrap(), one(Family::A, 2));
        // anti-triplet: T+ b+^1|0> = -b+^2|0>
        assert_eq!(tp.apply(&one(Family::B, 1)).unwrap(), one(Family::B, 2).scaled(&Scalar::from_int(-1)));
    }
}
