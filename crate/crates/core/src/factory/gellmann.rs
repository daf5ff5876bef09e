use std::sync::OnceLock;

use crate::fock::Matrix;
use crate::scalar::Scalar;

/// The eight Gell-Mann matrices in the standard basis.
#[derive(Clone, Debug)]
pub struct GellMannTable {
    matrices: [Matrix; 8],
}

fn m3(entries: [[Scalar; 3]; 3]) -> Matrix {
    Matrix::from_rows(entries.into_iter().map(|r| r.into_iter().collect()).collect())
}

impl GellMannTable {
    fn build() -> Self {
        let o = Scalar::zero;
        let one = Scalar::one;
        let i = Scalar::i;
        let ni = || -Scalar::i();
        let r3_3 = Scalar::sqrt3().scale(&crate::scalar::rational(1, 3));
        let matrices = [
            m3([[o(), one(), o()], [one(), o(), o()], [o(), o(), o()]]),
            m3([[o(), ni(), o()], [i(), o(), o()], [o(), o(), o()]]),
            m3([[one(), o(), o()], [o(), -one(), o()], [o(), o(), o()]]),
            m3([[o(), o(), one()], [o(), o(), o()], [one(), o(), o()]]),
            m3([[o(), o(), ni()], [o(), o(), o()], [i(), o(), o()]]),
            m3([[o(), o(), o()], [o(), o(), one()], [o(), one(), o()]]),
            m3([[o(), o(), o()], [o(), o(), ni()], [o(), i(), o()]]),
            m3([
                [r3_3.clone(), o(), o()],
                [o(), r3_3.clone(), o()],
                [o(), o(), r3_3.scale(&crate::scalar::rational(-2, 1))],
            ]),
        ];
        GellMannTable { matrices }
    }

    /// The shared table; its defining properties are checked on first use.
    pub fn get() -> &'static GellMannTable {
        static TABLE: OnceLock<GellMannTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let t = GellMannTable::build();
            if let Err(msg) = t.check() {
                panic!("Gell-Mann table inconsistent: {msg}");
            }
            t
        })
    }

    /// `lambda^a` for `a` in 1..=8.
    pub fn lambda(&self, a: usize) -> &Matrix {
        &self.matrices[a - 1]
    }

    /// Hermitian, traceless and `Tr(lambda^a lambda^b) = 2 delta^{ab}`.
    pub fn check(&self) -> Result<(), String> {
        for (k, m) in self.matrices.iter().enumerate() {
            if m.conj_transpose() != *m {
                return Err(format!("lambda{} not hermitian", k + 1));
            }
            let tr = (0..3).fold(Scalar::zero(), |acc, d| &acc + &m[(d, d)]);
            if !tr.is_zero() {
                return Err(format!("lambda{} not traceless", k + 1));
            }
        }
        for a in 0..8 {
            for b in 0..8 {
                let p = self.matrices[a].matmul(&self.matrices[b]);
                let tr = (0..3).fold(Scalar::zero(), |acc, d| &acc + &p[(d, d)]);
                let want = if a == b { Scalar::from_int(2) } else { Scalar::zero() };
                if tr != want {
                    return Err(format!("Tr(lambda{} lambda{}) = {tr}", a + 1, b + 1));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_is_consistent() {
        assert!(GellMannTable::get().check().is_ok());
    }

    #[test]
    fn su2_subalgebra() {
        // [lambda1/2, lambda2/2] = i lambda3/2
        let t = GellMannTable::get();
        let half = Scalar::from_ratio(1, 2);
        let (l1, l2, l3) = (t.lambda(1).scaled(&half), t.lambda(2).scaled(&half), t.lambda(3).scaled(&half));
        let comm = l1.matmul(&l2).sub(&l2.matmul(&l1));
        assert_eq!(comm, l3.scaled(&Scalar::i()));
    }
}
