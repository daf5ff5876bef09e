//! The fifteen so(4,2) generators `L_{mu nu}` and the three Casimirs.
//!
//! The doublets are `X = (a, c)` and `Y = (b, d)` (sigma = 1, 2), with
//! `Y~^sigma = eps^{sigma sigma'} Y^{sigma'}`, `eps^{12} = +1`. Writing
//! `S^X_k = Tr(X+ sigma^k X)` and `S^Y_k` likewise, the generators expand
//! into invariant bilinears as recorded in [`LCombinationTable`]. The
//! phases of the `Y~` pieces are fixed by requiring hermiticity and closure
//! of the so(4,2) commutation relations with metric `(+ + + + - -)`.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use super::invariants::{build_invariant, InvariantKind, KPair, KappaPair, Part};
use crate::error::{Error, Result};
use crate::fock::LinearOperator;
use crate::scalar::Scalar;

/// Index convention of the doublets; documentation only.
pub struct PairArrangement;

impl PairArrangement {
    pub const X: [char; 2] = ['a', 'c'];
    pub const Y: [char; 2] = ['b', 'd'];
    /// `eps^{12}` used for the tilde companion of `Y`.
    pub const EPSILON_12: i32 = 1;
}

/// `g = diag(+1, +1, +1, +1, -1, -1)`.
pub struct MetricSignature;

impl MetricSignature {
    pub const DIAGONAL: [i32; 6] = [1, 1, 1, 1, -1, -1];

    /// `g_{mu mu}` for `mu` in 1..=6.
    pub fn g(mu: usize) -> i32 {
        Self::DIAGONAL[mu - 1]
    }
}

type Combination = Vec<(Scalar, InvariantKind)>;

fn kappa(p: KappaPair, part: Part) -> InvariantKind {
    InvariantKind::Kappa(p, part)
}

fn k(p: KPair, part: Part) -> InvariantKind {
    InvariantKind::K(p, part)
}

fn scale(c: &Combination, s: &Scalar) -> Combination {
    c.iter().map(|(x, kind)| (x * s, *kind)).collect()
}

fn add(a: &Combination, b: &Combination) -> Combination {
    a.iter().chain(b.iter()).cloned().collect()
}

fn dagger(c: &Combination) -> Combination {
    c.iter().map(|(x, kind)| (x.conj(), kind.adjoint())).collect()
}

/// `S_k = Tr(Z+ sigma^k Z)` for the doublet carried by `p`, k in 1..=3.
fn spin(p: KappaPair, k_idx: usize) -> Combination {
    let i = Scalar::i();
    match k_idx {
        1 => vec![(Scalar::one(), kappa(p, Part::Plus)), (Scalar::one(), kappa(p, Part::Minus))],
        2 => vec![(-&i, kappa(p, Part::Plus)), (i, kappa(p, Part::Minus))],
        _ => vec![(Scalar::one(), kappa(p, Part::Zero))],
    }
}

/// Pair-creation pieces `P_1, P_2, P_3` and `Q`.
fn pair_piece(which: usize) -> Combination {
    let one = Scalar::one();
    let i = Scalar::i();
    match which {
        1 => vec![(-&one, k(KPair::AB, Part::Plus)), (one, k(KPair::CD, Part::Plus))],
        2 => vec![(i.clone(), k(KPair::AB, Part::Plus)), (i, k(KPair::CD, Part::Plus))],
        3 => vec![(one.clone(), k(KPair::AD, Part::Plus)), (one, k(KPair::BC, Part::Plus))],
        _ => vec![(one.clone(), k(KPair::AD, Part::Plus)), (-&one, k(KPair::BC, Part::Plus))],
    }
}

fn levi_civita3(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (1, 3, 2) | (3, 2, 1) | (2, 1, 3) => -1,
        _ => 0,
    }
}

/// Expansion of each `L_{mu nu}` (`mu < nu`) over the invariant kinds.
pub struct LCombinationTable {
    rows: Vec<((usize, usize), Combination)>,
}

impl LCombinationTable {
    fn build() -> Self {
        let half = Scalar::from_ratio(1, 2);
        let neg_half = Scalar::from_ratio(-1, 2);
        let neg_i_half = Scalar::i().scale(&crate::scalar::rational(-1, 2));
        let mut rows = Vec::new();
        let total_spin = |kk: usize| add(&spin(KappaPair::AC, kk), &spin(KappaPair::BD, kk));
        for i in 1..=3 {
            for j in i + 1..=3 {
                let kk = 6 - i - j;
                let c = scale(&total_spin(kk), &half.scale(&crate::scalar::rational(levi_civita3(i, j, kk), 1)));
                rows.push(((i, j), c));
            }
        }
        for i in 1..=3 {
            let diff = add(
                &spin(KappaPair::AC, i),
                &scale(&spin(KappaPair::BD, i), &Scalar::from_int(-1)),
            );
            rows.push(((i, 4), scale(&diff, &neg_half)));
        }
        for i in 1..=3 {
            let p = pair_piece(i);
            let pd = dagger(&p);
            rows.push(((i, 5), scale(&add(&p, &pd), &neg_half)));
            let diff = add(&p, &scale(&pd, &Scalar::from_int(-1)));
            rows.push(((i, 6), scale(&diff, &neg_i_half)));
        }
        let q = pair_piece(4);
        let qd = dagger(&q);
        rows.push((
            (4, 5),
            scale(&add(&q, &scale(&qd, &Scalar::from_int(-1))), &neg_i_half),
        ));
        rows.push(((4, 6), scale(&add(&q, &qd), &half)));
        rows.push((
            (5, 6),
            vec![
                (half.clone(), k(KPair::AB, Part::Zero)),
                (half, k(KPair::CD, Part::Zero)),
            ],
        ));
        rows.sort_by_key(|(ix, _)| *ix);
        LCombinationTable { rows }
    }

    pub fn get() -> &'static LCombinationTable {
        static TABLE: OnceLock<LCombinationTable> = OnceLock::new();
        TABLE.get_or_init(LCombinationTable::build)
    }

    /// Coefficients of `L_{mu nu}`, `mu < nu`.
    pub fn combination(&self, mu: usize, nu: usize) -> &[(Scalar, InvariantKind)] {
        &self
            .rows
            .iter()
            .find(|(ix, _)| *ix == (mu, nu))
            .expect("index pair present")
            .1
    }

    pub fn rows(&self) -> impl Iterator<Item = ((usize, usize), &[(Scalar, InvariantKind)])> {
        self.rows.iter().map(|(ix, c)| (*ix, c.as_slice()))
    }
}

/// The fifteen `(mu, nu)` with `mu < nu`, in lexicographic order.
pub fn generator_pairs() -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(15);
    for mu in 1..=6 {
        for nu in mu + 1..=6 {
            out.push((mu, nu));
        }
    }
    out
}

fn build_l_ordered(mu: usize, nu: usize) -> LinearOperator {
    let mut out = LinearOperator::zero();
    for (c, kind) in LCombinationTable::get().combination(mu, nu) {
        out = out.plus(&build_invariant(*kind).scaled(c));
    }
    out
}

/// `L_{mu nu}`, antisymmetric in its indices.
pub fn build_l(mu: usize, nu: usize) -> Result<LinearOperator> {
    if !(1..=6).contains(&mu) || !(1..=6).contains(&nu) || mu == nu {
        return Err(Error::InvalidIndex(mu, nu));
    }
    Ok(if mu < nu {
        build_l_ordered(mu, nu)
    } else {
        build_l_ordered(nu, mu).scaled(&Scalar::from_int(-1))
    })
}

/// Shared `L_{mu nu}` for all ordered pairs, `None` on the diagonal.
pub struct GeneratorSet {
    ops: [[Option<Arc<LinearOperator>>; 6]; 6],
}

impl GeneratorSet {
    pub fn get() -> &'static GeneratorSet {
        static SET: OnceLock<GeneratorSet> = OnceLock::new();
        SET.get_or_init(|| {
            let mut ops: [[Option<Arc<LinearOperator>>; 6]; 6] = Default::default();
            for (mu, nu) in generator_pairs() {
                let l = Arc::new(build_l_ordered(mu, nu));
                ops[nu - 1][mu - 1] = Some(Arc::new(l.scaled(&Scalar::from_int(-1))));
                ops[mu - 1][nu - 1] = Some(l);
            }
            GeneratorSet { ops }
        })
    }

    pub fn l(&self, mu: usize, nu: usize) -> &Arc<LinearOperator> {
        self.ops[mu - 1][nu - 1]
            .as_ref()
            .expect("off-diagonal generator index")
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CasimirOrder {
    Two,
    Three,
    Four,
}

impl CasimirOrder {
    pub fn degree(self) -> u32 {
        match self {
            CasimirOrder::Two => 2,
            CasimirOrder::Three => 3,
            CasimirOrder::Four => 4,
        }
    }
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Casimir operators of so(4,2), indices raised with [`MetricSignature`].
/// Products are kept unexpanded.
pub fn build_casimir(order: CasimirOrder) -> LinearOperator {
    let set = GeneratorSet::get();
    let g = |m: usize| MetricSignature::g(m) as i64;
    let mut out = LinearOperator::zero();
    match order {
        CasimirOrder::Two => {
            // L_{mu nu} L^{mu nu} over all ordered pairs = 2 sum_{mu<nu}
            for (mu, nu) in generator_pairs() {
                let l = set.l(mu, nu);
                let c = Scalar::from_int(2 * g(mu) * g(nu));
                out = out.plus(&LinearOperator::chain(&[Arc::clone(l), Arc::clone(l)]).scaled(&c));
            }
        }
        CasimirOrder::Three => {
            // eps L^{..} L^{..} L^{..}: each ordered triple of disjoint
            // increasing pairs stands for 8 permutations of equal sign; the
            // metric factors multiply to prod_mu g_mu = +1.
            let pairs = generator_pairs();
            for &(m1, n1) in &pairs {
                for &(m2, n2) in &pairs {
                    for &(m3, n3) in &pairs {
                        let idx = [m1, n1, m2, n2, m3, n3];
                        let mut seen = [false; 7];
                        if idx.iter().any(|&x| std::mem::replace(&mut seen[x], true)) {
                            continue;
                        }
                        let metric: i64 = idx.iter().map(|&x| g(x)).product();
                        let c = Scalar::from_int(8 * permutation_sign(&idx) * metric);
                        let chain = LinearOperator::chain(&[
                            Arc::clone(set.l(m1, n1)),
                            Arc::clone(set.l(m2, n2)),
                            Arc::clone(set.l(m3, n3)),
                        ]);
                        out = out.plus(&chain.scaled(&c));
                    }
                }
            }
        }
        CasimirOrder::Four => {
            // L_{mu nu} L^{nu rho} L_{rho sigma} L^{sigma mu}
            for mu in 1..=6 {
                for nu in 1..=6 {
                    for rho in 1..=6 {
                        for sigma in 1..=6 {
                            if mu == nu || nu == rho || rho == sigma || sigma == mu {
                                continue;
                            }
                            let metric = g(nu) * g(rho) * g(sigma) * g(mu);
                            let chain = LinearOperator::chain(&[
                                Arc::clone(set.l(mu, nu)),
                                Arc::clone(set.l(nu, rho)),
                                Arc::clone(set.l(rho, sigma)),
                                Arc::clone(set.l(sigma, mu)),
                            ]);
                            out = out.plus(&chain.scaled(&Scalar::from_int(metric)));
                        }
                    }
                }
            }
        }
    }
    out
}
