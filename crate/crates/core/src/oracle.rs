//! Tensor-product decomposition from characters alone.
//!
//! Weight multiplicities come from Freudenthal's recursion in integer
//! Dynkin coordinates; products are pointwise convolutions of weight
//! systems followed by peel-off of highest weights. Nothing here touches
//! the Fock-space code.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labels::{IrrepLabel, Weight};

pub fn dim(label: IrrepLabel) -> u64 {
    label.dim()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub irrep: IrrepLabel,
    pub multiplicities: BTreeMap<Weight, u64>,
}

impl WeightSystem {
    pub fn total(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    pub fn multiplicity(&self, w: Weight) -> u64 {
        self.multiplicities.get(&w).copied().unwrap_or(0)
    }

    /// Multiplicity is constant on every Weyl orbit.
    pub fn is_weyl_symmetric(&self) -> bool {
        self.multiplicities.iter().all(|(&w, &m)| {
            let (a, b) = w.to_dynkin().expect("lattice weight");
            weyl_orbit(a, b)
                .into_iter()
                .all(|(x, y)| self.multiplicity(Weight::from_dynkin(x, y)) == m)
        })
    }
}

type Dynkin = (i32, i32);

const POSITIVE_ROOTS: [Dynkin; 3] = [(2, -1), (-1, 2), (1, 1)];
const RHO: Dynkin = (1, 1);

/// Three times the Killing-normalized inner product.
fn ip3(x: Dynkin, y: Dynkin) -> i64 {
    let (a, b, c, d) = (x.0 as i64, x.1 as i64, y.0 as i64, y.1 as i64);
    2 * a * c + a * d + b * c + 2 * b * d
}

fn s1((a, b): Dynkin) -> Dynkin {
    (-a, a + b)
}

fn s2((a, b): Dynkin) -> Dynkin {
    (a + b, -b)
}

fn weyl_orbit(a: i32, b: i32) -> Vec<Dynkin> {
    let w = (a, b);
    vec![w, s1(w), s2(w), s1(s2(w)), s2(s1(w)), s1(s2(s1(w)))]
}

fn dominant_conjugate(mut w: Dynkin) -> Dynkin {
    loop {
        if w.0 < 0 {
            w = s1(w);
        } else if w.1 < 0 {
            w = s2(w);
        } else {
            return w;
        }
    }
}

/// `hw - w` as a non-negative integer combination of simple roots.
fn below(hw: Dynkin, w: Dynkin) -> bool {
    let (da, db) = (hw.0 - w.0, hw.1 - w.1);
    let (k1, k2) = (2 * da + db, da + 2 * db);
    k1 >= 0 && k2 >= 0 && k1 % 3 == 0 && k2 % 3 == 0
}

fn freudenthal(label: IrrepLabel) -> WeightSystem {
    let hw = (label.p as i32, label.q as i32);
    let depth = (label.p + label.q) as i32;
    let shifted = |w: Dynkin| (w.0 + RHO.0, w.1 + RHO.1);
    let top = ip3(shifted(hw), shifted(hw));
    let mut mult: HashMap<Dynkin, i64> = HashMap::new();
    for level in 0..=2 * depth {
        for k1 in 0..=level.min(depth) {
            let k2 = level - k1;
            if k2 > depth {
                continue;
            }
            let w = (hw.0 - 2 * k1 + k2, hw.1 + k1 - 2 * k2);
            if !below(hw, dominant_conjugate(w)) {
                continue;
            }
            if w == hw {
                mult.insert(w, 1);
                continue;
            }
            let mut num = 0i64;
            for alpha in POSITIVE_ROOTS {
                for k in 1..=2 * depth + 2 {
                    let up = (w.0 + k * alpha.0, w.1 + k * alpha.1);
                    if let Some(&m) = mult.get(&up) {
                        num += m * ip3(up, alpha);
                    }
                }
            }
            let den = top - ip3(shifted(w), shifted(w));
            assert!(den > 0 && (2 * num) % den == 0, "Freudenthal step at {w:?} for {label}");
            let m = 2 * num / den;
            if m > 0 {
                mult.insert(w, m);
            }
        }
    }
    WeightSystem {
        irrep: label,
        multiplicities: mult
            .into_iter()
            .map(|((a, b), m)| (Weight::from_dynkin(a, b), m as u64))
            .collect(),
    }
}

/// Weight system of `(p, q)`, cached.
pub fn weight_system(label: IrrepLabel) -> Arc<WeightSystem> {
    static CACHE: OnceLock<RwLock<HashMap<IrrepLabel, Arc<WeightSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(ws) = cache.read().expect("cache lock").get(&label) {
        return Arc::clone(ws);
    }
    let ws = Arc::new(freudenthal(label));
    cache
        .write()
        .expect("cache lock")
        .entry(label)
        .or_insert(ws)
        .clone()
}

/// Outer multiplicities of `l1 x l2`, keyed by label.
pub fn tensor_decompose(l1: IrrepLabel, l2: IrrepLabel) -> Result<BTreeMap<IrrepLabel, u64>> {
    let (w1, w2) = (weight_system(l1), weight_system(l2));
    let mut table: BTreeMap<Weight, i64> = BTreeMap::new();
    for (&x, &m) in &w1.multiplicities {
        for (&y, &n) in &w2.multiplicities {
            *table.entry(x + y).or_insert(0) += (m * n) as i64;
        }
    }
    let mut out = BTreeMap::new();
    loop {
        table.retain(|_, m| *m != 0);
        let Some((&w, &m)) = table
            .iter()
            .max_by_key(|(w, _)| ((w.two_i3 + w.three_y) / 2, w.two_i3))
        else {
            break;
        };
        let (a, b) = w.to_dynkin().expect("lattice weight");
        if m < 0 {
            return Err(Error::NegativeMultiplicity {
                two_i3: w.two_i3,
                three_y: w.three_y,
            });
        }
        if a < 0 || b < 0 {
            return Err(Error::NonDominant {
                two_i3: w.two_i3,
                three_y: w.three_y,
            });
        }
        let label = IrrepLabel::new(a as u32, b as u32);
        for (&x, &k) in &weight_system(label).multiplicities {
            *table.entry(x).or_insert(0) -= m * k as i64;
        }
        out.insert(label, m as u64);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleTerm {
    pub p: u32,
    pub q: u32,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub factors: [[u32; 2]; 2],
    pub terms: Vec<OracleTerm>,
    pub dimension_check: bool,
}

pub fn oracle_report(l1: IrrepLabel, l2: IrrepLabel) -> Result<OracleReport> {
    let terms = tensor_decompose(l1, l2)?;
    let total: u64 = terms.iter().map(|(l, m)| l.dim() * m).sum();
    Ok(OracleReport {
        factors: [[l1.p, l1.q], [l2.p, l2.q]],
        terms: terms
            .into_iter()
            .map(|(l, m)| OracleTerm {
                p: l.p,
                q: l.q,
                multiplicity: m,
            })
            .collect(),
        dimension_check: total == l1.dim() * l2.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn l(p: u32, q: u32) -> IrrepLabel {
        IrrepLabel::new(p, q)
    }

    #[test]
    fn triplet_weights() {
        let ws = weight_system(l(1, 0));
        let want: BTreeMap<Weight, u64> = [(1, 1), (-1, 1), (0, -2)]
            .into_iter()
            .map(|(t, y)| (Weight::new(t, y), 1))
            .collect();
        assert_eq!(ws.multiplicities, want);
    }

    #[test]
    fn octet_and_singlet_weights() {
        let ws = weight_system(l(1, 1));
        assert_eq!(ws.multiplicities.len(), 7);
        assert_eq!(ws.multiplicity(Weight::new(0, 0)), 2);
        assert_eq!(ws.total(), 8);
        let one = weight_system(l(0, 0));
        assert_eq!(one.multiplicities.len(), 1);
        assert_eq!(one.multiplicity(Weight::new(0, 0)), 1);
        assert_eq!(weight_system(l(2, 2)).total(), 27);
        assert_eq!(weight_system(l(2, 2)).multiplicity(Weight::new(0, 0)), 3);
    }

    #[test]
    fn clebsch_gordan_series() {
        let got = tensor_decompose(l(1, 1), l(1, 1)).unwrap();
        let want: BTreeMap<_, _> = [(l(0, 0), 1), (l(1, 1), 2), (l(3, 0), 1), (l(0, 3), 1), (l(2, 2), 1)]
            .into_iter()
            .collect();
        assert_eq!(got, want);
        let got = tensor_decompose(l(1, 0), l(0, 1)).unwrap();
        assert_eq!(got, [(l(0, 0), 1), (l(1, 1), 1)].into_iter().collect());
        let got = tensor_decompose(l(1, 0), l(1, 0)).unwrap();
        assert_eq!(got, [(l(2, 0), 1), (l(0, 1), 1)].into_iter().collect());
    }

    #[test]
    fn report_json() {
        let r = oracle_report(l(1, 0), l(0, 1)).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"factors":[[1,0],[0,1]],"terms":[{"p":0,"q":0,"multiplicity":1},{"p":1,"q":1,"multiplicity":1}],"dimension_check":true}"#
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn weight_systems_are_consistent(p in 0u32..6, q in 0u32..6) {
            let ws = weight_system(l(p, q));
            prop_assert_eq!(ws.total(), dim(l(p, q)));
            prop_assert!(ws.is_weyl_symmetric());
            prop_assert_eq!(ws.multiplicity(l(p, q).highest_weight()), 1);
        }

        #[test]
        fn products_are_consistent(p1 in 0u32..4, q1 in 0u32..4, p2 in 0u32..4, q2 in 0u32..4) {
            let (a, b) = (l(p1, q1), l(p2, q2));
            let ab = tensor_decompose(a, b).unwrap();
            let total: u64 = ab.iter().map(|(x, m)| x.dim() * m).sum();
            prop_assert_eq!(total, a.dim() * b.dim());
            prop_assert_eq!(&ab, &tensor_decompose(b, a).unwrap());
            let conj: BTreeMap<_, _> = tensor_decompose(a.conjugate(), b.conjugate())
                .unwrap()
                .into_iter()
                .map(|(x, m)| (x.conjugate(), m))
                .collect();
            prop_assert_eq!(&ab, &conj);
            for x in ab.keys() {
                prop_assert_eq!(x.triality(), (a.triality() + b.triality()) % 3);
            }
        }
    }
}
