//! Constrained product spaces, highest-weight multiplicity spaces and their
//! resolution by the spectrum of `C4'`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::factory::{
    build_c4prime, build_casimir, build_invariant, build_isb, build_magnetic, isb_dot, isospin_raising,
    uspin_raising, C4PrimeCoefficients, CasimirOrder, InvariantKind, IsbKind, KPair, Magnetic, Part,
};
use crate::fock::{
    generalized_eigen, gram_inner, ApplyCache, EigenSpace, EigenValue, Family, LinearOperator, Matrix, SectorBasis,
    StateVector,
};
use crate::labels::{IrrepLabel, Weight};
use crate::oracle::tensor_decompose;
use crate::scalar::{format_rational, Scalar};
use crate::verify::{Counterexample, Status, VerificationReport};

/// Combinations of `vectors` annihilated by every operator in `ops`.
pub fn common_kernel(vectors: &[StateVector], ops: &[&LinearOperator]) -> Result<Vec<StateVector>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let mut rows: BTreeMap<(usize, crate::fock::FockMonomial), Vec<Scalar>> = BTreeMap::new();
    for (j, v) in vectors.iter().enumerate() {
        for (k, op) in ops.iter().enumerate() {
            for (m, c) in op.apply(v)?.iter() {
                rows.entry((k, *m))
                    .or_insert_with(|| vec![Scalar::zero(); vectors.len()])[j] = c.clone();
            }
        }
    }
    if rows.is_empty() {
        return Ok(vectors.to_vec());
    }
    let m = Matrix::from_rows(rows.into_values().collect());
    Ok(m.nullspace()
        .into_iter()
        .map(|coords| {
            let mut out = StateVector::zero();
            for (c, v) in coords.iter().zip(vectors) {
                out.add_scaled(v, c);
            }
            out
        })
        .collect())
}

/// Joint kernel of `k-(ab)` and `k-(cd)` in the sector `(p1, q1, p2, q2)`,
/// split by weight.
#[derive(Clone, Debug)]
pub struct ConstrainedBasis {
    pub factors: (IrrepLabel, IrrepLabel),
    blocks: BTreeMap<Weight, Vec<StateVector>>,
}

impl ConstrainedBasis {
    pub fn counts(&self) -> [u32; 4] {
        let (a, b) = self.factors;
        [a.p, a.q, b.p, b.q]
    }

    pub fn len(&self) -> usize {
        self.blocks.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn blocks(&self) -> &BTreeMap<Weight, Vec<StateVector>> {
        &self.blocks
    }

    pub fn at_weight(&self, w: Weight) -> &[StateVector] {
        self.blocks.get(&w).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn vectors(&self) -> impl Iterator<Item = &StateVector> {
        self.blocks.values().flatten()
    }
}

fn constraints() -> [LinearOperator; 2] {
    [
        build_invariant(InvariantKind::K(KPair::AB, Part::Minus)),
        build_invariant(InvariantKind::K(KPair::CD, Part::Minus)),
    ]
}

pub fn constrained_basis(l1: IrrepLabel, l2: IrrepLabel) -> Result<ConstrainedBasis> {
    let sector = SectorBasis::checked([l1.p, l1.q, l2.p, l2.q])?;
    let mut by_weight: BTreeMap<Weight, Vec<StateVector>> = BTreeMap::new();
    for m in sector.monomials() {
        let (t, y) = m.weight();
        by_weight.entry(Weight::new(t, y)).or_default().push(StateVector::monomial(*m));
    }
    let [kab, kcd] = constraints();
    let blocks = by_weight
        .into_par_iter()
        .map(|(w, monos)| common_kernel(&monos, &[&kab, &kcd]).map(|k| (w, k)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, k)| !k.is_empty())
        .collect();
    Ok(ConstrainedBasis {
        factors: (l1, l2),
        blocks,
    })
}

/// Constrained states of weight `target.highest_weight()` killed by the
/// total `T+` and `U+`. Their number is the outer multiplicity of `target`.
pub fn highest_weight_space(basis: &ConstrainedBasis, target: IrrepLabel) -> Result<Vec<StateVector>> {
    let at = basis.at_weight(target.highest_weight());
    common_kernel(at, &[&isospin_raising(), &uspin_raising()])
}

/// Labels that can occur in the product: bounded box count, matching
/// triality.
pub fn candidates(l1: IrrepLabel, l2: IrrepLabel) -> Vec<IrrepLabel> {
    let bound = l1.p + l1.q + l2.p + l2.q;
    let tri = (l1.triality() + l2.triality()) % 3;
    IrrepLabel::all_up_to(bound)
        .into_iter()
        .filter(|l| l.triality() == tri)
        .collect()
}

/// `<v_i | op v_j>`.
pub fn matrix_elements(op: &LinearOperator, vectors: &[StateVector]) -> Result<Matrix> {
    let images = vectors.iter().map(|v| op.apply(v)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(
        vectors
            .iter()
            .map(|u| images.iter().map(|img| gram_inner(u, img)).collect())
            .collect(),
    ))
}

pub fn gram_matrix(vectors: &[StateVector]) -> Matrix {
    Matrix::from_rows(
        vectors
            .iter()
            .map(|u| vectors.iter().map(|v| gram_inner(u, v)).collect())
            .collect(),
    )
}

fn combine(coords: &[Scalar], vectors: &[StateVector]) -> StateVector {
    let mut out = StateVector::zero();
    for (c, v) in coords.iter().zip(vectors) {
        out.add_scaled(v, c);
    }
    out
}

/// Highest-weight space of one coupled irrep with its `C4'` spectrum.
#[derive(Clone, Debug)]
pub struct MultiplicitySpace {
    pub label: IrrepLabel,
    pub vectors: Vec<StateVector>,
    pub gram: Matrix,
    pub c4prime: Matrix,
    pub spectrum: Vec<EigenSpace>,
}

impl MultiplicitySpace {
    pub fn multiplicity(&self) -> usize {
        self.vectors.len()
    }

    /// Eigenvalues with repetition, largest first.
    pub fn eigenvalues(&self) -> Vec<EigenValue> {
        let mut out: Vec<EigenValue> = self
            .spectrum
            .iter()
            .flat_map(|s| std::iter::repeat(s.value.clone()).take(s.multiplicity))
            .collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    pub fn report_labels(&self) -> Vec<String> {
        self.eigenvalues().iter().map(EigenValue::label).collect()
    }

    pub fn is_distinct(&self) -> bool {
        self.spectrum.iter().all(|s| s.multiplicity == 1)
    }

    /// Exact eigenvectors as Fock states, one list per eigenvalue.
    pub fn eigenvectors(&self) -> Vec<(EigenValue, Vec<StateVector>)> {
        self.spectrum
            .iter()
            .map(|s| {
                let vs = s.vectors.iter().map(|c| combine(c, &self.vectors)).collect();
                (s.value.clone(), vs)
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionTerm {
    pub p: u32,
    pub q: u32,
    pub multiplicity: usize,
    pub c4prime_eigenvalues: Vec<String>,
    pub exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub digits: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub factors: [[u32; 2]; 2],
    pub terms: Vec<DecompositionTerm>,
    pub dimension_check: bool,
    pub oracle_agreement: bool,
}

impl DecompositionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, ParseError> {
        serde_json::from_str(s).map_err(|e| ParseError::Json(e.to_string()))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("p,q,multiplicity,c4prime_eigenvalues,exact\n");
        for t in &self.terms {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                t.p,
                t.q,
                t.multiplicity,
                t.c4prime_eigenvalues.join(";"),
                t.exact
            );
        }
        out
    }

    pub fn multiplicities(&self) -> BTreeMap<IrrepLabel, u64> {
        self.terms
            .iter()
            .map(|t| (IrrepLabel::new(t.p, t.q), t.multiplicity as u64))
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.dimension_check && self.oracle_agreement
    }
}

/// A decomposition together with the spaces it was read from.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub report: DecompositionReport,
    pub spaces: Vec<MultiplicitySpace>,
    pub coefficients: C4PrimeCoefficients,
}

impl Resolution {
    /// Multiplicity spaces whose `C4'` spectrum repeats a value.
    pub fn degeneracies(&self) -> Vec<IrrepLabel> {
        self.spaces.iter().filter(|s| !s.is_distinct()).map(|s| s.label).collect()
    }

    pub fn space(&self, label: IrrepLabel) -> Option<&MultiplicitySpace> {
        self.spaces.iter().find(|s| s.label == label)
    }
}

pub fn resolve_space(
    basis: &ConstrainedBasis,
    target: IrrepLabel,
    c4: &LinearOperator,
) -> Result<Option<MultiplicitySpace>> {
    let vectors = highest_weight_space(basis, target)?;
    if vectors.is_empty() {
        return Ok(None);
    }
    let gram = gram_matrix(&vectors);
    let c4prime = matrix_elements(c4, &vectors)?;
    let spectrum = generalized_eigen(&c4prime, &gram)?;
    Ok(Some(MultiplicitySpace {
        label: target,
        vectors,
        gram,
        c4prime,
        spectrum,
    }))
}

fn term_of(space: &MultiplicitySpace) -> DecompositionTerm {
    let values = space.eigenvalues();
    let exact = values.iter().all(EigenValue::is_exact);
    let digits = values.iter().find_map(|v| match v {
        EigenValue::Approximate { digits, .. } => Some(*digits),
        EigenValue::Exact(_) => None,
    });
    DecompositionTerm {
        p: space.label.p,
        q: space.label.q,
        multiplicity: space.multiplicity(),
        c4prime_eigenvalues: values.iter().map(EigenValue::label).collect(),
        exact,
        digits,
    }
}

pub fn resolve_detailed(l1: IrrepLabel, l2: IrrepLabel, coeffs: &C4PrimeCoefficients) -> Result<Resolution> {
    let basis = constrained_basis(l1, l2)?;
    let c4 = build_c4prime(coeffs);
    let spaces: Vec<MultiplicitySpace> = candidates(l1, l2)
        .into_par_iter()
        .map(|target| resolve_space(&basis, target, &c4))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let terms: Vec<DecompositionTerm> = spaces.iter().map(term_of).collect();
    let total: u64 = spaces.iter().map(|s| s.label.dim() * s.multiplicity() as u64).sum();
    let dimension_check = total == l1.dim() * l2.dim() && basis.len() as u64 == total;
    let mut report = DecompositionReport {
        factors: [[l1.p, l1.q], [l2.p, l2.q]],
        terms,
        dimension_check,
        oracle_agreement: false,
    };
    report.oracle_agreement = report.multiplicities() == tensor_decompose(l1, l2)?;
    Ok(Resolution {
        report,
        spaces,
        coefficients: coeffs.clone(),
    })
}

pub fn resolve(l1: IrrepLabel, l2: IrrepLabel, coeffs: &C4PrimeCoefficients) -> Result<DecompositionReport> {
    resolve_detailed(l1, l2, coeffs).map(|r| r.report)
}

/// `(A+ . D+) C+_al B+^be |0>  +  x (B+ . C+) A+_al D+^be |0>`.
pub fn octet_state(alpha: u8, beta: u8, x: &Scalar) -> Result<StateVector> {
    let vac = StateVector::vacuum();
    let first = {
        let s = build_isb(IsbKind::BDag, beta).apply(&vac)?;
        let s = build_isb(IsbKind::CDag, alpha).apply(&s)?;
        isb_dot(IsbKind::ADag, IsbKind::DDag).apply(&s)?
    };
    let second = {
        let s = build_isb(IsbKind::DDag, beta).apply(&vac)?;
        let s = build_isb(IsbKind::ADag, alpha).apply(&s)?;
        isb_dot(IsbKind::BDag, IsbKind::CDag).apply(&s)?
    };
    let mut out = first;
    out.add_scaled(&second, x);
    Ok(out)
}

pub const FIXTURE_ALPHA: u8 = 1;
pub const FIXTURE_BETA: u8 = 3;

/// The two octet states, their `C4'` eigenvalues and the swap behaviour of
/// the symmetric and antisymmetric combinations.
#[derive(Clone, Debug)]
pub struct OctetFixture {
    pub octet: StateVector,
    pub octet_prime: StateVector,
    /// `C4'` eigenvalues of the two states, `None` if not an eigenvector.
    pub eigenvalues: [Option<Scalar>; 2],
    /// `<8|8'>`.
    pub overlap: Scalar,
    /// Eigenvalues of the combinations `(A+.D+)C+B+ +- (C+.B+)A+D+` under
    /// `a <-> c, b <-> d`.
    pub swap_signs: [Option<Scalar>; 2],
    /// The `x` for which `(A+.D+)C+B+|0> + x (B+.C+)A+D+|0>` has `C4'`
    /// eigenvalue zero, if one exists.
    pub zero_mode_coefficient: Option<Scalar>,
}

pub fn octet_fixture() -> Result<OctetFixture> {
    let c4 = build_c4prime(&C4PrimeCoefficients::default());
    let octet = octet_state(FIXTURE_ALPHA, FIXTURE_BETA, &Scalar::from_int(-4))?;
    let octet_prime = octet_state(FIXTURE_ALPHA, FIXTURE_BETA, &Scalar::from_ratio(-1, 2))?;
    let eig = |v: &StateVector| -> Result<Option<Scalar>> { Ok(c4.apply(v)?.ratio_to(v)) };
    let eigenvalues = [eig(&octet)?, eig(&octet_prime)?];
    let overlap = gram_inner(&octet, &octet_prime);
    let mut swap_signs = [None, None];
    for (slot, sign) in [(0, 1), (1, -1)] {
        let s = octet_state(FIXTURE_ALPHA, FIXTURE_BETA, &Scalar::from_int(sign))?;
        swap_signs[slot] = s.swap_pairs().ratio_to(&s);
    }
    let first = octet_state(FIXTURE_ALPHA, FIXTURE_BETA, &Scalar::zero())?;
    let second = &octet_state(FIXTURE_ALPHA, FIXTURE_BETA, &Scalar::one())? - &first;
    let zero_mode_coefficient = c4
        .apply(&first)?
        .ratio_to(&c4.apply(&second)?)
        .map(|r| -r);
    Ok(OctetFixture {
        octet,
        octet_prime,
        eigenvalues,
        overlap,
        swap_signs,
        zero_mode_coefficient,
    })
}

/// Checks `C4'|8> = 3/4 |8>`, `C4'|8'> = 0` and the swap signs `+1, -1`.
pub fn octet_fixture_check() -> Result<VerificationReport> {
    let f = octet_fixture()?;
    let c4 = build_c4prime(&C4PrimeCoefficients::default());
    let mut counterexample = None;
    let checks = [
        ("C4' |8> = 3/4 |8>", &f.octet, Scalar::from_ratio(3, 4)),
        ("C4' |8'> = 0", &f.octet_prime, Scalar::zero()),
    ];
    for (label, state, want) in checks {
        let lhs = c4.apply(state)?;
        let rhs = state.scaled(&want);
        if lhs != rhs {
            counterexample = Some(Counterexample {
                relation: label.to_string(),
                state: state.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
            break;
        }
    }
    if counterexample.is_none() {
        for (k, want) in [(0, 1), (1, -1)] {
            if f.swap_signs[k] != Some(Scalar::from_int(want)) {
                let s = octet_state(FIXTURE_ALPHA, FIXTURE_BETA, &Scalar::from_int(want))?;
                counterexample = Some(Counterexample {
                    relation: format!("swap sign {want:+}"),
                    state: s.to_string(),
                    lhs: s.swap_pairs().to_string(),
                    rhs: s.scaled(&Scalar::from_int(want)).to_string(),
                });
                break;
            }
        }
    }
    Ok(VerificationReport {
        identity: "octet fixture".to_string(),
        nmax: 4,
        interior_margin: 0,
        states_checked: 4,
        status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
        counterexample,
    })
}

/// The ten CSCO eigenvalues on one resolved highest-weight vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CSCOWitness {
    pub label: IrrepLabel,
    pub counts: [u32; 4],
    pub c2: Scalar,
    pub c3: Scalar,
    pub c4prime: Scalar,
    pub isospin_squared: Scalar,
    pub i3: Scalar,
    pub hypercharge: Scalar,
}

impl CSCOWitness {
    pub fn tuple(&self) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = self.counts.iter().map(|&n| Scalar::from_int(n as i64)).collect();
        out.extend([
            self.c2.clone(),
            self.c3.clone(),
            self.c4prime.clone(),
            self.isospin_squared.clone(),
            self.i3.clone(),
            self.hypercharge.clone(),
        ]);
        out
    }
}

/// Evaluates the ten operators on copy `copy` of term `term_index` and
/// checks that they commute pairwise on that vector.
pub fn csco_witness(resolution: &Resolution, term_index: usize, copy: usize) -> Result<CSCOWitness> {
    let space = resolution.spaces.get(term_index).ok_or(Error::NoSuchTerm(term_index))?;
    let vector = space
        .eigenvectors()
        .into_iter()
        .flat_map(|(_, vs)| vs)
        .nth(copy)
        .ok_or(Error::NoSuchTerm(term_index))?;
    let ops: Vec<(String, Arc<LinearOperator>)> = vec![
        ("Na".into(), Arc::new(LinearOperator::number(Family::A))),
        ("Nb".into(), Arc::new(LinearOperator::number(Family::B))),
        ("Nc".into(), Arc::new(LinearOperator::number(Family::C))),
        ("Nd".into(), Arc::new(LinearOperator::number(Family::D))),
        ("C2".into(), Arc::new(build_casimir(CasimirOrder::Two))),
        ("C3".into(), Arc::new(build_casimir(CasimirOrder::Three))),
        ("C4'".into(), Arc::new(build_c4prime(&resolution.coefficients))),
        ("I2".into(), Arc::new(build_magnetic(Magnetic::IsospinSquared))),
        ("I3".into(), Arc::new(build_magnetic(Magnetic::I3))),
        ("Y".into(), Arc::new(build_magnetic(Magnetic::Hypercharge))),
    ];
    let cache = ApplyCache::new();
    let mut values = Vec::with_capacity(ops.len());
    let mut images = Vec::with_capacity(ops.len());
    for (name, op) in &ops {
        let img = LinearOperator::chain(&[Arc::clone(op)]).apply_cached(&vector, &cache)?;
        values.push(img.ratio_to(&vector).ok_or_else(|| Error::NotEigenvector(name.clone()))?);
        images.push(img);
    }
    for x in 0..ops.len() {
        for y in x + 1..ops.len() {
            let xy = LinearOperator::chain(&[Arc::clone(&ops[x].1)]).apply_cached(&images[y], &cache)?;
            let yx = LinearOperator::chain(&[Arc::clone(&ops[y].1)]).apply_cached(&images[x], &cache)?;
            if xy != yx {
                return Err(Error::NotEigenvector(format!("[{}, {}]", ops[x].0, ops[y].0)));
            }
        }
    }
    let mut v = values.into_iter();
    let mut next = || v.next().expect("ten values");
    let counts = std::array::from_fn(|_| {
        next()
            .as_rational()
            .and_then(|r| num_traits::ToPrimitive::to_u32(&r.to_integer()))
            .expect("count eigenvalue")
    });
    Ok(CSCOWitness {
        label: space.label,
        counts,
        c2: next(),
        c3: next(),
        c4prime: next(),
        isospin_squared: next(),
        i3: next(),
        hypercharge: next(),
    })
}

/// Human-readable table of a decomposition.
pub fn render_text(report: &DecompositionReport) -> String {
    let [[p1, q1], [p2, q2]] = report.factors;
    let mut out = format!("({p1},{q1}) x ({p2},{q2})\n");
    for t in &report.terms {
        let _ = writeln!(
            out,
            "  ({},{})  dim {:>4}  x{}  C4' {{{}}}{}",
            t.p,
            t.q,
            IrrepLabel::new(t.p, t.q).dim(),
            t.multiplicity,
            t.c4prime_eigenvalues.join(", "),
            if t.exact { "" } else { "  (inexact)" }
        );
    }
    let _ = writeln!(
        out,
        "  dimension check: {}  oracle agreement: {}",
        report.dimension_check, report.oracle_agreement
    );
    out
}

/// Label of an exact rational used in reports.
pub fn rational_label(s: &Scalar) -> String {
    match s.as_rational() {
        Some(r) => format_rational(r),
        None => s.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factory::build_generator;
    use crate::factory::Group;

    fn l(p: u32, q: u32) -> IrrepLabel {
        IrrepLabel::new(p, q)
    }

    #[test]
    fn constrained_dimensions() {
        assert_eq!(constrained_basis(l(1, 0), l(0, 0)).unwrap().len(), 3);
        assert_eq!(constrained_basis(l(1, 1), l(0, 0)).unwrap().len(), 8);
        assert_eq!(constrained_basis(l(1, 1), l(1, 1)).unwrap().len(), 64);
        assert_eq!(constrained_basis(l(2, 1), l(0, 2)).unwrap().len(), 15 * 6);
    }

    #[test]
    fn constrained_vectors_are_traceless() {
        let basis = constrained_basis(l(1, 1), l(1, 1)).unwrap();
        let [kab, kcd] = constraints();
        for v in basis.vectors() {
            assert!(kab.apply(v).unwrap().is_zero());
            assert!(kcd.apply(v).unwrap().is_zero());
        }
    }

    #[test]
    fn highest_weight_counts() {
        let basis = constrained_basis(l(1, 1), l(1, 1)).unwrap();
        assert_eq!(highest_weight_space(&basis, l(2, 2)).unwrap().len(), 1);
        assert_eq!(highest_weight_space(&basis, l(1, 1)).unwrap().len(), 2);
        let basis = constrained_basis(l(1, 0), l(0, 1)).unwrap();
        assert_eq!(highest_weight_space(&basis, l(0, 0)).unwrap().len(), 1);
    }

    #[test]
    fn small_products() {
        let d = C4PrimeCoefficients::default();
        let r = resolve(l(1, 0), l(0, 1), &d).unwrap();
        assert_eq!(r.multiplicities(), [(l(0, 0), 1), (l(1, 1), 1)].into_iter().collect());
        assert!(r.terms.iter().all(|t| t.c4prime_eigenvalues.len() == 1));
        assert!(r.passed());
        let r = resolve(l(1, 0), l(1, 0), &d).unwrap();
        assert_eq!(r.multiplicities(), [(l(2, 0), 1), (l(0, 1), 1)].into_iter().collect());
        let r = resolve(l(0, 0), l(2, 1), &d).unwrap();
        assert_eq!(r.multiplicities(), [(l(2, 1), 1)].into_iter().collect());
        let r = resolve(l(0, 0), l(0, 0), &d).unwrap();
        assert_eq!(r.multiplicities(), [(l(0, 0), 1)].into_iter().collect());
    }

    #[test]
    fn c4prime_commutes_with_su3_on_constrained_space() {
        let basis = constrained_basis(l(1, 1), l(1, 0)).unwrap();
        let c4 = Arc::new(build_c4prime(&C4PrimeCoefficients::new([1, 2, 3, 5])));
        let ops = [
            isospin_raising(),
            uspin_raising(),
            build_magnetic(Magnetic::IsospinSquared),
            build_magnetic(Magnetic::I3),
            build_magnetic(Magnetic::Hypercharge),
            build_generator(Group::Total, 8),
        ];
        let [kab, kcd] = constraints();
        for op in ops {
            let comm = LinearOperator::commutator(&c4, &Arc::new(op));
            for v in basis.vectors() {
                assert!(comm.apply(v).unwrap().is_zero());
                let img = c4.apply(v).unwrap();
                assert!(kab.apply(&img).unwrap().is_zero());
                assert!(kcd.apply(&img).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn report_formats() {
        let r = resolve(l(1, 0), l(1, 0), &C4PrimeCoefficients::default()).unwrap();
        let back = DecompositionReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let csv = r.to_csv();
        assert!(csv.starts_with("p,q,multiplicity,c4prime_eigenvalues,exact\n"));
        assert_eq!(csv.lines().count(), 3);
        assert!(render_text(&r).contains("oracle agreement: true"));
    }

    #[test]
    fn octet_fixture_states() {
        let f = octet_fixture().unwrap();
        assert_eq!(f.eigenvalues[0], Some(Scalar::from_ratio(3, 4)));
        assert_eq!(f.swap_signs, [Some(Scalar::one()), Some(Scalar::from_int(-1))]);
        let [kab, kcd] = constraints();
        for v in [&f.octet, &f.octet_prime] {
            assert!(kab.apply(v).unwrap().is_zero());
            assert!(kcd.apply(v).unwrap().is_zero());
        }
        // the zero mode of C4' in this two-dimensional space
        let x = f.zero_mode_coefficient.clone().unwrap();
        assert_eq!(x, Scalar::from_ratio(1, 2));
        let zero = octet_state(FIXTURE_ALPHA, FIXTURE_BETA, &x).unwrap();
        let c4 = build_c4prime(&C4PrimeCoefficients::default());
        assert!(c4.apply(&zero).unwrap().is_zero());
        assert!(gram_inner(&f.octet, &zero).is_zero());
        assert_eq!(f.overlap, Scalar::from_int(10));
    }

    #[test]
    fn octet_resolution_spectrum() {
        let res = resolve_detailed(l(1, 1), l(1, 1), &C4PrimeCoefficients::default()).unwrap();
        let octet = res.space(l(1, 1)).unwrap();
        assert_eq!(octet.report_labels(), vec!["3/4".to_string(), "0".to_string()]);
        let w0 = csco_witness(&res, res.spaces.iter().position(|s| s.label == l(1, 1)).unwrap(), 0).unwrap();
        let w1 = csco_witness(&res, res.spaces.iter().position(|s| s.label == l(1, 1)).unwrap(), 1).unwrap();
        assert_eq!(w0.counts, [1, 1, 1, 1]);
        let (t0, t1) = (w0.tuple(), w1.tuple());
        let differing: Vec<usize> = (0..10).filter(|&k| t0[k] != t1[k]).collect();
        assert_eq!(differing, vec![6]);
        let top = csco_witness(&res, res.spaces.iter().position(|s| s.label == l(2, 2)).unwrap(), 0).unwrap();
        // highest weight of 27 is 2I3 = 2, 3Y = 6
        assert_eq!(top.i3, Scalar::one());
        assert_eq!(top.hypercharge, Scalar::from_int(2));
    }

    #[test]
    fn singlet_witness() {
        let res = resolve_detailed(l(0, 0), l(0, 0), &C4PrimeCoefficients::default()).unwrap();
        let w = csco_witness(&res, 0, 0).unwrap();
        assert_eq!(w.counts, [0, 0, 0, 0]);
        assert!(w.isospin_squared.is_zero() && w.i3.is_zero() && w.hypercharge.is_zero());
        assert!(matches!(csco_witness(&res, 3, 0), Err(Error::NoSuchTerm(3))));
    }
}
