//! Systematic comparison of `resolve` against the character oracle, with
//! spectral audits of every multiplicity space.

use std::fmt::Write as _;

use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decompose::{resolve_detailed, MultiplicitySpace, Resolution};
use crate::error::Result;
use crate::factory::C4PrimeCoefficients;
use crate::fock::{gram_inner, EigenValue};
use crate::labels::IrrepLabel;
use crate::oracle::tensor_decompose;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatteryRow {
    pub factors: [[u32; 2]; 2],
    pub oracle_agreement: bool,
    pub dimension_check: bool,
    /// Every resolving eigenvalue is real and non-negative.
    pub nonnegative: bool,
    /// Exact eigenvectors of distinct eigenvalues are Gram-orthogonal.
    pub orthogonal: bool,
    /// Every multiplicity space has pairwise distinct eigenvalues.
    pub distinct: bool,
    /// Labels whose spectrum repeats a value.
    pub degenerate: Vec<[u32; 2]>,
    /// Labels with multiplicity two and their eigenvalues.
    pub doublets: Vec<([u32; 2], Vec<String>)>,
}

impl BatteryRow {
    pub fn passed(&self) -> bool {
        self.oracle_agreement && self.dimension_check && self.nonnegative && self.orthogonal
    }
}

fn is_nonnegative(v: &EigenValue) -> bool {
    match v {
        EigenValue::Exact(r) => !r.is_negative(),
        EigenValue::Approximate { upper, .. } => !upper.is_negative(),
    }
}

/// Pairwise Gram orthogonality of eigenvectors across distinct exact
/// eigenvalues. Inexact eigenvalues carry no vectors and are skipped.
pub fn is_gram_orthogonal(space: &MultiplicitySpace) -> bool {
    let groups = space.eigenvectors();
    for (i, (_, us)) in groups.iter().enumerate() {
        for (_, vs) in &groups[i + 1..] {
            for u in us {
                for v in vs {
                    if !gram_inner(u, v).is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn audit(resolution: &Resolution) -> BatteryRow {
    let label = |l: IrrepLabel| [l.p, l.q];
    let spaces = &resolution.spaces;
    BatteryRow {
        factors: resolution.report.factors,
        oracle_agreement: resolution.report.oracle_agreement,
        dimension_check: resolution.report.dimension_check,
        nonnegative: spaces.iter().all(|s| s.eigenvalues().iter().all(is_nonnegative)),
        orthogonal: spaces.iter().all(is_gram_orthogonal),
        distinct: spaces.iter().all(MultiplicitySpace::is_distinct),
        degenerate: resolution.degeneracies().into_iter().map(label).collect(),
        doublets: spaces
            .iter()
            .filter(|s| s.multiplicity() == 2)
            .map(|s| (label(s.label), s.report_labels()))
            .collect(),
    }
}

/// Every ordered pair of labels with `p + q <= bound`, in sorted order.
pub fn battery_pairs(bound: u32) -> Vec<(IrrepLabel, IrrepLabel)> {
    let labels = IrrepLabel::all_up_to(bound);
    let mut out = Vec::with_capacity(labels.len() * labels.len());
    for &a in &labels {
        for &b in &labels {
            out.push((a, b));
        }
    }
    out
}

pub fn run_battery(bound: u32, coeffs: &C4PrimeCoefficients) -> Result<Vec<BatteryRow>> {
    battery_pairs(bound)
        .into_par_iter()
        .map(|(a, b)| {
            let res = resolve_detailed(a, b, coeffs)?;
            debug_assert_eq!(res.report.multiplicities(), tensor_decompose(a, b)?);
            Ok(audit(&res))
        })
        .collect()
}

pub fn render_battery(rows: &[BatteryRow]) -> String {
    let mut out = String::from("pair              oracle  dim   >=0   orth  distinct  doublets\n");
    for r in rows {
        let [[p1, q1], [p2, q2]] = r.factors;
        let doublets: Vec<String> = r
            .doublets
            .iter()
            .map(|([p, q], ev)| format!("({p},{q}):{{{}}}", ev.join(",")))
            .collect();
        let _ = writeln!(
            out,
            "({p1},{q1}) x ({p2},{q2})    {:<6}  {:<5} {:<5} {:<5} {:<8}  {}",
            r.oracle_agreement,
            r.dimension_check,
            r.nonnegative,
            r.orthogonal,
            r.distinct,
            doublets.join(" ")
        );
    }
    out
}

pub fn battery_to_csv(rows: &[BatteryRow]) -> String {
    let mut out = String::from("p1,q1,p2,q2,oracle_agreement,dimension_check,nonnegative,orthogonal,distinct,degenerate\n");
    for r in rows {
        let [[p1, q1], [p2, q2]] = r.factors;
        let deg: Vec<String> = r.degenerate.iter().map(|[p, q]| format!("({p} {q})")).collect();
        let _ = writeln!(
            out,
            "{p1},{q1},{p2},{q2},{},{},{},{},{},{}",
            r.oracle_agreement,
            r.dimension_check,
            r.nonnegative,
            r.orthogonal,
            r.distinct,
            deg.join(";")
        );
    }
    out
}
