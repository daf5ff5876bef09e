use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::basis::SectorBasis;
use super::linalg::Matrix;
use super::operator::LinearOperator;
use super::state::StateVector;
use crate::error::{Error, ParseError, Result};
use crate::scalar::Scalar;

/// Sparse matrix of an operator between two sectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    domain: Arc<SectorBasis>,
    codomain: Arc<SectorBasis>,
    entries: BTreeMap<(usize, usize), Scalar>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    domain: [u32; 4],
    codomain: [u32; 4],
    entries: Vec<(usize, usize, String)>,
}

impl ExactMatrix {
    pub fn domain(&self) -> &Arc<SectorBasis> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<SectorBasis> {
        &self.codomain
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), Scalar> {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.entries.get(&(row, col)).cloned().unwrap_or_default()
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.codomain.len(), self.domain.len());
        for (&(r, c), v) in &self.entries {
            m[(r, c)] = v.clone();
        }
        m
    }

    /// Image of a domain vector, expanded in the codomain.
    pub fn apply(&self, v: &StateVector) -> Option<StateVector> {
        let x = v.coords_in(&self.domain)?;
        let y = self.to_dense().mul_vec(&x);
        Some(StateVector::from_coords(&self.codomain, &y))
    }

    /// Kernel basis as domain state vectors.
    pub fn nullspace(&self) -> Vec<StateVector> {
        self.to_dense()
            .nullspace()
            .into_iter()
            .map(|v| StateVector::from_coords(&self.domain, &v))
            .collect()
    }

    pub fn to_json(&self) -> String {
        let doc = MatrixJson {
            domain: self.domain.counts(),
            codomain: self.codomain.counts(),
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| (r, c, v.to_string()))
                .collect(),
        };
        serde_json::to_string(&doc).expect("matrix json")
    }

    /// Parses the JSON export. Sectors above the enumeration bound, entries
    /// outside the matrix and duplicate coordinates are rejected.
    pub fn from_json(s: &str) -> Result<Self, ParseError> {
        let doc: MatrixJson =
            serde_json::from_str(s).map_err(|e| ParseError::Json(e.to_string()))?;
        let domain = Arc::new(SectorBasis::checked(doc.domain)?);
        let codomain = Arc::new(SectorBasis::checked(doc.codomain)?);
        let mut entries = BTreeMap::new();
        for (row, col, v) in doc.entries {
            if row >= codomain.len() || col >= domain.len() {
                return Err(ParseError::EntryOutOfRange {
                    row,
                    col,
                    rows: codomain.len(),
                    cols: domain.len(),
                });
            }
            let v: Scalar = v.parse()?;
            if entries.insert((row, col), v.clone()).is_some() {
                return Err(ParseError::DuplicateEntry(row, col));
            }
            if v.is_zero() {
                entries.remove(&(row, col));
            }
        }
        Ok(ExactMatrix {
            domain,
            codomain,
            entries,
        })
    }
}

/// Matrix of `op` on `domain`; the codomain sector follows from the
/// operator's uniform family-count shift.
pub fn matrix_of(op: &LinearOperator, domain: &Arc<SectorBasis>) -> Result<ExactMatrix> {
    let shift = op.shift()?.unwrap_or([0; 4]);
    let mut counts = [0u32; 4];
    for k in 0..4 {
        let v = domain.counts()[k] as i64 + shift[k] as i64;
        if v < 0 {
            return Err(Error::NegativeSector {
                domain: domain.counts(),
            });
        }
        counts[k] = v as u32;
    }
    let codomain = if counts == domain.counts() {
        Arc::clone(domain)
    } else {
        Arc::new(SectorBasis::new(counts))
    };
    let mut entries = BTreeMap::new();
    for (col, m) in domain.monomials().iter().enumerate() {
        let img = op.apply_monomial(*m)?;
        for (mono, c) in img.iter() {
            let row = codomain
                .position(mono)
                .ok_or_else(|| Error::Shape(format!("image {mono} outside sector {counts:?}")))?;
            entries.insert((row, col), c.clone());
        }
    }
    Ok(ExactMatrix {
        domain: Arc::clone(domain),
        codomain,
        entries,
    })
}
