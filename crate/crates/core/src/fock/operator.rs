//! Ladder-operator polynomials acting on unnormalized Fock monomials.
//!
//! Conventions: a creator raises an exponent with coefficient 1; an
//! annihilator lowers exponent `n` with coefficient `n`, and kills the
//! monomial when `n = 0`. Words act right to left. Composite operators may
//! hold other operators as factors, so products of large sums (Casimirs,
//! commutators) are applied lazily instead of being expanded.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::basis::{Family, FockMonomial, Mode};
use super::state::StateVector;
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Diagonal count function `1 / (sum_f c_f N_f + offset)`, evaluated on the
/// family counts of the monomial it meets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CountFn {
    pub coeffs: [i32; 4],
    pub offset: i32,
}

impl CountFn {
    /// `1 / (N_x + N_y + 1)`.
    pub fn inverse_pair_plus_one(x: Family, y: Family) -> Self {
        let mut coeffs = [0; 4];
        coeffs[x.index()] += 1;
        coeffs[y.index()] += 1;
        CountFn { coeffs, offset: 1 }
    }

    pub fn eval(&self, counts: [u32; 4]) -> Option<Rational> {
        let den: i64 = self
            .coeffs
            .iter()
            .zip(counts)
            .map(|(&c, n)| c as i64 * n as i64)
            .sum::<i64>()
            + self.offset as i64;
        (den != 0).then(|| BigRational::new(BigInt::from(1), BigInt::from(den)))
    }
}

impl fmt::Display for CountFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (fam, &c) in Family::ALL.iter().zip(&self.coeffs) {
            if c == 0 {
                continue;
            }
            let name = format!("N{}", fam.letter());
            match c {
                1 if s.is_empty() => s.push_str(&name),
                1 => s.push_str(&format!("+{name}")),
                -1 => s.push_str(&format!("-{name}")),
                c if c > 0 && !s.is_empty() => s.push_str(&format!("+{c}{name}")),
                c => s.push_str(&format!("{c}{name}")),
            }
        }
        match self.offset {
            0 => {}
            o if o > 0 && !s.is_empty() => s.push_str(&format!("+{o}")),
            o => s.push_str(&o.to_string()),
        }
        write!(f, "1/({s})")
    }
}

#[derive(Clone, Debug)]
pub enum Factor {
    Create(Mode),
    Annihilate(Mode),
    Count(CountFn),
    Op(Arc<LinearOperator>),
}

impl Factor {
    fn adjoint(&self) -> Factor {
        match self {
            Factor::Create(m) => Factor::Annihilate(*m),
            Factor::Annihilate(m) => Factor::Create(*m),
            Factor::Count(f) => Factor::Count(f.clone()),
            Factor::Op(op) => Factor::Op(Arc::new(op.adjoint())),
        }
    }

    fn shift(&self) -> Result<Option<[i32; 4]>> {
        Ok(match self {
            Factor::Create(m) => Some(unit(m.family, 1)),
            Factor::Annihilate(m) => Some(unit(m.family, -1)),
            Factor::Count(_) => Some([0; 4]),
            Factor::Op(op) => op.shift()?,
        })
    }
}

fn unit(f: Family, v: i32) -> [i32; 4] {
    let mut out = [0; 4];
    out[f.index()] = v;
    out
}

#[derive(Clone, Debug)]
pub struct Term {
    pub coef: Scalar,
    /// Rightmost factor acts first.
    pub word: Vec<Factor>,
}

/// Finite sum of coefficient-weighted words in ladder symbols, count
/// functions and nested operators.
#[derive(Clone, Debug, Default)]
pub struct LinearOperator {
    terms: Vec<Term>,
}

impl LinearOperator {
    pub fn zero() -> Self {
        LinearOperator::default()
    }

    pub fn identity() -> Self {
        LinearOperator::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        LinearOperator::from_word(c, Vec::new())
    }

    pub fn from_word(coef: Scalar, word: Vec<Factor>) -> Self {
        let mut op = LinearOperator::zero();
        op.push(coef, word);
        op
    }

    pub fn create(m: Mode) -> Self {
        LinearOperator::from_word(Scalar::one(), vec![Factor::Create(m)])
    }

    pub fn annihilate(m: Mode) -> Self {
        LinearOperator::from_word(Scalar::one(), vec![Factor::Annihilate(m)])
    }

    /// Number operator of a whole family.
    pub fn number(f: Family) -> Self {
        let mut op = LinearOperator::zero();
        for c in 1..=3 {
            let m = Mode::new(f, c);
            op.push(Scalar::one(), vec![Factor::Create(m), Factor::Annihilate(m)]);
        }
        op
    }

    pub fn count(f: CountFn) -> Self {
        LinearOperator::from_word(Scalar::one(), vec![Factor::Count(f)])
    }

    pub fn push(&mut self, coef: Scalar, word: Vec<Factor>) {
        if !coef.is_zero() {
            self.terms.push(Term { coef, word });
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero_expression(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &LinearOperator) -> LinearOperator {
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out
    }

    pub fn minus(&self, other: &LinearOperator) -> LinearOperator {
        self.plus(&other.scaled(&Scalar::from_int(-1)))
    }

    pub fn scaled(&self, c: &Scalar) -> LinearOperator {
        let mut out = LinearOperator::zero();
        for t in &self.terms {
            out.push(&t.coef * c, t.word.clone());
        }
        out
    }

    /// Sum of `c_k * op_k`.
    pub fn linear_combination<'a, I>(parts: I) -> LinearOperator
    where
        I: IntoIterator<Item = (Scalar, &'a LinearOperator)>,
    {
        let mut out = LinearOperator::zero();
        for (c, op) in parts {
            out = out.plus(&op.scaled(&c));
        }
        out
    }

    /// Expanded product `self * other` (other acts first).
    pub fn then_after(&self, other: &LinearOperator) -> LinearOperator {
        let mut out = LinearOperator::zero();
        for s in &self.terms {
            for o in &other.terms {
                let mut word = s.word.clone();
                word.extend(o.word.iter().cloned());
                out.push(&s.coef * &o.coef, word);
            }
        }
        out
    }

    /// Unexpanded product `ops[0] * ops[1] * ...`; the last factor acts first.
    pub fn chain(ops: &[Arc<LinearOperator>]) -> LinearOperator {
        LinearOperator::from_word(
            Scalar::one(),
            ops.iter().map(|op| Factor::Op(Arc::clone(op))).collect(),
        )
    }

    /// `[A, B] = AB - BA`, kept unexpanded.
    pub fn commutator(a: &Arc<LinearOperator>, b: &Arc<LinearOperator>) -> LinearOperator {
        let mut out = LinearOperator::chain(&[Arc::clone(a), Arc::clone(b)]);
        out.push(
            Scalar::from_int(-1),
            vec![Factor::Op(Arc::clone(b)), Factor::Op(Arc::clone(a))],
        );
        out
    }

    /// Adjoint with respect to the Fock inner product.
    pub fn adjoint(&self) -> LinearOperator {
        LinearOperator {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: t.coef.conj(),
                    word: t.word.iter().rev().map(Factor::adjoint).collect(),
                })
                .collect(),
        }
    }

    /// Uniform family-count shift, `None` for the empty operator.
    pub fn shift(&self) -> Result<Option<[i32; 4]>> {
        let mut found: Option<[i32; 4]> = None;
        for t in &self.terms {
            let mut s = [0i32; 4];
            let mut annihilated = false;
            for f in &t.word {
                match f.shift()? {
                    Some(d) => (0..4).for_each(|k| s[k] += d[k]),
                    None => annihilated = true,
                }
            }
            if annihilated {
                continue;
            }
            match found {
                None => found = Some(s),
                Some(prev) if prev != s => return Err(Error::InconsistentShift(prev, s)),
                _ => {}
            }
        }
        Ok(found)
    }

    /// Largest change in total quanta any term can produce.
    pub fn max_total_shift(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| {
                t.word
                    .iter()
                    .map(|f| match f {
                        Factor::Create(_) | Factor::Annihilate(_) => 1,
                        Factor::Count(_) => 0,
                        Factor::Op(op) => op.max_total_shift(),
                    })
                    .sum()
            })
            .max()
            .unwrap_or(0)
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        let mut out = StateVector::zero();
        for t in &self.terms {
            let mut cur = v.clone();
            for f in t.word.iter().rev() {
                if cur.is_zero() {
                    break;
                }
                cur = apply_factor(f, &cur)?;
            }
            out.add_scaled(&cur, &t.coef);
        }
        Ok(out)
    }

    pub fn apply_monomial(&self, m: FockMonomial) -> Result<StateVector> {
        self.apply(&StateVector::monomial(m))
    }

    /// Like [`apply`](Self::apply), memoizing the images of monomials under
    /// every nested operator factor.
    pub fn apply_cached(&self, v: &StateVector, cache: &ApplyCache) -> Result<StateVector> {
        let mut out = StateVector::zero();
        for t in &self.terms {
            let mut cur = v.clone();
            for f in t.word.iter().rev() {
                if cur.is_zero() {
                    break;
                }
                cur = match f {
                    Factor::Op(op) => cache.apply(op, &cur)?,
                    _ => apply_factor(f, &cur)?,
                };
            }
            out.add_scaled(&cur, &t.coef);
        }
        Ok(out)
    }
}

/// Monomial images under shared operators, keyed by operator identity.
/// Keys hold the `Arc`, so an address is never reused while cached.
#[derive(Default)]
pub struct ApplyCache {
    images: Mutex<HashMap<(usize, FockMonomial), Arc<StateVector>>>,
    owners: Mutex<Vec<Arc<LinearOperator>>>,
}

impl ApplyCache {
    pub fn new() -> Self {
        ApplyCache::default()
    }

    fn key(op: &Arc<LinearOperator>) -> usize {
        Arc::as_ptr(op) as usize
    }

    fn apply(&self, op: &Arc<LinearOperator>, v: &StateVector) -> Result<StateVector> {
        let id = Self::key(op);
        let mut out = StateVector::zero();
        for (m, c) in v.iter() {
            let hit = self.images.lock().expect("cache lock").get(&(id, *m)).cloned();
            let img = match hit {
                Some(img) => img,
                None => {
                    let img = Arc::new(op.apply_cached(&StateVector::monomial(*m), self)?);
                    let mut owners = self.owners.lock().expect("cache lock");
                    if !owners.iter().any(|o| Arc::ptr_eq(o, op)) {
                        owners.push(Arc::clone(op));
                    }
                    drop(owners);
                    self.images.lock().expect("cache lock").insert((id, *m), Arc::clone(&img));
                    img
                }
            };
            out.add_scaled(&img, c);
        }
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.images.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn apply_factor(f: &Factor, v: &StateVector) -> Result<StateVector> {
    match f {
        Factor::Create(mode) => Ok(StateVector::from_terms(
            v.iter().map(|(m, c)| (m.raised(*mode), c.clone())),
        )),
        Factor::Annihilate(mode) => Ok(StateVector::from_terms(v.iter().filter_map(|(m, c)| {
            let n = m.get(*mode);
            m.lowered(*mode)
                .map(|low| (low, c.scale(&Rational::from_integer(BigInt::from(n)))))
        }))),
        Factor::Count(func) => {
            let mut out = StateVector::zero();
            for (m, c) in v.iter() {
                let val = func.eval(m.counts()).ok_or_else(|| Error::DiagonalDomain {
                    function: func.to_string(),
                    monomial: m.to_string(),
                })?;
                if !val.is_zero() {
                    out.add_term(*m, &c.scale(&val));
                }
            }
            Ok(out)
        }
        Factor::Op(op) => op.apply(v),
    }
}

/// Applies `op` to `v`.
pub fn apply(op: &LinearOperator, v: &StateVector) -> Result<StateVector> {
    op.apply(v)
}

/// `[A, B]` as an operator.
pub fn commutator(a: &Arc<LinearOperator>, b: &Arc<LinearOperator>) -> LinearOperator {
    LinearOperator::commutator(a, b)
}

fn write_factor(f: &Factor, out: &mut String) {
    match f {
        Factor::Create(m) => out.push_str(&format!("{m}+")),
        Factor::Annihilate(m) => out.push_str(&m.to_string()),
        Factor::Count(c) => out.push_str(&c.to_string()),
        Factor::Op(op) => out.push_str(&format!("[{op}]")),
    }
}

/// Stable text form: one `coef * word` per term joined by ` + `, creators
/// marked with a trailing `+`, e.g. `(1) a1+ c1 + (1) a2+ c2`.
impl fmt::Display for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let mut s = format!("({})", t.coef);
                for fac in &t.word {
                    s.push(' ');
                    write_factor(fac, &mut s);
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
