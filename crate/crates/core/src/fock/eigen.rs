//! Generalized hermitian eigenproblems `H x = lambda G x` solved exactly.
//!
//! `det(H - lambda G)` is obtained by interpolation, split into squarefree
//! factors by Yun's algorithm, and each factor's real roots are isolated
//! with Sturm sequences over the ordered field Q(sqrt 3). Rational roots
//! are recovered exactly; anything else is bracketed to a certified
//! interval of width below `10^-digits` and flagged inexact.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linalg::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{format_rational, Rational, Scalar};

/// Decimal digits to which irrational eigenvalues are certified.
pub const CERTIFIED_DIGITS: u32 = 50;

/// Dense univariate polynomial, coefficients from degree 0 upwards, with no
/// trailing zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Scalar::from_int(k as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().invert().expect("nonzero lead");
        Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or_default();
                    let b = o.coeffs.get(k).cloned().unwrap_or_default();
                    &a - &b
                })
                .collect(),
        )
    }

    fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let dl = d.coeffs.len();
        if rem.len() < dl {
            return (Poly::zero(), self.clone());
        }
        let inv = d.lead().invert().expect("nonzero lead");
        let mut quot = vec![Scalar::zero(); rem.len() - dl + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dl - 1] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dl - 1);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's squarefree decomposition: `self = lead * prod_k f_k^k`.
    /// Returns `(k, f_k)` for the nonconstant factors.
    pub fn squarefree_factors(&self) -> Vec<(usize, Poly)> {
        let f = self.monic();
        if f.degree() == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut k = 1;
        loop {
            let g = b.gcd(&d);
            if g.degree() > 0 {
                out.push((k, g.clone()));
            }
            b = b.div_rem(&g).0;
            if b.degree() == 0 {
                break;
            }
            c = d.div_rem(&g).0;
            d = c.sub(&b.derivative());
            k += 1;
            a = a.div_rem(&g).0;
        }
        let _ = a;
        out
    }

    /// Applies `sqrt3 -> -sqrt3` to every coefficient.
    fn conj_sqrt3(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(Scalar::conj_sqrt3).collect())
    }
}

/// Interpolates the polynomial of degree at most `n` through `(k, f(k))`,
/// `k = 0..=n`, by Newton divided differences.
fn interpolate(values: &[Scalar]) -> Poly {
    let n = values.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            let diff = &dd[k] - &dd[k - 1];
            dd[k] = diff.scale(&Rational::new(BigInt::one(), BigInt::from(level)));
        }
    }
    // Horner on the Newton basis: p = dd0 + (x-0)(dd1 + (x-1)(dd2 + ...))
    let mut p = Poly::new(vec![dd[n - 1].clone()]);
    for k in (0..n - 1).rev() {
        let lin = Poly::new(vec![Scalar::from_int(-(k as i64)), Scalar::one()]);
        p = p.mul(&lin);
        let mut c = p.coeffs.clone();
        if c.is_empty() {
            c.push(Scalar::zero());
        }
        c[0] += &dd[k];
        p = Poly::new(c);
    }
    p
}

/// `det(H - lambda G)` as a polynomial in lambda.
pub fn pencil_polynomial(h: &Matrix, g: &Matrix) -> Result<Poly> {
    let n = h.rows();
    let values: Result<Vec<Scalar>> = (0..=n)
        .map(|k| h.sub(&g.scaled(&Scalar::from_int(k as i64))).determinant())
        .collect();
    Ok(interpolate(&values?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EigenValue {
    Exact(Rational),
    /// A real root certified inside `[lower, upper]`, `upper - lower < 10^-digits`.
    Approximate {
        lower: Rational,
        upper: Rational,
        digits: u32,
    },
}

impl EigenValue {
    pub fn is_exact(&self) -> bool {
        matches!(self, EigenValue::Exact(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            EigenValue::Exact(r) => Some(r),
            EigenValue::Approximate { .. } => None,
        }
    }

    /// A representative rational value (the midpoint for brackets).
    pub fn midpoint(&self) -> Rational {
        match self {
            EigenValue::Exact(r) => r.clone(),
            EigenValue::Approximate { lower, upper, .. } => (lower + upper) / Rational::from_integer(2.into()),
        }
    }

    /// Exact values print as `num/den`; brackets print as a decimal
    /// truncated to the certified digits.
    pub fn label(&self) -> String {
        match self {
            EigenValue::Exact(r) => format_rational(r),
            EigenValue::Approximate { digits, .. } => decimal(&self.midpoint(), *digits),
        }
    }
}

fn decimal(r: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let scaled = (r * Rational::from_integer(scale.clone())).round().to_integer();
    let neg = scaled.is_negative();
    let abs = scaled.abs();
    let (int, frac) = abs.div_rem(&scale);
    let frac = format!("{:0>width$}", frac.to_string(), width = digits as usize);
    format!("{}{}.{}", if neg { "-" } else { "" }, int, frac)
}

impl PartialOrd for EigenValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EigenValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.midpoint().cmp(&other.midpoint())
    }
}

/// One eigenvalue, its algebraic multiplicity and (for exact values) an
/// exact eigenspace basis in coefficient coordinates.
#[derive(Clone, Debug)]
pub struct EigenSpace {
    pub value: EigenValue,
    pub multiplicity: usize,
    pub vectors: Vec<Vec<Scalar>>,
}

fn real_rational_part(x: &Scalar) -> Option<(Rational, Rational)> {
    x.is_real().then(|| {
        let c = x.components();
        (c[0].clone(), c[2].clone())
    })
}

fn sign_at(p: &Poly, x: &Rational) -> Ordering {
    p.eval(&Scalar::from_rational(x.clone()))
        .real_sign()
        .expect("real polynomial")
}

fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(Poly::new(r.coeffs.iter().map(|c| -c).collect()));
    }
    seq
}

fn sign_changes(seq: &[Poly], x: &Rational) -> usize {
    let signs: Vec<Ordering> = seq
        .iter()
        .map(|p| sign_at(p, x))
        .filter(|s| *s != Ordering::Equal)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in `(lo, hi]`.
fn count_roots(seq: &[Poly], lo: &Rational, hi: &Rational) -> usize {
    sign_changes(seq, lo).saturating_sub(sign_changes(seq, hi))
}

/// Rational upper bound on the absolute value of an element of Q(sqrt 3).
fn abs_bound(x: &Scalar) -> Rational {
    let c = x.components();
    c[0].abs() + c[2].abs() * Rational::from_integer(2.into())
}

/// Simplest (smallest-denominator) rational in the closed interval.
pub fn simplest_rational(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_rational(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if &(&fl + Rational::one()) <= hi {
        return fl + Rational::one();
    }
    let inner = simplest_rational(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

/// Denominator bound for rational roots of a real squarefree factor: the
/// leading coefficient of the primitive integer multiple of its norm.
fn rational_root_denominator_bound(f: &Poly) -> BigInt {
    let norm = if f.coeffs.iter().all(Scalar::is_rational) {
        f.clone()
    } else {
        f.mul(&f.conj_sqrt3())
    };
    let mut den_lcm = BigInt::one();
    for c in &norm.coeffs {
        if let Some(r) = c.as_rational() {
            den_lcm = den_lcm.lcm(r.denom());
        }
    }
    let ints: Vec<BigInt> = norm
        .coeffs
        .iter()
        .map(|c| {
            let r = c.as_rational().cloned().unwrap_or_default();
            (r * Rational::from_integer(den_lcm.clone())).to_integer()
        })
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let lead = ints.last().cloned().unwrap_or_else(BigInt::one);
    if content.is_zero() {
        BigInt::one()
    } else {
        (lead / content).abs()
    }
}

/// Isolates and classifies every real root of a squarefree real polynomial.
fn real_roots(f: &Poly, digits: u32) -> Vec<EigenValue> {
    let seq = sturm_sequence(f);
    let lead = f.lead();
    let lead_inv = lead.invert().expect("nonzero");
    let mut bound = Rational::one();
    for c in &f.coeffs[..f.coeffs.len() - 1] {
        bound += abs_bound(&(c * &lead_inv));
    }
    let lo0 = -&bound;
    let hi0 = bound;
    let den_bound = rational_root_denominator_bound(f);
    let sep = Rational::new(BigInt::one(), &den_bound * &den_bound);
    let target = Rational::new(BigInt::one(), BigInt::from(10).pow(digits));

    let mut out = Vec::new();
    let mut stack = vec![(lo0, hi0)];
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots(&seq, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n > 1 {
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
            continue;
        }
        out.push(refine_root(f, &seq, lo, hi, &sep, &target, digits));
    }
    out.sort();
    out
}

fn refine_root(
    f: &Poly,
    seq: &[Poly],
    mut lo: Rational,
    mut hi: Rational,
    sep: &Rational,
    target: &Rational,
    digits: u32,
) -> EigenValue {
    let two = Rational::from_integer(2.into());
    let is_root = |x: &Rational| sign_at(f, x) == Ordering::Equal;
    if is_root(&hi) {
        return EigenValue::Exact(hi);
    }
    let mut checked_rational = false;
    loop {
        let width = &hi - &lo;
        if !checked_rational && &width < sep {
            // Only one rational with small enough denominator can lie here.
            let cand = simplest_rational(&lo, &hi);
            if is_root(&cand) {
                return EigenValue::Exact(cand);
            }
            checked_rational = true;
        }
        if checked_rational && &width < target {
            return EigenValue::Approximate {
                lower: lo,
                upper: hi,
                digits,
            };
        }
        let cand = simplest_rational(&lo, &hi);
        if cand > lo && is_root(&cand) {
            return EigenValue::Exact(cand);
        }
        let mid = (&lo + &hi) / &two;
        if is_root(&mid) {
            return EigenValue::Exact(mid);
        }
        if count_roots(seq, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

fn check_hermitian(m: &Matrix) -> Result<()> {
    for r in 0..m.rows() {
        for c in r..m.cols() {
            if m[(r, c)] != m[(c, r)].conj() {
                return Err(Error::NonHermitian { row: r, col: c });
            }
        }
    }
    Ok(())
}

/// Positive definiteness of a hermitian matrix via the signs of its
/// elimination pivots.
fn check_positive_definite(g: &Matrix) -> Result<()> {
    let n = g.rows();
    let mut m = g.clone();
    for k in 0..n {
        let pivot = m[(k, k)].clone();
        if pivot.real_sign() != Some(Ordering::Greater) {
            return Err(Error::NotPositiveDefinite(k));
        }
        let inv = pivot.invert()?;
        for r in k + 1..n {
            if m[(r, k)].is_zero() {
                continue;
            }
            let f = &m[(r, k)] * &inv;
            for c in k..n {
                let t = &f * &m[(k, c)];
                m[(r, c)] -= &t;
            }
        }
    }
    Ok(())
}

/// Solves `H x = lambda G x` for a hermitian `H` and a hermitian positive
/// definite `G`. Eigenvalues come back sorted ascending.
pub fn generalized_eigen(h: &Matrix, g: &Matrix) -> Result<Vec<EigenSpace>> {
    generalized_eigen_with_digits(h, g, CERTIFIED_DIGITS)
}

pub fn generalized_eigen_with_digits(h: &Matrix, g: &Matrix, digits: u32) -> Result<Vec<EigenSpace>> {
    if !h.is_square() || !g.is_square() || h.rows() != g.rows() {
        return Err(Error::Shape(format!(
            "pencil {}x{} / {}x{}",
            h.rows(),
            h.cols(),
            g.rows(),
            g.cols()
        )));
    }
    check_hermitian(h)?;
    check_hermitian(g)?;
    check_positive_definite(g)?;
    let n = h.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let p = pencil_polynomial(h, g)?.monic();
    if let Some(k) = p.coeffs.iter().position(|c| real_rational_part(c).is_none()) {
        let _ = k;
        return Err(Error::NonRealSpectrum { real: 0, degree: n });
    }
    let mut spaces = Vec::new();
    let mut found = 0;
    for (mult, factor) in p.squarefree_factors() {
        for value in real_roots(&factor, digits) {
            found += mult;
            let vectors = match &value {
                EigenValue::Exact(r) => h
                    .sub(&g.scaled(&Scalar::from_rational(r.clone())))
                    .nullspace(),
                EigenValue::Approximate { .. } => Vec::new(),
            };
            spaces.push(EigenSpace {
                value,
                multiplicity: mult,
                vectors,
            });
        }
    }
    if found != n {
        return Err(Error::NonRealSpectrum {
            real: found,
            degree: n,
        });
    }
    spaces.sort_by(|a, b| a.value.cmp(&b.value));
    Ok(spaces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn ints(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    fn values(spaces: &[EigenSpace]) -> Vec<(String, usize)> {
        spaces.iter().map(|s| (s.value.label(), s.multiplicity)).collect()
    }

    #[test]
    fn diagonal_pencil() {
        let h = Matrix::diagonal(&[Scalar::from_ratio(3, 4), Scalar::zero()]);
        let sp = generalized_eigen(&h, &Matrix::identity(2)).unwrap();
        assert_eq!(values(&sp), vec![("0".into(), 1), ("3/4".into(), 1)]);
        assert!(sp.iter().all(|s| s.value.is_exact() && s.vectors.len() == 1));
    }

    #[test]
    fn one_by_one() {
        let sp = generalized_eigen(&ints(&[&[3]]), &ints(&[&[2]])).unwrap();
        assert_eq!(sp[0].value, EigenValue::Exact(rational(3, 2)));
    }

    #[test]
    fn repeated_root_multiplicity() {
        let sp = generalized_eigen(&ints(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 5]]), &Matrix::identity(3)).unwrap();
        assert_eq!(values(&sp), vec![("2".into(), 2), ("5".into(), 1)]);
        assert_eq!(sp[0].vectors.len(), 2);
    }

    #[test]
    fn irrational_roots_are_bracketed() {
        // [[0,1],[1,0]] with G = diag(1,2): lambda^2 = 1/2
        let sp = generalized_eigen(&ints(&[&[0, 1], &[1, 0]]), &ints(&[&[1, 0], &[0, 2]])).unwrap();
        assert_eq!(sp.len(), 2);
        for s in &sp {
            let EigenValue::Approximate { lower, upper, digits } = &s.value else {
                panic!("expected bracket");
            };
            assert_eq!(*digits, CERTIFIED_DIGITS);
            assert!(upper - lower < rational(1, 1) / Rational::from_integer(BigInt::from(10).pow(50)));
            let half = rational(1, 2);
            // lower^2 <= 1/2 <= upper^2 on the positive root
            if lower.is_positive() {
                assert!(lower * lower <= half && half <= upper * upper);
            }
        }
        assert!(sp[1].value.label().starts_with("0.70710678118654752440"));
    }

    #[test]
    fn sqrt3_entries() {
        // eigenvalues of [[0, r3], [r3, 0]] are +-r3
        let r3 = Scalar::sqrt3();
        let h = Matrix::from_rows(vec![vec![Scalar::zero(), r3.clone()], vec![r3, Scalar::zero()]]);
        let sp = generalized_eigen(&h, &Matrix::identity(2)).unwrap();
        assert!(sp[1].value.label().starts_with("1.7320508075688772935"));
        // mixed factor with one rational root: diag(1, r3)
        let h = Matrix::diagonal(&[Scalar::one(), Scalar::sqrt3()]);
        let sp = generalized_eigen(&h, &Matrix::identity(2)).unwrap();
        assert_eq!(sp[0].value, EigenValue::Exact(rational(1, 1)));
        assert!(!sp[1].value.is_exact());
    }

    #[test]
    fn complex_hermitian_pencil() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2
        let i = Scalar::i();
        let h = Matrix::from_rows(vec![vec![Scalar::one(), i.clone()], vec![-i, Scalar::one()]]);
        let sp = generalized_eigen(&h, &Matrix::identity(2)).unwrap();
        assert_eq!(values(&sp), vec![("0".into(), 1), ("2".into(), 1)]);
    }

    #[test]
    fn precondition_violations() {
        let bad = ints(&[&[0, 1], &[2, 0]]);
        assert!(matches!(
            generalized_eigen(&bad, &Matrix::identity(2)),
            Err(Error::NonHermitian { row: 0, col: 1 })
        ));
        assert!(matches!(
            generalized_eigen(&Matrix::identity(2), &ints(&[&[1, 0], &[0, -1]])),
            Err(Error::NotPositiveDefinite(1))
        ));
    }

    #[test]
    fn gram_orthogonality_across_eigenvalues() {
        let h = ints(&[&[2, 1, 0], &[1, 2, 0], &[0, 0, 7]]);
        let g = ints(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let sp = generalized_eigen(&h, &g).unwrap();
        let exact: Vec<&EigenSpace> = sp.iter().filter(|s| s.value.is_exact()).collect();
        for a in &exact {
            for b in &exact {
                if a.value == b.value {
                    continue;
                }
                let gb = g.mul_vec(&b.vectors[0]);
                let ip = a.vectors[0]
                    .iter()
                    .zip(&gb)
                    .fold(Scalar::zero(), |acc, (x, y)| &acc + &(&x.conj() * y));
                assert!(ip.is_zero());
            }
        }
        assert_eq!(sp.iter().map(|s| s.multiplicity).sum::<usize>(), 3);
    }

    #[test]
    fn simplest_rational_examples() {
        assert_eq!(simplest_rational(&rational(1, 3), &rational(1, 2)), rational(1, 2));
        assert_eq!(simplest_rational(&rational(-7, 10), &rational(-6, 10)), rational(-2, 3));
        assert_eq!(simplest_rational(&rational(-1, 2), &rational(1, 2)), rational(0, 1));
        assert_eq!(simplest_rational(&rational(31, 10), &rational(32, 10)), rational(16, 5));
    }

    #[test]
    fn yun_factorization() {
        // (x-1)^2 (x-2)
        let p = Poly::new(vec![
            Scalar::from_int(-2),
            Scalar::from_int(5),
            Scalar::from_int(-4),
            Scalar::one(),
        ]);
        let f = p.squarefree_factors();
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].0, 1);
        assert_eq!(f[0].1, Poly::new(vec![Scalar::from_int(-2), Scalar::one()]));
        assert_eq!(f[1].0, 2);
        assert_eq!(f[1].1, Poly::new(vec![Scalar::from_int(-1), Scalar::one()]));
    }
}
