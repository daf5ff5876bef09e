//! Exact arithmetic over the field Q(i, sqrt 3).
//!
//! Every matrix entry that the Gell-Mann matrices, the invariant bilinears
//! and the irreducible Schwinger bosons can produce lives in this field, so
//! operator identities can be decided by exact equality.
//!
//! A [`Scalar`] is stored as `w + x*i + y*r3 + z*i*r3` with rational
//! components, where `r3` denotes the positive square root of three.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ParseError;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds `num/den` as a reduced rational. Panics on a zero denominator.
pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Prints a rational as `num/den`, or just `num` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num`, `num/den` or `-num/den` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = parse_int(num)?;
    let den = parse_int(den)?;
    if den.is_zero() {
        return Err(ParseError::ZeroDenominator(s.to_string()));
    }
    Ok(BigRational::new(num, den))
}

fn parse_int(s: &str) -> Result<BigInt, ParseError> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::Integer(s.to_string()));
    }
    s.parse::<BigInt>()
        .map_err(|_| ParseError::Integer(s.to_string()))
}

/// Exact element `w + x*i + y*sqrt3 + z*i*sqrt3` of Q(i, sqrt 3).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    w: Rational,
    x: Rational,
    y: Rational,
    z: Rational,
}

impl Scalar {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Scalar { w, x, y, z }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_rational(Rational::one())
    }

    pub fn i() -> Self {
        Scalar::new(Rational::zero(), Rational::one(), Rational::zero(), Rational::zero())
    }

    pub fn sqrt3() -> Self {
        Scalar::new(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::new(r, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::from_rational(rational(num, den))
    }

    /// Components in the order `(1, i, sqrt3, i*sqrt3)`.
    pub fn components(&self) -> [&Rational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.w.is_one() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// True when the value lies in Q.
    pub fn is_rational(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// True when the value lies in the real subfield Q(sqrt 3).
    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.w)
    }

    /// Complex conjugate: `i -> -i`, `sqrt3` fixed.
    pub fn conj(&self) -> Self {
        Scalar::new(self.w.clone(), -&self.x, self.y.clone(), -&self.z)
    }

    /// Galois conjugate `sqrt3 -> -sqrt3`, `i` fixed.
    pub fn conj_sqrt3(&self) -> Self {
        Scalar::new(self.w.clone(), self.x.clone(), -&self.y, -&self.z)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Scalar::new(&self.w * r, &self.x * r, &self.y * r, &self.z * r)
    }

    /// Multiplicative inverse, obtained by solving the rational 4x4 system
    /// for multiplication by `self`.
    pub fn invert(&self) -> Result<Scalar, crate::error::ArithmeticError> {
        if self.is_zero() {
            return Err(crate::error::ArithmeticError::DivisionByZero);
        }
        // Columns are self*1, self*i, self*r3, self*i*r3 in component form.
        let basis = [Scalar::one(), Scalar::i(), Scalar::sqrt3(), &Scalar::i() * &Scalar::sqrt3()];
        let cols: Vec<[Rational; 4]> = basis
            .iter()
            .map(|b| {
                let p = self * b;
                [p.w, p.x, p.y, p.z]
            })
            .collect();
        let mut m: Vec<Vec<Rational>> = (0..4)
            .map(|r| {
                let mut row: Vec<Rational> = (0..4).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..4 {
            let pivot = (col..4)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(crate::error::ArithmeticError::DivisionByZero)?;
            m.swap(col, pivot);
            let inv = m[col][col].recip();
            for v in m[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..4 {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..5 {
                        let t = &f * &m[col][c];
                        m[r][c] -= t;
                    }
                }
            }
        }
        Ok(Scalar::new(
            m[0][4].clone(),
            m[1][4].clone(),
            m[2][4].clone(),
            m[3][4].clone(),
        ))
    }

    /// Exact sign of a real element `w + y*sqrt3`; `None` if the value has an
    /// imaginary part.
    pub fn real_sign(&self) -> Option<Ordering> {
        if !self.is_real() {
            return None;
        }
        Some(sign_a_plus_b_sqrt3(&self.w, &self.y))
    }

    /// Floating approximation of the real part, for display only.
    pub fn approx_re(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.w.to_f64().unwrap_or(f64::NAN) + 3f64.sqrt() * self.y.to_f64().unwrap_or(f64::NAN)
    }
}

/// Sign of `a + b*sqrt3` for rational `a`, `b`.
fn sign_a_plus_b_sqrt3(a: &Rational, b: &Rational) -> Ordering {
    let sa = a.cmp(&Rational::zero());
    let sb = b.cmp(&Rational::zero());
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    // Opposite signs: compare a^2 with 3 b^2.
    let a2 = a * a;
    let b2 = b * b * Rational::from_integer(BigInt::from(3));
    match a2.cmp(&b2) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar::new(&self.w + &o.w, &self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.w += &o.w;
        self.x += &o.x;
        self.y += &o.y;
        self.z += &o.z;
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar::new(&self.w - &o.w, &self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.w -= &o.w;
        self.x -= &o.x;
        self.y -= &o.y;
        self.z -= &o.z;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        // Fast paths: almost every coefficient in practice is rational.
        if self.is_rational() {
            return o.scale(&self.w);
        }
        if o.is_rational() {
            return self.scale(&o.w);
        }
        let three = Rational::from_integer(BigInt::from(3));
        let (a, b, c, d) = (&self.w, &self.x, &self.y, &self.z);
        let (e, f, g, h) = (&o.w, &o.x, &o.y, &o.z);
        // basis products: i*i = -1, r3*r3 = 3, (i r3)^2 = -3
        let w = a * e - b * f + &three * (c * g) - &three * (d * h);
        let x = a * f + b * e + &three * (c * h) + &three * (d * g);
        let y = a * g + c * e - b * h - d * f;
        let z = a * h + d * e + b * g + c * f;
        Scalar::new(w, x, y, z)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return f.write_str(&format_rational(&self.w));
        }
        write!(
            f,
            "{} + {}*i + {}*r3 + {}*i*r3",
            format_rational(&self.w),
            format_rational(&self.x),
            format_rational(&self.y),
            format_rational(&self.z)
        )
    }
}

impl FromStr for Scalar {
    type Err = ParseError;

    /// Accepts either a bare rational or the four-term form
    /// `w + x*i + y*r3 + z*i*r3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(" + ").collect();
        match parts.as_slice() {
            [r] => Ok(Scalar::from_rational(parse_rational(r)?)),
            [w, x, y, z] => {
                let strip = |part: &str, suffix: &str| -> Result<Rational, ParseError> {
                    let body = part
                        .trim()
                        .strip_suffix(suffix)
                        .ok_or_else(|| ParseError::Scalar(s.to_string()))?;
                    parse_rational(body)
                };
                Ok(Scalar::new(
                    parse_rational(w)?,
                    strip(x, "*i")?,
                    strip(y, "*r3")?,
                    strip(z, "*i*r3")?,
                ))
            }
            _ => Err(ParseError::Scalar(s.to_string())),
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(w: (i64, i64), x: (i64, i64), y: (i64, i64), z: (i64, i64)) -> Scalar {
        Scalar::new(
            rational(w.0, w.1),
            rational(x.0, x.1),
            rational(y.0, y.1),
            rational(z.0, z.1),
        )
    }

    #[test]
    fn addition_examples() {
        assert_eq!(Scalar::one() + Scalar::i(), s((1, 1), (1, 1), (0, 1), (0, 1)));
        assert_eq!(Scalar::from_ratio(1, 2) + Scalar::from_ratio(1, 2), Scalar::one());
    }

    #[test]
    fn multiplication_table() {
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from_int(-1));
        assert_eq!(Scalar::sqrt3() * Scalar::sqrt3(), Scalar::from_int(3));
        let inv_sqrt3 = s((0, 1), (0, 1), (1, 3), (0, 1));
        assert_eq!(inv_sqrt3 * Scalar::sqrt3(), Scalar::one());
        let ir3 = Scalar::i() * Scalar::sqrt3();
        assert_eq!(&ir3 * &ir3, Scalar::from_int(-3));
    }

    #[test]
    fn conjugation() {
        assert_eq!(Scalar::i().conj(), -Scalar::i());
        assert_eq!(Scalar::sqrt3().conj(), Scalar::sqrt3());
    }

    #[test]
    fn inversion() {
        assert_eq!(Scalar::from_int(2).invert().unwrap(), Scalar::from_ratio(1, 2));
        assert_eq!(Scalar::i().invert().unwrap(), -Scalar::i());
        // (1 + r3)(-1 + r3) = 2
        let a = Scalar::one() + Scalar::sqrt3();
        let expected = s((-1, 2), (0, 1), (1, 2), (0, 1));
        assert_eq!(a.invert().unwrap(), expected);
        assert!(Scalar::zero().invert().is_err());
    }

    #[test]
    fn real_sign_of_mixed_values() {
        // 2 - r3 > 0, 1 - r3 < 0
        let a = s((2, 1), (0, 1), (-1, 1), (0, 1));
        let b = s((1, 1), (0, 1), (-1, 1), (0, 1));
        assert_eq!(a.real_sign(), Some(Ordering::Greater));
        assert_eq!(b.real_sign(), Some(Ordering::Less));
        assert_eq!(Scalar::i().real_sign(), None);
    }

    #[test]
    fn string_form() {
        assert_eq!(Scalar::from_ratio(3, 4).to_string(), "3/4");
        assert_eq!(Scalar::zero().to_string(), "0");
        let v = s((1, 2), (-1, 1), (0, 1), (2, 3));
        assert_eq!(v.to_string(), "1/2 + -1*i + 0*r3 + 2/3*i*r3");
        assert_eq!(v.to_string().parse::<Scalar>().unwrap(), v);
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("1 + 2".parse::<Scalar>().is_err());
        assert!("+5".parse::<Scalar>().is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-20i64..20, 1i64..7).prop_map(|(n, d)| rational(n, d))
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (arb_rational(), arb_rational(), arb_rational(), arb_rational())
            .prop_map(|(w, x, y, z)| Scalar::new(w, x, y, z))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        }

        #[test]
        fn conj_is_involutive_homomorphism(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        }

        #[test]
        fn inverse_is_exact(a in arb_scalar()) {
            prop_assume!(!a.is_zero());
            prop_assert!((&a * &a.invert().unwrap()).is_one());
        }

        #[test]
        fn display_parse_round_trip(a in arb_scalar()) {
            prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
        }
    }
}
