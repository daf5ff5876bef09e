use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// The four triplet boson families. `a`, `c` create triplets, `b`, `d`
/// create anti-triplets.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'a',
            Family::B => 'b',
            Family::C => 'c',
            Family::D => 'd',
        }
    }

    /// Creators of `b` and `d` carry an upper (anti-triplet) index.
    pub fn is_antitriplet(self) -> bool {
        matches!(self, Family::B | Family::D)
    }
}

/// One of the twelve boson modes, `(family, color)` with color in 1..=3.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mode {
    pub family: Family,
    pub color: u8,
}

impl Mode {
    pub fn new(family: Family, color: u8) -> Self {
        assert!((1..=3).contains(&color), "color {color} outside 1..=3");
        Mode { family, color }
    }

    pub fn slot(self) -> usize {
        self.family.index() * 3 + (self.color as usize - 1)
    }

    pub fn all() -> impl Iterator<Item = Mode> {
        Family::ALL
            .into_iter()
            .flat_map(|f| (1..=3).map(move |c| Mode::new(f, c)))
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.color)
    }
}

pub const MODES: usize = 12;

/// `prod_m (creator_m)^{n_m} |0>`, without normalization factors.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FockMonomial {
    exps: [u8; MODES],
}

impl FockMonomial {
    pub fn vacuum() -> Self {
        FockMonomial::default()
    }

    pub fn from_exponents(exps: [u8; MODES]) -> Self {
        FockMonomial { exps }
    }

    /// Builds a monomial from `(mode, power)` pairs.
    pub fn from_modes(modes: &[(Mode, u8)]) -> Self {
        let mut m = FockMonomial::vacuum();
        for &(mode, n) in modes {
            m.exps[mode.slot()] += n;
        }
        m
    }

    pub fn exponents(&self) -> &[u8; MODES] {
        &self.exps
    }

    pub fn get(&self, mode: Mode) -> u8 {
        self.exps[mode.slot()]
    }

    pub(crate) fn raised(mut self, mode: Mode) -> Self {
        self.exps[mode.slot()] += 1;
        self
    }

    pub(crate) fn lowered(mut self, mode: Mode) -> Option<Self> {
        let e = &mut self.exps[mode.slot()];
        if *e == 0 {
            return None;
        }
        *e -= 1;
        Some(self)
    }

    /// Per-family quanta `(N_a, N_b, N_c, N_d)`.
    pub fn counts(&self) -> [u32; 4] {
        let mut out = [0u32; 4];
        for (slot, &e) in self.exps.iter().enumerate() {
            out[slot / 3] += e as u32;
        }
        out
    }

    pub fn total(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// `prod_m n_m!`, the squared norm of the monomial.
    pub fn norm_weight(&self) -> num_bigint::BigInt {
        let mut w = num_bigint::BigInt::from(1u32);
        for &e in &self.exps {
            for k in 2..=e as u32 {
                w *= k;
            }
        }
        w
    }

    /// Weight as `(2 I_3, 3 Y)` under the total SU(3) generators.
    pub fn weight(&self) -> (i32, i32) {
        let mut two_i3 = 0i32;
        let mut three_y = 0i32;
        for mode in Mode::all() {
            let n = self.get(mode) as i32;
            let (t, y) = match mode.color {
                1 => (1, 1),
                2 => (-1, 1),
                _ => (0, -2),
            };
            let sign = if mode.family.is_antitriplet() { -1 } else { 1 };
            two_i3 += sign * t * n;
            three_y += sign * y * n;
        }
        (two_i3, three_y)
    }

    /// Image under the relabeling `a <-> c`, `b <-> d`.
    pub fn swap_pairs(&self) -> Self {
        let mut exps = [0u8; MODES];
        for slot in 0..MODES {
            exps[(slot + 6) % MODES] = self.exps[slot];
        }
        FockMonomial { exps }
    }
}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Mode::all()
            .filter(|&m| self.get(m) > 0)
            .map(|m| match self.get(m) {
                1 => m.to_string(),
                n => format!("{m}^{n}"),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("|0>")
        } else {
            write!(f, "|{}>", parts.join(" "))
        }
    }
}

fn binom2(n: u32) -> u64 {
    let n = n as u64;
    (n + 2) * (n + 1) / 2
}

/// Cardinality `prod_f C(N_f + 2, 2)` of a sector, without enumerating it.
pub fn sector_size(counts: [u32; 4]) -> u64 {
    counts.iter().map(|&n| binom2(n)).product()
}

/// Upper bound on sector sizes accepted from untrusted input.
pub const MAX_SECTOR_SIZE: u64 = 1 << 20;

/// All monomials with fixed family counts, in lexicographic order of the
/// exponent tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorBasis {
    counts: [u32; 4],
    monomials: Vec<FockMonomial>,
    index: HashMap<FockMonomial, usize>,
}

fn family_splits(n: u32) -> Vec<[u8; 3]> {
    let n = u8::try_from(n).expect("family count exceeds 255 quanta");
    let mut out = Vec::new();
    for e1 in 0..=n {
        for e2 in 0..=(n - e1) {
            out.push([e1, e2, n - e1 - e2]);
        }
    }
    out
}

impl SectorBasis {
    pub fn new(counts: [u32; 4]) -> Self {
        let splits: Vec<Vec<[u8; 3]>> = counts.iter().map(|&n| family_splits(n)).collect();
        let mut monomials = Vec::with_capacity(sector_size(counts) as usize);
        for sa in &splits[0] {
            for sb in &splits[1] {
                for sc in &splits[2] {
                    for sd in &splits[3] {
                        let mut exps = [0u8; MODES];
                        exps[0..3].copy_from_slice(sa);
                        exps[3..6].copy_from_slice(sb);
                        exps[6..9].copy_from_slice(sc);
                        exps[9..12].copy_from_slice(sd);
                        monomials.push(FockMonomial::from_exponents(exps));
                    }
                }
            }
        }
        monomials.sort();
        let index = monomials.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        SectorBasis {
            counts,
            monomials,
            index,
        }
    }

    /// Like [`SectorBasis::new`] but refuses sectors above [`MAX_SECTOR_SIZE`].
    pub fn checked(counts: [u32; 4]) -> Result<Self, ParseError> {
        if counts.iter().any(|&n| n > 255) || sector_size(counts) > MAX_SECTOR_SIZE {
            return Err(ParseError::SectorTooLarge(counts));
        }
        Ok(SectorBasis::new(counts))
    }

    pub fn counts(&self) -> [u32; 4] {
        self.counts
    }

    pub fn monomials(&self) -> &[FockMonomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &FockMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// Enumerates the sector with the given family counts.
pub fn enumerate_sector(na: u32, nb: u32, nc: u32, nd: u32) -> Arc<SectorBasis> {
    Arc::new(SectorBasis::new([na, nb, nc, nd]))
}

/// Every monomial with total quanta at most `max_total`, sector by sector.
pub fn monomials_up_to(max_total: u32) -> Vec<FockMonomial> {
    let mut out = Vec::new();
    for na in 0..=max_total {
        for nb in 0..=(max_total - na) {
            for nc in 0..=(max_total - na - nb) {
                for nd in 0..=(max_total - na - nb - nc) {
                    out.extend_from_slice(SectorBasis::new([na, nb, nc, nd]).monomials());
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sector_cardinalities() {
        let s = enumerate_sector(1, 0, 0, 0);
        assert_eq!(s.len(), 3);
        assert_eq!(enumerate_sector(1, 1, 1, 1).len(), 81);
        assert_eq!(enumerate_sector(2, 1, 0, 0).len(), 18);
        assert_eq!(enumerate_sector(0, 0, 0, 0).len(), 1);
    }

    #[test]
    fn sector_is_sorted_and_unique() {
        let s = enumerate_sector(2, 1, 1, 0);
        assert_eq!(s.len() as u64, sector_size([2, 1, 1, 0]));
        assert!(s.monomials().windows(2).all(|w| w[0] < w[1]));
        for (i, m) in s.monomials().iter().enumerate() {
            assert_eq!(s.position(m), Some(i));
            assert_eq!(m.counts(), [2, 1, 1, 0]);
        }
    }

    #[test]
    fn monomial_weights() {
        let a1 = FockMonomial::from_modes(&[(Mode::new(Family::A, 1), 1)]);
        let a3 = FockMonomial::from_modes(&[(Mode::new(Family::A, 3), 1)]);
        let b3 = FockMonomial::from_modes(&[(Mode::new(Family::B, 3), 1)]);
        assert_eq!(a1.weight(), (1, 1));
        assert_eq!(a3.weight(), (0, -2));
        assert_eq!(b3.weight(), (0, 2));
        for m in monomials_up_to(3) {
            let c = m.counts();
            let tri = c[0] as i32 - c[1] as i32 + c[2] as i32 - c[3] as i32;
            assert_eq!((m.weight().1 - tri).rem_euclid(3), 0);
        }
    }

    #[test]
    fn interior_enumeration_counts() {
        // C(12 + k, k) monomials with total exactly k, summed over k <= 2
        assert_eq!(monomials_up_to(2).len(), 1 + 12 + 78);
    }

    #[test]
    fn checked_sector_rejects_huge_counts() {
        assert!(SectorBasis::checked([200, 200, 200, 200]).is_err());
        assert!(SectorBasis::checked([1, 1, 1, 1]).is_ok());
    }
}
