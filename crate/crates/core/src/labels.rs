//! Irrep labels and integer weights shared by the decomposer and the oracle.

use std::fmt;

use serde::{Deserialize, Serialize};

/// SU(3) irrep `(p, q)`: `p` single boxes, `q` double boxes.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IrrepLabel {
    pub p: u32,
    pub q: u32,
}

impl IrrepLabel {
    pub const fn new(p: u32, q: u32) -> Self {
        IrrepLabel { p, q }
    }

    pub fn dim(self) -> u64 {
        let (p, q) = (self.p as u64, self.q as u64);
        (p + 1) * (q + 1) * (p + q + 2) / 2
    }

    pub fn conjugate(self) -> Self {
        IrrepLabel::new(self.q, self.p)
    }

    /// `p - q mod 3`.
    pub fn triality(self) -> u32 {
        (self.p + 2 * self.q) % 3
    }

    /// Weight annihilated by `T+` and `U+`: `p` copies of the first triplet
    /// weight plus `q` copies of the third anti-triplet weight.
    pub fn highest_weight(self) -> Weight {
        Weight::new(self.p as i32, (self.p + 2 * self.q) as i32)
    }

    /// Every label with `p + q <= bound`, sorted.
    pub fn all_up_to(bound: u32) -> Vec<IrrepLabel> {
        let mut out = Vec::new();
        for p in 0..=bound {
            for q in 0..=bound - p {
                out.push(IrrepLabel::new(p, q));
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// `(2 I3, 3 Y)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub two_i3: i32,
    pub three_y: i32,
}

impl Weight {
    pub const fn new(two_i3: i32, three_y: i32) -> Self {
        Weight { two_i3, three_y }
    }

    /// Dynkin coordinates `(a, b)` with `2 I3 = a`, `3 Y = a + 2b`.
    pub fn to_dynkin(self) -> Option<(i32, i32)> {
        let diff = self.three_y - self.two_i3;
        (diff % 2 == 0).then_some((self.two_i3, diff / 2))
    }

    pub fn from_dynkin(a: i32, b: i32) -> Self {
        Weight::new(a, a + 2 * b)
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.two_i3 + o.two_i3, self.three_y + o.three_y)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(2I3={}, 3Y={})", self.two_i3, self.three_y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(IrrepLabel::new(0, 0).dim(), 1);
        assert_eq!(IrrepLabel::new(1, 0).dim(), 3);
        assert_eq!(IrrepLabel::new(1, 1).dim(), 8);
        assert_eq!(IrrepLabel::new(3, 0).dim(), 10);
        assert_eq!(IrrepLabel::new(2, 2).dim(), 27);
    }

    #[test]
    fn highest_weights() {
        assert_eq!(IrrepLabel::new(1, 0).highest_weight(), Weight::new(1, 1));
        assert_eq!(IrrepLabel::new(0, 1).highest_weight(), Weight::new(0, 2));
        assert_eq!(IrrepLabel::new(1, 1).highest_weight(), Weight::new(1, 3));
        for l in IrrepLabel::all_up_to(4) {
            let (a, b) = l.highest_weight().to_dynkin().unwrap();
            assert_eq!((a as u32, b as u32), (l.p, l.q));
        }
    }

    #[test]
    fn label_listing() {
        assert_eq!(IrrepLabel::all_up_to(0), vec![IrrepLabel::new(0, 0)]);
        assert_eq!(IrrepLabel::all_up_to(2).len(), 6);
    }
}
