//! Closed intervals on a half-unit grid and axis-aligned boxes built from them.
//!
//! Endpoints are stored doubled, so the grid value `5` means the real number
//! 5/2. All of the classification data lives on even (integer) coordinates;
//! the doubled representation exists so that the compressible exemplars with
//! half-integer endpoints are exact as well.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A closed interval `[lo/2, hi/2]` of positive length.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "(i32, i32)", try_from = "(i32, i32)")]
pub struct Interval {
    lo: i32,
    hi: i32,
}

impl Interval {
    /// Interval with integer endpoints `[a, b]`.
    pub fn new(a: i32, b: i32) -> Self {
        Self::from_doubled(2 * a, 2 * b).expect("integer endpoints with a < b")
    }

    /// Interval from doubled (half-unit) endpoints.
    pub fn from_doubled(lo: i32, hi: i32) -> Result<Self> {
        if lo >= hi {
            return Err(Error::DegenerateInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.hi
    }

    /// Endpoints as integers, if both are even in doubled units.
    pub fn as_integer(&self) -> Option<(i32, i32)> {
        if self.lo % 2 == 0 && self.hi % 2 == 0 {
            Some((self.lo / 2, self.hi / 2))
        } else {
            None
        }
    }

    /// Two intervals are adjacent when they share exactly one point.
    pub fn adjacent(&self, other: &Interval) -> bool {
        self.hi == other.lo || other.hi == self.lo
    }

    /// Reflection about `(s+1)/2`: `[a, b] -> [s+1-b, s+1-a]` (integer grid).
    pub fn reflect(&self, s: u32) -> Interval {
        let m = 2 * (s as i32 + 1);
        Interval {
            lo: m - self.hi,
            hi: m - self.lo,
        }
    }
}

impl From<Interval> for (i32, i32) {
    fn from(iv: Interval) -> Self {
        (iv.lo, iv.hi)
    }
}

impl TryFrom<(i32, i32)> for Interval {
    type Error = Error;
    fn try_from(p: (i32, i32)) -> Result<Self> {
        Interval::from_doubled(p.0, p.1)
    }
}

fn fmt_half(x: i32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if x % 2 == 0 {
        write!(f, "{}", x / 2)
    } else {
        write!(f, "{}/2", x)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        fmt_half(self.lo, f)?;
        write!(f, ",")?;
        fmt_half(self.hi, f)?;
        write!(f, "]")
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An axis-aligned box: the product of `N` intervals.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxN<const N: usize>(pub [Interval; N]);

impl<const N: usize> Serialize for BoxN<N> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(s)
    }
}

impl<'de, const N: usize> Deserialize<'de> for BoxN<N> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<Interval> = Vec::deserialize(d)?;
        let arr: [Interval; N] = v
            .try_into()
            .map_err(|_| serde::de::Error::custom("wrong box dimension"))?;
        Ok(BoxN(arr))
    }
}

pub type Box2 = BoxN<2>;
pub type Box3 = BoxN<3>;

impl<const N: usize> BoxN<N> {
    pub fn coords(&self) -> &[Interval; N] {
        &self.0
    }

    pub fn coord(&self, axis: usize) -> Interval {
        self.0[axis]
    }

    /// Per-axis touching pattern of a box pair. Symmetric in its arguments.
    pub fn eps_vector(&self, other: &BoxN<N>) -> EpsVector<N> {
        let mut bits = [false; N];
        for i in 0..N {
            bits[i] = self.0[i].adjacent(&other.0[i]);
        }
        EpsVector(bits)
    }

    /// Boxes are adjacent when some coordinate pair meets in exactly one point.
    pub fn adjacent(&self, other: &BoxN<N>) -> bool {
        (0..N).any(|i| self.0[i].adjacent(&other.0[i]))
    }
}

impl Box3 {
    pub fn new(a: Interval, b: Interval, c: Interval) -> Self {
        BoxN([a, b, c])
    }

    pub fn project2(&self, axes: [usize; 2]) -> Box2 {
        BoxN([self.0[axes[0]], self.0[axes[1]]])
    }
}

impl Box2 {
    pub fn of(a: Interval, b: Interval) -> Self {
        BoxN([a, b])
    }
}

impl<const N: usize> fmt::Display for BoxN<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, iv) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

impl<const N: usize> fmt::Debug for BoxN<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The 0/1 vector recording on which axes two boxes touch in a single point.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EpsVector<const N: usize>(pub [bool; N]);

impl<const N: usize> Serialize for EpsVector<N> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.code())
    }
}

impl<'de, const N: usize> Deserialize<'de> for EpsVector<N> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(EpsVector::from_code(u8::deserialize(d)?))
    }
}

impl<const N: usize> EpsVector<N> {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|b| !b)
    }

    /// Integer encoding, bit `i` for axis `i` (so a 3-D vector (a, b, c)
    /// becomes `a + 2b + 4c`).
    pub fn code(&self) -> u8 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &b)| (b as u8) << i)
            .sum()
    }

    pub fn from_code(code: u8) -> Self {
        let mut bits = [false; N];
        for (i, bit) in bits.iter_mut().enumerate() {
            *bit = code >> i & 1 == 1;
        }
        EpsVector(bits)
    }

    /// Axis permutation action: entry `i` of the result is entry
    /// `perm^{-1}(i)` of the input, i.e. `perm` sends axis `j` to `perm[j]`.
    pub fn permuted(&self, perm: &[usize; N]) -> Self {
        let mut bits = [false; N];
        for j in 0..N {
            bits[perm[j]] = self.0[j];
        }
        EpsVector(bits)
    }

    /// Coordinatewise partial order (used when comparing a compressed family
    /// against its incompressible image).
    pub fn le(&self, other: &EpsVector<N>) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *b || !*a)
    }
}

impl<const N: usize> fmt::Debug for EpsVector<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", *b as u8)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_adjacency() {
        let a = Interval::new(0, 1);
        let b = Interval::new(1, 2);
        let c = Interval::new(1, 3);
        let d = Interval::new(2, 4);
        assert!(a.adjacent(&b));
        assert!(b.adjacent(&a));
        assert!(!c.adjacent(&d)); // overlap [2,3]
        assert!(!a.adjacent(&a)); // identical intervals overlap
    }

    #[test]
    fn degenerate_interval_rejected() {
        assert!(Interval::from_doubled(3, 3).is_err());
        assert!(Interval::from_doubled(4, 2).is_err());
    }

    #[test]
    fn half_grid_display() {
        let iv = Interval::from_doubled(5, 8).unwrap();
        assert_eq!(iv.to_string(), "[5/2,4]");
        assert_eq!(Interval::new(1, 3).to_string(), "[1,3]");
    }

    #[test]
    fn box_adjacency_and_eps() {
        // two boxes of the 12-element example family: touch on axis 2 only
        let b1 = Box3::new(Interval::new(0, 1), Interval::new(3, 4), Interval::new(1, 4));
        let b2 = Box3::new(Interval::new(0, 1), Interval::new(4, 5), Interval::new(2, 4));
        assert!(b1.adjacent(&b2));
        assert_eq!(b1.eps_vector(&b2).code(), 2);
        assert!(!b1.adjacent(&b1));
        assert!(b1.eps_vector(&b1).is_zero());

        let far1 = Box2::of(Interval::new(0, 1), Interval::new(0, 1));
        let far2 = Box2::of(Interval::new(2, 3), Interval::new(2, 3));
        assert!(!far1.adjacent(&far2));
    }

    #[test]
    fn eps_code_round_trip() {
        for code in 0..8u8 {
            assert_eq!(EpsVector::<3>::from_code(code).code(), code);
        }
        let e = EpsVector([true, false, true]);
        assert_eq!(e.code(), 5);
    }

    #[test]
    fn eps_axis_permutation() {
        let e = EpsVector([true, false, false]);
        // cycle axes 0->1->2->0
        let rotated = e.permuted(&[1, 2, 0]);
        assert_eq!(rotated, EpsVector([false, true, false]));
    }

    #[test]
    fn reflection_about_level_midpoint() {
        let iv = Interval::new(1, 3);
        assert_eq!(iv.reflect(4), Interval::new(2, 4));
        assert_eq!(Interval::new(0, 1).reflect(4), Interval::new(4, 5));
    }
}
