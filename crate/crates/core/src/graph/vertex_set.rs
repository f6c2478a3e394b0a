use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// Largest vertex count any graph in this crate may have.
pub const MAX_VERTICES: usize = 512;

const WORDS: usize = MAX_VERTICES / 64;

/// A set of vertex ids in `0..MAX_VERTICES`, stored as a fixed bitset.
///
/// The set is `Copy`; the solvers clone sets freely in their inner loops.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        let mut s = VertexSet::new();
        let whole = n / 64;
        for w in s.words.iter_mut().take(whole) {
            *w = u64::MAX;
        }
        if n % 64 != 0 {
            s.words[whole] = (1u64 << (n % 64)) - 1;
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        had
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Largest member, or `None` when empty.
    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    /// Size of `self ∩ other` without materializing it.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `{0..n} \ self`.
    pub fn complement_within(&self, n: usize) -> VertexSet {
        VertexSet::full(n) - *self
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words[0],
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Members below `v`.
    pub fn below(&self, v: usize) -> VertexSet {
        *self & VertexSet::full(v.min(MAX_VERTICES))
    }

    /// Members above `v`.
    pub fn above(&self, v: usize) -> VertexSet {
        *self - VertexSet::full((v + 1).min(MAX_VERTICES))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl From<&[usize]> for VertexSet {
    fn from(vs: &[usize]) -> Self {
        vs.iter().collect()
    }
}

pub struct Iter<'a> {
    words: &'a [u64; WORDS],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= WORDS {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $m(mut self, rhs: VertexSet) -> VertexSet {
                for (a, b) in self.words.iter_mut().zip(rhs.words) {
                    *a = *a $op b;
                }
                self
            }
        }
        impl $tr<&VertexSet> for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $m(self, rhs: &VertexSet) -> VertexSet {
                self.$m(*rhs)
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $am(&mut self, rhs: VertexSet) {
                *self = self.$m(rhs);
            }
        }
        impl $atr<&VertexSet> for VertexSet {
            #[inline]
            fn $am(&mut self, rhs: &VertexSet) {
                *self = self.$m(*rhs);
            }
        }
    };
}

binop!(BitAnd, bitand, BitAndAssign, bitand_assign, &);
binop!(BitOr, bitor, BitOrAssign, bitor_assign, |);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(mut self, rhs: VertexSet) -> VertexSet {
        for (a, b) in self.words.iter_mut().zip(rhs.words) {
            *a &= !b;
        }
        self
    }
}

impl Sub<&VertexSet> for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: &VertexSet) -> VertexSet {
        self - *rhs
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        *self = *self - rhs;
    }
}

impl SubAssign<&VertexSet> for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: &VertexSet) {
        *self = *self - *rhs;
    }
}

/// Complement within the full id range; combine with `& VertexSet::full(n)`.
impl Not for VertexSet {
    type Output = VertexSet;
    fn not(mut self) -> VertexSet {
        for w in &mut self.words {
            *w = !*w;
        }
        self
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = ids.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex id {bad} exceeds {MAX_VERTICES}"
            )));
        }
        Ok(ids.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement() {
        assert_eq!(VertexSet::full(0).len(), 0);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(65).len(), 65);
        assert_eq!(VertexSet::full(MAX_VERTICES).len(), MAX_VERTICES);
        let s = VertexSet::from([1, 3]);
        assert_eq!(s.complement_within(5).to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn iteration_crosses_word_boundaries() {
        let s = VertexSet::from([0, 63, 64, 200, 511]);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 200, 511]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.last(), Some(511));
        assert_eq!(s.above(63).to_vec(), vec![64, 200, 511]);
        assert_eq!(s.below(64).to_vec(), vec![0, 63]);
    }

    #[test]
    fn algebra() {
        let a = VertexSet::from([1, 2, 3]);
        let b = VertexSet::from([3, 4]);
        assert_eq!((a | b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!((a & b).to_vec(), vec![3]);
        assert_eq!((a - b).to_vec(), vec![1, 2]);
        assert_eq!(a.intersection_len(&b), 1);
        assert!(VertexSet::from([1, 2]).is_subset(&a));
        assert!(!a.is_disjoint(&b));
        assert!(VertexSet::new().first().is_none());
    }

    #[test]
    fn serde_as_sorted_list() {
        let s = VertexSet::from([5, 1, 9]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, "[1,5,9]");
        let back: VertexSet = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<VertexSet>("[600]").is_err());
    }
}
