//! Fixed-width element sets.
//!
//! Every group handled by this crate has at most [`MAX_ORDER`] elements, so a
//! subset of a group fits in four machine words. Sets carry no reference to
//! their group; callers pair them with the `GroupTable` they index into.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Hard upper bound on group order (width of an [`ElementSet`]).
pub const MAX_ORDER: usize = 256;

const WORDS: usize = MAX_ORDER / 64;

/// A subset of `{0, .., MAX_ORDER-1}` stored as a bitset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ElementSet {
    words: [u64; WORDS],
}

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet { words: [0; WORDS] };

    pub fn new() -> Self {
        Self::EMPTY
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ORDER);
        let mut s = Self::EMPTY;
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = !0;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(x: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(x);
        s
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        let (w, b) = (x >> 6, x & 63);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.words[x >> 6] &= !(1 << (x & 63));
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < MAX_ORDER && self.words[x >> 6] & (1 << (x & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        let mut r = *self;
        r.union_with(other);
        r
    }

    #[inline]
    pub fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        let mut r = *self;
        for (a, b) in r.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
        r
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        let mut r = *self;
        r.subtract(other);
        r
    }

    #[inline]
    pub fn subtract(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words.iter()).any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    /// Complement relative to `{0, .., n-1}`.
    pub fn complement(&self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Smallest element strictly greater than `x`.
    pub fn next_after(&self, x: usize) -> Option<usize> {
        let start = x + 1;
        if start >= MAX_ORDER {
            return None;
        }
        let (mut w, b) = (start >> 6, start & 63);
        let mut word = self.words[w] & (!0u64 << b);
        loop {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
            w += 1;
            if w == WORDS {
                return None;
            }
            word = self.words[w];
        }
    }

    /// Total order used for canonical representatives: the set containing the
    /// smallest element of the symmetric difference is smaller. For sets of
    /// equal size this matches lexicographic order on sorted element lists.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        for (a, b) in self.words.iter().zip(other.words.iter()) {
            let d = a ^ b;
            if d != 0 {
                let bit = d & d.wrapping_neg();
                return if a & bit != 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        Ordering::Equal
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { set: self, word: 0, bits: self.words[0] }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    set: &'a ElementSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let t = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + t);
            }
            self.word += 1;
            if self.word == WORDS {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&x) = v.iter().find(|&&x| x >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("element {x} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_complement() {
        assert_eq!(ElementSet::full(0).len(), 0);
        assert_eq!(ElementSet::full(64).len(), 64);
        assert_eq!(ElementSet::full(200).len(), 200);
        let s: ElementSet = [1, 5, 130].into_iter().collect();
        assert_eq!(s.complement(200).len(), 197);
        assert!(!s.complement(200).contains(130));
    }

    #[test]
    fn next_after_crosses_words() {
        let s: ElementSet = [3, 64, 199].into_iter().collect();
        assert_eq!(s.next_after(3), Some(64));
        assert_eq!(s.next_after(64), Some(199));
        assert_eq!(s.next_after(199), None);
        assert_eq!(s.first(), Some(3));
    }

    proptest! {
        #[test]
        fn iter_roundtrip(v in proptest::collection::btree_set(0usize..MAX_ORDER, 0..40)) {
            let s: ElementSet = v.iter().copied().collect();
            prop_assert_eq!(s.len(), v.len());
            prop_assert_eq!(s.to_vec(), v.into_iter().collect::<Vec<_>>());
        }

        #[test]
        fn lex_cmp_matches_sorted_vec(
            a in proptest::collection::btree_set(0usize..200, 4),
            b in proptest::collection::btree_set(0usize..200, 4),
        ) {
            let sa: ElementSet = a.iter().copied().collect();
            let sb: ElementSet = b.iter().copied().collect();
            let va: Vec<_> = a.into_iter().collect();
            let vb: Vec<_> = b.into_iter().collect();
            prop_assert_eq!(sa.lex_cmp(&sb), va.cmp(&vb));
        }
    }
}
