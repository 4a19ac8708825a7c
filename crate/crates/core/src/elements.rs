//! Finite sets of ground-set elements, stored as 64-bit masks.
//!
//! Elements are 0-based internally. The ordering on sets is lexicographic on
//! the sorted element lists, so `{0,1,3} < {0,2,4} < {1,2,3,4}`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ELEMENTS: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_ELEMENTS);
        ElemSet(1u64 << i)
    }

    /// Builds a set from 1-based labels, rejecting labels outside `1..=n`.
    pub fn from_one_based(labels: &[usize], n: usize) -> Result<Self> {
        let mut s = ElemSet::EMPTY;
        for &l in labels {
            if l == 0 || l > n {
                return Err(Error::Malformed(format!("element label {l} outside 1..={n}")));
            }
            s.insert(l - 1);
        }
        Ok(s)
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_ELEMENTS);
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < MAX_ELEMENTS {
            self.0 &= !(1u64 << i);
        }
    }

    pub fn with(self, i: usize) -> Self {
        let mut s = self;
        s.insert(i);
        s
    }

    pub fn without(self, i: usize) -> Self {
        let mut s = self;
        s.remove(i);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ElemSet) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> Self {
        ElemSet(self.0 & !other.0)
    }

    /// Complement inside `{0, ..., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        ElemSet::full(n).difference(self)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, in increasing order of bitmask.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(0) }
    }

    /// Re-indexes the set through `map`, dropping elements that map to `None`.
    pub fn relabel(self, map: &[Option<usize>]) -> Self {
        self.iter().filter_map(|i| map.get(i).copied().flatten()).collect()
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = ElemSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Displays the set with 1-based labels, e.g. `{1,2,4}`.
impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// Serialized as a sorted list of 1-based labels.
impl serde::Serialize for ElemSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter().map(|i| i + 1))
    }
}

impl<'de> serde::Deserialize<'de> for ElemSet {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let xs = Vec::<usize>::deserialize(de)?;
        ElemSet::from_one_based(&xs, MAX_ELEMENTS).map_err(serde::de::Error::custom)
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElemSet;

    fn next(&mut self) -> Option<ElemSet> {
        let cur = self.next?;
        // standard sub-mask enumeration in increasing order
        let succ = (cur | !self.mask).wrapping_add(1) & self.mask;
        self.next = (succ != 0).then_some(succ);
        Some(ElemSet(cur))
    }
}

/// Inclusion-minimal members of `sets`, sorted and deduplicated.
pub fn minimal_sets(sets: &[ElemSet]) -> Vec<ElemSet> {
    let mut out: Vec<ElemSet> = sets
        .iter()
        .copied()
        .filter(|s| !sets.iter().any(|t| t.is_subset(*s) && t != s))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Inclusion-maximal members of `sets`, sorted and deduplicated.
pub fn maximal_sets(sets: &[ElemSet]) -> Vec<ElemSet> {
    let mut out: Vec<ElemSet> = sets
        .iter()
        .copied()
        .filter(|s| !sets.iter().any(|t| s.is_subset(*t) && t != s))
        .collect();
    out.sort();
    out.dedup();
    out
}
