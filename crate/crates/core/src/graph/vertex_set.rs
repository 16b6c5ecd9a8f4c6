use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use super::MAX_ORDER;

/// A subset of the vertices `0..universe` of some graph, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    bits: u64,
    universe: usize,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        debug_assert!(universe <= MAX_ORDER);
        VertexSet { bits: 0, universe }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            bits: full_mask(universe),
            universe,
        }
    }

    /// Builds a set from a raw mask. Bits at or above `universe` are dropped.
    pub fn from_bits(bits: u64, universe: usize) -> Self {
        VertexSet {
            bits: bits & full_mask(universe),
            universe,
        }
    }

    /// Returns `None` if any member is outside `0..universe`.
    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Option<Self> {
        let mut bits = 0u64;
        for v in members {
            if v >= universe {
                return None;
            }
            bits |= 1 << v;
        }
        Some(VertexSet { bits, universe })
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.bits |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.bits &= !(1 << v);
        }
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn complement(&self) -> Self {
        VertexSet {
            bits: !self.bits & full_mask(self.universe),
            universe: self.universe,
        }
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        VertexSet {
            bits: self.bits | other.bits,
            universe: self.universe.max(other.universe),
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> Self {
        VertexSet {
            bits: self.bits & other.bits,
            universe: self.universe.min(other.universe),
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> Members {
        Members(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Ascending iterator over the members of a mask.
#[derive(Clone)]
pub struct Members(pub(crate) u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

// Lexicographic order on the ascending member sequences.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let a = VertexSet::from_members(5, [0, 1, 4]).unwrap();
        let b = VertexSet::from_members(5, [0, 2]).unwrap();
        let c = VertexSet::from_members(5, [0, 1]).unwrap();
        let mut v = vec![b, a, c];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn out_of_range_member_rejected() {
        assert!(VertexSet::from_members(3, [0, 3]).is_none());
    }

    #[test]
    fn complement_stays_in_universe() {
        let s = VertexSet::from_members(4, [1]).unwrap();
        assert_eq!(s.complement().to_vec(), vec![0, 2, 3]);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(64).complement().len(), 0);
    }
}
