//! Fixed-universe bitsets over group element indices.
//!
//! Subgroup member sets are subsets of `{0, .., order-1}` for one fixed
//! group; a packed bitset keeps the subset/intersection/union operations used
//! by the lattice algorithms cheap. Sets compare lexicographically by their
//! ascending member lists, which gives every collection of subgroups a
//! canonical order.

use std::cmp::Ordering;
use std::fmt;

/// A subset of `{0, .., universe-1}` stored as packed 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    words: Box<[u64]>,
}

impl ElementSet {
    /// The empty subset of a universe with `universe` points.
    pub fn empty(universe: usize) -> Self {
        let n_words = universe.div_ceil(64).max(1);
        ElementSet {
            universe,
            words: vec![0u64; n_words].into_boxed_slice(),
        }
    }

    /// The full subset `{0, .., universe-1}`.
    pub fn full(universe: usize) -> Self {
        let mut set = ElementSet::empty(universe);
        for i in 0..universe {
            set.insert(i);
        }
        set
    }

    /// Builds a set from member indices. Panics if an index is out of range.
    pub fn from_indices(universe: usize, indices: &[usize]) -> Self {
        let mut set = ElementSet::empty(universe);
        for &i in indices {
            set.insert(i);
        }
        set
    }

    /// Number of points in the universe (not the member count).
    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Inserts `i`, returning `true` if it was not already present.
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "index {i} out of universe {}", self.universe);
        let word = &mut self.words[i / 64];
        let mask = 1u64 << (i % 64);
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    /// Removes `i` if present.
    pub fn remove(&mut self, i: usize) {
        assert!(i < self.universe, "index {i} out of universe {}", self.universe);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    /// Member count.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// True if every member of `self` is a member of `other`.
    pub fn is_subset(&self, other: &Self) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a | b)
            .collect::<Vec<_>>()
            .into_boxed_slice();
        ElementSet {
            universe: self.universe,
            words,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a & b)
            .collect::<Vec<_>>()
            .into_boxed_slice();
        ElementSet {
            universe: self.universe,
            words,
        }
    }

    /// Iterates members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Members in ascending order.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

pub struct Iter<'a> {
    set: &'a ElementSet,
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * 64 + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_idx];
        }
    }
}

impl Ord for ElementSet {
    /// Lexicographic order on ascending member lists, so `{0,1} < {0,2} < {1}`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_remove() {
        let mut s = ElementSet::empty(100);
        assert!(s.is_empty());
        assert!(s.insert(0));
        assert!(s.insert(63));
        assert!(s.insert(64));
        assert!(s.insert(99));
        assert!(!s.insert(63));
        assert_eq!(s.len(), 4);
        assert!(s.contains(64));
        assert!(!s.contains(65));
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn iteration_is_ascending() {
        let s = ElementSet::from_indices(130, &[5, 129, 0, 64, 63]);
        assert_eq!(s.to_vec(), vec![0, 5, 63, 64, 129]);
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn subset_union_intersection() {
        let a = ElementSet::from_indices(10, &[1, 2, 3]);
        let b = ElementSet::from_indices(10, &[2, 3, 4]);
        assert!(!a.is_subset(&b));
        assert!(a.intersection(&b).is_subset(&a));
        assert_eq!(a.intersection(&b).to_vec(), vec![2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
        assert!(ElementSet::empty(10).is_subset(&a));
        assert!(a.is_subset(&ElementSet::full(10)));
    }

    #[test]
    fn lexicographic_order() {
        let u = 8;
        let s01 = ElementSet::from_indices(u, &[0, 1]);
        let s02 = ElementSet::from_indices(u, &[0, 2]);
        let s1 = ElementSet::from_indices(u, &[1]);
        let empty = ElementSet::empty(u);
        assert!(s01 < s02);
        assert!(s02 < s1);
        assert!(empty < s01);
        assert_eq!(s01.cmp(&s01), Ordering::Equal);
    }

    #[test]
    fn full_of_zero_universe() {
        let s = ElementSet::full(0);
        assert!(s.is_empty());
        assert_eq!(s.iter().count(), 0);
    }
}
