use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A subset of the elements `0..n` of a poset, stored as a fixed-width bitset.
///
/// Two sets are only comparable when built for the same `n`. The ordering is the
/// lexicographic order of the sorted member lists.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ElementSet {
    words: SmallVec<[u64; 2]>,
}

impl ElementSet {
    pub fn empty(n: usize) -> ElementSet {
        ElementSet { words: SmallVec::from_elem(0, n.div_ceil(64)) }
    }

    pub fn full(n: usize) -> ElementSet {
        let mut s = ElementSet::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, items: I) -> ElementSet {
        let mut s = ElementSet::empty(n);
        for i in items {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let t = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(k * 64 + t)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        ElementSet { words }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        ElementSet { words }
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Complement inside `0..n`.
    pub fn complement(&self, n: usize) -> ElementSet {
        ElementSet::full(n).difference(self)
    }
}

impl Ord for ElementSet {
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

/// Sorts by cardinality, then lexicographically.
pub fn sort_by_size_then_lex(sets: &mut [ElementSet]) {
    sets.sort_by_cached_key(|s| (s.len(), s.to_vec()));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = ElementSet::empty(130);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert!(s.contains(64));
        s.remove(64);
        assert!(!s.contains(64));
        let c = s.complement(130);
        assert_eq!(c.len(), 128);
        assert!(c.is_disjoint(&s));
        assert!(!s.contains(500));
    }

    #[test]
    fn lexicographic_order() {
        let a = ElementSet::from_indices(5, [0, 3]);
        let b = ElementSet::from_indices(5, [0, 2, 4]);
        let c = ElementSet::from_indices(5, [0]);
        assert!(b < a);
        assert!(c < b);
        let mut v = vec![a.clone(), b.clone(), c.clone(), ElementSet::empty(5)];
        sort_by_size_then_lex(&mut v);
        assert_eq!(v, vec![ElementSet::empty(5), c, a, b]);
    }
}
