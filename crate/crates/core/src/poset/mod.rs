//! Finite graded posets and the constructions used throughout the crate.
//!
//! A [`GradedPoset`] is given by its cover relations. Construction checks that
//! the covers are acyclic and admit a rank function with all minimal elements of
//! rank 1 and `r(y) = r(x) + 1` whenever `y` covers `x`; this also forces the
//! cover list to be transitively reduced.

mod catalog;
mod element_set;
mod ideals;
mod iso;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub use catalog::{h_poset, k_poset, minuscule_poset, MinusculeKind};
pub use element_set::{sort_by_size_then_lex, ElementSet};
pub use ideals::{
    enumerate_antichains, enumerate_antichains_with, enumerate_lower_ideals, enumerate_lower_ideals_with,
    ideals_lattice, ideals_lattice_with, IdealLattice, Limits, DEFAULT_MAX_IDEALS, MAX_IDEALS_ENV,
};
pub use iso::{anti_automorphisms, are_isomorphic, for_each_isomorphism, order_reversing_involutions};

#[derive(Debug, Clone)]
pub struct GradedPoset {
    n: usize,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    rank: Vec<u32>,
    below: Vec<ElementSet>,
    above: Vec<ElementSet>,
}

/// Sizes of the rank levels `P_1, …, P_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankLevels {
    pub sizes: Vec<usize>,
}

impl RankLevels {
    pub fn max(&self) -> usize {
        self.sizes.iter().copied().max().unwrap_or(0)
    }

    /// Whether exactly one level attains the maximal size.
    pub fn unique_max(&self) -> bool {
        let m = self.max();
        self.sizes.iter().filter(|&&s| s == m).count() == 1
    }
}

impl GradedPoset {
    /// Builds a poset on `0..n` from its cover pairs `(lower, upper)`.
    pub fn new(n: usize, covers: Vec<(usize, usize)>) -> Result<GradedPoset> {
        let mut covers = covers;
        covers.sort_unstable();
        covers.dedup();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in &covers {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!("cover ({a}, {b}) out of range for {n} elements")));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("self-cover at {a}")));
            }
            up[a].push(b);
            down[b].push(a);
        }

        // Kahn's algorithm; ranks are assigned as elements become available.
        let mut indegree: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| indegree[x] == 0).collect();
        let mut order = Vec::with_capacity(n);
        let mut rank = vec![0u32; n];
        while let Some(x) = queue.pop_front() {
            order.push(x);
            rank[x] = match down[x].first() {
                None => 1,
                Some(&z) => {
                    let r = rank[z];
                    if down[x].iter().any(|&w| rank[w] != r) {
                        return Err(Error::NotGraded(format!(
                            "lower covers of element {x} have different ranks"
                        )));
                    }
                    r + 1
                }
            };
            for &y in &up[x] {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if order.len() != n {
            return Err(Error::InvalidInput("cover relation contains a cycle".into()));
        }

        let mut below = vec![ElementSet::empty(n); n];
        for &x in &order {
            let mut s = ElementSet::empty(n);
            s.insert(x);
            for &z in &down[x] {
                s.union_with(&below[z]);
            }
            below[x] = s;
        }
        let mut above = vec![ElementSet::empty(n); n];
        for &x in order.iter().rev() {
            let mut s = ElementSet::empty(n);
            s.insert(x);
            for &y in &up[x] {
                s.union_with(&above[y]);
            }
            above[x] = s;
        }
        Ok(GradedPoset { n, covers, up, down, rank, below, above })
    }

    pub fn empty() -> GradedPoset {
        GradedPoset::new(0, Vec::new()).expect("empty poset")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn rank(&self, x: usize) -> u32 {
        self.rank[x]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    /// Number of rank levels `d` (0 for the empty poset).
    pub fn num_levels(&self) -> u32 {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    /// Principal lower ideal `I_{≤x}`.
    pub fn principal_ideal(&self, x: usize) -> &ElementSet {
        &self.below[x]
    }

    /// Principal upper ideal `I_{≥x}`.
    pub fn principal_filter(&self, x: usize) -> &ElementSet {
        &self.above[x]
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.le(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.down[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.up[x].is_empty()).collect()
    }

    /// Every maximal chain has the same length.
    pub fn is_pure(&self) -> bool {
        let d = self.num_levels();
        self.maximal_elements().iter().all(|&x| self.rank[x] == d)
    }

    pub fn rank_levels(&self) -> Result<RankLevels> {
        if !self.is_pure() {
            return Err(Error::NotGraded("maximal chains have different lengths".into()));
        }
        let mut sizes = vec![0usize; self.num_levels() as usize];
        for &r in &self.rank {
            sizes[r as usize - 1] += 1;
        }
        Ok(RankLevels { sizes })
    }

    /// Elements sorted by rank, ties by index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.n).collect();
        v.sort_by_key(|&x| (self.rank[x], x));
        v
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.n)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn down_closure(&self, s: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for x in s.iter() {
            out.union_with(&self.below[x]);
        }
        out
    }

    pub fn up_closure(&self, s: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        for x in s.iter() {
            out.union_with(&self.above[x]);
        }
        out
    }

    /// Minimal elements of the subposet `s`.
    pub fn min_of(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.n, s.iter().filter(|&x| self.below[x].intersection(s).len() == 1))
    }

    /// Maximal elements of the subposet `s`.
    pub fn max_of(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.n, s.iter().filter(|&x| self.above[x].intersection(s).len() == 1))
    }

    pub fn is_lower_ideal(&self, s: &ElementSet) -> bool {
        s.iter().all(|x| self.down[x].iter().all(|&z| s.contains(z)))
    }

    pub fn is_upper_ideal(&self, s: &ElementSet) -> bool {
        s.iter().all(|x| self.up[x].iter().all(|&y| s.contains(y)))
    }

    pub fn is_antichain(&self, s: &ElementSet) -> bool {
        s.iter().all(|x| self.below[x].intersection(s).len() == 1)
    }

    /// Minimal elements of `P ∖ I` for a lower ideal `I`; these are exactly the
    /// elements outside `I` whose lower covers all lie in `I`.
    pub fn min_outside(&self, ideal: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.n,
            (0..self.n).filter(|&x| !ideal.contains(x) && self.down[x].iter().all(|&z| ideal.contains(z))),
        )
    }

    /// The chain `[k]`.
    pub fn chain(k: usize) -> GradedPoset {
        let covers = (1..k).map(|i| (i - 1, i)).collect();
        GradedPoset::new(k, covers).expect("chains are graded")
    }

    /// The antichain on `k` elements.
    pub fn antichain(k: usize) -> GradedPoset {
        GradedPoset::new(k, Vec::new()).expect("antichains are graded")
    }

    /// Componentwise product; `(u, v)` has index `u·|Q| + v`.
    pub fn product(p: &GradedPoset, q: &GradedPoset) -> GradedPoset {
        let m = q.n;
        let mut covers = Vec::new();
        for u in 0..p.n {
            for v in 0..q.n {
                for &u2 in &p.up[u] {
                    covers.push((u * m + v, u2 * m + v));
                }
                for &v2 in &q.up[v] {
                    covers.push((u * m + v, u * m + v2));
                }
            }
        }
        GradedPoset::new(p.n * q.n, covers).expect("products of graded posets are graded")
    }

    /// Disjoint union; elements of later parts follow earlier ones.
    pub fn disjoint_union(parts: &[GradedPoset]) -> GradedPoset {
        let mut covers = Vec::new();
        let mut offset = 0;
        for p in parts {
            covers.extend(p.covers.iter().map(|&(a, b)| (a + offset, b + offset)));
            offset += p.n;
        }
        GradedPoset::new(offset, covers).expect("disjoint unions of graded posets are graded")
    }

    /// Ordinal sum `P_1 ⊕ ⋯ ⊕ P_k`: every element of a part lies below every
    /// element of the next nonempty part.
    pub fn ordinal_sum(parts: &[GradedPoset]) -> Result<GradedPoset> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("ordinal sum of no parts".into()));
        }
        let mut covers = Vec::new();
        let mut offset = 0;
        let mut prev_max: Vec<usize> = Vec::new();
        for p in parts.iter().filter(|p| !p.is_empty()) {
            covers.extend(p.covers.iter().map(|&(a, b)| (a + offset, b + offset)));
            let mins: Vec<usize> = p.minimal_elements().into_iter().map(|x| x + offset).collect();
            for &a in &prev_max {
                for &b in &mins {
                    covers.push((a, b));
                }
            }
            prev_max = p.maximal_elements().into_iter().map(|x| x + offset).collect();
            offset += p.n;
        }
        GradedPoset::new(offset, covers)
    }

    /// The dual poset `P^op`, same element indices.
    pub fn dual(&self) -> Result<GradedPoset> {
        if !self.is_pure() {
            return Err(Error::NotGraded("the dual of a non-pure poset is not graded".into()));
        }
        GradedPoset::new(self.n, self.covers.iter().map(|&(a, b)| (b, a)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains() {
        assert!(GradedPoset::chain(0).is_empty());
        let c1 = GradedPoset::chain(1);
        assert_eq!(c1.len(), 1);
        assert_eq!(c1.rank(0), 1);
        let c4 = GradedPoset::chain(4);
        assert_eq!(c4.covers().len(), 3);
        assert_eq!(c4.num_levels(), 4);
    }

    #[test]
    fn rejects_non_graded() {
        // 0 < 1 < 2 and 0 < 2 directly: cover list is not transitively reduced.
        assert!(matches!(GradedPoset::new(3, vec![(0, 1), (1, 2), (0, 2)]), Err(Error::NotGraded(_))));
        // cycle
        assert!(GradedPoset::new(2, vec![(0, 1), (1, 0)]).is_err());
        assert!(GradedPoset::new(2, vec![(0, 5)]).is_err());
    }

    #[test]
    fn products() {
        let p = k_poset(2);
        let one = GradedPoset::product(&GradedPoset::chain(1), &p);
        assert!(are_isomorphic(&one, &p).is_some());
        let d = GradedPoset::product(&GradedPoset::chain(2), &GradedPoset::chain(2));
        assert_eq!(d.len(), 4);
        assert_eq!(d.rank_levels().unwrap().sizes, vec![1, 2, 1]);
        for (a, b) in d.covers() {
            assert_eq!(d.rank(*b), d.rank(*a) + 1);
        }
    }

    #[test]
    fn ordinal_sums() {
        let c = GradedPoset::chain(3);
        let s = GradedPoset::ordinal_sum(std::slice::from_ref(&c)).unwrap();
        assert!(are_isomorphic(&s, &c).is_some());
        assert!(GradedPoset::ordinal_sum(&[]).is_err());
        let k3 = k_poset(3);
        assert_eq!(k3.len(), 8);
        assert_eq!(k3.rank_levels().unwrap().sizes, vec![1, 1, 1, 2, 1, 1, 1]);
        // labels 1,2,3,4,4',5,6,7: element 3 is "4", element 4 is "4'"
        assert!(!k3.comparable(3, 4));
        assert!(k3.lt(2, 3) && k3.lt(2, 4) && k3.lt(3, 5) && k3.lt(4, 5));
    }

    #[test]
    fn k_rank_levels() {
        for n in 1..=6 {
            let k = k_poset(n);
            let sizes = k.rank_levels().unwrap().sizes;
            let mut expected = vec![1; 2 * n + 1];
            expected[n] = 2;
            assert_eq!(sizes, expected);
        }
    }

    #[test]
    fn rank_levels_of_non_pure() {
        let p = GradedPoset::disjoint_union(&[GradedPoset::chain(1), GradedPoset::chain(2)]);
        assert!(matches!(p.rank_levels(), Err(Error::NotGraded(_))));
        assert!(p.dual().is_err());
    }

    #[test]
    fn min_and_max() {
        let p = GradedPoset::product(&GradedPoset::chain(2), &GradedPoset::chain(3));
        let all = p.full_set();
        assert_eq!(p.min_of(&all).to_vec(), vec![0]);
        assert_eq!(p.max_of(&all).to_vec(), vec![5]);
        let s = ElementSet::from_indices(6, [1, 3, 5]);
        assert_eq!(p.min_of(&s).to_vec(), vec![1, 3]);
        assert!(p.is_antichain(&ElementSet::from_indices(6, [2, 3])));
        assert!(!p.is_antichain(&ElementSet::from_indices(6, [0, 3])));
    }

    #[test]
    fn unique_max_levels() {
        for n in 1..=5 {
            for m in 1..=5 {
                let p = GradedPoset::product(&GradedPoset::chain(n), &GradedPoset::chain(m));
                assert_eq!(p.rank_levels().unwrap().unique_max(), n == m, "[{n}]x[{m}]");
            }
        }
        for n in 1..=7 {
            assert_eq!(h_poset(n).rank_levels().unwrap().unique_max(), n % 2 == 1, "H_{n}");
        }
        let p = GradedPoset::product(&GradedPoset::chain(2), &h_poset(4));
        assert!(!p.rank_levels().unwrap().unique_max());
    }
}
