//! Lower ideals, antichains and the distributive lattice `J(P)`.

use std::collections::HashMap;

use super::{sort_by_size_then_lex, ElementSet, GradedPoset};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_IDEALS: usize = 1_000_000;
pub const MAX_IDEALS_ENV: &str = "GRADPOS_MAX_IDEALS";

/// Enumeration bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_ideals: usize,
}

impl Limits {
    pub fn new(max_ideals: usize) -> Limits {
        Limits { max_ideals }
    }

    /// Reads `GRADPOS_MAX_IDEALS`, falling back to [`DEFAULT_MAX_IDEALS`].
    pub fn from_env() -> Limits {
        let max_ideals = std::env::var(MAX_IDEALS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_IDEALS);
        Limits { max_ideals }
    }
}

impl Default for Limits {
    fn default() -> Limits {
        Limits::from_env()
    }
}

/// All lower ideals, ordered by size and then lexicographically.
pub fn enumerate_lower_ideals(p: &GradedPoset) -> Result<Vec<ElementSet>> {
    enumerate_lower_ideals_with(p, Limits::default())
}

/// Walks a linear extension, deciding each element in turn. An element may be
/// added once all of its lower covers are present, so every leaf of the search
/// is a distinct ideal and no branch is dead.
pub fn enumerate_lower_ideals_with(p: &GradedPoset, limits: Limits) -> Result<Vec<ElementSet>> {
    let ext = p.linear_extension();
    let mut out = Vec::new();
    let mut current = p.empty_set();
    walk(p, &ext, 0, &mut current, &mut out, limits.max_ideals)?;
    sort_by_size_then_lex(&mut out);
    Ok(out)
}

fn walk(
    p: &GradedPoset,
    ext: &[usize],
    pos: usize,
    current: &mut ElementSet,
    out: &mut Vec<ElementSet>,
    bound: usize,
) -> Result<()> {
    if pos == ext.len() {
        if out.len() >= bound {
            return Err(Error::ResourceLimit { bound });
        }
        out.push(current.clone());
        return Ok(());
    }
    let x = ext[pos];
    walk(p, ext, pos + 1, current, out, bound)?;
    if p.lower_covers(x).iter().all(|&z| current.contains(z)) {
        current.insert(x);
        walk(p, ext, pos + 1, current, out, bound)?;
        current.remove(x);
    }
    Ok(())
}

/// All antichains, obtained as `min(P ∖ I)` over the lower ideals `I`; ordered by
/// size and then lexicographically.
pub fn enumerate_antichains(p: &GradedPoset) -> Result<Vec<ElementSet>> {
    enumerate_antichains_with(p, Limits::default())
}

pub fn enumerate_antichains_with(p: &GradedPoset, limits: Limits) -> Result<Vec<ElementSet>> {
    let mut out: Vec<ElementSet> = enumerate_lower_ideals_with(p, limits)?
        .iter()
        .map(|i| p.min_outside(i))
        .collect();
    sort_by_size_then_lex(&mut out);
    Ok(out)
}

/// The lattice `J(P)` with indexed ideals and labeled upper covers.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    ideals: Vec<ElementSet>,
    index: HashMap<ElementSet, usize>,
    up: Vec<Vec<(usize, usize)>>,
}

impl IdealLattice {
    pub fn new(p: &GradedPoset) -> Result<IdealLattice> {
        IdealLattice::with_limits(p, Limits::default())
    }

    pub fn with_limits(p: &GradedPoset, limits: Limits) -> Result<IdealLattice> {
        let ideals = enumerate_lower_ideals_with(p, limits)?;
        let index: HashMap<ElementSet, usize> =
            ideals.iter().cloned().enumerate().map(|(k, s)| (s, k)).collect();
        let up = ideals
            .iter()
            .map(|i| {
                p.min_outside(i)
                    .iter()
                    .map(|x| {
                        let mut j = i.clone();
                        j.insert(x);
                        (x, index[&j])
                    })
                    .collect()
            })
            .collect();
        Ok(IdealLattice { ideals, index, up })
    }

    pub fn ideals(&self) -> &[ElementSet] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn index_of(&self, ideal: &ElementSet) -> Option<usize> {
        self.index.get(ideal).copied()
    }

    /// Upper covers of ideal `k` as `(added element, ideal index)`.
    pub fn upper_covers(&self, k: usize) -> &[(usize, usize)] {
        &self.up[k]
    }

    /// `J(P)` as a graded poset; ideal `k` becomes element `k` with rank `|I| + 1`.
    pub fn to_poset(&self) -> GradedPoset {
        let covers = self
            .up
            .iter()
            .enumerate()
            .flat_map(|(k, ups)| ups.iter().map(move |&(_, t)| (k, t)))
            .collect();
        GradedPoset::new(self.ideals.len(), covers).expect("J(P) is graded by ideal size")
    }
}

/// The distributive lattice `J(P)` of lower ideals ordered by inclusion.
pub fn ideals_lattice(p: &GradedPoset) -> Result<GradedPoset> {
    Ok(IdealLattice::new(p)?.to_poset())
}

pub fn ideals_lattice_with(p: &GradedPoset, limits: Limits) -> Result<GradedPoset> {
    Ok(IdealLattice::with_limits(p, limits)?.to_poset())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{are_isomorphic, h_poset, k_poset};

    fn brute_force_ideals(p: &GradedPoset) -> Vec<ElementSet> {
        let n = p.len();
        let mut out: Vec<ElementSet> = (0u64..1 << n)
            .map(|mask| ElementSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1)))
            .filter(|s| s.iter().all(|y| (0..n).all(|x| !p.le(x, y) || s.contains(x))))
            .collect();
        sort_by_size_then_lex(&mut out);
        out
    }

    #[test]
    fn chain_ideals() {
        for k in 0..6 {
            assert_eq!(enumerate_lower_ideals(&GradedPoset::chain(k)).unwrap().len(), k + 1);
        }
    }

    #[test]
    fn diamond_ideals_match_subset_filter() {
        let d = GradedPoset::product(&GradedPoset::chain(2), &GradedPoset::chain(2));
        let ideals = enumerate_lower_ideals(&d).unwrap();
        assert_eq!(ideals.len(), 6);
        assert_eq!(ideals, brute_force_ideals(&d));
    }

    #[test]
    fn empty_poset_has_one_ideal() {
        let e = GradedPoset::empty();
        assert_eq!(enumerate_lower_ideals(&e).unwrap(), vec![ElementSet::empty(0)]);
        assert_eq!(enumerate_antichains(&e).unwrap().len(), 1);
        let j = ideals_lattice(&e).unwrap();
        assert!(are_isomorphic(&j, &GradedPoset::chain(1)).is_some());
    }

    #[test]
    fn bound_is_enforced() {
        let p = GradedPoset::antichain(12);
        let err = enumerate_lower_ideals_with(&p, Limits::new(100)).unwrap_err();
        assert_eq!(err, Error::ResourceLimit { bound: 100 });
        assert_eq!(enumerate_lower_ideals_with(&p, Limits::new(4096)).unwrap().len(), 4096);
    }

    #[test]
    fn lattice_of_grid_is_h() {
        for r in 1..=5 {
            let grid = GradedPoset::product(&GradedPoset::chain(2), &GradedPoset::chain(r));
            let j = ideals_lattice(&grid).unwrap();
            assert!(are_isomorphic(&j, &h_poset(r + 1)).is_some(), "r = {r}");
        }
    }

    #[test]
    fn lattice_of_k_is_next_k() {
        for r in 1..=5 {
            let j = ideals_lattice(&k_poset(r)).unwrap();
            assert!(are_isomorphic(&j, &k_poset(r + 1)).is_some(), "r = {r}");
        }
    }

    #[test]
    fn antichains_are_antichains() {
        let p = k_poset(3);
        let a = enumerate_antichains(&p).unwrap();
        let sizes: Vec<usize> = [0, 1, 2].iter().map(|&s| a.iter().filter(|x| x.len() == s).count()).collect();
        assert_eq!(sizes, vec![1, 8, 1]);
        assert!(a.iter().all(|s| p.is_antichain(s)));
    }
}
