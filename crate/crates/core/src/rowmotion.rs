//! The Panyushev complement (rowmotion), its orbits and the cyclic sieving test.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::involution::{complement_ideal, Involution};
use crate::polynomial::{m_polynomial_with, IntPolynomial};
use crate::poset::{order_reversing_involutions, ElementSet, GradedPoset, IdealLattice, Limits};

/// `𝔛(A) = min(P ∖ I(A))` on antichains.
pub fn panyushev_complement(p: &GradedPoset, a: &ElementSet) -> Result<ElementSet> {
    if !p.is_antichain(a) {
        return Err(Error::InvalidInput(format!("{a:?} is not an antichain")));
    }
    Ok(p.min_outside(&p.down_closure(a)))
}

/// `𝔛′(A) = max(P ∖ I₊(A))`, the inverse of [`panyushev_complement`].
pub fn panyushev_inverse(p: &GradedPoset, a: &ElementSet) -> Result<ElementSet> {
    if !p.is_antichain(a) {
        return Err(Error::InvalidInput(format!("{a:?} is not an antichain")));
    }
    Ok(p.max_of(&p.up_closure(a).complement(p.len())))
}

/// `𝔛` on lower ideals: `I ↦ ↓min(P ∖ I)`.
pub fn rowmotion(p: &GradedPoset, ideal: &ElementSet) -> ElementSet {
    p.down_closure(&p.min_outside(ideal))
}

/// `𝔛⁻¹` on lower ideals: `I ↦ ↓max(P ∖ ↑max(I))`.
pub fn rowmotion_inverse(p: &GradedPoset, ideal: &ElementSet) -> ElementSet {
    let top = p.max_of(ideal);
    p.down_closure(&p.max_of(&p.up_closure(&top).complement(p.len())))
}

/// Decomposition of `J(P)` into `𝔛`-orbits.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    /// All lower ideals, by size then lexicographically.
    #[serde(skip)]
    pub ideals: Vec<ElementSet>,
    /// Each orbit as ideal indices, starting at its least ideal and following `𝔛`.
    pub orbits: Vec<Vec<usize>>,
    pub sizes: Vec<usize>,
    /// Sorted ideal sizes along each orbit.
    pub ideal_size_traces: Vec<Vec<usize>>,
    pub target_size: Option<usize>,
    /// Per orbit, the number of ideals of `target_size`.
    pub lagrangian_counts: Option<Vec<usize>>,
}

impl OrbitReport {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Order of `𝔛`, the lcm of the orbit sizes.
    pub fn order(&self) -> usize {
        self.sizes.iter().fold(1, |acc, &s| acc.lcm(&s))
    }

    /// `(size, count)` pairs, largest size first.
    pub fn size_multiset(&self) -> Vec<(usize, usize)> {
        let mut sizes = self.sizes.clone();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let mut out: Vec<(usize, usize)> = Vec::new();
        for s in sizes {
            match out.last_mut() {
                Some((t, c)) if *t == s => *c += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    /// E.g. `14 × 25 + 2 × 1`: orbit size times multiplicity.
    pub fn summary(&self) -> String {
        self.size_multiset().iter().map(|(s, c)| format!("{s} × {c}")).collect::<Vec<_>>().join(" + ")
    }

    /// Index of the orbit containing each ideal.
    pub fn orbit_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.ideals.len()];
        for (k, orbit) in self.orbits.iter().enumerate() {
            for &i in orbit {
                out[i] = k;
            }
        }
        out
    }
}

pub fn all_orbits(p: &GradedPoset, target_size: Option<usize>) -> Result<OrbitReport> {
    all_orbits_with(p, target_size, Limits::default())
}

pub fn all_orbits_with(p: &GradedPoset, target_size: Option<usize>, limits: Limits) -> Result<OrbitReport> {
    let lattice = IdealLattice::with_limits(p, limits)?;
    let ideals = lattice.ideals().to_vec();
    let next: Vec<usize> = ideals
        .iter()
        .map(|i| lattice.index_of(&rowmotion(p, i)).expect("rowmotion of an ideal is an ideal"))
        .collect();
    let mut seen = vec![false; ideals.len()];
    let mut orbits = Vec::new();
    for seed in 0..ideals.len() {
        if seen[seed] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut k = seed;
        while !seen[k] {
            seen[k] = true;
            orbit.push(k);
            k = next[k];
        }
        if k != seed {
            return Err(Error::InvariantViolation("rowmotion is not a permutation of J(P)".into()));
        }
        orbits.push(orbit);
    }
    let sizes = orbits.iter().map(Vec::len).collect();
    let ideal_size_traces = orbits
        .iter()
        .map(|o| {
            let mut t: Vec<usize> = o.iter().map(|&k| ideals[k].len()).collect();
            t.sort_unstable();
            t
        })
        .collect();
    let lagrangian_counts = target_size
        .map(|s| orbits.iter().map(|o| o.iter().filter(|&&k| ideals[k].len() == s).count()).collect());
    Ok(OrbitReport { ideals, orbits, sizes, ideal_size_traces, target_size, lagrangian_counts })
}

/// The cyclic sieving test for `(J(P), M_P(t), ⟨𝔛⟩)` in coefficient form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CspReport {
    pub n: usize,
    /// `M_P(t) mod (tⁿ − 1)`.
    pub residue_coeffs: Vec<i128>,
    /// `b_i = #{orbits O : (n / |O|) divides i}`.
    pub orbit_predicted: Vec<i128>,
    pub verdict: bool,
}

impl CspReport {
    /// Writes the residue as `c + Σ c_k t^k + q·[n]_t` with `q` the smallest coefficient.
    pub fn residue_description(&self) -> String {
        let q = self.residue_coeffs.iter().copied().min().unwrap_or(0);
        let rest = IntPolynomial::new(self.residue_coeffs.iter().map(|c| c - q).collect());
        let block = match q {
            0 => String::new(),
            1 => format!("[{}]_t", self.n),
            _ => format!("{q}[{}]_t", self.n),
        };
        match (rest.is_zero(), block.is_empty()) {
            (true, true) => "0".into(),
            (true, false) => block,
            (false, true) => rest.to_string(),
            (false, false) => format!("{rest} + {block}"),
        }
    }
}

pub fn csp_from(m: &IntPolynomial, orbits: &OrbitReport) -> CspReport {
    let n = orbits.order();
    let residue_coeffs = m.fold_mod(n);
    let orbit_predicted = (0..n)
        .map(|i| orbits.sizes.iter().filter(|&&s| i % (n / s) == 0).count() as i128)
        .collect::<Vec<_>>();
    let verdict = residue_coeffs == orbit_predicted;
    CspReport { n, residue_coeffs, orbit_predicted, verdict }
}

pub fn csp_check(p: &GradedPoset) -> Result<CspReport> {
    csp_check_with(p, Limits::default())
}

pub fn csp_check_with(p: &GradedPoset, limits: Limits) -> Result<CspReport> {
    let orbits = all_orbits_with(p, None, limits)?;
    Ok(csp_from(&m_polynomial_with(p, limits)?, &orbits))
}

/// Per-orbit outcome of asking whether `I ↦ I^c` preserves every orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub per_orbit: Vec<bool>,
    pub holds: bool,
}

pub fn duality_search(p: &GradedPoset, c: &Involution, orbits: &OrbitReport) -> Result<DualityReport> {
    let orbit_of = orbits.orbit_of();
    let index: std::collections::HashMap<&ElementSet, usize> =
        orbits.ideals.iter().enumerate().map(|(k, s)| (s, k)).collect();
    let mut per_orbit = Vec::with_capacity(orbits.len());
    for (k, orbit) in orbits.orbits.iter().enumerate() {
        let mut ok = true;
        for &i in orbit {
            let ic = complement_ideal(p, c, &orbits.ideals[i])?;
            if orbit_of[index[&ic]] != k {
                ok = false;
                break;
            }
        }
        per_orbit.push(ok);
    }
    let holds = per_orbit.iter().all(|&b| b);
    Ok(DualityReport { per_orbit, holds })
}

/// Runs [`duality_search`] for every order-reversing involution of `P`.
pub fn duality_search_all(p: &GradedPoset, orbits: &OrbitReport) -> Result<Vec<(Involution, DualityReport)>> {
    let mut out = Vec::new();
    for perm in order_reversing_involutions(p) {
        let c = Involution::new(p, perm)?;
        let report = duality_search(p, &c, orbits)?;
        out.push((c, report));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{enumerate_antichains, enumerate_lower_ideals};

    fn grid(n: usize, m: usize) -> GradedPoset {
        GradedPoset::product(&GradedPoset::chain(n), &GradedPoset::chain(m))
    }

    #[test]
    fn empty_antichain_goes_to_minimal_elements() {
        let p = grid(2, 3);
        let a = panyushev_complement(&p, &p.empty_set()).unwrap();
        assert_eq!(a.to_vec(), p.minimal_elements());
        assert!(panyushev_inverse(&p, &a).unwrap().is_empty());
        assert!(panyushev_complement(&p, &ElementSet::from_indices(6, [0, 1])).is_err());
    }

    #[test]
    fn inverse_on_grid() {
        let p = grid(3, 3);
        for a in enumerate_antichains(&p).unwrap() {
            let x = panyushev_complement(&p, &a).unwrap();
            assert_eq!(panyushev_inverse(&p, &x).unwrap(), a);
            assert_eq!(panyushev_complement(&p, &panyushev_inverse(&p, &a).unwrap()).unwrap(), a);
        }
        for i in enumerate_lower_ideals(&p).unwrap() {
            assert_eq!(rowmotion_inverse(&p, &rowmotion(&p, &i)), i);
        }
    }

    #[test]
    fn chain_is_one_cycle() {
        for k in 0..6 {
            let p = GradedPoset::chain(k);
            let r = all_orbits(&p, None).unwrap();
            assert_eq!(r.sizes, vec![k + 1]);
            // L_0 → L_1 → … → L_k
            let sizes: Vec<usize> = r.orbits[0].iter().map(|&i| r.ideals[i].len()).collect();
            assert_eq!(sizes, (0..=k).collect::<Vec<_>>());
            let c = Involution::new(&p, (0..k).rev().collect()).unwrap();
            assert!(duality_search(&p, &c, &r).unwrap().holds);
        }
    }

    #[test]
    fn csp_on_small_posets() {
        for p in [grid(2, 3), grid(3, 3), crate::poset::k_poset(3), crate::poset::h_poset(4)] {
            let r = csp_check(&p).unwrap();
            assert!(r.verdict, "{r:?}");
            assert_eq!(r.residue_coeffs.iter().sum::<i128>(), r.orbit_predicted.iter().sum::<i128>());
        }
    }

    #[test]
    fn residue_descriptions() {
        let r = CspReport { n: 14, residue_coeffs: vec![0; 14], orbit_predicted: vec![], verdict: true };
        assert_eq!(r.residue_description(), "0");
        let mut c = vec![25i128; 14];
        c[0] += 1;
        c[7] += 1;
        let r = CspReport { n: 14, residue_coeffs: c, orbit_predicted: vec![], verdict: true };
        assert_eq!(r.residue_description(), "1 + t^7 + 25[14]_t");
        let r = CspReport { n: 11, residue_coeffs: vec![2; 11], orbit_predicted: vec![], verdict: true };
        assert_eq!(r.residue_description(), "2[11]_t");
    }

    #[test]
    fn summary_format() {
        let p = GradedPoset::disjoint_union(&[GradedPoset::chain(1), GradedPoset::chain(1)]);
        let r = all_orbits(&p, Some(1)).unwrap();
        // ∅ ↔ {a, b} and {a} ↔ {b}
        assert_eq!(r.summary(), "2 × 2");
        assert_eq!(r.order(), 2);
        assert_eq!(r.lagrangian_counts, Some(vec![0, 2]));
        let q = GradedPoset::disjoint_union(&[GradedPoset::chain(1), GradedPoset::chain(2)]);
        assert_eq!(all_orbits(&q, None).unwrap().summary(), "6 × 1");
    }
}
