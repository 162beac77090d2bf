//! Order-reversing involutions, ideal complements and the `w₀ⁱ` action on `Δ(1)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gradings::{Delta1, GradingKind};
use crate::poset::{enumerate_lower_ideals_with, ElementSet, GradedPoset, Limits};
use crate::root_system::RootSystem;

/// An order-reversing involution `c` of a poset, stored as `perm[x] = c(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Involution {
    perm: Vec<usize>,
}

impl Involution {
    /// Checks that `perm` is a self-inverse permutation reversing the order of `p`.
    pub fn new(p: &GradedPoset, perm: Vec<usize>) -> Result<Involution> {
        let n = p.len();
        if perm.len() != n || perm.iter().any(|&y| y >= n) {
            return Err(Error::InvalidInput(format!("expected a permutation of {n} elements")));
        }
        if (0..n).any(|x| perm[perm[x]] != x) {
            return Err(Error::InvalidInput("permutation is not an involution".into()));
        }
        for &(a, b) in p.covers() {
            if !p.lt(perm[b], perm[a]) {
                return Err(Error::InvalidInput(format!("covering pair ({a}, {b}) is not reversed")));
            }
        }
        Ok(Involution { perm })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.perm.len()).filter(|&x| self.perm[x] == x).collect()
    }

    pub fn image(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.perm.len(), s.iter().map(|x| self.perm[x]))
    }
}

/// `w₀ⁱ`, the longest element of the Weyl group of `g(0)`, acting on `Δ(1)`.
///
/// `g(0)` has simple roots `Π ∖ {α_i}` for a 1-standard grading and
/// `{α_j : ⟨α_j, θ∨⟩ = 0}` for the extra-special one.
pub fn w0_involution(rs: &RootSystem, d: &Delta1) -> Result<Involution> {
    let j: Vec<usize> = match d.kind {
        GradingKind::OneStandard(i) => (1..=rs.rank()).filter(|&j| j != i).collect(),
        GradingKind::ExtraSpecial => {
            let theta = rs.highest_root().clone();
            let mut out = Vec::new();
            for j in 1..=rs.rank() {
                if rs.pairing(&crate::root_system::Root::simple(rs.rank(), j), &theta)? == 0 {
                    out.push(j);
                }
            }
            out
        }
    };
    let word = rs.longest_element_word(&j)?;
    let mut perm = Vec::with_capacity(d.len());
    for r in &d.roots {
        let image = rs.apply_word(&word, r);
        match d.index_of(&image) {
            Some(k) => perm.push(k),
            None => {
                return Err(Error::InvariantViolation(format!("w0 sends {r} to {image}, outside {}", d.label())))
            }
        }
    }
    Involution::new(&d.poset, perm)
        .map_err(|e| Error::InvariantViolation(format!("w0 on {} is not an order-reversing involution: {e}", d.label())))
}

/// `w₀ⁱ` on `[α_i]`.
pub fn w0i_involution(rs: &RootSystem, i: usize) -> Result<(Delta1, Involution)> {
    let d = crate::gradings::delta1(rs, i)?;
    let c = w0_involution(rs, &d)?;
    Ok((d, c))
}

/// `I^c = P ∖ c(I)`.
pub fn complement_ideal(p: &GradedPoset, c: &Involution, ideal: &ElementSet) -> Result<ElementSet> {
    if c.len() != p.len() {
        return Err(Error::InvalidInput("involution and poset sizes differ".into()));
    }
    if !p.is_lower_ideal(ideal) {
        return Err(Error::InvalidInput(format!("{ideal:?} is not a lower ideal")));
    }
    Ok(c.image(ideal).complement(p.len()))
}

pub fn count_self_complementary(p: &GradedPoset, c: &Involution) -> Result<usize> {
    count_self_complementary_with(p, c, Limits::default())
}

pub fn count_self_complementary_with(p: &GradedPoset, c: &Involution, limits: Limits) -> Result<usize> {
    let mut count = 0;
    for ideal in enumerate_lower_ideals_with(p, limits)? {
        if complement_ideal(p, c, &ideal)? == ideal {
            count += 1;
        }
    }
    Ok(count)
}
