//! The connected minuscule posets.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ideals_lattice, GradedPoset};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MinusculeKind {
    /// `[n] × [m]`
    Grid(usize, usize),
    /// `K_r = [r] ⊕ ([1] ⊔ [1]) ⊕ [r]`
    K(usize),
    /// `H_r`, the shifted staircase with `r(r+1)/2` elements.
    H(usize),
    /// `J²([2] × [3])`
    J2,
    /// `J³([2] × [3])`
    J3,
}

impl MinusculeKind {
    pub fn size(self) -> usize {
        match self {
            MinusculeKind::Grid(n, m) => n * m,
            MinusculeKind::K(r) => 2 * r + 2,
            MinusculeKind::H(r) => r * (r + 1) / 2,
            MinusculeKind::J2 => 16,
            MinusculeKind::J3 => 27,
        }
    }
}

impl fmt::Display for MinusculeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinusculeKind::Grid(n, m) => write!(f, "[{n}]×[{m}]"),
            MinusculeKind::K(r) => write!(f, "K_{r}"),
            MinusculeKind::H(r) => write!(f, "H_{r}"),
            MinusculeKind::J2 => write!(f, "J^2([2]×[3])"),
            MinusculeKind::J3 => write!(f, "J^3([2]×[3])"),
        }
    }
}

/// `K_r`, elements labeled `1, …, r, r+1, (r+1)', r+2, …, 2r+1` in index order.
pub fn k_poset(r: usize) -> GradedPoset {
    let chain = GradedPoset::chain(r);
    let middle = GradedPoset::antichain(2);
    GradedPoset::ordinal_sum(&[chain.clone(), middle, chain]).expect("K_r is graded")
}

/// `H_r = J([2] × [r − 1])`, isomorphic to `[α_r](C_r)`; `H_1` is a point.
pub fn h_poset(r: usize) -> GradedPoset {
    assert!(r >= 1, "H_r needs r ≥ 1");
    let grid = GradedPoset::product(&GradedPoset::chain(2), &GradedPoset::chain(r - 1));
    ideals_lattice(&grid).expect("small lattice")
}

pub fn minuscule_poset(kind: MinusculeKind) -> Result<GradedPoset> {
    let two_by_three = || GradedPoset::product(&GradedPoset::chain(2), &GradedPoset::chain(3));
    match kind {
        MinusculeKind::Grid(n, m) if n >= 1 && m >= 1 => {
            Ok(GradedPoset::product(&GradedPoset::chain(n), &GradedPoset::chain(m)))
        }
        MinusculeKind::K(r) if r >= 1 => Ok(k_poset(r)),
        MinusculeKind::H(r) if r >= 1 => Ok(h_poset(r)),
        MinusculeKind::J2 => ideals_lattice(&ideals_lattice(&two_by_three())?),
        MinusculeKind::J3 => ideals_lattice(&ideals_lattice(&ideals_lattice(&two_by_three())?)?),
        _ => Err(Error::InvalidInput(format!("{kind} is not a minuscule poset"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_match() {
        for kind in [
            MinusculeKind::Grid(1, 1),
            MinusculeKind::Grid(3, 4),
            MinusculeKind::K(1),
            MinusculeKind::K(4),
            MinusculeKind::H(1),
            MinusculeKind::H(5),
            MinusculeKind::J2,
            MinusculeKind::J3,
        ] {
            assert_eq!(minuscule_poset(kind).unwrap().len(), kind.size(), "{kind}");
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(minuscule_poset(MinusculeKind::Grid(0, 3)).is_err());
        assert!(minuscule_poset(MinusculeKind::K(0)).is_err());
        assert!(minuscule_poset(MinusculeKind::H(0)).is_err());
    }

    #[test]
    fn exceptional_hasse_diagrams() {
        let j2 = minuscule_poset(MinusculeKind::J2).unwrap();
        assert_eq!(j2.rank_levels().unwrap().sizes, vec![1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1]);
        let j3 = minuscule_poset(MinusculeKind::J3).unwrap();
        assert_eq!(j3.len(), 27);
        assert_eq!(
            j3.rank_levels().unwrap().sizes,
            vec![1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1]
        );
    }
}
