//! The structure table `[α_i] ≅ [k] × P` with `P` connected minuscule, and the
//! seven gradings that escape it.

use std::fmt;

use crate::error::Result;
use crate::poset::{minuscule_poset, GradedPoset, MinusculeKind};
use crate::root_system::Family;

/// `[chain] × base`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pattern {
    pub chain: usize,
    pub base: MinusculeKind,
}

impl Pattern {
    pub fn new(chain: usize, base: MinusculeKind) -> Pattern {
        Pattern { chain, base }
    }

    pub fn size(&self) -> usize {
        self.chain * self.base.size()
    }

    pub fn poset(&self) -> Result<GradedPoset> {
        let base = minuscule_poset(self.base)?;
        Ok(if self.chain == 1 { base } else { GradedPoset::product(&GradedPoset::chain(self.chain), &base) })
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chain == 1 {
            write!(f, "{}", self.base)
        } else {
            write!(f, "[{}]×{}", self.chain, self.base)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Pattern(Pattern),
    /// Not of the form `[k] × P`.
    Exception,
}

/// The seven `[α_i]` that are not `[k] × P`.
pub const EXCEPTIONS: [(Family, usize, usize); 7] = [
    (Family::F, 4, 4),
    (Family::E, 6, 2),
    (Family::E, 7, 1),
    (Family::E, 7, 2),
    (Family::E, 8, 1),
    (Family::E, 8, 2),
    (Family::E, 8, 8),
];

/// The structure of `[α_i]` in type `family_rank`, or `None` for an invalid index.
pub fn expected_structure(family: Family, rank: usize, i: usize) -> Option<Expected> {
    use MinusculeKind::*;
    if i == 0 || i > rank || !family.is_valid_rank(rank) {
        return None;
    }
    if EXCEPTIONS.contains(&(family, rank, i)) {
        return Some(Expected::Exception);
    }
    let p = |k, base| Some(Expected::Pattern(Pattern::new(k, base)));
    let n = rank;
    match family {
        Family::A => p(1, Grid(i, n + 1 - i)),
        Family::B => p(1, Grid(i, 2 * n + 1 - 2 * i)),
        Family::C if i == n => p(1, H(n)),
        Family::C => p(1, Grid(i, 2 * n - 2 * i)),
        Family::D if i >= n - 1 => p(1, H(n - 1)),
        Family::D => p(i, K(n - i - 1)),
        Family::G => p(1, Grid(1, if i == 1 { 2 } else { 4 })),
        Family::F => match i {
            1 => p(1, K(3)),
            2 => p(1, Grid(2, 3)),
            _ => p(2, K(2)),
        },
        Family::E => match (n, i) {
            (6, 1) | (6, 6) => p(1, J2),
            (6, 3) | (6, 5) => p(2, H(4)),
            (6, 4) => p(2, Grid(3, 3)),
            (7, 3) => p(2, H(5)),
            (7, 4) => p(2, Grid(3, 4)),
            (7, 5) => p(3, H(4)),
            (7, 6) => p(2, J2),
            (7, 7) => p(1, J3),
            (8, 3) => p(2, H(6)),
            (8, 4) => p(2, Grid(3, 5)),
            (8, 5) => p(4, H(4)),
            (8, 6) => p(3, J2),
            (8, 7) => p(2, J3),
            _ => unreachable!("exceptions handled above"),
        },
    }
}

/// Every `[k] × P` of the given size with `P` connected minuscule. Grids are
/// listed with `a ≤ b`; `H_1` and `H_2` are chains and are covered by the grids.
/// Some entries are isomorphic to each other.
pub fn candidate_patterns(size: usize) -> Vec<Pattern> {
    use MinusculeKind::*;
    let mut out = Vec::new();
    for k in 1..=size {
        if !size.is_multiple_of(k) {
            continue;
        }
        let s = size / k;
        for a in 1..=s {
            if s.is_multiple_of(a) && a <= s / a {
                out.push(Pattern::new(k, Grid(a, s / a)));
            }
        }
        if s >= 4 && s.is_multiple_of(2) {
            out.push(Pattern::new(k, K(s / 2 - 1)));
        }
        for r in 3.. {
            let h = r * (r + 1) / 2;
            if h > s {
                break;
            }
            if h == s {
                out.push(Pattern::new(k, H(r)));
            }
        }
        if s == 16 {
            out.push(Pattern::new(k, J2));
        }
        if s == 27 {
            out.push(Pattern::new(k, J3));
        }
    }
    out
}
