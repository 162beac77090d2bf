//! `Δ(1)` for 1-standard and extra-special gradings.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::GradedPoset;
use crate::root_system::{Root, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GradingKind {
    /// `Π(1) = {α_i}`, 1-based `i`.
    OneStandard(usize),
    /// `Δ(2) = {θ}`, defined by `θ∨`.
    ExtraSpecial,
}

impl fmt::Display for GradingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradingKind::OneStandard(i) => write!(f, "standard:{i}"),
            GradingKind::ExtraSpecial => write!(f, "extra-special"),
        }
    }
}

impl GradingKind {
    /// Parses `standard:i` or `extra-special`.
    pub fn parse(s: &str) -> Result<GradingKind> {
        let s = s.trim();
        if s == "extra-special" || s == "extraspecial" {
            return Ok(GradingKind::ExtraSpecial);
        }
        if let Some(rest) = s.strip_prefix("standard:") {
            if let Ok(i) = rest.trim().parse() {
                return Ok(GradingKind::OneStandard(i));
            }
        }
        Err(Error::InvalidInput(format!("unknown grading {s:?}; expected standard:<i> or extra-special")))
    }
}

/// The poset `Δ(1)` together with the roots labeling its elements.
///
/// Elements are indexed by ascending height, ties broken by coefficient vector.
#[derive(Debug, Clone)]
pub struct Delta1 {
    pub system: String,
    pub kind: GradingKind,
    pub roots: Vec<Root>,
    pub poset: GradedPoset,
}

impl Delta1 {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn heights(&self) -> Vec<i32> {
        self.roots.iter().map(Root::height).collect()
    }

    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.roots.iter().position(|r| r == root)
    }

    pub fn label(&self) -> String {
        match self.kind {
            GradingKind::OneStandard(i) => format!("[α_{i}]({})", self.system),
            GradingKind::ExtraSpecial => format!("extra-special Δ(1) of {}", self.system),
        }
    }
}

/// Builds the poset on the given roots (already in height order) under the root order.
fn root_poset(rs: &RootSystem, kind: GradingKind, roots: Vec<Root>) -> Result<Delta1> {
    let n = roots.len();
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let d = roots[b].sub(&roots[a]);
            if d.height() == 1 && d.is_positive() {
                covers.push((a, b));
            }
        }
    }
    let poset = GradedPoset::new(n, covers)?;
    let min_height = roots.iter().map(Root::height).min().unwrap_or(1);
    for (x, r) in roots.iter().enumerate() {
        if poset.rank(x) as i32 != r.height() - min_height + 1 {
            return Err(Error::InvariantViolation(format!("rank of {r} disagrees with its height")));
        }
    }
    if !poset.is_pure() {
        return Err(Error::NotGraded(format!("Δ(1) of {} is not graded", rs.name())));
    }
    Ok(Delta1 { system: rs.name(), kind, roots, poset })
}

/// `[α_i] = {α ∈ Δ⁺ : [α : α_i] = 1}`.
pub fn delta1(rs: &RootSystem, i: usize) -> Result<Delta1> {
    rs.check_index(i)?;
    let roots = rs.positive_roots().iter().filter(|r| r.coeff(i) == 1).cloned().collect();
    root_poset(rs, GradingKind::OneStandard(i), roots)
}

/// `{α ∈ Δ⁺ : ⟨α, θ∨⟩ = 1}`.
pub fn delta1_extra_special(rs: &RootSystem) -> Result<Delta1> {
    let theta = rs.highest_root().clone();
    let mut roots = Vec::new();
    for r in rs.positive_roots() {
        if rs.pairing(r, &theta)? == 1 {
            roots.push(r.clone());
        }
    }
    root_poset(rs, GradingKind::ExtraSpecial, roots)
}

pub fn delta1_of(rs: &RootSystem, kind: GradingKind) -> Result<Delta1> {
    match kind {
        GradingKind::OneStandard(i) => delta1(rs, i),
        GradingKind::ExtraSpecial => delta1_extra_special(rs),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantsReport {
    pub coxeter_h: usize,
    pub dual_coxeter_hstar: usize,
    pub num_long_simple: usize,
    /// Size of the extra-special `Δ(1)`.
    pub delta1_size: usize,
}

pub fn invariants_report(rs: &RootSystem) -> Result<InvariantsReport> {
    let theta = rs.highest_root();
    let hstar = rs.coroot(theta)?.height() as usize + 1;
    Ok(InvariantsReport {
        coxeter_h: rs.coxeter_number() as usize,
        dual_coxeter_hstar: hstar,
        num_long_simple: rs.long_simple_roots().len(),
        delta1_size: delta1_extra_special(rs)?.len(),
    })
}
