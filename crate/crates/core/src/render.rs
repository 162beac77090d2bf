//! Text, JSON and DOT output for posets, reports and verification runs.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::gradings::{invariants_report, Delta1, GradingKind};
use crate::involution::{count_self_complementary_with, w0_involution};
use crate::polynomial::{classify_polynomial, km_product, m_polynomial_with, n_polynomial_with, IntPolynomial, RationalProduct};
use crate::poset::Limits;
use crate::root_system::RootSystem;
use crate::rowmotion::{all_orbits_with, csp_from};
use crate::verify::VerificationOutcome;

#[derive(Debug, Clone, Serialize)]
pub struct ElementRow {
    pub index: usize,
    pub root: Vec<i32>,
    pub height: i32,
}

#[derive(Debug, Clone, Serialize)]
pub struct PosetDescription {
    pub system: String,
    pub grading: String,
    pub size: usize,
    pub rank_levels: Vec<usize>,
    pub elements: Vec<ElementRow>,
    pub covers: Vec<(usize, usize)>,
}

pub fn describe_poset(d: &Delta1) -> PosetDescription {
    let levels = (1..=d.poset.num_levels()).map(|k| d.poset.ranks().iter().filter(|&&r| r == k).count()).collect();
    PosetDescription {
        system: d.system.clone(),
        grading: d.kind.to_string(),
        size: d.len(),
        rank_levels: levels,
        elements: d
            .roots
            .iter()
            .enumerate()
            .map(|(index, r)| ElementRow { index, root: r.coeffs().to_vec(), height: r.height() })
            .collect(),
        covers: d.poset.covers().to_vec(),
    }
}

pub fn poset_text(d: &Delta1) -> String {
    let desc = describe_poset(d);
    let mut out = String::new();
    let _ = writeln!(out, "{} ({} elements)", d.label(), desc.size);
    let _ = writeln!(out, "rank levels: {:?}", desc.rank_levels);
    for (k, _) in desc.rank_levels.iter().enumerate() {
        let roots: Vec<String> =
            d.roots.iter().enumerate().filter(|(x, _)| d.poset.rank(*x) as usize == k + 1).map(|(_, r)| r.compact()).collect();
        let _ = writeln!(out, "  level {}: {}", k + 1, roots.join(" "));
    }
    let _ = writeln!(out, "covers: {}", desc.covers.len());
    for (a, b) in &desc.covers {
        let _ = writeln!(out, "  {} < {}", d.roots[*a].compact(), d.roots[*b].compact());
    }
    out
}

pub fn poset_json(d: &Delta1) -> String {
    serde_json::to_string_pretty(&describe_poset(d)).expect("poset description serializes")
}

/// Hasse diagram, one node per element labeled by its coefficient vector; edges point upward.
pub fn poset_dot(d: &Delta1) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph delta1 {{");
    let _ = writeln!(out, "  label=\"{}\";", d.label());
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=plaintext];");
    for (x, r) in d.roots.iter().enumerate() {
        let _ = writeln!(out, "  n{x} [label=\"{}\"];", r.compact());
    }
    for (a, b) in d.poset.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceSummary {
    pub system: String,
    pub grading: String,
    pub label: String,
    pub size: usize,
    pub rank_levels: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolynomialSummary {
    pub m: IntPolynomial,
    pub n: IntPolynomial,
    pub rank_product: RationalProduct,
    pub m_equals_rank_product: bool,
    pub m_at_1: i128,
    pub m_at_minus_1: i128,
    pub n_palindromic: bool,
    pub n_monic: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitSummary {
    pub count: usize,
    pub sizes: String,
    pub order: usize,
    /// Extra-special gradings only: ideals of size `h* − 2` in each orbit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lagrangian_counts: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CspSummary {
    pub n: usize,
    pub residue: String,
    pub verdict: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvolutionSummary {
    pub fixed_points: Vec<Vec<i32>>,
    pub self_complementary_ideals: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub instance: InstanceSummary,
    pub polynomials: PolynomialSummary,
    pub orbits: OrbitSummary,
    pub csp: CspSummary,
    pub involution: InvolutionSummary,
}

pub fn build_report(rs: &RootSystem, d: &Delta1, limits: Limits) -> Result<Report> {
    let p = &d.poset;
    let m = m_polynomial_with(p, limits)?;
    let n = n_polynomial_with(p, limits)?;
    let km = km_product(p)?;
    let n_class = classify_polynomial(&n);
    let desc = describe_poset(d);
    let target = match d.kind {
        GradingKind::ExtraSpecial => Some(invariants_report(rs)?.dual_coxeter_hstar - 2),
        GradingKind::OneStandard(_) => None,
    };
    let orbits = all_orbits_with(p, target, limits)?;
    let csp = csp_from(&m, &orbits);
    let c = w0_involution(rs, d)?;
    Ok(Report {
        instance: InstanceSummary {
            system: d.system.clone(),
            grading: d.kind.to_string(),
            label: d.label(),
            size: d.len(),
            rank_levels: desc.rank_levels,
        },
        polynomials: PolynomialSummary {
            m_equals_rank_product: km.quotient.as_ref() == Some(&m),
            m_at_1: m.eval(1),
            m_at_minus_1: m.eval(-1),
            m,
            n,
            rank_product: km.product,
            n_palindromic: n_class.palindromic,
            n_monic: n_class.monic,
        },
        orbits: OrbitSummary {
            count: orbits.len(),
            sizes: orbits.summary(),
            order: orbits.order(),
            lagrangian_counts: orbits.lagrangian_counts.clone(),
        },
        csp: CspSummary { n: csp.n, residue: csp.residue_description(), verdict: csp.verdict },
        involution: InvolutionSummary {
            fixed_points: c.fixed_points().iter().map(|&x| d.roots[x].coeffs().to_vec()).collect(),
            self_complementary_ideals: count_self_complementary_with(p, &c, limits)?,
        },
    })
}

pub fn report_json(r: &Report) -> String {
    serde_json::to_string_pretty(r).expect("report serializes")
}

pub fn report_text(r: &Report) -> String {
    let mut out = String::new();
    let i = &r.instance;
    let p = &r.polynomials;
    let _ = writeln!(out, "{} ({} elements, rank levels {:?})", i.label, i.size, i.rank_levels);
    let _ = writeln!(out, "M(t) = {}", p.m);
    let _ = writeln!(out, "rank product = {} ({})", p.rank_product, if p.m_equals_rank_product { "equals M" } else { "differs from M" });
    let _ = writeln!(out, "M(1) = {}, M(-1) = {}", p.m_at_1, p.m_at_minus_1);
    let _ = writeln!(out, "N(t) = {} (palindromic: {}, monic: {})", p.n, p.n_palindromic, p.n_monic);
    let _ = writeln!(out, "rowmotion: {} orbits, sizes {}, order {}", r.orbits.count, r.orbits.sizes, r.orbits.order);
    if let Some(counts) = &r.orbits.lagrangian_counts {
        let _ = writeln!(out, "half-size ideals per orbit: {counts:?}");
    }
    let _ = writeln!(out, "M mod (t^{} - 1) = {}; cyclic sieving {}", r.csp.n, r.csp.residue, if r.csp.verdict { "holds" } else { "fails" });
    let fixed: Vec<String> = r.involution.fixed_points.iter().map(|v| format!("{v:?}")).collect();
    let _ = writeln!(out, "w0 fixed points: {}", if fixed.is_empty() { "none".into() } else { fixed.join(", ") });
    let _ = writeln!(out, "self-complementary ideals: {}", r.involution.self_complementary_ideals);
    out
}

pub fn outcomes_json(outcomes: &[VerificationOutcome]) -> String {
    serde_json::to_string_pretty(outcomes).expect("outcomes serialize")
}

pub fn outcomes_text(outcomes: &[VerificationOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        let failed = o.checks.iter().filter(|c| !c.passed).count();
        let status = if failed == 0 { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status} {:<18} {} ({} checks)", o.theorem.name(), o.subject, o.checks.len());
        for c in &o.checks {
            if !c.passed {
                let _ = writeln!(out, "    FAIL {}: expected {}, got {}", c.name, c.expected, c.actual);
            }
            if let Some(note) = &c.note {
                let _ = writeln!(out, "    note {}: {note}", c.name);
            }
        }
    }
    out
}
