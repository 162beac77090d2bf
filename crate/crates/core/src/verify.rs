//! Instance-level verification of the structural results on `Δ(1)`.
//!
//! A [`Topic`] expands into jobs, one per grading or one per family of small
//! posets. Jobs run in parallel; outcomes come back in job order, which is
//! deterministic.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gradings::{delta1_of, invariants_report, Delta1, GradingKind};
use crate::involution::{count_self_complementary_with, w0_involution};
use crate::patterns::{candidate_patterns, expected_structure, Expected, EXCEPTIONS};
use crate::polynomial::{
    chain_product_m_polynomial, chain_product_n_polynomial, gaussian_check_with, ideal_count_formula, km_product,
    m_at_minus_one_formula, m_polynomial_with, n_polynomial_with, IntPolynomial, RationalProduct,
};
use crate::poset::{
    are_isomorphic, enumerate_antichains_with, enumerate_lower_ideals_with, h_poset, k_poset, minuscule_poset,
    order_reversing_involutions, ElementSet, GradedPoset, Limits, MinusculeKind,
};
use crate::root_system::{all_types, Family, RootSystem};
use crate::rowmotion::{all_orbits_with, csp_from, panyushev_complement, panyushev_inverse, rowmotion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Topic {
    /// `M = ∏ (1 − t^{ht+1}) / (1 − t^{ht})`, plus reference polynomials.
    MPoly,
    /// `M(1) = ∏ (ht+1)/ht`.
    IdealCount,
    /// `M(−1)` counts `w₀`-self-complementary ideals; the even/odd height formula.
    SelfComplementary,
    /// `M(−1) = 0` exactly when `w₀ⁱ` fixes a root of `[α_i]`.
    FixedPoints,
    /// Palindromic, monic, unique maximal antichain and unique maximal level agree.
    NPoly,
    /// Rowmotion orbits on the extra-special `Δ(1)`.
    Orbits,
    /// Cyclic sieving for `(J(Δ(1)), M, ⟨𝔛⟩)` and the reference orbit table.
    Csp,
    /// `[α_i] ≅ [k] × P` and the seven exceptions.
    Structure,
    /// The seven exceptions are not Gaussian.
    Gaussian,
    /// Brute-force checks of the ideal and antichain calculus on small posets.
    Products,
}

impl Topic {
    pub const ALL: [Topic; 10] = [
        Topic::MPoly,
        Topic::IdealCount,
        Topic::SelfComplementary,
        Topic::FixedPoints,
        Topic::NPoly,
        Topic::Orbits,
        Topic::Csp,
        Topic::Structure,
        Topic::Gaussian,
        Topic::Products,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Topic::MPoly => "M-poly",
            Topic::IdealCount => "ideal-count",
            Topic::SelfComplementary => "self-complementary",
            Topic::FixedPoints => "fixed-points",
            Topic::NPoly => "N-poly",
            Topic::Orbits => "orbits",
            Topic::Csp => "CSP",
            Topic::Structure => "structure",
            Topic::Gaussian => "gaussian",
            Topic::Products => "products",
        }
    }

    pub fn parse(s: &str) -> Result<Topic> {
        Topic::ALL.into_iter().find(|t| t.name().eq_ignore_ascii_case(s.trim())).ok_or_else(|| {
            let names: Vec<&str> = Topic::ALL.iter().map(|t| t.name()).collect();
            Error::InvalidInput(format!("unknown theorem {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

impl fmt::Display for Topic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Topic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A grading: root system type plus the choice of `Δ(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Instance {
    pub family: Family,
    pub rank: usize,
    pub kind: GradingKind,
}

impl Instance {
    pub fn new(family: Family, rank: usize, kind: GradingKind) -> Instance {
        Instance { family, rank, kind }
    }

    pub fn type_name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    pub fn build(&self) -> Result<(RootSystem, Delta1)> {
        let rs = RootSystem::build(self.family, self.rank)?;
        let d = delta1_of(&rs, self.kind)?;
        Ok((rs, d))
    }

    fn standard_index(&self) -> Option<usize> {
        match self.kind {
            GradingKind::OneStandard(i) => Some(i),
            GradingKind::ExtraSpecial => None,
        }
    }

    fn is(&self, family: Family, rank: usize, i: usize) -> bool {
        (self.family, self.rank, self.kind) == (family, rank, GradingKind::OneStandard(i))
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.type_name(), self.kind)
    }
}

/// Every 1-standard grading, then every extra-special grading, over all types of rank ≤ `max_rank`.
pub fn instances(max_rank: usize) -> Vec<Instance> {
    let types = all_types(max_rank);
    let mut out = Vec::new();
    for &(family, rank) in &types {
        out.extend((1..=rank).map(|i| Instance::new(family, rank, GradingKind::OneStandard(i))));
    }
    out.extend(types.iter().map(|&(family, rank)| Instance::new(family, rank, GradingKind::ExtraSpecial)));
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn compare<T: PartialEq + fmt::Display>(name: impl Into<String>, expected: T, actual: T) -> Check {
        Check {
            name: name.into(),
            passed: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
            note: None,
        }
    }

    /// A check whose expectation is a property; `detail` describes what was seen.
    pub fn holds(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed, expected: "holds".into(), actual: detail.into(), note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Check {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationOutcome {
    pub theorem: Topic,
    pub subject: String,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub max_rank: usize,
    pub limits: Limits,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions { max_rank: 8, limits: Limits::default() }
    }
}

type Work = Box<dyn Fn(Limits) -> Result<Vec<Check>> + Send + Sync>;

struct Job {
    topic: Topic,
    subject: String,
    work: Work,
}

fn instance_jobs(topic: Topic, list: Vec<Instance>, f: fn(&Instance, Limits) -> Result<Vec<Check>>) -> Vec<Job> {
    list.into_iter()
        .map(|inst| Job { topic, subject: inst.to_string(), work: Box::new(move |limits| f(&inst, limits)) })
        .collect()
}

fn named_job(topic: Topic, subject: &str, f: fn(Limits) -> Result<Vec<Check>>) -> Job {
    Job { topic, subject: subject.to_string(), work: Box::new(f) }
}

fn jobs_for(topic: Topic, max_rank: usize) -> Vec<Job> {
    let all = instances(max_rank);
    let standard: Vec<Instance> = all.iter().copied().filter(|i| i.standard_index().is_some()).collect();
    let extra: Vec<Instance> = all.iter().copied().filter(|i| i.standard_index().is_none()).collect();
    match topic {
        Topic::MPoly => instance_jobs(topic, all, check_m_poly),
        Topic::IdealCount => instance_jobs(topic, all, check_ideal_count),
        Topic::SelfComplementary => instance_jobs(topic, standard, check_self_complementary),
        Topic::FixedPoints => instance_jobs(topic, standard, check_fixed_points),
        Topic::NPoly => instance_jobs(topic, all, check_n_poly),
        Topic::Orbits => instance_jobs(topic, extra, check_orbits),
        Topic::Csp => instance_jobs(topic, standard, check_csp),
        Topic::Structure => instance_jobs(topic, standard, check_structure),
        Topic::Gaussian => {
            let list = EXCEPTIONS
                .iter()
                .map(|&(f, r, i)| Instance::new(f, r, GradingKind::OneStandard(i)))
                .filter(|inst| inst.rank <= max_rank)
                .collect();
            instance_jobs(topic, list, check_gaussian)
        }
        Topic::Products => vec![
            named_job(topic, "ideals and antichains by subset filtering", check_subset_filtering),
            named_job(topic, "ideals of [m]×P as chains of ideals", check_product_ideals),
            named_job(topic, "antichains of [m]×P by slices", check_product_antichains),
            named_job(topic, "inverse of the complement map", check_inverse_operator),
            named_job(topic, "rowmotion on full-rank ideals of [m]×P", check_full_rank_shift),
            named_job(topic, "rowmotion on [m]×K_r", check_k_shift),
            named_job(topic, "antichains of [m]×K_n by ball fillings", check_ball_filling),
            named_job(topic, "N-polynomials of [m]×K_n", check_k_palindromic),
            named_job(topic, "rank levels of products", check_product_levels),
            named_job(topic, "order-reversing involutions of K_n", check_k_involutions),
        ],
    }
}

/// Runs the given topics and returns one outcome per job, in a fixed order.
///
/// A job that hits an error (including the ideal limit) yields a failed check
/// carrying the error message.
pub fn run(topics: &[Topic], opts: &VerifyOptions) -> Vec<VerificationOutcome> {
    let mut topics = topics.to_vec();
    topics.sort();
    topics.dedup();
    let jobs: Vec<Job> = topics.iter().flat_map(|&t| jobs_for(t, opts.max_rank)).collect();
    let limits = opts.limits;
    jobs.par_iter()
        .map(|job| {
            let start = Instant::now();
            let checks = match (job.work)(limits) {
                Ok(checks) if !checks.is_empty() => checks,
                Ok(_) => vec![Check::holds("job produced checks", false, "no checks")],
                Err(e) => vec![Check::holds("computation", false, e.to_string())],
            };
            VerificationOutcome { theorem: job.topic, subject: job.subject.clone(), checks, elapsed: start.elapsed() }
        })
        .collect()
}

fn ranks_u32(p: &GradedPoset) -> Vec<u32> {
    p.ranks().to_vec()
}

fn heights_u32(d: &Delta1) -> Vec<u32> {
    d.heights().into_iter().map(|h| h as u32).collect()
}

fn poly(c: &[i128]) -> IntPolynomial {
    IntPolynomial::new(c.to_vec())
}

// ---------------------------------------------------------------------------
// Reference data.

/// Reduced numerator and denominator exponents of `M`.
fn reference_m(inst: &Instance) -> Option<(Vec<u32>, Vec<u32>)> {
    let e = |a: &[u32], b: &[u32]| Some((a.to_vec(), b.to_vec()));
    if inst.is(Family::E, 7, 2) {
        e(&[8, 10, 11, 12, 14], &[1, 3, 4, 5, 7])
    } else if inst.is(Family::E, 8, 1) {
        e(&[14, 17, 18, 20, 23], &[1, 4, 6, 7, 10])
    } else if inst.is(Family::E, 8, 2) {
        e(&[11, 12, 13, 14, 15, 17], &[1, 3, 4, 5, 6, 7])
    } else if inst.is(Family::E, 8, 8) {
        e(&[20, 24, 29], &[1, 6, 10])
    } else {
        None
    }
}

fn reference_n(inst: &Instance) -> Option<IntPolynomial> {
    if inst.is(Family::E, 7, 2) {
        Some(poly(&[1, 35, 140, 140, 35, 1]))
    } else if inst.is(Family::E, 8, 1) {
        Some(poly(&[1, 64, 364, 520, 208, 16]))
    } else if inst.is(Family::E, 8, 2) {
        Some(poly(&[1, 56, 420, 952, 770, 216, 16]))
    } else if inst.is(Family::E, 8, 8) {
        Some(poly(&[1, 56, 133, 42]))
    } else {
        None
    }
}

fn reference_fixed_points(inst: &Instance) -> Option<Vec<Vec<i32>>> {
    if inst.is(Family::E, 7, 2) {
        Some(vec![vec![1, 1, 1, 2, 1, 1, 0], vec![1, 1, 2, 2, 1, 0, 0], vec![0, 1, 1, 2, 1, 1, 1]])
    } else if inst.is(Family::E, 7, 7) {
        Some(vec![vec![1, 1, 2, 2, 1, 1, 1], vec![1, 1, 1, 2, 2, 1, 1], vec![0, 1, 1, 2, 2, 2, 1]])
    } else {
        None
    }
}

/// The `[α_i]` with `M(−1) = 0`, listed by type.
pub fn vanishing_at_minus_one(family: Family, rank: usize, i: usize) -> bool {
    let n = rank;
    match family {
        Family::A => n % 2 == 1 && i % 2 == 1,
        Family::B => i % 2 == 1,
        Family::C => i == n,
        Family::D => i + 1 >= n || (n.is_multiple_of(2) && i % 2 == 1 && i + 3 <= n),
        Family::E => n == 7 && (i == 2 || i == 7),
        Family::F | Family::G => false,
    }
}

/// `(family, rank, i, order of rowmotion, orbit sizes with multiplicity, residue of M)`.
pub type OrbitRow = (Family, usize, usize, usize, &'static [(usize, usize)], &'static str);

pub const ORBIT_TABLE: [OrbitRow; 9] = [
    (Family::F, 4, 4, 11, &[(11, 2)], "2[11]_t"),
    (Family::E, 6, 2, 11, &[(11, 6)], "6[11]_t"),
    (Family::E, 7, 1, 17, &[(17, 7)], "7[17]_t"),
    (Family::E, 7, 2, 14, &[(14, 25), (2, 1)], "1 + t^7 + 25[14]_t"),
    (Family::E, 7, 5, 10, &[(10, 67), (2, 1)], "1 + t^5 + 67[10]_t"),
    (Family::E, 8, 1, 23, &[(23, 51)], "51[23]_t"),
    (Family::E, 8, 2, 17, &[(17, 143)], "143[17]_t"),
    (Family::E, 8, 5, 11, &[(11, 252)], "252[11]_t"),
    (Family::E, 8, 8, 29, &[(29, 8)], "8[29]_t"),
];

/// Sorted ideal sizes along the six rowmotion orbits of the extra-special `Δ(1)` of `E6`.
pub const E6_ORBIT_TRACES: [[usize; 11]; 6] = [
    [0, 1, 2, 4, 7, 10, 13, 16, 18, 19, 20],
    [3, 4, 5, 6, 9, 10, 11, 14, 15, 16, 17],
    [3, 4, 5, 6, 9, 10, 11, 14, 15, 16, 17],
    [7, 7, 8, 8, 9, 10, 11, 12, 12, 13, 13],
    [7, 7, 8, 8, 9, 10, 11, 12, 12, 13, 13],
    [5, 6, 6, 8, 9, 10, 11, 12, 14, 14, 15],
];

// ---------------------------------------------------------------------------
// Per-instance checks.

fn check_m_poly(inst: &Instance, limits: Limits) -> Result<Vec<Check>> {
    let (_, d) = inst.build()?;
    let m = m_polynomial_with(&d.poset, limits)?;
    let km = km_product(&d.poset)?;
    let mut checks = vec![match &km.quotient {
        Some(q) => Check::compare("M equals the rank product", q.to_string(), m.to_string()),
        None => Check::holds("M equals the rank product", false, format!("{} is not a polynomial", km.product)),
    }];
    if let Some((num, den)) = reference_m(inst) {
        let reference = RationalProduct::new(num, den);
        let q = reference.quotient()?;
        checks.push(match q {
            Some(q) => Check::compare(format!("M equals {reference}"), q.to_string(), m.to_string()),
            None => Check::holds(format!("M equals {reference}"), false, "reference is not a polynomial"),
        });
    }
    Ok(checks)
}

fn check_ideal_count(inst: &Instance, limits: Limits) -> Result<Vec<Check>> {
    let (_, d) = inst.build()?;
    let count = enumerate_lower_ideals_with(&d.poset, limits)?.len();
    let formula = ideal_count_formula(&ranks_u32(&d.poset));
    Ok(vec![
        Check::holds("∏ (ht+1)/ht is an integer", formula.is_integer(), formula.to_string()),
        Check::compare("ideal count equals ∏ (ht+1)/ht", formula.to_string(), count.to_string()),
    ])
}

fn check_self_complementary(inst: &Instance, limits: Limits) -> Result<Vec<Check>> {
    let (rs, d) = inst.build()?;
    let c = w0_involution(&rs, &d)?;
    let at_minus_one = m_polynomial_with(&d.poset, limits)?.eval(-1);
    let count = count_self_complementary_with(&d.poset, &c, limits)?;
    let formula = m_at_minus_one_formula(&heights_u32(&d));
    Ok(vec![
        Check::compare("M(−1) counts self-complementary ideals", count as i128, at_minus_one),
        Check::compare("M(−1) from even and odd heights", formula.to_string(), at_minus_one.to_string()),
    ])
}

fn check_fixed_points(inst: &Instance, limits: Limits) -> Result<Vec<Check>> {
    let (rs, d) = inst.build()?;
    let i = inst.standard_index().expect("1-standard");
    let c = w0_involution(&rs, &d)?;
    let fixed: Vec<Vec<i32>> = c.fixed_points().iter().map(|&x| d.roots[x].coeffs().to_vec()).collect();
    let vanishes = m_polynomial_with(&d.poset, limits)?.eval(-1) == 0;
    let mut checks = vec![Check::compare("M(−1) = 0 iff w₀ has a fixed point", vanishes, !fixed.is_empty())];
    let listed = vanishing_at_minus_one(inst.family, inst.rank, i);
    if listed {
        checks.push(Check::compare("listed as vanishing at −1", true, vanishes));
    } else if vanishes {
        checks[0] = checks[0].clone().with_note("M(−1) = 0 here although this grading is missing from the published list of vanishing cases");
    }
    if let Some(expected) = reference_fixed_points(inst) {
        let as_set = |v: &[Vec<i32>]| v.iter().cloned().collect::<BTreeSet<_>>();
        let show = |s: BTreeSet<Vec<i32>>| format!("{s:?}");
        checks.push(Check::compare("fixed roots", show(as_set(&expected)), show(as_set(&fixed))));
    }
    Ok(checks)
}

fn check_n_poly(inst: &Instance, limits: Limits) -> Result<Vec<Check>> {
    let (_, d) = inst.build()?;
    let p = &d.poset;
    let antichains = enumerate_antichains_with(p, limits)?;
    let width = antichains.iter().map(ElementSet::len).max().unwrap_or(0);
    let widest = antichains.iter().filter(|a| a.len() == width).count();
    let n = n_polynomial_with(p, limits)?;
    let levels = p.rank_levels()?;
    // The empty poset has no levels but a single (empty) widest antichain.
    let flags = [n.is_palindromic(), n.is_monic(), widest == 1, levels.unique_max() || p.is_empty()];
    let detail = format!(
        "palindromic {}, monic {}, maximal antichains {}, level sizes {:?}",
        flags[0], flags[1], widest, levels.sizes
    );
    let mut checks = vec![
        Check::holds("palindromic, monic, unique widest antichain, unique largest level agree", flags.iter().all(|&f| f == flags[0]), detail),
        Check::compare("width equals largest level", levels.max(), width),
    ];
    if let Some(expected) = reference_n(inst) {
        checks.push(Check::compare("N matches reference", expected.to_string(), n.to_string()));
    }
    Ok(checks)
}

fn check_orbits(inst: &Instance, limits: Limits) -> Result<Vec<Check>> {
    let (rs, d) = inst.build()?;
    let inv = invariants_report(&rs)?;
    let h = inv.coxeter_h;
    let target = inv.dual_coxeter_hstar - 2;
    let orbits = all_orbits_with(&d.poset, Some(target), limits)?;
    let mut checks = vec![
        Check::compare("orbit count equals number of long simple roots", inv.num_long_simple, orbits.len()),
        Check::holds(
            "every orbit has size h − 1",
            orbits.sizes.iter().all(|&s| s + 1 == h),
            format!("h = {h}, orbits {}", orbits.summary()),
        ),
    ];
    if h % 2 == 0 {
        let counts = orbits.lagrangian_counts.clone().unwrap_or_default();
        checks.push(Check::holds(
            format!("each orbit holds exactly one ideal of size {target}"),
            counts.iter().all(|&c| c == 1),
            format!("{counts:?}"),
        ));
    }
    if inst.family == Family::E && inst.rank == 6 {
        let mut expected: Vec<Vec<usize>> = E6_ORBIT_TRACES.iter().map(|t| t.to_vec()).collect();
        let mut actual = orbits.ideal_size_traces.clone();
        expected.sort();
        actual.sort();
        checks.push(Check::compare("ideal sizes along orbits", format!("{expected:?}"), format!("{actual:?}")));
    }
    Ok(checks)
}

fn check_csp(inst: &Instance, limits: Limits) -> Result<Vec<Check>> {
    let (_, d) = inst.build()?;
    let m = m_polynomial_with(&d.poset, limits)?;
    let orbits = all_orbits_with(&d.poset, None, limits)?;
    let csp = csp_from(&m, &orbits);
    let mut checks = vec![Check::holds(
        "M mod (tⁿ − 1) counts fixed points of powers of rowmotion",
        csp.verdict,
        format!("n = {}, residue {}", csp.n, csp.residue_description()),
    )];
    let i = inst.standard_index().expect("1-standard");
    if let Some(row) = ORBIT_TABLE.iter().find(|r| (r.0, r.1, r.2) == (inst.family, inst.rank, i)) {
        let multiset = row.4.iter().map(|(s, c)| format!("{s} × {c}")).collect::<Vec<_>>().join(" + ");
        checks.push(Check::compare("order of rowmotion", row.3, csp.n));
        checks.push(Check::compare("orbit sizes", multiset, orbits.summary()));
        let residue = Check::compare("residue of M", row.5.to_string(), csp.residue_description());
        checks.push(if inst.is(Family::E, 7, 1) {
            residue.with_note(format!(
                "the printed table lists 7[16]_t, but M(1) = {} = 7·17 ideals fall into orbits of size 17",
                m.eval(1)
            ))
        } else {
            residue
        });
    }
    Ok(checks)
}

fn check_structure(inst: &Instance, _limits: Limits) -> Result<Vec<Check>> {
    let (_, d) = inst.build()?;
    let i = inst.standard_index().expect("1-standard");
    let expected = expected_structure(inst.family, inst.rank, i)
        .ok_or(Error::InvalidIndex { index: i, rank: inst.rank })?;
    Ok(match expected {
        Expected::Pattern(p) => {
            let target = p.poset()?;
            vec![Check::holds(format!("isomorphic to {p}"), are_isomorphic(&target, &d.poset).is_some(), format!("{} elements", d.len()))]
        }
        Expected::Exception => {
            let mut matches = Vec::new();
            let candidates = candidate_patterns(d.len());
            for c in &candidates {
                if are_isomorphic(&c.poset()?, &d.poset).is_some() {
                    matches.push(c.to_string());
                }
            }
            vec![Check::holds(
                "not of the form [k]×P with P connected minuscule",
                matches.is_empty(),
                format!("{} candidates, isomorphic to {:?}", candidates.len(), matches),
            )]
        }
    })
}

fn check_gaussian(inst: &Instance, limits: Limits) -> Result<Vec<Check>> {
    let (_, d) = inst.build()?;
    let report = gaussian_check_with(&d.poset, 6, limits)?;
    let mut checks = vec![Check::holds(
        "refuted by some [m]×P with m ≤ 6",
        report.refuted_at.is_some(),
        format!("per m: {:?}, refuted at {:?}", report.per_m(), report.refuted_at),
    )];
    if inst.is(Family::E, 7, 2) {
        let step = &report.steps[5];
        checks.push(Check::holds(
            "the product for [6]×P is not a polynomial",
            !step.product_is_polynomial,
            format!("{}", RationalProduct::gaussian(d.poset.ranks(), 6)),
        ));
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// Small posets.

/// Graded posets with at most 12 elements, including every small `Δ(1)`.
pub fn small_posets() -> Vec<(String, GradedPoset)> {
    let mut out: Vec<(String, GradedPoset)> = Vec::new();
    let grid = |a, b| GradedPoset::product(&GradedPoset::chain(a), &GradedPoset::chain(b));
    for k in 0..=6 {
        out.push((format!("[{k}]"), GradedPoset::chain(k)));
    }
    for k in 2..=4 {
        out.push((format!("antichain {k}"), GradedPoset::antichain(k)));
    }
    for (a, b) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (2, 6)] {
        out.push((format!("[{a}]×[{b}]"), grid(a, b)));
    }
    for r in 1..=5 {
        out.push((format!("K_{r}"), k_poset(r)));
    }
    for r in 3..=4 {
        out.push((format!("H_{r}"), h_poset(r)));
    }
    let v = GradedPoset::new(3, vec![(0, 1), (0, 2)]).expect("V");
    out.push(("V".into(), v.clone()));
    out.push(("Λ".into(), v.dual().expect("dual")));
    out.push(("[1]⊔[2]".into(), GradedPoset::disjoint_union(&[GradedPoset::chain(1), GradedPoset::chain(2)])));
    out.push(("[2]⊔[3]⊔[1]".into(), GradedPoset::disjoint_union(&[GradedPoset::chain(2), GradedPoset::chain(3), GradedPoset::chain(1)])));
    let mut seen_roots = BTreeSet::new();
    for inst in instances(8) {
        if let Ok((_, d)) = inst.build() {
            if (1..=12).contains(&d.len()) && seen_roots.insert((inst.type_name(), inst.kind)) {
                out.push((inst.to_string(), d.poset));
            }
        }
    }
    out
}

fn subsets_filter(p: &GradedPoset, keep: impl Fn(&ElementSet) -> bool) -> BTreeSet<ElementSet> {
    let n = p.len();
    (0u32..(1 << n))
        .map(|mask| ElementSet::from_indices(n, (0..n).filter(|&x| mask >> x & 1 == 1)))
        .filter(|s| keep(s))
        .collect()
}

fn check_subset_filtering(limits: Limits) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (name, p) in small_posets() {
        let ideals: BTreeSet<ElementSet> = enumerate_lower_ideals_with(&p, limits)?.into_iter().collect();
        let antichains: BTreeSet<ElementSet> = enumerate_antichains_with(&p, limits)?.into_iter().collect();
        let brute_ideals = subsets_filter(&p, |s| {
            s.iter().all(|x| (0..p.len()).all(|y| !p.le(y, x) || s.contains(y)))
        });
        let brute_antichains =
            subsets_filter(&p, |s| s.iter().all(|x| s.iter().all(|y| x == y || !p.comparable(x, y))));
        let round_trip = antichains.iter().all(|a| p.max_of(&p.down_closure(a)) == *a)
            && ideals.iter().all(|i| p.down_closure(&p.max_of(i)) == *i);
        let ok = ideals == brute_ideals && antichains == brute_antichains && ideals.len() == antichains.len() && round_trip;
        checks.push(Check::holds(
            format!("{name}: enumeration, subset filtering and A ↦ ↓A agree"),
            ok,
            format!("{} ideals, {} antichains", ideals.len(), antichains.len()),
        ));
    }
    Ok(checks)
}

/// Slices `S_u = {v : (u, v) ∈ S}` of a subset of `[m] × P`, bottom slice first.
fn slices(s: &ElementSet, m: usize, n: usize) -> Vec<ElementSet> {
    (0..m).map(|u| ElementSet::from_indices(n, s.iter().filter(|x| x / n == u).map(|x| x % n))).collect()
}

fn assemble(parts: &[ElementSet], n: usize) -> ElementSet {
    let m = parts.len();
    ElementSet::from_indices(m * n, parts.iter().enumerate().flat_map(|(u, s)| s.iter().map(move |v| u * n + v)))
}

fn product_cases() -> Vec<(String, GradedPoset, usize)> {
    let mut out = Vec::new();
    for (name, p) in small_posets() {
        for m in 1..=4 {
            if m * p.len() <= 12 && !p.is_empty() {
                out.push((name.clone(), p.clone(), m));
            }
        }
    }
    out
}

fn check_product_ideals(limits: Limits) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (name, p, m) in product_cases() {
        let n = p.len();
        let prod = GradedPoset::product(&GradedPoset::chain(m), &p);
        let direct: BTreeSet<ElementSet> = enumerate_lower_ideals_with(&prod, limits)?.into_iter().collect();
        let ideals = enumerate_lower_ideals_with(&p, limits)?;
        let mut chains: BTreeSet<ElementSet> = BTreeSet::new();
        let mut stack: Vec<Vec<usize>> = (0..ideals.len()).map(|k| vec![k]).collect();
        while let Some(seq) = stack.pop() {
            if seq.len() == m {
                let parts: Vec<ElementSet> = seq.iter().map(|&k| ideals[k].clone()).collect();
                chains.insert(assemble(&parts, n));
                continue;
            }
            let last = &ideals[*seq.last().expect("nonempty")];
            for (k, next) in ideals.iter().enumerate() {
                if next.is_subset(last) {
                    let mut longer = seq.clone();
                    longer.push(k);
                    stack.push(longer);
                }
            }
        }
        let m_poly = chain_product_m_polynomial(&p, m, limits)?;
        let sizes = m_poly.eval(1) as usize;
        checks.push(Check::holds(
            format!("[{m}]×{name}: ideals are decreasing chains of ideals"),
            direct == chains && sizes == direct.len(),
            format!("{} ideals, {} chains", direct.len(), chains.len()),
        ));
    }
    Ok(checks)
}

fn check_product_antichains(limits: Limits) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (name, p, m) in product_cases() {
        let n = p.len();
        let prod = GradedPoset::product(&GradedPoset::chain(m), &p);
        let direct: BTreeSet<ElementSet> = enumerate_antichains_with(&prod, limits)?.into_iter().collect();
        let necessary = direct.iter().all(|a| {
            let s = slices(a, m, n);
            s.iter().all(|x| p.is_antichain(x))
                && (0..m.saturating_sub(1)).all(|i| s[i].is_disjoint(&p.down_closure(&s[i + 1])))
        });
        // Tuples of antichains with A_i disjoint from ↓(A_{i+1} ∪ ⋯ ∪ A_m), and
        // with only the consecutive condition.
        let small = enumerate_antichains_with(&p, limits)?;
        let mut full = BTreeSet::new();
        let mut consecutive = 0usize;
        let mut stack: Vec<Vec<usize>> = vec![vec![]];
        while let Some(seq) = stack.pop() {
            if seq.len() == m {
                let parts: Vec<ElementSet> = seq.iter().rev().map(|&k| small[k].clone()).collect();
                let mut above = p.empty_set();
                let mut ok = true;
                for i in (0..m).rev() {
                    if !parts[i].is_disjoint(&p.down_closure(&above)) {
                        ok = false;
                    }
                    above.union_with(&parts[i]);
                }
                if ok {
                    full.insert(assemble(&parts, n));
                }
                consecutive += 1;
                continue;
            }
            for k in 0..small.len() {
                // `seq` is built from the top slice down.
                if let Some(&prev) = seq.last() {
                    if !small[k].is_disjoint(&p.down_closure(&small[prev])) {
                        continue;
                    }
                }
                let mut longer = seq.clone();
                longer.push(k);
                stack.push(longer);
            }
        }
        checks.push(Check::holds(
            format!("[{m}]×{name}: slices are antichains avoiding ↓ of the slices above"),
            necessary && full == direct,
            format!("{} antichains, {} tuples meet the full condition, {} the consecutive one", direct.len(), full.len(), consecutive),
        ));
    }
    // The consecutive condition alone admits {(1,1), (3,2)} in [3]×[2], which is a chain.
    let p = GradedPoset::chain(2);
    let prod = GradedPoset::product(&GradedPoset::chain(3), &p);
    let witness = assemble(&[ElementSet::from_indices(2, [0]), p.empty_set(), ElementSet::from_indices(2, [1])], 2);
    let slices_ok = {
        let s = slices(&witness, 3, 2);
        (0..2).all(|i| s[i].is_disjoint(&p.down_closure(&s[i + 1])))
    };
    checks.push(
        Check::holds(
            "consecutive slice condition alone is not sufficient",
            slices_ok && !prod.is_antichain(&witness),
            format!("{{(1,1), (3,2)}} in [3]×[2]: consecutive condition {slices_ok}, antichain {}", prod.is_antichain(&witness)),
        )
        .with_note("a slice must avoid the down-closure of every later slice, not only the next one"),
    );
    Ok(checks)
}

fn check_inverse_operator(limits: Limits) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (name, p) in small_posets() {
        let antichains = enumerate_antichains_with(&p, limits)?;
        let mut ok = true;
        for a in &antichains {
            let x = panyushev_complement(&p, a)?;
            ok &= panyushev_inverse(&p, &x)? == *a && panyushev_complement(&p, &panyushev_inverse(&p, a)?)? == *a;
        }
        checks.push(Check::holds(format!("{name}: 𝔛′ inverts 𝔛"), ok, format!("{} antichains", antichains.len())));
    }
    Ok(checks)
}

/// Level index `i` with `s = L_i` (union of the first `i` rank levels), if any.
fn level_index(p: &GradedPoset, s: &ElementSet) -> Option<usize> {
    let k = (0..p.len()).filter(|&x| s.contains(x)).map(|x| p.rank(x)).max().unwrap_or(0);
    let full_below = (0..p.len()).all(|x| (p.rank(x) <= k) == s.contains(x));
    full_below.then_some(k as usize)
}

fn level_ideal(p: &GradedPoset, i: usize) -> ElementSet {
    ElementSet::from_indices(p.len(), (0..p.len()).filter(|&x| p.rank(x) as usize <= i))
}

/// Runs of equal values: `[(value, multiplicity)]`.
fn runs<T: PartialEq + Copy>(v: &[T]) -> Vec<(T, usize)> {
    let mut out: Vec<(T, usize)> = Vec::new();
    for &x in v {
        match out.last_mut() {
            Some((y, c)) if *y == x => *c += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Image of `(L_d^{n_0}, L_{i_1}^{n_1}, …, L_{i_s}^{n_s})` under rowmotion of `[m] × P`.
fn full_rank_image(levels: &[usize], d: usize) -> Vec<usize> {
    let mut blocks = runs(levels);
    if blocks[0].0 != d {
        blocks.insert(0, (d, 0));
    }
    if blocks.len() == 1 {
        return vec![0; levels.len()];
    }
    let mut out = Vec::with_capacity(levels.len());
    out.extend(std::iter::repeat_n(blocks[1].0 + 1, blocks[0].1 + 1));
    for k in 2..blocks.len() {
        out.extend(std::iter::repeat_n(blocks[k].0 + 1, blocks[k - 1].1));
    }
    out.extend(std::iter::repeat_n(0, blocks[blocks.len() - 1].1 - 1));
    out
}

fn full_rank_cases() -> Vec<(String, GradedPoset)> {
    let grid = |a, b| GradedPoset::product(&GradedPoset::chain(a), &GradedPoset::chain(b));
    vec![
        ("[5]".into(), GradedPoset::chain(5)),
        ("[2]×[5]".into(), grid(2, 5)),
        ("[2]×[3]".into(), grid(2, 3)),
        ("[3]×[3]".into(), grid(3, 3)),
        ("K_2".into(), k_poset(2)),
        ("K_3".into(), k_poset(3)),
        ("H_4".into(), h_poset(4)),
        ("V".into(), GradedPoset::new(3, vec![(0, 1), (0, 2)]).expect("V")),
    ]
}

fn check_full_rank_shift(limits: Limits) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (name, p) in full_rank_cases() {
        let d = p.num_levels() as usize;
        let n = p.len();
        for m in 1..=4 {
            let prod = GradedPoset::product(&GradedPoset::chain(m), &p);
            let mut formula_ok = true;
            let mut tested = 0;
            let mut closure_ok = true;
            let ideals = enumerate_lower_ideals_with(&prod, limits)?;
            for ideal in &ideals {
                let levels: Option<Vec<usize>> = slices(ideal, m, n).iter().map(|s| level_index(&p, s)).collect();
                let image = rowmotion(&prod, ideal);
                let image_levels: Option<Vec<usize>> =
                    slices(&image, m, n).iter().map(|s| level_index(&p, s)).collect();
                closure_ok &= levels.is_some() == image_levels.is_some();
                if let Some(levels) = levels {
                    tested += 1;
                    let expected = full_rank_image(&levels, d);
                    let parts: Vec<ElementSet> = expected.iter().map(|&i| level_ideal(&p, i)).collect();
                    formula_ok &= assemble(&parts, n) == image;
                }
            }
            checks.push(Check::holds(
                format!("[{m}]×{name}: full-rank ideals shift by the level formula"),
                formula_ok && tested > 0,
                format!("{tested} full-rank ideals of {}", ideals.len()),
            ));
            checks.push(Check::holds(
                format!("[{m}]×{name}: rowmotion orbits are all full-rank or none"),
                closure_ok,
                format!("{} ideals", ideals.len()),
            ));
        }
    }
    Ok(checks)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum KSlice {
    Level(usize),
    /// The chain below the middle pair plus its first element.
    First,
    /// The chain below the middle pair plus its second element.
    Second,
}

/// Slices of `K_{n−1}` (`2n` elements): the level ideals `L_i` and the two ideals
/// containing one middle element.
fn k_slice(p: &GradedPoset, n: usize, s: &ElementSet) -> Option<KSlice> {
    if let Some(i) = level_index(p, s) {
        return Some(KSlice::Level(i));
    }
    let chain = ElementSet::from_indices(2 * n, 0..n - 1);
    let first = {
        let mut c = chain.clone();
        c.insert(n - 1);
        c
    };
    let mut second = chain;
    second.insert(n);
    if *s == first {
        Some(KSlice::First)
    } else if *s == second {
        Some(KSlice::Second)
    } else {
        None
    }
}

fn k_slice_set(p: &GradedPoset, n: usize, t: KSlice) -> ElementSet {
    match t {
        KSlice::Level(i) => level_ideal(p, i),
        KSlice::First => ElementSet::from_indices(2 * n, (0..n - 1).chain([n - 1])),
        KSlice::Second => ElementSet::from_indices(2 * n, (0..n - 1).chain([n])),
    }
}

/// Image of `(L_{2n−1}^{n_0}, L_{i_1}^{n_1}, …, L_{i_s}^{n_s}, I^{m_0}, L_{j_1}^{m_1}, …, L_{j_t}^{m_t})`
/// with `s, t ≥ 1`, where `I` is the ideal through the first middle element. Returns
/// `None` when the tuple does not have this shape.
fn k_shift_image(tokens: &[KSlice], n: usize) -> Option<Vec<KSlice>> {
    use KSlice::*;
    let top = 2 * n - 1;
    let blocks = runs(tokens);
    let pos = blocks.iter().position(|b| b.0 == First)?;
    let (mut upper, lower) = (blocks[..pos].to_vec(), blocks[pos + 1..].to_vec());
    let m0 = blocks[pos].1;
    let n0 = match upper.first() {
        Some(&(Level(l), c)) if l == top => {
            upper.remove(0);
            c
        }
        _ => 0,
    };
    let mut is = Vec::new();
    for (t, c) in &upper {
        match *t {
            Level(l) if (n..top).contains(&l) => is.push((l, *c)),
            _ => return None,
        }
    }
    let mut js = Vec::new();
    for (t, c) in &lower {
        match *t {
            Level(l) if l < n => js.push((l, *c)),
            _ => return None,
        }
    }
    if is.is_empty() || js.is_empty() {
        return None;
    }
    let rep = |out: &mut Vec<KSlice>, t: KSlice, c: usize| out.extend(std::iter::repeat_n(t, c));
    let mut out = Vec::new();
    rep(&mut out, Level(is[0].0 + 1), n0 + 1);
    for k in 1..is.len() {
        rep(&mut out, Level(is[k].0 + 1), is[k - 1].1);
    }
    let ns = is[is.len() - 1].1;
    let j1 = js[0].0;
    if j1 + 1 < n {
        rep(&mut out, Second, ns);
        rep(&mut out, Level(j1 + 1), m0);
        for k in 1..js.len() {
            rep(&mut out, Level(js[k].0 + 1), js[k - 1].1);
        }
    } else {
        rep(&mut out, Level(n), ns);
        rep(&mut out, First, m0);
        for k in 1..js.len() {
            rep(&mut out, Level(js[k].0 + 1), js[k - 1].1);
        }
    }
    rep(&mut out, Level(0), js[js.len() - 1].1 - 1);
    Some(out)
}

fn check_k_shift(limits: Limits) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 2..=5 {
        let p = k_poset(n - 1);
        for m in 3..=5 {
            if m * 2 * n > 40 {
                continue;
            }
            let prod = GradedPoset::product(&GradedPoset::chain(m), &p);
            let ideals = enumerate_lower_ideals_with(&prod, limits)?;
            let mut tested = 0;
            let mut ok = true;
            for ideal in &ideals {
                let tokens: Option<Vec<KSlice>> = slices(ideal, m, 2 * n).iter().map(|s| k_slice(&p, n, s)).collect();
                let Some(image) = tokens.and_then(|t| k_shift_image(&t, n)) else { continue };
                tested += 1;
                let parts: Vec<ElementSet> = image.iter().map(|&t| k_slice_set(&p, n, t)).collect();
                ok &= assemble(&parts, 2 * n) == rowmotion(&prod, ideal);
            }
            checks.push(Check::holds(
                format!("[{m}]×K_{}: rowmotion through a middle element follows the shift formula", n - 1),
                ok && tested > 0,
                format!("{tested} ideals of the covered shape"),
            ));
        }
    }
    Ok(checks)
}

fn binom(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, j| acc * (n - j) as i128 / (j + 1) as i128)
}

/// Ways to place `i` balls: `2n` singly labeled balls and two balls sharing the
/// middle label, into `m` boxes in label order, the two middle balls may share a box.
fn ball_fillings(n: i64, m: i64, i: i64) -> i128 {
    binom(2 * n, i) * binom(m, i)
        + 2 * binom(2 * n, i - 1) * binom(m, i)
        + binom(2 * n, i - 2) * binom(m, i - 1)
        + 2 * binom(2 * n, i - 2) * binom(m, i)
}

fn check_ball_filling(limits: Limits) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=5 {
        for m in 1..=5 {
            let actual = chain_product_n_polynomial(&k_poset(n), m, limits)?;
            let expected = IntPolynomial::new((0..=m as i64 + 1).map(|i| ball_fillings(n as i64, m as i64, i)).collect());
            checks.push(Check::compare(format!("N of [{m}]×K_{n} counts ball fillings"), expected.to_string(), actual.to_string()));
        }
    }
    Ok(checks)
}

fn check_k_palindromic(limits: Limits) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=5 {
        for m in 1..=2 * n + 2 {
            let p = GradedPoset::product(&GradedPoset::chain(m), &k_poset(n));
            let levels = p.rank_levels()?;
            let nm = chain_product_n_polynomial(&k_poset(n), m, limits)?;
            let special = m == 1 || m == 2 * n + 1;
            let flags = [levels.unique_max(), special, nm.is_monic(), nm.is_palindromic()];
            checks.push(Check::holds(
                format!("[{m}]×K_{n}: unique largest level, m ∈ {{1, {}}}, monic and palindromic agree", 2 * n + 1),
                flags.iter().all(|&f| f == flags[0]),
                format!("{flags:?}, N = {nm}"),
            ));
        }
    }
    Ok(checks)
}

fn check_product_levels(limits: Limits) -> Result<Vec<Check>> {
    use MinusculeKind::*;
    let product = |m: usize, kind: MinusculeKind| -> Result<GradedPoset> {
        Ok(GradedPoset::product(&GradedPoset::chain(m), &minuscule_poset(kind)?))
    };
    let several = [
        (2, H(4)),
        (2, Grid(3, 3)),
        (2, H(5)),
        (2, J2),
        (2, H(6)),
        (4, H(4)),
        (2, Grid(3, 5)),
        (3, J2),
        (2, J3),
    ];
    let mut checks = Vec::new();
    for (m, kind) in several {
        let levels = product(m, kind)?.rank_levels()?;
        checks.push(Check::holds(
            format!("[{m}]×{kind} has several largest levels"),
            !levels.unique_max(),
            format!("{:?}", levels.sizes),
        ));
    }
    let unique = [
        (2, Grid(3, 4), poly(&[1, 24, 120, 200, 120, 24, 1])),
        (3, H(4), poly(&[1, 30, 165, 280, 165, 30, 1])),
    ];
    for (m, kind, expected) in unique {
        let levels = product(m, kind)?.rank_levels()?;
        let n = chain_product_n_polynomial(&minuscule_poset(kind)?, m, limits)?;
        checks.push(Check::holds(format!("[{m}]×{kind} has a unique largest level"), levels.unique_max(), format!("{:?}", levels.sizes)));
        checks.push(Check::compare(format!("N of [{m}]×{kind}"), expected.to_string(), n.to_string()));
    }
    Ok(checks)
}

fn check_k_involutions(_limits: Limits) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=6 {
        let p = k_poset(n);
        let mut fixed: Vec<usize> = order_reversing_involutions(&p)
            .iter()
            .map(|perm| (0..perm.len()).filter(|&x| perm[x] == x).count())
            .collect();
        fixed.sort_unstable();
        checks.push(Check::compare(format!("K_{n}: fixed-point counts of its order-reversing involutions"), "[0, 2]".to_string(), format!("{fixed:?}")));
    }
    Ok(checks)
}

/// `(checks run, checks failed)`.
pub fn total_checks(outcomes: &[VerificationOutcome]) -> (usize, usize) {
    let total = outcomes.iter().map(|o| o.checks.len()).sum();
    let failed = outcomes.iter().flat_map(|o| &o.checks).filter(|c| !c.passed).count();
    (total, failed)
}
