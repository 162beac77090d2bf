//! `M`- and `N`-polynomials, the Kostant–Macdonald rank product and the
//! pleasant/Gaussian criteria.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poset::{enumerate_antichains_with, enumerate_lower_ideals_with, GradedPoset, IdealLattice, Limits};

/// Integer polynomial, coefficient `k` at index `k`, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i128>) -> IntPolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial { coeffs: vec![1] }
    }

    pub fn monomial(c: i128, k: usize) -> IntPolynomial {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        IntPolynomial::new(coeffs)
    }

    /// `[n]_t = 1 + t + … + t^{n−1}`.
    pub fn q_integer(n: usize) -> IntPolynomial {
        IntPolynomial::new(vec![1; n])
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn top_coefficient(&self) -> i128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.top_coefficient() == 1
    }

    /// Coefficient sequence reads the same backwards.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn scale(&self, c: i128) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    /// Coefficients `a_0, …, a_{n−1}` of the remainder modulo `t^n − 1`.
    pub fn fold_mod(&self, n: usize) -> Vec<i128> {
        assert!(n > 0, "modulus t^0 - 1 is zero");
        let mut out = vec![0; n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[k % n] += c;
        }
        out
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a != 0 {
                for (j, &b) in other.coeffs.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{a}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // Coefficients fit comfortably in i64 for every poset this crate enumerates.
        s.collect_seq(self.coeffs.iter().map(|&c| c.to_string().parse::<serde_json::Number>().unwrap()))
    }
}

/// `∏ (1 − t^a) / ∏ (1 − t^b)` over multisets of positive exponents, kept with
/// common factors cancelled and both sides sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalProduct {
    pub numerator_exponents: Vec<u32>,
    pub denominator_exponents: Vec<u32>,
}

impl RationalProduct {
    pub fn new(mut numerator: Vec<u32>, mut denominator: Vec<u32>) -> RationalProduct {
        numerator.sort_unstable();
        denominator.sort_unstable();
        let (mut num, mut den) = (Vec::new(), Vec::new());
        let (mut i, mut j) = (0, 0);
        while i < numerator.len() || j < denominator.len() {
            match (numerator.get(i), denominator.get(j)) {
                (Some(a), Some(b)) if a == b => {
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a < b => {
                    num.push(*a);
                    i += 1;
                }
                (Some(a), None) => {
                    num.push(*a);
                    i += 1;
                }
                (_, Some(b)) => {
                    den.push(*b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        RationalProduct { numerator_exponents: num, denominator_exponents: den }
    }

    /// `∏_x (1 − t^{r(x)+1}) / (1 − t^{r(x)})`.
    pub fn kostant_macdonald(ranks: &[u32]) -> RationalProduct {
        RationalProduct::new(ranks.iter().map(|r| r + 1).collect(), ranks.to_vec())
    }

    /// `∏_x (1 − t^{m+r(x)}) / (1 − t^{r(x)})`, the rank product of `[m] × P`.
    pub fn gaussian(ranks: &[u32], m: u32) -> RationalProduct {
        RationalProduct::new(ranks.iter().map(|r| r + m).collect(), ranks.to_vec())
    }

    /// Value at `t = 1`, namely `∏ a / ∏ b` (the factor counts agree).
    pub fn value_at_one(&self) -> BigRational {
        let prod = |v: &[u32]| v.iter().fold(BigInt::one(), |acc, &e| acc * BigInt::from(e));
        BigRational::new(prod(&self.numerator_exponents), prod(&self.denominator_exponents))
    }

    /// Whether the product is a polynomial: each cyclotomic factor `Φ_d` must
    /// occur at least as often upstairs as downstairs.
    pub fn is_polynomial(&self) -> bool {
        if self.numerator_exponents.len() != self.denominator_exponents.len() {
            return false;
        }
        let max = self.denominator_exponents.iter().copied().max().unwrap_or(0);
        (1..=max).all(|d| {
            let up = self.numerator_exponents.iter().filter(|&&a| a % d == 0).count();
            let down = self.denominator_exponents.iter().filter(|&&b| b % d == 0).count();
            up >= down
        })
    }

    /// The quotient as a polynomial, or `None` when it is not one.
    pub fn quotient(&self) -> Result<Option<IntPolynomial>> {
        if !self.is_polynomial() {
            return Ok(None);
        }
        let mut p: Vec<BigInt> = vec![BigInt::one()];
        for &a in &self.numerator_exponents {
            let a = a as usize;
            let mut next = vec![BigInt::zero(); p.len() + a];
            for (k, c) in p.iter().enumerate() {
                next[k] += c;
                next[k + a] -= c;
            }
            p = next;
        }
        for &b in &self.denominator_exponents {
            // q(1 − t^b) = p  ⇔  q_k = p_k + q_{k−b}
            let b = b as usize;
            let deg = p.len() - 1 - b;
            let mut q: Vec<BigInt> = Vec::with_capacity(deg + 1);
            for k in 0..=deg {
                let mut c = p[k].clone();
                if k >= b {
                    c += &q[k - b];
                }
                q.push(c);
            }
            p = q;
        }
        let coeffs = p
            .iter()
            .map(|c| c.to_i128().ok_or_else(|| Error::Overflow("quotient coefficient exceeds i128".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(IntPolynomial::new(coeffs)))
    }
}

impl fmt::Display for RationalProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: &[u32]| -> String {
            if v.is_empty() {
                "1".into()
            } else {
                v.iter().map(|e| format!("(1-t^{e})")).collect::<Vec<_>>().join("")
            }
        };
        write!(f, "{} / {}", side(&self.numerator_exponents), side(&self.denominator_exponents))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KmProduct {
    pub product: RationalProduct,
    /// `None` when the product is not a polynomial.
    pub quotient: Option<IntPolynomial>,
}

fn by_size(sizes: impl Iterator<Item = usize>, n: usize) -> IntPolynomial {
    let mut coeffs = vec![0i128; n + 1];
    for s in sizes {
        coeffs[s] += 1;
    }
    IntPolynomial::new(coeffs)
}

pub fn m_polynomial(p: &GradedPoset) -> Result<IntPolynomial> {
    m_polynomial_with(p, Limits::default())
}

pub fn m_polynomial_with(p: &GradedPoset, limits: Limits) -> Result<IntPolynomial> {
    Ok(by_size(enumerate_lower_ideals_with(p, limits)?.iter().map(|s| s.len()), p.len()))
}

pub fn n_polynomial(p: &GradedPoset) -> Result<IntPolynomial> {
    n_polynomial_with(p, Limits::default())
}

pub fn n_polynomial_with(p: &GradedPoset, limits: Limits) -> Result<IntPolynomial> {
    Ok(by_size(enumerate_antichains_with(p, limits)?.iter().map(|s| s.len()), p.len()))
}

/// The Kostant–Macdonald product with `ht` replaced by the rank function.
pub fn km_product(p: &GradedPoset) -> Result<KmProduct> {
    let product = RationalProduct::kostant_macdonald(p.ranks());
    let quotient = product.quotient()?;
    Ok(KmProduct { product, quotient })
}

pub fn is_pleasant(p: &GradedPoset) -> Result<bool> {
    let m = m_polynomial(p)?;
    Ok(km_product(p)?.quotient.is_some_and(|q| q == m))
}

/// `M_{[m]×P}` without enumerating the ideals of the product.
///
/// Ideals of `[m] × P` are chains `I_1 ⊇ ⋯ ⊇ I_m` in `J(P)`, so the polynomial
/// is an `m`-fold superset-sum over `J(P)`. The superset sum runs one element of
/// `P` at a time in reverse linear-extension order; every pair `I ⊆ I'` is then
/// joined by exactly one path that removes the elements of `I' ∖ I` from the
/// largest down.
pub fn chain_product_m_polynomial(p: &GradedPoset, m: usize, limits: Limits) -> Result<IntPolynomial> {
    if m == 0 {
        return Ok(IntPolynomial::one());
    }
    let lattice = IdealLattice::with_limits(p, limits)?;
    let sizes: Vec<usize> = lattice.ideals().iter().map(|s| s.len()).collect();
    let len = m * p.len() + 1;
    let mut steps: Vec<Vec<(usize, usize)>> = vec![Vec::new(); p.len()];
    for k in 0..lattice.len() {
        for &(x, t) in lattice.upper_covers(k) {
            steps[x].push((k, t));
        }
    }
    let order: Vec<usize> = p.linear_extension().into_iter().rev().collect();

    let mut f: Vec<Vec<i128>> = sizes
        .iter()
        .map(|&s| {
            let mut v = vec![0i128; len];
            v[s] = 1;
            v
        })
        .collect();
    for _ in 1..m {
        for &x in &order {
            for &(lo, hi) in &steps[x] {
                let (a, b) = if lo < hi {
                    let (l, r) = f.split_at_mut(hi);
                    (&mut l[lo], &r[0])
                } else {
                    let (l, r) = f.split_at_mut(lo);
                    (&mut r[0], &l[hi])
                };
                for (u, v) in a.iter_mut().zip(b.iter()) {
                    *u += v;
                }
            }
        }
        for (v, &s) in f.iter_mut().zip(&sizes) {
            v.rotate_right(s);
        }
    }
    let mut total = vec![0i128; len];
    for v in &f {
        for (t, c) in total.iter_mut().zip(v) {
            *t += c;
        }
    }
    Ok(IntPolynomial::new(total))
}

/// `N_{[m]×P}` without enumerating the antichains of the product.
///
/// Antichains `A` of `[m] × P` correspond to chains `D_1 ⊇ ⋯ ⊇ D_m` in `J(P)`
/// via `D_i = ↓(A_i ∪ ⋯ ∪ A_m)`, and then `A_i = max(D_i) ∖ D_{i+1}`
/// (with `D_{m+1} = ∅`). The recursion over consecutive pairs is quadratic in
/// `|J(P)|`, so this is meant for small `P`.
pub fn chain_product_n_polynomial(p: &GradedPoset, m: usize, limits: Limits) -> Result<IntPolynomial> {
    if m == 0 {
        return Ok(IntPolynomial::one());
    }
    let ideals = enumerate_lower_ideals_with(p, limits)?;
    let maxes: Vec<_> = ideals.iter().map(|d| p.max_of(d)).collect();
    let len = m * p.len() + 1;
    let mut h: Vec<Vec<i128>> = maxes
        .iter()
        .map(|mx| {
            let mut v = vec![0i128; len];
            v[mx.len()] = 1;
            v
        })
        .collect();
    for _ in 1..m {
        let next: Vec<Vec<i128>> = (0..ideals.len())
            .map(|d| {
                let mut v = vec![0i128; len];
                for (e, sub) in ideals.iter().enumerate() {
                    if !sub.is_subset(&ideals[d]) {
                        continue;
                    }
                    let w = maxes[d].difference(sub).len();
                    for k in 0..len - w {
                        v[k + w] += h[e][k];
                    }
                }
                v
            })
            .collect();
        h = next;
    }
    let mut total = vec![0i128; len];
    for v in &h {
        for (t, c) in total.iter_mut().zip(v) {
            *t += c;
        }
    }
    Ok(IntPolynomial::new(total))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaussianStep {
    pub m: usize,
    pub product_is_polynomial: bool,
    pub pleasant: bool,
}

/// Outcome of testing `[m] × P` for `m = 1, …, m_max`.
///
/// A failure at some `m` refutes Gaussianness. Passing every `m` is only
/// consistency up to `m_max`, never a proof.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaussianReport {
    pub steps: Vec<GaussianStep>,
    pub refuted_at: Option<usize>,
}

impl GaussianReport {
    pub fn per_m(&self) -> Vec<bool> {
        self.steps.iter().map(|s| s.pleasant).collect()
    }
}

pub fn gaussian_check(p: &GradedPoset, m_max: usize) -> Result<GaussianReport> {
    gaussian_check_with(p, m_max, Limits::default())
}

pub fn gaussian_check_with(p: &GradedPoset, m_max: usize, limits: Limits) -> Result<GaussianReport> {
    if m_max == 0 {
        return Err(Error::InvalidInput("m_max must be at least 1".into()));
    }
    let mut steps = Vec::new();
    for m in 1..=m_max {
        let product = RationalProduct::gaussian(p.ranks(), m as u32);
        let quotient = product.quotient()?;
        let pleasant = match &quotient {
            Some(q) => *q == chain_product_m_polynomial(p, m, limits)?,
            None => false,
        };
        steps.push(GaussianStep { m, product_is_polynomial: quotient.is_some(), pleasant });
    }
    let refuted_at = steps.iter().find(|s| !s.pleasant).map(|s| s.m);
    Ok(GaussianReport { steps, refuted_at })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolynomialClass {
    pub palindromic: bool,
    pub monic: bool,
    pub top_coefficient: i128,
    pub value_at_minus1: i128,
    pub value_at_1: i128,
}

pub fn classify_polynomial(p: &IntPolynomial) -> PolynomialClass {
    PolynomialClass {
        palindromic: p.is_palindromic(),
        monic: p.is_monic(),
        top_coefficient: p.top_coefficient(),
        value_at_minus1: p.eval(-1),
        value_at_1: p.eval(1),
    }
}

/// `M(−1)` predicted from the heights alone: with `E`, `F` the multisets of
/// even and odd heights, `∏_{f∈F}(f+1) / ∏_{e∈E} e` when `|E| = |F|`, else 0.
pub fn m_at_minus_one_formula(heights: &[u32]) -> BigRational {
    let (even, odd): (Vec<u32>, Vec<u32>) = heights.iter().partition(|&&h| h % 2 == 0);
    if even.len() != odd.len() {
        return BigRational::zero();
    }
    let num = odd.iter().fold(BigInt::one(), |acc, &f| acc * BigInt::from(f + 1));
    let den = even.iter().fold(BigInt::one(), |acc, &e| acc * BigInt::from(e));
    BigRational::new(num, den)
}

/// `∏ (r+1)/r` over the given ranks, as an exact rational.
pub fn ideal_count_formula(ranks: &[u32]) -> BigRational {
    RationalProduct::kostant_macdonald(ranks).value_at_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{h_poset, k_poset};

    fn poly(c: &[i128]) -> IntPolynomial {
        IntPolynomial::new(c.to_vec())
    }

    fn grid(n: usize, m: usize) -> GradedPoset {
        GradedPoset::product(&GradedPoset::chain(n), &GradedPoset::chain(m))
    }

    fn binom(n: i128, k: i128) -> i128 {
        if k < 0 || k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn arithmetic_and_display() {
        let p = poly(&[1, -2, 0, 3, 0, 0]);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.to_string(), "1 - 2t + 3t^3");
        assert_eq!(poly(&[0, 1, 1]).to_string(), "t + t^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        let q = &IntPolynomial::q_integer(3) * &poly(&[1, -1]);
        assert_eq!(q, poly(&[1, 0, 0, -1]));
        assert_eq!(p.eval(-1), 1 + 2 - 3);
        assert_eq!((&p + &p.scale(-1)), IntPolynomial::zero());
        assert_eq!(poly(&[1, 2]).shift(2), poly(&[0, 0, 1, 2]));
        assert_eq!(IntPolynomial::q_integer(7).fold_mod(3), vec![3, 2, 2]);
        assert_eq!(serde_json::to_string(&poly(&[1, 35, 140])).unwrap(), "[1,35,140]");
    }

    #[test]
    fn rational_product_cancels() {
        let r = RationalProduct::new(vec![2, 3, 4], vec![1, 2, 3]);
        assert_eq!(r.numerator_exponents, vec![4]);
        assert_eq!(r.denominator_exponents, vec![1]);
        assert_eq!(r.quotient().unwrap(), Some(IntPolynomial::q_integer(4)));
        assert_eq!(r.to_string(), "(1-t^4) / (1-t^1)");
        let not = RationalProduct::new(vec![3], vec![2]);
        assert!(!not.is_polynomial());
        assert_eq!(not.quotient().unwrap(), None);
        assert!(RationalProduct::new(vec![], vec![]).quotient().unwrap() == Some(IntPolynomial::one()));
    }

    /// `1−t^2` divides `1−t^6`, but not twice.
    #[test]
    fn cyclotomic_test_sees_shared_factors() {
        let r = RationalProduct::new(vec![6, 1], vec![2, 2]);
        assert!(!r.is_polynomial());
        assert_eq!(r.quotient().unwrap(), None);
        let r = RationalProduct::new(vec![6, 4], vec![2, 3]);
        assert!(r.is_polynomial());
        // (1−t^6)/(1−t^3) · (1−t^4)/(1−t^2)
        assert_eq!(r.quotient().unwrap().unwrap(), poly(&[1, 0, 1, 1, 0, 1]));
    }

    #[test]
    fn chain_polynomials() {
        for k in 0..6 {
            let c = GradedPoset::chain(k);
            assert_eq!(m_polynomial(&c).unwrap(), IntPolynomial::q_integer(k + 1));
            assert_eq!(km_product(&c).unwrap().quotient.unwrap(), IntPolynomial::q_integer(k + 1));
            assert!(is_pleasant(&c).unwrap());
        }
    }

    #[test]
    fn grid_n_polynomial() {
        for n in 1..=4 {
            for m in 1..=4 {
                let expected: Vec<i128> = (0..=n.min(m) as i128).map(|i| binom(n as i128, i) * binom(m as i128, i)).collect();
                assert_eq!(n_polynomial(&grid(n, m)).unwrap(), poly(&expected));
            }
        }
        assert_eq!(n_polynomial(&grid(2, 3)).unwrap(), poly(&[1, 6, 3]));
    }

    #[test]
    fn h_n_polynomial() {
        for n in 1..=7i128 {
            let expected: Vec<i128> = (0..=(n + 1) / 2).map(|i| binom(n + 1, 2 * i)).collect();
            assert_eq!(n_polynomial(&h_poset(n as usize)).unwrap(), poly(&expected), "H_{n}");
        }
    }

    #[test]
    fn k_n_polynomial() {
        for n in 1..=6 {
            assert_eq!(n_polynomial(&k_poset(n)).unwrap(), poly(&[1, 2 * n as i128 + 2, 1]));
        }
    }

    #[test]
    fn diamond_is_pleasant() {
        let d = grid(2, 2);
        // ideals by size: ∅; {00}; {00,01},{00,10}; three elements; all
        assert_eq!(m_polynomial(&d).unwrap(), poly(&[1, 1, 2, 1, 1]));
        assert!(is_pleasant(&d).unwrap());
    }

    #[test]
    fn product_dp_matches_enumeration() {
        let bases = [GradedPoset::chain(3), grid(2, 2), k_poset(2), h_poset(4), GradedPoset::antichain(2)];
        for p in &bases {
            for m in 1..=3 {
                let prod = GradedPoset::product(&GradedPoset::chain(m), p);
                let lim = Limits::new(1_000_000);
                assert_eq!(chain_product_m_polynomial(p, m, lim).unwrap(), m_polynomial(&prod).unwrap());
                assert_eq!(chain_product_n_polynomial(p, m, lim).unwrap(), n_polynomial(&prod).unwrap());
            }
        }
    }

    #[test]
    fn minuscule_posets_consistent_with_gaussian() {
        for p in [h_poset(3), k_poset(2), grid(2, 3)] {
            let report = gaussian_check(&p, 4).unwrap();
            assert_eq!(report.refuted_at, None);
            assert_eq!(report.per_m(), vec![true; 4]);
        }
        // disjoint unions of chains are pleasant
        let u = GradedPoset::disjoint_union(&[GradedPoset::chain(1), GradedPoset::chain(2)]);
        assert_eq!(m_polynomial(&u).unwrap(), poly(&[1, 2, 2, 1]));
        assert!(is_pleasant(&u).unwrap());
        // a < b, a < c: five ideals, rank product 18/4
        let v = GradedPoset::new(3, vec![(0, 1), (0, 2)]).unwrap();
        assert_eq!(m_polynomial(&v).unwrap(), poly(&[1, 1, 2, 1]));
        assert_eq!(km_product(&v).unwrap().quotient, None);
        assert!(!is_pleasant(&v).unwrap());
        assert_eq!(gaussian_check(&v, 3).unwrap().refuted_at, Some(1));
    }

    #[test]
    fn classification() {
        let c = classify_polynomial(&poly(&[1, 8, 1]));
        assert!(c.palindromic && c.monic);
        assert_eq!((c.value_at_minus1, c.value_at_1), (-6, 10));
        let c = classify_polynomial(&poly(&[1, 64, 364, 520, 208, 16]));
        assert!(!c.palindromic && !c.monic);
        assert_eq!(c.top_coefficient, 16);
    }

    #[test]
    fn minus_one_formula_on_chains() {
        // [k]: heights 1..k, M(−1) = 1 if k even, 0 if k odd
        for k in 1..=8u32 {
            let h: Vec<u32> = (1..=k).collect();
            let expected = if k % 2 == 0 { 1 } else { 0 };
            assert_eq!(m_at_minus_one_formula(&h), BigRational::from_integer(expected.into()));
        }
    }
}
