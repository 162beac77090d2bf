//! Root systems of the finite-dimensional simple Lie algebras.
//!
//! Roots are stored as integer coefficient vectors over the simple roots. All
//! metric information comes from the Cartan matrix together with a symmetrizer.
//!
//! Simple root labels:
//!
//! * `B_n`: `α_i = e_i − e_{i+1}` for `i < n`, `α_n = e_n` (short).
//! * `C_n`: `α_i = e_i − e_{i+1}` for `i < n`, `α_n = 2e_n` (long).
//! * `D_n`: `α_i = e_i − e_{i+1}` for `i < n`, `α_n = e_{n−1} + e_n`.
//! * `E_n`: Bourbaki numbering; `α_2` hangs off `α_4` and `α_1 − α_3 − α_4 − α_5 − …`
//!   is the long arm.
//! * `F_4`: `α_1 − α_2 ⇐ α_3 − α_4` with `α_1, α_2` short and `α_3, α_4` long, so the
//!   extra-special node is `α_4`.
//! * `G_2`: `α_1` short, `α_2` long.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    /// Whether `(self, rank)` names a simple type in the non-redundant range.
    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    /// Parses a type name such as `"E8"` or `"b3"`.
    pub fn parse_type(s: &str) -> Result<(Family, usize)> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::InvalidInput("empty type name".into()))?;
        let family = Family::from_letter(letter)
            .ok_or_else(|| Error::InvalidInput(format!("unknown family in type {s:?}")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("missing or malformed rank in type {s:?}")))?;
        if !family.is_valid_rank(rank) {
            return Err(Error::InvalidType { family: letter.to_ascii_uppercase(), rank });
        }
        Ok((family, rank))
    }

    /// Family of the dual root system.
    pub fn dual(self) -> Family {
        match self {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        }
    }
}

/// Which simple-root numbering a [`RootSystem`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Labeling {
    /// The numbering documented at module level.
    Standard,
    /// Coroots of a standard system, indexed like the original simple roots.
    Dual,
}

/// An element of the root lattice in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Root {
        Root(coeffs)
    }

    pub fn zero(rank: usize) -> Root {
        Root(vec![0; rank])
    }

    /// The simple root `α_i` (1-based).
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    /// Coefficient `[α : α_i]` (1-based).
    pub fn coeff(&self, i: usize) -> i32 {
        self.0[i - 1]
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    /// `self ≤ other` in the root order: `other − self` is a nonnegative combination.
    pub fn le(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Compact label such as `[1,1,2,2,1,1,1]`.
    pub fn compact(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl From<Vec<i32>> for Root {
    fn from(v: Vec<i32>) -> Root {
        Root(v)
    }
}

/// A word in the simple reflections, letters 1-based.
///
/// The word `(j_1, …, j_k)` stands for `s_{j_1} s_{j_2} ⋯ s_{j_k}`, so applying it
/// to a vector uses the rightmost letter first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReflectionWord(pub Vec<usize>);

impl ReflectionWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    labeling: Labeling,
    cartan: Vec<Vec<i32>>,
    symmetrizer: Vec<i32>,
    positive_roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    /// Builds the root system of type `family_rank`.
    pub fn build(family: Family, rank: usize) -> Result<RootSystem> {
        if !family.is_valid_rank(rank) {
            return Err(Error::InvalidType { family: family.letter(), rank });
        }
        let (cartan, symmetrizer) = standard_cartan(family, rank);
        Ok(RootSystem::from_cartan(family, rank, Labeling::Standard, cartan, symmetrizer))
    }

    /// Builds from a type name such as `"F4"`.
    pub fn parse(name: &str) -> Result<RootSystem> {
        let (family, rank) = Family::parse_type(name)?;
        RootSystem::build(family, rank)
    }

    fn from_cartan(
        family: Family,
        rank: usize,
        labeling: Labeling,
        cartan: Vec<Vec<i32>>,
        symmetrizer: Vec<i32>,
    ) -> RootSystem {
        let positive_roots = generate_positive_roots(&cartan);
        let index = positive_roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        RootSystem { family, rank, labeling, cartan, symmetrizer, positive_roots, index }
    }

    /// The dual root system `Δ∨`, with `α_i∨` in position `i`.
    pub fn dual(&self) -> RootSystem {
        let n = self.rank;
        let cartan = (0..n).map(|i| (0..n).map(|j| self.cartan[j][i]).collect()).collect();
        let dmax = *self.symmetrizer.iter().max().unwrap();
        let symmetrizer = self.symmetrizer.iter().map(|d| dmax / d).collect();
        let labeling = match self.labeling {
            Labeling::Standard => Labeling::Dual,
            Labeling::Dual => Labeling::Standard,
        };
        RootSystem::from_cartan(self.family.dual(), n, labeling, cartan, symmetrizer)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labeling(&self) -> Labeling {
        self.labeling
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    /// `cartan[i][j] = ⟨α_j, α_i∨⟩` (0-based indices).
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i32] {
        &self.symmetrizer
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn is_positive_root(&self, v: &Root) -> bool {
        self.index.contains_key(v)
    }

    pub fn is_root(&self, v: &Root) -> bool {
        self.index.contains_key(v) || self.index.contains_key(&v.neg())
    }

    /// Position of a positive root in [`positive_roots`](Self::positive_roots).
    pub fn root_index(&self, v: &Root) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// The symmetric form `(a, b)`, normalized so that `(α_i, α_i) = 2 d_i`.
    pub fn form(&self, a: &Root, b: &Root) -> i64 {
        let n = self.rank;
        let mut total = 0i64;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                total += a.0[i] as i64
                    * b.0[j] as i64
                    * self.symmetrizer[i] as i64
                    * self.cartan[i][j] as i64;
            }
        }
        total
    }

    /// `⟨a, b∨⟩ = 2(a, b)/(b, b)`.
    pub fn pairing(&self, a: &Root, b: &Root) -> Result<i64> {
        self.check_len(a)?;
        self.check_len(b)?;
        if b.is_zero() {
            return Err(Error::InvalidInput("pairing with the zero vector".into()));
        }
        let num = 2 * self.form(a, b);
        let den = self.form(b, b);
        if num % den != 0 {
            return Err(Error::InvalidInput(format!("⟨{a}, {b}∨⟩ is not an integer")));
        }
        Ok(num / den)
    }

    /// `⟨v, α_j∨⟩` for a simple index `j` (1-based).
    pub fn simple_pairing(&self, v: &Root, j: usize) -> i32 {
        let row = &self.cartan[j - 1];
        v.0.iter().zip(row).map(|(c, a)| c * a).sum()
    }

    /// The simple reflection `s_j(v) = v − ⟨v, α_j∨⟩ α_j`.
    pub fn reflect(&self, v: &Root, j: usize) -> Root {
        let mut out = v.clone();
        out.0[j - 1] -= self.simple_pairing(v, j);
        out
    }

    /// Applies `w = s_{j_1} ⋯ s_{j_k}` to `v`.
    pub fn apply_word(&self, w: &ReflectionWord, v: &Root) -> Root {
        w.0.iter().rev().fold(v.clone(), |acc, &j| self.reflect(&acc, j))
    }

    /// The highest root `θ`.
    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("root systems are nonempty")
    }

    /// Coxeter number `h = ht(θ) + 1`.
    pub fn coxeter_number(&self) -> i32 {
        self.highest_root().height() + 1
    }

    /// Coefficients of the coroot `β∨` in the basis of simple coroots, i.e. the
    /// matching root of [`dual`](Self::dual).
    pub fn coroot(&self, beta: &Root) -> Result<Root> {
        let norm = self.form(beta, beta);
        if norm == 0 {
            return Err(Error::InvalidInput("coroot of the zero vector".into()));
        }
        let mut out = Vec::with_capacity(self.rank);
        for (c, d) in beta.0.iter().zip(&self.symmetrizer) {
            let num = 2 * (*c as i64) * (*d as i64);
            if num % norm != 0 {
                return Err(Error::InvalidInput(format!("{beta} has a non-integral coroot")));
            }
            out.push((num / norm) as i32);
        }
        Ok(Root(out))
    }

    /// Simple roots of maximal length. In simply-laced types every root counts as long.
    pub fn long_simple_roots(&self) -> Vec<usize> {
        let dmax = *self.symmetrizer.iter().max().unwrap();
        (1..=self.rank).filter(|&i| self.symmetrizer[i - 1] == dmax).collect()
    }

    /// A reduced word for the longest element of the parabolic subgroup `W_J`.
    ///
    /// Greedy: while some `j ∈ J` (smallest first) has `w(α_j) > 0`, replace `w`
    /// by `w s_j`.
    pub fn longest_element_word(&self, subset: &[usize]) -> Result<ReflectionWord> {
        let mut js: Vec<usize> = subset.to_vec();
        js.sort_unstable();
        js.dedup();
        for &j in &js {
            if j == 0 || j > self.rank {
                return Err(Error::InvalidIndex { index: j, rank: self.rank });
            }
        }
        let mut word = ReflectionWord::default();
        loop {
            let next = js
                .iter()
                .copied()
                .find(|&j| self.apply_word(&word, &Root::simple(self.rank, j)).is_positive());
            match next {
                Some(j) => word.0.push(j),
                None => break,
            }
        }
        Ok(word)
    }

    /// Longest element of the whole Weyl group.
    pub fn longest_word(&self) -> ReflectionWord {
        let all: Vec<usize> = (1..=self.rank).collect();
        self.longest_element_word(&all).expect("indices in range")
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::InvalidIndex { index: i, rank: self.rank })
        } else {
            Ok(())
        }
    }

    fn check_len(&self, v: &Root) -> Result<()> {
        if v.rank() != self.rank {
            Err(Error::InvalidInput(format!("vector {v} has length {} but rank is {}", v.rank(), self.rank)))
        } else {
            Ok(())
        }
    }
}

/// Cartan matrix and symmetrizer in the labeling described at module level.
fn standard_cartan(family: Family, n: usize) -> (Vec<Vec<i32>>, Vec<i32>) {
    let mut a = vec![vec![0i32; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i32, aji: i32| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    let mut d = vec![1i32; n];
    match family {
        Family::A => {
            for k in 0..n.saturating_sub(1) {
                link(k, k + 1, -1, -1);
            }
        }
        Family::B => {
            for k in 0..n - 2 {
                link(k, k + 1, -1, -1);
            }
            link(n - 2, n - 1, -1, -2);
            d = vec![2; n];
            d[n - 1] = 1;
        }
        Family::C => {
            for k in 0..n - 2 {
                link(k, k + 1, -1, -1);
            }
            link(n - 2, n - 1, -2, -1);
            d[n - 1] = 2;
        }
        Family::D => {
            for k in 0..n - 2 {
                link(k, k + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for k in 2..n - 1 {
                link(k, k + 1, -1, -1);
            }
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
            d = vec![1, 1, 2, 2];
        }
        Family::G => {
            link(0, 1, -3, -1);
            d = vec![1, 3];
        }
    }
    (a, d)
}

/// Breadth-first closure by height: `β + α_j` is a root iff `p = q − ⟨β, α_j∨⟩ > 0`
/// where `q` is the length of the `α_j`-string below `β`.
fn generate_positive_roots(cartan: &[Vec<i32>]) -> Vec<Root> {
    let n = cartan.len();
    let pair = |v: &[i32], j: usize| -> i32 { v.iter().zip(&cartan[j]).map(|(c, a)| c * a).sum() };
    let mut known: HashSet<Vec<i32>> = HashSet::new();
    let mut layer: Vec<Vec<i32>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        for v in &layer {
            known.insert(v.clone());
        }
        let mut next: Vec<Vec<i32>> = Vec::new();
        for beta in &layer {
            for j in 0..n {
                let mut q = 0;
                let mut probe = beta.clone();
                loop {
                    probe[j] -= 1;
                    if known.contains(&probe) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                if q - pair(beta, j) > 0 {
                    let mut up = beta.clone();
                    up[j] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    let mut roots: Vec<Root> = all.into_iter().map(Root).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    roots
}

/// Every `(family, rank)` with `rank ≤ max_rank`, in a fixed order.
pub fn all_types(max_rank: usize) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        for rank in 1..=max_rank {
            if family.is_valid_rank(rank) {
                out.push((family, rank));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::parse(name).unwrap()
    }

    #[test]
    fn rejects_invalid_types() {
        assert!(matches!(RootSystem::build(Family::C, 2), Err(Error::InvalidType { .. })));
        assert!(matches!(RootSystem::build(Family::D, 3), Err(Error::InvalidType { .. })));
        assert!(matches!(RootSystem::build(Family::E, 9), Err(Error::InvalidType { .. })));
        assert!(RootSystem::parse("X3").is_err());
        assert!(RootSystem::parse("E").is_err());
    }

    #[test]
    fn a1_has_one_root() {
        let a1 = rs("A1");
        assert_eq!(a1.num_positive_roots(), 1);
        assert_eq!(a1.highest_root().height(), 1);
    }

    /// Brute-force root strings for G2: the closure must agree with the six
    /// roots obtained by repeatedly reflecting the simple roots.
    #[test]
    fn g2_closure_matches_reflection_orbit() {
        let g2 = rs("G2");
        assert_eq!(g2.num_positive_roots(), 6);
        assert_eq!(g2.highest_root(), &Root::new(vec![3, 2]));
        assert_eq!(g2.highest_root().height(), 5);

        let mut orbit: HashSet<Root> = HashSet::new();
        let mut frontier = vec![Root::simple(2, 1), Root::simple(2, 2)];
        while let Some(v) = frontier.pop() {
            if orbit.insert(v.clone()) {
                for j in 1..=2 {
                    frontier.push(g2.reflect(&v, j));
                }
            }
        }
        let positive: HashSet<Root> = orbit.into_iter().filter(Root::is_positive).collect();
        let generated: HashSet<Root> = g2.positive_roots().iter().cloned().collect();
        assert_eq!(positive, generated);
    }

    #[test]
    fn positive_root_counts() {
        for n in 1..=8 {
            assert_eq!(rs(&format!("A{n}")).num_positive_roots(), n * (n + 1) / 2);
        }
        for n in 2..=8 {
            assert_eq!(rs(&format!("B{n}")).num_positive_roots(), n * n);
        }
        for n in 3..=8 {
            assert_eq!(rs(&format!("C{n}")).num_positive_roots(), n * n);
        }
        for n in 4..=8 {
            assert_eq!(rs(&format!("D{n}")).num_positive_roots(), n * (n - 1));
        }
        assert_eq!(rs("E6").num_positive_roots(), 36);
        assert_eq!(rs("E7").num_positive_roots(), 63);
        assert_eq!(rs("E8").num_positive_roots(), 120);
        assert_eq!(rs("F4").num_positive_roots(), 24);
    }

    #[test]
    fn cartan_is_symmetrizable() {
        for (family, rank) in all_types(8) {
            let r = RootSystem::build(family, rank).unwrap();
            let a = r.cartan();
            let d = r.symmetrizer();
            for i in 0..rank {
                assert_eq!(a[i][i], 2);
                for j in 0..rank {
                    if i != j {
                        assert!(a[i][j] <= 0);
                    }
                    assert_eq!(d[i] * a[i][j], d[j] * a[j][i], "{}", r.name());
                }
            }
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs("A2").highest_root(), &Root::new(vec![1, 1]));
        assert_eq!(rs("F4").highest_root().height(), 11);
        assert_eq!(rs("F4").highest_root(), &Root::new(vec![2, 4, 3, 2]));
        assert_eq!(rs("E8").highest_root().height(), 29);
        assert_eq!(rs("E8").highest_root(), &Root::new(vec![2, 3, 4, 6, 5, 4, 3, 2]));
        assert_eq!(rs("E6").highest_root(), &Root::new(vec![1, 2, 2, 3, 2, 1]));
        for r in rs("E7").positive_roots() {
            assert!(r.le(rs("E7").highest_root()));
        }
    }

    #[test]
    fn pairing_examples() {
        let b2 = rs("B2");
        // α_1 = e_1 − e_2, α_2 = e_2
        assert_eq!(b2.pairing(&Root::simple(2, 1), &Root::simple(2, 2)).unwrap(), -2);
        assert_eq!(b2.pairing(&Root::simple(2, 2), &Root::simple(2, 1)).unwrap(), -1);
        for r in [rs("F4"), rs("G2"), rs("C4")] {
            let n = r.rank();
            for i in 1..=n {
                assert_eq!(r.pairing(&Root::simple(n, i), &Root::simple(n, i)).unwrap(), 2);
                for j in 1..=n {
                    assert_eq!(
                        r.pairing(&Root::simple(n, i), &Root::simple(n, j)).unwrap(),
                        r.cartan()[j - 1][i - 1] as i64
                    );
                }
            }
        }
        assert!(b2.pairing(&Root::simple(2, 1), &Root::zero(2)).is_err());
    }

    #[test]
    fn pairing_products_are_bounded() {
        for name in ["G2", "F4", "B4", "C4", "E6"] {
            let r = rs(name);
            let roots = r.positive_roots();
            for a in roots {
                for b in roots {
                    let p = r.pairing(a, b).unwrap() * r.pairing(b, a).unwrap();
                    assert!((0..=4).contains(&p), "{name}: {a} {b}");
                }
            }
        }
    }

    #[test]
    fn longest_word_examples() {
        let a2 = rs("A2");
        assert!(a2.longest_element_word(&[]).unwrap().is_empty());
        let w = a2.longest_element_word(&[1, 2]).unwrap();
        assert_eq!(w.len(), 3);
        for i in 1..=2 {
            assert!(a2.apply_word(&w, &Root::simple(2, i)).is_negative());
        }
        let a3 = rs("A3");
        let w0 = a3.longest_word();
        assert_eq!(a3.apply_word(&w0, &Root::simple(3, 1)), Root::simple(3, 3).neg());
        assert!(a3.longest_element_word(&[4]).is_err());
    }

    /// Brute force over the six elements of W(A_2): the longest one has length 3.
    #[test]
    fn a2_weyl_group_brute_force() {
        let a2 = rs("A2");
        let words: Vec<Vec<usize>> =
            vec![vec![], vec![1], vec![2], vec![1, 2], vec![2, 1], vec![1, 2, 1], vec![2, 1, 2]];
        let negates_all: Vec<&Vec<usize>> = words
            .iter()
            .filter(|w| {
                (1..=2).all(|i| a2.apply_word(&ReflectionWord(w.to_vec()), &Root::simple(2, i)).is_negative())
            })
            .collect();
        assert!(negates_all.iter().all(|w| w.len() == 3));
        let greedy = a2.longest_word();
        assert!(negates_all.contains(&&greedy.0));
    }

    #[test]
    fn parabolic_longest_word_d4() {
        let d4 = rs("D4");
        let j = [2, 3, 4];
        let w = d4.longest_element_word(&j).unwrap();
        let sub: Vec<&Root> = d4
            .positive_roots()
            .iter()
            .filter(|r| r.coeff(1) == 0)
            .collect();
        assert_eq!(w.len(), sub.len());
        for r in sub {
            let img = d4.apply_word(&w, r);
            assert!(img.is_negative());
            assert_eq!(img.coeff(1), 0);
        }
    }

    #[test]
    fn apply_word_identity_and_simple() {
        let e6 = rs("E6");
        for r in e6.positive_roots() {
            assert_eq!(&e6.apply_word(&ReflectionWord::default(), r), r);
        }
        for i in 1..=6 {
            let w = ReflectionWord(vec![i]);
            assert_eq!(e6.apply_word(&w, &Root::simple(6, i)), Root::simple(6, i).neg());
        }
    }

    fn w0_permutation(r: &RootSystem) -> Vec<usize> {
        let n = r.rank();
        let w0 = r.longest_word();
        (1..=n)
            .map(|i| {
                let img = r.apply_word(&w0, &Root::simple(n, i)).neg();
                (1..=n).find(|&j| img == Root::simple(n, j)).expect("−w0 permutes simple roots")
            })
            .collect()
    }

    #[test]
    fn w0_action_on_simple_roots() {
        for (family, rank) in all_types(8) {
            let r = RootSystem::build(family, rank).unwrap();
            let sigma = w0_permutation(&r);
            assert_eq!(r.longest_word().len(), r.num_positive_roots());
            let expected: Vec<usize> = match (family, rank) {
                (Family::A, n) => (1..=n).map(|i| n + 1 - i).collect(),
                (Family::D, n) if n % 2 == 1 => {
                    let mut v: Vec<usize> = (1..=n).collect();
                    v.swap(n - 2, n - 1);
                    v
                }
                (Family::E, 6) => vec![6, 2, 5, 4, 3, 1],
                (_, n) => (1..=n).collect(),
            };
            assert_eq!(sigma, expected, "{}", r.name());
        }
    }

    #[test]
    fn reflections_preserve_roots() {
        for name in ["B3", "C3", "D5", "E7", "F4", "G2"] {
            let r = rs(name);
            for v in r.positive_roots() {
                for j in 1..=r.rank() {
                    assert!(r.is_root(&r.reflect(v, j)));
                }
            }
        }
    }

    #[test]
    fn dual_systems() {
        let b4 = rs("B4");
        let c4 = b4.dual();
        assert_eq!(c4.family(), Family::C);
        assert_eq!(c4.cartan(), rs("C4").cartan());
        let theta = b4.highest_root();
        let theta_dual = b4.coroot(theta).unwrap();
        assert!(c4.is_positive_root(&theta_dual));
        for r in b4.positive_roots() {
            assert!(c4.is_positive_root(&b4.coroot(r).unwrap()));
        }
        assert_eq!(rs("F4").dual().num_positive_roots(), 24);
        assert_eq!(rs("G2").dual().dual().cartan(), rs("G2").cartan());
    }

    #[test]
    fn long_simple_roots() {
        assert_eq!(rs("B5").long_simple_roots(), vec![1, 2, 3, 4]);
        assert_eq!(rs("C5").long_simple_roots(), vec![5]);
        assert_eq!(rs("F4").long_simple_roots(), vec![3, 4]);
        assert_eq!(rs("G2").long_simple_roots(), vec![2]);
        assert_eq!(rs("E6").long_simple_roots().len(), 6);
    }
}
