//! Multiplicity-free weight systems and the symmetric group acting on them.
//!
//! A [`Weight`] is an exponent vector over the generators `a1..an`. Weight
//! systems are finite sets of 0/1 weights containing zero; the symmetric
//! group permutes generators, and the length of a weight is the image of the
//! summation homomorphism `Z^n -> Z`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::Add;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn from_bit(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Parity of a weight of the given length when every generator has parity `self`.
    pub fn of_length(self, length: usize) -> Parity {
        Parity::from_bit(self.is_odd() && length % 2 == 1)
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.is_odd() != rhs.is_odd())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// Exponent vector `(k1, .., kn)` standing for `k1*a1 + .. + kn*an`.
///
/// Weights are ordered by length first; among weights of equal length the one
/// involving lower-indexed generators comes first, so `a1 < a2 < a1+a2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight(Vec<u32>);

impl Weight {
    pub fn new(exponents: Vec<u32>) -> Self {
        Weight(exponents)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// The generator `a_i` (1-based, matching the printed names).
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "generator index {i} out of range 1..={n}");
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Weight(e)
    }

    /// `a1 + .. + ak` inside `Z^n`.
    pub fn block(n: usize, start: usize, len: usize) -> Self {
        let mut e = vec![0; n];
        for x in &mut e[start..start + len] {
            *x = 1;
        }
        Weight(e)
    }

    pub fn from_support(n: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut e = vec![0; n];
        for i in support {
            e[i] += 1;
        }
        Weight(e)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Sum of exponents. On multiplicity-free weights this is the length `#delta`.
    pub fn length(&self) -> usize {
        self.0.iter().map(|&k| k as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.0.iter().all(|&k| k <= 1)
    }

    /// 0-based indices of the generators occurring in the weight.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, _)| i)
    }

    pub fn parity(&self, generator_parity: Parity) -> Parity {
        generator_parity.of_length(self.length())
    }

    pub fn scaled(&self, factor: u32) -> Weight {
        Weight(self.0.iter().map(|&k| k * factor).collect())
    }

    pub fn checked_sub(&self, other: &Weight) -> Option<Weight> {
        if self.rank() != other.rank() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "adding weights of different rank");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Weight {
    /// `a1+a3`, `2a2`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| {
                if k == 1 {
                    format!("a{}", i + 1)
                } else {
                    format!("{}a{}", k, i + 1)
                }
            })
            .join("+");
        f.write_str(&parts)
    }
}

/// A bijection of `{0, .., n-1}`; printed 1-based in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidWeightSystem(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Transposition of the 0-based points `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    /// The adjacent transpositions `(i i+1)`, which generate `S_n`.
    pub fn adjacent_transpositions(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n.saturating_sub(1)).map(move |i| Permutation::transposition(n, i, i + 1))
    }

    /// All `n!` permutations in lexicographic order of their image vectors.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(|images| Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `s·(a_{i1} + .. + a_{ip}) = a_{s(i1)} + .. + a_{s(ip)}`.
    pub fn act(&self, weight: &Weight) -> Result<Weight> {
        if weight.rank() != self.degree() {
            return Err(Error::DimensionMismatch {
                expected: self.degree(),
                found: weight.rank(),
            });
        }
        let mut e = vec![0; weight.rank()];
        for (i, &k) in weight.0.iter().enumerate() {
            e[self.images[i]] = k;
        }
        Ok(Weight(e))
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.images[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for c in cycles {
            write!(f, "({})", c.iter().map(|i| i + 1).join(" "))?;
        }
        Ok(())
    }
}

/// A multiplicity-free weight system `Δ ⊂ Δn`: contains zero, all entries 0/1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    n: usize,
    generator_parity: Parity,
    members: BTreeSet<Weight>,
}

impl WeightSystem {
    pub fn new(
        n: usize,
        generator_parity: Parity,
        members: impl IntoIterator<Item = Weight>,
    ) -> Result<Self> {
        let members: BTreeSet<Weight> = members.into_iter().collect();
        for w in &members {
            if w.rank() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: w.rank(),
                });
            }
            if !w.is_multiplicity_free() {
                return Err(Error::InvalidWeightSystem(format!(
                    "{w} is not multiplicity-free"
                )));
            }
        }
        if !members.contains(&Weight::zero(n)) {
            return Err(Error::InvalidWeightSystem(
                "a weight system must contain 0".into(),
            ));
        }
        Ok(WeightSystem {
            n,
            generator_parity,
            members,
        })
    }

    /// The full system `Δn` of all 0/1 weights.
    pub fn full(n: usize, generator_parity: Parity) -> Self {
        Self::with_lengths(n, generator_parity, 0..=n)
    }

    /// All multiplicity-free weights whose length lies in `lengths` (0 is always added).
    pub fn with_lengths(
        n: usize,
        generator_parity: Parity,
        lengths: impl IntoIterator<Item = usize>,
    ) -> Self {
        let lengths: BTreeSet<usize> = lengths.into_iter().collect();
        let mut members = BTreeSet::new();
        members.insert(Weight::zero(n));
        for k in lengths.into_iter().filter(|&k| k <= n) {
            for support in (0..n).combinations(k) {
                members.insert(Weight::from_support(n, support));
            }
        }
        WeightSystem {
            n,
            generator_parity,
            members,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generator_parity(&self) -> Parity {
        self.generator_parity
    }

    pub fn members(&self) -> &BTreeSet<Weight> {
        &self.members
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.members.contains(w)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &Weight> {
        self.members.iter().filter(|w| !w.is_zero())
    }

    pub fn parity(&self, w: &Weight) -> Parity {
        w.parity(self.generator_parity)
    }

    /// Closure under the adjacent transpositions, which generate `S_n`.
    pub fn is_sn_invariant(&self) -> bool {
        Permutation::adjacent_transpositions(self.n).all(|s| self.is_preserved_by(&s))
    }

    pub fn is_preserved_by(&self, s: &Permutation) -> bool {
        self.members
            .iter()
            .all(|w| s.act(w).map(|sw| self.members.contains(&sw)).unwrap_or(false))
    }

    /// `L = Δ/S_n`, identified with the set of lengths of members.
    pub fn quotient_label(&self) -> Result<QuotientLabel> {
        if !self.is_sn_invariant() {
            return Err(Error::NotSymmetric);
        }
        Ok(QuotientLabel {
            lengths: self.members.iter().map(Weight::length).collect(),
            beta_parity: self.generator_parity,
        })
    }

    /// Permutations `s` with `s·Δ = Δ`.
    ///
    /// A lattice automorphism fixing the length map and preserving `Δ` sends
    /// each generator to a non-negative vector of length one, i.e. to another
    /// generator, so once every generator lies in `Δ` the permutation matrices
    /// exhaust the group.
    pub fn deck_group(&self) -> Result<Vec<Permutation>> {
        for i in 1..=self.n {
            if !self.members.contains(&Weight::generator(self.n, i)) {
                return Err(Error::MissingGenerator(i));
            }
        }
        Ok(Permutation::all(self.n)
            .filter(|s| self.is_preserved_by(s))
            .collect())
    }

    /// Tilings of `a1 + .. + ak` into consecutive blocks of non-decreasing
    /// length, each block in `Δ`. Ordered lexicographically by the sequence
    /// of block lengths.
    pub fn lambda_decompositions(&self, k: usize) -> Result<Vec<LambdaDecomposition>> {
        let label = self.quotient_label()?;
        if !label.contains(k) {
            return Err(Error::LengthNotInLabel(k));
        }
        let parts: Vec<usize> = label.lengths.iter().copied().filter(|&l| l > 0).collect();
        let mut out = Vec::new();
        let mut current = Vec::new();
        nondecreasing_compositions(k, &parts, 0, &mut current, &mut out);
        Ok(out
            .into_iter()
            .map(|lengths| LambdaDecomposition::from_lengths(self.n, &lengths))
            .collect())
    }
}

fn nondecreasing_compositions(
    remaining: usize,
    parts: &[usize],
    min_index: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for (idx, &p) in parts.iter().enumerate().skip(min_index) {
        if p > remaining {
            break;
        }
        current.push(p);
        nondecreasing_compositions(remaining - p, parts, idx, current, out);
        current.pop();
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.members.iter().join(", "))
    }
}

/// Lengths `k` with `kβ ∈ L`, together with the parity of `β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientLabel {
    lengths: BTreeSet<usize>,
    beta_parity: Parity,
}

impl QuotientLabel {
    pub fn new(lengths: impl IntoIterator<Item = usize>, beta_parity: Parity) -> Self {
        let mut lengths: BTreeSet<usize> = lengths.into_iter().collect();
        lengths.insert(0);
        QuotientLabel {
            lengths,
            beta_parity,
        }
    }

    pub fn lengths(&self) -> &BTreeSet<usize> {
        &self.lengths
    }

    pub fn beta_parity(&self) -> Parity {
        self.beta_parity
    }

    pub fn contains(&self, k: usize) -> bool {
        self.lengths.contains(&k)
    }

    pub fn max_length(&self) -> usize {
        self.lengths.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Display for QuotientLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.lengths.iter().join(", "))
    }
}

/// `χ(k1, .., kn) = k1 + .. + kn`.
pub fn chi(weight: &Weight) -> i64 {
    weight.exponents().iter().map(|&k| k as i64).sum()
}

/// Consecutive generator blocks `γ1 = a1+..+a_{s1}`, `γ2 = a_{s1+1}+..`, with
/// non-decreasing lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaDecomposition {
    parts: Vec<Weight>,
}

impl LambdaDecomposition {
    pub fn from_lengths(n: usize, lengths: &[usize]) -> Self {
        let mut start = 0;
        let parts = lengths
            .iter()
            .map(|&len| {
                let w = Weight::block(n, start, len);
                start += len;
                w
            })
            .collect();
        LambdaDecomposition { parts }
    }

    /// Accepts `parts` only if they form a valid decomposition inside `sys`.
    pub fn from_parts(parts: Vec<Weight>, sys: &WeightSystem) -> Option<Self> {
        let d = LambdaDecomposition { parts };
        d.is_valid(sys).then_some(d)
    }

    pub fn parts(&self) -> &[Weight] {
        &self.parts
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.parts.iter().map(Weight::length).collect()
    }

    pub fn total_length(&self) -> usize {
        self.parts.iter().map(Weight::length).sum()
    }

    pub fn is_valid(&self, sys: &WeightSystem) -> bool {
        let mut next = 0;
        let mut prev_len = 0;
        for p in &self.parts {
            let len = p.length();
            if p.rank() != sys.n()
                || len == 0
                || len < prev_len
                || !sys.contains(p)
                || next + len > sys.n()
                || *p != Weight::block(sys.n(), next, len)
            {
                return false;
            }
            next += len;
            prev_len = len;
        }
        true
    }
}

impl fmt::Display for LambdaDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(", "))
    }
}
