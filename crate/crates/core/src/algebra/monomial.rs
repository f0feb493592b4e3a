use std::cmp::Ordering;

use super::spec::{FiberVar, ParityRule};
use crate::weights::Weight;

/// Product of fiber coordinates in canonical order.
///
/// Factors are sorted by (length, weight, index) with each variable appearing
/// once; odd variables always have exponent 1. Monomials compare by total
/// length first, then by factor list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiberMonomial {
    factors: Vec<(FiberVar, u32)>,
}

/// Result of bringing an ordered product into canonical form: `None` when the
/// product vanishes, otherwise the Koszul sign (true = negative) and monomial.
pub type Canonical = Option<(bool, FiberMonomial)>;

impl FiberMonomial {
    pub fn one() -> Self {
        FiberMonomial { factors: Vec::new() }
    }

    pub fn var(v: FiberVar) -> Self {
        FiberMonomial {
            factors: vec![(v, 1)],
        }
    }

    /// Canonicalizes the ordered product `f1^e1 · f2^e2 · ...`.
    ///
    /// The sign counts inversions between odd factors; a repeated odd
    /// variable kills the product.
    pub fn from_ordered(factors: impl IntoIterator<Item = (FiberVar, u32)>, rule: ParityRule) -> Canonical {
        let mut items: Vec<(FiberVar, u32, bool)> = Vec::new();
        for (v, e) in factors {
            if e == 0 {
                continue;
            }
            let odd = rule.is_odd(&v.weight);
            if odd && e > 1 {
                return None;
            }
            items.push((v, e, odd));
        }
        let mut negative = false;
        for j in 0..items.len() {
            if !items[j].2 {
                continue;
            }
            for i in 0..j {
                if !items[i].2 {
                    continue;
                }
                match items[i].0.cmp(&items[j].0) {
                    Ordering::Greater => negative = !negative,
                    Ordering::Equal => return None,
                    Ordering::Less => {}
                }
            }
        }
        items.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(FiberVar, u32)> = Vec::with_capacity(items.len());
        for (v, e, _) in items {
            match merged.last_mut() {
                Some((last, le)) if *last == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Some((negative, FiberMonomial { factors: merged }))
    }

    pub fn factors(&self) -> &[(FiberVar, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors with multiplicity, in canonical order.
    pub fn expanded(&self) -> impl Iterator<Item = &FiberVar> {
        self.factors
            .iter()
            .flat_map(|(v, e)| std::iter::repeat_n(v, *e as usize))
    }

    /// Sum of the lengths of all factors (the `Z`-degree).
    pub fn length(&self) -> usize {
        self.factors
            .iter()
            .map(|(v, e)| v.length() * *e as usize)
            .sum()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(_, e)| *e as usize).sum()
    }

    pub fn total_weight(&self, rank: usize) -> Weight {
        let mut acc = vec![0u32; rank];
        for (v, e) in &self.factors {
            for (a, k) in acc.iter_mut().zip(v.weight.exponents()) {
                *a += k * e;
            }
        }
        Weight::new(acc)
    }

    pub fn is_multiplicity_free(&self, rank: usize) -> bool {
        self.total_weight(rank).is_multiplicity_free()
    }

    /// Canonical product `self · other` with its Koszul sign.
    pub fn mul(&self, other: &FiberMonomial, rule: ParityRule) -> Canonical {
        let mut negative = false;
        for (b, _) in other.factors.iter().filter(|(v, _)| rule.is_odd(&v.weight)) {
            for (a, _) in self.factors.iter().filter(|(v, _)| rule.is_odd(&v.weight)) {
                match a.cmp(b) {
                    Ordering::Greater => negative = !negative,
                    Ordering::Equal => return None,
                    Ordering::Less => {}
                }
            }
        }
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() || j < other.factors.len() {
            let take_left = match (self.factors.get(i), other.factors.get(j)) {
                (Some(a), Some(b)) => match a.0.cmp(&b.0) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => {
                        factors.push((a.0.clone(), a.1 + b.1));
                        i += 1;
                        j += 1;
                        continue;
                    }
                },
                (Some(_), None) => true,
                (None, _) => false,
            };
            if take_left {
                factors.push(self.factors[i].clone());
                i += 1;
            } else {
                factors.push(other.factors[j].clone());
                j += 1;
            }
        }
        Some((negative, FiberMonomial { factors }))
    }

    /// Applies `f` to every variable and re-canonicalizes, keeping the factor order.
    pub fn map_vars(&self, rule: ParityRule, mut f: impl FnMut(&FiberVar) -> FiberVar) -> Canonical {
        Self::from_ordered(self.factors.iter().map(|(v, e)| (f(v), *e)), rule)
    }
}

impl Ord for FiberMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for FiberMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exponent vector over the base coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaseMonomial(Vec<u32>);

impl BaseMonomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        BaseMonomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        BaseMonomial(vec![0; nvars])
    }

    /// The coordinate with 0-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        BaseMonomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &BaseMonomial) -> BaseMonomial {
        BaseMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for BaseMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for BaseMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
