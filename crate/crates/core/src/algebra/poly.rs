use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Zero};

use super::coefficient::BaseCoefficient;
use super::monomial::FiberMonomial;
use super::spec::{AlgebraSpec, FiberVar};
use super::Scalar;
use crate::error::{Error, Result};
use crate::weights::{Parity, Permutation, Weight};

/// Element of a graded supercommutative algebra, stored as a map from fiber
/// monomials to base-coordinate coefficients.
///
/// Zero coefficients are never stored and odd squares are dropped on
/// construction, so two polynomials are equal iff their term maps are. In a
/// quotient algebra every stored monomial has multiplicity-free weight.
#[derive(Clone, Debug)]
pub struct Polynomial {
    spec: Arc<AlgebraSpec>,
    terms: BTreeMap<FiberMonomial, BaseCoefficient>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
            && (Arc::ptr_eq(&self.spec, &other.spec) || self.spec.same_algebra(&other.spec))
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(spec: &Arc<AlgebraSpec>) -> Self {
        Polynomial {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(spec: &Arc<AlgebraSpec>, c: Scalar) -> Self {
        let mut p = Self::zero(spec);
        p.add_term(FiberMonomial::one(), BaseCoefficient::constant(spec.base_dim(), c));
        p
    }

    pub fn one(spec: &Arc<AlgebraSpec>) -> Self {
        Self::constant(spec, Scalar::one())
    }

    /// Base coordinate with 1-based index `i`.
    pub fn base_var(spec: &Arc<AlgebraSpec>, i: usize) -> Result<Self> {
        if i == 0 || i > spec.base_dim() {
            return Err(Error::UnknownVariable(format!(
                "{}{i}",
                spec.names().base
            )));
        }
        let mut p = Self::zero(spec);
        p.add_term(FiberMonomial::one(), BaseCoefficient::var(spec.base_dim(), i - 1));
        Ok(p)
    }

    pub fn fiber_var(spec: &Arc<AlgebraSpec>, v: FiberVar) -> Result<Self> {
        if !spec.contains_var(&v) {
            return Err(Error::UnknownVariable(format!(
                "{}[{},{}]",
                spec.names().fiber,
                spec.weight_label(&v.weight),
                v.index
            )));
        }
        let mut p = Self::zero(spec);
        p.insert_monomial(FiberMonomial::var(v), BaseCoefficient::one(spec.base_dim()));
        Ok(p)
    }

    /// Builds `coef · f1 · f2 · ...` from an ordered list of fiber factors.
    pub fn from_ordered_product(
        spec: &Arc<AlgebraSpec>,
        coef: BaseCoefficient,
        factors: impl IntoIterator<Item = FiberVar>,
    ) -> Result<Self> {
        let factors: Vec<FiberVar> = factors.into_iter().collect();
        for v in &factors {
            if !spec.contains_var(v) {
                return Err(Error::UnknownVariable(format!("{v:?}")));
            }
        }
        let mut p = Self::zero(spec);
        if let Some((neg, m)) = FiberMonomial::from_ordered(factors.into_iter().map(|v| (v, 1)), spec.parity_rule()) {
            p.insert_monomial(m, if neg { coef.neg() } else { coef });
        }
        Ok(p)
    }

    /// Wraps a single canonical monomial. The caller guarantees its variables belong to `spec`.
    pub fn from_monomial(spec: &Arc<AlgebraSpec>, m: FiberMonomial, coef: BaseCoefficient) -> Self {
        let mut p = Self::zero(spec);
        p.insert_monomial(m, coef);
        p
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.spec
    }

    pub fn terms(&self) -> &BTreeMap<FiberMonomial, BaseCoefficient> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &FiberMonomial) -> Option<&BaseCoefficient> {
        self.terms.get(m)
    }

    /// Constant coefficient of a monomial, if it is a pure scalar.
    pub fn scalar_coefficient(&self, m: &FiberMonomial) -> Option<Scalar> {
        match self.terms.get(m) {
            None => Some(Scalar::zero()),
            Some(c) => c.as_constant(),
        }
    }

    pub fn leading_term(&self) -> Option<(&FiberMonomial, &BaseCoefficient)> {
        self.terms.iter().next()
    }

    /// Adds a term, dropping it if the algebra is a quotient and its weight has multiplicities.
    fn insert_monomial(&mut self, m: FiberMonomial, c: BaseCoefficient) {
        if self.spec.is_quotient() && !m.is_multiplicity_free(self.spec.rank()) {
            return;
        }
        self.add_term(m, c);
    }

    fn add_term(&mut self, m: FiberMonomial, c: BaseCoefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                slot.add_assign(&c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_same(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.spec, &other.spec) || self.spec.same_algebra(&other.spec) {
            Ok(())
        } else {
            Err(Error::SpecMismatch(
                "polynomials belong to different algebras".into(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Polynomial {
        Polynomial {
            spec: self.spec.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    /// Supercommutative product; reduced modulo the multiplicity ideal in a quotient algebra.
    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let rule = self.spec.parity_rule();
        let rank = self.spec.rank();
        let quotient = self.spec.is_quotient();
        let weights_b: Vec<Weight> = other.terms.keys().map(|m| m.total_weight(rank)).collect();
        let mut out = Polynomial::zero(&self.spec);
        for (ma, ca) in &self.terms {
            let wa = ma.total_weight(rank);
            for ((mb, cb), wb) in other.terms.iter().zip(&weights_b) {
                if quotient && !(&wa + wb).is_multiplicity_free() {
                    continue;
                }
                if let Some((neg, m)) = ma.mul(mb, rule) {
                    let c = ca.mul(cb);
                    out.add_term(m, if neg { c.neg() } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let mut out = Polynomial::zero(&self.spec);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.scale(c));
        }
        out
    }

    /// Multiplies every coefficient by a base polynomial.
    pub fn scale_by_base(&self, c: &BaseCoefficient) -> Polynomial {
        let mut out = Polynomial::zero(&self.spec);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.mul(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.spec);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Drops every term whose total weight has a generator exponent of at least 2.
    pub fn reduce_mod_i(&self) -> Result<Polynomial> {
        if !self.spec.is_delta_type() {
            return Err(Error::InvalidSpec(
                "the multiplicity ideal is defined only for type-Δ algebras".into(),
            ));
        }
        let rank = self.spec.rank();
        Ok(Polynomial {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.is_multiplicity_free(rank))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Re-reads the same terms in another algebra with the same variables,
    /// e.g. passing from a full algebra to its quotient.
    pub fn transport(&self, spec: &Arc<AlgebraSpec>) -> Result<Polynomial> {
        if spec.rank() != self.spec.rank()
            || spec.base_dim() != self.spec.base_dim()
            || spec.generator_parity() != self.spec.generator_parity()
        {
            return Err(Error::SpecMismatch("cannot transport between these algebras".into()));
        }
        let mut out = Polynomial::zero(spec);
        for (m, c) in &self.terms {
            if let Some((v, _)) = m.factors().iter().find(|(v, _)| !spec.contains_var(v)) {
                return Err(Error::UnknownVariable(format!("{v:?}")));
            }
            out.insert_monomial(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn total_weights(&self) -> BTreeSet<Weight> {
        let rank = self.spec.rank();
        self.terms.keys().map(|m| m.total_weight(rank)).collect()
    }

    /// Terms of total weight exactly `w`.
    pub fn homogeneous_component(&self, w: &Weight) -> Polynomial {
        let rank = self.spec.rank();
        self.filter_terms(|m| &m.total_weight(rank) == w)
    }

    /// Terms whose total weight has length `k`.
    pub fn z_degree_component(&self, k: usize) -> Polynomial {
        self.filter_terms(|m| m.length() == k)
    }

    pub fn filter_terms(&self, mut keep: impl FnMut(&FiberMonomial) -> bool) -> Polynomial {
        Polynomial {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The common parity of all terms, or `None` when mixed. Zero is even.
    pub fn parity(&self) -> Option<Parity> {
        let gp = self.spec.generator_parity();
        let mut parities = self.terms.keys().map(|m| gp.of_length(m.length()));
        let first = parities.next().unwrap_or(Parity::Even);
        parities.all(|p| p == first).then_some(first)
    }

    /// True when the polynomial involves no fiber coordinates.
    pub fn is_base_only(&self) -> bool {
        self.terms.keys().all(FiberMonomial::is_one)
    }

    /// Base part as a coefficient (the weight-zero component).
    pub fn base_part(&self) -> BaseCoefficient {
        self.terms
            .get(&FiberMonomial::one())
            .cloned()
            .unwrap_or_else(|| BaseCoefficient::zero(self.spec.base_dim()))
    }

    /// `s·t^δ_j = t^{s·δ}_j`, extended multiplicatively with Koszul signs.
    pub fn act(&self, s: &Permutation) -> Result<Polynomial> {
        self.spec.check_symmetric()?;
        if s.degree() != self.spec.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.spec.rank(),
                found: s.degree(),
            });
        }
        Ok(self.act_unchecked(s))
    }

    pub(crate) fn act_unchecked(&self, s: &Permutation) -> Polynomial {
        let rule = self.spec.parity_rule();
        let mut out = Polynomial::zero(&self.spec);
        for (m, c) in &self.terms {
            let mapped = m.map_vars(rule, |v| FiberVar::new(s.act(&v.weight).expect("rank checked"), v.index));
            if let Some((neg, m2)) = mapped {
                out.add_term(m2, if neg { c.neg() } else { c.clone() });
            }
        }
        out
    }

    /// Invariance under the adjacent transpositions, which generate `S_n`.
    pub fn is_invariant(&self) -> Result<bool> {
        self.spec.check_symmetric()?;
        Ok(Permutation::adjacent_transpositions(self.spec.rank())
            .all(|s| self.act_unchecked(&s) == *self))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics when the operands live in different algebras; see [`Polynomial::checked_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("adding polynomials from different algebras")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("subtracting polynomials from different algebras")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("multiplying polynomials from different algebras")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl std::iter::Sum for Polynomial {
    /// Panics on an empty iterator, since the algebra would be unknown.
    fn sum<I: Iterator<Item = Polynomial>>(mut iter: I) -> Polynomial {
        let first = iter.next().expect("sum of an empty polynomial iterator");
        iter.fold(first, |acc, p| &acc + &p)
    }
}
