use std::collections::BTreeMap;

use num::{One, Zero};

use super::monomial::BaseMonomial;
use super::Scalar;

/// Polynomial over `Q` in the base coordinates; plays the role of the
/// coefficient functions of a graded domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaseCoefficient {
    nvars: usize,
    terms: BTreeMap<BaseMonomial, Scalar>,
}

impl BaseCoefficient {
    pub fn zero(nvars: usize) -> Self {
        BaseCoefficient {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut out = Self::zero(nvars);
        out.add_term(BaseMonomial::one(nvars), c);
        out
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    /// The base coordinate with 0-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut out = Self::zero(nvars);
        out.add_term(BaseMonomial::var(nvars, i), Scalar::one());
        out
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (BaseMonomial, Scalar)>) -> Self {
        let mut out = Self::zero(nvars);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<BaseMonomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when the coefficient is a constant (including 0).
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: BaseMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_assign(&mut self, other: &BaseCoefficient) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &BaseCoefficient) -> BaseCoefficient {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> BaseCoefficient {
        BaseCoefficient {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &BaseCoefficient) -> BaseCoefficient {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> BaseCoefficient {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        BaseCoefficient {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &BaseCoefficient) -> BaseCoefficient {
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}
