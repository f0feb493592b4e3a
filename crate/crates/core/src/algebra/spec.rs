use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::weights::{Parity, Permutation, QuotientLabel, Weight, WeightSystem};

/// How fiber coordinates are weighted.
///
/// In the length grading, `kβ` is stored as the rank-one weight `(k)`, so both
/// modes share the [`Weight`] machinery for ordering and parity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Grading {
    Delta(WeightSystem),
    Length(QuotientLabel),
}

/// A fiber coordinate `t^δ_j` (or `ξ^k_j`); `index` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiberVar {
    pub weight: Weight,
    pub index: u32,
}

impl FiberVar {
    pub fn new(weight: Weight, index: u32) -> Self {
        FiberVar { weight, index }
    }

    pub fn length(&self) -> usize {
        self.weight.length()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableNames {
    pub base: String,
    pub fiber: String,
}

impl VariableNames {
    pub fn new(base: impl Into<String>, fiber: impl Into<String>) -> Self {
        VariableNames {
            base: base.into(),
            fiber: fiber.into(),
        }
    }

    pub fn graded() -> Self {
        Self::new("x", "xi")
    }

    pub fn multiplicity_free() -> Self {
        Self::new("y", "t")
    }
}

/// Decides the parity of a fiber variable from its weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityRule {
    pub odd_generators: bool,
}

impl ParityRule {
    pub fn is_odd(self, w: &Weight) -> bool {
        self.odd_generators && w.length() % 2 == 1
    }
}

/// Variable table of a graded (super)commutative polynomial algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    grading: Grading,
    base_dim: usize,
    fiber_dims: BTreeMap<Weight, usize>,
    quotient: bool,
    names: VariableNames,
}

impl AlgebraSpec {
    /// Algebra of type `Δ`. Every nonzero member of `Δ` gets an entry in the
    /// dimension table; members not listed in `dims` get dimension 0.
    pub fn delta_type(
        sys: WeightSystem,
        base_dim: usize,
        dims: impl IntoIterator<Item = (Weight, usize)>,
        quotient: bool,
    ) -> Result<Self> {
        let mut fiber_dims: BTreeMap<Weight, usize> = sys.nonzero().map(|w| (w.clone(), 0)).collect();
        for (w, d) in dims {
            match fiber_dims.get_mut(&w) {
                Some(slot) => *slot = d,
                None => {
                    return Err(Error::InvalidSpec(format!(
                        "dimension given for {w}, which is not a nonzero member of the weight system"
                    )))
                }
            }
        }
        Ok(AlgebraSpec {
            grading: Grading::Delta(sys),
            base_dim,
            fiber_dims,
            quotient,
            names: VariableNames::multiplicity_free(),
        })
    }

    /// Type-`Δ` algebra whose dimensions depend only on the length of the weight.
    pub fn delta_type_by_length(
        sys: WeightSystem,
        base_dim: usize,
        dims_by_length: impl IntoIterator<Item = (usize, usize)>,
        quotient: bool,
    ) -> Result<Self> {
        let by_len: BTreeMap<usize, usize> = dims_by_length.into_iter().collect();
        let dims: Vec<(Weight, usize)> = sys
            .nonzero()
            .map(|w| (w.clone(), by_len.get(&w.length()).copied().unwrap_or(0)))
            .collect();
        Self::delta_type(sys, base_dim, dims, quotient)
    }

    /// Graded algebra of type `L` with `dims` mapping length `k` to `dim V_k`.
    pub fn l_type(
        label: QuotientLabel,
        base_dim: usize,
        dims: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut fiber_dims: BTreeMap<Weight, usize> = label
            .lengths()
            .iter()
            .filter(|&&k| k > 0)
            .map(|&k| (Weight::new(vec![k as u32]), 0))
            .collect();
        for (k, d) in dims {
            match fiber_dims.get_mut(&Weight::new(vec![k as u32])) {
                Some(slot) => *slot = d,
                None => {
                    return Err(Error::InvalidSpec(format!(
                        "dimension given for length {k}, which is not a nonzero member of the label"
                    )))
                }
            }
        }
        Ok(AlgebraSpec {
            grading: Grading::Length(label),
            base_dim,
            fiber_dims,
            quotient: false,
            names: VariableNames::graded(),
        })
    }

    pub fn with_names(mut self, names: VariableNames) -> Self {
        self.names = names;
        self
    }

    pub fn with_quotient(mut self, quotient: bool) -> Result<Self> {
        if quotient && !self.is_delta_type() {
            return Err(Error::InvalidSpec(
                "the multiplicity ideal is defined only for type-Δ algebras".into(),
            ));
        }
        self.quotient = quotient;
        Ok(self)
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn is_delta_type(&self) -> bool {
        matches!(self.grading, Grading::Delta(_))
    }

    pub fn weight_system(&self) -> Option<&WeightSystem> {
        match &self.grading {
            Grading::Delta(sys) => Some(sys),
            Grading::Length(_) => None,
        }
    }

    pub fn label(&self) -> Option<&QuotientLabel> {
        match &self.grading {
            Grading::Length(l) => Some(l),
            Grading::Delta(_) => None,
        }
    }

    /// Rank of the weight lattice: `n` for type `Δ`, 1 for type `L`.
    pub fn rank(&self) -> usize {
        match &self.grading {
            Grading::Delta(sys) => sys.n(),
            Grading::Length(_) => 1,
        }
    }

    pub fn generator_parity(&self) -> Parity {
        match &self.grading {
            Grading::Delta(sys) => sys.generator_parity(),
            Grading::Length(l) => l.beta_parity(),
        }
    }

    pub fn parity_rule(&self) -> ParityRule {
        ParityRule {
            odd_generators: self.generator_parity().is_odd(),
        }
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn is_quotient(&self) -> bool {
        self.quotient
    }

    pub fn names(&self) -> &VariableNames {
        &self.names
    }

    pub fn fiber_dims(&self) -> &BTreeMap<Weight, usize> {
        &self.fiber_dims
    }

    pub fn dim(&self, w: &Weight) -> usize {
        self.fiber_dims.get(w).copied().unwrap_or(0)
    }

    /// Dimension of the length-`k` slot of a type-`L` algebra.
    pub fn dim_at_length(&self, k: usize) -> usize {
        self.dim(&Weight::new(vec![k as u32]))
    }

    pub fn fiber_vars(&self) -> impl Iterator<Item = FiberVar> + '_ {
        self.fiber_dims
            .iter()
            .flat_map(|(w, &d)| (1..=d as u32).map(move |j| FiberVar::new(w.clone(), j)))
    }

    pub fn contains_var(&self, v: &FiberVar) -> bool {
        v.index >= 1 && (v.index as usize) <= self.dim(&v.weight)
    }

    pub fn var_parity(&self, v: &FiberVar) -> Parity {
        v.weight.parity(self.generator_parity())
    }

    /// Lengths carrying at least one fiber coordinate.
    pub fn length_support(&self) -> BTreeSet<usize> {
        self.fiber_dims
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(w, _)| w.length())
            .collect()
    }

    /// Same variables with the same parities, ignoring names and zero-dimensional slots.
    pub fn same_algebra(&self, other: &AlgebraSpec) -> bool {
        let nonzero = |s: &AlgebraSpec| -> Vec<(Weight, usize)> {
            s.fiber_dims
                .iter()
                .filter(|(_, &d)| d > 0)
                .map(|(w, &d)| (w.clone(), d))
                .collect()
        };
        self.is_delta_type() == other.is_delta_type()
            && self.rank() == other.rank()
            && self.generator_parity() == other.generator_parity()
            && self.base_dim == other.base_dim
            && self.quotient == other.quotient
            && nonzero(self) == nonzero(other)
    }

    /// True when `s·t^δ_j = t^{s·δ}_j` defines an action of `S_n`: type `Δ`
    /// with dimensions constant along every orbit.
    pub fn is_symmetric(&self) -> bool {
        self.check_symmetric().is_ok()
    }

    pub fn check_symmetric(&self) -> Result<()> {
        let sys = self.weight_system().ok_or_else(|| {
            Error::ActionUndefined("type-L algebras carry no symmetric group action".into())
        })?;
        for s in Permutation::adjacent_transpositions(sys.n()) {
            for (w, &d) in &self.fiber_dims {
                let sw = s.act(w)?;
                if self.dim(&sw) != d {
                    return Err(Error::ActionUndefined(format!(
                        "dim at {w} is {d} but dim at {sw} is {}",
                        self.dim(&sw)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Text label of a weight in this grading: `a1+a2` or the length `2`.
    pub fn weight_label(&self, w: &Weight) -> String {
        match self.grading {
            Grading::Delta(_) => w.to_string(),
            Grading::Length(_) => w.length().to_string(),
        }
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::zero(self.rank())
    }
}
