//! Finite formal atlases: charts, transition morphisms and cocycle triples.
//!
//! `transition(i, j)` is the change of coordinates from chart `i` to chart
//! `j`, a morphism with source chart `i` and target chart `j` (its pullback
//! takes functions on chart `j` to chart `i`). The cocycle on `(i, j, k)` is
//! the loop `i -> k -> j -> i`, which must be the identity of chart `i`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgebraSpec, Polynomial};
use crate::covering::{lift_graded_morphism, CoveringData};
use crate::error::{Error, Result};
use crate::invariants::push_down;
use crate::morphism::{GradedMorphism, WeightMap};
use crate::weights::{Permutation, WeightSystem};

#[derive(Clone, Debug)]
pub struct Atlas {
    charts: Vec<Arc<AlgebraSpec>>,
    transitions: BTreeMap<(usize, usize), GradedMorphism>,
    triples: Vec<(usize, usize, usize)>,
    identities: Vec<GradedMorphism>,
}

impl Atlas {
    /// Indices are 0-based.
    pub fn new(
        charts: Vec<Arc<AlgebraSpec>>,
        transitions: impl IntoIterator<Item = ((usize, usize), GradedMorphism)>,
        triples: Vec<(usize, usize, usize)>,
    ) -> Result<Self> {
        if charts.is_empty() {
            return Err(Error::InvalidAtlas("an atlas needs at least one chart".into()));
        }
        let kind = charts[0].is_delta_type();
        if charts.iter().any(|c| c.is_delta_type() != kind) {
            return Err(Error::InvalidAtlas("charts mix type-Δ and type-L algebras".into()));
        }
        let n = charts.len();
        let mut map = BTreeMap::new();
        for ((i, j), t) in transitions {
            if i >= n || j >= n {
                return Err(Error::InvalidAtlas(format!("transition {} -> {} names a missing chart", i + 1, j + 1)));
            }
            if !t.source().same_algebra(&charts[i]) || !t.target().same_algebra(&charts[j]) {
                return Err(Error::InvalidAtlas(format!(
                    "transition {} -> {} does not go from chart {} to chart {}",
                    i + 1,
                    j + 1,
                    i + 1,
                    j + 1
                )));
            }
            if t.weight_map() != WeightMap::Identity {
                return Err(Error::InvalidAtlas("transitions must preserve weights".into()));
            }
            map.insert((i, j), t);
        }
        if let Some(&(i, j, k)) = triples.iter().find(|&&(i, j, k)| i >= n || j >= n || k >= n) {
            return Err(Error::InvalidAtlas(format!("triple ({}, {}, {}) names a missing chart", i + 1, j + 1, k + 1)));
        }
        let identities = charts.iter().map(GradedMorphism::identity).collect();
        Ok(Atlas {
            charts,
            transitions: map,
            triples,
            identities,
        })
    }

    pub fn charts(&self) -> &[Arc<AlgebraSpec>] {
        &self.charts
    }

    pub fn transitions(&self) -> &BTreeMap<(usize, usize), GradedMorphism> {
        &self.transitions
    }

    /// The listed transition; an unlisted `i -> i` is the identity.
    pub fn transition(&self, from: usize, to: usize) -> Option<&GradedMorphism> {
        self.transitions
            .get(&(from, to))
            .or_else(|| (from == to).then(|| self.identities.get(from)).flatten())
    }

    pub fn triples(&self) -> &[(usize, usize, usize)] {
        &self.triples
    }

    pub fn is_delta_type(&self) -> bool {
        self.charts[0].is_delta_type()
    }

    /// Same charts and triples, with transitions replaced by `f(i, j, t)`.
    fn map_transitions(
        &self,
        charts: Vec<Arc<AlgebraSpec>>,
        mut f: impl FnMut(usize, usize, &GradedMorphism) -> Result<GradedMorphism>,
    ) -> Result<Atlas> {
        let transitions = self
            .transitions
            .iter()
            .map(|(&(i, j), t)| Ok(((i, j), f(i, j, t)?)))
            .collect::<Result<Vec<_>>>()?;
        Atlas::new(charts, transitions, self.triples.clone())
    }
}

/// Failed conditions of an atlas check, named with 1-based chart numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AtlasReport {
    pub failures: Vec<String>,
}

impl AtlasReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for AtlasReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.failures {
            writeln!(f, "failed: {x}")?;
        }
        Ok(())
    }
}

fn is_identity(m: &GradedMorphism) -> Result<bool> {
    m.equals(&GradedMorphism::identity(m.source()))
}

/// Identity, inverse-pair and triple conditions.
pub fn check_cocycle(a: &Atlas) -> Result<AtlasReport> {
    let mut failures = Vec::new();
    for (&(i, j), t) in &a.transitions {
        if i == j {
            if !is_identity(t)? {
                failures.push(format!("transition {} -> {} is not the identity", i + 1, i + 1));
            }
            continue;
        }
        if i < j {
            if let Some(back) = a.transition(j, i) {
                if !is_identity(&GradedMorphism::compose(back, t)?)? {
                    failures.push(format!("transitions {} -> {} and {} -> {} are not inverse", i + 1, j + 1, j + 1, i + 1));
                }
            }
        }
    }
    for &(i, j, k) in &a.triples {
        let name = format!("triple ({}, {}, {})", i + 1, j + 1, k + 1);
        let (Some(ik), Some(kj), Some(ji)) = (a.transition(i, k), a.transition(k, j), a.transition(j, i)) else {
            failures.push(format!("{name}: missing transition"));
            continue;
        };
        let loop_ = GradedMorphism::compose(ji, &GradedMorphism::compose(kj, ik)?)?;
        if !is_identity(&loop_)? {
            let bad = loop_.differing_coordinates(&GradedMorphism::identity(loop_.source()));
            failures.push(format!("{name}: cocycle fails on {}", bad.join(", ")));
        }
    }
    Ok(AtlasReport { failures })
}

/// A type-Δ atlas over a type-L atlas, with one projection per chart.
#[derive(Clone, Debug)]
pub struct CoveredAtlas {
    pub total: Atlas,
    pub base: Atlas,
    pub coverings: Vec<CoveringData>,
}

/// Checks `p_j ∘ Ψ = ψ ∘ p_i` for every transition.
fn check_projections(c: &CoveredAtlas) -> Result<AtlasReport> {
    let mut failures = Vec::new();
    for (&(i, j), big) in c.total.transitions() {
        let small = c
            .base
            .transition(i, j)
            .ok_or_else(|| Error::InvalidAtlas(format!("no base transition {} -> {}", i + 1, j + 1)))?;
        let up = GradedMorphism::compose(&c.coverings[j].projection, big)?;
        let down = GradedMorphism::compose(small, &c.coverings[i].projection)?;
        if !up.equals(&down)? {
            failures.push(format!("projections do not commute with transition {} -> {}", i + 1, j + 1));
        }
    }
    Ok(AtlasReport { failures })
}

/// Covers every chart and lifts every transition.
pub fn cover_atlas(a: &Atlas, delta: &WeightSystem) -> Result<CoveredAtlas> {
    if a.is_delta_type() {
        return Err(Error::InvalidAtlas("cover_atlas expects type-L charts".into()));
    }
    let report = check_cocycle(a)?;
    if !report.is_ok() {
        return Err(Error::InvalidAtlas(report.failures.join("; ")));
    }
    let coverings = a
        .charts
        .iter()
        .map(|c| CoveringData::build(c, delta))
        .collect::<Result<Vec<_>>>()?;
    let charts = coverings.iter().map(|c| c.total.clone()).collect();
    let total = a.map_transitions(charts, |i, j, t| lift_graded_morphism(t, &coverings[i], &coverings[j]))?;
    let covered = CoveredAtlas {
        total,
        base: a.clone(),
        coverings,
    };
    let mut failures = check_cocycle(&covered.total)?.failures;
    failures.extend(check_projections(&covered)?.failures);
    if !failures.is_empty() {
        return Err(Error::InvalidAtlas(format!("lifted atlas: {}", failures.join("; "))));
    }
    Ok(covered)
}

/// Transitions that fail `s ∘ Φ* = Φ* ∘ s` for an adjacent transposition `s`.
pub fn check_symmetric(a: &Atlas) -> Result<AtlasReport> {
    for c in &a.charts {
        c.check_symmetric()?;
    }
    let mut failures = Vec::new();
    for (&(i, j), t) in &a.transitions {
        if let Some(s) = first_breaking_transposition(t)? {
            failures.push(format!("transition {} -> {} does not commute with {s}", i + 1, j + 1));
        }
    }
    Ok(AtlasReport { failures })
}

/// An adjacent transposition `s` with `s ∘ Φ* ≠ Φ* ∘ s`, if any.
pub fn first_breaking_transposition(t: &GradedMorphism) -> Result<Option<Permutation>> {
    let target = t.target();
    for s in Permutation::adjacent_transpositions(target.rank()) {
        for v in target.fiber_vars() {
            let sv = Polynomial::fiber_var(target, v.clone())?.act(&s)?;
            let lhs = t.pullback(&sv)?;
            let rhs = t.fiber_images()[&v].act(&s)?;
            if lhs != rhs {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// Descends a symmetric type-Δ atlas to the type-L atlas it covers.
pub fn descend(a: &Atlas) -> Result<CoveredAtlas> {
    if !a.is_delta_type() {
        return Err(Error::InvalidAtlas("descend expects type-Δ charts".into()));
    }
    let report = check_symmetric(a)?;
    if !report.is_ok() {
        return Err(Error::InvalidAtlas(report.failures.join("; ")));
    }
    let coverings = a
        .charts
        .iter()
        .map(CoveringData::from_symmetric)
        .collect::<Result<Vec<_>>>()?;
    let charts = coverings.iter().map(|c| c.base.clone()).collect();
    let base = a.map_transitions(charts, |i, j, t| descend_transition(t, &coverings[i], &coverings[j]))?;
    let covered = CoveredAtlas {
        total: a.clone(),
        base,
        coverings,
    };
    let mut failures = check_cocycle(&covered.base)?.failures;
    failures.extend(check_projections(&covered)?.failures);
    if !failures.is_empty() {
        return Err(Error::InvalidAtlas(format!("descended atlas: {}", failures.join("; "))));
    }
    Ok(covered)
}

/// The graded `φ: U_i -> U_j` whose multiplicity-free lift is the symmetric `Φ: V_i -> V_j`.
pub fn descend_transition(big: &GradedMorphism, from: &CoveringData, to: &CoveringData) -> Result<GradedMorphism> {
    let base = big
        .base_images()
        .iter()
        .map(|p| push_down(p, from))
        .collect::<Result<Vec<_>>>()?;
    let fiber = to
        .base
        .fiber_vars()
        .map(|v| {
            let up = big.pullback(&to.projection.fiber_images()[&v])?;
            Ok((v, push_down(&up, from)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let small = GradedMorphism::new(&from.base, &to.base, base, fiber, WeightMap::Identity)?;
    let relifted = lift_graded_morphism(&small, from, to)?;
    if !relifted.equals(big)? {
        return Err(Error::NoLift("descended transition does not lift back to the original".into()));
    }
    Ok(small)
}

/// Two symmetric atlases are equivalent when their union, with the given
/// cross transitions (chart `i` of `a` to chart `j` of `b` and back), is
/// still symmetric and satisfies the cocycle conditions.
pub fn are_equivalent(
    a: &Atlas,
    b: &Atlas,
    cross: impl IntoIterator<Item = ((usize, usize), GradedMorphism)>,
    back: impl IntoIterator<Item = ((usize, usize), GradedMorphism)>,
) -> Result<AtlasReport> {
    let offset = a.charts.len();
    let charts: Vec<_> = a.charts.iter().chain(&b.charts).cloned().collect();
    let mut transitions: Vec<((usize, usize), GradedMorphism)> = a.transitions.iter().map(|(&k, t)| (k, t.clone())).collect();
    transitions.extend(b.transitions.iter().map(|(&(i, j), t)| ((i + offset, j + offset), t.clone())));
    transitions.extend(cross.into_iter().map(|((i, j), t)| ((i, j + offset), t)));
    transitions.extend(back.into_iter().map(|((j, i), t)| ((j + offset, i), t)));
    let union = Atlas::new(charts, transitions, Vec::new())?;
    let mut failures = check_symmetric(&union)?.failures;
    failures.extend(check_cocycle(&union)?.failures);
    Ok(AtlasReport { failures })
}

/// Chartwise lift of `φ_i: U_i -> U'_i` between covered atlases with the same chart indices.
pub fn lift_atlas_morphism(
    maps: &[GradedMorphism],
    source: &CoveredAtlas,
    target: &CoveredAtlas,
) -> Result<Vec<GradedMorphism>> {
    let n = source.base.charts.len();
    if maps.len() != n || target.base.charts.len() != n {
        return Err(Error::InvalidAtlas("chartwise morphism needs one map per chart".into()));
    }
    for (&(i, j), t) in source.base.transitions() {
        let Some(t2) = target.base.transition(i, j) else { continue };
        let left = GradedMorphism::compose(&maps[j], t)?;
        let right = GradedMorphism::compose(t2, &maps[i])?;
        if !left.equals(&right)? {
            return Err(Error::InvalidAtlas(format!(
                "chart maps are incompatible with transition {} -> {}",
                i + 1,
                j + 1
            )));
        }
    }
    let lifted = maps
        .iter()
        .enumerate()
        .map(|(i, m)| lift_graded_morphism(m, &source.coverings[i], &target.coverings[i]))
        .collect::<Result<Vec<_>>>()?;
    for (&(i, j), t) in source.total.transitions() {
        let Some(t2) = target.total.transition(i, j) else { continue };
        let left = GradedMorphism::compose(&lifted[j], t)?;
        let right = GradedMorphism::compose(t2, &lifted[i])?;
        if !left.equals(&right)? {
            return Err(Error::InvalidAtlas(format!(
                "lifted chart maps are incompatible with transition {} -> {}",
                i + 1,
                j + 1
            )));
        }
    }
    Ok(lifted)
}
