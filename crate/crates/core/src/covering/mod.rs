//! Multiplicity-free coverings of graded domains and lifts of morphisms.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgebraSpec, FiberVar, Polynomial};
use crate::error::{Error, Result};
use crate::morphism::{GradedMorphism, WeightMap};
use crate::weights::{Weight, WeightSystem};

mod no_vb;

pub use no_vb::{
    verify_no_vb_covering, AnsatzCoefficient, Feasibility, NoVbFixture, NoVbReport, VariantOutcome,
};

/// A graded domain `U` of type `L`, its covering `V` of type `Δ`, and the
/// projection `p: V -> U`.
#[derive(Clone, Debug)]
pub struct CoveringData {
    pub base: Arc<AlgebraSpec>,
    pub total: Arc<AlgebraSpec>,
    pub projection: GradedMorphism,
}

impl CoveringData {
    /// Builds the covering of a type-`L` domain for an `S_n`-invariant `Δ`.
    ///
    /// The generator parity of `Δ` is replaced by the parity of `β` in `U`.
    pub fn build(base: &Arc<AlgebraSpec>, delta: &WeightSystem) -> Result<Self> {
        let label = base
            .label()
            .ok_or_else(|| Error::InvalidSpec("the covered domain must be of type L".into()))?;
        let sys = WeightSystem::new(delta.n(), label.beta_parity(), delta.members().iter().cloned())?;
        let covered = sys.quotient_label()?;
        for k in base.length_support() {
            if !covered.contains(k) {
                return Err(Error::LengthNotInLabel(k));
            }
        }
        let dims: Vec<(usize, usize)> = base.length_support().into_iter().map(|k| (k, base.dim_at_length(k))).collect();
        let total = Arc::new(AlgebraSpec::delta_type_by_length(sys, base.base_dim(), dims, true)?);
        let projection = projection(&total, base)?;
        Ok(CoveringData {
            base: base.clone(),
            total,
            projection,
        })
    }

    /// Views a symmetric multiplicity-free domain `V` as the covering of the
    /// type-`L` domain with `dim U_k = dim V_δ` for any `♯δ = k`.
    pub fn from_symmetric(total: &Arc<AlgebraSpec>) -> Result<Self> {
        total.check_symmetric()?;
        if !total.is_quotient() {
            return Err(Error::InvalidSpec("a covering is a multiplicity-free (quotient) algebra".into()));
        }
        let sys = total.weight_system().expect("symmetric specs are of type Δ");
        let label = sys.quotient_label()?;
        let mut dims: BTreeMap<usize, usize> = BTreeMap::new();
        for (w, &d) in total.fiber_dims() {
            if d > 0 {
                dims.insert(w.length(), d);
            }
        }
        let base = Arc::new(AlgebraSpec::l_type(label, total.base_dim(), dims)?);
        let projection = projection(total, &base)?;
        Ok(CoveringData {
            base,
            total: total.clone(),
            projection,
        })
    }

    pub fn n(&self) -> usize {
        self.total.rank()
    }

    /// Nonzero weights of `Δ` of length `k` carrying coordinates.
    fn weights_of_length(&self, k: usize) -> Vec<Weight> {
        self.total
            .fiber_dims()
            .iter()
            .filter(|(w, &d)| d > 0 && w.length() == k)
            .map(|(w, _)| w.clone())
            .collect()
    }
}

/// `x_i -> y_i`, `xi^k_j -> sum over ♯δ = k of t^δ_j`.
fn projection(total: &Arc<AlgebraSpec>, base: &Arc<AlgebraSpec>) -> Result<GradedMorphism> {
    let base_images = (1..=base.base_dim())
        .map(|i| Polynomial::base_var(total, i))
        .collect::<Result<Vec<_>>>()?;
    let mut fiber = Vec::new();
    for v in base.fiber_vars() {
        let k = v.length();
        let mut image = Polynomial::zero(total);
        for (w, &d) in total.fiber_dims() {
            if w.length() == k && (v.index as usize) <= d {
                image = &image + &Polynomial::fiber_var(total, FiberVar::new(w.clone(), v.index))?;
            }
        }
        fiber.push((v, image));
    }
    GradedMorphism::new(total, base, base_images, fiber, WeightMap::Length)
}

fn check_into_base(psi: &GradedMorphism, cov: &CoveringData) -> Result<()> {
    if psi.weight_map() != WeightMap::Length || !psi.target().same_algebra(&cov.base) {
        return Err(Error::InvalidMorphism(
            "expected a Z-graded morphism into the covered domain".into(),
        ));
    }
    if !psi.source().is_quotient() {
        return Err(Error::InvalidSpec("the source must be multiplicity-free (a quotient algebra)".into()));
    }
    if psi.source().rank() != cov.n() {
        return Err(Error::DimensionMismatch {
            expected: cov.n(),
            found: psi.source().rank(),
        });
    }
    let report = psi.check_weights();
    if !report.is_ok() {
        return Err(Error::InvalidMorphism(report.problems.join("; ")));
    }
    Ok(())
}

/// The unique weight-preserving `Ψ: M -> V` with `p ∘ Ψ = ψ`:
/// `Ψ*(t^δ_j)` is the weight-`δ` component of `ψ*(xi^{♯δ}_j)`.
pub fn lift(psi: &GradedMorphism, cov: &CoveringData) -> Result<GradedMorphism> {
    check_into_base(psi, cov)?;
    let source = psi.source();
    let mut fiber = Vec::new();
    for v in cov.total.fiber_vars() {
        let k = v.length();
        let xi = FiberVar::new(Weight::new(vec![k as u32]), v.index);
        let image = psi
            .fiber_image(&xi)
            .ok_or_else(|| Error::NoLift(format!("no coordinate of length {k} and index {}", v.index)))?;
        fiber.push((v.clone(), image.homogeneous_component(&v.weight)));
    }
    for xi in cov.base.fiber_vars() {
        let image = &psi.fiber_images()[&xi];
        let covered: Vec<Weight> = cov.weights_of_length(xi.length());
        let missing: Vec<String> = image
            .total_weights()
            .into_iter()
            .filter(|w| !covered.contains(w))
            .map(|w| w.to_string())
            .collect();
        if !missing.is_empty() {
            return Err(Error::NoLift(format!(
                "image of a length-{} coordinate has weight {} outside Δ",
                xi.length(),
                missing.join(", ")
            )));
        }
    }
    GradedMorphism::new(source, &cov.total, psi.base_images().to_vec(), fiber, WeightMap::Identity)
}

/// The multiplicity-free lift `Φ: V -> V'` of `φ: U -> U'`, i.e. the lift of `φ ∘ p`.
pub fn lift_graded_morphism(phi: &GradedMorphism, cov: &CoveringData, cov2: &CoveringData) -> Result<GradedMorphism> {
    if phi.weight_map() != WeightMap::Identity || phi.source().is_delta_type() || phi.target().is_delta_type() {
        return Err(Error::InvalidMorphism("expected a morphism of type-L domains".into()));
    }
    let psi = GradedMorphism::compose(phi, &cov.projection)?;
    lift(&psi, cov2)
}

/// Outcome of checking the universal property for one `ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalReport {
    pub commutes: bool,
    pub unique: bool,
    pub weight_preserving: bool,
    pub notes: Vec<String>,
}

impl UniversalReport {
    pub fn holds(&self) -> bool {
        self.commutes && self.unique && self.weight_preserving
    }
}

impl fmt::Display for UniversalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "commutes: {}", yn(self.commutes))?;
        writeln!(f, "unique: {}", yn(self.unique))?;
        writeln!(f, "weight-preserving: {}", yn(self.weight_preserving))?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// Computes the lift of `ψ` and checks it.
pub fn verify_universal(psi: &GradedMorphism, cov: &CoveringData) -> Result<UniversalReport> {
    let lifted = lift(psi, cov)?;
    verify_candidate(psi, cov, &lifted)
}

/// Checks a proposed lift `Ψ'` of `ψ`.
///
/// Commutation is tested coordinate-wise. Uniqueness is the component-matching
/// argument: the weights `δ` with `♯δ = k` are distinct, so the decomposition
/// `ψ*(xi^k_j) = Σ Ψ'*(t^δ_j)` into weight-homogeneous pieces is unique and
/// `Ψ'` must agree with the component extraction.
pub fn verify_candidate(psi: &GradedMorphism, cov: &CoveringData, candidate: &GradedMorphism) -> Result<UniversalReport> {
    check_into_base(psi, cov)?;
    if !candidate.target().same_algebra(&cov.total) || !candidate.source().same_algebra(psi.source()) {
        return Err(Error::SpecMismatch("candidate is not a morphism from the source into the covering".into()));
    }
    let mut notes = Vec::new();
    let weight_check = candidate.check_weights();
    let weight_preserving = candidate.weight_map() == WeightMap::Identity && weight_check.is_ok();
    notes.extend(weight_check.problems);

    let triangle = GradedMorphism::compose(&cov.projection, candidate)?;
    let bad = triangle.differing_coordinates(psi);
    let commutes = bad.is_empty();
    if !commutes {
        notes.push(format!("triangle fails on {}", bad.join(", ")));
    }

    // component matching: each candidate image must be the δ-component of the sum it belongs to
    let mut unique = true;
    for xi in cov.base.fiber_vars() {
        let weights = cov.weights_of_length(xi.length());
        let distinct = weights.iter().collect::<std::collections::BTreeSet<_>>().len() == weights.len();
        let target = &psi.fiber_images()[&xi];
        let mut reassembled = Polynomial::zero(psi.source());
        for w in &weights {
            let t = FiberVar::new(w.clone(), xi.index);
            reassembled = &reassembled + &target.homogeneous_component(w);
            let forced = target.homogeneous_component(w);
            let given = candidate.fiber_image(&t).cloned().unwrap_or_else(|| Polynomial::zero(psi.source()));
            if given != forced {
                unique = false;
                notes.push(format!("t[{w},{}] differs from the forced component", xi.index));
            }
        }
        if !distinct || reassembled != *target {
            unique = false;
            notes.push(format!(
                "image of xi[{},{}] is not a sum of Δ-components",
                xi.length(),
                xi.index
            ));
        }
    }
    for (i, (a, b)) in candidate.base_images().iter().zip(psi.base_images()).enumerate() {
        if a != b {
            unique = false;
            notes.push(format!("base coordinate {} is not forced to its image", i + 1));
        }
    }
    Ok(UniversalReport {
        commutes,
        unique: unique && commutes,
        weight_preserving,
        notes,
    })
}
