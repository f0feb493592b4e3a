//! Morphisms of graded domains, stored as pullbacks of coordinates.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgebraSpec, BaseCoefficient, FiberMonomial, FiberVar, Polynomial};
use crate::error::{Error, Result};
use crate::weights::Weight;

/// How the weight of a target coordinate determines the weight of its image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightMap {
    /// Images have the same weight (type Δ to type Δ, or type L to type L).
    Identity,
    /// A type-Δ source and type-L target: the image of `xi^k` has length `k`.
    Length,
}

impl WeightMap {
    fn then(self, other: WeightMap) -> Result<WeightMap> {
        match (self, other) {
            (WeightMap::Identity, w) | (w, WeightMap::Identity) => Ok(w),
            (WeightMap::Length, WeightMap::Length) => Err(Error::SpecMismatch(
                "two length maps cannot be composed".into(),
            )),
        }
    }
}

/// A morphism `source -> target` of graded domains, i.e. an algebra map
/// `O_target -> O_source` given on coordinates.
#[derive(Clone, Debug)]
pub struct GradedMorphism {
    source: Arc<AlgebraSpec>,
    target: Arc<AlgebraSpec>,
    base_images: Vec<Polynomial>,
    fiber_images: BTreeMap<FiberVar, Polynomial>,
    weight_map: WeightMap,
}

/// Outcome of [`GradedMorphism::check_weights`]; empty `problems` means the images are graded.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightCheck {
    pub problems: Vec<String>,
}

impl WeightCheck {
    pub fn is_ok(&self) -> bool {
        self.problems.is_empty()
    }
}

impl fmt::Display for WeightCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("graded: yes");
        }
        writeln!(f, "graded: no")?;
        for p in &self.problems {
            writeln!(f, "  {p}")?;
        }
        Ok(())
    }
}

impl GradedMorphism {
    /// Builds and validates a morphism. Fiber coordinates missing from
    /// `fiber_images` are sent to zero.
    pub fn new(
        source: &Arc<AlgebraSpec>,
        target: &Arc<AlgebraSpec>,
        base_images: Vec<Polynomial>,
        fiber_images: impl IntoIterator<Item = (FiberVar, Polynomial)>,
        weight_map: WeightMap,
    ) -> Result<Self> {
        let phi = Self::new_unchecked(source, target, base_images, fiber_images, weight_map)?;
        let report = phi.check_weights();
        if !report.is_ok() {
            return Err(Error::InvalidMorphism(report.problems.join("; ")));
        }
        Ok(phi)
    }

    /// Like [`GradedMorphism::new`] but only checks shapes, not gradings.
    /// Useful for building deliberately broken morphisms to diagnose.
    pub fn new_unchecked(
        source: &Arc<AlgebraSpec>,
        target: &Arc<AlgebraSpec>,
        base_images: Vec<Polynomial>,
        fiber_images: impl IntoIterator<Item = (FiberVar, Polynomial)>,
        weight_map: WeightMap,
    ) -> Result<Self> {
        match weight_map {
            WeightMap::Identity if source.is_delta_type() != target.is_delta_type() || source.rank() != target.rank() => {
                return Err(Error::SpecMismatch(
                    "identity weight map needs gradings of the same kind and rank".into(),
                ))
            }
            WeightMap::Length if !source.is_delta_type() || target.is_delta_type() => {
                return Err(Error::SpecMismatch(
                    "length weight map goes from a type-Δ source to a type-L target".into(),
                ))
            }
            _ => {}
        }
        if source.generator_parity() != target.generator_parity() {
            return Err(Error::SpecMismatch("generator parities differ".into()));
        }
        if base_images.len() != target.base_dim() {
            return Err(Error::DimensionMismatch {
                expected: target.base_dim(),
                found: base_images.len(),
            });
        }
        let mut images: BTreeMap<FiberVar, Polynomial> = BTreeMap::new();
        for (v, p) in fiber_images {
            if !target.contains_var(&v) {
                return Err(Error::UnknownVariable(format!(
                    "{}[{},{}] is not a coordinate of the target",
                    target.names().fiber,
                    target.weight_label(&v.weight),
                    v.index
                )));
            }
            images.insert(v, p);
        }
        for p in base_images.iter().chain(images.values()) {
            if !p.spec().same_algebra(source) {
                return Err(Error::SpecMismatch("coordinate image is not over the source".into()));
            }
        }
        for v in target.fiber_vars() {
            images.entry(v).or_insert_with(|| Polynomial::zero(source));
        }
        Ok(GradedMorphism {
            source: source.clone(),
            target: target.clone(),
            base_images,
            fiber_images: images,
            weight_map,
        })
    }

    pub fn identity(spec: &Arc<AlgebraSpec>) -> Self {
        let base = (1..=spec.base_dim())
            .map(|i| Polynomial::base_var(spec, i).expect("in range"))
            .collect();
        let fiber = spec
            .fiber_vars()
            .map(|v| (v.clone(), Polynomial::fiber_var(spec, v).expect("own variable")))
            .collect::<Vec<_>>();
        Self::new_unchecked(spec, spec, base, fiber, WeightMap::Identity).expect("identity is well formed")
    }

    pub fn source(&self) -> &Arc<AlgebraSpec> {
        &self.source
    }

    pub fn target(&self) -> &Arc<AlgebraSpec> {
        &self.target
    }

    pub fn weight_map(&self) -> WeightMap {
        self.weight_map
    }

    pub fn base_images(&self) -> &[Polynomial] {
        &self.base_images
    }

    pub fn fiber_images(&self) -> &BTreeMap<FiberVar, Polynomial> {
        &self.fiber_images
    }

    pub fn fiber_image(&self, v: &FiberVar) -> Option<&Polynomial> {
        self.fiber_images.get(v)
    }

    /// Expected total weight class of the image of a target coordinate of weight `w`.
    fn image_matches(&self, w: &Weight, image_weight: &Weight) -> bool {
        match self.weight_map {
            WeightMap::Identity => image_weight == w,
            WeightMap::Length => image_weight.length() == w.length(),
        }
    }

    /// Checks that base images are weight-zero and each fiber image is
    /// homogeneous of the mapped weight (parity then matches automatically).
    pub fn check_weights(&self) -> WeightCheck {
        let mut problems = Vec::new();
        let tn = self.target.names();
        for (i, p) in self.base_images.iter().enumerate() {
            if !p.is_base_only() {
                problems.push(format!("{}{} has an image of nonzero weight", tn.base, i + 1));
            }
        }
        for (v, p) in &self.fiber_images {
            let bad: Vec<String> = p
                .total_weights()
                .into_iter()
                .filter(|w| !self.image_matches(&v.weight, w))
                .map(|w| self.source.weight_label(&w))
                .collect();
            if !bad.is_empty() {
                problems.push(format!(
                    "{}[{},{}] has image terms of weight {}",
                    tn.fiber,
                    self.target.weight_label(&v.weight),
                    v.index,
                    bad.join(", ")
                ));
            }
        }
        WeightCheck { problems }
    }

    /// Substitutes coordinate images into a function on the target.
    pub fn pullback(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.spec().same_algebra(&self.target) {
            return Err(Error::SpecMismatch("pullback of a function not on the target".into()));
        }
        let mut cache = PowerCache::default();
        let mut acc = Polynomial::zero(&self.source);
        for (m, c) in f.terms() {
            let base = self.pullback_coefficient(c, &mut cache);
            if base.is_zero() {
                continue;
            }
            let fiber = self.pullback_monomial(m, &mut cache);
            acc = &acc + &(&base * &fiber);
        }
        Ok(acc)
    }

    fn pullback_coefficient(&self, c: &BaseCoefficient, cache: &mut PowerCache) -> Polynomial {
        let mut acc = Polynomial::zero(&self.source);
        for (bm, x) in c.terms() {
            let mut term = Polynomial::constant(&self.source, x.clone());
            for (i, &e) in bm.exponents().iter().enumerate() {
                if e > 0 {
                    let p = cache.base(i, e, || self.base_images[i].clone());
                    term = &term * &p;
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    fn pullback_monomial(&self, m: &FiberMonomial, cache: &mut PowerCache) -> Polynomial {
        let mut acc = Polynomial::one(&self.source);
        for (v, e) in m.factors() {
            let p = cache.fiber(v, *e, || self.fiber_images[v].clone());
            acc = &acc * &p;
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// Composition as maps of spaces: `compose(phi2, phi1) = phi2 ∘ phi1`, so
    /// its pullback is `phi1^* ∘ phi2^*`.
    pub fn compose(phi2: &GradedMorphism, phi1: &GradedMorphism) -> Result<GradedMorphism> {
        if !phi1.target.same_algebra(&phi2.source) {
            return Err(Error::SpecMismatch(
                "target of the first morphism is not the source of the second".into(),
            ));
        }
        let weight_map = phi1.weight_map.then(phi2.weight_map)?;
        let base = phi2
            .base_images
            .iter()
            .map(|p| phi1.pullback(p))
            .collect::<Result<Vec<_>>>()?;
        let fiber = phi2
            .fiber_images
            .iter()
            .map(|(v, p)| Ok((v.clone(), phi1.pullback(p)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new_unchecked(&phi1.source, &phi2.target, base, fiber, weight_map)
    }

    /// Coordinate-wise equality of images between morphisms of the same shape.
    pub fn equals(&self, other: &GradedMorphism) -> Result<bool> {
        if !self.source.same_algebra(&other.source) || !self.target.same_algebra(&other.target) {
            return Err(Error::SpecMismatch("morphisms have different source or target".into()));
        }
        if self.base_images != other.base_images {
            return Ok(false);
        }
        let zero = Polynomial::zero(&self.source);
        let keys = self.fiber_images.keys().chain(other.fiber_images.keys());
        for v in keys {
            let a = self.fiber_images.get(v).unwrap_or(&zero);
            let b = other.fiber_images.get(v).unwrap_or(&zero);
            if a != b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Target coordinates whose images differ, for diagnostics.
    pub fn differing_coordinates(&self, other: &GradedMorphism) -> Vec<String> {
        let mut out = Vec::new();
        let tn = self.target.names();
        for (i, (a, b)) in self.base_images.iter().zip(&other.base_images).enumerate() {
            if a != b {
                out.push(format!("{}{}", tn.base, i + 1));
            }
        }
        let zero = Polynomial::zero(&self.source);
        for (v, a) in &self.fiber_images {
            let b = other.fiber_images.get(v).unwrap_or(&zero);
            if a != b {
                out.push(format!("{}[{},{}]", tn.fiber, self.target.weight_label(&v.weight), v.index));
            }
        }
        out
    }

    /// Same images, read over different (but equivalent) source and target specs.
    pub fn transport(&self, source: &Arc<AlgebraSpec>, target: &Arc<AlgebraSpec>) -> Result<GradedMorphism> {
        if !target.same_algebra(&self.target) {
            return Err(Error::SpecMismatch("cannot transport to a different target".into()));
        }
        let base = self
            .base_images
            .iter()
            .map(|p| p.transport(source))
            .collect::<Result<Vec<_>>>()?;
        let fiber = self
            .fiber_images
            .iter()
            .filter(|(v, _)| target.contains_var(v))
            .map(|(v, p)| Ok((v.clone(), p.transport(source)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new_unchecked(source, target, base, fiber, self.weight_map)
    }
}

/// Free function form of [`GradedMorphism::equals`].
pub fn morphisms_equal(a: &GradedMorphism, b: &GradedMorphism) -> Result<bool> {
    a.equals(b)
}

#[derive(Default)]
struct PowerCache {
    base: BTreeMap<(usize, u32), Polynomial>,
    fiber: BTreeMap<(FiberVar, u32), Polynomial>,
}

impl PowerCache {
    fn base(&mut self, i: usize, e: u32, make: impl FnOnce() -> Polynomial) -> Polynomial {
        self.base
            .entry((i, e))
            .or_insert_with(|| make().pow(e))
            .clone()
    }

    fn fiber(&mut self, v: &FiberVar, e: u32, make: impl FnOnce() -> Polynomial) -> Polynomial {
        self.fiber
            .entry((v.clone(), e))
            .or_insert_with(|| make().pow(e))
            .clone()
    }
}
