//! Seeded random generators shared by the integration tests.
#![allow(dead_code)]

pub mod golden;

use std::sync::Arc;

use mfcover::algebra::basis::{monomials_of_length, monomials_of_weight};
use mfcover::algebra::{AlgebraSpec, BaseCoefficient, BaseMonomial, FiberMonomial, Polynomial, Scalar};
use mfcover::covering::CoveringData;
use mfcover::morphism::{GradedMorphism, WeightMap};
use mfcover::weights::{Parity, Permutation, QuotientLabel, Weight, WeightSystem};
use num::{BigInt, BigRational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Nonzero small rational: an integer in [-3, 3] or a half-integer.
pub fn scalar(r: &mut TestRng) -> Scalar {
    let mut n = r.gen_range(-3i64..=3);
    if n == 0 {
        n = 1;
    }
    if r.gen_bool(0.2) {
        BigRational::new(BigInt::from(n), BigInt::from(2))
    } else {
        q(n)
    }
}

/// `c0 + c1 * y_i` with `c0` nonzero.
pub fn base_coef(r: &mut TestRng, nvars: usize) -> BaseCoefficient {
    let mut out = BaseCoefficient::constant(nvars, scalar(r));
    if nvars > 0 && r.gen_bool(0.3) {
        let i = r.gen_range(0..nvars);
        out.add_term(BaseMonomial::var(nvars, i), scalar(r));
    }
    out
}

/// A random combination of up to `max_terms` of the given monomials.
pub fn combination(r: &mut TestRng, spec: &Arc<AlgebraSpec>, monos: &[FiberMonomial], max_terms: usize) -> Polynomial {
    let mut out = Polynomial::zero(spec);
    if monos.is_empty() {
        return out;
    }
    for _ in 0..r.gen_range(1..=max_terms.max(1)) {
        let m = monos.choose(r).unwrap().clone();
        out = &out + &Polynomial::from_monomial(spec, m, base_coef(r, spec.base_dim()));
    }
    out
}

/// Random polynomial of total length at most `max_len`.
pub fn poly(r: &mut TestRng, spec: &Arc<AlgebraSpec>, max_len: usize) -> Polynomial {
    let mut out = Polynomial::zero(spec);
    for k in 0..=max_len {
        let monos = monomials_of_length(spec, k);
        out = &out + &combination(r, spec, &monos, 2);
    }
    out
}

pub fn parity(r: &mut TestRng) -> Parity {
    Parity::from_bit(r.gen_bool(0.5))
}

/// A nonempty random set of positive lengths up to `n`.
pub fn lengths(r: &mut TestRng, n: usize) -> Vec<usize> {
    loop {
        let ls: Vec<usize> = (1..=n).filter(|_| r.gen_bool(0.6)).collect();
        if !ls.is_empty() {
            return ls;
        }
    }
}

/// Type-L domain with the given positive lengths and dims in `1..=max_dim`.
pub fn l_spec(r: &mut TestRng, lens: &[usize], parity: Parity, base: usize, max_dim: usize) -> Arc<AlgebraSpec> {
    let label = QuotientLabel::new(std::iter::once(0).chain(lens.iter().copied()), parity);
    let dims: Vec<(usize, usize)> = lens.iter().map(|&k| (k, r.gen_range(1..=max_dim))).collect();
    Arc::new(AlgebraSpec::l_type(label, base, dims).unwrap())
}

/// Random covering: `n` in `n_range`, random lengths, dims up to `max_dim`.
pub fn covering(r: &mut TestRng, n_range: std::ops::RangeInclusive<usize>, max_dim: usize) -> CoveringData {
    let n = r.gen_range(n_range);
    let p = parity(r);
    let lens = lengths(r, n);
    let u = l_spec(r, &lens, p, 1, max_dim);
    let delta = WeightSystem::with_lengths(n, p, std::iter::once(0).chain(lens));
    CoveringData::build(&u, &delta).unwrap()
}

/// Type-Δ quotient algebra of rank `n` on a random `Δ` (not necessarily symmetric).
pub fn delta_spec(r: &mut TestRng, n: usize, parity: Parity, max_dim: usize) -> Arc<AlgebraSpec> {
    let all = WeightSystem::full(n, parity);
    let members: Vec<Weight> = all.members().iter().filter(|w| w.is_zero() || r.gen_bool(0.6)).cloned().collect();
    let sys = WeightSystem::new(n, parity, members).unwrap();
    let dims: Vec<(Weight, usize)> = sys.nonzero().map(|w| (w.clone(), r.gen_range(0..=max_dim))).collect();
    Arc::new(AlgebraSpec::delta_type(sys, 1, dims, true).unwrap())
}

/// `ψ: M -> U` with a length weight map.
pub fn psi(r: &mut TestRng, m: &Arc<AlgebraSpec>, u: &Arc<AlgebraSpec>) -> GradedMorphism {
    let base = (0..u.base_dim()).map(|_| base_only(r, m)).collect();
    let fiber = u
        .fiber_vars()
        .map(|v| {
            let monos = monomials_of_length(m, v.length());
            let img = combination(r, m, &monos, 3);
            (v, img)
        })
        .collect::<Vec<_>>();
    GradedMorphism::new(m, u, base, fiber, WeightMap::Length).unwrap()
}

/// Weight-preserving morphism between algebras of the same grading kind.
pub fn graded(r: &mut TestRng, source: &Arc<AlgebraSpec>, target: &Arc<AlgebraSpec>) -> GradedMorphism {
    let base = (0..target.base_dim()).map(|_| base_only(r, source)).collect();
    let fiber = target
        .fiber_vars()
        .map(|v| {
            let monos = monomials_of_weight(source, &v.weight);
            let img = combination(r, source, &monos, 3);
            (v, img)
        })
        .collect::<Vec<_>>();
    GradedMorphism::new(source, target, base, fiber, WeightMap::Identity).unwrap()
}

/// `c + d * y_i`: an affine base function.
pub fn base_only(r: &mut TestRng, spec: &Arc<AlgebraSpec>) -> Polynomial {
    Polynomial::from_monomial(spec, FiberMonomial::one(), base_coef(r, spec.base_dim()))
}

pub fn permutation(r: &mut TestRng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(r);
    Permutation::new(images).unwrap()
}

/// Symmetric type-Δ quotient algebra of rank `n` with dims constant on lengths.
pub fn symmetric_spec(r: &mut TestRng, n: usize, parity: Parity, max_dim: usize) -> Arc<AlgebraSpec> {
    let lens = lengths(r, n);
    let sys = WeightSystem::with_lengths(n, parity, std::iter::once(0).chain(lens.iter().copied()));
    let dims: Vec<(usize, usize)> = lens.iter().map(|&k| (k, r.gen_range(1..=max_dim))).collect();
    Arc::new(AlgebraSpec::delta_type_by_length(sys, 1, dims, true).unwrap())
}

/// A random document with specs, polynomials, morphisms and an atlas, all in
/// canonical form. Returns the document and the number of objects in it.
pub fn document(r: &mut TestRng) -> (mfcover::text::Document, usize) {
    use mfcover::atlas::Atlas;
    use mfcover::text::{Document, Item};

    let n = r.gen_range(1..=3);
    let p = parity(r);
    let lens = lengths(r, n);
    let base = r.gen_range(0..=2);
    let mut u_spec = (*l_spec(r, &lens, p, base, 2)).clone();
    let mut v_spec = (*delta_spec(r, n, p, 2)).clone();
    if r.gen_bool(0.3) {
        u_spec = u_spec.with_names(mfcover::algebra::VariableNames::new("u", "zeta"));
    }
    if r.gen_bool(0.3) {
        v_spec = v_spec.with_names(mfcover::algebra::VariableNames::new("z", "s"));
    }
    if r.gen_bool(0.3) {
        v_spec = v_spec.with_quotient(false).unwrap();
    }
    let u = Arc::new(u_spec);
    let v = Arc::new(v_spec);
    let mut doc = Document::default();
    if r.gen_bool(0.5) {
        doc.weight_system = v.weight_system().cloned();
    }
    let spec = |name: &str, s: &Arc<AlgebraSpec>| Item::Spec { name: name.into(), spec: s.clone() };
    doc.items.push(spec("U", &u));
    doc.items.push(spec("V", &v));
    doc.items.push(Item::Poly { name: "f".into(), spec: "U".into(), poly: poly(r, &u, 3) });
    doc.items.push(Item::Poly { name: "g".into(), spec: "V".into(), poly: poly(r, &v, 3) });
    let m = |name: &str, s: &str, t: &str, morphism: GradedMorphism| Item::Morphism {
        name: name.into(),
        source: s.into(),
        target: t.into(),
        morphism,
    };
    doc.items.push(m("phi", "U", "U", graded(r, &u, &u)));
    doc.items.push(m("psi", "V", "U", psi(r, &v, &u)));
    doc.items.push(m("chi", "V", "V", graded(r, &v, &v)));
    let atlas = Atlas::new(
        vec![u.clone(), u.clone()],
        [((0, 1), graded(r, &u, &u)), ((1, 0), graded(r, &u, &u))],
        vec![(0, 1, 0)],
    )
    .unwrap();
    doc.items.push(Item::Atlas { name: "A".into(), charts: vec!["U".into(), "U".into()], atlas });
    let count = doc.items.len() + usize::from(doc.weight_system.is_some());
    (doc, count)
}

/// Prints, re-parses and compares; returns a description of any difference.
pub fn round_trip(doc: &mfcover::text::Document) -> Result<(), String> {
    use mfcover::text::{parse_document, print_document, Item};

    let printed = print_document(doc);
    let again = parse_document(&printed).map_err(|e| format!("{e}\n{printed}"))?;
    let reprinted = print_document(&again);
    if reprinted != printed {
        return Err(format!("reprint differs:\n{printed}\n---\n{reprinted}"));
    }
    if doc.weight_system != again.weight_system || doc.items.len() != again.items.len() {
        return Err("structure differs".into());
    }
    for (a, b) in doc.items.iter().zip(&again.items) {
        let same = match (a, b) {
            (Item::Spec { spec: x, .. }, Item::Spec { spec: y, .. }) => x == y || (x.same_algebra(y) && x.names() == y.names()),
            (Item::Poly { poly: x, .. }, Item::Poly { poly: y, .. }) => x == y,
            (Item::Morphism { morphism: x, .. }, Item::Morphism { morphism: y, .. }) => x.equals(y).unwrap_or(false),
            (Item::Atlas { atlas: x, .. }, Item::Atlas { atlas: y, .. }) => {
                x.triples() == y.triples()
                    && x.transitions().len() == y.transitions().len()
                    && x.transitions().iter().all(|(k, t)| y.transition(k.0, k.1).is_some_and(|u| t.equals(u).unwrap_or(false)))
            }
            _ => false,
        };
        if !same {
            return Err(format!("object differs after round trip:\n{printed}"));
        }
    }
    Ok(())
}
