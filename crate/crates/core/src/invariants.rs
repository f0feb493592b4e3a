//! `S_n`-invariant multiplicity-free polynomials: orbit sums, primitive
//! representatives, unique decomposition and the inverse of `p*`.

use std::sync::Arc;

use num::Zero;

use crate::algebra::{AlgebraSpec, BaseCoefficient, FiberMonomial, FiberVar, Polynomial, Scalar};
use crate::covering::CoveringData;
use crate::error::{Error, Result};
use crate::weights::{Permutation, Weight};

/// `Σ_{s ∈ S_n} s·F`.
pub fn symmetrize(f: &Polynomial) -> Result<Polynomial> {
    f.spec().check_symmetric()?;
    let n = f.spec().rank();
    let mut acc = Polynomial::zero(f.spec());
    for s in Permutation::all(n) {
        acc = &acc + &f.act_unchecked(&s);
    }
    Ok(acc)
}

pub fn is_invariant(f: &Polynomial) -> Result<bool> {
    f.is_invariant()
}

/// Weights of the factors tile `a1 + .. + ak` by consecutive blocks of
/// non-decreasing length, with indices non-decreasing among equal lengths.
pub fn is_primitive(t: &FiberMonomial) -> bool {
    let mut next = 0usize;
    let mut prev: Option<(usize, u32)> = None;
    for (v, e) in t.factors() {
        if *e != 1 {
            return false;
        }
        let len = v.length();
        let exps = v.weight.exponents();
        if len == 0 || next + len > exps.len() {
            return false;
        }
        if Weight::block(exps.len(), next, len) != v.weight {
            return false;
        }
        if let Some((pl, pi)) = prev {
            if len < pl || (len == pl && v.index < pi) {
                return false;
            }
        }
        prev = Some((len, v.index));
        next += len;
    }
    true
}

/// A primitive monomial `T'` with `s·P = ±T'` for the ordered product `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Primitivized {
    pub negative: bool,
    pub monomial: FiberMonomial,
    pub permutation: Permutation,
}

impl Primitivized {
    pub fn sign(&self) -> i32 {
        if self.negative {
            -1
        } else {
            1
        }
    }
}

/// Brings the ordered product of `factors` to primitive form.
///
/// Factors are sorted by (length, index); the permutation sends the support
/// of the i-th sorted factor onto the i-th consecutive block and the unused
/// generators, in increasing order, onto the tail. Then
/// `symmetrize(P) = sign · symmetrize(T')`.
pub fn primitivize(spec: &AlgebraSpec, factors: &[FiberVar]) -> Result<Primitivized> {
    let n = spec.rank();
    let mut total = Weight::zero(n);
    for v in factors {
        total = &total + &v.weight;
    }
    if !total.is_multiplicity_free() {
        return Err(Error::NotMultiplicityFree(total.to_string()));
    }
    let mut order: Vec<usize> = (0..factors.len()).collect();
    order.sort_by_key(|&i| (factors[i].length(), factors[i].index));
    let mut images = vec![usize::MAX; n];
    let mut next = 0;
    for &i in &order {
        for g in factors[i].weight.support() {
            images[g] = next;
            next += 1;
        }
    }
    for img in images.iter_mut().filter(|x| **x == usize::MAX) {
        *img = next;
        next += 1;
    }
    let s = Permutation::new(images)?;
    let moved = factors
        .iter()
        .map(|v| Ok((FiberVar::new(s.act(&v.weight)?, v.index), 1)))
        .collect::<Result<Vec<_>>>()?;
    let (negative, monomial) = FiberMonomial::from_ordered(moved, spec.parity_rule())
        .ok_or_else(|| Error::NotMultiplicityFree("repeated odd factor".into()))?;
    debug_assert!(is_primitive(&monomial));
    Ok(Primitivized {
        negative,
        monomial,
        permutation: s,
    })
}

/// Primitivizes a canonical monomial; the sign is relative to that monomial.
pub fn primitivize_monomial(spec: &AlgebraSpec, m: &FiberMonomial) -> Result<Primitivized> {
    let factors: Vec<FiberVar> = m.expanded().cloned().collect();
    primitivize(spec, &factors)
}

/// For a primitive `T`: its orbit sum vanishes iff two odd factors share
/// both length and index.
pub fn orbit_vanishes(spec: &AlgebraSpec, t: &FiberMonomial) -> bool {
    let rule = spec.parity_rule();
    let odd: Vec<(usize, u32)> = t
        .factors()
        .iter()
        .filter(|(v, _)| rule.is_odd(&v.weight))
        .map(|(v, _)| (v.length(), v.index))
        .collect();
    odd.windows(2).any(|w| w[0] == w[1])
}

/// `F = Σ A_j · symmetrize(T_j)` with distinct primitive `T_j` and non-vanishing orbit sums.
pub fn decompose_invariant(f: &Polynomial) -> Result<Vec<(BaseCoefficient, FiberMonomial)>> {
    let spec = f.spec().clone();
    if !f.is_invariant()? {
        return Err(Error::NotInvariant);
    }
    let rank = spec.rank();
    if let Some(m) = f.terms().keys().find(|m| !m.is_multiplicity_free(rank)) {
        return Err(Error::NotMultiplicityFree(m.total_weight(rank).to_string()));
    }
    let mut rest = f.clone();
    let mut out = Vec::new();
    while let Some((m, c)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let p = primitivize_monomial(&spec, &m)?;
        let orbit = symmetrize(&Polynomial::from_monomial(&spec, p.monomial.clone(), BaseCoefficient::one(spec.base_dim())))?;
        let coef = orbit.scalar_coefficient(&m).unwrap_or_else(Scalar::zero);
        if coef.is_zero() {
            // a nonzero invariant cannot meet an orbit whose sum vanishes
            return Err(Error::NotInvariant);
        }
        let a = c.scale(&coef.recip());
        rest = &rest - &orbit.scale_by_base(&a);
        out.push((a, p.monomial));
    }
    Ok(out)
}

/// The graded monomial `xi^{♯γ1}_{i1} ··· xi^{♯γq}_{iq}` matching a primitive `T`, as a polynomial on `U`.
pub fn graded_counterpart(base: &Arc<AlgebraSpec>, t: &FiberMonomial) -> Result<Polynomial> {
    let factors = t
        .expanded()
        .map(|v| FiberVar::new(Weight::new(vec![v.length() as u32]), v.index));
    Polynomial::from_ordered_product(base, BaseCoefficient::one(base.base_dim()), factors)
}

/// The constant `M` with `symmetrize(T) = M · p*(X)` for primitive `T` and its graded counterpart `X`.
pub fn orbit_constant(t: &FiberMonomial, cov: &CoveringData) -> Result<Scalar> {
    let orbit = symmetrize(&Polynomial::from_monomial(&cov.total, t.clone(), BaseCoefficient::one(cov.total.base_dim())))?;
    let x = graded_counterpart(&cov.base, t)?;
    let px = cov.projection.pullback(&x)?;
    let num = orbit.scalar_coefficient(t).unwrap_or_else(Scalar::zero);
    let den = px.scalar_coefficient(t).unwrap_or_else(Scalar::zero);
    if num.is_zero() || den.is_zero() {
        return Err(Error::NotInvariant);
    }
    Ok(num / den)
}

/// The unique `f` on `U` with `p*(f) = F`, for `S_n`-invariant `F` on the covering.
pub fn push_down(f: &Polynomial, cov: &CoveringData) -> Result<Polynomial> {
    if !f.spec().same_algebra(&cov.total) {
        return Err(Error::SpecMismatch("function is not on the covering".into()));
    }
    let mut out = Polynomial::zero(&cov.base);
    for (a, t) in decompose_invariant(f)? {
        let m = orbit_constant(&t, cov)?;
        let x = graded_counterpart(&cov.base, &t)?;
        out = &out + &x.scale_by_base(&a.scale(&m));
    }
    debug_assert_eq!(cov.projection.pullback(&out).ok().as_ref(), Some(f));
    Ok(out)
}
