//! Enumeration of fiber monomials by length or by weight.

use super::monomial::FiberMonomial;
use super::spec::{AlgebraSpec, FiberVar};
use crate::weights::Weight;

type Factors = [(FiberVar, u32)];

/// All canonical monomials of total length `k` (weight-zero coefficients
/// implied). In a quotient algebra only multiplicity-free ones are listed.
pub fn monomials_of_length(spec: &AlgebraSpec, k: usize) -> Vec<FiberMonomial> {
    let vars: Vec<FiberVar> = spec.fiber_vars().filter(|v| v.length() > 0).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let rank = spec.rank();
    walk(spec, &vars, 0, k, &mut chosen, &mut |factors| {
        let (_, m) = FiberMonomial::from_ordered(factors.iter().cloned(), spec.parity_rule())
            .expect("enumerated factors are canonical");
        if !spec.is_quotient() || m.is_multiplicity_free(rank) {
            out.push(m);
        }
    });
    out.sort();
    out
}

/// All canonical monomials of total weight `w`.
pub fn monomials_of_weight(spec: &AlgebraSpec, w: &Weight) -> Vec<FiberMonomial> {
    let rank = spec.rank();
    monomials_of_length(spec, w.length())
        .into_iter()
        .filter(|m| &m.total_weight(rank) == w)
        .collect()
}

fn walk(
    spec: &AlgebraSpec,
    vars: &[FiberVar],
    at: usize,
    remaining: usize,
    chosen: &mut Vec<(FiberVar, u32)>,
    emit: &mut dyn FnMut(&Factors),
) {
    if remaining == 0 {
        emit(chosen);
        return;
    }
    if at == vars.len() {
        return;
    }
    let v = &vars[at];
    let len = v.length();
    let max_e = if spec.parity_rule().is_odd(&v.weight) {
        1
    } else {
        remaining / len
    };
    let max_e = max_e.min(remaining / len);
    for e in (0..=max_e).rev() {
        if e > 0 {
            chosen.push((v.clone(), e as u32));
        }
        walk(spec, vars, at + 1, remaining - e * len, chosen, emit);
        if e > 0 {
            chosen.pop();
        }
    }
}
