//! The non-existence of coverings in the category of n-fold vector bundles.
//!
//! A double vector bundle `Q` with a `Z`-graded `q: Q -> N` would have to lift
//! `φ: D -> N`, `φ*(xi^2) = η1 η2`. We write `q*` and `Φ*` with unknown scalar
//! coefficients and decide whether `Φ* ∘ q* = φ*` has a solution.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Zero};

use super::{verify_universal, CoveringData, UniversalReport};
use crate::algebra::{basis, AlgebraSpec, BaseCoefficient, FiberMonomial, FiberVar, Polynomial, Scalar, VariableNames};
use crate::error::Result;
use crate::linalg;
use crate::morphism::{GradedMorphism, WeightMap};
use crate::weights::{Parity, QuotientLabel, Weight, WeightSystem};

/// Parameters of the scenario; [`NoVbFixture::paper`] is the published one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoVbFixture {
    pub parity: Parity,
    /// `dim` of the length-1 and length-2 slots of `N`.
    pub n1: usize,
    pub n2: usize,
    /// Number of weight-`α` coordinates of `D`.
    pub eta_dim: usize,
    /// Use `φ*(xi^2) = 0` instead of `η1 η2`.
    pub zero_image: bool,
}

impl NoVbFixture {
    pub fn paper() -> Self {
        NoVbFixture {
            parity: Parity::Even,
            n1: 1,
            n2: 1,
            eta_dim: 2,
            zero_image: false,
        }
    }

    pub fn with_zero_image(mut self) -> Self {
        self.zero_image = true;
        self
    }
}

/// Coefficient of `t^{α+β}` in the ansatz for `q*(xi^2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnsatzCoefficient {
    Unit,
    Unknown,
}

impl fmt::Display for AnsatzCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AnsatzCoefficient::Unit => "unit coefficient on t[a1+a2]",
            AnsatzCoefficient::Unknown => "unknown coefficient on t[a1+a2]",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// The linear constraints are inconsistent, so no `Φ` exists.
    Infeasible,
    /// An explicit `(q, Φ)` was found and checked.
    Feasible,
    /// Neither a contradiction nor a witness was found.
    Undetermined,
}

impl fmt::Display for Feasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Feasibility::Infeasible => "infeasible",
            Feasibility::Feasible => "feasible",
            Feasibility::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariantOutcome {
    pub ansatz: AnsatzCoefficient,
    pub verdict: Feasibility,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoVbReport {
    pub fixture: NoVbFixture,
    pub variants: Vec<VariantOutcome>,
    /// Universal-property check of the lift of `φ mod I` into the multiplicity-free covering.
    pub quotient_lift: UniversalReport,
}

impl NoVbReport {
    pub fn all_infeasible(&self) -> bool {
        self.variants.iter().all(|v| v.verdict == Feasibility::Infeasible)
    }

    pub fn all_feasible(&self) -> bool {
        self.variants.iter().all(|v| v.verdict == Feasibility::Feasible)
    }
}

impl fmt::Display for NoVbReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fx = &self.fixture;
        writeln!(
            f,
            "fixture: parity {}, dim xi1 = {}, dim xi2 = {}, dim eta = {}, phi*(xi2) = {}",
            fx.parity,
            fx.n1,
            fx.n2,
            fx.eta_dim,
            if fx.zero_image { "0" } else { "eta1*eta2" }
        )?;
        for v in &self.variants {
            writeln!(f, "{}: {}", v.ansatz, v.verdict)?;
            for d in &v.details {
                writeln!(f, "  {d}")?;
            }
        }
        writeln!(
            f,
            "multiplicity-free lift: {}",
            if self.quotient_lift.holds() { "exists" } else { "fails" }
        )
    }
}

/// Polynomial whose coefficients are monomials in unknown scalars, keyed by
/// the sorted list of unknown ids.
type SymPoly = BTreeMap<Vec<usize>, Polynomial>;

struct Unknowns {
    names: Vec<String>,
    defaults: Vec<Scalar>,
}

impl Unknowns {
    fn fresh(&mut self, name: String, default: Scalar) -> usize {
        self.names.push(name);
        self.defaults.push(default);
        self.names.len() - 1
    }
}

fn sym_add_into(acc: &mut SymPoly, key: Vec<usize>, p: Polynomial) {
    if p.is_zero() {
        return;
    }
    let sum = match acc.remove(&key) {
        Some(q) => &q + &p,
        None => p,
    };
    if !sum.is_zero() {
        acc.insert(key, sum);
    }
}

fn sym_mul(a: &SymPoly, b: &SymPoly) -> SymPoly {
    let mut out = SymPoly::new();
    for (ka, pa) in a {
        for (kb, pb) in b {
            let mut key: Vec<usize> = ka.iter().chain(kb).copied().collect();
            key.sort_unstable();
            sym_add_into(&mut out, key, pa * pb);
        }
    }
    out
}

/// Substitutes symbolic fiber images into `f`; base coordinates map identically.
fn sym_pullback(f: &SymPoly, images: &BTreeMap<FiberVar, SymPoly>, source: &Arc<AlgebraSpec>) -> SymPoly {
    let mut out = SymPoly::new();
    for (key, p) in f {
        for (m, c) in p.terms() {
            let mut acc: SymPoly = [(key.clone(), Polynomial::from_monomial(source, FiberMonomial::one(), c.clone()))]
                .into_iter()
                .collect();
            for v in m.expanded() {
                acc = sym_mul(&acc, &images[v]);
            }
            for (k, q) in acc {
                sym_add_into(&mut out, k, q);
            }
        }
    }
    out
}

fn substitute(f: &SymPoly, values: &BTreeMap<usize, Scalar>) -> SymPoly {
    let mut out = SymPoly::new();
    for (key, p) in f {
        let mut factor = Scalar::one();
        let mut rest = Vec::new();
        for u in key {
            match values.get(u) {
                Some(x) => factor *= x,
                None => rest.push(*u),
            }
        }
        sym_add_into(&mut out, rest, p.scale(&factor));
    }
    out
}

struct LinearSystem {
    columns: Vec<Vec<usize>>,
    rows: Vec<Vec<Scalar>>,
    rhs: Vec<Scalar>,
}

/// Linearizes `lhs_i = rhs_i` by treating each product of unknowns as a fresh unknown.
fn linearize(equations: &[(SymPoly, Polynomial)]) -> LinearSystem {
    let mut columns: Vec<Vec<usize>> = Vec::new();
    let mut col_of: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut row_of: BTreeMap<(usize, FiberMonomial, crate::algebra::BaseMonomial), usize> = BTreeMap::new();
    let mut entries: Vec<BTreeMap<usize, Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    let mut row = |eq: usize, m: &FiberMonomial, bm: &crate::algebra::BaseMonomial, entries: &mut Vec<BTreeMap<usize, Scalar>>, rhs: &mut Vec<Scalar>| {
        *row_of.entry((eq, m.clone(), bm.clone())).or_insert_with(|| {
            entries.push(BTreeMap::new());
            rhs.push(Scalar::zero());
            entries.len() - 1
        })
    };
    for (e, (lhs, target)) in equations.iter().enumerate() {
        for (m, c) in target.terms() {
            for (bm, x) in c.terms() {
                let r = row(e, m, bm, &mut entries, &mut rhs);
                rhs[r] += x;
            }
        }
        for (key, p) in lhs {
            for (m, c) in p.terms() {
                for (bm, x) in c.terms() {
                    let r = row(e, m, bm, &mut entries, &mut rhs);
                    if key.is_empty() {
                        rhs[r] -= x;
                    } else {
                        let col = *col_of.entry(key.clone()).or_insert_with(|| {
                            columns.push(key.clone());
                            columns.len() - 1
                        });
                        *entries[r].entry(col).or_insert_with(Scalar::zero) += x;
                    }
                }
            }
        }
    }
    let rows = entries
        .into_iter()
        .map(|e| {
            let mut r = vec![Scalar::zero(); columns.len()];
            for (c, x) in e {
                r[c] = x;
            }
            r
        })
        .collect();
    LinearSystem { columns, rows, rhs }
}

/// Unknowns whose value is pinned by a linear system (pivot rows with no free columns).
fn forced_values(sys: &LinearSystem) -> Option<BTreeMap<usize, Scalar>> {
    let ncols = sys.columns.len();
    let mut aug: Vec<Vec<Scalar>> = sys
        .rows
        .iter()
        .zip(&sys.rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = linalg::row_reduce(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut forced = BTreeMap::new();
    for (r, &c) in pivots.iter().enumerate() {
        let alone = (0..ncols).all(|k| k == c || aug[r][k].is_zero());
        if alone && sys.columns[c].len() == 1 {
            forced.insert(sys.columns[c][0], aug[r][ncols].clone());
        }
    }
    Some(forced)
}

struct Scenario {
    n_spec: Arc<AlgebraSpec>,
    q_spec: Arc<AlgebraSpec>,
    d_spec: Arc<AlgebraSpec>,
    phi: GradedMorphism,
}

fn scenario(fx: &NoVbFixture) -> Result<Scenario> {
    let label = QuotientLabel::new([1, 2], fx.parity);
    let n_spec = Arc::new(AlgebraSpec::l_type(label, 1, [(1, fx.n1), (2, fx.n2)])?);
    let sys = WeightSystem::full(2, fx.parity);
    let q_spec = Arc::new(AlgebraSpec::delta_type_by_length(sys.clone(), 1, [(1, fx.n1), (2, fx.n2)], false)?);
    let alpha = Weight::generator(2, 1);
    let d_spec = Arc::new(
        AlgebraSpec::delta_type(sys, 1, [(alpha.clone(), fx.eta_dim)], false)?
            .with_names(VariableNames::new("y", "eta")),
    );
    let mut fiber = Vec::new();
    if !fx.zero_image && fx.eta_dim >= 2 && fx.n2 >= 1 {
        let e1 = Polynomial::fiber_var(&d_spec, FiberVar::new(alpha.clone(), 1))?;
        let e2 = Polynomial::fiber_var(&d_spec, FiberVar::new(alpha, 2))?;
        fiber.push((FiberVar::new(Weight::new(vec![2]), 1), &e1 * &e2));
    }
    let phi = GradedMorphism::new(&d_spec, &n_spec, vec![Polynomial::base_var(&d_spec, 1)?], fiber, WeightMap::Length)?;
    Ok(Scenario {
        n_spec,
        q_spec,
        d_spec,
        phi,
    })
}

fn solve_variant(sc: &Scenario, ansatz: AnsatzCoefficient) -> Result<VariantOutcome> {
    let mut unknowns = Unknowns {
        names: Vec::new(),
        defaults: Vec::new(),
    };
    let q = &sc.q_spec;
    let d = &sc.d_spec;
    let one_base = BaseCoefficient::one(q.base_dim());

    // q*(xi^k_j): the covering sum plus a general element of every
    // non-multiplicity-free weight of length k.
    let mut q_images: BTreeMap<FiberVar, SymPoly> = BTreeMap::new();
    for xi in sc.n_spec.fiber_vars() {
        let k = xi.length();
        let mut img = SymPoly::new();
        for (w, &dim) in q.fiber_dims() {
            if w.length() != k || (xi.index as usize) > dim {
                continue;
            }
            let t = Polynomial::fiber_var(q, FiberVar::new(w.clone(), xi.index))?;
            let key = if k >= 2 && ansatz == AnsatzCoefficient::Unknown {
                vec![unknowns.fresh(format!("c[{w},{}]", xi.index), Scalar::one())]
            } else {
                vec![]
            };
            sym_add_into(&mut img, key, t);
        }
        for m in basis::monomials_of_length(q, k) {
            if m.is_multiplicity_free(q.rank()) {
                continue;
            }
            let u = unknowns.fresh(format!("F[{}]", m.total_weight(q.rank())), Scalar::zero());
            sym_add_into(&mut img, vec![u], Polynomial::from_monomial(q, m, one_base.clone()));
        }
        q_images.insert(xi, img);
    }

    // Φ*(t^δ_j): a general element of weight δ in D with scalar coefficients.
    let mut phi_images: BTreeMap<FiberVar, SymPoly> = BTreeMap::new();
    for t in q.fiber_vars() {
        let mut img = SymPoly::new();
        for m in basis::monomials_of_weight(d, &t.weight) {
            let u = unknowns.fresh(format!("u[{},{}]", t.weight, t.index), Scalar::zero());
            sym_add_into(&mut img, vec![u], Polynomial::from_monomial(d, m, BaseCoefficient::one(d.base_dim())));
        }
        phi_images.insert(t, img);
    }

    let mut equations: Vec<(usize, SymPoly, Polynomial)> = Vec::new();
    for (xi, img) in &q_images {
        let lhs = sym_pullback(img, &phi_images, d);
        equations.push((xi.length(), lhs, sc.phi.fiber_images()[xi].clone()));
    }

    let mut details = Vec::new();
    let stage1: Vec<(SymPoly, Polynomial)> = equations
        .iter()
        .filter(|(k, _, _)| *k == 1)
        .map(|(_, l, r)| (l.clone(), r.clone()))
        .collect();
    let lin1 = linearize(&stage1);
    let Some(forced) = forced_values(&lin1) else {
        details.push("length-1 equations are inconsistent".into());
        return Ok(VariantOutcome { ansatz, verdict: Feasibility::Infeasible, details });
    };
    let zero_forced = forced.values().all(Zero::is_zero);
    details.push(format!(
        "length-1 equations force {} of {} unknowns{}",
        forced.len(),
        lin1.columns.len(),
        if zero_forced && !forced.is_empty() { ", all to zero" } else { "" }
    ));

    let all: Vec<(SymPoly, Polynomial)> = equations
        .iter()
        .map(|(_, l, r)| (substitute(l, &forced), r.clone()))
        .collect();
    let lin = linearize(&all);
    let Some(sol) = linalg::solve(&lin.rows, &lin.rhs, lin.columns.len()) else {
        details.push(format!(
            "remaining linear system is inconsistent (rows: {}, linearized unknowns: {})",
            lin.rows.len(),
            lin.columns.len()
        ));
        for (l, r) in &all {
            if l.is_empty() && !r.is_zero() {
                details.push(format!("pullback vanishes identically but the target is {r}"));
            }
        }
        return Ok(VariantOutcome { ansatz, verdict: Feasibility::Infeasible, details });
    };

    // witness: linear columns from the particular solution, the rest forced or default
    let mut values: BTreeMap<usize, Scalar> = forced.clone();
    for (col, key) in lin.columns.iter().enumerate() {
        if key.len() == 1 {
            values.insert(key[0], sol.particular[col].clone());
        }
    }
    for (u, default) in unknowns.defaults.iter().enumerate() {
        values.entry(u).or_insert_with(|| default.clone());
    }
    let ok = check_witness(sc, &q_images, &phi_images, &values)?;
    details.push(format!(
        "linearized system consistent (nullity {}); witness {}",
        sol.nullity,
        if ok { "verified" } else { "rejected" }
    ));
    let verdict = if ok { Feasibility::Feasible } else { Feasibility::Undetermined };
    Ok(VariantOutcome { ansatz, verdict, details })
}

fn evaluate(f: &SymPoly, values: &BTreeMap<usize, Scalar>, spec: &Arc<AlgebraSpec>) -> Polynomial {
    let mut acc = Polynomial::zero(spec);
    for (p_key, p) in substitute(f, values) {
        debug_assert!(p_key.is_empty());
        acc = &acc + &p;
    }
    acc
}

fn check_witness(
    sc: &Scenario,
    q_images: &BTreeMap<FiberVar, SymPoly>,
    phi_images: &BTreeMap<FiberVar, SymPoly>,
    values: &BTreeMap<usize, Scalar>,
) -> Result<bool> {
    let q_base = vec![Polynomial::base_var(&sc.q_spec, 1)?];
    let q_fiber = q_images.iter().map(|(v, s)| (v.clone(), evaluate(s, values, &sc.q_spec)));
    let q_mor = GradedMorphism::new(&sc.q_spec, &sc.n_spec, q_base, q_fiber, WeightMap::Length)?;
    let d_base = vec![Polynomial::base_var(&sc.d_spec, 1)?];
    let d_fiber = phi_images.iter().map(|(v, s)| (v.clone(), evaluate(s, values, &sc.d_spec)));
    let big_phi = GradedMorphism::new(&sc.d_spec, &sc.q_spec, d_base, d_fiber, WeightMap::Identity)?;
    GradedMorphism::compose(&q_mor, &big_phi)?.equals(&sc.phi)
}

/// Runs both ansatz variants and the multiplicity-free comparison.
pub fn verify_no_vb_covering(fx: &NoVbFixture) -> Result<NoVbReport> {
    let sc = scenario(fx)?;
    let variants = [AnsatzCoefficient::Unit, AnsatzCoefficient::Unknown]
        .into_iter()
        .map(|a| solve_variant(&sc, a))
        .collect::<Result<Vec<_>>>()?;

    let d_hat = Arc::new(AlgebraSpec::clone(&sc.d_spec).with_quotient(true)?);
    let psi = sc.phi.transport(&d_hat, &sc.n_spec)?;
    let cov = CoveringData::build(&sc.n_spec, &WeightSystem::full(2, fx.parity))?;
    let quotient_lift = verify_universal(&psi, &cov)?;
    Ok(NoVbReport {
        fixture: fx.clone(),
        variants,
        quotient_lift,
    })
}
