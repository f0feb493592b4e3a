//! Batch front end: parse input files, run one kernel operation, print a
//! deterministic report.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{AlgebraSpec, BaseCoefficient, FiberMonomial, Polynomial};
use crate::atlas::{self, Atlas, CoveredAtlas};
use crate::covering::{self, CoveringData, NoVbFixture};
use crate::error::Error;
use crate::invariants;
use crate::morphism::{GradedMorphism, WeightMap};
use crate::text::{self, Document, Item};
use crate::weights::{QuotientLabel, WeightSystem};

#[derive(Debug, Parser)]
#[command(name = "mfcover", version, about = "Multiplicity-free coverings of graded domains")]
pub struct Args {
    #[command(subcommand)]
    pub verb: Verb,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// File with `n`, `parity` and `delta` lines giving the weight system.
    #[arg(long, global = true, value_name = "FILE")]
    pub delta: Option<PathBuf>,
    /// verify-no-vb-cover: run only the multiplicity-free (quotient) variant.
    #[arg(long, global = true, overrides_with = "no_quotient")]
    pub quotient: bool,
    /// verify-no-vb-cover: run the n-fold vector bundle variants (default).
    #[arg(long = "no-quotient", global = true, overrides_with = "quotient")]
    pub no_quotient: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Verb {
    /// Covering of a type-L spec and its projection.
    Cover { file: PathBuf },
    /// Lift of a Z-graded morphism into the covering.
    Lift { file: PathBuf },
    /// Orbit sum of a polynomial under the symmetric group.
    Symmetrize { file: PathBuf },
    /// Decomposition of an invariant polynomial into primitive orbit sums.
    Decompose { file: PathBuf },
    /// The function on the base whose pullback is a given invariant.
    Pushdown { file: PathBuf },
    /// Vanishing of orbit sums of monomials, with a brute-force cross-check.
    OrbitVanishes { file: PathBuf },
    /// Deck transformation group of a weight system.
    Deck { file: Option<PathBuf> },
    /// Identity, inverse and cocycle conditions of an atlas.
    CheckCocycle { file: PathBuf },
    /// Chartwise covering of a type-L atlas.
    CoverAtlas { file: PathBuf },
    /// Type-L atlas covered by a symmetric type-Δ atlas.
    Descend { file: PathBuf },
    /// Cover then descend (or descend then cover) and compare.
    Roundtrip { file: PathBuf },
    /// Universal property of the covering for a morphism (and optional candidate lift).
    VerifyUniversal { file: PathBuf },
    /// Non-existence of coverings among n-fold vector bundles.
    VerifyNoVbCover,
}

impl Verb {
    pub fn name(&self) -> &'static str {
        match self {
            Verb::Cover { .. } => "cover",
            Verb::Lift { .. } => "lift",
            Verb::Symmetrize { .. } => "symmetrize",
            Verb::Decompose { .. } => "decompose",
            Verb::Pushdown { .. } => "pushdown",
            Verb::OrbitVanishes { .. } => "orbit-vanishes",
            Verb::Deck { .. } => "deck",
            Verb::CheckCocycle { .. } => "check-cocycle",
            Verb::CoverAtlas { .. } => "cover-atlas",
            Verb::Descend { .. } => "descend",
            Verb::Roundtrip { .. } => "roundtrip",
            Verb::VerifyUniversal { .. } => "verify-universal",
            Verb::VerifyNoVbCover => "verify-no-vb-cover",
        }
    }
}

/// A verb with its inputs and options.
#[derive(Debug, Clone)]
pub struct Command {
    pub verb: Verb,
    pub delta: Option<PathBuf>,
    pub quotient: Option<bool>,
}

impl Command {
    pub fn new(verb: Verb) -> Self {
        Command {
            verb,
            delta: None,
            quotient: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub key: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub verdict: String,
    pub entries: Vec<Entry>,
    pub body: String,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            verdict: "pass".into(),
            entries: Vec::new(),
            body: String::new(),
        }
    }

    fn entry(&mut self, key: &str, value: impl ToString) {
        self.entries.push(Entry {
            key: key.into(),
            value: value.to_string(),
        });
    }

    fn check(&mut self, key: &str, ok: bool) {
        self.entry(key, if ok { "yes" } else { "no" });
        if !ok {
            self.verdict = "fail".into();
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("command: {}\nverdict: {}\n", self.command, self.verdict);
        for e in &self.entries {
            s.push_str(&format!("{}: {}\n", e.key, e.value));
        }
        if !self.body.is_empty() {
            s.push('\n');
            s.push_str(&self.body);
            if !self.body.ends_with('\n') {
                s.push('\n');
            }
        }
        s
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Input problems: unreadable files, syntax errors, missing objects.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct InputError(pub String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type CliResult<T> = Result<T, InputError>;

fn read_doc(path: &Path) -> CliResult<Document> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {}", path.display(), e.kind())))?;
    text::parse_document(&src).map_err(|e| InputError(format!("{}: {e}", file_label(path))))
}

fn file_label(path: &Path) -> String {
    path.file_name()
        .map(|f| f.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn first_l_spec(doc: &Document) -> CliResult<(String, Arc<AlgebraSpec>)> {
    doc.specs()
        .find(|(_, s)| !s.is_delta_type())
        .map(|(n, s)| (n.to_string(), s.clone()))
        .ok_or_else(|| InputError("no type-L spec (with 'lengths = {...}') in the input".into()))
}

fn first_poly(doc: &Document) -> CliResult<(String, String, Polynomial)> {
    doc.items
        .iter()
        .find_map(|i| match i {
            Item::Poly { name, spec, poly } => Some((name.clone(), spec.clone(), poly.clone())),
            _ => None,
        })
        .ok_or_else(|| InputError("no 'poly' declaration in the input".into()))
}

fn first_atlas(doc: &Document) -> CliResult<(String, Vec<String>, Atlas)> {
    doc.items
        .iter()
        .find_map(|i| match i {
            Item::Atlas { name, charts, atlas } => Some((name.clone(), charts.clone(), atlas.clone())),
            _ => None,
        })
        .ok_or_else(|| InputError("no 'atlas' declaration in the input".into()))
}

/// `ψ: M -> U` with `M` of type Δ and `U` of type L, and an optional candidate `M -> V`.
struct LiftInput {
    m_name: String,
    m: Arc<AlgebraSpec>,
    u_name: String,
    u: Arc<AlgebraSpec>,
    psi_name: String,
    psi: GradedMorphism,
    candidate: Option<(String, GradedMorphism)>,
}

fn lift_input(doc: &Document) -> CliResult<LiftInput> {
    let found = doc.items.iter().find_map(|i| match i {
        Item::Morphism {
            name,
            source,
            target,
            morphism,
        } if morphism.weight_map() == WeightMap::Length => Some((name, source, target, morphism)),
        _ => None,
    });
    let (psi_name, m_name, u_name, psi) =
        found.ok_or_else(|| InputError("no morphism from a type-Δ spec to a type-L spec in the input".into()))?;
    let candidate = doc.items.iter().find_map(|i| match i {
        Item::Morphism {
            name,
            source,
            morphism,
            ..
        } if source == m_name && morphism.target().is_delta_type() => Some((name.clone(), morphism.clone())),
        _ => None,
    });
    Ok(LiftInput {
        m_name: m_name.clone(),
        m: psi.source().clone(),
        u_name: u_name.clone(),
        u: psi.target().clone(),
        psi_name: psi_name.clone(),
        psi: psi.clone(),
        candidate,
    })
}

/// All weights of length in `label`, in rank `n`.
pub fn default_delta(label: &QuotientLabel, n: usize) -> WeightSystem {
    WeightSystem::with_lengths(n, label.beta_parity(), label.lengths().iter().copied())
}

fn choose_delta(cmd: &Command, doc: &Document, label: &QuotientLabel, n: Option<usize>) -> CliResult<WeightSystem> {
    if let Some(path) = &cmd.delta {
        return read_doc(path)?
            .weight_system
            .ok_or_else(|| InputError(format!("{}: no 'delta = {{...}}' statement", file_label(path))));
    }
    if let Some(sys) = &doc.weight_system {
        return Ok(sys.clone());
    }
    Ok(default_delta(label, n.unwrap_or_else(|| label.max_length())))
}

fn delta_text(sys: &WeightSystem) -> String {
    let members: Vec<String> = sys.members().iter().map(|w| w.to_string()).collect();
    format!("{{{}}}", members.join(", "))
}

fn push_spec(doc: &mut Document, name: &str, spec: &Arc<AlgebraSpec>) {
    doc.items.push(Item::Spec {
        name: name.into(),
        spec: spec.clone(),
    });
}

fn push_morphism(doc: &mut Document, name: &str, source: &str, target: &str, m: &GradedMorphism) {
    doc.items.push(Item::Morphism {
        name: name.into(),
        source: source.into(),
        target: target.into(),
        morphism: m.clone(),
    });
}

fn cover(cmd: &Command, file: &Path) -> CliResult<Report> {
    let doc = read_doc(file)?;
    let (u_name, u) = first_l_spec(&doc)?;
    let label = u.label().expect("type L").clone();
    let delta = choose_delta(cmd, &doc, &label, None)?;
    let cov = CoveringData::build(&u, &delta)?;
    let mut r = Report::new("cover");
    r.entry("n", delta.n());
    r.entry("delta", delta_text(&delta));
    r.entry("coordinates", cov.total.fiber_vars().count());
    r.check("graded", cov.projection.check_weights().is_ok());
    let v_name = format!("{u_name}_cover");
    let mut out = Document::default();
    push_spec(&mut out, &u_name, &u);
    push_spec(&mut out, &v_name, &cov.total);
    push_morphism(&mut out, "p", &v_name, &u_name, &cov.projection);
    r.body = text::print_document(&out);
    Ok(r)
}

fn lift_or_verify(cmd: &Command, file: &Path, verify: bool) -> CliResult<Report> {
    let doc = read_doc(file)?;
    let li = lift_input(&doc)?;
    let label = li.u.label().expect("type L").clone();
    let delta = choose_delta(cmd, &doc, &label, Some(li.m.rank()))?;
    let cov = CoveringData::build(&li.u, &delta)?;
    let v_name = format!("{}_cover", li.u_name);
    let mut r = Report::new(if verify { "verify-universal" } else { "lift" });
    r.entry("n", delta.n());
    r.entry("delta", delta_text(&delta));
    r.entry("morphism", &li.psi_name);
    let mut out = Document::default();
    push_spec(&mut out, &v_name, &cov.total);
    let report = match (&li.candidate, verify) {
        (Some((cname, cand)), true) => {
            r.entry("candidate", cname);
            covering::verify_candidate(&li.psi, &cov, cand)?
        }
        _ => {
            let lifted = covering::lift(&li.psi, &cov)?;
            let lift_name = format!("{}_lift", li.psi_name);
            push_morphism(&mut out, &lift_name, &li.m_name, &v_name, &lifted);
            covering::verify_universal(&li.psi, &cov)?
        }
    };
    r.check("commutes", report.commutes);
    r.check("unique", report.unique);
    r.check("weight-preserving", report.weight_preserving);
    for n in &report.notes {
        r.entry("note", n);
    }
    if !verify {
        r.body = text::print_document(&out);
    }
    Ok(r)
}

fn symmetrize(file: &Path) -> CliResult<Report> {
    let doc = read_doc(file)?;
    let (name, spec_name, f) = first_poly(&doc)?;
    let s = invariants::symmetrize(&f)?;
    let mut r = Report::new("symmetrize");
    r.entry("group order", (1..=f.spec().rank()).product::<usize>());
    r.check("invariant", s.is_invariant()?);
    r.body = text::print_poly_decl(&format!("sym_{name}"), &spec_name, &s);
    Ok(r)
}

fn base_poly(spec: &Arc<AlgebraSpec>, c: &BaseCoefficient) -> Polynomial {
    Polynomial::from_monomial(spec, FiberMonomial::one(), c.clone())
}

fn decompose(file: &Path) -> CliResult<Report> {
    let doc = read_doc(file)?;
    let (_, _, f) = first_poly(&doc)?;
    let mut r = Report::new("decompose");
    if !f.is_invariant()? {
        r.check("invariant", false);
        return Ok(r);
    }
    r.check("invariant", true);
    let parts = invariants::decompose_invariant(&f)?;
    let spec = f.spec();
    let mut rebuilt = Polynomial::zero(spec);
    let mut body = String::new();
    for (i, (a, t)) in parts.iter().enumerate() {
        let tp = Polynomial::from_monomial(spec, t.clone(), BaseCoefficient::one(spec.base_dim()));
        rebuilt = &rebuilt + &invariants::symmetrize(&tp)?.scale_by_base(a);
        body.push_str(&format!("orbit {}: ({}) * sym({})\n", i + 1, base_poly(spec, a), tp));
    }
    r.entry("orbits", parts.len());
    r.check("reconstructs", rebuilt == f);
    r.body = body;
    Ok(r)
}

fn pushdown(file: &Path) -> CliResult<Report> {
    let doc = read_doc(file)?;
    let (name, spec_name, f) = first_poly(&doc)?;
    let cov = CoveringData::from_symmetric(f.spec())?;
    let mut r = Report::new("pushdown");
    if !f.is_invariant()? {
        r.check("invariant", false);
        return Ok(r);
    }
    r.check("invariant", true);
    let g = invariants::push_down(&f, &cov)?;
    r.check("pullback recovers input", cov.projection.pullback(&g)? == f);
    let base_name = format!("{spec_name}_base");
    let mut out = Document::default();
    push_spec(&mut out, &base_name, &cov.base);
    out.items.push(Item::Poly {
        name: format!("{name}_down"),
        spec: base_name,
        poly: g,
    });
    r.body = text::print_document(&out);
    Ok(r)
}

fn orbit_vanishes(file: &Path) -> CliResult<Report> {
    let doc = read_doc(file)?;
    let (_, _, f) = first_poly(&doc)?;
    let spec = f.spec().clone();
    spec.check_symmetric()?;
    let mut r = Report::new("orbit-vanishes");
    let mut body = String::new();
    let mut agree = true;
    for m in f.terms().keys() {
        let p = invariants::primitivize_monomial(&spec, m)?;
        let t = &p.monomial;
        let criterion = invariants::orbit_vanishes(&spec, t);
        let tp = Polynomial::from_monomial(&spec, t.clone(), BaseCoefficient::one(spec.base_dim()));
        let brute = invariants::symmetrize(&tp)?.is_zero();
        agree &= criterion == brute;
        let mp = Polynomial::from_monomial(&spec, m.clone(), BaseCoefficient::one(spec.base_dim()));
        body.push_str(&format!(
            "{mp}: primitive {}{tp}, vanishes {}, brute force {}\n",
            if p.negative { "-" } else { "" },
            if criterion { "yes" } else { "no" },
            if brute { "yes" } else { "no" }
        ));
    }
    r.entry("monomials", f.terms().len());
    r.check("criterion agrees with brute force", agree);
    r.body = body;
    Ok(r)
}

fn deck(cmd: &Command, file: Option<&Path>) -> CliResult<Report> {
    let path = file
        .or(cmd.delta.as_deref())
        .ok_or_else(|| InputError("deck needs a weight-system file".into()))?;
    let sys = read_doc(path)?
        .weight_system
        .ok_or_else(|| InputError(format!("{}: no 'delta = {{...}}' statement", file_label(path))))?;
    let group = sys.deck_group()?;
    let mut r = Report::new("deck");
    r.entry("n", sys.n());
    r.entry("order", group.len());
    let closed = group.iter().all(|a| group.iter().all(|b| group.contains(&a.compose(b))));
    r.check("closed under composition", closed);
    r.body = group.iter().map(|s| format!("{s}\n")).collect();
    Ok(r)
}

fn check_cocycle(file: &Path) -> CliResult<Report> {
    let doc = read_doc(file)?;
    let (name, _, a) = first_atlas(&doc)?;
    let rep = atlas::check_cocycle(&a)?;
    let mut r = Report::new("check-cocycle");
    r.entry("atlas", name);
    r.entry("charts", a.charts().len());
    r.entry("transitions", a.transitions().len());
    r.entry("triples", a.triples().len());
    r.check("cocycle", rep.is_ok());
    r.body = rep.to_string();
    Ok(r)
}

fn covered_document(c: &CoveredAtlas, atlas_name: &str, base_names: &[String], total_names: &[String], lifted: bool) -> Document {
    let mut out = Document::default();
    let (names_new, specs_new): (&[String], Vec<&Arc<AlgebraSpec>>) = if lifted {
        (total_names, c.coverings.iter().map(|k| &k.total).collect())
    } else {
        (base_names, c.coverings.iter().map(|k| &k.base).collect())
    };
    for (n, s) in names_new.iter().zip(specs_new) {
        push_spec(&mut out, n, s);
    }
    let (new_atlas, name) = if lifted {
        (&c.total, format!("{atlas_name}_cover"))
    } else {
        (&c.base, format!("{atlas_name}_base"))
    };
    out.items.push(Item::Atlas {
        name,
        charts: names_new.to_vec(),
        atlas: new_atlas.clone(),
    });
    for (i, k) in c.coverings.iter().enumerate() {
        push_morphism(&mut out, &format!("p{}", i + 1), &total_names[i], &base_names[i], &k.projection);
    }
    out
}

fn atlas_delta(cmd: &Command, doc: &Document, a: &Atlas) -> CliResult<WeightSystem> {
    let first = a.charts()[0].label().expect("type L").clone();
    let lengths: Vec<usize> = a
        .charts()
        .iter()
        .flat_map(|c| c.label().expect("type L").lengths().iter().copied().collect::<Vec<_>>())
        .collect();
    let label = QuotientLabel::new(lengths, first.beta_parity());
    choose_delta(cmd, doc, &label, None)
}

fn cover_atlas(cmd: &Command, file: &Path) -> CliResult<Report> {
    let doc = read_doc(file)?;
    let (name, charts, a) = first_atlas(&doc)?;
    if a.is_delta_type() {
        return Err(InputError("cover-atlas expects an atlas of type-L charts".into()));
    }
    let delta = atlas_delta(cmd, &doc, &a)?;
    let c = atlas::cover_atlas(&a, &delta)?;
    let mut r = Report::new("cover-atlas");
    r.entry("n", delta.n());
    r.entry("delta", delta_text(&delta));
    r.check("cocycle", atlas::check_cocycle(&c.total)?.is_ok());
    r.check("symmetric", atlas::check_symmetric(&c.total)?.is_ok());
    let total_names: Vec<String> = charts.iter().map(|n| format!("{n}_cover")).collect();
    r.body = text::print_document(&covered_document(&c, &name, &charts, &total_names, true));
    Ok(r)
}

fn descend(file: &Path) -> CliResult<Report> {
    let doc = read_doc(file)?;
    let (name, charts, a) = first_atlas(&doc)?;
    if !a.is_delta_type() {
        return Err(InputError("descend expects an atlas of type-Δ charts".into()));
    }
    let mut r = Report::new("descend");
    let sym = atlas::check_symmetric(&a)?;
    r.check("symmetric", sym.is_ok());
    if !sym.is_ok() {
        r.body = sym.to_string();
        return Ok(r);
    }
    let c = atlas::descend(&a)?;
    r.check("cocycle", atlas::check_cocycle(&c.base)?.is_ok());
    let base_names: Vec<String> = charts.iter().map(|n| format!("{n}_base")).collect();
    r.body = text::print_document(&covered_document(&c, &name, &base_names, &charts, false));
    Ok(r)
}

fn same_transitions(a: &Atlas, b: &Atlas) -> Result<bool, Error> {
    if a.transitions().len() != b.transitions().len() || a.charts().len() != b.charts().len() {
        return Ok(false);
    }
    for (k, t) in a.transitions() {
        let Some(u) = b.transition(k.0, k.1) else { return Ok(false) };
        if !t.equals(u)? {
            return Ok(false);
        }
    }
    Ok(a.charts().iter().zip(b.charts()).all(|(x, y)| x.same_algebra(y)))
}

fn roundtrip(cmd: &Command, file: &Path) -> CliResult<Report> {
    let doc = read_doc(file)?;
    let (name, _, a) = first_atlas(&doc)?;
    let mut r = Report::new("roundtrip");
    r.entry("atlas", name);
    if a.is_delta_type() {
        r.entry("direction", "descend then cover");
        let down = atlas::descend(&a)?;
        let sys = a.charts()[0].weight_system().expect("type Δ").clone();
        let up = atlas::cover_atlas(&down.base, &sys)?;
        r.check("reproduces input", same_transitions(&up.total, &a)?);
    } else {
        r.entry("direction", "cover then descend");
        let delta = atlas_delta(cmd, &doc, &a)?;
        let up = atlas::cover_atlas(&a, &delta)?;
        let down = atlas::descend(&up.total)?;
        r.check("reproduces input", same_transitions(&down.base, &a)?);
    }
    Ok(r)
}

fn verify_no_vb(cmd: &Command) -> CliResult<Report> {
    let mut r = Report::new("verify-no-vb-cover");
    let paper = covering::verify_no_vb_covering(&NoVbFixture::paper())?;
    if cmd.quotient == Some(true) {
        r.check("multiplicity-free lift exists", paper.quotient_lift.holds());
        r.body = paper.quotient_lift.to_string();
        return Ok(r);
    }
    let control = covering::verify_no_vb_covering(&NoVbFixture::paper().with_zero_image())?;
    r.entry("result", if paper.all_infeasible() { "infeasible" } else { "not refuted" });
    r.check("all ansatz variants infeasible", paper.all_infeasible());
    r.check("multiplicity-free lift exists", paper.quotient_lift.holds());
    r.check("control with zero image feasible", control.all_feasible());
    r.body = format!("{paper}\ncontrol:\n{control}");
    Ok(r)
}

/// Runs a command; errors are input errors (exit code 2).
pub fn run(cmd: &Command) -> Result<Report, InputError> {
    match &cmd.verb {
        Verb::Cover { file } => cover(cmd, file),
        Verb::Lift { file } => lift_or_verify(cmd, file, false),
        Verb::VerifyUniversal { file } => lift_or_verify(cmd, file, true),
        Verb::Symmetrize { file } => symmetrize(file),
        Verb::Decompose { file } => decompose(file),
        Verb::Pushdown { file } => pushdown(file),
        Verb::OrbitVanishes { file } => orbit_vanishes(file),
        Verb::Deck { file } => deck(cmd, file.as_deref()),
        Verb::CheckCocycle { file } => check_cocycle(file),
        Verb::CoverAtlas { file } => cover_atlas(cmd, file),
        Verb::Descend { file } => descend(file),
        Verb::Roundtrip { file } => roundtrip(cmd, file),
        Verb::VerifyNoVbCover => verify_no_vb(cmd),
    }
}

/// Output text and exit code: 0 pass, 1 verified-false, 2 input error.
pub fn execute(cmd: &Command, json: bool) -> (String, i32) {
    match run(cmd) {
        Ok(r) => {
            let code = if r.passed() { 0 } else { 1 };
            (if json { r.render_json() } else { r.render_text() }, code)
        }
        Err(e) => {
            let mut r = Report::new(cmd.verb.name());
            r.verdict = "error".into();
            r.entry("error", &e.0);
            (if json { r.render_json() } else { r.render_text() }, 2)
        }
    }
}

/// Entry point for the binary; returns the exit code.
pub fn main_with_args(args: impl IntoIterator<Item = OsString>) -> i32 {
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let quotient = if args.quotient {
        Some(true)
    } else if args.no_quotient {
        Some(false)
    } else {
        None
    };
    let cmd = Command {
        verb: args.verb,
        delta: args.delta,
        quotient,
    };
    let (out, code) = execute(&cmd, args.json);
    if code == 2 && !args.json {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    code
}
