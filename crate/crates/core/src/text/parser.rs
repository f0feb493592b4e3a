use std::collections::BTreeMap;
use std::sync::Arc;

use num::{BigInt, BigRational};

use super::lexer::{lex, Tok, Token};
use super::ParseError;
use crate::algebra::{AlgebraSpec, FiberVar, Polynomial, VariableNames};
use crate::atlas::Atlas;
use crate::morphism::{GradedMorphism, WeightMap};
use crate::weights::{Parity, QuotientLabel, Weight, WeightSystem};

/// A parsed file: optional top-level weight system plus named declarations in order.
#[derive(Clone, Debug, Default)]
pub struct Document {
    pub weight_system: Option<WeightSystem>,
    pub items: Vec<Item>,
}

#[derive(Clone, Debug)]
pub enum Item {
    Spec {
        name: String,
        spec: Arc<AlgebraSpec>,
    },
    Poly {
        name: String,
        spec: String,
        poly: Polynomial,
    },
    Morphism {
        name: String,
        source: String,
        target: String,
        morphism: GradedMorphism,
    },
    Atlas {
        name: String,
        charts: Vec<String>,
        atlas: Atlas,
    },
}

impl Document {
    pub fn spec(&self, name: &str) -> Option<&Arc<AlgebraSpec>> {
        self.specs().find(|(n, _)| *n == name).map(|(_, s)| s)
    }

    pub fn specs(&self) -> impl Iterator<Item = (&str, &Arc<AlgebraSpec>)> {
        self.items.iter().filter_map(|i| match i {
            Item::Spec { name, spec } => Some((name.as_str(), spec)),
            _ => None,
        })
    }

    pub fn polys(&self) -> impl Iterator<Item = (&str, &Polynomial)> {
        self.items.iter().filter_map(|i| match i {
            Item::Poly { name, poly, .. } => Some((name.as_str(), poly)),
            _ => None,
        })
    }

    pub fn morphisms(&self) -> impl Iterator<Item = (&str, &GradedMorphism)> {
        self.items.iter().filter_map(|i| match i {
            Item::Morphism { name, morphism, .. } => Some((name.as_str(), morphism)),
            _ => None,
        })
    }

    pub fn atlases(&self) -> impl Iterator<Item = (&str, &Atlas)> {
        self.items.iter().filter_map(|i| match i {
            Item::Atlas { name, atlas, .. } => Some((name.as_str(), atlas)),
            _ => None,
        })
    }

    /// Name of a spec equal (as an algebra) to `spec`, if declared.
    pub fn name_of(&self, spec: &AlgebraSpec) -> Option<&str> {
        self.specs().find(|(_, s)| s.same_algebra(spec)).map(|(n, _)| n)
    }
}

/// Weight as written: a bare integer or a sum of multiples of generators.
#[derive(Clone, Debug)]
enum RawWeight {
    Int(usize),
    Terms(Vec<(u32, usize)>),
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    n: Option<usize>,
    parity: Parity,
    delta: Option<(Token, Vec<RawWeight>)>,
    doc: Document,
}

type PResult<T> = Result<T, ParseError>;

fn err_at(t: &Token, msg: impl std::fmt::Display) -> ParseError {
    ParseError::new(t.line, t.col, msg)
}

impl Parser {
    fn new(src: &str) -> PResult<Self> {
        Ok(Parser {
            toks: lex(src)?,
            pos: 0,
            n: None,
            parity: Parity::Even,
            delta: None,
            doc: Document::default(),
        })
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(&self.peek().tok, Tok::Sym(x) if *x == s)
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        if self.is_sym(s) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, s: &str) -> PResult<Token> {
        if self.is_sym(s) {
            Ok(self.next())
        } else {
            let t = self.peek();
            Err(err_at(t, format!("expected '{s}', found {}", t.tok)))
        }
    }

    fn expect_ident(&mut self) -> PResult<(String, Token)> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.clone())),
            other => Err(err_at(&t, format!("expected a name, found {other}"))),
        }
    }

    fn expect_int(&mut self) -> PResult<usize> {
        let t = self.next();
        match &t.tok {
            Tok::Int(s) => s.parse().map_err(|_| err_at(&t, "integer too large")),
            other => Err(err_at(&t, format!("expected an integer, found {other}"))),
        }
    }

    fn skip_separators(&mut self) {
        while self.eat_sym(";") {}
    }

    fn document(mut self) -> PResult<Document> {
        loop {
            self.skip_separators();
            let t = self.peek().clone();
            match &t.tok {
                Tok::Eof => break,
                Tok::Ident(kw) => match kw.as_str() {
                    "n" => {
                        self.next();
                        self.expect_sym("=")?;
                        self.n = Some(self.expect_int()?);
                    }
                    "parity" => {
                        self.next();
                        self.expect_sym("=")?;
                        self.parity = self.parity_value()?;
                    }
                    "delta" => {
                        self.next();
                        self.expect_sym("=")?;
                        let ws = self.weight_set()?;
                        self.delta = Some((t.clone(), ws));
                    }
                    "spec" => self.spec_decl()?,
                    "poly" => self.poly_decl()?,
                    "morphism" => self.morphism_decl()?,
                    "atlas" => self.atlas_decl()?,
                    _ => return Err(err_at(&t, format!("unknown statement '{kw}'"))),
                },
                other => return Err(err_at(&t, format!("expected a statement, found {other}"))),
            }
        }
        if let Some((t, ws)) = self.delta.clone() {
            self.doc.weight_system = Some(self.build_system(&t, self.n, self.parity, &ws)?);
        }
        Ok(self.doc)
    }

    fn parity_value(&mut self) -> PResult<Parity> {
        let (s, t) = self.expect_ident()?;
        match s.as_str() {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            _ => Err(err_at(&t, "parity must be 'even' or 'odd'")),
        }
    }

    fn bool_value(&mut self) -> PResult<bool> {
        let (s, t) = self.expect_ident()?;
        match s.as_str() {
            "true" => Ok(true),
            "false" => Ok(false),
            _ => Err(err_at(&t, "expected 'true' or 'false'")),
        }
    }

    fn generator_index(s: &str) -> Option<usize> {
        let rest = s.strip_prefix('a')?;
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        rest.parse().ok().filter(|&i| i >= 1)
    }

    fn raw_weight(&mut self) -> PResult<RawWeight> {
        let mut terms = Vec::new();
        loop {
            let t = self.peek().clone();
            let coef = match &t.tok {
                Tok::Int(s) => {
                    let next_is_gen = matches!(self.peek_at(1), Tok::Ident(g) if Self::generator_index(g).is_some());
                    let k: usize = s.parse().map_err(|_| err_at(&t, "integer too large"))?;
                    self.next();
                    if !next_is_gen {
                        if terms.is_empty() && !self.is_sym("+") {
                            return Ok(RawWeight::Int(k));
                        }
                        return Err(err_at(&t, "expected a generator such as 'a1'"));
                    }
                    k as u32
                }
                _ => 1,
            };
            let (g, gt) = self.expect_ident()?;
            let i = Self::generator_index(&g).ok_or_else(|| err_at(&gt, format!("'{g}' is not a generator")))?;
            terms.push((coef, i));
            if !self.eat_sym("+") {
                return Ok(RawWeight::Terms(terms));
            }
        }
    }

    fn weight_set(&mut self) -> PResult<Vec<RawWeight>> {
        self.expect_sym("{")?;
        let mut out = Vec::new();
        if self.eat_sym("}") {
            return Ok(out);
        }
        loop {
            out.push(self.raw_weight()?);
            if self.eat_sym("}") {
                return Ok(out);
            }
            self.expect_sym(",")?;
        }
    }

    fn int_set(&mut self) -> PResult<Vec<usize>> {
        self.expect_sym("{")?;
        let mut out = Vec::new();
        if self.eat_sym("}") {
            return Ok(out);
        }
        loop {
            out.push(self.expect_int()?);
            if self.eat_sym("}") {
                return Ok(out);
            }
            self.expect_sym(",")?;
        }
    }

    fn max_generator(ws: &[RawWeight]) -> usize {
        ws.iter()
            .filter_map(|w| match w {
                RawWeight::Terms(ts) => ts.iter().map(|(_, i)| *i).max(),
                RawWeight::Int(_) => None,
            })
            .max()
            .unwrap_or(0)
    }

    fn to_weight(t: &Token, w: &RawWeight, n: usize) -> PResult<Weight> {
        match w {
            RawWeight::Int(0) => Ok(Weight::zero(n)),
            RawWeight::Int(k) => Err(err_at(t, format!("expected a weight, found the integer {k}"))),
            RawWeight::Terms(ts) => {
                let mut e = vec![0u32; n];
                for &(c, i) in ts {
                    if i > n {
                        return Err(err_at(t, format!("generator a{i} exceeds n = {n}")));
                    }
                    e[i - 1] += c;
                }
                Ok(Weight::new(e))
            }
        }
    }

    fn build_system(&self, t: &Token, n: Option<usize>, parity: Parity, ws: &[RawWeight]) -> PResult<WeightSystem> {
        let n = n.unwrap_or_else(|| Self::max_generator(ws));
        let weights = ws.iter().map(|w| Self::to_weight(t, w, n)).collect::<PResult<Vec<_>>>()?;
        WeightSystem::new(n, parity, weights).map_err(|e| err_at(t, e))
    }

    fn spec_decl(&mut self) -> PResult<()> {
        self.next();
        let (name, name_tok) = self.expect_ident()?;
        if self.doc.spec(&name).is_some() {
            return Err(err_at(&name_tok, format!("spec '{name}' declared twice")));
        }
        self.expect_sym("{")?;
        let mut n = None;
        let mut parity = None;
        let mut delta: Option<(Token, Vec<RawWeight>)> = None;
        let mut lengths: Option<Vec<usize>> = None;
        let mut base = 0usize;
        let mut dims: Vec<(Token, RawWeight, usize)> = Vec::new();
        let mut quotient = None;
        let mut names = None;
        loop {
            self.skip_separators();
            if self.eat_sym("}") {
                break;
            }
            let (field, ft) = self.expect_ident()?;
            self.expect_sym("=")?;
            match field.as_str() {
                "n" => n = Some(self.expect_int()?),
                "parity" => parity = Some(self.parity_value()?),
                "delta" => delta = Some((ft, self.weight_set()?)),
                "lengths" => lengths = Some(self.int_set()?),
                "base" => base = self.expect_int()?,
                "quotient" => quotient = Some(self.bool_value()?),
                "names" => {
                    let (b, _) = self.expect_ident()?;
                    self.expect_sym(",")?;
                    let (f, _) = self.expect_ident()?;
                    names = Some(VariableNames::new(b, f));
                }
                "dims" => {
                    self.expect_sym("{")?;
                    if !self.eat_sym("}") {
                        loop {
                            let kt = self.peek().clone();
                            let key = self.raw_weight()?;
                            self.expect_sym(":")?;
                            let d = self.expect_int()?;
                            dims.push((kt, key, d));
                            if self.eat_sym("}") {
                                break;
                            }
                            self.expect_sym(",")?;
                        }
                    }
                }
                _ => return Err(err_at(&ft, format!("unknown spec field '{field}'"))),
            }
        }
        let parity = parity.unwrap_or(self.parity);
        let spec = if let Some(ls) = lengths {
            if delta.is_some() {
                return Err(err_at(&name_tok, "a spec has either 'delta' or 'lengths', not both"));
            }
            let mut by_len = Vec::new();
            for (kt, key, d) in &dims {
                match key {
                    RawWeight::Int(k) => by_len.push((*k, *d)),
                    RawWeight::Terms(_) => return Err(err_at(kt, "type-L dims are keyed by length")),
                }
            }
            let mut spec = AlgebraSpec::l_type(QuotientLabel::new(ls, parity), base, by_len).map_err(|e| err_at(&name_tok, e))?;
            if let Some(q) = quotient {
                spec = spec.with_quotient(q).map_err(|e| err_at(&name_tok, e))?;
            }
            spec
        } else {
            let (dt, ws) = match delta.or_else(|| self.delta.clone()) {
                Some(d) => d,
                None => return Err(err_at(&name_tok, "spec needs 'delta' or 'lengths'")),
            };
            let n = n.or(self.n);
            let sys = self.build_system(&dt, n, parity, &ws)?;
            let rank = sys.n();
            let mut by_weight: BTreeMap<Weight, usize> = BTreeMap::new();
            for (kt, key, d) in &dims {
                match key {
                    RawWeight::Int(k) => {
                        for w in sys.nonzero().filter(|w| w.length() == *k) {
                            by_weight.insert(w.clone(), *d);
                        }
                    }
                    RawWeight::Terms(_) => {
                        by_weight.insert(Self::to_weight(kt, key, rank)?, *d);
                    }
                }
            }
            AlgebraSpec::delta_type(sys, base, by_weight, quotient.unwrap_or(true)).map_err(|e| err_at(&name_tok, e))?
        };
        let spec = match names {
            Some(nm) => spec.with_names(nm),
            None => spec,
        };
        self.doc.items.push(Item::Spec {
            name,
            spec: Arc::new(spec),
        });
        Ok(())
    }

    fn lookup_spec(&self, name: &str, t: &Token) -> PResult<Arc<AlgebraSpec>> {
        self.doc
            .spec(name)
            .cloned()
            .ok_or_else(|| err_at(t, format!("unknown spec '{name}'")))
    }

    fn poly_decl(&mut self) -> PResult<()> {
        self.next();
        let (name, _) = self.expect_ident()?;
        self.expect_sym(":")?;
        let (sname, st) = self.expect_ident()?;
        let spec = self.lookup_spec(&sname, &st)?;
        self.expect_sym("=")?;
        let poly = self.expr(&spec)?;
        self.doc.items.push(Item::Poly { name, spec: sname, poly });
        Ok(())
    }

    /// Fiber variable label and index inside `name[ ... ]`.
    fn fiber_label(&mut self, spec: &AlgebraSpec) -> PResult<FiberVar> {
        self.expect_sym("[")?;
        let wt = self.peek().clone();
        let raw = self.raw_weight()?;
        let weight = if spec.is_delta_type() {
            Self::to_weight(&wt, &raw, spec.rank())?
        } else {
            match raw {
                RawWeight::Int(k) => Weight::new(vec![k as u32]),
                RawWeight::Terms(_) => return Err(err_at(&wt, "type-L coordinates are labelled by length")),
            }
        };
        self.expect_sym(",")?;
        let it = self.peek().clone();
        let index = self.expect_int()?;
        self.expect_sym("]")?;
        let v = FiberVar::new(weight, index as u32);
        if !spec.contains_var(&v) {
            return Err(err_at(
                &it,
                format!(
                    "unknown variable {}[{},{}]",
                    spec.names().fiber,
                    spec.weight_label(&v.weight),
                    index
                ),
            ));
        }
        Ok(v)
    }

    fn base_index(spec: &AlgebraSpec, ident: &str) -> Option<usize> {
        let rest = ident.strip_prefix(spec.names().base.as_str())?;
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        rest.parse().ok()
    }

    fn expr(&mut self, spec: &Arc<AlgebraSpec>) -> PResult<Polynomial> {
        let negate = if self.eat_sym("-") {
            true
        } else {
            self.eat_sym("+");
            false
        };
        let mut acc = self.term(spec)?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat_sym("+") {
                acc = &acc + &self.term(spec)?;
            } else if self.eat_sym("-") {
                acc = &acc - &self.term(spec)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, spec: &Arc<AlgebraSpec>) -> PResult<Polynomial> {
        let mut acc = self.power(spec)?;
        while self.eat_sym("*") {
            let f = self.power(spec)?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn power(&mut self, spec: &Arc<AlgebraSpec>) -> PResult<Polynomial> {
        let base = self.atom(spec)?;
        if self.eat_sym("^") {
            let e = self.expect_int()?;
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn atom(&mut self, spec: &Arc<AlgebraSpec>) -> PResult<Polynomial> {
        let t = self.next();
        match &t.tok {
            Tok::Int(s) => {
                let num: BigInt = s.parse().map_err(|_| err_at(&t, "bad integer"))?;
                let value = if self.eat_sym("/") {
                    let dt = self.peek().clone();
                    let den: BigInt = match &self.next().tok {
                        Tok::Int(d) => d.parse().map_err(|_| err_at(&dt, "bad integer"))?,
                        other => return Err(err_at(&dt, format!("expected a denominator, found {other}"))),
                    };
                    if den == BigInt::from(0) {
                        return Err(err_at(&dt, "division by zero"));
                    }
                    BigRational::new(num, den)
                } else {
                    BigRational::from_integer(num)
                };
                Ok(Polynomial::constant(spec, value))
            }
            Tok::Sym("(") => {
                let inner = self.expr(spec)?;
                self.expect_sym(")")?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                if *name == spec.names().fiber && self.is_sym("[") {
                    let v = self.fiber_label(spec)?;
                    return Polynomial::fiber_var(spec, v).map_err(|e| err_at(&t, e));
                }
                if let Some(i) = Self::base_index(spec, name) {
                    return Polynomial::base_var(spec, i).map_err(|e| err_at(&t, e));
                }
                Err(err_at(&t, format!("unknown variable '{name}'")))
            }
            other => Err(err_at(&t, format!("expected a term, found {other}"))),
        }
    }

    /// `lhs <- expr` lines of a morphism body; unlisted coordinates map to the
    /// coordinate of the same name in the source, when there is one.
    fn assignments(
        &mut self,
        source: &Arc<AlgebraSpec>,
        target: &Arc<AlgebraSpec>,
        at: &Token,
    ) -> PResult<GradedMorphism> {
        self.expect_sym("{")?;
        let mut base: BTreeMap<usize, Polynomial> = BTreeMap::new();
        let mut fiber: BTreeMap<FiberVar, Polynomial> = BTreeMap::new();
        loop {
            self.skip_separators();
            if self.eat_sym("}") {
                break;
            }
            let (name, nt) = self.expect_ident()?;
            if name == target.names().fiber && self.is_sym("[") {
                let v = self.fiber_label(target)?;
                self.expect_sym("<-")?;
                let rhs = self.expr(source)?;
                if fiber.insert(v, rhs).is_some() {
                    return Err(err_at(&nt, "coordinate assigned twice"));
                }
            } else if let Some(i) = Self::base_index(target, &name).filter(|&i| i >= 1 && i <= target.base_dim()) {
                self.expect_sym("<-")?;
                let rhs = self.expr(source)?;
                if base.insert(i, rhs).is_some() {
                    return Err(err_at(&nt, "coordinate assigned twice"));
                }
            } else {
                return Err(err_at(&nt, format!("'{name}' is not a coordinate of the target")));
            }
        }
        let weight_map = match (source.is_delta_type(), target.is_delta_type()) {
            (true, false) => WeightMap::Length,
            (a, b) if a == b => WeightMap::Identity,
            _ => return Err(err_at(at, "no graded morphism from a type-L to a type-Δ domain")),
        };
        let mut base_images = Vec::new();
        for i in 1..=target.base_dim() {
            match base.remove(&i) {
                Some(p) => base_images.push(p),
                None if i <= source.base_dim() => base_images.push(Polynomial::base_var(source, i).map_err(|e| err_at(at, e))?),
                None => {
                    return Err(err_at(at, format!("no image given for {}{i}", target.names().base)));
                }
            }
        }
        let mut images = Vec::new();
        for v in target.fiber_vars() {
            match fiber.remove(&v) {
                Some(p) => images.push((v, p)),
                None if weight_map == WeightMap::Identity && source.contains_var(&v) => {
                    images.push((v.clone(), Polynomial::fiber_var(source, v).map_err(|e| err_at(at, e))?))
                }
                None => {
                    return Err(err_at(
                        at,
                        format!(
                            "no image given for {}[{},{}]",
                            target.names().fiber,
                            target.weight_label(&v.weight),
                            v.index
                        ),
                    ))
                }
            }
        }
        GradedMorphism::new(source, target, base_images, images, weight_map).map_err(|e| err_at(at, e))
    }

    fn morphism_decl(&mut self) -> PResult<()> {
        let at = self.next();
        let (name, _) = self.expect_ident()?;
        self.expect_sym(":")?;
        let (sname, st) = self.expect_ident()?;
        self.expect_sym("->")?;
        let (tname, tt) = self.expect_ident()?;
        let source = self.lookup_spec(&sname, &st)?;
        let target = self.lookup_spec(&tname, &tt)?;
        let morphism = self.assignments(&source, &target, &at)?;
        self.doc.items.push(Item::Morphism {
            name,
            source: sname,
            target: tname,
            morphism,
        });
        Ok(())
    }

    fn atlas_decl(&mut self) -> PResult<()> {
        let at = self.next();
        let (name, _) = self.expect_ident()?;
        self.expect_sym("{")?;
        let mut chart_names = Vec::new();
        let mut charts = Vec::new();
        let mut transitions = Vec::new();
        let mut triples = Vec::new();
        loop {
            self.skip_separators();
            if self.eat_sym("}") {
                break;
            }
            let (kw, kt) = self.expect_ident()?;
            match kw.as_str() {
                "chart" => {
                    let (cname, ct) = self.expect_ident()?;
                    charts.push(self.lookup_spec(&cname, &ct)?);
                    chart_names.push(cname);
                }
                "transition" => {
                    let it = self.peek().clone();
                    let i = self.expect_int()?;
                    self.expect_sym("->")?;
                    let j = self.expect_int()?;
                    if i == 0 || j == 0 || i > charts.len() || j > charts.len() {
                        return Err(err_at(&it, format!("transition {i} -> {j} names an undeclared chart")));
                    }
                    let m = self.assignments(&charts[i - 1].clone(), &charts[j - 1].clone(), &kt)?;
                    transitions.push(((i - 1, j - 1), m));
                }
                "triple" => {
                    let it = self.peek().clone();
                    self.expect_sym("(")?;
                    let i = self.expect_int()?;
                    self.expect_sym(",")?;
                    let j = self.expect_int()?;
                    self.expect_sym(",")?;
                    let k = self.expect_int()?;
                    self.expect_sym(")")?;
                    if [i, j, k].contains(&0) {
                        return Err(err_at(&it, "charts are numbered from 1"));
                    }
                    triples.push((i - 1, j - 1, k - 1));
                }
                _ => return Err(err_at(&kt, format!("unknown atlas entry '{kw}'"))),
            }
        }
        let atlas = Atlas::new(charts, transitions, triples).map_err(|e| err_at(&at, e))?;
        self.doc.items.push(Item::Atlas {
            name,
            charts: chart_names,
            atlas,
        });
        Ok(())
    }
}

pub fn parse_document(src: &str) -> Result<Document, ParseError> {
    Parser::new(src)?.document()
}

/// Parses a polynomial expression over `spec`.
pub fn parse_polynomial(src: &str, spec: &Arc<AlgebraSpec>) -> Result<Polynomial, ParseError> {
    let mut p = Parser::new(src)?;
    let poly = p.expr(spec)?;
    let t = p.peek();
    if t.tok != Tok::Eof {
        return Err(err_at(t, format!("unexpected {} after expression", t.tok)));
    }
    Ok(poly)
}

/// Parses `a1+a3`, `2a1` or `0` in rank `n`.
pub fn parse_weight(src: &str, n: usize) -> Result<Weight, ParseError> {
    let mut p = Parser::new(src)?;
    let t = p.peek().clone();
    let raw = p.raw_weight()?;
    let end = p.peek();
    if end.tok != Tok::Eof {
        return Err(err_at(end, format!("unexpected {} after weight", end.tok)));
    }
    Parser::to_weight(&t, &raw, n)
}

/// The top-level weight system of a document (`n`, `parity`, `delta` lines).
pub fn parse_weight_system(src: &str) -> Result<WeightSystem, ParseError> {
    parse_document(src)?
        .weight_system
        .ok_or_else(|| ParseError::new(1, 1, "no 'delta = {...}' statement"))
}
