use std::fmt::{self, Write};

use itertools::Itertools;
use num::{One, Signed};

use super::parser::{Document, Item};
use crate::algebra::{AlgebraSpec, BaseMonomial, FiberMonomial, Polynomial, Scalar};
use crate::atlas::Atlas;
use crate::morphism::GradedMorphism;
use crate::weights::WeightSystem;

fn monomial_text(spec: &AlgebraSpec, bm: &BaseMonomial, m: &FiberMonomial) -> Vec<String> {
    let mut parts = Vec::new();
    let names = spec.names();
    for (i, &e) in bm.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("{}{}", names.base, i + 1)),
            _ => parts.push(format!("{}{}^{e}", names.base, i + 1)),
        }
    }
    for (v, e) in m.factors() {
        let var = format!("{}[{},{}]", names.fiber, spec.weight_label(&v.weight), v.index);
        if *e == 1 {
            parts.push(var);
        } else {
            parts.push(format!("{var}^{e}"));
        }
    }
    parts
}

impl fmt::Display for Polynomial {
    /// Terms in canonical order, e.g. `y1 - 3/2*t[a1,1]*t[a2,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            for (bm, x) in c.terms() {
                let parts = monomial_text(self.spec(), bm, m);
                let neg = x.is_negative();
                let abs: Scalar = x.abs();
                match (first, neg) {
                    (true, true) => f.write_str("-")?,
                    (true, false) => {}
                    (false, true) => f.write_str(" - ")?,
                    (false, false) => f.write_str(" + ")?,
                }
                first = false;
                if parts.is_empty() {
                    write!(f, "{abs}")?;
                } else if abs.is_one() {
                    f.write_str(&parts.join("*"))?;
                } else {
                    write!(f, "{abs}*{}", parts.join("*"))?;
                }
            }
        }
        Ok(())
    }
}

pub fn print_weight_system(sys: &WeightSystem) -> String {
    format!(
        "n = {}\nparity = {}\ndelta = {{{}}}\n",
        sys.n(),
        sys.generator_parity(),
        sys.members().iter().map(|w| w.to_string()).join(", ")
    )
}

pub fn print_spec(name: &str, spec: &AlgebraSpec) -> String {
    let mut s = format!("spec {name} {{\n");
    match (spec.weight_system(), spec.label()) {
        (Some(sys), _) => {
            let _ = writeln!(s, "  n = {}", sys.n());
            let _ = writeln!(s, "  parity = {}", sys.generator_parity());
            let _ = writeln!(s, "  delta = {{{}}}", sys.members().iter().map(|w| w.to_string()).join(", "));
        }
        (None, Some(label)) => {
            let _ = writeln!(s, "  parity = {}", label.beta_parity());
            let _ = writeln!(s, "  lengths = {{{}}}", label.lengths().iter().join(", "));
        }
        (None, None) => unreachable!("a spec has a grading"),
    }
    let _ = writeln!(s, "  base = {}", spec.base_dim());
    let dims = spec
        .fiber_dims()
        .iter()
        .map(|(w, d)| format!("{}: {d}", spec.weight_label(w)))
        .join(", ");
    let _ = writeln!(s, "  dims = {{{dims}}}");
    let _ = writeln!(s, "  quotient = {}", spec.is_quotient());
    let _ = writeln!(s, "  names = {}, {}", spec.names().base, spec.names().fiber);
    s.push_str("}\n");
    s
}

pub fn print_poly_decl(name: &str, spec_name: &str, p: &Polynomial) -> String {
    format!("poly {name} : {spec_name} = {p}\n")
}

fn assignments(m: &GradedMorphism, indent: &str) -> String {
    let mut s = String::new();
    let t = m.target();
    for (i, p) in m.base_images().iter().enumerate() {
        let _ = writeln!(s, "{indent}{}{} <- {p}", t.names().base, i + 1);
    }
    for (v, p) in m.fiber_images() {
        let _ = writeln!(
            s,
            "{indent}{}[{},{}] <- {p}",
            t.names().fiber,
            t.weight_label(&v.weight),
            v.index
        );
    }
    s
}

pub fn print_morphism(name: &str, source: &str, target: &str, m: &GradedMorphism) -> String {
    format!("morphism {name} : {source} -> {target} {{\n{}}}\n", assignments(m, "  "))
}

pub fn print_atlas(name: &str, charts: &[String], a: &Atlas) -> String {
    let mut s = format!("atlas {name} {{\n");
    for c in charts {
        let _ = writeln!(s, "  chart {c}");
    }
    for (&(i, j), t) in a.transitions() {
        let _ = writeln!(s, "  transition {} -> {} {{", i + 1, j + 1);
        s.push_str(&assignments(t, "    "));
        s.push_str("  }\n");
    }
    for &(i, j, k) in a.triples() {
        let _ = writeln!(s, "  triple ({}, {}, {})", i + 1, j + 1, k + 1);
    }
    s.push_str("}\n");
    s
}

pub fn print_document(doc: &Document) -> String {
    let mut blocks = Vec::new();
    if let Some(sys) = &doc.weight_system {
        blocks.push(print_weight_system(sys));
    }
    for item in &doc.items {
        blocks.push(match item {
            Item::Spec { name, spec } => print_spec(name, spec),
            Item::Poly { name, spec, poly } => print_poly_decl(name, spec, poly),
            Item::Morphism {
                name,
                source,
                target,
                morphism,
            } => print_morphism(name, source, target, morphism),
            Item::Atlas { name, charts, atlas } => print_atlas(name, charts, atlas),
        });
    }
    blocks.join("\n")
}
