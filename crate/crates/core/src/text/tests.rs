use super::*;
use crate::algebra::Polynomial;
use crate::weights::{Parity, Weight};

const DECK: &str = "
n = 2
parity = odd
delta = {0, a1, a2, a1+a2}
spec U { parity = odd lengths = {0, 1, 2} base = 1 dims = {1: 2, 2: 1} }
spec V { n = 2 parity = odd delta = {0, a1, a2, a1+a2} base = 1 dims = {1: 2, 2: 1} }
poly F : V = 3/2*t[a1,1]*t[a2,2] - y1^2*t[a1+a2,1] + 1
morphism p : V -> U {
  xi[1,1] <- t[a1,1] + t[a2,1]
  xi[1,2] <- t[a1,2] + t[a2,2]
  xi[2,1] <- t[a1+a2,1]
}
atlas A {
  chart U
  chart U
  transition 1 -> 2 { xi[1,1] <- -xi[1,1] }
  transition 2 -> 1 { xi[1,1] <- -xi[1,1] }
  triple (1, 2, 1)
}
";

#[test]
fn weight_system_line() {
    let sys = parse_weight_system("delta = {0, a1, a2}").unwrap();
    assert_eq!(sys.n(), 2);
    assert_eq!(sys.members().len(), 3);
    let sys = parse_weight_system("n = 3\nparity = odd\ndelta = {0, a2}").unwrap();
    assert_eq!((sys.n(), sys.generator_parity()), (3, Parity::Odd));
}

#[test]
fn weights() {
    assert_eq!(parse_weight("a1+a3", 3).unwrap(), Weight::new(vec![1, 0, 1]));
    assert_eq!(parse_weight("2a1", 2).unwrap(), Weight::new(vec![2, 0]));
    assert_eq!(parse_weight("0", 2).unwrap(), Weight::zero(2));
    assert!(parse_weight("a4", 3).is_err());
}

#[test]
fn monomial_weight() {
    let doc = parse_document(DECK).unwrap();
    let v = doc.spec("V").unwrap();
    let p = parse_polynomial("t[a1,1]*t[a2,1]", v).unwrap();
    assert_eq!(p.total_weights().into_iter().collect::<Vec<_>>(), vec![Weight::new(vec![1, 1])]);
}

#[test]
fn malformed_index_reports_column() {
    let doc = parse_document(DECK).unwrap();
    let v = doc.spec("V").unwrap();
    let e = parse_polynomial("t[a1,]", v).unwrap_err();
    assert_eq!((e.line, e.column), (1, 6));
    let e = parse_document("spec V { n = 2 delta = {0, a1} dims = {a1: 1} }\npoly F : V = 2*t[a1,]").unwrap_err();
    assert_eq!((e.line, e.column), (2, 21));
    assert!(e.to_string().starts_with("line 2, column 21: "));
}

#[test]
fn semantic_errors_have_locations() {
    let doc = parse_document(DECK).unwrap();
    let v = doc.spec("V").unwrap();
    let e = parse_polynomial("y1 + t[a1,3]", v).unwrap_err();
    assert_eq!(e.column, 11);
    let e = parse_polynomial("z1", v).unwrap_err();
    assert_eq!(e.column, 1);
    let e = parse_polynomial("t[2a1,1]", v).unwrap_err();
    assert_eq!(e.column, 7);
    let e = parse_document("spec U { lengths = {0, 1} dims = {1: 1} }\nmorphism m : U -> U {\n  xi[1,1] <- xi[1,1]^2\n}").unwrap_err();
    assert_eq!(e.line, 2);
    let e = parse_document("bogus = 1").unwrap_err();
    assert_eq!((e.line, e.column), (1, 1));
}

#[test]
fn canonical_printing() {
    let doc = parse_document(DECK).unwrap();
    let (_, f) = doc.polys().next().unwrap();
    assert_eq!(f.to_string(), "1 + 3/2*t[a1,1]*t[a2,2] - y1^2*t[a1+a2,1]");
    assert_eq!(Polynomial::zero(f.spec()).to_string(), "0");
}

#[test]
fn document_round_trip() {
    let doc = parse_document(DECK).unwrap();
    let printed = print_document(&doc);
    let again = parse_document(&printed).unwrap();
    assert_eq!(print_document(&again), printed);
    for ((_, a), (_, b)) in doc.polys().zip(again.polys()) {
        assert_eq!(a, b);
    }
    for ((_, a), (_, b)) in doc.morphisms().zip(again.morphisms()) {
        assert!(a.equals(b).unwrap());
    }
    for ((_, a), (_, b)) in doc.specs().zip(again.specs()) {
        assert!(a.same_algebra(b));
        assert_eq!(a.names(), b.names());
    }
    assert_eq!(again.atlases().count(), 1);
}
