use super::*;
use crate::graph::{complete, cycle, disjoint_union, path};
use crate::poly::{falling_factorial, rat};

fn p(token: &str) -> Property {
    token.parse().unwrap()
}

fn eng() -> Engine {
    Engine::default()
}

fn e5() -> Graph {
    Graph::empty(5)
}

#[test]
fn bell_numbers() {
    let b: Vec<String> = (0..=6).map(|n| bell(n).to_string()).collect();
    assert_eq!(b, ["1", "1", "2", "5", "15", "52", "203"]);
    assert_eq!(bell(11).to_string(), "678570");
}

#[test]
fn brute_examples() {
    let e = eng();
    assert_eq!(e.brute_count_at(&complete(3), &p("proper"), 3).unwrap(), 6);
    assert_eq!(e.brute_count_at(&path(3), &p("convex"), 2).unwrap(), 6);
    assert_eq!(e.brute_count_at(&path(4), &p("trivial"), 3).unwrap(), 81);
    assert_eq!(e.brute_count_at(&Graph::empty(0), &p("proper"), 0).unwrap(), 1);
    assert_eq!(e.brute_count_at(&complete(1), &p("proper"), 0).unwrap(), 0);
}

#[test]
fn budget_is_enforced() {
    let e = Engine::new(10_000, 1);
    let err = e.brute_count_at(&Graph::empty(20), &p("trivial"), 2).unwrap_err();
    assert!(matches!(err, CountError::Budget { .. }));
    assert!(matches!(e.chi_polynomial(&Graph::empty(12), &p("trivial")), Err(CountError::Budget { .. })));
}

#[test]
fn exact_color_examples() {
    let e = eng();
    let k3 = complete(3);
    let counts: Vec<BigInt> = (1..=3).map(|i| e.exact_color_count(&k3, &p("proper"), i).unwrap()).collect();
    assert_eq!(counts, [0, 0, 6].map(BigInt::from));
    assert_eq!(e.exact_color_count(&complete(2), &p("harmonious"), 2).unwrap(), BigInt::from(2));
    assert_eq!(e.exact_color_count(&complete(2), &p("harmonious"), 1).unwrap(), BigInt::from(0));
    assert_eq!(e.exact_color_count(&complete(1), &p("convex"), 1).unwrap(), BigInt::from(1));
    assert_eq!(e.exact_color_count(&complete(1), &p("convex"), 4).unwrap(), BigInt::from(0));
    let two_k2 = disjoint_union(&complete(2), &complete(2)).unwrap();
    assert_eq!(e.hat_chi(&two_k2, &p("du:H=K2"), 1).unwrap(), BigInt::from(1));
}

#[test]
fn polynomial_examples() {
    let e = eng();
    let k3 = e.chi_polynomial(&complete(3), &p("proper")).unwrap();
    assert_eq!(k3.to_monomial().coeffs(), &[rat(0), rat(2), rat(-3), rat(1)]);
    assert_eq!(
        e.chi_polynomial(&Graph::empty(2), &p("trivial")).unwrap(),
        Poly::from_ints(Basis::Monomial, &[0, 0, 1])
    );
    let harm = e.chi_polynomial(&complete(2), &p("harmonious")).unwrap();
    assert_eq!(harm.coeffs(), &[rat(0), rat(0), rat(2)]);
    assert_eq!(harm, falling_factorial(2));
    assert_eq!(e.chi_polynomial(&Graph::empty(0), &p("convex")).unwrap(), Poly::constant(rat(1)));
}

#[test]
fn non_polynomial_properties_are_refused() {
    let e = eng();
    let err = e.chi_polynomial(&complete(3), &Property::SurjectiveProper).unwrap_err();
    assert!(matches!(err, CountError::NotPolynomial { .. }));
    let err = e.chi_polynomial(&path(3), &Property::DegreeColor).unwrap_err();
    assert!(matches!(err, CountError::NotPolynomial { .. }));
    // degree-color on P3: the only candidate is (2,3,2), which needs three colors
    assert_eq!(e.counts_at(&path(3), &Property::DegreeColor, 0..=4).unwrap(), [(0, 0), (1, 0), (2, 0), (3, 1), (4, 1)]);
}

#[test]
fn audit_examples() {
    let e = eng();
    assert!(e.zilber_audit(&path(3), &p("proper"), 3).unwrap().passes());
    let phi1 = e.zilber_audit(&complete(3), &Property::SurjectiveProper, 4).unwrap();
    assert!(phi1.condition_b.is_some());
    let phi2 = e.zilber_audit(&path(3), &Property::DegreeColor, 4).unwrap();
    assert!(phi2.condition_a.is_some());
    assert!(phi2.condition_b.is_none());
    // rows cover every subset of every palette
    assert_eq!(phi2.rows.len(), 2 + 4 + 8 + 16);
}

#[test]
fn degree_color_audit_on_star_detects_a() {
    // K_{1,2} center has degree 2 (color 3), leaves degree 1 (color 2): proper
    let e = eng();
    let g = crate::graph::star(2);
    let r = e.zilber_audit(&g, &Property::DegreeColor, 3).unwrap();
    let a = r.condition_a.unwrap();
    assert_eq!(a.k, 3);
    assert!(r.condition_b.is_none());
}

#[test]
fn harmonious_fast_examples() {
    let e = eng();
    let k3_e10 = disjoint_union(&complete(3), &Graph::empty(10)).unwrap();
    assert_eq!(e.harmonious_fast(&k3_e10, 2).unwrap(), BigInt::from(0));
    let k2_e5 = disjoint_union(&complete(2), &e5()).unwrap();
    assert_eq!(e.harmonious_fast(&k2_e5, 3).unwrap(), BigInt::from(1458));
    assert_eq!(e.brute_count_at(&k2_e5, &p("harmonious"), 3).unwrap(), 1458);
    assert_eq!(e.harmonious_fast(&Graph::empty(4), 2).unwrap(), BigInt::from(16));
}

#[test]
fn convex_fast_examples() {
    let e = eng();
    assert_eq!(e.convex_fast(&path(3), 2).unwrap(), BigInt::from(6));
    let two_k2 = disjoint_union(&complete(2), &complete(2)).unwrap();
    assert_eq!(e.convex_fast(&two_k2, 2).unwrap(), BigInt::from(2));
    assert_eq!(e.convex_fast(&complete(3), 1).unwrap(), BigInt::from(1));
    assert_eq!(e.convex_fast(&complete(3), 0).unwrap(), BigInt::from(0));
    assert_eq!(e.convex_fast(&Graph::empty(3), 2).unwrap(), BigInt::from(0));
    assert!(e.convex_fast(&complete(3), 3).is_err());
}

#[test]
fn edge_chi_examples() {
    let e = eng();
    assert_eq!(e.edge_chi(&complete(3), 3).unwrap(), BigInt::from(6));
    assert_eq!(e.edge_chi(&path(3), 2).unwrap(), BigInt::from(2));
    assert_eq!(e.edge_chi(&complete(2), 0).unwrap(), BigInt::from(0));
    assert_eq!(e.brute_count_at(&complete(3), &p("edge"), 3).unwrap(), 6);
}

#[test]
fn join_chain_recovers_path_polynomial() {
    let e = eng();
    let target = e.chi_polynomial(&path(3), &p("proper")).unwrap();
    let r = e.interpolation_chain(&path(3), &p("proper"), Construction::JoinKn, Some(3), Some(6)).unwrap();
    assert_eq!(r.poly, target);
    // X(X-1)^2
    assert_eq!(target.to_monomial().coeffs(), &[rat(0), rat(1), rat(-2), rat(1)]);
    let r = e.interpolation_chain(&path(3), &p("proper"), Construction::JoinKn, None, None).unwrap();
    assert_eq!(r.point, 4);
    assert_eq!(r.poly, target);
}

#[test]
fn box_chain_recovers_du_polynomial() {
    let e = eng();
    let prop = p("du:H=K3");
    let target = e.chi_polynomial(&complete(3), &prop).unwrap();
    assert_eq!(target.coeffs(), &[rat(0), rat(1)]);
    let r = e.interpolation_chain(&complete(3), &prop, Construction::BoxJoinH, None, Some(4)).unwrap();
    assert_eq!(r.poly, target);
}

#[test]
fn star_chain_recovers_chromatic_polynomial() {
    let e = eng();
    let target = e.chi_polynomial(&complete(2), &p("proper")).unwrap();
    let r = e.interpolation_chain(&complete(2), &p("proper"), Construction::DisjointStar, None, None).unwrap();
    assert_eq!(r.poly, target);
}

#[test]
fn chain_errors() {
    let e = eng();
    let err = e.interpolation_chain(&path(3), &p("convex"), Construction::JoinKn, None, None).unwrap_err();
    assert!(matches!(err, CountError::NotApplicable { .. }));
    let err = e.interpolation_chain(&path(3), &p("proper"), Construction::JoinKn, Some(1), None).unwrap_err();
    assert!(matches!(err, CountError::TooFewPoints { .. }));
    let err = e.interpolation_chain(&path(3), &p("proper"), Construction::JoinKn, Some(3), Some(2)).unwrap_err();
    assert!(matches!(err, CountError::CofactorZero(2)));
}

#[test]
fn worker_count_does_not_change_results() {
    let g = cycle(7).unwrap();
    let one = Engine::new(DEFAULT_BUDGET, 1);
    let four = Engine::new(DEFAULT_BUDGET, 4);
    for prop in Property::named() {
        assert_eq!(one.chi_polynomial(&g, &prop).unwrap(), four.chi_polynomial(&g, &prop).unwrap(), "{prop}");
        assert_eq!(one.brute_count_at(&g, &prop, 3).unwrap(), four.brute_count_at(&g, &prop, 3).unwrap());
    }
    assert_eq!(
        one.zilber_audit(&g, &Property::SurjectiveProper, 3).unwrap(),
        four.zilber_audit(&g, &Property::SurjectiveProper, 3).unwrap()
    );
}
