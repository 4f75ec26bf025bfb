use num_bigint::BigInt;

use super::*;
use crate::count::Engine;
use crate::graph::{complete, count_cocircuits, cycle, path, stretch};

fn cnf(text: &str) -> CnfInstance {
    parse_cnf(text).unwrap()
}

fn nae(num_vars: usize, clauses: &[&[i32]]) -> CnfInstance {
    let w = clauses.first().map_or(3, |c| c.len());
    CnfInstance::new(num_vars, clauses.iter().map(|c| c.to_vec()).collect(), Semantics::Nae(w)).unwrap()
}

#[test]
fn parsing() {
    let c = cnf("p cnf 3 1\nc semantics nae3\n1 2 3 0\n");
    assert_eq!(c.clauses(), &[vec![1, 2, 3]]);
    assert_eq!(c.semantics(), Semantics::Nae(3));
    assert_eq!(parse_cnf(&c.to_dimacs()).unwrap(), c);
    // clauses may span lines
    let c = cnf("c semantics 2of4\np cnf 4 1\n1 -2\n3 4 0\n");
    assert_eq!(c.semantics(), Semantics::AlphaOf2Alpha(2));
    assert_eq!(c.clauses(), &[vec![1, -2, 3, 4]]);
}

#[test]
fn parse_errors() {
    let e = parse_cnf("p cnf 2 1\nc semantics monotone2sat\n1 -2 0\n").unwrap_err();
    assert!(matches!(e, GadgetError::NegativeLiteral { clause: 1 }));
    let e = parse_cnf("p cnf 3 1\nc semantics 2of4\n1 2 3 0\n").unwrap_err();
    assert!(matches!(e, GadgetError::Width { expected: 4, got: 3, .. }));
    let e = parse_cnf("p cnf 3 1\nc semantics nae3\n1 2 1 0\n").unwrap_err();
    assert!(matches!(e, GadgetError::RepeatedVariable { var: 1, .. }));
    let e = parse_cnf("p cnf 2 1\nc semantics nae3\n1 2 3 0\n").unwrap_err();
    assert!(matches!(e, GadgetError::VariableOutOfRange { var: 3, .. }));
    assert!(matches!(parse_cnf("p cnf 3 1\n1 2 3 0\n"), Err(GadgetError::Parse { .. })));
    assert!(matches!(parse_cnf("p cnf 3 2\nc semantics nae3\n1 2 3 0\n"), Err(GadgetError::Parse { .. })));
    assert!(matches!(parse_cnf("p cnf 3 1\nc semantics nae3\n1 2 3\n"), Err(GadgetError::Parse { .. })));
    assert!(matches!(parse_cnf("p cnf 3 1\nc semantics nae3\n1 two 3 0\n"), Err(GadgetError::Parse { .. })));
    assert!(matches!(parse_cnf("p cnf 3 1\nc semantics nae2\n1 2 0\n"), Err(GadgetError::BadSemantics(_))));
}

#[test]
fn model_counts() {
    assert_eq!(count_models(&nae(3, &[&[1, 2, 3]])).unwrap(), 6);
    assert_eq!(count_models(&cnf("p cnf 4 1\nc semantics 2of4\n1 2 3 4 0\n")).unwrap(), 6);
    assert_eq!(count_models(&cnf("p cnf 2 1\nc semantics monotone2sat\n1 2 0\n")).unwrap(), 3);
    let big = CnfInstance::new(25, vec![], Semantics::Monotone2Sat).unwrap();
    assert!(matches!(count_models(&big), Err(GadgetError::TooManyVariables { .. })));
}

#[test]
fn nae_gadget_shapes() {
    let g = nae_to_mcc(&nae(4, &[&[1, 2, 3, 4]]), 3).unwrap();
    assert_eq!((g.n(), g.e()), (6, 15));
    let g = nae_to_mcc(&nae(5, &[&[1, 2, 3], &[1, 4, 5]]), 2).unwrap();
    assert_eq!((g.n(), g.e()), (9, 14));
    assert_eq!(g.label(8), Some("b1"));
    assert_eq!(g.label(3), Some("c1.1"));
    assert!(nae_to_mcc(&nae(4, &[&[1, 2, 3, 4]]), 2).is_err());
}

#[test]
fn nae_gadget_is_parsimonious_for_t2_on_positive_instances() {
    let e = Engine::default();
    for (vars, clauses) in [(3, &[&[1, 2, 3][..]][..]), (4, &[&[1, 2, 3], &[2, 3, 4]]), (3, &[&[1, 2, 3], &[1, 2, 3]])]
    {
        let c = certify_nae_mcc(&e, &nae(vars, clauses), 2).unwrap();
        assert!(c.matches, "{clauses:?}: {c:?}");
    }
}

#[test]
fn variables_outside_every_clause_double_the_models() {
    let c = certify_nae_mcc(&Engine::default(), &nae(4, &[&[1, 2, 3]]), 2).unwrap();
    assert_eq!((c.models, c.colorings), (12, 6));
}

#[test]
fn nae_gadget_counts_clause_completions_for_t3() {
    // a K_6 clause clique with a true literals has C(2, 3-a) completions
    let e = Engine::default();
    let c = certify_nae_mcc(&e, &nae(4, &[&[1, 2, 3, 4]]), 3).unwrap();
    assert_eq!((c.models, c.colorings, c.weighted_models), (14, 20, 20));
    assert!(!c.matches);
}

#[test]
fn nae_gadget_with_negations_loses_the_link() {
    // bridges join equal literals only, so x1 and -x1 are colored independently
    let e = Engine::default();
    let c = certify_nae_mcc(&e, &nae(4, &[&[1, 2, 3], &[-1, 2, 4]]), 2).unwrap();
    assert_eq!((c.models, c.colorings), (8, 18));
}

#[test]
fn alpha_gadget() {
    let one = cnf("p cnf 4 1\nc semantics 2of4\n1 2 3 4 0\n");
    let g = alpha_sat_to_du(&one).unwrap();
    assert_eq!((g.n(), g.e()), (20, 38));
    let c = certify_alpha_du(&Engine::default(), &one).unwrap();
    assert_eq!((c.models, c.colorings), (6, 6));
    assert!(c.bijective);
    let negated = cnf("p cnf 4 2\nc semantics 2of4\n1 -2 3 4 0\n-1 2 -3 4 0\n");
    let c = certify_alpha_du(&Engine::default(), &negated).unwrap();
    assert!(c.matches && c.bijective, "{c:?}");
}

#[test]
fn alpha_gadget_unused_variable_clique_is_free() {
    // with no clause touching x1, D_1 = K_4 splits 2+2 in C(4,2) ways
    let c = certify_alpha_du(&Engine::default(), &cnf("p cnf 1 0\nc semantics 2of4\n")).unwrap();
    assert_eq!((c.models, c.colorings, c.consistent), (2, 6, 2));
}

#[test]
fn maxcut_gadget() {
    let one = cnf("p cnf 2 1\nc semantics monotone2sat\n1 2 0\n");
    let (g, k) = monotone2sat_to_maxcut(&one).unwrap();
    assert_eq!((g.n(), g.e(), k), (9, 9, 8));
    let two = cnf("p cnf 3 2\nc semantics monotone2sat\n1 2 0\n2 3 0\n");
    let (g, k) = monotone2sat_to_maxcut(&two).unwrap();
    assert_eq!((g.n(), g.e(), k), (16, 18, 16));
    let c = certify_monotone_maxcut(&one).unwrap();
    assert_eq!((c.models, c.cuts, c.per_clause_multiplier), (3, 9, Some(3)));
    let c = certify_monotone_maxcut(&two).unwrap();
    assert_eq!(c.per_clause_multiplier, Some(3));
    assert!(c.matches_three && !c.matches_two);
}

#[test]
fn cocircuit_gadget() {
    let (gp, kp) = maxcut_to_cocircuits(&complete(2), 1).unwrap();
    assert_eq!((gp.n(), kp), (8, 7));
    let deg = gp.degrees();
    assert_eq!((deg[2], deg[3]), (6, 6));
    assert!(!gp.has_edge(2, 3));
    let c = certify_maxcut_cocircuits(&complete(2), 1).unwrap();
    assert_eq!((c.cuts, c.cocircuits), (1, 32));
    assert!(c.matches);
}

#[test]
fn stretch_examples() {
    let r = stretch_identity_check(&complete(3), 2).unwrap();
    assert_eq!((r.left, r.right), (15, 15));
    let r = stretch_identity_check(&complete(2), 3).unwrap();
    // P_4 has three cocircuits, one per edge; the stated offset adds three more
    assert_eq!((r.left, r.right, r.right_bridge_corrected), (3, 6, 3));
    assert!(!r.holds && r.holds_bridge_corrected);
    let r = stretch_identity_check(&cycle(4).unwrap(), 1).unwrap();
    assert!(r.holds);
}

#[test]
fn gaussian_round_trip() {
    let k3 = complete(3);
    let counts: Vec<BigInt> =
        (1..=3).map(|l| BigInt::from(count_cocircuits(&stretch(&k3, l).unwrap()).unwrap().total)).collect();
    assert_eq!(counts[..2], [BigInt::from(3), BigInt::from(15)]);
    assert_eq!(gaussian_recover(&counts, 3, 0).unwrap(), [0, 3, 0].map(BigInt::from));
    assert_eq!(gaussian_recover(&[BigInt::from(1)], 1, 0).unwrap(), [BigInt::from(1)]);
    let p3 = path(3);
    let counts: Vec<BigInt> =
        (1..=2).map(|l| BigInt::from(count_cocircuits(&stretch(&p3, l).unwrap()).unwrap().total)).collect();
    assert_eq!(gaussian_recover(&counts, 2, 2).unwrap(), [2, 0].map(BigInt::from));
    let bad = [BigInt::from(3), BigInt::from(16), BigInt::from(40)];
    assert!(matches!(gaussian_recover(&bad, 3, 0), Err(GadgetError::Inconsistent(_))));
}
