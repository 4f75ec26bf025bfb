use super::*;
use crate::graph::{complete, disjoint_union, join, path};
use crate::props::Property;

fn eng() -> Engine {
    Engine::default()
}

#[test]
fn spot_values() {
    let e = eng();
    let p2_join = join(&path(2), &complete(1)).unwrap();
    assert_eq!(e.brute_count_at(&p2_join, &Property::Proper, 3).unwrap(), 6);
    assert_eq!(e.brute_count_at(&path(3), &Property::Harmonious, 3).unwrap(), 6);
    assert_eq!(e.brute_count_at(&path(3), &Property::Convex, 2).unwrap(), 6);
    let (l, r) = mcc_ext_sides(&e, &complete(1), 2, 2).unwrap();
    assert_eq!(l, r);
    assert_eq!(r, 90 * e.count_at(&complete(1), &Property::Mcc(2), 2).unwrap());
}

#[test]
fn passing_identities() {
    let e = eng();
    let b = Bounds { max_n: 3, samples: 20, ..Bounds::default() };
    for name in [
        "linial_join",
        "harm_star",
        "convex_pendant",
        "du_box",
        "mcc_ext",
        "edge_line",
        "timp_pendant",
        "acyclic_join",
        "convex_cocircuit",
    ] {
        let r = run_identity(&e, name, &b, 7).unwrap();
        assert!(r.verdict.passed, "{name}: {:?}", r.verdict.witness);
        assert!(r.verdict.instances > 0);
    }
}

#[test]
fn harmonious_equations_fail_only_with_isolated_vertices() {
    let e = eng();
    let b = Bounds { max_n: 3, ..Bounds::default() };
    let r = run_identity(&e, "harm_eq1", &b, 0).unwrap();
    assert!(!r.verdict.passed);
    let w = r.verdict.witness.unwrap();
    // shrinks to K_2 plus one isolated vertex
    assert_eq!((w.n, w.edges.len()), (3, 1));
    assert!(r.corrected.unwrap().verdict.passed);
    let r = run_identity(&e, "harm_eq2", &b, 0).unwrap();
    assert!(!r.verdict.passed && r.corrected.unwrap().verdict.passed);
    assert_eq!(r.verdict.witness.unwrap().n, 3);
}

#[test]
fn harm_eq1_witness_values() {
    let g = disjoint_union(&complete(2), &complete(1)).unwrap();
    let c = Case { graph: g, param: Param::Int("k", 2) };
    let m = (checks::REGISTRY[1].check)(&eng(), &c).unwrap().unwrap();
    assert_eq!((m.left.as_str(), m.right.as_str()), ("18", "12"));
}

#[test]
fn stretch_fails_on_bridges_and_the_corrected_offset_holds() {
    let b = Bounds { max_m: 3, ..Bounds::default() };
    let r = run_identity(&eng(), "stretch", &b, 0).unwrap();
    assert!(!r.verdict.passed);
    let w = r.verdict.witness.unwrap();
    assert_eq!((w.n, w.edges.len()), (2, 1));
    assert!(r.corrected.unwrap().verdict.passed);
}

#[test]
fn degenerate_bounds_pass() {
    let b = Bounds { max_n: 1, max_edges: 0, max_m: 0, max_join: 1, max_l: 2, samples: 5, max_random_n: 1, max_k: 2 };
    let s = run_all(&eng(), &b, 3);
    assert_eq!(s.reports.len(), 12);
    assert_eq!(s.failed, 0, "{:?}", s.reports.iter().filter(|r| !r.verdict.passed).collect::<Vec<_>>());
}

#[test]
fn unknown_and_oversized() {
    assert!(matches!(run_identity(&eng(), "nope", &Bounds::default(), 0), Err(IdentityError::Unknown(_))));
    let b = Bounds { max_n: 9, ..Bounds::default() };
    assert!(matches!(run_identity(&eng(), "edge_line", &b, 0), Err(IdentityError::BoundTooLarge { .. })));
}

#[test]
fn reruns_are_identical() {
    let b = Bounds { max_n: 2, samples: 10, max_random_n: 5, max_m: 2, ..Bounds::default() };
    let one = serde_json::to_string(&run_all(&eng(), &b, 11)).unwrap();
    let two = serde_json::to_string(&run_all(&Engine::new(crate::count::DEFAULT_BUDGET, 3), &b, 11)).unwrap();
    assert_eq!(one, two);
}
