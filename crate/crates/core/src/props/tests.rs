use super::*;
use crate::graph::{complete, cycle, disjoint_union, path, star, t_pendant};

fn vc(g: &Graph, prop: &str, colors: &[u32]) -> bool {
    let k = colors.iter().copied().max().unwrap_or(1);
    check(&prop.parse().unwrap(), g, &Coloring::vertex(colors, k).unwrap()).unwrap()
}

#[test]
fn documented_examples() {
    assert!(vc(&complete(3), "proper", &[1, 2, 3]));
    assert!(!vc(&complete(3), "proper", &[1, 1, 2]));
    assert!(!vc(&path(4), "harmonious", &[1, 2, 1, 2]));
    assert!(vc(&path(4), "harmonious", &[1, 2, 3, 1]));
    assert!(!vc(&path(3), "convex", &[1, 2, 1]));
    assert!(vc(&complete(3), "mcc:t=2", &[1, 1, 2]));
    assert!(vc(&cycle(4).unwrap(), "du:H=K2", &[1, 1, 2, 2]));
    assert!(!vc(&cycle(4).unwrap(), "acyclic", &[1, 2, 1, 2]));
}

#[test]
fn more_properties() {
    let p3 = path(3);
    assert!(!vc(&p3, "hfree:H=P3", &[1, 1, 1]));
    // the endpoints induce E2, not P3
    assert!(vc(&p3, "hfree:H=P3", &[1, 2, 1]));
    assert!(vc(&p3, "cocolor", &[1, 1, 2]));
    assert!(!vc(&p3, "cocolor", &[1, 1, 1]));
    assert!(!vc(&p3, "injective", &[2, 1, 2]));
    assert!(vc(&p3, "injective", &[1, 1, 2]));
    assert!(vc(&star(3), "timp:t=1", &[1, 1, 2, 2]));
    assert!(!vc(&star(3), "timp:t=1", &[1, 1, 1, 2]));
    assert!(vc(&p3, "degree-color", &[2, 3, 2]));
    assert!(!vc(&p3, "degree-color", &[1, 3, 2]));
    let c = Coloring::vertex(&[1, 2, 1], 3).unwrap();
    assert!(!check(&Property::SurjectiveProper, &p3, &c).unwrap());
    let c = Coloring::vertex(&[1, 2, 1], 2).unwrap();
    assert!(check(&Property::SurjectiveProper, &p3, &c).unwrap());
}

#[test]
fn t_improper_counts_parallel_edges() {
    // K2 plus a pendant vertex joined by two parallel edges
    let g = t_pendant(&complete(2), 1);
    assert!(!vc(&g, "timp:t=1", &[1, 2, 1]));
    assert!(vc(&g, "timp:t=1", &[1, 2, 3]));
    assert!(vc(&g, "timp:t=2", &[1, 2, 1]));
}

#[test]
fn edge_properties() {
    let p3 = path(3);
    let ec = |colors: &[u32], p: &str| check(&p.parse().unwrap(), &p3, &Coloring::edge(colors, 2).unwrap()).unwrap();
    assert!(ec(&[1, 2], "edge"));
    assert!(!ec(&[1, 1], "edge"));
    assert!(ec(&[1, 2], "rainbow"));
    assert!(!ec(&[2, 2], "rainbow"));
    // C4 colored 1,1,2,2 around the cycle: opposite corners still see a rainbow path
    let c4 = cycle(4).unwrap();
    let colors: Vec<u32> = c4
        .edges()
        .iter()
        .map(|&(u, v)| if u.min(v) == 0 && u.max(v) == 1 || (u, v) == (1, 2) { 1 } else { 2 })
        .collect();
    let ok = check(&Property::Rainbow, &c4, &Coloring::edge(&colors, 2).unwrap()).unwrap();
    assert!(!ok, "0 and 2 are joined only by the monochromatic 0-1-2 and 0-3-2 paths");
    // disconnected graphs never have a rainbow coloring
    let g = disjoint_union(&complete(2), &complete(2)).unwrap();
    assert!(!check(&Property::Rainbow, &g, &Coloring::edge(&[1, 2], 2).unwrap()).unwrap());
}

#[test]
fn errors() {
    let c = Coloring::edge(&[1, 1], 1).unwrap();
    assert!(matches!(check(&Property::Proper, &path(3), &c), Err(PropError::DomainMismatch { .. })));
    assert!(matches!("mcc".parse::<Property>(), Err(PropError::MissingParameter { parameter: "t", .. })));
    assert!(matches!("du".parse::<Property>(), Err(PropError::MissingParameter { parameter: "H", .. })));
    assert!(matches!("du:H=E2".parse::<Property>(), Err(PropError::PatternDisconnected(_))));
    assert!(matches!(Coloring::vertex(&[0], 2), Err(PropError::ColorOutOfRange { .. })));
    assert!(matches!(Coloring::vertex(&[3], 2), Err(PropError::ColorOutOfRange { .. })));
    let c = Coloring::vertex(&[1, 1], 1).unwrap();
    assert!(matches!(check(&Property::Trivial, &path(3), &c), Err(PropError::NotTotal { .. })));
    assert!("bogus".parse::<Property>().is_err());
    assert!("proper:t=1".parse::<Property>().is_err());
}

#[test]
fn tokens_round_trip() {
    for t in [
        "proper",
        "harmonious",
        "convex",
        "edge",
        "mcc:t=2",
        "du:H=K3",
        "hfree:H=P3",
        "timp:t=1",
        "acyclic",
        "cocolor",
        "injective",
        "rainbow",
        "trivial",
        "pair:p1=edgeless,p2=one-edge",
        "surjective-proper",
        "degree-color",
    ] {
        assert_eq!(t.parse::<Property>().unwrap().to_string(), t);
    }
    assert_eq!("Φ₁:surjective-proper".parse::<Property>().unwrap(), Property::SurjectiveProper);
    assert_eq!("phi2".parse::<Property>().unwrap(), Property::DegreeColor);
    assert_eq!(
        "pair:p1=comp<=2,p2=all".parse::<Property>().unwrap(),
        Property::Pair(PairProperty::new(GraphClass::ComponentsAtMost(2), GraphClass::All))
    );
}

#[test]
fn copy_unions() {
    assert!(induces_copy_union(&complete(3), &[0, 1, 2], &complete(3)).unwrap());
    assert!(induces_copy_union(&path(3), &[0, 2], &complete(1)).unwrap());
    assert!(!induces_copy_union(&path(3), &[0, 1, 2], &complete(2)).unwrap());
    assert!(induces_copy_union(&path(3), &[], &complete(2)).unwrap());
    assert!(matches!(induces_copy_union(&path(3), &[0], &Graph::empty(2)), Err(PropError::PatternDisconnected(_))));
}

#[test]
fn pair_framework_reproduces_trivial() {
    let pp = PairProperty::new(GraphClass::All, GraphClass::All);
    let c = Coloring::vertex(&[1, 1, 1], 3).unwrap();
    assert!(pair_check(&pp, &complete(3), &c).unwrap());
}

#[test]
fn certification_flags() {
    assert!(Property::named().iter().all(Property::zilber_certified));
    assert!(!Property::SurjectiveProper.zilber_certified());
    assert!(!Property::DegreeColor.zilber_certified());
    let odd = PairProperty::new(GraphClass::Connected, GraphClass::Edgeless);
    assert!(!Property::Pair(odd).zilber_certified());
    assert_eq!(Property::named().len(), 13);
}

#[test]
fn parallel_edges_repeat_a_color_pair() {
    let g = t_pendant(&complete(2), 1);
    assert!(!vc(&g, "harmonious", &[1, 2, 3]));
    assert!(vc(&g, "proper", &[1, 2, 3]));
}
