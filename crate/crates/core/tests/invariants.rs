use gcpoly::count::Engine;
use gcpoly::graph::iso::all_labeled_graphs;
use gcpoly::graph::{disjoint_union, Graph};
use gcpoly::poly::{rat, Basis};
use gcpoly::props::{check, pair_check, Coloring, Property};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.n(), &edges).unwrap()
}

fn vertex_properties() -> Vec<Property> {
    Property::named().into_iter().filter(|p| p.domain() == gcpoly::props::Domain::Vertex).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polynomial_matches_enumeration(g in arb_graph(5), idx in 0usize..13) {
        let e = Engine::default();
        let prop = &Property::named()[idx];
        let p = e.chi_polynomial(&g, prop).unwrap();
        for k in 0..=3u32 {
            prop_assert_eq!(p.eval_int(k as i64), rat(e.brute_count_at(&g, prop, k).unwrap() as i64), "k={}", k);
        }
    }

    #[test]
    fn exact_color_counts_are_nonnegative_integers(g in arb_graph(5), idx in 0usize..13) {
        let p = Engine::default().chi_polynomial(&g, &Property::named()[idx]).unwrap();
        prop_assert_eq!(p.basis(), Basis::Binomial);
        prop_assert!(p.is_nonnegative_integral());
        prop_assert!(p.degree().is_none_or(|d| d <= Property::named()[idx].domain().size(&g)));
    }

    #[test]
    fn relabeling_keeps_the_polynomial(g in arb_graph(5), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = relabel(&g, &perm);
        let e = Engine::default();
        for prop in Property::named() {
            prop_assert_eq!(e.chi_polynomial(&g, &prop).unwrap(), e.chi_polynomial(&h, &prop).unwrap(), "{}", prop);
        }
    }

    #[test]
    fn pruned_search_agrees_with_full_enumeration(g in arb_graph(7), k in 0u32..=3) {
        let e = Engine::default();
        for token in ["proper", "mcc:t=2", "mcc:t=3", "du:H=K2", "du:H=K3", "timp:t=1", "trivial", "convex"] {
            let prop: Property = token.parse().unwrap();
            prop_assert_eq!(e.pruned_count_at(&g, &prop, k).unwrap(), e.brute_count_at(&g, &prop, k).unwrap(), "{}", token);
        }
    }

    #[test]
    fn worker_count_is_invisible(g in arb_graph(6), idx in 0usize..13) {
        let prop = &Property::named()[idx];
        let a = Engine::new(gcpoly::count::DEFAULT_BUDGET, 1).chi_polynomial(&g, prop).unwrap();
        let b = Engine::new(gcpoly::count::DEFAULT_BUDGET, 4).chi_polynomial(&g, prop).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn closed_properties_multiply_over_disjoint_union(g in arb_graph(3), h in arb_graph(3)) {
        let e = Engine::default();
        let u = disjoint_union(&g, &h).unwrap();
        for token in ["proper", "mcc:t=2", "du:H=K2", "timp:t=1", "acyclic"] {
            let prop: Property = token.parse().unwrap();
            let product = &e.chi_polynomial(&g, &prop).unwrap() * &e.chi_polynomial(&h, &prop).unwrap();
            prop_assert_eq!(e.chi_polynomial(&u, &prop).unwrap(), product, "{}", token);
        }
    }
}

#[test]
fn pair_form_agrees_with_direct_checks_exhaustively() {
    for n in 0..=4 {
        for g in all_labeled_graphs(n) {
            for prop in vertex_properties() {
                let Some(pair) = prop.pair_form() else { continue };
                for k in 0..=3u32 {
                    let total = (k as usize).pow(n as u32);
                    for mut code in 0..total {
                        let colors: Vec<u32> = (0..n)
                            .map(|_| {
                                let c = (code % k as usize) as u32 + 1;
                                code /= k as usize;
                                c
                            })
                            .collect();
                        let c = Coloring::vertex(&colors, k).unwrap();
                        assert_eq!(
                            check(&prop, &g, &c).unwrap(),
                            pair_check(&pair, &g, &c).unwrap(),
                            "{prop} on {:?} with {colors:?}, k={k}",
                            g
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn convex_is_not_multiplicative() {
    // two isolated vertices: k(k-1) convex colorings, not k²
    let e = Engine::default();
    let one = e.chi_polynomial(&Graph::empty(1), &Property::Convex).unwrap();
    let two = e.chi_polynomial(&Graph::empty(2), &Property::Convex).unwrap();
    assert_ne!(two, &one * &one);
    assert_eq!(two.eval_int(3), rat(6));
}
