use std::collections::BTreeMap;

use super::{Flavor, Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    /// `K_n`
    Complete,
    /// `E_m`
    Edgeless,
    /// `P_n`, `n` vertices
    Path,
    /// `K_{1,n}`, center 0 and `n` leaves
    Star,
    /// `C_n`
    Cycle,
}

pub fn standard_graph(kind: StandardKind, size: usize) -> Result<Graph, GraphError> {
    Ok(match kind {
        StandardKind::Complete => complete(size),
        StandardKind::Edgeless => Graph::empty(size),
        StandardKind::Path => path(size),
        StandardKind::Star => star(size),
        StandardKind::Cycle => cycle(size)?,
    })
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges).expect("complete graph edges are valid")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges).expect("path edges are valid")
}

pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::new(leaves + 1, &edges).expect("star edges are valid")
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooSmall(n));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::new(n, &edges)
}

fn assemble(n: usize, map: BTreeMap<(usize, usize), u32>, flavor: Flavor, labels: Option<Vec<String>>) -> Graph {
    let mut g = Graph::from_map(n, map, flavor);
    g.labels = labels;
    g
}

fn edge_map(g: &Graph, offset: usize) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
    g.edges.iter().zip(&g.mult).map(move |(&(u, v), &m)| ((u + offset, v + offset), m))
}

fn concat_labels(g1: &Graph, g2: &Graph) -> Option<Vec<String>> {
    match (&g1.labels, &g2.labels) {
        (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
        _ => None,
    }
}

/// `g1 ⊔ g2`; the vertices of `g2` are shifted by `n(g1)`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    if g1.flavor != g2.flavor {
        return Err(GraphError::FlavorMismatch);
    }
    let map = edge_map(g1, 0).chain(edge_map(g2, g1.n)).collect();
    Ok(assemble(g1.n + g2.n, map, g1.flavor, concat_labels(g1, g2)))
}

/// `g1 ⋈ g2`: disjoint union plus every edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    g1.require_simple("join")?;
    g2.require_simple("join")?;
    let mut map: BTreeMap<_, _> = edge_map(g1, 0).chain(edge_map(g2, g1.n)).collect();
    for u in 0..g1.n {
        for v in 0..g2.n {
            map.insert((u, g1.n + v), 1);
        }
    }
    Ok(assemble(g1.n + g2.n, map, Flavor::Simple, concat_labels(g1, g2)))
}

/// `S(G)`: subdivide every edge `e` with a fresh vertex `v_e`, then make the
/// subdivision vertices a clique.
///
/// Layout: original vertices keep their indices; `v_e` for the `i`-th edge
/// (canonical edge order) is vertex `n + i`.
pub fn harmonious_gadget(g: &Graph) -> Result<Graph, GraphError> {
    g.require_simple("harmonious_gadget")?;
    let n = g.n;
    let m = g.e();
    let mut map = BTreeMap::new();
    for (i, &(u, v)) in g.edges.iter().enumerate() {
        map.insert((u, n + i), 1);
        map.insert((v, n + i), 1);
    }
    for i in 0..m {
        for j in i + 1..m {
            map.insert((n + i, n + j), 1);
        }
    }
    let labels = g.labels.as_ref().map(|l| l.iter().cloned().chain((0..m).map(|i| format!("e{i}"))).collect());
    Ok(assemble(n + m, map, Flavor::Simple, labels))
}

/// `G_l`: every edge replaced by a path with `l` edges.
///
/// Layout: for the `i`-th edge `(u, v)` the interior vertices
/// `n + i(l-1) .. n + (i+1)(l-1)` run from the `u` end to the `v` end.
pub fn stretch(g: &Graph, l: usize) -> Result<Graph, GraphError> {
    g.require_simple("stretch")?;
    if l == 0 {
        return Err(GraphError::ZeroStretch);
    }
    let inner = l - 1;
    let mut map = BTreeMap::new();
    for (i, &(u, v)) in g.edges.iter().enumerate() {
        let base = g.n + i * inner;
        let mut prev = u;
        for j in 0..inner {
            let w = base + j;
            map.insert((prev.min(w), prev.max(w)), 1);
            prev = w;
        }
        map.insert((prev.min(v), prev.max(v)), 1);
    }
    Ok(assemble(g.n + inner * g.e(), map, Flavor::Simple, None))
}

/// `Box_{H,v}(G)`: `G ⊔ H` plus an edge from every vertex of `G` to `v ∈ V(H)`.
/// Vertices of `H` follow those of `G`.
pub fn box_join(g: &Graph, h: &Graph, v: usize) -> Result<Graph, GraphError> {
    g.require_simple("box_join")?;
    h.require_simple("box_join")?;
    if v >= h.n {
        return Err(GraphError::VertexOutOfRange { v, n: h.n });
    }
    let mut map: BTreeMap<_, _> = edge_map(g, 0).chain(edge_map(h, g.n)).collect();
    for u in 0..g.n {
        map.insert((u, g.n + v), 1);
    }
    Ok(assemble(g.n + h.n, map, Flavor::Simple, concat_labels(g, h)))
}

/// Remove isolated vertices. Returns the stripped graph and `i(G)`.
pub fn strip_isolated(g: &Graph) -> (Graph, usize) {
    let deg = g.degrees();
    let keep: Vec<usize> = (0..g.n).filter(|&v| deg[v] > 0).collect();
    let removed = g.n - keep.len();
    (g.induced(&keep), removed)
}

/// `G'` of the mcc extension: a clique on `t(k+1)` new vertices, the first of
/// which is joined to every vertex of `G`.
///
/// Layout: original vertices, then the clique; the designated vertex is `n(G)`.
pub fn mcc_extension(g: &Graph, t: usize, k: usize) -> Result<Graph, GraphError> {
    g.require_simple("mcc_extension")?;
    let n = g.n;
    let c = t * (k + 1);
    let mut map: BTreeMap<_, _> = edge_map(g, 0).collect();
    for i in 0..c {
        for j in i + 1..c {
            map.insert((n + i, n + j), 1);
        }
    }
    if c > 0 {
        for u in 0..n {
            map.insert((u, n), 1);
        }
    }
    Ok(assemble(n + c, map, Flavor::Simple, None))
}

/// `G ⋈_t K_1`: a new vertex (index `n(G)`) tied to every vertex by `t + 1`
/// parallel edges. Always returns a multigraph.
pub fn t_pendant(g: &Graph, t: u32) -> Graph {
    let n = g.n;
    let mut map: BTreeMap<_, _> = edge_map(g, 0).collect();
    for u in 0..n {
        map.insert((u, n), t + 1);
    }
    assemble(n + 1, map, Flavor::Multi, None)
}

/// `L(G)`: vertex `i` is the `i`-th edge of `g`.
pub fn line_graph(g: &Graph) -> Result<Graph, GraphError> {
    g.require_simple("line_graph")?;
    let mut incident = vec![Vec::new(); g.n];
    for (i, &(u, v)) in g.edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut map = BTreeMap::new();
    for inc in &incident {
        for (a, &i) in inc.iter().enumerate() {
            for &j in &inc[a + 1..] {
                map.insert((i.min(j), i.max(j)), 1);
            }
        }
    }
    Ok(assemble(g.e(), map, Flavor::Simple, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso::is_isomorphic;

    fn e2() -> Graph {
        Graph::empty(2)
    }

    #[test]
    fn standard_shapes() {
        let k4 = standard_graph(StandardKind::Complete, 4).unwrap();
        assert_eq!((k4.n(), k4.e()), (4, 6));
        let s3 = standard_graph(StandardKind::Star, 3).unwrap();
        assert_eq!((s3.n(), s3.e()), (4, 3));
        let e5 = standard_graph(StandardKind::Edgeless, 5).unwrap();
        assert_eq!((e5.n(), e5.e()), (5, 0));
        assert_eq!(standard_graph(StandardKind::Cycle, 2), Err(GraphError::CycleTooSmall(2)));
        assert_eq!(cycle(4).unwrap().e(), 4);
    }

    #[test]
    fn unions_and_joins() {
        let k1 = complete(1);
        assert_eq!(disjoint_union(&k1, &k1).unwrap(), e2());
        let g = disjoint_union(&path(3), &complete(3)).unwrap();
        assert_eq!((g.n(), g.e()), (6, 5));
        assert_eq!(join(&path(2), &k1).unwrap(), complete(3));
        assert!(is_isomorphic(&join(&e2(), &e2()).unwrap(), &cycle(4).unwrap()));
        let c4 = cycle(4).unwrap();
        assert_eq!(join(&c4, &k1).unwrap().e(), 8);
        let multi = t_pendant(&k1, 0);
        assert_eq!(disjoint_union(&multi, &k1), Err(GraphError::FlavorMismatch));
        assert_eq!(join(&multi, &k1), Err(GraphError::NotSimple("join")));
    }

    #[test]
    fn harmonious_gadget_counts() {
        let s = harmonious_gadget(&complete(2)).unwrap();
        assert_eq!(s, path(3).induced(&[0, 2, 1]));
        assert!(is_isomorphic(&s, &path(3)));
        let s3 = harmonious_gadget(&complete(3)).unwrap();
        assert_eq!((s3.n(), s3.e()), (6, 9));
        let s4 = harmonious_gadget(&cycle(4).unwrap()).unwrap();
        assert_eq!((s4.n(), s4.e()), (8, 14));
    }

    #[test]
    fn stretch_shapes() {
        assert_eq!(stretch(&complete(2), 3).unwrap(), path(4).induced(&[0, 3, 1, 2]));
        assert!(is_isomorphic(&stretch(&complete(2), 3).unwrap(), &path(4)));
        let c6 = stretch(&complete(3), 2).unwrap();
        assert!(is_isomorphic(&c6, &cycle(6).unwrap()));
        let c4 = cycle(4).unwrap();
        assert_eq!(stretch(&c4, 1).unwrap(), c4);
        assert_eq!(stretch(&c4, 0), Err(GraphError::ZeroStretch));
    }

    #[test]
    fn box_join_shapes() {
        assert_eq!(box_join(&Graph::empty(1), &complete(1), 0).unwrap(), complete(2));
        let b = box_join(&complete(2), &complete(3), 0).unwrap();
        assert_eq!((b.n(), b.e()), (5, 6));
        assert!(b.has_edge(0, 2) && b.has_edge(1, 2) && !b.has_edge(0, 3));
        assert!(matches!(box_join(&complete(2), &complete(3), 3), Err(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn strip() {
        assert_eq!(strip_isolated(&Graph::empty(5)), (Graph::empty(0), 5));
        let g = disjoint_union(&complete(2), &Graph::empty(3)).unwrap();
        assert_eq!(strip_isolated(&g), (complete(2), 3));
        assert_eq!(strip_isolated(&complete(3)), (complete(3), 0));
    }

    #[test]
    fn mcc_extension_counts() {
        let g = mcc_extension(&Graph::empty(1), 2, 2).unwrap();
        assert_eq!((g.n(), g.e()), (7, 16));
        let g = mcc_extension(&complete(2), 1, 1).unwrap();
        assert_eq!((g.n(), g.e()), (4, 4));
        assert!(g.has_edge(0, 2) && g.has_edge(1, 2) && !g.has_edge(0, 3));
    }

    #[test]
    fn t_pendant_shapes() {
        let g = t_pendant(&complete(1), 0);
        assert_eq!((g.n(), g.e(), g.multiplicity(0, 1)), (2, 1, 1));
        let g = t_pendant(&complete(2), 2);
        assert_eq!(g.multiplicity(0, 1), 1);
        assert_eq!(g.multiplicity(0, 2), 3);
        assert_eq!(g.multiplicity(1, 2), 3);
    }

    #[test]
    fn line_graphs() {
        assert_eq!(line_graph(&path(3)).unwrap(), complete(2));
        assert_eq!(line_graph(&complete(3)).unwrap(), complete(3));
        assert_eq!(line_graph(&star(3)).unwrap(), complete(3));
    }
}
