//! Brute-force isomorphism for small graphs (pattern graphs, test generators).

use super::Graph;

/// Permutation search is only attempted up to this many vertices.
pub const MAX_ISO_VERTICES: usize = 10;

/// Are `g` and `h` isomorphic as simple graphs? Multiplicities are compared too.
///
/// Degree sequences are compared first, then a backtracking search maps
/// vertices in order while checking adjacency against all mapped vertices.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.e() != h.e() {
        return false;
    }
    let n = g.n();
    assert!(n <= MAX_ISO_VERTICES, "isomorphism search limited to {MAX_ISO_VERTICES} vertices");
    let (dg, dh) = (g.degrees(), h.degrees());
    let mut sg = dg.clone();
    let mut sh = dh.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, &dg, &dh, 0, &mut map, &mut used)
}

fn extend(g: &Graph, h: &Graph, dg: &[usize], dh: &[usize], v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.n() {
        return true;
    }
    for w in 0..h.n() {
        if used[w] || dg[v] != dh[w] {
            continue;
        }
        let consistent = (0..v).all(|u| g.multiplicity(u, v) == h.multiplicity(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g, h, dg, dh, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}

/// Upper-triangle adjacency bits of `g` under the relabeling `perm`
/// (`perm[v]` is the new index of `v`).
fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut code = 0u64;
    for &(u, v) in g.edges() {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        // index of (a, b) with a < b in row-major upper triangle
        let idx = a * n - a * (a + 1) / 2 + (b - a - 1);
        code |= 1 << idx;
    }
    code
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

/// A labeling-independent code for a simple graph on at most 11 vertices.
pub fn canonical_code(g: &Graph) -> (usize, u64) {
    assert!(g.n() <= 11);
    let code = permutations(g.n()).iter().map(|p| code_under(g, p)).max().unwrap_or(0);
    (g.n(), code)
}

/// All automorphisms of `g` as vertex maps.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let base = code_under(g, &(0..g.n()).collect::<Vec<_>>());
    permutations(g.n()).into_iter().filter(|p| code_under(g, p) == base).collect()
}

/// Every labeled simple graph on `n` vertices (`2^C(n,2)` of them).
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "too many labeled graphs");
    (0u32..1 << pairs.len()).map(move |bits| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::new(n, &edges).expect("valid edges")
    })
}

/// One representative per isomorphism class of simple graphs on `n ≤ 6`
/// vertices, in order of first appearance among labeled graphs.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "isomorphism-class enumeration limited to 6 vertices");
    let mut seen = std::collections::HashSet::new();
    all_labeled_graphs(n).filter(|g| seen.insert(canonical_code(g))).collect()
}
