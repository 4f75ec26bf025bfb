//! Immutable undirected graphs and the constructions used by the counting
//! identities and reductions.
//!
//! Vertices are always `0..n`. Edges are stored normalized (`u < v`) and sorted,
//! so edge indices are canonical for a given edge set. Gadget constructions keep
//! the original vertices first and append fresh vertices in construction order.

mod construct;
mod cuts;
pub mod io;
pub mod iso;

pub use construct::*;
pub use cuts::{bridge_count, count_cocircuits, cut_size_histogram, enumerate_cocircuits, CocircuitSummary, CutReport};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Largest vertex count for which bitmask views are available.
pub const MAX_MASK_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({0}, {1}) in a simple graph")]
    DuplicateEdge(usize, usize),
    #[error("edge multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("multiplicity list has {got} entries for {expected} edges")]
    MultiplicityLength { expected: usize, got: usize },
    #[error("graphs of different flavors cannot be combined")]
    FlavorMismatch,
    #[error("{0} requires a simple graph")]
    NotSimple(&'static str),
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("stretch length must be at least 1")]
    ZeroStretch,
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has {n} vertices, at most {max} supported here")]
    TooLarge { n: usize, max: usize },
    #[error("label table has {got} entries for {n} vertices")]
    LabelCount { n: usize, got: usize },
    #[error("invalid label {0:?}")]
    BadLabel(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Simple,
    Multi,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    mult: Vec<u32>,
    flavor: Flavor,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?}", self.n, self.edges)?;
        if self.flavor == Flavor::Multi {
            write!(f, ", mult={:?}", self.mult)?;
        }
        write!(f, ")")
    }
}

impl Graph {
    /// Simple graph on `n` vertices. Duplicate pairs are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = BTreeMap::new();
        for &(u, v) in edges {
            let e = normalize(u, v, n)?;
            if seen.insert(e, 1u32).is_some() {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_map(n, seen, Flavor::Simple))
    }

    /// Multigraph on `n` vertices. Repeated pairs accumulate multiplicity.
    pub fn with_multiplicities(n: usize, edges: &[(usize, usize)], multiplicities: &[u32]) -> Result<Self, GraphError> {
        if edges.len() != multiplicities.len() {
            return Err(GraphError::MultiplicityLength { expected: edges.len(), got: multiplicities.len() });
        }
        let mut seen: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (&(u, v), &m) in edges.iter().zip(multiplicities) {
            if m == 0 {
                return Err(GraphError::ZeroMultiplicity);
            }
            *seen.entry(normalize(u, v, n)?).or_default() += m;
        }
        Ok(Self::from_map(n, seen, Flavor::Multi))
    }

    /// The `build_graph` entry point: simple unless multiplicities are given.
    pub fn build(n: usize, edges: &[(usize, usize)], multiplicities: Option<&[u32]>) -> Result<Self, GraphError> {
        match multiplicities {
            None => Self::new(n, edges),
            Some(m) => Self::with_multiplicities(n, edges, m),
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_map(n, BTreeMap::new(), Flavor::Simple)
    }

    fn from_map(n: usize, map: BTreeMap<(usize, usize), u32>, flavor: Flavor) -> Self {
        let (edges, mult) = map.into_iter().unzip();
        Graph { n, edges, mult, flavor, labels: None }
    }

    /// Attach a label per vertex. Labels must be non-empty and free of whitespace.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount { n: self.n, got: labels.len() });
        }
        if let Some(bad) = labels.iter().find(|l| l.is_empty() || l.chars().any(char::is_whitespace)) {
            return Err(GraphError::BadLabel(bad.clone()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct adjacent pairs (multiplicities not counted).
    pub fn e(&self) -> usize {
        self.edges.len()
    }

    /// Edge count with multiplicities.
    pub fn total_multiplicity(&self) -> u64 {
        self.mult.iter().map(|&m| m as u64).sum()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn is_simple(&self) -> bool {
        self.flavor == Flavor::Simple
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).map(|i| self.mult[i]).unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.multiplicity(u, v) > 0
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Simple degrees (distinct neighbours).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// `i(G)`, the number of isolated vertices.
    pub fn isolated_count(&self) -> usize {
        self.degrees().iter().filter(|&&d| d == 0).count()
    }

    /// Neighbourhood bitmasks, available for graphs on at most 64 vertices.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>, GraphError> {
        if self.n > MAX_MASK_VERTICES {
            return Err(GraphError::TooLarge { n: self.n, max: MAX_MASK_VERTICES });
        }
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        Ok(masks)
    }

    pub fn require_simple(&self, op: &'static str) -> Result<(), GraphError> {
        if self.is_simple() {
            Ok(())
        } else {
            Err(GraphError::NotSimple(op))
        }
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut map = BTreeMap::new();
        for (&(u, v), &m) in self.edges.iter().zip(&self.mult) {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                let (a, b) = (index[u], index[v]);
                map.insert((a.min(b), a.max(b)), m);
            }
        }
        let mut g = Self::from_map(vertices.len(), map, self.flavor);
        if let Some(l) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| l[v].clone()).collect());
        }
        g
    }

    /// Graph with vertex `v` removed and the remaining vertices renumbered.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// The same graph with the simple flavor (multiplicities dropped).
    pub fn underlying_simple(&self) -> Graph {
        let map = self.edges.iter().map(|&e| (e, 1)).collect();
        let mut g = Self::from_map(self.n, map, Flavor::Simple);
        g.labels = self.labels.clone();
        g
    }

    /// Partition of `V` into maximal connected sets, each sorted.
    ///
    /// The graph on zero vertices yields a single empty component.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        if self.n == 0 {
            return vec![Vec::new()];
        }
        let adj = self.neighbors();
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut head = 0;
            while head < members.len() {
                let u = members[head];
                head += 1;
                for &w in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Number of connected components; 0 for the empty graph (which is connected).
    pub fn component_count(&self) -> usize {
        if self.n == 0 {
            0
        } else {
            self.connected_components().len()
        }
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }
}

fn normalize(u: usize, v: usize, n: usize) -> Result<(usize, usize), GraphError> {
    if u >= n || v >= n {
        return Err(GraphError::EndpointOutOfRange { u, v, n });
    }
    if u == v {
        return Err(GraphError::LoopEdge(u));
    }
    Ok((u.min(v), u.max(v)))
}

/// Connected components of the subgraph induced by `set` (bitmask form).
pub(crate) fn mask_components(adj: &[u64], set: u64) -> Vec<u64> {
    let mut rest = set;
    let mut out = Vec::new();
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & set & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        rest &= !comp;
        out.push(comp);
    }
    out
}

pub(crate) fn mask_connected(adj: &[u64], set: u64) -> bool {
    if set == 0 {
        return true;
    }
    let start = set & set.wrapping_neg();
    let mut comp = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & set & !comp;
        comp |= fresh;
        frontier |= fresh;
    }
    comp == set
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!((g.n(), g.e()), (3, 3));
        assert!(g.is_simple());
    }

    #[test]
    fn single_vertex_is_isolated() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.isolated_count(), 1);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(4, &[(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(GraphError::LoopEdge(1)));
        assert!(matches!(Graph::new(2, &[(0, 2)]), Err(GraphError::EndpointOutOfRange { .. })));
    }

    #[test]
    fn multigraph_accumulates() {
        let g = Graph::with_multiplicities(2, &[(0, 1), (1, 0)], &[2, 1]).unwrap();
        assert_eq!(g.multiplicity(0, 1), 3);
        assert_eq!(g.flavor(), Flavor::Multi);
        assert_eq!(g.total_multiplicity(), 3);
    }

    #[test]
    fn components() {
        let e3 = Graph::empty(3);
        assert_eq!(e3.connected_components(), vec![vec![0], vec![1], vec![2]]);
        let g = Graph::new(5, &[(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap();
        let sizes: Vec<usize> = g.connected_components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![2, 3]);
        let k5 = complete(5);
        assert_eq!(k5.connected_components().len(), 1);
        assert_eq!(Graph::empty(0).connected_components(), vec![Vec::<usize>::new()]);
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn labels_are_validated() {
        assert!(Graph::empty(2).with_labels(vec!["a".into()]).is_err());
        assert!(Graph::empty(1).with_labels(vec!["a b".into()]).is_err());
        let g = Graph::empty(2).with_labels(vec!["x1".into(), "-x1".into()]).unwrap();
        assert_eq!(g.label(1), Some("-x1"));
    }

    #[test]
    fn mask_helpers() {
        let p3 = path(3);
        let adj = p3.adjacency_masks().unwrap();
        assert!(mask_connected(&adj, 0b111));
        assert!(!mask_connected(&adj, 0b101));
        assert_eq!(mask_components(&adj, 0b101).len(), 2);
        assert!(mask_connected(&adj, 0));
    }
}
