use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::graph::iso::permutations;
use crate::graph::{complete, cycle, path, star, Graph};

use super::PropError;

/// Pattern graphs are compared by brute force; keep them this small.
pub const MAX_PATTERN_VERTICES: usize = 8;

/// A small named pattern graph `H` with every labeled form precomputed.
#[derive(Clone)]
pub struct Pattern {
    name: String,
    graph: Graph,
    codes: Arc<HashSet<u64>>,
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({})", self.name)
    }
}

impl PartialEq for Pattern {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
    }
}

/// Upper-triangle code of the subgraph induced by `vertices`, in that order.
pub(crate) fn induced_code(adj: &[u64], vertices: &[usize]) -> u64 {
    let h = vertices.len();
    let mut code = 0u64;
    let mut idx = 0;
    for a in 0..h {
        for b in a + 1..h {
            if adj[vertices[a]] >> vertices[b] & 1 == 1 {
                code |= 1 << idx;
            }
            idx += 1;
        }
    }
    code
}

impl Pattern {
    pub fn new(name: impl Into<String>, graph: Graph) -> Result<Self, PropError> {
        let graph = graph.without_labels().underlying_simple();
        if graph.n() > MAX_PATTERN_VERTICES {
            return Err(PropError::PatternTooLarge(graph.n()));
        }
        let n = graph.n();
        let mut codes = HashSet::new();
        for perm in permutations(n) {
            // perm[i] = vertex of H placed at position i
            let adj = graph.adjacency_masks().expect("small pattern");
            codes.insert(induced_code(&adj, &perm));
        }
        Ok(Pattern { name: name.into(), graph, codes: Arc::new(codes) })
    }

    /// Parses `K<n>`, `E<n>`, `P<n>`, `C<n>` or `S<n>` (star with `n` leaves).
    pub fn parse(token: &str) -> Result<Self, PropError> {
        let bad = || PropError::BadPattern(token.to_string());
        let mut chars = token.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let size: usize = chars.as_str().parse().map_err(|_| bad())?;
        let graph = match kind.to_ascii_uppercase() {
            'K' => complete(size),
            'E' => Graph::empty(size),
            'P' => path(size),
            'C' => cycle(size).map_err(|_| bad())?,
            'S' => star(size),
            _ => return Err(bad()),
        };
        Self::new(format!("{}{}", kind.to_ascii_uppercase(), size), graph)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.n() >= 1 && self.graph.is_connected()
    }

    /// Does the ordered vertex list induce a copy of the pattern?
    pub(crate) fn matches(&self, adj: &[u64], vertices: &[usize]) -> bool {
        vertices.len() == self.n() && self.codes.contains(&induced_code(adj, vertices))
    }
}
