use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{CountError, Engine};
use crate::graph::{count_cocircuits, line_graph, strip_isolated, Graph};
use crate::poly::{binomial, rat, Poly};
use crate::props::Property;

impl Engine {
    /// Harmonious colorings with at most `k` colors, by the edge-bound shortcut.
    ///
    /// A harmonious coloring uses each color pair on at most one edge, so more
    /// than `C(k,2)` edges admit none. Isolated vertices are free, contributing
    /// a factor `k` each, and the remaining core has at most `2·C(k,2)` vertices
    /// and is enumerated directly.
    pub fn harmonious_fast(&self, g: &Graph, k: u32) -> Result<BigInt, CountError> {
        let pairs = binomial(&rat(k as i64), 2).to_integer();
        if BigInt::from(g.e()) > pairs {
            return Ok(BigInt::zero());
        }
        let (core, isolated) = strip_isolated(g);
        let core_count = self.brute_count_at(&core, &Property::Harmonious, k)?;
        Ok(BigInt::from(k).pow(isolated as u32) * core_count)
    }

    /// Convex colorings with at most `k ≤ 2` colors, from the component count
    /// and, for connected graphs, the number of cocircuits `N(G)`.
    pub fn convex_fast(&self, g: &Graph, k: u32) -> Result<BigInt, CountError> {
        let comps = g.component_count();
        Ok(match (k, comps) {
            (_, 0) => BigInt::one(),
            (0, _) => BigInt::zero(),
            (1, 1) => BigInt::one(),
            (1, _) => BigInt::zero(),
            (2, 1) => BigInt::from(2) + BigInt::from(2) * count_cocircuits(g)?.total,
            (2, 2) => BigInt::from(2),
            (2, _) => BigInt::zero(),
            _ => return Err(CountError::FastPathRange("convex")),
        })
    }

    /// Proper edge colorings with at most `k` colors, as proper vertex
    /// colorings of the line graph.
    pub fn edge_chi(&self, g: &Graph, k: u32) -> Result<BigInt, CountError> {
        self.count_at(&line_graph(g)?, &Property::Proper, k)
    }

    /// `χ_edge(G;X) = χ(L(G);X)`.
    pub fn edge_chi_polynomial(&self, g: &Graph) -> Result<Poly, CountError> {
        self.chi_polynomial(&line_graph(g)?, &Property::Proper)
    }
}
