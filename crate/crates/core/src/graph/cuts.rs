use std::collections::BTreeMap;

use super::{mask_components, Graph, GraphError};

/// Vertex-count ceiling for shore enumeration (`2^(n-1)` candidates).
pub const MAX_CUT_VERTICES: usize = 24;

/// One cut of a connected graph: a partition of `V` into two non-empty shores.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutReport {
    pub shores: (Vec<usize>, Vec<usize>),
    /// `|δ(X, Y)|`
    pub crossing_size: usize,
    /// Deleting the crossing set leaves exactly two components.
    pub is_cocircuit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocircuitSummary {
    /// `N(G)`
    pub total: u64,
    /// `k ↦ N_k(G)`
    pub by_size: BTreeMap<usize, u64>,
    pub reports: Vec<CutReport>,
}

impl CocircuitSummary {
    pub fn of_size(&self, k: usize) -> u64 {
        self.by_size.get(&k).copied().unwrap_or(0)
    }
}

fn check_cut_size(g: &Graph) -> Result<(), GraphError> {
    if g.n() > MAX_CUT_VERTICES {
        return Err(GraphError::TooLarge { n: g.n(), max: MAX_CUT_VERTICES });
    }
    Ok(())
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Iterates every shore `X ∋ 0` with `X ≠ V`, i.e. every unordered cut once.
fn shores(n: usize) -> impl Iterator<Item = u64> {
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let others = if n == 0 { 0 } else { 1u64 << (n - 1) };
    (0..others.saturating_sub(1)).map(move |bits| {
        let x = 1 | (bits << 1);
        debug_assert!(x & full != full);
        x
    })
}

/// Enumerates all `2^(n-1) - 1` cuts of a connected simple graph and classifies
/// each one with the two-component criterion.
pub fn enumerate_cocircuits(g: &Graph) -> Result<CocircuitSummary, GraphError> {
    classify_cuts(g, true)
}

/// Like [`enumerate_cocircuits`] but keeps only the counts, not a report per cut.
pub fn count_cocircuits(g: &Graph) -> Result<CocircuitSummary, GraphError> {
    classify_cuts(g, false)
}

fn classify_cuts(g: &Graph, keep_reports: bool) -> Result<CocircuitSummary, GraphError> {
    g.require_simple("enumerate_cocircuits")?;
    check_cut_size(g)?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.n();
    let adj = g.adjacency_masks()?;
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut summary = CocircuitSummary { total: 0, by_size: BTreeMap::new(), reports: Vec::new() };
    for x in shores(n) {
        let y = full & !x;
        let crossing = g.edges().iter().filter(|&&(u, v)| (x >> u & 1) != (x >> v & 1)).count();
        // adjacency of G minus the crossing set
        let cut_adj: Vec<u64> = (0..n).map(|v| if x >> v & 1 == 1 { adj[v] & x } else { adj[v] & y }).collect();
        let is_cocircuit = mask_components(&cut_adj, full).len() == 2;
        if is_cocircuit {
            summary.total += 1;
            *summary.by_size.entry(crossing).or_default() += 1;
        }
        if keep_reports {
            summary.reports.push(CutReport {
                shores: (mask_to_vec(x), mask_to_vec(y)),
                crossing_size: crossing,
                is_cocircuit,
            });
        }
    }
    Ok(summary)
}

/// Number of cuts (unordered partitions into two non-empty shores) of each
/// crossing size. Connectivity is not required.
pub fn cut_size_histogram(g: &Graph) -> Result<BTreeMap<usize, u64>, GraphError> {
    check_cut_size(g)?;
    let mut hist = BTreeMap::new();
    for x in shores(g.n()) {
        let crossing = g.edges().iter().filter(|&&(u, v)| (x >> u & 1) != (x >> v & 1)).count();
        *hist.entry(crossing).or_default() += 1;
    }
    Ok(hist)
}

/// Number of edges whose deletion disconnects their endpoints.
pub fn bridge_count(g: &Graph) -> usize {
    let base = g.component_count();
    g.edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            let rest: Vec<_> = g.edges().iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
            Graph::new(g.n(), &rest).map(|h| h.component_count() > base).unwrap_or(false)
        })
        .count()
}
