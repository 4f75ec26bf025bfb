use std::fmt;
use std::str::FromStr;

use crate::graph::{mask_components, mask_connected, Graph};

use super::pattern::Pattern;
use super::PropError;

/// Adjacency of a graph in the bitmask form all checkers work on.
///
/// `weights` is only present for multigraphs and holds edge multiplicities.
#[derive(Debug, Clone)]
pub struct Frame {
    pub(crate) adj: Vec<u64>,
    pub(crate) weights: Option<Vec<Vec<u32>>>,
}

impl Frame {
    pub fn new(g: &Graph) -> Result<Self, PropError> {
        let adj = g.adjacency_masks()?;
        let weights = (!g.is_simple()).then(|| {
            let mut w = vec![vec![0u32; g.n()]; g.n()];
            for (&(u, v), &m) in g.edges().iter().zip(g.multiplicities()) {
                w[u][v] = m;
                w[v][u] = m;
            }
            w
        });
        Ok(Frame { adj, weights })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn edges_within(&self, set: u64) -> u32 {
        bits(set).map(|v| (self.adj[v] & set).count_ones()).sum::<u32>() / 2
    }

    /// Degree of `v` inside `set`, counting parallel edges.
    pub(crate) fn degree_within(&self, v: usize, set: u64) -> u32 {
        match &self.weights {
            None => (self.adj[v] & set).count_ones(),
            Some(w) => bits(self.adj[v] & set).map(|u| w[v][u]).sum(),
        }
    }
}

/// Indices of the set bits of `mask`, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

/// Does some `h`-subset of `set` induce a copy of `pattern`?
pub(crate) fn contains_induced(frame: &Frame, set: u64, pattern: &Pattern) -> bool {
    let h = pattern.n();
    let members: Vec<usize> = bits(set).collect();
    if members.len() < h {
        return false;
    }
    let mut pick = Vec::with_capacity(h);
    fn go(frame: &Frame, members: &[usize], start: usize, pick: &mut Vec<usize>, p: &Pattern) -> bool {
        if pick.len() == p.n() {
            return p.matches(&frame.adj, pick);
        }
        let need = p.n() - pick.len();
        for i in start..=members.len() - need {
            pick.push(members[i]);
            if go(frame, members, i + 1, pick, p) {
                return true;
            }
            pick.pop();
        }
        false
    }
    go(frame, &members, 0, &mut pick, pattern)
}

/// Is every connected component of `G[set]` a copy of `pattern`?
pub(crate) fn components_match(frame: &Frame, set: u64, pattern: &Pattern) -> bool {
    mask_components(&frame.adj, set).into_iter().all(|comp| {
        let verts: Vec<usize> = bits(comp).collect();
        pattern.matches(&frame.adj, &verts)
    })
}

/// A graph class used as `P₁` or `P₂` in the two-level coloring framework.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphClass {
    All,
    Edgeless,
    AtMostOneEdge,
    Forest,
    Connected,
    ComponentsAtMost(usize),
    CopiesOf(Pattern),
    MaxDegree(u32),
    CliqueOrEdgeless,
    HFree(Pattern),
}

impl GraphClass {
    /// Is `G[set]` a member of the class?
    pub fn contains(&self, frame: &Frame, set: u64) -> bool {
        let adj = &frame.adj;
        match self {
            GraphClass::All => true,
            GraphClass::Edgeless => bits(set).all(|v| adj[v] & set == 0),
            GraphClass::AtMostOneEdge => frame.edges_within(set) <= 1,
            GraphClass::Forest => {
                let comps = mask_components(adj, set).len() as u32;
                frame.edges_within(set) + comps == set.count_ones()
            }
            GraphClass::Connected => mask_connected(adj, set),
            GraphClass::ComponentsAtMost(t) => mask_components(adj, set).iter().all(|c| c.count_ones() as usize <= *t),
            GraphClass::CopiesOf(h) => components_match(frame, set, h),
            GraphClass::MaxDegree(t) => bits(set).all(|v| frame.degree_within(v, set) <= *t),
            GraphClass::CliqueOrEdgeless => {
                bits(set).all(|v| adj[v] & set == 0) || bits(set).all(|v| adj[v] & set == set & !(1 << v))
            }
            GraphClass::HFree(h) => !contains_induced(frame, set, h),
        }
    }

    /// Whether every member of `self` is known to lie in `other`.
    /// Conservative: `false` means "not established".
    pub fn known_subclass_of(&self, other: &GraphClass) -> bool {
        use GraphClass::*;
        match (self, other) {
            (_, All) => true,
            (a, b) if a == b => true,
            (Edgeless, AtMostOneEdge | Forest | MaxDegree(_) | CliqueOrEdgeless) => true,
            (Edgeless, ComponentsAtMost(t)) => *t >= 1,
            _ => false,
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::All => write!(f, "all"),
            GraphClass::Edgeless => write!(f, "edgeless"),
            GraphClass::AtMostOneEdge => write!(f, "one-edge"),
            GraphClass::Forest => write!(f, "forest"),
            GraphClass::Connected => write!(f, "connected"),
            GraphClass::ComponentsAtMost(t) => write!(f, "comp<={t}"),
            GraphClass::CopiesOf(h) => write!(f, "du({})", h.name()),
            GraphClass::MaxDegree(t) => write!(f, "maxdeg<={t}"),
            GraphClass::CliqueOrEdgeless => write!(f, "clique-or-edgeless"),
            GraphClass::HFree(h) => write!(f, "hfree({})", h.name()),
        }
    }
}

impl FromStr for GraphClass {
    type Err = PropError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PropError::BadToken(s.to_string());
        let s = s.trim();
        let inner = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
        Ok(match s {
            "all" => GraphClass::All,
            "edgeless" => GraphClass::Edgeless,
            "one-edge" => GraphClass::AtMostOneEdge,
            "forest" => GraphClass::Forest,
            "connected" => GraphClass::Connected,
            "clique-or-edgeless" => GraphClass::CliqueOrEdgeless,
            _ => {
                if let Some(t) = s.strip_prefix("comp<=") {
                    GraphClass::ComponentsAtMost(t.parse().map_err(|_| bad())?)
                } else if let Some(t) = s.strip_prefix("maxdeg<=") {
                    GraphClass::MaxDegree(t.parse().map_err(|_| bad())?)
                } else if let Some(h) = inner("du(") {
                    GraphClass::CopiesOf(connected_pattern(h)?)
                } else if let Some(h) = inner("hfree(") {
                    GraphClass::HFree(nonempty_pattern(h)?)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

pub(crate) fn connected_pattern(token: &str) -> Result<Pattern, PropError> {
    let p = Pattern::parse(token)?;
    if !p.is_connected() {
        return Err(PropError::PatternDisconnected(p.name().to_string()));
    }
    Ok(p)
}

pub(crate) fn nonempty_pattern(token: &str) -> Result<Pattern, PropError> {
    let p = Pattern::parse(token)?;
    if p.n() == 0 {
        return Err(PropError::BadPattern(token.to_string()));
    }
    Ok(p)
}

/// `P₁`-colorings in which the union of any two color classes lies in `P₂`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairProperty {
    pub class_pred: GraphClass,
    pub pair_pred: GraphClass,
}

impl PairProperty {
    pub fn new(class_pred: GraphClass, pair_pred: GraphClass) -> Self {
        PairProperty { class_pred, pair_pred }
    }
}

impl fmt::Display for PairProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p1={},p2={}", self.class_pred, self.pair_pred)
    }
}

/// Checks a vertex coloring (0-based colors below `k`) against a pair property.
///
/// The pair condition ranges over all `i ≠ j` in the palette, so when some color
/// is unused each nonempty class on its own must also lie in `P₂`.
pub(crate) fn pair_accepts(pp: &PairProperty, frame: &Frame, masks: &[u64], k: u32) -> bool {
    if !masks.iter().all(|&m| pp.class_pred.contains(frame, m)) {
        return false;
    }
    if pp.pair_pred == GraphClass::All {
        return true;
    }
    for (i, &a) in masks.iter().enumerate() {
        for &b in &masks[i + 1..] {
            if !pp.pair_pred.contains(frame, a | b) {
                return false;
            }
        }
    }
    if (masks.len() as u32) < k {
        return masks.iter().all(|&m| pp.pair_pred.contains(frame, m));
    }
    true
}
