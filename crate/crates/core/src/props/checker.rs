use std::collections::HashSet;

use crate::graph::{mask_components, mask_connected, Graph, GraphError, MAX_MASK_VERTICES};

use super::class::{bits, components_match, contains_induced, pair_accepts, Frame};
use super::{Domain, PropError, Property};

/// A property bound to one graph, with its adjacency precomputed.
///
/// `accepts` takes 0-based colors (`0..k`) indexed by vertex, or by edge
/// position in `Graph::edges()` for edge properties.
#[derive(Debug, Clone)]
pub struct Checker {
    prop: Property,
    frame: Frame,
    edges: Vec<(usize, usize)>,
    degrees: Vec<u32>,
    /// Some edge has multiplicity above one, so its color pair repeats.
    parallel: bool,
    /// Edge properties: `(neighbour, edge index)` per vertex.
    incidence: Vec<Vec<(usize, usize)>>,
}

/// Color classes of a coloring, renumbered in order of first appearance.
struct Classes {
    count: usize,
    masks: [u64; MAX_MASK_VERTICES],
    index: [u8; MAX_MASK_VERTICES],
}

impl Classes {
    fn of(colors: &[u32]) -> Self {
        let mut values = [0u32; MAX_MASK_VERTICES];
        let mut c = Classes { count: 0, masks: [0; MAX_MASK_VERTICES], index: [0; MAX_MASK_VERTICES] };
        for (v, &col) in colors.iter().enumerate() {
            let i = match values[..c.count].iter().position(|&x| x == col) {
                Some(i) => i,
                None => {
                    values[c.count] = col;
                    c.count += 1;
                    c.count - 1
                }
            };
            c.masks[i] |= 1 << v;
            c.index[v] = i as u8;
        }
        c
    }

    fn masks(&self) -> &[u64] {
        &self.masks[..self.count]
    }
}

impl Checker {
    pub fn new(prop: &Property, g: &Graph) -> Result<Self, PropError> {
        let domain_size = prop.domain().size(g);
        if domain_size > MAX_MASK_VERTICES {
            return Err(GraphError::TooLarge { n: domain_size, max: MAX_MASK_VERTICES }.into());
        }
        let mut incidence = Vec::new();
        if prop.domain() == Domain::Edge {
            g.require_simple("edge coloring")?;
            incidence = vec![Vec::new(); g.n()];
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                incidence[u].push((v, i));
                incidence[v].push((u, i));
            }
        }
        Ok(Checker {
            prop: prop.clone(),
            frame: Frame::new(g)?,
            edges: g.edges().to_vec(),
            degrees: g.degrees().into_iter().map(|d| d as u32).collect(),
            parallel: g.multiplicities().iter().any(|&m| m > 1),
            incidence,
        })
    }

    pub fn property(&self) -> &Property {
        &self.prop
    }

    pub fn domain_size(&self) -> usize {
        match self.prop.domain() {
            Domain::Vertex => self.frame.n(),
            Domain::Edge => self.edges.len(),
        }
    }

    pub fn accepts(&self, colors: &[u32], k: u32) -> bool {
        debug_assert_eq!(colors.len(), self.domain_size());
        let adj = &self.frame.adj;
        match &self.prop {
            Property::Trivial => true,
            Property::Proper => self.proper(colors),
            Property::Harmonious => !self.parallel && self.proper(colors) && self.distinct_edge_pairs(colors),
            Property::Convex => Classes::of(colors).masks().iter().all(|&m| mask_connected(adj, m)),
            Property::Mcc(t) => Classes::of(colors)
                .masks()
                .iter()
                .all(|&m| mask_components(adj, m).iter().all(|c| c.count_ones() as usize <= *t)),
            Property::DisjointUnion(h) => {
                Classes::of(colors).masks().iter().all(|&m| components_match(&self.frame, m, h))
            }
            Property::HFree(h) => Classes::of(colors).masks().iter().all(|&m| !contains_induced(&self.frame, m, h)),
            Property::TImproper(t) => {
                let cl = Classes::of(colors);
                (0..colors.len()).all(|v| self.frame.degree_within(v, cl.masks[cl.index[v] as usize]) <= *t)
            }
            Property::Acyclic => self.proper(colors) && self.two_colored_forests(colors),
            Property::CoColoring => Classes::of(colors).masks().iter().all(|&m| {
                let independent = bits(m).all(|v| adj[v] & m == 0);
                independent || bits(m).all(|v| adj[v] & m == m & !(1 << v))
            }),
            Property::Injective => self.injective(colors),
            Property::SurjectiveProper => self.proper(colors) && Classes::of(colors).count as u32 == k,
            Property::DegreeColor => self.proper(colors) && colors.iter().zip(&self.degrees).all(|(&c, &d)| c == d),
            Property::Pair(pp) => pair_accepts(pp, &self.frame, Classes::of(colors).masks(), k),
            Property::EdgeProper => self.edge_proper(colors),
            Property::Rainbow => self.rainbow(colors),
        }
    }

    fn proper(&self, colors: &[u32]) -> bool {
        self.edges.iter().all(|&(u, v)| colors[u] != colors[v])
    }

    /// Each unordered pair of colors appears on at most one edge.
    fn distinct_edge_pairs(&self, colors: &[u32]) -> bool {
        let mut buf = [0u64; 64];
        let mut spill = Vec::new();
        let codes: &mut [u64] = if self.edges.len() <= buf.len() {
            &mut buf[..self.edges.len()]
        } else {
            spill.resize(self.edges.len(), 0);
            &mut spill
        };
        for (slot, &(u, v)) in codes.iter_mut().zip(&self.edges) {
            let (a, b) = (colors[u].min(colors[v]), colors[u].max(colors[v]));
            *slot = (a as u64) << 32 | b as u64;
        }
        codes.sort_unstable();
        codes.windows(2).all(|w| w[0] != w[1])
    }

    /// Every two color classes together induce a forest.
    fn two_colored_forests(&self, colors: &[u32]) -> bool {
        let cl = Classes::of(colors);
        let masks = cl.masks();
        for (i, &a) in masks.iter().enumerate() {
            for &b in &masks[i + 1..] {
                let set = a | b;
                let comps = mask_components(&self.frame.adj, set).len() as u32;
                if self.frame.edges_within(set) + comps != set.count_ones() {
                    return false;
                }
            }
        }
        true
    }

    fn injective(&self, colors: &[u32]) -> bool {
        let cl = Classes::of(colors);
        self.frame.adj.iter().all(|&nb| {
            let mut seen = 0u64;
            bits(nb).all(|u| {
                let bit = 1u64 << cl.index[u];
                let fresh = seen & bit == 0;
                seen |= bit;
                fresh
            })
        })
    }

    fn edge_proper(&self, colors: &[u32]) -> bool {
        self.incidence.iter().all(|inc| {
            inc.iter().enumerate().all(|(i, &(_, a))| inc[i + 1..].iter().all(|&(_, b)| colors[a] != colors[b]))
        })
    }

    /// Every two vertices are joined by a path whose edge colors are pairwise distinct.
    ///
    /// A walk with pairwise distinct edge colors uses each edge once and can be
    /// shortcut to such a path, so the search runs over (vertex, used colors)
    /// states rather than over simple paths.
    fn rainbow(&self, colors: &[u32]) -> bool {
        let n = self.frame.n();
        let cl = Classes::of(colors);
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut seen = HashSet::new();
        for s in 0..n {
            seen.clear();
            let mut reached = 1u64 << s;
            let mut stack = vec![(s, 0u64)];
            seen.insert((s, 0u64));
            while let Some((v, used)) = stack.pop() {
                for &(w, e) in &self.incidence[v] {
                    let bit = 1u64 << cl.index[e];
                    if used & bit == 0 && seen.insert((w, used | bit)) {
                        reached |= 1 << w;
                        stack.push((w, used | bit));
                    }
                }
                if reached == full {
                    break;
                }
            }
            if reached != full {
                return false;
            }
        }
        true
    }
}
