//! Coloring properties: named properties, the two-level `P₁`/`P₂` framework
//! and their checkers.

mod checker;
mod class;
mod pattern;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{mask_components, Graph, GraphError};

pub use checker::Checker;
pub use class::{Frame, GraphClass, PairProperty};
pub use pattern::{Pattern, MAX_PATTERN_VERTICES};

#[derive(Debug, Error)]
pub enum PropError {
    #[error("property `{property}` colors {expected:?}s but the coloring is on {got:?}s")]
    DomainMismatch { property: String, expected: Domain, got: Domain },
    #[error("property `{property}` needs parameter `{parameter}`")]
    MissingParameter { property: String, parameter: &'static str },
    #[error("unknown property or class token `{0}`")]
    BadToken(String),
    #[error("bad pattern graph `{0}` (expected K<n>, E<n>, P<n>, C<n> or S<n>)")]
    BadPattern(String),
    #[error("pattern graphs are limited to {MAX_PATTERN_VERTICES} vertices, got {0}")]
    PatternTooLarge(usize),
    #[error("pattern `{0}` must be connected")]
    PatternDisconnected(String),
    #[error("color {color} outside the palette 1..={k}")]
    ColorOutOfRange { color: u32, k: u32 },
    #[error("coloring assigns {got} values but the domain has {expected} elements")]
    NotTotal { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Vertex,
    Edge,
}

impl Domain {
    /// Number of elements a coloring of `g` assigns colors to.
    pub fn size(self, g: &Graph) -> usize {
        match self {
            Domain::Vertex => g.n(),
            Domain::Edge => g.e(),
        }
    }
}

/// A total map from vertices (or edge indices) to colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    domain: Domain,
    assignment: Vec<u32>,
    k: u32,
}

impl Coloring {
    pub fn new(domain: Domain, assignment: Vec<u32>, k: u32) -> Result<Self, PropError> {
        if let Some(&color) = assignment.iter().find(|&&c| c == 0 || c > k) {
            return Err(PropError::ColorOutOfRange { color, k });
        }
        Ok(Coloring { domain, assignment, k })
    }

    pub fn vertex(assignment: &[u32], k: u32) -> Result<Self, PropError> {
        Self::new(Domain::Vertex, assignment.to_vec(), k)
    }

    pub fn edge(assignment: &[u32], k: u32) -> Result<Self, PropError> {
        Self::new(Domain::Edge, assignment.to_vec(), k)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn used_colors(&self) -> BTreeSet<u32> {
        self.assignment.iter().copied().collect()
    }

    /// The same coloring with colors renamed by `perm` (`perm[c-1]` is the new name of `c`).
    pub fn permuted(&self, perm: &[u32]) -> Self {
        let assignment = self.assignment.iter().map(|&c| perm[c as usize - 1]).collect();
        Coloring { assignment, ..self.clone() }
    }

    /// 0-based color indices, the form the checkers consume.
    fn zero_based(&self) -> Vec<u32> {
        self.assignment.iter().map(|c| c - 1).collect()
    }
}

/// A coloring property `Φ`.
#[derive(Debug, Clone, PartialEq)]
pub enum Property {
    Trivial,
    Proper,
    Harmonious,
    Convex,
    EdgeProper,
    /// Monochromatic components have at most `t` vertices.
    Mcc(usize),
    /// Every color class induces a disjoint union of copies of `H`.
    DisjointUnion(Pattern),
    /// No color class contains an induced copy of `H`.
    HFree(Pattern),
    /// Every color class induces a graph of maximum degree `t` (parallel edges counted).
    TImproper(u32),
    Acyclic,
    CoColoring,
    Injective,
    Rainbow,
    Pair(PairProperty),
    /// Proper, and every one of the `k` palette colors is used.
    SurjectiveProper,
    /// Proper, and a vertex of degree `d` gets color `d + 1`.
    DegreeColor,
}

impl Property {
    pub fn domain(&self) -> Domain {
        match self {
            Property::EdgeProper | Property::Rainbow => Domain::Edge,
            _ => Domain::Vertex,
        }
    }

    /// Whether both invariance conditions are known to hold, so that the
    /// counting function is a polynomial assembled from exact-color counts.
    pub fn zilber_certified(&self) -> bool {
        match self {
            Property::SurjectiveProper | Property::DegreeColor => false,
            Property::Pair(pp) => pp.class_pred.known_subclass_of(&pp.pair_pred),
            _ => true,
        }
    }

    /// The `(P₁, P₂)` row expressing this property, where one exists.
    pub fn pair_form(&self) -> Option<PairProperty> {
        use GraphClass as C;
        let (p1, p2) = match self {
            Property::Trivial => (C::All, C::All),
            Property::Proper => (C::Edgeless, C::All),
            Property::Acyclic => (C::Edgeless, C::Forest),
            Property::Convex => (C::Connected, C::All),
            Property::Harmonious => (C::Edgeless, C::AtMostOneEdge),
            Property::Mcc(t) => (C::ComponentsAtMost(*t), C::All),
            Property::DisjointUnion(h) => (C::CopiesOf(h.clone()), C::All),
            Property::TImproper(t) => (C::MaxDegree(*t), C::All),
            Property::CoColoring => (C::CliqueOrEdgeless, C::All),
            Property::HFree(h) => (C::HFree(h.clone()), C::All),
            Property::Pair(pp) => return Some(pp.clone()),
            _ => return None,
        };
        Some(PairProperty::new(p1, p2))
    }

    /// The thirteen named properties, with default parameters where needed.
    pub fn named() -> Vec<Property> {
        let k2 = Pattern::parse("K2").expect("valid pattern");
        let p3 = Pattern::parse("P3").expect("valid pattern");
        vec![
            Property::Trivial,
            Property::Proper,
            Property::Harmonious,
            Property::Convex,
            Property::Mcc(2),
            Property::DisjointUnion(k2),
            Property::HFree(p3),
            Property::TImproper(1),
            Property::Acyclic,
            Property::CoColoring,
            Property::Injective,
            Property::EdgeProper,
            Property::Rainbow,
        ]
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Trivial => write!(f, "trivial"),
            Property::Proper => write!(f, "proper"),
            Property::Harmonious => write!(f, "harmonious"),
            Property::Convex => write!(f, "convex"),
            Property::EdgeProper => write!(f, "edge"),
            Property::Mcc(t) => write!(f, "mcc:t={t}"),
            Property::DisjointUnion(h) => write!(f, "du:H={}", h.name()),
            Property::HFree(h) => write!(f, "hfree:H={}", h.name()),
            Property::TImproper(t) => write!(f, "timp:t={t}"),
            Property::Acyclic => write!(f, "acyclic"),
            Property::CoColoring => write!(f, "cocolor"),
            Property::Injective => write!(f, "injective"),
            Property::Rainbow => write!(f, "rainbow"),
            Property::Pair(pp) => write!(f, "pair:{pp}"),
            Property::SurjectiveProper => write!(f, "surjective-proper"),
            Property::DegreeColor => write!(f, "degree-color"),
        }
    }
}

/// Splits `k1=v1,k2=v2` into pairs; a value may itself contain `=`.
fn parameters(s: &str) -> Result<Vec<(&str, &str)>, PropError> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.split_once('=').map(|(k, v)| (k.trim(), v.trim())).ok_or_else(|| PropError::BadToken(p.to_string())))
        .collect()
}

impl FromStr for Property {
    type Err = PropError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "surjective-proper" | "phi1" | "Φ₁:surjective-proper" | "Φ₁" => {
                return Ok(Property::SurjectiveProper)
            }
            "degree-color" | "phi2" | "Φ₂:degree-color" | "Φ₂" => return Ok(Property::DegreeColor),
            _ => {}
        }
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params = parameters(rest)?;
        let get = |key: &'static str| -> Result<&str, PropError> {
            params
                .iter()
                .find(|(k, _)| k.eq_ignore_ascii_case(key))
                .map(|(_, v)| *v)
                .ok_or_else(|| PropError::MissingParameter { property: name.to_string(), parameter: key })
        };
        let number = |key: &'static str| -> Result<u32, PropError> {
            let v = get(key)?;
            v.parse().map_err(|_| PropError::BadToken(format!("{key}={v}")))
        };
        let plain = |p: Property| if params.is_empty() { Ok(p) } else { Err(PropError::BadToken(s.to_string())) };
        match name {
            "trivial" => plain(Property::Trivial),
            "proper" => plain(Property::Proper),
            "harmonious" | "harm" => plain(Property::Harmonious),
            "convex" => plain(Property::Convex),
            "edge" | "edge-proper" => plain(Property::EdgeProper),
            "acyclic" => plain(Property::Acyclic),
            "cocolor" | "co-coloring" => plain(Property::CoColoring),
            "injective" => plain(Property::Injective),
            "rainbow" => plain(Property::Rainbow),
            "mcc" => Ok(Property::Mcc(number("t")? as usize)),
            "timp" => Ok(Property::TImproper(number("t")?)),
            "du" => Ok(Property::DisjointUnion(class::connected_pattern(get("H")?)?)),
            "hfree" => Ok(Property::HFree(class::nonempty_pattern(get("H")?)?)),
            "pair" => Ok(Property::Pair(PairProperty::new(get("p1")?.parse()?, get("p2")?.parse()?))),
            _ => Err(PropError::BadToken(s.to_string())),
        }
    }
}

/// Is `c ∈ Φ` for the graph `g`?
pub fn check(prop: &Property, g: &Graph, c: &Coloring) -> Result<bool, PropError> {
    if c.domain() != prop.domain() {
        return Err(PropError::DomainMismatch { property: prop.to_string(), expected: prop.domain(), got: c.domain() });
    }
    let checker = Checker::new(prop, g)?;
    if c.assignment.len() != checker.domain_size() {
        return Err(PropError::NotTotal { expected: checker.domain_size(), got: c.assignment.len() });
    }
    Ok(checker.accepts(&c.zero_based(), c.k()))
}

/// Does `c` satisfy the two-level property: every class in `P₁`, every union of
/// two distinct palette colors in `P₂`?
pub fn pair_check(pp: &PairProperty, g: &Graph, c: &Coloring) -> Result<bool, PropError> {
    check(&Property::Pair(pp.clone()), g, c)
}

/// Do the components of `G[class_vertices]` each form a copy of `pattern`?
pub fn induces_copy_union(g: &Graph, class_vertices: &[usize], pattern: &Graph) -> Result<bool, PropError> {
    let pattern = Pattern::new("H", pattern.clone())?;
    if !pattern.is_connected() {
        return Err(PropError::PatternDisconnected(pattern.name().to_string()));
    }
    let frame = Frame::new(g)?;
    let mut set = 0u64;
    for &v in class_vertices {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { v, n: g.n() }.into());
        }
        set |= 1 << v;
    }
    Ok(mask_components(&frame.adj, set).into_iter().all(|comp| {
        let verts: Vec<usize> = class::bits(comp).collect();
        let h = pattern.graph();
        verts.len() == h.n() && crate::graph::iso::is_isomorphic(&g.underlying_simple().induced(&verts), h)
    }))
}

#[cfg(test)]
mod tests;
