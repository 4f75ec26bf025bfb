use super::{CountError, Engine};
use crate::graph::{mask_components, Graph};
use crate::props::{Checker, Domain, Frame, Property};

/// Properties whose failure on a partial coloring is permanent: once a class
/// component is too large (or, for clique patterns, not a clique), coloring
/// more vertices can only grow it.
fn prunable(prop: &Property) -> bool {
    match prop {
        Property::Trivial | Property::Proper | Property::Mcc(_) | Property::TImproper(_) => true,
        Property::DisjointUnion(h) => {
            let n = h.n();
            h.graph().e() == n * (n - 1) / 2
        }
        _ => false,
    }
}

fn doomed(prop: &Property, frame: &Frame, masks: &[u64], assigned: u64) -> bool {
    let adj = &frame.adj;
    match prop {
        Property::Proper => masks.iter().any(|&m| frame.edges_within(m) > 0),
        Property::Mcc(t) => masks.iter().any(|&m| mask_components(adj, m).iter().any(|c| c.count_ones() as usize > *t)),
        Property::TImproper(t) => masks.iter().any(|&m| {
            let mut rest = m & assigned;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if frame.degree_within(v, m) > *t {
                    return true;
                }
            }
            false
        }),
        Property::DisjointUnion(h) => masks.iter().any(|&m| {
            mask_components(adj, m).iter().any(|&c| {
                let mut rest = c;
                let mut clique = true;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    clique &= adj[v] & c == c & !(1 << v);
                }
                !clique || c.count_ones() as usize > h.n()
            })
        }),
        _ => false,
    }
}

impl Engine {
    /// `χ_Φ(G;k)` by depth-first enumeration that abandons partial colorings
    /// which can no longer succeed. Every completed coloring is still checked
    /// in full, so the count is exact; the budget bounds the number of
    /// search nodes. Properties without a sound pruning rule fall back to
    /// [`Engine::brute_count_at`].
    pub fn pruned_count_at(&self, g: &Graph, prop: &Property, k: u32) -> Result<u64, CountError> {
        if prop.domain() != Domain::Vertex || !prunable(prop) {
            return self.brute_count_at(g, prop, k);
        }
        self.pruned_colorings(g, prop, k, |_| {})
    }

    /// Calls `visit` on every accepted coloring (0-based colors) in
    /// lexicographic order and returns how many there were. Only properties
    /// with a pruning rule are enumerated this way; others are refused.
    pub fn pruned_colorings(
        &self,
        g: &Graph,
        prop: &Property,
        k: u32,
        visit: impl FnMut(&[u32]),
    ) -> Result<u64, CountError> {
        if prop.domain() != Domain::Vertex || !prunable(prop) {
            return Err(CountError::NotApplicable {
                construction: "pruned enumeration".into(),
                property: prop.to_string(),
            });
        }
        let checker = Checker::new(prop, g)?;
        let frame = Frame::new(g)?;
        let n = g.n();
        let mut search = Search {
            prop,
            checker: &checker,
            frame: &frame,
            colors: vec![0; n],
            masks: vec![0; k as usize],
            k,
            nodes: 0,
            budget: self.budget,
            visit,
        };
        let count = search.run(0, 0)?;
        Ok(count)
    }
}

struct Search<'a, F> {
    prop: &'a Property,
    checker: &'a Checker,
    frame: &'a Frame,
    colors: Vec<u32>,
    masks: Vec<u64>,
    k: u32,
    nodes: u64,
    budget: u64,
    visit: F,
}

impl<F: FnMut(&[u32])> Search<'_, F> {
    fn run(&mut self, v: usize, assigned: u64) -> Result<u64, CountError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(CountError::Budget {
                what: "pruned enumeration",
                needed: format!("more than {}", self.budget),
                budget: self.budget,
            });
        }
        if v == self.colors.len() {
            let ok = self.checker.accepts(&self.colors, self.k);
            if ok {
                (self.visit)(&self.colors);
            }
            return Ok(ok as u64);
        }
        let mut total = 0;
        for c in 0..self.k {
            self.colors[v] = c;
            self.masks[c as usize] |= 1 << v;
            let assigned = assigned | 1 << v;
            if !doomed(self.prop, self.frame, &self.masks, assigned) {
                total += self.run(v + 1, assigned)?;
            }
            self.masks[c as usize] &= !(1 << v);
        }
        Ok(total)
    }
}
