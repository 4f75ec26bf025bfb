//! A named battery of exact identities between coloring counts, each checked
//! on a graph family and reported with a shrunk counterexample on failure.

mod checks;

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use thiserror::Error;

use crate::count::{CountError, Engine};
use crate::gadgets::GadgetError;
use crate::graph::iso::nonisomorphic_graphs;
use crate::graph::{io, Graph, GraphError};
use crate::props::{Pattern, PropError};

pub use checks::{mcc_ext_sides, IDENTITIES};

#[derive(Debug, Error)]
pub enum IdentityError {
    #[error("unknown identity `{0}`; known: {known}", known = IDENTITIES.join(", "))]
    Unknown(String),
    #[error("graph families are enumerated up to {max} vertices, got {got}")]
    BoundTooLarge { got: usize, max: usize },
    #[error("bad instance parameter: {0}")]
    Parameter(String),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
}

impl From<GraphError> for IdentityError {
    fn from(e: GraphError) -> Self {
        IdentityError::Count(e.into())
    }
}

impl From<PropError> for IdentityError {
    fn from(e: PropError) -> Self {
        IdentityError::Count(e.into())
    }
}

/// Size limits for the sampled families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Largest `n(G)` in exhaustive families (all graphs up to isomorphism).
    pub max_n: usize,
    /// Largest `e(G)` where an identity builds one vertex per edge.
    pub max_edges: usize,
    /// Largest `m` in the stretch family (connected graphs).
    pub max_m: usize,
    /// Largest integer point for pointwise identities that do not fix it.
    pub max_k: u32,
    /// Largest size of an attached `K_n`, star or pendant parameter.
    pub max_join: usize,
    /// Largest stretch length `l`.
    pub max_l: usize,
    /// Random connected instances for the cut identity.
    pub samples: usize,
    /// Largest `n` among the random connected instances.
    pub max_random_n: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_n: 4, max_edges: 4, max_m: 5, max_k: 3, max_join: 2, max_l: 3, samples: 100, max_random_n: 7 }
    }
}

pub const MAX_FAMILY_N: usize = 6;

/// Extra parameters of one instance.
#[derive(Debug, Clone, PartialEq)]
pub enum Param {
    None,
    /// Point `k`, join size `n`, star size, stretch length or `t`.
    Int(&'static str, usize),
    Pattern(Pattern, usize),
    Pair(usize, usize),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::None => Ok(()),
            Param::Int(name, v) => write!(f, "{name}={v}"),
            Param::Pattern(h, v) => write!(f, "H={},v={v}", h.name()),
            Param::Pair(t, k) => write!(f, "t={t},k={k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub graph: Graph,
    pub param: Param,
}

/// The two sides of a failed comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub graph: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub parameter: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub passed: bool,
    pub instances: usize,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Variant {
    pub statement: &'static str,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    /// Exact polynomial equality.
    Poly,
    /// Exact integer equality at every point in range.
    Pointwise,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: &'static str,
    pub statement: &'static str,
    pub reading: Option<&'static str>,
    pub comparison: Comparison,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// A repaired form of the statement, checked on the same family.
    pub corrected: Option<Variant>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub seed: u64,
    pub bounds: Bounds,
    pub passed: usize,
    pub failed: usize,
    pub reports: Vec<IdentityReport>,
}

/// All graphs up to isomorphism with `lo ≤ n ≤ hi`.
pub(crate) fn small_graphs(lo: usize, hi: usize) -> Result<Vec<Graph>, IdentityError> {
    if hi > MAX_FAMILY_N {
        return Err(IdentityError::BoundTooLarge { got: hi, max: MAX_FAMILY_N });
    }
    Ok((lo..=hi).flat_map(nonisomorphic_graphs).collect())
}

/// Random connected graphs: `n` uniform in `1..=max_n`, edges with
/// probability 1/2, redrawn until connected.
pub(crate) fn random_connected(rng: &mut StdRng, count: usize, max_n: usize) -> Vec<Graph> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n.max(1));
            loop {
                let edges: Vec<_> =
                    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.5)).collect();
                let g = Graph::new(n, &edges).expect("valid edges");
                if g.is_connected() {
                    break g;
                }
            }
        })
        .collect()
}

type CheckFn = fn(&Engine, &Case) -> Result<Option<Mismatch>, IdentityError>;

pub(crate) struct Identity {
    pub name: &'static str,
    pub statement: &'static str,
    pub reading: Option<&'static str>,
    pub comparison: Comparison,
    pub family: fn(&Bounds, &mut StdRng) -> Result<Vec<Case>, IdentityError>,
    /// Whether a shrunk graph still belongs to the family.
    pub admissible: fn(&Case) -> bool,
    pub check: CheckFn,
    pub corrected: Option<(&'static str, CheckFn)>,
}

/// Removes vertices one at a time, keeping any removal that preserves the failure.
fn shrink(
    engine: &Engine,
    id: &Identity,
    check: CheckFn,
    mut case: Case,
    mut mismatch: Mismatch,
) -> Result<Witness, IdentityError> {
    'outer: loop {
        for v in 0..case.graph.n() {
            let smaller = Case { graph: case.graph.remove_vertex(v), param: case.param.clone() };
            if !(id.admissible)(&smaller) {
                continue;
            }
            if let Some(m) = check(engine, &smaller)? {
                case = smaller;
                mismatch = m;
                continue 'outer;
            }
        }
        break;
    }
    Ok(Witness {
        graph: io::fingerprint(&case.graph),
        n: case.graph.n(),
        edges: case.graph.edges().to_vec(),
        parameter: case.param.to_string(),
        left: mismatch.left,
        right: mismatch.right,
    })
}

fn verdict(engine: &Engine, id: &Identity, check: CheckFn, cases: &[Case]) -> Result<Verdict, IdentityError> {
    for case in cases {
        if let Some(m) = check(engine, case)? {
            let witness = shrink(engine, id, check, case.clone(), m)?;
            return Ok(Verdict { passed: false, instances: cases.len(), witness: Some(witness) });
        }
    }
    Ok(Verdict { passed: true, instances: cases.len(), witness: None })
}

fn lookup(name: &str) -> Result<&'static Identity, IdentityError> {
    checks::REGISTRY.iter().find(|id| id.name == name).ok_or_else(|| IdentityError::Unknown(name.to_string()))
}

/// Checks one identity on its family. Deterministic given `seed`.
pub fn run_identity(engine: &Engine, name: &str, bounds: &Bounds, seed: u64) -> Result<IdentityReport, IdentityError> {
    let id = lookup(name)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let cases = (id.family)(bounds, &mut rng)?;
    report(engine, id, &cases)
}

/// Checks one identity on the given instances instead of its family. Each
/// case must carry the parameter the identity expects.
pub fn run_identity_on(engine: &Engine, name: &str, cases: &[Case]) -> Result<IdentityReport, IdentityError> {
    report(engine, lookup(name)?, cases)
}

fn report(engine: &Engine, id: &Identity, cases: &[Case]) -> Result<IdentityReport, IdentityError> {
    let main = verdict(engine, id, id.check, cases)?;
    let corrected = match id.corrected {
        Some((statement, check)) => Some(Variant { statement, verdict: verdict(engine, id, check, cases)? }),
        None => None,
    };
    Ok(IdentityReport {
        name: id.name,
        statement: id.statement,
        reading: id.reading,
        comparison: id.comparison,
        verdict: main,
        corrected,
        error: None,
    })
}

/// Runs every identity. Errors (such as an exhausted budget) are recorded in
/// the failing report rather than returned.
pub fn run_all(engine: &Engine, bounds: &Bounds, seed: u64) -> Summary {
    let reports: Vec<IdentityReport> = checks::REGISTRY
        .iter()
        .map(|id| {
            run_identity(engine, id.name, bounds, seed).unwrap_or_else(|e| IdentityReport {
                name: id.name,
                statement: id.statement,
                reading: id.reading,
                comparison: id.comparison,
                verdict: Verdict { passed: false, instances: 0, witness: None },
                corrected: None,
                error: Some(e.to_string()),
            })
        })
        .collect();
    let passed = reports.iter().filter(|r| r.verdict.passed).count();
    Summary { seed, bounds: *bounds, passed, failed: reports.len() - passed, reports }
}

#[cfg(test)]
mod tests;
