//! CNF instances, the reductions from counting satisfiability problems to
//! coloring and cut counting, and brute-force certification of each
//! reduction's counting claim.

mod build;
mod certify;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::count::CountError;
use crate::graph::GraphError;

pub use build::{alpha_sat_to_du, maxcut_to_cocircuits, monotone2sat_to_maxcut, nae_to_mcc};
pub use certify::{
    certify_alpha_du, certify_maxcut_cocircuits, certify_monotone_maxcut, certify_nae_mcc, gaussian_recover,
    stretch_identity_check, weighted_nae_models, AlphaCertification, CocircuitCertification, MaxCutCertification,
    NaeCertification, StretchReport,
};

/// Largest variable count accepted by [`count_models`].
pub const MAX_MODEL_VARS: usize = 24;

#[derive(Debug, Error)]
pub enum GadgetError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown semantics tag `{0}` (expected naeW, AofB with B = 2A, or monotone2sat)")]
    BadSemantics(String),
    #[error("clause {clause} has width {got}, expected {expected}")]
    Width { clause: usize, expected: usize, got: usize },
    #[error("clause {clause} repeats variable {var}")]
    RepeatedVariable { clause: usize, var: u32 },
    #[error("clause {clause} mentions variable {var}, outside 1..={num_vars}")]
    VariableOutOfRange { clause: usize, var: u32, num_vars: usize },
    #[error("clause {clause} has a negated literal, which monotone 2-SAT forbids")]
    NegativeLiteral { clause: usize },
    #[error("{0}")]
    Unsupported(String),
    #[error("{vars} variables exceed the enumeration limit of {max}")]
    TooManyVariables { vars: usize, max: usize },
    #[error("the recovered cocircuit counts are inconsistent: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<crate::props::PropError> for GadgetError {
    fn from(e: crate::props::PropError) -> Self {
        GadgetError::Count(e.into())
    }
}

/// Which assignments count as models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Semantics {
    /// Every clause of width `w` has a true and a false literal.
    Nae(usize),
    /// Exactly `α` literals of every width-`2α` clause are true.
    AlphaOf2Alpha(usize),
    /// Every clause of two positive literals has a true literal.
    Monotone2Sat,
}

impl Semantics {
    fn width(&self) -> usize {
        match *self {
            Semantics::Nae(w) => w,
            Semantics::AlphaOf2Alpha(a) => 2 * a,
            Semantics::Monotone2Sat => 2,
        }
    }

    fn satisfied(&self, true_literals: usize, width: usize) -> bool {
        match *self {
            Semantics::Nae(_) => true_literals > 0 && true_literals < width,
            Semantics::AlphaOf2Alpha(a) => true_literals == a,
            Semantics::Monotone2Sat => true_literals > 0,
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Semantics::Nae(w) => write!(f, "nae{w}"),
            Semantics::AlphaOf2Alpha(a) => write!(f, "{a}of{}", 2 * a),
            Semantics::Monotone2Sat => f.write_str("monotone2sat"),
        }
    }
}

impl FromStr for Semantics {
    type Err = GadgetError;

    fn from_str(s: &str) -> Result<Self, GadgetError> {
        let bad = || GadgetError::BadSemantics(s.to_string());
        let lower = s.to_ascii_lowercase();
        if matches!(lower.as_str(), "monotone2sat" | "monotone_2sat" | "monotone") {
            return Ok(Semantics::Monotone2Sat);
        }
        if let Some(w) = lower.strip_prefix("nae") {
            let w: usize = w.trim_start_matches('_').parse().map_err(|_| bad())?;
            return if w >= 3 { Ok(Semantics::Nae(w)) } else { Err(bad()) };
        }
        if let Some(a) = lower.strip_prefix("alpha") {
            let a: usize = a.trim_start_matches('_').parse().map_err(|_| bad())?;
            return if a >= 1 { Ok(Semantics::AlphaOf2Alpha(a)) } else { Err(bad()) };
        }
        if let Some((a, b)) = lower.split_once("of") {
            let (a, b): (usize, usize) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
            if a >= 1 && b == 2 * a {
                return Ok(Semantics::AlphaOf2Alpha(a));
            }
        }
        Err(bad())
    }
}

/// A literal is a nonzero signed variable index, as in DIMACS.
pub type Literal = i32;

/// Variable of a literal, 1-based.
pub fn var(l: Literal) -> u32 {
    l.unsigned_abs()
}

/// Label of a literal: `x3` or `-x3`.
pub fn literal_label(l: Literal) -> String {
    if l < 0 {
        format!("-x{}", var(l))
    } else {
        format!("x{l}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfInstance {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
    semantics: Semantics,
}

impl CnfInstance {
    /// Validates clause widths, variable ranges and the absence of repeated
    /// variables within a clause.
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>, semantics: Semantics) -> Result<Self, GadgetError> {
        let width = semantics.width();
        for (i, clause) in clauses.iter().enumerate() {
            let clause_no = i + 1;
            if clause.len() != width {
                return Err(GadgetError::Width { clause: clause_no, expected: width, got: clause.len() });
            }
            for (j, &l) in clause.iter().enumerate() {
                let v = var(l);
                if l == 0 || v as usize > num_vars {
                    return Err(GadgetError::VariableOutOfRange { clause: clause_no, var: v, num_vars });
                }
                if semantics == Semantics::Monotone2Sat && l < 0 {
                    return Err(GadgetError::NegativeLiteral { clause: clause_no });
                }
                if clause[..j].iter().any(|&m| var(m) == v) {
                    return Err(GadgetError::RepeatedVariable { clause: clause_no, var: v });
                }
            }
        }
        Ok(CnfInstance { num_vars, clauses, semantics })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    /// True literals of each clause under an assignment (bit `v-1` = variable `v`).
    pub fn true_literals(&self, assignment: u32) -> impl Iterator<Item = usize> + '_ {
        self.clauses
            .iter()
            .map(move |c| c.iter().filter(|&&l| (assignment >> (var(l) - 1) & 1 == 1) == (l > 0)).count())
    }

    pub fn is_model(&self, assignment: u32) -> bool {
        self.clauses.iter().zip(self.true_literals(assignment)).all(|(c, t)| self.semantics.satisfied(t, c.len()))
    }

    /// DIMACS text with a semantics comment, readable by [`parse_cnf`].
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\nc semantics {}\n", self.num_vars, self.clauses.len(), self.semantics);
        for c in &self.clauses {
            for l in c {
                out.push_str(&l.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Parses DIMACS CNF with a `c semantics <tag>` comment line. Clauses may span
/// lines; each ends at a `0`.
pub fn parse_cnf(text: &str) -> Result<CnfInstance, GadgetError> {
    let mut header: Option<(usize, usize)> = None;
    let mut semantics = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line == "%" {
            continue;
        }
        let err = |message: String| GadgetError::Parse { line: line_no, message };
        if let Some(rest) = line.strip_prefix('c') {
            let mut words = rest.split_whitespace();
            if words.next() == Some("semantics") {
                let tag = words.next().ok_or_else(|| err("missing semantics tag".into()))?;
                semantics = Some(tag.parse::<Semantics>()?);
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            if header.is_some() {
                return Err(err("duplicate header".into()));
            }
            let words: Vec<&str> = rest.split_whitespace().collect();
            match words.as_slice() {
                ["cnf", v, c] => {
                    let v = v.parse().map_err(|_| err(format!("bad variable count `{v}`")))?;
                    let c = c.parse().map_err(|_| err(format!("bad clause count `{c}`")))?;
                    header = Some((v, c));
                }
                _ => return Err(err("expected `p cnf <vars> <clauses>`".into())),
            }
            continue;
        }
        if header.is_none() {
            return Err(err("clause before the `p cnf` header".into()));
        }
        for token in line.split_whitespace() {
            let l: Literal = token.parse().map_err(|_| err(format!("bad literal `{token}`")))?;
            if l == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(l);
            }
        }
    }
    let end = |message: &str| GadgetError::Parse { line: last_line, message: message.to_string() };
    let (num_vars, num_clauses) = header.ok_or_else(|| end("missing `p cnf` header"))?;
    if !current.is_empty() {
        return Err(end("last clause is not terminated by 0"));
    }
    if clauses.len() != num_clauses {
        return Err(end(&format!("header declares {num_clauses} clauses, found {}", clauses.len())));
    }
    let semantics = semantics.ok_or_else(|| end("missing `c semantics <tag>` line"))?;
    CnfInstance::new(num_vars, clauses, semantics)
}

/// Number of models, by enumerating all `2^V` assignments.
pub fn count_models(cnf: &CnfInstance) -> Result<u64, GadgetError> {
    check_vars(cnf)?;
    Ok((0..1u64 << cnf.num_vars).into_par_iter().filter(|&a| cnf.is_model(a as u32)).count() as u64)
}

fn check_vars(cnf: &CnfInstance) -> Result<(), GadgetError> {
    if cnf.num_vars > MAX_MODEL_VARS {
        return Err(GadgetError::TooManyVariables { vars: cnf.num_vars, max: MAX_MODEL_VARS });
    }
    Ok(())
}

#[cfg(test)]
mod tests;
