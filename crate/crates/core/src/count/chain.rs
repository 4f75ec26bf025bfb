use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{CountError, Engine};
use crate::graph::{box_join, complete, disjoint_union, harmonious_gadget, join, star, Graph};
use crate::poly::{int_to_rat, lagrange_interpolate, Poly};
use crate::props::Property;

/// Graph families whose counts at one fixed point determine `χ_Φ(G;X)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    /// `G ⋈ K_n`: `χ(G ⋈ K_n; a) = a_(n)·χ(G; a−n)`.
    JoinKn,
    /// `Box_{H,v}` applied `n` times: `a_(n)·χ_{DU(H)}(G; a−n)`.
    BoxJoinH,
    /// Harmonious colorings of `S(G ⊔ K_{1,n})`, which factor as
    /// `a_(e+n)·(a−e−n)(a−e−n−1)^n·χ(G; a−e−n)` with `e = e(G)`.
    DisjointStar,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::JoinKn => "join",
            Construction::BoxJoinH => "box",
            Construction::DisjointStar => "star",
        })
    }
}

impl FromStr for Construction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "join" | "join_Kn" => Ok(Construction::JoinKn),
            "box" | "box_join_H" => Ok(Construction::BoxJoinH),
            "star" | "disjoint_star" => Ok(Construction::DisjointStar),
            _ => Err(format!("unknown construction `{s}` (expected join, box or star)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainStep {
    pub n: usize,
    /// Count for the `n`-th family member at the fixed point.
    pub member_count: BigInt,
    pub cofactor: BigInt,
    /// The argument `b` at which this step yields `χ_Φ(G;b)`.
    pub argument: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainResult {
    pub poly: Poly,
    pub point: u32,
    pub steps: Vec<ChainStep>,
}

fn falling(a: i64, n: usize) -> BigInt {
    (0..n as i64).fold(BigInt::from(1), |acc, i| acc * (a - i))
}

struct Plan<'a> {
    construction: Construction,
    g: &'a Graph,
    degree: usize,
    steps: Vec<usize>,
}

impl Plan<'_> {
    fn cofactor(&self, a: i64, n: usize) -> BigInt {
        match self.construction {
            Construction::JoinKn | Construction::BoxJoinH => falling(a, n),
            Construction::DisjointStar => {
                let e = self.g.e();
                let b = a - (e + n) as i64;
                falling(a, e + n) * b * BigInt::from(b - 1).pow(n as u32)
            }
        }
    }

    fn argument(&self, a: i64, n: usize) -> i64 {
        match self.construction {
            Construction::JoinKn | Construction::BoxJoinH => a - n as i64,
            Construction::DisjointStar => a - (self.g.e() + n) as i64,
        }
    }
}

impl Engine {
    /// Recovers `χ_Φ(G;X)` from counts of a constructed family at one point.
    ///
    /// Step `n` counts the `n`-th family member at the point `a`, divides out
    /// the known cofactor and so yields `χ_Φ(G;b_n)` at a shifted argument;
    /// interpolating through those values gives the polynomial. Without an
    /// explicit point, `a` is the smallest integer `≥ deg + 1` at which no
    /// cofactor vanishes.
    pub fn interpolation_chain(
        &self,
        g: &Graph,
        prop: &Property,
        construction: Construction,
        max_n: Option<usize>,
        point: Option<u32>,
    ) -> Result<ChainResult, CountError> {
        let not_applicable =
            || CountError::NotApplicable { construction: construction.to_string(), property: prop.to_string() };
        let (degree, first) = match (construction, prop) {
            (Construction::JoinKn, Property::Proper | Property::Acyclic) => (g.n(), 0),
            (Construction::BoxJoinH, Property::DisjointUnion(h)) => (g.n() / h.n(), 0),
            // K_{1,0} is an isolated vertex; the chain starts at the first proper star
            (Construction::DisjointStar, Property::Proper) => (g.n(), 1),
            _ => return Err(not_applicable()),
        };
        let last = max_n.unwrap_or(first + degree);
        let steps: Vec<usize> = (first..=last).collect();
        if steps.len() < degree + 1 {
            return Err(CountError::TooFewPoints { got: steps.len(), degree });
        }
        let plan = Plan { construction, g, degree, steps };
        let nonvanishing = |a: i64| plan.steps.iter().all(|&n| !plan.cofactor(a, n).is_zero());
        let a = match point {
            Some(a) if !nonvanishing(a as i64) => return Err(CountError::CofactorZero(a as i64)),
            Some(a) => a,
            None => {
                let mut a = plan.degree as u32 + 1;
                while !nonvanishing(a as i64) {
                    a += 1;
                }
                a
            }
        };
        let mut member = g.clone();
        let mut steps = Vec::new();
        let mut points = Vec::new();
        for &n in &plan.steps {
            let (graph, family_prop) = match (construction, prop) {
                (Construction::JoinKn, _) => (join(g, &complete(n))?, prop.clone()),
                (Construction::BoxJoinH, Property::DisjointUnion(h)) => {
                    if n > 0 {
                        member = box_join(&member, h.graph(), 0)?;
                    }
                    (member.clone(), prop.clone())
                }
                (Construction::DisjointStar, _) => {
                    (harmonious_gadget(&disjoint_union(g, &star(n))?)?, Property::Harmonious)
                }
                _ => unreachable!("applicability checked above"),
            };
            let member_count = self.count_at(&graph, &family_prop, a)?;
            let cofactor = plan.cofactor(a as i64, n);
            let argument = plan.argument(a as i64, n);
            points.push((
                BigRational::from_integer(BigInt::from(argument)),
                int_to_rat(&member_count) / int_to_rat(&cofactor),
            ));
            steps.push(ChainStep { n, member_count, cofactor, argument });
        }
        Ok(ChainResult { poly: lagrange_interpolate(&points)?, point: a, steps })
    }
}
