//! Exact counting of colorings: a brute-force oracle, the partition-based
//! exact-color counter, polynomial assembly and the invariance audit.

mod audit;
mod chain;
mod fast;
mod pruned;

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::poly::{factorial, int_to_rat, Basis, Poly, PolyError};
use crate::props::{Checker, PropError, Property};

pub use audit::{AuditReport, AuditRow, ConditionA, ConditionB};
pub use chain::{ChainResult, Construction};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error)]
pub enum CountError {
    #[error("{what} needs {needed} enumeration steps, over the budget of {budget}")]
    Budget { what: &'static str, needed: String, budget: u64 },
    #[error("`{property}` fails the invariance audit on this graph ({reason}); only per-k counts are available")]
    NotPolynomial { property: String, reason: String },
    #[error("construction `{construction}` does not apply to property `{property}`")]
    NotApplicable { construction: String, property: String },
    #[error("the chain cofactor vanishes at the evaluation point {0}")]
    CofactorZero(i64),
    #[error("{got} chain steps cannot determine a polynomial of degree up to {degree}")]
    TooFewPoints { got: usize, degree: usize },
    #[error("the fast path for `{0}` is limited to k <= 2")]
    FastPathRange(&'static str),
    #[error(transparent)]
    Prop(#[from] PropError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Bell number `B(n)`, the number of set partitions of an `n`-set.
pub fn bell(n: usize) -> BigUint {
    // Bell triangle
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().cloned().expect("nonempty row"));
        for x in &row {
            let v = next.last().expect("nonempty row") + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

/// Counting entry point. Holds the enumeration budget and a worker pool.
///
/// Every result is an exact integer that does not depend on the worker count.
#[derive(Clone)]
pub struct Engine {
    budget: u64,
    workers: usize,
    pool: Arc<rayon::ThreadPool>,
}

impl std::fmt::Debug for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Engine").field("budget", &self.budget).field("workers", &self.workers).finish()
    }
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(DEFAULT_BUDGET, 1)
    }
}

/// Per-graph exact-color counts `c(0..=D)` for one property.
#[derive(Debug, Clone, PartialEq)]
pub struct CountProfile {
    pub exact_counts: Vec<BigInt>,
    pub property: String,
    pub fingerprint: String,
}

impl CountProfile {
    pub fn poly(&self) -> Poly {
        Poly::new(Basis::Binomial, self.exact_counts.iter().map(int_to_rat).collect())
    }
}

/// Upper bound on the prefix split: enough tasks to balance, few enough to stay cheap.
fn split_depth(branching: usize, len: usize, workers: usize) -> usize {
    if workers <= 1 || branching <= 1 {
        return 0;
    }
    let mut depth = 0;
    let mut tasks = 1usize;
    while depth < len && tasks < 16 * workers {
        tasks = tasks.saturating_mul(branching);
        depth += 1;
    }
    depth
}

impl Engine {
    pub fn new(budget: u64, workers: usize) -> Self {
        let workers = workers.max(1);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool");
        Engine { budget, workers, pool: Arc::new(pool) }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    fn charge(&self, what: &'static str, needed: &BigUint) -> Result<(), CountError> {
        if *needed > BigUint::from(self.budget) {
            return Err(CountError::Budget { what, needed: needed.to_string(), budget: self.budget });
        }
        Ok(())
    }

    /// Calls `visit` on every map `0..d → 0..k`, split across the pool by
    /// fixing leading digits, and sums the per-task accumulators.
    fn sweep<A, F>(
        &self,
        d: usize,
        k: u32,
        init: impl Fn() -> A + Sync,
        visit: F,
        merge: impl Fn(A, A) -> A + Sync + Send,
    ) -> A
    where
        A: Send,
        F: Fn(&mut A, &[u32]) + Sync,
    {
        if k == 0 {
            let mut acc = init();
            if d == 0 {
                visit(&mut acc, &[]);
            }
            return acc;
        }
        let depth = split_depth(k as usize, d, self.workers);
        let tasks = (k as u64).pow(depth as u32);
        let run = |task: u64| {
            let mut acc = init();
            let mut colors = vec![0u32; d];
            let mut t = task;
            for c in colors[..depth].iter_mut().rev() {
                *c = (t % k as u64) as u32;
                t /= k as u64;
            }
            loop {
                visit(&mut acc, &colors);
                // odometer over the free positions
                let mut pos = d;
                loop {
                    if pos == depth {
                        return acc;
                    }
                    pos -= 1;
                    colors[pos] += 1;
                    if colors[pos] < k {
                        break;
                    }
                    colors[pos] = 0;
                }
            }
        };
        if depth == 0 {
            return run(0);
        }
        self.pool.install(|| (0..tasks).into_par_iter().map(run).reduce(&init, &merge))
    }

    /// `χ_Φ(G;k)` by enumerating all `k^D` colorings. The independent oracle.
    pub fn brute_count_at(&self, g: &Graph, prop: &Property, k: u32) -> Result<u64, CountError> {
        let checker = Checker::new(prop, g)?;
        let d = checker.domain_size();
        self.charge("brute-force enumeration", &BigUint::from(k).pow(d as u32))?;
        Ok(self.sweep(d, k, || 0u64, |acc, colors| *acc += checker.accepts(colors, k) as u64, |a, b| a + b))
    }

    /// Accepted set partitions of the domain, bucketed by block count, for at
    /// most `max_blocks` blocks. Each partition is checked as the coloring that
    /// numbers blocks by first appearance, with a palette of exactly that many colors.
    fn partition_counts(&self, checker: &Checker, max_blocks: usize) -> Result<Vec<u64>, CountError> {
        let d = checker.domain_size();
        self.charge("partition enumeration", &bell(d))?;
        let depth = split_depth(d.max(1), d, self.workers).min(d);
        // all restricted-growth prefixes of length `depth`
        let mut prefixes: Vec<Vec<u32>> = vec![Vec::new()];
        for _ in 0..depth {
            let mut next = Vec::new();
            for p in &prefixes {
                let blocks = p.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
                let limit = if blocks < max_blocks { blocks + 1 } else { blocks };
                for c in 0..limit as u32 {
                    let mut q = p.clone();
                    q.push(c);
                    next.push(q);
                }
            }
            prefixes = next;
        }
        let run = |prefix: &Vec<u32>| {
            let mut counts = vec![0u64; max_blocks + 1];
            let mut colors = vec![0u32; d];
            colors[..prefix.len()].copy_from_slice(prefix);
            let blocks = prefix.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
            fill(checker, &mut colors, prefix.len(), blocks, max_blocks, &mut counts);
            counts
        };
        let merge = |mut a: Vec<u64>, b: Vec<u64>| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        };
        let zero = || vec![0u64; max_blocks + 1];
        Ok(if prefixes.len() == 1 {
            run(&prefixes[0])
        } else {
            self.pool.install(|| prefixes.par_iter().map(run).reduce(zero, merge))
        })
    }

    /// `c_G^Φ(i)`: colorings in `Φ` that use exactly the colors of a fixed
    /// `i`-set.
    ///
    /// For properties with both invariance conditions this is `i!` times the
    /// number of accepted partitions into `i` blocks. Otherwise the surjective
    /// maps onto `[i]` with palette `i` are enumerated directly.
    pub fn exact_color_count(&self, g: &Graph, prop: &Property, i: usize) -> Result<BigInt, CountError> {
        let checker = Checker::new(prop, g)?;
        let d = checker.domain_size();
        if i > d {
            return Ok(BigInt::zero());
        }
        if prop.zilber_certified() {
            let counts = self.partition_counts(&checker, i)?;
            return Ok(BigInt::from(counts[i]) * factorial(i));
        }
        let k = i as u32;
        self.charge("surjective enumeration", &BigUint::from(k).pow(d as u32))?;
        let full = if k == 0 { 0u64 } else { (1u64 << k) - 1 };
        let count = self.sweep(
            d,
            k,
            || 0u64,
            |acc, colors| {
                let used = colors.iter().fold(0u64, |m, &c| m | 1 << c);
                if used == full && checker.accepts(colors, k) {
                    *acc += 1;
                }
            },
            |a, b| a + b,
        );
        Ok(BigInt::from(count))
    }

    /// `ĉhi_Φ(G;k)`, the number of colorings in `Φ` using exactly `k` given colors.
    pub fn hat_chi(&self, g: &Graph, prop: &Property, k: usize) -> Result<BigInt, CountError> {
        self.exact_color_count(g, prop, k)
    }

    /// All exact-color counts `c(0..=D)` from a single partition sweep.
    pub fn count_profile(&self, g: &Graph, prop: &Property) -> Result<CountProfile, CountError> {
        let checker = Checker::new(prop, g)?;
        let d = checker.domain_size();
        let counts = self.partition_counts(&checker, d)?;
        let exact_counts = counts.iter().enumerate().map(|(i, &c)| BigInt::from(c) * factorial(i)).collect();
        Ok(CountProfile { exact_counts, property: prop.to_string(), fingerprint: crate::graph::io::fingerprint(g) })
    }

    /// `χ_Φ(G;X)` in the binomial basis, `Σ c(i)·C(X,i)`.
    ///
    /// Properties not known to satisfy both invariance conditions are audited
    /// on `g` first and refused when the audit finds a violation.
    pub fn chi_polynomial(&self, g: &Graph, prop: &Property) -> Result<Poly, CountError> {
        if !prop.zilber_certified() {
            let report = self.zilber_audit(g, prop, audit::DEFAULT_K_MAX)?;
            if let Some(reason) = report.violation_summary() {
                return Err(CountError::NotPolynomial { property: prop.to_string(), reason });
            }
        }
        Ok(self.count_profile(g, prop)?.poly())
    }

    /// `χ_Φ(G;k)` by the cheapest exact route within budget: the polynomial
    /// if the partition sweep fits, otherwise full enumeration.
    pub fn count_at(&self, g: &Graph, prop: &Property, k: u32) -> Result<BigInt, CountError> {
        let d = prop.domain().size(g);
        let brute_cost = BigUint::from(k).pow(d as u32);
        if brute_cost <= bell(d) && brute_cost <= BigUint::from(self.budget) {
            return Ok(BigInt::from(self.brute_count_at(g, prop, k)?));
        }
        let value = self.chi_polynomial(g, prop)?.eval(&BigRational::from_integer(BigInt::from(k)));
        Ok(value.to_integer())
    }

    /// Values of `χ_Φ(G;k)` for each `k` by enumeration (used when no polynomial exists).
    pub fn counts_at(
        &self,
        g: &Graph,
        prop: &Property,
        ks: impl IntoIterator<Item = u32>,
    ) -> Result<Vec<(u32, u64)>, CountError> {
        ks.into_iter().map(|k| Ok((k, self.brute_count_at(g, prop, k)?))).collect()
    }
}

/// Completes a restricted-growth string from position `pos` and tallies
/// accepted leaves by block count.
fn fill(checker: &Checker, colors: &mut [u32], pos: usize, blocks: usize, max_blocks: usize, counts: &mut [u64]) {
    if pos == colors.len() {
        if checker.accepts(colors, blocks as u32) {
            counts[blocks] += 1;
        }
        return;
    }
    let limit = if blocks < max_blocks { blocks + 1 } else { blocks };
    for c in 0..limit {
        let nb = blocks.max(c + 1);
        colors[pos] = c as u32;
        fill(checker, colors, pos + 1, nb, max_blocks, counts);
    }
}

#[cfg(test)]
mod tests;
