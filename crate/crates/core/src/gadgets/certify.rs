use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::build::{alpha_sat_to_du, maxcut_to_cocircuits, monotone2sat_to_maxcut, nae_to_mcc};
use super::{check_vars, count_models, CnfInstance, GadgetError, Semantics};
use crate::count::Engine;
use crate::graph::{bridge_count, count_cocircuits, cut_size_histogram, stretch, Graph};
use crate::props::{Pattern, Property};

fn decimal<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NaeCertification {
    pub t: usize,
    pub vertices: usize,
    pub models: u64,
    /// `χ_{mcc_t}(gadget; 2)`
    pub colorings: u64,
    /// `Σ_models Π_clauses C(t-1, t-a)` with `a` true literals per clause.
    pub weighted_models: u64,
    pub matches: bool,
}

/// Models weighted by the number of ways to complete each clause clique:
/// a clause with `a` true literals leaves `t - a` of its `t - 1` unlabeled
/// vertices to take the "true" color.
pub fn weighted_nae_models(cnf: &CnfInstance, t: usize) -> Result<u64, GadgetError> {
    check_vars(cnf)?;
    let mut total = 0u64;
    for a in 0..1u32 << cnf.num_vars() {
        if cnf.is_model(a) {
            total += cnf
                .true_literals(a)
                .map(|trues| if trues <= t { binomial(t as u64 - 1, (t - trues) as u64) } else { 0 })
                .product::<u64>();
        }
    }
    Ok(total)
}

/// Counts NAE models and mcc_t 2-colorings of the clause/bridge gadget.
pub fn certify_nae_mcc(engine: &Engine, cnf: &CnfInstance, t: usize) -> Result<NaeCertification, GadgetError> {
    let g = nae_to_mcc(cnf, t)?;
    let models = count_models(cnf)?;
    let colorings = engine.pruned_count_at(&g, &Property::Mcc(t), 2)?;
    Ok(NaeCertification {
        t,
        vertices: g.n(),
        models,
        colorings,
        weighted_models: weighted_nae_models(cnf, t)?,
        matches: models == colorings,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaCertification {
    pub alpha: usize,
    pub vertices: usize,
    pub models: u64,
    /// `χ_{DU(K_α)}(gadget; 2)`
    pub colorings: u64,
    /// Colorings in which every label class is monochromatic and opposite
    /// literals get different colors.
    pub consistent: u64,
    /// Distinct models read off consistent colorings (color 1 = true).
    pub induced_models: u64,
    pub matches: bool,
    /// Every coloring is consistent and the read-off map hits every model once.
    pub bijective: bool,
}

/// Counts α-of-2α models and DU(K_α) 2-colorings of the clique gadget, and
/// pairs the two enumerations through the vertex labels.
pub fn certify_alpha_du(engine: &Engine, cnf: &CnfInstance) -> Result<AlphaCertification, GadgetError> {
    let g = alpha_sat_to_du(cnf)?;
    let Semantics::AlphaOf2Alpha(alpha) = cnf.semantics() else { unreachable!("checked by alpha_sat_to_du") };
    let models = count_models(cnf)?;
    let labels = g.labels().expect("gadget graphs are labeled");
    let literal_of: Vec<(usize, bool)> = labels
        .iter()
        .map(|l| {
            let positive = !l.starts_with('-');
            let v: usize = l.trim_start_matches('-')[1..].parse().expect("literal label");
            (v - 1, positive)
        })
        .collect();
    let mut consistent = 0u64;
    let mut induced = BTreeSet::new();
    let mut all_models = true;
    let prop = Property::DisjointUnion(Pattern::parse(&format!("K{alpha}"))?);
    let colorings = engine.pruned_colorings(&g, &prop, 2, |colors| {
        let mut value: Vec<Option<bool>> = vec![None; cnf.num_vars()];
        let ok = literal_of.iter().zip(colors).all(|(&(v, positive), &c)| {
            let truth = (c == 0) == positive;
            *value[v].get_or_insert(truth) == truth
        });
        if ok {
            consistent += 1;
            let a = value.iter().enumerate().fold(0u32, |a, (v, t)| a | (t.unwrap_or(false) as u32) << v);
            all_models &= cnf.is_model(a);
            induced.insert(a);
        }
    })?;
    let induced_models = induced.len() as u64;
    Ok(AlphaCertification {
        alpha,
        vertices: g.n(),
        models,
        colorings,
        consistent,
        induced_models,
        matches: models == colorings,
        bijective: consistent == colorings && all_models && induced_models == colorings && induced_models == models,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxCutCertification {
    pub clauses: usize,
    pub vertices: usize,
    pub k: usize,
    pub models: u64,
    /// Cuts of the gadget with exactly `k` crossing edges.
    pub cuts: u64,
    /// `c` with `cuts = c^|C| · models`, when such an integer exists.
    pub per_clause_multiplier: Option<u64>,
    pub matches_two: bool,
    pub matches_three: bool,
}

/// Counts monotone 2-SAT models and the gadget's cuts of size `8|C|`, and
/// determines the per-clause multiplier between them.
pub fn certify_monotone_maxcut(cnf: &CnfInstance) -> Result<MaxCutCertification, GadgetError> {
    let (g, k) = monotone2sat_to_maxcut(cnf)?;
    let models = count_models(cnf)?;
    let cuts = cut_size_histogram(&g)?.get(&k).copied().unwrap_or(0);
    let m = cnf.clauses().len() as u32;
    let scaled = |c: u64| BigInt::from(c).pow(m) * models == BigInt::from(cuts);
    let per_clause_multiplier = if m == 0 || models == 0 {
        None
    } else {
        let ratio = cuts / models;
        // integer m-th root of the ratio, if exact
        let root = (1..=ratio).find(|&c| BigInt::from(c).pow(m) >= BigInt::from(ratio));
        root.filter(|&c| scaled(c))
    };
    Ok(MaxCutCertification {
        clauses: m as usize,
        vertices: g.n(),
        k,
        models,
        cuts,
        per_clause_multiplier,
        matches_two: scaled(2),
        matches_three: scaled(3),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CocircuitCertification {
    pub n: usize,
    pub k: usize,
    pub k_prime: usize,
    /// Bipartitions of `g` with exactly `k` crossing edges, one shore
    /// possibly empty (the Max Cut solutions the construction lifts).
    pub cuts: u64,
    /// `N_{k'}(G')`
    pub cocircuits: u64,
    /// `2^{n²+1}`
    #[serde(serialize_with = "decimal")]
    pub multiplier: BigInt,
    pub matches: bool,
}

/// Compares `N_{k'}(G')` with `2^{n²+1}` times the size-`k` cuts of `g`.
pub fn certify_maxcut_cocircuits(g: &Graph, k: usize) -> Result<CocircuitCertification, GadgetError> {
    let (gp, k_prime) = maxcut_to_cocircuits(g, k)?;
    let n = g.n();
    let trivial = u64::from(k == 0 && n > 0);
    let cuts = cut_size_histogram(g)?.get(&k).copied().unwrap_or(0) + trivial;
    let cocircuits = count_cocircuits(&gp)?.of_size(k_prime);
    let multiplier = BigInt::from(2).pow((n * n + 1) as u32);
    let matches = &multiplier * cuts == BigInt::from(cocircuits);
    Ok(CocircuitCertification { n, k, k_prime, cuts, cocircuits, multiplier, matches })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StretchReport {
    pub l: usize,
    pub m: usize,
    pub bridges: usize,
    /// `N(G_l)` by enumeration
    pub left: u64,
    /// `Σ_k l^k N_k(G) + C(l,2)·m`
    pub right: u64,
    /// The same sum with offset `C(l,2)·(m − bridges)`: a pair of cut edges
    /// inside the path of a bridge splits off three components, not two.
    pub right_bridge_corrected: u64,
    pub holds: bool,
    pub holds_bridge_corrected: bool,
}

/// Checks the stretch formula for `N(G_l)` against direct enumeration.
pub fn stretch_identity_check(g: &Graph, l: usize) -> Result<StretchReport, GadgetError> {
    let base = count_cocircuits(g)?;
    let left = count_cocircuits(&stretch(g, l)?)?.total;
    let m = g.e();
    let bridges = bridge_count(g);
    let sum: u64 = base.by_size.iter().map(|(&k, &nk)| (l as u64).pow(k as u32) * nk).sum();
    let pairs = binomial(l as u64, 2);
    let right = sum + pairs * m as u64;
    let right_bridge_corrected = sum + pairs * (m - bridges) as u64;
    Ok(StretchReport {
        l,
        m,
        bridges,
        left,
        right,
        right_bridge_corrected,
        holds: left == right,
        holds_bridge_corrected: left == right_bridge_corrected,
    })
}

/// Recovers `N_1(G)..N_m(G)` from `N(G_l)` for `l = 1..m` by exact Gaussian
/// elimination on `Σ_k l^k N_k = N(G_l) − C(l,2)·(m − bridges)`.
///
/// `bridges = 0` gives the offset `C(l,2)·m`, which is right for bridgeless
/// graphs. Non-integral or negative solutions are reported as inconsistent.
pub fn gaussian_recover(stretch_counts: &[BigInt], m: usize, bridges: usize) -> Result<Vec<BigInt>, GadgetError> {
    if stretch_counts.len() < m {
        return Err(GadgetError::Inconsistent(format!("{} values supplied, {m} needed", stretch_counts.len())));
    }
    if bridges > m {
        return Err(GadgetError::Inconsistent(format!("{bridges} bridges exceed {m} edges")));
    }
    let mut rows: Vec<Vec<BigRational>> = (1..=m)
        .map(|l| {
            let li = BigInt::from(l);
            let mut row: Vec<BigRational> = (1..=m).map(|k| BigRational::from_integer(li.pow(k as u32))).collect();
            let offset = BigInt::from(binomial(l, 2)) * (m - bridges);
            row.push(BigRational::from_integer(&stretch_counts[l - 1] - offset));
            row
        })
        .collect();
    for col in 0..m {
        let pivot = (col..m)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or_else(|| GadgetError::Inconsistent("singular system".into()))?;
        rows.swap(col, pivot);
        let p = rows[col][col].clone();
        for x in rows[col].iter_mut() {
            *x /= &p;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    rows.into_iter()
        .enumerate()
        .map(|(i, row)| {
            let v = &row[m];
            if !v.denom().is_one() || v.is_negative() {
                Err(GadgetError::Inconsistent(format!("N_{} = {v} is not a nonnegative integer", i + 1)))
            } else {
                Ok(v.to_integer())
            }
        })
        .collect()
}
