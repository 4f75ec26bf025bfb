use num_bigint::BigInt;
use num_integer::binomial;
use rand::rngs::StdRng;

use super::{random_connected, small_graphs, Bounds, Case, Comparison, Identity, IdentityError, Mismatch, Param};
use crate::count::Engine;
use crate::gadgets::stretch_identity_check;
use crate::graph::{
    box_join, complete, count_cocircuits, disjoint_union, harmonious_gadget, join, line_graph, mcc_extension, star,
    strip_isolated, t_pendant, Graph,
};
use crate::poly::{factorial, falling_factorial, multinomial, rat, Poly};
use crate::props::{Pattern, Property};

type Outcome = Result<Option<Mismatch>, IdentityError>;

pub const IDENTITIES: [&str; 12] = [
    "linial_join",
    "harm_eq1",
    "harm_eq2",
    "harm_star",
    "convex_pendant",
    "du_box",
    "mcc_ext",
    "edge_line",
    "timp_pendant",
    "acyclic_join",
    "convex_cocircuit",
    "stretch",
];

fn compare_poly(left: Poly, right: Poly) -> Outcome {
    Ok((left != right).then(|| Mismatch { left: left.to_string(), right: right.to_string() }))
}

fn compare_int(left: BigInt, right: BigInt) -> Outcome {
    Ok((left != right).then(|| Mismatch { left: left.to_string(), right: right.to_string() }))
}

fn chi(engine: &Engine, g: &Graph, prop: &Property) -> Result<Poly, IdentityError> {
    Ok(engine.chi_polynomial(g, prop)?)
}

fn shifted(p: &Poly, by: usize) -> Poly {
    p.shift(&rat(-(by as i64)))
}

fn x_minus(a: usize) -> Poly {
    Poly::x_minus(&rat(a as i64))
}

fn power(p: &Poly, e: usize) -> Poly {
    (0..e).fold(Poly::constant(rat(1)), |acc, _| &acc * p)
}

fn int(engine: &Engine, g: &Graph, prop: &Property, k: usize) -> Result<BigInt, IdentityError> {
    Ok(engine.count_at(g, prop, k as u32)?)
}

fn any(_: &Case) -> bool {
    true
}

fn connected(c: &Case) -> bool {
    c.graph.n() > 0 && c.graph.is_connected()
}

fn graphs(b: &Bounds) -> Result<Vec<Graph>, IdentityError> {
    small_graphs(0, b.max_n)
}

fn plain(b: &Bounds, _: &mut StdRng) -> Result<Vec<Case>, IdentityError> {
    Ok(graphs(b)?.into_iter().map(|graph| Case { graph, param: Param::None }).collect())
}

fn with_ints(graphs: Vec<Graph>, name: &'static str, values: impl Iterator<Item = usize> + Clone) -> Vec<Case> {
    graphs
        .into_iter()
        .flat_map(|g| values.clone().map(move |v| Case { graph: g.clone(), param: Param::Int(name, v) }))
        .collect()
}

fn int_param(c: &Case) -> Result<usize, IdentityError> {
    match c.param {
        Param::Int(_, v) => Ok(v),
        ref p => Err(IdentityError::Parameter(format!("expected an integer parameter, got `{p}`"))),
    }
}

// χ(G ⋈ K_n; X) = X_(n)·χ(G; X−n)

fn linial_family(b: &Bounds, _: &mut StdRng) -> Result<Vec<Case>, IdentityError> {
    Ok(with_ints(graphs(b)?, "n", 1..=b.max_join))
}

fn linial_join(e: &Engine, c: &Case) -> Outcome {
    let n = int_param(c)?;
    let left = chi(e, &join(&c.graph, &complete(n))?, &Property::Proper)?;
    let right = &falling_factorial(n) * &shifted(&chi(e, &c.graph, &Property::Proper)?, n);
    compare_poly(left, right)
}

// χ_harm(S(G); k+e) = χ(G;k)·C(k+e,e)·e!

fn harm_family(b: &Bounds, _: &mut StdRng) -> Result<Vec<Graph>, IdentityError> {
    Ok(graphs(b)?.into_iter().filter(|g| g.e() <= b.max_edges).collect())
}

fn harm_eq1_family(b: &Bounds, rng: &mut StdRng) -> Result<Vec<Case>, IdentityError> {
    Ok(with_ints(harm_family(b, rng)?, "k", 0..=b.max_k as usize))
}

fn harm_eq1_sides(e: &Engine, c: &Case, corrected: bool) -> Result<(BigInt, BigInt), IdentityError> {
    let k = int_param(c)?;
    let m = c.graph.e();
    let left = int(e, &harmonious_gadget(&c.graph)?, &Property::Harmonious, k + m)?;
    let choose = BigInt::from(binomial(k + m, m)) * factorial(m);
    let right = if corrected {
        // isolated vertices of G stay isolated in S(G) and may take any of the k+e colors
        let (core, isolated) = strip_isolated(&c.graph);
        int(e, &core, &Property::Proper, k)? * BigInt::from(k + m).pow(isolated as u32) * choose
    } else {
        int(e, &c.graph, &Property::Proper, k)? * choose
    };
    Ok((left, right))
}

fn harm_eq1(e: &Engine, c: &Case) -> Outcome {
    let (l, r) = harm_eq1_sides(e, c, false)?;
    compare_int(l, r)
}

fn harm_eq1_corrected(e: &Engine, c: &Case) -> Outcome {
    let (l, r) = harm_eq1_sides(e, c, true)?;
    compare_int(l, r)
}

// χ_harm(S(G); X) = X_(e)·χ(G; X−e)

fn harm_eq2_family(b: &Bounds, rng: &mut StdRng) -> Result<Vec<Case>, IdentityError> {
    Ok(harm_family(b, rng)?.into_iter().map(|graph| Case { graph, param: Param::None }).collect())
}

fn harm_eq2_sides(e: &Engine, c: &Case, corrected: bool) -> Result<(Poly, Poly), IdentityError> {
    let m = c.graph.e();
    let left = chi(e, &harmonious_gadget(&c.graph)?, &Property::Harmonious)?;
    let right = if corrected {
        let (core, isolated) = strip_isolated(&c.graph);
        &(&falling_factorial(m) * &power(&Poly::x(), isolated)) * &shifted(&chi(e, &core, &Property::Proper)?, m)
    } else {
        &falling_factorial(m) * &shifted(&chi(e, &c.graph, &Property::Proper)?, m)
    };
    Ok((left, right))
}

fn harm_eq2(e: &Engine, c: &Case) -> Outcome {
    let (l, r) = harm_eq2_sides(e, c, false)?;
    compare_poly(l, r)
}

fn harm_eq2_corrected(e: &Engine, c: &Case) -> Outcome {
    let (l, r) = harm_eq2_sides(e, c, true)?;
    compare_poly(l, r)
}

// χ(G ⊔ K_{1,n}; X−e−n) = (X−e−n)(X−e−n−1)^n·χ(G; X−e−n)

fn star_family(b: &Bounds, rng: &mut StdRng) -> Result<Vec<Case>, IdentityError> {
    Ok(with_ints(harm_family(b, rng)?, "n", 0..=b.max_join))
}

fn harm_star(e: &Engine, c: &Case) -> Outcome {
    let n = int_param(c)?;
    let s = c.graph.e() + n;
    let left = shifted(&chi(e, &disjoint_union(&c.graph, &star(n))?, &Property::Proper)?, s);
    let right = &(&x_minus(s) * &power(&x_minus(s + 1), n)) * &shifted(&chi(e, &c.graph, &Property::Proper)?, s);
    compare_poly(left, right)
}

// χ_convex(G ⊔ K_1; X) = X·χ_convex(G; X−1)

fn convex_pendant(e: &Engine, c: &Case) -> Outcome {
    let left = chi(e, &disjoint_union(&c.graph, &complete(1))?, &Property::Convex)?;
    let right = &Poly::x() * &shifted(&chi(e, &c.graph, &Property::Convex)?, 1);
    compare_poly(left, right)
}

// χ_DU(H)(Box_{H,v}(G); X) = X·χ_DU(H)(G; X−1)

const BOX_PATTERNS: [&str; 3] = ["K2", "P3", "K3"];

fn du_box_family(b: &Bounds, _: &mut StdRng) -> Result<Vec<Case>, IdentityError> {
    let mut cases = Vec::new();
    for g in graphs(b)? {
        for token in BOX_PATTERNS {
            let h = Pattern::parse(token)?;
            for v in 0..h.n() {
                cases.push(Case { graph: g.clone(), param: Param::Pattern(h.clone(), v) });
            }
        }
    }
    Ok(cases)
}

fn du_box(e: &Engine, c: &Case) -> Outcome {
    let Param::Pattern(h, v) = &c.param else {
        return Err(IdentityError::Parameter(format!("expected a pattern and vertex, got `{}`", c.param)));
    };
    let prop = Property::DisjointUnion(h.clone());
    let left = chi(e, &box_join(&c.graph, h.graph(), *v)?, &prop)?;
    let right = &Poly::x() * &shifted(&chi(e, &c.graph, &prop)?, 1);
    compare_poly(left, right)
}

// χ_mcc_t(G'; k+1) = multinomial((k+1)t; t,…,t)·χ_mcc_t(G; k)

const MCC_POINTS: [(usize, usize); 4] = [(1, 1), (1, 2), (2, 1), (2, 2)];

fn mcc_family(b: &Bounds, _: &mut StdRng) -> Result<Vec<Case>, IdentityError> {
    Ok(graphs(b)?
        .into_iter()
        .flat_map(|g| MCC_POINTS.map(|(t, k)| Case { graph: g.clone(), param: Param::Pair(t, k) }))
        .collect())
}

/// Both sides of the mcc extension identity at `(t, k)`.
pub fn mcc_ext_sides(e: &Engine, g: &Graph, t: usize, k: usize) -> Result<(BigInt, BigInt), IdentityError> {
    let prop = Property::Mcc(t);
    let left = int(e, &mcc_extension(g, t, k)?, &prop, k + 1)?;
    let cofactor = multinomial((k + 1) * t, &vec![t; k + 1]).map_err(crate::count::CountError::from)?;
    Ok((left, cofactor * int(e, g, &prop, k)?))
}

fn mcc_ext(e: &Engine, c: &Case) -> Outcome {
    let Param::Pair(t, k) = c.param else {
        return Err(IdentityError::Parameter(format!("expected (t, k), got `{}`", c.param)));
    };
    let (l, r) = mcc_ext_sides(e, &c.graph, t, k)?;
    compare_int(l, r)
}

// χ_edge(G; X) = χ(L(G); X)

fn edge_line(e: &Engine, c: &Case) -> Outcome {
    compare_poly(chi(e, &c.graph, &Property::EdgeProper)?, chi(e, &line_graph(&c.graph)?, &Property::Proper)?)
}

// χ_t-imp(G ⋈_t K_1; X) = X·χ_t-imp(G; X−1)

fn timp_family(b: &Bounds, _: &mut StdRng) -> Result<Vec<Case>, IdentityError> {
    Ok(with_ints(graphs(b)?, "t", 0..=b.max_join))
}

fn timp_pendant(e: &Engine, c: &Case) -> Outcome {
    let t = int_param(c)? as u32;
    let prop = Property::TImproper(t);
    let left = chi(e, &t_pendant(&c.graph, t), &prop)?;
    let right = &Poly::x() * &shifted(&chi(e, &c.graph, &prop)?, 1);
    compare_poly(left, right)
}

// χ_acyc(G ⋈ K_1; k) = k·χ_acyc(G; k−1) at integer points

fn acyclic_family(b: &Bounds, _: &mut StdRng) -> Result<Vec<Case>, IdentityError> {
    Ok(graphs(b)?
        .into_iter()
        .flat_map(|g| {
            let top = g.n() + 2;
            (0..=top).map(move |k| Case { graph: g.clone(), param: Param::Int("k", k) })
        })
        .collect())
}

fn acyclic_join(e: &Engine, c: &Case) -> Outcome {
    let k = int_param(c)?;
    let left = int(e, &join(&c.graph, &complete(1))?, &Property::Acyclic, k)?;
    let right = if k == 0 { BigInt::from(0) } else { BigInt::from(k) * int(e, &c.graph, &Property::Acyclic, k - 1)? };
    compare_int(left, right)
}

// χ_convex(G; 2) = 2 + 2·N(G) for connected G

fn cocircuit_family(b: &Bounds, rng: &mut StdRng) -> Result<Vec<Case>, IdentityError> {
    Ok(random_connected(rng, b.samples, b.max_random_n)
        .into_iter()
        .map(|graph| Case { graph, param: Param::None })
        .collect())
}

fn convex_cocircuit(e: &Engine, c: &Case) -> Outcome {
    let left = BigInt::from(e.brute_count_at(&c.graph, &Property::Convex, 2)?);
    let right = BigInt::from(2) + BigInt::from(2) * count_cocircuits(&c.graph)?.total;
    compare_int(left, right)
}

// N(G_l) = Σ_k l^k N_k(G) + C(l,2)·m

fn stretch_family(b: &Bounds, _: &mut StdRng) -> Result<Vec<Case>, IdentityError> {
    let graphs: Vec<Graph> = small_graphs(1, (b.max_m + 1).min(super::MAX_FAMILY_N))?
        .into_iter()
        .filter(|g| g.is_connected() && g.e() <= b.max_m)
        .collect();
    Ok(with_ints(graphs, "l", 1..=b.max_l))
}

fn stretch(_: &Engine, c: &Case) -> Outcome {
    let r = stretch_identity_check(&c.graph, int_param(c)?)?;
    compare_int(r.left.into(), r.right.into())
}

fn stretch_corrected(_: &Engine, c: &Case) -> Outcome {
    let r = stretch_identity_check(&c.graph, int_param(c)?)?;
    compare_int(r.left.into(), r.right_bridge_corrected.into())
}

pub(crate) static REGISTRY: [Identity; 12] = [
    Identity {
        name: "linial_join",
        statement: "χ(G ⋈ K_n; X) = X_(n)·χ(G; X−n)",
        reading: None,
        comparison: Comparison::Poly,
        family: linial_family,
        admissible: any,
        check: linial_join,
        corrected: None,
    },
    Identity {
        name: "harm_eq1",
        statement: "χ_harm(S(G); k+e) = χ(G; k)·C(k+e, e)·e!",
        reading: None,
        comparison: Comparison::Pointwise,
        family: harm_eq1_family,
        admissible: any,
        check: harm_eq1,
        corrected: Some((
            "χ_harm(S(G); k+e) = χ(G−I; k)·(k+e)^|I|·C(k+e, e)·e!, I the isolated vertices",
            harm_eq1_corrected,
        )),
    },
    Identity {
        name: "harm_eq2",
        statement: "χ_harm(S(G); X) = X_(e)·χ(G; X−e)",
        reading: Some("falling factorial X_(e(G)), e(G) the edge count"),
        comparison: Comparison::Poly,
        family: harm_eq2_family,
        admissible: any,
        check: harm_eq2,
        corrected: Some(("χ_harm(S(G); X) = X_(e)·X^|I|·χ(G−I; X−e), I the isolated vertices", harm_eq2_corrected)),
    },
    Identity {
        name: "harm_star",
        statement: "χ(G ⊔ K_{1,n}; X−e−n) = (X−e−n)(X−e−n−1)^n·χ(G; X−e−n)",
        reading: None,
        comparison: Comparison::Poly,
        family: star_family,
        admissible: any,
        check: harm_star,
        corrected: None,
    },
    Identity {
        name: "convex_pendant",
        statement: "χ_convex(G ⊔ K_1; X) = X·χ_convex(G; X−1)",
        reading: None,
        comparison: Comparison::Poly,
        family: plain,
        admissible: any,
        check: convex_pendant,
        corrected: None,
    },
    Identity {
        name: "du_box",
        statement: "χ_DU(H)(Box_{H,v}(G); X) = X·χ_DU(H)(G; X−1)",
        reading: None,
        comparison: Comparison::Poly,
        family: du_box_family,
        admissible: any,
        check: du_box,
        corrected: None,
    },
    Identity {
        name: "mcc_ext",
        statement: "χ_mcc_t(G'; k+1) = ((k+1)t; t, …, t)·χ_mcc_t(G; k)",
        reading: None,
        comparison: Comparison::Pointwise,
        family: mcc_family,
        admissible: any,
        check: mcc_ext,
        corrected: None,
    },
    Identity {
        name: "edge_line",
        statement: "χ_edge(G; X) = χ(L(G); X)",
        reading: None,
        comparison: Comparison::Poly,
        family: plain,
        admissible: any,
        check: edge_line,
        corrected: None,
    },
    Identity {
        name: "timp_pendant",
        statement: "χ_t-imp(G ⋈_t K_1; X) = X·χ_t-imp(G; X−1)",
        reading: Some("the pendant vertex is joined to every vertex by t+1 parallel edges"),
        comparison: Comparison::Poly,
        family: timp_family,
        admissible: any,
        check: timp_pendant,
        corrected: None,
    },
    Identity {
        name: "acyclic_join",
        statement: "χ_acyc(G ⋈ K_1; k) = k·χ_acyc(G; k−1)",
        reading: None,
        comparison: Comparison::Pointwise,
        family: acyclic_family,
        admissible: any,
        check: acyclic_join,
        corrected: None,
    },
    Identity {
        name: "convex_cocircuit",
        statement: "χ_convex(G; 2) = 2 + 2·N(G) for connected G",
        reading: None,
        comparison: Comparison::Pointwise,
        family: cocircuit_family,
        admissible: connected,
        check: convex_cocircuit,
        corrected: None,
    },
    Identity {
        name: "stretch",
        statement: "N(G_l) = Σ_k l^k·N_k(G) + C(l, 2)·m for connected G",
        reading: None,
        comparison: Comparison::Pointwise,
        family: stretch_family,
        admissible: connected,
        check: stretch,
        corrected: Some(("N(G_l) = Σ_k l^k·N_k(G) + C(l, 2)·(m − b), b the bridges", stretch_corrected)),
    },
];
