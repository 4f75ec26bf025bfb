use super::{literal_label, var, CnfInstance, GadgetError, Semantics};
use crate::graph::Graph;

fn clique(edges: &mut Vec<(usize, usize)>, vertices: std::ops::Range<usize>) {
    for u in vertices.clone() {
        for v in u + 1..vertices.end {
            edges.push((u, v));
        }
    }
}

/// Clause and bridge gadget for NAE_{t+1}-SAT into mcc_t 2-colorings.
///
/// Clause `i` becomes `K_{2t}` whose first `t+1` vertices carry the clause's
/// literals (labels `x3`, `-x3`) and whose remaining `t-1` vertices are
/// labeled `c{i}.{j}`. Each unordered pair of occurrences of the same literal
/// in different clauses gets a bridge vertex `b{m}` adjacent to both.
pub fn nae_to_mcc(cnf: &CnfInstance, t: usize) -> Result<Graph, GadgetError> {
    if t < 2 {
        return Err(GadgetError::Unsupported(format!("the clause gadget needs t >= 2, got {t}")));
    }
    if cnf.semantics() != Semantics::Nae(t + 1) {
        return Err(GadgetError::Unsupported(format!(
            "t = {t} needs a nae{} instance, got {}",
            t + 1,
            cnf.semantics()
        )));
    }
    let size = 2 * t;
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    let mut occurrences = Vec::new();
    for (i, clause) in cnf.clauses().iter().enumerate() {
        let base = labels.len();
        for (j, &l) in clause.iter().enumerate() {
            labels.push(literal_label(l));
            occurrences.push((i, base + j, l));
        }
        for j in 1..t {
            labels.push(format!("c{}.{j}", i + 1));
        }
        clique(&mut edges, base..base + size);
    }
    let mut bridges = 0;
    for (a, &(ca, va, la)) in occurrences.iter().enumerate() {
        for &(cb, vb, lb) in &occurrences[a + 1..] {
            if ca != cb && la == lb {
                bridges += 1;
                let b = labels.len();
                labels.push(format!("b{bridges}"));
                edges.push((va, b));
                edges.push((vb, b));
            }
        }
    }
    Ok(Graph::new(labels.len(), &edges)?.with_labels(labels)?)
}

/// The graph whose DU(K_α) 2-colorings encode α-of-2α assignments.
///
/// Clause cliques `K_{2α}` come first, their vertices labeled by the clause's
/// literals. Then one `K_{2α}` per declared variable `x_t`, with `α` vertices
/// labeled `x_t` followed by `α` labeled `-x_t`. A clause vertex is joined to
/// every variable-clique vertex carrying the opposite literal.
pub fn alpha_sat_to_du(cnf: &CnfInstance) -> Result<Graph, GadgetError> {
    let alpha = match cnf.semantics() {
        Semantics::AlphaOf2Alpha(a) if a >= 2 => a,
        other => {
            return Err(GadgetError::Unsupported(format!("needs an AofB instance with A >= 2, got {other}")));
        }
    };
    let size = 2 * alpha;
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for clause in cnf.clauses() {
        let base = labels.len();
        labels.extend(clause.iter().map(|&l| literal_label(l)));
        clique(&mut edges, base..base + size);
    }
    let d_base = labels.len();
    for t in 1..=cnf.num_vars() as i32 {
        let base = labels.len();
        labels.extend((0..alpha).map(|_| literal_label(t)));
        labels.extend((0..alpha).map(|_| literal_label(-t)));
        clique(&mut edges, base..base + size);
    }
    for (i, clause) in cnf.clauses().iter().enumerate() {
        for (j, &l) in clause.iter().enumerate() {
            let u = i * size + j;
            let block = d_base + (var(l) as usize - 1) * size;
            // the copies of -l sit in the second half of the block when l is positive
            let start = if l > 0 { block + alpha } else { block };
            edges.extend((start..start + alpha).map(|w| (u, w)));
        }
    }
    Ok(Graph::new(labels.len(), &edges)?.with_labels(labels)?)
}

/// Monotone 2-SAT into Max-Cut: returns the graph and the target cut size
/// `8·|C|`.
///
/// Vertex `0` is `x`, vertices `1..=V` are the variables, and clause `j`
/// adds `c{j}.1..c{j}.6` on the 9-cycle
/// `x c1 c2 x_u c3 c4 x_v c5 c6 x`.
pub fn monotone2sat_to_maxcut(cnf: &CnfInstance) -> Result<(Graph, usize), GadgetError> {
    if cnf.semantics() != Semantics::Monotone2Sat {
        return Err(GadgetError::Unsupported(format!("needs a monotone2sat instance, got {}", cnf.semantics())));
    }
    let n = cnf.num_vars();
    let mut labels = vec!["x".to_string()];
    labels.extend((1..=n).map(|v| format!("x{v}")));
    let mut edges = Vec::new();
    for (j, clause) in cnf.clauses().iter().enumerate() {
        let c = labels.len();
        labels.extend((1..=6).map(|i| format!("c{}.{i}", j + 1)));
        let (xu, xv) = (var(clause[0]) as usize, var(clause[1]) as usize);
        let cycle = [0, c, c + 1, xu, c + 2, c + 3, xv, c + 4, c + 5, 0];
        edges.extend(cycle.windows(2).map(|w| (w[0], w[1])));
    }
    let g = Graph::new(labels.len(), &edges)?.with_labels(labels)?;
    Ok((g, 8 * cnf.clauses().len()))
}

/// Max-Cut into counting cocircuits of a given size: returns `G'` and
/// `k' = n² + n + k`.
///
/// `G'` keeps the vertices of `g`, then adds `x` (index `n`), `x'` (`n+1`)
/// and `x_1..x_{n²}`. Both `x` and `x'` are adjacent to every other vertex
/// except each other.
pub fn maxcut_to_cocircuits(g: &Graph, k: usize) -> Result<(Graph, usize), GadgetError> {
    g.require_simple("maxcut_to_cocircuits")?;
    let n = g.n();
    let total = n + 2 + n * n;
    let (x, x2) = (n, n + 1);
    let mut edges = g.edges().to_vec();
    for v in (0..total).filter(|&v| v != x && v != x2) {
        edges.push((v, x));
        edges.push((v, x2));
    }
    let mut labels: Vec<String> = match g.labels() {
        Some(l) => l.to_vec(),
        None => (0..n).map(|v| format!("v{v}")).collect(),
    };
    labels.push("x".into());
    labels.push("x'".into());
    labels.extend((1..=n * n).map(|j| format!("x_{j}")));
    Ok((Graph::new(total, &edges)?.with_labels(labels)?, n * n + n + k))
}
