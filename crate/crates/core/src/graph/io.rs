//! Text formats: a plain edge list and graph6.
//!
//! Edge list: a header line `n m`, then `m` lines `u v [mult]`. A multiplicity
//! column on any line makes the graph a multigraph. Vertex labels travel as
//! comment lines `# v label`, which are also used as the graph6 label sidecar.

use super::{Graph, GraphError};

fn perr(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse { line, msg: msg.into() }
}

fn parse_num(tok: &str, line: usize) -> Result<usize, GraphError> {
    tok.parse().map_err(|_| perr(line, format!("expected a non-negative integer, got {tok:?}")))
}

/// Collects `# v label` comment lines. Other comments are ignored.
fn parse_label_line(rest: &str, labels: &mut Vec<(usize, String)>) {
    let toks: Vec<&str> = rest.split_whitespace().collect();
    if let [v, label] = toks[..] {
        if let Ok(v) = v.parse::<usize>() {
            labels.push((v, label.to_string()));
        }
    }
}

fn attach_labels(g: Graph, mut labels: Vec<(usize, String)>) -> Result<Graph, GraphError> {
    if labels.is_empty() {
        return Ok(g);
    }
    labels.sort();
    labels.dedup_by_key(|(v, _)| *v);
    if labels.len() != g.n() || labels.iter().enumerate().any(|(i, (v, _))| *v != i) {
        return Err(GraphError::LabelCount { n: g.n(), got: labels.len() });
    }
    g.with_labels(labels.into_iter().map(|(_, l)| l).collect())
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut mults = Vec::new();
    let mut any_mult = false;
    let mut labels = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            parse_label_line(rest, &mut labels);
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        match header {
            None => {
                let [n, m] = toks[..] else {
                    return Err(perr(line, "header must be `n m`"));
                };
                header = Some((parse_num(n, line)?, parse_num(m, line)?));
            }
            Some(_) => {
                let (u, v, m) = match toks[..] {
                    [u, v] => (u, v, None),
                    [u, v, m] => (u, v, Some(m)),
                    _ => return Err(perr(line, "edge line must be `u v [mult]`")),
                };
                edges.push((parse_num(u, line)?, parse_num(v, line)?));
                let m = match m {
                    Some(m) => {
                        any_mult = true;
                        u32::try_from(parse_num(m, line)?).map_err(|_| perr(line, "multiplicity too large"))?
                    }
                    None => 1,
                };
                mults.push(m);
            }
        }
    }
    let (n, m) = header.ok_or_else(|| perr(1, "missing `n m` header"))?;
    if edges.len() != m {
        return Err(perr(0, format!("header announces {m} edges, found {}", edges.len())));
    }
    let g = if any_mult { Graph::with_multiplicities(n, &edges, &mults)? } else { Graph::new(n, &edges)? };
    attach_labels(g, labels)
}

/// Label comment lines (`# v label`), one per vertex; empty if unlabeled.
pub fn label_lines(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            out.push_str(&format!("# {v} {l}\n"));
        }
    }
    out
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.e());
    for (&(u, v), &m) in g.edges().iter().zip(g.multiplicities()) {
        if g.is_simple() {
            out.push_str(&format!("{u} {v}\n"));
        } else {
            out.push_str(&format!("{u} {v} {m}\n"));
        }
    }
    out.push_str(&label_lines(g));
    out
}

const G6_HEADER: &str = ">>graph6<<";

pub fn parse_graph6(s: &str) -> Result<Graph, GraphError> {
    let s = s.trim();
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s);
    let bytes: Vec<u8> = s.bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(perr(1, "graph6 bytes must lie in 63..=126"));
    }
    let (n, body) = match bytes.as_slice() {
        [] => return Err(perr(1, "empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(perr(1, "truncated graph6 size"));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(perr(1, "truncated graph6 size"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(perr(1, format!("graph6 body has {} bytes, expected {}", body.len(), nbits.div_ceil(6))));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

pub fn write_graph6(g: &Graph) -> Result<String, GraphError> {
    g.require_simple("graph6")?;
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for i in 0..6 {
            byte = byte << 1 | chunk.get(i).copied().unwrap_or(false) as u8;
        }
        out.push(byte + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// Compact identity string: graph6 for simple graphs, an inline edge list
/// with multiplicities otherwise. Labels are ignored.
pub fn fingerprint(g: &Graph) -> String {
    match write_graph6(g) {
        Ok(s) => format!("g6:{s}"),
        Err(_) => {
            let body: Vec<String> =
                g.edges().iter().zip(g.multiplicities()).map(|(&(u, v), m)| format!("{u}-{v}x{m}")).collect();
            format!("multi:{}:{}", g.n(), body.join(","))
        }
    }
}

/// Graph6 text plus optional label lines (sidecar format).
pub fn parse_graph6_with_labels(text: &str) -> Result<Graph, GraphError> {
    let mut body = None;
    let mut labels = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(rest) = t.strip_prefix('#') {
            parse_label_line(rest, &mut labels);
        } else if body.is_none() {
            body = Some(t);
        } else {
            return Err(perr(i + 1, "more than one graph6 string"));
        }
    }
    let g = parse_graph6(body.ok_or_else(|| perr(1, "no graph6 string"))?)?;
    attach_labels(g, labels)
}

/// Reads either format: a leading `n m` line means an edge list.
pub fn parse_any(text: &str) -> Result<Graph, GraphError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    let looks_like_header = {
        let toks: Vec<&str> = first.split_whitespace().collect();
        toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok())
    };
    if looks_like_header {
        parse_edge_list(text)
    } else {
        parse_graph6_with_labels(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, t_pendant};

    #[test]
    fn graph6_known_strings() {
        // reference encodings from the graph6 format description
        assert_eq!(write_graph6(&complete(4)).unwrap(), "C~");
        assert_eq!(write_graph6(&path(4)).unwrap(), "Ch");
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3));
        assert_eq!(write_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), complete(4));
    }

    #[test]
    fn graph6_large_size_prefix() {
        let g = Graph::empty(100);
        let s = write_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C \n").is_err());
    }

    #[test]
    fn edge_list_with_multiplicity() {
        let g = parse_edge_list("3 2\n0 1\n1 2 3\n").unwrap();
        assert!(!g.is_simple());
        assert_eq!(g.multiplicity(1, 2), 3);
        let back = parse_edge_list(&write_edge_list(&g)).unwrap();
        assert_eq!(back, g);
        let tp = t_pendant(&complete(2), 1);
        assert_eq!(parse_edge_list(&write_edge_list(&tp)).unwrap(), tp);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("3 1\n0 0\n"), Err(GraphError::LoopEdge(0))));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_edge_list("x y\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_edge_list("2 2\n0 1\n0 1\n"), Err(GraphError::DuplicateEdge(0, 1))));
    }

    #[test]
    fn labels_round_trip() {
        let g = complete(2).with_labels(vec!["x1".into(), "c1.1".into()]).unwrap();
        let text = write_edge_list(&g);
        assert!(text.contains("# 1 c1.1"));
        assert_eq!(parse_any(&text).unwrap(), g);
        let sidecar = format!("{}\n{}", write_graph6(&g).unwrap(), label_lines(&g));
        assert_eq!(parse_any(&sidecar).unwrap(), g);
    }
}
