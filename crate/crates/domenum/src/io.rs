//! Text formats. External ids are 1-based; everything internal is 0-based,
//! and the conversion happens here and nowhere else.
//!
//! Graph files: `#` comment lines and blank lines are ignored anywhere;
//! then a header `p graph <n> <m>` followed by exactly m lines `e <u> <v>`
//! with 1 ≤ u < v ≤ n. Hypergraph files: header `p hg <n> <m>` and m lines
//! `h <v1> ... <vk>`; a bare `h` (k = 0) is accepted only on request, to
//! exercise the no-transversal error paths. Permutation files: n lines,
//! each a distinct id. Every rejection carries its line number.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

/// Line number to blame when the file ends too early.
fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    kind: &str,
    eof_line: usize,
) -> Result<(usize, usize)> {
    let Some((ln, line)) = lines.next() else {
        return Err(Error::parse(eof_line, format!("missing `p {kind}` header")));
    };
    let t: Vec<&str> = line.split_whitespace().collect();
    if t.len() != 4 || t[0] != "p" || t[1] != kind {
        return Err(Error::parse(
            ln,
            format!("expected header `p {kind} <n> <m>`, found `{line}`"),
        ));
    }
    let n = parse_count(ln, t[2])?;
    let m = parse_count(ln, t[3])?;
    Ok((n, m))
}

fn parse_count(ln: usize, token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::parse(ln, format!("invalid count `{token}`")))
}

/// 1-based id in 1..=n, returned 0-based.
fn parse_vertex_id(ln: usize, token: &str, n: usize) -> Result<usize> {
    let id: usize = token
        .parse()
        .map_err(|_| Error::parse(ln, format!("invalid vertex id `{token}`")))?;
    if id < 1 || id > n {
        return Err(Error::parse(
            ln,
            format!("vertex id {id} out of range 1..={n}"),
        ));
    }
    Ok(id - 1)
}

fn reject_trailing<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<()> {
    if let Some((ln, line)) = lines.next() {
        return Err(Error::parse(
            ln,
            format!("unexpected trailing line `{line}`"),
        ));
    }
    Ok(())
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let eof = last_line(text);
    let mut lines = meaningful_lines(text);
    let (n, m) = parse_header(&mut lines, "graph", eof)?;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for _ in 0..m {
        let Some((ln, line)) = lines.next() else {
            return Err(Error::parse(
                eof,
                format!("expected {m} edge lines, found {}", edges.len()),
            ));
        };
        let t: Vec<&str> = line.split_whitespace().collect();
        if t.len() != 3 || t[0] != "e" {
            return Err(Error::parse(
                ln,
                format!("expected `e <u> <v>`, found `{line}`"),
            ));
        }
        let u = parse_vertex_id(ln, t[1], n)?;
        let v = parse_vertex_id(ln, t[2], n)?;
        if u == v {
            return Err(Error::parse(ln, format!("self-loop at vertex {}", u + 1)));
        }
        if u > v {
            return Err(Error::parse(
                ln,
                format!("edge endpoints must satisfy u < v, found `{line}`"),
            ));
        }
        if !seen.insert((u, v)) {
            return Err(Error::parse(
                ln,
                format!("duplicate edge {} {}", u + 1, v + 1),
            ));
        }
        edges.push((u, v));
    }
    reject_trailing(&mut lines)?;
    Graph::from_edges(n, &edges)
}

/// Duplicate hyperedges are legal input (they collapse under minimize);
/// a repeated vertex inside one edge is not.
pub fn parse_hypergraph(text: &str, allow_empty_edges: bool) -> Result<Hypergraph> {
    let eof = last_line(text);
    let mut lines = meaningful_lines(text);
    let (n, m) = parse_header(&mut lines, "hg", eof)?;
    let mut edges: Vec<VertexSet> = Vec::with_capacity(m);
    for _ in 0..m {
        let Some((ln, line)) = lines.next() else {
            return Err(Error::parse(
                eof,
                format!("expected {m} hyperedge lines, found {}", edges.len()),
            ));
        };
        let t: Vec<&str> = line.split_whitespace().collect();
        if t.is_empty() || t[0] != "h" {
            return Err(Error::parse(
                ln,
                format!("expected `h <v1> ... <vk>`, found `{line}`"),
            ));
        }
        if t.len() == 1 && !allow_empty_edges {
            return Err(Error::parse(
                ln,
                "empty hyperedge (pass --allow-empty-edge to accept it)",
            ));
        }
        let mut members = Vec::with_capacity(t.len() - 1);
        for token in &t[1..] {
            let v = parse_vertex_id(ln, token, n)?;
            if members.contains(&v) {
                return Err(Error::parse(
                    ln,
                    format!("vertex {} repeated within a hyperedge", v + 1),
                ));
            }
            members.push(v);
        }
        edges.push(VertexSet::from_members(members, n)?);
    }
    reject_trailing(&mut lines)?;
    if allow_empty_edges {
        Hypergraph::new_allow_empty(n, edges)
    } else {
        Hypergraph::new(n, edges)
    }
}

/// A permutation of all n vertices, one id per line, returned 0-based.
pub fn parse_permutation(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for (ln, line) in meaningful_lines(text) {
        if order.len() == n {
            return Err(Error::parse(
                ln,
                format!("more than {n} permutation entries"),
            ));
        }
        let t: Vec<&str> = line.split_whitespace().collect();
        if t.len() != 1 {
            return Err(Error::parse(
                ln,
                format!("expected one vertex id per line, found `{line}`"),
            ));
        }
        let v = parse_vertex_id(ln, t[0], n)?;
        if used[v] {
            return Err(Error::parse(ln, format!("vertex {} repeated", v + 1)));
        }
        used[v] = true;
        order.push(v);
    }
    if order.len() != n {
        return Err(Error::parse(
            last_line(text),
            format!("expected {n} permutation entries, found {}", order.len()),
        ));
    }
    Ok(order)
}

/// Space-separated ascending 1-based members; the empty set is an empty line.
pub fn format_set(s: &VertexSet) -> String {
    let mut out = String::new();
    for (i, v) in s.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{}", v + 1);
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p graph {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("p hg {} {}\n", h.ground_size(), h.edge_count());
    for e in h.edges() {
        if e.is_empty() {
            out.push_str("h\n");
        } else {
            let _ = writeln!(out, "h {}", format_set(e));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path_graph;
    use crate::hypergraph::tests::six_edge_sample;

    fn parse_err(r: Result<impl std::fmt::Debug>) -> (usize, String) {
        match r {
            Err(Error::Parse { line, message }) => (line, message),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_k2() {
        let g = parse_graph("p graph 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a triangle\n\np graph 3 3\ne 1 2\n# middle\ne 1 3\n\ne 2 3\n# end\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn graph_rejections_carry_line_numbers() {
        assert_eq!(
            parse_err(parse_graph("")),
            (1, "missing `p graph` header".into())
        );
        let (ln, msg) = parse_err(parse_graph("p hg 2 1\nh 1\n"));
        assert_eq!(ln, 1);
        assert!(msg.contains("p graph"));
        let (ln, msg) = parse_err(parse_graph("p graph 2 1\ne 1 1\n"));
        assert_eq!((ln, msg.as_str()), (2, "self-loop at vertex 1"));
        let (ln, msg) = parse_err(parse_graph("p graph 2 1\ne 2 1\n"));
        assert_eq!(ln, 2);
        assert!(msg.contains("u < v"));
        let (ln, msg) = parse_err(parse_graph("p graph 2 1\ne 1 3\n"));
        assert_eq!(ln, 2);
        assert!(msg.contains("out of range"));
        let (ln, msg) = parse_err(parse_graph("p graph 3 2\ne 1 2\ne 1 2\n"));
        assert_eq!((ln, msg.as_str()), (3, "duplicate edge 1 2"));
        let (ln, msg) = parse_err(parse_graph("p graph 3 2\ne 1 2\n"));
        assert_eq!(ln, 2);
        assert!(msg.contains("expected 2 edge lines, found 1"));
        let (ln, msg) = parse_err(parse_graph("p graph 2 1\ne 1 2\ne 1 2\n"));
        assert_eq!(ln, 3);
        assert!(msg.contains("trailing"));
        let (_, msg) = parse_err(parse_graph("p graph x 1\ne 1 2\n"));
        assert!(msg.contains("invalid count"));
    }

    #[test]
    fn parses_the_six_edge_hypergraph_file() {
        let text = "p hg 4 6\nh 1 2\nh 1 2 3\nh 1 3 4\nh 2 4\nh 3 4\nh 2 4\n";
        assert_eq!(parse_hypergraph(text, false).unwrap(), six_edge_sample());
    }

    #[test]
    fn duplicate_hyperedges_are_legal_but_repeated_vertices_are_not() {
        let ok = parse_hypergraph("p hg 2 2\nh 1\nh 1\n", false).unwrap();
        assert_eq!(ok.edge_count(), 2);
        let (ln, msg) = parse_err(parse_hypergraph("p hg 2 1\nh 1 1\n", false));
        assert_eq!(ln, 2);
        assert!(msg.contains("repeated within"));
    }

    #[test]
    fn empty_hyperedges_are_flag_gated() {
        let (ln, msg) = parse_err(parse_hypergraph("p hg 2 1\nh\n", false));
        assert_eq!(ln, 2);
        assert!(msg.contains("--allow-empty-edge"));
        let h = parse_hypergraph("p hg 2 1\nh\n", true).unwrap();
        assert_eq!(h.empty_edge(), Some(0));
    }

    #[test]
    fn permutation_round_trip_and_rejections() {
        assert_eq!(parse_permutation("3\n1\n2\n", 3).unwrap(), vec![2, 0, 1]);
        assert_eq!(parse_permutation("", 0).unwrap(), Vec::<usize>::new());
        let (ln, msg) = parse_err(parse_permutation("1\n1\n", 2));
        assert_eq!((ln, msg.as_str()), (2, "vertex 1 repeated"));
        let (_, msg) = parse_err(parse_permutation("1\n", 2));
        assert!(msg.contains("expected 2 permutation entries, found 1"));
        let (ln, _) = parse_err(parse_permutation("1\n2\n3\n", 2));
        assert_eq!(ln, 3);
        let (_, msg) = parse_err(parse_permutation("1 2\n", 2));
        assert!(msg.contains("one vertex id per line"));
    }

    #[test]
    fn writers_round_trip() {
        let g = path_graph(4);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        assert_eq!(write_graph(&g), "p graph 4 3\ne 1 2\ne 2 3\ne 3 4\n");
        let h = six_edge_sample();
        assert_eq!(parse_hypergraph(&write_hypergraph(&h), false).unwrap(), h);
        let degenerate =
            Hypergraph::new_allow_empty(2, vec![VertexSet::empty(2), VertexSet::full(2)]).unwrap();
        let text = write_hypergraph(&degenerate);
        assert_eq!(text, "p hg 2 2\nh\nh 1 2\n");
        assert_eq!(parse_hypergraph(&text, true).unwrap(), degenerate);
    }

    #[test]
    fn set_formatting() {
        let s = VertexSet::from_members([2usize, 0], 4).unwrap();
        assert_eq!(format_set(&s), "1 3");
        assert_eq!(format_set(&VertexSet::empty(3)), "");
    }
}
