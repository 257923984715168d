//! Plain-text file formats.
//!
//! Graph file: `graph <v>` (or `graph <v> <u>` for a `u`-uniform core), then
//! one `e <a> <b> …` line per edge. Hypergraph file: `hypergraph <n> <r>`,
//! then one line of `r` ascending vertex ids per hyperedge in colex order.
//! Blank lines and lines starting with `#` are ignored on input.

use std::fmt::Write as _;

use super::graph::GraphPattern;
use super::hypergraph::UniformHypergraph;
use super::layout::BlockLayout;
use crate::error::{BergeError, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| BergeError::Parse {
        line,
        message: format!("expected a nonnegative integer, found `{tok}`"),
    })
}

fn wrap(line: usize, err: BergeError) -> BergeError {
    match err {
        BergeError::Parse { .. } => err,
        other => BergeError::Parse {
            line,
            message: other.to_string(),
        },
    }
}

pub fn parse_graph(text: &str) -> Result<GraphPattern> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(BergeError::Parse {
        line: 1,
        message: "empty graph file".into(),
    })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (v, u) = match toks.as_slice() {
        ["graph", v] => (parse_usize(v, hline)?, 2),
        ["graph", v, u] => (parse_usize(v, hline)?, parse_usize(u, hline)?),
        _ => {
            return Err(BergeError::Parse {
                line: hline,
                message: "expected header `graph <v>`".into(),
            })
        }
    };
    let mut edges = Vec::new();
    let mut last_line = hline;
    for (ln, line) in lines {
        let mut toks = line.split_whitespace();
        if toks.next() != Some("e") {
            return Err(BergeError::Parse {
                line: ln,
                message: "expected an edge line `e <a> <b>`".into(),
            });
        }
        let verts = toks.map(|t| parse_usize(t, ln)).collect::<Result<Vec<_>>>()?;
        if verts.len() != u {
            return Err(BergeError::Parse {
                line: ln,
                message: format!("edge needs exactly {u} endpoints"),
            });
        }
        // validate incrementally so the error names the offending line
        edges.push(verts);
        GraphPattern::with_uniformity(v, u, edges.clone()).map_err(|e| wrap(ln, e))?;
        last_line = ln;
    }
    GraphPattern::with_uniformity(v, u, edges).map_err(|e| wrap(last_line, e))
}

pub fn write_graph(f: &GraphPattern) -> String {
    let mut out = String::new();
    if f.is_graph() {
        let _ = writeln!(out, "graph {}", f.vertex_count());
    } else {
        let _ = writeln!(out, "graph {} {}", f.vertex_count(), f.uniformity());
    }
    for e in f.edges() {
        out.push('e');
        for v in e {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<UniformHypergraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(BergeError::Parse {
        line: 1,
        message: "empty hypergraph file".into(),
    })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (n, r) = match toks.as_slice() {
        ["hypergraph", n, r] => (parse_usize(n, hline)?, parse_usize(r, hline)?),
        _ => {
            return Err(BergeError::Parse {
                line: hline,
                message: "expected header `hypergraph <n> <r>`".into(),
            })
        }
    };
    let mut h = UniformHypergraph::empty(n, r).map_err(|e| wrap(hline, e))?;
    for (ln, line) in lines {
        let verts = line
            .split_whitespace()
            .map(|t| parse_usize(t, ln))
            .collect::<Result<Vec<_>>>()?;
        let e = h.check_edge(verts).map_err(|e| wrap(ln, e))?;
        if !h.insert(e) {
            return Err(BergeError::Parse {
                line: ln,
                message: "duplicate hyperedge".into(),
            });
        }
    }
    Ok(h)
}

pub fn write_hypergraph(h: &UniformHypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "hypergraph {} {}", h.vertex_count(), h.uniformity());
    for e in h.edges() {
        let mut first = true;
        for v in e.vertices() {
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{v}");
        }
        out.push('\n');
    }
    out
}

pub fn write_layout(layout: &BlockLayout) -> String {
    let mut s = serde_json::to_string_pretty(layout).expect("layout serializes");
    s.push('\n');
    s
}

pub fn parse_layout(text: &str) -> Result<BlockLayout> {
    serde_json::from_str(text).map_err(|e| BergeError::Parse {
        line: e.line(),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::layout::make_layout;
    use proptest::prelude::*;

    #[test]
    fn graph_parse_errors_carry_line_numbers() {
        let err = parse_graph("graph 3\ne 0 1\ne 1 5\n").unwrap_err();
        assert!(matches!(err, BergeError::Parse { line: 3, .. }), "{err}");
        let err = parse_graph("graph 3\nx 0 1\n").unwrap_err();
        assert!(matches!(err, BergeError::Parse { line: 2, .. }));
        assert!(parse_graph("").is_err());
        let err = parse_hypergraph("hypergraph 4 3\n0 1 2\n0 1\n").unwrap_err();
        assert!(matches!(err, BergeError::Parse { line: 3, .. }));
        let err = parse_hypergraph("hypergraph 4 3\n0 1 2\n2 1 0\n").unwrap_err();
        assert!(matches!(err, BergeError::Parse { line: 3, .. }));
    }

    #[test]
    fn hypergraph_output_is_colex() {
        let h = parse_hypergraph("hypergraph 4 2\n2 3\n0 1\n# comment\n\n0 3\n").unwrap();
        assert_eq!(write_hypergraph(&h), "hypergraph 4 2\n0 1\n0 3\n2 3\n");
    }

    #[test]
    fn layout_json_keys() {
        let l = make_layout(8, 2, 3).unwrap();
        let text = write_layout(&l);
        assert!(text.contains("\"C\"") && text.contains("\"blocks\"") && text.contains("\"R\""));
        assert_eq!(parse_layout(&text).unwrap(), l);
    }

    proptest! {
        #[test]
        fn graph_round_trip(v in 1usize..9, mask in any::<u64>(), u in 2usize..4) {
            let sets: Vec<Vec<usize>> = if u == 2 {
                (0..v).flat_map(|b| (0..b).map(move |a| vec![a, b])).collect()
            } else {
                crate::model::colex::colex_enumerate(v.max(3), 3).unwrap().filter(|s| s[2] < v).collect()
            };
            let edges: Vec<_> = sets.into_iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, e)| e).collect();
            let g = GraphPattern::with_uniformity(v, u, edges).unwrap();
            prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        }

        #[test]
        fn hypergraph_round_trip(n in 3usize..9, r in 2usize..4, mask in any::<u64>()) {
            let sets: Vec<_> = crate::model::colex::colex_enumerate(n, r).unwrap().collect();
            let edges: Vec<_> = sets.into_iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, e)| e).collect();
            let h = UniformHypergraph::new(n, r, edges).unwrap();
            let text = write_hypergraph(&h);
            let back = parse_hypergraph(&text).unwrap();
            prop_assert_eq!(&back, &h);
            prop_assert_eq!(write_hypergraph(&back), text);
        }
    }
}
