//! Line-oriented graph files.
//!
//! ```text
//! c comment lines start with 'c'
//! p <num_vertices> <num_edges>
//! e <u> <v> <weight>
//! ```
//! Vertex ids are 0-based; weights are decimal. The writer emits edges
//! sorted by `(u, v)` with weights in shortest round-trip form.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

pub fn load_graph(text: &str) -> Result<WeightedGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut triples = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let malformed = |message: &str| Error::Malformed {
            line: line_no,
            message: format!("{message}: {line:?}"),
        };
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(malformed("second header"));
                }
                let n = parse_usize(fields.next(), line_no, "vertex count")?;
                let m = parse_usize(fields.next(), line_no, "edge count")?;
                if fields.next().is_some() {
                    return Err(malformed("trailing fields"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or(Error::MissingHeader)?;
                let u = parse_usize(fields.next(), line_no, "endpoint")?;
                let v = parse_usize(fields.next(), line_no, "endpoint")?;
                let weight_text = fields.next().ok_or_else(|| malformed("missing weight"))?;
                let weight: f64 = weight_text
                    .parse()
                    .map_err(|_| malformed("weight is not a decimal number"))?;
                if fields.next().is_some() {
                    return Err(malformed("trailing fields"));
                }
                if u == v {
                    return Err(Error::SelfLoop { vertex: u });
                }
                for x in [u, v] {
                    if x >= n {
                        return Err(Error::VertexOutOfRange {
                            vertex: x,
                            vertex_count: n,
                        });
                    }
                }
                triples.push((u, v, weight));
            }
            _ => return Err(malformed("expected a 'c', 'p' or 'e' line")),
        }
    }
    let (n, m) = header.ok_or(Error::MissingHeader)?;
    if triples.len() != m {
        return Err(Error::EdgeCountMismatch {
            declared: m,
            found: triples.len(),
        });
    }
    WeightedGraph::new(n, triples)
}

fn parse_usize(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let text = field.ok_or_else(|| Error::Malformed {
        line,
        message: format!("missing {what}"),
    })?;
    text.parse().map_err(|_| Error::Malformed {
        line,
        message: format!("{what} {text:?} is not a nonnegative integer"),
    })
}

pub fn save_graph(graph: &WeightedGraph) -> String {
    let mut edges: Vec<_> = graph.edges().to_vec();
    edges.sort_by_key(|e| (e.u, e.v));
    let mut out = String::new();
    let _ = writeln!(out, "p {} {}", graph.vertex_count(), edges.len());
    for e in edges {
        // `{}` on f64 is the shortest representation that parses back exactly
        let _ = writeln!(out, "e {} {} {}", e.u, e.v, e.weight);
    }
    out
}

pub fn read_graph_file(path: &Path) -> Result<WeightedGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    load_graph(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use proptest::prelude::*;

    #[test]
    fn single_edge() {
        let g = load_graph("p 2 1\ne 0 1 3.5\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.weight(0), 3.5);
    }

    #[test]
    fn cycle_file_with_comments() {
        let text = "c the 5-cycle\np 5 5\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 0 4 1\n";
        let g = load_graph(text).unwrap();
        assert_eq!(g.stats().girth, Some(5));
    }

    #[test]
    fn error_kinds_are_distinct() {
        assert_eq!(load_graph("p 2 1\ne 0 0 1\n").unwrap_err(), Error::SelfLoop { vertex: 0 });
        assert_eq!(
            load_graph("p 2 2\ne 0 1 1\ne 1 0 1\n").unwrap_err(),
            Error::DuplicateEdge { u: 0, v: 1 }
        );
        assert!(matches!(
            load_graph("p 2 1\ne 0 1 -2\n").unwrap_err(),
            Error::NegativeWeight { .. }
        ));
        assert!(matches!(
            load_graph("p 2 1\ne 0 1\n").unwrap_err(),
            Error::Malformed { line: 2, .. }
        ));
        assert!(matches!(
            load_graph("p 2 1\nx 0 1 1\n").unwrap_err(),
            Error::Malformed { line: 2, .. }
        ));
        assert_eq!(load_graph("e 0 1 1\n").unwrap_err(), Error::MissingHeader);
        assert_eq!(
            load_graph("p 3 2\ne 0 1 1\n").unwrap_err(),
            Error::EdgeCountMismatch { declared: 2, found: 1 }
        );
    }

    #[test]
    fn writer_sorts_edges() {
        let g = WeightedGraph::new(3, [(2, 1, 0.1), (0, 2, 7.0)]).unwrap();
        assert_eq!(save_graph(&g), "p 3 2\ne 0 2 7\ne 1 2 0.1\n");
    }

    #[test]
    fn petersen_round_trip() {
        let g = generate::petersen(1.0);
        assert_eq!(load_graph(&save_graph(&g)).unwrap(), g.canonical());
    }

    proptest! {
        #[test]
        fn save_then_load_is_canonical_identity(
            n in 2usize..12,
            raw in proptest::collection::vec((0usize..12, 0usize..12, 0.0f64..1e6), 0..30),
        ) {
            let mut seen = std::collections::HashSet::new();
            let triples: Vec<_> = raw
                .into_iter()
                .map(|(u, v, w)| (u % n, v % n, w))
                .filter(|&(u, v, _)| u != v && seen.insert((u.min(v), u.max(v))))
                .collect();
            let g = WeightedGraph::new(n, triples).unwrap();
            let back = load_graph(&save_graph(&g)).unwrap();
            prop_assert_eq!(back, g.canonical());
        }
    }
}
