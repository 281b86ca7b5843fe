use crate::error::{Error, Result};
use crate::generate::{GADGET_ATTACH, GADGET_EDGES, GADGET_VERTICES};
use crate::graph::WeightedGraph;

/// A 3-regular supergraph whose first vertices and edges are those of the
/// original graph; everything added weighs zero.
#[derive(Debug, Clone)]
pub struct Regularized {
    pub graph: WeightedGraph,
    pub original_vertices: usize,
    pub original_edges: usize,
}

impl Regularized {
    /// Restricts a side assignment of the regular graph to the original.
    pub fn restrict(&self, side: &[bool]) -> Vec<bool> {
        side[..self.original_vertices].to_vec()
    }
}

/// Pads every vertex of degree `d < 3` with `3 - d` copies of the
/// subdivided-K33 gadget, each hung from its degree-2 vertex.
pub fn regularize(graph: &WeightedGraph) -> Result<Regularized> {
    graph.require_triangle_free()?;
    graph.require_max_degree(3)?;
    let n = graph.vertex_count();
    let mut triples: Vec<(usize, usize, f64)> = graph.edges().iter().map(|e| (e.u, e.v, e.weight)).collect();
    let mut next = n;
    for s in 0..n {
        for _ in graph.degree(s)..3 {
            for &(a, b) in &GADGET_EDGES {
                triples.push((next + a, next + b, 0.0));
            }
            triples.push((s, next + GADGET_ATTACH, 0.0));
            next += GADGET_VERTICES;
        }
    }
    let regular = WeightedGraph::new(next, triples)?;
    if (0..next).any(|v| regular.degree(v) != 3) {
        return Err(Error::Structural("regularized graph is not 3-regular".into()));
    }
    Ok(Regularized { graph: regular, original_vertices: n, original_edges: graph.edge_count() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn c5_gets_five_gadgets() {
        let g = generate::cycle(5, 1.0).unwrap();
        let r = regularize(&g).unwrap();
        assert_eq!(r.graph.vertex_count(), 5 + 5 * GADGET_VERTICES);
        assert_eq!(r.graph.total_weight(), 5.0);
        assert!(r.graph.is_triangle_free());
        for id in 0..g.edge_count() {
            assert_eq!(r.graph.edge(id), g.edge(id));
        }
    }

    #[test]
    fn petersen_unchanged() {
        let g = generate::petersen(1.0);
        let r = regularize(&g).unwrap();
        assert_eq!(r.graph, g);
    }

    #[test]
    fn single_edge_gets_four() {
        let g = WeightedGraph::new(2, [(0, 1, 2.0)]).unwrap();
        let r = regularize(&g).unwrap();
        assert_eq!(r.graph.vertex_count(), 2 + 4 * GADGET_VERTICES);
        assert_eq!(r.graph.max_degree(), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(regularize(&generate::complete(4, 1.0).unwrap()).is_err());
        let star = WeightedGraph::uniform(5, [(0, 1), (0, 2), (0, 3), (0, 4)], 1.0).unwrap();
        assert!(matches!(regularize(&star), Err(Error::DegreeTooLarge { .. })));
    }
}
