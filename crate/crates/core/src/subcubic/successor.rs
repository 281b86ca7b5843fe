//! The successor digraph of a 3-colored subcubic graph and the edge
//! classes it induces.

use serde::Serialize;

use super::brooks::VertexColoring3;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuccessorDigraph {
    /// `succ[v] = Some(s(v))`: the neighbor of `v` holding the one color
    /// that occurs exactly once around `v`.
    pub succ: Vec<Option<usize>>,
}

impl SuccessorDigraph {
    /// Arcs `v -> s(v)` in vertex order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ.iter().enumerate().filter_map(|(v, s)| s.map(|s| (v, s)))
    }
}

/// `s(v)` is defined when exactly one color occurs exactly once among the
/// neighbors of `v`. A degree-2 vertex whose neighbors differ in color has
/// two such colors and gets no successor.
pub fn successor_digraph(graph: &WeightedGraph, coloring: &VertexColoring3) -> Result<SuccessorDigraph> {
    coloring.require_proper(graph)?;
    let succ = (0..graph.vertex_count())
        .map(|v| {
            let mut count = [0usize; 4];
            for &(x, _) in graph.neighbors(v) {
                count[coloring.class_of[x] as usize] += 1;
            }
            let once: Vec<u8> = (1..=3u8).filter(|&c| count[c as usize] == 1).collect();
            match once.as_slice() {
                [c] => graph.neighbors(v).iter().map(|&(x, _)| x).find(|&x| coloring.class_of[x] == *c),
                _ => None,
            }
        })
        .collect();
    Ok(SuccessorDigraph { succ })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgeClass {
    /// Not of the form `v s(v)`.
    A0,
    /// `v s(v)` for exactly one endpoint.
    A1,
    /// `s(u) = v` and `s(v) = u`.
    A2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeClassification {
    pub class_of_edge: Vec<EdgeClass>,
}

impl EdgeClassification {
    pub fn edges_of(&self, class: EdgeClass) -> Vec<usize> {
        (0..self.class_of_edge.len()).filter(|&id| self.class_of_edge[id] == class).collect()
    }

    /// `(w(A0), w(A1), w(A2))`.
    pub fn weights(&self, graph: &WeightedGraph) -> (f64, f64, f64) {
        let mut w = [0.0; 3];
        for (id, class) in self.class_of_edge.iter().enumerate() {
            w[*class as usize] += graph.weight(id);
        }
        (w[0], w[1], w[2])
    }
}

pub fn classify_edges(graph: &WeightedGraph, digraph: &SuccessorDigraph) -> Result<EdgeClassification> {
    let mut hits = vec![0u8; graph.edge_count()];
    for (v, s) in digraph.arcs() {
        let id = graph
            .edge_between(v, s)
            .ok_or_else(|| Error::Structural(format!("successor arc {v}->{s} is not an edge")))?;
        hits[id] += 1;
    }
    let class_of_edge: Vec<EdgeClass> = hits
        .into_iter()
        .map(|h| match h {
            0 => EdgeClass::A0,
            1 => EdgeClass::A1,
            _ => EdgeClass::A2,
        })
        .collect();
    let classification = EdgeClassification { class_of_edge };
    // A2 must be a matching: out-degree at most one
    let a2 = classification.edges_of(EdgeClass::A2);
    crate::bounds::check_matching(graph, &a2).map_err(|e| Error::Structural(format!("A2 is not a matching: {e}")))?;
    Ok(classification)
}

/// Checks the three-coloring alternation along successor arcs: for an arc
/// `p2 -> p3` and any other neighbor `p1` of `p2` the three colors differ,
/// and colors repeat with period three along directed paths.
pub fn check_alternation(graph: &WeightedGraph, coloring: &VertexColoring3, digraph: &SuccessorDigraph) -> Result<()> {
    let c = &coloring.class_of;
    for (p2, p3) in digraph.arcs() {
        for &(p1, _) in graph.neighbors(p2) {
            if p1 != p3 && (c[p1] == c[p2] || c[p1] == c[p3] || c[p2] == c[p3]) {
                return Err(Error::Structural(format!("colors repeat on {p1}-{p2}->{p3}")));
            }
        }
        if let Some(p4) = digraph.succ[p3] {
            if p4 != p2 {
                if let Some(p5) = digraph.succ[p4] {
                    if p5 != p3 && c[p5] != c[p2] {
                        return Err(Error::Structural(format!("period-three violation on {p2}->{p3}->{p4}->{p5}")));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::subcubic::{brooks_3_coloring, regularize};

    #[test]
    fn exactly_once_rule() {
        // v = 0 with neighbors colored 2, 2, 3
        let g = WeightedGraph::uniform(4, [(0, 1), (0, 2), (0, 3)], 1.0).unwrap();
        let col = VertexColoring3 { class_of: vec![1, 2, 2, 3] };
        let d = successor_digraph(&g, &col).unwrap();
        assert_eq!(d.succ[0], Some(3));
        // leaves see one neighbor of color 1 exactly once
        assert_eq!(d.succ[1], Some(0));
    }

    #[test]
    fn degree_two_with_distinct_colors_has_no_successor() {
        let g = generate::path(3, 1.0).unwrap();
        let col = VertexColoring3 { class_of: vec![2, 1, 3] };
        let d = successor_digraph(&g, &col).unwrap();
        assert_eq!(d.succ[1], None);
    }

    #[test]
    fn mutual_successors_are_a2() {
        let g = WeightedGraph::new(2, [(0, 1, 1.0)]).unwrap();
        let col = VertexColoring3 { class_of: vec![1, 2] };
        let d = successor_digraph(&g, &col).unwrap();
        let cls = classify_edges(&g, &d).unwrap();
        assert_eq!(cls.class_of_edge, vec![EdgeClass::A2]);
    }

    #[test]
    fn improper_coloring_rejected() {
        let g = generate::path(2, 1.0).unwrap();
        let col = VertexColoring3 { class_of: vec![1, 1] };
        assert!(matches!(successor_digraph(&g, &col), Err(Error::ImproperColoring { .. })));
    }

    #[test]
    fn partition_and_alternation_on_corpus() {
        for seed in 0..100 {
            let g = generate::random_triangle_free_subcubic(12 + seed as usize % 10, seed, generate::WeightDistribution::Integer { lo: 0, hi: 10 }).unwrap();
            let r = regularize(&g).unwrap();
            let col = brooks_3_coloring(&r.graph).unwrap();
            let d = successor_digraph(&r.graph, &col).unwrap();
            check_alternation(&r.graph, &col, &d).unwrap();
            let cls = classify_edges(&r.graph, &d).unwrap();
            let (a0, a1, a2) = cls.weights(&r.graph);
            assert_eq!(a0 + a1 + a2, r.graph.total_weight());
        }
    }
}
