//! Cuts, B-subgraphs, and the conditional-expectation derandomizer.
//!
//! A B-subgraph is a bipartite edge set whose connected components are
//! induced subgraphs of the host graph. Orienting each component's
//! bipartition uniformly at random cuts all of its edges and every other
//! edge with probability 1/2, so some cut weighs at least
//! `(w(G) + w(R)) / 2`. [`derandomized_cut`] finds one deterministically.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Two-sided vertex partition with its cached weight.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cut {
    side: Vec<bool>,
    weight: f64,
}

impl Cut {
    pub fn from_sides(graph: &WeightedGraph, side: Vec<bool>) -> Cut {
        assert_eq!(side.len(), graph.vertex_count(), "one side label per vertex");
        let weight = cut_weight(graph, &side);
        Cut { side, weight }
    }

    #[inline]
    pub fn weight(&self) -> f64 {
        self.weight
    }

    #[inline]
    pub fn side(&self) -> &[bool] {
        &self.side
    }

    pub fn into_sides(self) -> Vec<bool> {
        self.side
    }

    #[inline]
    pub fn crosses(&self, graph: &WeightedGraph, edge: usize) -> bool {
        let e = graph.edge(edge);
        self.side[e.u] != self.side[e.v]
    }

    /// Whether the cached weight matches a fresh recomputation.
    pub fn is_consistent(&self, graph: &WeightedGraph) -> bool {
        self.side.len() == graph.vertex_count() && cut_weight(graph, &self.side) == self.weight
    }

    /// `0`/`1` per vertex, vertex 0 first.
    pub fn bitstring(&self) -> String {
        self.side.iter().map(|&s| if s { '1' } else { '0' }).collect()
    }

    pub fn from_bitstring(graph: &WeightedGraph, bits: &str) -> Result<Cut> {
        let side: Option<Vec<bool>> = bits
            .chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect();
        match side {
            Some(side) if side.len() == graph.vertex_count() => Ok(Cut::from_sides(graph, side)),
            _ => Err(Error::InvalidParameter(format!("bad cut bitstring {bits:?}"))),
        }
    }
}

pub fn cut_weight(graph: &WeightedGraph, side: &[bool]) -> f64 {
    graph
        .edges()
        .iter()
        .filter(|e| side[e.u] != side[e.v])
        .map(|e| e.weight)
        .sum()
}

/// A set of vertices with a fixed internal 2-coloring; its orientation
/// (as given or flipped) is what the derandomizer decides.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub side: Vec<bool>,
}

impl Block {
    pub fn singleton(v: usize) -> Block {
        Block { vertices: vec![v], side: vec![false] }
    }
}

/// One connected component of a B-subgraph with its bipartition.
pub type Component = Block;

/// Verified B-subgraph: edge ids plus per-component bipartitions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BSubgraph {
    edges: Vec<usize>,
    components: Vec<Component>,
}

impl BSubgraph {
    pub fn empty() -> BSubgraph {
        BSubgraph { edges: Vec::new(), components: Vec::new() }
    }

    /// Sorted edge ids.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// Nontrivial components, ordered by smallest vertex.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn weight(&self, graph: &WeightedGraph) -> f64 {
        graph.edge_set_weight(&self.edges)
    }
}

/// Checks that `edge_set` is a B-subgraph of `graph` and records the
/// bipartition of each component.
pub fn verify_b_subgraph(graph: &WeightedGraph, edge_set: &[usize]) -> Result<BSubgraph> {
    let n = graph.vertex_count();
    let mut in_set = vec![false; graph.edge_count()];
    let mut edges = Vec::with_capacity(edge_set.len());
    for &id in edge_set {
        if id >= graph.edge_count() {
            return Err(Error::UnknownEdge { edge: id });
        }
        if !in_set[id] {
            in_set[id] = true;
            edges.push(id);
        }
    }
    edges.sort_unstable();

    let mut label = vec![usize::MAX; n];
    let mut color = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let touches = graph.neighbors(start).iter().any(|&(_, id)| in_set[id]);
        if !touches {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        label[start] = id;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &(y, e) in graph.neighbors(x) {
                if !in_set[e] {
                    continue;
                }
                if label[y] == usize::MAX {
                    label[y] = id;
                    color[y] = !color[x];
                    members.push(y);
                } else if color[y] == color[x] {
                    let edge = graph.edge(e);
                    return Err(Error::NotBipartite { u: edge.u, v: edge.v });
                }
            }
        }
        members.sort_unstable();
        let side = members.iter().map(|&v| color[v]).collect();
        components.push(Block { vertices: members, side });
    }

    // induced: no host edge inside a component may be missing from the set
    for (id, e) in graph.edges().iter().enumerate() {
        if !in_set[id] && label[e.u] != usize::MAX && label[e.u] == label[e.v] {
            return Err(Error::NotInduced { u: e.u, v: e.v });
        }
    }
    Ok(BSubgraph { edges, components })
}

/// Orients blocks one at a time so the conditional expected cut weight
/// never decreases.
///
/// Blocks must be vertex-disjoint; vertices not covered by any block become
/// singletons. Blocks are processed in descending order of the weight
/// leaving them (ties by ascending block index); each takes the
/// orientation cutting more weight towards already placed vertices, the
/// given orientation on ties. The result cuts at least the internal
/// crossing weight of every block plus half the weight between blocks.
pub fn place_blocks(graph: &WeightedGraph, blocks: &[Block]) -> Cut {
    let n = graph.vertex_count();
    let mut owner = vec![usize::MAX; n];
    let mut all: Vec<Block> = Vec::with_capacity(blocks.len());
    for block in blocks {
        debug_assert_eq!(block.vertices.len(), block.side.len());
        for &v in &block.vertices {
            assert!(owner[v] == usize::MAX, "blocks must be vertex-disjoint (vertex {v})");
            owner[v] = all.len();
        }
        all.push(block.clone());
    }
    for (v, slot) in owner.iter_mut().enumerate() {
        if *slot == usize::MAX {
            *slot = all.len();
            all.push(Block::singleton(v));
        }
    }

    let outside: Vec<f64> = all
        .iter()
        .enumerate()
        .map(|(b, block)| {
            block
                .vertices
                .iter()
                .flat_map(|&v| graph.neighbors(v))
                .filter(|&&(y, _)| owner[y] != b)
                .map(|&(_, id)| graph.weight(id))
                .sum()
        })
        .collect();
    let mut order: Vec<usize> = (0..all.len()).collect();
    order.sort_by(|&a, &b| outside[b].total_cmp(&outside[a]).then(a.cmp(&b)));

    let mut placed: Vec<Option<bool>> = vec![None; n];
    for b in order {
        let block = &all[b];
        // cut weight towards placed vertices: as given vs flipped
        let (mut keep, mut flip) = (0.0, 0.0);
        for (&v, &s) in block.vertices.iter().zip(&block.side) {
            for &(y, id) in graph.neighbors(v) {
                if let Some(sy) = placed[y] {
                    if sy != s {
                        keep += graph.weight(id);
                    } else {
                        flip += graph.weight(id);
                    }
                }
            }
        }
        let flipped = flip > keep;
        for (&v, &s) in block.vertices.iter().zip(&block.side) {
            placed[v] = Some(s ^ flipped);
        }
    }
    Cut::from_sides(graph, placed.into_iter().map(Option::unwrap).collect())
}

/// A cut containing every edge of `r` and weighing at least `(w(G) + w(R)) / 2`.
pub fn derandomized_cut(graph: &WeightedGraph, r: &BSubgraph) -> Cut {
    place_blocks(graph, &r.components)
}

/// First-improvement local search: flips the lowest-id vertex whose flip
/// strictly increases the cut weight, until no such vertex exists.
pub fn local_search_improve(graph: &WeightedGraph, cut: &Cut) -> Cut {
    let n = graph.vertex_count();
    let mut side = cut.side.clone();
    let epsilon = 1e-12 * graph.total_weight().max(1.0);
    let gain = |side: &[bool], v: usize| -> f64 {
        graph
            .neighbors(v)
            .iter()
            .map(|&(y, id)| if side[y] == side[v] { graph.weight(id) } else { -graph.weight(id) })
            .sum()
    };
    let mut v = 0;
    while v < n {
        if gain(&side, v) > epsilon {
            side[v] = !side[v];
            v = 0;
        } else {
            v += 1;
        }
    }
    let improved = Cut::from_sides(graph, side);
    if improved.weight >= cut.weight {
        improved
    } else {
        cut.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn c5() -> WeightedGraph {
        generate::cycle(5, 1.0).unwrap()
    }

    #[test]
    fn single_edge_is_b_subgraph() {
        let g = c5();
        let r = verify_b_subgraph(&g, &[0]).unwrap();
        assert_eq!(r.components().len(), 1);
        assert_eq!(r.components()[0].vertices, vec![0, 1]);
    }

    #[test]
    fn spanning_path_of_c5_is_not_induced() {
        let g = c5();
        assert!(matches!(verify_b_subgraph(&g, &[0, 1, 2, 3]), Err(Error::NotInduced { .. })));
    }

    #[test]
    fn induced_three_edge_path_of_c5() {
        // v1v2, v2v3, v3v4 with v1v4 not an edge of C5
        let g = c5();
        assert!(!g.adjacent(0, 3));
        let r = verify_b_subgraph(&g, &[0, 1, 2]).unwrap();
        let cut = derandomized_cut(&g, &r);
        assert!(2.0 * cut.weight() >= g.total_weight() + r.weight(&g));
        assert_eq!(cut.weight(), 4.0);
    }

    #[test]
    fn odd_cycle_is_not_bipartite() {
        let g = c5();
        assert!(matches!(verify_b_subgraph(&g, &[0, 1, 2, 3, 4]), Err(Error::NotBipartite { .. })));
    }

    #[test]
    fn empty_b_subgraph_gives_half() {
        let g = generate::complete(6, 1.0).unwrap();
        let cut = derandomized_cut(&g, &BSubgraph::empty());
        assert!(2.0 * cut.weight() >= g.total_weight());
    }

    #[test]
    fn c5_single_edge_cut_at_least_three() {
        let g = c5();
        let r = verify_b_subgraph(&g, &[2]).unwrap();
        let cut = derandomized_cut(&g, &r);
        assert!(cut.weight() >= 3.0);
        assert!(cut.crosses(&g, 2));
    }

    #[test]
    fn local_search_on_k4() {
        let g = generate::complete(4, 1.0).unwrap();
        let start = Cut::from_sides(&g, vec![false; 4]);
        assert_eq!(start.weight(), 0.0);
        let improved = local_search_improve(&g, &start);
        assert!(improved.weight() >= 3.0);
    }

    #[test]
    fn local_search_keeps_optimal_c5() {
        let g = c5();
        let opt = Cut::from_sides(&g, vec![false, true, false, true, true]);
        assert_eq!(opt.weight(), 4.0);
        assert_eq!(local_search_improve(&g, &opt).weight(), 4.0);
    }

    #[test]
    fn bitstring_round_trip() {
        let g = c5();
        let cut = Cut::from_sides(&g, vec![false, true, false, true, true]);
        assert_eq!(cut.bitstring(), "01011");
        assert_eq!(Cut::from_bitstring(&g, "01011").unwrap(), cut);
        assert!(Cut::from_bitstring(&g, "0101").is_err());
    }

    #[test]
    fn place_blocks_respects_internal_sides() {
        let g = generate::path(4, 1.0).unwrap();
        let blocks = [Block { vertices: vec![1, 2], side: vec![false, true] }];
        let cut = place_blocks(&g, &blocks);
        assert_eq!(cut.weight(), 3.0);
    }
}
