//! Weighted simple undirected graphs and their basic statistics.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

/// Sums of integral weights stay exact in `f64` below this magnitude.
const EXACT_INTEGER_LIMIT: f64 = 4_503_599_627_370_496.0; // 2^52

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

impl Edge {
    /// The endpoint opposite to `x`.
    #[inline]
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Simple undirected graph with nonnegative edge weights.
///
/// Edge ids are positions in [`WeightedGraph::edges`]; adjacency lists are
/// sorted by neighbor id so every traversal is deterministic.
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, usize)>>,
    index: HashMap<(usize, usize), usize>,
    integral: bool,
}

impl PartialEq for WeightedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl WeightedGraph {
    /// Builds a graph from `(u, v, weight)` triples, rejecting loops,
    /// parallel edges, negative or non-finite weights.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut graph = WeightedGraph {
            vertex_count,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertex_count],
            index: HashMap::new(),
            integral: true,
        };
        for (u, v, weight) in edges {
            graph.push_edge(u, v, weight)?;
        }
        for list in &mut graph.adjacency {
            list.sort_unstable();
        }
        let total: f64 = graph.edges.iter().map(|e| e.weight).sum();
        graph.integral = total < EXACT_INTEGER_LIMIT
            && graph.edges.iter().all(|e| e.weight.fract() == 0.0);
        Ok(graph)
    }

    /// Graph with every edge of weight `weight`.
    pub fn uniform<I>(vertex_count: usize, pairs: I, weight: f64) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(vertex_count, pairs.into_iter().map(|(u, v)| (u, v, weight)))
    }

    fn push_edge(&mut self, u: usize, v: usize, weight: f64) -> Result<()> {
        for x in [u, v] {
            if x >= self.vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    vertex_count: self.vertex_count,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        let (u, v) = (u.min(v), u.max(v));
        if !weight.is_finite() {
            return Err(Error::NonFiniteWeight { u, v });
        }
        if weight < 0.0 {
            return Err(Error::NegativeWeight { u, v, weight });
        }
        if self.index.contains_key(&(u, v)) {
            return Err(Error::DuplicateEdge { u, v });
        }
        let id = self.edges.len();
        self.edges.push(Edge { u, v, weight });
        self.index.insert((u, v), id);
        self.adjacency[u].push((v, id));
        self.adjacency[v].push((u, id));
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    #[inline]
    pub fn weight(&self, id: usize) -> f64 {
        self.edges[id].weight
    }

    /// `(neighbor, edge id)` pairs in ascending neighbor order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    pub fn edge_set_weight(&self, ids: &[usize]) -> f64 {
        ids.iter().map(|&id| self.edges[id].weight).sum()
    }

    /// True when every weight is an integer and all sums are exact in `f64`.
    /// Exact comparisons of bounds against cut weights are only legal then.
    #[inline]
    pub fn is_integral(&self) -> bool {
        self.integral
    }

    /// Same graph with edges sorted by `(u, v)`.
    pub fn canonical(&self) -> WeightedGraph {
        let mut edges = self.edges.clone();
        edges.sort_by_key(|e| (e.u, e.v));
        WeightedGraph::new(self.vertex_count, edges.into_iter().map(|e| (e.u, e.v, e.weight)))
            .expect("canonical form of a valid graph is valid")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut components = Vec::new();
        for start in 0..self.vertex_count {
            if label[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            label[start] = id;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &(y, _) in &self.adjacency[x] {
                    if label[y] == usize::MAX {
                        label[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    /// Edge order follows the parent's edge ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Subgraph {
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edge_origin = Vec::new();
        let mut triples = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if local[e.u] != usize::MAX && local[e.v] != usize::MAX {
                triples.push((local[e.u], local[e.v], e.weight));
                edge_origin.push(id);
            }
        }
        let graph = WeightedGraph::new(vertices.len(), triples)
            .expect("induced subgraph of a valid graph is valid");
        Subgraph {
            graph,
            vertex_origin: vertices.to_vec(),
            edge_origin,
        }
    }

    /// Some triangle, if one exists.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for e in &self.edges {
            // merge the two sorted adjacency lists
            let (a, b) = (&self.adjacency[e.u], &self.adjacency[e.v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].0.cmp(&b[j].0) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return Some((e.u, e.v, a[i].0)),
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    /// Errors unless the graph is triangle-free.
    pub fn require_triangle_free(&self) -> Result<()> {
        match self.find_triangle() {
            Some((a, b, c)) => Err(Error::TriangleFound(a, b, c)),
            None => Ok(()),
        }
    }

    /// Errors if some vertex has degree above `max`.
    pub fn require_max_degree(&self, max: usize) -> Result<()> {
        match (0..self.vertex_count).find(|&v| self.degree(v) > max) {
            Some(v) => Err(Error::DegreeTooLarge {
                vertex: v,
                degree: self.degree(v),
                max,
            }),
            None => Ok(()),
        }
    }

    /// Length of a shortest cycle, `None` for forests. BFS from every vertex.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count;
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut via = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                if 2 * dist[x] + 1 >= best {
                    break;
                }
                for &(y, id) in &self.adjacency[x] {
                    if id == via[x] && x != root {
                        continue;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        via[y] = id;
                        queue.push_back(y);
                    } else {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Proper 2-coloring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side = vec![None; self.vertex_count];
        let mut stack = Vec::new();
        for start in 0..self.vertex_count {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            stack.push(start);
            while let Some(x) = stack.pop() {
                let sx = side[x].unwrap();
                for &(y, _) in &self.adjacency[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            stack.push(y);
                        }
                        Some(sy) if sy == sx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn stats(&self) -> GraphStats {
        let girth = self.girth();
        GraphStats {
            vertex_count: self.vertex_count,
            edge_count: self.edges.len(),
            total_weight: self.total_weight(),
            max_degree: self.max_degree(),
            girth,
            triangle_free: girth.is_none_or(|g| g >= 4),
            connected: self.is_connected(),
            integral: self.integral,
        }
    }
}

/// A subgraph together with the ids it had in its parent graph.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: WeightedGraph,
    pub vertex_origin: Vec<usize>,
    pub edge_origin: Vec<usize>,
}

impl Subgraph {
    /// Local edge ids of the given parent edge ids (those present here).
    pub fn local_edges(&self, parent_edges: &[usize]) -> Vec<usize> {
        let lookup: HashMap<usize, usize> = self
            .edge_origin
            .iter()
            .enumerate()
            .map(|(local, &parent)| (parent, local))
            .collect();
        parent_edges.iter().filter_map(|id| lookup.get(id).copied()).collect()
    }

    pub fn local_vertex(&self, parent_vertex: usize) -> Option<usize> {
        self.vertex_origin.iter().position(|&v| v == parent_vertex)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphStats {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub total_weight: f64,
    pub max_degree: usize,
    /// `None` when the graph is acyclic.
    pub girth: Option<usize>,
    pub triangle_free: bool,
    pub connected: bool,
    pub integral: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(
            WeightedGraph::new(2, [(0, 0, 1.0)]).unwrap_err(),
            Error::SelfLoop { vertex: 0 }
        );
        assert_eq!(
            WeightedGraph::new(2, [(0, 1, 1.0), (1, 0, 2.0)]).unwrap_err(),
            Error::DuplicateEdge { u: 0, v: 1 }
        );
        assert!(matches!(
            WeightedGraph::new(2, [(0, 1, -1.0)]).unwrap_err(),
            Error::NegativeWeight { .. }
        ));
        assert!(matches!(
            WeightedGraph::new(2, [(0, 2, 1.0)]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 2, .. }
        ));
        assert!(matches!(
            WeightedGraph::new(2, [(0, 1, f64::NAN)]).unwrap_err(),
            Error::NonFiniteWeight { .. }
        ));
    }

    #[test]
    fn zero_weight_edges_are_legal() {
        let g = WeightedGraph::new(2, [(0, 1, 0.0)]).unwrap();
        assert_eq!(g.total_weight(), 0.0);
        assert!(g.is_integral());
    }

    #[test]
    fn cycle_and_complete_stats() {
        let c5 = generate::cycle(5, 1.0).unwrap().stats();
        assert_eq!(c5.total_weight, 5.0);
        assert_eq!(c5.girth, Some(5));
        assert!(c5.triangle_free);
        let k4 = generate::complete(4, 1.0).unwrap().stats();
        assert_eq!(k4.girth, Some(3));
        assert!(!k4.triangle_free);
    }

    #[test]
    fn forest_has_no_girth() {
        let g = WeightedGraph::uniform(4, [(0, 1), (1, 2), (1, 3)], 1.0).unwrap();
        let s = g.stats();
        assert_eq!(s.girth, None);
        assert!(s.triangle_free);
        assert!(s.connected);
    }

    #[test]
    fn disconnected_components() {
        let g = WeightedGraph::uniform(5, [(0, 1), (3, 4)], 1.0).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.stats().connected);
    }

    #[test]
    fn girth_of_even_cycle_with_chord() {
        // C6 plus chord 0-3 -> two 4-cycles
        let g = WeightedGraph::uniform(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)], 1.0)
            .unwrap();
        assert_eq!(g.girth(), Some(4));
    }

    #[test]
    fn induced_subgraph_keeps_origins() {
        let g = generate::cycle(5, 1.0).unwrap();
        let sub = g.induced_subgraph(&[1, 2, 3]);
        assert_eq!(sub.graph.edge_count(), 2);
        assert_eq!(sub.vertex_origin, vec![1, 2, 3]);
        assert_eq!(sub.edge_origin, vec![1, 2]);
    }

    #[test]
    fn non_integral_weights_flagged() {
        let g = WeightedGraph::new(2, [(0, 1, 3.5)]).unwrap();
        assert!(!g.is_integral());
    }
}
