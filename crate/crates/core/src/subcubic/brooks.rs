//! Constructive 3-coloring of subcubic graphs without a K4 component.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexColoring3 {
    /// Color of each vertex, in `1..=3`.
    pub class_of: Vec<u8>,
}

impl VertexColoring3 {
    pub fn is_proper(&self, graph: &WeightedGraph) -> bool {
        self.class_of.len() == graph.vertex_count()
            && self.class_of.iter().all(|&c| (1..=3).contains(&c))
            && graph.edges().iter().all(|e| self.class_of[e.u] != self.class_of[e.v])
    }

    pub fn require_proper(&self, graph: &WeightedGraph) -> Result<()> {
        if self.class_of.len() != graph.vertex_count() {
            return Err(Error::InvalidParameter("coloring has the wrong length".into()));
        }
        for e in graph.edges() {
            if self.class_of[e.u] == self.class_of[e.v] || !(1..=3).contains(&self.class_of[e.u]) {
                return Err(Error::ImproperColoring { u: e.u, v: e.v });
            }
        }
        Ok(())
    }

    /// Vertices of color `c`.
    pub fn class(&self, c: u8) -> Vec<usize> {
        (0..self.class_of.len()).filter(|&v| self.class_of[v] == c).collect()
    }
}

/// Proper 3-coloring of a subcubic graph with no K4 component.
///
/// Per component: with a vertex of degree at most 2, greedy in reverse BFS
/// order from it; a 3-regular component with a cut vertex is split into
/// pieces that each have a low-degree vertex; a 2-connected cubic component
/// gets two non-adjacent neighbors of some vertex colored alike first.
pub fn brooks_3_coloring(graph: &WeightedGraph) -> Result<VertexColoring3> {
    graph.require_max_degree(3)?;
    let n = graph.vertex_count();
    let mut color = vec![0u8; n];
    for component in graph.components() {
        let sub = graph.induced_subgraph(&component);
        let local = color_connected(&sub.graph)?;
        for (i, &v) in sub.vertex_origin.iter().enumerate() {
            color[v] = local[i];
        }
    }
    let coloring = VertexColoring3 { class_of: color };
    coloring.require_proper(graph)?;
    Ok(coloring)
}

fn color_connected(g: &WeightedGraph) -> Result<Vec<u8>> {
    let n = g.vertex_count();
    if let Some(low) = (0..n).find(|&v| g.degree(v) < 3) {
        let mut color = vec![0u8; n];
        greedy_reverse_bfs(g, low, &[], &mut color)?;
        return Ok(color);
    }
    if n == 4 {
        return Err(Error::Structural("K4 is not 3-colorable".into()));
    }
    if let Some(c) = cut_vertex(g) {
        return color_through_cut_vertex(g, c);
    }
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbors(v).iter().map(|&(x, _)| x).collect();
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                let (x, y) = (nbrs[i], nbrs[j]);
                if g.adjacent(x, y) || !connected_without(g, &[x, y]) {
                    continue;
                }
                let mut color = vec![0u8; n];
                color[x] = 1;
                color[y] = 1;
                greedy_reverse_bfs(g, v, &[x, y], &mut color)?;
                return Ok(color);
            }
        }
    }
    Err(Error::Structural("no Brooks triple in a 2-connected cubic graph".into()))
}

/// Colors every uncolored vertex greedily, farthest from `root` first,
/// skipping the `blocked` vertices during the search.
fn greedy_reverse_bfs(g: &WeightedGraph, root: usize, blocked: &[usize], color: &mut [u8]) -> Result<()> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for &b in blocked {
        seen[b] = true;
    }
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &(y, _) in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    for &x in order.iter().rev() {
        let c = (1..=3u8)
            .find(|&c| g.neighbors(x).iter().all(|&(y, _)| color[y] != c))
            .ok_or_else(|| Error::Structural(format!("greedy coloring stuck at vertex {x}")))?;
        color[x] = c;
    }
    Ok(())
}

fn connected_without(g: &WeightedGraph, removed: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for &r in removed {
        seen[r] = true;
    }
    let Some(start) = (0..n).find(|&v| !seen[v]) else {
        return true;
    };
    let mut stack = vec![start];
    seen[start] = true;
    let mut reached = removed.len() + 1;
    while let Some(x) = stack.pop() {
        for &(y, _) in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    reached == n
}

/// Some articulation point of a connected graph, by iterative low-link DFS.
pub fn cut_vertex(g: &WeightedGraph) -> Option<usize> {
    let n = g.vertex_count();
    if n < 3 {
        return None;
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut clock = 0;
    let root = 0;
    disc[root] = clock;
    low[root] = clock;
    clock += 1;
    let mut root_children = 0;
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    while let Some(&mut (x, parent, ref mut next)) = stack.last_mut() {
        if let Some(&(y, _)) = g.neighbors(x).get(*next) {
            *next += 1;
            if disc[y] == usize::MAX {
                disc[y] = clock;
                low[y] = clock;
                clock += 1;
                if x == root {
                    root_children += 1;
                }
                stack.push((y, x, 0));
            } else if y != parent {
                low[x] = low[x].min(disc[y]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[x]);
                if parent != root && low[x] >= disc[parent] {
                    return Some(parent);
                }
            }
        }
    }
    (root_children > 1).then_some(root)
}

/// Colors each piece `G[K ∪ {c}]` (K a component of `G - c`) on its own,
/// then permutes colors so `c` agrees everywhere.
fn color_through_cut_vertex(g: &WeightedGraph, c: usize) -> Result<Vec<u8>> {
    let n = g.vertex_count();
    let mut color = vec![0u8; n];
    let mut assigned = vec![false; n];
    assigned[c] = true;
    for start in 0..n {
        if assigned[start] {
            continue;
        }
        let mut piece = vec![c];
        let mut stack = vec![start];
        assigned[start] = true;
        while let Some(x) = stack.pop() {
            piece.push(x);
            for &(y, _) in g.neighbors(x) {
                if !assigned[y] {
                    assigned[y] = true;
                    stack.push(y);
                }
            }
        }
        piece.sort_unstable();
        let sub = g.induced_subgraph(&piece);
        let local_c = sub.local_vertex(c).unwrap();
        let mut local = vec![0u8; piece.len()];
        greedy_reverse_bfs(&sub.graph, local_c, &[], &mut local)?;
        // swap colors so that c gets color 1
        let at_c = local[local_c];
        for (i, &v) in sub.vertex_origin.iter().enumerate() {
            let col = local[i];
            color[v] = if col == at_c {
                1
            } else if col == 1 {
                at_c
            } else {
                col
            };
        }
    }
    Ok(color)
}
