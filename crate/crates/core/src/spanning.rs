//! Rooted spanning trees and the level decompositions that turn them into
//! families of B-subgraphs.

use serde::Serialize;

use crate::cut::{verify_b_subgraph, BSubgraph};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeKind {
    Dfs,
    Arbitrary,
}

/// Where levels are measured from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeRoot {
    Vertex(usize),
    /// Both endpoints of this tree edge sit at level 0.
    Edge(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootedSpanningTree {
    parent: Vec<Option<usize>>,
    parent_edge: Vec<Option<usize>>,
    roots: Vec<usize>,
    root_edge: Option<usize>,
    level: Vec<usize>,
    tree_edges: Vec<usize>,
    kind: TreeKind,
    // preorder entry/exit times for O(1) ancestor queries
    enter: Vec<usize>,
    exit: Vec<usize>,
}

impl RootedSpanningTree {
    /// Validates that `edges` span `graph` as a tree and roots it.
    pub fn from_edges(graph: &WeightedGraph, edges: &[usize], root: TreeRoot, kind: TreeKind) -> Result<Self> {
        let n = graph.vertex_count();
        if n == 0 {
            return Err(Error::NotASpanningTree("empty graph".into()));
        }
        let mut tree_edges = edges.to_vec();
        tree_edges.sort_unstable();
        tree_edges.dedup();
        if tree_edges.len() + 1 != n {
            return Err(Error::NotASpanningTree(format!(
                "{} edges for {n} vertices",
                tree_edges.len()
            )));
        }
        let mut tree_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for &id in &tree_edges {
            if id >= graph.edge_count() {
                return Err(Error::UnknownEdge { edge: id });
            }
            let e = graph.edge(id);
            tree_adj[e.u].push((e.v, id));
            tree_adj[e.v].push((e.u, id));
        }
        for list in &mut tree_adj {
            list.sort_unstable();
        }
        let (roots, root_edge) = match root {
            TreeRoot::Vertex(r) if r < n => (vec![r], None),
            TreeRoot::Vertex(r) => {
                return Err(Error::VertexOutOfRange { vertex: r, vertex_count: n });
            }
            TreeRoot::Edge(id) => {
                if tree_edges.binary_search(&id).is_err() {
                    return Err(Error::InvalidParameter(format!("edge {id} is not a tree edge")));
                }
                let e = graph.edge(id);
                (vec![e.u, e.v], Some(id))
            }
        };

        let mut parent = vec![None; n];
        let mut parent_edge = vec![None; n];
        let mut level = vec![usize::MAX; n];
        let mut enter = vec![0; n];
        let mut exit = vec![0; n];
        let mut clock = 0;
        for &r in &roots {
            level[r] = 0;
        }
        for &r in &roots {
            // iterative preorder walk, skipping the other root
            let mut stack: Vec<(usize, usize)> = vec![(r, 0)];
            enter[r] = clock;
            clock += 1;
            while let Some(&mut (x, ref mut next)) = stack.last_mut() {
                if let Some(&(y, id)) = tree_adj[x].get(*next) {
                    *next += 1;
                    if Some(id) == root_edge || Some(id) == parent_edge[x] {
                        continue;
                    }
                    if level[y] != usize::MAX {
                        return Err(Error::NotASpanningTree("edges contain a cycle".into()));
                    }
                    level[y] = level[x] + 1;
                    parent[y] = Some(x);
                    parent_edge[y] = Some(id);
                    enter[y] = clock;
                    clock += 1;
                    stack.push((y, 0));
                } else {
                    exit[x] = clock;
                    stack.pop();
                }
            }
        }
        if level.contains(&usize::MAX) {
            return Err(Error::NotASpanningTree("edges do not reach every vertex".into()));
        }
        Ok(RootedSpanningTree {
            parent,
            parent_edge,
            roots,
            root_edge,
            level,
            tree_edges,
            kind,
            enter,
            exit,
        })
    }

    /// The same tree measured from a different root.
    pub fn rerooted(&self, graph: &WeightedGraph, root: TreeRoot) -> Result<Self> {
        let kind = match (root, self.kind) {
            (TreeRoot::Vertex(r), TreeKind::Dfs) if self.roots == [r] => TreeKind::Dfs,
            _ => TreeKind::Arbitrary,
        };
        Self::from_edges(graph, &self.tree_edges, root, kind)
    }

    pub fn kind(&self) -> TreeKind {
        self.kind
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn root_edge(&self) -> Option<usize> {
        self.root_edge
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parent_edge(&self, v: usize) -> Option<usize> {
        self.parent_edge[v]
    }

    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    /// Sorted tree edge ids.
    pub fn edges(&self) -> &[usize] {
        &self.tree_edges
    }

    pub fn contains_edge(&self, id: usize) -> bool {
        self.tree_edges.binary_search(&id).is_ok()
    }

    pub fn weight(&self, graph: &WeightedGraph) -> f64 {
        graph.edge_set_weight(&self.tree_edges)
    }

    /// Whether `a` is an ancestor of `b` (every vertex is its own ancestor).
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        self.enter[a] <= self.enter[b] && self.exit[b] <= self.exit[a]
    }

    /// Number of edges on the tree path between `u` and `v`.
    pub fn path_length(&self, u: usize, v: usize) -> usize {
        let (mut a, mut b) = (u, v);
        let mut length = 0;
        while self.level[a] > self.level[b] {
            a = self.parent[a].unwrap();
            length += 1;
        }
        while self.level[b] > self.level[a] {
            b = self.parent[b].unwrap();
            length += 1;
        }
        while a != b {
            match (self.parent[a], self.parent[b]) {
                (Some(pa), Some(pb)) => {
                    a = pa;
                    b = pb;
                    length += 2;
                }
                // the two halves of an edge-rooted tree
                _ => return length + 1,
            }
        }
        length
    }

    /// Errors with the first non-tree edge joining two vertices neither of
    /// which is an ancestor of the other.
    pub fn check_no_cross_edges(&self, graph: &WeightedGraph) -> Result<()> {
        for (id, e) in graph.edges().iter().enumerate() {
            if self.contains_edge(id) {
                continue;
            }
            if !self.is_ancestor(e.u, e.v) && !self.is_ancestor(e.v, e.u) {
                return Err(Error::Structural(format!("cross edge {}-{} in a DFS tree", e.u, e.v)));
            }
        }
        Ok(())
    }
}

fn require_connected(graph: &WeightedGraph) -> Result<()> {
    if graph.vertex_count() == 0 || !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Depth-first search tree exploring neighbors in ascending id order.
pub fn dfs_tree(graph: &WeightedGraph, root: usize) -> Result<RootedSpanningTree> {
    require_connected(graph)?;
    let n = graph.vertex_count();
    if root >= n {
        return Err(Error::VertexOutOfRange { vertex: root, vertex_count: n });
    }
    let mut visited = vec![false; n];
    let mut edges = Vec::with_capacity(n - 1);
    let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
    visited[root] = true;
    while let Some(&mut (x, ref mut next)) = stack.last_mut() {
        if let Some(&(y, id)) = graph.neighbors(x).get(*next) {
            *next += 1;
            if !visited[y] {
                visited[y] = true;
                edges.push(id);
                stack.push((y, 0));
            }
        } else {
            stack.pop();
        }
    }
    RootedSpanningTree::from_edges(graph, &edges, TreeRoot::Vertex(root), TreeKind::Dfs)
}

fn greedy_spanning_tree(graph: &WeightedGraph, heaviest_first: bool) -> Result<RootedSpanningTree> {
    require_connected(graph)?;
    let mut order: Vec<usize> = (0..graph.edge_count()).collect();
    // stable sort keeps ties in edge id order
    if heaviest_first {
        order.sort_by(|&a, &b| graph.weight(b).total_cmp(&graph.weight(a)));
    } else {
        order.sort_by(|&a, &b| graph.weight(a).total_cmp(&graph.weight(b)));
    }
    let mut forest = DisjointSets::new(graph.vertex_count());
    let edges: Vec<usize> = order
        .into_iter()
        .filter(|&id| {
            let e = graph.edge(id);
            forest.union(e.u, e.v)
        })
        .collect();
    RootedSpanningTree::from_edges(graph, &edges, TreeRoot::Vertex(0), TreeKind::Arbitrary)
}

/// Kruskal minimum-weight spanning tree rooted at vertex 0.
pub fn min_spanning_tree(graph: &WeightedGraph) -> Result<RootedSpanningTree> {
    greedy_spanning_tree(graph, false)
}

/// Kruskal maximum-weight spanning tree rooted at vertex 0.
pub fn max_spanning_tree(graph: &WeightedGraph) -> Result<RootedSpanningTree> {
    greedy_spanning_tree(graph, true)
}

/// Tree edges split by the parity of their upper level: `.0` holds edges
/// between levels `i` and `i+1` for odd `i`, `.1` for even `i`.
///
/// For a DFS tree both halves are B-subgraphs; for an arbitrary tree this
/// holds when the graph is triangle-free. Violations surface as
/// verification errors.
pub fn parity_layer_bsubgraphs(graph: &WeightedGraph, tree: &RootedSpanningTree) -> Result<(BSubgraph, BSubgraph)> {
    let (mut odd, mut even) = (Vec::new(), Vec::new());
    for v in 0..graph.vertex_count() {
        if let (Some(p), Some(id)) = (tree.parent(v), tree.parent_edge(v)) {
            if tree.level(p) % 2 == 1 {
                odd.push(id);
            } else {
                even.push(id);
            }
        }
    }
    Ok((verify_b_subgraph(graph, &odd)?, verify_b_subgraph(graph, &even)?))
}

/// Checks that every non-tree edge closing an odd cycle with the tree
/// closes one longer than `limit`.
pub fn check_odd_cycles(graph: &WeightedGraph, tree: &RootedSpanningTree, limit: usize) -> Result<()> {
    for (id, e) in graph.edges().iter().enumerate() {
        if tree.contains_edge(id) {
            continue;
        }
        let length = tree.path_length(e.u, e.v) + 1;
        if length % 2 == 1 && length <= limit {
            return Err(Error::OddCyclePrecondition { edge: id, length, limit });
        }
    }
    Ok(())
}

/// The `k` layer subgraphs `G_0..G_{k-1}`.
///
/// `G_j` keeps every tree edge except those between levels `i` and `i+1`
/// with `i ≡ j (mod k)`, plus every non-tree edge whose endpoints fall in
/// one component of the kept tree edges. Every tree edge lies in `k - 1`
/// of the layers; the root edge, when the tree is rooted at one, in all `k`.
///
/// Preconditions, checked: a DFS tree rooted at a vertex needs `k` even and
/// girth at least `k`; otherwise (or when that fails) no non-tree edge may
/// close an odd cycle of length `2k - 1` or less with the tree. When
/// `e_star` is given the tree is re-rooted at that edge first.
pub fn girth_layer_bsubgraphs(
    graph: &WeightedGraph,
    tree: &RootedSpanningTree,
    k: usize,
    e_star: Option<usize>,
) -> Result<Vec<BSubgraph>> {
    if k == 0 {
        return Err(Error::InvalidParameter("layer count k must be positive".into()));
    }
    let rerooted;
    let tree = match e_star {
        Some(id) => {
            rerooted = tree.rerooted(graph, TreeRoot::Edge(id))?;
            &rerooted
        }
        None => tree,
    };

    let girth_route = tree.kind() == TreeKind::Dfs
        && tree.root_edge().is_none()
        && k.is_multiple_of(2)
        && graph.girth().is_none_or(|g| g >= k);
    if !girth_route {
        if let Err(err) = check_odd_cycles(graph, tree, 2 * k - 1) {
            if tree.kind() == TreeKind::Dfs && tree.root_edge().is_none() {
                let girth = graph.girth().unwrap_or(0);
                return Err(Error::GirthTooSmall {
                    girth,
                    reason: format!("layer count k = {k} needs even k <= girth; {err}"),
                });
            }
            return Err(err);
        }
    }

    let n = graph.vertex_count();
    let mut layers = Vec::with_capacity(k);
    for j in 0..k {
        let mut kept = Vec::new();
        let mut parts = DisjointSets::new(n);
        for &id in tree.edges() {
            let e = graph.edge(id);
            let upper = if Some(id) == tree.root_edge() {
                None
            } else if tree.parent(e.v) == Some(e.u) {
                Some(tree.level(e.u))
            } else {
                Some(tree.level(e.v))
            };
            if upper.is_none_or(|i| i % k != j) {
                kept.push(id);
                parts.union(e.u, e.v);
            }
        }
        for (id, e) in graph.edges().iter().enumerate() {
            if !tree.contains_edge(id) && parts.find(e.u) == parts.find(e.v) {
                kept.push(id);
            }
        }
        layers.push(verify_b_subgraph(graph, &kept)?);
    }
    Ok(layers)
}

/// Union-find with path halving.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already one set.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
