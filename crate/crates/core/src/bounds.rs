//! Deterministic lower bounds on the maximum cut, each with a cut that
//! meets it.
//!
//! Every bound is computed per connected component and summed; max cut
//! decomposes over components, so the sums stay valid.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cut::{derandomized_cut, local_search_improve, verify_b_subgraph, BSubgraph, Cut};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::spanning::{
    dfs_tree, girth_layer_bsubgraphs, max_spanning_tree, min_spanning_tree, parity_layer_bsubgraphs, DisjointSets,
    RootedSpanningTree, TreeKind, TreeRoot,
};

pub type Details = BTreeMap<String, Value>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// The cut is guaranteed to weigh at least the bound.
    Deterministic,
    /// The bound is an expectation; the cut is one sample.
    MonteCarlo,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub bound_value: f64,
    pub cut: Cut,
    pub mode: Mode,
    pub details: Details,
    /// For integral weights, `bound_value` times this is an integer.
    pub denominator: Option<u64>,
}

/// Absolute slack absorbing floating-point error in bound comparisons.
pub fn tolerance(graph: &WeightedGraph) -> f64 {
    1e-9 * graph.total_weight().max(1.0)
}

/// `value >= bound`, exactly over the rationals with the given denominator
/// when weights are integral, otherwise up to [`tolerance`].
pub fn at_least(graph: &WeightedGraph, value: f64, bound: f64, denominator: Option<u64>) -> bool {
    match denominator {
        Some(d) if graph.is_integral() => {
            let d = d as f64;
            (value * d).round() >= (bound * d).round()
        }
        _ => value >= bound - tolerance(graph),
    }
}

impl BoundReport {
    /// Whether the reported cut weighs at least the bound.
    pub fn cut_meets_bound(&self, graph: &WeightedGraph) -> bool {
        at_least(graph, self.cut.weight(), self.bound_value, self.denominator)
    }

    /// Deterministic reports must meet their bound; Monte Carlo reports
    /// never certify anything.
    pub fn certified(&self, graph: &WeightedGraph) -> bool {
        self.mode == Mode::Deterministic && self.cut_meets_bound(graph)
    }

    /// Builds a report from a constructed cut, keeping the best of that
    /// cut, its local-search improvement and, for bipartite graphs, the
    /// bipartition.
    pub(crate) fn new(
        graph: &WeightedGraph,
        name: &str,
        mode: Mode,
        bound_value: f64,
        constructed: Cut,
        mut details: Details,
        denominator: Option<u64>,
    ) -> BoundReport {
        details.insert("constructed_cut_weight".into(), json!(constructed.weight()));
        let mut best = local_search_improve(graph, &constructed);
        if let Some(sides) = graph.bipartition() {
            let whole = Cut::from_sides(graph, sides);
            if whole.weight() > best.weight() {
                best = whole;
            }
        }
        BoundReport { name: name.to_string(), bound_value, cut: best, mode, details, denominator }
    }
}

/// One component's share of a bound.
pub(crate) struct Part {
    pub bound: f64,
    pub cut: Cut,
    pub details: Details,
}

/// Ids a component had in the full graph.
pub(crate) struct Origin<'a> {
    pub vertices: &'a [usize],
    pub edges: &'a [usize],
}

impl Origin<'_> {
    pub fn local_vertex(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    pub fn local_edge(&self, id: usize) -> Option<usize> {
        self.edges.iter().position(|&x| x == id)
    }
}

/// Runs `part` on every connected component and sums the results.
pub(crate) fn over_components<F>(graph: &WeightedGraph, mut part: F) -> Result<(f64, Cut, Details)>
where
    F: FnMut(&WeightedGraph, &Origin) -> Result<Part>,
{
    if graph.vertex_count() == 0 {
        return Ok((0.0, Cut::from_sides(graph, Vec::new()), Details::new()));
    }
    if graph.is_connected() {
        let vertices: Vec<usize> = (0..graph.vertex_count()).collect();
        let edges: Vec<usize> = (0..graph.edge_count()).collect();
        let p = part(graph, &Origin { vertices: &vertices, edges: &edges })?;
        return Ok((p.bound, p.cut, p.details));
    }
    let components = graph.components();
    let mut side = vec![false; graph.vertex_count()];
    let mut total = 0.0;
    let mut per_component = Vec::with_capacity(components.len());
    for vertices in &components {
        let sub = graph.induced_subgraph(vertices);
        let p = part(&sub.graph, &Origin { vertices: &sub.vertex_origin, edges: &sub.edge_origin })?;
        total += p.bound;
        for (local, &s) in p.cut.side().iter().enumerate() {
            side[sub.vertex_origin[local]] = s;
        }
        per_component.push(Value::Object(p.details.into_iter().collect()));
    }
    let mut details = Details::new();
    details.insert("components".into(), json!(components.len()));
    details.insert("per_component".into(), Value::Array(per_component));
    Ok((total, Cut::from_sides(graph, side), details))
}

/// Which DFS roots to try.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootPolicy {
    Fixed(usize),
    /// Every vertex; the best bound wins, ties to the lowest root.
    Sweep,
    /// [`RootPolicy::Sweep`] up to 64 vertices, otherwise the lowest vertex.
    Auto,
}

impl RootPolicy {
    fn roots(self, graph: &WeightedGraph, origin: &Origin) -> Vec<usize> {
        let n = graph.vertex_count();
        match self {
            RootPolicy::Fixed(v) => vec![origin.local_vertex(v).unwrap_or(0)],
            RootPolicy::Sweep => (0..n).collect(),
            RootPolicy::Auto if n <= 64 => (0..n).collect(),
            RootPolicy::Auto => vec![0],
        }
    }
}

/// Best derandomized cut over a family of B-subgraphs (first on ties).
pub fn best_layer_cut(graph: &WeightedGraph, layers: &[BSubgraph]) -> (usize, Cut) {
    let mut best: Option<(usize, Cut)> = None;
    for (j, layer) in layers.iter().enumerate() {
        let cut = derandomized_cut(graph, layer);
        if best.as_ref().is_none_or(|(_, b)| cut.weight() > b.weight()) {
            best = Some((j, cut));
        }
    }
    best.unwrap_or_else(|| (0, derandomized_cut(graph, &BSubgraph::empty())))
}

/// Evaluates `attempt` on every root in parallel and keeps the largest
/// bound (lowest root on ties).
fn sweep<F>(roots: &[usize], attempt: F) -> Result<(usize, Part)>
where
    F: Fn(usize) -> Result<Part> + Sync,
{
    let parts: Vec<Result<Part>> = roots.par_iter().map(|&r| attempt(r)).collect();
    let mut best: Option<(usize, Part)> = None;
    for (&r, p) in roots.iter().zip(parts) {
        let p = p?;
        if best.as_ref().is_none_or(|(_, b)| p.bound > b.bound) {
            best = Some((r, p));
        }
    }
    best.ok_or_else(|| Error::InvalidParameter("no root to try".into()))
}

fn dfs_part(graph: &WeightedGraph, root: usize) -> Result<Part> {
    let tree = dfs_tree(graph, root)?;
    let (odd, even) = parity_layer_bsubgraphs(graph, &tree)?;
    let (layer, cut) = best_layer_cut(graph, &[odd, even]);
    let tree_weight = tree.weight(graph);
    let mut details = Details::new();
    details.insert("dfs_tree_weight".into(), json!(tree_weight));
    details.insert("layer".into(), json!(if layer == 0 { "odd" } else { "even" }));
    Ok(Part { bound: graph.total_weight() / 2.0 + tree_weight / 4.0, cut, details })
}

fn dfs_component(graph: &WeightedGraph, origin: &Origin, roots: RootPolicy) -> Result<Part> {
    let (root, mut p) = sweep(&roots.roots(graph, origin), |r| dfs_part(graph, r))?;
    p.details.insert("root".into(), json!(origin.vertices[root]));
    Ok(p)
}

/// `w(G)/2 + w(D)/4` for a DFS tree `D`, with the cut from the better
/// parity layer.
pub fn dfs_bound(graph: &WeightedGraph, roots: RootPolicy) -> Result<BoundReport> {
    if let RootPolicy::Fixed(r) = roots {
        if r >= graph.vertex_count() {
            return Err(Error::VertexOutOfRange { vertex: r, vertex_count: graph.vertex_count() });
        }
    }
    let (bound, cut, details) = over_components(graph, |g, origin| dfs_component(g, origin, roots))?;
    Ok(BoundReport::new(graph, "dfs", Mode::Deterministic, bound, cut, details, Some(4)))
}

/// `w(G)/2 + w(T_min)/4`. The cut comes from the best DFS tree found,
/// which weighs at least as much as the minimum spanning tree.
pub fn poljak_turzik(graph: &WeightedGraph) -> Result<BoundReport> {
    let (bound, cut, details) = over_components(graph, |g, origin| {
        let t_min = min_spanning_tree(g)?.weight(g);
        let mut p = dfs_component(g, origin, RootPolicy::Auto)?;
        p.details.insert("min_tree_weight".into(), json!(t_min));
        p.bound = g.total_weight() / 2.0 + t_min / 4.0;
        Ok(p)
    })?;
    Ok(BoundReport::new(graph, "poljak_turzik", Mode::Deterministic, bound, cut, details, Some(4)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingStrategy {
    /// Heaviest edge first, skipping conflicts.
    Greedy,
    /// Exhaustive search; at most [`EXACT_MATCHING_EDGE_LIMIT`] edges per component.
    ExactSmall,
    /// A caller-supplied matching (edge ids of the full graph).
    Provided(Vec<usize>),
    /// Exact when small, otherwise greedy plus one improving-swap pass.
    Default,
}

pub const EXACT_MATCHING_EDGE_LIMIT: usize = 24;

/// Heaviest-first greedy matching, ties by edge id.
pub fn greedy_matching(graph: &WeightedGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..graph.edge_count()).collect();
    order.sort_by(|&a, &b| graph.weight(b).total_cmp(&graph.weight(a)));
    let mut used = vec![false; graph.vertex_count()];
    let mut matching = Vec::new();
    for id in order {
        let e = graph.edge(id);
        if !used[e.u] && !used[e.v] {
            used[e.u] = true;
            used[e.v] = true;
            matching.push(id);
        }
    }
    matching.sort_unstable();
    matching
}

/// One pass over non-matching edges, heaviest first: an edge replaces the
/// matching edges it conflicts with when it outweighs them.
pub fn improve_matching_by_swaps(graph: &WeightedGraph, matching: &[usize]) -> Vec<usize> {
    let mut mate_edge: Vec<Option<usize>> = vec![None; graph.vertex_count()];
    for &id in matching {
        let e = graph.edge(id);
        mate_edge[e.u] = Some(id);
        mate_edge[e.v] = Some(id);
    }
    let mut order: Vec<usize> = (0..graph.edge_count()).collect();
    order.sort_by(|&a, &b| graph.weight(b).total_cmp(&graph.weight(a)));
    for id in order {
        let e = *graph.edge(id);
        let mut conflicts: Vec<usize> = [mate_edge[e.u], mate_edge[e.v]].into_iter().flatten().collect();
        conflicts.dedup();
        if conflicts.contains(&id) {
            continue;
        }
        let lost: f64 = conflicts.iter().map(|&c| graph.weight(c)).sum();
        if e.weight > lost {
            for c in conflicts {
                let ce = graph.edge(c);
                mate_edge[ce.u] = None;
                mate_edge[ce.v] = None;
            }
            mate_edge[e.u] = Some(id);
            mate_edge[e.v] = Some(id);
        }
    }
    let mut result: Vec<usize> = mate_edge.into_iter().flatten().collect();
    result.sort_unstable();
    result.dedup();
    result
}

/// Maximum-weight matching by branch and bound over edges.
pub fn exact_matching(graph: &WeightedGraph) -> Result<Vec<usize>> {
    let m = graph.edge_count();
    if m > EXACT_MATCHING_EDGE_LIMIT {
        return Err(Error::SizeGuard { quantity: "edges for exact matching", n: m, limit: EXACT_MATCHING_EDGE_LIMIT });
    }
    let mut suffix = vec![0.0; m + 1];
    for id in (0..m).rev() {
        suffix[id] = suffix[id + 1] + graph.weight(id);
    }
    struct Search<'a> {
        graph: &'a WeightedGraph,
        suffix: Vec<f64>,
        used: Vec<bool>,
        current: Vec<usize>,
        best: (f64, Vec<usize>),
    }
    impl Search<'_> {
        fn go(&mut self, id: usize, weight: f64) {
            if weight > self.best.0 {
                self.best = (weight, self.current.clone());
            }
            if id == self.graph.edge_count() || weight + self.suffix[id] <= self.best.0 {
                return;
            }
            let e = *self.graph.edge(id);
            if !self.used[e.u] && !self.used[e.v] {
                self.used[e.u] = true;
                self.used[e.v] = true;
                self.current.push(id);
                self.go(id + 1, weight + e.weight);
                self.current.pop();
                self.used[e.u] = false;
                self.used[e.v] = false;
            }
            self.go(id + 1, weight);
        }
    }
    let mut search = Search {
        graph,
        suffix,
        used: vec![false; graph.vertex_count()],
        current: Vec::new(),
        best: (0.0, Vec::new()),
    };
    search.go(0, 0.0);
    Ok(search.best.1)
}

/// Errors unless `edges` are existing, pairwise vertex-disjoint edges.
pub fn check_matching(graph: &WeightedGraph, edges: &[usize]) -> Result<()> {
    let mut owner: Vec<Option<usize>> = vec![None; graph.vertex_count()];
    for &id in edges {
        if id >= graph.edge_count() {
            return Err(Error::UnknownEdge { edge: id });
        }
        let e = graph.edge(id);
        for x in [e.u, e.v] {
            if let Some(first) = owner[x] {
                return Err(Error::NotAMatching { first, second: id, vertex: x });
            }
            owner[x] = Some(id);
        }
    }
    Ok(())
}

/// Matching chosen by `strategy` on a connected component.
pub(crate) fn component_matching(graph: &WeightedGraph, origin: &Origin, strategy: &MatchingStrategy) -> Result<Vec<usize>> {
    match strategy {
        MatchingStrategy::Greedy => Ok(greedy_matching(graph)),
        MatchingStrategy::ExactSmall => exact_matching(graph),
        MatchingStrategy::Provided(edges) => {
            let mut local: Vec<usize> = edges.iter().filter_map(|&id| origin.local_edge(id)).collect();
            local.sort_unstable();
            Ok(local)
        }
        MatchingStrategy::Default if graph.edge_count() <= EXACT_MATCHING_EDGE_LIMIT => exact_matching(graph),
        MatchingStrategy::Default => Ok(improve_matching_by_swaps(graph, &greedy_matching(graph))),
    }
}

/// A matching of the whole graph chosen per component by `strategy`.
pub fn choose_matching(graph: &WeightedGraph, strategy: &MatchingStrategy) -> Result<Vec<usize>> {
    if let MatchingStrategy::Provided(edges) = strategy {
        check_matching(graph, edges)?;
        let mut edges = edges.clone();
        edges.sort_unstable();
        return Ok(edges);
    }
    let mut matching = Vec::new();
    for vertices in graph.components() {
        let sub = graph.induced_subgraph(&vertices);
        let origin = Origin { vertices: &sub.vertex_origin, edges: &sub.edge_origin };
        let local = component_matching(&sub.graph, &origin, strategy)?;
        matching.extend(local.into_iter().map(|id| sub.edge_origin[id]));
    }
    matching.sort_unstable();
    Ok(matching)
}

/// `(w(G) + w(M)) / 2` for a matching `M`, which is itself a B-subgraph.
pub fn matching_bound(graph: &WeightedGraph, strategy: &MatchingStrategy) -> Result<BoundReport> {
    if let MatchingStrategy::Provided(edges) = strategy {
        check_matching(graph, edges)?;
    }
    let mut matching = Vec::new();
    let (bound, cut, details) = over_components(graph, |g, origin| {
        let m = component_matching(g, origin, strategy)?;
        matching.extend(m.iter().map(|&id| origin.edges[id]));
        let r = verify_b_subgraph(g, &m)?;
        let weight = r.weight(g);
        let mut details = Details::new();
        details.insert("matching_weight".into(), json!(weight));
        Ok(Part { bound: (g.total_weight() + weight) / 2.0, cut: derandomized_cut(g, &r), details })
    })?;
    let mut report = BoundReport::new(graph, "matching", Mode::Deterministic, bound, cut, details, Some(2));
    matching.sort_unstable();
    report.details.insert("matching_weight".into(), json!(graph.edge_set_weight(&matching)));
    report.details.insert("matching".into(), json!(matching));
    Ok(report)
}

/// The layer count used when none is given: the girth if even, else one
/// less; for forests the smallest even number at least the vertex count.
pub fn default_girth_k(graph: &WeightedGraph) -> usize {
    match graph.girth() {
        Some(g) if g % 2 == 0 => g,
        Some(g) => g - 1,
        None => {
            let n = graph.vertex_count().max(2);
            n + n % 2
        }
    }
}

/// `w(G)/2 + (k-1)/(2k) w(D)` for graphs of girth at least `k`, `k` even.
pub fn girth_bound(graph: &WeightedGraph, k: Option<usize>, roots: RootPolicy) -> Result<BoundReport> {
    let girth = graph.girth();
    if let Some(g) = girth {
        if g < 4 {
            return Err(Error::GirthTooSmall { girth: g, reason: "the layer bound needs girth at least 4".into() });
        }
    }
    let k = k.unwrap_or_else(|| default_girth_k(graph));
    if k < 2 || k % 2 == 1 {
        return Err(Error::InvalidParameter(format!("layer count k = {k} must be even and at least 2")));
    }
    if let Some(g) = girth {
        if k > g {
            return Err(Error::GirthTooSmall { girth: g, reason: format!("layer count k = {k} exceeds the girth") });
        }
    }
    let coefficient = (k - 1) as f64 / (2 * k) as f64;
    let (bound, cut, mut details) = over_components(graph, |g, origin| {
        let (root, mut p) = sweep(&roots.roots(g, origin), |r| {
            let tree = dfs_tree(g, r)?;
            let layers = girth_layer_bsubgraphs(g, &tree, k, None)?;
            let (layer, cut) = best_layer_cut(g, &layers);
            let tree_weight = tree.weight(g);
            let mut details = Details::new();
            details.insert("dfs_tree_weight".into(), json!(tree_weight));
            details.insert("layer".into(), json!(layer));
            Ok(Part { bound: g.total_weight() / 2.0 + coefficient * tree_weight, cut, details })
        })?;
        p.details.insert("root".into(), json!(origin.vertices[root]));
        Ok(p)
    })?;
    details.insert("k".into(), json!(k));
    Ok(BoundReport::new(graph, "girth", Mode::Deterministic, bound, cut, details, Some(2 * k as u64)))
}

/// `w(G)/2 + w(T)/4` for a triangle-free graph and any spanning tree `T`;
/// by default a maximum-weight spanning tree of each component.
pub fn tfree_spanning_bound(graph: &WeightedGraph, tree: Option<&RootedSpanningTree>) -> Result<BoundReport> {
    graph.require_triangle_free()?;
    if tree.is_some() && !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let (bound, cut, details) = over_components(graph, |g, _| {
        let owned;
        let t = match tree {
            Some(t) => t,
            None => {
                owned = max_spanning_tree(g)?;
                &owned
            }
        };
        let (odd, even) = parity_layer_bsubgraphs(g, t)?;
        let (_, cut) = best_layer_cut(g, &[odd, even]);
        let tree_weight = t.weight(g);
        let mut details = Details::new();
        details.insert("tree_weight".into(), json!(tree_weight));
        Ok(Part { bound: g.total_weight() / 2.0 + tree_weight / 4.0, cut, details })
    })?;
    Ok(BoundReport::new(graph, "tfree_spanning", Mode::Deterministic, bound, cut, details, Some(4)))
}

/// Maximum-weight spanning tree forced to contain `edge`.
pub fn max_spanning_tree_containing(graph: &WeightedGraph, edge: usize) -> Result<RootedSpanningTree> {
    if edge >= graph.edge_count() {
        return Err(Error::UnknownEdge { edge });
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut order: Vec<usize> = (0..graph.edge_count()).filter(|&id| id != edge).collect();
    order.sort_by(|&a, &b| graph.weight(b).total_cmp(&graph.weight(a)));
    let mut forest = DisjointSets::new(graph.vertex_count());
    let mut edges = Vec::new();
    for id in std::iter::once(edge).chain(order) {
        let e = graph.edge(id);
        if forest.union(e.u, e.v) {
            edges.push(id);
        }
    }
    RootedSpanningTree::from_edges(graph, &edges, TreeRoot::Edge(edge), TreeKind::Arbitrary)
}

/// `w(G)/2 + (k-1)/(2k) w(T) + w(e*)/(2k)` when no non-tree edge closes an
/// odd cycle of length at most `2k - 1` with `T`. The default tree is a
/// maximum-weight spanning tree through `e_star`.
pub fn girth2_bound(
    graph: &WeightedGraph,
    tree: Option<&RootedSpanningTree>,
    e_star: usize,
    k: usize,
) -> Result<BoundReport> {
    if k == 0 {
        return Err(Error::InvalidParameter("layer count k must be positive".into()));
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let owned;
    let tree = match tree {
        Some(t) => t,
        None => {
            owned = max_spanning_tree_containing(graph, e_star)?;
            &owned
        }
    };
    if !tree.contains_edge(e_star) {
        return Err(Error::InvalidParameter(format!("edge {e_star} is not in the tree")));
    }
    let layers = girth_layer_bsubgraphs(graph, tree, k, Some(e_star))?;
    let (layer, cut) = best_layer_cut(graph, &layers);
    let tree_weight = tree.weight(graph);
    let k_f = k as f64;
    let bound = graph.total_weight() / 2.0 + (k_f - 1.0) / (2.0 * k_f) * tree_weight + graph.weight(e_star) / (2.0 * k_f);
    let mut details = Details::new();
    details.insert("tree_weight".into(), json!(tree_weight));
    details.insert("e_star".into(), json!(e_star));
    details.insert("e_star_weight".into(), json!(graph.weight(e_star)));
    details.insert("k".into(), json!(k));
    details.insert("layer".into(), json!(layer));
    Ok(BoundReport::new(graph, "girth2", Mode::Deterministic, bound, cut, details, Some(2 * k as u64)))
}
