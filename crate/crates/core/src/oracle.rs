//! Exhaustive solvers for small instances.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{greedy_matching, tolerance};
use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::spanning::{max_spanning_tree, min_spanning_tree};

pub const MAX_CUT_LIMIT: usize = 30;
pub const B_SUBGRAPH_LIMIT: usize = 16;
pub const DFS_TREE_LIMIT: usize = 12;
pub const FIVE_CYCLE_LIMIT: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Mac,
    RMax,
    MaxDfsWeight,
    FiveCycleCover,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Cut(Cut),
    Edges(Vec<usize>),
    /// The search finished without finding a witness.
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub quantity: Quantity,
    pub value: f64,
    pub witness: Witness,
    pub exact: bool,
}

fn guard(quantity: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::SizeGuard { quantity, n, limit });
    }
    Ok(())
}

pub fn exact_max_cut(graph: &WeightedGraph) -> Result<OracleResult> {
    exact_max_cut_with_limit(graph, MAX_CUT_LIMIT)
}

/// Maximum cut by Gray-code enumeration with the last vertex pinned to
/// side `false`. The high bits split the space into parallel chunks.
pub fn exact_max_cut_with_limit(graph: &WeightedGraph, limit: usize) -> Result<OracleResult> {
    let n = graph.vertex_count();
    guard("exact_max_cut", n, limit)?;
    if n <= 1 {
        let cut = Cut::from_sides(graph, vec![false; n]);
        return Ok(OracleResult { quantity: Quantity::Mac, value: 0.0, witness: Witness::Cut(cut), exact: true });
    }
    let free = n - 1;
    let high = free.min(6);
    let low = free - high;
    let chunks: Vec<(f64, u64)> = (0..1u64 << high)
        .into_par_iter()
        .map(|prefix| {
            let mut side = vec![false; n];
            for b in 0..high {
                side[low + b] = prefix >> b & 1 == 1;
            }
            let mut weight = crate::cut::cut_weight(graph, &side);
            let mut best = (weight, prefix << low);
            let mut code: u64 = 0;
            for step in 1..1u64 << low {
                let v = step.trailing_zeros() as usize;
                let mut delta = 0.0;
                for &(x, id) in graph.neighbors(v) {
                    let w = graph.weight(id);
                    delta += if side[x] == side[v] { w } else { -w };
                }
                side[v] = !side[v];
                code ^= 1 << v;
                weight += delta;
                if weight > best.0 {
                    best = (weight, prefix << low | code);
                }
            }
            best
        })
        .collect();
    // first chunk wins ties, keeping the result independent of scheduling
    let (_, mask) = chunks.into_iter().fold((f64::NEG_INFINITY, 0), |acc, c| if c.0 > acc.0 { c } else { acc });
    let side: Vec<bool> = (0..n).map(|v| v < free && mask >> v & 1 == 1).collect();
    let cut = Cut::from_sides(graph, side);
    Ok(OracleResult { quantity: Quantity::Mac, value: cut.weight(), witness: Witness::Cut(cut), exact: true })
}

/// Plain `2^n` loop recomputing every cut from scratch; kept as an
/// independent check on the Gray-code solver.
pub fn naive_max_cut(graph: &WeightedGraph) -> Result<f64> {
    let n = graph.vertex_count();
    guard("naive_max_cut", n, 20)?;
    Ok((0..1u64 << n)
        .map(|mask| {
            graph
                .edges()
                .iter()
                .filter(|e| (mask >> e.u & 1) != (mask >> e.v & 1))
                .map(|e| e.weight)
                .sum::<f64>()
        })
        .fold(0.0, f64::max))
}

fn adjacency_masks(graph: &WeightedGraph) -> Vec<u64> {
    let mut adj = vec![0u64; graph.vertex_count()];
    for e in graph.edges() {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    adj
}

fn induced_is_bipartite(adj: &[u64], mask: u64) -> bool {
    let mut color: HashMap<usize, bool> = HashMap::new();
    let mut rest = mask;
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        color.insert(start, false);
        let mut stack = vec![start];
        rest &= !(1 << start);
        while let Some(x) = stack.pop() {
            let cx = color[&x];
            let mut nb = adj[x] & mask;
            while nb != 0 {
                let y = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                match color.get(&y) {
                    Some(&cy) if cy == cx => return false,
                    Some(_) => {}
                    None => {
                        color.insert(y, !cx);
                        rest &= !(1 << y);
                        stack.push(y);
                    }
                }
            }
        }
    }
    true
}

pub fn max_b_subgraph(graph: &WeightedGraph) -> Result<OracleResult> {
    max_b_subgraph_with_limit(graph, B_SUBGRAPH_LIMIT)
}

/// `r_max`: best partition of `V` into parts each inducing a bipartite
/// subgraph, scored by the weight inside the parts. Exact DP over subsets
/// in `O(3^n)`.
pub fn max_b_subgraph_with_limit(graph: &WeightedGraph, limit: usize) -> Result<OracleResult> {
    let n = graph.vertex_count();
    guard("max_b_subgraph", n, limit)?;
    let size = 1usize << n;
    let adj = adjacency_masks(graph);
    let mut inside = vec![0.0f64; size];
    for mask in 1..size {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        inside[mask] = inside[rest]
            + graph.neighbors(v).iter().filter(|&&(x, _)| rest >> x & 1 == 1).map(|&(_, id)| graph.weight(id)).sum::<f64>();
    }
    let bipartite: Vec<bool> = (0..size).into_par_iter().map(|m| induced_is_bipartite(&adj, m as u64)).collect();
    let mut best = vec![0.0f64; size];
    let mut choice = vec![0usize; size];
    for mask in 1..size {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // parts containing the lowest vertex
        let mut sub = rest;
        let mut top = (f64::NEG_INFINITY, 0);
        loop {
            let part = sub | low;
            if bipartite[part] {
                let value = inside[part] + best[mask ^ part];
                if value > top.0 {
                    top = (value, part);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        best[mask] = top.0;
        choice[mask] = top.1;
    }
    let mut edges = Vec::new();
    let mut mask = size - 1;
    while mask != 0 {
        let part = choice[mask];
        edges.extend(
            graph.edges().iter().enumerate().filter(|(_, e)| part >> e.u & 1 == 1 && part >> e.v & 1 == 1).map(|(id, _)| id),
        );
        mask ^= part;
    }
    edges.sort_unstable();
    let value = graph.edge_set_weight(&edges);
    Ok(OracleResult { quantity: Quantity::RMax, value, witness: Witness::Edges(edges), exact: true })
}

pub fn max_dfs_tree_weight(graph: &WeightedGraph) -> Result<OracleResult> {
    max_dfs_tree_weight_with_limit(graph, DFS_TREE_LIMIT)
}

/// Heaviest DFS tree over all roots and neighbor orders. A rooted spanning
/// tree is a DFS tree exactly when the subtrees below the root are the
/// components of `G - root`, each again DFS-rooted at a neighbor of it.
pub fn max_dfs_tree_weight_with_limit(graph: &WeightedGraph, limit: usize) -> Result<OracleResult> {
    let n = graph.vertex_count();
    guard("max_dfs_tree_weight", n, limit)?;
    if n == 0 {
        return Ok(OracleResult { quantity: Quantity::MaxDfsWeight, value: 0.0, witness: Witness::Edges(vec![]), exact: true });
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let adj = adjacency_masks(graph);
    let mut memo: HashMap<(u64, usize), (f64, Vec<usize>)> = HashMap::new();
    let full = (1u64 << n) - 1;
    let mut top: Option<(f64, Vec<usize>)> = None;
    for r in 0..n {
        let candidate = normal_tree(graph, &adj, full, r, &mut memo);
        if top.as_ref().is_none_or(|t| candidate.0 > t.0) {
            top = Some(candidate);
        }
    }
    let (_, mut edges) = top.unwrap();
    edges.sort_unstable();
    let value = graph.edge_set_weight(&edges);
    Ok(OracleResult { quantity: Quantity::MaxDfsWeight, value, witness: Witness::Edges(edges), exact: true })
}

fn split_components(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut parts = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let mut part = rest & rest.wrapping_neg();
        loop {
            let mut grown = part;
            let mut it = part;
            while it != 0 {
                let x = it.trailing_zeros() as usize;
                it &= it - 1;
                grown |= adj[x] & mask;
            }
            if grown == part {
                break;
            }
            part = grown;
        }
        parts.push(part);
        rest &= !part;
    }
    parts
}

/// Best DFS tree of the connected set `mask` rooted at `r`.
fn normal_tree(
    graph: &WeightedGraph,
    adj: &[u64],
    mask: u64,
    r: usize,
    memo: &mut HashMap<(u64, usize), (f64, Vec<usize>)>,
) -> (f64, Vec<usize>) {
    if let Some(hit) = memo.get(&(mask, r)) {
        return hit.clone();
    }
    let mut total = 0.0;
    let mut edges = Vec::new();
    for part in split_components(adj, mask & !(1 << r)) {
        let mut best: Option<(f64, Vec<usize>)> = None;
        let mut entries = adj[r] & part;
        while entries != 0 {
            let c = entries.trailing_zeros() as usize;
            entries &= entries - 1;
            let id = graph.edge_between(r, c).unwrap();
            let (w, mut sub) = normal_tree(graph, adj, part, c, memo);
            if best.as_ref().is_none_or(|b| w + graph.weight(id) > b.0) {
                sub.push(id);
                best = Some((w + graph.weight(id), sub));
            }
        }
        let (w, sub) = best.expect("components of G - r touch r");
        total += w;
        edges.extend(sub);
    }
    memo.insert((mask, r), (total, edges.clone()));
    (total, edges)
}

/// Every 5-cycle as a sorted list of its edge ids.
pub fn five_cycles(graph: &WeightedGraph) -> Vec<[usize; 5]> {
    let n = graph.vertex_count();
    let mut cycles = Vec::new();
    // v0 is the smallest vertex; v1 < v4 fixes the direction
    for v0 in 0..n {
        for &(v1, e01) in graph.neighbors(v0) {
            if v1 <= v0 {
                continue;
            }
            for &(v2, e12) in graph.neighbors(v1) {
                if v2 <= v0 {
                    continue;
                }
                for &(v3, e23) in graph.neighbors(v2) {
                    if v3 <= v0 || v3 == v1 {
                        continue;
                    }
                    for &(v4, e34) in graph.neighbors(v3) {
                        if v4 <= v1 || v4 == v2 {
                            continue;
                        }
                        if let Some(e40) = graph.edge_between(v4, v0) {
                            let mut c = [e01, e12, e23, e34, e40];
                            c.sort_unstable();
                            cycles.push(c);
                        }
                    }
                }
            }
        }
    }
    cycles.sort_unstable();
    cycles.dedup();
    cycles
}

/// Whether every 5-cycle contains exactly one edge of `set`.
pub fn verify_five_cycle_cover(graph: &WeightedGraph, set: &[usize]) -> bool {
    five_cycles(graph).iter().all(|c| c.iter().filter(|id| set.contains(id)).count() == 1)
}

pub fn five_cycle_cover(graph: &WeightedGraph) -> Result<OracleResult> {
    five_cycle_cover_with_limit(graph, FIVE_CYCLE_LIMIT)
}

/// Searches for an edge set meeting every 5-cycle exactly once. An
/// exhausted search yields `Witness::None`.
pub fn five_cycle_cover_with_limit(graph: &WeightedGraph, limit: usize) -> Result<OracleResult> {
    graph.require_triangle_free()?;
    graph.require_max_degree(3)?;
    guard("five_cycle_cover", graph.vertex_count(), limit)?;
    let cycles = five_cycles(graph);
    let mut on_edge: Vec<Vec<usize>> = vec![Vec::new(); graph.edge_count()];
    for (i, c) in cycles.iter().enumerate() {
        for &id in c {
            on_edge[id].push(i);
        }
    }
    let mut search = CoverSearch {
        cycles: &cycles,
        on_edge: &on_edge,
        hits: vec![0; cycles.len()],
        state: vec![EdgeState::Open; graph.edge_count()],
        chosen: Vec::new(),
    };
    let witness = if search.run() {
        let mut set = search.chosen;
        set.sort_unstable();
        Witness::Edges(set)
    } else {
        Witness::None
    };
    let value = match &witness {
        Witness::Edges(e) => e.len() as f64,
        _ => f64::NAN,
    };
    Ok(OracleResult { quantity: Quantity::FiveCycleCover, value, witness, exact: true })
}

#[derive(Clone, Copy, PartialEq)]
enum EdgeState {
    Open,
    In,
    Out,
}

struct CoverSearch<'a> {
    cycles: &'a [[usize; 5]],
    on_edge: &'a [Vec<usize>],
    hits: Vec<u8>,
    state: Vec<EdgeState>,
    chosen: Vec<usize>,
}

impl CoverSearch<'_> {
    fn run(&mut self) -> bool {
        // most constrained unhit cycle first
        let next = (0..self.cycles.len())
            .filter(|&i| self.hits[i] == 0)
            .min_by_key(|&i| self.cycles[i].iter().filter(|&&e| self.state[e] == EdgeState::Open).count());
        let Some(i) = next else {
            return true;
        };
        let options: Vec<usize> = self.cycles[i].iter().copied().filter(|&e| self.state[e] == EdgeState::Open).collect();
        let mut closed = Vec::new();
        for e in options {
            if self.on_edge[e].iter().all(|&c| self.hits[c] == 0) {
                self.state[e] = EdgeState::In;
                for &c in &self.on_edge[e] {
                    self.hits[c] += 1;
                }
                self.chosen.push(e);
                if self.run() {
                    return true;
                }
                self.chosen.pop();
                for &c in &self.on_edge[e] {
                    self.hits[c] -= 1;
                }
            }
            self.state[e] = EdgeState::Out;
            closed.push(e);
        }
        for e in closed {
            self.state[e] = EdgeState::Open;
        }
        false
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjectureConfig {
    pub seed: u64,
    pub random_trees: usize,
    pub random_matchings: usize,
    pub max_cut_limit: usize,
}

impl Default for ConjectureConfig {
    fn default() -> Self {
        ConjectureConfig { seed: 0, random_trees: 100, random_matchings: 100, max_cut_limit: MAX_CUT_LIMIT }
    }
}

/// Per-instance ratios. The ratios are evidence about class-wide
/// constants from above, never bounds themselves.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub mac: f64,
    pub total_weight: f64,
    pub mac_ratio: f64,
    /// min over sampled spanning trees of `(mac - w/2) / w(T)`
    pub theta_ratio: Option<f64>,
    pub theta_trees_sampled: usize,
    /// `(mac - w(M)) / (w - w(M))` for the greedy maximal matching
    pub c_ratio_greedy: Option<f64>,
    /// min of the same ratio over the greedy and random maximal matchings
    pub c_ratio: Option<f64>,
    pub c_matchings_sampled: usize,
    pub triangle_free: bool,
    pub max_degree: usize,
    pub five_cycle_cover_found: Option<bool>,
    /// conjectures this instance contradicts
    pub flags: Vec<String>,
}

fn random_spanning_tree_weight<R: Rng>(graph: &WeightedGraph, rng: &mut R) -> Result<f64> {
    let jittered = WeightedGraph::new(graph.vertex_count(), graph.edges().iter().map(|e| (e.u, e.v, rng.gen::<f64>())))?;
    Ok(graph.edge_set_weight(min_spanning_tree(&jittered)?.edges()))
}

fn random_maximal_matching<R: Rng>(graph: &WeightedGraph, rng: &mut R) -> Vec<usize> {
    let mut order: Vec<usize> = (0..graph.edge_count()).collect();
    order.shuffle(rng);
    let mut used = vec![false; graph.vertex_count()];
    let mut m = Vec::new();
    for id in order {
        let e = graph.edge(id);
        if !used[e.u] && !used[e.v] {
            used[e.u] = true;
            used[e.v] = true;
            m.push(id);
        }
    }
    m
}

pub fn conjecture_report(graph: &WeightedGraph, config: &ConjectureConfig) -> Result<ConjectureReport> {
    let mac = exact_max_cut_with_limit(graph, config.max_cut_limit)?.value;
    let w = graph.total_weight();
    let tol = tolerance(graph);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let (theta_ratio, theta_trees_sampled) = if graph.vertex_count() > 1 && graph.is_connected() {
        let mut weights = vec![
            graph.edge_set_weight(min_spanning_tree(graph)?.edges()),
            graph.edge_set_weight(max_spanning_tree(graph)?.edges()),
        ];
        for _ in 0..config.random_trees {
            weights.push(random_spanning_tree_weight(graph, &mut rng)?);
        }
        let ratio = weights.iter().filter(|&&t| t > 0.0).map(|&t| (mac - w / 2.0) / t).reduce(f64::min);
        (ratio, weights.len())
    } else {
        (None, 0)
    };

    let c_of = |m: &[usize]| {
        let wm = graph.edge_set_weight(m);
        (w - wm > tol).then(|| (mac - wm) / (w - wm))
    };
    let greedy = greedy_matching(graph);
    let c_ratio_greedy = c_of(&greedy);
    let mut c_ratio = c_ratio_greedy;
    for _ in 0..config.random_matchings {
        if let Some(r) = c_of(&random_maximal_matching(graph, &mut rng)) {
            c_ratio = Some(c_ratio.map_or(r, |c: f64| c.min(r)));
        }
    }

    let triangle_free = graph.is_triangle_free();
    let max_degree = graph.max_degree();
    let subcubic_tf = triangle_free && max_degree <= 3;
    let five_cycle_cover_found = if subcubic_tf && graph.vertex_count() <= FIVE_CYCLE_LIMIT {
        Some(!matches!(five_cycle_cover(graph)?.witness, Witness::None))
    } else {
        None
    };

    let mut flags = Vec::new();
    if triangle_free && theta_ratio.is_some_and(|t| t < 3.0 / 8.0 - tol) {
        flags.push("spanning_tree_three_eighths".to_string());
    }
    if subcubic_tf && mac < 0.8 * w - tol {
        flags.push("subcubic_four_fifths".to_string());
    }
    if five_cycle_cover_found == Some(false) {
        flags.push("five_cycle_cover".to_string());
    }
    Ok(ConjectureReport {
        mac,
        total_weight: w,
        mac_ratio: if w > 0.0 { mac / w } else { 1.0 },
        theta_ratio,
        theta_trees_sampled,
        c_ratio_greedy,
        c_ratio,
        c_matchings_sampled: config.random_matchings + 1,
        triangle_free,
        max_degree,
        five_cycle_cover_found,
        flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{self, WeightDistribution};

    #[test]
    fn max_cut_fixtures() {
        assert_eq!(exact_max_cut(&generate::cycle(5, 1.0).unwrap()).unwrap().value, 4.0);
        assert_eq!(exact_max_cut(&generate::complete(4, 1.0).unwrap()).unwrap().value, 4.0);
        assert_eq!(exact_max_cut(&generate::petersen_c3(10.0, 1.0)).unwrap().value, 56.0);
        assert_eq!(exact_max_cut(&WeightedGraph::new(1, []).unwrap()).unwrap().value, 0.0);
        let big = generate::cycle(31, 1.0).unwrap();
        assert!(matches!(exact_max_cut(&big), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn gray_code_matches_naive() {
        for seed in 0..60 {
            let n = 2 + seed as usize % 11;
            let g = generate::random_connected(n, 0.4, seed, WeightDistribution::Integer { lo: 0, hi: 9 }).unwrap();
            let r = exact_max_cut(&g).unwrap();
            assert_eq!(r.value, naive_max_cut(&g).unwrap(), "seed {seed}");
            let Witness::Cut(c) = r.witness else { panic!() };
            assert_eq!(c.weight(), r.value);
        }
    }

    #[test]
    fn b_subgraph_fixtures() {
        assert_eq!(max_b_subgraph(&generate::cycle(5, 1.0).unwrap()).unwrap().value, 3.0);
        assert_eq!(max_b_subgraph(&generate::cycle(6, 1.0).unwrap()).unwrap().value, 6.0);
        // a perfect matching of K4 splits into two induced edges
        assert_eq!(max_b_subgraph(&generate::complete(4, 1.0).unwrap()).unwrap().value, 2.0);
        let r = max_b_subgraph(&generate::petersen(1.0)).unwrap();
        let Witness::Edges(e) = &r.witness else { panic!() };
        crate::cut::verify_b_subgraph(&generate::petersen(1.0), e).unwrap();
    }

    #[test]
    fn dfs_tree_fixtures() {
        let mut weights = vec![(0, 1, 3.0), (1, 2, 1.0), (2, 3, 4.0), (3, 4, 2.0), (0, 4, 5.0)];
        let g = WeightedGraph::new(5, weights.drain(..)).unwrap();
        assert_eq!(max_dfs_tree_weight(&g).unwrap().value, 14.0);
        assert_eq!(max_dfs_tree_weight(&generate::complete(4, 1.0).unwrap()).unwrap().value, 3.0);
        assert_eq!(max_dfs_tree_weight(&generate::path(6, 2.0).unwrap()).unwrap().value, 10.0);
        let star = WeightedGraph::new(4, [(0, 1, 1.0), (0, 2, 2.0), (0, 3, 3.0)]).unwrap();
        assert_eq!(max_dfs_tree_weight(&star).unwrap().value, 6.0);
    }

    #[test]
    fn dfs_oracle_dominates_every_dfs_run() {
        for seed in 0..30 {
            let g = generate::random_connected(8, 0.5, seed, WeightDistribution::Integer { lo: 0, hi: 9 }).unwrap();
            let best = max_dfs_tree_weight(&g).unwrap();
            let Witness::Edges(e) = &best.witness else { panic!() };
            assert_eq!(e.len(), 7);
            for r in 0..8 {
                let t = crate::spanning::dfs_tree(&g, r).unwrap();
                assert!(t.weight(&g) <= best.value);
            }
        }
    }

    #[test]
    fn five_cycle_fixtures() {
        let p = generate::petersen(1.0);
        assert_eq!(five_cycles(&p).len(), 12);
        let r = five_cycle_cover(&p).unwrap();
        let Witness::Edges(e) = &r.witness else { panic!() };
        assert!(verify_five_cycle_cover(&p, e));
        let c4 = generate::cycle(4, 1.0).unwrap();
        assert_eq!(five_cycle_cover(&c4).unwrap().witness, Witness::Edges(vec![]));
        let c5 = generate::cycle(5, 1.0).unwrap();
        assert_eq!(five_cycle_cover(&c5).unwrap().value, 1.0);
    }

    #[test]
    fn conjecture_ratios() {
        let c5 = generate::cycle(5, 1.0).unwrap();
        let r = conjecture_report(&c5, &ConjectureConfig::default()).unwrap();
        assert_eq!(r.theta_ratio, Some(0.375));
        assert!(r.flags.is_empty());
        let pc = generate::petersen_c3(10.0, 1.0);
        let r = conjecture_report(&pc, &ConjectureConfig::default()).unwrap();
        assert!((r.c_ratio.unwrap() - 0.6).abs() < 1e-12);
        let c6 = generate::cycle(6, 2.0).unwrap();
        let r = conjecture_report(&c6, &ConjectureConfig::default()).unwrap();
        assert_eq!(r.mac_ratio, 1.0);
        assert!(r.flags.is_empty());
    }
}
