//! Proper edge colorings with at most `Δ + 1` colors and the bounds built
//! from their color classes.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::bounds::{check_matching, BoundReport, Details, Mode};
use crate::cut::{derandomized_cut, verify_b_subgraph, Cut};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    /// Color of each edge, `1..=color_count`.
    pub color: Vec<usize>,
    pub color_count: usize,
}

impl EdgeColoring {
    /// Edge ids of color `c`, ascending.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.color.len()).filter(|&id| self.color[id] == c).collect()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.color_count];
        for (id, &c) in self.color.iter().enumerate() {
            classes[c - 1].push(id);
        }
        classes
    }

    /// No two edges sharing a vertex have the same color.
    pub fn is_proper(&self, graph: &WeightedGraph) -> bool {
        if self.color.len() != graph.edge_count() {
            return false;
        }
        (0..graph.vertex_count()).all(|v| {
            let mut seen: Vec<usize> = graph.neighbors(v).iter().map(|&(_, id)| self.color[id]).collect();
            seen.sort_unstable();
            seen.iter().all(|&c| c >= 1 && c <= self.color_count) && seen.windows(2).all(|w| w[0] != w[1])
        })
    }
}

/// Working state of the Misra–Gries algorithm.
struct Palette {
    // slot[v][c] = edge of color c at v
    slot: Vec<Vec<Option<usize>>>,
    color: Vec<usize>,
}

impl Palette {
    fn is_free(&self, v: usize, c: usize) -> bool {
        self.slot[v][c].is_none()
    }

    fn lowest_free(&self, v: usize) -> usize {
        (1..self.slot[v].len()).find(|&c| self.is_free(v, c)).expect("Δ + 1 colors leave one free")
    }

    fn set(&mut self, graph: &WeightedGraph, id: usize, c: usize) {
        let e = graph.edge(id);
        self.color[id] = c;
        self.slot[e.u][c] = Some(id);
        self.slot[e.v][c] = Some(id);
    }

    fn clear(&mut self, graph: &WeightedGraph, id: usize) {
        let c = self.color[id];
        if c != 0 {
            let e = graph.edge(id);
            self.slot[e.u][c] = None;
            self.slot[e.v][c] = None;
            self.color[id] = 0;
        }
    }
}

/// Colors edges in id order with the fan-rotation and alternating-path
/// method, always taking the lowest free color and lowest-id fan vertex.
pub fn vizing_coloring(graph: &WeightedGraph) -> EdgeColoring {
    let n = graph.vertex_count();
    let palette_size = graph.max_degree() + 1;
    let mut p = Palette { slot: vec![vec![None; palette_size + 1]; n], color: vec![0; graph.edge_count()] };

    for id in 0..graph.edge_count() {
        let (u, v) = (graph.edge(id).u, graph.edge(id).v);
        // maximal fan of u starting at v
        let mut fan = vec![v];
        let mut fan_edges = vec![id];
        loop {
            let last = *fan.last().unwrap();
            let next = graph.neighbors(u).iter().find(|&&(x, eid)| {
                p.color[eid] != 0 && !fan.contains(&x) && p.is_free(last, p.color[eid])
            });
            match next {
                Some(&(x, eid)) => {
                    fan.push(x);
                    fan_edges.push(eid);
                }
                None => break,
            }
        }
        let c = p.lowest_free(u);
        let d = p.lowest_free(*fan.last().unwrap());

        // invert the c/d path starting at u (its first edge has color d)
        if c != d {
            let mut path = Vec::new();
            let (mut x, mut col) = (u, d);
            while let Some(eid) = p.slot[x][col] {
                path.push(eid);
                x = graph.edge(eid).other(x);
                col = if col == c { d } else { c };
            }
            let old: Vec<usize> = path.iter().map(|&eid| p.color[eid]).collect();
            for &eid in &path {
                p.clear(graph, eid);
            }
            for (&eid, &col) in path.iter().zip(&old) {
                p.set(graph, eid, if col == c { d } else { c });
            }
        }

        // first fan prefix that is still a fan and ends at a vertex missing d
        let prefix_valid = |p: &Palette, j: usize| {
            (0..j).all(|i| {
                let col = p.color[fan_edges[i + 1]];
                col != 0 && p.is_free(fan[i], col)
            })
        };
        let j = (0..fan.len())
            .find(|&j| p.is_free(fan[j], d) && prefix_valid(&p, j))
            .expect("some fan prefix ends at a vertex missing d");

        let shifted: Vec<usize> = (1..=j).map(|i| p.color[fan_edges[i]]).collect();
        for &eid in &fan_edges[..=j] {
            p.clear(graph, eid);
        }
        for (i, &col) in shifted.iter().enumerate() {
            p.set(graph, fan_edges[i], col);
        }
        p.set(graph, fan_edges[j], d);
    }

    let color_count = p.color.iter().copied().max().unwrap_or(0);
    // compact to 1..=k used colors
    let mut used: Vec<usize> = p.color.clone();
    used.sort_unstable();
    used.dedup();
    let rank: BTreeMap<usize, usize> = used.iter().enumerate().map(|(i, &c)| (c, i + 1)).collect();
    let color: Vec<usize> = p.color.iter().map(|c| rank[c]).collect();
    debug_assert!(color_count <= palette_size);
    EdgeColoring { color_count: used.len(), color }
}

/// The graph obtained by contracting every matching edge to a vertex and
/// merging the resulting parallel edges (weights summed).
#[derive(Debug, Clone)]
pub struct ContractedGraph {
    pub base: WeightedGraph,
    /// Original vertices behind each contracted vertex (one or two).
    pub vertex_origin: Vec<Vec<usize>>,
    /// Original edges behind each contracted edge.
    pub edge_origin: Vec<Vec<usize>>,
}

pub fn contract_matching(graph: &WeightedGraph, matching: &[usize]) -> Result<ContractedGraph> {
    check_matching(graph, matching)?;
    graph.require_triangle_free()?;
    let n = graph.vertex_count();
    let mut mate = vec![None; n];
    let mut in_matching = vec![false; graph.edge_count()];
    for &id in matching {
        let e = graph.edge(id);
        mate[e.u] = Some(e.v);
        mate[e.v] = Some(e.u);
        in_matching[id] = true;
    }
    let mut image = vec![usize::MAX; n];
    let mut vertex_origin = Vec::new();
    for v in 0..n {
        if image[v] != usize::MAX {
            continue;
        }
        image[v] = vertex_origin.len();
        match mate[v] {
            Some(x) => {
                image[x] = vertex_origin.len();
                vertex_origin.push(vec![v, x]);
            }
            None => vertex_origin.push(vec![v]),
        }
    }
    let mut merged: BTreeMap<(usize, usize), (f64, Vec<usize>)> = BTreeMap::new();
    for (id, e) in graph.edges().iter().enumerate() {
        if in_matching[id] {
            continue;
        }
        let (a, b) = (image[e.u], image[e.v]);
        let entry = merged.entry((a.min(b), a.max(b))).or_insert((0.0, Vec::new()));
        entry.0 += e.weight;
        entry.1.push(id);
    }
    let base = WeightedGraph::new(vertex_origin.len(), merged.iter().map(|(&(a, b), &(w, _))| (a, b, w)))?;
    // the builder keeps edges in input order, which is the map order
    let edge_origin: Vec<Vec<usize>> = merged.into_values().map(|(_, ids)| ids).collect();

    let delta = graph.max_degree();
    if delta >= 2 && base.max_degree() > 2 * delta - 2 {
        return Err(Error::Structural(format!(
            "contracted graph has degree {} above 2Δ - 2 = {}",
            base.max_degree(),
            2 * delta - 2
        )));
    }
    Ok(ContractedGraph { base, vertex_origin, edge_origin })
}

/// Best cut over the B-subgraphs `G[M ∪ M_i]`, one per color class of the
/// contracted graph, with the bound those classes certify on average.
struct ClassCuts {
    bound: f64,
    cut: Cut,
    colors: usize,
    best_class: Option<usize>,
}

fn matching_vizing_cuts(graph: &WeightedGraph, matching: &[usize]) -> Result<ClassCuts> {
    let contracted = contract_matching(graph, matching)?;
    let coloring = vizing_coloring(&contracted.base);
    let c = coloring.color_count;
    let w = graph.total_weight();
    let w_m = graph.edge_set_weight(matching);
    let bound = (w + w_m) / 2.0 + if c == 0 { 0.0 } else { (w - w_m) / (2.0 * c as f64) };

    if c == 0 {
        let r = verify_b_subgraph(graph, matching)?;
        return Ok(ClassCuts { bound, cut: derandomized_cut(graph, &r), colors: 0, best_class: None });
    }
    let cuts: Vec<Result<Cut>> = coloring
        .classes()
        .par_iter()
        .map(|class| {
            let mut edges: Vec<usize> = matching.to_vec();
            for &cid in class {
                edges.extend_from_slice(&contracted.edge_origin[cid]);
            }
            edges.sort_unstable();
            let r = verify_b_subgraph(graph, &edges)?;
            if let Some(big) = r.components().iter().find(|comp| comp.vertices.len() > 4) {
                return Err(Error::Structural(format!(
                    "component of {} vertices in a lifted color class",
                    big.vertices.len()
                )));
            }
            Ok(derandomized_cut(graph, &r))
        })
        .collect();
    let mut best: Option<(usize, Cut)> = None;
    for (i, cut) in cuts.into_iter().enumerate() {
        let cut = cut?;
        if best.as_ref().is_none_or(|(_, b)| cut.weight() > b.weight()) {
            best = Some((i, cut));
        }
    }
    let (i, cut) = best.unwrap();
    Ok(ClassCuts { bound, cut, colors: c, best_class: Some(i + 1) })
}

/// `(w(G) + w(M))/2 + (w(G) - w(M))/(2c)` where `c` is the number of colors
/// used on the contracted graph; at least `Δ/(2Δ-1) (w(G) - w(M)) + w(M)`.
pub fn matching_vizing_bound(graph: &WeightedGraph, matching: &[usize]) -> Result<BoundReport> {
    let class_cuts = matching_vizing_cuts(graph, matching)?;
    let w = graph.total_weight();
    let w_m = graph.edge_set_weight(matching);
    let delta = graph.max_degree();
    let mut details = Details::new();
    details.insert("colors".into(), json!(class_cuts.colors));
    details.insert("matching_weight".into(), json!(w_m));
    details.insert("max_degree".into(), json!(delta));
    if delta >= 1 {
        let coefficient = delta as f64 / (2 * delta - 1) as f64;
        details.insert("degree_form_bound".into(), json!(coefficient * (w - w_m) + w_m));
    }
    details.insert("best_class".into(), json!(class_cuts.best_class));
    let denominator = 2 * class_cuts.colors.max(1) as u64;
    Ok(BoundReport::new(
        graph,
        "matching_vizing",
        Mode::Deterministic,
        class_cuts.bound,
        class_cuts.cut,
        details,
        Some(denominator),
    ))
}

/// `1/2 + 1/(4 sqrt(2Δ))`.
pub fn s_delta(delta: usize) -> f64 {
    0.5 + 1.0 / (4.0 * (2.0 * delta as f64).sqrt())
}

/// `1/2 + (3Δ - 1)/(4Δ² + 2Δ - 2)`.
pub fn t_delta(delta: usize) -> f64 {
    let d = delta as f64;
    0.5 + (3.0 * d - 1.0) / (4.0 * d * d + 2.0 * d - 2.0)
}

/// `t_Δ w(G)` for triangle-free graphs of maximum degree `Δ`, using every
/// color class of a Vizing coloring as the matching.
pub fn ty_bound(graph: &WeightedGraph) -> Result<BoundReport> {
    graph.require_triangle_free()?;
    let delta = graph.max_degree();
    let mut details = Details::new();
    details.insert("max_degree".into(), json!(delta));
    if delta == 0 {
        let cut = Cut::from_sides(graph, vec![false; graph.vertex_count()]);
        return Ok(BoundReport::new(graph, "ty", Mode::Deterministic, 0.0, cut, details, Some(1)));
    }
    let coloring = vizing_coloring(graph);
    let mut best: Option<Cut> = None;
    let mut class_bounds = Vec::new();
    for class in coloring.classes() {
        let cc = matching_vizing_cuts(graph, &class)?;
        class_bounds.push(cc.bound);
        if best.as_ref().is_none_or(|b| cc.cut.weight() > b.weight()) {
            best = Some(cc.cut);
        }
    }
    details.insert("colors".into(), json!(coloring.color_count));
    details.insert("class_bounds".into(), json!(class_bounds));
    let t = t_delta(delta);
    details.insert("coefficient".into(), json!(t));
    let d = delta as u64;
    let denominator = 2 * (4 * d * d + 2 * d - 2);
    Ok(BoundReport::new(graph, "ty", Mode::Deterministic, t * graph.total_weight(), best.unwrap(), details, Some(denominator)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    /// Exhaustive search for a proper edge coloring with `k` colors.
    fn colorable(graph: &WeightedGraph, k: usize) -> bool {
        fn go(graph: &WeightedGraph, k: usize, id: usize, color: &mut Vec<usize>) -> bool {
            if id == graph.edge_count() {
                return true;
            }
            let e = graph.edge(id);
            for c in 1..=k {
                let clash = [e.u, e.v]
                    .iter()
                    .any(|&x| graph.neighbors(x).iter().any(|&(_, other)| other < id && color[other] == c));
                if !clash {
                    color[id] = c;
                    if go(graph, k, id + 1, color) {
                        return true;
                    }
                }
            }
            color[id] = 0;
            false
        }
        go(graph, k, 0, &mut vec![0; graph.edge_count()])
    }

    #[test]
    fn cycles() {
        let c5 = generate::cycle(5, 1.0).unwrap();
        let col = vizing_coloring(&c5);
        assert!(col.is_proper(&c5));
        assert_eq!(col.color_count, 3);
        let c6 = generate::cycle(6, 1.0).unwrap();
        let col = vizing_coloring(&c6);
        assert!(col.is_proper(&c6) && col.color_count <= 3);
    }

    #[test]
    fn petersen_needs_four() {
        let g = generate::petersen(1.0);
        assert!(!colorable(&g, 3));
        let col = vizing_coloring(&g);
        assert!(col.is_proper(&g));
        assert_eq!(col.color_count, 4);
    }

    #[test]
    fn complete_graphs_stay_within_delta_plus_one() {
        for n in 2..10 {
            let g = generate::complete(n, 1.0).unwrap();
            let col = vizing_coloring(&g);
            assert!(col.is_proper(&g));
            assert!(col.color_count <= n);
        }
    }

    #[test]
    fn petersen_c3_contracts_to_k5() {
        let g = generate::petersen_c3(10.0, 1.0);
        let c = contract_matching(&g, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(c.base.vertex_count(), 5);
        assert_eq!(c.base.edge_count(), 10);
        assert!(c.base.edges().iter().all(|e| e.weight == 1.0));
    }

    #[test]
    fn small_contractions() {
        let edge = WeightedGraph::new(2, [(0, 1, 3.0)]).unwrap();
        let c = contract_matching(&edge, &[0]).unwrap();
        assert_eq!(c.base.vertex_count(), 1);
        assert_eq!(c.base.total_weight(), 0.0);
        let c6 = generate::cycle(6, 1.0).unwrap();
        let c = contract_matching(&c6, &[0]).unwrap();
        assert_eq!(c.base.vertex_count(), 5);
        assert_eq!(c.base.total_weight(), 5.0);
        // a 4-cycle contracted along a perfect matching merges two edges
        let c4 = generate::cycle(4, 2.0).unwrap();
        let m = [c4.edge_between(0, 1).unwrap(), c4.edge_between(2, 3).unwrap()];
        let c = contract_matching(&c4, &m).unwrap();
        assert_eq!(c.base.edge_count(), 1);
        assert_eq!(c.base.weight(0), 4.0);
        assert_eq!(c.edge_origin[0].len(), 2);
    }

    #[test]
    fn contraction_rejects_triangles_and_non_matchings() {
        let k3 = generate::complete(3, 1.0).unwrap();
        assert!(matches!(contract_matching(&k3, &[0]), Err(Error::TriangleFound(..))));
        let p = generate::path(3, 1.0).unwrap();
        assert!(matches!(contract_matching(&p, &[0, 1]), Err(Error::NotAMatching { .. })));
    }

    #[test]
    fn petersen_c3_is_tight() {
        let g = generate::petersen_c3(10.0, 1.0);
        let r = matching_vizing_bound(&g, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(r.details["colors"], json!(5));
        assert_eq!(r.bound_value, 56.0);
        assert_eq!(r.cut.weight(), 56.0);
        assert!(r.certified(&g));
    }

    #[test]
    fn empty_matching_and_c5() {
        let c5 = generate::cycle(5, 1.0).unwrap();
        let r = matching_vizing_bound(&c5, &[]).unwrap();
        assert_eq!(r.bound_value, 2.5 + 5.0 / 6.0);
        let m = [c5.edge_between(0, 1).unwrap(), c5.edge_between(2, 3).unwrap()];
        let r = matching_vizing_bound(&c5, &m).unwrap();
        assert!(r.bound_value >= 3.8 - 1e-12);
        assert_eq!(r.cut.weight(), 4.0);
        assert!(r.certified(&c5));
    }

    #[test]
    fn coefficient_table() {
        let table = [(1, 0.6768, 1.0), (2, 0.6250, 0.7778), (3, 0.6021, 0.7000), (4, 0.5884, 0.6571), (16, 0.5442, 0.5446), (17, 0.5429, 0.5421)];
        for (delta, s, t) in table {
            assert!((s_delta(delta) - s).abs() < 5e-5, "s_{delta}");
            assert!((t_delta(delta) - t).abs() < 5e-5, "t_{delta}");
        }
        for delta in 1..=64 {
            assert_eq!(t_delta(delta) > s_delta(delta), delta <= 16);
        }
    }

    #[test]
    fn ty_on_subcubic() {
        let g = generate::petersen(1.0);
        let r = ty_bound(&g).unwrap();
        assert!((r.bound_value - 10.5).abs() < 1e-12);
        assert!(r.certified(&g));
        let k4 = generate::complete(4, 1.0).unwrap();
        assert!(ty_bound(&k4).is_err());
        let edge = WeightedGraph::new(2, [(0, 1, 2.0)]).unwrap();
        assert_eq!(ty_bound(&edge).unwrap().bound_value, 2.0);
    }
}
