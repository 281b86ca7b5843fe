//! The three cuts behind the 8/11 bound and the simpler 2/3 cut.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;
use serde_json::json;

use super::brooks::{brooks_3_coloring, VertexColoring3};
use super::regularize::regularize;
use super::successor::{check_alternation, classify_edges, successor_digraph, EdgeClass, SuccessorDigraph};
use crate::bounds::{at_least, best_layer_cut, BoundReport, Details, Mode};
use crate::coloring::matching_vizing_bound;
use crate::cut::{place_blocks, Block, Cut};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::spanning::{girth_layer_bsubgraphs, DisjointSets, RootedSpanningTree, TreeKind, TreeRoot};

/// A cut together with the value its construction guarantees.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimCut {
    pub cut: Cut,
    pub certified: f64,
}

fn ensure_meets(graph: &WeightedGraph, claim: &str, cut: &Cut, certified: f64, denominator: u64) -> Result<()> {
    if at_least(graph, cut.weight(), certified, Some(denominator)) {
        Ok(())
    } else {
        Err(Error::Structural(format!(
            "claim {claim} cut {} falls short of its certified value {certified}",
            cut.weight()
        )))
    }
}

/// 2-colors each component of `(V, edges)` by BFS; an odd cycle is a
/// structural error.
fn bipartite_blocks(graph: &WeightedGraph, edges: &[usize]) -> Result<Vec<Block>> {
    let n = graph.vertex_count();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &id in edges {
        let e = graph.edge(id);
        adjacency[e.u].push(e.v);
        adjacency[e.v].push(e.u);
    }
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut blocks = Vec::new();
    for start in 0..n {
        if side[start].is_some() || adjacency[start].is_empty() {
            continue;
        }
        side[start] = Some(false);
        let mut block = Block { vertices: Vec::new(), side: Vec::new() };
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let sx = side[x].unwrap();
            block.vertices.push(x);
            block.side.push(sx);
            for &y in &adjacency[x] {
                match side[y] {
                    None => {
                        side[y] = Some(!sx);
                        queue.push_back(y);
                    }
                    Some(sy) if sy == sx => {
                        return Err(Error::Structural(format!("odd cycle through edge {x}-{y}")));
                    }
                    Some(_) => {}
                }
            }
        }
        blocks.push(block);
    }
    Ok(blocks)
}

/// Best of the three cuts `C_i = E minus {v s(v) : v in V_i}`, each a
/// bipartite edge set; certifies `w(A0) + 2/3 w(A1) + 1/3 w(A2)`.
pub fn claim_a_cut(graph: &WeightedGraph, coloring: &VertexColoring3, digraph: &SuccessorDigraph) -> Result<ClaimCut> {
    let classes = classify_edges(graph, digraph)?;
    let (a0, a1, a2) = classes.weights(graph);
    let mut best: Option<Cut> = None;
    for i in 1..=3u8 {
        let mut removed = vec![false; graph.edge_count()];
        for (v, s) in digraph.arcs() {
            if coloring.class_of[v] == i {
                removed[graph.edge_between(v, s).unwrap()] = true;
            }
        }
        let kept: Vec<usize> = (0..graph.edge_count()).filter(|&id| !removed[id]).collect();
        let cut = place_blocks(graph, &bipartite_blocks(graph, &kept)?);
        if best.as_ref().is_none_or(|b| cut.weight() > b.weight()) {
            best = Some(cut);
        }
    }
    let cut = best.unwrap();
    let certified = a0 + 2.0 / 3.0 * a1 + a2 / 3.0;
    ensure_meets(graph, "A", &cut, certified, 3)?;
    Ok(ClaimCut { cut, certified })
}

/// Cut of `G[vertices]` from the four girth layers of `tree_edges`
/// rooted at its heaviest edge (or `e_star`).
fn layered_piece(graph: &WeightedGraph, vertices: &[usize], tree_edges: &[usize], e_star: Option<usize>) -> Result<Block> {
    if vertices.len() == 1 {
        return Ok(Block::singleton(vertices[0]));
    }
    let sub = graph.induced_subgraph(vertices);
    let local = sub.local_edges(tree_edges);
    let root_edge = match e_star {
        Some(e) => sub.local_edges(&[e])[0],
        None => *local
            .iter()
            .max_by(|&&a, &&b| sub.graph.weight(a).total_cmp(&sub.graph.weight(b)).then(b.cmp(&a)))
            .unwrap(),
    };
    let tree = RootedSpanningTree::from_edges(&sub.graph, &local, TreeRoot::Edge(root_edge), TreeKind::Arbitrary)?;
    let layers = girth_layer_bsubgraphs(&sub.graph, &tree, 4, None)
        .map_err(|e| Error::Structural(format!("short odd cycle next to the successor forest: {e}")))?;
    let (_, cut) = best_layer_cut(&sub.graph, &layers);
    Ok(Block { vertices: sub.vertex_origin.clone(), side: cut.into_sides() })
}

/// The directed cycle of a component in which every vertex has a successor.
fn find_cycle(digraph: &SuccessorDigraph, start: usize) -> Vec<usize> {
    let mut position = BTreeMap::new();
    let mut walk = Vec::new();
    let mut x = start;
    while !position.contains_key(&x) {
        position.insert(x, walk.len());
        walk.push(x);
        x = digraph.succ[x].expect("cycle component vertices have successors");
    }
    walk.split_off(position[&x])
}

fn cycle_component_block(
    graph: &WeightedGraph,
    digraph: &SuccessorDigraph,
    vertices: &[usize],
    star_edges: &[usize],
) -> Result<Block> {
    let cycle = find_cycle(digraph, vertices[0]);
    let l = cycle.len();
    if !l.is_multiple_of(3) {
        return Err(Error::Structural(format!("successor cycle of length {l} is not a multiple of 3")));
    }
    for i in 0..l {
        for j in i + 2..l {
            if (i, j) != (0, l - 1) && graph.adjacent(cycle[i], cycle[j]) {
                return Err(Error::Structural(format!("chord {}-{} on a successor cycle", cycle[i], cycle[j])));
            }
        }
    }
    // which cycle vertex each vertex drains into
    let on_cycle: BTreeMap<usize, usize> = cycle.iter().enumerate().map(|(j, &c)| (c, j)).collect();
    let mut group: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in vertices {
        let mut path = Vec::new();
        let mut x = v;
        let j = loop {
            if let Some(&j) = on_cycle.get(&x) {
                break j;
            }
            if let Some(&j) = group.get(&x) {
                break j;
            }
            path.push(x);
            x = digraph.succ[x].expect("cycle component vertices have successors");
        };
        for p in path {
            group.insert(p, j);
        }
        group.insert(v, j);
    }
    for (&c, &j) in &on_cycle {
        group.insert(c, j);
    }
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); l];
    for &v in vertices {
        members[group[&v]].push(v);
    }

    let cycle_edges: Vec<usize> = (0..l).map(|j| graph.edge_between(cycle[j], cycle[(j + 1) % l]).unwrap()).collect();
    // only cycle edges may join different groups
    for &v in vertices {
        for &(y, id) in graph.neighbors(v) {
            if let Some(&gy) = group.get(&y) {
                if gy != group[&v] && !cycle_edges.contains(&id) {
                    return Err(Error::Structural(format!("edge {v}-{y} joins two trees hanging off a successor cycle")));
                }
            }
        }
    }

    // target side of each cycle vertex: alternate, starting after the
    // dropped (cheapest) edge when the cycle is odd
    let start = if l % 2 == 1 {
        let drop = (0..l)
            .min_by(|&a, &b| {
                graph.weight(cycle_edges[a]).total_cmp(&graph.weight(cycle_edges[b])).then(cycle_edges[a].cmp(&cycle_edges[b]))
            })
            .unwrap();
        (drop + 1) % l
    } else {
        0
    };
    let mut target = vec![false; l];
    for i in 0..l {
        target[(start + i) % l] = i % 2 == 1;
    }

    let in_star: Vec<bool> = {
        let mut mark = vec![false; graph.edge_count()];
        for &id in star_edges {
            mark[id] = true;
        }
        mark
    };
    let mut block = Block { vertices: Vec::new(), side: Vec::new() };
    for j in 0..l {
        let part = &members[j];
        let tree_edges: Vec<usize> = star_edges
            .iter()
            .copied()
            .filter(|&id| {
                let e = graph.edge(id);
                in_star[id] && group.get(&e.u) == Some(&j) && group.get(&e.v) == Some(&j)
            })
            .collect();
        let piece = layered_piece(graph, part, &tree_edges, None)?;
        let at_c = piece.vertices.iter().position(|&x| x == cycle[j]).unwrap();
        let flip = piece.side[at_c] != target[j];
        block.vertices.extend_from_slice(&piece.vertices);
        block.side.extend(piece.side.iter().map(|&s| s ^ flip));
    }
    Ok(block)
}

/// Per component of the successor graph, a layered cut (in-tree, 2-cycle,
/// or longer cycle case), merged by conditional expectations; certifies
/// `1/2 w(A0) + 7/8 w(A1) + w(A2)`.
pub fn claim_f_cut(graph: &WeightedGraph, digraph: &SuccessorDigraph) -> Result<ClaimCut> {
    let classes = classify_edges(graph, digraph)?;
    let (a0, a1, a2) = classes.weights(graph);
    let n = graph.vertex_count();
    let star_edges: Vec<usize> =
        (0..graph.edge_count()).filter(|&id| classes.class_of_edge[id] != EdgeClass::A0).collect();
    let mut parts = DisjointSets::new(n);
    for &id in &star_edges {
        let e = graph.edge(id);
        parts.union(e.u, e.v);
    }
    let mut components: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for v in 0..n {
        components.entry(parts.find(v)).or_default().0.push(v);
    }
    for &id in &star_edges {
        let root = parts.find(graph.edge(id).u);
        components.get_mut(&root).unwrap().1.push(id);
    }

    let mut blocks = Vec::new();
    for (vertices, edges) in components.values() {
        if edges.is_empty() {
            continue;
        }
        let two_cycle = edges.iter().copied().find(|&id| classes.class_of_edge[id] == EdgeClass::A2);
        let block = if let Some(e_star) = two_cycle {
            layered_piece(graph, vertices, edges, Some(e_star))?
        } else if edges.len() + 1 == vertices.len() {
            layered_piece(graph, vertices, edges, None)?
        } else {
            cycle_component_block(graph, digraph, vertices, edges)?
        };
        blocks.push(block);
    }
    let cut = place_blocks(graph, &blocks);
    let certified = a0 / 2.0 + 7.0 / 8.0 * a1 + a2;
    ensure_meets(graph, "F", &cut, certified, 8)?;
    Ok(ClaimCut { cut, certified })
}

/// The matching bound with `M = A2`; certifies `3/5 (w(G) - w(A2)) + w(A2)`.
pub fn claim_g_cut(graph: &WeightedGraph, a2: &[usize]) -> Result<ClaimCut> {
    let report = matching_vizing_bound(graph, a2)?;
    let w_a2 = graph.edge_set_weight(a2);
    let certified = 0.6 * (graph.total_weight() - w_a2) + w_a2;
    ensure_meets(graph, "G", &report.cut, certified, 5)?;
    Ok(ClaimCut { cut: report.cut, certified })
}

/// `8/11 w(G)` for triangle-free subcubic graphs: the best of the three
/// claim cuts on the regularized graph, restricted back.
pub fn mainprob_cut(graph: &WeightedGraph) -> Result<BoundReport> {
    let regular = regularize(graph)?;
    let g3 = &regular.graph;
    let coloring = brooks_3_coloring(g3)?;
    let digraph = successor_digraph(g3, &coloring)?;
    check_alternation(g3, &coloring, &digraph)?;
    let classes = classify_edges(g3, &digraph)?;
    let (a0, a1, a2) = classes.weights(g3);

    let claims = [
        ("A", claim_a_cut(g3, &coloring, &digraph)?),
        ("F", claim_f_cut(g3, &digraph)?),
        ("G", claim_g_cut(g3, &classes.edges_of(EdgeClass::A2))?),
    ];
    let combination = 9.0 / 22.0 * claims[0].1.certified + 8.0 / 22.0 * claims[1].1.certified + 5.0 / 22.0 * claims[2].1.certified;
    let bound = 8.0 / 11.0 * graph.total_weight();
    if (combination - bound).abs() > crate::bounds::tolerance(graph) {
        return Err(Error::Structural(format!("claim combination {combination} differs from 8/11 w(G) = {bound}")));
    }

    let mut best: Option<(usize, Cut)> = None;
    let mut details = Details::new();
    for (i, (name, claim)) in claims.iter().enumerate() {
        let cut = Cut::from_sides(graph, regular.restrict(claim.cut.side()));
        details.insert(
            format!("claim_{}", name.to_lowercase()),
            json!({ "certified": claim.certified, "cut_weight": cut.weight() }),
        );
        if best.as_ref().is_none_or(|(_, b)| cut.weight() > b.weight()) {
            best = Some((i, cut));
        }
    }
    let (i, cut) = best.unwrap();
    details.insert("best_claim".into(), json!(claims[i].0));
    details.insert("a0_weight".into(), json!(a0));
    details.insert("a1_weight".into(), json!(a1));
    details.insert("a2_weight".into(), json!(a2));
    details.insert("combination".into(), json!(combination));
    details.insert("regularized_vertices".into(), json!(g3.vertex_count()));
    Ok(BoundReport::new(graph, "mainprob", Mode::Deterministic, bound, cut, details, Some(11)))
}

/// `2/3 w(G)`: keep the heaviest pair of color classes apart and put each
/// vertex of the third class opposite its heavier side.
pub fn two_thirds_cut(graph: &WeightedGraph) -> Result<BoundReport> {
    graph.require_triangle_free()?;
    let coloring = brooks_3_coloring(graph)?;
    let c = &coloring.class_of;
    let mut between = [[0.0f64; 4]; 4];
    for e in graph.edges() {
        let (a, b) = (c[e.u] as usize, c[e.v] as usize);
        between[a][b] += e.weight;
        between[b][a] += e.weight;
    }
    let pairs = [(1u8, 2u8, 3u8), (1, 3, 2), (2, 3, 1)];
    let &(p, q, r) = pairs
        .iter()
        .reduce(|best, cand| if between[cand.0 as usize][cand.1 as usize] > between[best.0 as usize][best.1 as usize] { cand } else { best })
        .unwrap();
    // side false = V_p, true = V_q
    let side: Vec<bool> = (0..graph.vertex_count())
        .map(|v| {
            if c[v] == p {
                false
            } else if c[v] == q {
                true
            } else {
                let (mut to_p, mut to_q) = (0.0, 0.0);
                for &(x, id) in graph.neighbors(v) {
                    if c[x] == p {
                        to_p += graph.weight(id);
                    } else if c[x] == q {
                        to_q += graph.weight(id);
                    }
                }
                // join V_p when at least as much weight goes to V_q
                to_q < to_p
            }
        })
        .collect();
    let cut = Cut::from_sides(graph, side);
    let mut details = Details::new();
    details.insert("kept_pair".into(), json!([p, q]));
    details.insert("redistributed_class".into(), json!(r));
    details.insert("kept_pair_weight".into(), json!(between[p as usize][q as usize]));
    Ok(BoundReport::new(graph, "two_thirds", Mode::Deterministic, 2.0 / 3.0 * graph.total_weight(), cut, details, Some(3)))
}
