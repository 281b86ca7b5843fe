//! Randomized cuts whose guarantees hold in expectation: tree percolation
//! and the two-stage good/bad vertex sampler.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::claims::mainprob_cut;
use crate::bounds::{BoundReport, Details, Mode};
use crate::coloring::s_delta;
use crate::cut::{local_search_improve, Cut};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::spanning::{max_spanning_tree, DisjointSets, RootedSpanningTree};

pub const DEFAULT_TRIALS: usize = 256;
pub const DEFAULT_SEED: u64 = 0;
/// Edge survival probability used for the spanning-tree bound.
pub const TREE_P: f64 = 0.85;
/// Tree coefficient of the spanning-tree bound for subcubic graphs.
pub const TREE_COEFFICIENT: f64 = 0.3193;
const BRANCH_WEIGHTS: (f64, f64) = (0.46545, 0.53455);

/// Length of a shortest odd cycle closed by one non-tree edge, `None` if
/// every such cycle is even.
pub fn shortest_odd_tree_cycle(graph: &WeightedGraph, tree: &RootedSpanningTree) -> Option<usize> {
    graph
        .edges()
        .iter()
        .enumerate()
        .filter(|&(id, _)| !tree.contains_edge(id))
        .map(|(_, e)| tree.path_length(e.u, e.v) + 1)
        .filter(|len| len % 2 == 1)
        .min()
}

/// `(p+1)/2 w(T) + (1 - p^(r-1))/2 (w(G) - w(T))`; `r = None` means no odd
/// cycle, where `p^(r-1)` is taken as 0.
pub fn lemma_prob_value(total: f64, tree_weight: f64, p: f64, r: Option<usize>) -> f64 {
    let closing = match r {
        Some(r) => p.powi(r as i32 - 1),
        None => 0.0,
    };
    (p + 1.0) / 2.0 * tree_weight + (1.0 - closing) / 2.0 * (total - tree_weight)
}

/// One percolation sample: keep each tree edge with probability `p`, orient
/// each surviving subtree (2-colored by tree level parity) by a fair coin.
pub fn lemma_prob_raw_sample<R: Rng>(graph: &WeightedGraph, tree: &RootedSpanningTree, p: f64, rng: &mut R) -> Cut {
    let n = graph.vertex_count();
    let mut parts = DisjointSets::new(n);
    for &id in tree.edges() {
        if rng.gen_bool(p) {
            let e = graph.edge(id);
            parts.union(e.u, e.v);
        }
    }
    let flips: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let side = (0..n).map(|v| (tree.level(v) % 2 == 1) ^ flips[parts.find(v)]).collect();
    Cut::from_sides(graph, side)
}

/// [`lemma_prob_raw_sample`] followed by local search.
pub fn lemma_prob_sample<R: Rng>(graph: &WeightedGraph, tree: &RootedSpanningTree, p: f64, rng: &mut R) -> Cut {
    local_search_improve(graph, &lemma_prob_raw_sample(graph, tree, p, rng))
}

/// Mean and sample standard deviation.
fn moments(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = if values.len() > 1 { values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0) } else { 0.0 };
    (mean, var.sqrt())
}

/// Runs `trials` seeded samples in parallel; returns the raw weights and
/// the best improved cut (lowest trial on ties).
fn run_trials<F>(graph: &WeightedGraph, trials: usize, seed: u64, sample: F) -> (Vec<f64>, Cut)
where
    F: Fn(&mut ChaCha8Rng) -> Cut + Sync,
{
    let results: Vec<(f64, Cut)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
            let raw = sample(&mut rng);
            (raw.weight(), local_search_improve(graph, &raw))
        })
        .collect();
    let raw: Vec<f64> = results.iter().map(|(w, _)| *w).collect();
    let best = results.into_iter().map(|(_, c)| c).reduce(|a, b| if b.weight() > a.weight() { b } else { a });
    (raw, best.unwrap_or_else(|| Cut::from_sides(graph, vec![false; graph.vertex_count()])))
}

fn sample_details(details: &mut Details, raw: &[f64], trials: usize, seed: u64) {
    let (mean, sd) = moments(raw);
    details.insert("trials".into(), json!(trials));
    details.insert("seed".into(), json!(seed));
    details.insert("sample_mean".into(), json!(mean));
    details.insert("sample_sd".into(), json!(sd));
    details.insert("standard_error".into(), json!(sd / (raw.len().max(1) as f64).sqrt()));
}

fn check_trials(trials: usize) -> Result<()> {
    if trials == 0 {
        return Err(Error::InvalidParameter("at least one trial is needed".into()));
    }
    Ok(())
}

/// Best of `trials` percolation samples; the bound holds in expectation.
pub fn lemma_prob_bound(
    graph: &WeightedGraph,
    tree: &RootedSpanningTree,
    p: f64,
    trials: usize,
    seed: u64,
) -> Result<BoundReport> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("probability {p} outside [0, 1]")));
    }
    check_trials(trials)?;
    let r = shortest_odd_tree_cycle(graph, tree);
    let tree_weight = tree.weight(graph);
    let bound = lemma_prob_value(graph.total_weight(), tree_weight, p, r);
    let (raw, best) = run_trials(graph, trials, seed, |rng| lemma_prob_raw_sample(graph, tree, p, rng));
    let mut details = Details::new();
    details.insert("p".into(), json!(p));
    details.insert("shortest_odd_cycle".into(), json!(r));
    details.insert("tree_weight".into(), json!(tree_weight));
    sample_details(&mut details, &raw, trials, seed);
    Ok(BoundReport::new(graph, "lemma_prob", Mode::MonteCarlo, bound, best, details, None))
}

/// `w(G)/2 + 0.3193 w(T)` for triangle-free subcubic graphs: the better of
/// the 8/11 cut and the best percolation sample at `p = 0.85`. The
/// percolation branch is certified in expectation only.
pub fn mainprobtree_bound(
    graph: &WeightedGraph,
    tree: Option<&RootedSpanningTree>,
    trials: usize,
    seed: u64,
) -> Result<BoundReport> {
    graph.require_triangle_free()?;
    graph.require_max_degree(3)?;
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let owned;
    let tree = match tree {
        Some(t) => t,
        None => {
            owned = max_spanning_tree(graph)?;
            &owned
        }
    };
    let w = graph.total_weight();
    let w_t = tree.weight(graph);
    let main = mainprob_cut(graph)?;
    let sampled = lemma_prob_bound(graph, tree, TREE_P, trials, seed)?;
    let branch_a = lemma_prob_value(w, w_t, TREE_P, Some(5));
    let branch_b = 8.0 / 11.0 * w;
    let recombined = BRANCH_WEIGHTS.0 * branch_a + BRANCH_WEIGHTS.1 * branch_b;
    let bound = w / 2.0 + TREE_COEFFICIENT * w_t;

    let mut details = Details::new();
    details.insert("tree_weight".into(), json!(w_t));
    details.insert("branch_a".into(), json!(branch_a));
    details.insert("branch_a_actual_r".into(), json!(sampled.bound_value));
    details.insert("branch_b".into(), json!(branch_b));
    details.insert("recombined".into(), json!(recombined));
    details.insert("recombination_covers_bound".into(), json!(recombined >= bound - crate::bounds::tolerance(graph)));
    details.insert("mainprob_cut_weight".into(), json!(main.cut.weight()));
    details.insert("sample_best_weight".into(), json!(sampled.cut.weight()));
    for key in ["trials", "seed", "sample_mean", "sample_sd", "standard_error"] {
        details.insert(key.into(), sampled.details[key].clone());
    }
    let cut = if sampled.cut.weight() > main.cut.weight() { sampled.cut } else { main.cut };
    Ok(BoundReport::new(graph, "mainprobtree", Mode::MonteCarlo, bound, cut, details, None))
}

/// One draw of the two-stage sampler: a uniform cut, then every vertex
/// with at most half of its neighbors across (ties resolved by a coin) is
/// re-placed uniformly.
pub fn shearer_raw_sample<R: Rng>(graph: &WeightedGraph, rng: &mut R) -> Cut {
    let n = graph.vertex_count();
    let first: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let side = (0..n)
        .map(|v| {
            let degree = graph.degree(v);
            let across = graph.neighbors(v).iter().filter(|&&(x, _)| first[x] != first[v]).count();
            let good = match (2 * across).cmp(&degree) {
                std::cmp::Ordering::Greater => true,
                std::cmp::Ordering::Equal => rng.gen_bool(0.5),
                std::cmp::Ordering::Less => false,
            };
            if good {
                first[v]
            } else {
                rng.gen()
            }
        })
        .collect();
    Cut::from_sides(graph, side)
}

pub fn shearer_sample<R: Rng>(graph: &WeightedGraph, rng: &mut R) -> Cut {
    local_search_improve(graph, &shearer_raw_sample(graph, rng))
}

/// `s_Δ w(G)` in expectation for triangle-free graphs.
pub fn shearer_bound(graph: &WeightedGraph, trials: usize, seed: u64) -> Result<BoundReport> {
    graph.require_triangle_free()?;
    check_trials(trials)?;
    let delta = graph.max_degree();
    let coefficient = if delta == 0 { 0.0 } else { s_delta(delta) };
    let (raw, best) = run_trials(graph, trials, seed, |rng| shearer_raw_sample(graph, rng));
    let mut details = Details::new();
    details.insert("max_degree".into(), json!(delta));
    details.insert("coefficient".into(), json!(coefficient));
    sample_details(&mut details, &raw, trials, seed);
    Ok(BoundReport::new(graph, "shearer", Mode::MonteCarlo, coefficient * graph.total_weight(), best, details, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::spanning::dfs_tree;

    #[test]
    fn c5_percolation_value() {
        let g = generate::cycle(5, 1.0).unwrap();
        let t = dfs_tree(&g, 0).unwrap();
        assert_eq!(shortest_odd_tree_cycle(&g, &t), Some(5));
        let r = lemma_prob_bound(&g, &t, 0.85, 64, 0).unwrap();
        assert!((r.bound_value - (0.925 * 4.0 + 0.238996875)).abs() < 1e-12);
        assert_eq!(r.mode, Mode::MonteCarlo);
        assert!(r.cut.weight() <= 4.0);
    }

    #[test]
    fn extreme_probabilities() {
        let g = generate::petersen(1.0);
        let t = dfs_tree(&g, 0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let cut = lemma_prob_raw_sample(&g, &t, 1.0, &mut rng);
            assert!(t.edges().iter().all(|&id| cut.crosses(&g, id)));
        }
        assert_eq!(lemma_prob_bound(&g, &t, 0.0, 4, 0).unwrap().bound_value, 7.5);
        assert!(lemma_prob_bound(&g, &t, 1.5, 4, 0).is_err());
    }

    #[test]
    fn seeded_runs_repeat() {
        let g = generate::petersen(1.0);
        let a = shearer_bound(&g, 32, 5).unwrap();
        let b = shearer_bound(&g, 32, 5).unwrap();
        assert_eq!(a.details["sample_mean"], b.details["sample_mean"]);
        assert_eq!(a.cut, b.cut);
    }

    #[test]
    fn shearer_coefficients() {
        let c5 = generate::cycle(5, 1.0).unwrap();
        assert_eq!(shearer_bound(&c5, 8, 0).unwrap().bound_value, 3.125);
        let p = generate::petersen(1.0);
        let r = shearer_bound(&p, 8, 0).unwrap();
        assert!((r.details["coefficient"].as_f64().unwrap() - 0.6021).abs() < 5e-5);
        assert!(shearer_bound(&generate::complete(3, 1.0).unwrap(), 8, 0).is_err());
    }

    #[test]
    fn tree_bound_coefficients() {
        let combined = BRANCH_WEIGHTS.0 * 0.925 + BRANCH_WEIGHTS.1 * 8.0 / 11.0;
        assert!((combined - 0.8193).abs() < 5e-5);
        let g = generate::petersen(1.0);
        let t = crate::spanning::RootedSpanningTree::from_edges(
            &g,
            &bfs_tree_edges(&g),
            crate::spanning::TreeRoot::Vertex(0),
            crate::spanning::TreeKind::Arbitrary,
        )
        .unwrap();
        let r = mainprobtree_bound(&g, Some(&t), 32, 0).unwrap();
        assert!((r.bound_value - (7.5 + 9.0 * 0.3193)).abs() < 1e-12);
        assert_eq!(r.details["recombination_covers_bound"], json!(true));
        assert!(r.cut.weight() <= 12.0 && r.cut.weight() >= r.bound_value);
    }

    fn bfs_tree_edges(g: &WeightedGraph) -> Vec<usize> {
        let mut seen = vec![false; g.vertex_count()];
        let mut queue = std::collections::VecDeque::from([0]);
        seen[0] = true;
        let mut edges = Vec::new();
        while let Some(x) = queue.pop_front() {
            for &(y, id) in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    edges.push(id);
                    queue.push_back(y);
                }
            }
        }
        edges
    }
}
