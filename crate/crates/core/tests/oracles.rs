//! Exact solvers checked against brute force written from the definitions.

use cutbound::cut::verify_b_subgraph;
use cutbound::generate::{self, WeightDistribution};
use cutbound::graph::WeightedGraph;
use cutbound::oracle::{
    exact_max_cut, five_cycle_cover, five_cycles, max_b_subgraph, max_dfs_tree_weight, naive_max_cut,
    verify_five_cycle_cover, Witness,
};

const INT: WeightDistribution = WeightDistribution::Integer { lo: 0, hi: 10 };

#[test]
fn gray_code_agrees_with_naive_loop() {
    for seed in 0..200u64 {
        let n = 1 + (seed as usize % 12);
        let g = if seed % 3 == 0 {
            generate::random_triangle_free_subcubic(n, seed, INT).unwrap()
        } else {
            generate::random_connected(n, 0.35, seed, INT).unwrap()
        };
        assert_eq!(exact_max_cut(&g).unwrap().value, naive_max_cut(&g).unwrap(), "seed {seed}");
    }
}

#[test]
fn gray_code_real_weights() {
    for seed in 0..40u64 {
        let g = generate::random_connected(9, 0.5, seed, WeightDistribution::Uniform { lo: 0.0, hi: 3.0 }).unwrap();
        let a = exact_max_cut(&g).unwrap().value;
        let b = naive_max_cut(&g).unwrap();
        assert!((a - b).abs() < 1e-9, "seed {seed}: {a} vs {b}");
    }
}

/// Every edge subset, kept when it is a B-subgraph.
fn brute_r_max(g: &WeightedGraph) -> f64 {
    let m = g.edge_count();
    (0..1u32 << m)
        .filter_map(|mask| {
            let edges: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
            verify_b_subgraph(g, &edges).ok().map(|_| g.edge_set_weight(&edges))
        })
        .fold(0.0, f64::max)
}

#[test]
fn r_max_matches_edge_subset_enumeration() {
    let mut checked = 0;
    for seed in 0..120u64 {
        let g = generate::random_connected(3 + seed as usize % 5, 0.5, seed, INT).unwrap();
        if g.edge_count() > 13 {
            continue;
        }
        let r = max_b_subgraph(&g).unwrap();
        assert_eq!(r.value, brute_r_max(&g), "seed {seed}");
        let Witness::Edges(e) = &r.witness else { panic!("no witness") };
        verify_b_subgraph(&g, e).unwrap();
        checked += 1;
    }
    assert!(checked > 50);
    assert_eq!(max_b_subgraph(&generate::complete(4, 1.0).unwrap()).unwrap().value, brute_r_max(&generate::complete(4, 1.0).unwrap()));
}

#[test]
fn r_max_of_bipartite_graph_is_total_weight() {
    let g = WeightedGraph::new(6, [(0, 3, 2.0), (0, 4, 1.0), (1, 4, 5.0), (2, 5, 3.0), (1, 5, 1.5)]).unwrap();
    assert_eq!(max_b_subgraph(&g).unwrap().value, g.total_weight());
}

/// All spanning trees, kept when some root makes every non-tree edge an
/// ancestor-descendant pair.
fn brute_max_dfs(g: &WeightedGraph) -> f64 {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut best = f64::NEG_INFINITY;
    for mask in 0u32..1 << m {
        if mask.count_ones() as usize != n - 1 {
            continue;
        }
        let tree: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let mut adj = vec![Vec::new(); n];
        for &id in &tree {
            let e = g.edge(id);
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for root in 0..n {
            let mut parent = vec![usize::MAX; n];
            let mut seen = vec![false; n];
            let mut stack = vec![root];
            seen[root] = true;
            let mut count = 1;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = x;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
            if count != n {
                break;
            }
            let ancestor = |a: usize, mut b: usize| loop {
                if a == b {
                    return true;
                }
                if parent[b] == usize::MAX {
                    return false;
                }
                b = parent[b];
            };
            let normal = (0..m).filter(|i| mask >> i & 1 == 0).all(|id| {
                let e = g.edge(id);
                ancestor(e.u, e.v) || ancestor(e.v, e.u)
            });
            if normal {
                best = best.max(g.edge_set_weight(&tree));
            }
        }
    }
    best
}

#[test]
fn dfs_oracle_matches_tree_enumeration() {
    for seed in 0..60u64 {
        let g = generate::random_connected(3 + seed as usize % 5, 0.45, seed, INT).unwrap();
        if g.edge_count() > 14 {
            continue;
        }
        assert_eq!(max_dfs_tree_weight(&g).unwrap().value, brute_max_dfs(&g), "seed {seed}");
    }
}

#[test]
fn dfs_oracle_on_cycles() {
    for n in 3..9 {
        let ws: Vec<f64> = (0..n).map(|i| ((i * 7 + 3) % 11) as f64).collect();
        let g = WeightedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n, ws[i]))).unwrap();
        let min = ws.iter().copied().fold(f64::INFINITY, f64::min);
        assert_eq!(max_dfs_tree_weight(&g).unwrap().value, g.total_weight() - min);
    }
}

/// 5-cycles counted through ordered vertex 5-tuples.
fn brute_five_cycle_count(g: &WeightedGraph) -> usize {
    let n = g.vertex_count();
    let mut count = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    for e in 0..n {
                        let t = [a, b, c, d, e];
                        let distinct = (0..5).all(|i| (i + 1..5).all(|j| t[i] != t[j]));
                        if distinct && (0..5).all(|i| g.adjacent(t[i], t[(i + 1) % 5])) {
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    count / 10
}

#[test]
fn five_cycle_enumeration_and_cover() {
    let mut covered = 0;
    for seed in 0..40u64 {
        let g = generate::random_triangle_free_subcubic(6 + seed as usize % 6, seed, WeightDistribution::Unit).unwrap();
        assert_eq!(five_cycles(&g).len(), brute_five_cycle_count(&g), "seed {seed}");
        if let Witness::Edges(e) = five_cycle_cover(&g).unwrap().witness {
            assert!(verify_five_cycle_cover(&g, &e));
            covered += 1;
        }
    }
    assert!(covered > 0);
    assert_eq!(brute_five_cycle_count(&generate::petersen(1.0)), 12);
}
