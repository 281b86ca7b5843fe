use proptest::prelude::*;

use cutbound::bounds::{at_least, dfs_bound, girth_bound, poljak_turzik, Mode, RootPolicy};
use cutbound::cli::{bound_suite, SuiteOptions};
use cutbound::coloring::vizing_coloring;
use cutbound::generate::{self, WeightDistribution};
use cutbound::graph::WeightedGraph;
use cutbound::oracle::exact_max_cut;

fn check_suite(g: &WeightedGraph) -> Result<(), TestCaseError> {
    let mac = exact_max_cut(g).unwrap().value;
    let options = SuiteOptions { trials: 16, ..SuiteOptions::default() };
    for entry in bound_suite(g, &options) {
        match entry.outcome {
            Ok(r) => {
                prop_assert!(r.cut.is_consistent(g));
                prop_assert!(r.cut.weight() <= mac + 1e-9, "{} cut above mac", r.name);
                if r.mode == Mode::Deterministic {
                    prop_assert!(r.cut_meets_bound(g), "{}: cut {} < bound {}", r.name, r.cut.weight(), r.bound_value);
                    prop_assert!(at_least(g, mac, r.bound_value, r.denominator), "{}: bound {} > mac {mac}", r.name, r.bound_value);
                }
            }
            Err(e) => prop_assert!(e.is_input_error(), "{}: {e}", entry.name),
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn connected_graphs_are_sound(n in 2usize..12, extra in 0.0f64..0.7, seed in any::<u64>(), integral in any::<bool>()) {
        let weights = if integral {
            WeightDistribution::Integer { lo: 0, hi: 10 }
        } else {
            WeightDistribution::Uniform { lo: 0.0, hi: 4.0 }
        };
        check_suite(&generate::random_connected(n, extra, seed, weights).unwrap())?;
    }

    #[test]
    fn subcubic_graphs_are_sound(n in 2usize..18, seed in any::<u64>()) {
        check_suite(&generate::random_triangle_free_subcubic(n, seed, WeightDistribution::Integer { lo: 0, hi: 10 }).unwrap())?;
    }

    #[test]
    fn dfs_dominates_poljak_turzik(n in 2usize..25, extra in 0.0f64..0.5, seed in any::<u64>()) {
        let g = generate::random_connected(n, extra, seed, WeightDistribution::Integer { lo: 1, hi: 20 }).unwrap();
        let d = dfs_bound(&g, RootPolicy::Fixed(0)).unwrap();
        let p = poljak_turzik(&g).unwrap();
        prop_assert!(d.bound_value >= p.bound_value - 1e-9);
    }

    #[test]
    fn vizing_is_proper(n in 1usize..30, extra in 0.0f64..0.6, seed in any::<u64>()) {
        let g = generate::random_connected(n, extra, seed, WeightDistribution::Unit).unwrap();
        let c = vizing_coloring(&g);
        prop_assert!(c.is_proper(&g));
        prop_assert!(c.color_count <= g.max_degree() + 1);
    }
}

#[test]
fn disconnected_inputs_sum_components() {
    let g = WeightedGraph::new(9, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 4, 1.0), (0, 4, 1.0), (5, 6, 2.0), (7, 8, 3.0)]).unwrap();
    check_suite(&g).unwrap();
    let r = poljak_turzik(&g).unwrap();
    assert_eq!(r.bound_value, 3.5 + 1.5 + 2.25);
}

#[test]
fn larger_girth_never_hurts() {
    let g = generate::cycle(9, 1.0).unwrap();
    let mut last = 0.0;
    for k in [2, 4, 6, 8] {
        let b = girth_bound(&g, Some(k), RootPolicy::Auto).unwrap().bound_value;
        assert!(b >= last);
        last = b;
    }
}
