//! Triangle-free graphs of maximum degree three.

mod brooks;
mod claims;
mod regularize;
mod sampling;
mod successor;

pub use brooks::{brooks_3_coloring, cut_vertex, VertexColoring3};
pub use claims::{claim_a_cut, claim_f_cut, claim_g_cut, mainprob_cut, two_thirds_cut, ClaimCut};
pub use regularize::{regularize, Regularized};
pub use sampling::{
    lemma_prob_bound, lemma_prob_raw_sample, lemma_prob_sample, lemma_prob_value, mainprobtree_bound,
    shearer_bound, shearer_raw_sample, shearer_sample, shortest_odd_tree_cycle, DEFAULT_SEED, DEFAULT_TRIALS,
    TREE_COEFFICIENT, TREE_P,
};
pub use successor::{
    check_alternation, classify_edges, successor_digraph, EdgeClass, EdgeClassification, SuccessorDigraph,
};
