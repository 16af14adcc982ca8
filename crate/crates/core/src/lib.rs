//! Combinatorial Max-Cut approximation built on the tree-bipartite
//! decomposition, with certificates that can be checked independently.

pub mod cactus;
pub mod component_maxcut;
pub mod decomposition;
pub mod drivers;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;

pub use cactus::{constrained_cactus_cut, piece_feasible, PartialAssignment, PieceAssignment};
pub use component_maxcut::{
    component_max_cut, format_ratio, greedy_merge, greedy_merge_traced, rational, thm1_approx,
    Algorithm, ApproxResult, LocalCut, MergeStep, Rational, UpperBoundProof,
};
pub use decomposition::{
    odd_cycle_certificates, tree_bipartite_decompose, validate_decomposition, Component,
    ComponentKind, Decomposition, Rule, ValidationReport, Violation,
};
pub use drivers::{
    auto_approx, lemma2_finish, lemma3_certificate, lemma3_ratio, merge_tail, thm2_approx,
    thm3_approx, Effort, TailKind, TailState,
};
pub use error::{Error, Result};
pub use graph::{
    cut_size, dfs_tree, is_even_cycle_free, spanning_tree_cut, two_color, Cut, CycleStructure,
    DfsTree, EvenCycleWitness, Graph, OddCycleWitness, Side, Subgraph, TwoColoring,
};
pub use io::{parse_edge_list, write_edge_list};
pub use oracle::{constrained_exact, exact_max_cut, verify_result, RatioReport, ORACLE_CAP};
