//! Bitset graph kernels and a verification toolkit for minimum-degree
//! bipartiteness thresholds of graphs forbidding a family of odd cycles.
//!
//! The library builds the extremal constructions (balanced cycle blow-ups,
//! the BC spine-of-blocks family, Häggkvist's graph, Turán graphs), analyzes
//! odd-cycle spectra, computes the exact threshold coefficient
//! `max(1/(2(2l+1)), 2/(2k+3))`, and verifies the bipartiteness theorems both
//! exhaustively over canonically enumerated small graphs and stochastically
//! at larger orders.
//!
//! A guided tour lives in the `book/` directory; its code snippets compile
//! and run as doc-tests of this crate.

// index loops over parallel vertex-indexed arrays are the house style
#![allow(clippy::needless_range_loop)]

pub mod constructions;
pub mod cycles;
pub mod decompose;
pub mod enumerate;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod oracle;
pub mod proofkit;
pub mod verdict;
pub mod verify;

pub use constructions::{
    balanced_cycle_blowup, bc_graph, complete_bipartite, cycle_graph, haggkvist_graph,
    turan_graph, ConstructionSpec,
};
pub use cycles::{
    cycle_spectrum, family_violation, has_cycle_of_length, is_family_free, shortest_odd_cycle,
    CycleSpectrum,
};
pub use family::{FamilyProfile, OddFamily, Regime, Threshold};
pub use graph::{Bipartiteness, Bipartition, Graph, GraphError, OddCycle};
pub use graph6::{graph6_decode, graph6_encode, graph6_string};
pub use iso::{are_isomorphic, canonical_form};
pub use proofkit::{
    erdos_gallai_holds, greedy_bipartite_path, longest_path_order, min_degree_subgraph,
    recognize_bc_graph, recognize_cycle_blowup, PathRequest, Side,
};
pub use verdict::{check_graph_against_theorem, Verdict};
pub use verify::{
    analyze_graph, random_counterexample_search, verify_theorem_exhaustive, VerificationReport,
};
pub use enumerate::{enumerate_count, enumerate_for_each, enumerate_graphs, EnumSpec};

// The book's code fences double as doc-tests so the guide can never drift
// from the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/thresholds.md")]
    mod thresholds {}
    #[doc = include_str!("../../../book/src/proof_toolkit.md")]
    mod proof_toolkit {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
