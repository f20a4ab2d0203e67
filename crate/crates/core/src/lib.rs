//! Exact extremal graph computations.
//!
//! The crate counts injective homomorphisms and subgraph copies exactly,
//! builds Turán and complete multipartite graphs, decomposes clique-free
//! graphs into r-partite subgraphs, and mechanically checks the
//! combinatorial inequalities that control homomorphism counts while a
//! clique-free graph is transformed into the Turán graph. All arithmetic
//! is exact: counts are integers, inequality checks are rationals.
//!
//! Counting is generic over the integer scalar (see [`count::Count`]).
//! [`BigCount`] is the arbitrary-precision default; [`FastCount`] is an
//! opt-in 128-bit fast path whose operations fail loudly on overflow.

pub mod bitset;
pub mod canon;
pub mod count;
pub mod graph;
pub mod graph6;
pub mod partite;
pub mod search;
pub mod verify;

/// Arbitrary-precision count; the default scalar for all counting.
pub type BigCount = num_bigint::BigUint;

/// Fixed-width 128-bit count; faster, fails loudly on overflow.
pub type FastCount = u128;

/// Exact rational used by the inequality checkers.
pub type Rat = num_rational::BigRational;

/// Counts up to 2^53 serialize as JSON numbers, larger ones as decimal
/// strings, so consumers keep integer fidelity.
pub fn count_json(c: &BigCount) -> serde_json::Value {
    use num_traits::ToPrimitive;
    const SAFE: u64 = 1 << 53;
    match c.to_u64() {
        Some(v) if v <= SAFE => serde_json::Value::from(v),
        _ => serde_json::Value::from(c.to_string()),
    }
}

pub use canon::{are_isomorphic, canonical_form, canonical_string};
pub use count::{
    aut_count, count_copies, count_extensions, count_inj, count_inj_brute, count_inj_through,
    Count, CountError, PartialMap, PatternGraph,
};
pub use graph::{
    complete_multipartite, turan_edge_count, turan_graph, DensityDeficit, Graph, GraphError,
    PartitionedGraph,
};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use partite::{
    fill_to_complete_multipartite, max_r_partite_exact, max_r_partite_exact_with_budget,
    max_r_partite_local, maximal_completion, rebalance_step, ExactBudget, PartiteDecomposition,
    PartiteError, RebalanceMove,
};
pub use search::{
    certify_turan_good_at, enumerate_graphs, search_extremal, transform_trace, GraphSource,
    SearchError, SearchResult, TransformTrace,
};
pub use verify::{
    check_dense_hom_bound, check_duplication_gain, check_edge_loss_bound, check_extension_bound,
    check_furedi, check_rebalance, check_rpartite, check_vertex_bounds, check_xyp, LemmaId,
    LemmaReport, VerifyError,
};
