//! One checker per inequality: each evaluates both sides exactly over the
//! rationals and reports PASS when `lhs - rhs >= 0`.
//!
//! A checker refuses inputs that violate its hypotheses (that is a
//! rejection, not a FAIL). Every hypothesis-satisfying input is expected
//! to PASS; a FAIL would expose a counting bug and the report carries a
//! reproducer for exactly that reason.

pub mod generators;

use crate::bitset::VertexSet;
use crate::count::{count_extensions, count_inj, count_inj_through, CountError, PartialMap, PatternGraph};
use crate::graph::{turan_edge_count, turan_graph, Graph, GraphError, PartitionedGraph};
use crate::graph6::write_graph6;
use crate::partite::{max_r_partite_exact, PartiteError};
use crate::{BigCount, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("hypothesis violated: {0}")]
    Hypothesis(#[from] HypothesisViolation),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Partite(#[from] PartiteError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypothesisViolation {
    #[error("pattern graph has no edge")]
    PatternEdgeless,
    #[error("sets A and B are not disjoint")]
    NotDisjoint,
    #[error("set {0} is not independent")]
    NotIndependent(char),
    #[error("need |A| = {a} >= |B| = {b} >= 1")]
    SizeOrder { a: usize, b: usize },
    #[error("vertex {vertex} of set {which} is not adjacent to all vertices outside the set")]
    NotFullyJoined { which: char, vertex: usize },
    #[error("density deficit {delta} exceeds 1/4")]
    DensityTooHigh { delta: String },
    #[error("graph contains a clique on {0} vertices")]
    NotCliqueFree(usize),
    #[error("the subgraph has an edge missing from the host graph")]
    NotSpanning,
    #[error("the subgraph is not on the host's vertex set")]
    VertexSetMismatch,
    #[error("the two vertices must be distinct")]
    SameVertex,
    #[error("inputs must be non-negative")]
    NegativeInput,
}

/// Stable identifiers for the checkers; these are the CLI lemma ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LemmaId {
    Lowerbound,
    DenseHom,
    Xyp,
    Rebalance,
    Rpartite,
    Furedi,
    VertexBounds,
    Duplication,
    EdgeLoss,
}

impl LemmaId {
    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::Lowerbound => "lowerbound",
            LemmaId::DenseHom => "dense-hom",
            LemmaId::Xyp => "xyp",
            LemmaId::Rebalance => "rebalance",
            LemmaId::Rpartite => "rpartite",
            LemmaId::Furedi => "furedi",
            LemmaId::VertexBounds => "vertex-bounds",
            LemmaId::Duplication => "duplication",
            LemmaId::EdgeLoss => "edge-loss",
        }
    }

    pub fn parse(s: &str) -> Option<LemmaId> {
        Some(match s {
            "lowerbound" => LemmaId::Lowerbound,
            "dense-hom" => LemmaId::DenseHom,
            "xyp" => LemmaId::Xyp,
            "rebalance" => LemmaId::Rebalance,
            "rpartite" => LemmaId::Rpartite,
            "furedi" => LemmaId::Furedi,
            "vertex-bounds" => LemmaId::VertexBounds,
            "duplication" => LemmaId::Duplication,
            "edge-loss" => LemmaId::EdgeLoss,
            _ => return None,
        })
    }

    pub const ALL: [LemmaId; 9] = [
        LemmaId::Lowerbound,
        LemmaId::DenseHom,
        LemmaId::Xyp,
        LemmaId::Rebalance,
        LemmaId::Rpartite,
        LemmaId::Furedi,
        LemmaId::VertexBounds,
        LemmaId::Duplication,
        LemmaId::EdgeLoss,
    ];
}

impl std::fmt::Display for LemmaId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The outcome of one inequality check, in exact rationals.
///
/// `slack = lhs - rhs`; the verdict is PASS exactly when the slack is
/// non-negative. A pass is *substantive* when it is not implied by sign
/// alone, i.e. `rhs > 0` (the comparison in the `xyp` check has no sign
/// shortcut, so it is always substantive). Negative right-hand sides are
/// reported as computed, never clamped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub lemma_id: LemmaId,
    pub lhs: Rat,
    pub rhs: Rat,
    pub params: BTreeMap<String, String>,
    pub reproducer: BTreeMap<String, String>,
}

impl LemmaReport {
    fn new(
        lemma_id: LemmaId,
        lhs: Rat,
        rhs: Rat,
        params: BTreeMap<String, String>,
        reproducer: BTreeMap<String, String>,
    ) -> LemmaReport {
        LemmaReport {
            lemma_id,
            lhs,
            rhs,
            params,
            reproducer,
        }
    }

    pub fn slack(&self) -> Rat {
        &self.lhs - &self.rhs
    }

    pub fn passes(&self) -> bool {
        !self.slack().is_negative()
    }

    pub fn slack_sign(&self) -> i8 {
        let s = self.slack();
        if s.is_positive() {
            1
        } else if s.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn substantive(&self) -> bool {
        self.lemma_id == LemmaId::Xyp || self.rhs.is_positive()
    }

    /// Line-delimited JSON form.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

fn rat_fields(r: &Rat) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}

impl Serialize for LemmaReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct RatRepr {
            num: String,
            den: String,
        }
        let (lnum, lden) = rat_fields(&self.lhs);
        let (rnum, rden) = rat_fields(&self.rhs);
        let mut st = serializer.serialize_struct("LemmaReport", 8)?;
        st.serialize_field("lemma_id", self.lemma_id.as_str())?;
        st.serialize_field("params", &self.params)?;
        st.serialize_field("lhs", &RatRepr { num: lnum, den: lden })?;
        st.serialize_field("rhs", &RatRepr { num: rnum, den: rden })?;
        st.serialize_field("slack_sign", &self.slack_sign())?;
        st.serialize_field("verdict", if self.passes() { "pass" } else { "fail" })?;
        st.serialize_field("substantive", &self.substantive())?;
        st.serialize_field("reproducer", &self.reproducer)?;
        st.end()
    }
}

fn rat_from_count(c: &BigCount) -> Rat {
    Rat::from_integer(BigInt::from(c.clone()))
}

fn rat_usize(v: usize) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Exact `n^exp` over the rationals; negative exponents need `n >= 1`.
pub(crate) fn rat_pow(n: usize, exp: i64) -> Rat {
    let base = BigInt::from(n);
    if exp >= 0 {
        Rat::from_integer(num_traits::pow(base, exp as usize))
    } else {
        assert!(n >= 1, "negative power of zero");
        Rat::new(BigInt::one(), num_traits::pow(base, (-exp) as usize))
    }
}

fn delta_of(g: &Graph) -> Result<Rat, GraphError> {
    Ok(g.density_deficit()?.into_ratio())
}

fn require_quarter_dense(delta: &Rat) -> Result<(), HypothesisViolation> {
    if *delta > Rat::new(BigInt::one(), BigInt::from(4)) {
        return Err(HypothesisViolation::DensityTooHigh {
            delta: delta.to_string(),
        });
    }
    Ok(())
}

/// Compacted graph6 plus the relabeling of a vertex set, for reproducers
/// on masked graphs.
fn repro_graph(g: &Graph) -> (String, Vec<usize>) {
    let (c, old_labels) = g.compacted_with_map();
    (write_graph6(&c), old_labels)
}

fn remap_set(set: &VertexSet, old_labels: &[usize]) -> String {
    let labels: Vec<String> = set
        .iter()
        .map(|v| old_labels.binary_search(&v).expect("active label").to_string())
        .collect();
    labels.join(",")
}

fn remap_vertex(v: usize, old_labels: &[usize]) -> usize {
    old_labels.binary_search(&v).expect("active label")
}

fn inj(h: &PatternGraph, g: &Graph) -> Result<BigCount, CountError> {
    count_inj(h, g)
}

/// Every partial injective homomorphism into a δ-dense host has at least
/// `(1 - δ·k·v(H))·v(G)^k` extensions, `k` the number of free pattern
/// vertices.
pub fn check_extension_bound(
    h: &PatternGraph,
    g: &Graph,
    pm: &PartialMap,
) -> Result<LemmaReport, VerifyError> {
    let delta = delta_of(g)?;
    let lhs = rat_from_count(&count_extensions(h, g, pm)?);
    let vh = h.vertex_count();
    let n = g.vertex_count();
    let k = vh - pm.domain_size();
    let rhs = (Rat::one() - &delta * rat_usize(k) * rat_usize(vh)) * rat_pow(n, k as i64);

    let mut params = BTreeMap::new();
    params.insert("delta".into(), delta.to_string());
    params.insert("k".into(), k.to_string());
    params.insert("v_h".into(), vh.to_string());
    params.insert("n".into(), n.to_string());
    params.insert("domain".into(), pm.domain_size().to_string());
    let mut repro = BTreeMap::new();
    let (g6, labels) = repro_graph(g);
    repro.insert("h".into(), write_graph6(h.graph()));
    repro.insert("g".into(), g6);
    repro.insert(
        "pm".into(),
        pm.pairs()
            .iter()
            .map(|&(u, v)| format!("{}:{}", u, remap_vertex(v, &labels)))
            .collect::<Vec<_>>()
            .join(","),
    );
    Ok(LemmaReport::new(LemmaId::Lowerbound, lhs, rhs, params, repro))
}

/// A δ-dense host admits at least `(1 - δ·v(H)²)·v(G)^{v(H)}` injective
/// homomorphisms from any pattern.
pub fn check_dense_hom_bound(h: &PatternGraph, g: &Graph) -> Result<LemmaReport, VerifyError> {
    let delta = delta_of(g)?;
    let vh = h.vertex_count();
    let n = g.vertex_count();
    let lhs = rat_from_count(&inj(h, g)?);
    let rhs = (Rat::one() - &delta * rat_usize(vh * vh)) * rat_pow(n, vh as i64);

    let mut params = BTreeMap::new();
    params.insert("delta".into(), delta.to_string());
    params.insert("v_h".into(), vh.to_string());
    params.insert("n".into(), n.to_string());
    let mut repro = BTreeMap::new();
    repro.insert("h".into(), write_graph6(h.graph()));
    repro.insert("g".into(), repro_graph(g).0);
    Ok(LemmaReport::new(LemmaId::DenseHom, lhs, rhs, params, repro))
}

/// `(1-x)(1-y)^p >= 1 - x - p·y` for non-negative rationals and integer
/// `p >= 0`, compared exactly.
pub fn check_xyp(x: &Rat, y: &Rat, p: u32) -> Result<LemmaReport, VerifyError> {
    if x.is_negative() || y.is_negative() {
        return Err(HypothesisViolation::NegativeInput.into());
    }
    let one = Rat::one();
    let base = &one - y;
    let lhs = (&one - x) * num_traits::pow(base, p as usize);
    let rhs = &one - x - Rat::from_integer(BigInt::from(p)) * y;

    let mut params = BTreeMap::new();
    params.insert("x".into(), x.to_string());
    params.insert("y".into(), y.to_string());
    params.insert("p".into(), p.to_string());
    let repro = params.clone();
    Ok(LemmaReport::new(LemmaId::Xyp, lhs, rhs, params, repro))
}

fn validate_joined_independent(
    g: &Graph,
    set: &VertexSet,
    which: char,
) -> Result<(), VerifyError> {
    for v in set.iter() {
        if !g.is_active(v) {
            return Err(GraphError::InactiveVertex(v).into());
        }
    }
    if !g.is_independent(set) {
        return Err(HypothesisViolation::NotIndependent(which).into());
    }
    let n = g.vertex_count();
    let size = set.count();
    for v in set.iter() {
        if g.degree(v) != n - size {
            return Err(HypothesisViolation::NotFullyJoined { which, vertex: v }.into());
        }
    }
    Ok(())
}

/// Deleting a vertex from the larger of two fully joined disjoint
/// independent sets beats deleting one from the smaller by at least
/// `2·e(H)·(|A|-|B|)·(1 - 3δ·v(H)³)·v(G)^{v(H)-2}`.
pub fn check_rebalance(
    h: &PatternGraph,
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<LemmaReport, VerifyError> {
    if h.edge_count() == 0 {
        return Err(HypothesisViolation::PatternEdgeless.into());
    }
    let a_size = a.count();
    let b_size = b.count();
    let b_elems: std::collections::HashSet<usize> = b.iter().collect();
    if a.iter().any(|v| b_elems.contains(&v)) {
        return Err(HypothesisViolation::NotDisjoint.into());
    }
    if b_size < 1 || a_size < b_size {
        return Err(HypothesisViolation::SizeOrder { a: a_size, b: b_size }.into());
    }
    validate_joined_independent(g, a, 'A')?;
    validate_joined_independent(g, b, 'B')?;
    let delta = delta_of(g)?;
    require_quarter_dense(&delta)?;

    let g_a = g.delete_vertex(a.max().expect("A non-empty"))?;
    let g_b = g.delete_vertex(b.max().expect("B non-empty"))?;
    let vh = h.vertex_count();
    let n = g.vertex_count();
    let lhs = rat_from_count(&inj(h, &g_a)?);
    let correction = rat_usize(2 * h.edge_count())
        * rat_usize(a_size - b_size)
        * (Rat::one() - rat_usize(3) * &delta * rat_usize(vh * vh * vh))
        * rat_pow(n, vh as i64 - 2);
    let rhs = rat_from_count(&inj(h, &g_b)?) + correction;

    let mut params = BTreeMap::new();
    params.insert("delta".into(), delta.to_string());
    params.insert("size_a".into(), a_size.to_string());
    params.insert("size_b".into(), b_size.to_string());
    params.insert("v_h".into(), vh.to_string());
    params.insert("e_h".into(), h.edge_count().to_string());
    params.insert("n".into(), n.to_string());
    let mut repro = BTreeMap::new();
    let (g6, labels) = repro_graph(g);
    repro.insert("h".into(), write_graph6(h.graph()));
    repro.insert("g".into(), g6);
    repro.insert("a".into(), remap_set(a, &labels));
    repro.insert("b".into(), remap_set(b, &labels));
    Ok(LemmaReport::new(LemmaId::Rebalance, lhs, rhs, params, repro))
}

/// The count deficit of an r-partite δ-dense graph against the Turán
/// graph is at least `2·e(H)·(1-3δ·v(H)³)·(e(T_r(n))-e(G))·n^{v(H)-2}`.
pub fn check_rpartite(h: &PatternGraph, pg: &PartitionedGraph) -> Result<LemmaReport, VerifyError> {
    if h.edge_count() == 0 {
        return Err(HypothesisViolation::PatternEdgeless.into());
    }
    let g = pg.graph();
    let delta = delta_of(g)?;
    require_quarter_dense(&delta)?;

    let r = pg.part_count();
    let n = g.vertex_count();
    let vh = h.vertex_count();
    let t = turan_graph(r, n);
    let e_t: BigCount = turan_edge_count(r, n)?;
    debug_assert_eq!(e_t, BigCount::from(t.graph().edge_count()));
    let lhs = rat_from_count(&inj(h, t.graph())?) - rat_from_count(&inj(h, g)?);
    let deficit = rat_from_count(&e_t) - rat_usize(g.edge_count());
    let rhs = rat_usize(2 * h.edge_count())
        * (Rat::one() - rat_usize(3) * &delta * rat_usize(vh * vh * vh))
        * deficit
        * rat_pow(n, vh as i64 - 2);

    let mut params = BTreeMap::new();
    params.insert("delta".into(), delta.to_string());
    params.insert("r".into(), r.to_string());
    params.insert("n".into(), n.to_string());
    params.insert("v_h".into(), vh.to_string());
    params.insert("e_h".into(), h.edge_count().to_string());
    params.insert("e_g".into(), g.edge_count().to_string());
    params.insert("e_turan".into(), e_t.to_string());
    let mut repro = BTreeMap::new();
    let (g6, labels) = repro_graph(g);
    repro.insert("h".into(), write_graph6(h.graph()));
    repro.insert("g".into(), g6);
    repro.insert(
        "parts".into(),
        pg.parts()
            .iter()
            .map(|p| remap_set(p, &labels))
            .collect::<Vec<_>>()
            .join("|"),
    );
    Ok(LemmaReport::new(LemmaId::Rpartite, lhs, rhs, params, repro))
}

/// A K_{r+1}-free graph has an r-partite subgraph losing at most
/// `e(T_r(n)) - e(G)` edges: the exact minimum loss is compared against
/// that budget (`lhs` the budget, `rhs` the exact loss).
pub fn check_furedi(g: &Graph, r: usize) -> Result<LemmaReport, VerifyError> {
    if !g.is_kfree(r + 1) {
        return Err(HypothesisViolation::NotCliqueFree(r + 1).into());
    }
    let dec = max_r_partite_exact(g, r)?;
    let n = g.vertex_count();
    let e_t: BigCount = turan_edge_count(r, n)?;
    let lhs = rat_from_count(&e_t) - rat_usize(g.edge_count());
    let rhs = rat_usize(dec.dropped_edges());

    let mut params = BTreeMap::new();
    params.insert("r".into(), r.to_string());
    params.insert("n".into(), n.to_string());
    params.insert("e_g".into(), g.edge_count().to_string());
    params.insert("e_turan".into(), e_t.to_string());
    params.insert("dropped".into(), dec.dropped_edges().to_string());
    let mut repro = BTreeMap::new();
    repro.insert("g".into(), repro_graph(g).0);
    repro.insert("r".into(), r.to_string());
    Ok(LemmaReport::new(LemmaId::Furedi, lhs, rhs, params, repro))
}

/// Two per-vertex bounds on through-counts `ii(v)`: (a) some vertex meets
/// the average `v(H)·ii(H,G)/n`, and (b) every vertex obeys
/// `ii(v) <= v(H)·n^{v(H)-1} - (n-deg(v))·n^{v(H)-2}` (reported with the
/// bound as `lhs` so PASS keeps `slack >= 0`).
pub fn check_vertex_bounds(
    h: &PatternGraph,
    g: &Graph,
    v: usize,
) -> Result<[LemmaReport; 2], VerifyError> {
    if h.edge_count() == 0 {
        return Err(HypothesisViolation::PatternEdgeless.into());
    }
    if !g.is_active(v) {
        return Err(GraphError::InactiveVertex(v).into());
    }
    let vh = h.vertex_count();
    let n = g.vertex_count();
    let total: BigCount = inj(h, g)?;
    let mut max_through: BigCount = BigCount::zero();
    let mut through_v: BigCount = BigCount::zero();
    for u in g.vertices().collect::<Vec<_>>() {
        let through: BigCount = count_inj_through(h, g, u)?;
        if u == v {
            through_v = through.clone();
        }
        if through > max_through {
            max_through = through;
        }
    }

    let mut params = BTreeMap::new();
    params.insert("v_h".into(), vh.to_string());
    params.insert("n".into(), n.to_string());
    params.insert("v".into(), v.to_string());
    params.insert("deg_v".into(), g.degree(v).to_string());
    let mut repro = BTreeMap::new();
    let (g6, labels) = repro_graph(g);
    repro.insert("h".into(), write_graph6(h.graph()));
    repro.insert("g".into(), g6);
    repro.insert("v".into(), remap_vertex(v, &labels).to_string());

    let mut averaging_params = params.clone();
    averaging_params.insert("subcheck".into(), "averaging".into());
    let averaging = LemmaReport::new(
        LemmaId::VertexBounds,
        rat_from_count(&max_through),
        rat_usize(vh) / rat_usize(n) * rat_from_count(&total),
        averaging_params,
        repro.clone(),
    );

    let mut upper_params = params;
    upper_params.insert("subcheck".into(), "upper".into());
    let bound = rat_usize(vh) * rat_pow(n, vh as i64 - 1)
        - rat_usize(n - g.degree(v)) * rat_pow(n, vh as i64 - 2);
    let upper = LemmaReport::new(
        LemmaId::VertexBounds,
        bound,
        rat_from_count(&through_v),
        upper_params,
        repro,
    );
    Ok([averaging, upper])
}

/// Replacing `v` by a clone of `v0` loses at most
/// `ii(v) - ii(v0) + v(H)²·n^{v(H)-2}` homomorphisms.
pub fn check_duplication_gain(
    h: &PatternGraph,
    g: &Graph,
    v0: usize,
    v: usize,
) -> Result<LemmaReport, VerifyError> {
    if v0 == v {
        return Err(HypothesisViolation::SameVertex.into());
    }
    let dup = g.duplicate_vertex(v0, v)?;
    let vh = h.vertex_count();
    let n = g.vertex_count();
    let lhs = rat_from_count(&inj(h, &dup)?);
    let through_v: BigCount = count_inj_through(h, g, v)?;
    let through_v0: BigCount = count_inj_through(h, g, v0)?;
    let overlap_term = if vh == 0 {
        Rat::zero()
    } else {
        rat_usize(vh * vh) * rat_pow(n, vh as i64 - 2)
    };
    let rhs = rat_from_count(&inj(h, g)?) - rat_from_count(&through_v)
        + rat_from_count(&through_v0)
        - overlap_term;

    let mut params = BTreeMap::new();
    params.insert("v_h".into(), vh.to_string());
    params.insert("n".into(), n.to_string());
    params.insert("v0".into(), v0.to_string());
    params.insert("v".into(), v.to_string());
    let mut repro = BTreeMap::new();
    let (g6, labels) = repro_graph(g);
    repro.insert("h".into(), write_graph6(h.graph()));
    repro.insert("g".into(), g6);
    repro.insert("v0".into(), remap_vertex(v0, &labels).to_string());
    repro.insert("v".into(), remap_vertex(v, &labels).to_string());
    Ok(LemmaReport::new(LemmaId::Duplication, lhs, rhs, params, repro))
}

/// A spanning subgraph loses at most `2·e(H)·(e(G)-e(G0))·n^{v(H)-2}`
/// homomorphisms against its host.
pub fn check_edge_loss_bound(
    h: &PatternGraph,
    g: &Graph,
    g0: &Graph,
) -> Result<LemmaReport, VerifyError> {
    if g0.label_count() != g.label_count() || g0.active() != g.active() {
        return Err(HypothesisViolation::VertexSetMismatch.into());
    }
    if g0.edges().iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return Err(HypothesisViolation::NotSpanning.into());
    }
    let vh = h.vertex_count();
    let n = g.vertex_count();
    let lost = g.edge_count() - g0.edge_count();
    let lhs = rat_from_count(&inj(h, g0)?);
    let loss_term = if h.edge_count() * lost == 0 {
        Rat::zero()
    } else {
        rat_usize(2 * h.edge_count() * lost) * rat_pow(n, vh as i64 - 2)
    };
    let rhs = rat_from_count(&inj(h, g)?) - loss_term;

    let mut params = BTreeMap::new();
    params.insert("v_h".into(), vh.to_string());
    params.insert("e_h".into(), h.edge_count().to_string());
    params.insert("n".into(), n.to_string());
    params.insert("e_g".into(), g.edge_count().to_string());
    params.insert("e_g0".into(), g0.edge_count().to_string());
    let mut repro = BTreeMap::new();
    repro.insert("h".into(), write_graph6(h.graph()));
    repro.insert("g".into(), repro_graph(g).0);
    repro.insert("g0".into(), repro_graph(g0).0);
    Ok(LemmaReport::new(LemmaId::EdgeLoss, lhs, rhs, params, repro))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_multipartite;

    fn pat(g: Graph) -> PatternGraph {
        PatternGraph::new(g)
    }

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn extension_bound_frozen_values() {
        // a pinned edge endpoint in K5: 4 extensions vs (1 - 1/5·1·2)·5 = 3
        let k2 = pat(Graph::complete(2));
        let k5 = Graph::complete(5);
        let r = check_extension_bound(&k2, &k5, &PartialMap::new(vec![(0, 0)])).unwrap();
        assert_eq!(r.lhs, rat(4, 1));
        assert_eq!(r.rhs, rat(3, 1));
        assert!(r.passes() && r.substantive());

        // k = 0: exactly one extension, bound is exactly 1
        let full = PartialMap::new(vec![(0, 0), (1, 1)]);
        let r = check_extension_bound(&k2, &k5, &full).unwrap();
        assert_eq!(r.lhs, rat(1, 1));
        assert_eq!(r.rhs, rat(1, 1));
        assert_eq!(r.slack_sign(), 0);

        // path center pinned in K6
        let p3 = pat(Graph::path(3));
        let k6 = Graph::complete(6);
        let r = check_extension_bound(&p3, &k6, &PartialMap::new(vec![(1, 2)])).unwrap();
        assert_eq!(r.lhs, rat(20, 1));
        assert!(r.passes());

        // invalid partial maps are rejected, not failed
        let bad = PartialMap::new(vec![(0, 0), (1, 0)]);
        assert!(matches!(
            check_extension_bound(&k2, &k5, &bad),
            Err(VerifyError::Count(CountError::InvalidPartialMap(_)))
        ));
    }

    #[test]
    fn dense_hom_frozen_values() {
        // K2 in K5: 20 >= (1 - 4/5)·25 = 5
        let k2 = pat(Graph::complete(2));
        let r = check_dense_hom_bound(&k2, &Graph::complete(5)).unwrap();
        assert_eq!(r.lhs, rat(20, 1));
        assert_eq!(r.rhs, rat(5, 1));
        assert!(r.passes() && r.substantive());

        // complete into complete: falling factorial beats the bound
        let k3 = pat(Graph::complete(3));
        let r = check_dense_hom_bound(&k3, &Graph::complete(6)).unwrap();
        assert_eq!(r.lhs, rat(120, 1));
        assert!(r.passes());

        // sparse host: negative rhs, vacuous pass
        let r = check_dense_hom_bound(&k3, &Graph::cycle(4)).unwrap();
        assert!(r.rhs.is_negative());
        assert!(r.passes());
        assert!(!r.substantive());

        assert!(matches!(
            check_dense_hom_bound(&k2, &Graph::edgeless(0)),
            Err(VerifyError::Graph(GraphError::EmptyGraph))
        ));
    }

    #[test]
    fn xyp_frozen_values() {
        // p = 0 is an equality
        let r = check_xyp(&rat(1, 3), &rat(2, 3), 0).unwrap();
        assert_eq!(r.slack_sign(), 0);

        let r = check_xyp(&rat(0, 1), &rat(1, 2), 2).unwrap();
        assert_eq!(r.lhs, rat(1, 4));
        assert_eq!(r.rhs, rat(0, 1));
        assert!(r.passes());

        let r = check_xyp(&rat(1, 3), &rat(1, 3), 3).unwrap();
        assert_eq!(r.lhs, rat(16, 81));
        assert_eq!(r.rhs, rat(-1, 3));
        assert!(r.passes());
        assert!(r.substantive());

        assert!(matches!(
            check_xyp(&rat(-1, 2), &rat(0, 1), 1),
            Err(VerifyError::Hypothesis(HypothesisViolation::NegativeInput))
        ));
    }

    #[test]
    fn rebalance_frozen_values() {
        // host [2,1,1,1,1,1,1] on 8 vertices, delta = 1/4; A the 2-part,
        // B a singleton: 42 >= 40 + 2·1·(1-6) = 30
        let pg = complete_multipartite(&[2, 1, 1, 1, 1, 1, 1]);
        let k2 = pat(Graph::complete(2));
        let a = pg.parts()[0].clone();
        let b = pg.parts()[1].clone();
        let r = check_rebalance(&k2, pg.graph(), &a, &b).unwrap();
        assert_eq!(r.lhs, rat(42, 1));
        assert_eq!(r.rhs, rat(30, 1));
        assert!(r.passes() && r.substantive());

        // equal sizes: both deletions give isomorphic graphs, slack 0
        let pg = complete_multipartite(&[2, 2, 1, 1, 1, 1]);
        let a = pg.parts()[0].clone();
        let b = pg.parts()[1].clone();
        let r = check_rebalance(&k2, pg.graph(), &a, &b).unwrap();
        assert_eq!(r.slack_sign(), 0);

        // positive correction term when delta < 1/(3·v(H)^3)
        let p3 = pat(Graph::path(3));
        let mut sizes = vec![2];
        sizes.extend(std::iter::repeat_n(1, 165));
        let pg = complete_multipartite(&sizes);
        let a = pg.parts()[0].clone();
        let b = pg.parts()[1].clone();
        let r = check_rebalance(&p3, pg.graph(), &a, &b).unwrap();
        let correction = &r.rhs
            - Rat::from_integer(BigInt::from(crate::count_inj::<crate::BigCount>(
                &p3,
                &pg.graph().delete_vertex(b.max().unwrap()).unwrap(),
            )
            .unwrap()));
        assert!(correction.is_positive());
        assert!(r.passes());
    }

    #[test]
    fn rebalance_rejects_each_hypothesis_violation() {
        let pg = complete_multipartite(&[2, 2, 1, 1, 1, 1]);
        let g = pg.graph();
        let a = pg.parts()[0].clone();
        let b = pg.parts()[1].clone();

        let edgeless = pat(Graph::edgeless(2));
        assert!(matches!(
            check_rebalance(&edgeless, g, &a, &b),
            Err(VerifyError::Hypothesis(HypothesisViolation::PatternEdgeless))
        ));

        let k2 = pat(Graph::complete(2));
        assert!(matches!(
            check_rebalance(&k2, g, &a, &a),
            Err(VerifyError::Hypothesis(HypothesisViolation::NotDisjoint))
        ));

        // a cross-part pair is not independent
        let mixed: VertexSet = [a.min().unwrap(), b.min().unwrap()].into_iter().collect();
        let singleton: VertexSet = [g.vertex_count() - 1].into_iter().collect();
        assert!(matches!(
            check_rebalance(&k2, g, &mixed, &singleton),
            Err(VerifyError::Hypothesis(HypothesisViolation::NotIndependent('A')))
        ));

        // half of a part misses its part-mate
        let half: VertexSet = [a.min().unwrap()].into_iter().collect();
        assert!(matches!(
            check_rebalance(&k2, g, &half, &singleton),
            Err(VerifyError::Hypothesis(HypothesisViolation::NotFullyJoined { which: 'A', .. }))
        ));

        // |A| < |B|
        let single: VertexSet = [g.vertex_count() - 1].into_iter().collect();
        assert!(matches!(
            check_rebalance(&k2, g, &single, &a),
            Err(VerifyError::Hypothesis(HypothesisViolation::SizeOrder { a: 1, b: 2 }))
        ));

        // delta = 3/5 > 1/4
        let dense = complete_multipartite(&[3, 1, 1]);
        let a = dense.parts()[0].clone();
        let b = dense.parts()[1].clone();
        assert!(matches!(
            check_rebalance(&k2, dense.graph(), &a, &b),
            Err(VerifyError::Hypothesis(HypothesisViolation::DensityTooHigh { .. }))
        ));
    }

    #[test]
    fn rpartite_frozen_values() {
        // the Turán graph itself: both sides zero
        let k2 = pat(Graph::complete(2));
        let t = crate::graph::turan_graph(8, 9);
        let r = check_rpartite(&k2, &t).unwrap();
        assert_eq!(r.lhs, rat(0, 1));
        assert_eq!(r.rhs, rat(0, 1));
        assert_eq!(r.slack_sign(), 0);

        // one vertex heavier than the Turán profile: deficit exactly 1
        let mut sizes = vec![3];
        sizes.extend(std::iter::repeat_n(2, 34));
        sizes.extend([1, 1, 1]);
        let pg = complete_multipartite(&sizes);
        let r = check_rpartite(&k2, &pg).unwrap();
        assert!(r.rhs.is_positive(), "substantive instance expected");
        assert!(r.passes());

        let edgeless = pat(Graph::edgeless(2));
        assert!(matches!(
            check_rpartite(&edgeless, &t),
            Err(VerifyError::Hypothesis(HypothesisViolation::PatternEdgeless))
        ));
        let sparse = complete_multipartite(&[3, 1, 1]);
        assert!(matches!(
            check_rpartite(&k2, &sparse),
            Err(VerifyError::Hypothesis(HypothesisViolation::DensityTooHigh { .. }))
        ));
    }

    #[test]
    fn furedi_frozen_values() {
        // C5 at r = 2 is tight: budget 1, loss 1
        let r = check_furedi(&Graph::cycle(5), 2).unwrap();
        assert_eq!(r.lhs, rat(1, 1));
        assert_eq!(r.rhs, rat(1, 1));
        assert_eq!(r.slack_sign(), 0);

        // the Turán graph loses nothing
        let r = check_furedi(crate::graph::turan_graph(3, 7).graph(), 3).unwrap();
        assert_eq!(r.slack_sign(), 0);
        assert_eq!(r.lhs, rat(0, 1));

        assert!(matches!(
            check_furedi(&Graph::complete(3), 2),
            Err(VerifyError::Hypothesis(HypothesisViolation::NotCliqueFree(3)))
        ));
        assert!(matches!(
            check_furedi(&Graph::edgeless(15), 3),
            Err(VerifyError::Partite(PartiteError::BudgetExceeded { .. }))
        ));
    }

    #[test]
    fn vertex_bounds_frozen_values() {
        let k2 = pat(Graph::complete(2));
        let k3 = Graph::complete(3);
        let [avg, upper] = check_vertex_bounds(&k2, &k3, 0).unwrap();
        // averaging: 4 >= (2/3)·6, slack 0
        assert_eq!(avg.lhs, rat(4, 1));
        assert_eq!(avg.rhs, rat(4, 1));
        assert_eq!(avg.slack_sign(), 0);
        // upper: ii(v) = 4 <= 2·3 - 1·1 = 5
        assert_eq!(upper.lhs, rat(5, 1));
        assert_eq!(upper.rhs, rat(4, 1));
        assert!(upper.passes());

        // a regular host attains the average at every vertex
        let c6 = Graph::cycle(6);
        let p3 = pat(Graph::path(3));
        let [avg, _] = check_vertex_bounds(&p3, &c6, 2).unwrap();
        assert_eq!(avg.slack_sign(), 0);

        // isolated vertex: zero through-count still passes
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let [avg, upper] = check_vertex_bounds(&k2, &g, 3).unwrap();
        assert!(avg.passes() && upper.passes());
        assert_eq!(upper.rhs, rat(0, 1));

        assert!(matches!(
            check_vertex_bounds(&pat(Graph::edgeless(2)), &k3, 0),
            Err(VerifyError::Hypothesis(HypothesisViolation::PatternEdgeless))
        ));
        assert!(matches!(
            check_vertex_bounds(&k2, &k3, 7),
            Err(VerifyError::Graph(GraphError::InactiveVertex(7)))
        ));
    }

    #[test]
    fn duplication_frozen_values() {
        // cloning 0 over 2 in K3: 4 >= 6 - 4 + 4 - 4 = 2
        let k2 = pat(Graph::complete(2));
        let r = check_duplication_gain(&k2, &Graph::complete(3), 0, 2).unwrap();
        assert_eq!(r.lhs, rat(4, 1));
        assert_eq!(r.rhs, rat(2, 1));
        assert!(r.passes());

        // twins: the clone restores an isomorphic graph
        let c4 = Graph::cycle(4);
        let r = check_duplication_gain(&k2, &c4, 0, 2).unwrap();
        assert_eq!(r.lhs, rat(8, 1));
        assert!(r.passes());

        // isolated deleted vertex
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = check_duplication_gain(&k2, &g, 0, 3).unwrap();
        assert!(r.passes());

        assert!(matches!(
            check_duplication_gain(&k2, &c4, 1, 1),
            Err(VerifyError::Hypothesis(HypothesisViolation::SameVertex))
        ));
    }

    #[test]
    fn edge_loss_frozen_values() {
        let k2 = pat(Graph::complete(2));
        let k4 = Graph::complete(4);
        // identical graphs: slack 0 from equal counts
        let r = check_edge_loss_bound(&k2, &k4, &k4).unwrap();
        assert_eq!(r.slack_sign(), 0);

        // one edge removed from K4: 10 >= 12 - 2, slack 0
        let minus = k4.without_edge(0, 1);
        let r = check_edge_loss_bound(&k2, &k4, &minus).unwrap();
        assert_eq!(r.lhs, rat(10, 1));
        assert_eq!(r.rhs, rat(10, 1));
        assert_eq!(r.slack_sign(), 0);

        // G0 must sit inside G on the same vertex set
        assert!(matches!(
            check_edge_loss_bound(&k2, &minus, &k4),
            Err(VerifyError::Hypothesis(HypothesisViolation::NotSpanning))
        ));
        assert!(matches!(
            check_edge_loss_bound(&k2, &k4, &Graph::complete(3)),
            Err(VerifyError::Hypothesis(HypothesisViolation::VertexSetMismatch))
        ));
    }

    #[test]
    fn report_json_shape_is_stable() {
        let r = check_xyp(&rat(0, 1), &rat(1, 2), 2).unwrap();
        assert_eq!(
            r.to_json(),
            concat!(
                "{\"lemma_id\":\"xyp\",",
                "\"params\":{\"p\":\"2\",\"x\":\"0\",\"y\":\"1/2\"},",
                "\"lhs\":{\"num\":\"1\",\"den\":\"4\"},",
                "\"rhs\":{\"num\":\"0\",\"den\":\"1\"},",
                "\"slack_sign\":1,",
                "\"verdict\":\"pass\",",
                "\"substantive\":true,",
                "\"reproducer\":{\"p\":\"2\",\"x\":\"0\",\"y\":\"1/2\"}}"
            )
        );
    }

    #[test]
    fn generated_instances_all_pass() {
        for (h, g, pm) in generators::extension_instances(25, 17) {
            let r = check_extension_bound(&h, &g, &pm).unwrap();
            assert!(r.passes(), "extension: {}", r.to_json());
        }
        for (h, g) in generators::dense_hom_instances(25, 17) {
            let r = check_dense_hom_bound(&h, &g).unwrap();
            assert!(r.passes(), "dense-hom: {}", r.to_json());
        }
        for (h, g, a, b) in generators::rebalance_instances(17, 17) {
            let r = check_rebalance(&h, &g, &a, &b).unwrap();
            assert!(r.passes(), "rebalance: {}", r.to_json());
        }
        for (h, pg) in generators::rpartite_instances(17, 17) {
            let r = check_rpartite(&h, &pg).unwrap();
            assert!(r.passes(), "rpartite: {}", r.to_json());
        }
        for (h, g, v) in generators::vertex_bounds_instances(25, 17) {
            let [a, u] = check_vertex_bounds(&h, &g, v).unwrap();
            assert!(a.passes() && u.passes());
        }
        for (h, g, v0, v) in generators::duplication_instances(25, 17) {
            let r = check_duplication_gain(&h, &g, v0, v).unwrap();
            assert!(r.passes(), "duplication: {}", r.to_json());
        }
        for (h, g, g0) in generators::edge_loss_instances(25, 17) {
            let r = check_edge_loss_bound(&h, &g, &g0).unwrap();
            assert!(r.passes(), "edge-loss: {}", r.to_json());
        }
    }
}
