//! Enumeration of small graphs up to isomorphism, exhaustive extremal
//! search with Turán comparison, pointwise Turán-goodness certification,
//! and the end-to-end transformation trace.

use crate::canon::canonical_string;
use crate::count::{count_copies, count_inj, count_inj_through, CountError, PatternGraph};
use crate::graph::{turan_graph, Graph, GraphError};
use crate::graph6::{parse_graph6, write_graph6, Graph6Error};
use crate::partite::{
    fill_to_complete_multipartite, max_r_partite_exact, maximal_completion, rebalance_step,
    PartiteError,
};
use crate::verify::{
    check_edge_loss_bound, check_rebalance, check_rpartite, LemmaReport, VerifyError,
};
use crate::{count_json, BigCount, Rat};
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};
use std::collections::BTreeSet;
use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("internal enumeration supports n <= {max}, got n = {n}")]
    EnumerationBudget { n: usize, max: usize },
    #[error("line {line}: graph has {got} vertices, expected {expected}")]
    WrongVertexCount { line: usize, expected: usize, got: usize },
    #[error("line {line}: {source}")]
    CorpusLine { line: usize, source: Graph6Error },
    #[error("pattern graph has no edge")]
    PatternEdgeless,
    #[error("graph contains a clique on {0} vertices")]
    NotCliqueFree(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Partite(#[from] PartiteError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

pub const ENUMERATION_MAX: usize = 8;

/// All graphs on `n` vertices up to isomorphism, one representative per
/// class, sorted by canonical graph6 string.
///
/// Canonical extension: every class on k+1 vertices arises from some
/// class on k vertices by attaching a new vertex, so extending each
/// representative by every neighbor subset and canonicalizing reaches
/// everything; a set collapses duplicates.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, SearchError> {
    if n > ENUMERATION_MAX {
        return Err(SearchError::EnumerationBudget {
            n,
            max: ENUMERATION_MAX,
        });
    }
    if n == 0 {
        return Ok(vec![Graph::edgeless(0)]);
    }
    let mut level: Vec<String> = vec![write_graph6(&Graph::edgeless(1))];
    for k in 1..n {
        let extended: Vec<String> = level
            .par_iter()
            .flat_map_iter(|s| {
                let g = parse_graph6(s).expect("level strings are canonical graph6");
                (0u32..1 << k).map(move |mask| {
                    let mut edges = g.edges();
                    for i in 0..k {
                        if mask >> i & 1 == 1 {
                            edges.push((i, k));
                        }
                    }
                    canonical_string(&Graph::new(k + 1, &edges).unwrap())
                })
            })
            .collect();
        let set: BTreeSet<String> = extended.into_iter().collect();
        level = set.into_iter().collect();
    }
    Ok(level
        .iter()
        .map(|s| parse_graph6(s).expect("canonical strings round-trip"))
        .collect())
}

/// Where an extremal search draws its host graphs from.
#[derive(Clone, Debug)]
pub enum GraphSource {
    /// Internal enumeration of all n-vertex graphs up to isomorphism.
    Internal,
    /// graph6 lines from a file, one graph per line.
    Corpus { path: PathBuf, lenient: bool },
}

impl GraphSource {
    fn load(&self, n: usize) -> Result<(Vec<Graph>, Vec<String>), SearchError> {
        match self {
            GraphSource::Internal => Ok((enumerate_graphs(n)?, Vec::new())),
            GraphSource::Corpus { path, lenient } => {
                let text = std::fs::read_to_string(path)?;
                ingest_graph6_lines(&text, *lenient, Some(n))
            }
        }
    }
}

/// Parses graph6 lines (1-based line numbers). Malformed lines and
/// vertex-count mismatches are fatal unless `lenient`, in which case they
/// are skipped and reported as warnings.
pub fn ingest_graph6_lines(
    text: &str,
    lenient: bool,
    expected_n: Option<usize>,
) -> Result<(Vec<Graph>, Vec<String>), SearchError> {
    let mut graphs = Vec::new();
    let mut warnings = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim_end_matches('\r');
        match parse_graph6(trimmed) {
            Ok(g) => {
                if let Some(n) = expected_n {
                    if g.vertex_count() != n {
                        if lenient {
                            warnings.push(format!(
                                "line {line_no}: skipped graph on {} vertices, expected {n}",
                                g.vertex_count()
                            ));
                            continue;
                        }
                        return Err(SearchError::WrongVertexCount {
                            line: line_no,
                            expected: n,
                            got: g.vertex_count(),
                        });
                    }
                }
                graphs.push(g);
            }
            Err(e) => {
                if lenient {
                    warnings.push(format!("line {line_no}: skipped ({e})"));
                } else {
                    return Err(SearchError::CorpusLine {
                        line: line_no,
                        source: e,
                    });
                }
            }
        }
    }
    Ok((graphs, warnings))
}

/// Outcome of an extremal search over K_{r+1}-free n-vertex graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// graph6 of the pattern graph H.
    pub pattern: String,
    pub r: usize,
    pub n: usize,
    /// Largest copy count seen (never below the Turán graph's).
    pub max_copies: BigCount,
    /// Canonical graph6 of every graph attaining the maximum.
    pub maximizers: Vec<String>,
    pub turan_value: BigCount,
    pub turan_is_max: bool,
    /// Number of graphs drawn from the source.
    pub scanned: usize,
    /// Set by certification: whether the Turán graph is the maximum and
    /// every maximizer satisfies the extremal through-count bound.
    pub certified: Option<bool>,
    /// Diagnostics from lenient corpus ingestion.
    pub warnings: Vec<String>,
}

impl Serialize for SearchResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SearchResult", 9)?;
        st.serialize_field("pattern", &self.pattern)?;
        st.serialize_field("r", &self.r)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("max_copies", &count_json(&self.max_copies))?;
        st.serialize_field("maximizers", &self.maximizers)?;
        st.serialize_field("turan_value", &count_json(&self.turan_value))?;
        st.serialize_field("turan_is_max", &self.turan_is_max)?;
        st.serialize_field("scanned", &self.scanned)?;
        st.serialize_field("certified", &self.certified)?;
        st.end()
    }
}

/// Scans the source for K_{r+1}-free n-vertex graphs maximizing the
/// number of copies of `h`, and compares the maximum with the Turán
/// graph's count. The Turán graph always participates, so
/// `turan_value <= max_copies` holds for any source.
pub fn search_extremal(
    h: &PatternGraph,
    r: usize,
    n: usize,
    source: &GraphSource,
) -> Result<SearchResult, SearchError> {
    let (graphs, warnings) = source.load(n)?;
    let scanned = graphs.len();
    let turan = turan_graph(r, n);
    let turan_value: BigCount = count_copies(h, turan.graph())?;
    let turan_g6 = canonical_string(turan.graph());

    let counted: Vec<Option<(BigCount, String)>> = graphs
        .par_iter()
        .map(|g| -> Result<Option<(BigCount, String)>, SearchError> {
            if g.vertex_count() != n {
                return Ok(None);
            }
            if !g.is_kfree(r + 1) {
                return Ok(None);
            }
            let copies: BigCount = count_copies(h, g)?;
            Ok(Some((copies, canonical_string(g))))
        })
        .collect::<Result<_, _>>()?;

    let mut max_copies = turan_value.clone();
    let mut maximizers: BTreeSet<String> = BTreeSet::from([turan_g6]);
    for (copies, g6) in counted.into_iter().flatten() {
        match copies.cmp(&max_copies) {
            std::cmp::Ordering::Greater => {
                max_copies = copies;
                maximizers = BTreeSet::from([g6]);
            }
            std::cmp::Ordering::Equal => {
                maximizers.insert(g6);
            }
            std::cmp::Ordering::Less => {}
        }
    }
    Ok(SearchResult {
        pattern: write_graph6(h.graph()),
        r,
        n,
        turan_is_max: turan_value == max_copies,
        max_copies,
        maximizers: maximizers.into_iter().collect(),
        turan_value,
        scanned,
        certified: None,
        warnings,
    })
}

/// [`search_extremal`] plus certification: when the Turán graph attains
/// the maximum, every maximizer must satisfy the extremal through-count
/// bound `ii(v) >= max_u ii(u) - v(H)²·n^{v(H)-2}` at every vertex.
pub fn certify_turan_good_at(
    h: &PatternGraph,
    r: usize,
    n: usize,
    source: &GraphSource,
) -> Result<SearchResult, SearchError> {
    let mut result = search_extremal(h, r, n, source)?;
    let mut certified = result.turan_is_max;
    if certified {
        let vh = h.vertex_count();
        let slack = if vh == 0 || n == 0 {
            Rat::zero()
        } else {
            Rat::from_integer(BigInt::from(vh * vh)) * crate::verify::rat_pow(n, vh as i64 - 2)
        };
        'outer: for g6 in &result.maximizers {
            let g = parse_graph6(g6).expect("maximizers are canonical graph6");
            let through: Vec<BigCount> = g
                .vertices()
                .map(|v| count_inj_through(h, &g, v))
                .collect::<Result<_, _>>()?;
            let max_through = through.iter().max().cloned().unwrap_or_else(BigCount::zero);
            let floor = Rat::from_integer(BigInt::from(max_through)) - &slack;
            for t in &through {
                if Rat::from_integer(BigInt::from(t.clone())) < floor {
                    certified = false;
                    break 'outer;
                }
            }
        }
    }
    result.certified = Some(certified);
    Ok(result)
}

/// Outcome of one inequality check inside a trace step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    /// No check is attached at this stage.
    None,
    Report(LemmaReport),
    /// The check's hypotheses do not hold at this stage.
    Skipped { reason: String },
}

/// One pipeline stage: the operation, the graph before and after, and
/// the attached inequality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub op: &'static str,
    pub graph6_before: String,
    pub graph6_after: String,
    pub edges_before: usize,
    pub edges_after: usize,
    pub inj_before: BigCount,
    pub inj_after: BigCount,
    pub check: CheckOutcome,
}

impl Serialize for TraceStep {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("TraceStep", 8)?;
        st.serialize_field("op", self.op)?;
        st.serialize_field("graph6_before", &self.graph6_before)?;
        st.serialize_field("graph6_after", &self.graph6_after)?;
        st.serialize_field("edges_before", &self.edges_before)?;
        st.serialize_field("edges_after", &self.edges_after)?;
        st.serialize_field("inj_before", &count_json(&self.inj_before))?;
        st.serialize_field("inj_after", &count_json(&self.inj_after))?;
        match &self.check {
            CheckOutcome::None => st.serialize_field("check", &serde_json::Value::Null)?,
            CheckOutcome::Report(report) => st.serialize_field("check", report)?,
            CheckOutcome::Skipped { reason } => {
                let mut obj = serde_json::Map::new();
                obj.insert("skipped".into(), serde_json::Value::String(reason.clone()));
                st.serialize_field("check", &serde_json::Value::Object(obj))?;
            }
        }
        st.end()
    }
}

/// The full decompose → complete → fill → rebalance pipeline record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformTrace {
    pub pattern: String,
    pub r: usize,
    pub initial_graph6: String,
    pub final_graph6: String,
    pub initial_inj: BigCount,
    pub final_inj: BigCount,
    pub steps: Vec<TraceStep>,
}

impl TransformTrace {
    pub fn rebalance_count(&self) -> usize {
        self.steps.iter().filter(|s| s.op == "rebalance").count()
    }

    /// True when every attached (non-skipped) check passes.
    pub fn all_checks_pass(&self) -> bool {
        self.steps.iter().all(|s| match &s.check {
            CheckOutcome::Report(r) => r.passes(),
            _ => true,
        })
    }
}

impl Serialize for TransformTrace {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("TransformTrace", 7)?;
        st.serialize_field("pattern", &self.pattern)?;
        st.serialize_field("r", &self.r)?;
        st.serialize_field("initial", &self.initial_graph6)?;
        st.serialize_field("final", &self.final_graph6)?;
        st.serialize_field("initial_inj", &count_json(&self.initial_inj))?;
        st.serialize_field("final_inj", &count_json(&self.final_inj))?;
        st.serialize_field("steps", &self.steps)?;
        st.end()
    }
}

fn check_or_skip(outcome: Result<LemmaReport, VerifyError>) -> Result<CheckOutcome, SearchError> {
    match outcome {
        Ok(report) => Ok(CheckOutcome::Report(report)),
        Err(VerifyError::Hypothesis(h)) => Ok(CheckOutcome::Skipped {
            reason: format!("hypothesis: {h}"),
        }),
        Err(e) => Err(e.into()),
    }
}

/// Runs the proof pipeline on a K_{r+1}-free graph: exact r-partite
/// decomposition, maximal completion, filling to complete multipartite,
/// then rebalancing to the Turán graph, attaching the applicable
/// inequality check at each stage. Checks whose hypotheses fail at a
/// stage are recorded as skipped, never as failures.
pub fn transform_trace(
    h: &PatternGraph,
    g: &Graph,
    r: usize,
) -> Result<TransformTrace, SearchError> {
    if h.edge_count() == 0 {
        return Err(SearchError::PatternEdgeless);
    }
    if !g.is_kfree(r + 1) {
        return Err(SearchError::NotCliqueFree(r + 1));
    }
    let inj_of = |graph: &Graph| -> Result<BigCount, CountError> { count_inj(h, graph) };
    let mut steps = Vec::new();
    let initial_graph6 = write_graph6(g);
    let initial_inj: BigCount = inj_of(g)?;

    // decompose into an r-partite spanning subgraph
    let dec = max_r_partite_exact(g, r)?;
    let sub = dec.subgraph().clone();
    let sub_inj: BigCount = inj_of(sub.graph())?;
    steps.push(TraceStep {
        op: "furedi-decompose",
        graph6_before: initial_graph6.clone(),
        graph6_after: write_graph6(sub.graph()),
        edges_before: g.edge_count(),
        edges_after: sub.graph().edge_count(),
        inj_before: initial_inj.clone(),
        inj_after: sub_inj.clone(),
        check: check_or_skip(check_edge_loss_bound(h, g, sub.graph()))?,
    });

    // make the subgraph maximal
    let completed = maximal_completion(&dec);
    let comp_pg = completed.subgraph().clone();
    let comp_inj: BigCount = inj_of(comp_pg.graph())?;
    steps.push(TraceStep {
        op: "complete-maximal",
        graph6_before: write_graph6(sub.graph()),
        graph6_after: write_graph6(comp_pg.graph()),
        edges_before: sub.graph().edge_count(),
        edges_after: comp_pg.graph().edge_count(),
        inj_before: sub_inj,
        inj_after: comp_inj.clone(),
        check: CheckOutcome::None,
    });

    // fill every missing cross-part edge
    let filled = fill_to_complete_multipartite(&comp_pg);
    let filled_inj: BigCount = inj_of(filled.graph())?;
    steps.push(TraceStep {
        op: "fill-edges",
        graph6_before: write_graph6(comp_pg.graph()),
        graph6_after: write_graph6(filled.graph()),
        edges_before: comp_pg.graph().edge_count(),
        edges_after: filled.graph().edge_count(),
        inj_before: comp_inj,
        inj_after: filled_inj.clone(),
        check: check_or_skip(check_rpartite(h, &filled))?,
    });

    // rebalance part sizes until they match the Turán profile
    let mut pg = filled;
    let mut pg_inj = filled_inj;
    loop {
        match rebalance_step(&pg) {
            Ok((next, mv)) => {
                let next_inj: BigCount = inj_of(next.graph())?;
                // the two-deletion form of the step: add the clone first,
                // then deleting it recovers `pg` and deleting the moved
                // vertex recovers `next`
                let mut clone_nbrs = pg.graph().active().clone();
                for v in pg.parts()[mv.to_part].iter() {
                    clone_nbrs.remove(v);
                }
                let (with_clone, clone_label) = pg.graph().with_added_vertex(&clone_nbrs)?;
                debug_assert_eq!(clone_label, mv.inserted);
                let a_set = pg.parts()[mv.from_part].clone();
                let mut b_set = pg.parts()[mv.to_part].clone();
                b_set.grow(with_clone.label_count());
                b_set.insert(clone_label);
                let check =
                    check_or_skip(check_rebalance(h, &with_clone, &grow_set(&a_set, &with_clone), &b_set))?;
                steps.push(TraceStep {
                    op: "rebalance",
                    graph6_before: write_graph6(pg.graph()),
                    graph6_after: write_graph6(next.graph()),
                    edges_before: pg.graph().edge_count(),
                    edges_after: next.graph().edge_count(),
                    inj_before: pg_inj.clone(),
                    inj_after: next_inj.clone(),
                    check,
                });
                pg = next;
                pg_inj = next_inj;
            }
            Err(PartiteError::AlreadyBalanced) => break,
            Err(e) => return Err(e.into()),
        }
    }

    Ok(TransformTrace {
        pattern: write_graph6(h.graph()),
        r,
        initial_graph6,
        final_graph6: write_graph6(pg.graph()),
        initial_inj,
        final_inj: pg_inj,
        steps,
    })
}

fn grow_set(set: &crate::bitset::VertexSet, g: &Graph) -> crate::bitset::VertexSet {
    let mut s = set.clone();
    if s.universe() < g.label_count() {
        s.grow(g.label_count());
    }
    s
}
