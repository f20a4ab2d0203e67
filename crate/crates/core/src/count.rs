//! Exact counting of injective homomorphisms and subgraph copies.
//!
//! Counting is generic over the integer type through [`Count`]: the
//! default [`crate::BigCount`] never overflows, while fixed-width types
//! such as [`crate::FastCount`] take a faster path and fail loudly on
//! overflow. Results are identical whenever both succeed.

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive};
use rayon::prelude::*;
use thiserror::Error;

/// Integer scalar used for homomorphism counts.
///
/// Implemented by arbitrary-precision integers and by the checked
/// fixed-width primitives.
pub trait Count:
    Clone
    + Ord
    + std::fmt::Debug
    + std::fmt::Display
    + Send
    + Sync
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
{
}

impl<T> Count for T where
    T: Clone
        + Ord
        + std::fmt::Debug
        + std::fmt::Display
        + Send
        + Sync
        + Integer
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
{
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("count overflowed the fixed-width count type")]
    Overflow,
    #[error("automorphism count does not divide the homomorphism count; counting bug")]
    InexactDivision,
    #[error("brute-force budget exceeded: {needed} maps > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("invalid partial map: {0}")]
    InvalidPartialMap(#[from] PartialMapError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartialMapError {
    #[error("pattern vertex {0} appears twice in the domain")]
    DuplicatePatternVertex(usize),
    #[error("host vertex {0} is the image of two pattern vertices")]
    NotInjective(usize),
    #[error("pattern vertex {0} is not in the pattern graph")]
    PatternVertexInactive(usize),
    #[error("host vertex {0} is not in the host graph")]
    HostVertexInactive(usize),
    #[error("pattern edge ({0}, {1}) is mapped to a non-edge")]
    EdgeNotPreserved(usize, usize),
}

/// Hosts at least this large split counting across threads on the image
/// of the first pattern vertex. Partial sums are exact integers, so the
/// result does not depend on the thread count.
const PARALLEL_HOST_MIN: usize = 64;

pub const DEFAULT_BRUTE_BUDGET: u128 = 100_000_000;

/// A pattern graph `H` with a precomputed counting order of its vertices.
///
/// The order lists components by decreasing size; within a component it
/// starts at a maximum-degree vertex and greedily appends the vertex with
/// the most already-placed neighbors (ties by label), so every vertex
/// after a component start has an earlier neighbor to prune against.
#[derive(Clone, Debug)]
pub struct PatternGraph {
    graph: Graph,
    order: Vec<usize>,
    /// For each order position, the earlier positions holding H-neighbors.
    earlier: Vec<Vec<usize>>,
    /// First position from which all remaining vertices are isolated in H.
    tail_isolated_from: usize,
}

impl PatternGraph {
    pub fn new(graph: Graph) -> PatternGraph {
        let order = counting_order(&graph);
        let pos_of: std::collections::HashMap<usize, usize> =
            order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let earlier: Vec<Vec<usize>> = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut e: Vec<usize> = graph
                    .neighbors(v)
                    .iter()
                    .filter_map(|w| pos_of.get(&w).copied())
                    .filter(|&j| j < i)
                    .collect();
                e.sort_unstable();
                e
            })
            .collect();
        let mut tail_isolated_from = order.len();
        while tail_isolated_from > 0 && graph.degree(order[tail_isolated_from - 1]) == 0 {
            tail_isolated_from -= 1;
        }
        PatternGraph {
            graph,
            order,
            earlier,
            tail_isolated_from,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

fn counting_order(graph: &Graph) -> Vec<usize> {
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut visited = VertexSet::empty(graph.label_count());
    for start in graph.vertices() {
        if visited.contains(start) {
            continue;
        }
        let mut comp = vec![start];
        visited.insert(start);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for w in graph.neighbors(v).iter() {
                if !visited.contains(w) {
                    visited.insert(w);
                    comp.push(w);
                    queue.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));

    let mut order = Vec::with_capacity(graph.vertex_count());
    for comp in comps {
        let mut placed = VertexSet::empty(graph.label_count());
        let &start = comp
            .iter()
            .max_by(|&&a, &&b| {
                graph
                    .degree(a)
                    .cmp(&graph.degree(b))
                    .then(b.cmp(&a))
            })
            .unwrap();
        order.push(start);
        placed.insert(start);
        let mut remaining: Vec<usize> = comp.iter().copied().filter(|&v| v != start).collect();
        while !remaining.is_empty() {
            let (idx, _) = remaining
                .iter()
                .enumerate()
                .max_by(|(_, &a), (_, &b)| {
                    graph
                        .neighbors(a)
                        .intersection_count(&placed)
                        .cmp(&graph.neighbors(b).intersection_count(&placed))
                        .then(b.cmp(&a))
                })
                .unwrap();
            let v = remaining.remove(idx);
            order.push(v);
            placed.insert(v);
        }
    }
    order
}

/// `(avail)·(avail-1)···(avail-k+1)` with overflow checking.
fn falling_factorial<C: Count>(avail: usize, k: usize) -> Result<C, CountError> {
    if k > avail {
        return Ok(C::zero());
    }
    let mut acc = C::one();
    for i in 0..k {
        let term = C::from_usize(avail - i).ok_or(CountError::Overflow)?;
        acc = acc.checked_mul(&term).ok_or(CountError::Overflow)?;
    }
    Ok(acc)
}

struct Counter<'a> {
    pattern: &'a PatternGraph,
    host: &'a Graph,
    /// Host images of already-pinned pattern neighbors, per order position.
    pinned: Vec<Vec<usize>>,
    pinned_count: usize,
}

impl<'a> Counter<'a> {
    fn free(pattern: &'a PatternGraph, host: &'a Graph) -> Counter<'a> {
        Counter {
            pattern,
            host,
            pinned: vec![Vec::new(); pattern.order.len()],
            pinned_count: 0,
        }
    }

    fn candidates(&self, depth: usize, images: &[usize], used: &VertexSet) -> VertexSet {
        let mut cand = match (
            self.pattern.earlier[depth].first(),
            self.pinned[depth].first(),
        ) {
            (Some(&j), _) => {
                let mut c = self.host.neighbors(images[j]).clone();
                for &j in &self.pattern.earlier[depth][1..] {
                    c.intersect_with(self.host.neighbors(images[j]));
                }
                for &w in &self.pinned[depth] {
                    c.intersect_with(self.host.neighbors(w));
                }
                c
            }
            (None, Some(&w)) => {
                let mut c = self.host.neighbors(w).clone();
                for &w in &self.pinned[depth][1..] {
                    c.intersect_with(self.host.neighbors(w));
                }
                c
            }
            (None, None) => self.host.active().clone(),
        };
        cand.subtract(used);
        cand
    }

    fn run<C: Count>(&self, start: usize, images: &mut [usize], used: &mut VertexSet) -> Result<C, CountError> {
        let len = self.pattern.order.len();
        // All remaining pattern vertices isolated: any unused host
        // vertices do, so the count is a falling factorial.
        if start >= self.pattern.tail_isolated_from && self.pinned[start..].iter().all(|p| p.is_empty()) {
            let avail = self.host.vertex_count() - self.pinned_count - start;
            return falling_factorial(avail, len - start);
        }
        let cand = self.candidates(start, images, used);
        if start == len - 1 {
            return C::from_usize(cand.count()).ok_or(CountError::Overflow);
        }
        let mut total = C::zero();
        for v in cand.iter() {
            images[start] = v;
            used.insert(v);
            let sub = self.run(start + 1, images, used);
            used.remove(v);
            total = total.checked_add(&sub?).ok_or(CountError::Overflow)?;
        }
        Ok(total)
    }

    fn count<C: Count>(&self) -> Result<C, CountError> {
        let len = self.pattern.order.len();
        if len == 0 {
            return Ok(C::one());
        }
        let mut images = vec![usize::MAX; len];
        let mut used = VertexSet::empty(self.host.label_count());
        for pins in &self.pinned {
            for &w in pins {
                used.insert(w);
            }
        }
        if len >= 2 && self.host.vertex_count() >= PARALLEL_HOST_MIN {
            let first = self.candidates(0, &images, &used);
            let all_isolated =
                self.pattern.tail_isolated_from == 0 && self.pinned.iter().all(|p| p.is_empty());
            if !all_isolated {
                let labels: Vec<usize> = first.iter().collect();
                let partials: Result<Vec<C>, CountError> = labels
                    .par_iter()
                    .map(|&v| {
                        let mut images = images.clone();
                        let mut used = used.clone();
                        images[0] = v;
                        used.insert(v);
                        self.run(1, &mut images, &mut used)
                    })
                    .collect();
                let mut total = C::zero();
                for p in partials? {
                    total = total.checked_add(&p).ok_or(CountError::Overflow)?;
                }
                return Ok(total);
            }
        }
        self.run(0, &mut images, &mut used)
    }
}

/// Number of injective homomorphisms from `H` to `G`: injective vertex
/// maps sending every edge of `H` to an edge of `G`.
///
/// Backtracks over the pattern's counting order; candidate sets are the
/// intersection of the neighborhoods of the images of earlier pattern
/// neighbors, minus already-used vertices. An empty pattern counts 1.
pub fn count_inj<C: Count>(pattern: &PatternGraph, host: &Graph) -> Result<C, CountError> {
    Counter::free(pattern, host).count()
}

/// Brute-force oracle for [`count_inj`]: enumerates all `v(G)^{v(H)}`
/// vertex maps and filters. Same contract, independent implementation.
pub fn count_inj_brute<C: Count>(
    pattern: &Graph,
    host: &Graph,
    budget: u128,
) -> Result<C, CountError> {
    let hs: Vec<usize> = pattern.vertices().collect();
    let gs: Vec<usize> = host.vertices().collect();
    let l = hs.len();
    let n = gs.len();
    if l == 0 {
        return Ok(C::one());
    }
    if n == 0 {
        return Ok(C::zero());
    }
    let needed = (n as u128)
        .checked_pow(l as u32)
        .ok_or(CountError::BudgetExceeded {
            needed: u128::MAX,
            budget,
        })?;
    if needed > budget {
        return Err(CountError::BudgetExceeded { needed, budget });
    }
    let pos_of: std::collections::HashMap<usize, usize> =
        hs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let h_edges: Vec<(usize, usize)> = pattern
        .edges()
        .into_iter()
        .map(|(u, v)| (pos_of[&u], pos_of[&v]))
        .collect();

    let mut total = C::zero();
    let mut assign = vec![0usize; l];
    'outer: loop {
        let injective = (0..l).all(|i| (i + 1..l).all(|j| assign[i] != assign[j]));
        if injective
            && h_edges
                .iter()
                .all(|&(i, j)| host.has_edge(gs[assign[i]], gs[assign[j]]))
        {
            total = total.checked_add(&C::one()).ok_or(CountError::Overflow)?;
        }
        // odometer over the n^l assignments
        for slot in (0..l).rev() {
            assign[slot] += 1;
            if assign[slot] < n {
                continue 'outer;
            }
            assign[slot] = 0;
        }
        break;
    }
    Ok(total)
}

/// `|Aut(H)| = count_inj(H, H)`: an injective self-homomorphism of a
/// finite graph is an automorphism.
pub fn aut_count<C: Count>(pattern: &PatternGraph) -> Result<C, CountError> {
    count_inj(pattern, pattern.graph())
}

/// Number of subgraphs of `G` isomorphic to `H`:
/// `count_inj(H,G) / aut_count(H)`. A non-zero remainder signals a
/// counting bug and is reported as an error.
pub fn count_copies<C: Count>(pattern: &PatternGraph, host: &Graph) -> Result<C, CountError> {
    let inj: C = count_inj(pattern, host)?;
    let aut: C = aut_count(pattern)?;
    let (q, r) = inj.div_rem(&aut);
    if !r.is_zero() {
        return Err(CountError::InexactDivision);
    }
    Ok(q)
}

/// Number of injective homomorphisms whose image contains `v`:
/// `count_inj(H, G) − count_inj(H, G ∖ v)`.
pub fn count_inj_through<C: Count>(
    pattern: &PatternGraph,
    host: &Graph,
    v: usize,
) -> Result<C, CountError> {
    let total: C = count_inj(pattern, host)?;
    let without: C = count_inj(pattern, &host.delete_vertex(v)?)?;
    Ok(total
        .checked_sub(&without)
        .expect("deleting a vertex cannot increase the count"))
}

/// A partial injective homomorphism: an assignment of distinct host
/// vertices to a subset `X` of the pattern's vertices that maps every
/// edge of `H[X]` to an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMap {
    pairs: Vec<(usize, usize)>,
}

impl PartialMap {
    /// An unvalidated map from pattern vertices to host vertices;
    /// validated against concrete graphs by [`count_extensions`].
    pub fn new(pairs: Vec<(usize, usize)>) -> PartialMap {
        PartialMap { pairs }
    }

    pub fn empty() -> PartialMap {
        PartialMap { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn domain_size(&self) -> usize {
        self.pairs.len()
    }

    /// Checks the partial-map invariants against a pattern and a host.
    pub fn validate(&self, pattern: &Graph, host: &Graph) -> Result<(), PartialMapError> {
        for (i, &(u, gu)) in self.pairs.iter().enumerate() {
            if !pattern.is_active(u) {
                return Err(PartialMapError::PatternVertexInactive(u));
            }
            if !host.is_active(gu) {
                return Err(PartialMapError::HostVertexInactive(gu));
            }
            for &(w, gw) in &self.pairs[i + 1..] {
                if u == w {
                    return Err(PartialMapError::DuplicatePatternVertex(u));
                }
                if gu == gw {
                    return Err(PartialMapError::NotInjective(gu));
                }
                if pattern.has_edge(u, w) && !host.has_edge(gu, gw) {
                    return Err(PartialMapError::EdgeNotPreserved(u, w));
                }
            }
        }
        Ok(())
    }
}

/// Number of injective homomorphisms from `H` to `G` extending the given
/// partial map. Invalid partial maps are rejected, not counted as zero.
pub fn count_extensions<C: Count>(
    pattern: &PatternGraph,
    host: &Graph,
    pm: &PartialMap,
) -> Result<C, CountError> {
    pm.validate(pattern.graph(), host)?;
    let h = pattern.graph();
    let domain: VertexSet = {
        let mut s = VertexSet::empty(h.label_count());
        for &(u, _) in pm.pairs() {
            s.insert(u);
        }
        s
    };
    let image_of: std::collections::HashMap<usize, usize> = pm.pairs().iter().copied().collect();

    // Order the free vertices greedily by number of already-placed
    // neighbors (the domain counts as placed), ties by label.
    let mut placed = domain.clone();
    let mut remaining: Vec<usize> = h.vertices().filter(|v| !domain.contains(*v)).collect();
    let mut order = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let (idx, _) = remaining
            .iter()
            .enumerate()
            .max_by(|(_, &a), (_, &b)| {
                h.neighbors(a)
                    .intersection_count(&placed)
                    .cmp(&h.neighbors(b).intersection_count(&placed))
                    .then(b.cmp(&a))
            })
            .unwrap();
        let v = remaining.remove(idx);
        order.push(v);
        placed.insert(v);
    }

    let sub_pattern = PatternGraph {
        graph: h.clone(),
        earlier: order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                (0..i)
                    .filter(|&j| h.has_edge(v, order[j]))
                    .collect::<Vec<usize>>()
            })
            .collect(),
        tail_isolated_from: {
            let mut t = order.len();
            while t > 0 && h.degree(order[t - 1]) == 0 {
                t -= 1;
            }
            t
        },
        order: order.clone(),
    };
    let pinned: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| {
            let mut pins: Vec<usize> = h
                .neighbors(v)
                .iter()
                .filter(|w| domain.contains(*w))
                .map(|w| image_of[&w])
                .collect();
            pins.sort_unstable();
            pins
        })
        .collect();
    Counter {
        pattern: &sub_pattern,
        host,
        pinned,
        pinned_count: pm.domain_size(),
    }
    .count()
}
