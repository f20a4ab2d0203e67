//! Simple undirected graphs with stable integer labels.
//!
//! Vertices live in a dense label space `0..label_count`; deletion masks a
//! label out of the active set instead of relabeling, so transformation
//! pipelines keep a stable audit trail. Most graphs are fully active.

use crate::bitset::VertexSet;
use crate::count::{Count, CountError};
use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for label space of size {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} is not allowed")]
    LoopEdge(usize),
    #[error("vertex {0} is not active")]
    InactiveVertex(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("cannot clone a vertex onto itself")]
    CloneOntoSelf,
    #[error("parts are not pairwise disjoint")]
    PartsNotDisjoint,
    #[error("parts do not cover the vertex set")]
    PartsNotCovering,
    #[error("part {0} is not an independent set")]
    PartNotIndependent(usize),
}

/// An immutable simple undirected graph.
///
/// Invariants: adjacency is symmetric, loop-free, and confined to the
/// active set (`adj[v] ⊆ active` for active `v`, `adj[v] = ∅` otherwise).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    active: VertexSet,
}

impl Graph {
    /// Builds a graph on vertices `0..n` with the given edges
    /// (duplicates collapsed).
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph {
            adj: vec![VertexSet::empty(n); n],
            active: VertexSet::full(n),
        };
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n, &[]).unwrap()
    }

    /// The complete graph K_k.
    pub fn complete(k: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                edges.push((u, v));
            }
        }
        Graph::new(k, &edges).unwrap()
    }

    /// The path on `k` vertices (k-1 edges), labeled along the path.
    pub fn path(k: usize) -> Graph {
        let edges: Vec<_> = (1..k).map(|v| (v - 1, v)).collect();
        Graph::new(k, &edges).unwrap()
    }

    /// The cycle on `k` vertices; requires `k >= 3`.
    pub fn cycle(k: usize) -> Graph {
        assert!(k >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..k).map(|v| (v - 1, v)).collect();
        edges.push((k - 1, 0));
        Graph::new(k, &edges).unwrap()
    }

    /// The star with `leaves` leaves (vertex 0 is the center).
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    /// Size of the label space, including masked labels.
    pub fn label_count(&self) -> usize {
        self.adj.len()
    }

    /// Number of (active) vertices; `v(G)`.
    pub fn vertex_count(&self) -> usize {
        self.active.count()
    }

    pub fn active(&self) -> &VertexSet {
        &self.active
    }

    pub fn is_active(&self, v: usize) -> bool {
        v < self.label_count() && self.active.contains(v)
    }

    /// Ascending iterator over active vertex labels.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.active.iter()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.label_count() && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Number of edges; `e(G)`.
    pub fn edge_count(&self) -> usize {
        let total: usize = self.vertices().map(|v| self.degree(v)).sum();
        total / 2
    }

    /// Edge list as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Copy of the graph with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.is_active(u) {
            return Err(GraphError::InactiveVertex(u));
        }
        if !self.is_active(v) {
            return Err(GraphError::InactiveVertex(v));
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        Ok(g)
    }

    pub(crate) fn insert_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(self.is_active(u) && self.is_active(v) && u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn remove_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    /// Copy of the graph with edge `uv` removed (no-op when absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if u < g.label_count() && v < g.label_count() {
            g.adj[u].remove(v);
            g.adj[v].remove(u);
        }
        g
    }

    /// Copy with vertex `v` masked out of the active set; `G ∖ v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if !self.is_active(v) {
            return Err(GraphError::InactiveVertex(v));
        }
        let mut g = self.clone();
        g.active.remove(v);
        for row in &mut g.adj {
            row.remove(v);
        }
        g.adj[v] = VertexSet::empty(g.label_count());
        Ok(g)
    }

    /// Appends a fresh vertex adjacent to `neighbors`; returns the new
    /// graph and the fresh label.
    pub fn with_added_vertex(&self, neighbors: &VertexSet) -> Result<(Graph, usize), GraphError> {
        let fresh = self.label_count();
        let new_len = fresh + 1;
        let mut adj: Vec<VertexSet> = self
            .adj
            .iter()
            .cloned()
            .map(|mut row| {
                row.grow(new_len);
                row
            })
            .collect();
        let mut row = VertexSet::empty(new_len);
        for w in neighbors.iter() {
            if !self.is_active(w) {
                return Err(GraphError::InactiveVertex(w));
            }
            row.insert(w);
            adj[w].insert(fresh);
        }
        adj.push(row);
        let mut active = self.active.clone();
        active.grow(new_len);
        active.insert(fresh);
        Ok((Graph { adj, active }, fresh))
    }

    /// Replaces `v` by a clone of `v0`: the result is `G ∖ v` plus a fresh
    /// vertex adjacent exactly to the neighbors of `v0` other than `v`
    /// (in particular the clone and `v0` are non-adjacent). The vertex
    /// count is unchanged.
    pub fn duplicate_vertex(&self, v0: usize, v: usize) -> Result<Graph, GraphError> {
        if v0 == v {
            return Err(GraphError::CloneOntoSelf);
        }
        if !self.is_active(v0) {
            return Err(GraphError::InactiveVertex(v0));
        }
        if !self.is_active(v) {
            return Err(GraphError::InactiveVertex(v));
        }
        let without = self.delete_vertex(v)?;
        let mut nbrs = self.adj[v0].clone();
        nbrs.remove(v);
        let (g, _) = without.with_added_vertex(&nbrs)?;
        Ok(g)
    }

    /// Relabels active vertices to `0..vertex_count()` in ascending label
    /// order; the result is fully active.
    pub fn compacted(&self) -> Graph {
        self.compacted_with_map().0
    }

    /// Compacts and also returns the original label for each new label.
    pub fn compacted_with_map(&self) -> (Graph, Vec<usize>) {
        let old_labels: Vec<usize> = self.vertices().collect();
        let mut new_of_old = vec![usize::MAX; self.label_count()];
        for (new, &old) in old_labels.iter().enumerate() {
            new_of_old[old] = new;
        }
        let n = old_labels.len();
        let mut edges = Vec::new();
        for (u, v) in self.edges() {
            edges.push((new_of_old[u], new_of_old[v]));
        }
        (Graph::new(n, &edges).unwrap(), old_labels)
    }

    /// True iff the set is independent (no edge inside). Tolerates sets
    /// over a different universe size.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        let vs: Vec<usize> = set.iter().collect();
        vs.iter().enumerate().all(|(i, &u)| {
            vs[i + 1..].iter().all(|&v| !self.has_edge(u, v))
        })
    }

    /// True iff the graph contains no clique on `k` vertices.
    ///
    /// Branch-and-bound clique search with a greedy-coloring bound on each
    /// candidate set; requires `k >= 1`.
    pub fn is_kfree(&self, k: usize) -> bool {
        assert!(k >= 1, "clique order must be at least 1");
        !self.has_clique(k)
    }

    fn has_clique(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if self.vertex_count() < k {
            return false;
        }
        if k == 1 {
            return true;
        }
        self.clique_expand(self.active.clone(), 0, k)
    }

    fn clique_expand(&self, mut cand: VertexSet, size: usize, k: usize) -> bool {
        if size == k {
            return true;
        }
        let (order, colors) = self.greedy_color(&cand);
        for i in (0..order.len()).rev() {
            if size + colors[i] < k {
                return false;
            }
            let v = order[i];
            let next = cand.intersection(&self.adj[v]);
            if self.clique_expand(next, size + 1, k) {
                return true;
            }
            cand.remove(v);
        }
        false
    }

    /// Greedy partition of `cand` into independent classes; returns the
    /// vertices grouped class by class with each vertex's 1-based class
    /// index (an upper bound on the largest clique through it).
    fn greedy_color(&self, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<(VertexSet, Vec<usize>)> = Vec::new();
        for v in cand.iter() {
            match classes
                .iter_mut()
                .find(|(set, _)| set.is_disjoint(&self.adj[v]))
            {
                Some((set, members)) => {
                    set.insert(v);
                    members.push(v);
                }
                None => {
                    let mut set = VertexSet::empty(self.label_count());
                    set.insert(v);
                    classes.push((set, vec![v]));
                }
            }
        }
        let mut order = Vec::with_capacity(cand.count());
        let mut colors = Vec::with_capacity(cand.count());
        for (c, (_, members)) in classes.into_iter().enumerate() {
            for v in members {
                order.push(v);
                colors.push(c + 1);
            }
        }
        (order, colors)
    }

    /// The least `δ` for which every vertex has degree at least
    /// `(1-δ)·v(G)`, as an exact rational.
    pub fn density_deficit(&self) -> Result<DensityDeficit, GraphError> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let min_deg = self.vertices().map(|v| self.degree(v)).min().unwrap();
        Ok(DensityDeficit::new(n - min_deg, n))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, e={}, edges={:?})",
            self.vertex_count(),
            self.edge_count(),
            self.edges()
        )
    }
}

/// The least density deficit of a graph: `δ = max_v (1 - deg(v)/n)`,
/// kept as an exact rational. A graph is `δ'`-dense iff `δ' ≥ δ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DensityDeficit(BigRational);

impl DensityDeficit {
    fn new(num: usize, den: usize) -> Self {
        DensityDeficit(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        ))
    }

    pub fn ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn into_ratio(self) -> BigRational {
        self.0
    }

    /// Exact comparison against `num/den`.
    pub fn at_most(&self, num: u64, den: u64) -> bool {
        self.0 <= BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

impl std::fmt::Display for DensityDeficit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A graph together with an ordered partition of its vertex set into
/// independent sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedGraph {
    graph: Graph,
    parts: Vec<VertexSet>,
}

impl PartitionedGraph {
    /// Validates that the parts are disjoint independent sets covering the
    /// active vertex set. Parts are renormalized to the graph's label space.
    pub fn new(graph: Graph, parts: Vec<VertexSet>) -> Result<PartitionedGraph, GraphError> {
        let mut seen = VertexSet::empty(graph.label_count());
        let mut norm = Vec::with_capacity(parts.len());
        for (i, part) in parts.iter().enumerate() {
            let mut p = VertexSet::empty(graph.label_count());
            for v in part.iter() {
                if !graph.is_active(v) {
                    return Err(GraphError::InactiveVertex(v));
                }
                if seen.contains(v) {
                    return Err(GraphError::PartsNotDisjoint);
                }
                seen.insert(v);
                p.insert(v);
            }
            if !graph.is_independent(&p) {
                return Err(GraphError::PartNotIndependent(i));
            }
            norm.push(p);
        }
        if seen != *graph.active() {
            return Err(GraphError::PartsNotCovering);
        }
        Ok(PartitionedGraph { graph, parts: norm })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    /// Number of parts (r).
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.count()).collect()
    }

    /// True iff every cross-part pair is an edge.
    pub fn is_complete_multipartite(&self) -> bool {
        let n = self.graph.vertex_count();
        for part in &self.parts {
            for v in part.iter() {
                if self.graph.degree(v) != n - part.count() {
                    return false;
                }
            }
        }
        true
    }
}

/// The Turán graph T_r(n): complete r-partite with part sizes `⌈n/r⌉` or
/// `⌊n/r⌋`, larger parts first; requires `r >= 1`.
pub fn turan_graph(r: usize, n: usize) -> PartitionedGraph {
    assert!(r >= 1, "need at least one part");
    let q = n / r;
    let s = n % r;
    let mut sizes = vec![q + 1; s];
    sizes.extend(vec![q; r - s]);
    complete_multipartite(&sizes)
}

/// The complete multipartite graph with the given part sizes, parts
/// ordered by non-increasing size (ties by first label) and labeled
/// contiguously.
pub fn complete_multipartite(sizes: &[usize]) -> PartitionedGraph {
    let mut sizes: Vec<usize> = sizes.to_vec();
    sizes.sort_by(|a, b| b.cmp(a));
    let n: usize = sizes.iter().sum();
    let mut parts = Vec::with_capacity(sizes.len());
    let mut next = 0usize;
    for &s in &sizes {
        let mut part = VertexSet::empty(n);
        for v in next..next + s {
            part.insert(v);
        }
        parts.push(part);
        next += s;
    }
    let mut edges = Vec::new();
    for (i, a) in parts.iter().enumerate() {
        for b in parts.iter().skip(i + 1) {
            for u in a.iter() {
                for v in b.iter() {
                    edges.push((u, v));
                }
            }
        }
    }
    let graph = Graph::new(n, &edges).unwrap();
    PartitionedGraph::new(graph, parts).unwrap()
}

/// `e(T_r(n))` by the closed form `(n² − s·⌈n/r⌉² − (r−s)·⌊n/r⌋²)/2`
/// with `s = n mod r`; requires `r >= 1`.
pub fn turan_edge_count<C: Count>(r: usize, n: usize) -> Result<C, CountError> {
    assert!(r >= 1, "need at least one part");
    let n128 = n as u128;
    let q = n128 / r as u128;
    let s = n128 % r as u128;
    let val = (n128 * n128 - s * (q + 1) * (q + 1) - (r as u128 - s) * q * q) / 2;
    C::from_u128(val).ok_or(CountError::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BigCount;

    #[test]
    fn constructors_and_counts() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3, Graph::complete(3));

        let empty = Graph::new(4, &[]).unwrap();
        assert_eq!(empty.edge_count(), 0);

        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));
        assert_eq!(c5, Graph::cycle(5));

        // duplicate edges collapse
        let g = Graph::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::LoopEdge(1)));
    }

    #[test]
    fn turan_construction() {
        let t25 = turan_graph(2, 5);
        assert_eq!(t25.part_sizes(), vec![3, 2]);
        assert_eq!(t25.graph().edge_count(), 6);

        let t37 = turan_graph(3, 7);
        assert_eq!(t37.part_sizes(), vec![3, 2, 2]);
        assert_eq!(t37.graph().edge_count(), 16);

        // all parts of size <= 1 gives the complete graph
        let t54 = turan_graph(5, 4);
        assert_eq!(t54.graph().compacted(), Graph::complete(4));
        assert_eq!(t54.graph().edge_count(), 6);
    }

    #[test]
    fn multipartite_construction() {
        assert_eq!(complete_multipartite(&[3, 2]).graph().edge_count(), 6);
        assert_eq!(
            complete_multipartite(&[1, 1, 1, 1]).graph().compacted(),
            Graph::complete(4)
        );
        let g = complete_multipartite(&[2, 1, 1, 1, 1, 1, 1]);
        assert_eq!(g.graph().vertex_count(), 8);
        assert_eq!(g.graph().edge_count(), 27);
        // unsorted input is reordered: larger parts first
        assert_eq!(complete_multipartite(&[1, 3, 2]).part_sizes(), vec![3, 2, 1]);
    }

    #[test]
    fn turan_edge_count_closed_form() {
        assert_eq!(turan_edge_count::<BigCount>(2, 5).unwrap(), BigCount::from(6u32));
        assert_eq!(turan_edge_count::<BigCount>(3, 7).unwrap(), BigCount::from(16u32));
        assert_eq!(turan_edge_count::<BigCount>(7, 7).unwrap(), BigCount::from(21u32));
        for r in 1..=9 {
            for n in 0..=30 {
                let built = turan_graph(r, n).graph().edge_count();
                assert_eq!(
                    turan_edge_count::<u128>(r, n).unwrap(),
                    built as u128,
                    "r={r} n={n}"
                );
            }
        }
    }

    #[test]
    fn clique_freeness() {
        assert!(turan_graph(2, 5).graph().is_kfree(3));
        assert!(!Graph::complete(4).is_kfree(4));
        assert!(Graph::cycle(5).is_kfree(3));
        assert!(!Graph::cycle(5).is_kfree(2));
        assert!(Graph::edgeless(4).is_kfree(2));
        assert!(!Graph::edgeless(4).is_kfree(1));
        assert!(Graph::edgeless(0).is_kfree(1));
        // Turán graphs are K_{r+1}-free but contain K_r
        for r in 1..=5 {
            for n in 0..=12 {
                let t = turan_graph(r, n);
                assert!(t.graph().is_kfree(r + 1), "r={r} n={n}");
                if n >= r {
                    assert!(!t.graph().is_kfree(r), "r={r} n={n}");
                }
            }
        }
    }

    #[test]
    fn density_deficit_examples() {
        let k5 = Graph::complete(5);
        assert_eq!(
            k5.density_deficit().unwrap(),
            DensityDeficit::new(1, 5)
        );
        let t26 = turan_graph(2, 6);
        assert_eq!(
            t26.graph().density_deficit().unwrap(),
            DensityDeficit::new(1, 2)
        );
        assert_eq!(
            Graph::edgeless(0).density_deficit(),
            Err(GraphError::EmptyGraph)
        );
    }

    #[test]
    fn turan_density_bound() {
        // T_r(n) is (2/r)-dense for all 1 <= r <= n <= 60
        for r in 1..=60usize {
            for n in r..=60usize {
                let t = turan_graph(r, n);
                let d = t.graph().density_deficit().unwrap();
                assert!(d.at_most(2, r as u64), "r={r} n={n} delta={d}");
            }
        }
    }

    #[test]
    fn vertex_duplication() {
        // cloning vertex 0 over vertex 2 in K3 leaves a path
        let k3 = Graph::complete(3);
        let g = k3.duplicate_vertex(0, 2).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(!g.is_active(2));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 3));
        assert!(!g.has_edge(0, 3));
        assert!(g.is_kfree(3) && !g.is_kfree(2));
        assert_eq!(g.compacted(), Graph::path(3));

        let e = Graph::edgeless(3);
        let dup = e.duplicate_vertex(0, 1).unwrap();
        assert_eq!(dup.edge_count(), 0);
        assert_eq!(dup.vertex_count(), 3);

        assert_eq!(k3.duplicate_vertex(1, 1), Err(GraphError::CloneOntoSelf));
    }

    #[test]
    fn duplication_preserves_clique_freeness() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(2..9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let v0 = rng.gen_range(0..n);
            let v = (v0 + rng.gen_range(1..n)) % n;
            let dup = g.duplicate_vertex(v0, v).unwrap();
            for r in 1..=n {
                if g.is_kfree(r + 1) {
                    assert!(dup.is_kfree(r + 1), "duplication created a K_{}", r + 1);
                }
            }
        }
    }

    #[test]
    fn edge_addition_is_monotone() {
        let g = Graph::cycle(5);
        let g2 = g.with_edge(0, 2).unwrap();
        assert_eq!(g2.edge_count(), g.edge_count() + 1);
        for v in g.vertices() {
            assert!(g2.degree(v) >= g.degree(v));
        }
    }

    #[test]
    fn masking_keeps_labels() {
        let c5 = Graph::cycle(5);
        let g = c5.delete_vertex(2).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.label_count(), 5);
        assert!(g.has_edge(0, 1) && g.has_edge(3, 4) && g.has_edge(4, 0));
        assert!(!g.has_edge(1, 2) && !g.has_edge(2, 3));
        assert_eq!(
            g.compacted(),
            Graph::new(4, &[(0, 1), (2, 3), (3, 0)]).unwrap()
        );
        assert!(crate::canon::are_isomorphic(&g.compacted(), &Graph::path(4)));
        assert_eq!(g.delete_vertex(2), Err(GraphError::InactiveVertex(2)));
    }

    #[test]
    fn partition_validation() {
        let p4 = Graph::path(4);
        let parts = vec![
            [0, 2].into_iter().collect::<VertexSet>(),
            [1, 3].into_iter().collect(),
        ];
        assert!(PartitionedGraph::new(p4.clone(), parts).is_ok());

        let bad = vec![
            [0, 1].into_iter().collect::<VertexSet>(),
            [2, 3].into_iter().collect(),
        ];
        assert_eq!(
            PartitionedGraph::new(p4.clone(), bad),
            Err(GraphError::PartNotIndependent(0))
        );

        let missing = vec![[0, 2].into_iter().collect::<VertexSet>()];
        assert_eq!(
            PartitionedGraph::new(p4, missing),
            Err(GraphError::PartsNotCovering)
        );
    }
}
