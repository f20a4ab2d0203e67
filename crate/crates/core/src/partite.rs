//! Extraction of maximum and maximal r-partite subgraphs, completion to
//! complete multipartite graphs, and the part-rebalancing move.

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError, PartitionedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartiteError {
    #[error("exact search budget exceeded: {n} vertices with {r} parts (limit {max_n})")]
    BudgetExceeded { r: usize, n: usize, max_n: usize },
    #[error("graph is not complete multipartite with the given parts")]
    NotCompleteMultipartite,
    #[error("parts are already balanced; no rebalancing move applies")]
    AlreadyBalanced,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An r-partite spanning subgraph of a host graph, together with the
/// number of edges dropped to make it r-partite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartiteDecomposition {
    original: Graph,
    subgraph: PartitionedGraph,
    dropped_edges: usize,
}

impl PartiteDecomposition {
    pub fn new(original: Graph, subgraph: PartitionedGraph) -> PartiteDecomposition {
        debug_assert!(subgraph
            .graph()
            .edges()
            .iter()
            .all(|&(u, v)| original.has_edge(u, v)));
        debug_assert_eq!(subgraph.graph().active(), original.active());
        let dropped_edges = original.edge_count() - subgraph.graph().edge_count();
        PartiteDecomposition {
            original,
            subgraph,
            dropped_edges,
        }
    }

    pub fn original(&self) -> &Graph {
        &self.original
    }

    pub fn subgraph(&self) -> &PartitionedGraph {
        &self.subgraph
    }

    pub fn dropped_edges(&self) -> usize {
        self.dropped_edges
    }
}

/// One application of the rebalancing move: a vertex removed from a
/// largest part and a clone inserted into a smallest part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RebalanceMove {
    pub from_part: usize,
    pub to_part: usize,
    pub removed: usize,
    pub inserted: usize,
}

/// Caps on the exact search. The assignment tree has `r^n` leaves, so the
/// cap is on the vertex count, looser in the two-part case.
#[derive(Clone, Copy, Debug)]
pub struct ExactBudget {
    pub max_n_two_parts: usize,
    pub max_n_general: usize,
}

impl Default for ExactBudget {
    fn default() -> Self {
        ExactBudget {
            max_n_two_parts: 20,
            max_n_general: 14,
        }
    }
}

/// An r-partition of `V(G)` maximizing the number of cross-part edges;
/// `dropped_edges` is the exact minimum. Default budget.
pub fn max_r_partite_exact(g: &Graph, r: usize) -> Result<PartiteDecomposition, PartiteError> {
    max_r_partite_exact_with_budget(g, r, ExactBudget::default())
}

/// Exact search by recursive assignment in ascending label order, with
/// symmetry breaking (a vertex may open part j only when parts 0..j-1 are
/// in use) and an upper-bound prune on retainable edges. Returns the
/// lexicographically least optimal coloring.
pub fn max_r_partite_exact_with_budget(
    g: &Graph,
    r: usize,
    budget: ExactBudget,
) -> Result<PartiteDecomposition, PartiteError> {
    assert!(r >= 1, "need at least one part");
    let verts: Vec<usize> = g.vertices().collect();
    let m = verts.len();
    if r >= m {
        // one part per vertex retains everything
        let coloring: Vec<usize> = (0..m).collect();
        return Ok(decomposition_from_coloring(g, &verts, &coloring, r));
    }
    let max_n = if r == 2 {
        budget.max_n_two_parts
    } else {
        budget.max_n_general
    };
    if m > max_n {
        return Err(PartiteError::BudgetExceeded { r, n: m, max_n });
    }

    let pos_of: std::collections::HashMap<usize, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    // earlier_nbrs[i]: positions j < i adjacent to position i
    let earlier_nbrs: Vec<Vec<usize>> = verts
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            g.neighbors(v)
                .iter()
                .map(|w| pos_of[&w])
                .filter(|&j| j < i)
                .collect()
        })
        .collect();
    // uncounted[i]: edges whose later endpoint sits at position >= i
    let mut uncounted = vec![0usize; m + 1];
    for (i, nbrs) in earlier_nbrs.iter().enumerate() {
        uncounted[i] = nbrs.len();
    }
    for i in (0..m).rev() {
        uncounted[i] += uncounted[i + 1];
    }

    struct Dfs<'a> {
        r: usize,
        m: usize,
        earlier_nbrs: &'a [Vec<usize>],
        uncounted: &'a [usize],
        color: Vec<usize>,
        best: Option<(usize, Vec<usize>)>,
    }
    impl Dfs<'_> {
        fn run(&mut self, i: usize, retained: usize, parts_used: usize) {
            if i == self.m {
                if self.best.as_ref().is_none_or(|(b, _)| retained > *b) {
                    self.best = Some((retained, self.color.clone()));
                }
                return;
            }
            if let Some((b, _)) = &self.best {
                if retained + self.uncounted[i] <= *b {
                    return;
                }
            }
            let top = (parts_used + 1).min(self.r);
            for p in 0..top {
                let gain = self.earlier_nbrs[i]
                    .iter()
                    .filter(|&&j| self.color[j] != p)
                    .count();
                self.color[i] = p;
                self.run(i + 1, retained + gain, parts_used.max(p + 1));
            }
        }
    }
    let mut dfs = Dfs {
        r,
        m,
        earlier_nbrs: &earlier_nbrs,
        uncounted: &uncounted,
        color: vec![0; m],
        best: None,
    };
    dfs.run(0, 0, 0);
    let (_, coloring) = dfs.best.expect("assignment search visits at least one leaf");
    Ok(decomposition_from_coloring(g, &verts, &coloring, r))
}

fn decomposition_from_coloring(
    g: &Graph,
    verts: &[usize],
    coloring: &[usize],
    r: usize,
) -> PartiteDecomposition {
    let mut parts = vec![VertexSet::empty(g.label_count()); r];
    for (i, &v) in verts.iter().enumerate() {
        parts[coloring[i]].insert(v);
    }
    let mut sub = g.clone();
    for (u, v) in g.edges() {
        let cu = coloring[verts.binary_search(&u).unwrap()];
        let cv = coloring[verts.binary_search(&v).unwrap()];
        if cu == cv {
            sub.remove_edge_unchecked(u, v);
        }
    }
    let subgraph = PartitionedGraph::new(sub, parts).expect("cross-color edges respect the parts");
    PartiteDecomposition::new(g.clone(), subgraph)
}

const LOCAL_RESTARTS: usize = 32;

/// Seeded local-search decomposition: repeated best-improvement
/// single-vertex recoloring from a greedy start and random restarts.
/// Never better than the exact optimum, deterministic for a given seed.
pub fn max_r_partite_local(g: &Graph, r: usize, seed: u64) -> PartiteDecomposition {
    assert!(r >= 2, "local search needs at least two parts");
    let verts: Vec<usize> = g.vertices().collect();
    let m = verts.len();
    let pos_of: std::collections::HashMap<usize, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nbr_positions: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|w| pos_of[&w]).collect())
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(usize, Vec<usize>)> = None;
    for restart in 0..LOCAL_RESTARTS {
        let mut coloring = if restart == 0 {
            greedy_coloring(&nbr_positions, m, r)
        } else {
            (0..m).map(|_| rng.gen_range(0..r)).collect()
        };
        improve_to_fixpoint(&nbr_positions, r, &mut coloring);
        let retained = retained_edges(&nbr_positions, &coloring);
        if best.as_ref().is_none_or(|(b, _)| retained > *b) {
            best = Some((retained, coloring));
        }
    }
    let coloring = best.map(|(_, c)| c).unwrap_or_default();
    decomposition_from_coloring(g, &verts, &coloring, r)
}

/// Traversal-order greedy coloring; proper (all edges retained) whenever
/// the graph is bipartite.
fn greedy_coloring(nbr_positions: &[Vec<usize>], m: usize, r: usize) -> Vec<usize> {
    let mut coloring = vec![usize::MAX; m];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..m {
        if coloring[root] != usize::MAX {
            continue;
        }
        queue.push_back(root);
        while let Some(i) = queue.pop_front() {
            if coloring[i] != usize::MAX {
                continue;
            }
            let mut conflicts = vec![0usize; r];
            for &j in &nbr_positions[i] {
                if coloring[j] != usize::MAX {
                    conflicts[coloring[j]] += 1;
                }
            }
            let p = (0..r).min_by_key(|&p| conflicts[p]).unwrap();
            coloring[i] = p;
            for &j in &nbr_positions[i] {
                if coloring[j] == usize::MAX {
                    queue.push_back(j);
                }
            }
        }
    }
    coloring
}

fn conflicts_at(nbr_positions: &[Vec<usize>], coloring: &[usize], i: usize, p: usize) -> usize {
    nbr_positions[i].iter().filter(|&&j| coloring[j] == p).count()
}

/// Applies the single best strictly improving recoloring until none is
/// left; ties go to the lowest vertex, then the lowest part.
fn improve_to_fixpoint(nbr_positions: &[Vec<usize>], r: usize, coloring: &mut [usize]) {
    loop {
        let mut best_move: Option<(usize, usize, usize)> = None; // (gain, i, p)
        for i in 0..coloring.len() {
            let here = conflicts_at(nbr_positions, coloring, i, coloring[i]);
            for p in 0..r {
                if p == coloring[i] {
                    continue;
                }
                let there = conflicts_at(nbr_positions, coloring, i, p);
                if there < here {
                    let gain = here - there;
                    if best_move.is_none_or(|(g, _, _)| gain > g) {
                        best_move = Some((gain, i, p));
                    }
                }
            }
        }
        match best_move {
            Some((_, i, p)) => coloring[i] = p,
            None => return,
        }
    }
}

fn retained_edges(nbr_positions: &[Vec<usize>], coloring: &[usize]) -> usize {
    let cross: usize = (0..coloring.len())
        .map(|i| {
            nbr_positions[i]
                .iter()
                .filter(|&&j| coloring[j] != coloring[i])
                .count()
        })
        .sum();
    cross / 2
}

/// Recolors vertices and re-adds host edges until no edge of the host
/// can join the subgraph without breaking the partition. On output every
/// dropped host edge has both ends inside one part.
pub fn maximal_completion(dec: &PartiteDecomposition) -> PartiteDecomposition {
    let g = dec.original();
    let verts: Vec<usize> = g.vertices().collect();
    let pos_of: std::collections::HashMap<usize, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nbr_positions: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|w| pos_of[&w]).collect())
        .collect();
    let r = dec.subgraph().part_count();
    let mut coloring = vec![0usize; verts.len()];
    for (p, part) in dec.subgraph().parts().iter().enumerate() {
        for v in part.iter() {
            coloring[pos_of[&v]] = p;
        }
    }
    improve_to_fixpoint(&nbr_positions, r, &mut coloring);
    decomposition_from_coloring(g, &verts, &coloring, r)
}

/// Adds every missing cross-part edge; the result is complete
/// multipartite on the same parts.
pub fn fill_to_complete_multipartite(pg: &PartitionedGraph) -> PartitionedGraph {
    let mut g = pg.graph().clone();
    let parts = pg.parts().to_vec();
    for (i, a) in parts.iter().enumerate() {
        for b in parts.iter().skip(i + 1) {
            for u in a.iter() {
                for v in b.iter() {
                    g.insert_edge_unchecked(u, v);
                }
            }
        }
    }
    PartitionedGraph::new(g, parts).expect("parts unchanged, intra-part pairs untouched")
}

/// Moves one vertex's worth of weight from a largest part A to a smallest
/// part B′: the highest-labeled vertex of A is deleted and a fresh clone
/// joined to everything outside B′ is appended to B′. The edge count
/// rises by exactly |A| − |B| where B = B′ ∪ {clone}.
///
/// Fails with [`PartiteError::AlreadyBalanced`] when all part sizes are
/// within one of each other, which terminates the rebalancing loop.
pub fn rebalance_step(
    pg: &PartitionedGraph,
) -> Result<(PartitionedGraph, RebalanceMove), PartiteError> {
    if !pg.is_complete_multipartite() {
        return Err(PartiteError::NotCompleteMultipartite);
    }
    let sizes = pg.part_sizes();
    let from_part = (0..sizes.len())
        .max_by(|&a, &b| sizes[a].cmp(&sizes[b]).then(b.cmp(&a)))
        .expect("at least one part");
    let to_part = (0..sizes.len())
        .min_by(|&a, &b| sizes[a].cmp(&sizes[b]).then(a.cmp(&b)))
        .expect("at least one part");
    if sizes[from_part] < sizes[to_part] + 2 {
        return Err(PartiteError::AlreadyBalanced);
    }
    let size_a = sizes[from_part];
    let removed = pg.parts()[from_part]
        .max()
        .expect("source part is non-empty");
    let shrunk = pg.graph().delete_vertex(removed)?;
    let mut clone_nbrs = shrunk.active().clone();
    for v in pg.parts()[to_part].iter() {
        clone_nbrs.remove(v);
    }
    let (grown, inserted) = shrunk.with_added_vertex(&clone_nbrs)?;

    let mut parts = pg.parts().to_vec();
    for p in &mut parts {
        p.grow(grown.label_count());
    }
    parts[from_part].remove(removed);
    parts[to_part].insert(inserted);
    let size_b = parts[to_part].count();
    assert_eq!(
        grown.edge_count(),
        pg.graph().edge_count() + size_a - size_b,
        "rebalancing must gain exactly |A| - |B| edges"
    );
    let out = PartitionedGraph::new(grown, parts)?;
    Ok((
        out,
        RebalanceMove {
            from_part,
            to_part,
            removed,
            inserted,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::{complete_multipartite, turan_graph};

    #[test]
    fn exact_cut_values() {
        let c5 = Graph::cycle(5);
        let dec = max_r_partite_exact(&c5, 2).unwrap();
        assert_eq!(dec.dropped_edges(), 1);
        assert_eq!(dec.subgraph().graph().edge_count(), 4);

        let bip = turan_graph(2, 7).into_graph();
        assert_eq!(max_r_partite_exact(&bip, 2).unwrap().dropped_edges(), 0);

        let k4 = Graph::complete(4);
        let dec = max_r_partite_exact(&k4, 2).unwrap();
        assert_eq!(dec.dropped_edges(), 2);
        assert!(are_isomorphic(dec.subgraph().graph(), &Graph::cycle(4)));
    }

    #[test]
    fn exact_handles_trivial_shapes() {
        // more parts than vertices: nothing is dropped
        let k4 = Graph::complete(4);
        let dec = max_r_partite_exact(&k4, 9).unwrap();
        assert_eq!(dec.dropped_edges(), 0);
        assert_eq!(dec.subgraph().part_count(), 9);

        // a single part drops everything
        let dec = max_r_partite_exact(&Graph::cycle(4), 1).unwrap();
        assert_eq!(dec.dropped_edges(), 4);
    }

    #[test]
    fn exact_budget_is_enforced() {
        let g = Graph::edgeless(15);
        assert_eq!(
            max_r_partite_exact(&g, 3),
            Err(PartiteError::BudgetExceeded { r: 3, n: 15, max_n: 14 })
        );
        assert!(max_r_partite_exact(&Graph::edgeless(20), 2).is_ok());
        assert_eq!(
            max_r_partite_exact(&Graph::edgeless(21), 2),
            Err(PartiteError::BudgetExceeded { r: 2, n: 21, max_n: 20 })
        );
    }

    #[test]
    fn local_search_solves_bipartite_hosts() {
        for seed in 0..5 {
            for g in [
                turan_graph(2, 8).into_graph(),
                Graph::cycle(6),
                Graph::path(7),
                Graph::star(5),
            ] {
                let dec = max_r_partite_local(&g, 2, seed);
                assert_eq!(dec.dropped_edges(), 0, "seed {seed}");
            }
            assert_eq!(max_r_partite_local(&Graph::cycle(5), 2, seed).dropped_edges(), 1);
        }
    }

    #[test]
    fn local_never_beats_exact() {
        use rand::{Rng, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..25 {
            let n = rng.gen_range(3..10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            for r in 2..4 {
                let exact = max_r_partite_exact(&g, r).unwrap();
                let local = max_r_partite_local(&g, r, 1);
                assert!(local.dropped_edges() >= exact.dropped_edges());
            }
        }
    }

    #[test]
    fn completion_recovers_cross_edges() {
        // K3 with parts {0,1},{2} and only one retained edge
        let k3 = Graph::complete(3);
        let mut sub = k3.clone();
        sub.remove_edge_unchecked(0, 1);
        sub.remove_edge_unchecked(1, 2);
        let parts = vec![
            [0, 1].into_iter().collect::<VertexSet>(),
            [2].into_iter().collect(),
        ];
        let dec = PartiteDecomposition::new(
            k3,
            PartitionedGraph::new(sub, parts).unwrap(),
        );
        assert_eq!(dec.subgraph().graph().edge_count(), 1);
        let completed = maximal_completion(&dec);
        assert_eq!(completed.subgraph().graph().edge_count(), 2);
        assert!(completed.dropped_edges() <= dec.dropped_edges());

        // a maximal input is a fixpoint
        let again = maximal_completion(&completed);
        assert_eq!(again, completed);
    }

    #[test]
    fn completion_leaves_dropped_edges_inside_parts() {
        use rand::{Rng, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let n = rng.gen_range(3..9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.6) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let dec = max_r_partite_local(&g, 3, 4);
            let completed = maximal_completion(&dec);
            for (u, v) in g.edges() {
                if !completed.subgraph().graph().has_edge(u, v) {
                    assert!(
                        completed
                            .subgraph()
                            .parts()
                            .iter()
                            .any(|p| p.contains(u) && p.contains(v)),
                        "dropped edge ({u},{v}) must be intra-part"
                    );
                }
            }
        }
    }

    #[test]
    fn filling_in_cross_edges() {
        let t = turan_graph(2, 4);
        assert_eq!(fill_to_complete_multipartite(&t), t);

        let c4 = Graph::cycle(4);
        let parts = vec![
            [0, 2].into_iter().collect::<VertexSet>(),
            [1, 3].into_iter().collect(),
        ];
        let pg = PartitionedGraph::new(c4.clone(), parts.clone()).unwrap();
        assert_eq!(fill_to_complete_multipartite(&pg).graph(), &c4);

        let p4 = Graph::path(4);
        let parts = vec![
            [0, 2].into_iter().collect::<VertexSet>(),
            [1, 3].into_iter().collect(),
        ];
        let pg = PartitionedGraph::new(p4, parts).unwrap();
        let filled = fill_to_complete_multipartite(&pg);
        assert_eq!(filled.graph().edge_count(), 4);
        assert!(filled.is_complete_multipartite());
        assert!(are_isomorphic(filled.graph(), turan_graph(2, 4).graph()));
    }

    #[test]
    fn rebalance_moves_one_vertex() {
        let pg = complete_multipartite(&[4, 2]);
        assert_eq!(pg.graph().edge_count(), 8);
        let (next, mv) = rebalance_step(&pg).unwrap();
        let mut sizes = next.part_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 3]);
        assert_eq!(next.graph().edge_count(), 9);
        assert_eq!(mv.from_part, 0);
        assert_eq!(mv.to_part, 1);
        assert_eq!(mv.removed, 3);
        assert_eq!(mv.inserted, 6);

        let pg = complete_multipartite(&[3, 1, 2]);
        assert_eq!(pg.graph().edge_count(), 11);
        let (next, _) = rebalance_step(&pg).unwrap();
        let mut sizes = next.part_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 2]);
        assert_eq!(next.graph().edge_count(), 12);
    }

    #[test]
    fn rebalance_rejects_bad_inputs() {
        let balanced = turan_graph(3, 7);
        assert!(matches!(
            rebalance_step(&balanced),
            Err(PartiteError::AlreadyBalanced)
        ));
        let c4 = Graph::cycle(4);
        let parts = vec![
            [0].into_iter().collect::<VertexSet>(),
            [1, 3].into_iter().collect(),
            [2].into_iter().collect(),
        ];
        let pg = PartitionedGraph::new(c4, parts).unwrap();
        assert!(matches!(
            rebalance_step(&pg),
            Err(PartiteError::NotCompleteMultipartite)
        ));
    }

    #[test]
    fn rebalancing_reaches_turan_sizes() {
        for sizes in [vec![6, 1], vec![5, 2, 1], vec![4, 4, 1, 0], vec![9, 0, 0]] {
            let n: usize = sizes.iter().sum();
            let r = sizes.len();
            let mut pg = complete_multipartite(&sizes);
            let mut potential: usize = sizes.iter().map(|s| s * s).sum();
            let mut steps = 0;
            loop {
                match rebalance_step(&pg) {
                    Ok((next, _)) => {
                        assert!(next.is_complete_multipartite());
                        assert!(next.graph().is_kfree(r + 1));
                        assert_eq!(next.graph().vertex_count(), n);
                        let p: usize = next.part_sizes().iter().map(|s| s * s).sum();
                        assert!(p < potential, "part-size potential must drop");
                        potential = p;
                        pg = next;
                        steps += 1;
                        assert!(steps <= n, "rebalancing must finish within n steps");
                    }
                    Err(PartiteError::AlreadyBalanced) => break,
                    Err(e) => panic!("unexpected error: {e}"),
                }
            }
            let mut got = pg.part_sizes();
            got.sort_unstable();
            let mut want = turan_graph(r, n).part_sizes();
            want.sort_unstable();
            assert_eq!(got, want);
            assert!(are_isomorphic(pg.graph(), turan_graph(r, n).graph()));
        }
    }
}
