//! Seeded instance generators for the inequality checkers.
//!
//! The hypotheses are structured (δ-dense hosts, fully joined parts,
//! spanning subgraphs, valid partial maps), so each checker gets its own
//! generator instead of a generic random graph model. Everything is
//! deterministic for a given seed.

use crate::bitset::VertexSet;
use crate::count::{PartialMap, PatternGraph};
use crate::graph::{complete_multipartite, Graph, PartitionedGraph};
use crate::Rat;
use num_bigint::BigInt;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Small patterns with at least one edge.
pub fn edged_pattern_pool() -> Vec<PatternGraph> {
    vec![
        PatternGraph::new(Graph::complete(2)),
        PatternGraph::new(Graph::path(3)),
        PatternGraph::new(Graph::complete(3)),
        PatternGraph::new(Graph::path(4)),
        PatternGraph::new(Graph::cycle(4)),
        PatternGraph::new(Graph::star(3)),
    ]
}

/// Patterns including edgeless and single-vertex shapes.
pub fn any_pattern_pool() -> Vec<PatternGraph> {
    let mut pool = edged_pattern_pool();
    pool.push(PatternGraph::new(Graph::edgeless(1)));
    pool.push(PatternGraph::new(Graph::edgeless(3)));
    pool
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// A graph on `n` vertices whose density deficit is at most
/// `delta_num/delta_den`: starts complete and removes random edges while
/// every degree stays at least `⌈(1-δ)·n⌉`.
pub fn random_dense_graph(
    rng: &mut ChaCha8Rng,
    n: usize,
    delta_num: u64,
    delta_den: u64,
) -> Graph {
    let floor = ((delta_den - delta_num) as usize * n).div_ceil(delta_den as usize);
    let mut g = Graph::complete(n);
    let mut pairs: Vec<(usize, usize)> = g.edges();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if g.degree(u) > floor && g.degree(v) > floor && rng.gen_bool(0.7) {
            g = g.without_edge(u, v);
        }
    }
    debug_assert!(g
        .density_deficit()
        .unwrap()
        .at_most(delta_num, delta_den));
    g
}

/// Complete multipartite with every part of size at most `n/4`, so the
/// density deficit is at most 1/4. Part sizes are random in 1..=max_size.
pub fn quarter_dense_multipartite(rng: &mut ChaCha8Rng, max_size: usize) -> PartitionedGraph {
    let max_size = max_size.max(1);
    let mut sizes = Vec::new();
    let mut n = 0usize;
    let mut biggest = 1usize;
    while n < 4 * biggest || sizes.len() < 2 {
        let s = rng.gen_range(1..=max_size);
        biggest = biggest.max(s);
        n += s;
        sizes.push(s);
    }
    complete_multipartite(&sizes)
}

/// A random spanning subgraph keeping each edge with probability `keep`.
pub fn random_spanning_subgraph(rng: &mut ChaCha8Rng, g: &Graph, keep: f64) -> Graph {
    let mut out = g.clone();
    for (u, v) in g.edges() {
        if !rng.gen_bool(keep) {
            out = out.without_edge(u, v);
        }
    }
    out
}

/// A valid random partial map on a random domain of the given size,
/// found by randomized backtracking; falls back to the empty map if the
/// sampled domain admits no injective homomorphism.
pub fn random_partial_map(
    rng: &mut ChaCha8Rng,
    h: &Graph,
    g: &Graph,
    domain_size: usize,
) -> PartialMap {
    for _attempt in 0..20 {
        let mut hs: Vec<usize> = h.vertices().collect();
        hs.shuffle(rng);
        hs.truncate(domain_size);
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut used = VertexSet::empty(g.label_count());
        let mut ok = true;
        for &u in &hs {
            let mut cands: Vec<usize> = g
                .vertices()
                .filter(|&w| !used.contains(w))
                .filter(|&w| {
                    pairs
                        .iter()
                        .all(|&(u2, w2)| !h.has_edge(u, u2) || g.has_edge(w, w2))
                })
                .collect();
            if cands.is_empty() {
                ok = false;
                break;
            }
            let w = *cands.choose(rng).unwrap();
            cands.clear();
            used.insert(w);
            pairs.push((u, w));
        }
        if ok {
            return PartialMap::new(pairs);
        }
    }
    PartialMap::empty()
}

/// Instances for the extension bound: δ-dense hosts (δ ≤ 1/4 mixed with
/// much denser ones) and random valid partial maps.
pub fn extension_instances(count: usize, seed: u64) -> Vec<(PatternGraph, Graph, PartialMap)> {
    let mut rng = rng_for(seed, 1);
    let pool = edged_pattern_pool();
    (0..count)
        .map(|i| {
            let h = pool[rng.gen_range(0..pool.len())].clone();
            let g = if i % 3 == 0 {
                quarter_dense_multipartite(&mut rng, 2).into_graph()
            } else {
                let n = rng.gen_range(8..18);
                let den = rng.gen_range(4..10);
                random_dense_graph(&mut rng, n, 1, den)
            };
            let k = rng.gen_range(0..=h.vertex_count());
            let pm = random_partial_map(&mut rng, h.graph(), &g, h.vertex_count() - k);
            (h, g, pm)
        })
        .collect()
}

/// Instances for the dense-host homomorphism lower bound: any graphs.
pub fn dense_hom_instances(count: usize, seed: u64) -> Vec<(PatternGraph, Graph)> {
    let mut rng = rng_for(seed, 2);
    let pool = any_pattern_pool();
    (0..count)
        .map(|i| {
            let h = pool[rng.gen_range(0..pool.len())].clone();
            let n = rng.gen_range(1..16);
            let g = match i % 3 {
                0 => random_graph(&mut rng, n, 0.5),
                1 => random_dense_graph(&mut rng, n.max(6), 1, 5),
                _ => quarter_dense_multipartite(&mut rng, 2).into_graph(),
            };
            (h, g)
        })
        .collect()
}

/// Rebalance instances: complete multipartite hosts with two chosen parts
/// as the fully joined independent sets. Every eighth instance is built
/// substantively: δ < 1/(3·v(H)³) with H alternating between the edge and
/// the 3-path, and |A| > |B|.
pub fn rebalance_instances(count: usize, seed: u64) -> Vec<(PatternGraph, Graph, VertexSet, VertexSet)> {
    let mut rng = rng_for(seed, 3);
    let pool = edged_pattern_pool();
    (0..count)
        .map(|i| {
            if i % 8 == 0 {
                let (h, singles) = if i % 16 == 0 {
                    // K2: delta < 1/24 needs > 48 vertices around a 2-part
                    (PatternGraph::new(Graph::complete(2)), 47 + (i / 16) % 4)
                } else {
                    // 3-path: delta < 1/81 needs > 162 vertices
                    (PatternGraph::new(Graph::path(3)), 161 + (i / 16) % 3)
                };
                let mut sizes = vec![2];
                sizes.extend(std::iter::repeat_n(1, singles));
                let pg = complete_multipartite(&sizes);
                let a = pg.parts()[0].clone();
                let b = pg.parts()[1].clone();
                let vh = h.vertex_count();
                let bound = Rat::new(BigInt::from(1), BigInt::from(3 * vh * vh * vh));
                assert!(pg.graph().density_deficit().unwrap().into_ratio() < bound);
                (h, pg.into_graph(), a, b)
            } else {
                let h = pool[rng.gen_range(0..pool.len())].clone();
                let pg = quarter_dense_multipartite(&mut rng, 3);
                let sizes = pg.part_sizes();
                let i1 = rng.gen_range(0..sizes.len());
                let mut i2 = rng.gen_range(0..sizes.len() - 1);
                if i2 >= i1 {
                    i2 += 1;
                }
                let (ai, bi) = if sizes[i1] >= sizes[i2] { (i1, i2) } else { (i2, i1) };
                let a = pg.parts()[ai].clone();
                let b = pg.parts()[bi].clone();
                (h, pg.into_graph(), a, b)
            }
        })
        .collect()
}

/// r-partite instances with δ ≤ 1/4: complete multipartite graphs, some
/// with a few cross edges removed (density permitting). Every eighth
/// instance is substantive: δ < 1/(3·v(H)³) and a positive edge deficit
/// against the Turán graph, with H alternating between the edge and the
/// 3-path.
pub fn rpartite_instances(count: usize, seed: u64) -> Vec<(PatternGraph, PartitionedGraph)> {
    let mut rng = rng_for(seed, 4);
    let pool = edged_pattern_pool();
    (0..count)
        .map(|i| {
            if i % 8 == 0 {
                // parts [3, 2, 2, ..., 1, 1]: one vertex heavier than the
                // Turán profile, so the edge deficit is exactly 1
                let (h, twos) = if i % 16 == 0 {
                    (PatternGraph::new(Graph::complete(2)), 34 + (i / 16) % 4)
                } else {
                    (PatternGraph::new(Graph::path(3)), 119 + (i / 16) % 3)
                };
                let mut sizes = vec![3];
                sizes.extend(std::iter::repeat_n(2, twos));
                sizes.extend([1, 1, 1]);
                let pg = complete_multipartite(&sizes);
                let vh = h.vertex_count();
                let bound = Rat::new(BigInt::from(1), BigInt::from(3 * vh * vh * vh));
                assert!(pg.graph().density_deficit().unwrap().into_ratio() < bound);
                (h, pg)
            } else {
                let h = pool[rng.gen_range(0..pool.len())].clone();
                let pg = quarter_dense_multipartite(&mut rng, 3);
                if i % 3 == 0 {
                    (h, pg)
                } else {
                    // drop a couple of cross edges while keeping δ ≤ 1/4
                    let mut g = pg.graph().clone();
                    let n = g.vertex_count();
                    let floor = (3 * n).div_ceil(4);
                    for _ in 0..2 {
                        let edges = g.edges();
                        if let Some(&(u, v)) = edges.as_slice().choose(&mut rng) {
                            if g.degree(u) > floor && g.degree(v) > floor {
                                g = g.without_edge(u, v);
                            }
                        }
                    }
                    let parts = pg.parts().to_vec();
                    (h, PartitionedGraph::new(g, parts).unwrap())
                }
            }
        })
        .collect()
}

/// Instances for the per-vertex bounds: edged patterns, modest hosts.
pub fn vertex_bounds_instances(count: usize, seed: u64) -> Vec<(PatternGraph, Graph, usize)> {
    let mut rng = rng_for(seed, 5);
    let pool = edged_pattern_pool();
    (0..count)
        .map(|_| {
            let h = pool[rng.gen_range(0..pool.len())].clone();
            let n = rng.gen_range(2..13);
            let p = rng.gen_range(0.2..0.9);
            let g = random_graph(&mut rng, n, p);
            let v = rng.gen_range(0..n);
            (h, g, v)
        })
        .collect()
}

/// Instances for the duplication bound: any pattern, random hosts,
/// random distinct vertex pair (sometimes twins).
pub fn duplication_instances(count: usize, seed: u64) -> Vec<(PatternGraph, Graph, usize, usize)> {
    let mut rng = rng_for(seed, 6);
    let pool = any_pattern_pool();
    (0..count)
        .map(|i| {
            let h = pool[rng.gen_range(0..pool.len())].clone();
            let g = if i % 4 == 0 {
                quarter_dense_multipartite(&mut rng, 3).into_graph()
            } else {
                let n = rng.gen_range(2..12);
                random_graph(&mut rng, n, 0.5)
            };
            let n = g.vertex_count();
            let v0 = rng.gen_range(0..n);
            let v = (v0 + rng.gen_range(1..n)) % n;
            (h, g, v0, v)
        })
        .collect()
}

/// Instances for the edge-loss bound: hosts with random spanning
/// subgraphs.
pub fn edge_loss_instances(count: usize, seed: u64) -> Vec<(PatternGraph, Graph, Graph)> {
    let mut rng = rng_for(seed, 7);
    let pool = edged_pattern_pool();
    (0..count)
        .map(|_| {
            let h = pool[rng.gen_range(0..pool.len())].clone();
            let n = rng.gen_range(2..12);
            let g = random_graph(&mut rng, n, 0.6);
            let keep = rng.gen_range(0.3..=1.0);
            let g0 = random_spanning_subgraph(&mut rng, &g, keep);
            (h, g, g0)
        })
        .collect()
}

/// The full grid `x, y ∈ {0, 1/den, ..., den/den}`, `p ∈ 0..=p_max`.
pub fn xyp_grid(den: u64, p_max: u32) -> Vec<(Rat, Rat, u32)> {
    let mut out = Vec::new();
    for xi in 0..=den {
        for yi in 0..=den {
            for p in 0..=p_max {
                out.push((
                    Rat::new(BigInt::from(xi), BigInt::from(den)),
                    Rat::new(BigInt::from(yi), BigInt::from(den)),
                    p,
                ));
            }
        }
    }
    out
}
