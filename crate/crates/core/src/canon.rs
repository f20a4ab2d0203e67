//! Canonical labeling for small graphs: the lexicographically minimal
//! upper-triangle bit string (graph6 column order) over all vertex
//! permutations.
//!
//! The search extends a permutation position by position, prunes any
//! branch whose partial bit string already exceeds the best known string,
//! skips twin vertices (swapping twins is an automorphism), and tries
//! candidates in ascending segment order so a near-minimal string is found
//! early. Intended for the enumeration scale (roughly n ≤ 10).

use crate::graph::Graph;
use crate::graph6::write_graph6;

/// The canonical representative of the isomorphism class of `g`:
/// the relabeling minimizing the upper-triangle bit string.
pub fn canonical_form(g: &Graph) -> Graph {
    let g = g.compacted();
    let n = g.vertex_count();
    if n <= 1 {
        return g;
    }
    let twins = twin_matrix(&g);
    let mut search = Search {
        g: &g,
        n,
        twins,
        best: Vec::new(),
        have_best: false,
    };
    let mut placed = Vec::with_capacity(n);
    let mut prefix = Vec::with_capacity(n * (n - 1) / 2);
    search.dfs(&mut placed, &mut prefix);

    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if search.best[idx] == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// graph6 encoding of the canonical form; equal strings iff isomorphic.
pub fn canonical_string(g: &Graph) -> String {
    write_graph6(&canonical_form(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    canonical_string(a) == canonical_string(b)
}

#[allow(clippy::needless_range_loop)]
fn twin_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut twins = vec![vec![false; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            let mut au = g.neighbors(u).clone();
            let mut av = g.neighbors(v).clone();
            au.remove(v);
            av.remove(u);
            if au == av {
                twins[u][v] = true;
                twins[v][u] = true;
            }
        }
    }
    twins
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    twins: Vec<Vec<bool>>,
    best: Vec<u8>,
    have_best: bool,
}

impl Search<'_> {
    fn dfs(&mut self, placed: &mut Vec<usize>, prefix: &mut Vec<u8>) {
        let pos = placed.len();
        if pos == self.n {
            if !self.have_best || prefix.as_slice() < self.best.as_slice() {
                self.best = prefix.clone();
                self.have_best = true;
            }
            return;
        }
        // Candidates with the bits they would contribute, smallest first;
        // low degree as a tiebreak steers toward the minimal string.
        let mut cands: Vec<(Vec<u8>, usize, usize)> = (0..self.n)
            .filter(|v| !placed.contains(v))
            .map(|v| {
                let seg: Vec<u8> = placed.iter().map(|&p| u8::from(self.g.has_edge(p, v))).collect();
                (seg, self.g.degree(v), v)
            })
            .collect();
        cands.sort();

        let mut tried: Vec<usize> = Vec::new();
        for (seg, _, v) in cands {
            if tried.iter().any(|&u| self.twins[u][v]) {
                continue;
            }
            if self.have_best {
                let plen = prefix.len();
                let lim = plen + seg.len();
                let cmp = prefix
                    .as_slice()
                    .cmp(&self.best[..plen])
                    .then_with(|| seg.as_slice().cmp(&self.best[plen..lim]));
                if cmp == std::cmp::Ordering::Greater {
                    break;
                }
            }
            tried.push(v);
            prefix.extend_from_slice(&seg);
            placed.push(v);
            self.dfs(placed, prefix);
            placed.pop();
            prefix.truncate(prefix.len() - seg.len());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_isomorphism_invariant() {
        // the same path labeled two ways
        let a = Graph::path(4);
        let b = Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_string(&a), canonical_string(&b));
        assert!(are_isomorphic(&a, &b));
        assert!(!are_isomorphic(&a, &Graph::star(3)));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        for g in [
            Graph::cycle(6),
            Graph::star(4),
            Graph::complete(5),
            crate::graph::turan_graph(3, 7).into_graph(),
        ] {
            let c = canonical_form(&g);
            assert_eq!(canonical_form(&c), c);
            assert_eq!(c.edge_count(), g.edge_count());
        }
    }

    #[test]
    fn canonical_form_under_random_relabeling() {
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let n = rng.gen_range(1..8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let relabeled: Vec<_> = edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
            let h = Graph::new(n, &relabeled).unwrap();
            assert_eq!(canonical_string(&g), canonical_string(&h));
        }
    }

    #[test]
    fn handles_heavy_symmetry() {
        // twin skipping keeps complete and complete multipartite graphs cheap
        assert_eq!(canonical_form(&Graph::complete(9)), Graph::complete(9));
        let t = crate::graph::turan_graph(3, 9).into_graph();
        let c = canonical_form(&t);
        assert_eq!(c.edge_count(), t.edge_count());
        assert!(are_isomorphic(&c, &t));
    }
}
