//! Canonical form by individualization and refinement.
//!
//! Vertices start in cells keyed by `(color, root, weight, degree, incident
//! edge weights)`. Refinement splits cells by the multiset of
//! `(neighbor cell, edge weight)` pairs and, when present, the cell of the
//! gamma image. Non-singleton cells are split by individualizing each member
//! in turn. Every leaf of the search tree is a vertex ordering; the key is the
//! smallest encoding over all leaves. The search tree depends only on the
//! isomorphism class, so the minimum does too.

use super::DecoratedGraph;

/// Byte string equal for two graphs exactly when they are isomorphic.
pub type CanonicalKey = Vec<u8>;

pub fn canonical_key(g: &DecoratedGraph) -> CanonicalKey {
    let cx = Context::new(g);
    let ranks = cx.refine(cx.initial_ranks());
    let mut best = None;
    cx.search(ranks, &mut best);
    best.unwrap_or_else(|| cx.encode(&[]))
}

struct Context<'a> {
    g: &'a DecoratedGraph,
    adj: Vec<Vec<(usize, u32)>>,
}

/// Replaces each signature with its position among the sorted distinct
/// signatures.
fn rank_by<T: Ord + Clone>(sigs: &[T]) -> Vec<u32> {
    let mut distinct = sigs.to_vec();
    distinct.sort();
    distinct.dedup();
    sigs.iter()
        .map(|s| distinct.binary_search(s).expect("present") as u32)
        .collect()
}

fn cell_count(ranks: &[u32]) -> usize {
    ranks.iter().max().map_or(0, |&m| m as usize + 1)
}

impl<'a> Context<'a> {
    fn new(g: &'a DecoratedGraph) -> Self {
        Context {
            g,
            adj: g.adjacency(),
        }
    }

    fn initial_ranks(&self) -> Vec<u32> {
        let sigs: Vec<_> = self
            .g
            .vertices()
            .iter()
            .zip(&self.adj)
            .map(|(v, nb)| {
                let mut weights: Vec<u32> = nb.iter().map(|&(_, w)| w).collect();
                weights.sort_unstable();
                (v.color, v.root, v.weight, nb.len(), weights)
            })
            .collect();
        rank_by(&sigs)
    }

    fn refine(&self, mut ranks: Vec<u32>) -> Vec<u32> {
        let gamma = self.g.gamma();
        loop {
            let before = cell_count(&ranks);
            let sigs: Vec<_> = (0..ranks.len())
                .map(|v| {
                    let mut nb: Vec<(u32, u32)> =
                        self.adj[v].iter().map(|&(u, w)| (ranks[u], w)).collect();
                    nb.sort_unstable();
                    let partner = gamma.map(|gm| ranks[gm[v]]);
                    (ranks[v], nb, partner)
                })
                .collect();
            ranks = rank_by(&sigs);
            if cell_count(&ranks) == before {
                return ranks;
            }
        }
    }

    fn search(&self, ranks: Vec<u32>, best: &mut Option<CanonicalKey>) {
        let n = ranks.len();
        if cell_count(&ranks) == n {
            let key = self.encode(&ranks);
            if best.as_ref().is_none_or(|b| key < *b) {
                *best = Some(key);
            }
            return;
        }
        let mut sizes = vec![0usize; n];
        for &r in &ranks {
            sizes[r as usize] += 1;
        }
        let target = sizes
            .iter()
            .position(|&s| s > 1)
            .expect("some cell is not a singleton") as u32;
        for v in (0..n).filter(|&v| ranks[v] == target) {
            let split: Vec<(u32, bool)> = (0..n)
                .map(|u| (ranks[u], ranks[u] == target && u != v))
                .collect();
            self.search(self.refine(rank_by(&split)), best);
        }
    }

    /// Encoding of the graph with vertex `v` placed at position `pos[v]`.
    fn encode(&self, pos: &[u32]) -> CanonicalKey {
        let n = self.g.vertex_count();
        let mut order = vec![0usize; n];
        for (v, &p) in pos.iter().enumerate() {
            order[p as usize] = v;
        }
        let mut out = Vec::with_capacity(8 + 6 * n + 12 * self.g.edge_count());
        let put = |x: u32, out: &mut Vec<u8>| out.extend_from_slice(&x.to_be_bytes());
        put(n as u32, &mut out);
        for &v in &order {
            let vx = self.g.vertices()[v];
            out.push(vx.color as u8);
            out.push(vx.root as u8);
            put(vx.weight, &mut out);
        }
        let mut edges: Vec<(u32, u32, u32)> = self
            .g
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = (pos[e.u], pos[e.v]);
                (a.min(b), a.max(b), e.weight)
            })
            .collect();
        edges.sort_unstable();
        put(edges.len() as u32, &mut out);
        for (a, b, w) in edges {
            put(a, &mut out);
            put(b, &mut out);
            put(w, &mut out);
        }
        match self.g.gamma() {
            None => out.push(0),
            Some(gm) => {
                out.push(1);
                for &v in &order {
                    put(pos[gm[v]], &mut out);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{graph, Color};
    use super::*;
    use Color::{Black as B, White as W};

    #[test]
    fn relabeled_path_has_same_key() {
        let g = nonsep_path();
        let h = g.relabeled(&[3, 1, 0, 2], &[1, 2, 0], true);
        assert_ne!(g, h);
        assert_eq!(canonical_key(&g), canonical_key(&h));
    }

    #[test]
    fn edge_weight_is_part_of_the_key() {
        assert_ne!(
            canonical_key(&single_edge(2, false)),
            canonical_key(&single_edge(4, false))
        );
    }

    #[test]
    fn gamma_is_part_of_the_key() {
        assert_ne!(
            canonical_key(&single_edge(2, false)),
            canonical_key(&single_edge(2, true))
        );
    }

    #[test]
    fn conjugate_gammas_share_a_key() {
        // 4-cycle w0 b1 w2 b3; the two gammas are conjugate by swapping 1 and 3.
        let verts = [(W, 0, false), (B, 0, false), (W, 0, false), (B, 0, false)];
        let edges = [(0, 1, 2), (1, 2, 2), (2, 3, 2), (3, 0, 2)];
        let a = graph(&verts, &edges, Some(&[1, 0, 3, 2])).unwrap();
        let b = graph(&verts, &edges, Some(&[3, 2, 1, 0])).unwrap();
        assert_eq!(canonical_key(&a), canonical_key(&b));
    }

    #[test]
    fn non_conjugate_gammas_differ() {
        let verts = [(W, 0, false), (B, 0, false), (W, 0, false), (B, 0, false)];
        let edges = [(0, 1, 2), (1, 2, 2), (2, 3, 2), (3, 0, 2)];
        let involution = graph(&verts, &edges, Some(&[1, 0, 3, 2])).unwrap();
        let rotation = graph(&verts, &edges, Some(&[1, 2, 3, 0])).unwrap();
        assert_ne!(canonical_key(&involution), canonical_key(&rotation));
    }

    #[test]
    fn parallel_edges_are_counted() {
        let one = graph(&[(W, 0, false), (B, 0, false)], &[(0, 1, 1)], None).unwrap();
        let two = graph(
            &[(W, 0, false), (B, 0, false)],
            &[(0, 1, 1), (1, 0, 1)],
            None,
        )
        .unwrap();
        assert_ne!(canonical_key(&one), canonical_key(&two));
    }

    #[test]
    fn empty_graph_has_a_key() {
        let g = graph(&[], &[], None).unwrap();
        assert_eq!(canonical_key(&g), canonical_key(&g.clone()));
    }
}
