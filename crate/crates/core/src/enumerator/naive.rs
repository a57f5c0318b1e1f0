//! Brute-force reference enumeration.
//!
//! Generates every labeled bipartite multigraph allowed by the genus and
//! degree equations, filters with the checkers and buckets the survivors by
//! exhaustive isomorphism search. Shares nothing with the fast path beyond the
//! checkers, and is only practical for small types.

use super::{EnumOptions, EnumerationBounds, GammaCount, Work};
use crate::decograph::{check_nonsep_with, check_sep, Color, DecoratedGraph, Edge, Vertex};
use crate::topotype::{TopType, Variant};
use crate::{Error, Result};

/// Non-separating graphs of `t`, one per isomorphism class, in discovery
/// order. The short-circuit flag of `opts` is ignored.
pub fn enum_nonsep_naive(t: &TopType, opts: &EnumOptions) -> Result<Vec<DecoratedGraph>> {
    if t.variant() != Variant::NonSep {
        return Err(Error::Precondition(format!(
            "{t} is not a non-separating type"
        )));
    }
    run(t, opts)
}

/// Separating graphs of `t`, one per isomorphism class, in discovery order.
/// Also covers `|sum I| = n`.
pub fn enum_sep_naive(t: &TopType, opts: &EnumOptions) -> Result<Vec<DecoratedGraph>> {
    if t.variant() != Variant::Sep {
        return Err(Error::Precondition(format!("{t} is not a separating type")));
    }
    run(t, opts)
}

/// Exhaustive isomorphism test: a bijection on vertices preserving color,
/// root flag, vertex weight and the weighted edge multiset, and conjugating
/// one `gamma` into the other when present.
pub fn isomorphic(a: &DecoratedGraph, b: &DecoratedGraph) -> bool {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.gamma().is_some() != b.gamma().is_some()
    {
        return false;
    }
    let target = b.edge_multiset();
    let n = a.vertex_count();
    let da = a.degrees();
    let db = b.degrees();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, &da, &db, &target, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &DecoratedGraph,
    b: &DecoratedGraph,
    da: &[usize],
    db: &[usize],
    target: &[(usize, usize, u32)],
    at: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if at == map.len() {
        if a.mapped_edge_multiset(map) != target {
            return false;
        }
        return match (a.gamma(), b.gamma()) {
            (Some(ga), Some(gb)) => (0..map.len()).all(|v| gb[map[v]] == map[ga[v]]),
            _ => true,
        };
    }
    let va = a.vertices()[at];
    for x in 0..map.len() {
        if used[x] || b.vertices()[x] != va || db[x] != da[at] {
            continue;
        }
        used[x] = true;
        map[at] = x;
        if extend(a, b, da, db, target, at + 1, map, used) {
            return true;
        }
        used[x] = false;
    }
    map[at] = usize::MAX;
    false
}

fn run(t: &TopType, opts: &EnumOptions) -> Result<Vec<DecoratedGraph>> {
    let bounds = EnumerationBounds::for_type(t)?;
    let nonsep = t.variant() == Variant::NonSep;
    let (white_roots, black_roots) = if nonsep {
        (t.k(), t.k())
    } else {
        let neg = t.indices().iter().filter(|&&i| i < 0).count();
        (neg, t.k() - neg)
    };
    let roots = white_roots + black_roots;
    let total = bounds.edge_weight_total as u32;
    let mut work = Work::new(opts.work_limit);
    let mut reps: Vec<DecoratedGraph> = Vec::new();

    for edges in 1..=total {
        for vweight in 0..=bounds.max_total_vweight {
            // Vertex count from the genus equation.
            let vertices = if nonsep {
                (t.k() + edges as usize + 1 + vweight as usize) as i64 - i64::from(t.g())
            } else {
                (edges as u64 + 1 + vweight) as i64 - bounds.genus_slack as i64
            };
            let Ok(vertices) = usize::try_from(vertices) else {
                continue;
            };
            if vertices < roots {
                continue;
            }
            let free = vertices - roots;
            for plain_white in 0..=free {
                let plain_black = free - plain_white;
                if nonsep && plain_white != plain_black {
                    continue;
                }
                let layout = Layout::new(plain_white, white_roots, plain_black, black_roots);
                let mut found = Vec::new();
                layout.edge_sets(edges, total, &mut work, &mut found)?;
                for edge_set in found {
                    for weights in vertex_weights(plain_white + plain_black, vweight as u32) {
                        work.tick()?;
                        let g = layout.build(&edge_set, &weights)?;
                        for candidate in accept(g, t, opts)? {
                            if !reps.iter().any(|r| isomorphic(r, &candidate)) {
                                reps.push(candidate);
                            }
                        }
                    }
                }
            }
        }
    }

    if nonsep && opts.gamma_count == GammaCount::Existence {
        // Representatives carry a gamma; classes of the bare graph are wanted.
        let mut bare: Vec<DecoratedGraph> = Vec::new();
        for r in reps {
            let plain = r.with_gamma(None)?;
            if !bare
                .iter()
                .any(|b| isomorphic(&b.with_gamma(None).expect("valid"), &plain))
            {
                bare.push(r);
            }
        }
        return Ok(bare);
    }
    Ok(reps)
}

/// The graphs built from `g` that pass the checker: `g` itself for a
/// separating type, `g` paired with each admissible `gamma` otherwise.
fn accept(g: DecoratedGraph, t: &TopType, opts: &EnumOptions) -> Result<Vec<DecoratedGraph>> {
    if t.variant() == Variant::Sep {
        return Ok(if check_sep(&g, t)?.is_empty() {
            vec![g]
        } else {
            Vec::new()
        });
    }
    if check_nonsep_with(&g, t, opts.gamma_order)?
        .iter()
        .any(|v| !v.is_gamma())
    {
        return Ok(Vec::new());
    }
    let whites: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.vertices()[v].color == Color::White)
        .collect();
    let blacks: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.vertices()[v].color == Color::Black)
        .collect();
    let mut out = Vec::new();
    let mut gamma = vec![0usize; g.vertex_count()];
    for forward in permutations(blacks.len()) {
        for backward in permutations(whites.len()) {
            for (i, &w) in whites.iter().enumerate() {
                gamma[w] = blacks[forward[i]];
            }
            for (i, &b) in blacks.iter().enumerate() {
                gamma[b] = whites[backward[i]];
            }
            let with = g.with_gamma(Some(gamma.clone()))?;
            if check_nonsep_with(&with, t, opts.gamma_order)?.is_empty() {
                out.push(with);
            }
        }
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap(n, &mut cur, &mut out);
    out
}

fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, cur, out);
        if k % 2 == 0 {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
    heap(k - 1, cur, out);
}

/// All vectors of `parts` non-negative integers summing to `total`.
fn vertex_weights(parts: usize, total: u32) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut cur = vec![0; parts];
    fill_weights(&mut cur, 0, total, &mut out);
    out
}

fn fill_weights(cur: &mut [u32], at: usize, rest: u32, out: &mut Vec<Vec<u32>>) {
    if at + 1 == cur.len() {
        cur[at] = rest;
        out.push(cur.to_vec());
        return;
    }
    for x in 0..=rest {
        cur[at] = x;
        fill_weights(cur, at + 1, rest - x, out);
    }
}

/// Labeled vertex layout: plain whites, white roots, plain blacks, black
/// roots, in that order.
struct Layout {
    plain_white: usize,
    white_roots: usize,
    plain_black: usize,
    black_roots: usize,
    /// Every (white, black) vertex pair.
    pairs: Vec<(usize, usize)>,
}

impl Layout {
    fn new(plain_white: usize, white_roots: usize, plain_black: usize, black_roots: usize) -> Self {
        let whites = plain_white + white_roots;
        let blacks = plain_black + black_roots;
        let pairs = (0..whites)
            .flat_map(|w| (0..blacks).map(move |b| (w, whites + b)))
            .collect();
        Layout {
            plain_white,
            white_roots,
            plain_black,
            black_roots,
            pairs,
        }
    }

    fn whites(&self) -> usize {
        self.plain_white + self.white_roots
    }

    fn vertex_count(&self) -> usize {
        self.whites() + self.plain_black + self.black_roots
    }

    fn is_root(&self, v: usize) -> bool {
        let w = self.whites();
        (v >= self.plain_white && v < w) || v >= w + self.plain_black
    }

    /// Multisets of `count` weighted pairs with weights summing to `total`,
    /// as non-decreasing sequences of `(pair index, weight)`, keeping every
    /// root at degree at most one.
    fn edge_sets(
        &self,
        count: u32,
        total: u32,
        work: &mut Work,
        out: &mut Vec<Vec<(usize, u32)>>,
    ) -> Result<()> {
        let mut cur = Vec::new();
        let mut degree = vec![0usize; self.vertex_count()];
        self.grow(count, total, &mut cur, &mut degree, work, out)
    }

    fn grow(
        &self,
        left: u32,
        weight: u32,
        cur: &mut Vec<(usize, u32)>,
        degree: &mut [usize],
        work: &mut Work,
        out: &mut Vec<Vec<(usize, u32)>>,
    ) -> Result<()> {
        work.tick()?;
        if left == 0 {
            if weight == 0 {
                out.push(cur.clone());
            }
            return Ok(());
        }
        if weight < left {
            return Ok(());
        }
        let start = cur.last().copied().unwrap_or((0, 1));
        for p in start.0..self.pairs.len() {
            let (u, v) = self.pairs[p];
            if (self.is_root(u) && degree[u] > 0) || (self.is_root(v) && degree[v] > 0) {
                continue;
            }
            let min_w = if p == start.0 { start.1 } else { 1 };
            let max_w = weight - (left - 1);
            for w in min_w..=max_w {
                degree[u] += 1;
                degree[v] += 1;
                cur.push((p, w));
                self.grow(left - 1, weight - w, cur, degree, work, out)?;
                cur.pop();
                degree[u] -= 1;
                degree[v] -= 1;
            }
        }
        Ok(())
    }

    fn build(&self, edge_set: &[(usize, u32)], plain_weights: &[u32]) -> Result<DecoratedGraph> {
        let whites = self.whites();
        let mut plain = plain_weights.iter().copied();
        let vertices = (0..self.vertex_count())
            .map(|v| {
                let color = if v < whites {
                    Color::White
                } else {
                    Color::Black
                };
                let root = self.is_root(v);
                let weight = if root {
                    0
                } else {
                    plain.next().expect("one weight per plain vertex")
                };
                Vertex {
                    color,
                    weight,
                    root,
                }
            })
            .collect();
        let edges = edge_set
            .iter()
            .map(|&(p, weight)| {
                let (u, v) = self.pairs[p];
                Edge { u, v, weight }
            })
            .collect();
        DecoratedGraph::new(vertices, edges, None)
    }
}
