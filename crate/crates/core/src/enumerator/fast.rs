//! Core-and-roots generation.
//!
//! Root vertices are weight-zero leaves, so removing them leaves a connected
//! core carrying all non-root edges. The core's edge weights sum to the total
//! from the degree equation minus the root weights, and its cycle rank plus
//! total vertex weight equals the slack of the genus equation. Each core shape
//! comes from the orderly generator once; decorations and root placements are
//! generated with repetition and deduplicated by canonical key.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::{orderly, EnumOptions, EnumerationBounds, GammaCount, Work};
use crate::decograph::{
    canonical_key, find_gammas, CanonicalKey, Color, DecoratedGraph, Edge, Vertex,
};
use crate::topotype::{TopType, Variant};
use crate::Result;

/// Root leaves to hang on the core: white roots attach to black core
/// vertices and black roots to white ones.
struct Roots {
    white: Vec<u32>,
    black: Vec<u32>,
}

impl Roots {
    fn for_type(t: &TopType) -> Self {
        let mut white: Vec<u32>;
        let mut black: Vec<u32>;
        match t.variant() {
            Variant::NonSep => {
                white = t.indices().iter().map(|&i| i as u32).collect();
                black = white.clone();
            }
            _ => {
                white = t
                    .indices()
                    .iter()
                    .filter(|&&i| i < 0)
                    .map(|&i| (-i) as u32)
                    .collect();
                black = t
                    .indices()
                    .iter()
                    .filter(|&&i| i > 0)
                    .map(|&i| i as u32)
                    .collect();
            }
        }
        white.sort_unstable();
        black.sort_unstable();
        Roots { white, black }
    }

    fn total_weight(&self) -> u64 {
        self.white
            .iter()
            .chain(&self.black)
            .map(|&w| u64::from(w))
            .sum()
    }
}

struct Core {
    whites: usize,
    blacks: usize,
    vertex_weights: Vec<u32>,
    edges: Vec<Edge>,
}

struct Collector<'a> {
    opts: &'a EnumOptions,
    nonsep: bool,
    found: BTreeMap<CanonicalKey, DecoratedGraph>,
    work: Work,
}

impl Collector<'_> {
    fn emit(&mut self, g: DecoratedGraph) -> Result<()> {
        self.work.tick()?;
        if !self.nonsep {
            self.found.entry(canonical_key(&g)).or_insert(g);
            return Ok(());
        }
        let gammas = find_gammas(&g, self.opts.gamma_order);
        match self.opts.gamma_count {
            GammaCount::PerGamma => {
                for gamma in gammas {
                    let with = g.with_gamma(Some(gamma))?;
                    self.found.entry(canonical_key(&with)).or_insert(with);
                }
            }
            GammaCount::Existence => {
                if let Some(first) = gammas.into_iter().next() {
                    if let Entry::Vacant(slot) = self.found.entry(canonical_key(&g)) {
                        slot.insert(g.with_gamma(Some(first))?);
                    }
                }
            }
        }
        Ok(())
    }
}

pub(super) fn enumerate(
    t: &TopType,
    bounds: &EnumerationBounds,
    opts: &EnumOptions,
) -> Result<Vec<DecoratedGraph>> {
    let roots = Roots::for_type(t);
    let nonsep = t.variant() == Variant::NonSep;
    let core_weight = (bounds.edge_weight_total - roots.total_weight()) as u32;
    let slack = bounds.genus_slack as u32;
    let mut out = Collector {
        opts,
        nonsep,
        found: BTreeMap::new(),
        work: Work::new(opts.work_limit),
    };

    if core_weight == 0 {
        // A single core vertex; only reachable in the separating case.
        for color in [Color::White, Color::Black] {
            let (whites, blacks) = if color == Color::White {
                (1, 0)
            } else {
                (0, 1)
            };
            let core = Core {
                whites,
                blacks,
                vertex_weights: vec![slack],
                edges: Vec::new(),
            };
            hang_roots(&core, &roots, &mut out)?;
        }
        return Ok(out.found.into_values().collect());
    }

    for core_edges in 1..=core_weight {
        for cycles in 0..=slack {
            let Some(vertices) = (core_edges + 1).checked_sub(cycles) else {
                continue;
            };
            let vertices = vertices as usize;
            if vertices < 2 {
                continue;
            }
            let splits: Vec<(usize, usize)> = if nonsep {
                if vertices % 2 == 1 {
                    continue;
                }
                vec![(vertices / 2, vertices / 2)]
            } else {
                (1..vertices).map(|w| (w, vertices - w)).collect()
            };
            for (whites, blacks) in splits {
                for shape in orderly::shapes(whites, blacks, core_edges, &mut out.work)? {
                    decorate(
                        &shape,
                        whites,
                        blacks,
                        core_weight,
                        slack - cycles,
                        &roots,
                        &mut out,
                    )?;
                }
            }
        }
    }
    Ok(out.found.into_values().collect())
}

fn decorate(
    shape: &orderly::Shape,
    whites: usize,
    blacks: usize,
    core_weight: u32,
    vertex_weight: u32,
    roots: &Roots,
    out: &mut Collector<'_>,
) -> Result<()> {
    let cells: Vec<(usize, usize, u32)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(move |(j, &m)| (i, whites + j, m))
        })
        .collect();
    let mut weightings = Vec::new();
    cell_weights(&cells, 0, core_weight, &mut Vec::new(), &mut weightings);
    let vertex_splits = compositions(vertex_weight, whites + blacks);
    for weighting in &weightings {
        let edges: Vec<Edge> = cells
            .iter()
            .zip(weighting)
            .flat_map(|(&(u, v, _), ws)| ws.iter().map(move |&weight| Edge { u, v, weight }))
            .collect();
        for vw in &vertex_splits {
            let core = Core {
                whites,
                blacks,
                vertex_weights: vw.clone(),
                edges: edges.clone(),
            };
            hang_roots(&core, roots, out)?;
        }
    }
    Ok(())
}

/// Per cell, a non-decreasing list of positive weights with as many entries
/// as the cell's multiplicity; all weights together sum to `remaining`.
fn cell_weights(
    cells: &[(usize, usize, u32)],
    at: usize,
    remaining: u32,
    cur: &mut Vec<Vec<u32>>,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    if at == cells.len() {
        if remaining == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let m = cells[at].2;
    let later: u32 = cells[at + 1..].iter().map(|c| c.2).sum();
    if remaining < m + later {
        return;
    }
    let lo = if at + 1 == cells.len() { remaining } else { m };
    for total in lo..=remaining - later {
        for parts in partitions_into(total, m) {
            cur.push(parts);
            cell_weights(cells, at + 1, remaining - total, cur, out);
            cur.pop();
        }
    }
}

/// Non-decreasing sequences of exactly `parts` positive integers summing to
/// `total`.
fn partitions_into(total: u32, parts: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, parts: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut x = min;
        while x * parts <= rest {
            cur.push(x);
            go(rest - x, parts - 1, x, cur, out);
            cur.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    go(total, parts, 1, &mut Vec::new(), &mut out);
    out
}

/// All vectors of `parts` non-negative integers summing to `total`.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=rest {
            cur.push(x);
            go(rest - x, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(total, parts, &mut Vec::new(), &mut out);
    } else if total == 0 {
        out.push(Vec::new());
    }
    out
}

/// Assignments of sorted root weights to target vertices; equal weights get
/// non-decreasing targets so each multiset placement appears once.
fn placements(weights: &[u32], targets: &[usize]) -> Vec<Vec<usize>> {
    fn go(weights: &[u32], targets: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let at = cur.len();
        if at == weights.len() {
            out.push(cur.clone());
            return;
        }
        let min = if at > 0 && weights[at] == weights[at - 1] {
            cur[at - 1]
        } else {
            0
        };
        for t in min..targets.len() {
            cur.push(t);
            go(weights, targets, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if weights.is_empty() || !targets.is_empty() {
        go(weights, targets, &mut Vec::new(), &mut out);
    }
    out.into_iter()
        .map(|p| p.into_iter().map(|i| targets[i]).collect())
        .collect()
}

fn hang_roots(core: &Core, roots: &Roots, out: &mut Collector<'_>) -> Result<()> {
    let n_core = core.whites + core.blacks;
    let white_core: Vec<usize> = (0..core.whites).collect();
    let black_core: Vec<usize> = (core.whites..n_core).collect();
    let white_places = placements(&roots.white, &black_core);
    let black_places = placements(&roots.black, &white_core);

    let mut base: Vec<Vertex> = (0..n_core)
        .map(|v| Vertex {
            color: if v < core.whites {
                Color::White
            } else {
                Color::Black
            },
            weight: core.vertex_weights[v],
            root: false,
        })
        .collect();
    base.extend(roots.white.iter().map(|_| Vertex {
        color: Color::White,
        weight: 0,
        root: true,
    }));
    base.extend(roots.black.iter().map(|_| Vertex {
        color: Color::Black,
        weight: 0,
        root: true,
    }));

    for wp in &white_places {
        for bp in &black_places {
            let mut edges = core.edges.clone();
            let mut id = n_core;
            for (&weight, &target) in roots.white.iter().zip(wp) {
                edges.push(Edge {
                    u: id,
                    v: target,
                    weight,
                });
                id += 1;
            }
            for (&weight, &target) in roots.black.iter().zip(bp) {
                edges.push(Edge {
                    u: id,
                    v: target,
                    weight,
                });
                id += 1;
            }
            out.emit(DecoratedGraph::new(base.clone(), edges, None)?)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_into_parts() {
        assert_eq!(partitions_into(5, 2), vec![vec![1, 4], vec![2, 3]]);
        assert_eq!(partitions_into(2, 3), Vec::<Vec<u32>>::new());
        assert_eq!(partitions_into(3, 3), vec![vec![1, 1, 1]]);
    }

    #[test]
    fn placements_skip_equal_weight_swaps() {
        assert_eq!(
            placements(&[1, 1], &[5, 6]),
            vec![vec![5, 5], vec![5, 6], vec![6, 6]]
        );
        assert_eq!(placements(&[1, 2], &[5, 6]).len(), 4);
        assert_eq!(placements(&[], &[]), vec![Vec::<usize>::new()]);
        assert!(placements(&[1], &[]).is_empty());
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(2, 3).len(), 6);
        assert_eq!(compositions(0, 0), vec![Vec::<u32>::new()]);
    }
}
