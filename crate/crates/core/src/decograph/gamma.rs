use super::{Color, DecoratedGraph, GammaOrder};

/// Every admissible `gamma` of `g`: color-swapping automorphisms preserving
/// vertex weights, edge weights and root flags, with even weight on each edge
/// whose endpoints are exchanged. Involutions only, unless `order` is
/// [`GammaOrder::Any`]. Any `gamma` already attached to `g` is ignored.
///
/// Results are sorted by their image arrays.
pub fn find_gammas(g: &DecoratedGraph, order: GammaOrder) -> Vec<Vec<usize>> {
    let whites: Vec<usize> = ids_of(g, Color::White);
    let blacks: Vec<usize> = ids_of(g, Color::Black);
    if whites.len() != blacks.len() {
        return Vec::new();
    }
    let sig = signatures(g);
    let target = g.edge_multiset();
    let mut out = Vec::new();
    let mut gamma = vec![usize::MAX; g.vertex_count()];
    match order {
        GammaOrder::Involution => {
            let mut used = vec![false; g.vertex_count()];
            involutions(
                g, &whites, &blacks, &sig, &target, 0, &mut gamma, &mut used, &mut out,
            );
        }
        GammaOrder::Any => {
            let mut first = Vec::new();
            let mut used = vec![false; g.vertex_count()];
            bijections(&whites, &blacks, &sig, 0, &mut gamma, &mut used, &mut first);
            for half in first {
                let mut second = Vec::new();
                let mut used = vec![false; g.vertex_count()];
                bijections(
                    &blacks,
                    &whites,
                    &sig,
                    0,
                    &mut half.clone(),
                    &mut used,
                    &mut second,
                );
                for full in second {
                    if admissible(g, &full, &target) {
                        out.push(full);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn ids_of(g: &DecoratedGraph, c: Color) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| g.vertices()[v].color == c)
        .collect()
}

/// Data any automorphism must preserve, apart from color.
fn signatures(g: &DecoratedGraph) -> Vec<(u32, bool, Vec<u32>)> {
    g.adjacency()
        .into_iter()
        .zip(g.vertices())
        .map(|(nb, v)| {
            let mut w: Vec<u32> = nb.into_iter().map(|(_, w)| w).collect();
            w.sort_unstable();
            (v.weight, v.root, w)
        })
        .collect()
}

fn admissible(g: &DecoratedGraph, gamma: &[usize], target: &[(usize, usize, u32)]) -> bool {
    g.mapped_edge_multiset(gamma) == target
        && g.edges()
            .iter()
            .all(|e| !(gamma[e.u] == e.v && gamma[e.v] == e.u) || e.weight % 2 == 0)
}

#[allow(clippy::too_many_arguments)]
fn involutions(
    g: &DecoratedGraph,
    whites: &[usize],
    blacks: &[usize],
    sig: &[(u32, bool, Vec<u32>)],
    target: &[(usize, usize, u32)],
    at: usize,
    gamma: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    if at == whites.len() {
        if admissible(g, gamma, target) {
            out.push(gamma.to_vec());
        }
        return;
    }
    let w = whites[at];
    for &b in blacks {
        if used[b] || sig[b] != sig[w] {
            continue;
        }
        used[b] = true;
        gamma[w] = b;
        gamma[b] = w;
        involutions(g, whites, blacks, sig, target, at + 1, gamma, used, out);
        used[b] = false;
    }
}

/// All signature-preserving bijections `from -> to`, written into `gamma`.
fn bijections(
    from: &[usize],
    to: &[usize],
    sig: &[(u32, bool, Vec<u32>)],
    at: usize,
    gamma: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    if at == from.len() {
        out.push(gamma.to_vec());
        return;
    }
    let a = from[at];
    for &b in to {
        if used[b] || sig[b] != sig[a] {
            continue;
        }
        used[b] = true;
        gamma[a] = b;
        bijections(from, to, sig, at + 1, gamma, used, out);
        used[b] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::graph;
    use super::*;
    use Color::{Black as B, White as W};

    #[test]
    fn single_even_edge_has_one_gamma() {
        assert_eq!(
            find_gammas(&single_edge(2, false), GammaOrder::Involution),
            vec![vec![1, 0]]
        );
    }

    #[test]
    fn single_odd_edge_has_none() {
        assert!(find_gammas(&single_edge(3, false), GammaOrder::Involution).is_empty());
    }

    #[test]
    fn running_example_path_has_the_reflection() {
        let g = nonsep_path().with_gamma(None).unwrap();
        assert_eq!(
            find_gammas(&g, GammaOrder::Involution),
            vec![vec![3, 2, 1, 0]]
        );
    }

    #[test]
    fn unbalanced_graph_has_none() {
        assert!(find_gammas(&sep_path(), GammaOrder::Involution).is_empty());
    }

    #[test]
    fn four_cycle_orders() {
        let g = graph(
            &[(W, 0, false), (B, 0, false), (W, 0, false), (B, 0, false)],
            &[(0, 1, 2), (1, 2, 2), (2, 3, 2), (3, 0, 2)],
            None,
        )
        .unwrap();
        // Color-swapping symmetries of the square: two reflections through
        // edge midpoints and two rotations by a quarter turn.
        let inv = find_gammas(&g, GammaOrder::Involution);
        assert_eq!(inv, vec![vec![1, 0, 3, 2], vec![3, 2, 1, 0]]);
        let any = find_gammas(&g, GammaOrder::Any);
        assert_eq!(any.len(), 4);
        assert!(inv.iter().all(|x| any.contains(x)));
    }
}
