//! Orderly generation of connected bipartite multigraph shapes.
//!
//! A shape with `w` white and `b` black vertices is a `w x b` matrix of edge
//! multiplicities. Two shapes are isomorphic exactly when one matrix turns
//! into the other by permuting rows and columns. The canonical matrix is the
//! one whose row-major reading is lexicographically greatest. Canonicity is
//! hereditary on row prefixes, so the generator fills rows top to bottom and
//! rejects a partial matrix as soon as its prefix is not canonical.

use super::Work;
use crate::Result;

pub(crate) type Shape = Vec<Vec<u32>>;

/// Canonical connected shapes with `w` rows, `b` columns and `edges` edges in
/// total. Every row and column is nonzero.
pub(crate) fn shapes(w: usize, b: usize, edges: u32, work: &mut Work) -> Result<Vec<Shape>> {
    let mut out = Vec::new();
    if w == 0 || b == 0 {
        return Ok(out);
    }
    let perms = permutations(b);
    let mut rows = Vec::with_capacity(w);
    fill(w, b, edges, &perms, &mut rows, &mut out, work)?;
    Ok(out)
}

fn fill(
    w: usize,
    b: usize,
    remaining: u32,
    perms: &[Vec<usize>],
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Shape>,
    work: &mut Work,
) -> Result<()> {
    work.tick()?;
    let left = w - rows.len();
    if left == 0 {
        if remaining == 0 && connected(rows, b) {
            out.push(rows.clone());
        }
        return Ok(());
    }
    // Each remaining row needs at least one edge.
    if (remaining as usize) < left {
        return Ok(());
    }
    let max_sum = remaining - (left as u32 - 1);
    let min_sum = if left == 1 { remaining } else { 1 };
    for sum in (min_sum..=max_sum).rev() {
        for row in compositions(sum, b) {
            if rows.last().is_some_and(|prev| row > *prev) {
                continue;
            }
            rows.push(row);
            if prefix_is_canonical(rows, perms) {
                fill(w, b, remaining - sum, perms, rows, out, work)?;
            }
            rows.pop();
        }
    }
    Ok(())
}

/// All vectors of `parts` non-negative integers summing to `total`,
/// lexicographically decreasing.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=rest).rev() {
            cur.push(x);
            go(rest - x, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// For a fixed column permutation the greatest row arrangement sorts rows in
/// decreasing order, so it suffices to try every column permutation.
fn prefix_is_canonical(rows: &[Vec<u32>], perms: &[Vec<usize>]) -> bool {
    let mut permuted: Vec<Vec<u32>> = rows.to_vec();
    for p in perms {
        for (dst, src) in permuted.iter_mut().zip(rows) {
            for (j, &c) in p.iter().enumerate() {
                dst[j] = src[c];
            }
        }
        permuted.sort_unstable_by(|a, b| b.cmp(a));
        if permuted.as_slice() > rows {
            return false;
        }
    }
    true
}

fn connected(rows: &[Vec<u32>], b: usize) -> bool {
    let w = rows.len();
    let mut seen = vec![false; w + b];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        let next: Vec<usize> = if x < w {
            (0..b).filter(|&j| rows[x][j] > 0).map(|j| w + j).collect()
        } else {
            (0..w).filter(|&i| rows[i][x - w] > 0).collect()
        };
        for y in next {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(w: usize, b: usize, e: u32) -> usize {
        shapes(w, b, e, &mut Work::new(u64::MAX)).unwrap().len()
    }

    /// Connected bipartite multigraphs by brute force over all matrices,
    /// bucketed by the set of all row/column-permuted images.
    fn brute(w: usize, b: usize, e: u32) -> usize {
        let cells = w * b;
        let mut classes = std::collections::BTreeSet::new();
        let mut m = vec![0u32; cells];
        let rows_of = |m: &[u32]| -> Vec<Vec<u32>> { m.chunks(b).map(|c| c.to_vec()).collect() };
        loop {
            if m.iter().sum::<u32>() == e {
                let rows = rows_of(&m);
                if rows.iter().all(|r| r.iter().any(|&x| x > 0)) && connected(&rows, b) {
                    let mut best: Option<Vec<Vec<u32>>> = None;
                    for rp in permutations(w) {
                        for cp in permutations(b) {
                            let img: Vec<Vec<u32>> = rp
                                .iter()
                                .map(|&r| cp.iter().map(|&c| rows[r][c]).collect())
                                .collect();
                            if best.as_ref().is_none_or(|bst| img > *bst) {
                                best = Some(img);
                            }
                        }
                    }
                    classes.insert(best.unwrap());
                }
            }
            let mut i = 0;
            loop {
                if i == cells {
                    return classes.len();
                }
                m[i] += 1;
                if m[i] <= e {
                    break;
                }
                m[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn small_shape_counts() {
        // One white, one black: e parallel edges.
        assert_eq!(count(1, 1, 3), 1);
        // Stars.
        assert_eq!(count(1, 3, 3), 1);
        assert_eq!(count(1, 3, 4), 1);
        // Paths and the 4-cycle.
        assert_eq!(count(2, 2, 3), 1);
        assert_eq!(count(2, 2, 4), 4);
        assert_eq!(count(2, 1, 1), 0);
    }

    #[test]
    fn orderly_matches_brute_force() {
        for (w, b) in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)] {
            for e in 1..=5 {
                assert_eq!(count(w, b, e), brute(w, b, e), "w={w} b={b} e={e}");
            }
        }
    }

    #[test]
    fn shapes_are_canonical_and_distinct() {
        let all = shapes(3, 3, 5, &mut Work::new(u64::MAX)).unwrap();
        let perms = permutations(3);
        for s in &all {
            assert!(prefix_is_canonical(s, &perms));
        }
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }
}
