//! Strata `Π(P|Q)` of the space `Πᵐ` of real unordered m-tuples of points
//! of the Riemann sphere, and the cell decompositions of the configuration
//! spaces `Wʳ(ℝ̂)` and `Wˢ(Λ)` that cover them.
//!
//! A stratum collects the tuples with `r` distinct real points of
//! multiplicities `P` and `s` distinct conjugate pairs of multiplicities `Q`.
//! Its Euler characteristic, as an alternating count of open cells, vanishes
//! except on the stratum of a single conjugate pair.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// The signature `(P|Q)` of a stratum. Both sequences are non-decreasing and
/// strictly positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StratumSignature {
    pub p: Vec<u32>,
    pub q: Vec<u32>,
}

impl StratumSignature {
    pub fn new(mut p: Vec<u32>, mut q: Vec<u32>) -> Option<Self> {
        if p.contains(&0) || q.contains(&0) {
            return None;
        }
        p.sort_unstable();
        q.sort_unstable();
        Some(StratumSignature { p, q })
    }

    pub fn r(&self) -> usize {
        self.p.len()
    }

    pub fn s(&self) -> usize {
        self.q.len()
    }

    /// `m = sum(P) + 2 sum(Q)`.
    pub fn weight(&self) -> u64 {
        self.p.iter().map(|&x| u64::from(x)).sum::<u64>()
            + 2 * self.q.iter().map(|&x| u64::from(x)).sum::<u64>()
    }

    fn order_key(&self) -> (usize, &[u32], &[u32]) {
        (self.r() + self.s(), &self.p, &self.q)
    }
}

impl Ord for StratumSignature {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for StratumSignature {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn fmt_seq(f: &mut fmt::Formatter<'_>, xs: &[u32]) -> fmt::Result {
    f.write_str("[")?;
    for (j, x) in xs.iter().enumerate() {
        if j > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

impl fmt::Display for StratumSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("P=")?;
        fmt_seq(f, &self.p)?;
        f.write_str(" Q=")?;
        fmt_seq(f, &self.q)?;
        write!(f, " dim={}", stratum_dim(self))
    }
}

/// All non-decreasing sequences of positive integers summing to `total`.
pub(crate) fn partitions(total: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in min..=rest {
            if rest - part != 0 && rest - part < part {
                continue;
            }
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, 1, &mut Vec::new(), &mut out);
    out
}

/// Every stratum of `Πᵐ`, ordered lexicographically by `(r + s, P, Q)`.
pub fn enumerate_strata(m: u32) -> Vec<StratumSignature> {
    let mut out = Vec::new();
    for pair_weight in 0..=m / 2 {
        let qs = partitions(pair_weight);
        for p in partitions(m - 2 * pair_weight) {
            for q in &qs {
                out.push(StratumSignature {
                    p: p.clone(),
                    q: q.clone(),
                });
            }
        }
    }
    out.sort();
    out
}

/// `r + 2s`.
pub fn stratum_dim(sig: &StratumSignature) -> u64 {
    (sig.r() + 2 * sig.s()) as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CellKind {
    /// Tuples of `Wᵏ(ℝ̂)` avoiding infinity.
    RealFinite,
    /// Tuples of `Wᵏ(ℝ̂)` containing infinity.
    RealInfinity,
    /// A cell of `Wˢ(Λ)`.
    Lambda,
}

/// Relation between consecutive points `z_j, z_{j+1}` of a cell of `Wˢ(Λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    /// `Re z_j < Re z_{j+1}`.
    Strict,
    /// `Re z_j = Re z_{j+1}` and `Im z_j < Im z_{j+1}`.
    Stacked,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellDescriptor {
    pub kind: CellKind,
    pub relations: Vec<Relation>,
    pub dim: u32,
}

/// The cells of `Wᵏ(ℝ̂)`: the finite cell of dimension `k` and the cell at
/// infinity of dimension `k - 1`. `W⁰` is a single point.
pub fn cells_real(k: u32) -> Vec<CellDescriptor> {
    let finite = CellDescriptor {
        kind: CellKind::RealFinite,
        relations: Vec::new(),
        dim: k,
    };
    if k == 0 {
        return vec![finite];
    }
    let infinity = CellDescriptor {
        kind: CellKind::RealInfinity,
        relations: Vec::new(),
        dim: k - 1,
    };
    vec![finite, infinity]
}

fn lambda_relations(s: u32, mask: u64) -> Vec<Relation> {
    (0..s.saturating_sub(1))
        .map(|j| {
            if mask >> j & 1 == 0 {
                Relation::Strict
            } else {
                Relation::Stacked
            }
        })
        .collect()
}

fn lambda_dim(relations: &[Relation]) -> u32 {
    if relations.is_empty() {
        return 0;
    }
    2 + relations
        .iter()
        .map(|r| match r {
            Relation::Strict => 2,
            Relation::Stacked => 1,
        })
        .sum::<u32>()
}

/// The `2^(s-1)` cells of `Wˢ(Λ)`, one per relation word, in binary order
/// with `Strict` as the zero digit. `W⁰(Λ)` is a single point.
///
/// Materializes the list; `s` above 24 is refused with a panic.
pub fn cells_lambda(s: u32) -> Vec<CellDescriptor> {
    assert!(
        s <= 24,
        "cells_lambda: s={s} would allocate 2^{} cells",
        s.saturating_sub(1)
    );
    if s == 0 {
        return vec![CellDescriptor {
            kind: CellKind::Lambda,
            relations: Vec::new(),
            dim: 0,
        }];
    }
    (0..1u64 << (s - 1))
        .map(|mask| {
            let relations = lambda_relations(s, mask);
            let dim = if s == 1 { 2 } else { lambda_dim(&relations) };
            CellDescriptor {
                kind: CellKind::Lambda,
                relations,
                dim,
            }
        })
        .collect()
}

fn alternating(cells: &[CellDescriptor]) -> i64 {
    cells
        .iter()
        .map(|c| if c.dim % 2 == 0 { 1 } else { -1 })
        .sum()
}

/// Alternating cell count of `Wᵏ(ℝ̂)`.
pub fn chi_w_real(k: u32) -> i64 {
    alternating(&cells_real(k))
}

/// Alternating cell count of `Wˢ(Λ)`.
pub fn chi_w_lambda(s: u32) -> i64 {
    alternating(&cells_lambda(s))
}

/// Alternating cell count of `Π(1..1|1..1) ≅ Wʳ(ℝ̂) × Wˢ(Λ)`, the
/// unramified base every stratum with `r` real and `s` conjugate points covers.
pub fn chi_cover(r: u32, s: u32) -> i64 {
    chi_w_real(r) * chi_w_lambda(s)
}
