//! Exhaustive generation of separating and non-separating graphs up to
//! isomorphism.
//!
//! The fast path generates the graph with its root leaves removed (the
//! "core") as a canonical white-by-black multiplicity matrix, decorates it
//! with edge and vertex weights, hangs the root leaves back on, and
//! deduplicates by [`canonical_key`](crate::canonical_key). The [`naive`]
//! module reaches the same counts by brute force over labeled graphs and
//! pairwise isomorphism search.

mod fast;
pub mod naive;
mod orderly;

use std::env;

use crate::decograph::{DecoratedGraph, GammaOrder};
use crate::topotype::{TopType, Variant};
use crate::{Error, Result};

/// Default cap on candidate structures visited by one enumeration.
pub const DEFAULT_WORK_LIMIT: u64 = 100_000_000;

/// Environment variable overriding [`DEFAULT_WORK_LIMIT`].
pub const WORK_LIMIT_ENV: &str = "RMF_WORK_LIMIT";

/// How non-separating graphs are counted with respect to `gamma`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum GammaCount {
    /// A graph is the pair (graph, gamma); conjugate gammas coincide.
    #[default]
    PerGamma,
    /// A graph is the underlying graph, counted once if some gamma exists.
    Existence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    pub gamma_order: GammaOrder,
    pub gamma_count: GammaCount,
    /// When set, separating types with `|sum I| = n` are refused by
    /// [`enum_sep`]; their answer is known in closed form.
    pub shortcircuit: bool,
    pub work_limit: u64,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            gamma_order: GammaOrder::Involution,
            gamma_count: GammaCount::PerGamma,
            shortcircuit: true,
            work_limit: DEFAULT_WORK_LIMIT,
        }
    }
}

impl EnumOptions {
    /// Defaults, with the work limit taken from `RMF_WORK_LIMIT` when set.
    pub fn from_env() -> Result<Self> {
        let mut opts = EnumOptions::default();
        if let Ok(raw) = env::var(WORK_LIMIT_ENV) {
            opts.work_limit = match raw.trim().parse::<u64>() {
                Ok(v) if v > 0 => v,
                _ => {
                    return Err(Error::Precondition(format!(
                        "{WORK_LIMIT_ENV} must be a positive integer, got {raw:?}"
                    )))
                }
            };
        }
        Ok(opts)
    }

    pub fn no_shortcircuit(self) -> Self {
        EnumOptions {
            shortcircuit: false,
            ..self
        }
    }
}

/// Size limits implied by the genus and degree equations of a type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBounds {
    /// Exact sum of all edge weights.
    pub edge_weight_total: u64,
    pub max_edges: u64,
    pub max_vertices: u64,
    pub max_total_vweight: u64,
    /// Cycle rank plus total vertex weight, fixed by the genus equation.
    pub genus_slack: u64,
}

impl EnumerationBounds {
    pub fn for_type(t: &TopType) -> Result<Self> {
        require_enumerable(t)?;
        let n = u64::from(t.n());
        let (total, slack) = match t.variant() {
            Variant::NonSep => (n + t.index_sum() as u64, u64::from(t.g()) - t.k() as u64),
            Variant::Sep => {
                let slack = t
                    .xi_bound()
                    .expect("existing separating types have even g-k+1");
                ((n + t.abs_sum() as u64) / 2, u64::from(slack))
            }
            Variant::SepExt => unreachable!("rejected by require_enumerable"),
        };
        Ok(EnumerationBounds {
            edge_weight_total: total,
            max_edges: total,
            max_vertices: total + 1,
            max_total_vweight: slack,
            genus_slack: slack,
        })
    }
}

fn require_enumerable(t: &TopType) -> Result<()> {
    if t.variant() == Variant::SepExt {
        return Err(Error::Precondition(format!(
            "{t}: extended types have no graphs"
        )));
    }
    t.require_exists()?;
    if t.has_zero_index() {
        return Err(Error::ZeroIndex(t.to_string()));
    }
    Ok(())
}

/// Counts candidate structures against the work limit.
#[derive(Debug)]
pub(crate) struct Work {
    used: u64,
    limit: u64,
}

impl Work {
    pub(crate) fn new(limit: u64) -> Self {
        Work { used: 0, limit }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::WorkLimit { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// All non-separating graphs of `t` up to isomorphism, sorted by canonical
/// key.
pub fn enum_nonsep(t: &TopType, opts: &EnumOptions) -> Result<Vec<DecoratedGraph>> {
    if t.variant() != Variant::NonSep {
        return Err(Error::Precondition(format!(
            "{t} is not a non-separating type"
        )));
    }
    let bounds = EnumerationBounds::for_type(t)?;
    fast::enumerate(t, &bounds, opts)
}

/// All separating graphs of `t` up to isomorphism, sorted by canonical key.
pub fn enum_sep(t: &TopType, opts: &EnumOptions) -> Result<Vec<DecoratedGraph>> {
    if t.variant() != Variant::Sep {
        return Err(Error::Precondition(format!("{t} is not a separating type")));
    }
    let bounds = EnumerationBounds::for_type(t)?;
    if opts.shortcircuit && t.index_sum().abs() == i64::from(t.n()) {
        return Err(Error::Precondition(format!(
            "{t}: |sum I| = n has exactly one graph; disable the short-circuit to enumerate"
        )));
    }
    fast::enumerate(t, &bounds, opts)
}
