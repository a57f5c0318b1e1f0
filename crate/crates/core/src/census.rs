//! Catalog sweeps over all topological types within bounds.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerator::EnumOptions;
use crate::euler::{chi_compactification, chi_component};
use crate::topotype::{TopType, Variant};
use crate::Error;

/// Which variants a sweep reports.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum VariantFilter {
    #[default]
    All,
    NonSep,
    /// Separating types that admit no extension.
    Sep,
    /// Extended separating types.
    Ext,
}

impl VariantFilter {
    fn accepts(self, v: Variant) -> bool {
        match self {
            VariantFilter::All => true,
            VariantFilter::NonSep => v == Variant::NonSep,
            VariantFilter::Sep => v == Variant::Sep,
            VariantFilter::Ext => v == Variant::SepExt,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBounds {
    pub g_max: u32,
    /// Degrees run from 1 to `n_max`.
    pub n_max: u32,
    pub abs_i_max: u32,
    pub filter: VariantFilter,
    /// Also report candidate types that do not exist, with empty invariants.
    pub include_missing: bool,
}

/// One line of a catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    #[serde(rename = "type")]
    pub ty: TopType,
    pub exists: bool,
    pub dim: Option<u64>,
    pub chi_h: Option<u64>,
    pub chi_n: Option<u64>,
    pub graph_count: Option<u64>,
    /// Route of `chi_n`.
    pub route: Option<String>,
    /// Set when an invariant could not be computed, typically because the
    /// enumeration hit its work limit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CensusRecord {
    pub fn compute(ty: TopType, opts: &EnumOptions) -> Self {
        let mut rec = CensusRecord {
            exists: ty.exists().exists,
            ty,
            dim: None,
            chi_h: None,
            chi_n: None,
            graph_count: None,
            route: None,
            error: None,
        };
        if !rec.exists {
            return rec;
        }
        let outcome = (|| -> Result<(), Error> {
            rec.dim = Some(rec.ty.dimension()?);
            rec.chi_h = Some(chi_component(&rec.ty)?.value);
            let n = chi_compactification(&rec.ty, opts)?;
            rec.chi_n = Some(n.value);
            rec.graph_count = n.graph_count;
            rec.route = Some(n.route.to_string());
            Ok(())
        })();
        if let Err(e) = outcome {
            rec.error = Some(e.to_string());
        }
        rec
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// Every normalized candidate type within `bounds`, existing or not, with
/// separating types that admit extension replaced by their refinements.
pub fn candidates(bounds: &SweepBounds) -> Vec<TopType> {
    let m = i64::from(bounds.abs_i_max);
    let mut out = BTreeSet::new();
    for g in 0..=bounds.g_max {
        for n in 1..=bounds.n_max {
            for k in 0..=g as usize + 1 {
                for idx in multisets(0, m, k) {
                    if let Ok(t) = TopType::non_sep(g, n, &idx) {
                        out.insert(t);
                    }
                }
                for idx in multisets(-m, m, k) {
                    let Ok(t) = TopType::sep(g, n, &idx) else {
                        continue;
                    };
                    if t.exists().exists && t.admits_extension() {
                        let h = t.xi_bound().expect("existing types have even g-k+1");
                        for xi in 0..=h {
                            out.insert(TopType::sep_ext(g, n, &idx, xi).expect("in range"));
                        }
                    } else {
                        out.insert(t);
                    }
                }
            }
        }
    }
    out.into_iter()
        .filter(|t| bounds.filter.accepts(t.variant()))
        .collect()
}

/// Non-decreasing sequences of length `k` with entries in `lo..=hi`.
fn multisets(lo: i64, hi: i64, k: usize) -> Vec<Vec<i64>> {
    fn go(lo: i64, hi: i64, k: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().copied().unwrap_or(lo);
        for x in start..=hi {
            cur.push(x);
            go(lo, hi, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lo, hi, k, &mut Vec::new(), &mut out);
    out
}

/// Records for every type within `bounds`, ordered by type. Runs on the
/// current rayon pool; the output does not depend on its size.
pub fn sweep(bounds: &SweepBounds, opts: &EnumOptions) -> Vec<CensusRecord> {
    candidates(bounds)
        .into_par_iter()
        .map(|t| CensusRecord::compute(t, opts))
        .filter(|r| r.exists || bounds.include_missing)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bounds(g: u32, n: u32, m: u32, filter: VariantFilter) -> SweepBounds {
        SweepBounds {
            g_max: g,
            n_max: n,
            abs_i_max: m,
            filter,
            include_missing: false,
        }
    }

    fn find<'a>(recs: &'a [CensusRecord], s: &str) -> &'a CensusRecord {
        let t: TopType = s.parse().unwrap();
        recs.iter()
            .find(|r| r.ty == t)
            .unwrap_or_else(|| panic!("{s} missing"))
    }

    #[test]
    fn disk_is_in_the_small_sweep() {
        let recs = sweep(
            &bounds(0, 2, 2, VariantFilter::Sep),
            &EnumOptions::default(),
        );
        let r = find(&recs, "0,2,1|2");
        assert_eq!((r.chi_h, r.chi_n), (Some(1), Some(1)));
    }

    #[test]
    fn degree_one_full_degree() {
        let recs = sweep(
            &bounds(0, 1, 1, VariantFilter::All),
            &EnumOptions::default(),
        );
        let r = find(&recs, "0,1,1|1");
        assert_eq!(r.route.as_deref(), Some("SEP_FULL_DEGREE"));
    }

    #[test]
    fn empty_bounds() {
        assert!(sweep(
            &bounds(0, 0, 0, VariantFilter::All),
            &EnumOptions::default()
        )
        .is_empty());
    }

    #[test]
    fn sorted_deduplicated_and_round_trips() {
        let recs = sweep(
            &bounds(1, 3, 2, VariantFilter::All),
            &EnumOptions::default(),
        );
        assert!(recs.windows(2).all(|w| w[0].ty < w[1].ty));
        for r in &recs {
            assert!(r.exists && r.error.is_none());
            assert_eq!(r.dim, Some(2 * u64::from(r.ty.g() + r.ty.n() - 1)));
            let back: CensusRecord = serde_json::from_str(&r.to_json_line()).unwrap();
            assert_eq!(&back, r);
        }
    }

    #[test]
    fn missing_types_have_null_invariants() {
        let b = SweepBounds {
            include_missing: true,
            ..bounds(0, 3, 1, VariantFilter::NonSep)
        };
        let recs = sweep(&b, &EnumOptions::default());
        let r = find(&recs, "0,3,0|1");
        assert!(!r.exists);
        assert_eq!(
            (r.dim, r.chi_h, r.chi_n, r.graph_count, &r.route),
            (None, None, None, None, &None)
        );
    }

    #[test]
    fn work_limit_flags_the_record() {
        let opts = EnumOptions {
            work_limit: 1,
            ..EnumOptions::default()
        };
        let recs = sweep(&bounds(1, 3, 1, VariantFilter::NonSep), &opts);
        let r = find(&recs, "1,3,0|1");
        assert!(r.error.as_deref().unwrap().contains("work limit"));
        assert_eq!(r.chi_h, Some(0));
        assert_eq!(r.chi_n, None);
    }
}
