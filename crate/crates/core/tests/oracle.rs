//! The fast enumerator against the brute-force oracle.

use rmf_core::census::{candidates, SweepBounds, VariantFilter};
use rmf_core::enumerator::naive::{enum_nonsep_naive, enum_sep_naive, isomorphic};
use rmf_core::{enum_nonsep, enum_sep, EnumOptions, GammaCount, GammaOrder, TopType, Variant};

fn graph_types(g_max: u32, n_max: u32, abs_i_max: u32) -> Vec<TopType> {
    let bounds = SweepBounds {
        g_max,
        n_max,
        abs_i_max,
        filter: VariantFilter::All,
        include_missing: false,
    };
    candidates(&bounds)
        .into_iter()
        .filter(|t| t.variant() != Variant::SepExt && t.exists().exists && !t.has_zero_index())
        .collect()
}

fn compare(t: &TopType, opts: &EnumOptions) {
    let (fast, slow) = match t.variant() {
        Variant::NonSep => (
            enum_nonsep(t, opts).unwrap(),
            enum_nonsep_naive(t, opts).unwrap(),
        ),
        _ => (enum_sep(t, opts).unwrap(), enum_sep_naive(t, opts).unwrap()),
    };
    assert_eq!(fast.len(), slow.len(), "{t} {opts:?}");
    for g in &fast {
        assert!(
            slow.iter().any(|s| isomorphic(g, s)),
            "{t}: fast graph missing from oracle"
        );
    }
}

#[test]
fn fast_matches_naive_on_small_types() {
    let opts = EnumOptions::default().no_shortcircuit();
    let types = graph_types(2, 5, 3);
    assert!(types.len() > 20);
    for t in &types {
        compare(t, &opts);
    }
}

#[test]
fn gamma_modes_match_naive() {
    let base = EnumOptions::default().no_shortcircuit();
    let modes = [
        EnumOptions {
            gamma_count: GammaCount::Existence,
            ..base
        },
        EnumOptions {
            gamma_order: GammaOrder::Any,
            ..base
        },
    ];
    for t in graph_types(2, 5, 2)
        .iter()
        .filter(|t| t.variant() == Variant::NonSep)
    {
        for opts in &modes {
            compare(t, opts);
        }
    }
}

#[test]
fn frozen_oracle_counts() {
    let opts = EnumOptions::default();
    let t: TopType = "0,4,0|".parse().unwrap();
    assert_eq!(enum_nonsep_naive(&t, &opts).unwrap().len(), 2);
    assert_eq!(enum_nonsep(&t, &opts).unwrap().len(), 2);
    let t: TopType = "1,6,1|-1,1".parse().unwrap();
    assert_eq!(enum_sep_naive(&t, &opts).unwrap().len(), 3);
    assert_eq!(enum_sep(&t, &opts).unwrap().len(), 3);
}
