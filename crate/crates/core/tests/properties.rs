use proptest::prelude::*;
use rmf_core::census::CensusRecord;
use rmf_core::enumerator::naive::isomorphic;
use rmf_core::{
    canonical_key, chi_cover, enumerate_strata, find_gammas, stratum_dim, Color, DecoratedGraph,
    Edge, EnumOptions, GammaOrder, TopType, Variant, Vertex,
};

fn variant() -> impl Strategy<Value = Variant> {
    prop_oneof![
        Just(Variant::NonSep),
        Just(Variant::Sep),
        Just(Variant::SepExt)
    ]
}

prop_compose! {
    fn raw_type()(
        v in variant(),
        g in 0u32..6,
        n in 1u32..9,
        idx in prop::collection::vec(-4i64..=4, 0..5),
        xi in 0u32..4,
    ) -> (Variant, u32, u32, Vec<i64>, Option<u32>) {
        let idx = if v == Variant::NonSep { idx.into_iter().map(i64::abs).collect() } else { idx };
        (v, g, n, idx, (v == Variant::SepExt).then_some(xi))
    }
}

// A bipartite multigraph on `colors.len()` vertices; edge endpoints that
// would share a color are re-targeted to the first opposite-colored vertex.
prop_compose! {
    fn small_graph(max_vertices: usize, max_weight: u32)(
        colors in prop::collection::vec(any::<bool>(), 2..=max_vertices),
    )(
        edges in prop::collection::vec(
            (0..colors.len(), 0..colors.len(), 1..=max_weight),
            0..=colors.len() + 1,
        ),
        vweights in prop::collection::vec(0u32..2, colors.len()),
        colors in Just(colors),
    ) -> DecoratedGraph {
        let mut colors = colors;
        colors[0] = false;
        colors[1] = true;
        let vertices: Vec<Vertex> = colors
            .iter()
            .zip(&vweights)
            .map(|(&c, &w)| Vertex { color: if c { Color::Black } else { Color::White }, weight: w, root: false })
            .collect();
        let edges = edges
            .into_iter()
            .map(|(u, v, weight)| {
                let v = if colors[u] == colors[v] { colors.iter().position(|&c| c != colors[u]).unwrap() } else { v };
                Edge { u, v, weight }
            })
            .collect();
        DecoratedGraph::new(vertices, edges, None).unwrap()
    }
}

fn relabel(g: &DecoratedGraph, seed: &[usize], flip: bool) -> DecoratedGraph {
    // Permutations from sort keys.
    let perm = |n: usize| {
        let mut ids: Vec<usize> = (0..n).collect();
        ids.sort_by_key(|&i| (seed[i % seed.len()].wrapping_mul(i + 7), i));
        let mut inv = vec![0; n];
        for (pos, &i) in ids.iter().enumerate() {
            inv[i] = pos;
        }
        inv
    };
    g.relabeled(&perm(g.vertex_count()), &perm(g.edge_count()), flip)
}

proptest! {
    #[test]
    fn normal_form_is_idempotent_and_round_trips((v, g, n, idx, xi) in raw_type()) {
        if let Ok(t) = TopType::normalize(v, g, n, &idx, xi) {
            let again = TopType::normalize(t.variant(), t.g(), t.n(), t.indices(), t.xi()).unwrap();
            prop_assert_eq!(&again, &t);
            prop_assert_eq!(t.to_string().parse::<TopType>().unwrap(), t.clone());
            let json = serde_json::to_string(&t).unwrap();
            prop_assert_eq!(serde_json::from_str::<TopType>(&json).unwrap(), t);
        }
    }

    #[test]
    fn normal_form_ignores_order_and_orientation((v, g, n, idx, xi) in raw_type(), rot in 0usize..5) {
        let Ok(t) = TopType::normalize(v, g, n, &idx, xi) else { return Ok(()) };
        let mut rotated = idx.clone();
        if !rotated.is_empty() {
            let r = rot % rotated.len();
            rotated.rotate_left(r);
        }
        prop_assert_eq!(TopType::normalize(v, g, n, &rotated, xi).unwrap(), t.clone());
        if v.is_separating() {
            let flipped: Vec<i64> = idx.iter().map(|i| -i).collect();
            let mirrored = match (xi, t.xi_bound()) {
                (Some(x), Some(h)) if x <= h => Some(h - x),
                (Some(_), _) => return Ok(()),
                (None, _) => None,
            };
            prop_assert_eq!(TopType::normalize(v, g, n, &flipped, mirrored).unwrap(), t);
        }
    }

    #[test]
    fn existence_and_dimension_agree((v, g, n, idx, xi) in raw_type()) {
        let Ok(t) = TopType::normalize(v, g, n, &idx, xi) else { return Ok(()) };
        let report = t.exists();
        prop_assert_eq!(report.exists, report.violated.is_empty());
        match t.dimension() {
            Ok(d) => {
                prop_assert!(report.exists);
                prop_assert_eq!(d, 2 * u64::from(g + n - 1));
            }
            Err(_) => prop_assert!(!report.exists),
        }
    }

    #[test]
    fn canonical_key_is_relabeling_invariant(
        g in small_graph(8, 3),
        seed in prop::collection::vec(0usize..1000, 1..8),
        flip in any::<bool>(),
    ) {
        let h = relabel(&g, &seed, flip);
        prop_assert!(isomorphic(&g, &h));
        prop_assert_eq!(canonical_key(&h), canonical_key(&g));
        for gamma in find_gammas(&g, GammaOrder::Any) {
            let with = g.with_gamma(Some(gamma)).unwrap();
            prop_assert_eq!(canonical_key(&relabel(&with, &seed, flip)), canonical_key(&with));
        }
    }

    #[test]
    fn canonical_key_decides_isomorphism(a in small_graph(5, 2), b in small_graph(5, 2)) {
        prop_assert_eq!(canonical_key(&a) == canonical_key(&b), isomorphic(&a, &b));
    }

    #[test]
    fn gamma_variants_decide_like_brute_force(g in small_graph(6, 2)) {
        let gammas = find_gammas(&g, GammaOrder::Any);
        let with: Vec<DecoratedGraph> =
            gammas.into_iter().map(|gm| g.with_gamma(Some(gm)).unwrap()).collect();
        for x in &with {
            for y in &with {
                prop_assert_eq!(canonical_key(x) == canonical_key(y), isomorphic(x, y));
            }
        }
    }

    #[test]
    fn graph_json_round_trips(g in small_graph(8, 4)) {
        prop_assert_eq!(DecoratedGraph::from_json(&g.to_json()).unwrap(), g.clone());
        for gamma in find_gammas(&g, GammaOrder::Involution) {
            let with = g.with_gamma(Some(gamma)).unwrap();
            prop_assert_eq!(DecoratedGraph::from_json(&with.to_json()).unwrap(), with);
        }
    }

    #[test]
    fn census_records_round_trip((v, g, n, idx, xi) in raw_type()) {
        let Ok(t) = TopType::normalize(v, g.min(2), n.min(5), &idx, xi) else { return Ok(()) };
        let rec = CensusRecord::compute(t, &EnumOptions::default());
        let back: CensusRecord = serde_json::from_str(&rec.to_json_line()).unwrap();
        prop_assert_eq!(back, rec);
    }
}

#[test]
fn strata_are_ordered_with_the_right_weight_and_dimension() {
    for m in 1..=12 {
        let list = enumerate_strata(m);
        assert!(list.windows(2).all(|w| w[0] < w[1]), "m={m}");
        for s in &list {
            assert_eq!(s.weight(), u64::from(m));
            assert_eq!(stratum_dim(s), (s.r() + 2 * s.s()) as u64);
        }
    }
}

#[test]
fn cover_characteristic_is_the_indicator_of_the_base_point() {
    for r in 0..=12 {
        for s in 0..=12 {
            assert_eq!(chi_cover(r, s), i64::from(r == 0 && s <= 1), "r={r} s={s}");
        }
    }
}
