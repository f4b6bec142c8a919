//! Randomized invariants, checked against the naive helpers in `common`.

mod common;

use common::*;
use majicolor::automorphism::{automorphism_group, color_preserving_group};
use majicolor::coloring::EdgeColoring;
use majicolor::construct::{almost_majority_4, color_auto, majority3_bipartite, two_coloring_balanced, TwoColoringSpec};
use majicolor::graph::{parse_graph, serialize_graph, Format, Graph};
use majicolor::verify::{verify_majority, verify_majority_distinguishing, MajorityMode};
use proptest::prelude::*;
use rand::Rng;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        ..ProptestConfig::default()
    }
}

fn connected() -> impl Strategy<Value = Graph> {
    (any::<u64>(), 2usize..10, 0usize..12).prop_map(|(seed, n, extra)| random_connected(&mut rng(seed), n, extra))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn two_coloring_balance(g in connected()) {
        let out = two_coloring_balanced(&g, &TwoColoringSpec::default()).unwrap();
        let colors: Vec<u32> = (0..g.m()).map(|e| out.coloring.color(e)).collect();
        prop_assert!(distinct_colors(&colors) <= 2);
        let all_even = (0..g.n()).all(|v| g.degree(v) % 2 == 0);
        prop_assert_eq!(out.special_vertex.is_some(), all_even && g.m() % 2 == 1);
        for (v, t) in tallies(g.edges(), g.n(), &colors).iter().enumerate() {
            let d = g.degree(v);
            let worst = t.values().copied().max().unwrap_or(0);
            if Some(v) == out.special_vertex {
                prop_assert_eq!(worst, d / 2 + 1);
            } else {
                prop_assert!(worst <= d.div_ceil(2));
            }
        }
    }

    #[test]
    fn requested_special_vertex(seed in any::<u64>(), n in 3usize..9) {
        let mut r = rng(seed);
        let g = random_eulerian(&mut r, n, 2);
        let want = r.gen_range(0..g.n());
        let spec = TwoColoringSpec { special_vertex: Some(want), forbidden_special: vec![] };
        let out = two_coloring_balanced(&g, &spec).unwrap();
        if g.m() % 2 == 1 {
            prop_assert_eq!(out.special_vertex, Some(want));
        } else {
            prop_assert_eq!(out.special_vertex, None);
        }
    }

    #[test]
    fn strict_verdict_matches_naive(g in connected(), seed in any::<u64>(), k in 1u32..4) {
        let mut r = rng(seed);
        let colors: Vec<u32> = (0..g.m()).map(|_| r.gen_range(0..k)).collect();
        let c = EdgeColoring::numbered(colors.clone());
        let report = verify_majority(&g, &c, MajorityMode::Strict).unwrap();
        prop_assert_eq!(report.passed(), is_majority(&g, &colors));
    }

    #[test]
    fn preserving_group_matches_naive(g in connected(), seed in any::<u64>(), k in 1u32..4) {
        prop_assume!(g.n() <= 7);
        let mut r = rng(seed);
        let colors: Vec<u32> = (0..g.m()).map(|_| r.gen_range(0..k)).collect();
        let c = EdgeColoring::numbered(colors.clone());
        let sub = color_preserving_group(&g, &c).unwrap().order().unwrap();
        let full = automorphism_group(&g).order().unwrap();
        prop_assert_eq!(sub, naive_group_order(&g, &colors));
        prop_assert_eq!(full % sub, 0);
    }

    #[test]
    fn almost_majority_within_four(g in connected()) {
        prop_assume!(g.m() > 0);
        let c = almost_majority_4(&g).unwrap();
        prop_assert!(c.colors_used() <= 4);
        prop_assert!(verify_majority(&g, &c, MajorityMode::Almost).unwrap().passed());
    }

    #[test]
    fn bipartite_three_colors(seed in any::<u64>(), a in 2usize..6, b in 2usize..6) {
        let g = random_bipartite_min_deg2(&mut rng(seed), a, b, 0.6);
        let c = majority3_bipartite(&g).unwrap();
        prop_assert!(c.colors_used() <= 3);
        prop_assert!(verify_majority(&g, &c, MajorityMode::Strict).unwrap().passed());
    }

    #[test]
    fn graph6_round_trip(g in connected()) {
        let text = serialize_graph(&g, Format::Graph6);
        let back = parse_graph(text.as_bytes(), Format::Graph6).unwrap();
        prop_assert_eq!(back.n(), g.n());
        let mut a: Vec<_> = g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let mut b: Vec<_> = back.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    #[test]
    fn auto_is_certified_and_deterministic(seed in any::<u64>(), n in 5usize..10) {
        let g = random_min_deg2(&mut rng(seed), n, 6, 0.35);
        let a = color_auto(&g, seed).unwrap();
        let b = color_auto(&g, seed).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(verify_majority_distinguishing(&g, &a).unwrap().passed());
        let s = (1..).find(|s| s * s >= g.max_degree()).unwrap();
        prop_assert!(a.colors_used() <= s + 5);
    }
}
