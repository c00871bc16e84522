mod common;

use common::{oracle_is_cover, random_connected, random_covered};
use oppdc::construct::{bridge2_compose, glue_at_vertex, product_cover, Side};
use oppdc::cover::{oppdc_to_socdc, socdc_to_oppdc, verify_oppdc, verify_socdc};
use oppdc::graph::{cartesian_product, emit_graph6, parse_graph6};
use oppdc::Graph;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        g.add_edge(a, b).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn owned(c: &oppdc::PathCover) -> Vec<Vec<usize>> {
    c.paths().iter().map(|p| p.vertices().to_vec()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        let text = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn solved_covers_obey_the_laws(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (g, c) = random_covered(&mut rng, 8);
        prop_assert_eq!(c.len(), g.order());
        prop_assert_eq!(c.arc_count(), 2 * g.size());
        prop_assert!(oracle_is_cover(&g, &owned(&c)));
        let r = c.reversed();
        prop_assert!(verify_oppdc(&g, &r, true).unwrap().valid);
        prop_assert!(oracle_is_cover(&g, &owned(&r)));
    }

    #[test]
    fn products_of_random_covers_are_covers(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (g, cg) = random_covered(&mut rng, 5);
        let (h, ch) = random_covered(&mut rng, 5);
        let c = product_cover(&g, &cg, &h, &ch).unwrap();
        let p = cartesian_product(&g, &h);
        prop_assert_eq!(c.len(), p.order());
        prop_assert!(oracle_is_cover(&p, &owned(&c)));
    }

    #[test]
    fn compositions_are_covers(seed in any::<u64>(), v1 in 0usize..8, v2 in 0usize..8) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (g1, c1) = random_covered(&mut rng, 6);
        let (g2, c2) = random_covered(&mut rng, 6);
        let (s1, s2) = (Side::covered(g1.clone(), c1), Side::covered(g2.clone(), c2));
        let glued = glue_at_vertex(&s1, v1 % g1.order(), &s2, v2 % g2.order()).unwrap();
        prop_assert_eq!(glued.cover.len(), glued.graph.order());
        prop_assert!(oracle_is_cover(&glued.graph, &owned(&glued.cover)));
        if g1.order() >= 2 && g2.order() >= 2 {
            let a = (v1 % g1.order(), v2 % g2.order());
            let b = ((a.0 + 1) % g1.order(), (a.1 + 1) % g2.order());
            let joined = bridge2_compose(&s1, &s2, a, b).unwrap();
            prop_assert_eq!(joined.cover.len(), joined.graph.order());
            prop_assert!(oracle_is_cover(&joined.graph, &owned(&joined.cover)));
        }
    }

    #[test]
    fn socdc_conversion_round_trips(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (g, c) = random_covered(&mut rng, 8);
        let (apex_graph, cycles, apex) = oppdc_to_socdc(&g, &c).unwrap();
        prop_assert_eq!(cycles.len(), g.order());
        prop_assert!(verify_socdc(&apex_graph, &cycles, apex_graph.order() - 1).unwrap().valid);
        prop_assert_eq!(socdc_to_oppdc(&apex_graph, apex, &cycles).unwrap(), c);
    }

    #[test]
    fn random_connected_is_connected(seed in any::<u64>(), n in 1usize..12) {
        let mut rng = StdRng::seed_from_u64(seed);
        prop_assert!(random_connected(&mut rng, n, 0.2).is_connected());
    }
}
