//! Property tests over random small graphs.

use proptest::prelude::*;

use wtoll_core::convexity::{self, ConvexityKind};
use wtoll_core::generate;
use wtoll_core::graph::Graph;
use wtoll_core::oracle::{self, OracleBudget};
use wtoll_core::recognition;
use wtoll_core::walks::WalkKind;
use wtoll_core::VertexSet;

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut b = Graph::builder();
    for i in 0..n {
        b.vertex(&format!("v{}", i + 1)).unwrap();
    }
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                b.edge(&format!("v{}", i + 1), &format!("v{}", j + 1)).unwrap();
            }
            bit += 1;
        }
    }
    b.build()
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7, any::<u32>()).prop_map(|(n, mask)| {
        let bits = n * (n - 1) / 2;
        graph_from_mask(n, mask & ((1u32 << bits) - 1).max(0))
    })
}

fn subset_of(n: usize, mask: u32) -> VertexSet {
    VertexSet::from_mask(n, (mask as u64) & ((1u64 << n) - 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn interval_symmetry_and_containment_chain(g in small_graph(), u in 0usize..7, v in 0usize..7) {
        let (u, v) = (u % g.n(), v % g.n());
        let mut previous: Option<VertexSet> = None;
        for kind in ConvexityKind::ALL {
            let a = convexity::interval(&g, u, v, kind);
            let b = convexity::interval(&g, v, u, kind);
            prop_assert_eq!(&a.vertices, &b.vertices);
            prop_assert!(a.vertices.contains(u) && a.vertices.contains(v));
            if let Some(prev) = &previous {
                prop_assert!(prev.is_subset(&a.vertices), "{:?} not below {:?} in {:?}", prev, a.vertices, g);
            }
            previous = Some(a.vertices);
        }
    }

    #[test]
    fn hull_is_extensive_monotone_idempotent(g in small_graph(), s in any::<u32>(), t in any::<u32>(), kind_idx in 0usize..4) {
        let kind = ConvexityKind::ALL[kind_idx];
        let small = subset_of(g.n(), s & t);
        let large = subset_of(g.n(), s | t);
        let hs = convexity::hull(&g, &small, kind).hull().clone();
        let hl = convexity::hull(&g, &large, kind).hull().clone();
        prop_assert!(small.is_subset(&hs));
        prop_assert!(hs.is_subset(&hl));
        let again = convexity::hull(&g, &hs, kind).hull().clone();
        prop_assert_eq!(again, hs);
    }

    #[test]
    fn convexity_weakens_down_the_chain(g in small_graph(), s in any::<u32>()) {
        let set = subset_of(g.n(), s);
        let convex: Vec<bool> = ConvexityKind::ALL
            .iter()
            .map(|&k| convexity::is_convex(&g, &set, k))
            .collect();
        // weakly toll convex => toll convex => monophonically => geodesically
        prop_assert!(!convex[3] || convex[2]);
        prop_assert!(!convex[2] || convex[1]);
        prop_assert!(!convex[1] || convex[0]);
    }

    #[test]
    fn hull_intersections_are_convex(g in small_graph(), s in any::<u32>(), t in any::<u32>(), kind_idx in 0usize..4) {
        let kind = ConvexityKind::ALL[kind_idx];
        let a = convexity::hull(&g, &subset_of(g.n(), s), kind).hull().clone();
        let b = convexity::hull(&g, &subset_of(g.n(), t), kind).hull().clone();
        prop_assert!(convexity::is_convex(&g, &a.intersection(&b), kind));
    }

    #[test]
    fn twin_classes_partition_and_twins_are_adjacent(g in small_graph()) {
        let classes = g.twin_classes();
        let mut seen = g.empty_set();
        for c in &classes {
            prop_assert!(!c.is_empty());
            prop_assert!(!seen.intersects(c));
            seen.union_with(c);
            let members: Vec<usize> = c.iter().collect();
            for &a in &members {
                for &b in &members {
                    if a != b {
                        prop_assert!(g.adjacent(a, b));
                        prop_assert_eq!(g.closed_neighborhood(a), g.closed_neighborhood(b));
                    }
                }
            }
        }
        prop_assert_eq!(seen, g.full_set());
    }

    #[test]
    fn oracle_agrees_with_production(g in small_graph(), u in 0usize..7, v in 0usize..7) {
        let (u, v) = (u % g.n(), v % g.n());
        let budget = OracleBudget::default();
        let wt = convexity::interval(&g, u, v, ConvexityKind::WeaklyToll).vertices;
        prop_assert_eq!(oracle::weakly_toll_interval(&g, u, v, &budget).unwrap(), wt);
        let t = convexity::interval(&g, u, v, ConvexityKind::Toll).vertices;
        prop_assert_eq!(oracle::toll_interval(&g, u, v, &budget).unwrap(), t);
    }

    #[test]
    fn every_interval_member_has_a_valid_witness(g in small_graph(), u in 0usize..7, v in 0usize..7, kind_idx in 0usize..2) {
        let (u, v) = (u % g.n(), v % g.n());
        let kind = [WalkKind::Tolled, WalkKind::WeaklyToll][kind_idx];
        let ck = match kind { WalkKind::Tolled => ConvexityKind::Toll, WalkKind::WeaklyToll => ConvexityKind::WeaklyToll };
        let pi = convexity::interval(&g, u, v, ck);
        for x in pi.vertices.iter() {
            let w = convexity::witness_walk(&g, u, v, x, kind);
            if u != v && !g.adjacent(u, v) && pi.connected {
                let w = w.expect("member of a walk interval has a witness");
                prop_assert!(w.contains(x));
                prop_assert_eq!(w.validate(&g), Ok(()));
                prop_assert!(w.vertices.len() <= 2 * g.n() + 2);
            } else {
                prop_assert!(w.is_none());
            }
        }
        // non-members never get witnesses
        for x in pi.vertices.complement().iter() {
            prop_assert!(convexity::witness_walk(&g, u, v, x, kind).is_none());
        }
    }

    #[test]
    fn extreme_vertices_are_simplicial_in_the_induced_subgraph(g in small_graph(), s in any::<u32>()) {
        let c = convexity::hull(&g, &subset_of(g.n(), s), ConvexityKind::WeaklyToll).hull().clone();
        let extreme = convexity::extreme_vertices(&g, &c, ConvexityKind::WeaklyToll).unwrap();
        for x in extreme.iter() {
            prop_assert!(g.is_simplicial_within(x, &c), "vertex {} in {:?} of {:?}", x, c, g);
        }
    }

    #[test]
    fn proper_random_models_are_claw_free(seed in 0u64..5000, n in 1usize..=12) {
        let (g, m) = generate::random_interval_graph(n, true, seed);
        prop_assert!(recognition::find_claw(&g).is_none());
        m.validate_for(&g).unwrap();
        m.validate_proper().unwrap();
        prop_assert!(m.has_distinct_endpoints());
    }

    #[test]
    fn clique_path_exists_iff_interval(g in small_graph()) {
        let path = recognition::build_clique_path(&g);
        let rec = recognition::recognize_interval(&g);
        match (path, &rec) {
            (Ok(Some(p)), recognition::IntervalRecognition::Interval(_)) => {
                prop_assert_eq!(p.validate(&g), Ok(()));
                prop_assert_eq!(p.reversed().validate(&g), Ok(()));
            }
            (Ok(None), recognition::IntervalRecognition::NotInterval(w)) => {
                prop_assert!(matches!(w, recognition::IntervalWitness::AsteroidalTriple(_)));
            }
            (Err(e), recognition::IntervalRecognition::NotInterval(_)) => {
                prop_assert!(recognition::validate_chordless_cycle(&g, &e.cycle));
            }
            (p, r) => prop_assert!(false, "mismatch: {:?} vs {:?} on {:?}", p, r, g),
        }
    }

    #[test]
    fn enumerated_convex_sets_are_sound(g in small_graph(), kind_idx in 0usize..4) {
        let kind = ConvexityKind::ALL[kind_idx];
        let sets = convexity::enumerate_convex_sets(&g, kind, 12).unwrap();
        prop_assert!(sets.contains(&g.empty_set()));
        prop_assert!(sets.contains(&g.full_set()));
        for s in &sets {
            prop_assert!(convexity::is_convex(&g, s, kind));
        }
        for w in sets.windows(2) {
            prop_assert!(w[0].len() < w[1].len() || (w[0].len() == w[1].len() && w[0] < w[1]));
        }
    }
}
