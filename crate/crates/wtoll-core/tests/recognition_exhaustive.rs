//! Exhaustive recognition coherence on all connected graphs with up to six
//! vertices (seven behind `--ignored`): clique paths exist exactly for the
//! interval graphs, class verdicts are monotone, and every certificate
//! re-validates.

use wtoll_core::generate::{connected_graphs, random_graph};
use wtoll_core::recognition::{
    build_clique_path, check_chordal, recognize_interval, recognize_proper_interval,
    validate_asteroidal_triple, validate_chordless_cycle, validate_claw, validate_peo, Chordality,
    IntervalRecognition, IntervalWitness, ProperRecognition, ProperWitness,
};
use wtoll_core::Graph;

fn check_one(g: &Graph) {
    let chordal = match check_chordal(g) {
        Chordality::Chordal { peo } => {
            assert!(validate_peo(g, &peo), "bad PEO on {g:?}");
            true
        }
        Chordality::NotChordal { cycle } => {
            assert!(validate_chordless_cycle(g, &cycle), "bad cycle on {g:?}");
            false
        }
    };
    let interval = match recognize_interval(g) {
        IntervalRecognition::Interval(path) => {
            assert_eq!(path.validate(g), Ok(()), "bad clique path on {g:?}");
            assert_eq!(path.reversed().validate(g), Ok(()));
            true
        }
        IntervalRecognition::NotInterval(w) => {
            match w {
                IntervalWitness::ChordlessCycle(c) => {
                    assert!(validate_chordless_cycle(g, &c))
                }
                IntervalWitness::AsteroidalTriple(t) => {
                    assert!(validate_asteroidal_triple(g, t))
                }
            }
            false
        }
    };
    let proper = match recognize_proper_interval(g) {
        ProperRecognition::Proper { model, .. } => {
            model.validate_for(g).unwrap();
            model.validate_proper().unwrap();
            true
        }
        ProperRecognition::NotProper(w) => {
            if let ProperWitness::Claw { center, leaves } = w {
                assert!(validate_claw(g, center, leaves));
            }
            false
        }
    };
    // verdict monotonicity and the clique-path equivalence
    assert!(!proper || interval, "proper but not interval: {g:?}");
    assert!(!interval || chordal, "interval but not chordal: {g:?}");
    let path_exists = chordal && build_clique_path(g).unwrap().is_some();
    assert_eq!(path_exists, interval, "clique path vs interval on {g:?}");
}

#[test]
fn exhaustive_up_to_six_vertices() {
    for n in 1..=6 {
        for g in connected_graphs(n) {
            check_one(&g);
        }
    }
}

#[test]
fn sampled_seven_vertex_graphs() {
    let mut count = 0;
    let mut seed = 0u64;
    while count < 3000 {
        let g = random_graph(7, 20 + (seed % 60) as u32, 90_000 + seed);
        seed += 1;
        if g.is_connected() {
            check_one(&g);
            count += 1;
        }
    }
}

#[test]
#[ignore = "full seven-vertex sweep; run explicitly"]
fn exhaustive_seven_vertices() {
    for g in connected_graphs(7) {
        check_one(&g);
    }
}
