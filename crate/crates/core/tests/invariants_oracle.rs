mod common;

use std::io::Cursor;

use hypocubic::codec::{read_planar_code, ReadOptions};
use hypocubic::invariants::{automorphism_order, girth, is_three_connected};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{brute_automorphism_count, brute_girth, data_path, random_connected_subcubic, read_graph6_file};

#[test]
fn automorphisms_match_backtracking_oracle() {
    let bytes = std::fs::read(data_path("planar_cubic_3conn_4_to_12.pc")).unwrap();
    let mut orders = Vec::new();
    for e in read_planar_code(Cursor::new(bytes), ReadOptions::default()) {
        let e = e.unwrap();
        let order = automorphism_order(&e).unwrap();
        assert_eq!(order, brute_automorphism_count(e.graph()), "{:?}", e.graph().edges());
        // the mirror image has the same group
        assert_eq!(automorphism_order(&e.mirror()).unwrap(), order);
        orders.push(order);
    }
    assert_eq!(orders.len(), 23);
    assert_eq!(orders[0], 24);
}

#[test]
fn girth_matches_brute_force_on_cubic_corpus() {
    for g in read_graph6_file(&data_path("cubic_connected_4_to_14.g6")) {
        if g.vertex_count() <= 12 {
            assert_eq!(girth(&g), brute_girth(&g));
        }
    }
}

#[test]
fn three_connectivity_of_corpus() {
    let bytes = std::fs::read(data_path("planar_cubic_3conn_4_to_12.pc")).unwrap();
    for e in read_planar_code(Cursor::new(bytes), ReadOptions::default()) {
        assert!(is_three_connected(e.unwrap().graph()));
    }
}

proptest! {
    #[test]
    fn girth_matches_brute_force(seed in any::<u64>(), n in 1usize..=12) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_connected_subcubic(&mut rng, n);
        prop_assert_eq!(girth(&g), brute_girth(&g));
    }
}
