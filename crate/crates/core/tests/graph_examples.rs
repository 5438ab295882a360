use std::collections::BTreeSet;

use zdlab::graph::{semigroup_closure_check, to_dot, Diameter, GraphJson};
use zdlab::{
    build_graph, cyclic_ring, direct_product, enumerate_rings, first_row_ring, full_matrix_ring, null_ring,
    EnumerationTask, Side,
};

#[test]
fn z6_json_is_stable() {
    let json = GraphJson::of(&build_graph(&cyclic_ring(6).unwrap())).to_json_string();
    assert_eq!(
        json,
        r#"{"vertices":[2,3,4],"edges":[[2,3],[3,2],[3,4],[4,3]],"loops":[],"sinks":[],"sources":[],"diameter":2,"max_finite_distance":2,"clique_number":2}"#
    );
}

#[test]
fn fields_have_empty_graphs() {
    for p in [2, 3, 5, 7, 11] {
        let g = build_graph(&cyclic_ring(p).unwrap());
        assert!(g.is_empty());
        assert!(g.strongly_connected());
    }
}

#[test]
fn null_rings_are_complete_with_loops() {
    let ring = null_ring(&[2, 2, 2]).unwrap();
    let g = build_graph(&ring);
    assert_eq!(g.vertex_count(), 7);
    assert_eq!(g.edge_count(), 42);
    assert_eq!(g.loops().len(), 7);
    assert_eq!(g.clique_number(), 7);
}

/// 2x2 matrices over F2 built by hand, entries packed as bits (a b / c d).
fn mat_mul(x: [u8; 4], y: [u8; 4]) -> [u8; 4] {
    [
        (x[0] * y[0] + x[1] * y[2]) % 2,
        (x[0] * y[1] + x[1] * y[3]) % 2,
        (x[2] * y[0] + x[3] * y[2]) % 2,
        (x[2] * y[1] + x[3] * y[3]) % 2,
    ]
}

#[test]
fn full_matrix_ring_matches_hand_arithmetic() {
    let all: Vec<[u8; 4]> = (0..16u8).map(|b| [b >> 3 & 1, b >> 2 & 1, b >> 1 & 1, b & 1]).collect();
    let zero = [0u8; 4];
    let zd: Vec<[u8; 4]> = all
        .iter()
        .copied()
        .filter(|&x| x != zero && all.iter().any(|&y| y != zero && (mat_mul(x, y) == zero || mat_mul(y, x) == zero)))
        .collect();
    // Singular nonzero matrices.
    assert_eq!(zd.len(), 9);
    let edges = zd
        .iter()
        .flat_map(|&x| zd.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| x != y && mat_mul(x, y) == zero)
        .count();
    for &a in &zd {
        for &b in &zd {
            assert!(zd.iter().any(|&c| mat_mul(a, c) == zero && mat_mul(c, b) == zero));
        }
    }

    let g = build_graph(&full_matrix_ring(2, 2).unwrap());
    assert_eq!(g.vertex_count(), zd.len());
    assert_eq!(g.edge_count(), edges);
    assert_eq!(g.distances().diameter(), Diameter::Finite(2));
}

#[test]
fn t2_has_two_sinks_and_is_not_connected() {
    let ring = first_row_ring(2, 2).unwrap();
    let g = build_graph(&ring);
    assert_eq!(g.sinks().len(), 2);
    assert!(g.sources().len() <= 1);
    assert!(!g.strongly_connected());
    let dot = to_dot(&ring, &g);
    assert_eq!(dot.matches("lightblue").count(), 2);
    assert!(dot.starts_with("digraph"));
}

#[test]
fn first_row_zn_sinks_counted_by_hand() {
    let phi = |n: usize| (1..=n).filter(|&k| gcd(k, n) == 1).count();
    for n in 2..=6 {
        let ring = first_row_ring(2, n).unwrap();
        assert_eq!(build_graph(&ring).sinks().len(), n * phi(n), "n = {n}");
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn sink_sets_are_cancellative_semigroups() {
    let mut seen = 0;
    for order in 5..=8 {
        for ring in enumerate_rings(&EnumerationTask::new(order)).unwrap() {
            let sinks = build_graph(&ring).sinks();
            if sinks.is_empty() {
                continue;
            }
            seen += 1;
            let check = semigroup_closure_check(&sinks, &ring, Side::Left);
            assert!(check.holds(), "{}: {check:?}", ring.label());
        }
    }
    assert!(seen > 0);
}

#[test]
fn products_join_components() {
    let ring = direct_product(&cyclic_ring(2).unwrap(), &cyclic_ring(3).unwrap()).unwrap();
    let g = build_graph(&ring);
    let v: BTreeSet<usize> = g.vertices().iter().copied().collect();
    assert_eq!(v.len(), 3);
    assert_eq!(g.distances().diameter(), Diameter::Finite(2));
}
