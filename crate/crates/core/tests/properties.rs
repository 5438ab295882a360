use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::Index;
use zdlab::{build_graph, enumerate_rings, validate_ring, EnumerationTask, FiniteRing};

/// Every structure-constant table of orders 2..=8, without dedup.
fn pool() -> &'static [FiniteRing] {
    static POOL: OnceLock<Vec<FiniteRing>> = OnceLock::new();
    POOL.get_or_init(|| {
        (2..=8)
            .flat_map(|n| enumerate_rings(&EnumerationTask::new(n).dedup(false)).unwrap().rings)
            .collect()
    })
}

/// Renames the elements through `perm` (which must fix 0).
fn relabel(ring: &FiniteRing, perm: &[usize]) -> FiniteRing {
    let n = ring.order();
    let mut add = vec![vec![0; n]; n];
    let mut mul = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            add[perm[a]][perm[b]] = perm[ring.add(a, b)];
            mul[perm[a]][perm[b]] = perm[ring.mul(a, b)];
        }
    }
    validate_ring(&add, &mul).expect("relabelled ring")
}

fn ring_and_perm() -> impl Strategy<Value = (FiniteRing, Vec<usize>)> {
    any::<Index>().prop_flat_map(|i| {
        let ring = i.get(pool()).clone();
        let rest: Vec<usize> = (1..ring.order()).collect();
        Just(rest).prop_shuffle().prop_map(move |tail| {
            let mut perm = vec![0];
            perm.extend(tail);
            (ring.clone(), perm)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn edges_are_exactly_zero_products((ring, _) in ring_and_perm()) {
        let g = build_graph(&ring);
        for x in ring.nonzero() {
            let zd = ring.nonzero().any(|y| ring.mul(x, y) == 0 || ring.mul(y, x) == 0);
            prop_assert_eq!(g.contains(x), zd);
            prop_assert_eq!(g.loops().contains(&x), ring.mul(x, x) == 0);
            for y in ring.nonzero() {
                prop_assert_eq!(g.has_edge(x, y), x != y && ring.mul(x, y) == 0);
            }
        }
    }

    #[test]
    fn opposite_ring_reverses_graph((ring, _) in ring_and_perm()) {
        let g = build_graph(&ring);
        let op = build_graph(&ring.opposite());
        prop_assert_eq!(op.edges(), g.reversed().edges());
        prop_assert_eq!(op.sinks(), g.sources());
        prop_assert_eq!(op.sources(), g.sinks());
    }

    #[test]
    fn distances_obey_triangle_inequality((ring, _) in ring_and_perm()) {
        let g = build_graph(&ring);
        let d = g.distances();
        let v = g.vertices();
        for &x in v {
            prop_assert_eq!(d.get(x, x), Some(0));
            for &y in v {
                if g.has_edge(x, y) {
                    prop_assert_eq!(d.get(x, y), Some(1));
                }
                for &z in v {
                    if let (Some(a), Some(b)) = (d.get(x, y), d.get(y, z)) {
                        let c = d.get(x, z);
                        prop_assert!(c.is_some() && c.unwrap() <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn invariants_survive_relabelling((ring, perm) in ring_and_perm()) {
        let other = relabel(&ring, &perm);
        let (g, h) = (build_graph(&ring), build_graph(&other));
        prop_assert_eq!(g.vertex_count(), h.vertex_count());
        prop_assert_eq!(g.edge_count(), h.edge_count());
        prop_assert_eq!(g.loops().len(), h.loops().len());
        prop_assert_eq!(g.sinks().len(), h.sinks().len());
        prop_assert_eq!(g.sources().len(), h.sources().len());
        prop_assert_eq!(g.clique_number(), h.clique_number());
        prop_assert_eq!(g.strongly_connected(), h.strongly_connected());
        prop_assert_eq!(g.distances().diameter(), h.distances().diameter());
        let mapped: Vec<usize> = g.sinks().iter().map(|&s| perm[s]).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        prop_assert_eq!(mapped, h.sinks().into_iter().collect::<Vec<_>>());
    }
}
