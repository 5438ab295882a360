mod oracle;

use oracle::{all_mul_tables, brute_classes, brute_isomorphic, cyclic_add, klein_add, Table};
use zdlab::{enumerate_rings, is_isomorphic, null_ring, validate_ring, AdditiveGroupShape, EnumerationTask, FiniteRing};

fn oracle_rings(add: &Table) -> Vec<FiniteRing> {
    let (tables, _) = all_mul_tables(add);
    tables
        .iter()
        .map(|m| validate_ring(add, m).expect("oracle table rejected by validate_ring"))
        .collect()
}

fn pair(r: &FiniteRing) -> (Table, Table) {
    (r.add_table(), r.mul_table())
}

/// Oracle rings over `factors`, compared with the raw and deduplicated
/// enumeration of the same additive group.
fn compare_shape(factors: &[usize], oracle_add: Table) {
    let shape = AdditiveGroupShape::new(factors.to_vec()).unwrap();
    let order = shape.order();
    let found = oracle_rings(&oracle_add);

    // Raw enumeration works on the builder's numbering of the same group,
    // so its table count equals the number of valid tables over that addition.
    let model_add = null_ring(factors).unwrap().add_table();
    let model_count = all_mul_tables(&model_add).0.len();
    assert_eq!(model_count, found.len(), "{shape}: oracle counts differ between numberings");
    let raw = enumerate_rings(&EnumerationTask::new(order).shape(shape.clone()).dedup(false)).unwrap();
    assert_eq!(raw.rings.len(), found.len(), "{shape}: raw table count");

    let pairs: Vec<_> = found.iter().map(pair).collect();
    let reps = brute_classes(&pairs);
    let dedup = enumerate_rings(&EnumerationTask::new(order).shape(shape.clone())).unwrap();
    assert_eq!(dedup.rings.len(), reps.len(), "{shape}: class count");

    for &i in &reps {
        let hits = dedup.rings.iter().filter(|r| is_isomorphic(r, &found[i])).count();
        assert_eq!(hits, 1, "{shape}: oracle class {i} matched {hits} enumerated rings");
        let (a, m) = &pairs[i];
        let brute = dedup.rings.iter().filter(|r| brute_isomorphic(a, m, &r.add_table(), &r.mul_table())).count();
        assert_eq!(brute, 1, "{shape}: brute-force isomorphism disagrees");
    }
}

#[test]
fn cyclic_groups_match_oracle() {
    for n in 2..=6 {
        compare_shape(&[n], cyclic_add(n));
    }
}

#[test]
fn klein_group_matches_oracle() {
    compare_shape(&[2, 2], klein_add());
}

#[test]
fn order_four_has_eleven_classes() {
    let mut all: Vec<(Table, Table)> = Vec::new();
    for add in [cyclic_add(4), klein_add()] {
        all.extend(oracle_rings(&add).iter().map(pair));
    }
    assert_eq!(brute_classes(&all).len(), 11);
    let enumerated = enumerate_rings(&EnumerationTask::new(4)).unwrap();
    assert_eq!(enumerated.rings.len(), 11);
}

#[test]
fn library_isomorphism_agrees_with_brute_force() {
    let rings = enumerate_rings(&EnumerationTask::new(4).dedup(false)).unwrap().rings;
    for (i, a) in rings.iter().enumerate().step_by(7) {
        for b in rings.iter().skip(i).step_by(5) {
            let brute = brute_isomorphic(&a.add_table(), &a.mul_table(), &b.add_table(), &b.mul_table());
            assert_eq!(is_isomorphic(a, b), brute);
        }
    }
}
