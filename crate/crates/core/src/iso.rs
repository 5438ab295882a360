//! Ring isomorphism testing.
//!
//! A ring isomorphism is in particular an isomorphism of additive groups, so
//! it is determined by where it sends a basis of `(A, +)`. The search walks
//! bases of `(B, +)` with matching element orders and checks products of
//! basis elements as soon as both sides can be evaluated; bilinearity makes
//! the generator check sufficient.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::group::{coordinates, find_basis, invariant_factors, search_bases, AbelianGroup};
use crate::ring::FiniteRing;

/// Cheap isomorphism invariants used to reject most pairs before searching.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub invariant_factors: Vec<usize>,
    pub left_zero_divisors: usize,
    pub right_zero_divisors: usize,
    pub left_identities: usize,
    pub right_identities: usize,
    pub square_zero: usize,
    pub idempotents: usize,
    pub left_annihilating: usize,
    pub right_annihilating: usize,
    pub commutative: bool,
}

impl Fingerprint {
    pub fn of(ring: &FiniteRing) -> Self {
        let sets = ring.element_sets();
        let count = |f: &dyn Fn(usize) -> bool| ring.elements().filter(|&x| f(x)).count();
        Fingerprint {
            order: ring.order(),
            invariant_factors: invariant_factors(ring),
            left_zero_divisors: sets.left_zero_divisors.len(),
            right_zero_divisors: sets.right_zero_divisors.len(),
            left_identities: sets.left_identities.len(),
            right_identities: sets.right_identities.len(),
            square_zero: count(&|x| ring.mul(x, x) == 0),
            idempotents: count(&|x| ring.mul(x, x) == x),
            left_annihilating: count(&|x| ring.elements().all(|y| ring.mul(x, y) == 0)),
            right_annihilating: count(&|x| ring.elements().all(|y| ring.mul(y, x) == 0)),
            commutative: ring.is_commutative(),
        }
    }
}

/// An isomorphism `phi: A -> B` as `phi[x]`, if one exists.
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    if a.order() == 1 {
        return Some(vec![0]);
    }
    if Fingerprint::of(a) != Fingerprint::of(b) {
        return None;
    }
    let (factors, basis) = find_basis(a);
    let coords = coordinates(a, &factors, &basis);
    let k = factors.len();
    // products of basis elements of A, in A-coordinates
    let products: Vec<Vec<&[usize]>> = (0..k)
        .map(|i| (0..k).map(|j| coords[a.mul(basis[i], basis[j])].as_slice()).collect())
        .collect();

    let image_of = |chosen: &[usize], c: &[usize]| -> Option<usize> {
        let mut acc = 0;
        for (l, &t) in c.iter().enumerate() {
            if t == 0 {
                continue;
            }
            if chosen[l] == usize::MAX {
                return None;
            }
            acc = b.add(acc, b.times(t, chosen[l]));
        }
        Some(acc)
    };
    let consistent = |chosen: &[usize]| -> bool {
        for i in 0..k {
            if chosen[i] == usize::MAX {
                continue;
            }
            for j in 0..k {
                if chosen[j] == usize::MAX {
                    continue;
                }
                if let Some(img) = image_of(chosen, products[i][j]) {
                    if img != b.mul(chosen[i], chosen[j]) {
                        return false;
                    }
                }
            }
        }
        true
    };

    let mut result = None;
    search_bases(
        b,
        &factors,
        |chosen, _| consistent(chosen),
        |chosen| {
            let phi: Vec<usize> = coords
                .iter()
                .map(|c| image_of(chosen, c).expect("complete basis"))
                .collect();
            result = Some(phi);
            ControlFlow::Break(())
        },
    );
    result
}

pub fn is_isomorphic(a: &FiniteRing, b: &FiniteRing) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Checks that `phi` is a bijective map preserving `+` and `*`.
pub fn is_ring_isomorphism(a: &FiniteRing, b: &FiniteRing, phi: &[usize]) -> bool {
    let n = a.order();
    if b.order() != n || phi.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &y in phi {
        if y >= n || hit[y] {
            return false;
        }
        hit[y] = true;
    }
    a.elements().all(|x| {
        a.elements().all(|y| {
            phi[a.add(x, y)] == b.add(phi[x], phi[y]) && phi[a.mul(x, y)] == b.mul(phi[x], phi[y])
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cyclic_ring, direct_product, first_row_ring, null_ring};

    #[test]
    fn crt_isomorphism() {
        let a = direct_product(&cyclic_ring(2).unwrap(), &cyclic_ring(3).unwrap()).unwrap();
        let b = cyclic_ring(6).unwrap();
        let phi = find_isomorphism(&a, &b).expect("Z/2 x Z/3 = Z/6");
        assert!(is_ring_isomorphism(&a, &b, &phi));
    }

    #[test]
    fn null_vs_boolean() {
        let a = null_ring(&[2, 2]).unwrap();
        let f2 = cyclic_ring(2).unwrap();
        let b = direct_product(&f2, &f2).unwrap();
        assert!(!is_isomorphic(&a, &b));
    }

    #[test]
    fn t2_is_not_its_opposite() {
        let t2 = first_row_ring(2, 2).unwrap();
        assert!(!is_isomorphic(&t2, &t2.opposite()));
        assert!(is_isomorphic(&t2, &t2));
    }

    #[test]
    fn relabelled_ring_is_isomorphic() {
        // relabel Z/4 by x -> 3x (an additive automorphism)
        let r = cyclic_ring(4).unwrap();
        let perm = [0usize, 3, 2, 1];
        let mut inv = [0usize; 4];
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        let add: Vec<Vec<usize>> =
            (0..4).map(|a| (0..4).map(|b| perm[r.add(inv[a], inv[b])]).collect()).collect();
        let mul: Vec<Vec<usize>> =
            (0..4).map(|a| (0..4).map(|b| perm[r.mul(inv[a], inv[b])]).collect()).collect();
        let s = crate::ring::validate_ring(&add, &mul).unwrap();
        let phi = find_isomorphism(&r, &s).unwrap();
        assert!(is_ring_isomorphism(&r, &s, &phi));
        // x*y = 2xy on Z/4 is a different ring
        let twisted: Vec<Vec<usize>> =
            (0..4).map(|a| (0..4).map(|b| (2 * a * b) % 4).collect()).collect();
        let t = crate::ring::validate_ring(&r.add_table(), &twisted).unwrap();
        assert!(!is_isomorphic(&r, &t));
    }
}
