//! Constructors for the ring families used throughout the crate, plus
//! subrings, quotients, and the left-identity decomposition `R = R_e ⊕ I_e`.

use thiserror::Error;

use crate::group::{is_prime, GroupModel};
use crate::iso::is_isomorphic;
use crate::ring::{ElementSet, FiniteRing, RingError};

/// Largest ring the builders will construct unless configured otherwise.
pub const DEFAULT_BUILD_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("null ring needs at least one invariant factor")]
    EmptyFactorList,
    #[error("bad dimensions: matrix size {k} over Z/{n} (need k >= 2, n >= 2)")]
    BadDimensions { k: usize, n: usize },
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("ring of order {order} exceeds the size cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("{0} is not a left identity")]
    NotLeftIdentity(usize),
    #[error("not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("not a subring: {0}")]
    NotASubring(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Ring constructors sharing one size cap.
#[derive(Debug, Clone, Copy)]
pub struct Builder {
    pub cap: usize,
}

impl Default for Builder {
    fn default() -> Self {
        Builder { cap: DEFAULT_BUILD_CAP }
    }
}

fn checked_order(base: usize, exp: usize, cap: usize) -> Result<usize, BuildError> {
    let mut order: usize = 1;
    for _ in 0..exp {
        order = order.checked_mul(base).filter(|&o| o <= cap).ok_or(BuildError::TooLarge {
            order: base.saturating_pow(exp as u32),
            cap,
        })?;
    }
    Ok(order)
}

fn from_fn(
    order: usize,
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
    label: String,
) -> Result<FiniteRing, BuildError> {
    let mut a = Vec::with_capacity(order * order);
    let mut m = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            a.push(add(x, y) as u32);
            m.push(mul(x, y) as u32);
        }
    }
    Ok(FiniteRing::from_flat(order, a, m, label)?)
}

impl Builder {
    pub fn with_cap(cap: usize) -> Self {
        Builder { cap }
    }

    fn check_cap(&self, order: usize) -> Result<(), BuildError> {
        if order > self.cap {
            Err(BuildError::TooLarge { order, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// `Z/nZ`.
    pub fn cyclic(&self, n: usize) -> Result<FiniteRing, BuildError> {
        if n == 0 {
            return Err(BuildError::InvalidParameter("modulus must be positive".into()));
        }
        self.check_cap(n)?;
        from_fn(n, |x, y| (x + y) % n, |x, y| (x * y) % n, format!("cyclic {n}"))
    }

    /// The abelian group `Z/d_1 x ... x Z/d_k` with every product zero.
    pub fn null(&self, factors: &[usize]) -> Result<FiniteRing, BuildError> {
        if factors.is_empty() {
            return Err(BuildError::EmptyFactorList);
        }
        if let Some(&d) = factors.iter().find(|&&d| d < 2) {
            return Err(BuildError::InvalidParameter(format!("factor {d} is less than 2")));
        }
        let order = factors
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d).filter(|&o| o <= self.cap))
            .ok_or(BuildError::TooLarge {
                order: factors.iter().fold(1usize, |acc, &d| acc.saturating_mul(d)),
                cap: self.cap,
            })?;
        let model = GroupModel::new(factors);
        let label = format!(
            "null {}",
            factors.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
        );
        let add = model.add_flat().to_vec();
        from_fn(order, |x, y| add[x * order + y] as usize, |_, _| 0, label)
    }

    /// `k x k` matrices over `Z/n` supported on the first row. Element index is
    /// the base-`n` reading of the row, most significant digit the (1,1) entry.
    /// Products: `(a_1, .., a_k)(b_1, .., b_k) = a_1 (b_1, .., b_k)`.
    pub fn first_row(&self, k: usize, n: usize) -> Result<FiniteRing, BuildError> {
        if k < 2 || n < 2 {
            return Err(BuildError::BadDimensions { k, n });
        }
        let order = checked_order(n, k, self.cap)?;
        let lead = order / n;
        let row_add = |x: usize, y: usize| -> usize {
            let (mut x, mut y) = (x, y);
            let mut out = 0;
            let mut place = 1;
            for _ in 0..k {
                out += ((x % n + y % n) % n) * place;
                x /= n;
                y /= n;
                place *= n;
            }
            out
        };
        let row_scale = |c: usize, y: usize| -> usize {
            let mut y = y;
            let mut out = 0;
            let mut place = 1;
            for _ in 0..k {
                out += ((c * (y % n)) % n) * place;
                y /= n;
                place *= n;
            }
            out
        };
        from_fn(order, row_add, |x, y| row_scale(x / lead, y), format!("first_row {k} {n}"))
    }

    /// The full matrix ring `M_k(F_q)`; entries read row-major in base `q`,
    /// most significant digit the (1,1) entry.
    pub fn full_matrix(&self, k: usize, q: usize) -> Result<FiniteRing, BuildError> {
        if k < 2 {
            return Err(BuildError::BadDimensions { k, n: q });
        }
        if !is_prime(q) {
            return Err(BuildError::NotPrime(q));
        }
        let order = checked_order(q, k * k, self.cap)?;
        let decode = |mut x: usize| -> Vec<usize> {
            let mut entries = vec![0; k * k];
            for slot in entries.iter_mut().rev() {
                *slot = x % q;
                x /= q;
            }
            entries
        };
        let encode = |entries: &[usize]| entries.iter().fold(0, |acc, &e| acc * q + e);
        let mats: Vec<Vec<usize>> = (0..order).map(decode).collect();
        let add = |x: usize, y: usize| {
            let s: Vec<usize> = mats[x].iter().zip(&mats[y]).map(|(a, b)| (a + b) % q).collect();
            encode(&s)
        };
        let mul = |x: usize, y: usize| {
            let (a, b) = (&mats[x], &mats[y]);
            let mut c = vec![0; k * k];
            for i in 0..k {
                for j in 0..k {
                    c[i * k + j] = (0..k).map(|l| a[i * k + l] * b[l * k + j]).sum::<usize>() % q;
                }
            }
            encode(&c)
        };
        from_fn(order, add, mul, format!("full_matrix {k} {q}"))
    }

    /// `A x B` with element `(a, b)` at index `a |B| + b`.
    pub fn product(&self, a: &FiniteRing, b: &FiniteRing) -> Result<FiniteRing, BuildError> {
        let nb = b.order();
        let order = a
            .order()
            .checked_mul(nb)
            .filter(|&o| o <= self.cap)
            .ok_or(BuildError::TooLarge { order: a.order().saturating_mul(nb), cap: self.cap })?;
        let split = |x: usize| (x / nb, x % nb);
        from_fn(
            order,
            |x, y| {
                let ((xa, xb), (ya, yb)) = (split(x), split(y));
                a.add(xa, ya) * nb + b.add(xb, yb)
            },
            |x, y| {
                let ((xa, xb), (ya, yb)) = (split(x), split(y));
                a.mul(xa, ya) * nb + b.mul(xb, yb)
            },
            format!("({}) x ({})", a.label(), b.label()),
        )
    }
}

pub fn cyclic_ring(n: usize) -> Result<FiniteRing, BuildError> {
    Builder::default().cyclic(n)
}

pub fn null_ring(factors: &[usize]) -> Result<FiniteRing, BuildError> {
    Builder::default().null(factors)
}

pub fn first_row_ring(k: usize, n: usize) -> Result<FiniteRing, BuildError> {
    Builder::default().first_row(k, n)
}

pub fn full_matrix_ring(k: usize, q: usize) -> Result<FiniteRing, BuildError> {
    Builder::default().full_matrix(k, q)
}

pub fn direct_product(a: &FiniteRing, b: &FiniteRing) -> Result<FiniteRing, BuildError> {
    Builder::default().product(a, b)
}

/// The ring structure on `elements` inherited from `ring`, renumbered in
/// increasing index order (so `0` stays `0`). Returns the ring and the
/// embedding `new index -> old index`.
pub fn induced_subring(
    ring: &FiniteRing,
    elements: &ElementSet,
) -> Result<(FiniteRing, Vec<usize>), BuildError> {
    if !elements.contains(&0) {
        return Err(BuildError::NotASubring("does not contain 0".into()));
    }
    let embed: Vec<usize> = elements.iter().copied().collect();
    let mut index = vec![usize::MAX; ring.order()];
    for (i, &x) in embed.iter().enumerate() {
        index[x] = i;
    }
    let m = embed.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &x in &embed {
        for &y in &embed {
            let (s, p) = (index[ring.add(x, y)], index[ring.mul(x, y)]);
            if s == usize::MAX || p == usize::MAX {
                return Err(BuildError::NotASubring(format!("not closed at ({x}, {y})")));
            }
            add.push(s as u32);
            mul.push(p as u32);
        }
    }
    let label = format!("subring of {}", ring.label());
    Ok((FiniteRing::from_flat(m, add, mul, label)?, embed))
}

/// Membership test for a two-sided ideal; `Err` carries the reason.
pub fn check_two_sided_ideal(ring: &FiniteRing, ideal: &ElementSet) -> Result<(), String> {
    if !ideal.contains(&0) {
        return Err("does not contain 0".into());
    }
    for &x in ideal {
        for &y in ideal {
            if !ideal.contains(&ring.sub(x, y)) {
                return Err(format!("{x} - {y} escapes"));
            }
        }
        for r in ring.elements() {
            if !ideal.contains(&ring.mul(r, x)) {
                return Err(format!("{r} * {x} escapes"));
            }
            if !ideal.contains(&ring.mul(x, r)) {
                return Err(format!("{x} * {r} escapes"));
            }
        }
    }
    Ok(())
}

/// `R / I` with cosets numbered by increasing smallest representative.
pub fn quotient_ring(ring: &FiniteRing, ideal: &ElementSet) -> Result<FiniteRing, BuildError> {
    check_two_sided_ideal(ring, ideal).map_err(BuildError::NotAnIdeal)?;
    let n = ring.order();
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in ring.elements() {
        if coset[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &i in ideal {
            coset[ring.add(x, i)] = id;
        }
    }
    let m = reps.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &x in &reps {
        for &y in &reps {
            add.push(coset[ring.add(x, y)] as u32);
            mul.push(coset[ring.mul(x, y)] as u32);
        }
    }
    let label = format!("({}) / ideal of order {}", ring.label(), ideal.len());
    Ok(FiniteRing::from_flat(m, add, mul, label)?)
}

/// For a left identity `e`: `I_e = {a : ae = 0}`, `R_e = {a : ae = a}`, and
/// the splitting `r = re + (r - re)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftIdentityDecomposition {
    pub e: usize,
    pub ideal: ElementSet,
    pub subring: ElementSet,
    /// `splitting[r] = (x, y)` with `x ∈ R_e`, `y ∈ I_e`, `r = x + y`.
    pub splitting: Vec<(usize, usize)>,
}

/// Builds the decomposition for the left identity `e` and verifies that
/// `I_e` is a two-sided ideal (with at least two elements when `e` is proper),
/// that `R_e` is a subring with identity `e`, that the splitting is a
/// bijection `R -> R_e x I_e`, and that `R_e ≅ R / I_e`.
pub fn decompose(ring: &FiniteRing, e: usize) -> Result<LeftIdentityDecomposition, BuildError> {
    if e >= ring.order() || !ring.is_left_identity(e) {
        return Err(BuildError::NotLeftIdentity(e));
    }
    let violation = |msg: String| BuildError::InternalInvariantViolation(msg);
    let ideal: ElementSet = ring.elements().filter(|&a| ring.mul(a, e) == 0).collect();
    let subring: ElementSet = ring.elements().filter(|&a| ring.mul(a, e) == a).collect();

    check_two_sided_ideal(ring, &ideal).map_err(|m| violation(format!("I_e: {m}")))?;
    if !ring.is_right_identity(e) && ideal.len() < 2 {
        return Err(violation("I_e is trivial for a proper left identity".into()));
    }

    let (sub, embed) =
        induced_subring(ring, &subring).map_err(|m| violation(format!("R_e: {m}")))?;
    if !subring.contains(&e) || !subring.iter().all(|&x| ring.mul(x, e) == x && ring.mul(e, x) == x)
    {
        return Err(violation("e is not a two-sided identity of R_e".into()));
    }

    let splitting: Vec<(usize, usize)> = ring
        .elements()
        .map(|r| {
            let x = ring.mul(r, e);
            (x, ring.sub(r, x))
        })
        .collect();
    let mut seen = vec![false; ring.order()];
    for (r, &(x, y)) in splitting.iter().enumerate() {
        if !subring.contains(&x) || !ideal.contains(&y) || ring.add(x, y) != r {
            return Err(violation(format!("bad splitting of {r}")));
        }
        seen[r] = true;
    }
    if subring.len() * ideal.len() != ring.order() {
        return Err(violation(format!(
            "|R_e| |I_e| = {} x {} != {}",
            subring.len(),
            ideal.len(),
            ring.order()
        )));
    }
    // distinct pairs give distinct sums, so the splitting is a bijection
    let mut sums = vec![false; ring.order()];
    for &x in &subring {
        for &y in &ideal {
            let s = ring.add(x, y);
            if sums[s] {
                return Err(violation("R_e + I_e is not direct".into()));
            }
            sums[s] = true;
        }
    }

    let quotient = quotient_ring(ring, &ideal).map_err(|m| violation(format!("R/I_e: {m}")))?;
    if !is_isomorphic(&sub, &quotient) {
        return Err(violation("R_e is not isomorphic to R/I_e".into()));
    }
    debug_assert_eq!(embed.len(), subring.len());
    Ok(LeftIdentityDecomposition { e, ideal, subring, splitting })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    // T2 indices: e12 = 1, e11 = 2, e11 + e12 = 3
    const E12: usize = 1;
    const E11: usize = 2;
    const E11_E12: usize = 3;

    #[test]
    fn cyclic_family() {
        assert_eq!(cyclic_ring(6).unwrap().element_sets().zero_divisors, set(&[2, 3, 4]));
        assert_eq!(cyclic_ring(2).unwrap().element_sets().two_sided_identity, Some(1));
        assert_eq!(cyclic_ring(1).unwrap().order(), 1);
        assert!(cyclic_ring(0).is_err());
    }

    #[test]
    fn null_family() {
        assert_eq!(null_ring(&[2]).unwrap().order(), 2);
        assert_eq!(null_ring(&[2, 2]).unwrap().order(), 4);
        assert_eq!(null_ring(&[]), Err(BuildError::EmptyFactorList));
        assert!(matches!(null_ring(&[1]), Err(BuildError::InvalidParameter(_))));
    }

    #[test]
    fn t2_layout() {
        let t2 = first_row_ring(2, 2).unwrap();
        assert_eq!(t2.order(), 4);
        let sets = t2.element_sets();
        assert_eq!(sets.left_identities, set(&[E11, E11_E12]));
        assert!(sets.right_identities.is_empty());
        assert_eq!(sets.zero_divisors, set(&[E12, E11, E11_E12]));
        assert_eq!(t2.right_annihilator(E12).unwrap(), set(&[0, E12, E11, E11_E12]));
        assert!(!t2.is_commutative());
        assert_eq!(t2.mul(E11, E12), E12);
        assert_eq!(t2.mul(E12, E11), 0);
    }

    #[test]
    fn first_row_orders_and_errors() {
        assert_eq!(first_row_ring(2, 3).unwrap().order(), 9);
        assert_eq!(first_row_ring(3, 2).unwrap().order(), 8);
        assert_eq!(first_row_ring(1, 2), Err(BuildError::BadDimensions { k: 1, n: 2 }));
        assert!(matches!(
            Builder::with_cap(100).first_row(2, 11),
            Err(BuildError::TooLarge { order: 121, cap: 100 })
        ));
    }

    #[test]
    fn full_matrix_family() {
        let m2 = full_matrix_ring(2, 2).unwrap();
        assert_eq!(m2.order(), 16);
        // identity matrix is 1001 in base 2
        assert_eq!(m2.element_sets().two_sided_identity, Some(0b1001));
        assert!(!m2.is_commutative());
        assert_eq!(full_matrix_ring(2, 4), Err(BuildError::NotPrime(4)));
        assert!(matches!(Builder::with_cap(80).full_matrix(2, 3), Err(BuildError::TooLarge { .. })));
    }

    #[test]
    fn full_matrix_over_f3_builds() {
        assert_eq!(full_matrix_ring(2, 3).unwrap().order(), 81);
    }

    #[test]
    fn products() {
        let f2 = cyclic_ring(2).unwrap();
        let p = direct_product(&f2, &f2).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.element_sets().zero_divisors, set(&[1, 2]));
        let z23 = direct_product(&f2, &cyclic_ring(3).unwrap()).unwrap();
        assert!(is_isomorphic(&z23, &cyclic_ring(6).unwrap()));
        let n = direct_product(&null_ring(&[2]).unwrap(), &f2).unwrap();
        assert!(n.element_sets().two_sided_identity.is_none());
        assert!(matches!(
            Builder::with_cap(10).product(&z23, &f2),
            Err(BuildError::TooLarge { order: 12, cap: 10 })
        ));
    }

    #[test]
    fn projections_are_homomorphisms() {
        let a = first_row_ring(2, 2).unwrap();
        let b = cyclic_ring(3).unwrap();
        let p = direct_product(&a, &b).unwrap();
        let nb = b.order();
        for x in p.elements() {
            for y in p.elements() {
                assert_eq!(p.mul(x, y) / nb, a.mul(x / nb, y / nb));
                assert_eq!(p.mul(x, y) % nb, b.mul(x % nb, y % nb));
                assert_eq!(p.add(x, y) / nb, a.add(x / nb, y / nb));
            }
        }
    }

    #[test]
    fn decompose_t2() {
        let t2 = first_row_ring(2, 2).unwrap();
        let d = decompose(&t2, E11).unwrap();
        assert_eq!(d.ideal, set(&[0, E12]));
        assert_eq!(d.subring, set(&[0, E11]));
        assert_eq!(d.splitting[E11_E12], (E11, E12));
        assert_eq!(decompose(&t2, E12), Err(BuildError::NotLeftIdentity(E12)));
    }

    #[test]
    fn decompose_u3() {
        let u3 = first_row_ring(2, 3).unwrap();
        let e = 3; // (1, 0)
        let d = decompose(&u3, e).unwrap();
        assert_eq!(d.ideal.len(), 3);
        assert_eq!(d.subring.len(), 3);
        let (re, _) = induced_subring(&u3, &d.subring).unwrap();
        assert!(is_isomorphic(&re, &cyclic_ring(3).unwrap()));
    }

    #[test]
    fn decompose_unital_is_trivial() {
        let z6 = cyclic_ring(6).unwrap();
        let d = decompose(&z6, 1).unwrap();
        assert_eq!(d.ideal, set(&[0]));
        assert_eq!(d.subring.len(), 6);
    }

    #[test]
    fn quotients() {
        let z6 = cyclic_ring(6).unwrap();
        let q = quotient_ring(&z6, &set(&[0, 3])).unwrap();
        assert!(is_isomorphic(&q, &cyclic_ring(3).unwrap()));
        assert!(matches!(quotient_ring(&z6, &set(&[0, 1])), Err(BuildError::NotAnIdeal(_))));

        let t2 = first_row_ring(2, 2).unwrap();
        let q = quotient_ring(&t2, &set(&[0, E12])).unwrap();
        assert!(is_isomorphic(&q, &cyclic_ring(2).unwrap()));

        let u3 = first_row_ring(2, 3).unwrap();
        let q = quotient_ring(&u3, &set(&[0, 1, 2])).unwrap();
        assert!(is_isomorphic(&q, &cyclic_ring(3).unwrap()));
    }

    #[test]
    fn quotient_representatives_are_minimal() {
        let z6 = cyclic_ring(6).unwrap();
        let q = quotient_ring(&z6, &set(&[0, 2, 4])).unwrap();
        // cosets {0,2,4} and {1,3,5}; representatives 0 and 1
        assert_eq!(q.order(), 2);
        assert_eq!(q.mul(1, 1), 1);
    }
}
