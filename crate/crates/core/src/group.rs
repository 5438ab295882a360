//! Finite abelian groups: isomorphism types, standard models, and bases.

use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;
use thiserror::Error;

use crate::ring::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invariant factors {0:?} do not form a divisor chain of factors >= 2")]
    NotAChain(Vec<usize>),
}

/// Anything with an additive table on `0..order` whose identity is `0`.
pub trait AbelianGroup {
    fn group_order(&self) -> usize;
    fn group_add(&self, a: usize, b: usize) -> usize;

    fn times(&self, k: usize, a: usize) -> usize {
        (0..k).fold(0, |acc, _| self.group_add(acc, a))
    }

    fn element_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != 0 {
            acc = self.group_add(acc, a);
            k += 1;
        }
        k
    }
}

impl AbelianGroup for FiniteRing {
    fn group_order(&self) -> usize {
        self.order()
    }

    fn group_add(&self, a: usize, b: usize) -> usize {
        self.add(a, b)
    }
}

/// Isomorphism type of a finite abelian group as invariant factors
/// `d_1 | d_2 | ... | d_k`, each at least 2. The trivial group has no factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AdditiveGroupShape {
    invariant_factors: Vec<usize>,
}

impl AdditiveGroupShape {
    pub fn new(invariant_factors: Vec<usize>) -> Result<Self, GroupError> {
        let chain = invariant_factors.iter().all(|&d| d >= 2)
            && invariant_factors.windows(2).all(|w| w[1] % w[0] == 0);
        if !chain {
            return Err(GroupError::NotAChain(invariant_factors));
        }
        Ok(AdditiveGroupShape { invariant_factors })
    }

    pub fn invariant_factors(&self) -> &[usize] {
        &self.invariant_factors
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn order(&self) -> usize {
        self.invariant_factors.iter().product()
    }

    /// Indices of the standard generators in [`GroupModel`] numbering.
    pub fn generators(&self) -> Vec<usize> {
        let model = GroupModel::new(&self.invariant_factors);
        (0..self.rank()).map(|i| model.strides[i]).collect()
    }
}

impl fmt::Display for AdditiveGroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z{d}")).collect();
        f.write_str(&parts.join("x"))
    }
}

pub fn prime_factorization(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && prime_factorization(n) == vec![(n, 1)]
}

pub fn euler_phi(n: usize) -> usize {
    prime_factorization(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Partitions of `n` with parts in non-increasing order.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Combines per-prime exponent partitions into an ascending invariant-factor chain.
fn chain_from_partitions(primes: &[(usize, Vec<u32>)]) -> Vec<usize> {
    let k = primes.iter().map(|(_, parts)| parts.len()).max().unwrap_or(0);
    // position 0 holds the largest factor
    let mut factors = vec![1usize; k];
    for (p, parts) in primes {
        for (i, &e) in parts.iter().enumerate() {
            factors[i] *= p.pow(e);
        }
    }
    factors.reverse();
    factors
}

/// All isomorphism types of abelian groups of order `n`, cyclic first.
pub fn abelian_group_shapes(n: usize) -> Vec<AdditiveGroupShape> {
    assert!(n >= 1, "group order must be positive");
    let factorization = prime_factorization(n);
    let mut combos: Vec<Vec<(usize, Vec<u32>)>> = vec![Vec::new()];
    for &(p, e) in &factorization {
        let mut next = Vec::new();
        for combo in &combos {
            for part in partitions(e) {
                let mut c = combo.clone();
                c.push((p, part));
                next.push(c);
            }
        }
        combos = next;
    }
    let mut shapes: Vec<AdditiveGroupShape> = combos
        .iter()
        .map(|c| AdditiveGroupShape { invariant_factors: chain_from_partitions(c) })
        .collect();
    shapes.sort_by(|a, b| {
        a.rank().cmp(&b.rank()).then_with(|| a.invariant_factors.cmp(&b.invariant_factors))
    });
    shapes
}

/// Invariant factors of an arbitrary finite abelian group, read off from
/// the number of elements killed by each prime power.
pub fn invariant_factors<G: AbelianGroup + ?Sized>(group: &G) -> Vec<usize> {
    let n = group.group_order();
    let orders: Vec<usize> = (0..n).map(|x| group.element_order(x)).collect();
    let mut per_prime = Vec::new();
    for (p, e) in prime_factorization(n) {
        // c[j] = log_p |{x : p^j x = 0}|
        let mut c = vec![0u32];
        for j in 1..=e {
            let pj = p.pow(j);
            let count = orders.iter().filter(|&&o| pj % o == 0).count();
            c.push(count.ilog(p));
        }
        // number of cyclic factors of exponent >= j is c[j] - c[j-1]
        let at_least: Vec<u32> = (1..=e as usize).map(|j| c[j] - c[j - 1]).collect();
        let count = at_least[0] as usize;
        let mut parts = Vec::with_capacity(count);
        for i in 0..count {
            parts.push(at_least.iter().filter(|&&m| m as usize > i).count() as u32);
        }
        per_prime.push((p, parts));
    }
    chain_from_partitions(&per_prime)
}

/// Calls `visit` with every ordered basis `(h_1, .., h_k)` of `group` where
/// `h_i` has order exactly `factors[i]` and the sum of the cyclic subgroups is
/// direct and exhausts the group. Positions are filled from the last
/// (largest factor) to the first; `accept` may reject a partial assignment,
/// receiving the slice of chosen elements (`usize::MAX` for unassigned slots)
/// and the position just filled.
pub fn search_bases<G, A, V>(group: &G, factors: &[usize], mut accept: A, mut visit: V)
where
    G: AbelianGroup + ?Sized,
    A: FnMut(&[usize], usize) -> bool,
    V: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = group.group_order();
    if factors.iter().product::<usize>() != n {
        return;
    }
    let orders: Vec<usize> = (0..n).map(|x| group.element_order(x)).collect();
    let by_order = |d: usize| -> Vec<usize> { (0..n).filter(|&x| orders[x] == d).collect() };
    let candidates: Vec<Vec<usize>> = factors.iter().map(|&d| by_order(d)).collect();

    struct State {
        chosen: Vec<usize>,
        in_span: Vec<bool>,
        span: Vec<usize>,
    }
    let mut state = State {
        chosen: vec![usize::MAX; factors.len()],
        in_span: {
            let mut v = vec![false; n];
            v[0] = true;
            v
        },
        span: vec![0],
    };

    #[allow(clippy::too_many_arguments)]
    fn rec<G, A, V>(
        group: &G,
        factors: &[usize],
        candidates: &[Vec<usize>],
        pos: usize,
        state: &mut State,
        accept: &mut A,
        visit: &mut V,
    ) -> ControlFlow<()>
    where
        G: AbelianGroup + ?Sized,
        A: FnMut(&[usize], usize) -> bool,
        V: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if pos == 0 {
            return visit(&state.chosen);
        }
        let i = pos - 1;
        let d = factors[i];
        for &h in &candidates[i] {
            // <h> meets the current span trivially
            let mut multiple = h;
            let mut direct = true;
            for _ in 1..d {
                if state.in_span[multiple] {
                    direct = false;
                    break;
                }
                multiple = group.group_add(multiple, h);
            }
            if !direct {
                continue;
            }
            state.chosen[i] = h;
            if accept(&state.chosen, i) {
                let old_len = state.span.len();
                let mut shift = h;
                for _ in 1..d {
                    for s in 0..old_len {
                        let v = group.group_add(state.span[s], shift);
                        state.in_span[v] = true;
                        state.span.push(v);
                    }
                    shift = group.group_add(shift, h);
                }
                let flow = rec(group, factors, candidates, i, state, accept, visit);
                for &v in &state.span[old_len..] {
                    state.in_span[v] = false;
                }
                state.span.truncate(old_len);
                if flow.is_break() {
                    state.chosen[i] = usize::MAX;
                    return flow;
                }
            }
            state.chosen[i] = usize::MAX;
        }
        ControlFlow::Continue(())
    }

    let _ = rec(group, factors, &candidates, factors.len(), &mut state, &mut accept, &mut visit);
}

/// Some basis of `group` adapted to its invariant factors.
pub fn find_basis<G: AbelianGroup + ?Sized>(group: &G) -> (Vec<usize>, Vec<usize>) {
    let factors = invariant_factors(group);
    let mut found = None;
    search_bases(group, &factors, |_, _| true, |b| {
        found = Some(b.to_vec());
        ControlFlow::Break(())
    });
    let basis = found.expect("every finite abelian group has a basis adapted to its invariant factors");
    (factors, basis)
}

/// Coordinates of every element with respect to a basis:
/// `coords[x][i]` is the coefficient of `basis[i]` in `x`.
pub fn coordinates<G: AbelianGroup + ?Sized>(
    group: &G,
    factors: &[usize],
    basis: &[usize],
) -> Vec<Vec<usize>> {
    let n = group.group_order();
    let model = GroupModel::new(factors);
    let mut coords = vec![Vec::new(); n];
    for idx in 0..n {
        let c = model.decode(idx);
        let x = c
            .iter()
            .zip(basis)
            .fold(0, |acc, (&t, &g)| group.group_add(acc, group.times(t, g)));
        coords[x] = c;
    }
    coords
}

/// The standard model `Z/d_1 x ... x Z/d_k` with mixed-radix element numbering,
/// first coordinate most significant.
#[derive(Debug, Clone)]
pub struct GroupModel {
    factors: Vec<usize>,
    strides: Vec<usize>,
    order: usize,
    add: Vec<u32>,
}

impl GroupModel {
    pub fn new(factors: &[usize]) -> Self {
        let k = factors.len();
        let mut strides = vec![1usize; k];
        for i in (0..k.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1];
        }
        let order: usize = factors.iter().product();
        let mut model = GroupModel { factors: factors.to_vec(), strides, order, add: Vec::new() };
        let mut add = vec![0u32; order * order];
        for a in 0..order {
            let ca = model.decode(a);
            for b in 0..order {
                let cb = model.decode(b);
                let sum: Vec<usize> =
                    (0..k).map(|i| (ca[i] + cb[i]) % model.factors[i]).collect();
                add[a * order + b] = model.encode(&sum) as u32;
            }
        }
        model.add = add;
        model
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let mut coords = vec![0; self.factors.len()];
        for (i, &s) in self.strides.iter().enumerate() {
            coords[i] = idx / s;
            idx %= s;
        }
        coords
    }

    pub fn add_flat(&self) -> &[u32] {
        &self.add
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.order.max(1)).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    /// Every automorphism as a permutation `perm[x] = phi(x)`.
    pub fn automorphisms(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let coords: Vec<Vec<usize>> = (0..self.order).map(|x| self.decode(x)).collect();
        search_bases(self, &self.factors, |_, _| true, |basis| {
            let perm = coords
                .iter()
                .map(|c| {
                    c.iter()
                        .zip(basis)
                        .fold(0, |acc, (&t, &h)| self.group_add(acc, self.times(t, h)))
                        as u32
                })
                .collect();
            out.push(perm);
            ControlFlow::Continue(())
        });
        out
    }
}

impl AbelianGroup for GroupModel {
    fn group_order(&self) -> usize {
        self.order
    }

    fn group_add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shapes(n: usize) -> Vec<Vec<usize>> {
        abelian_group_shapes(n).into_iter().map(|s| s.invariant_factors).collect()
    }

    #[test]
    fn shapes_of_small_orders() {
        assert_eq!(shapes(1), vec![Vec::<usize>::new()]);
        assert_eq!(shapes(4), vec![vec![4], vec![2, 2]]);
        assert_eq!(shapes(6), vec![vec![6]]);
        assert_eq!(shapes(8), vec![vec![8], vec![2, 4], vec![2, 2, 2]]);
        assert_eq!(shapes(12), vec![vec![12], vec![2, 6]]);
        assert_eq!(shapes(16).len(), 5);
    }

    #[test]
    fn shape_display_and_validation() {
        let s = AdditiveGroupShape::new(vec![2, 4]).unwrap();
        assert_eq!(s.to_string(), "Z2xZ4");
        assert_eq!(s.order(), 8);
        assert!(AdditiveGroupShape::new(vec![4, 2]).is_err());
        assert!(AdditiveGroupShape::new(vec![1]).is_err());
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(5), 4);
        assert!(is_prime(3) && !is_prime(4) && !is_prime(1));
    }

    #[test]
    fn model_round_trip_and_factors() {
        for n in 1..=16 {
            for shape in abelian_group_shapes(n) {
                let m = GroupModel::new(shape.invariant_factors());
                for x in 0..m.order() {
                    assert_eq!(m.encode(&m.decode(x)), x);
                }
                assert_eq!(invariant_factors(&m), shape.invariant_factors());
            }
        }
    }

    #[test]
    fn automorphism_group_sizes() {
        // |Aut(Z_8)| = 4, |Aut(Z_2 x Z_4)| = 8, |GL_3(F_2)| = 168
        let sizes: Vec<usize> =
            shapes(8).iter().map(|f| GroupModel::new(f).automorphisms().len()).collect();
        assert_eq!(sizes, vec![4, 8, 168]);
        assert_eq!(GroupModel::new(&[3, 3]).automorphisms().len(), 48);
    }

    #[test]
    fn coordinates_invert_the_basis_map() {
        let m = GroupModel::new(&[2, 4]);
        let (factors, basis) = find_basis(&m);
        let coords = coordinates(&m, &factors, &basis);
        for (x, c) in coords.iter().enumerate() {
            let back = c.iter().zip(&basis).fold(0, |acc, (&t, &g)| m.group_add(acc, m.times(t, g)));
            assert_eq!(back, x);
        }
    }
}
