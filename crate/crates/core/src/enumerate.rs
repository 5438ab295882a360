//! Exhaustive enumeration of finite rings of a given order.
//!
//! For each abelian group shape `Z/d_1 x ... x Z/d_k` a ring structure is
//! fixed by the products `g_i g_j` of the standard generators (the structure
//! constants); every other product follows by bilinearity. Since
//! `d_i (g_i g_j) = (d_i g_i) g_j = 0`, each constant is restricted to elements
//! killed by `gcd(d_i, d_j)`. Constants are assigned depth-first and every
//! generator triple whose associativity can already be evaluated is checked,
//! which prunes almost the whole space. Surviving tables are re-validated in
//! full.
//!
//! With `dedup` on, each ring is replaced by its canonical form, the
//! lexicographically smallest multiplication table over all automorphisms of
//! the additive group, and only the first occurrence of each form is kept.

use std::sync::atomic::{AtomicU64, Ordering};

use dashmap::DashSet;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::group::{
    abelian_group_shapes, coordinates, find_basis, AbelianGroup, AdditiveGroupShape, GroupModel,
};
use crate::ring::FiniteRing;

/// Orders up to this bound are enumerated without opting in.
pub const DEFAULT_ENUM_CAP: usize = 8;
/// Hard upper bound on enumeration order.
pub const MAX_ENUM_ORDER: usize = 16;

const UNSET: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {order} exceeds the enumeration cap {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("order must be positive")]
    ZeroOrder,
    #[error("shape {shape} has order {shape_order}, not {order}")]
    ShapeMismatch { shape: String, shape_order: usize, order: usize },
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

/// Work counters, updated concurrently by the shards.
#[derive(Debug, Default)]
pub struct EnumerationProgress {
    pub nodes: AtomicU64,
    pub tables: AtomicU64,
    pub yielded: AtomicU64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    /// Search nodes visited (partial structure-constant assignments).
    pub nodes: u64,
    /// Complete associative structure-constant choices.
    pub tables: u64,
    /// Rings returned.
    pub yielded: u64,
    pub shards: u64,
}

#[derive(Debug, Clone)]
pub struct EnumerationTask {
    pub order: usize,
    /// Restrict to one additive group; `None` enumerates every shape.
    pub shape: Option<AdditiveGroupShape>,
    pub dedup: bool,
    /// Worker threads; `0` uses the global rayon pool.
    pub threads: usize,
    /// Largest order accepted; clamped to [`MAX_ENUM_ORDER`].
    pub cap: usize,
}

impl EnumerationTask {
    pub fn new(order: usize) -> Self {
        EnumerationTask { order, shape: None, dedup: true, threads: 0, cap: DEFAULT_ENUM_CAP }
    }

    pub fn dedup(mut self, dedup: bool) -> Self {
        self.dedup = dedup;
        self
    }

    pub fn shape(mut self, shape: AdditiveGroupShape) -> Self {
        self.shape = Some(shape);
        self
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub rings: Vec<FiniteRing>,
    pub stats: EnumerationStats,
}

impl IntoIterator for Enumeration {
    type Item = FiniteRing;
    type IntoIter = std::vec::IntoIter<FiniteRing>;

    fn into_iter(self) -> Self::IntoIter {
        self.rings.into_iter()
    }
}

/// Structure-constant search space for one additive group.
struct ShapeSpace {
    shape: AdditiveGroupShape,
    model: GroupModel,
    k: usize,
    coords: Vec<Vec<usize>>,
    /// Allowed values of constant `v = i * k + j`.
    candidates: Vec<Vec<usize>>,
}

impl ShapeSpace {
    fn new(shape: AdditiveGroupShape) -> Self {
        let model = GroupModel::new(shape.invariant_factors());
        let k = shape.rank();
        let n = model.order();
        let coords: Vec<Vec<usize>> = (0..n).map(|x| model.decode(x)).collect();
        let factors = shape.invariant_factors();
        let mut candidates = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                // chain: gcd(d_i, d_j) = d_min(i, j)
                let bound = factors[i.min(j)];
                candidates.push((0..n).filter(|&x| bound % model.element_order(x) == 0).collect());
            }
        }
        ShapeSpace { shape, model, k, coords, candidates }
    }

    /// `sum_m coeffs[m] * consts[m * k + col]` (or `consts[row * k + m]` when
    /// `row` is given); `None` if a needed constant is unassigned.
    fn combine(&self, coeffs: &[usize], consts: &[usize], fixed: Fixed) -> Option<usize> {
        let mut acc = 0;
        for (m, &t) in coeffs.iter().enumerate() {
            if t == 0 {
                continue;
            }
            let v = match fixed {
                Fixed::Col(col) => consts[m * self.k + col],
                Fixed::Row(row) => consts[row * self.k + m],
            };
            if v == UNSET {
                return None;
            }
            acc = self.model.group_add(acc, self.model.times(t, v));
        }
        Some(acc)
    }

    /// Every generator triple that can be evaluated under the partial
    /// assignment associates.
    fn consistent(&self, consts: &[usize]) -> bool {
        let k = self.k;
        for i in 0..k {
            for j in 0..k {
                let ij = consts[i * k + j];
                if ij == UNSET {
                    continue;
                }
                for l in 0..k {
                    let jl = consts[j * k + l];
                    if jl == UNSET {
                        continue;
                    }
                    // (g_i g_j) g_l versus g_i (g_j g_l)
                    let lhs = self.combine(&self.coords[ij], consts, Fixed::Col(l));
                    let rhs = self.combine(&self.coords[jl], consts, Fixed::Row(i));
                    if let (Some(a), Some(b)) = (lhs, rhs) {
                        if a != b {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn search(&self, v: usize, consts: &mut Vec<usize>, progress: &EnumerationProgress, out: &mut Vec<Vec<usize>>) {
        progress.nodes.fetch_add(1, Ordering::Relaxed);
        if v == self.k * self.k {
            progress.tables.fetch_add(1, Ordering::Relaxed);
            out.push(consts.clone());
            return;
        }
        for &c in &self.candidates[v] {
            consts[v] = c;
            if self.consistent(consts) {
                self.search(v + 1, consts, progress, out);
            }
        }
        consts[v] = UNSET;
    }

    /// Bilinear extension of the constants to the full multiplication table.
    fn mul_table(&self, consts: &[usize]) -> Vec<u32> {
        let n = self.model.order();
        let k = self.k;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let mut acc = 0;
                for i in 0..k {
                    let xi = self.coords[x][i];
                    if xi == 0 {
                        continue;
                    }
                    for j in 0..k {
                        let t = xi * self.coords[y][j];
                        if t != 0 {
                            acc = self.model.group_add(acc, self.model.times(t, consts[i * k + j]));
                        }
                    }
                }
                table[x * n + y] = acc as u32;
            }
        }
        table
    }
}

#[derive(Clone, Copy)]
enum Fixed {
    Col(usize),
    Row(usize),
}

/// Automorphisms of a shape as `(perm, inverse)` pairs.
fn automorphism_pairs(model: &GroupModel) -> Vec<(Vec<u32>, Vec<u32>)> {
    model
        .automorphisms()
        .into_iter()
        .map(|perm| {
            let mut inv = vec![0u32; perm.len()];
            for (x, &p) in perm.iter().enumerate() {
                inv[p as usize] = x as u32;
            }
            (perm, inv)
        })
        .collect()
}

/// Lexicographically least `phi . mul . (phi^-1 x phi^-1)` over the automorphisms.
fn canonical_table(n: usize, mul: &[u32], autos: &[(Vec<u32>, Vec<u32>)]) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    let mut buf = vec![0u32; n * n];
    for (perm, inv) in autos {
        let mut smaller = best.is_none();
        let mut larger = false;
        for idx in 0..n * n {
            let (a, b) = (inv[idx / n] as usize, inv[idx % n] as usize);
            let v = perm[mul[a * n + b] as usize];
            buf[idx] = v;
            if !smaller {
                let cur = best.as_ref().expect("best is set")[idx];
                if v > cur {
                    larger = true;
                    break;
                }
                if v < cur {
                    smaller = true;
                }
            }
        }
        if smaller && !larger {
            best = Some(buf.clone());
        }
    }
    best.unwrap_or_else(|| mul.to_vec())
}

/// Canonical form of an arbitrary ring: its additive shape and the
/// canonical multiplication table in the standard model's numbering.
/// Two rings are isomorphic iff their canonical keys are equal.
pub fn canonical_key(ring: &FiniteRing) -> (Vec<usize>, Vec<u32>) {
    let n = ring.order();
    let (factors, basis) = find_basis(ring);
    let model = GroupModel::new(&factors);
    let coords = coordinates(ring, &factors, &basis);
    let sigma: Vec<usize> = coords.iter().map(|c| model.encode(c)).collect();
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[sigma[a] * n + sigma[b]] = sigma[ring.mul(a, b)] as u32;
        }
    }
    let autos = automorphism_pairs(&model);
    (factors, canonical_table(n, &mul, &autos))
}

/// Enumerates rings of `task.order`: all structure-constant choices, or one
/// representative per isomorphism class when `task.dedup` is set. The output
/// order is deterministic: by shape (cyclic first), then by DFS order of the
/// constants, or by canonical table when deduplicating.
pub fn enumerate_rings(task: &EnumerationTask) -> Result<Enumeration, EnumError> {
    let progress = EnumerationProgress::default();
    enumerate_with_progress(task, &progress)
}

pub fn enumerate_with_progress(
    task: &EnumerationTask,
    progress: &EnumerationProgress,
) -> Result<Enumeration, EnumError> {
    let cap = task.cap.min(MAX_ENUM_ORDER);
    if task.order == 0 {
        return Err(EnumError::ZeroOrder);
    }
    if task.order > cap {
        return Err(EnumError::OrderTooLarge { order: task.order, cap });
    }
    let shapes = match &task.shape {
        Some(s) if s.order() != task.order => {
            return Err(EnumError::ShapeMismatch {
                shape: s.to_string(),
                shape_order: s.order(),
                order: task.order,
            })
        }
        Some(s) => vec![s.clone()],
        None => abelian_group_shapes(task.order),
    };
    let spaces: Vec<ShapeSpace> = shapes.into_iter().map(ShapeSpace::new).collect();
    let autos: Vec<Vec<(Vec<u32>, Vec<u32>)>> = if task.dedup {
        spaces.iter().map(|s| automorphism_pairs(&s.model)).collect()
    } else {
        Vec::new()
    };

    // shard = (shape, value of the first structure constant)
    let shards: Vec<(usize, Option<usize>)> = spaces
        .iter()
        .enumerate()
        .flat_map(|(si, s)| -> Vec<(usize, Option<usize>)> {
            if s.k == 0 {
                vec![(si, None)]
            } else {
                s.candidates[0].iter().map(|&c| (si, Some(c))).collect()
            }
        })
        .collect();

    let seen: DashSet<(usize, Vec<u32>)> = DashSet::new();
    let run_shard = |&(si, first): &(usize, Option<usize>)| -> Vec<(usize, Vec<u32>, FiniteRing)> {
        let space = &spaces[si];
        let kk = space.k * space.k;
        let mut consts = vec![UNSET; kk];
        let mut found = Vec::new();
        match first {
            None => found.push(Vec::new()),
            Some(c) => {
                consts[0] = c;
                if space.consistent(&consts) {
                    space.search(1, &mut consts, progress, &mut found);
                }
            }
        }
        let n = space.model.order();
        let mut out = Vec::new();
        for consts in found {
            let table = space.mul_table(&consts);
            let (key, table) = if task.dedup {
                let canon = canonical_table(n, &table, &autos[si]);
                if !seen.insert((si, canon.clone())) {
                    continue;
                }
                (canon.clone(), canon)
            } else {
                (Vec::new(), table)
            };
            let ring = FiniteRing::from_flat(n, space.model.add_flat().to_vec(), table, String::new())
                .expect("bilinear extension of associative structure constants is a ring");
            out.push((si, key, ring));
        }
        out
    };

    let per_shard: Vec<Vec<(usize, Vec<u32>, FiniteRing)>> = if task.threads == 0 {
        shards.par_iter().map(run_shard).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(task.threads)
            .build()
            .map_err(|e| EnumError::ThreadPool(e.to_string()))?;
        pool.install(|| shards.par_iter().map(run_shard).collect())
    };

    let mut results: Vec<(usize, Vec<u32>, FiniteRing)> = per_shard.into_iter().flatten().collect();
    if task.dedup {
        results.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    }
    let mut rings = Vec::with_capacity(results.len());
    let mut counter = vec![0usize; spaces.len()];
    for (si, _, ring) in results {
        let idx = counter[si];
        counter[si] += 1;
        let label = if task.dedup {
            format!("enum {} {} #{}", task.order, spaces[si].shape, idx)
        } else {
            format!("enum {} {} raw #{}", task.order, spaces[si].shape, idx)
        };
        rings.push(ring.with_label(label));
    }
    progress.yielded.fetch_add(rings.len() as u64, Ordering::Relaxed);
    let stats = EnumerationStats {
        nodes: progress.nodes.load(Ordering::Relaxed),
        tables: progress.tables.load(Ordering::Relaxed),
        yielded: rings.len() as u64,
        shards: shards.len() as u64,
    };
    Ok(Enumeration { rings, stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cyclic_ring, null_ring};
    use crate::iso::is_isomorphic;

    fn count(order: usize, dedup: bool) -> usize {
        enumerate_rings(&EnumerationTask::new(order).dedup(dedup)).unwrap().rings.len()
    }

    #[test]
    fn order_two() {
        let rings = enumerate_rings(&EnumerationTask::new(2)).unwrap().rings;
        assert_eq!(rings.len(), 2);
        assert!(rings.iter().any(|r| is_isomorphic(r, &null_ring(&[2]).unwrap())));
        assert!(rings.iter().any(|r| is_isomorphic(r, &cyclic_ring(2).unwrap())));
    }

    #[test]
    fn prime_orders_have_p_raw_and_two_classes() {
        for p in [2, 3, 5, 7] {
            assert_eq!(count(p, false), p, "raw count at order {p}");
            assert_eq!(count(p, true), 2, "classes at order {p}");
        }
    }

    #[test]
    fn order_one_is_the_zero_ring() {
        let rings = enumerate_rings(&EnumerationTask::new(1)).unwrap().rings;
        assert_eq!(rings.len(), 1);
        assert_eq!(rings[0].order(), 1);
    }

    #[test]
    fn caps_and_errors() {
        assert_eq!(
            enumerate_rings(&EnumerationTask::new(9)).unwrap_err(),
            EnumError::OrderTooLarge { order: 9, cap: 8 }
        );
        assert_eq!(
            enumerate_rings(&EnumerationTask::new(32).cap(64)).unwrap_err(),
            EnumError::OrderTooLarge { order: 32, cap: 16 }
        );
        assert_eq!(enumerate_rings(&EnumerationTask::new(0)).unwrap_err(), EnumError::ZeroOrder);
        let shape = AdditiveGroupShape::new(vec![2, 2]).unwrap();
        assert!(matches!(
            enumerate_rings(&EnumerationTask::new(8).shape(shape)),
            Err(EnumError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn canonical_key_identifies_isomorphic_rings() {
        let a = cyclic_ring(4).unwrap();
        let b = enumerate_rings(&EnumerationTask::new(4)).unwrap().rings;
        let matches = b.iter().filter(|r| canonical_key(r) == canonical_key(&a)).count();
        assert_eq!(matches, 1);
    }

    #[test]
    fn output_is_independent_of_thread_count() {
        let one = enumerate_rings(&EnumerationTask::new(8).threads(1)).unwrap().rings;
        let four = enumerate_rings(&EnumerationTask::new(8).threads(4)).unwrap().rings;
        assert_eq!(one, four);
        let raw1 = enumerate_rings(&EnumerationTask::new(4).dedup(false).threads(1)).unwrap().rings;
        let raw3 = enumerate_rings(&EnumerationTask::new(4).dedup(false).threads(3)).unwrap().rings;
        assert_eq!(raw1, raw3);
    }
}
