//! Finite rings stored as dense Cayley tables.
//!
//! Elements are the indices `0..n`, and index `0` is always the additive
//! identity. A [`FiniteRing`] can only be obtained through validation, so
//! every value of the type satisfies the ring axioms (without requiring a
//! multiplicative identity).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A set of element indices, kept sorted for deterministic output.
pub type ElementSet = BTreeSet<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("table is empty")]
    Empty,
    #[error("tables are not square n x n with matching n: {0}")]
    BadShape(String),
    #[error("entry {value} at ({row}, {col}) is outside 0..{order}")]
    BadEntry {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("addition is not an abelian group with identity 0: {0}")]
    NotAbelianGroup(String),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("{side} distributive law fails at ({i}, {j}, {k})")]
    NotDistributive {
        side: Side,
        i: usize,
        j: usize,
        k: usize,
    },
    #[error("0 is not absorbing: 0 * {0} or {0} * 0 is nonzero")]
    ZeroNotAbsorbing(usize),
    #[error("element index {index} out of range for ring of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
}

/// Which side an operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

/// Interchange form of a ring: `{order, add, mul, label}` with row-major tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingJson {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default)]
    pub label: String,
}

/// A validated finite ring (not necessarily unital).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RingJson", into = "RingJson")]
pub struct FiniteRing {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    label: String,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("order", &self.order)
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

impl TryFrom<RingJson> for FiniteRing {
    type Error = RingError;

    fn try_from(json: RingJson) -> Result<Self, RingError> {
        if json.add.len() != json.order {
            return Err(RingError::BadShape(format!(
                "declared order {} but add has {} rows",
                json.order,
                json.add.len()
            )));
        }
        let ring = validate_ring(&json.add, &json.mul)?;
        Ok(ring.with_label(json.label))
    }
}

impl From<FiniteRing> for RingJson {
    fn from(ring: FiniteRing) -> Self {
        ring.to_json()
    }
}

fn flatten(table: &[Vec<usize>], n: usize, name: &str) -> Result<Vec<u32>, RingError> {
    if table.len() != n {
        return Err(RingError::BadShape(format!("{name} has {} rows, expected {n}", table.len())));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != n {
            return Err(RingError::BadShape(format!(
                "{name} row {row} has {} entries, expected {n}",
                entries.len()
            )));
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(RingError::BadEntry { row, col, value, order: n });
            }
            flat.push(value as u32);
        }
    }
    Ok(flat)
}

/// Checks both tables exhaustively and returns the ring they describe.
pub fn validate_ring(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<FiniteRing, RingError> {
    let n = add.len();
    if n == 0 {
        return Err(RingError::Empty);
    }
    let add = flatten(add, n, "add")?;
    let mul = flatten(mul, n, "mul")?;
    FiniteRing::from_flat(n, add, mul, String::new())
}

impl FiniteRing {
    /// Validates flat row-major tables (entries already known to be `< n`).
    pub(crate) fn from_flat(
        n: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        label: String,
    ) -> Result<Self, RingError> {
        debug_assert_eq!(add.len(), n * n);
        debug_assert_eq!(mul.len(), n * n);
        let neg = check_abelian_group(n, &add)?;
        let a = |i: usize, j: usize| add[i * n + j] as usize;
        let m = |i: usize, j: usize| mul[i * n + j] as usize;
        for i in 0..n {
            if m(0, i) != 0 || m(i, 0) != 0 {
                return Err(RingError::ZeroNotAbsorbing(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = m(i, j);
                for k in 0..n {
                    if m(ij, k) != m(i, m(j, k)) {
                        return Err(RingError::NotAssociative(i, j, k));
                    }
                    if m(i, a(j, k)) != a(ij, m(i, k)) {
                        return Err(RingError::NotDistributive { side: Side::Left, i, j, k });
                    }
                    if m(a(i, j), k) != a(m(i, k), m(j, k)) {
                        return Err(RingError::NotDistributive { side: Side::Right, i, j, k });
                    }
                }
            }
        }
        Ok(FiniteRing { order: n, add, mul, neg, label })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn nonzero(&self) -> std::ops::Range<usize> {
        1..self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `k * a` in the additive group.
    pub fn scale(&self, k: usize, a: usize) -> usize {
        (0..k).fold(0, |acc, _| self.add(acc, a))
    }

    pub fn additive_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != 0 {
            acc = self.add(acc, a);
            k += 1;
        }
        k
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.order).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn to_json(&self) -> RingJson {
        RingJson {
            order: self.order,
            add: self.add_table(),
            mul: self.mul_table(),
            label: self.label.clone(),
        }
    }

    /// Single-line JSON, the interchange format used by the CLI.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("ring tables always serialize")
    }

    pub fn from_json_str(s: &str) -> Result<Self, RingParseError> {
        let json: RingJson = serde_json::from_str(s)?;
        Ok(FiniteRing::try_from(json)?)
    }

    fn check_index(&self, x: usize) -> Result<(), RingError> {
        if x < self.order {
            Ok(())
        } else {
            Err(RingError::IndexOutOfRange { index: x, order: self.order })
        }
    }

    /// `{a : a x = 0}`, including `0`.
    pub fn left_annihilator(&self, x: usize) -> Result<ElementSet, RingError> {
        self.check_index(x)?;
        Ok(self.elements().filter(|&a| self.mul(a, x) == 0).collect())
    }

    /// `{a : x a = 0}`, including `0`.
    pub fn right_annihilator(&self, x: usize) -> Result<ElementSet, RingError> {
        self.check_index(x)?;
        Ok(self.elements().filter(|&a| self.mul(x, a) == 0).collect())
    }

    pub fn is_left_identity(&self, e: usize) -> bool {
        self.elements().all(|x| self.mul(e, x) == x)
    }

    pub fn is_right_identity(&self, e: usize) -> bool {
        self.elements().all(|x| self.mul(x, e) == x)
    }

    pub fn is_left_zero_divisor(&self, x: usize) -> bool {
        x != 0 && self.nonzero().any(|y| self.mul(x, y) == 0)
    }

    pub fn is_right_zero_divisor(&self, x: usize) -> bool {
        x != 0 && self.nonzero().any(|y| self.mul(y, x) == 0)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Same addition, multiplication reversed.
    pub fn opposite(&self) -> FiniteRing {
        let n = self.order;
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = self.mul[j * n + i];
            }
        }
        let label = match self.label.strip_prefix("opposite(").and_then(|s| s.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => format!("opposite({})", self.label),
        };
        FiniteRing { order: n, add: self.add.clone(), mul, neg: self.neg.clone(), label }
    }

    /// `a * S = {a s : s in S}`.
    pub fn left_multiple(&self, a: usize, set: &ElementSet) -> ElementSet {
        set.iter().map(|&s| self.mul(a, s)).collect()
    }

    /// `S * a = {s a : s in S}`.
    pub fn right_multiple(&self, set: &ElementSet, a: usize) -> ElementSet {
        set.iter().map(|&s| self.mul(s, a)).collect()
    }

    pub fn element_sets(&self) -> ElementSets {
        let left_zero_divisors: ElementSet =
            self.nonzero().filter(|&x| self.is_left_zero_divisor(x)).collect();
        let right_zero_divisors: ElementSet =
            self.nonzero().filter(|&x| self.is_right_zero_divisor(x)).collect();
        let zero_divisors = left_zero_divisors.union(&right_zero_divisors).copied().collect();
        let left_identities: ElementSet =
            self.elements().filter(|&e| self.is_left_identity(e)).collect();
        let right_identities: ElementSet =
            self.elements().filter(|&e| self.is_right_identity(e)).collect();
        let two_sided_identity = left_identities.intersection(&right_identities).next().copied();
        ElementSets {
            left_zero_divisors,
            right_zero_divisors,
            zero_divisors,
            left_identities,
            right_identities,
            two_sided_identity,
        }
    }
}

#[derive(Debug, Error)]
pub enum RingParseError {
    #[error("malformed ring JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Returns the negation table.
fn check_abelian_group(n: usize, add: &[u32]) -> Result<Vec<u32>, RingError> {
    let a = |i: usize, j: usize| add[i * n + j] as usize;
    for i in 0..n {
        if a(0, i) != i || a(i, 0) != i {
            return Err(RingError::NotAbelianGroup(format!("0 is not an identity for {i}")));
        }
    }
    let mut neg = vec![0u32; n];
    for i in 0..n {
        let mut seen = vec![false; n];
        let mut inverse = None;
        for j in 0..n {
            let v = a(i, j);
            if seen[v] {
                return Err(RingError::NotAbelianGroup(format!("row {i} is not a permutation")));
            }
            seen[v] = true;
            if v == 0 {
                inverse = Some(j);
            }
            if v != a(j, i) {
                return Err(RingError::NotAbelianGroup(format!("{i} + {j} != {j} + {i}")));
            }
        }
        // a permutation row always hits 0
        neg[i] = inverse.expect("row is a permutation") as u32;
    }
    for i in 0..n {
        for j in 0..n {
            let ij = a(i, j);
            for k in 0..n {
                if a(ij, k) != a(i, a(j, k)) {
                    return Err(RingError::NotAbelianGroup(format!(
                        "addition not associative at ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    Ok(neg)
}

/// Zero-divisor and identity sets of a ring. `0` is never a member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementSets {
    pub left_zero_divisors: ElementSet,
    pub right_zero_divisors: ElementSet,
    /// `Z(R)* = Z_l ∪ Z_r`.
    pub zero_divisors: ElementSet,
    pub left_identities: ElementSet,
    pub right_identities: ElementSet,
    pub two_sided_identity: Option<usize>,
}

impl ElementSets {
    /// Left identities that are not two-sided.
    pub fn proper_left_identities(&self) -> ElementSet {
        match self.two_sided_identity {
            Some(_) => ElementSet::new(),
            None => self.left_identities.clone(),
        }
    }

    pub fn proper_right_identities(&self) -> ElementSet {
        match self.two_sided_identity {
            Some(_) => ElementSet::new(),
            None => self.right_identities.clone(),
        }
    }

    pub fn has_proper_left_identity(&self) -> bool {
        self.two_sided_identity.is_none() && !self.left_identities.is_empty()
    }

    pub fn has_proper_right_identity(&self) -> bool {
        self.two_sided_identity.is_none() && !self.right_identities.is_empty()
    }

    /// Every one-sided identity is the two-sided identity.
    pub fn one_sided_identities_are_two_sided(&self) -> bool {
        match self.two_sided_identity {
            Some(one) => {
                self.left_identities.iter().all(|&e| e == one)
                    && self.right_identities.iter().all(|&e| e == one)
            }
            None => self.left_identities.is_empty() && self.right_identities.is_empty(),
        }
    }

    /// Either a two-sided identity exists or there is no one-sided identity at all.
    pub fn unital_or_no_one_sided_identity(&self) -> bool {
        self.two_sided_identity.is_some()
            || (self.left_identities.is_empty() && self.right_identities.is_empty())
    }
}
