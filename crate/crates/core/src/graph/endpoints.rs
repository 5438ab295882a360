//! Sinks, sources and the algebraic sets that describe them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{GraphError, ZdGraph};
use crate::ring::{ElementSet, ElementSets, FiniteRing, Side};

/// How self-products `x² = 0` enter degree and edge counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Only edges between distinct vertices.
    Simple,
    /// A vertex with `x² = 0` carries one extra edge to itself.
    Loop,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::Simple, Convention::Loop];
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Simple => "simple",
            Convention::Loop => "loop",
        })
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "simple" => Ok(Convention::Simple),
            "loop" => Ok(Convention::Loop),
            other => Err(format!("unknown convention {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndpointSets {
    pub sinks: ElementSet,
    pub sources: ElementSet,
    pub inv_r: ElementSet,
    pub inv_l: ElementSet,
    /// Nonzero elements that are both left and right zero-divisors.
    pub middle: ElementSet,
    /// `Z_r − Z_l` and `Z_l − Z_r`, kept for rings too small for them to
    /// be guaranteed equal to the graph-side sets.
    pub algebraic_sinks: ElementSet,
    pub algebraic_sources: ElementSet,
}

impl EndpointSets {
    pub fn algebraic_agrees(&self) -> bool {
        self.sinks == self.algebraic_sinks && self.sources == self.algebraic_sources
    }
}

/// Order from which graph sinks must coincide with `Z_r − Z_l`.
const ALGEBRAIC_AGREEMENT_ORDER: usize = 5;

pub fn endpoint_sets(ring: &FiniteRing, graph: &ZdGraph) -> Result<EndpointSets, GraphError> {
    endpoint_sets_with(ring, &ring.element_sets(), graph)
}

pub fn endpoint_sets_with(
    ring: &FiniteRing,
    sets: &ElementSets,
    graph: &ZdGraph,
) -> Result<EndpointSets, GraphError> {
    let ep = endpoint_sets_unchecked(ring, sets, graph);
    if ring.order() >= ALGEBRAIC_AGREEMENT_ORDER && !ep.algebraic_agrees() {
        return Err(GraphError::InternalInvariantViolation(format!(
            "graph sinks {:?} / sources {:?} differ from Z_r-Z_l {:?} / Z_l-Z_r {:?}",
            ep.sinks, ep.sources, ep.algebraic_sinks, ep.algebraic_sources
        )));
    }
    Ok(ep)
}

/// Same sets without the agreement check, for callers that report it themselves.
pub fn endpoint_sets_unchecked(ring: &FiniteRing, sets: &ElementSets, graph: &ZdGraph) -> EndpointSets {
    let algebraic_sinks: ElementSet =
        sets.right_zero_divisors.difference(&sets.left_zero_divisors).copied().collect();
    let algebraic_sources: ElementSet =
        sets.left_zero_divisors.difference(&sets.right_zero_divisors).copied().collect();
    let middle =
        sets.left_zero_divisors.intersection(&sets.right_zero_divisors).copied().collect();
    EndpointSets {
        sinks: graph.sinks(),
        sources: graph.sources(),
        inv_r: invertible_with(ring, sets, Side::Right),
        inv_l: invertible_with(ring, sets, Side::Left),
        middle,
        algebraic_sinks,
        algebraic_sources,
    }
}

/// Elements `r` with exactly one `s` satisfying `rs = e` for every left
/// identity `e`. Empty unless a proper left identity exists.
pub fn strongly_right_invertible(ring: &FiniteRing) -> ElementSet {
    invertible_with(ring, &ring.element_sets(), Side::Right)
}

/// Dual of [`strongly_right_invertible`]: unique `s` with `sr = e` for every
/// right identity `e`.
pub fn strongly_left_invertible(ring: &FiniteRing) -> ElementSet {
    invertible_with(ring, &ring.element_sets(), Side::Left)
}

fn invertible_with(ring: &FiniteRing, sets: &ElementSets, side: Side) -> ElementSet {
    let (identities, proper) = match side {
        Side::Right => (&sets.left_identities, sets.has_proper_left_identity()),
        Side::Left => (&sets.right_identities, sets.has_proper_right_identity()),
    };
    if !proper {
        return ElementSet::new();
    }
    let product = |r: usize, s: usize| match side {
        Side::Right => ring.mul(r, s),
        Side::Left => ring.mul(s, r),
    };
    ring.elements()
        .filter(|&r| {
            identities.iter().all(|&e| ring.elements().filter(|&s| product(r, s) == e).count() == 1)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SemigroupWitness {
    /// `a * b = product` lies outside the set.
    NotClosed { a: usize, b: usize, product: usize },
    /// `a x = a y` (or `x a = y a`) with `x != y`.
    NotCancellative { a: usize, x: usize, y: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupCheck {
    pub closed: bool,
    pub cancellative: bool,
    pub witness: Option<SemigroupWitness>,
}

impl SemigroupCheck {
    pub fn holds(&self) -> bool {
        self.closed && self.cancellative
    }
}

/// Closure of `set` under multiplication and cancellation on the given side:
/// `Left` means `ax = ay ⟹ x = y`, `Right` means `xa = ya ⟹ x = y`.
pub fn semigroup_closure_check(set: &ElementSet, ring: &FiniteRing, side: Side) -> SemigroupCheck {
    let mut witness = None;
    let mut closed = true;
    'outer: for &a in set {
        for &b in set {
            let p = ring.mul(a, b);
            if !set.contains(&p) {
                closed = false;
                witness = Some(SemigroupWitness::NotClosed { a, b, product: p });
                break 'outer;
            }
        }
    }
    let mut cancellative = true;
    'cancel: for &a in set {
        let mut seen = std::collections::BTreeMap::new();
        for &x in set {
            let p = match side {
                Side::Left => ring.mul(a, x),
                Side::Right => ring.mul(x, a),
            };
            if let Some(&y) = seen.get(&p) {
                cancellative = false;
                if witness.is_none() {
                    witness = Some(SemigroupWitness::NotCancellative { a, x: y, y: x });
                }
                break 'cancel;
            }
            seen.insert(p, x);
        }
    }
    SemigroupCheck { closed, cancellative, witness }
}

/// Both sides of the edge-count formula for a proper left identity `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCountClaim {
    pub convention: Convention,
    pub e: usize,
    pub ideal_size: usize,
    pub e_re_ie: i64,
    pub e_re_k: i64,
    pub e_re: i64,
    pub claimed: i64,
    pub actual: i64,
}

impl EdgeCountClaim {
    pub fn matches(&self) -> bool {
        self.claimed == self.actual
    }
}

/// Evaluates `|I|(|I| − 1 + E(R_e*, I_e*) + E(R_e*, K) + (2 − |I|) E(R_e))`
/// with `K = {a + b : a ∈ R_e*, b ∈ I_e*}`, next to the directed edge count
/// of `Γ(R)`, both under `convention`.
pub fn claimed_edge_count(
    ring: &FiniteRing,
    e: usize,
    convention: Convention,
) -> Result<EdgeCountClaim, GraphError> {
    if e >= ring.order() || !ring.is_left_identity(e) {
        return Err(GraphError::NotLeftIdentity(e));
    }
    let ideal: ElementSet = ring.elements().filter(|&a| ring.mul(a, e) == 0).collect();
    let re_star: ElementSet = ring.nonzero().filter(|&a| ring.mul(a, e) == a).collect();
    let ie_star: ElementSet = ideal.iter().copied().filter(|&a| a != 0).collect();
    let k: ElementSet = re_star
        .iter()
        .flat_map(|&a| ie_star.iter().map(move |&b| (a, b)))
        .map(|(a, b)| ring.add(a, b))
        .collect();
    let count = |m: &ElementSet, n: &ElementSet| -> i64 {
        let mut c = 0;
        for &x in m {
            for &y in n {
                if ring.mul(x, y) == 0 && (x != y || convention == Convention::Loop) {
                    c += 1;
                }
            }
        }
        c
    };
    let e_re_ie = count(&re_star, &ie_star);
    let e_re_k = count(&re_star, &k);
    let e_re = count(&re_star, &re_star);
    let i = ideal.len() as i64;
    let claimed = i * (i - 1 + e_re_ie + e_re_k + (2 - i) * e_re);
    let graph = ZdGraph::of_ring(ring);
    let actual = graph.edge_count() as i64
        + if convention == Convention::Loop { graph.loops().len() as i64 } else { 0 };
    Ok(EdgeCountClaim {
        convention,
        e,
        ideal_size: ideal.len(),
        e_re_ie,
        e_re_k,
        e_re,
        claimed,
        actual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cyclic_ring, first_row_ring};
    use crate::graph::build_graph;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn t2_endpoints() {
        let t2 = first_row_ring(2, 2).unwrap();
        let ep = endpoint_sets(&t2, &build_graph(&t2)).unwrap();
        assert_eq!(ep.sinks, set(&[2, 3]));
        assert_eq!(ep.sources, set(&[1]));
        assert_eq!(ep.algebraic_sinks, ep.sinks);
        // e12 is a source, but e12² = 0 also makes it a right zero-divisor
        assert!(ep.algebraic_sources.is_empty());
        assert!(!ep.algebraic_agrees());
        assert_eq!(strongly_right_invertible(&t2), set(&[2, 3]));
        assert!(strongly_left_invertible(&t2).is_empty());
    }

    #[test]
    fn z6_endpoints() {
        let z6 = cyclic_ring(6).unwrap();
        let ep = endpoint_sets(&z6, &build_graph(&z6)).unwrap();
        assert!(ep.sinks.is_empty() && ep.sources.is_empty());
        assert_eq!(ep.middle, set(&[2, 3, 4]));
        assert!(strongly_right_invertible(&z6).is_empty());
    }

    #[test]
    fn u3_endpoints() {
        let u3 = first_row_ring(2, 3).unwrap();
        let ep = endpoint_sets(&u3, &build_graph(&u3)).unwrap();
        assert_eq!(ep.sinks.len(), 6);
        assert!(ep.sources.is_empty());
        assert_eq!(ep.inv_r, ep.sinks);
    }

    #[test]
    fn semigroup_checks() {
        let t2 = first_row_ring(2, 2).unwrap();
        let c = semigroup_closure_check(&set(&[2, 3]), &t2, Side::Left);
        assert!(c.holds());
        assert_eq!(c.witness, None);
        let z6 = cyclic_ring(6).unwrap();
        let c = semigroup_closure_check(&set(&[2]), &z6, Side::Left);
        assert!(!c.closed);
        assert_eq!(c.witness, Some(SemigroupWitness::NotClosed { a: 2, b: 2, product: 4 }));
        // 3*2 = 3*4 = 0 in Z/6
        let c = semigroup_closure_check(&set(&[0, 2, 3, 4]), &z6, Side::Left);
        assert!(c.closed);
        assert!(!c.cancellative);
    }

    #[test]
    fn edge_count_evaluates() {
        let t2 = first_row_ring(2, 2).unwrap();
        let c = claimed_edge_count(&t2, 2, Convention::Simple).unwrap();
        assert_eq!(c.actual, 2);
        assert_eq!(c.ideal_size, 2);
        let l = claimed_edge_count(&t2, 2, Convention::Loop).unwrap();
        assert_eq!(l.actual, 3);
        assert_eq!(claimed_edge_count(&t2, 1, Convention::Simple), Err(GraphError::NotLeftIdentity(1)));
    }

    #[test]
    fn convention_parses() {
        assert_eq!("loop".parse::<Convention>().unwrap(), Convention::Loop);
        assert!("both".parse::<Convention>().is_err());
    }
}
