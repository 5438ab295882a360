//! Builder-instance claims and the small-order graph list.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::builders::{first_row_ring, full_matrix_ring, BuildError};
use crate::graph::{Diameter, ZdGraph};
use crate::group::euler_phi;
use crate::ring::{ElementSet, FiniteRing};

use super::{Outcome, TheoremReport, Verdict};

/// Graphs that occur for rings of order at most 4 (loops not drawn).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ListShape {
    /// Complete digraph on `n` vertices, all edges in both directions.
    Complete(usize),
    /// `∘⇆∘⇆∘`
    Path,
    /// `∘←∘→∘`
    OutStar,
    /// `∘→∘←∘`
    InStar,
}

impl fmt::Display for ListShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ListShape::Complete(n) => write!(f, "K{n}"),
            ListShape::Path => f.write_str("path"),
            ListShape::OutStar => f.write_str("out-star"),
            ListShape::InStar => f.write_str("in-star"),
        }
    }
}

/// The shapes allowed at each order.
pub fn list_shapes(order: usize) -> Vec<ListShape> {
    use ListShape::*;
    match order {
        2 => vec![Complete(0), Complete(1)],
        3 => vec![Complete(0), Complete(2)],
        4 => vec![Complete(0), Complete(1), Complete(2), Complete(3), Path, OutStar, InStar],
        _ => Vec::new(),
    }
}

const PERMUTATIONS_3: [[usize; 3]; 6] =
    [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Identifies a graph on at most three vertices with one of the list shapes.
pub fn classify_small_graph(graph: &ZdGraph) -> Option<ListShape> {
    let v = graph.vertices();
    let n = v.len();
    if n > 3 {
        return None;
    }
    if graph.edge_count() == n * n.saturating_sub(1) {
        return Some(ListShape::Complete(n));
    }
    if n != 3 {
        return None;
    }
    let templates: [(ListShape, &[(usize, usize)]); 3] = [
        (ListShape::Path, &[(0, 1), (1, 0), (1, 2), (2, 1)]),
        (ListShape::OutStar, &[(1, 0), (1, 2)]),
        (ListShape::InStar, &[(0, 1), (2, 1)]),
    ];
    let actual: BTreeSet<(usize, usize)> = graph.edges().into_iter().collect();
    for (shape, edges) in templates {
        for p in PERMUTATIONS_3 {
            let mapped: BTreeSet<(usize, usize)> =
                edges.iter().map(|&(a, b)| (v[p[a]], v[p[b]])).collect();
            if mapped == actual {
                return Some(shape);
            }
        }
    }
    None
}

/// Every listed (order, shape) pair is realized by one of `rings`.
pub(crate) fn list_realized(rings: &[&FiniteRing]) -> TheoremReport {
    let seen: BTreeSet<(usize, ListShape)> = rings
        .iter()
        .filter_map(|r| classify_small_graph(&ZdGraph::of_ring(r)).map(|s| (r.order(), s)))
        .collect();
    let missing: Vec<String> = (2..=4)
        .flat_map(|o| list_shapes(o).into_iter().map(move |s| (o, s)))
        .filter(|p| !seen.contains(p))
        .map(|(o, s)| format!("{s} at order {o}"))
        .collect();
    let outcome = if missing.is_empty() {
        Outcome::pass(format!("{} listed graphs realized by {} rings", seen.len(), rings.len()))
    } else {
        Outcome::fail(vec![], format!("not realized: {}", missing.join(", ")))
    };
    TheoremReport {
        claim: "Lem2.2list-realized".into(),
        scope: "enumerated orders 2..4".into(),
        convention: None,
        verdict: outcome.verdict,
        detail: outcome.detail,
        elapsed_ms: None,
    }
}

fn report(claim: &str, ring: &FiniteRing, outcome: Outcome, start: Option<Instant>) -> TheoremReport {
    let mut verdict = outcome.verdict;
    if let Verdict::Fail { counterexample } = &mut verdict {
        counterexample.ring = Some(ring.clone());
    }
    TheoremReport {
        claim: claim.into(),
        scope: ring.label().into(),
        convention: None,
        verdict,
        detail: outcome.detail,
        elapsed_ms: start.map(|s| s.elapsed().as_secs_f64() * 1e3),
    }
}

/// Diameter 2, and any two zero-divisors `A`, `B` have a zero-divisor `C`
/// with `AC = 0 = CB`.
pub fn full_matrix_check(ring: &FiniteRing) -> Result<u32, String> {
    let g = ZdGraph::of_ring(ring);
    let diameter = g.distances().diameter();
    if diameter != Diameter::Finite(2) {
        return Err(format!("diameter {diameter}"));
    }
    for &a in g.vertices() {
        for &b in g.vertices() {
            if !g.vertices().iter().any(|&c| ring.mul(a, c) == 0 && ring.mul(c, b) == 0) {
                return Err(format!("no common annihilator for ({a}, {b})"));
            }
        }
    }
    Ok(2)
}

/// Star-like graph of first-row matrices over F2 of size `k`.
pub fn first_row_f2_check(ring: &FiniteRing, k: usize) -> Result<String, String> {
    let g = ZdGraph::of_ring(ring);
    let half = 1usize << (k - 1);
    let e = half; // first row (1, 0, ..., 0)
    let sinks = g.sinks();
    let left: ElementSet = ring.element_sets().left_identities;
    let ideal: ElementSet = ring.elements().filter(|&a| ring.mul(a, e) == 0).collect();
    if sinks.len() != half {
        return Err(format!("|Sink| = {}, expected {half}", sinks.len()));
    }
    if sinks != left {
        return Err(format!("Sink {sinks:?} is not the set of left identities {left:?}"));
    }
    if ideal.len() != half {
        return Err(format!("|I_e| = {}, expected {half}", ideal.len()));
    }
    let kernel: Vec<usize> = g.vertices().iter().copied().filter(|v| !sinks.contains(v)).collect();
    if kernel.len() != half - 1 {
        return Err(format!("{} non-sink vertices, expected {}", kernel.len(), half - 1));
    }
    for &x in &kernel {
        for &y in &kernel {
            if x != y && !g.has_edge(x, y) {
                return Err(format!("kernel is not complete: no edge {x}->{y}"));
            }
        }
        if let Some(&s) = sinks.iter().find(|&&s| !g.has_edge(x, s)) {
            return Err(format!("kernel vertex {x} misses sink {s}"));
        }
    }
    Ok(format!("|Sink| = |I_e| = {half}, kernel K{}", half - 1))
}

/// First-row 2x2 matrices over Z/n.
pub fn first_row_zn_check(ring: &FiniteRing, n: usize) -> Result<String, String> {
    let g = ZdGraph::of_ring(ring);
    let e = n; // first row (1, 0)
    let sinks = g.sinks();
    let expected: ElementSet =
        ring.nonzero().filter(|&x| gcd(x / n, n) == 1).collect();
    let ideal = ring.elements().filter(|&a| ring.mul(a, e) == 0).count();
    let want = n * euler_phi(n);
    if sinks.len() != want || sinks != expected {
        return Err(format!("|Sink| = {}, expected n*phi(n) = {want}", sinks.len()));
    }
    if ideal != n {
        return Err(format!("|I_e| = {ideal}, expected {n}"));
    }
    if n >= 3 && !g.sources().is_empty() {
        return Err(format!("sources {:?}", g.sources()));
    }
    let clique = g.clique_number();
    if clique != n - 1 {
        return Err(format!("clique number {clique}, expected {}", n - 1));
    }
    Ok(format!("|Sink| = {want}, |I_e| = {n}, clique number {clique}"))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn family_claim(id: &str, timing: bool) -> Result<Vec<TheoremReport>, BuildError> {
    let mut out = Vec::new();
    let clock = || timing.then(Instant::now);
    match id {
        "Ex2.8" => {
            for q in [2, 3] {
                let start = clock();
                let ring = full_matrix_ring(2, q)?;
                let o = match full_matrix_check(&ring) {
                    Ok(d) => Outcome::pass(format!("diameter {d}; common annihilator for every pair")),
                    Err(msg) => Outcome::fail(vec![], msg),
                };
                out.push(report(id, &ring, o, start));
            }
        }
        "Ex2.9" => {
            for k in [2, 3] {
                let start = clock();
                let ring = first_row_ring(k, 2)?;
                let o = match first_row_f2_check(&ring, k) {
                    Ok(d) => Outcome::pass(d),
                    Err(msg) => Outcome::fail(vec![], msg),
                };
                out.push(report(id, &ring, o, start));
            }
        }
        "Ex2.10" => {
            for n in 2..=6 {
                let start = clock();
                let ring = first_row_ring(2, n)?;
                let o = match first_row_zn_check(&ring, n) {
                    Ok(d) => Outcome::pass(d),
                    Err(msg) => Outcome::fail(vec![], msg),
                };
                out.push(report(id, &ring, o, start));
            }
        }
        _ => {}
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cyclic_ring, direct_product, null_ring};

    #[test]
    fn classifies_examples() {
        let shape = |r: &FiniteRing| classify_small_graph(&ZdGraph::of_ring(r));
        assert_eq!(shape(&cyclic_ring(4).unwrap()), Some(ListShape::Complete(1)));
        assert_eq!(shape(&null_ring(&[2, 2]).unwrap()), Some(ListShape::Complete(3)));
        let t2 = first_row_ring(2, 2).unwrap();
        assert_eq!(shape(&t2), Some(ListShape::OutStar));
        assert_eq!(shape(&t2.opposite()), Some(ListShape::InStar));
        let path = direct_product(&null_ring(&[2]).unwrap(), &cyclic_ring(2).unwrap()).unwrap();
        assert_eq!(shape(&path), Some(ListShape::Path));
        assert_eq!(shape(&cyclic_ring(6).unwrap()), Some(ListShape::Path));
    }

    #[test]
    fn examples_hold() {
        for id in ["Ex2.8", "Ex2.9", "Ex2.10"] {
            for r in family_claim(id, false).unwrap() {
                assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
            }
        }
    }
}
