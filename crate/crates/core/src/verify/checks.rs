//! Per-ring checks. Each takes a precomputed [`RingContext`] and a counting
//! convention (ignored by checks that do not count degrees or edges).

use crate::builders::{decompose, induced_subring};
use crate::graph::{claimed_edge_count, semigroup_closure_check, Convention, ZdGraph};
use crate::ring::{ElementSet, FiniteRing, Side};

use super::families::{classify_small_graph, list_shapes};
use super::{Outcome, RingContext};

/// Smallest order for which the endpoint statements are asserted.
const LARGE: usize = 5;

fn fmt_set(s: &ElementSet) -> String {
    let items: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn too_small(c: &RingContext) -> Option<Outcome> {
    (c.order() < LARGE).then(|| Outcome::na(format!("order {} is below {LARGE}", c.order())))
}

fn square_zero(r: &FiniteRing, x: usize) -> bool {
    r.mul(x, x) == 0
}

pub(crate) fn lemma_2_1(c: &RingContext, _: Convention) -> Outcome {
    if c.sets.has_proper_right_identity() {
        return Outcome::na("a right identity is not two-sided");
    }
    if let Some(&x) = c.sets.left_zero_divisors.difference(&c.sets.right_zero_divisors).next() {
        return Outcome::fail(vec![x], format!("{x} is a left but not a right zero-divisor"));
    }
    if c.order() < LARGE {
        return Outcome::pass("Z_l is contained in Z_r; edge part needs order >= 5");
    }
    for (a, b) in c.graph.edges() {
        if !c.ring.nonzero().any(|x| x != a && c.ring.mul(x, a) == 0) {
            return Outcome::fail(vec![a, b], format!("edge {a}->{b} but no c != a with ca = 0"));
        }
    }
    Outcome::pass(format!(
        "Z_l is contained in Z_r; all {} edges have a second left annihilator",
        c.graph.edge_count()
    ))
}

pub(crate) fn lemma_2_2(c: &RingContext, _: Convention) -> Outcome {
    if c.order() > 4 {
        return Outcome::na("order above 4");
    }
    if !c.sets.one_sided_identities_are_two_sided() {
        return Outcome::na("has a one-sided identity that is not two-sided");
    }
    for (a, b) in c.graph.edges() {
        if !c.graph.has_edge(b, a) {
            return Outcome::fail(vec![a, b], format!("{a}*{b} = 0 but {b}*{a} != 0"));
        }
    }
    Outcome::pass(format!("all {} edges are mutual", c.graph.edge_count()))
}

pub(crate) fn lemma_2_2_list(c: &RingContext, _: Convention) -> Outcome {
    if c.order() > 4 {
        return Outcome::na("order above 4");
    }
    match classify_small_graph(&c.graph) {
        Some(shape) if list_shapes(c.order()).contains(&shape) => Outcome::pass(shape.to_string()),
        Some(shape) => Outcome::fail(
            c.graph.vertices().to_vec(),
            format!("graph {shape} is not listed for order {}", c.order()),
        ),
        None => Outcome::fail(
            c.graph.vertices().to_vec(),
            format!("graph with edges {:?} matches no listed shape", c.graph.edges()),
        ),
    }
}

pub(crate) fn prop_2_3(c: &RingContext, _: Convention) -> Outcome {
    if !c.sets.one_sided_identities_are_two_sided() {
        return Outcome::na("has a one-sided identity that is not two-sided");
    }
    for (a, b) in c.graph.edges() {
        let pred = c.ring.nonzero().find(|&x| x != a && c.ring.mul(x, a) == 0);
        let succ = c.ring.nonzero().find(|&d| d != b && c.ring.mul(b, d) == 0);
        match (pred, succ) {
            (Some(_), Some(_)) => {}
            _ => {
                return Outcome::fail(
                    vec![a, b],
                    format!("edge {a}->{b}: predecessor {pred:?}, successor {succ:?}"),
                )
            }
        }
    }
    Outcome::pass(format!("{} edges extend both ways", c.graph.edge_count()))
}

pub(crate) fn theorem_2_4(c: &RingContext, _: Convention) -> Outcome {
    let p1 = c.graph.strongly_connected();
    let p2 = c.sets.one_sided_identities_are_two_sided();
    let p2b = c.sets.unital_or_no_one_sided_identity();
    let p3 = c.endpoints.sinks.is_empty() && c.endpoints.sources.is_empty();
    let values = format!("connected={p1} identities={p2} unital_or_none={p2b} no_endpoint={p3}");
    if !(p1 == p2 && p2 == p2b && p2b == p3) {
        let mut witness: Vec<usize> = c.endpoints.sinks.iter().copied().collect();
        witness.extend(c.endpoints.sources.iter().copied());
        witness.extend(c.sets.left_identities.iter().copied());
        return Outcome::fail(witness, format!("equivalence broken: {values}"));
    }
    let max = c.distances.max_finite();
    if p1 && max > 3 {
        let (x, y, _) = c
            .distances
            .pairs()
            .find(|&(_, _, d)| d == Some(max))
            .expect("a pair attains the maximum");
        return Outcome::fail(vec![x, y], format!("connected but d({x},{y}) = {max} > 3"));
    }
    Outcome::pass(format!("{values}; max distance {max}"))
}

pub(crate) fn ie_re(c: &RingContext, _: Convention) -> Outcome {
    let proper = c.sets.proper_left_identities();
    if proper.is_empty() {
        return Outcome::na("no proper left identity");
    }
    for &e in &proper {
        if let Err(err) = decompose(&c.ring, e) {
            return Outcome::fail(vec![e], format!("e = {e}: {err}"));
        }
    }
    Outcome::pass(format!("decomposition verified for {} left identities", proper.len()))
}

pub(crate) fn prop_2_5_1(c: &RingContext, conv: Convention) -> Outcome {
    let proper = c.sets.proper_left_identities();
    if proper.is_empty() {
        return Outcome::na("no proper left identity");
    }
    let claimed = c.order() + 1;
    let mut measured = ElementSet::new();
    for &e in &proper {
        for a in c.ring.nonzero().filter(|&a| c.ring.mul(a, e) == 0) {
            match c.graph.degree_report(a) {
                Ok(d) => {
                    measured.insert(d.out_degree(conv));
                }
                Err(err) => return Outcome::fail(vec![e, a], format!("e = {e}: {err}")),
            }
        }
    }
    let notes = format!(
        "claimed out-degree |R|+1 = {claimed}; measured {} ({conv}) over nonzero a in I_e, |R| = {}",
        fmt_set(&measured),
        c.order()
    );
    if measured.iter().all(|&d| d == claimed) {
        Outcome::pass(notes)
    } else {
        Outcome::unreconciled(notes)
    }
}

pub(crate) fn prop_2_5_2(c: &RingContext, _: Convention) -> Outcome {
    let proper = c.sets.proper_left_identities();
    if proper.is_empty() {
        return Outcome::na("no proper left identity");
    }
    let n = c.order();
    let v = c.graph.vertex_count();
    if v != n - 1 {
        return Outcome::fail(vec![], format!("{v} vertices, expected |R|-1 = {}", n - 1));
    }
    for &e in &proper {
        let re = c.ring.elements().filter(|&a| c.ring.mul(a, e) == a).count();
        let ie = c.ring.elements().filter(|&a| c.ring.mul(a, e) == 0).count();
        if re * ie - 1 != v {
            return Outcome::fail(vec![e], format!("e = {e}: |R_e||I_e|-1 = {} != {v}", re * ie - 1));
        }
    }
    Outcome::pass(format!("{v} vertices = |R|-1 = |R_e||I_e|-1"))
}

pub(crate) fn prop_2_5_3(c: &RingContext, conv: Convention) -> Outcome {
    let proper = c.sets.proper_left_identities();
    if proper.is_empty() {
        return Outcome::na("no proper left identity");
    }
    let mut parts = Vec::new();
    let mut all_match = true;
    for &e in &proper {
        match claimed_edge_count(&c.ring, e, conv) {
            Ok(claim) => {
                all_match &= claim.matches();
                parts.push(format!(
                    "e={e}: claimed {} actual {} (|I|={}, E(Re*,Ie*)={}, E(Re*,K)={}, E(Re)={})",
                    claim.claimed, claim.actual, claim.ideal_size, claim.e_re_ie, claim.e_re_k, claim.e_re
                ));
            }
            Err(err) => return Outcome::fail(vec![e], format!("e = {e}: {err}")),
        }
    }
    let notes = parts.join("; ");
    if all_match {
        Outcome::pass(notes)
    } else {
        Outcome::unreconciled(notes)
    }
}

pub(crate) fn prop_2_6(c: &RingContext, _: Convention) -> Outcome {
    if !(c.sets.has_proper_left_identity() || c.sets.has_proper_right_identity()) {
        return Outcome::na("no proper one-sided identity");
    }
    if let Some((x, y, d)) = c.distances.pairs().find(|&(_, _, d)| d.is_some_and(|d| d > 6)) {
        return Outcome::fail(vec![x, y], format!("d({x},{y}) = {} > 6", d.unwrap_or(0)));
    }
    Outcome::pass(format!("max finite distance {}", c.distances.max_finite()))
}

/// Max finite distance in `Γ(R_e)` for a left identity `e` of `ring`, or
/// `None` when `Γ(R_e)` has no vertices.
fn subring_max_distance(ring: &FiniteRing, e: usize) -> Result<Option<u32>, String> {
    let d = decompose(ring, e).map_err(|err| err.to_string())?;
    let (sub, _) = induced_subring(ring, &d.subring).map_err(|err| err.to_string())?;
    let g = ZdGraph::of_ring(&sub);
    Ok((!g.is_empty()).then(|| g.distances().max_finite()))
}

pub(crate) fn cor_2_7(c: &RingContext, _: Convention) -> Outcome {
    let left = c.sets.proper_left_identities();
    let right = c.sets.proper_right_identities();
    if left.is_empty() && right.is_empty() {
        return Outcome::na("no proper one-sided identity");
    }
    let max = c.distances.max_finite();
    let mut checked = Vec::new();
    // right identities of R are left identities of the opposite ring, whose
    // graph is the reversal and has the same distances
    let cases = left.iter().map(|&e| (&c.ring, e, "left")).chain(right.iter().map(|&e| (&c.opposite, e, "right")));
    for (ring, e, side) in cases {
        match subring_max_distance(ring, e) {
            Err(err) => return Outcome::fail(vec![e], format!("{side} identity {e}: {err}")),
            Ok(None) => {}
            Ok(Some(sub)) => {
                if max > 3 + sub {
                    return Outcome::fail(
                        vec![e],
                        format!("{side} identity {e}: max distance {max} > 3 + {sub}"),
                    );
                }
                checked.push(format!("{side} {e}: {max} <= 3+{sub}"));
            }
        }
    }
    if checked.is_empty() {
        return Outcome::na("Γ(R_e) is empty for every proper one-sided identity");
    }
    Outcome::pass(format!("max finite distances: {}", checked.join(", ")))
}

/// For a square-zero endpoint `b`: order 4, the other two nonzero elements
/// are one-sided identities on `side` and annihilate `b` accordingly.
fn square_zero_endpoint(c: &RingContext, b: usize, kind: &str, side: Side) -> Option<Outcome> {
    if c.order() != 4 {
        return Some(Outcome::fail(vec![b], format!("square-zero {kind} {b} in a ring of order {}", c.order())));
    }
    for a in c.ring.nonzero().filter(|&a| a != b) {
        let ok = match side {
            Side::Left => c.ring.is_left_identity(a) && c.ring.mul(b, a) == 0,
            Side::Right => c.ring.is_right_identity(a) && c.ring.mul(a, b) == 0,
        };
        if !ok {
            return Some(Outcome::fail(
                vec![b, a],
                format!("square-zero {kind} {b}: {a} is not a {side} identity annihilated by {b}"),
            ));
        }
    }
    None
}

pub(crate) fn prop_3_1(c: &RingContext, _: Convention) -> Outcome {
    let sources: Vec<usize> =
        c.endpoints.sources.iter().copied().filter(|&b| square_zero(&c.ring, b)).collect();
    let sinks: Vec<usize> =
        c.endpoints.sinks.iter().copied().filter(|&b| square_zero(&c.ring, b)).collect();
    if sources.is_empty() && sinks.is_empty() {
        return Outcome::na("no square-zero source or sink");
    }
    for &b in &sources {
        if let Some(o) = square_zero_endpoint(c, b, "source", Side::Left) {
            return o;
        }
    }
    for &b in &sinks {
        if let Some(o) = square_zero_endpoint(c, b, "sink", Side::Right) {
            return o;
        }
    }
    Outcome::pass(format!("square-zero sources {sources:?}, sinks {sinks:?} have the order-4 shape"))
}

/// Shared body of the left/right statements for order >= 5: at least two
/// endpoints on one side, none square-zero, none on the other side.
fn endpoints_one_side(
    c: &RingContext,
    has_identity: bool,
    present: &ElementSet,
    absent: &ElementSet,
    present_name: &str,
    absent_name: &str,
) -> Outcome {
    if let Some(o) = too_small(c) {
        return o;
    }
    if !has_identity {
        return Outcome::na("no proper identity on this side");
    }
    if present.len() < 2 {
        return Outcome::fail(present.iter().copied().collect(), format!("only {} {present_name}s", present.len()));
    }
    if let Some(&r) = present.iter().find(|&&r| square_zero(&c.ring, r)) {
        return Outcome::fail(vec![r], format!("{present_name} {r} has r^2 = 0"));
    }
    if !absent.is_empty() {
        return Outcome::fail(absent.iter().copied().collect(), format!("{absent_name}s {} exist", fmt_set(absent)));
    }
    Outcome::pass(format!("{} {present_name}s, none square-zero, no {absent_name}", present.len()))
}

pub(crate) fn prop_3_2(c: &RingContext, _: Convention) -> Outcome {
    let ep = &c.endpoints;
    endpoints_one_side(c, c.sets.has_proper_left_identity(), &ep.sinks, &ep.sources, "sink", "source")
}

pub(crate) fn prop_3_4(c: &RingContext, _: Convention) -> Outcome {
    let ep = &c.endpoints;
    endpoints_one_side(c, c.sets.has_proper_right_identity(), &ep.sources, &ep.sinks, "source", "sink")
}

/// Degree claim for the nonzero element `b` of a two-element annihilator of
/// a one-sided identity: out-degree `|R|-1` for left identities, in-degree
/// for right identities.
fn annihilator_degree(c: &RingContext, conv: Convention, side: Side) -> Outcome {
    if let Some(o) = too_small(c) {
        return o;
    }
    let (identities, proper) = match side {
        Side::Left => (&c.sets.left_identities, c.sets.has_proper_left_identity()),
        Side::Right => (&c.sets.right_identities, c.sets.has_proper_right_identity()),
    };
    if !proper {
        return Outcome::na(format!("no proper {side} identity"));
    }
    let target = c.order() - 1;
    let mut seen = Vec::new();
    let mut mismatch = Vec::new();
    for &e in identities {
        let ann: Vec<usize> = match side {
            Side::Left => c.ring.nonzero().filter(|&x| c.ring.mul(x, e) == 0).collect(),
            Side::Right => c.ring.nonzero().filter(|&x| c.ring.mul(e, x) == 0).collect(),
        };
        let [b] = ann[..] else { continue };
        let d = match c.graph.degree_report(b) {
            Ok(d) => d,
            Err(err) => return Outcome::fail(vec![e, b], err.to_string()),
        };
        let (full, other) = match side {
            Side::Left => (d.out_degree(conv), d.in_simple),
            Side::Right => (d.in_degree(conv), d.out_simple),
        };
        if other == 0 {
            return Outcome::fail(vec![e, b], format!("e = {e}, b = {b}: opposite degree is 0"));
        }
        seen.push(format!("e={e} b={b} degree {full}"));
        if full != target {
            mismatch.push((e, b, full));
        }
    }
    if seen.is_empty() {
        return Outcome::na("no identity with a two-element annihilator");
    }
    let notes = format!("|R|-1 = {target}; {} ({conv})", seen.join(", "));
    match (mismatch.first(), conv) {
        (None, _) => Outcome::pass(notes),
        (Some(&(e, b, _)), Convention::Loop) => Outcome::fail(vec![e, b], notes),
        (Some(_), Convention::Simple) => Outcome::unreconciled(notes),
    }
}

pub(crate) fn cor_3_3(c: &RingContext, conv: Convention) -> Outcome {
    annihilator_degree(c, conv, Side::Left)
}

/// Uses `ann_r(e)`: for a right identity `e` the left annihilator is always
/// zero, which would make the statement vacuous.
pub(crate) fn cor_3_5(c: &RingContext, conv: Convention) -> Outcome {
    annihilator_degree(c, conv, Side::Right)
}

pub(crate) fn cor_3_6(c: &RingContext, _: Convention) -> Outcome {
    let ep = &c.endpoints;
    if c.graph.is_network() {
        return Outcome::fail(c.graph.vertices().to_vec(), "graph is a network");
    }
    if c.order() < LARGE {
        return Outcome::pass("not a network; coexistence part needs order >= 5");
    }
    if !ep.sinks.is_empty() && !ep.sources.is_empty() {
        let mut w: Vec<usize> = ep.sinks.iter().copied().collect();
        w.extend(ep.sources.iter().copied());
        return Outcome::fail(w, format!("sinks {} and sources {}", fmt_set(&ep.sinks), fmt_set(&ep.sources)));
    }
    Outcome::pass("sinks and sources do not coexist; not a network")
}

/// Elements with a unique one-sided inverse relative to some identity on `side`.
fn invertible_for_some(ring: &FiniteRing, identities: &ElementSet, side: Side) -> ElementSet {
    ring.elements()
        .filter(|&r| {
            identities.iter().any(|&e| {
                ring.elements().filter(|&s| one_sided_product(ring, side, r, s) == e).count() == 1
            })
        })
        .collect()
}

/// `rs` for right inverses (`Side::Right`), `sr` for left inverses.
fn one_sided_product(ring: &FiniteRing, side: Side, r: usize, s: usize) -> usize {
    match side {
        Side::Right => ring.mul(r, s),
        Side::Left => ring.mul(s, r),
    }
}

pub(crate) fn def_3_7(c: &RingContext, _: Convention) -> Outcome {
    let cases = [
        (Side::Right, c.sets.has_proper_left_identity(), &c.sets.left_identities, &c.endpoints.inv_r),
        (Side::Left, c.sets.has_proper_right_identity(), &c.sets.right_identities, &c.endpoints.inv_l),
    ];
    let mut notes = Vec::new();
    for (side, proper, identities, strong) in cases {
        if !proper {
            continue;
        }
        let some = invertible_for_some(&c.ring, identities, side);
        if &some != strong {
            return Outcome::fail(
                some.symmetric_difference(strong).copied().collect(),
                format!("{side}: for-every set {} differs from for-some set {}", fmt_set(strong), fmt_set(&some)),
            );
        }
        // the unique inverse s of r has more than one inverse on the other side
        for &r in strong {
            for &e in identities {
                let s = c
                    .ring
                    .elements()
                    .find(|&s| one_sided_product(&c.ring, side, r, s) == e)
                    .expect("strongly invertible");
                let count = c
                    .ring
                    .elements()
                    .filter(|&t| one_sided_product(&c.ring, side, t, s) == e)
                    .count();
                if count < 2 {
                    return Outcome::fail(vec![r, e, s], format!("{side}: inverse {s} of {r} for {e} has {count} partners"));
                }
            }
        }
        notes.push(format!("{side}: {} strongly invertible", strong.len()));
    }
    if notes.is_empty() {
        return Outcome::na("no proper one-sided identity");
    }
    Outcome::pass(notes.join("; "))
}

pub(crate) fn prop_3_8(c: &RingContext, _: Convention) -> Outcome {
    let ep = &c.endpoints;
    for r in c.ring.nonzero().filter(|&r| !square_zero(&c.ring, r)) {
        if ep.sinks.contains(&r) != ep.inv_r.contains(&r) {
            return Outcome::fail(vec![r], format!("{r}: sink {} vs strongly right invertible {}", ep.sinks.contains(&r), ep.inv_r.contains(&r)));
        }
        if ep.sources.contains(&r) != ep.inv_l.contains(&r) {
            return Outcome::fail(vec![r], format!("{r}: source {} vs strongly left invertible {}", ep.sources.contains(&r), ep.inv_l.contains(&r)));
        }
    }
    Outcome::pass(format!("sinks {} sources {}", fmt_set(&ep.sinks), fmt_set(&ep.sources)))
}

/// Order 4 with the star centred at the unique endpoint `b`: two edges
/// between `b` and the other nonzero elements, pointing away from `b` when
/// `outward`, and a loop at `b`.
fn unique_endpoint_shape(c: &RingContext, b: usize, outward: bool) -> Result<(), String> {
    if c.order() != 4 {
        return Err(format!("unique endpoint {b} in a ring of order {}", c.order()));
    }
    let others: Vec<usize> = c.ring.nonzero().filter(|&x| x != b).collect();
    let mut expected: Vec<(usize, usize)> =
        others.iter().map(|&a| if outward { (b, a) } else { (a, b) }).collect();
    expected.sort_unstable();
    if c.graph.edges() != expected || c.graph.loops().iter().copied().collect::<Vec<_>>() != vec![b] {
        return Err(format!("edges {:?}, loops {}", c.graph.edges(), fmt_set(c.graph.loops())));
    }
    Ok(())
}

pub(crate) fn cor_3_9(c: &RingContext, _: Convention) -> Outcome {
    let ep = &c.endpoints;
    let mut notes = Vec::new();
    if ep.sources.len() == 1 {
        let b = *ep.sources.iter().next().expect("one source");
        if let Err(msg) = unique_endpoint_shape(c, b, true) {
            return Outcome::fail(vec![b], format!("unique source: {msg}"));
        }
        notes.push("unique source with the star shape".to_string());
    }
    if ep.sinks.len() == 1 {
        let b = *ep.sinks.iter().next().expect("one sink");
        if let Err(msg) = unique_endpoint_shape(c, b, false) {
            return Outcome::fail(vec![b], format!("unique sink: {msg}"));
        }
        notes.push("unique sink with the star shape".to_string());
    }
    if c.order() >= LARGE {
        for r in c.ring.nonzero() {
            if ep.sinks.contains(&r) != ep.inv_r.contains(&r) {
                return Outcome::fail(vec![r], format!("{r}: sink vs strongly right invertible disagree"));
            }
            if ep.sources.contains(&r) != ep.inv_l.contains(&r) {
                return Outcome::fail(vec![r], format!("{r}: source vs strongly left invertible disagree"));
            }
        }
        for set in [&ep.sinks, &ep.sources] {
            if let Some(&r) = set.iter().find(|&&r| square_zero(&c.ring, r)) {
                return Outcome::fail(vec![r], format!("endpoint {r} has r^2 = 0"));
            }
            if set.len() == 1 {
                return Outcome::fail(set.iter().copied().collect(), "exactly one endpoint of a kind");
            }
        }
        notes.push(format!("endpoints are the strongly invertible elements ({} sinks, {} sources)", ep.sinks.len(), ep.sources.len()));
    }
    if notes.is_empty() {
        return Outcome::na("order below 5 without a unique endpoint");
    }
    Outcome::pass(notes.join("; "))
}

fn decomposition_holds(c: &RingContext) -> Result<(), String> {
    let ep = &c.endpoints;
    let mut count = 0;
    for part in [&ep.sources, &ep.middle, &ep.sinks] {
        count += part.len();
    }
    let union: ElementSet =
        ep.sources.iter().chain(&ep.middle).chain(&ep.sinks).copied().collect();
    if union != c.sets.zero_divisors || count != union.len() {
        return Err(format!(
            "Sour {} + middle {} + Sink {} is not a partition of Z(R)* {}",
            fmt_set(&ep.sources),
            fmt_set(&ep.middle),
            fmt_set(&ep.sinks),
            fmt_set(&c.sets.zero_divisors)
        ));
    }
    Ok(())
}

pub(crate) fn prop_4_2(c: &RingContext, _: Convention) -> Outcome {
    if let Some(o) = too_small(c) {
        return o;
    }
    let ep = &c.endpoints;
    let sets = [
        ("Sink", &ep.sinks, Side::Left),
        ("Sour", &ep.sources, Side::Right),
        ("Inv_r", &ep.inv_r, Side::Left),
        ("Inv_l", &ep.inv_l, Side::Right),
    ];
    for (name, set, side) in sets {
        if set.is_empty() {
            continue;
        }
        let check = semigroup_closure_check(set, &c.ring, side);
        if !check.holds() {
            return Outcome::fail(set.iter().copied().collect(), format!("{name} {}: {:?}", fmt_set(set), check.witness));
        }
    }
    if !ep.inv_r.is_subset(&ep.sinks) || !ep.inv_l.is_subset(&ep.sources) {
        return Outcome::fail(vec![], "Inv_r is not inside Sink or Inv_l is not inside Sour");
    }
    if !ep.algebraic_agrees() {
        return Outcome::fail(
            vec![],
            format!(
                "Sink {} vs Z_r-Z_l {}, Sour {} vs Z_l-Z_r {}",
                fmt_set(&ep.sinks),
                fmt_set(&ep.algebraic_sinks),
                fmt_set(&ep.sources),
                fmt_set(&ep.algebraic_sources)
            ),
        );
    }
    if let Err(msg) = decomposition_holds(c) {
        return Outcome::fail(vec![], msg);
    }
    Outcome::pass(format!("|Sink| = {}, |Sour| = {}, |middle| = {}", ep.sinks.len(), ep.sources.len(), ep.middle.len()))
}

pub(crate) fn prop_4_2_small(c: &RingContext, _: Convention) -> Outcome {
    if c.order() >= LARGE {
        return Outcome::na("order 5 or more is covered by the asserted check");
    }
    let ep = &c.endpoints;
    let mut deviations = Vec::new();
    if ep.sinks != ep.algebraic_sinks {
        deviations.push(format!("Sink {} vs Z_r-Z_l {}", fmt_set(&ep.sinks), fmt_set(&ep.algebraic_sinks)));
    }
    if ep.sources != ep.algebraic_sources {
        deviations.push(format!("Sour {} vs Z_l-Z_r {}", fmt_set(&ep.sources), fmt_set(&ep.algebraic_sources)));
    }
    if let Err(msg) = decomposition_holds(c) {
        deviations.push(msg);
    }
    if deviations.is_empty() {
        Outcome::pass("set identities and decomposition hold")
    } else {
        Outcome::unreconciled(format!("outside the asserted range (order < 5): {}", deviations.join("; ")))
    }
}

/// `x S = S` (`Side::Left`) or `S x = S` (`Side::Right`) for some `x ∈ S`.
fn has_stabilizing_element(ring: &FiniteRing, set: &ElementSet, side: Side) -> Option<usize> {
    set.iter().copied().find(|&x| {
        let image: ElementSet = match side {
            Side::Left => ring.left_multiple(x, set),
            Side::Right => ring.right_multiple(set, x),
        };
        &image == set
    })
}

fn identity_characterization(c: &RingContext, side: Side) -> Outcome {
    if let Some(o) = too_small(c) {
        return o;
    }
    let ep = &c.endpoints;
    let (has_identity, own, other, own_name, other_name) = match side {
        Side::Left => (c.sets.has_proper_left_identity(), &ep.sinks, &ep.sources, "Sink", "Sour"),
        Side::Right => (c.sets.has_proper_right_identity(), &ep.sources, &ep.sinks, "Sour", "Sink"),
    };
    let stabilizer = if own.is_empty() { None } else { has_stabilizing_element(&c.ring, own, side) };
    if has_identity != stabilizer.is_some() {
        return Outcome::fail(
            own.iter().copied().collect(),
            format!("proper {} identity {has_identity}, stabilizing element {stabilizer:?}", side.flip()),
        );
    }
    if has_identity && (!other.is_empty() || own.len() < 2) {
        return Outcome::fail(
            other.iter().copied().collect(),
            format!("|{own_name}| = {}, {other_name} = {}", own.len(), fmt_set(other)),
        );
    }
    Outcome::pass(format!("proper identity {has_identity}, stabilizer {stabilizer:?}"))
}

pub(crate) fn prop_4_3(c: &RingContext, _: Convention) -> Outcome {
    identity_characterization(c, Side::Left)
}

pub(crate) fn prop_4_5(c: &RingContext, _: Convention) -> Outcome {
    identity_characterization(c, Side::Right)
}

fn endpoints_are_invertible(c: &RingContext, side: Side) -> Outcome {
    if let Some(o) = too_small(c) {
        return o;
    }
    let ep = &c.endpoints;
    let (own, inv, other) = match side {
        Side::Right => (&ep.sinks, &ep.inv_r, &ep.sources),
        Side::Left => (&ep.sources, &ep.inv_l, &ep.sinks),
    };
    if own.is_empty() {
        return Outcome::na("endpoint set is empty");
    }
    if own != inv || !other.is_empty() {
        return Outcome::fail(
            own.symmetric_difference(inv).copied().chain(other.iter().copied()).collect(),
            format!("endpoints {} vs invertible {}, opposite endpoints {}", fmt_set(own), fmt_set(inv), fmt_set(other)),
        );
    }
    Outcome::pass(format!("{} endpoints, all strongly invertible", own.len()))
}

pub(crate) fn cor_4_4(c: &RingContext, _: Convention) -> Outcome {
    endpoints_are_invertible(c, Side::Right)
}

pub(crate) fn cor_4_6(c: &RingContext, _: Convention) -> Outcome {
    endpoints_are_invertible(c, Side::Left)
}

pub(crate) fn remark_inverses(c: &RingContext, _: Convention) -> Outcome {
    if let Some(o) = too_small(c) {
        return o;
    }
    let proper = c.sets.proper_left_identities();
    if proper.is_empty() || c.endpoints.inv_r.is_empty() {
        return Outcome::na("no proper left identity or Inv_r is empty");
    }
    for &e in &proper {
        let inverses: ElementSet = c
            .ring
            .elements()
            .filter(|&u| c.endpoints.inv_r.iter().any(|&a| c.ring.mul(a, u) == e))
            .collect();
        if !inverses.contains(&e) {
            return Outcome::fail(vec![e], format!("{e} is not among the inverses {}", fmt_set(&inverses)));
        }
        let check = semigroup_closure_check(&inverses, &c.ring, Side::Left);
        if !check.closed {
            return Outcome::fail(vec![e], format!("inverses for {e} not closed: {:?}", check.witness));
        }
        if let Some(&u) = inverses.iter().find(|&&u| c.ring.mul(e, u) != u || c.ring.mul(u, e) != u) {
            return Outcome::fail(vec![e, u], format!("{e} is not an identity for {u}"));
        }
    }
    Outcome::pass(format!("checked {} left identities", proper.len()))
}

pub(crate) fn prop_4_7(c: &RingContext, _: Convention) -> Outcome {
    if let Some(o) = too_small(c) {
        return o;
    }
    let ep = &c.endpoints;
    let strictly_inside = |image: ElementSet, set: &ElementSet| image.is_subset(set) && &image != set;
    let sour_case = !ep.sources.is_empty()
        && ep.sources.iter().all(|&t| strictly_inside(c.ring.right_multiple(&ep.sources, t), &ep.sources));
    let sink_case = !ep.sinks.is_empty()
        && ep.sinks.iter().all(|&s| strictly_inside(c.ring.left_multiple(s, &ep.sinks), &ep.sinks));
    let case1 = ep.sinks.is_empty() && ep.sources.is_empty();
    let case2 = ep.sinks.is_empty() && sour_case;
    let case3 = ep.sources.is_empty() && sink_case;
    let case4 = sink_case && sour_case;
    let lhs = c.sets.one_sided_identities_are_two_sided();
    let rhs = case1 || case2 || case3 || case4;
    let cases = format!("cases {case1}/{case2}/{case3}/{case4}");
    if lhs != rhs {
        return Outcome::fail(vec![], format!("identities two-sided {lhs}, {cases}"));
    }
    if case2 || case3 || case4 {
        return Outcome::fail(vec![], format!("a finite ring satisfies an infinite case: {cases}"));
    }
    Outcome::pass(format!("finite specialization: identities two-sided {lhs}, {cases}"))
}

pub(crate) fn cor_4_8(c: &RingContext, _: Convention) -> Outcome {
    if let Some(o) = too_small(c) {
        return o;
    }
    if !c.sets.one_sided_identities_are_two_sided() {
        return Outcome::na("has a one-sided identity that is not two-sided");
    }
    let ep = &c.endpoints;
    if !ep.sinks.is_empty() || !ep.sources.is_empty() {
        return Outcome::fail(
            ep.sinks.iter().chain(&ep.sources).copied().collect(),
            format!("sinks {} sources {}", fmt_set(&ep.sinks), fmt_set(&ep.sources)),
        );
    }
    Outcome::pass("finite specialization: no sink and no source")
}

pub(crate) fn cor_4_9(c: &RingContext, _: Convention) -> Outcome {
    if c.graph.is_network() {
        return Outcome::fail(c.graph.vertices().to_vec(), "graph is a network");
    }
    Outcome::pass(format!("{} sinks, {} sources", c.endpoints.sinks.len(), c.endpoints.sources.len()))
}

pub(crate) fn duality(c: &RingContext, _: Convention) -> Outcome {
    if c.opposite_graph != c.graph.reversed() {
        return Outcome::fail(vec![], "graph of the opposite ring is not the reversed graph");
    }
    if c.opposite_graph.sinks() != c.endpoints.sources || c.opposite_graph.sources() != c.endpoints.sinks {
        return Outcome::fail(vec![], "sinks and sources do not swap");
    }
    Outcome::pass(format!("{} edges reversed", c.graph.edge_count()))
}
