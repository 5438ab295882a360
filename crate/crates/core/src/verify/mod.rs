//! Executable checks of the structural statements about `Γ(R)`.
//!
//! Every statement is a [`ClaimInfo`] in [`CLAIMS`]. Per-ring claims run on
//! every enumerated ring and every family instance; family claims build
//! their own rings; the list-realization claim aggregates over a whole run.
//! A check whose hypothesis is not met reports `not_applicable`, numeric
//! statements that no counting convention reproduces report `unreconciled`
//! with the measured values, and every `fail` carries the ring it failed on.

mod checks;
mod families;

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::builders::{
    cyclic_ring, direct_product, first_row_ring, full_matrix_ring, null_ring, BuildError,
};
use crate::enumerate::{enumerate_rings, EnumError, EnumerationTask, DEFAULT_ENUM_CAP};
use crate::graph::{endpoint_sets_unchecked, Convention, DistanceMatrix, EndpointSets, ZdGraph};
use crate::ring::{ElementSets, FiniteRing};

pub use families::{classify_small_graph, list_shapes, ListShape};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// The ring the check failed on; replayable with [`replay`].
    pub ring: Option<FiniteRing>,
    pub witness: Vec<usize>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail { counterexample: Counterexample },
    NotApplicable { reason: String },
    Unreconciled { notes: String },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail { .. } => "fail",
            Verdict::NotApplicable { .. } => "not_applicable",
            Verdict::Unreconciled { .. } => "unreconciled",
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub claim: String,
    /// Label of the ring (or ring set) the check ran on.
    pub scope: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convention: Option<Convention>,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

/// Result of a single check before it is attached to a claim and scope.
#[derive(Debug, Clone)]
pub(crate) struct Outcome {
    pub verdict: Verdict,
    pub detail: String,
}

impl Outcome {
    pub(crate) fn pass(detail: impl Into<String>) -> Self {
        Outcome { verdict: Verdict::Pass, detail: detail.into() }
    }

    pub(crate) fn na(reason: impl Into<String>) -> Self {
        let reason = reason.into();
        Outcome { verdict: Verdict::NotApplicable { reason: reason.clone() }, detail: reason }
    }

    pub(crate) fn fail(witness: Vec<usize>, message: impl Into<String>) -> Self {
        let message = message.into();
        Outcome {
            verdict: Verdict::Fail {
                counterexample: Counterexample { ring: None, witness, message: message.clone() },
            },
            detail: message,
        }
    }

    pub(crate) fn unreconciled(notes: impl Into<String>) -> Self {
        let notes = notes.into();
        Outcome { verdict: Verdict::Unreconciled { notes: notes.clone() }, detail: notes }
    }
}

/// Everything the per-ring checks need, computed once.
pub struct RingContext {
    pub ring: FiniteRing,
    pub sets: ElementSets,
    pub graph: ZdGraph,
    pub distances: DistanceMatrix,
    pub endpoints: EndpointSets,
    pub opposite: FiniteRing,
    pub opposite_graph: ZdGraph,
}

impl RingContext {
    pub fn new(ring: FiniteRing) -> Self {
        let sets = ring.element_sets();
        let graph = ZdGraph::of_ring(&ring);
        let distances = graph.distances();
        let endpoints = endpoint_sets_unchecked(&ring, &sets, &graph);
        let opposite = ring.opposite();
        let opposite_graph = ZdGraph::of_ring(&opposite);
        RingContext { ring, sets, graph, distances, endpoints, opposite, opposite_graph }
    }

    pub fn order(&self) -> usize {
        self.ring.order()
    }
}

pub(crate) type RingCheck = fn(&RingContext, Convention) -> Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    /// Checked on every ring.
    PerRing,
    /// Checked on every ring, once per counting convention.
    PerConvention,
    /// Checked on specific builder instances.
    Family,
    /// Decided from the whole run.
    Aggregate,
    /// Not checkable on finite data; listed with the reason.
    OutOfScope(&'static str),
}

#[derive(Clone, Copy)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub summary: &'static str,
    pub kind: ClaimKind,
    pub(crate) check: Option<RingCheck>,
}

impl std::fmt::Debug for ClaimInfo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClaimInfo").field("id", &self.id).field("kind", &self.kind).finish()
    }
}

macro_rules! ring_claim {
    ($id:expr, $kind:ident, $summary:expr, $check:path) => {
        ClaimInfo { id: $id, summary: $summary, kind: ClaimKind::$kind, check: Some($check) }
    };
}

macro_rules! other_claim {
    ($id:expr, $kind:expr, $summary:expr) => {
        ClaimInfo { id: $id, summary: $summary, kind: $kind, check: None }
    };
}

pub static CLAIMS: &[ClaimInfo] = &[
    ring_claim!("Lem2.1", PerRing, "right identities two-sided => Z_l in Z_r; order>=5 => every edge a->b has c != a with ca = 0", checks::lemma_2_1),
    ring_claim!("Lem2.2", PerRing, "order<=4, one-sided identities two-sided => ab=0 implies ba=0", checks::lemma_2_2),
    ring_claim!("Lem2.2list", PerRing, "order<=4 => graph is in the small-order list", checks::lemma_2_2_list),
    other_claim!("Lem2.2list-realized", ClaimKind::Aggregate, "every small-order list entry is realized by an enumerated ring"),
    ring_claim!("Prop2.3", PerRing, "one-sided identities two-sided => every edge extends to a walk c->a->b->d", checks::prop_2_3),
    ring_claim!("Thm2.4", PerRing, "strongly connected <=> one-sided identities two-sided <=> no sink or source; distance <= 3 when connected", checks::theorem_2_4),
    other_claim!("Rem2.4", ClaimKind::OutOfScope("statement about artinian rings beyond the finite case"), "equivalence for rings artinian on both sides"),
    ring_claim!("Sec2.IeRe", PerRing, "I_e ideal, R_e subring with identity e, R = R_e + I_e, R_e = R/I_e", checks::ie_re),
    ring_claim!("Prop2.5(1)", PerConvention, "out-degree of nonzero a in I_e equals |R|+1", checks::prop_2_5_1),
    ring_claim!("Prop2.5(2)", PerRing, "vertex count is |R|-1 = |R_e||I_e|-1", checks::prop_2_5_2),
    ring_claim!("Prop2.5(3)", PerConvention, "edge count formula in terms of R_e and I_e", checks::prop_2_5_3),
    ring_claim!("Prop2.6", PerRing, "proper one-sided identity => finite distances are at most 6", checks::prop_2_6),
    ring_claim!("Cor2.7", PerRing, "max finite distance of R <= 3 + that of R_e", checks::cor_2_7),
    other_claim!("Ex2.8", ClaimKind::Family, "2x2 matrices over a field: diameter 2 with a common annihilator witness"),
    other_claim!("Ex2.9", ClaimKind::Family, "first-row matrices over F2: star-like graph with 2^(k-1) sinks"),
    other_claim!("Ex2.10", ClaimKind::Family, "first-row 2x2 matrices over Z/n: n*phi(n) sinks, clique number n-1"),
    ring_claim!("Prop3.1", PerRing, "a source or sink with square zero forces order 4 and the star shape", checks::prop_3_1),
    ring_claim!("Prop3.2", PerRing, "order>=5 with proper left identity: >=2 sinks, sinks not square-zero, no sources", checks::prop_3_2),
    ring_claim!("Cor3.3", PerConvention, "ann_l(e)={0,b}: out-degree of b is |R|-1, in-degree positive", checks::cor_3_3),
    ring_claim!("Prop3.4", PerRing, "order>=5 with proper right identity: >=2 sources, sources not square-zero, no sinks", checks::prop_3_4),
    ring_claim!("Cor3.5", PerConvention, "ann_r(e)={0,b} for a right identity e: in-degree of b is |R|-1, out-degree positive", checks::cor_3_5),
    ring_claim!("Cor3.6", PerRing, "order>=5: no sink and source together; never a network", checks::cor_3_6),
    ring_claim!("Def3.7", PerRing, "strong invertibility for any identity equals for some identity; inverses have several one-sided inverses", checks::def_3_7),
    ring_claim!("Prop3.8", PerRing, "r^2 != 0: sink <=> strongly right invertible, source <=> strongly left invertible", checks::prop_3_8),
    ring_claim!("Cor3.9", PerRing, "a unique source or sink forces order 4; order>=5: sinks are the strongly right invertible elements", checks::cor_3_9),
    other_claim!("Def4.1", ClaimKind::OutOfScope("definition of Sink, Sour, Inv_r, Inv_l; exercised by the checks that use them"), "endpoint set definitions"),
    ring_claim!("Prop4.2", PerRing, "order>=5: endpoint sets are cancellative semigroups, Sink = Z_r - Z_l, disjoint decomposition", checks::prop_4_2),
    ring_claim!("Prop4.2@small", PerRing, "order<=4: Sink = Z_r - Z_l and the decomposition, reported only", checks::prop_4_2_small),
    ring_claim!("Prop4.3", PerRing, "order>=5: proper left identity <=> Sink nonempty with x Sink = Sink", checks::prop_4_3),
    ring_claim!("Cor4.4", PerRing, "order>=5: Sink nonempty => Sink = Inv_r and no source", checks::cor_4_4),
    ring_claim!("Rem4.2", PerRing, "right inverses of Inv_r relative to e form a semigroup with identity e", checks::remark_inverses),
    ring_claim!("Prop4.5", PerRing, "order>=5: proper right identity <=> Sour nonempty with Sour y = Sour", checks::prop_4_5),
    ring_claim!("Cor4.6", PerRing, "order>=5: Sour nonempty => Sour = Inv_l and no sink", checks::cor_4_6),
    ring_claim!("Prop4.7", PerRing, "finite case: one-sided identities two-sided <=> one of the endpoint cases, which for finite rings is Sink = Sour = empty", checks::prop_4_7),
    ring_claim!("Cor4.8", PerRing, "finite case: one-sided identities two-sided => no sink and no source", checks::cor_4_8),
    ring_claim!("Cor4.9", PerRing, "the graph is never a network", checks::cor_4_9),
    ring_claim!("Duality", PerRing, "graph of the opposite ring is the reversed graph", checks::duality),
];

pub fn claim(id: &str) -> Option<&'static ClaimInfo> {
    CLAIMS.iter().find(|c| c.id == id)
}

/// `filter` selects `id` when equal, or when `id` is `filter` followed by a
/// sub-part such as `(1)` or `@small`.
fn selects(filter: &str, id: &str) -> bool {
    id == filter
        || id
            .strip_prefix(filter)
            .is_some_and(|rest| rest.starts_with('(') || rest.starts_with('@'))
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub orders: Vec<usize>,
    pub families: bool,
    /// Claim ids to run; `None` runs everything.
    pub claims: Option<Vec<String>>,
    pub conventions: Vec<Convention>,
    pub fail_fast: bool,
    pub record_timing: bool,
    pub enum_cap: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            orders: (2..=DEFAULT_ENUM_CAP).collect(),
            families: true,
            claims: None,
            conventions: Convention::ALL.to_vec(),
            fail_fast: false,
            record_timing: false,
            enum_cap: DEFAULT_ENUM_CAP,
        }
    }
}

impl SuiteConfig {
    fn wants(&self, id: &str) -> bool {
        match &self.claims {
            None => true,
            Some(filters) => filters.iter().any(|f| selects(f, id)),
        }
    }

    fn validate(&self) -> Result<(), SuiteError> {
        for f in self.claims.iter().flatten() {
            if !CLAIMS.iter().any(|c| selects(f, c.id)) {
                return Err(SuiteError::UnknownClaim(f.clone()));
            }
        }
        for &order in &self.orders {
            if order == 0 || order > self.enum_cap.min(crate::enumerate::MAX_ENUM_ORDER) {
                return Err(EnumError::OrderTooLarge {
                    order,
                    cap: self.enum_cap.min(crate::enumerate::MAX_ENUM_ORDER),
                }
                .into());
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClaimSummary {
    pub claim: String,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub unreconciled: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub reports: Vec<TheoremReport>,
    pub summary: Vec<ClaimSummary>,
    /// Number of rings the per-ring claims ran on.
    pub rings_checked: usize,
}

impl SuiteReport {
    pub fn has_failures(&self) -> bool {
        self.reports.iter().any(|r| r.verdict.is_fail())
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremReport> {
        self.reports.iter().filter(|r| r.verdict.is_fail())
    }

    pub fn for_claim<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a TheoremReport> + 'a {
        self.reports.iter().filter(move |r| r.claim == id)
    }

    pub fn summary_for(&self, id: &str) -> Option<&ClaimSummary> {
        self.summary.iter().find(|s| s.claim == id)
    }

    /// One JSON object per report, newline terminated.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&serde_json::to_string(r).expect("report serializes"));
            out.push('\n');
        }
        out
    }

    /// Fixed-width table of every report followed by per-claim totals.
    pub fn render_table(&self) -> String {
        let claim_w = self.reports.iter().map(|r| r.claim.len()).max().unwrap_or(5).max(5);
        let scope_w = self.reports.iter().map(|r| r.scope.len()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        writeln!(
            out,
            "{:<claim_w$}  {:<scope_w$}  {:<6}  {:<14}  detail",
            "claim", "scope", "conv", "verdict"
        )
        .unwrap();
        for r in &self.reports {
            let conv = r.convention.map(|c| c.to_string()).unwrap_or_else(|| "-".into());
            writeln!(
                out,
                "{:<claim_w$}  {:<scope_w$}  {:<6}  {:<14}  {}",
                r.claim,
                r.scope,
                conv,
                r.verdict.name(),
                r.detail
            )
            .unwrap();
        }
        writeln!(out).unwrap();
        writeln!(
            out,
            "{:<claim_w$}  {:>5}  {:>5}  {:>5}  {:>12}",
            "claim", "pass", "fail", "n/a", "unreconciled"
        )
        .unwrap();
        for s in &self.summary {
            writeln!(
                out,
                "{:<claim_w$}  {:>5}  {:>5}  {:>5}  {:>12}",
                s.claim, s.pass, s.fail, s.not_applicable, s.unreconciled
            )
            .unwrap();
        }
        writeln!(out, "rings checked: {}", self.rings_checked).unwrap();
        out
    }
}

/// Builder-family rings included in every suite run with `families` on.
pub fn family_rings() -> Result<Vec<FiniteRing>, BuildError> {
    let mut rings = Vec::new();
    for n in 2..=12 {
        rings.push(cyclic_ring(n)?);
    }
    for factors in [&[2][..], &[3], &[4], &[2, 2], &[2, 2, 2], &[3, 3]] {
        rings.push(null_ring(factors)?);
    }
    for n in 2..=6 {
        rings.push(first_row_ring(2, n)?);
    }
    rings.push(first_row_ring(3, 2)?);
    rings.push(first_row_ring(3, 3)?);
    rings.push(first_row_ring(4, 2)?);
    rings.push(full_matrix_ring(2, 2)?);
    rings.push(full_matrix_ring(2, 3)?);
    let t2 = first_row_ring(2, 2)?;
    rings.push(direct_product(&cyclic_ring(2)?, &t2)?);
    rings.push(direct_product(&cyclic_ring(3)?, &t2)?);
    rings.push(direct_product(&cyclic_ring(4)?, &t2)?);
    rings.push(direct_product(&null_ring(&[2])?, &t2)?);
    rings.push(direct_product(&t2, &t2)?);
    rings.push(direct_product(&cyclic_ring(2)?, &full_matrix_ring(2, 2)?)?);
    let opposites: Vec<FiniteRing> =
        rings.iter().filter(|r| !r.is_commutative()).map(FiniteRing::opposite).collect();
    rings.extend(opposites);
    Ok(rings)
}

fn attach(ring: &FiniteRing, claim: &str, convention: Option<Convention>, o: Outcome) -> TheoremReport {
    let mut verdict = o.verdict;
    if let Verdict::Fail { counterexample } = &mut verdict {
        counterexample.ring = Some(ring.clone());
    }
    TheoremReport {
        claim: claim.to_string(),
        scope: ring.label().to_string(),
        convention,
        verdict,
        detail: o.detail,
        elapsed_ms: None,
    }
}

fn run_claim(ctx: &RingContext, info: &ClaimInfo, conventions: &[Convention], timing: bool) -> Vec<TheoremReport> {
    let Some(check) = info.check else { return Vec::new() };
    let runs: Vec<Option<Convention>> = match info.kind {
        ClaimKind::PerConvention => conventions.iter().copied().map(Some).collect(),
        _ => vec![None],
    };
    runs.into_iter()
        .map(|conv| {
            let start = Instant::now();
            let outcome = check(ctx, conv.unwrap_or(Convention::Simple));
            let mut report = attach(&ctx.ring, info.id, conv, outcome);
            if timing {
                report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            report
        })
        .collect()
}

/// Runs every selected per-ring claim on `ring`.
pub fn check_ring(ring: &FiniteRing, config: &SuiteConfig) -> Vec<TheoremReport> {
    let ctx = RingContext::new(ring.clone());
    let mut out = Vec::new();
    for info in CLAIMS.iter().filter(|c| config.wants(c.id)) {
        let reports = run_claim(&ctx, info, &config.conventions, config.record_timing);
        let failed = reports.iter().any(|r| r.verdict.is_fail());
        out.extend(reports);
        if failed && config.fail_fast {
            break;
        }
    }
    out
}

/// Runs one per-ring claim on one ring. `None` for claims that are not
/// per-ring.
pub fn check_claim(id: &str, ring: &FiniteRing, convention: Convention) -> Option<TheoremReport> {
    let info = claim(id)?;
    let ctx = RingContext::new(ring.clone());
    run_claim(&ctx, info, &[convention], false).into_iter().next()
}

/// Re-runs a failed report on its embedded ring.
pub fn replay(report: &TheoremReport) -> Option<TheoremReport> {
    let Verdict::Fail { counterexample } = &report.verdict else { return None };
    let ring = counterexample.ring.as_ref()?;
    check_claim(&report.claim, ring, report.convention.unwrap_or(Convention::Simple))
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    config.validate()?;
    let mut rings: Vec<FiniteRing> = Vec::new();
    let mut small_by_order: Vec<(usize, usize)> = Vec::new();
    for &order in &config.orders {
        let task = EnumerationTask::new(order).cap(config.enum_cap);
        let found = enumerate_rings(&task)?;
        small_by_order.push((order, found.rings.len()));
        rings.extend(found.rings);
    }
    let enumerated = rings.len();
    if config.families {
        rings.extend(family_rings()?);
    }

    let mut reports: Vec<TheoremReport> = Vec::new();
    if config.fail_fast {
        for ring in &rings {
            let r = check_ring(ring, config);
            let failed = r.iter().any(|x| x.verdict.is_fail());
            reports.extend(r);
            if failed {
                break;
            }
        }
    } else {
        let per_ring: Vec<Vec<TheoremReport>> =
            rings.par_iter().map(|ring| check_ring(ring, config)).collect();
        reports.extend(per_ring.into_iter().flatten());
    }

    let stop = config.fail_fast && reports.iter().any(|r| r.verdict.is_fail());
    if config.families && !stop {
        for id in ["Ex2.8", "Ex2.9", "Ex2.10"] {
            if config.wants(id) {
                reports.extend(families::family_claim(id, config.record_timing)?);
            }
        }
    }
    let covers_small = [2, 3, 4].iter().all(|o| config.orders.contains(o));
    if covers_small && config.wants("Lem2.2list-realized") && !stop {
        let small: Vec<&FiniteRing> =
            rings[..enumerated].iter().filter(|r| r.order() <= 4).collect();
        reports.push(families::list_realized(&small));
    }

    let summary = CLAIMS
        .iter()
        .filter_map(|c| {
            let mut s = ClaimSummary { claim: c.id.to_string(), ..Default::default() };
            for r in reports.iter().filter(|r| r.claim == c.id) {
                match r.verdict {
                    Verdict::Pass => s.pass += 1,
                    Verdict::Fail { .. } => s.fail += 1,
                    Verdict::NotApplicable { .. } => s.not_applicable += 1,
                    Verdict::Unreconciled { .. } => s.unreconciled += 1,
                }
            }
            (s.pass + s.fail + s.not_applicable + s.unreconciled > 0).then_some(s)
        })
        .collect();
    Ok(SuiteReport { reports, summary, rings_checked: rings.len() })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let ids: BTreeSet<&str> = CLAIMS.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), CLAIMS.len());
    }

    #[test]
    fn filter_selects_subparts() {
        assert!(selects("Prop2.5", "Prop2.5(1)"));
        assert!(selects("Prop4.2", "Prop4.2@small"));
        assert!(!selects("Prop2", "Prop2.5(1)"));
        assert!(!selects("Cor4.4", "Cor4.9"));
    }

    #[test]
    fn unknown_claim_rejected() {
        let config = SuiteConfig {
            orders: vec![2],
            claims: Some(vec!["Thm9.9".into()]),
            ..Default::default()
        };
        assert!(matches!(run_suite(&config), Err(SuiteError::UnknownClaim(_))));
    }

    #[test]
    fn order_over_cap_rejected() {
        let config = SuiteConfig { orders: (2..=32).collect(), ..Default::default() };
        assert!(matches!(
            run_suite(&config),
            Err(SuiteError::Enumeration(EnumError::OrderTooLarge { .. }))
        ));
    }

    #[test]
    fn small_suite_passes() {
        let config = SuiteConfig { orders: vec![2, 3, 4], families: false, ..Default::default() };
        let report = run_suite(&config).unwrap();
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert_eq!(report.rings_checked, 2 + 2 + 11);
        let realized: Vec<_> = report.for_claim("Lem2.2list-realized").collect();
        assert_eq!(realized.len(), 1);
        assert_eq!(realized[0].verdict, Verdict::Pass);
    }

    #[test]
    fn suite_is_deterministic() {
        let config = SuiteConfig { orders: vec![2, 3, 4, 6], families: false, ..Default::default() };
        let a = run_suite(&config).unwrap().to_jsonl();
        let b = run_suite(&config).unwrap().to_jsonl();
        assert_eq!(a, b);
    }

    #[test]
    fn fail_carries_ring_and_replays() {
        let t2 = first_row_ring(2, 2).unwrap();
        let o = Outcome::fail(vec![1], "forced");
        let report = attach(&t2, "Cor4.9", None, o);
        match &report.verdict {
            Verdict::Fail { counterexample } => assert_eq!(counterexample.ring.as_ref(), Some(&t2)),
            other => panic!("{other:?}"),
        }
        let again = replay(&report).unwrap();
        assert_eq!(again.verdict, Verdict::Pass);
    }
}
