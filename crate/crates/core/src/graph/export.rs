//! DOT and JSON renderings of a graph.

use std::fmt::Write as _;

use serde::Serialize;

use super::{Diameter, ZdGraph};
use crate::ring::{ElementSet, FiniteRing};

const SINK_COLOR: &str = "lightblue";
const SOURCE_COLOR: &str = "salmon";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub loops: Vec<usize>,
    pub sinks: Vec<usize>,
    pub sources: Vec<usize>,
    pub diameter: Diameter,
    pub max_finite_distance: u32,
    pub clique_number: usize,
}

impl GraphJson {
    pub fn of(graph: &ZdGraph) -> Self {
        let distances = graph.distances();
        GraphJson {
            vertices: graph.vertices().to_vec(),
            edges: graph.edges().into_iter().map(|(x, y)| [x, y]).collect(),
            loops: graph.loops().iter().copied().collect(),
            sinks: graph.sinks().into_iter().collect(),
            sources: graph.sources().into_iter().collect(),
            diameter: distances.diameter(),
            max_finite_distance: distances.max_finite(),
            clique_number: graph.clique_number(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("graph json serializes")
    }
}

fn digits(mut x: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = x % base;
        x /= base;
    }
    out
}

/// Display name of an element: matrix notation for the matrix families,
/// otherwise the index itself.
pub fn element_name(ring: &FiniteRing, x: usize) -> String {
    let label = ring.label();
    let label = label.strip_prefix("opposite(").and_then(|l| l.strip_suffix(')')).unwrap_or(label);
    let words: Vec<&str> = label.split_whitespace().collect();
    let params = |w: &[&str]| -> Option<(usize, usize)> {
        match w {
            [_, k, n] => Some((k.parse().ok()?, n.parse().ok()?)),
            _ => None,
        }
    };
    match words.first().copied() {
        Some("first_row") => {
            if let Some((k, n)) = params(&words) {
                let d = digits(x, n, k);
                let cells: Vec<String> = d.iter().map(usize::to_string).collect();
                return format!("[{}]", cells.join(" "));
            }
        }
        Some("full_matrix") => {
            if let Some((k, q)) = params(&words) {
                let d = digits(x, q, k * k);
                let rows: Vec<String> = d
                    .chunks(k)
                    .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
                    .collect();
                return format!("[{}]", rows.join("; "));
            }
        }
        _ => {}
    }
    x.to_string()
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT source for `graph`. Sinks and sources get distinct fill colors and
/// loops are drawn as self-edges.
pub fn to_dot(ring: &FiniteRing, graph: &ZdGraph) -> String {
    let sinks: ElementSet = graph.sinks();
    let sources: ElementSet = graph.sources();
    let mut out = String::new();
    let name = if ring.label().is_empty() { "zd" } else { ring.label() };
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for &v in graph.vertices() {
        let mut attrs = format!("label={}", quote(&element_name(ring, v)));
        if sinks.contains(&v) {
            write!(attrs, ", style=filled, fillcolor={SINK_COLOR}").unwrap();
        } else if sources.contains(&v) {
            write!(attrs, ", style=filled, fillcolor={SOURCE_COLOR}").unwrap();
        }
        writeln!(out, "  {v} [{attrs}];").unwrap();
    }
    for (x, y) in graph.edges() {
        writeln!(out, "  {x} -> {y};").unwrap();
    }
    for &l in graph.loops() {
        writeln!(out, "  {l} -> {l};").unwrap();
    }
    out.push_str("}\n");
    out
}
