//! The directed zero-divisor graph `Γ(R)`.
//!
//! Vertices are the nonzero one-sided zero-divisors and `x -> y` iff
//! `x != y` and `xy = 0`. Elements with `x² = 0` are kept in a separate loop
//! set: sink/source detection, distances and cliques use the simple graph,
//! while degree reports expose the loop so either counting convention can
//! be applied.

mod endpoints;
mod export;

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::ring::{ElementSet, FiniteRing};

pub use endpoints::{
    claimed_edge_count, endpoint_sets, endpoint_sets_unchecked, endpoint_sets_with, semigroup_closure_check,
    strongly_left_invertible, strongly_right_invertible, Convention, EdgeCountClaim,
    EndpointSets, SemigroupCheck, SemigroupWitness,
};
pub use export::{element_name, to_dot, GraphJson};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{0} is not a vertex of the graph")]
    VertexNotInGraph(usize),
    #[error("edge ({0}, {1}) is a self-edge; put it in the loop set")]
    SelfEdge(usize, usize),
    #[error("{0} is not a left identity")]
    NotLeftIdentity(usize),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

/// A directed graph on element indices with a separate loop set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZdGraph {
    vertices: Vec<usize>,
    /// element index -> position in `vertices`
    position: Vec<usize>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    loops: ElementSet,
}

const ABSENT: usize = usize::MAX;

pub fn build_graph(ring: &FiniteRing) -> ZdGraph {
    ZdGraph::of_ring(ring)
}

impl ZdGraph {
    pub fn of_ring(ring: &FiniteRing) -> Self {
        let vertices: Vec<usize> = ring.element_sets().zero_divisors.into_iter().collect();
        let mut edges = Vec::new();
        let mut loops = ElementSet::new();
        for &x in &vertices {
            for &y in &vertices {
                if ring.mul(x, y) == 0 {
                    if x == y {
                        loops.insert(x);
                    } else {
                        edges.push((x, y));
                    }
                }
            }
        }
        ZdGraph::from_parts(vertices, edges, loops).expect("ring graph is well formed")
    }

    /// Builds an arbitrary digraph; used for hand-made examples.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
        loops: impl IntoIterator<Item = usize>,
    ) -> Result<Self, GraphError> {
        let vertices: Vec<usize> =
            vertices.into_iter().collect::<ElementSet>().into_iter().collect();
        let span = vertices.last().map_or(0, |&v| v + 1);
        let mut position = vec![ABSENT; span];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let lookup = |x: usize| -> Result<usize, GraphError> {
            match position.get(x) {
                Some(&p) if p != ABSENT => Ok(p),
                _ => Err(GraphError::VertexNotInGraph(x)),
            }
        };
        let mut out_adj = vec![Vec::new(); vertices.len()];
        let mut in_adj = vec![Vec::new(); vertices.len()];
        for (x, y) in edges {
            if x == y {
                return Err(GraphError::SelfEdge(x, y));
            }
            let (px, py) = (lookup(x)?, lookup(y)?);
            out_adj[px].push(py);
            in_adj[py].push(px);
        }
        for adj in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            adj.sort_unstable();
            adj.dedup();
        }
        let loops: ElementSet = loops.into_iter().collect();
        for &l in &loops {
            lookup(l)?;
        }
        Ok(ZdGraph { vertices, position, out_adj, in_adj, loops })
    }

    fn pos(&self, x: usize) -> Option<usize> {
        self.position.get(x).copied().filter(|&p| p != ABSENT)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.pos(x).is_some()
    }

    pub fn loops(&self) -> &ElementSet {
        &self.loops
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        match (self.pos(x), self.pos(y)) {
            (Some(px), Some(py)) => self.out_adj[px].binary_search(&py).is_ok(),
            _ => false,
        }
    }

    pub fn out_neighbors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        let adj = self.pos(x).map(|p| self.out_adj[p].as_slice()).unwrap_or(&[]);
        adj.iter().map(move |&p| self.vertices[p])
    }

    pub fn in_neighbors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        let adj = self.pos(x).map(|p| self.in_adj[p].as_slice()).unwrap_or(&[]);
        adj.iter().map(move |&p| self.vertices[p])
    }

    /// Simple (loop-free) edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (px, adj) in self.out_adj.iter().enumerate() {
            for &py in adj {
                out.push((self.vertices[px], self.vertices[py]));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.out_adj.iter().map(Vec::len).sum()
    }

    /// Every edge reversed; loops are unchanged.
    pub fn reversed(&self) -> ZdGraph {
        ZdGraph {
            vertices: self.vertices.clone(),
            position: self.position.clone(),
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
            loops: self.loops.clone(),
        }
    }

    /// In-degree positive, out-degree zero (simple graph).
    pub fn sinks(&self) -> ElementSet {
        (0..self.vertices.len())
            .filter(|&p| self.out_adj[p].is_empty() && !self.in_adj[p].is_empty())
            .map(|p| self.vertices[p])
            .collect()
    }

    pub fn sources(&self) -> ElementSet {
        (0..self.vertices.len())
            .filter(|&p| self.in_adj[p].is_empty() && !self.out_adj[p].is_empty())
            .map(|p| self.vertices[p])
            .collect()
    }

    pub fn degree_report(&self, x: usize) -> Result<DegreeReport, GraphError> {
        let p = self.pos(x).ok_or(GraphError::VertexNotInGraph(x))?;
        Ok(DegreeReport {
            out_simple: self.out_adj[p].len(),
            in_simple: self.in_adj[p].len(),
            has_loop: self.loops.contains(&x),
        })
    }

    fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.vertices.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &w in &self.out_adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs directed distances by BFS from every vertex.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.vertices.len();
        let rows: Vec<Vec<Option<u32>>> = if n >= 128 {
            (0..n).into_par_iter().map(|s| self.bfs(s)).collect()
        } else {
            (0..n).map(|s| self.bfs(s)).collect()
        };
        DistanceMatrix {
            vertices: self.vertices.clone(),
            position: self.position.clone(),
            dist: rows.into_iter().flatten().collect(),
        }
    }

    /// Every ordered pair of vertices is joined by a directed path.
    /// The empty graph is strongly connected.
    pub fn strongly_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let reach = |adj: &[Vec<usize>]| -> bool {
            let mut seen = vec![false; self.vertices.len()];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach(&self.out_adj) && reach(&self.in_adj)
    }

    pub fn weakly_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in self.out_adj[u].iter().chain(&self.in_adj[u]) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Largest set of vertices pairwise joined by edges in both directions.
    pub fn clique_number(&self) -> usize {
        let n = self.vertices.len();
        let mutual: Vec<Vec<usize>> = (0..n)
            .map(|p| {
                self.out_adj[p]
                    .iter()
                    .copied()
                    .filter(|q| self.out_adj[*q].binary_search(&p).is_ok())
                    .collect()
            })
            .collect();
        let mut best = 0;
        let candidates: Vec<usize> = (0..n).collect();
        bron_kerbosch(&mutual, 0, candidates, Vec::new(), &mut best);
        best
    }

    /// Exactly one sink `k` and one source `c`, `c` has an edge to every
    /// other vertex and every other vertex has an edge to `k`.
    pub fn is_network(&self) -> bool {
        let (sinks, sources) = (self.sinks(), self.sources());
        if sinks.len() != 1 || sources.len() != 1 {
            return false;
        }
        let k = *sinks.iter().next().expect("one sink");
        let c = *sources.iter().next().expect("one source");
        self.vertices.iter().all(|&v| v == c || self.has_edge(c, v))
            && self.vertices.iter().all(|&v| v == k || self.has_edge(v, k))
    }
}

/// Maximum clique size via Bron–Kerbosch with pivoting on sorted adjacency lists.
fn bron_kerbosch(adj: &[Vec<usize>], size: usize, p: Vec<usize>, x: Vec<usize>, best: &mut usize) {
    if p.is_empty() {
        if x.is_empty() {
            *best = (*best).max(size);
        }
        return;
    }
    if size + p.len() <= *best {
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|v| adj[u].binary_search(v).is_ok()).count())
        .expect("p is nonempty");
    let branch: Vec<usize> =
        p.iter().copied().filter(|v| adj[pivot].binary_search(v).is_err()).collect();
    let (mut p, mut x) = (p, x);
    for v in branch {
        let np: Vec<usize> = p.iter().copied().filter(|w| adj[v].binary_search(w).is_ok()).collect();
        let nx: Vec<usize> = x.iter().copied().filter(|w| adj[v].binary_search(w).is_ok()).collect();
        bron_kerbosch(adj, size + 1, np, nx, best);
        p.retain(|&w| w != v);
        x.push(v);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub out_simple: usize,
    pub in_simple: usize,
    pub has_loop: bool,
}

impl DegreeReport {
    pub fn out_degree(&self, convention: Convention) -> usize {
        self.out_simple + usize::from(convention == Convention::Loop && self.has_loop)
    }

    pub fn in_degree(&self, convention: Convention) -> usize {
        self.in_simple + usize::from(convention == Convention::Loop && self.has_loop)
    }
}

/// Graph diameter: the largest directed distance, or infinite when some
/// ordered pair is unreachable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u32(*d),
            Diameter::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    vertices: Vec<usize>,
    position: Vec<usize>,
    dist: Vec<Option<u32>>,
}

impl DistanceMatrix {
    /// `None` for an unreachable pair; panics if either argument is not a vertex.
    pub fn get(&self, x: usize, y: usize) -> Option<u32> {
        let n = self.vertices.len();
        let (px, py) = (self.position[x], self.position[y]);
        assert!(px != ABSENT && py != ABSENT, "({x}, {y}) are not both vertices");
        self.dist[px * n + py]
    }

    /// Ordered pairs of distinct vertices with their distances.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, Option<u32>)> + '_ {
        let n = self.vertices.len();
        (0..n).flat_map(move |i| {
            (0..n)
                .filter(move |&j| j != i)
                .map(move |j| (self.vertices[i], self.vertices[j], self.dist[i * n + j]))
        })
    }

    pub fn max_finite(&self) -> u32 {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn all_finite(&self) -> bool {
        self.dist.iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Diameter {
        if self.all_finite() {
            Diameter::Finite(self.max_finite())
        } else {
            Diameter::Infinite
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cyclic_ring, first_row_ring, full_matrix_ring, null_ring};

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    const E12: usize = 1;
    const E11: usize = 2;
    const E11_E12: usize = 3;

    #[test]
    fn z6_graph() {
        let g = build_graph(&cyclic_ring(6).unwrap());
        assert_eq!(g.vertices(), &[2, 3, 4]);
        assert_eq!(g.edges(), vec![(2, 3), (3, 2), (3, 4), (4, 3)]);
        assert!(g.loops().is_empty());
        assert!(g.sinks().is_empty() && g.sources().is_empty());
        let d = g.distances();
        assert_eq!(d.get(2, 4), Some(2));
        assert!(g.strongly_connected());
        assert_eq!(g.clique_number(), 2);
        assert!(!g.is_network());
        assert_eq!(
            g.degree_report(3).unwrap(),
            DegreeReport { out_simple: 2, in_simple: 2, has_loop: false }
        );
        assert_eq!(g.degree_report(1), Err(GraphError::VertexNotInGraph(1)));
    }

    #[test]
    fn t2_graph() {
        let g = build_graph(&first_row_ring(2, 2).unwrap());
        assert_eq!(g.vertices(), &[E12, E11, E11_E12]);
        assert_eq!(g.edges(), vec![(E12, E11), (E12, E11_E12)]);
        assert_eq!(g.loops(), &set(&[E12]));
        assert_eq!(g.sinks(), set(&[E11, E11_E12]));
        assert_eq!(g.sources(), set(&[E12]));
        assert_eq!(g.distances().get(E11, E12), None);
        assert_eq!(g.distances().diameter(), Diameter::Infinite);
        assert_eq!(g.distances().max_finite(), 1);
        assert!(!g.strongly_connected());
        assert!(g.weakly_connected());
        assert!(!g.is_network());
        let deg = g.degree_report(E12).unwrap();
        assert_eq!(deg.out_simple, 2);
        assert!(deg.has_loop);
        assert_eq!(deg.out_degree(Convention::Loop), 3);
    }

    #[test]
    fn null_rings_are_complete() {
        let g = build_graph(&null_ring(&[3]).unwrap());
        assert_eq!(g.edges(), vec![(1, 2), (2, 1)]);
        assert_eq!(g.loops(), &set(&[1, 2]));
        let g = build_graph(&null_ring(&[2, 2]).unwrap());
        assert_eq!(g.edge_count(), 6);
        assert!(g.strongly_connected());
        assert_eq!(g.clique_number(), 3);
        let deg = g.degree_report(1).unwrap();
        assert_eq!((deg.out_simple, deg.has_loop), (2, true));
    }

    #[test]
    fn field_graph_is_empty() {
        let g = build_graph(&cyclic_ring(5).unwrap());
        assert!(g.is_empty());
        assert!(g.strongly_connected());
        assert_eq!(g.distances().diameter(), Diameter::Finite(0));
        assert_eq!(g.clique_number(), 0);
    }

    #[test]
    fn first_row_3_2_sinks() {
        let g = build_graph(&first_row_ring(3, 2).unwrap());
        assert_eq!(g.sinks().len(), 4);
        assert!(g.sources().is_empty());
    }

    #[test]
    fn m2_f2_diameter_two() {
        let g = build_graph(&full_matrix_ring(2, 2).unwrap());
        assert_eq!(g.distances().diameter(), Diameter::Finite(2));
    }

    #[test]
    fn u3_clique() {
        let g = build_graph(&first_row_ring(2, 3).unwrap());
        assert_eq!(g.clique_number(), 2);
    }

    #[test]
    fn hand_built_network() {
        // c = 1, v = 2, k = 3
        let g = ZdGraph::from_parts([1, 2, 3], [(1, 2), (1, 3), (2, 3)], []).unwrap();
        assert!(g.is_network());
        assert_eq!(g.sinks(), set(&[3]));
        assert_eq!(g.sources(), set(&[1]));
        assert!(ZdGraph::from_parts([1], [(1, 1)], []).is_err());
        assert_eq!(
            ZdGraph::from_parts([1, 2], [(1, 5)], []).unwrap_err(),
            GraphError::VertexNotInGraph(5)
        );
    }

    #[test]
    fn reversal_swaps_sinks_and_sources() {
        let g = build_graph(&first_row_ring(2, 2).unwrap());
        let r = g.reversed();
        assert_eq!(r.sinks(), g.sources());
        assert_eq!(r.sources(), g.sinks());
        assert_eq!(r.reversed(), g);
    }
}
