//! Edge-colored graph data model and hypothesis validation.
//!
//! Vertices are dense ids `0..n-1`; colors are `1..=palette` where the
//! palette is normally `n` (the recoloring reduction temporarily works with
//! a larger palette). The edge list is canonicalized at construction: each
//! pair stored as `(min, max)` and sorted lexicographically, so equal graphs
//! compare equal and serialization round-trips bit for bit.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::params::{meets, PipelineParams};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    Loop(u32),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(u32, u32),
    #[error("vertex {v} out of range (n = {n})")]
    VertexOutOfRange { v: u32, n: usize },
    #[error("color {c} out of range (palette = {palette})")]
    ColorOutOfRange { c: u32, palette: u32 },
    #[error("edge/color list length mismatch: {edges} edges, {colors} colors")]
    LengthMismatch { edges: usize, colors: usize },
}

/// Simple undirected graph with an edge coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    edges: Vec<(u32, u32)>,
    colors: Vec<u32>,
    palette: u32,
    adj: Vec<Vec<u32>>,
}

impl ColoredGraph {
    /// Builds a graph with palette `n` from `(u, v, color)` triples,
    /// rejecting loops, duplicate pairs, and out-of-range ids.
    pub fn new(n: usize, triples: Vec<(u32, u32, u32)>) -> Result<Self, GraphError> {
        Self::with_palette(n, n as u32, triples)
    }

    /// Same as [`ColoredGraph::new`] with an explicit color palette size.
    pub fn with_palette(
        n: usize,
        palette: u32,
        triples: Vec<(u32, u32, u32)>,
    ) -> Result<Self, GraphError> {
        let mut pairs: Vec<((u32, u32), u32)> = Vec::with_capacity(triples.len());
        for (u, v, c) in triples {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if u as usize >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v as usize >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if c < 1 || c > palette {
                return Err(GraphError::ColorOutOfRange { c, palette });
            }
            pairs.push(((u.min(v), u.max(v)), c));
        }
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(GraphError::DuplicateEdge(w[0].0 .0, w[0].0 .1));
            }
        }
        let edges: Vec<(u32, u32)> = pairs.iter().map(|&(e, _)| e).collect();
        let colors: Vec<u32> = pairs.iter().map(|&(_, c)| c).collect();
        Ok(Self::assemble(n, palette, edges, colors))
    }

    /// Builds a graph without any validity checks, for diagnostics and
    /// tests of the validator. The edge list is kept exactly as given.
    pub fn from_parts_unchecked(
        n: usize,
        palette: u32,
        edges: Vec<(u32, u32)>,
        colors: Vec<u32>,
    ) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if (u as usize) < n {
                adj[u as usize].push(i as u32);
            }
            if v != u && (v as usize) < n {
                adj[v as usize].push(i as u32);
            }
        }
        Self {
            n,
            edges,
            colors,
            palette,
            adj,
        }
    }

    fn assemble(n: usize, palette: u32, edges: Vec<(u32, u32)>, colors: Vec<u32>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u as usize].push(i as u32);
            adj[v as usize].push(i as u32);
        }
        Self {
            n,
            edges,
            colors,
            palette,
            adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn endpoints(&self, e: usize) -> (u32, u32) {
        self.edges[e]
    }

    pub fn color(&self, e: usize) -> u32 {
        self.colors[e]
    }

    /// Incident edge indices of `v`, ascending.
    pub fn incident(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// The endpoint of edge `e` other than `v`.
    pub fn other_end(&self, e: usize, v: u32) -> u32 {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Edge index of `{u, v}` if present (binary search on the canonical
    /// edge order).
    pub fn edge_between(&self, u: u32, v: u32) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Class sizes indexed by `color - 1`, length `palette`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.palette as usize];
        for &c in &self.colors {
            if c >= 1 && c <= self.palette {
                sizes[(c - 1) as usize] += 1;
            }
        }
        sizes
    }

    /// Edge indices per color, indexed by `color - 1`.
    pub fn classes(&self) -> Vec<Vec<u32>> {
        let mut by_color: Vec<Vec<u32>> = vec![Vec::new(); self.palette as usize];
        for (i, &c) in self.colors.iter().enumerate() {
            if c >= 1 && c <= self.palette {
                by_color[(c - 1) as usize].push(i as u32);
            }
        }
        by_color
    }
}

/// Per-color size report from [`validate`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassReport {
    pub color: u32,
    pub size: usize,
    pub meets_requirement: bool,
}

/// Diagnostic report from [`validate`]; never aborts, only describes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub k: u32,
    pub class_size_req: f64,
    pub simple: bool,
    pub loops: Vec<usize>,
    pub duplicate_pairs: Vec<(u32, u32)>,
    pub vertex_range_violations: Vec<usize>,
    pub color_range_violations: Vec<usize>,
    pub adjacency_consistent: bool,
    pub undersized_colors: Vec<u32>,
    pub classes: Vec<ClassReport>,
    /// True iff the size hypotheses hold: simple graph, colors within
    /// `{1..n}`, and every one of the `n` color classes has at least
    /// `43*f(k) = 301*k*log2(k)` edges.
    pub overall: bool,
}

/// Checks the run hypotheses on `g` and reports everything it finds.
pub fn validate(g: &ColoredGraph, p: &PipelineParams) -> ValidationReport {
    let n = g.vertex_count();
    let mut loops = Vec::new();
    let mut vertex_range_violations = Vec::new();
    let mut color_range_violations = Vec::new();
    let mut seen: HashMap<(u32, u32), usize> = HashMap::new();
    let mut duplicate_pairs = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if u == v {
            loops.push(i);
            continue;
        }
        if u as usize >= n || v as usize >= n {
            vertex_range_violations.push(i);
        }
        let key = (u.min(v), u.max(v));
        if seen.insert(key, i).is_some() && !duplicate_pairs.contains(&key) {
            duplicate_pairs.push(key);
        }
    }
    for (i, &c) in g.colors().iter().enumerate() {
        if c < 1 || c as usize > n {
            color_range_violations.push(i);
        }
    }

    // Rebuild the incidence index from the edge list and compare.
    let mut rebuilt = vec![Vec::new(); n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if (u as usize) < n {
            rebuilt[u as usize].push(i as u32);
        }
        if v != u && (v as usize) < n {
            rebuilt[v as usize].push(i as u32);
        }
    }
    let adjacency_consistent = (0..n as u32).all(|v| g.incident(v) == rebuilt[v as usize]);

    let mut sizes = vec![0usize; n];
    for &c in g.colors() {
        if c >= 1 && (c as usize) <= n {
            sizes[(c - 1) as usize] += 1;
        }
    }
    let mut classes = Vec::with_capacity(n);
    let mut undersized_colors = Vec::new();
    for (idx, &size) in sizes.iter().enumerate() {
        let ok = meets(size, p.class_size_req);
        if !ok {
            undersized_colors.push(idx as u32 + 1);
        }
        classes.push(ClassReport {
            color: idx as u32 + 1,
            size,
            meets_requirement: ok,
        });
    }

    let simple = loops.is_empty() && duplicate_pairs.is_empty() && vertex_range_violations.is_empty();
    let overall = simple
        && color_range_violations.is_empty()
        && adjacency_consistent
        && undersized_colors.is_empty();
    ValidationReport {
        vertex_count: n,
        edge_count: g.edge_count(),
        k: p.k,
        class_size_req: p.class_size_req,
        simple,
        loops,
        duplicate_pairs,
        vertex_range_violations,
        color_range_violations,
        adjacency_consistent,
        undersized_colors,
        classes,
        overall,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> ColoredGraph {
        ColoredGraph::new(3, vec![(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap()
    }

    #[test]
    fn construction_canonicalizes() {
        let a = ColoredGraph::new(3, vec![(2, 1, 2), (0, 1, 1), (2, 0, 3)]).unwrap();
        assert_eq!(a, triangle());
        assert_eq!(a.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(a.colors(), &[1, 3, 2]);
    }

    #[test]
    fn rejects_loops_duplicates_and_ranges() {
        assert_eq!(
            ColoredGraph::new(3, vec![(0, 0, 1)]).unwrap_err(),
            GraphError::Loop(0)
        );
        assert_eq!(
            ColoredGraph::new(3, vec![(0, 1, 1), (1, 0, 2)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert!(matches!(
            ColoredGraph::new(3, vec![(0, 3, 1)]).unwrap_err(),
            GraphError::VertexOutOfRange { v: 3, .. }
        ));
        assert!(matches!(
            ColoredGraph::new(3, vec![(0, 1, 4)]).unwrap_err(),
            GraphError::ColorOutOfRange { c: 4, .. }
        ));
        assert!(matches!(
            ColoredGraph::new(3, vec![(0, 1, 0)]).unwrap_err(),
            GraphError::ColorOutOfRange { c: 0, .. }
        ));
    }

    #[test]
    fn edge_lookup() {
        let g = triangle();
        assert_eq!(g.edge_between(2, 0), Some(1));
        assert_eq!(g.edge_between(0, 2), Some(1));
        assert_eq!(g.color(1), 3);
        assert_eq!(g.other_end(1, 0), 2);
        let g2 = ColoredGraph::new(4, vec![(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
        assert_eq!(g2.edge_between(0, 3), None);
    }

    #[test]
    fn validate_triangle_k2_fails_class_sizes() {
        let p = PipelineParams::strict(2).unwrap();
        let r = validate(&triangle(), &p);
        assert!(r.simple);
        assert!(!r.overall);
        assert_eq!(r.undersized_colors, vec![1, 2, 3]);
        assert_eq!(r.classes[0].size, 1);
        assert_eq!(r.class_size_req, 602.0);
    }

    #[test]
    fn validate_reports_loop() {
        let g = ColoredGraph::from_parts_unchecked(3, 3, vec![(0, 0), (1, 2)], vec![1, 2]);
        let p = PipelineParams::relaxed(2).unwrap();
        let r = validate(&g, &p);
        assert!(!r.simple);
        assert_eq!(r.loops, vec![0]);
        assert!(!r.overall);
    }

    #[test]
    fn validate_overall_monotone_under_class_growth() {
        // Adding an edge of an existing color never flips overall to false.
        let p = PipelineParams::relaxed_with_f(2, 1.0 / 43.0).unwrap(); // req = 1
        let g = ColoredGraph::new(4, vec![(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 4)]).unwrap();
        let before = validate(&g, &p);
        assert!(before.overall);
        let g2 = ColoredGraph::new(
            4,
            vec![(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 4), (0, 2, 1)],
        )
        .unwrap();
        let after = validate(&g2, &p);
        assert!(after.overall);
    }

    #[test]
    fn palette_beyond_n_is_flagged_by_validate_only() {
        let g = ColoredGraph::with_palette(3, 5, vec![(0, 1, 5), (1, 2, 2), (0, 2, 3)]).unwrap();
        let p = PipelineParams::relaxed(2).unwrap();
        let r = validate(&g, &p);
        assert_eq!(r.color_range_violations, vec![0]);
        assert!(!r.overall);
    }
}
