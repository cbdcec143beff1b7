//! Exact shortest-cycle finders and the closed-form girth bounds.
//!
//! Both finders run one breadth-first search per source vertex and take the
//! global minimum. Sources are processed independently (rayon), every
//! per-source candidate is a deterministic function of the input alone, and
//! the reduction breaks ties by (length, source id), so the returned witness
//! does not depend on the execution schedule.

use rayon::prelude::*;
use thiserror::Error;

use crate::digraph::Digraph;
use crate::graph::{ColoredGraph, GraphError};
use crate::witness::CycleWitness;

const INF: u32 = u32::MAX;

/// Borrowed-shape view of a simple undirected graph, optionally colored.
/// Used to run cycle searches over subgraphs (one edge per color) without
/// materializing a new `ColoredGraph`.
#[derive(Debug, Clone)]
pub struct SimpleGraphView {
    n: usize,
    edges: Vec<(u32, u32)>,
    colors: Option<Vec<u32>>,
    adj: Vec<Vec<(u32, u32)>>,
}

impl SimpleGraphView {
    pub fn new(n: usize, edges: Vec<(u32, u32)>) -> Result<Self, GraphError> {
        Self::build(n, edges, None)
    }

    pub fn with_colors(
        n: usize,
        edges: Vec<(u32, u32)>,
        colors: Vec<u32>,
    ) -> Result<Self, GraphError> {
        if colors.len() != edges.len() {
            return Err(GraphError::LengthMismatch {
                edges: edges.len(),
                colors: colors.len(),
            });
        }
        Self::build(n, edges, Some(colors))
    }

    pub fn from_colored(g: &ColoredGraph) -> Self {
        Self::build(
            g.vertex_count(),
            g.edges().to_vec(),
            Some(g.colors().to_vec()),
        )
        .expect("a ColoredGraph is always a valid view")
    }

    fn build(
        n: usize,
        edges: Vec<(u32, u32)>,
        colors: Option<Vec<u32>>,
    ) -> Result<Self, GraphError> {
        let mut order: Vec<usize> = (0..edges.len()).collect();
        order.sort_unstable_by_key(|&i| {
            let (u, v) = edges[i];
            (u.min(v), u.max(v))
        });
        let mut sorted_edges = Vec::with_capacity(edges.len());
        let mut sorted_colors = colors.as_ref().map(|_| Vec::with_capacity(edges.len()));
        for &i in &order {
            let (u, v) = edges[i];
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if u as usize >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v as usize >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            sorted_edges.push((u.min(v), u.max(v)));
            if let (Some(sc), Some(c)) = (sorted_colors.as_mut(), colors.as_ref()) {
                sc.push(c[i]);
            }
        }
        for w in sorted_edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in sorted_edges.iter().enumerate() {
            adj[u as usize].push((v, i as u32));
            adj[v as usize].push((u, i as u32));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges: sorted_edges,
            colors: sorted_colors,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn colors(&self) -> Option<&[u32]> {
        self.colors.as_deref()
    }

    pub fn neighbors(&self, v: u32) -> &[(u32, u32)] {
        &self.adj[v as usize]
    }
}

struct Candidate {
    len: usize,
    source: u32,
    vertices: Vec<u32>,
    edge_ids: Vec<u32>,
}

/// Exact shortest cycle of a simple undirected graph, or `None` on forests.
///
/// Per-source BFS with parent-edge exclusion. Each non-tree edge closes the
/// two tree paths to their lowest common ancestor, which always yields a
/// genuine simple cycle; the minimum over all sources is the girth.
pub fn shortest_cycle_undirected(view: &SimpleGraphView) -> Option<CycleWitness> {
    let n = view.vertex_count();
    if n == 0 {
        return None;
    }
    let best = (0..n as u32)
        .into_par_iter()
        .filter_map(|s| undirected_source_candidate(view, s))
        .min_by_key(|c| (c.len, c.source))?;
    let colors = match view.colors() {
        Some(cs) => best.edge_ids.iter().map(|&e| cs[e as usize]).collect(),
        None => Vec::new(),
    };
    Some(CycleWitness::undirected(
        best.vertices,
        colors,
        "bfs_undirected",
    ))
}

fn undirected_source_candidate(view: &SimpleGraphView, s: u32) -> Option<Candidate> {
    let n = view.vertex_count();
    let mut dist = vec![INF; n];
    let mut parent_edge = vec![INF; n];
    let mut parent_vertex = vec![INF; n];
    let mut queue = std::collections::VecDeque::new();
    dist[s as usize] = 0;
    queue.push_back(s);
    let mut best: Option<Candidate> = None;

    while let Some(u) = queue.pop_front() {
        for &(w, e) in view.neighbors(u) {
            if e == parent_edge[u as usize] {
                continue;
            }
            if dist[w as usize] == INF {
                dist[w as usize] = dist[u as usize] + 1;
                parent_edge[w as usize] = e;
                parent_vertex[w as usize] = u;
                queue.push_back(w);
            } else if e != parent_edge[w as usize] {
                let cand = close_cycle(u, w, e, &dist, &parent_edge, &parent_vertex, s);
                if best.as_ref().is_none_or(|b| cand.len < b.len) {
                    best = Some(cand);
                }
            }
        }
    }
    best
}

/// Builds the simple cycle formed by non-tree edge `(u, w)` plus the two
/// tree paths up to their lowest common ancestor.
fn close_cycle(
    u: u32,
    w: u32,
    e: u32,
    dist: &[u32],
    parent_edge: &[u32],
    parent_vertex: &[u32],
    source: u32,
) -> Candidate {
    let mut au = u;
    let mut aw = w;
    let mut chain_u = vec![u];
    let mut chain_w = vec![w];
    let mut edges_u = Vec::new();
    let mut edges_w = Vec::new();
    while dist[au as usize] > dist[aw as usize] {
        edges_u.push(parent_edge[au as usize]);
        au = parent_vertex[au as usize];
        chain_u.push(au);
    }
    while dist[aw as usize] > dist[au as usize] {
        edges_w.push(parent_edge[aw as usize]);
        aw = parent_vertex[aw as usize];
        chain_w.push(aw);
    }
    while au != aw {
        edges_u.push(parent_edge[au as usize]);
        au = parent_vertex[au as usize];
        chain_u.push(au);
        edges_w.push(parent_edge[aw as usize]);
        aw = parent_vertex[aw as usize];
        chain_w.push(aw);
    }
    // chain_u: u ..= lca, chain_w: w ..= lca. Cycle: u -> lca -> w -> (e) -> u.
    let mut vertices = chain_u;
    let mut edge_ids = edges_u;
    for i in (0..chain_w.len() - 1).rev() {
        vertices.push(chain_w[i]);
        edge_ids.push(edges_w[i]);
    }
    edge_ids.push(e);
    Candidate {
        len: vertices.len(),
        source,
        vertices,
        edge_ids,
    }
}

/// Exact shortest directed cycle, or `None` on acyclic digraphs. Length 2
/// (a digon) is admissible.
///
/// One BFS per source `s`; every in-arc `v -> s` with `v` reachable closes a
/// simple directed cycle of length `dist(s, v) + 1`.
pub fn shortest_directed_cycle(d: &Digraph) -> Option<CycleWitness> {
    let n = d.vertex_count();
    if n == 0 {
        return None;
    }
    let best = (0..n as u32)
        .into_par_iter()
        .filter_map(|s| directed_source_candidate(d, s))
        .min_by_key(|c| (c.len, c.source))?;
    let colors = match d.provenance() {
        Some(p) => best
            .edge_ids
            .iter()
            .map(|&a| p.arc_sources[a as usize].color)
            .collect(),
        None => Vec::new(),
    };
    Some(CycleWitness::directed(
        best.vertices,
        colors,
        "bfs_directed",
    ))
}

fn directed_source_candidate(d: &Digraph, s: u32) -> Option<Candidate> {
    let n = d.vertex_count();
    let mut dist = vec![INF; n];
    let mut parent_arc = vec![INF; n];
    let mut queue = std::collections::VecDeque::new();
    dist[s as usize] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        for &a in d.out_arcs(u) {
            let w = d.head(a as usize);
            if dist[w as usize] == INF {
                dist[w as usize] = dist[u as usize] + 1;
                parent_arc[w as usize] = a;
                queue.push_back(w);
            }
        }
    }
    let mut best: Option<(u32, u32)> = None; // (tail, closing arc)
    for &a in d.in_arcs(s) {
        let v = d.tail(a as usize);
        if v != s && dist[v as usize] != INF {
            let len = dist[v as usize] + 1;
            if best.is_none_or(|(bv, _)| len < dist[bv as usize] + 1) {
                best = Some((v, a));
            }
        }
    }
    let (v, closing) = best?;
    let mut vertices = Vec::with_capacity(dist[v as usize] as usize + 1);
    let mut edge_ids = Vec::with_capacity(dist[v as usize] as usize + 1);
    let mut cur = v;
    while cur != s {
        vertices.push(cur);
        let pa = parent_arc[cur as usize];
        edge_ids.push(pa);
        cur = d.tail(pa as usize);
    }
    vertices.push(s);
    vertices.reverse();
    edge_ids.reverse();
    edge_ids.push(closing);
    Some(Candidate {
        len: vertices.len(),
        source: s,
        vertices,
        edge_ids,
    })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("girth bound for sparse graphs needs n >= 4 and k >= 2, got n = {n}, k = {k}")]
    SparseDomain { n: u64, k: u64 },
    #[error("directed girth bound needs n >= 1 and k >= 1, got n = {n}, k = {k}")]
    DirectedDomain { n: u64, k: u64 },
}

/// Girth bound for a simple graph on `n` vertices with `n + k` edges:
/// `2(n+k)/(3k) * (log2 k + log2 log2 k + 4)`.
pub fn bound_sparse_girth(n: u64, k: u64) -> Result<f64, BoundError> {
    if n < 4 || k < 2 {
        return Err(BoundError::SparseDomain { n, k });
    }
    let (nf, kf) = (n as f64, k as f64);
    Ok(2.0 * (nf + kf) / (3.0 * kf) * (kf.log2() + kf.log2().log2() + 4.0))
}

/// Directed girth bound for min out-degree `k`: `ceil(n/k) + 73`.
pub fn bound_directed_girth(n: u64, k: u64) -> Result<u64, BoundError> {
    if n < 1 || k < 1 {
        return Err(BoundError::DirectedDomain { n, k });
    }
    Ok(n.div_ceil(k) + 73)
}
