//! Brute-force enumeration oracles and random instance helpers shared by
//! the integration suites.
//!
//! The oracles enumerate simple cycles outright and stay independent of the
//! library's BFS/IDDFS search paths: they are the ground truth the searches
//! are measured against.

#![allow(dead_code)]

use rainbow_cycles::ColoredGraph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// All simple cycles of an undirected graph, each listed once: the anchor is
/// the smallest vertex, and of the two traversal directions the one with the
/// smaller second vertex is kept.
pub fn enumerate_cycles_undirected(n: usize, edges: &[(u32, u32)]) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut out = Vec::new();
    let mut visited = vec![false; n];
    let mut path = Vec::new();
    for a in 0..n as u32 {
        visited[a as usize] = true;
        path.push(a);
        undirected_dfs(&adj, a, a, &mut visited, &mut path, &mut out);
        path.pop();
        visited[a as usize] = false;
    }
    out
}

fn undirected_dfs(
    adj: &[Vec<u32>],
    anchor: u32,
    current: u32,
    visited: &mut [bool],
    path: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    for &w in &adj[current as usize] {
        if w == anchor {
            if path.len() >= 3 && path[1] < *path.last().unwrap() {
                out.push(path.clone());
            }
        } else if w > anchor && !visited[w as usize] {
            visited[w as usize] = true;
            path.push(w);
            undirected_dfs(adj, anchor, w, visited, path, out);
            path.pop();
            visited[w as usize] = false;
        }
    }
}

/// All simple directed cycles (length >= 2), anchored at their smallest
/// vertex.
pub fn enumerate_cycles_directed(n: usize, arcs: &[(u32, u32)]) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in arcs {
        adj[u as usize].push(v);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut out = Vec::new();
    let mut visited = vec![false; n];
    let mut path = Vec::new();
    for a in 0..n as u32 {
        visited[a as usize] = true;
        path.push(a);
        directed_dfs(&adj, a, a, &mut visited, &mut path, &mut out);
        path.pop();
        visited[a as usize] = false;
    }
    out
}

fn directed_dfs(
    adj: &[Vec<u32>],
    anchor: u32,
    current: u32,
    visited: &mut [bool],
    path: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    for &w in &adj[current as usize] {
        if w == anchor {
            if path.len() >= 2 {
                out.push(path.clone());
            }
        } else if w > anchor && !visited[w as usize] {
            visited[w as usize] = true;
            path.push(w);
            directed_dfs(adj, anchor, w, visited, path, out);
            path.pop();
            visited[w as usize] = false;
        }
    }
}

pub fn brute_girth_undirected(n: usize, edges: &[(u32, u32)]) -> Option<usize> {
    enumerate_cycles_undirected(n, edges)
        .iter()
        .map(|c| c.len())
        .min()
}

pub fn brute_girth_directed(n: usize, arcs: &[(u32, u32)]) -> Option<usize> {
    enumerate_cycles_directed(n, arcs)
        .iter()
        .map(|c| c.len())
        .min()
}

/// Minimum length of a rainbow cycle by full enumeration and filtering.
pub fn brute_shortest_rainbow(g: &ColoredGraph, max_len: Option<usize>) -> Option<usize> {
    let cycles = enumerate_cycles_undirected(g.vertex_count(), g.edges());
    cycles
        .iter()
        .filter(|c| max_len.is_none_or(|m| c.len() <= m))
        .filter(|c| {
            let mut colors: Vec<u32> = (0..c.len())
                .map(|i| {
                    let e = g.edge_between(c[i], c[(i + 1) % c.len()]).unwrap();
                    g.color(e)
                })
                .collect();
            colors.sort_unstable();
            colors.windows(2).all(|p| p[0] != p[1])
        })
        .map(|c| c.len())
        .min()
}

/// Random simple graph: every pair independently with probability `p`.
pub fn random_edges(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(u32, u32)> {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Random simple digraph: every ordered pair independently with probability
/// `p`.
pub fn random_arcs(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(u32, u32)> {
    let mut arcs = Vec::new();
    for u in 0..n as u32 {
        for v in 0..n as u32 {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    arcs
}

/// Random colored graph on `n` vertices with palette `n`.
pub fn random_colored_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> ColoredGraph {
    let triples: Vec<(u32, u32, u32)> = random_edges(n, p, rng)
        .into_iter()
        .map(|(u, v)| (u, v, rng.gen_range(1..=n as u32)))
        .collect();
    ColoredGraph::new(n, triples).unwrap()
}

/// Random simple graph with exactly `m` edges.
pub fn random_graph_with_edges(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Vec<(u32, u32)> {
    let mut all: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
        .collect();
    assert!(m <= all.len());
    for i in 0..m {
        let j = rng.gen_range(i..all.len());
        all.swap(i, j);
    }
    all.truncate(m);
    all
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
