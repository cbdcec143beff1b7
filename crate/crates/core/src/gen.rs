//! Seeded instance generators: the tight equitable complete instance, random
//! relaxed colorings, min-out-degree digraphs for directed-girth stress
//! tests, and the circulant star family that makes every color dominant.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::digraph::Digraph;
use crate::graph::ColoredGraph;
use crate::params::{ceil_guard, PipelineParams};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("instance needs n = {n} vertices, above the cap {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("{needed} edges requested but only {available} distinct pairs exist")]
    Infeasible { needed: usize, available: usize },
    #[error("parameter out of range: {0}")]
    Param(String),
}

/// Class size and vertex count of the tight equitable instance for `k`:
/// `s = ceil(43 f(k))`, `n = 2s + 1`.
pub fn equitable_dimensions(k: u32) -> Result<(usize, usize), GenError> {
    let p = PipelineParams::strict(k).map_err(|e| GenError::Param(e.to_string()))?;
    let s = ceil_guard(p.class_size_req).max(1) as usize;
    Ok((s, 2 * s + 1))
}

/// Complete graph on `n = 2s + 1` vertices, `s = ceil(43 f(k))`, edges
/// partitioned into `n` near-perfect matchings of exactly `s` edges each by
/// the rotation scheme: edge `{i, j}` belongs to the class `(i + j)/2 mod n`
/// (division mod the odd `n`).
///
/// Every class sits exactly at the minimum required size, and since each
/// class is a matching, no color can dominate a vertex.
pub fn gen_equitable_complete(k: u32, cap: usize) -> Result<ColoredGraph, GenError> {
    let (s, n) = equitable_dimensions(k)?;
    if n > cap {
        return Err(GenError::SizeCap { n, cap });
    }
    let inv2 = (n as u64).div_ceil(2); // inverse of 2 modulo the odd n
    let mut triples = Vec::with_capacity(n * s);
    for i in 0..n as u32 {
        for j in (i + 1)..n as u32 {
            let class = ((i as u64 + j as u64) * inv2) % n as u64;
            triples.push((i, j, class as u32 + 1));
        }
    }
    Ok(ColoredGraph::new(n, triples).expect("complete rotation instance is simple"))
}

/// Random simple graph on `n` vertices whose `n` color classes each have
/// exactly `class_size` edges. Deterministic per seed.
pub fn gen_relaxed(n: usize, class_size: usize, seed: u64) -> Result<ColoredGraph, GenError> {
    if n < 2 && class_size > 0 {
        return Err(GenError::Param(format!("n = {n} cannot carry edges")));
    }
    let needed = n * class_size;
    let available = n * (n - 1) / 2;
    if needed > available {
        return Err(GenError::Infeasible { needed, available });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(u32, u32)> = if needed * 3 >= available {
        let mut all: Vec<(u32, u32)> = (0..n as u32)
            .flat_map(|i| ((i + 1)..n as u32).map(move |j| (i, j)))
            .collect();
        all.shuffle(&mut rng);
        all.truncate(needed);
        all
    } else {
        let mut set = HashSet::with_capacity(needed);
        let mut picked = Vec::with_capacity(needed);
        while picked.len() < needed {
            let a = rng.gen_range(0..n as u32);
            let b = rng.gen_range(0..n as u32);
            if a == b {
                continue;
            }
            let pair = (a.min(b), a.max(b));
            if set.insert(pair) {
                picked.push(pair);
            }
        }
        picked
    };
    edges.shuffle(&mut rng);
    let triples: Vec<(u32, u32, u32)> = edges
        .into_iter()
        .enumerate()
        .map(|(t, (u, v))| (u, v, (t % n) as u32 + 1))
        .collect();
    Ok(ColoredGraph::new(n, triples).expect("sampled pairs are distinct"))
}

/// Random simple digraph in which every vertex has exactly `k` distinct
/// out-neighbors. Deterministic per seed.
pub fn gen_min_outdeg_digraph(n: usize, k: usize, seed: u64) -> Result<Digraph, GenError> {
    if k >= n {
        return Err(GenError::Param(format!("k = {k} must be below n = {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::with_capacity(n * k);
    for v in 0..n as u32 {
        let picks = rand::seq::index::sample(&mut rng, n - 1, k);
        for idx in picks.iter() {
            let mut u = idx as u32;
            if u >= v {
                u += 1;
            }
            arcs.push((v, u));
        }
    }
    Ok(Digraph::new(n, arcs).expect("sampled out-neighbors are distinct"))
}

/// Circulant union of stars: vertices `0..n`, edges `{i, i+t mod n}` for
/// `t = 1..=fan`, all carrying color `i+1`. Every vertex is incident to
/// `fan` edges of its own color, so with a dominance threshold of at most
/// `fan` every color is vertex-dominating — the instance drives the
/// representative-digraph branch.
pub fn gen_star_circulant(n: usize, fan: usize) -> Result<ColoredGraph, GenError> {
    if fan == 0 || 2 * fan >= n {
        return Err(GenError::Param(format!(
            "fan = {fan} must satisfy 1 <= fan < n/2 = {}",
            n as f64 / 2.0
        )));
    }
    let mut triples = Vec::with_capacity(n * fan);
    for i in 0..n as u32 {
        for t in 1..=fan as u32 {
            let j = (i + t) % n as u32;
            triples.push((i.min(j), i.max(j), i + 1));
        }
    }
    Ok(ColoredGraph::new(n, triples).expect("circulant with fan < n/2 is simple"))
}
