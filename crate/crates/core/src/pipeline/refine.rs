//! Refinement of a nice set to a stable subset whose removal leaves almost
//! every color an edge, and the one-edge-per-color dense subgraph built on
//! the complement.

use std::collections::{BTreeMap, BTreeSet};

use crate::girth::SimpleGraphView;
use crate::graph::ColoredGraph;
use crate::params::PipelineParams;

use super::dominance::DominanceTable;
use super::nice::NiceSet;
use super::trace::AssertionRecord;
use super::{gate, PipelineError};

/// Output of [`refine_nice_set`].
///
/// `covered` is the set of blocked colors whose crossing edges all share a
/// single endpoint in `H` (at most `ceil(f(k)) - 1` of them); every other
/// blocked color contributed a pair of distinct H-side endpoints to the
/// conflict graph `J`, and `stable` is a stable set of `J` of size at least
/// `|H|/3`. For every color outside `covered`, some edge avoids `stable`
/// entirely.
#[derive(Debug, Clone)]
pub struct RefinementResult {
    pub covered: BTreeSet<u32>,
    pub pair_choices: BTreeMap<u32, (u32, u32)>,
    pub stable: Vec<u32>,
}

/// Greedy stable set by repeated minimum-degree selection: pick the
/// minimum-degree vertex (lowest id on ties), delete its closed
/// neighborhood, repeat. On graphs with `|E| <= |V|` the result has at
/// least `ceil(|V|/3)` vertices.
pub fn greedy_stable_set(vertices: &[u32], edges: &[(u32, u32)]) -> Vec<u32> {
    let n = vertices.len();
    let mut index: BTreeMap<u32, usize> = BTreeMap::new();
    for (i, &v) in vertices.iter().enumerate() {
        index.insert(v, i);
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        let (ia, ib) = (index[&a], index[&b]);
        if ia != ib && !adj[ia].contains(&ib) {
            adj[ia].push(ib);
            adj[ib].push(ia);
        }
    }
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = adj.iter().map(|l| l.len()).collect();
    let mut remaining = n;
    let mut stable = Vec::new();
    while remaining > 0 {
        let mut pick = usize::MAX;
        for i in 0..n {
            if alive[i] && (pick == usize::MAX || degree[i] < degree[pick]) {
                pick = i;
            }
        }
        stable.push(vertices[pick]);
        let mut to_kill = vec![pick];
        for &nb in &adj[pick] {
            if alive[nb] {
                to_kill.push(nb);
            }
        }
        for &dead in &to_kill {
            if alive[dead] {
                alive[dead] = false;
                remaining -= 1;
                for &nb in &adj[dead] {
                    if alive[nb] {
                        degree[nb] -= 1;
                    }
                }
            }
        }
    }
    stable.sort_unstable();
    stable
}

/// Refines a nice set of size `ceil(6*f(k))`: computes the blocked colors
/// `C` and the covered subset `D`, picks per uncovered blocked color two
/// distinct H-side exit endpoints (lowest ids), extracts a greedy stable
/// set of the conflict graph, and verifies by full rescan that every color
/// outside `D` keeps an edge with both ends outside the stable set.
pub fn refine_nice_set(
    g: &ColoredGraph,
    p: &PipelineParams,
    dom: &DominanceTable,
    nice: &NiceSet,
) -> Result<(RefinementResult, Vec<AssertionRecord>), PipelineError> {
    let strict = p.strict_mode();
    let mut records = Vec::new();
    let target = p.nice_target();
    gate(
        strict,
        &mut records,
        "|H| = ceil(6 f(k))",
        nice.size() == target,
        format!("|H| = {}, target {target}", nice.size()),
    )?;

    let in_h: BTreeSet<u32> = nice.h.iter().copied().collect();
    let classes = g.classes();
    debug_assert!(
        nice.blocked.iter().all(|&c| !dom.is_vertex_dominating(c)),
        "blocked colors are non-dominating by definition"
    );

    let mut covered = BTreeSet::new();
    let mut pair_choices: BTreeMap<u32, (u32, u32)> = BTreeMap::new();
    for &c in &nice.blocked {
        let mut h_side: BTreeSet<u32> = BTreeSet::new();
        for &e in &classes[(c - 1) as usize] {
            let (a, b) = g.endpoints(e as usize);
            match (in_h.contains(&a), in_h.contains(&b)) {
                (true, false) => {
                    h_side.insert(a);
                }
                (false, true) => {
                    h_side.insert(b);
                }
                _ => {}
            }
        }
        if h_side.len() <= 1 {
            covered.insert(c);
        } else {
            let mut it = h_side.into_iter();
            let v1 = it.next().unwrap();
            let v2 = it.next().unwrap();
            pair_choices.insert(c, (v1, v2));
        }
    }

    gate(
        strict,
        &mut records,
        "single-cover colors <= ceil(f(k)) - 1",
        (covered.len() as i64) <= p.covered_limit(),
        format!("|D| = {}, limit {}", covered.len(), p.covered_limit()),
    )?;

    let vertices: Vec<u32> = nice.h.iter().copied().collect();
    let mut j_edges: Vec<(u32, u32)> = pair_choices
        .values()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    j_edges.sort_unstable();
    j_edges.dedup();
    if j_edges.len() > vertices.len() {
        return Err(PipelineError::Internal(format!(
            "conflict graph has {} edges for {} vertices",
            j_edges.len(),
            vertices.len()
        )));
    }

    let stable = greedy_stable_set(&vertices, &j_edges);
    let third = vertices.len().div_ceil(3);
    if !vertices.is_empty() && stable.len() < third {
        return Err(PipelineError::Internal(format!(
            "greedy stable set of size {} below |V(J)|/3 = {third}",
            stable.len()
        )));
    }
    gate(
        strict,
        &mut records,
        "|H'| >= ceil(2 f(k))",
        stable.len() >= p.stable_goal(),
        format!("|H'| = {}, goal {}", stable.len(), p.stable_goal()),
    )?;
    gate(
        strict,
        &mut records,
        "|H'| < 7 f(k)",
        (stable.len() as f64) < 7.0 * p.f_k || p.f_k == 0.0,
        format!("|H'| = {}, 7 f(k) = {}", stable.len(), 7.0 * p.f_k),
    )?;

    // Full rescan: every color outside D must keep an edge avoiding the
    // stable set on both ends.
    let stable_set: BTreeSet<u32> = stable.iter().copied().collect();
    let palette = g.palette() as usize;
    let mut has_outside = vec![false; palette + 1];
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if !stable_set.contains(&a) && !stable_set.contains(&b) {
            has_outside[g.color(i) as usize] = true;
        }
    }
    let mut failing = Vec::new();
    for c in 1..=palette as u32 {
        if !covered.contains(&c) && !has_outside[c as usize] {
            failing.push(c);
        }
    }
    gate(
        strict,
        &mut records,
        "every color outside D has an edge avoiding H'",
        failing.is_empty(),
        format!("colors without such an edge: {failing:?}"),
    )?;

    Ok((
        RefinementResult {
            covered,
            pair_choices,
            stable,
        },
        records,
    ))
}

/// One chosen edge per color with both ends outside `stable`, plus the
/// complement vertex set: the dense subgraph whose edge excess forces a
/// short cycle that is rainbow by construction.
#[derive(Debug, Clone)]
pub struct DenseWitness {
    pub vertex_set: Vec<u32>,
    pub chosen: BTreeMap<u32, u32>,
}

impl DenseWitness {
    /// `|chosen edges| - |vertex set|`.
    pub fn excess(&self) -> i64 {
        self.chosen.len() as i64 - self.vertex_set.len() as i64
    }

    /// View of the chosen subgraph for the cycle search; one edge per
    /// color, so any cycle in it is rainbow.
    pub fn view(&self, g: &ColoredGraph) -> SimpleGraphView {
        let mut edges = Vec::with_capacity(self.chosen.len());
        let mut colors = Vec::with_capacity(self.chosen.len());
        for (&c, &e) in &self.chosen {
            edges.push(g.endpoints(e as usize));
            colors.push(c);
        }
        SimpleGraphView::with_colors(g.vertex_count(), edges, colors)
            .expect("chosen edges form a simple subgraph")
    }
}

/// For each color with an edge entirely outside `h_prime`, selects the
/// lexicographically least such edge.
pub fn build_dense_witness(g: &ColoredGraph, h_prime: &[u32]) -> DenseWitness {
    let excluded: BTreeSet<u32> = h_prime.iter().copied().collect();
    let mut chosen: BTreeMap<u32, u32> = BTreeMap::new();
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if excluded.contains(&a) || excluded.contains(&b) {
            continue;
        }
        chosen.entry(g.color(i)).or_insert(i as u32);
    }
    let vertex_set: Vec<u32> = (0..g.vertex_count() as u32)
        .filter(|v| !excluded.contains(v))
        .collect();
    DenseWitness { vertex_set, chosen }
}
