//! Dominance classification: which colors concentrate at which vertices.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::graph::ColoredGraph;
use crate::params::{meets, PipelineParams};

/// Exact dominance classification of a colored graph.
///
/// A color `i` is dominant at a vertex `v` when at least `7*f(k)` incident
/// edges of `v` carry color `i` (and at least one does; a color that never
/// touches `v` is not dominant there even when the threshold is zero). A
/// color with some dominant vertex is vertex-dominating; for each such color
/// the representative is its lowest dominant vertex, and `reps` is the set
/// of chosen representatives.
#[derive(Debug, Clone)]
pub struct DominanceTable {
    threshold: f64,
    at_vertex: Vec<Vec<u32>>,
    by_color: BTreeMap<u32, Vec<u32>>,
    representatives: BTreeMap<u32, u32>,
    reps: Vec<u32>,
}

impl DominanceTable {
    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    /// Colors dominant at `v`, ascending.
    pub fn dominant_colors_at(&self, v: u32) -> &[u32] {
        &self.at_vertex[v as usize]
    }

    pub fn is_dominant(&self, v: u32, color: u32) -> bool {
        self.at_vertex[v as usize].binary_search(&color).is_ok()
    }

    /// Vertices at which `color` is dominant, ascending; `None` when the
    /// color is not vertex-dominating.
    pub fn dominant_vertices(&self, color: u32) -> Option<&[u32]> {
        self.by_color.get(&color).map(|v| v.as_slice())
    }

    pub fn is_vertex_dominating(&self, color: u32) -> bool {
        self.by_color.contains_key(&color)
    }

    pub fn vertex_dominating_colors(&self) -> impl Iterator<Item = u32> + '_ {
        self.by_color.keys().copied()
    }

    pub fn vertex_dominating_count(&self) -> usize {
        self.by_color.len()
    }

    pub fn representative(&self, color: u32) -> Option<u32> {
        self.representatives.get(&color).copied()
    }

    pub fn representatives(&self) -> &BTreeMap<u32, u32> {
        &self.representatives
    }

    /// The representative set S, ascending and deduplicated.
    pub fn reps(&self) -> &[u32] {
        &self.reps
    }

    /// Number of dominant (vertex, color) pairs.
    pub fn pair_count(&self) -> usize {
        self.at_vertex.iter().map(|v| v.len()).sum()
    }
}

/// Builds the dominance table by counting, per vertex, how many incident
/// edges carry each color. Representatives are chosen lowest-vertex-first.
pub fn build_dominance(g: &ColoredGraph, p: &PipelineParams) -> DominanceTable {
    let n = g.vertex_count();
    let threshold = p.dominance_threshold();

    let at_vertex: Vec<Vec<u32>> = (0..n as u32)
        .into_par_iter()
        .map(|v| {
            let mut incident_colors: Vec<u32> = g
                .incident(v)
                .iter()
                .map(|&e| g.color(e as usize))
                .collect();
            incident_colors.sort_unstable();
            let mut dominant = Vec::new();
            let mut i = 0;
            while i < incident_colors.len() {
                let c = incident_colors[i];
                let mut j = i;
                while j < incident_colors.len() && incident_colors[j] == c {
                    j += 1;
                }
                if meets(j - i, threshold) {
                    dominant.push(c);
                }
                i = j;
            }
            dominant
        })
        .collect();

    let mut by_color: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for (v, colors) in at_vertex.iter().enumerate() {
        for &c in colors {
            by_color.entry(c).or_default().push(v as u32);
        }
    }
    let representatives: BTreeMap<u32, u32> = by_color
        .iter()
        .map(|(&c, vs)| (c, vs[0]))
        .collect();
    let mut reps: Vec<u32> = representatives.values().copied().collect();
    reps.sort_unstable();
    reps.dedup();

    DominanceTable {
        threshold,
        at_vertex,
        by_color,
        representatives,
        reps,
    }
}
