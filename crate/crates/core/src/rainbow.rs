//! Rainbow-cycle searches: the exact bounded oracle and the guaranteed
//! short-cycle search used when no color dominates a vertex.

use thiserror::Error;

use crate::graph::ColoredGraph;
use crate::params::ceil_div;
use crate::witness::CycleWitness;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("node-expansion budget exhausted after {expanded} expansions")]
    BudgetExceeded { expanded: u64 },
}

/// Exact minimum-length rainbow cycle of length at most `max_len`
/// (unbounded when `None`), or `None` when no such cycle exists.
///
/// Iterative deepening over the target length; at each depth a DFS runs from
/// every anchor vertex, restricted to vertices that come after the anchor in
/// the (degree, id) order, tracking the set of used colors. Cost grows
/// exponentially with the bound; intended for desk-scale hosts. An explicit
/// node-expansion budget turns a too-expensive search into
/// [`SearchError::BudgetExceeded`], distinguishable from "none exists".
pub fn shortest_rainbow_cycle_exact(
    g: &ColoredGraph,
    max_len: Option<usize>,
    budget: Option<u64>,
) -> Result<Option<CycleWitness>, SearchError> {
    let n = g.vertex_count();
    let cap = max_len.unwrap_or(n).min(n);
    if n < 3 || cap < 3 {
        return Ok(None);
    }

    // Anchor order: ascending degree, ties by id. Every cycle is searched
    // from its first vertex in this order.
    let mut anchors: Vec<u32> = (0..n as u32).collect();
    anchors.sort_unstable_by_key(|&v| (g.degree(v), v));
    let mut rank = vec![0u32; n];
    for (i, &v) in anchors.iter().enumerate() {
        rank[v as usize] = i as u32;
    }

    let mut search = RainbowDfs {
        g,
        rank: &rank,
        visited: vec![false; n],
        used_color: vec![false; g.palette() as usize + 1],
        path: Vec::new(),
        path_edges: Vec::new(),
        remaining: budget,
        expanded: 0,
    };

    for target in 3..=cap {
        for &a in &anchors {
            if g.degree(a) < 2 {
                continue;
            }
            search.path.push(a);
            search.visited[a as usize] = true;
            let found = search.dfs(a, a, target)?;
            search.visited[a as usize] = false;
            search.path.pop();
            if let Some(w) = found {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

struct RainbowDfs<'a> {
    g: &'a ColoredGraph,
    rank: &'a [u32],
    visited: Vec<bool>,
    used_color: Vec<bool>,
    path: Vec<u32>,
    path_edges: Vec<u32>,
    remaining: Option<u64>,
    expanded: u64,
}

impl RainbowDfs<'_> {
    fn spend(&mut self) -> Result<(), SearchError> {
        self.expanded += 1;
        if let Some(b) = self.remaining.as_mut() {
            if *b == 0 {
                return Err(SearchError::BudgetExceeded {
                    expanded: self.expanded,
                });
            }
            *b -= 1;
        }
        Ok(())
    }

    /// Extends the current path from `current` to exactly `target` edges,
    /// closing back at `anchor`.
    fn dfs(
        &mut self,
        anchor: u32,
        current: u32,
        target: usize,
    ) -> Result<Option<CycleWitness>, SearchError> {
        self.spend()?;
        let edges_so_far = self.path.len() - 1;
        if edges_so_far + 1 == target {
            for &e in self.g.incident(current) {
                let w = self.g.other_end(e as usize, current);
                let c = self.g.color(e as usize);
                if w == anchor && !self.used_color[c as usize] {
                    let mut colors: Vec<u32> = self
                        .path_edges
                        .iter()
                        .map(|&pe| self.g.color(pe as usize))
                        .collect();
                    colors.push(c);
                    return Ok(Some(CycleWitness::undirected(
                        self.path.clone(),
                        colors,
                        "rainbow_iddfs",
                    )));
                }
            }
            return Ok(None);
        }
        for &e in self.g.incident(current) {
            let w = self.g.other_end(e as usize, current);
            let c = self.g.color(e as usize);
            if self.visited[w as usize]
                || self.rank[w as usize] <= self.rank[anchor as usize]
                || self.used_color[c as usize]
            {
                continue;
            }
            self.visited[w as usize] = true;
            self.used_color[c as usize] = true;
            self.path.push(w);
            self.path_edges.push(e);
            let found = self.dfs(anchor, w, target)?;
            self.path_edges.pop();
            self.path.pop();
            self.used_color[c as usize] = false;
            self.visited[w as usize] = false;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CaseSearchError {
    #[error("color {color} has a class of size {size} < 2")]
    ClassTooSmall { color: u32, size: usize },
    #[error("no rainbow cycle within ceil(n/2) + 1 found; input violates the size hypotheses or this is a bug")]
    NotFound,
    #[error(transparent)]
    Budget(#[from] SearchError),
}

/// Rainbow cycle of length at most `ceil(n/2) + 1`, guaranteed to exist when
/// every color class has at least two edges.
///
/// A greedy pass grows a rainbow path from each start vertex and closes it
/// back to the start as soon as an unused color allows; on dense hosts this
/// succeeds immediately. The exact bounded search is the fallback.
pub fn half_bound_rainbow_cycle(
    g: &ColoredGraph,
    budget: Option<u64>,
) -> Result<CycleWitness, CaseSearchError> {
    for (idx, size) in g.class_sizes().iter().enumerate() {
        if *size == 1 {
            return Err(CaseSearchError::ClassTooSmall {
                color: idx as u32 + 1,
                size: 1,
            });
        }
    }
    let n = g.vertex_count();
    let cap = ceil_div(n.max(1), 2) + 1;
    if let Some(w) = greedy_rainbow_cycle(g, cap) {
        return Ok(w);
    }
    match shortest_rainbow_cycle_exact(g, Some(cap), budget)? {
        Some(mut w) => {
            w.provenance = "half_bound_exact".to_string();
            Ok(w)
        }
        None => Err(CaseSearchError::NotFound),
    }
}

// The greedy pass gives up after this many edge scans and defers to the
// exact search.
const GREEDY_WORK_LIMIT: u64 = 20_000_000;

fn greedy_rainbow_cycle(g: &ColoredGraph, cap: usize) -> Option<CycleWitness> {
    let n = g.vertex_count();
    if n < 3 || cap < 3 {
        return None;
    }
    let mut work: u64 = 0;
    let mut visited = vec![false; n];
    let mut used_color = vec![false; g.palette() as usize + 1];

    for start in 0..n as u32 {
        let mut path = vec![start];
        let mut path_colors: Vec<u32> = Vec::new();
        visited[start as usize] = true;
        let mut current = start;
        loop {
            if path.len() >= 3 {
                let mut closed = None;
                for &e in g.incident(current) {
                    work += 1;
                    let w = g.other_end(e as usize, current);
                    let c = g.color(e as usize);
                    if w == start && !used_color[c as usize] {
                        closed = Some(c);
                        break;
                    }
                }
                if let Some(c) = closed {
                    let mut colors = path_colors.clone();
                    colors.push(c);
                    let witness = CycleWitness::undirected(path, colors, "half_bound_greedy");
                    return Some(witness);
                }
            }
            if path.len() >= cap {
                break;
            }
            let mut extended = false;
            for &e in g.incident(current) {
                work += 1;
                let w = g.other_end(e as usize, current);
                let c = g.color(e as usize);
                if !visited[w as usize] && !used_color[c as usize] {
                    visited[w as usize] = true;
                    used_color[c as usize] = true;
                    path.push(w);
                    path_colors.push(c);
                    current = w;
                    extended = true;
                    break;
                }
            }
            if !extended {
                break;
            }
        }
        for &v in &path {
            visited[v as usize] = false;
        }
        for &c in &path_colors {
            used_color[c as usize] = false;
        }
        if work > GREEDY_WORK_LIMIT {
            return None;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness;

    fn rainbow_triangle() -> ColoredGraph {
        ColoredGraph::new(3, vec![(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap()
    }

    #[test]
    fn triangle_all_distinct() {
        let w = shortest_rainbow_cycle_exact(&rainbow_triangle(), None, None)
            .unwrap()
            .unwrap();
        assert_eq!(w.length, 3);
        assert!(w.rainbow);
    }

    #[test]
    fn monochromatic_pair_blocks_triangle() {
        let g = ColoredGraph::new(3, vec![(0, 1, 1), (1, 2, 1), (0, 2, 2)]).unwrap();
        assert!(shortest_rainbow_cycle_exact(&g, None, None).unwrap().is_none());
    }

    #[test]
    fn shortest_rainbow_is_four_when_triangles_repeat() {
        // Square 0-1-2-3 with four distinct colors, plus a pendant triangle
        // 0-1-4 whose two new edges share color 5: the only triangle repeats
        // a color, and the rainbow square is the shortest rainbow cycle.
        let g = ColoredGraph::new(
            5,
            vec![
                (0, 1, 1),
                (1, 2, 2),
                (2, 3, 3),
                (0, 3, 4),
                (0, 4, 5),
                (1, 4, 5),
            ],
        )
        .unwrap();
        let w = shortest_rainbow_cycle_exact(&g, None, None).unwrap().unwrap();
        assert_eq!(w.length, 4);
        witness::verify_in_graph(&g, &w).unwrap();
    }

    #[test]
    fn max_len_excludes_longer_cycles() {
        let g = ColoredGraph::new(
            4,
            vec![(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 4)],
        )
        .unwrap();
        assert!(shortest_rainbow_cycle_exact(&g, Some(3), None)
            .unwrap()
            .is_none());
        assert_eq!(
            shortest_rainbow_cycle_exact(&g, Some(4), None)
                .unwrap()
                .unwrap()
                .length,
            4
        );
    }

    #[test]
    fn budget_exhaustion_is_distinguishable() {
        let g = ColoredGraph::new(3, vec![(0, 1, 1), (1, 2, 1), (0, 2, 2)]).unwrap();
        let err = shortest_rainbow_cycle_exact(&g, None, Some(1)).unwrap_err();
        assert!(matches!(err, SearchError::BudgetExceeded { .. }));
    }

    #[test]
    fn case_search_finds_triangle_within_bound() {
        // Two disjoint triangles, colors 1,2,3 on each: classes of size 2,
        // n = 6, bound ceil(6/2)+1 = 4.
        let g = ColoredGraph::new(
            6,
            vec![
                (0, 1, 1),
                (1, 2, 2),
                (0, 2, 3),
                (3, 4, 1),
                (4, 5, 2),
                (3, 5, 3),
            ],
        )
        .unwrap();
        let w = half_bound_rainbow_cycle(&g, None).unwrap();
        assert_eq!(w.length, 3);
        assert!(w.rainbow);
        witness::verify_in_graph(&g, &w).unwrap();
    }

    #[test]
    fn case_search_rejects_singleton_class() {
        let g = ColoredGraph::new(3, vec![(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
        let err = half_bound_rainbow_cycle(&g, None).unwrap_err();
        assert!(matches!(
            err,
            CaseSearchError::ClassTooSmall { color: 1, size: 1 }
        ));
    }

    #[test]
    fn greedy_miss_falls_through_to_exact() {
        // A rainbow 4-cycle with a chord colored like an existing cycle
        // edge; classes: 1 -> two edges, 2 -> two edges, so sizes pass.
        let g = ColoredGraph::new(
            4,
            vec![(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2), (0, 2, 1)],
        )
        .unwrap();
        // cap = ceil(4/2)+1 = 3; triangles 0-1-2 (colors 1,2,1) and
        // 0-2-3 (1,1,2) repeat, so no rainbow cycle of length <= 3 exists.
        let err = half_bound_rainbow_cycle(&g, None).unwrap_err();
        assert_eq!(err, CaseSearchError::NotFound);
    }
}
