//! Ground-truth cycle analysis by exhaustive search.
//!
//! [`girth`] is polynomial (one breadth-first search per root). The full
//! cycle spectrum and the circumference come from enumerating every simple
//! cycle, so they are guarded by a [`SearchBudget`].

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_vertices: usize,
    /// Upper bound on depth-first search states before giving up.
    pub max_visited_states: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 14,
            max_visited_states: 200_000_000,
        }
    }
}

impl SearchBudget {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        SearchBudget {
            max_vertices,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {0} vertices, above the search budget")]
    OverBudget(usize),
    #[error("cycle search gave up after {0} states")]
    BudgetExceeded(u64),
}

/// Every cycle length present in a graph, with one witness per length.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleReport {
    pub girth: Option<usize>,
    pub circumference: Option<usize>,
    pub lengths: BTreeSet<usize>,
    /// Lexicographically least vertex sequence of each length. Sequences
    /// start at the cycle's least vertex and continue towards its smaller
    /// neighbour on the cycle.
    pub witnesses: BTreeMap<usize, Vec<VertexId>>,
}

impl CycleReport {
    pub fn is_acyclic(&self) -> bool {
        self.lengths.is_empty()
    }
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();

    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        'bfs: while let Some(x) = queue.pop_front() {
            // No shorter cycle through this root can be found past this depth.
            if let Some(b) = best {
                if 2 * dist[x] >= b {
                    break 'bfs;
                }
            }
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// Enumerates every simple cycle once and collects their lengths.
///
/// Each cycle is found from its least vertex `s`, walking only through
/// vertices above `s`, and is accepted in the orientation whose second
/// vertex is smaller than its last. Neighbours are explored in ascending
/// order, so the first cycle found of each length is the lexicographically
/// least one.
pub fn cycle_spectrum(g: &Graph, budget: &SearchBudget) -> Result<CycleReport, OracleError> {
    let n = g.vertex_count();
    if n > budget.max_vertices {
        return Err(OracleError::OverBudget(n));
    }

    let mut report = CycleReport::default();
    let mut on_path = vec![false; n];
    let mut path: Vec<VertexId> = Vec::with_capacity(n);
    // Frames of (vertex, index of next neighbour to try).
    let mut stack: Vec<(VertexId, usize)> = Vec::with_capacity(n);
    let mut states: u64 = 0;

    for root in 0..n {
        if g.neighbors(root).iter().filter(|&&x| x > root).count() < 2 {
            continue;
        }
        on_path[root] = true;
        path.push(root);
        stack.push((root, 0));

        while let Some(&mut (x, ref mut next)) = stack.last_mut() {
            let nbrs = g.neighbors(x);
            if *next == nbrs.len() {
                stack.pop();
                path.pop();
                on_path[x] = false;
                continue;
            }
            let y = nbrs[*next];
            *next += 1;
            if y < root {
                continue;
            }
            if y == root {
                if path.len() >= 3 && path[1] < x {
                    let len = path.len();
                    if report.lengths.insert(len) {
                        report.witnesses.insert(len, path.clone());
                    }
                }
                continue;
            }
            if on_path[y] {
                continue;
            }
            states += 1;
            if states > budget.max_visited_states {
                return Err(OracleError::BudgetExceeded(states));
            }
            on_path[y] = true;
            path.push(y);
            stack.push((y, 0));
        }
    }

    report.girth = report.lengths.first().copied();
    report.circumference = report.lengths.last().copied();
    Ok(report)
}

/// Length of a longest cycle, or `None` for a forest.
pub fn circumference(g: &Graph, budget: &SearchBudget) -> Result<Option<usize>, OracleError> {
    Ok(cycle_spectrum(g, budget)?.circumference)
}
