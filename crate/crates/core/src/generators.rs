//! Named graph families: cycles, paths, complete and complete bipartite
//! graphs, generalised book graphs and wedge sums.

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{family} needs at least {min}, got {got}")]
    TooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("invalid book parameters: {0}")]
    BadParams(String),
    #[error("a wedge sum needs at least one summand")]
    EmptyWedge,
    #[error("wedge has {summands} summands but {bases} base vertices")]
    BaseCountMismatch { summands: usize, bases: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The cycle `C_m`.
pub fn cycle(m: usize) -> Result<Graph, GenError> {
    if m < 3 {
        return Err(GenError::TooSmall {
            family: "cycle",
            min: 3,
            got: m,
        });
    }
    let pairs: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    Ok(Graph::build(m, &pairs)?)
}

/// The path `P_m` with `m` edges and `m + 1` vertices, numbered along the path.
pub fn path(m: usize) -> Graph {
    let pairs: Vec<_> = (0..m).map(|i| (i, i + 1)).collect();
    Graph::build(m + 1, &pairs).expect("path edges are valid")
}

pub fn complete(m: usize) -> Result<Graph, GenError> {
    if m < 1 {
        return Err(GenError::TooSmall {
            family: "complete graph",
            min: 1,
            got: m,
        });
    }
    let pairs: Vec<_> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    Ok(Graph::build(m, &pairs)?)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GenError> {
    if a < 1 || b < 1 {
        return Err(GenError::TooSmall {
            family: "complete bipartite part",
            min: 1,
            got: a.min(b),
        });
    }
    let pairs: Vec<_> = (0..a)
        .flat_map(|i| (a..a + b).map(move |j| (i, j)))
        .collect();
    Ok(Graph::build(a + b, &pairs)?)
}

/// Parameters of the book graph `B(n, L, p)`: `p` cycles of length `L`
/// sharing one common path (the spine) with `n` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BookParams {
    pub spine: usize,
    pub cycle_len: usize,
    pub pages: usize,
}

impl BookParams {
    pub fn new(spine: usize, cycle_len: usize, pages: usize) -> Self {
        BookParams {
            spine,
            cycle_len,
            pages,
        }
    }

    /// The even-cycle book `B(k, 2k, p)`: `p + 1` internally disjoint paths of
    /// length `k` between two hubs.
    pub fn theta(k: usize, pages: usize) -> Self {
        Self::new(k, 2 * k, pages)
    }

    pub fn validate(&self) -> Result<(), GenError> {
        let BookParams {
            spine: n,
            cycle_len: l,
            pages: p,
        } = *self;
        if n < 1 {
            return Err(GenError::BadParams(format!(
                "spine length {n} must be at least 1"
            )));
        }
        if l < 3 {
            return Err(GenError::BadParams(format!(
                "cycle length {l} must be at least 3"
            )));
        }
        if p < 1 {
            return Err(GenError::BadParams(format!(
                "page count {p} must be at least 1"
            )));
        }
        if p == 1 && l != 2 * n {
            return Err(GenError::BadParams(format!(
                "a single page requires cycle length = 2 * spine, got L = {l}, n = {n}"
            )));
        }
        if n + 2 > l {
            return Err(GenError::BadParams(format!(
                "spine length {n} must be at most L - 2 = {}",
                l as isize - 2
            )));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.spine + 1 + self.pages * (self.cycle_len - self.spine - 1)
    }

    pub fn edge_count(&self) -> usize {
        self.spine + self.pages * (self.cycle_len - self.spine)
    }
}

/// Builds `B(n, L, p)`. The spine is `0 - 1 - ... - n`; each page then adds
/// a path `0 - a_1 - ... - a_{L-n-1} - n` on fresh vertices, pages in order.
pub fn book(params: BookParams) -> Result<Graph, GenError> {
    params.validate()?;
    let n = params.spine;
    let page_inner = params.cycle_len - n - 1;
    let mut pairs: Vec<_> = (0..n).map(|i| (i, i + 1)).collect();
    let mut next = n + 1;
    for _ in 0..params.pages {
        let mut prev = 0;
        for _ in 0..page_inner {
            pairs.push((prev, next));
            prev = next;
            next += 1;
        }
        pairs.push((prev, n));
    }
    Ok(Graph::build(next, &pairs)?)
}

/// Summands of a wedge sum and the base vertex chosen in each.
#[derive(Debug, Clone)]
pub struct WedgeSpec {
    pub summands: Vec<Graph>,
    pub bases: Vec<VertexId>,
}

impl WedgeSpec {
    /// Uses vertex 0 of every summand as its base.
    pub fn new(summands: Vec<Graph>) -> Self {
        let bases = vec![0; summands.len()];
        WedgeSpec { summands, bases }
    }

    pub fn with_bases(summands: Vec<Graph>, bases: Vec<VertexId>) -> Self {
        WedgeSpec { summands, bases }
    }
}

/// Disjoint union of the summands with all base vertices identified into one.
///
/// The first summand keeps its numbering. Each later summand's non-base
/// vertices are appended in order, and its base maps onto the shared vertex.
pub fn wedge(spec: &WedgeSpec) -> Result<Graph, GenError> {
    if spec.summands.is_empty() {
        return Err(GenError::EmptyWedge);
    }
    if spec.summands.len() != spec.bases.len() {
        return Err(GenError::BaseCountMismatch {
            summands: spec.summands.len(),
            bases: spec.bases.len(),
        });
    }
    for (g, &b) in spec.summands.iter().zip(&spec.bases) {
        if b >= g.vertex_count() {
            return Err(GraphError::BadVertexRef {
                vertex: b as u64,
                vertex_count: g.vertex_count(),
            }
            .into());
        }
    }

    let first = &spec.summands[0];
    let hub = spec.bases[0];
    let mut total = first.vertex_count();
    let mut pairs: Vec<_> = first.edges().iter().map(|e| (e.u, e.v)).collect();
    for (g, &base) in spec.summands.iter().zip(&spec.bases).skip(1) {
        let mut map = vec![0; g.vertex_count()];
        for (v, slot) in map.iter_mut().enumerate() {
            if v == base {
                *slot = hub;
            } else {
                *slot = total;
                total += 1;
            }
        }
        pairs.extend(g.edges().iter().map(|e| (map[e.u], map[e.v])));
    }
    Ok(Graph::build(total, &pairs)?)
}
