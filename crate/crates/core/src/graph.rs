//! Immutable simple undirected graphs and the edge-list text format.
//!
//! Vertices are dense ids `0..n`. Graphs read from text keep the original
//! labels so reports can refer to the user's numbering.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

pub type VertexId = usize;

/// Undirected edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    /// Normalises the endpoint order. Does not reject `u == v`; graph
    /// construction does that.
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(u64),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(u64, u64),
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    BadVertexRef { vertex: u64, vertex_count: usize },
    #[error("edge {0} is not in the graph")]
    UnknownEdge(Edge),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<VertexId>>,
    labels: Vec<u64>,
}

impl Graph {
    /// Builds a validated graph on `vertex_count` vertices. Self-loops,
    /// repeated pairs (in either orientation) and out-of-range ids are errors.
    pub fn build(vertex_count: usize, edge_pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let labels = (0..vertex_count as u64).collect();
        Self::build_labeled(vertex_count, edge_pairs, labels)
    }

    fn build_labeled(
        vertex_count: usize,
        edge_pairs: &[(usize, usize)],
        labels: Vec<u64>,
    ) -> Result<Self, GraphError> {
        debug_assert_eq!(labels.len(), vertex_count);
        let mut seen = HashSet::with_capacity(edge_pairs.len());
        let mut edges = Vec::with_capacity(edge_pairs.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(a, b) in edge_pairs {
            for x in [a, b] {
                if x >= vertex_count {
                    return Err(GraphError::BadVertexRef {
                        vertex: x as u64,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(labels[a]));
            }
            let e = Edge::new(a, b);
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(labels[e.u], labels[e.v]));
            }
            edges.push(e);
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        edges.sort_unstable();
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges,
            adjacency,
            labels,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbour list. Panics if `v` is out of range.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.adjacency
            .get(v)
            .map(Vec::len)
            .ok_or(GraphError::BadVertexRef {
                vertex: v as u64,
                vertex_count: self.vertex_count,
            })
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a < self.vertex_count && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Original label of a dense vertex id.
    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    fn has_identity_labels(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| l == i as u64)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// least vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_count];
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for root in 0..self.vertex_count {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut component = Vec::new();
            while let Some(x) = stack.pop() {
                component.push(x);
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// True for graphs with exactly one component. The empty graph is not
    /// connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Replaces `e` by a path with `t + 1` edges through `t` fresh vertices,
    /// numbered `n..n+t` from the `e.u` end.
    pub fn subdivide(&self, e: Edge, t: usize) -> Result<Graph, GraphError> {
        let e = Edge::new(e.u, e.v);
        if self.edges.binary_search(&e).is_err() {
            return Err(GraphError::UnknownEdge(e));
        }
        if t == 0 {
            return Ok(self.clone());
        }
        let n = self.vertex_count;
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&f| f != e)
            .map(|f| (f.u, f.v))
            .collect();
        let mut prev = e.u;
        for fresh in n..n + t {
            pairs.push((prev, fresh));
            prev = fresh;
        }
        pairs.push((prev, e.v));

        let mut labels = self.labels.clone();
        let next = self.labels.iter().max().map_or(0, |m| m + 1);
        labels.extend(next..next + t as u64);
        Self::build_labeled(n + t, &pairs, labels)
    }

    /// Subgraph on all vertices keeping only `edges`, which must be edges of
    /// this graph.
    pub fn spanning_subgraph(&self, edges: &[Edge]) -> Result<Graph, GraphError> {
        for e in edges {
            if !self.has_edge(e.u, e.v) {
                return Err(GraphError::UnknownEdge(*e));
            }
        }
        let pairs: Vec<_> = edges.iter().map(|e| (e.u, e.v)).collect();
        Self::build_labeled(self.vertex_count, &pairs, self.labels.clone())
    }

    /// Subgraph with vertex set `vertices` (renumbered densely in the given
    /// order) and the edges of `edges` among them. Returns the graph and the
    /// local-to-global id map.
    pub fn extract(
        &self,
        vertices: &[VertexId],
        edges: &[Edge],
    ) -> Result<(Graph, Vec<VertexId>), GraphError> {
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.vertex_count {
                return Err(GraphError::BadVertexRef {
                    vertex: v as u64,
                    vertex_count: self.vertex_count,
                });
            }
            local[v] = i;
        }
        let mut pairs = Vec::with_capacity(edges.len());
        for e in edges {
            if !self.has_edge(e.u, e.v) || local[e.u] == usize::MAX || local[e.v] == usize::MAX {
                return Err(GraphError::UnknownEdge(*e));
            }
            pairs.push((local[e.u], local[e.v]));
        }
        let labels = vertices.iter().map(|&v| self.labels[v]).collect();
        let g = Self::build_labeled(vertices.len(), &pairs, labels)?;
        Ok((g, vertices.to_vec()))
    }

    /// Graph with vertex `v` and its edges removed; remaining vertices are
    /// renumbered in order.
    pub fn without_vertex(&self, v: VertexId) -> Graph {
        let keep: Vec<_> = (0..self.vertex_count).filter(|&x| x != v).collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|e| e.u != v && e.v != v)
            .copied()
            .collect();
        self.extract(&keep, &edges)
            .expect("edges of a subgraph are valid")
            .0
    }

    /// True if `seq` lists the vertices of a simple cycle of this graph in
    /// traversal order (length ≥ 3, no repeats, consecutive vertices and the
    /// closing pair adjacent).
    pub fn is_cycle(&self, seq: &[VertexId]) -> bool {
        if seq.len() < 3 || seq.iter().any(|&v| v >= self.vertex_count) {
            return false;
        }
        let distinct: BTreeSet<_> = seq.iter().collect();
        if distinct.len() != seq.len() {
            return false;
        }
        seq.iter()
            .zip(seq.iter().cycle().skip(1))
            .all(|(&a, &b)| self.has_edge(a, b))
    }

    /// Parses the line-oriented edge-list format: `#` comments, blank lines,
    /// an optional leading `vertices N` header, then one `u v` pair per line.
    ///
    /// With a header, ids are taken as-is and must be below `N`. Without one,
    /// the distinct ids that occur are sorted and renumbered densely; the
    /// original ids are kept as labels.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<usize> = None;
        let mut raw: Vec<(usize, u64, u64)> = Vec::new();
        let mut first_significant = true;

        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let parse_err = |reason: String| GraphError::Parse {
                line: line_no,
                reason,
            };
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            if tokens[0] == "vertices" {
                if !first_significant {
                    return Err(parse_err("`vertices` header must come first".into()));
                }
                if tokens.len() != 2 {
                    return Err(parse_err("expected `vertices <N>`".into()));
                }
                let n = tokens[1]
                    .parse::<usize>()
                    .map_err(|_| parse_err(format!("invalid vertex count `{}`", tokens[1])))?;
                header = Some(n);
                first_significant = false;
                continue;
            }
            first_significant = false;
            if tokens.len() != 2 {
                return Err(parse_err(format!(
                    "expected two vertex ids, found {} tokens",
                    tokens.len()
                )));
            }
            let mut ids = [0u64; 2];
            for (slot, tok) in ids.iter_mut().zip(&tokens) {
                *slot = tok
                    .parse::<u64>()
                    .map_err(|_| parse_err(format!("invalid vertex id `{tok}`")))?;
            }
            raw.push((line_no, ids[0], ids[1]));
        }

        // Line-level validation first so errors carry line numbers.
        let mut seen = HashSet::with_capacity(raw.len());
        for &(line, a, b) in &raw {
            if a == b {
                return Err(GraphError::Parse {
                    line,
                    reason: format!("self-loop at vertex {a}"),
                });
            }
            if let Some(n) = header {
                if let Some(&bad) = [a, b].iter().find(|&&x| x >= n as u64) {
                    return Err(GraphError::Parse {
                        line,
                        reason: format!("vertex {bad} out of range for `vertices {n}`"),
                    });
                }
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(GraphError::Parse {
                    line,
                    reason: format!("duplicate edge {a}-{b}"),
                });
            }
        }

        match header {
            Some(n) => {
                let pairs: Vec<_> = raw
                    .iter()
                    .map(|&(_, a, b)| (a as usize, b as usize))
                    .collect();
                Graph::build(n, &pairs)
            }
            None => {
                let labels: Vec<u64> = raw
                    .iter()
                    .flat_map(|&(_, a, b)| [a, b])
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
                let dense = |x: u64| labels.binary_search(&x).expect("label collected above");
                let pairs: Vec<_> = raw.iter().map(|&(_, a, b)| (dense(a), dense(b))).collect();
                Graph::build_labeled(labels.len(), &pairs, labels)
            }
        }
    }

    /// Canonical text form. Graphs numbered `0..n` get a `vertices n` header
    /// (so isolated vertices survive); relabelled graphs are written with
    /// their labels and no header.
    pub fn serialize_edge_list(&self) -> String {
        let mut out = String::new();
        let identity = self.has_identity_labels();
        if identity {
            out.push_str(&format!("vertices {}\n", self.vertex_count));
        }
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", self.labels[e.u], self.labels[e.v]));
        }
        out
    }
}
