//! Bridges, cut vertices and the cycle-carrying blocks of a graph.
//!
//! Deleting the bridges and then the isolated vertices leaves a graph whose
//! blocks are exactly the biconnected components with at least two edges.
//! Those are the `cycle_blocks` here; every edge on a cycle lies in exactly
//! one of them.

use std::collections::BTreeSet;

use crate::graph::{Edge, Graph, VertexId};
use crate::oracle::{cycle_spectrum, OracleError, SearchBudget};

/// A biconnected component with at least three vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Block {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Edge>,
}

impl Block {
    /// The block as a standalone graph, vertices renumbered in ascending
    /// order. Returns the graph and its local-to-global map.
    pub fn to_graph(&self, g: &Graph) -> (Graph, Vec<VertexId>) {
        g.extract(&self.vertices, &self.edges)
            .expect("block edges belong to the graph")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BlockDecomposition {
    pub bridges: Vec<Edge>,
    pub cut_vertices: Vec<VertexId>,
    /// Ordered by least vertex, then by edge list.
    pub cycle_blocks: Vec<Block>,
}

struct Tarjan<'g> {
    g: &'g Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<Edge>,
    bridges: Vec<Edge>,
    is_cut: Vec<bool>,
    components: Vec<Vec<Edge>>,
}

impl<'g> Tarjan<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        Tarjan {
            g,
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            time: 0,
            edge_stack: Vec::new(),
            bridges: Vec::new(),
            is_cut: vec![false; n],
            components: Vec::new(),
        }
    }

    fn run(mut self) -> Self {
        for root in 0..self.g.vertex_count() {
            if self.disc[root] == usize::MAX {
                self.visit(root);
            }
        }
        self
    }

    fn visit(&mut self, root: VertexId) {
        // Frames of (vertex, parent, next neighbour index).
        let mut stack = vec![(root, usize::MAX, 0usize)];
        self.disc[root] = self.time;
        self.low[root] = self.time;
        self.time += 1;
        let mut root_children = 0;

        while let Some(frame) = stack.last_mut() {
            let (v, parent, idx) = *frame;
            let nbrs = self.g.neighbors(v);
            if idx < nbrs.len() {
                frame.2 += 1;
                let w = nbrs[idx];
                if w == parent {
                    continue;
                }
                if self.disc[w] == usize::MAX {
                    self.edge_stack.push(Edge::new(v, w));
                    self.disc[w] = self.time;
                    self.low[w] = self.time;
                    self.time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if self.disc[w] < self.disc[v] {
                    self.edge_stack.push(Edge::new(v, w));
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
                continue;
            }

            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            self.low[parent] = self.low[parent].min(self.low[v]);
            if self.low[v] >= self.disc[parent] {
                if parent != root {
                    self.is_cut[parent] = true;
                }
                if self.low[v] > self.disc[parent] {
                    self.bridges.push(Edge::new(parent, v));
                }
                let closing = Edge::new(parent, v);
                let mut component = Vec::new();
                while let Some(e) = self.edge_stack.pop() {
                    component.push(e);
                    if e == closing {
                        break;
                    }
                }
                self.components.push(component);
            }
        }
        if root_children >= 2 {
            self.is_cut[root] = true;
        }
    }
}

/// Edges that lie on no cycle, in ascending order.
pub fn bridges(g: &Graph) -> Vec<Edge> {
    let mut out = Tarjan::new(g).run().bridges;
    out.sort_unstable();
    out
}

/// Articulation points of `g`, ascending.
pub fn cut_vertices(g: &Graph) -> Vec<VertexId> {
    let t = Tarjan::new(g).run();
    (0..g.vertex_count()).filter(|&v| t.is_cut[v]).collect()
}

pub fn decompose(g: &Graph) -> BlockDecomposition {
    let t = Tarjan::new(g).run();
    let mut bridges = t.bridges;
    bridges.sort_unstable();
    let cut_vertices = (0..g.vertex_count()).filter(|&v| t.is_cut[v]).collect();

    let mut cycle_blocks: Vec<Block> = t
        .components
        .into_iter()
        .filter(|c| c.len() >= 2)
        .map(|mut edges| {
            edges.sort_unstable();
            let vertices: BTreeSet<_> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
            Block {
                vertices: vertices.into_iter().collect(),
                edges,
            }
        })
        .collect();
    cycle_blocks.sort();

    BlockDecomposition {
        bridges,
        cut_vertices,
        cycle_blocks,
    }
}

/// Union of the cycle spectra of the cycle blocks of `g`.
pub fn block_spectrum_union(
    g: &Graph,
    budget: &SearchBudget,
) -> Result<BTreeSet<usize>, OracleError> {
    let mut union = BTreeSet::new();
    for block in decompose(g).cycle_blocks {
        let (bg, _) = block.to_graph(g);
        union.extend(cycle_spectrum(&bg, budget)?.lengths);
    }
    Ok(union)
}

/// True iff the cycle spectrum of `g` is the union of its blocks' spectra.
/// Test utility: every cycle lives inside a single block.
pub fn blockwise_spectrum_check(g: &Graph, budget: &SearchBudget) -> Result<bool, OracleError> {
    let whole = cycle_spectrum(g, budget)?.lengths;
    Ok(whole == block_spectrum_union(g, budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{book, complete, cycle, path, wedge, BookParams, WedgeSpec};

    /// The face-disconnected example graph: a 2x4 ladder (three squares in a
    /// row), a bridge from its top-right corner, then a triangle.
    pub(crate) fn ladder_bridge_triangle() -> Graph {
        Graph::build(
            11,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (4, 5),
                (5, 6),
                (6, 7),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
                (3, 8),
                (8, 9),
                (9, 10),
                (10, 8),
            ],
        )
        .unwrap()
    }

    fn bowtie() -> Graph {
        wedge(&WedgeSpec::new(vec![cycle(3).unwrap(), cycle(3).unwrap()])).unwrap()
    }

    #[test]
    fn bridges_examples() {
        assert_eq!(bridges(&path(4)).len(), 4);
        assert!(bridges(&cycle(5).unwrap()).is_empty());
        let g = wedge(&WedgeSpec::new(vec![cycle(3).unwrap(), path(2)])).unwrap();
        assert_eq!(bridges(&g), vec![Edge::new(0, 3), Edge::new(3, 4)]);
    }

    #[test]
    fn bowtie_blocks() {
        let d = decompose(&bowtie());
        assert!(d.bridges.is_empty());
        assert_eq!(d.cut_vertices, vec![0]);
        assert_eq!(d.cycle_blocks.len(), 2);
        assert_eq!(d.cycle_blocks[0].vertices, vec![0, 1, 2]);
        assert_eq!(d.cycle_blocks[1].vertices, vec![0, 3, 4]);
    }

    #[test]
    fn ladder_is_one_block() {
        let g = ladder_bridge_triangle();
        let d = decompose(&g);
        assert_eq!(d.bridges, vec![Edge::new(3, 8)]);
        assert_eq!(d.cut_vertices, vec![3, 8]);
        assert_eq!(d.cycle_blocks.len(), 2);
        assert_eq!(d.cycle_blocks[0].vertices, (0..8).collect::<Vec<_>>());
        assert_eq!(d.cycle_blocks[1].vertices, vec![8, 9, 10]);
    }

    #[test]
    fn two_connected_book_is_single_block() {
        let g = book(BookParams::new(2, 4, 3)).unwrap();
        let d = decompose(&g);
        assert!(d.bridges.is_empty());
        assert!(d.cut_vertices.is_empty());
        assert_eq!(d.cycle_blocks.len(), 1);
        assert_eq!(d.cycle_blocks[0].edges, g.edges());
    }

    #[test]
    fn forest_has_no_cycle_blocks() {
        let g = Graph::build(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let d = decompose(&g);
        assert_eq!(d.bridges.len(), 3);
        assert_eq!(d.cut_vertices, vec![1]);
        assert!(d.cycle_blocks.is_empty());
    }

    #[test]
    fn blockwise_spectra() {
        let b = SearchBudget::default();
        let w = wedge(&WedgeSpec::new(vec![cycle(3).unwrap(), cycle(5).unwrap()])).unwrap();
        assert!(blockwise_spectrum_check(&w, &b).unwrap());
        assert_eq!(
            block_spectrum_union(&w, &b).unwrap(),
            BTreeSet::from([3, 5])
        );
        assert!(blockwise_spectrum_check(&complete(4).unwrap(), &b).unwrap());

        let g = ladder_bridge_triangle();
        assert!(blockwise_spectrum_check(&g, &b).unwrap());
        assert_eq!(
            block_spectrum_union(&g, &b).unwrap(),
            BTreeSet::from([3, 4, 6, 8])
        );
    }

    #[test]
    fn block_to_graph_is_renumbered() {
        let g = ladder_bridge_triangle();
        let d = decompose(&g);
        let (tri, map) = d.cycle_blocks[1].to_graph(&g);
        assert_eq!(map, vec![8, 9, 10]);
        assert!(tri.is_cycle(&[0, 1, 2]));
    }
}
