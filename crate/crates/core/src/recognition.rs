//! Deciding whether every cycle of a graph has the same length.
//!
//! A graph has all cycles of length `r` exactly when each cycle block is
//! either the cycle `C_r` or, for even `r`, the book `B(r/2, r, p)`: two hub
//! vertices joined by `p + 1` internally disjoint paths of length `r/2`.
//! Both shapes are recognised from the degree profile and a walk along the
//! degree-2 chains, so [`decide`] runs in linear time and never enumerates
//! cycles. Non-planar graphs need no separate test: their blocks never have
//! either shape.

use std::fmt;

use thiserror::Error;

use crate::decomposition::{cut_vertices, decompose, BlockDecomposition};
use crate::graph::{Graph, VertexId};
use crate::oracle::{cycle_spectrum, SearchBudget};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("not a block: {0}")]
    NotABlock(&'static str),
    #[error("graph has all cycles of equal length (or none); there is nothing to witness")]
    NotRejected,
}

/// Why a block is neither a cycle nor an equal-path book.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OtherReason {
    /// Not exactly two vertices of equal degree above 2.
    DegreeProfile,
    /// The hub-to-hub paths have different lengths.
    UnequalPathLengths,
    /// The hubs are adjacent, so one hub-to-hub path is a single edge.
    EndpointsAdjacent,
    /// The hub-to-hub chains do not account for every vertex and edge.
    CountMismatch,
}

impl OtherReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            OtherReason::DegreeProfile => "degree-profile",
            OtherReason::UnequalPathLengths => "unequal-path-lengths",
            OtherReason::EndpointsAdjacent => "endpoints-adjacent-structure",
            OtherReason::CountMismatch => "count-mismatch",
        }
    }
}

impl fmt::Display for OtherReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockShape {
    Cycle {
        len: usize,
    },
    /// `B(k, 2k, pages)`: `pages + 1` hub-to-hub paths of length `k`.
    Book {
        k: usize,
        pages: usize,
    },
    Other(OtherReason),
}

impl BlockShape {
    /// The common cycle length of the shape, if it has one.
    pub fn cycle_length(&self) -> Option<usize> {
        match *self {
            BlockShape::Cycle { len } => Some(len),
            BlockShape::Book { k, .. } => Some(2 * k),
            BlockShape::Other(_) => None,
        }
    }
}

impl fmt::Display for BlockShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockShape::Cycle { len } => write!(f, "C_{len}"),
            BlockShape::Book { k, pages } => write!(f, "B({k},{},{pages})", 2 * k),
            BlockShape::Other(reason) => write!(f, "other ({reason})"),
        }
    }
}

/// Two cycles of different lengths, as vertex sequences of the input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPair {
    pub cycle_a: Vec<VertexId>,
    pub cycle_b: Vec<VertexId>,
}

impl WitnessPair {
    pub fn lengths(&self) -> (usize, usize) {
        (self.cycle_a.len(), self.cycle_b.len())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Exact(WitnessPair),
    /// The decision stands but no witness was produced within budget.
    DecisionOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Acyclic,
    AllCyclesEqual {
        r: usize,
        shapes: Vec<BlockShape>,
    },
    DistinctLengths {
        shapes: Vec<BlockShape>,
        witness: Witness,
    },
}

impl Decision {
    pub fn is_all_equal(&self) -> bool {
        matches!(self, Decision::AllCyclesEqual { .. })
    }

    pub fn common_length(&self) -> Option<usize> {
        match self {
            Decision::AllCyclesEqual { r, .. } => Some(*r),
            _ => None,
        }
    }

    pub fn shapes(&self) -> &[BlockShape] {
        match self {
            Decision::Acyclic => &[],
            Decision::AllCyclesEqual { shapes, .. } | Decision::DistinctLengths { shapes, .. } => {
                shapes
            }
        }
    }
}

/// Hub-to-hub paths of a block with exactly two high-degree vertices.
#[derive(Debug, Clone)]
struct HubPaths {
    /// Each path runs from the first hub to the second, both included.
    paths: Vec<Vec<VertexId>>,
}

impl HubPaths {
    /// Closes path `i` with path `j` traversed backwards.
    fn cycle(&self, i: usize, j: usize) -> Vec<VertexId> {
        let mut seq = self.paths[i].clone();
        let back = &self.paths[j];
        seq.extend(back[1..back.len() - 1].iter().rev());
        seq
    }
}

/// Shape of one block plus, when it has two hubs, the paths between them.
fn analyse_block(b: &Graph) -> Result<(BlockShape, Option<HubPaths>), RecognitionError> {
    let n = b.vertex_count();
    if n < 3 {
        return Err(RecognitionError::NotABlock("fewer than three vertices"));
    }
    if !b.is_connected() {
        return Err(RecognitionError::NotABlock("disconnected"));
    }
    if !cut_vertices(b).is_empty() {
        return Err(RecognitionError::NotABlock("has a cut vertex"));
    }

    let degree = |v: VertexId| b.neighbors(v).len();
    let high: Vec<VertexId> = (0..n).filter(|&v| degree(v) != 2).collect();
    if high.is_empty() {
        return Ok((BlockShape::Cycle { len: n }, None));
    }
    if high.len() != 2 || degree(high[0]) != degree(high[1]) {
        return Ok((BlockShape::Other(OtherReason::DegreeProfile), None));
    }
    let (a, z) = (high[0], high[1]);

    let mut paths = Vec::with_capacity(degree(a));
    for &start in b.neighbors(a) {
        let mut path = vec![a];
        let (mut prev, mut cur) = (a, start);
        while degree(cur) == 2 && path.len() <= n {
            path.push(cur);
            let nb = b.neighbors(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        if cur != z {
            return Ok((BlockShape::Other(OtherReason::CountMismatch), None));
        }
        path.push(z);
        paths.push(path);
    }

    let edge_total: usize = paths.iter().map(|p| p.len() - 1).sum();
    let inner_total: usize = paths.iter().map(|p| p.len() - 2).sum();
    if edge_total != b.edge_count() || inner_total + 2 != n {
        return Ok((BlockShape::Other(OtherReason::CountMismatch), None));
    }

    let lens: Vec<usize> = paths.iter().map(|p| p.len() - 1).collect();
    let hub_paths = Some(HubPaths { paths });
    if lens.contains(&1) {
        return Ok((BlockShape::Other(OtherReason::EndpointsAdjacent), hub_paths));
    }
    if lens.iter().any(|&l| l != lens[0]) {
        return Ok((
            BlockShape::Other(OtherReason::UnequalPathLengths),
            hub_paths,
        ));
    }
    Ok((
        BlockShape::Book {
            k: lens[0],
            pages: lens.len() - 1,
        },
        hub_paths,
    ))
}

/// Classifies a 2-connected graph as `C_r`, `B(k, 2k, p)`, or neither.
pub fn classify_block(b: &Graph) -> Result<BlockShape, RecognitionError> {
    analyse_block(b).map(|(shape, _)| shape)
}

struct BlockInfo {
    shape: BlockShape,
    hub_paths: Option<HubPaths>,
    /// Block-local to global vertex ids.
    map: Vec<VertexId>,
    local: Graph,
}

impl BlockInfo {
    fn to_global(&self, seq: &[VertexId]) -> Vec<VertexId> {
        seq.iter().map(|&v| self.map[v]).collect()
    }

    /// One cycle of length `shape.cycle_length()`, for Cycle and Book blocks.
    fn some_cycle(&self) -> Option<Vec<VertexId>> {
        match self.shape {
            BlockShape::Cycle { .. } => {
                let g = &self.local;
                let mut seq = vec![0];
                let (mut prev, mut cur) = (0, g.neighbors(0)[0]);
                while cur != 0 {
                    seq.push(cur);
                    let nb = g.neighbors(cur);
                    let next = if nb[0] == prev { nb[1] } else { nb[0] };
                    prev = cur;
                    cur = next;
                }
                Some(self.to_global(&seq))
            }
            BlockShape::Book { .. } => {
                let hp = self.hub_paths.as_ref()?;
                Some(self.to_global(&hp.cycle(0, 1)))
            }
            BlockShape::Other(_) => None,
        }
    }

    /// Two cycles of different lengths read off unequal hub paths.
    fn unequal_path_cycles(&self) -> Option<WitnessPair> {
        let hp = self.hub_paths.as_ref()?;
        let len = |i: usize| hp.paths[i].len();
        let count = hp.paths.len();
        let (i, j) = (0..count)
            .flat_map(|i| (i + 1..count).map(move |j| (i, j)))
            .find(|&(i, j)| len(i) != len(j))?;
        let t = (0..count).find(|&t| t != i && t != j)?;
        Some(WitnessPair {
            cycle_a: self.to_global(&hp.cycle(i, t)),
            cycle_b: self.to_global(&hp.cycle(j, t)),
        })
    }

    /// Shortest and longest cycle of the block by exhaustive search.
    fn oracle_cycles(&self, budget: &SearchBudget) -> Option<WitnessPair> {
        let report = cycle_spectrum(&self.local, budget).ok()?;
        let (lo, hi) = (report.girth?, report.circumference?);
        (lo != hi).then(|| WitnessPair {
            cycle_a: self.to_global(&report.witnesses[&lo]),
            cycle_b: self.to_global(&report.witnesses[&hi]),
        })
    }
}

struct Analysis {
    blocks: Vec<BlockInfo>,
}

impl Analysis {
    fn new(g: &Graph) -> Self {
        Self::from_decomposition(g, &decompose(g))
    }

    fn from_decomposition(g: &Graph, d: &BlockDecomposition) -> Self {
        let blocks = d
            .cycle_blocks
            .iter()
            .map(|block| {
                let (local, map) = block.to_graph(g);
                let (shape, hub_paths) =
                    analyse_block(&local).expect("cycle blocks are 2-connected");
                BlockInfo {
                    shape,
                    hub_paths,
                    map,
                    local,
                }
            })
            .collect();
        Analysis { blocks }
    }

    fn shapes(&self) -> Vec<BlockShape> {
        self.blocks.iter().map(|b| b.shape).collect()
    }

    /// The common cycle length if every block is a cycle or book of it.
    fn common_length(&self) -> Option<usize> {
        let mut lengths = self.blocks.iter().map(|b| b.shape.cycle_length());
        let first = lengths.next()??;
        lengths.all(|l| l == Some(first)).then_some(first)
    }

    /// Witnesses that need no cycle enumeration: two blocks of different
    /// lengths, or a block with unequal hub paths.
    fn structural_witness(&self) -> Option<WitnessPair> {
        let shaped: Vec<_> = self
            .blocks
            .iter()
            .filter_map(|b| b.shape.cycle_length().map(|l| (l, b)))
            .collect();
        if let Some(&(l0, b0)) = shaped.first() {
            if let Some(&(_, b1)) = shaped.iter().find(|(l, _)| *l != l0) {
                return Some(WitnessPair {
                    cycle_a: b0.some_cycle()?,
                    cycle_b: b1.some_cycle()?,
                });
            }
        }
        self.blocks.iter().find_map(BlockInfo::unequal_path_cycles)
    }

    fn oracle_witness(&self, budget: &SearchBudget) -> Option<WitnessPair> {
        self.blocks
            .iter()
            .filter(|b| matches!(b.shape, BlockShape::Other(_)))
            .find_map(|b| b.oracle_cycles(budget))
    }

    fn decision(&self, budget: Option<&SearchBudget>) -> Decision {
        if self.blocks.is_empty() {
            return Decision::Acyclic;
        }
        let shapes = self.shapes();
        if let Some(r) = self.common_length() {
            return Decision::AllCyclesEqual { r, shapes };
        }
        let witness = self
            .structural_witness()
            .or_else(|| budget.and_then(|b| self.oracle_witness(b)))
            .map_or(Witness::DecisionOnly, Witness::Exact);
        Decision::DistinctLengths { shapes, witness }
    }
}

/// Decides whether all cycles of `g` have one common length.
///
/// Disconnected graphs are decided over the blocks of all components.
/// Rejections carry a witness pair when one can be read off the block
/// structure; otherwise the witness is [`Witness::DecisionOnly`] (see
/// [`decide_with_witnesses`]).
pub fn decide(g: &Graph) -> Decision {
    Analysis::new(g).decision(None)
}

/// Like [`decide`], but falls back to exhaustive search inside an offending
/// block when no structural witness exists.
pub fn decide_with_witnesses(g: &Graph, budget: &SearchBudget) -> Decision {
    Analysis::new(g).decision(Some(budget))
}

/// Two cycles of different lengths in a rejected graph.
pub fn extract_witnesses(g: &Graph, budget: &SearchBudget) -> Result<Witness, RecognitionError> {
    match decide_with_witnesses(g, budget) {
        Decision::DistinctLengths { witness, .. } => Ok(witness),
        _ => Err(RecognitionError::NotRejected),
    }
}
