//! Sharp upper bounds on the edge count of a connected planar graph whose
//! cycles all have length `r`, the graphs attaining them, and certificates
//! that a graph with too many edges has two cycles of different lengths.
//!
//! For even `r` the extremal graph is the book `B(r/2, r, p)` with a pendant
//! path `P_c`; for odd `r` it is `p'` copies of `C_r` sharing one vertex,
//! again with a pendant path. Over all `r` the bound is `2n - 4`.

use std::fmt;

use thiserror::Error;

use crate::generators::{book, cycle, path, wedge, BookParams, GenError, WedgeSpec};
use crate::graph::Graph;
use crate::oracle::{cycle_spectrum, OracleError, SearchBudget};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("out of range: {0}")]
    BadRange(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has no cycle of length {0}")]
    NoCycleOfLength(usize),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Gen(#[from] GenError),
}

/// Parameters of the extremal graph for a fixed cycle length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalParams {
    /// `B(r/2, r, pages)` with a pendant path of `tail` edges.
    Even { pages: usize, tail: usize },
    /// `cycles` copies of `C_r` at one vertex with a pendant path of `tail`
    /// edges.
    Odd { cycles: usize, tail: usize },
}

impl ExtremalParams {
    /// `(p, c)` in the even case, `(p', path length)` in the odd case.
    pub fn as_pair(&self) -> (usize, usize) {
        match *self {
            ExtremalParams::Even { pages, tail } => (pages, tail),
            ExtremalParams::Odd { cycles, tail } => (cycles, tail),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub r: Option<usize>,
    pub bound: usize,
    pub extremal: Option<ExtremalParams>,
}

fn check_range(n: usize, r: usize) -> Result<(), BoundsError> {
    if r < 3 {
        return Err(BoundsError::BadRange(format!(
            "cycle length r = {r} must be at least 3"
        )));
    }
    if r.is_multiple_of(2) && n < 4 {
        return Err(BoundsError::BadRange(format!(
            "even r needs n >= 4, got n = {n}"
        )));
    }
    if r % 2 == 1 && n < 3 {
        return Err(BoundsError::BadRange(format!(
            "odd r needs n >= 3, got n = {n}"
        )));
    }
    if n < r {
        return Err(BoundsError::BadRange(format!(
            "n = {n} vertices cannot hold a cycle of length r = {r}"
        )));
    }
    Ok(())
}

/// Largest edge count of a connected planar `n`-vertex graph whose cycles
/// all have length `r`.
pub fn max_edges(n: usize, r: usize) -> Result<BoundReport, BoundsError> {
    check_range(n, r)?;
    let (bound, extremal) = if r.is_multiple_of(2) {
        let half = r / 2;
        let pages = (n - half - 1) / (half - 1);
        let tail = n - 2 - (half - 1) * (pages + 1);
        (n - 1 + pages, ExtremalParams::Even { pages, tail })
    } else {
        let cycles = (n - 1) / (r - 1);
        let tail = n - 1 - cycles * (r - 1);
        (n - 1 + cycles, ExtremalParams::Odd { cycles, tail })
    };
    Ok(BoundReport {
        n,
        r: Some(r),
        bound,
        extremal: Some(extremal),
    })
}

/// The bound `2n - 4`, valid whatever the common cycle length is.
pub fn max_edges_any_r(n: usize) -> Result<BoundReport, BoundsError> {
    if n < 4 {
        return Err(BoundsError::BadRange(format!("needs n >= 4, got n = {n}")));
    }
    Ok(BoundReport {
        n,
        r: None,
        bound: 2 * n - 4,
        extremal: None,
    })
}

/// A graph on `n` vertices with `max_edges(n, r)` edges and all cycles of
/// length `r`.
pub fn extremal(n: usize, r: usize) -> Result<Graph, BoundsError> {
    let report = max_edges(n, r)?;
    let summands = match report.extremal.expect("fixed-r reports carry parameters") {
        ExtremalParams::Even { pages, tail } => {
            vec![book(BookParams::theta(r / 2, pages))?, path(tail)]
        }
        ExtremalParams::Odd { cycles, tail } => {
            let mut v: Vec<Graph> = (0..cycles).map(|_| cycle(r)).collect::<Result<_, _>>()?;
            v.push(path(tail));
            v
        }
    };
    Ok(wedge(&WedgeSpec::new(summands))?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    MustContainDistinctLengths,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub n: usize,
    pub m: usize,
    pub r: Option<usize>,
    pub verdict: Verdict,
    pub cited_bound: usize,
}

impl Certificate {
    /// Which bound was applied, stated as its formula.
    pub fn bound_name(&self) -> &'static str {
        match self.r {
            None => "all-r edge bound 2n-4",
            Some(r) if r % 2 == 0 => "even-r edge bound n-1+floor((n-r/2-1)/(r/2-1))",
            Some(_) => "odd-r edge bound n-1+floor((n-1)/(r-1))",
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let premise = match self.r {
            Some(r) => format!(
                "connected planar graph, n = {}, m = {}, with a cycle of length {r}",
                self.n, self.m
            ),
            None => format!("connected planar graph, n = {}, m = {}", self.n, self.m),
        };
        match self.verdict {
            Verdict::MustContainDistinctLengths => write!(
                f,
                "{premise}: m = {} > {} ({}), so it must contain two cycles of different lengths",
                self.m,
                self.cited_bound,
                self.bound_name()
            ),
            Verdict::Inconclusive => write!(
                f,
                "{premise}: m = {} <= {} ({}), inconclusive",
                self.m,
                self.cited_bound,
                self.bound_name()
            ),
        }
    }
}

/// Pure arithmetic: a connected planar graph with `n` vertices and `m`
/// edges (and, if `r` is given, some cycle of length `r`) must have two
/// cycle lengths whenever `m` exceeds the applicable bound.
pub fn certify_distinct(n: usize, m: usize, r: Option<usize>) -> Result<Certificate, BoundsError> {
    let cited_bound = match r {
        Some(r) => max_edges(n, r)?.bound,
        None => max_edges_any_r(n)?.bound,
    };
    let verdict = if m > cited_bound {
        Verdict::MustContainDistinctLengths
    } else {
        Verdict::Inconclusive
    };
    Ok(Certificate {
        n,
        m,
        r,
        verdict,
        cited_bound,
    })
}

/// Certifies an actual graph. Checks connectivity and, when `r` is given,
/// that some cycle of length `r` exists. Planarity is the caller's premise.
pub fn certify_graph(
    g: &Graph,
    r: Option<usize>,
    budget: &SearchBudget,
) -> Result<Certificate, BoundsError> {
    if !g.is_connected() {
        return Err(BoundsError::NotConnected);
    }
    if let Some(r) = r {
        if !cycle_spectrum(g, budget)?.lengths.contains(&r) {
            return Err(BoundsError::NoCycleOfLength(r));
        }
    }
    certify_distinct(g.vertex_count(), g.edge_count(), r)
}
