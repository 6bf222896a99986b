#![allow(dead_code)]

use std::collections::BTreeMap;

use equicycle::decomposition::BlockDecomposition;
use equicycle::generators::{complete, complete_bipartite};
use equicycle::Graph;
use rand::Rng;

/// All unordered pairs of `0..n` in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Labelled graph on `n` vertices whose edges are the set bits of `mask`
/// over `pairs`.
pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let chosen: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    Graph::build(n, &chosen).unwrap()
}

/// Subdivides edge `i` of `base` `d[i]` times.
pub fn subdivide_each(base: &Graph, d: &[usize]) -> Graph {
    let mut pairs = Vec::new();
    let mut next = base.vertex_count();
    for (e, &t) in base.edges().iter().zip(d) {
        let mut prev = e.u;
        for _ in 0..t {
            pairs.push((prev, next));
            prev = next;
            next += 1;
        }
        pairs.push((prev, e.v));
    }
    Graph::build(next, &pairs).unwrap()
}

pub fn random_kuratowski_subdivision(rng: &mut impl Rng, k5: bool) -> Graph {
    let base = if k5 {
        complete(5).unwrap()
    } else {
        complete_bipartite(3, 3).unwrap()
    };
    let d: Vec<usize> = (0..base.edge_count())
        .map(|_| rng.gen_range(0..=3))
        .collect();
    subdivide_each(&base, &d)
}

/// Checks the structural invariants of a decomposition: every edge is a
/// bridge or lies in exactly one cycle block, and two blocks share at most
/// one vertex, which is then a cut vertex.
pub fn decomposition_violation(g: &Graph, d: &BlockDecomposition) -> Option<String> {
    let mut owner: BTreeMap<_, usize> = BTreeMap::new();
    for e in &d.bridges {
        *owner.entry(*e).or_default() += 1;
    }
    for b in &d.cycle_blocks {
        if b.vertices.len() < 3 {
            return Some(format!("block with {} vertices", b.vertices.len()));
        }
        for e in &b.edges {
            *owner.entry(*e).or_default() += 1;
        }
    }
    if owner.len() != g.edge_count() || owner.values().any(|&c| c != 1) {
        return Some("edges are not partitioned into bridges and blocks".into());
    }
    if owner.keys().any(|e| !g.has_edge(e.u, e.v)) {
        return Some("decomposition mentions a foreign edge".into());
    }
    for (i, a) in d.cycle_blocks.iter().enumerate() {
        for b in &d.cycle_blocks[i + 1..] {
            let shared: Vec<_> = a
                .vertices
                .iter()
                .filter(|v| b.vertices.binary_search(v).is_ok())
                .collect();
            match shared.as_slice() {
                [] => {}
                [v] if d.cut_vertices.binary_search(v).is_ok() => {}
                _ => return Some(format!("blocks share {shared:?}")),
            }
        }
    }
    None
}
