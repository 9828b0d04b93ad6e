//! The augmented adjacency relation and the two bounds it carries.
//!
//! Two vertices are *related* when they are adjacent (either direction)
//! or joined by a directed 2-path (either direction). A set that is
//! pairwise related is a relative clique and forces pairwise-disjoint
//! color sets, so its size bounds every coloring ratio from below; a set
//! that is pairwise unrelated can share one color, giving the counting
//! bound `|V| / alpha`.

use alloc::vec::Vec;

use crate::bitset::BitVecSet;
use crate::graph::OrientedGraph;

/// The symmetric relation "adjacent or joined by a directed 2-path".
pub struct AugmentedAdjacency<'g> {
    graph: &'g OrientedGraph,
    rows: Vec<BitVecSet>,
}

/// Builds the relation rows for `g`. Building twice yields equal rows.
pub fn augment(g: &OrientedGraph) -> AugmentedAdjacency<'_> {
    let n = g.vertex_count();
    let mut rows: Vec<BitVecSet> = (0..n).map(|_| BitVecSet::empty(n)).collect();
    let mut relate = |x: u32, y: u32| {
        rows[x as usize].insert(y as usize);
        rows[y as usize].insert(x as usize);
    };
    for &(u, v) in g.arcs() {
        relate(u, v);
    }
    for w in 0..n as u32 {
        for &a in g.in_neighbors(w) {
            for &b in g.out_neighbors(w) {
                if a != b {
                    relate(a, b);
                }
            }
        }
    }
    AugmentedAdjacency { graph: g, rows }
}

impl<'g> AugmentedAdjacency<'g> {
    pub fn graph(&self) -> &'g OrientedGraph {
        self.graph
    }

    pub fn related(&self, x: u32, y: u32) -> bool {
        self.rows[x as usize].contains(y as usize)
    }

    /// Vertices related to `x`, sorted.
    pub fn related_vertices(&self, x: u32) -> Vec<u32> {
        self.rows[x as usize]
            .iter_ones()
            .map(|v| v as u32)
            .collect()
    }

    pub(crate) fn rows(&self) -> &[BitVecSet] {
        &self.rows
    }
}

/// Direct check against the definition, bypassing the relation rows:
/// every pair in `set` must be adjacent or joined by a directed 2-path.
pub fn is_relative_clique(g: &OrientedGraph, set: &[u32]) -> bool {
    pairwise(set, |x, y| related_directly(g, x, y))
}

/// Direct check: no pair in `set` is adjacent or 2-dipath-joined.
pub fn is_oriented_independent_set(g: &OrientedGraph, set: &[u32]) -> bool {
    pairwise(set, |x, y| !related_directly(g, x, y))
}

fn pairwise(set: &[u32], mut ok: impl FnMut(u32, u32) -> bool) -> bool {
    for (i, &x) in set.iter().enumerate() {
        for &y in &set[i + 1..] {
            if x == y || !ok(x, y) {
                return false;
            }
        }
    }
    true
}

fn related_directly(g: &OrientedGraph, x: u32, y: u32) -> bool {
    if g.has_arc(x, y) || g.has_arc(y, x) {
        return true;
    }
    let dipath = |a: u32, b: u32| g.out_neighbors(a).iter().any(|&w| g.has_arc(w, b));
    dipath(x, y) || dipath(y, x)
}

/// Size and witness of a maximum relative clique (maximum clique of the
/// augmented relation). Exact branch and bound; deterministic witness.
pub fn omega_ro(g: &OrientedGraph) -> (usize, Vec<u32>) {
    let aug = augment(g);
    max_clique(aug.rows(), g.vertex_count())
}

/// Size and witness of a maximum oriented independent set (independent
/// in the augmented relation).
pub fn alpha_o(g: &OrientedGraph) -> (usize, Vec<u32>) {
    let aug = augment(g);
    let rows: Vec<BitVecSet> = aug
        .rows()
        .iter()
        .enumerate()
        .map(|(v, row)| {
            let mut c = row.complement();
            c.remove(v);
            c
        })
        .collect();
    max_clique(&rows, g.vertex_count())
}

fn max_clique(rows: &[BitVecSet], n: usize) -> (usize, Vec<u32>) {
    let mut best: Vec<u32> = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    let mut candidates = BitVecSet::full(n);
    expand(rows, &mut current, &mut candidates, &mut best);
    (best.len(), best)
}

fn expand(
    rows: &[BitVecSet],
    current: &mut Vec<u32>,
    candidates: &mut BitVecSet,
    best: &mut Vec<u32>,
) {
    while let Some(v) = candidates.first() {
        if current.len() + candidates.count() <= best.len() {
            return;
        }
        candidates.remove(v);
        current.push(v as u32);
        let mut next = candidates.clone();
        next.intersect_with(&rows[v]);
        if current.len() > best.len() {
            *best = current.clone();
        }
        expand(rows, current, &mut next, best);
        current.pop();
    }
}
