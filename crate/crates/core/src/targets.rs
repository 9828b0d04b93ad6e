//! Circulant target graphs on consecutive-residue tuples, exhaustive
//! signed-neighborhood ("niceness") checking, and the accuracy-to-girth
//! report they support.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use crate::bitset::BitVecSet;
use crate::coloring::{BFoldColoring, ColorSet};
use crate::graph::OrientedGraph;
use crate::rational::Rational;
use crate::solver::{Meter, SearchBudget};

/// Largest supported level: level 3 already has 33 vertices of tuple
/// size 8, and level 4 would need a 65-color palette.
pub const MAX_LEVEL: u32 = 3;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TargetError {
    LevelTooLarge {
        level: u32,
        max: u32,
    },
    NonPositiveEpsilon {
        eps: Rational,
    },
    /// The requested accuracy needs a level beyond what 64-bit
    /// arithmetic in the report can express.
    EpsilonTooSmall {
        eps: Rational,
    },
}

impl fmt::Display for TargetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetError::LevelTooLarge { level, max } => {
                write!(f, "level {level} exceeds the supported maximum {max}")
            }
            TargetError::NonPositiveEpsilon { eps } => {
                write!(f, "accuracy {eps} must be positive")
            }
            TargetError::EpsilonTooSmall { eps } => {
                write!(f, "accuracy {eps} needs a level beyond 64-bit range")
            }
        }
    }
}

impl core::error::Error for TargetError {}

/// The level-l circulant target: n = 2^(l+2)+1 vertices, vertex i
/// carrying the tuple {i, ..., i+m-1} mod n with m = 2^l, and arcs
/// from i to i+m and i+m+1 mod n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TargetGraph {
    level: u32,
    tuple_size: u32,
    modulus: u32,
    graph: OrientedGraph,
    tuples: Vec<ColorSet>,
}

impl TargetGraph {
    pub fn level(&self) -> u32 {
        self.level
    }

    /// m = 2^level.
    pub fn tuple_size(&self) -> u32 {
        self.tuple_size
    }

    /// n = 4m + 1, the vertex count and the palette of the tuples.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn graph(&self) -> &OrientedGraph {
        &self.graph
    }

    pub fn tuples(&self) -> &[ColorSet] {
        &self.tuples
    }

    pub fn tuple(&self, i: u32) -> ColorSet {
        self.tuples[i as usize]
    }
}

pub fn build_target(level: u32) -> Result<TargetGraph, TargetError> {
    if level > MAX_LEVEL {
        return Err(TargetError::LevelTooLarge {
            level,
            max: MAX_LEVEL,
        });
    }
    let m = 1u32 << level;
    let n = 4 * m + 1;
    let tuples: Vec<ColorSet> = (0..n)
        .map(|i| ColorSet::from_bits((0..m).fold(0u64, |acc, j| acc | 1 << ((i + j) % n))))
        .collect();
    let arcs: Vec<(u32, u32)> = (0..n)
        .flat_map(|i| [(i, (i + m) % n), (i, (i + m + 1) % n)])
        .collect();
    let labels = tuples.iter().map(|t| t.to_string()).collect();
    let graph = OrientedGraph::new(n as usize, arcs)
        .expect("offsets m and m+1 never build loops or 2-cycles for n = 4m+1")
        .with_labels(labels)
        .expect("one label per vertex");
    Ok(TargetGraph {
        level,
        tuple_size: m,
        modulus: n,
        graph,
        tuples,
    })
}

/// The tuples themselves as a coloring of the target: m-fold, n colors,
/// ratio n/m = 4 + 1/2^level.
pub fn tuple_coloring(target: &TargetGraph) -> BFoldColoring {
    BFoldColoring::new(target.modulus, target.tuple_size, target.tuples.clone())
        .expect("tuples are m-subsets of the n-palette")
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A failed niceness instance: the signed neighborhood of `start`
/// under `alpha` reaches only `reached`, not every vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CounterExample {
    /// Sign vector, first entry outermost: the last entry is applied
    /// to `start` first.
    pub alpha: Vec<Sign>,
    pub start: u32,
    pub reached: Vec<u32>,
}

impl CounterExample {
    pub fn alpha_string(&self) -> String {
        self.alpha.iter().map(|s| format!("{s}")).collect()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NicenessOutcome {
    Nice,
    CounterExample(CounterExample),
    /// Budget spent before the sign tree was exhausted.
    Inconclusive,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NicenessReport {
    pub k: u32,
    pub outcome: NicenessOutcome,
}

impl NicenessReport {
    pub fn is_nice(&self) -> bool {
        matches!(self.outcome, NicenessOutcome::Nice)
    }
}

fn neighbor_rows(g: &OrientedGraph) -> (Vec<BitVecSet>, Vec<BitVecSet>) {
    let n = g.vertex_count();
    let mut out_rows = vec![BitVecSet::empty(n); n];
    let mut in_rows = vec![BitVecSet::empty(n); n];
    for &(u, v) in g.arcs() {
        out_rows[u as usize].insert(v as usize);
        in_rows[v as usize].insert(u as usize);
    }
    (out_rows, in_rows)
}

fn apply_sign(rows_for: &[BitVecSet], sets: &[BitVecSet], n: usize) -> Vec<BitVecSet> {
    sets.iter()
        .map(|set| {
            let mut next = BitVecSet::empty(n);
            for v in set.iter_ones() {
                next.union_with(&rows_for[v]);
            }
            next
        })
        .collect()
}

/// The vertices reachable from `start` under the sign vector `alpha`
/// (last entry applied first); the direct re-check for counterexamples.
pub fn signed_neighborhood(g: &OrientedGraph, alpha: &[Sign], start: u32) -> Vec<u32> {
    let n = g.vertex_count();
    let (out_rows, in_rows) = neighbor_rows(g);
    let mut current = BitVecSet::empty(n);
    current.insert(start as usize);
    for sign in alpha.iter().rev() {
        let rows = match sign {
            Sign::Plus => &out_rows,
            Sign::Minus => &in_rows,
        };
        let mut next = BitVecSet::empty(n);
        for v in current.iter_ones() {
            next.union_with(&rows[v]);
        }
        current = next;
    }
    current.iter_ones().map(|v| v as u32).collect()
}

enum Explore {
    Verified,
    Counter(CounterExample),
    OutOfBudget,
}

fn explore(
    out_rows: &[BitVecSet],
    in_rows: &[BitVecSet],
    k: u32,
    depth: u32,
    sets: &[BitVecSet],
    path: &mut Vec<Sign>,
    meter: &mut Meter<'_>,
) -> Explore {
    // Once every start reaches everything, a further signed step keeps
    // it that way (each vertex has an in- and an out-neighbor, checked
    // before the walk), so the whole subtree is verified.
    if sets.iter().all(|s| s.is_full()) {
        return Explore::Verified;
    }
    if depth == k {
        let (start, set) = sets
            .iter()
            .enumerate()
            .find(|(_, s)| !s.is_full())
            .expect("checked above");
        return Explore::Counter(CounterExample {
            alpha: path.iter().rev().copied().collect(),
            start: start as u32,
            reached: set.iter_ones().map(|v| v as u32).collect(),
        });
    }
    let n = out_rows.len();
    for sign in [Sign::Plus, Sign::Minus] {
        if !meter.tick() {
            return Explore::OutOfBudget;
        }
        let rows = match sign {
            Sign::Plus => out_rows,
            Sign::Minus => in_rows,
        };
        let next = apply_sign(rows, sets, n);
        path.push(sign);
        let walk = explore(out_rows, in_rows, k, depth + 1, &next, path, meter);
        path.pop();
        if !matches!(walk, Explore::Verified) {
            return walk;
        }
    }
    Explore::Verified
}

/// Exhaustively decides whether every signed k-step neighborhood of
/// every vertex covers the whole graph. Counterexamples are found in
/// depth-first order with `+` before `-`, so the reported one is the
/// lexicographically least along the outermost-first sign vector.
pub fn check_nice(g: &OrientedGraph, k: u32, budget: &SearchBudget) -> NicenessReport {
    let n = g.vertex_count();
    // A vertex missing an out-neighbor (or in-neighbor) empties under
    // any vector ending in + (or -); report that vector directly. This
    // also makes the saturation pruning in the walk sound.
    if k >= 1 {
        for v in 0..n as u32 {
            let sign = if g.out_neighbors(v).is_empty() {
                Some(Sign::Plus)
            } else if g.in_neighbors(v).is_empty() {
                Some(Sign::Minus)
            } else {
                None
            };
            if let Some(sign) = sign {
                return NicenessReport {
                    k,
                    outcome: NicenessOutcome::CounterExample(CounterExample {
                        alpha: vec![sign; k as usize],
                        start: v,
                        reached: Vec::new(),
                    }),
                };
            }
        }
    }
    let (out_rows, in_rows) = neighbor_rows(g);
    let sets: Vec<BitVecSet> = (0..n)
        .map(|v| {
            let mut s = BitVecSet::empty(n);
            s.insert(v);
            s
        })
        .collect();
    let mut meter = Meter::new(budget);
    let mut path = Vec::new();
    let outcome = match explore(&out_rows, &in_rows, k, 0, &sets, &mut path, &mut meter) {
        Explore::Verified => NicenessOutcome::Nice,
        Explore::Counter(cx) => NicenessOutcome::CounterExample(cx),
        Explore::OutOfBudget => NicenessOutcome::Inconclusive,
    };
    NicenessReport { k, outcome }
}

/// What a requested accuracy costs: the level, the target parameters,
/// the girth threshold 5n - 1, and the resulting bound 4 + 1/2^level.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EpsilonReport {
    pub eps: Rational,
    pub level: u32,
    pub tuple_size: u64,
    pub modulus: u64,
    pub girth_threshold: u64,
    pub bound: Rational,
}

/// The girth threshold is sufficient only granted the external result
/// that a planar oriented graph of girth at least 5k - 1 maps
/// homomorphically into every k-nice oriented graph; the report states
/// the consequence, it does not re-derive that result.
pub const EPSILON_NOTE: &str =
    "conditional on: planar oriented graphs of girth >= 5n-1 admit homomorphisms to n-nice targets";

pub fn epsilon_report(eps: Rational) -> Result<EpsilonReport, TargetError> {
    if eps <= Rational::from_integer(0) {
        return Err(TargetError::NonPositiveEpsilon { eps });
    }
    // Smallest level with 1/2^level <= eps = p/q, i.e. p * 2^level >= q.
    let (p, q) = (*eps.numer(), *eps.denom());
    let mut level: u32 = 0;
    while p.checked_mul(1i64 << level).is_none_or(|lhs| lhs < q) {
        level += 1;
        if level > 60 {
            return Err(TargetError::EpsilonTooSmall { eps });
        }
    }
    let m = 1u64 << level;
    let n = 4 * m + 1;
    Ok(EpsilonReport {
        eps,
        level,
        tuple_size: m,
        modulus: n,
        girth_threshold: 5 * n - 1,
        bound: Rational::new(n as i64, m as i64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;
    use crate::solver::{hom_exists, HomOutcome};

    #[test]
    fn structure_of_small_targets() {
        let t0 = build_target(0).unwrap();
        assert_eq!((t0.tuple_size(), t0.modulus()), (1, 5));
        assert_eq!(t0.graph().out_neighbors(0), &[1, 2]);
        assert_eq!(t0.tuple(0), ColorSet::from_colors([0]).unwrap());

        let t1 = build_target(1).unwrap();
        assert_eq!((t1.tuple_size(), t1.modulus()), (2, 9));
        assert_eq!(t1.graph().vertex_count(), 9);
        assert_eq!(t1.graph().out_neighbors(0), &[2, 3]);
        assert_eq!(t1.tuple(0), ColorSet::from_colors([0, 1]).unwrap());
        assert_eq!(t1.tuple(8), ColorSet::from_colors([8, 0]).unwrap());
        assert_eq!(t1.graph().label(0), Some("{0,1}"));

        let t2 = build_target(2).unwrap();
        assert_eq!((t2.tuple_size(), t2.modulus()), (4, 17));
        for i in 0..17 {
            assert_eq!(t2.tuple(i).len(), 4);
        }
        assert_eq!(
            build_target(4),
            Err(TargetError::LevelTooLarge { level: 4, max: 3 })
        );
    }

    #[test]
    fn degrees_and_disjoint_arc_tuples() {
        for level in 0..=MAX_LEVEL {
            let t = build_target(level).unwrap();
            let g = t.graph();
            for v in 0..g.vertex_count() as u32 {
                assert_eq!(g.out_neighbors(v).len(), 2, "level {level} v {v}");
                assert_eq!(g.in_neighbors(v).len(), 2, "level {level} v {v}");
            }
            for &(u, v) in g.arcs() {
                assert!(
                    !t.tuple(u).intersects(t.tuple(v)),
                    "level {level} arc {u}->{v}"
                );
            }
        }
    }

    #[test]
    fn tuple_colorings_are_valid_with_exact_ratios() {
        for (level, num, den) in [(0, 5, 1), (1, 9, 2), (2, 17, 4)] {
            let t = build_target(level).unwrap();
            let c = tuple_coloring(&t);
            assert!(
                verify_coloring(t.graph(), &c).unwrap().is_valid(),
                "level {level}"
            );
            assert_eq!(c.ratio(), Rational::new(num, den), "level {level}");
        }
    }

    #[test]
    fn consecutive_set_growth() {
        for level in 0..=2 {
            let t = build_target(level).unwrap();
            let g = t.graph();
            let n = g.vertex_count();
            for start in 0..n {
                for len in 1..=n {
                    let members: Vec<u32> = (0..len).map(|j| ((start + j) % n) as u32).collect();
                    let mut out: alloc::collections::BTreeSet<u32> = Default::default();
                    let mut inc: alloc::collections::BTreeSet<u32> = Default::default();
                    for &v in &members {
                        out.extend(g.out_neighbors(v).iter().copied());
                        inc.extend(g.in_neighbors(v).iter().copied());
                    }
                    let expect = if len < n { len + 1 } else { n };
                    assert_eq!(out.len(), expect, "level {level} start {start} len {len}");
                    assert_eq!(inc.len(), expect, "level {level} start {start} len {len}");
                }
            }
        }
    }

    #[test]
    fn girth_of_small_targets() {
        let girth = |level| build_target(level).unwrap().graph().girth();
        assert_eq!(girth(0), Some(3));
        assert_eq!(girth(1), Some(3));
        assert_eq!(girth(2), Some(4));
    }

    #[test]
    fn small_targets_are_nice_at_their_modulus() {
        let budget = SearchBudget::default();
        for level in 0..=2 {
            let t = build_target(level).unwrap();
            let report = check_nice(t.graph(), t.modulus(), &budget);
            assert!(report.is_nice(), "level {level}: {:?}", report.outcome);
        }
    }

    #[test]
    fn directed_triangle_is_never_nice() {
        let c3 = OrientedGraph::directed_cycle(3).unwrap();
        for k in 1..=4 {
            let report = check_nice(&c3, k, &SearchBudget::default());
            let NicenessOutcome::CounterExample(cx) = &report.outcome else {
                panic!("expected a counterexample at k = {k}");
            };
            assert_eq!(cx.reached.len(), 1, "one step reaches one vertex");
            assert_eq!(signed_neighborhood(&c3, &cx.alpha, cx.start), cx.reached);
        }
        let first = check_nice(&c3, 2, &SearchBudget::default());
        let NicenessOutcome::CounterExample(cx) = first.outcome else {
            panic!()
        };
        assert_eq!((cx.alpha_string().as_str(), cx.start), ("++", 0));
        assert_eq!(cx.reached, vec![2]);
    }

    #[test]
    fn degree_deficient_vertices_fail_immediately() {
        let g = OrientedGraph::new(2, [(0, 1)]).unwrap();
        let report = check_nice(&g, 3, &SearchBudget::default());
        let NicenessOutcome::CounterExample(cx) = report.outcome else {
            panic!("a path is not nice")
        };
        assert_eq!(cx.alpha, vec![Sign::Minus; 3]);
        assert_eq!(cx.start, 0);
        assert!(cx.reached.is_empty());
        assert_eq!(signed_neighborhood(&g, &cx.alpha, cx.start), cx.reached);
    }

    #[test]
    fn spent_budget_is_inconclusive() {
        let t1 = build_target(1).unwrap();
        let report = check_nice(t1.graph(), 9, &SearchBudget::with_max_nodes(1));
        assert_eq!(report.outcome, NicenessOutcome::Inconclusive);
    }

    #[test]
    fn cycles_map_into_their_targets() {
        let budget = SearchBudget::default();
        for (level, r) in [(0u32, 10usize), (1, 20)] {
            let t = build_target(level).unwrap();
            let c = OrientedGraph::directed_cycle(r).unwrap();
            assert!(
                matches!(hom_exists(&c, t.graph(), &budget), HomOutcome::Exists(_)),
                "C_{r} into level {level}"
            );
        }
    }

    #[test]
    fn epsilon_reports() {
        let frozen = [
            ((1, 1), 0u32, 5u64, 24u64, (5, 1)),
            ((1, 2), 1, 9, 44, (9, 2)),
            ((1, 4), 2, 17, 84, (17, 4)),
            ((2, 3), 1, 9, 44, (9, 2)),
            ((3, 1), 0, 5, 24, (5, 1)),
        ];
        for ((p, q), level, n, girth, (bn, bd)) in frozen {
            let r = epsilon_report(Rational::new(p, q)).unwrap();
            assert_eq!(r.level, level, "eps {p}/{q}");
            assert_eq!(r.modulus, n);
            assert_eq!(r.girth_threshold, girth);
            assert_eq!(r.bound, Rational::new(bn, bd));
            assert!(r.bound <= Rational::from_integer(4) + Rational::new(p, q));
        }
        assert!(matches!(
            epsilon_report(Rational::from_integer(0)),
            Err(TargetError::NonPositiveEpsilon { .. })
        ));
        assert!(matches!(
            epsilon_report(Rational::new(-1, 2)),
            Err(TargetError::NonPositiveEpsilon { .. })
        ));
    }
}
