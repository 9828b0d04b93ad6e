//! Consistent suborientations of disjointness graphs.
//!
//! The vertices of the disjointness graph `KG_{a,b}` are the
//! `b`-subsets of `{0..a-1}`; edges join disjoint subsets. An
//! orientation of a subgraph is *consistent* when, for every ordered
//! arc pair `X -> Y`, `W -> Z`, if `X` meets `Z` then `Y` misses `W`.
//! Every valid `b`-fold `a`-coloring factors through such a
//! suborientation (take the distinct labels as vertices), and blowing
//! every color up into a block of `c` fresh colors embeds the result
//! into `KG_{ac,bc}`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::verify_coloring;
use crate::coloring::{BFoldColoring, ColorSet, ColoringError, Verdict, Violation, MAX_PALETTE};
use crate::graph::{GraphError, OrientedGraph};

/// An oriented graph whose vertices carry `subset_size`-subsets of
/// `{0..palette-1}`. Shape is validated on construction; the semantic
/// invariants are `verify_consistency`'s job.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConsistentSubOrientation {
    palette: u32,
    subset_size: u32,
    graph: OrientedGraph,
    sets: Vec<ColorSet>,
}

impl ConsistentSubOrientation {
    pub fn new(
        palette: u32,
        subset_size: u32,
        graph: OrientedGraph,
        sets: Vec<ColorSet>,
    ) -> Result<Self, ColoringError> {
        if palette > MAX_PALETTE {
            return Err(ColoringError::PaletteTooLarge { palette });
        }
        if subset_size == 0 || subset_size > palette {
            return Err(ColoringError::FoldOutOfRange {
                fold: subset_size,
                palette,
            });
        }
        if sets.len() != graph.vertex_count() {
            return Err(ColoringError::VertexCountMismatch {
                graph: graph.vertex_count(),
                coloring: sets.len(),
            });
        }
        Ok(ConsistentSubOrientation {
            palette,
            subset_size,
            graph,
            sets,
        })
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn subset_size(&self) -> u32 {
        self.subset_size
    }

    pub fn graph(&self) -> &OrientedGraph {
        &self.graph
    }

    pub fn set(&self, v: u32) -> ColorSet {
        self.sets[v as usize]
    }

    pub fn sets(&self) -> &[ColorSet] {
        &self.sets
    }

    /// The vertex sets viewed as a coloring of the underlying graph.
    pub fn as_coloring(&self) -> BFoldColoring {
        BFoldColoring::new(self.palette, self.subset_size, self.sets.clone())
            .expect("shape validated on construction")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConsistencyViolation {
    WrongCardinality {
        vertex: u32,
        expected: u32,
        got: u32,
    },
    ColorOutOfRange {
        vertex: u32,
        palette: u32,
    },
    /// Two vertices carry the same subset, so the graph does not embed
    /// into the disjointness graph.
    DuplicateVertexSets {
        first: u32,
        second: u32,
    },
    ArcEndpointsIntersect {
        arc: (u32, u32),
        shared: ColorSet,
    },
    ArcPairInconsistent {
        first: (u32, u32),
        second: (u32, u32),
        tail_head: ColorSet,
        head_tail: ColorSet,
    },
}

impl fmt::Display for ConsistencyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConsistencyViolation::WrongCardinality {
                vertex,
                expected,
                got,
            } => write!(f, "vertex {vertex}: subset has {got} colors, expected {expected}"),
            ConsistencyViolation::ColorOutOfRange { vertex, palette } => {
                write!(f, "vertex {vertex}: subset leaves the palette 0..{palette}")
            }
            ConsistencyViolation::DuplicateVertexSets { first, second } => {
                write!(f, "vertices {first} and {second} carry the same subset")
            }
            ConsistencyViolation::ArcEndpointsIntersect { arc, shared } => write!(
                f,
                "arc ({}, {}): subsets share {shared}",
                arc.0, arc.1
            ),
            ConsistencyViolation::ArcPairInconsistent {
                first,
                second,
                tail_head,
                head_tail,
            } => write!(
                f,
                "arcs ({}, {}) and ({}, {}): tail meets head in {tail_head} while head meets tail in {head_tail}",
                first.0, first.1, second.0, second.1
            ),
        }
    }
}

/// Checks that `s` really is a consistent suborientation of
/// `KG_{palette, subset_size}`: distinct subsets of the right size,
/// disjoint across every arc, and the ordered-pair condition. First
/// violation in scan order.
pub fn verify_consistency(s: &ConsistentSubOrientation) -> Verdict<ConsistencyViolation> {
    let sets = s.sets();
    for (v, set) in sets.iter().enumerate() {
        if set.len() != s.subset_size {
            return Verdict::Invalid(ConsistencyViolation::WrongCardinality {
                vertex: v as u32,
                expected: s.subset_size,
                got: set.len(),
            });
        }
        if set.max_color().is_some_and(|c| c >= s.palette) {
            return Verdict::Invalid(ConsistencyViolation::ColorOutOfRange {
                vertex: v as u32,
                palette: s.palette,
            });
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i] == sets[j] {
                return Verdict::Invalid(ConsistencyViolation::DuplicateVertexSets {
                    first: i as u32,
                    second: j as u32,
                });
            }
        }
    }
    match verify_coloring(&s.graph, &s.as_coloring()) {
        Ok(Verdict::Valid) => Verdict::Valid,
        Ok(Verdict::Invalid(Violation::ArcEndpointsIntersect { arc, shared })) => {
            Verdict::Invalid(ConsistencyViolation::ArcEndpointsIntersect { arc, shared })
        }
        Ok(Verdict::Invalid(Violation::ArcPairInconsistent {
            first,
            second,
            tail_head,
            head_tail,
        })) => Verdict::Invalid(ConsistencyViolation::ArcPairInconsistent {
            first,
            second,
            tail_head,
            head_tail,
        }),
        Err(_) => unreachable!("shape validated on construction"),
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExtractError {
    Coloring(ColoringError),
    /// The input coloring is not valid, so it induces no suborientation.
    NotValid(Violation),
    /// Quotient construction failed; cannot happen for valid colorings.
    Construction(GraphError),
}

impl fmt::Display for ExtractError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtractError::Coloring(e) => write!(f, "{e}"),
            ExtractError::NotValid(v) => write!(f, "coloring is not valid: {v}"),
            ExtractError::Construction(e) => write!(f, "label quotient is not oriented: {e}"),
        }
    }
}

impl core::error::Error for ExtractError {}

/// A suborientation together with the vertex-to-label map that
/// witnesses `g -> suborientation` as a homomorphism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Extraction {
    pub suborientation: ConsistentSubOrientation,
    pub label_map: Vec<u32>,
}

/// Quotients a valid coloring by its labels: vertices are the distinct
/// color sets (sorted by bit pattern), arcs are the images of arcs of
/// `g`. The result is consistent and the label map is a homomorphism.
pub fn extract_suborientation(
    g: &OrientedGraph,
    c: &BFoldColoring,
) -> Result<Extraction, ExtractError> {
    match verify_coloring(g, c).map_err(ExtractError::Coloring)? {
        Verdict::Valid => {}
        Verdict::Invalid(v) => return Err(ExtractError::NotValid(v)),
    }
    let mut labels: Vec<ColorSet> = c.sets().to_vec();
    labels.sort_unstable();
    labels.dedup();
    let index_of = |set: ColorSet| -> u32 {
        labels.binary_search(&set).expect("labels collected above") as u32
    };
    let label_map: Vec<u32> = c.sets().iter().map(|&s| index_of(s)).collect();
    let arcs: Vec<(u32, u32)> = {
        let mut arcs: Vec<(u32, u32)> = g
            .arcs()
            .iter()
            .map(|&(u, v)| (label_map[u as usize], label_map[v as usize]))
            .collect();
        arcs.sort_unstable();
        arcs.dedup();
        arcs
    };
    let graph = OrientedGraph::new(labels.len(), arcs)
        .map_err(ExtractError::Construction)?
        .with_labels(labels.iter().map(|s| s.to_string()).collect())
        .expect("one label per vertex");
    let suborientation = ConsistentSubOrientation::new(c.palette(), c.fold(), graph, labels)
        .expect("shape follows from the coloring invariants");
    Ok(Extraction {
        suborientation,
        label_map,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BlowUpError {
    ZeroFactor,
    PaletteTooLarge { palette: u64 },
}

impl fmt::Display for BlowUpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlowUpError::ZeroFactor => write!(f, "blow-up factor must be at least 1"),
            BlowUpError::PaletteTooLarge { palette } => {
                write!(
                    f,
                    "blown-up palette {palette} exceeds the supported maximum {MAX_PALETTE}"
                )
            }
        }
    }
}

impl core::error::Error for BlowUpError {}

/// Replaces each color `t` by the block `{t*factor .. t*factor+factor-1}`,
/// keeping the arc structure. Consistency is preserved: intersection
/// patterns between blocks mirror those between the original colors,
/// and iterating blow-ups composes (`factor` then `d` equals
/// `factor * d` on the nose).
pub fn blow_up(
    s: &ConsistentSubOrientation,
    factor: u32,
) -> Result<ConsistentSubOrientation, BlowUpError> {
    if factor == 0 {
        return Err(BlowUpError::ZeroFactor);
    }
    let palette = s.palette() as u64 * factor as u64;
    if palette > MAX_PALETTE as u64 {
        return Err(BlowUpError::PaletteTooLarge { palette });
    }
    let sets: Vec<ColorSet> = s
        .sets()
        .iter()
        .map(|set| {
            ColorSet::from_colors(set.iter().flat_map(|t| (t * factor)..(t * factor + factor)))
                .expect("palette bound checked above")
        })
        .collect();
    let graph = OrientedGraph::new(s.graph().vertex_count(), s.graph().arcs().iter().copied())
        .expect("arc structure unchanged")
        .with_labels(sets.iter().map(|s| format!("{s}")).collect())
        .expect("one label per vertex");
    Ok(
        ConsistentSubOrientation::new(palette as u32, s.subset_size() * factor, graph, sets)
            .expect("shape scales with the factor"),
    )
}
