//! Set-valued colorings and the two-condition verifier.
//!
//! A `b`-fold `k`-coloring assigns each vertex a `b`-subset of
//! `{0..k-1}` such that (i) the two endpoints of an arc get disjoint
//! sets, and (ii) for every ordered pair of arcs `x -> y`, `z -> w`,
//! if `f(x)` meets `f(w)` then `f(y)` misses `f(z)`. Condition (ii)
//! ranges over all ordered pairs, including pairs sharing a vertex, so
//! vertices joined by a directed 2-path also get disjoint sets.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::OrientedGraph;
use crate::rational::Rational;

/// Largest supported palette; color sets are single machine words.
pub const MAX_PALETTE: u32 = 64;

/// A subset of the palette `{0..63}` as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn from_bits(bits: u64) -> ColorSet {
        ColorSet(bits)
    }

    /// Collects colors; each must be below `MAX_PALETTE`.
    pub fn from_colors(colors: impl IntoIterator<Item = u32>) -> Option<ColorSet> {
        let mut bits = 0u64;
        for c in colors {
            if c >= MAX_PALETTE {
                return None;
            }
            bits |= 1 << c;
        }
        Some(ColorSet(bits))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, color: u32) -> bool {
        color < MAX_PALETTE && self.0 >> color & 1 == 1
    }

    pub fn intersects(self, other: ColorSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    /// Colors of the palette `{0..k-1}` not in `self`.
    pub fn complement_in(self, k: u32) -> ColorSet {
        ColorSet(palette_mask(k) & !self.0)
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        core::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let c = rest.trailing_zeros();
                rest &= rest - 1;
                Some(c)
            }
        })
    }

    pub fn max_color(self) -> Option<u32> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }
}

/// All ones on `{0..k-1}`; `k <= 64`.
pub fn palette_mask(k: u32) -> u64 {
    debug_assert!(k <= MAX_PALETTE);
    if k == 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ColoringError {
    PaletteTooLarge {
        palette: u32,
    },
    FoldOutOfRange {
        fold: u32,
        palette: u32,
    },
    WrongCardinality {
        vertex: u32,
        expected: u32,
        got: u32,
    },
    ColorOutOfRange {
        vertex: u32,
        color: u32,
        palette: u32,
    },
    VertexCountMismatch {
        graph: usize,
        coloring: usize,
    },
    MapOutOfRange {
        vertex: u32,
        image: u32,
        vertex_count: usize,
    },
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::PaletteTooLarge { palette } => {
                write!(
                    f,
                    "palette {palette} exceeds the supported maximum {MAX_PALETTE}"
                )
            }
            ColoringError::FoldOutOfRange { fold, palette } => {
                write!(
                    f,
                    "fold {fold} must satisfy 1 <= fold <= palette ({palette})"
                )
            }
            ColoringError::WrongCardinality {
                vertex,
                expected,
                got,
            } => write!(
                f,
                "vertex {vertex}: set has {got} colors, expected {expected}"
            ),
            ColoringError::ColorOutOfRange {
                vertex,
                color,
                palette,
            } => write!(
                f,
                "vertex {vertex}: color {color} outside palette 0..{palette}"
            ),
            ColoringError::VertexCountMismatch { graph, coloring } => {
                write!(f, "coloring covers {coloring} vertices, graph has {graph}")
            }
            ColoringError::MapOutOfRange {
                vertex,
                image,
                vertex_count,
            } => write!(
                f,
                "vertex {vertex} maps to {image}, outside 0..{vertex_count}"
            ),
        }
    }
}

impl core::error::Error for ColoringError {}

/// A validated assignment of `fold`-subsets of `{0..palette-1}`, one per
/// vertex. Construction enforces the shape invariants; semantic validity
/// against a graph is `verify_coloring`'s job.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BFoldColoring {
    palette: u32,
    fold: u32,
    sets: Vec<ColorSet>,
}

impl BFoldColoring {
    pub fn new(palette: u32, fold: u32, sets: Vec<ColorSet>) -> Result<Self, ColoringError> {
        if palette > MAX_PALETTE {
            return Err(ColoringError::PaletteTooLarge { palette });
        }
        if fold == 0 || fold > palette {
            return Err(ColoringError::FoldOutOfRange { fold, palette });
        }
        for (v, set) in sets.iter().enumerate() {
            if set.len() != fold {
                return Err(ColoringError::WrongCardinality {
                    vertex: v as u32,
                    expected: fold,
                    got: set.len(),
                });
            }
            if let Some(c) = set.max_color() {
                if c >= palette {
                    return Err(ColoringError::ColorOutOfRange {
                        vertex: v as u32,
                        color: c,
                        palette,
                    });
                }
            }
        }
        Ok(BFoldColoring {
            palette,
            fold,
            sets,
        })
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn fold(&self) -> u32 {
        self.fold
    }

    pub fn vertex_count(&self) -> usize {
        self.sets.len()
    }

    pub fn set(&self, v: u32) -> ColorSet {
        self.sets[v as usize]
    }

    pub fn sets(&self) -> &[ColorSet] {
        &self.sets
    }

    /// `palette / fold`, reduced.
    pub fn ratio(&self) -> Rational {
        Rational::new(self.palette as i64, self.fold as i64)
    }

    /// Pulls the coloring back along a vertex map `phi: G -> H` (this
    /// coloring lives on `H`): vertex `v` of `G` receives the set of
    /// `phi(v)`. If `phi` is a homomorphism and this coloring is valid
    /// on `H`, the result is valid on `G`.
    pub fn pull_back(&self, phi: &[u32]) -> Result<BFoldColoring, ColoringError> {
        let mut sets = Vec::with_capacity(phi.len());
        for (v, &image) in phi.iter().enumerate() {
            if image as usize >= self.sets.len() {
                return Err(ColoringError::MapOutOfRange {
                    vertex: v as u32,
                    image,
                    vertex_count: self.sets.len(),
                });
            }
            sets.push(self.sets[image as usize]);
        }
        BFoldColoring::new(self.palette, self.fold, sets)
    }
}

/// Outcome of a semantic check: either valid or a first violation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict<V> {
    Valid,
    Invalid(V),
}

impl<V> Verdict<V> {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violation(&self) -> Option<&V> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(v) => Some(v),
        }
    }
}

/// First violation found, in a fixed scan order: all arcs for condition
/// (i), then all ordered arc pairs, lexicographically, for condition (ii).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// An arc whose endpoint sets intersect.
    ArcEndpointsIntersect { arc: (u32, u32), shared: ColorSet },
    /// Ordered arc pair `x -> y`, `z -> w` with `f(x)` meeting `f(w)`
    /// and `f(y)` meeting `f(z)`.
    ArcPairInconsistent {
        first: (u32, u32),
        second: (u32, u32),
        tail_head: ColorSet,
        head_tail: ColorSet,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ArcEndpointsIntersect { arc, shared } => write!(
                f,
                "arc ({}, {}): endpoint sets share {shared}",
                arc.0, arc.1
            ),
            Violation::ArcPairInconsistent {
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

/// Checks conditions (i) and (ii) by scanning every arc and every
/// ordered arc pair. Reports are deterministic: the first violation in
/// scan order.
pub fn verify_coloring(
    g: &OrientedGraph,
    c: &BFoldColoring,
) -> Result<Verdict<Violation>, ColoringError> {
    if c.vertex_count() != g.vertex_count() {
        return Err(ColoringError::VertexCountMismatch {
            graph: g.vertex_count(),
            coloring: c.vertex_count(),
        });
    }
    let sets = c.sets();
    for &(u, v) in g.arcs() {
        let shared = sets[u as usize].intersection(sets[v as usize]);
        if !shared.is_empty() {
            return Ok(Verdict::Invalid(Violation::ArcEndpointsIntersect {
                arc: (u, v),
                shared,
            }));
        }
    }
    for &(x, y) in g.arcs() {
        for &(z, w) in g.arcs() {
            let tail_head = sets[x as usize].intersection(sets[w as usize]);
            if tail_head.is_empty() {
                continue;
            }
            let head_tail = sets[y as usize].intersection(sets[z as usize]);
            if !head_tail.is_empty() {
                return Ok(Verdict::Invalid(Violation::ArcPairInconsistent {
                    first: (x, y),
                    second: (z, w),
                    tail_head,
                    head_tail,
                }));
            }
        }
    }
    Ok(Verdict::Valid)
}
