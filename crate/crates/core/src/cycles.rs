//! Exact fractional values for directed cycles: prime classification,
//! the beta correction term, the explicit coloring attaining it, and a
//! structure analyzer for colorings with ratio below four.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::{palette_mask, verify_coloring, BFoldColoring, ColorSet};
use crate::graph::OrientedGraph;
use crate::rational::Rational;

/// Residue class mod 4 of a prime greater than 3.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PrimeType {
    /// p = 3 (mod 4); contributes the correction 4/(p+1).
    A,
    /// p = 1 (mod 4); contributes nothing.
    B,
}

impl fmt::Display for PrimeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrimeType::A => "type-A",
            PrimeType::B => "type-B",
        })
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Classifies a prime greater than 3 by its residue mod 4; `None` for
/// 2, 3, and composites.
pub fn classify_prime(p: u64) -> Option<PrimeType> {
    if p <= 3 || !is_prime(p) {
        return None;
    }
    match p % 4 {
        3 => Some(PrimeType::A),
        1 => Some(PrimeType::B),
        _ => unreachable!("odd primes are 1 or 3 mod 4"),
    }
}

/// Distinct prime factors, ascending, by trial division.
fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut factors = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            factors.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    factors
}

fn least_type_a_factor(r: u64) -> Option<u64> {
    distinct_prime_factors(r)
        .into_iter()
        .find(|&p| classify_prime(p) == Some(PrimeType::A))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CycleError {
    CycleTooShort { r: u64, min: u64 },
    DivisibleByThree { r: u64 },
    NoTypeAFactor { r: u64 },
}

impl fmt::Display for CycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleError::CycleTooShort { r, min } => {
                write!(f, "cycle length {r} is below the minimum {min}")
            }
            CycleError::DivisibleByThree { r } => {
                write!(f, "cycle length {r} is divisible by 3")
            }
            CycleError::NoTypeAFactor { r } => {
                write!(f, "{r} has no prime factor p > 3 with p = 3 (mod 4)")
            }
        }
    }
}

impl core::error::Error for CycleError {}

/// The correction term for a cycle length: 4/(p+1) for the least
/// type-A prime factor p, or 0 when there is none.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BetaValue {
    pub r: u64,
    pub value: Rational,
    /// The least type-A prime factor, when one exists.
    pub witness: Option<u64>,
}

pub fn beta(r: u64) -> Result<BetaValue, CycleError> {
    if r <= 5 {
        return Err(CycleError::CycleTooShort { r, min: 6 });
    }
    Ok(match least_type_a_factor(r) {
        Some(p) => BetaValue {
            r,
            value: Rational::new(4, p as i64 + 1),
            witness: Some(p),
        },
        None => BetaValue {
            r,
            value: Rational::from_integer(0),
            witness: None,
        },
    })
}

/// Which case of the closed form applies to a cycle length.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CycleCase {
    DivisibleByThree,
    FourCycle,
    FiveCycle,
    /// Least type-A prime factor p; value 4 - 4/(p+1).
    TypeAFactor {
        p: u64,
    },
    /// No type-A factor; value exactly 4.
    NoTypeAFactor,
}

impl fmt::Display for CycleCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleCase::DivisibleByThree => f.write_str("r = 0 (mod 3)"),
            CycleCase::FourCycle => f.write_str("r = 4"),
            CycleCase::FiveCycle => f.write_str("r = 5"),
            CycleCase::TypeAFactor { p } => write!(f, "least type-A prime factor {p}"),
            CycleCase::NoTypeAFactor => f.write_str("no type-A prime factor"),
        }
    }
}

/// The fractional oriented chromatic number of the directed cycle
/// C_r, with the case that produced it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CycleValue {
    pub r: u64,
    pub case: CycleCase,
    pub value: Rational,
}

/// Closed form: 3 when 3 | r; 4 for r = 4; 5 for r = 5; otherwise
/// 4 - beta(r).
pub fn chi_star(r: u64) -> Result<CycleValue, CycleError> {
    if r < 3 {
        return Err(CycleError::CycleTooShort { r, min: 3 });
    }
    let (case, value) = if r.is_multiple_of(3) {
        (CycleCase::DivisibleByThree, Rational::from_integer(3))
    } else if r == 4 {
        (CycleCase::FourCycle, Rational::from_integer(4))
    } else if r == 5 {
        (CycleCase::FiveCycle, Rational::from_integer(5))
    } else {
        match least_type_a_factor(r) {
            Some(p) => (
                CycleCase::TypeAFactor { p },
                Rational::new(4 * p as i64, p as i64 + 1),
            ),
            None => (CycleCase::NoTypeAFactor, Rational::from_integer(4)),
        }
    };
    Ok(CycleValue { r, case, value })
}

/// The explicit coloring attaining 4 - beta(r) on C_r when r has a
/// type-A prime factor p = 4k - 1: a k-fold p-coloring where vertex
/// x = i (mod p) receives {i*k, ..., i*k+k-1} reduced mod p.
pub fn construct_type_a_coloring(r: usize) -> Result<BFoldColoring, CycleError> {
    let rn = r as u64;
    if rn <= 5 {
        return Err(CycleError::CycleTooShort { r: rn, min: 6 });
    }
    if rn.is_multiple_of(3) {
        return Err(CycleError::DivisibleByThree { r: rn });
    }
    let p = least_type_a_factor(rn).ok_or(CycleError::NoTypeAFactor { r: rn })?;
    let k = (p + 1) / 4;
    let sets = (0..r)
        .map(|x| {
            let i = (x as u64 % p) * k;
            ColorSet::from_bits((0..k).fold(0u64, |acc, j| acc | 1 << ((i + j) % p)))
        })
        .collect();
    Ok(BFoldColoring::new(p as u32, k as u32, sets).expect("k-subsets of a p-palette"))
}

/// Which of the four base sets a label meets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Pattern {
    pub meets_a: bool,
    pub meets_b: bool,
    pub meets_c: bool,
    pub meets_d: bool,
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (met, name) in [
            (self.meets_a, 'A'),
            (self.meets_b, 'B'),
            (self.meets_c, 'C'),
            (self.meets_d, 'D'),
        ] {
            if met {
                write!(f, "{name}")?;
                any = true;
            }
        }
        if !any {
            f.write_str("-")?;
        }
        Ok(())
    }
}

/// One block of the decomposition; `start` is a position in the
/// rotated frame.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Block {
    /// Patterns (A, B, C) with D free: three labels.
    Triple { start: u32 },
    /// Patterns (A, AB, BC, C) with D free: four labels.
    Quad { start: u32 },
}

#[allow(clippy::len_without_is_empty)] // a block is never empty
impl Block {
    pub fn start(&self) -> u32 {
        match *self {
            Block::Triple { start } | Block::Quad { start } => start,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Block::Triple { .. } => 3,
            Block::Quad { .. } => 4,
        }
    }

    pub fn is_triple(&self) -> bool {
        matches!(self, Block::Triple { .. })
    }
}

/// The intersection matrix of the labels: entry (i, j) is set exactly
/// when labels i and j share a color (so the diagonal is all ones).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TMatrix {
    rows: Vec<Vec<bool>>,
}

impl TMatrix {
    fn from_labels(labels: &[ColorSet]) -> Self {
        let rows = labels
            .iter()
            .map(|a| labels.iter().map(|b| a.intersects(*b)).collect())
            .collect();
        TMatrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i][j]
    }

    pub fn row_string(&self, i: usize) -> String {
        self.rows[i]
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }

    /// First (row, col) where the next row is not the cyclic
    /// right-shift of this one.
    fn shift_defect(&self) -> Option<(usize, usize)> {
        let n = self.size();
        for i in 0..n {
            for j in 0..n {
                if self.rows[i][j] != self.rows[(i + 1) % n][(j + 1) % n] {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

impl fmt::Display for TMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size() {
            if i > 0 {
                f.write_str("\n")?;
            }
            f.write_str(&self.row_string(i))?;
        }
        Ok(())
    }
}

/// An invariant of the block decomposition that failed to hold. Any of
/// these on a verifier-valid coloring with ratio below four signals a
/// bug and must be treated as loud failure, not skipped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StructureDefect {
    /// No rotation admits a tiling by triples and quads.
    NoBlockDecomposition { r: u64 },
    /// Block `block` is a triple and so is its successor.
    ConsecutiveTriples { block: usize },
    /// The quad runs between successive triples are not all equal.
    UnequalSeparation { separations: Vec<usize> },
    /// r != (4q+3) * t for the observed q and t.
    LengthMismatch { r: u64, q: usize, t: usize },
    /// Row `row+1` of the T-matrix is not the right-shift of row `row`.
    ShiftViolation { row: usize, col: usize },
}

impl fmt::Display for StructureDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureDefect::NoBlockDecomposition { r } => {
                write!(
                    f,
                    "no rotation of the {r} labels tiles into triples and quads"
                )
            }
            StructureDefect::ConsecutiveTriples { block } => {
                write!(
                    f,
                    "triple at block index {block} is followed by another triple"
                )
            }
            StructureDefect::UnequalSeparation { separations } => {
                write!(f, "unequal quad runs between triples: {separations:?}")
            }
            StructureDefect::LengthMismatch { r, q, t } => {
                write!(
                    f,
                    "r = {r} but (4q+3)t = {} with q = {q}, t = {t}",
                    (4 * q + 3) * t
                )
            }
            StructureDefect::ShiftViolation { row, col } => {
                write!(f, "T[{},{}] differs from T[{row},{col}]", row + 1, col + 1)
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MiserError {
    CycleTooShort {
        r: u64,
        min: u64,
    },
    /// The decomposition only exists when r is not a multiple of 3.
    DivisibleByThree {
        r: u64,
    },
    /// Ratio k/b is not below 4.
    NotMiser {
        fold: u32,
        palette: u32,
    },
    InvalidColoring {
        detail: String,
    },
    Defect(StructureDefect),
}

impl fmt::Display for MiserError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MiserError::CycleTooShort { r, min } => {
                write!(f, "cycle length {r} is below the minimum {min}")
            }
            MiserError::DivisibleByThree { r } => {
                write!(
                    f,
                    "cycle length {r} is divisible by 3; the decomposition does not apply"
                )
            }
            MiserError::NotMiser { fold, palette } => {
                write!(f, "ratio {palette}/{fold} is not below 4")
            }
            MiserError::InvalidColoring { detail } => {
                write!(f, "not a valid coloring of the cycle: {detail}")
            }
            MiserError::Defect(d) => write!(f, "structure defect: {d}"),
        }
    }
}

impl core::error::Error for MiserError {}

/// The full decomposition of a sub-ratio-4 cycle coloring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MiserStructure {
    /// Vertex index the analysis starts from; positions below are
    /// relative to it.
    pub rotation: usize,
    /// Base sets A, B, C (the first three labels) and D (the rest of
    /// the palette).
    pub base: [ColorSet; 4],
    /// Per-position classification against the base sets.
    pub patterns: Vec<Pattern>,
    /// The tiling into triples and quads, in position order.
    pub blocks: Vec<Block>,
    /// Number of triples (t).
    pub triple_count: usize,
    /// Quads between successive triples (q), constant by assertion.
    pub quads_between: usize,
    pub t_matrix: TMatrix,
}

fn classify(label: ColorSet, base: &[ColorSet; 4]) -> Pattern {
    Pattern {
        meets_a: label.intersects(base[0]),
        meets_b: label.intersects(base[1]),
        meets_c: label.intersects(base[2]),
        meets_d: label.intersects(base[3]),
    }
}

/// Tiles the rotated pattern sequence into triples and quads, start to
/// end with no wrap-around; `None` if any position breaks the shape.
fn scan_blocks(patterns: &[Pattern]) -> Option<Vec<Block>> {
    let r = patterns.len();
    let mut blocks = Vec::new();
    let mut pos = 0;
    while pos < r {
        let p0 = patterns[pos];
        if !p0.meets_a || p0.meets_b || p0.meets_c {
            return None;
        }
        let p1 = *patterns.get(pos + 1)?;
        if !p1.meets_b || p1.meets_c {
            return None;
        }
        let p2 = *patterns.get(pos + 2)?;
        if p2.meets_a || !p2.meets_c {
            return None;
        }
        if p2.meets_b {
            // Quad: the second label must also meet A, and a fourth
            // label of shape C closes the block.
            if !p1.meets_a {
                return None;
            }
            let p3 = *patterns.get(pos + 3)?;
            if p3.meets_a || p3.meets_b || !p3.meets_c {
                return None;
            }
            blocks.push(Block::Quad { start: pos as u32 });
            pos += 4;
        } else {
            blocks.push(Block::Triple { start: pos as u32 });
            pos += 3;
        }
    }
    Some(blocks)
}

/// Decomposes a valid coloring of C_r with ratio below 4 into triples
/// and quads and asserts every structural invariant: exact tiling, no
/// consecutive triples, constant quad separation q with r = (4q+3)t,
/// and the cyclic-shift property of the intersection matrix. Requires
/// r > 5 and r not a multiple of 3. Each invariant failure is reported
/// as its own defect; none is ever skipped.
/// A decomposing rotation: (rotation, base sets, patterns, blocks).
type Frame = (usize, [ColorSet; 4], Vec<Pattern>, Vec<Block>);

pub fn analyze_miser(r: usize, c: &BFoldColoring) -> Result<MiserStructure, MiserError> {
    let rn = r as u64;
    if r <= 5 {
        return Err(MiserError::CycleTooShort { r: rn, min: 6 });
    }
    if r.is_multiple_of(3) {
        return Err(MiserError::DivisibleByThree { r: rn });
    }
    if c.palette() >= 4 * c.fold() {
        return Err(MiserError::NotMiser {
            fold: c.fold(),
            palette: c.palette(),
        });
    }
    let cycle = OrientedGraph::directed_cycle(r).expect("r > 5");
    match verify_coloring(&cycle, c) {
        Ok(v) if v.is_valid() => {}
        Ok(v) => {
            return Err(MiserError::InvalidColoring {
                detail: format!("{}", v.violation().expect("not valid")),
            })
        }
        Err(e) => {
            return Err(MiserError::InvalidColoring {
                detail: format!("{e}"),
            })
        }
    }

    let sets = c.sets();
    let mut chosen: Option<Frame> = None;
    for rotation in 0..r {
        let label = |i: usize| sets[(rotation + i) % r];
        let (a, b, cc) = (label(0), label(1), label(2));
        if a.intersects(b) || a.intersects(cc) || b.intersects(cc) {
            continue;
        }
        let d = ColorSet::from_bits(palette_mask(c.palette()) & !(a.bits() | b.bits() | cc.bits()));
        let base = [a, b, cc, d];
        let patterns: Vec<Pattern> = (0..r).map(|i| classify(label(i), &base)).collect();
        if let Some(blocks) = scan_blocks(&patterns) {
            chosen = Some((rotation, base, patterns, blocks));
            break;
        }
    }
    let Some((rotation, base, patterns, blocks)) = chosen else {
        return Err(MiserError::Defect(StructureDefect::NoBlockDecomposition {
            r: rn,
        }));
    };

    let triples: Vec<usize> = blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| b.is_triple())
        .map(|(i, _)| i)
        .collect();
    let t = triples.len();
    debug_assert!(t >= 1, "the base rotation starts with a triple");
    // Circular gaps: quads strictly between each triple and the next
    // (for a single triple, the wrap back to itself).
    let separations: Vec<usize> = (0..t)
        .map(|i| {
            let here = triples[i];
            let next = triples[(i + 1) % t];
            let dist = (next + blocks.len() - here) % blocks.len();
            let dist = if dist == 0 { blocks.len() } else { dist };
            dist - 1
        })
        .collect();
    if let Some(i) = separations.iter().position(|&g| g == 0) {
        return Err(MiserError::Defect(StructureDefect::ConsecutiveTriples {
            block: triples[i],
        }));
    }
    if separations.windows(2).any(|w| w[0] != w[1]) {
        return Err(MiserError::Defect(StructureDefect::UnequalSeparation {
            separations,
        }));
    }
    let q = separations[0];
    if rn != ((4 * q + 3) * t) as u64 {
        return Err(MiserError::Defect(StructureDefect::LengthMismatch {
            r: rn,
            q,
            t,
        }));
    }
    let rotated: Vec<ColorSet> = (0..r).map(|i| sets[(rotation + i) % r]).collect();
    let t_matrix = TMatrix::from_labels(&rotated);
    if let Some((row, col)) = t_matrix.shift_defect() {
        return Err(MiserError::Defect(StructureDefect::ShiftViolation {
            row,
            col,
        }));
    }
    Ok(MiserStructure {
        rotation,
        base,
        patterns,
        blocks,
        triple_count: t,
        quads_between: q,
        t_matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::tests::reference_c7_coloring;

    #[test]
    fn prime_classification() {
        assert_eq!(classify_prime(7), Some(PrimeType::A));
        assert_eq!(classify_prime(11), Some(PrimeType::A));
        assert_eq!(classify_prime(19), Some(PrimeType::A));
        assert_eq!(classify_prime(5), Some(PrimeType::B));
        assert_eq!(classify_prime(13), Some(PrimeType::B));
        for not_applicable in [0, 1, 2, 3, 9, 15, 21, 49] {
            assert_eq!(classify_prime(not_applicable), None, "{not_applicable}");
        }
    }

    #[test]
    fn beta_values() {
        let table: &[(u64, (i64, i64), Option<u64>)] = &[
            (6, (0, 1), None),
            (7, (1, 2), Some(7)),
            (8, (0, 1), None),
            (10, (0, 1), None),
            (11, (1, 3), Some(11)),
            (13, (0, 1), None),
            (14, (1, 2), Some(7)),
            (19, (1, 5), Some(19)),
            (21, (1, 2), Some(7)),
            (22, (1, 3), Some(11)),
            (23, (1, 6), Some(23)),
            (26, (0, 1), None),
            (28, (1, 2), Some(7)),
            (35, (1, 2), Some(7)),
            (55, (1, 3), Some(11)),
            (88, (1, 3), Some(11)),
            (1 << 20, (0, 1), None),
        ];
        for &(r, (num, den), witness) in table {
            let b = beta(r).unwrap();
            assert_eq!(b.value, Rational::new(num, den), "beta({r})");
            assert_eq!(b.witness, witness, "witness({r})");
        }
        assert_eq!(beta(5), Err(CycleError::CycleTooShort { r: 5, min: 6 }));
    }

    #[test]
    fn closed_form_values() {
        let table: &[(u64, (i64, i64))] = &[
            (3, (3, 1)),
            (4, (4, 1)),
            (5, (5, 1)),
            (6, (3, 1)),
            (7, (7, 2)),
            (8, (4, 1)),
            (9, (3, 1)),
            (10, (4, 1)),
            (11, (11, 3)),
            (12, (3, 1)),
            (13, (4, 1)),
            (14, (7, 2)),
            (19, (19, 5)),
            (20, (4, 1)),
            (23, (23, 6)),
            (25, (4, 1)),
            (28, (7, 2)),
            (455, (7, 2)),
        ];
        for &(r, (num, den)) in table {
            assert_eq!(
                chi_star(r).unwrap().value,
                Rational::new(num, den),
                "chi*({r})"
            );
        }
        assert_eq!(chi_star(12).unwrap().case, CycleCase::DivisibleByThree);
        assert_eq!(chi_star(4).unwrap().case, CycleCase::FourCycle);
        assert_eq!(chi_star(5).unwrap().case, CycleCase::FiveCycle);
        assert_eq!(chi_star(7).unwrap().case, CycleCase::TypeAFactor { p: 7 });
        assert_eq!(chi_star(8).unwrap().case, CycleCase::NoTypeAFactor);
        assert_eq!(chi_star(2), Err(CycleError::CycleTooShort { r: 2, min: 3 }));
    }

    #[test]
    fn construction_matches_bundled_coloring_on_c7() {
        let c = construct_type_a_coloring(7).unwrap();
        assert_eq!(c, reference_c7_coloring());
    }

    #[test]
    fn construction_is_valid_and_attains_the_value() {
        for r in [7usize, 11, 14, 22, 23, 28, 35, 49, 55] {
            let c = construct_type_a_coloring(r).unwrap();
            let cycle = OrientedGraph::directed_cycle(r).unwrap();
            assert!(verify_coloring(&cycle, &c).unwrap().is_valid(), "r = {r}");
            assert_eq!(c.ratio(), chi_star(r as u64).unwrap().value, "r = {r}");
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            construct_type_a_coloring(4),
            Err(CycleError::CycleTooShort { r: 4, min: 6 })
        );
        assert_eq!(
            construct_type_a_coloring(21),
            Err(CycleError::DivisibleByThree { r: 21 })
        );
        assert_eq!(
            construct_type_a_coloring(8),
            Err(CycleError::NoTypeAFactor { r: 8 })
        );
        assert_eq!(
            construct_type_a_coloring(10),
            Err(CycleError::NoTypeAFactor { r: 10 })
        );
        assert_eq!(
            construct_type_a_coloring(13),
            Err(CycleError::NoTypeAFactor { r: 13 })
        );
    }

    #[test]
    fn analysis_of_the_bundled_c7_coloring() {
        let s = analyze_miser(7, &reference_c7_coloring()).unwrap();
        assert_eq!(s.rotation, 0);
        assert_eq!(s.triple_count, 1);
        assert_eq!(s.quads_between, 1);
        assert_eq!(
            s.blocks,
            vec![Block::Triple { start: 0 }, Block::Quad { start: 3 }]
        );
        assert_eq!(s.base[3], ColorSet::from_colors([6]).unwrap());
        assert_eq!(s.t_matrix.row_string(0), "1001100");
        // Position 3 holds {6,0}: meets A = {0,1} and D = {6}.
        assert_eq!(
            s.patterns[3],
            Pattern {
                meets_a: true,
                meets_b: false,
                meets_c: false,
                meets_d: true
            }
        );
        for i in 0..7 {
            assert_eq!(
                s.t_matrix.row_string((i + 1) % 7),
                {
                    let row = s.t_matrix.row_string(i);
                    let mut shifted = String::new();
                    shifted.push(row.chars().last().unwrap());
                    shifted.extend(row.chars().take(6));
                    shifted
                },
                "row {i} shift"
            );
        }
    }

    #[test]
    fn analysis_of_longer_constructions() {
        let s14 = analyze_miser(14, &construct_type_a_coloring(14).unwrap()).unwrap();
        assert_eq!((s14.triple_count, s14.quads_between), (2, 1));
        let s22 = analyze_miser(22, &construct_type_a_coloring(22).unwrap()).unwrap();
        assert_eq!((s22.triple_count, s22.quads_between), (2, 2));
        assert_eq!(22, (4 * s22.quads_between + 3) * s22.triple_count);
    }

    #[test]
    fn analysis_rejections() {
        let c7 = reference_c7_coloring();
        assert!(matches!(
            analyze_miser(5, &c7),
            Err(MiserError::CycleTooShort { r: 5, .. })
        ));
        assert!(matches!(
            analyze_miser(9, &c7),
            Err(MiserError::DivisibleByThree { r: 9 })
        ));
        // A 1-fold 4-coloring of C_7 has ratio exactly 4: not miser.
        let four = BFoldColoring::new(
            4,
            1,
            [0u32, 1, 2, 0, 1, 2, 3]
                .iter()
                .map(|&c| ColorSet::from_colors([c]).unwrap())
                .collect(),
        )
        .unwrap();
        assert_eq!(
            analyze_miser(7, &four),
            Err(MiserError::NotMiser {
                fold: 1,
                palette: 4
            })
        );
        // Wrong length: the coloring does not even fit the cycle.
        assert!(matches!(
            analyze_miser(8, &c7),
            Err(MiserError::InvalidColoring { .. })
        ));
    }

    #[test]
    fn block_scanner_on_synthetic_patterns() {
        let p = |a, b, c| Pattern {
            meets_a: a,
            meets_b: b,
            meets_c: c,
            meets_d: false,
        };
        // A, B, C | A, AB, BC, C: a triple then a quad.
        let good = [
            p(true, false, false),
            p(false, true, false),
            p(false, false, true),
            p(true, false, false),
            p(true, true, false),
            p(false, true, true),
            p(false, false, true),
        ];
        assert_eq!(
            scan_blocks(&good),
            Some(vec![Block::Triple { start: 0 }, Block::Quad { start: 3 }])
        );
        // Quad whose second label misses A: rejected.
        let bad = [
            p(true, false, false),
            p(false, true, false),
            p(false, true, true),
            p(false, false, true),
        ];
        assert_eq!(scan_blocks(&bad), None);
        // Leftover tail that fits no block: rejected.
        let tail = [
            p(true, false, false),
            p(false, true, false),
            p(false, false, true),
            p(true, false, false),
        ];
        assert_eq!(scan_blocks(&tail), None);
    }
}
