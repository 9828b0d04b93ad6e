//! Exhaustive backtracking searches: b-fold colorings, chromatic
//! numbers by ascent, homomorphisms, and combined bound sweeps.
//!
//! Soundness contract: `NotExists` means the whole tree was exhausted
//! under the stated symmetry break (the first vertex in BFS order is
//! pinned to `{0..b-1}`; color names are interchangeable, so this loses
//! no solutions). A spent budget yields `Inconclusive`, never a claim.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::sync::atomic::{AtomicBool, Ordering};
use core::time::Duration;

use crate::cliques::{alpha_o, augment, omega_ro};
use crate::coloring::{palette_mask, verify_coloring, BFoldColoring, ColorSet, MAX_PALETTE};
use crate::graph::OrientedGraph;
use crate::rational::Rational;

pub const DEFAULT_MAX_NODES: u64 = 100_000_000;

/// Limits for one search. `max_nodes` counts candidate assignments;
/// `time_limit` is advisory and takes effect through `abort`, which a
/// runner arms (for example from a watchdog timer). A search checks the
/// flag every 1024 nodes and unwinds with `Inconclusive`.
#[derive(Clone, Debug)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
    pub abort: Option<Arc<AtomicBool>>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: Some(DEFAULT_MAX_NODES),
            time_limit: None,
            abort: None,
        }
    }
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget {
            max_nodes: None,
            time_limit: None,
            abort: None,
        }
    }

    pub fn with_max_nodes(nodes: u64) -> Self {
        SearchBudget {
            max_nodes: Some(nodes),
            ..Self::default()
        }
    }
}

pub(crate) struct Meter<'a> {
    used: u64,
    limit: u64,
    abort: Option<&'a AtomicBool>,
}

impl<'a> Meter<'a> {
    pub(crate) fn new(budget: &'a SearchBudget) -> Self {
        Meter {
            used: 0,
            limit: budget.max_nodes.unwrap_or(u64::MAX),
            abort: budget.abort.as_deref(),
        }
    }

    /// Counts one node; `false` means the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.used += 1;
        if self.used > self.limit {
            return false;
        }
        if self.used & 0x3FF == 0 {
            if let Some(flag) = self.abort {
                if flag.load(Ordering::Relaxed) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SearchOutcome {
    Exists(BFoldColoring),
    NotExists,
    Inconclusive,
}

impl SearchOutcome {
    pub fn kind(&self) -> OutcomeKind {
        match self {
            SearchOutcome::Exists(_) => OutcomeKind::Exists,
            SearchOutcome::NotExists => OutcomeKind::NotExists,
            SearchOutcome::Inconclusive => OutcomeKind::Inconclusive,
        }
    }

    pub fn certificate(&self) -> Option<&BFoldColoring> {
        match self {
            SearchOutcome::Exists(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutcomeKind {
    Exists,
    NotExists,
    Inconclusive,
}

impl fmt::Display for OutcomeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutcomeKind::Exists => "exists",
            OutcomeKind::NotExists => "not-exists",
            OutcomeKind::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SolverError {
    FoldOutOfRange {
        fold: u32,
        palette: u32,
    },
    PaletteTooLarge {
        palette: u32,
    },
    EmptyGraph,
    /// A found certificate failed re-verification; a bug, surfaced loudly.
    CertificateInvalid {
        detail: String,
    },
    /// Lower bound exceeded a conclusive upper bound; a bug or a broken
    /// hypothesis, surfaced loudly.
    BoundContradiction {
        lower: Rational,
        upper: Rational,
    },
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::FoldOutOfRange { fold, palette } => {
                write!(
                    f,
                    "fold {fold} must satisfy 1 <= fold <= palette ({palette})"
                )
            }
            SolverError::PaletteTooLarge { palette } => {
                write!(
                    f,
                    "palette {palette} exceeds the supported maximum {MAX_PALETTE}"
                )
            }
            SolverError::EmptyGraph => write!(f, "the graph has no vertices"),
            SolverError::CertificateInvalid { detail } => {
                write!(
                    f,
                    "search produced a certificate that fails verification: {detail}"
                )
            }
            SolverError::BoundContradiction { lower, upper } => {
                write!(
                    f,
                    "lower bound {lower} exceeds conclusive upper bound {upper}"
                )
            }
        }
    }
}

impl core::error::Error for SolverError {}

/// Enumerates `b`-subsets of the set bits of `universe`, ascending by
/// the compressed bit pattern.
fn for_each_subset(universe: u64, b: u32, mut f: impl FnMut(u64) -> bool) -> bool {
    let m = universe.count_ones();
    if b > m {
        return true;
    }
    if b == 0 {
        return f(0);
    }
    let positions: Vec<u32> = {
        let mut v = Vec::with_capacity(m as usize);
        let mut rest = universe;
        while rest != 0 {
            v.push(rest.trailing_zeros());
            rest &= rest - 1;
        }
        v
    };
    let mut comp: u64 = if b == 64 { u64::MAX } else { (1u64 << b) - 1 };
    loop {
        let mut real = 0u64;
        let mut bits = comp;
        while bits != 0 {
            real |= 1 << positions[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        if !f(real) {
            return false;
        }
        // Gosper's hack, with overflow meaning "done".
        let low = comp & comp.wrapping_neg();
        let Some(carry) = comp.checked_add(low) else {
            return true;
        };
        comp = carry | (((comp ^ carry) / low) >> 2);
        if m < 64 && comp >= 1u64 << m {
            return true;
        }
    }
}

/// Assignment order and the per-position bookkeeping the search needs.
struct SearchPlan {
    order: Vec<u32>,
    /// Arcs whose second endpoint (in assignment order) is this position.
    completed_arcs: Vec<Vec<(u32, u32)>>,
    /// Earlier-ordered vertices related to this position in the
    /// augmented relation. Any completion must keep their sets disjoint
    /// from this vertex's, so their colors are banned outright.
    related_earlier: Vec<Vec<u32>>,
}

fn plan_search(g: &OrientedGraph) -> SearchPlan {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = alloc::collections::VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root as u32);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            let mut nbrs = g.undirected_neighbors(u);
            nbrs.retain(|&w| !seen[w as usize]);
            for &w in &nbrs {
                seen[w as usize] = true;
                queue.push_back(w);
            }
        }
    }
    let mut position = vec![usize::MAX; n];
    for (pos, &v) in order.iter().enumerate() {
        position[v as usize] = pos;
    }
    let aug = augment(g);
    let mut completed_arcs = vec![Vec::new(); n];
    for &(u, v) in g.arcs() {
        let pos = position[u as usize].max(position[v as usize]);
        completed_arcs[pos].push((u, v));
    }
    let related_earlier = order
        .iter()
        .enumerate()
        .map(|(pos, &v)| {
            aug.related_vertices(v)
                .into_iter()
                .filter(|&w| position[w as usize] < pos)
                .collect()
        })
        .collect();
    SearchPlan {
        order,
        completed_arcs,
        related_earlier,
    }
}

enum Walk {
    Exhausted,
    Stopped,
    OutOfBudget,
}

struct FoldSearch<'a> {
    plan: &'a SearchPlan,
    fold: u32,
    palette: u64,
    palette_size: u32,
    /// Restrict to colorings that introduce palette colors in first-use
    /// order along the assignment order. Every coloring renames to
    /// exactly one such form, so existence is unaffected; enumeration
    /// must leave this off (its contract pins only the root set).
    canonical: bool,
    assigned: Vec<ColorSet>,
    /// Multiset of (tail set, head set) patterns over completed arcs.
    registry: BTreeMap<(u64, u64), u32>,
    meter: Meter<'a>,
}

impl<'a> FoldSearch<'a> {
    /// Checks the arcs completed by assigning `set` at `pos` against the
    /// registry and records their patterns. `false` restores nothing;
    /// the caller must not recurse.
    fn try_assign(
        &mut self,
        v: u32,
        pos: usize,
        set: ColorSet,
        added: &mut Vec<(u64, u64)>,
    ) -> bool {
        for &(t, h) in &self.plan.completed_arcs[pos] {
            let ts = if t == v {
                set
            } else {
                self.assigned[t as usize]
            };
            let hs = if h == v {
                set
            } else {
                self.assigned[h as usize]
            };
            // Disjointness across arcs is enforced by the ban mask.
            debug_assert!(!ts.intersects(hs));
            let (tb, hb) = (ts.bits(), hs.bits());
            for &(t2, h2) in self.registry.keys() {
                // Both orderings of an arc pair test the same two
                // intersections, so one direction covers the rule.
                if tb & h2 != 0 && hb & t2 != 0 {
                    self.rollback(added);
                    return false;
                }
            }
            *self.registry.entry((tb, hb)).or_insert(0) += 1;
            added.push((tb, hb));
        }
        self.assigned[v as usize] = set;
        true
    }

    fn rollback(&mut self, added: &mut Vec<(u64, u64)>) {
        for pair in added.drain(..) {
            let count = self.registry.get_mut(&pair).expect("recorded above");
            *count -= 1;
            if *count == 0 {
                self.registry.remove(&pair);
            }
        }
    }

    /// Tries `set` at position `pos` and recurses; `false` propagates
    /// an early stop or a spent budget.
    fn try_candidate(
        &mut self,
        pos: usize,
        set: ColorSet,
        next_unused: u32,
        added: &mut Vec<(u64, u64)>,
        result: &mut Walk,
        visit: &mut dyn FnMut(&[ColorSet]) -> bool,
    ) -> bool {
        if !self.meter.tick() {
            *result = Walk::OutOfBudget;
            return false;
        }
        let v = self.plan.order[pos];
        if self.try_assign(v, pos, set, added) {
            let introduced = set.max_color().map_or(0, |c| c + 1);
            let walk = self.run(pos + 1, next_unused.max(introduced), visit);
            self.rollback(added);
            self.assigned[v as usize] = ColorSet::EMPTY;
            if !matches!(walk, Walk::Exhausted) {
                *result = walk;
                return false;
            }
        }
        true
    }

    fn run(
        &mut self,
        pos: usize,
        next_unused: u32,
        visit: &mut dyn FnMut(&[ColorSet]) -> bool,
    ) -> Walk {
        if pos == self.plan.order.len() {
            return if visit(&self.assigned) {
                Walk::Exhausted
            } else {
                Walk::Stopped
            };
        }
        let mut banned = 0u64;
        for &w in &self.plan.related_earlier[pos] {
            banned |= self.assigned[w as usize].bits();
        }
        let allowed = self.palette & !banned;
        let mut result = Walk::Exhausted;
        let fold = self.fold;
        let mut added: Vec<(u64, u64)> = Vec::new();
        if pos == 0 {
            // Colors are interchangeable: the root always takes the
            // first `fold` colors.
            let root = ColorSet::from_bits(palette_mask(fold));
            self.try_candidate(pos, root, fold, &mut added, &mut result, visit);
        } else if self.canonical {
            // Banned colors were used by earlier vertices, so the
            // unused tail {next_unused..} is never banned.
            debug_assert_eq!(banned & !palette_mask(next_unused), 0);
            let seen_allowed = allowed & palette_mask(next_unused);
            for fresh in 0..=fold.min(self.palette_size - next_unused) {
                let block = palette_mask(next_unused + fresh) & !palette_mask(next_unused);
                let go = for_each_subset(seen_allowed, fold - fresh, |old| {
                    self.try_candidate(
                        pos,
                        ColorSet::from_bits(old | block),
                        next_unused,
                        &mut added,
                        &mut result,
                        visit,
                    )
                });
                if !go {
                    return result;
                }
            }
        } else {
            for_each_subset(allowed, fold, |mask| {
                self.try_candidate(
                    pos,
                    ColorSet::from_bits(mask),
                    next_unused,
                    &mut added,
                    &mut result,
                    visit,
                )
            });
        }
        result
    }
}

fn check_parameters(fold: u32, palette: u32) -> Result<(), SolverError> {
    if palette > MAX_PALETTE {
        return Err(SolverError::PaletteTooLarge { palette });
    }
    if fold == 0 || fold > palette {
        return Err(SolverError::FoldOutOfRange { fold, palette });
    }
    Ok(())
}

fn search_colorings(
    g: &OrientedGraph,
    fold: u32,
    palette: u32,
    budget: &SearchBudget,
    canonical: bool,
    visit: &mut dyn FnMut(&[ColorSet]) -> bool,
) -> Result<Walk, SolverError> {
    check_parameters(fold, palette)?;
    if g.vertex_count() == 0 {
        return Ok(if visit(&[]) {
            Walk::Exhausted
        } else {
            Walk::Stopped
        });
    }
    let plan = plan_search(g);
    let mut search = FoldSearch {
        plan: &plan,
        fold,
        palette: palette_mask(palette),
        palette_size: palette,
        canonical,
        assigned: vec![ColorSet::EMPTY; g.vertex_count()],
        registry: BTreeMap::new(),
        meter: Meter::new(budget),
    };
    Ok(search.run(0, 0, visit))
}

/// Does `g` admit a `fold`-fold `palette`-coloring? Exhaustive up to the
/// root symmetry break; the certificate is the first solution in the
/// fixed candidate order and re-verifies independently.
pub fn exists_bfold(
    g: &OrientedGraph,
    fold: u32,
    palette: u32,
    budget: &SearchBudget,
) -> Result<SearchOutcome, SolverError> {
    let mut found: Option<BFoldColoring> = None;
    let walk = search_colorings(g, fold, palette, budget, true, &mut |sets| {
        found = Some(
            BFoldColoring::new(palette, fold, sets.to_vec())
                .expect("search assigns fold-subsets of the palette"),
        );
        false
    })?;
    Ok(match (walk, found) {
        (_, Some(c)) => {
            debug_assert!(verify_coloring(g, &c).is_ok_and(|v| v.is_valid()));
            SearchOutcome::Exists(c)
        }
        (Walk::Exhausted, None) => SearchOutcome::NotExists,
        (Walk::OutOfBudget, None) => SearchOutcome::Inconclusive,
        (Walk::Stopped, None) => unreachable!("stop follows a solution"),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EnumerationOutcome {
    Complete,
    Inconclusive,
}

/// Visits every coloring with the root set pinned to `{0..fold-1}`.
pub fn enumerate_bfold(
    g: &OrientedGraph,
    fold: u32,
    palette: u32,
    budget: &SearchBudget,
    mut visit: impl FnMut(&BFoldColoring),
) -> Result<EnumerationOutcome, SolverError> {
    let walk = search_colorings(g, fold, palette, budget, false, &mut |sets| {
        visit(
            &BFoldColoring::new(palette, fold, sets.to_vec())
                .expect("search assigns fold-subsets of the palette"),
        );
        true
    })?;
    Ok(match walk {
        Walk::Exhausted => EnumerationOutcome::Complete,
        Walk::OutOfBudget => EnumerationOutcome::Inconclusive,
        Walk::Stopped => unreachable!("enumeration never stops early"),
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ChiOutcome {
    Value { k: u32, certificate: BFoldColoring },
    Inconclusive,
}

impl ChiOutcome {
    pub fn value(&self) -> Option<u32> {
        match self {
            ChiOutcome::Value { k, .. } => Some(*k),
            ChiOutcome::Inconclusive => None,
        }
    }
}

/// One `(b, k)` search and how it ended.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchRecord {
    pub fold: u32,
    pub palette: u32,
    pub outcome: OutcomeKind,
}

pub(crate) fn chi_b_with_records(
    g: &OrientedGraph,
    fold: u32,
    budget: &SearchBudget,
) -> Result<(ChiOutcome, Vec<SearchRecord>), SolverError> {
    if g.vertex_count() == 0 {
        check_parameters(fold, fold)?;
        let certificate = BFoldColoring::new(fold, fold, Vec::new()).expect("parameters checked");
        return Ok((
            ChiOutcome::Value {
                k: fold,
                certificate,
            },
            Vec::new(),
        ));
    }
    let (omega, _) = omega_ro(g);
    // No palette below fold * omega can work: a relative clique needs
    // pairwise-disjoint fold-sets. The all-distinct-blocks coloring at
    // k = fold * |V| always works, so the ascent terminates.
    let start = fold * omega.max(1) as u32;
    let mut records = Vec::new();
    for k in start..=fold * g.vertex_count() as u32 {
        let outcome = exists_bfold(g, fold, k, budget)?;
        records.push(SearchRecord {
            fold,
            palette: k,
            outcome: outcome.kind(),
        });
        match outcome {
            SearchOutcome::Exists(certificate) => {
                return Ok((ChiOutcome::Value { k, certificate }, records));
            }
            SearchOutcome::NotExists => {}
            SearchOutcome::Inconclusive => return Ok((ChiOutcome::Inconclusive, records)),
        }
    }
    unreachable!("a coloring with fold * |V| colors always exists")
}

/// Smallest `k` admitting a `fold`-fold `k`-coloring, with certificate.
/// Ascends from `fold * omega_ro(g)`.
pub fn chi_b(
    g: &OrientedGraph,
    fold: u32,
    budget: &SearchBudget,
) -> Result<ChiOutcome, SolverError> {
    if fold == 0 {
        return Err(SolverError::FoldOutOfRange { fold, palette: 0 });
    }
    Ok(chi_b_with_records(g, fold, budget)?.0)
}

/// The oriented chromatic number: `chi_b` at fold 1.
pub fn chi_o(g: &OrientedGraph, budget: &SearchBudget) -> Result<ChiOutcome, SolverError> {
    chi_b(g, 1, budget)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HomOutcome {
    Exists(Vec<u32>),
    NotExists,
    Inconclusive,
}

/// Is there a homomorphism `g -> h` (arcs to arcs)? Backtracking over
/// vertex images in BFS order; exhaustive, no symmetry break.
pub fn hom_exists(g: &OrientedGraph, h: &OrientedGraph, budget: &SearchBudget) -> HomOutcome {
    if g.vertex_count() == 0 {
        return HomOutcome::Exists(Vec::new());
    }
    if h.vertex_count() == 0 {
        return HomOutcome::NotExists;
    }
    let plan = plan_search(g);
    let mut image = vec![u32::MAX; g.vertex_count()];
    let mut meter = Meter::new(budget);

    fn assign(
        plan: &SearchPlan,
        h: &OrientedGraph,
        image: &mut Vec<u32>,
        pos: usize,
        meter: &mut Meter<'_>,
    ) -> Result<Option<Vec<u32>>, ()> {
        if pos == plan.order.len() {
            return Ok(Some(image.clone()));
        }
        let v = plan.order[pos];
        'candidate: for cand in 0..h.vertex_count() as u32 {
            if !meter.tick() {
                return Err(());
            }
            for &(t, hd) in &plan.completed_arcs[pos] {
                let (ti, hi) = (
                    if t == v { cand } else { image[t as usize] },
                    if hd == v { cand } else { image[hd as usize] },
                );
                if !h.has_arc(ti, hi) {
                    continue 'candidate;
                }
            }
            image[v as usize] = cand;
            if let Some(found) = assign(plan, h, image, pos + 1, meter)? {
                return Ok(Some(found));
            }
            image[v as usize] = u32::MAX;
        }
        Ok(None)
    }

    match assign(&plan, h, &mut image, 0, &mut meter) {
        Ok(Some(map)) => {
            debug_assert!(verify_hom(g, h, &map));
            HomOutcome::Exists(map)
        }
        Ok(None) => HomOutcome::NotExists,
        Err(()) => HomOutcome::Inconclusive,
    }
}

/// Re-checks a vertex map arc by arc.
pub fn verify_hom(g: &OrientedGraph, h: &OrientedGraph, map: &[u32]) -> bool {
    map.len() == g.vertex_count()
        && map.iter().all(|&i| (i as usize) < h.vertex_count())
        && g.arcs()
            .iter()
            .all(|&(u, v)| h.has_arc(map[u as usize], map[v as usize]))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LowerBoundKind {
    /// A relative clique of that size.
    Clique,
    /// `|V| / alpha_o`.
    Counting,
    /// Reserved for bounds imported from refutation records; never
    /// produced by `bound_sweep`.
    Search,
}

impl fmt::Display for LowerBoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LowerBoundKind::Clique => "clique",
            LowerBoundKind::Counting => "counting",
            LowerBoundKind::Search => "search",
        })
    }
}

/// Everything a sweep up to `b_max` established about one graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundReport {
    pub graph_id: String,
    pub omega_ro: usize,
    pub omega_witness: Vec<u32>,
    pub alpha_o: usize,
    pub alpha_witness: Vec<u32>,
    pub lower: Rational,
    pub lower_kind: LowerBoundKind,
    /// Best conclusive `k/b`; `None` if every fold was inconclusive.
    pub upper: Option<Rational>,
    /// The coloring achieving `upper` (smallest fold on ties).
    pub best_certificate: Option<BFoldColoring>,
    /// Conclusive `chi_b` per fold, ascending; `None` = inconclusive.
    pub chi_per_fold: Vec<(u32, Option<u32>)>,
    pub searches: Vec<SearchRecord>,
}

impl BoundReport {
    /// Lower and upper agree, pinning the value at finite fold.
    pub fn is_tight(&self) -> bool {
        self.upper == Some(self.lower)
    }
}

/// Runs `chi_b` for every fold up to `b_max` and combines the clique
/// and counting lower bounds with the best search upper bound. Every
/// certificate is re-verified before it is reported.
pub fn bound_sweep(
    g: &OrientedGraph,
    b_max: u32,
    budget: &SearchBudget,
    graph_id: &str,
) -> Result<BoundReport, SolverError> {
    if g.vertex_count() == 0 {
        return Err(SolverError::EmptyGraph);
    }
    let (omega, omega_witness) = omega_ro(g);
    let (alpha, alpha_witness) = alpha_o(g);
    let clique = Rational::from_integer(omega as i64);
    let counting = Rational::new(g.vertex_count() as i64, alpha as i64);
    let (lower, lower_kind) = if clique >= counting {
        (clique, LowerBoundKind::Clique)
    } else {
        (counting, LowerBoundKind::Counting)
    };
    let mut searches = Vec::new();
    let mut chi_per_fold = Vec::new();
    let mut upper: Option<Rational> = None;
    let mut best_certificate: Option<BFoldColoring> = None;
    for fold in 1..=b_max.max(1) {
        let (outcome, records) = chi_b_with_records(g, fold, budget)?;
        searches.extend(records);
        match outcome {
            ChiOutcome::Value { k, certificate } => {
                match verify_coloring(g, &certificate) {
                    Ok(v) if v.is_valid() => {}
                    other => {
                        return Err(SolverError::CertificateInvalid {
                            detail: format!("fold {fold}, palette {k}: {other:?}"),
                        })
                    }
                }
                chi_per_fold.push((fold, Some(k)));
                let ratio = Rational::new(k as i64, fold as i64);
                if upper.is_none_or(|u| ratio < u) {
                    upper = Some(ratio);
                    best_certificate = Some(certificate);
                }
            }
            ChiOutcome::Inconclusive => chi_per_fold.push((fold, None)),
        }
    }
    if let Some(u) = upper {
        if lower > u {
            return Err(SolverError::BoundContradiction { lower, upper: u });
        }
    }
    Ok(BoundReport {
        graph_id: graph_id.to_string(),
        omega_ro: omega,
        omega_witness,
        alpha_o: alpha,
        alpha_witness,
        lower,
        lower_kind,
        upper,
        best_certificate,
        chi_per_fold,
        searches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::tests::reference_c7_coloring;
    use crate::kneser::extract_suborientation;

    fn cycle(r: usize) -> OrientedGraph {
        OrientedGraph::directed_cycle(r).unwrap()
    }

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn subset_enumeration_counts() {
        for (universe, b, expect) in [
            (0b111111u64, 3, 20u32),
            (0b1011010, 2, 6),
            (u64::MAX, 1, 64),
        ] {
            let mut n = 0;
            for_each_subset(universe, b, |mask| {
                assert_eq!(mask.count_ones(), b);
                assert_eq!(mask & !universe, 0);
                n += 1;
                true
            });
            assert_eq!(n, expect);
        }
        let mut none = 0;
        for_each_subset(0b11, 3, |_| {
            none += 1;
            true
        });
        assert_eq!(none, 0);
    }

    #[test]
    fn two_fold_seven_on_c7_exists_and_six_does_not() {
        let c7 = cycle(7);
        let out = exists_bfold(&c7, 2, 7, &budget()).unwrap();
        let cert = out.certificate().expect("exists");
        assert!(verify_coloring(&c7, cert).unwrap().is_valid());
        assert_eq!(cert.ratio(), Rational::new(7, 2));
        assert_eq!(
            exists_bfold(&c7, 2, 6, &budget()).unwrap(),
            SearchOutcome::NotExists
        );
    }

    #[test]
    fn c4_needs_ratio_four() {
        assert_eq!(
            exists_bfold(&cycle(4), 2, 7, &budget()).unwrap(),
            SearchOutcome::NotExists
        );
        assert!(matches!(
            exists_bfold(&cycle(4), 2, 8, &budget()).unwrap(),
            SearchOutcome::Exists(_)
        ));
    }

    #[test]
    fn spent_budget_is_inconclusive() {
        let out = exists_bfold(&cycle(7), 2, 7, &SearchBudget::with_max_nodes(1)).unwrap();
        assert_eq!(out, SearchOutcome::Inconclusive);
    }

    #[test]
    fn chi_values_on_small_cycles() {
        assert_eq!(chi_o(&cycle(5), &budget()).unwrap().value(), Some(5));
        assert_eq!(chi_o(&cycle(6), &budget()).unwrap().value(), Some(3));
        assert_eq!(chi_o(&cycle(7), &budget()).unwrap().value(), Some(4));
        assert_eq!(chi_b(&cycle(7), 2, &budget()).unwrap().value(), Some(7));
        assert_eq!(chi_b(&cycle(6), 2, &budget()).unwrap().value(), Some(6));
        // The ascent starts at 6 for C_6; check 5 fails outright too.
        assert_eq!(
            exists_bfold(&cycle(6), 2, 5, &budget()).unwrap(),
            SearchOutcome::NotExists
        );
    }

    #[test]
    fn hom_detection() {
        let b = budget();
        assert!(matches!(
            hom_exists(&cycle(6), &cycle(3), &b),
            HomOutcome::Exists(_)
        ));
        assert_eq!(hom_exists(&cycle(7), &cycle(3), &b), HomOutcome::NotExists);
        // C_7 maps onto the label quotient of its own 2-fold coloring.
        let sub = extract_suborientation(&cycle(7), &reference_c7_coloring())
            .unwrap()
            .suborientation;
        match hom_exists(&cycle(7), sub.graph(), &b) {
            HomOutcome::Exists(map) => assert!(verify_hom(&cycle(7), sub.graph(), &map)),
            other => panic!("expected a homomorphism, got {other:?}"),
        }
    }

    #[test]
    fn sweep_is_tight_on_c7() {
        let report = bound_sweep(&cycle(7), 2, &budget(), "C_7").unwrap();
        assert_eq!(report.omega_ro, 3);
        assert_eq!(report.alpha_o, 2);
        assert_eq!(report.lower, Rational::new(7, 2));
        assert_eq!(report.lower_kind, LowerBoundKind::Counting);
        assert_eq!(report.upper, Some(Rational::new(7, 2)));
        assert!(report.is_tight());
        assert_eq!(report.chi_per_fold, vec![(1, Some(4)), (2, Some(7))]);
        let cert = report.best_certificate.expect("conclusive");
        assert_eq!(cert.fold(), 2);
        assert!(verify_coloring(&cycle(7), &cert).unwrap().is_valid());
    }

    #[test]
    fn sweep_is_tight_on_c4_via_clique() {
        let report = bound_sweep(&cycle(4), 2, &budget(), "C_4").unwrap();
        assert_eq!(report.lower, Rational::from_integer(4));
        assert_eq!(report.lower_kind, LowerBoundKind::Clique);
        assert_eq!(report.upper, Some(Rational::from_integer(4)));
    }

    #[test]
    fn enumeration_visits_each_solution_once() {
        let mut seen = Vec::new();
        let outcome = enumerate_bfold(&cycle(7), 2, 7, &budget(), |c| {
            assert!(verify_coloring(&cycle(7), c).unwrap().is_valid());
            seen.push(c.sets().to_vec());
        })
        .unwrap();
        assert_eq!(outcome, EnumerationOutcome::Complete);
        assert!(!seen.is_empty());
        let mut dedup = seen.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), seen.len(), "no duplicates");
        // Root pinned: every solution starts with {0,1}.
        for sets in &seen {
            assert_eq!(sets[0], ColorSet::from_colors([0, 1]).unwrap());
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            exists_bfold(&cycle(3), 0, 3, &budget()),
            Err(SolverError::FoldOutOfRange { .. })
        ));
        assert!(matches!(
            exists_bfold(&cycle(3), 2, 65, &budget()),
            Err(SolverError::PaletteTooLarge { palette: 65 })
        ));
    }
}
