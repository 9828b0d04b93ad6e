//! Exact machinery for fractional oriented coloring.
//!
//! Everything here works on oriented graphs (digraphs without loops or
//! opposite arc pairs) and set-valued colorings: each vertex receives a
//! `b`-element subset of a `k`-color palette, arc endpoints get disjoint
//! sets, and color reuse across arc pairs is restricted so that the
//! quotient by labels is again an oriented graph. All values are exact
//! (`Rational`); nothing in this crate touches floating point or the
//! standard library (allocation only).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod bitset;

pub mod cliques;
pub mod coloring;
pub mod cycles;
pub mod graph;
pub mod kneser;
pub mod rational;
pub mod solver;
pub mod targets;

pub use cliques::{alpha_o, augment, omega_ro, AugmentedAdjacency};
pub use coloring::{verify_coloring, BFoldColoring, ColorSet, ColoringError, Verdict, Violation};
pub use cycles::{
    analyze_miser, beta, chi_star, classify_prime, construct_type_a_coloring, BetaValue, Block,
    CycleCase, CycleError, CycleValue, MiserError, MiserStructure, Pattern, PrimeType,
    StructureDefect, TMatrix,
};
pub use graph::{GraphError, OrientedGraph};
pub use kneser::{
    blow_up, extract_suborientation, verify_consistency, BlowUpError, ConsistencyViolation,
    ConsistentSubOrientation, ExtractError, Extraction,
};
pub use rational::Rational;
pub use solver::{
    bound_sweep, chi_b, chi_o, enumerate_bfold, exists_bfold, hom_exists, verify_hom, BoundReport,
    ChiOutcome, EnumerationOutcome, HomOutcome, LowerBoundKind, OutcomeKind, SearchBudget,
    SearchOutcome, SearchRecord, SolverError, DEFAULT_MAX_NODES,
};
pub use targets::{
    build_target, check_nice, epsilon_report, signed_neighborhood, tuple_coloring, CounterExample,
    EpsilonReport, NicenessOutcome, NicenessReport, Sign, TargetError, TargetGraph, EPSILON_NOTE,
    MAX_LEVEL,
};
