//! Local-lemma certificates, color-count bounds and resampling solvers for
//! acyclic, star and frugal colorings.

pub mod bounds;
pub mod coloring;
pub mod dimacs;
pub mod events;
pub mod error;
pub mod generate;
pub mod graph;
pub mod json;
pub mod lll;
pub mod optimize;
pub mod solver;
pub mod verify;

pub use bounds::{BoundQuery, BoundResult, BoundVariant};
pub use coloring::{Coloring, Target, Variant};
pub use events::{BadEvent, EventFamily, EventKind, FamilyVariant};
pub use error::{Error, Result};
pub use graph::{Cycle, Girth, Graph, GraphStats};
pub use lll::{ConditionReport, DependencyGraph, EventSpec, Mode};
pub use solver::{resample_solve, SolveReport};
pub use verify::{Verdict, Violation, ViolationKind};
