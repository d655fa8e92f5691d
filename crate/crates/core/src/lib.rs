//! Conditional graph coloring: graph families, closed-form colorings, a
//! verifier for (C1)/(C2), and an exact solver for `χ_r`.
//!
//! A conditional `(k, r)`-coloring is a proper coloring with colors `1..=k`
//! in which every vertex `v` sees at least `min(r, d(v))` distinct colors on
//! its neighbors. `χ_r(G)` is the least such `k`.

pub mod claims;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod solver;
pub mod sweep;

pub use claims::{ClaimsTable, Instance, Theorem};
pub use coloring::{
    distinct_colors_used, is_conditional_coloring, neighborhood_colors, verify_conditional,
    verify_proper, Color, Coloring, CondParams, Verdict, Violation,
};
pub use constructions::{construct, errata, ClaimedColoring, ErrataEntry};
pub use error::{Error, Result};
pub use family::{Family, FamilyParams, FamilySpec};
pub use graph::{Graph, Label, VertexId};
pub use solver::{
    bound_report, chi_r_exact, chi_r_oracle, chromatic_number, lai_lower_bound, lemma1_scan,
    BoundReport, SolveOptions, SolveOutcome, SolveResult,
};
pub use sweep::{run_sweep, Agreement, RValue, SweepConfig, SweepReport, SweepRow};
