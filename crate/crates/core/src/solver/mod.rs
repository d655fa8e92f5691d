//! Exact conditional chromatic numbers and their lower bounds.

pub mod bounds;
pub mod exact;
pub mod oracle;

pub use bounds::{
    bound_report, greedy_clique_bound, lai_lower_bound, lemma1_scan, BoundReport, Lemma1Scan,
};
pub use exact::{
    chi_r_exact, chromatic_number, search_order, Exhausted, NamedBound, SolveOptions, SolveOutcome,
    SolveResult, DEFAULT_BUDGET, MAX_SOLVER_VERTICES,
};
pub use oracle::{chi_r_oracle, MAX_ORACLE_VERTICES};
