//! Brute-force oracles and desk-scale re-checks.
//!
//! * [`colex_shadow_oracle`] materializes colex-initial families and counts
//!   their shadows; it is the independent side of the Kruskal–Katona bounds.
//! * [`certify_lemma`] enumerates integer α-vectors of the relaxed polytope
//!   (box bounds, Kruskal–Katona chaining, `β_k^q >= 0`) and checks a β upper
//!   bound at every feasible point.
//! * [`proof_table`] recomputes tabulated helper functions and compares them
//!   with reference values.
//! * [`run_campaign`] samples random squarefree ideals and checks the
//!   `hdepth(I)` versus `hdepth(S/I)` inequalities.

mod campaign;
mod oracle;
mod polytope;
mod tables;

pub use campaign::{
    all_minimal_ideals, for_each_minimal_ideal, principal_equivalence_holds, random_ideal,
    random_ideal_with_rng, run_campaign, run_trial, CampaignConfig, CampaignReport, CampaignRow,
    Counterexample, FixtureResult, TrialOutcome,
};
pub use oracle::{colex_shadow_oracle, kk_oracle_sweep, OracleMismatch, OracleReport};
pub use polytope::{
    certify_lemma, certify_lemma_with, enumerate_feasible_alphas, FeasibleAlphaConstraints,
    LemmaId, LemmaReport, DEFAULT_NODE_CAP,
};
pub use tables::{
    proof_table, ClaimCheck, FunctionRow, KnownTypo, ProofTable, TableDiff, TableId, KNOWN_TYPOS,
};
