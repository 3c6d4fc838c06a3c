//! Three-valued class-membership deciders, the Frattini ideal, independent
//! re-verification and the theorem suite.

mod analysis;
mod decision;
mod deciders;
mod frattini;
mod maximal;
pub mod mpoly;
mod sweep;
mod theorems;
mod verify;

pub use analysis::Analysis;
pub use deciders::{
    decide_almost_algebraic_lie, decider, direct_e_witness, jordan_witness, registry, subalgebra_frattini_lower,
    Decider, Property,
};
pub use decision::{
    Certificate, Decision, Obstruction, ObstructionKind, Status, UnknownCode, UnknownReason, Witness,
};
pub use frattini::{core_of_intersection, frattini_ideal, frattini_lower, FrattiniResult, UpperWitness};
pub use maximal::{
    check_maximal, maximal_subalgebras_codim1, Codim1Search, Maximality, ScopeError, CODIM1_MAX_DIM,
};
pub use sweep::{candidate_subalgebras, fitting_null, sample_elements, unit_grid, GRID_BOUND, SWEEP_SEED};
pub use theorems::{
    check_algebra, implication, run_suite, theorem, theorem_registry, Finding, Outcome, SuiteReport, Theorem, Truth,
    Verdict,
};
pub use verify::{
    bareiss_determinant, complement_system_by_evaluation, completely_reducible_by_determinant,
    identity_by_derivations, verify, verify_frattini, verify_lie_level, VerifyError,
};
