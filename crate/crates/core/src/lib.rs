//! Learning guarded and k-guarded clauses from ground example clauses.
//!
//! Given positive and negative example clauses, find a clause that
//! θ-subsumes every positive and no negative example. For guarded clauses
//! and straight positive examples this is decided in polynomial time by
//! [`learner::learn`]; [`oracle`] provides an exhaustive check for small
//! instances.

pub mod error;
pub mod io;
pub mod learner;
pub mod lgig;
pub mod model;
pub mod oracle;
pub mod subsumption;

pub use error::{Error, Result};
pub use learner::{
    enumerate_canonical, is_solution, learn, learn_datalog_pm, learn_k_guarded, prune_relations,
    shrink_solution, CanonicalSet, InconsistentCause, LearnResult, LearnStats, Outcome,
};
pub use lgig::{
    compute_lgig, lgig_map, relative_shield, specialize_to_lgig, GuardSpec, Lgig, MapMode,
    ShieldSet,
};
pub use model::{
    Clause, Hypothesis, Instance, Literal, Mode, Polarity, SignedRelation, Substitution, Symbol,
    Term,
};
pub use oracle::{
    brute_force_hitting, gen_hitting_instance, oracle_consistency, oracle_solutions,
    random_instance, GeneratorParams, HittingStringInstance, OracleConfig,
};
pub use subsumption::{subsumes_general, subsumes_hypothesis, subsumes_k_guarded};
