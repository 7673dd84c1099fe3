//! Monotone NAE-SAT and its reductions to switching into `P10`-free and
//! `C7`-free graphs.

mod formula;
mod instance;

pub use formula::{nae_eval, pad_nae, Assignment, NaeFormula};
pub use instance::{
    assignment_to_switching_set, build_c7_instance, build_instance, build_p10_instance,
    check_invariants, find_pattern, switching_set_to_assignment, verify_instance,
    verify_instance_with_budget, ClauseLayout, ReductionInstance, Roles, Target, C7_LINK,
    P10_LINK,
};
