//! The behaviour monoid: relations on a directed state set, multiplied by
//! gluing two cells side by side and following paths through the shared
//! boundary.

mod behavior;
mod closure;
mod compose;
mod planar;
mod turns;

pub use behavior::Behavior;
pub use closure::{
    aperiodicity_of, generate_monoid, machine_monoid, power_cycle, AperiodicityReport, BehaviorMonoid,
    PowerCycle, DEFAULT_MONOID_CAP,
};
pub use compose::{behavior_of_word, compose_behaviors, outer_vertex, CompositionGraph, GlueVertex, Level};
pub use planar::{
    all_relations, enumerate_planar_deterministic, enumerate_planar_relations, partial_functions,
    verify_tl_submonoid, SubmonoidCheck, SubmonoidReport, DEFAULT_ENUMERATION_CAP,
    DEFAULT_RELATION_ENUMERATION_CAP,
};
pub use turns::{factor_turns, TurnFactorization};
