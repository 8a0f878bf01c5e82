//! Machine constructions: composition of planar reversible transducers and
//! translations of one-way models into planar reversible two-way transducers.

mod compose;
mod flipflop;
mod register;
mod reverse;
mod sequential;

pub use compose::{compose_transducers, compose_unchecked, compose_with_report, product_order, CompositeOrder, Composition};
pub use flipflop::{flipflop_to_planar, letter_action, LetterAction, FLIPFLOP_STATES};
pub use register::{
    answer_state, is_copyless_monotone, mrt_apply, mrt_to_planar, query_state, MonotoneRegisterTransducer,
    RegisterUpdate, UpdateItem, IDLE_STATE,
};
pub use reverse::reverse_transducer;
pub use sequential::{is_aperiodic_sequential, seq_run, SequentialTransducer};
