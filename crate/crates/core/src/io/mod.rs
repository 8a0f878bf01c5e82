//! Text formats and diagram output.

mod dot;
mod format;

pub use dot::{emit_dot, DotView};
pub use format::{
    parse_document, parse_two_way, serialize, serialize_register, serialize_sequential, serialize_two_way,
    MachineDocument, TwoWayTag,
};
