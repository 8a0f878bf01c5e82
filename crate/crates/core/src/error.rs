use thiserror::Error;

use crate::alphabet::TapeSymbol;
use crate::planarity::PlanarityWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("more than one transition applies to state `{state}` on `{symbol}`")]
    NondeterministicMachine { state: String, symbol: TapeSymbol },

    #[error("symbol `{0}` is not in the alphabet")]
    AlphabetError(String),

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("the state space carries no total order")]
    MissingOrder,

    #[error("state space of size {size} exceeds the cap of {cap}")]
    StateSpaceTooLarge { size: usize, cap: usize },

    #[error("monoid closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("{which} machine is not reversible")]
    NotReversible { which: &'static str },

    #[error("{which} machine is not planar (first violation on `{symbol}`)")]
    NotPlanar {
        which: &'static str,
        symbol: TapeSymbol,
        witness: Box<PlanarityWitness>,
    },

    #[error("{which} machine admits no planar order")]
    NoPlanarOrder { which: &'static str },

    #[error("output symbol `{0}` of the first machine is not an input symbol of the second")]
    AlphabetMismatch(String),

    #[error("expected a sequential transducer with exactly 2 states, found {0}")]
    WrongStateCount(usize),

    #[error("letter `{0}` acts as a permutation that is not the identity")]
    NotAperiodic(String),

    #[error("update on `{letter}` is not copyless monotone: {reason}")]
    NotCopylessMonotone { letter: String, reason: String },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid machine: {0}")]
    Validation(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn validation(message: impl Into<String>) -> Self {
        Error::Validation(message.into())
    }
}
