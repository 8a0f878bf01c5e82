//! Planar two-way finite automata and transducers.
//!
//! A two-way machine reads `⊳ w ⊲` with a head that moves in both directions;
//! every state has a fixed direction. The crate simulates such machines,
//! checks determinism, reversibility and planarity of their transitions,
//! computes their behaviour monoids, and builds planar reversible
//! transducers by composition and by translation from sequential and
//! register transducers.
//!
//! ```
//! use planar_twoway::alphabet::{word, Alphabet};
//! use planar_twoway::constructions::reverse_transducer;
//!
//! let rev = reverse_transducer(&Alphabet::from_chars("ab").unwrap());
//! let out = rev.run(&word("aab")).unwrap().into_output();
//! assert_eq!(out, Some(word("baa")));
//! ```

pub mod alphabet;
pub mod constructions;
pub mod error;
pub mod io;
pub mod machine;
pub mod monoid;
pub mod oracles;
pub mod planarity;
pub mod run;
pub mod states;

pub use alphabet::{Alphabet, Symbol, TapeSymbol, Word};
pub use error::{Error, Result};
pub use machine::{MachineKind, Transition, TwoWayMachine};
pub use monoid::Behavior;
pub use run::{Configuration, RunResult, RunStatus};
pub use states::{DirectedStateSet, Direction, StateId};
