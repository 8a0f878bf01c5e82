//! Two-state aperiodic sequential transducers as planar reversible two-way transducers.
//!
//! The machine sweeps right in `q1`/`q2` (tracking the current state) and emits
//! the letter outputs. When a letter resets the state to a constant `k`, the
//! head bounces back in `r_i` to the previous reset (or `⊳`), then walks
//! forward again in `s` and crosses the current letter in `q_k`. At `⊲` it
//! emits the final output, bounces back once more and leaves in `s`.

use crate::alphabet::{Symbol, TapeSymbol};
use crate::error::{Error, Result};
use crate::machine::{MachineKind, TwoWayMachine};
use crate::states::{DirectedStateSet, Direction};

use super::sequential::SequentialTransducer;

/// State names of the translated machine, in their planar order.
pub const FLIPFLOP_STATES: [&str; 5] = ["q1", "r1", "s", "r2", "q2"];

const Q1: usize = 0;
const R1: usize = 1;
const S: usize = 2;
const R2: usize = 3;
const Q2: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LetterAction {
    Identity,
    /// Resets to state 1 (`0`) or state 2 (`1`).
    Constant(usize),
}

/// Classifies `∂1(a)` of a two-state transducer with canonical state numbering.
pub fn letter_action(seq: &SequentialTransducer, a: &Symbol) -> Result<LetterAction> {
    let target = |q| {
        seq.transition(a, q)
            .map(|(r, _)| r)
            .ok_or_else(|| Error::validation(format!("no transition from `{}` on `{a}`", seq.state_names()[q])))
    };
    match (target(0)?, target(1)?) {
        (0, 1) => Ok(LetterAction::Identity),
        (x, y) if x == y => Ok(LetterAction::Constant(x)),
        _ => Err(Error::NotAperiodic(a.to_string())),
    }
}

pub fn flipflop_to_planar(seq: &SequentialTransducer) -> Result<TwoWayMachine> {
    let seq = seq.canonical_two_state()?;
    seq.check_total()?;
    let states = DirectedStateSet::new(FLIPFLOP_STATES.iter().map(|&name| {
        let dir = if name.starts_with('r') {
            Direction::Backward
        } else {
            Direction::Forward
        };
        (name, dir)
    }))?
    .with_natural_order();
    let mut m = TwoWayMachine::new(
        MachineKind::Transducer,
        seq.input_alphabet().clone(),
        seq.output_alphabet().clone(),
        states,
        Q1,
        [S],
    )?;
    let q = [Q1, Q2];
    let r = [R1, R2];
    for a in seq.input_alphabet().symbols() {
        let x = TapeSymbol::Letter(a.clone());
        let action = letter_action(&seq, a)?;
        let u = seq.transition(a, 0).expect("total").1.to_vec();
        let v = seq.transition(a, 1).expect("total").1.to_vec();
        match action {
            LetterAction::Identity => {
                m.add_transition(x.clone(), Q1, u, Q1)?;
                m.add_transition(x.clone(), Q2, v, Q2)?;
                for p in [R1, R2, S] {
                    m.add_transition(x.clone(), p, vec![], p)?;
                }
            }
            LetterAction::Constant(k) => {
                m.add_transition(x.clone(), Q1, u, R1)?;
                m.add_transition(x.clone(), Q2, v, R2)?;
                m.add_transition(x.clone(), S, vec![], q[k])?;
                m.add_transition(x, r[k], vec![], S)?;
            }
        }
    }
    m.add_transition(TapeSymbol::LeftMarker, Q1, vec![], Q1)?;
    m.add_transition(TapeSymbol::LeftMarker, R1, vec![], S)?;
    m.add_transition(TapeSymbol::RightMarker, S, vec![], S)?;
    m.add_transition(TapeSymbol::RightMarker, Q1, seq.final_output(0).to_vec(), R1)?;
    m.add_transition(TapeSymbol::RightMarker, Q2, seq.final_output(1).to_vec(), R2)?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{word, Alphabet};
    use crate::planarity::{check_planar_machine, LetterScope};

    fn two_state(maps: &[(&str, [usize; 2], [&str; 2])]) -> SequentialTransducer {
        let sigma = Alphabet::new(maps.iter().map(|(a, _, _)| *a)).unwrap();
        let out = Alphabet::from_chars("xyz").unwrap();
        let mut s = SequentialTransducer::new(sigma, out, vec!["1".into(), "2".into()], 0).unwrap();
        for (a, f, w) in maps {
            for q in 0..2 {
                s.set_transition(&Symbol::new(a), q, f[q], word(w[q])).unwrap();
            }
        }
        s
    }

    #[test]
    fn identity_letters_sweep_once() {
        let mut s = two_state(&[("a", [0, 1], ["x", "y"]), ("b", [0, 1], ["z", ""])]);
        s.set_final_output(0, word("zz")).unwrap();
        let m = flipflop_to_planar(&s).unwrap();
        assert!(m.is_reversible());
        assert!(check_planar_machine(&m, LetterScope::All).unwrap().is_planar());
        assert_eq!(m.run(&word("abba")).unwrap().into_output(), Some(word("xzzxzz")));
    }

    #[test]
    fn swap_is_rejected() {
        let s = two_state(&[("a", [1, 0], ["x", "y"])]);
        assert_eq!(flipflop_to_planar(&s).unwrap_err(), Error::NotAperiodic("a".into()));
    }

    #[test]
    fn three_states_are_rejected() {
        let s = SequentialTransducer::new(
            Alphabet::from_chars("a").unwrap(),
            Alphabet::default(),
            vec!["1".into(), "2".into(), "3".into()],
            0,
        )
        .unwrap();
        assert_eq!(flipflop_to_planar(&s).unwrap_err(), Error::WrongStateCount(3));
    }
}
