//! One-way deterministic transducers with a final output per state.

use std::collections::BTreeMap;

use crate::alphabet::{Alphabet, Symbol, TapeSymbol, Word};
use crate::error::{Error, Result};
use crate::monoid::{generate_monoid, Behavior, DEFAULT_MONOID_CAP};
use crate::states::{DirectedStateSet, Direction, StateId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequentialTransducer {
    input: Alphabet,
    output: Alphabet,
    states: Vec<String>,
    initial: StateId,
    /// Per letter, per state: target and emitted word.
    transitions: BTreeMap<Symbol, Vec<Option<(StateId, Word)>>>,
    final_output: Vec<Word>,
}

impl SequentialTransducer {
    /// A transducer with no transitions yet and empty final outputs.
    pub fn new(input: Alphabet, output: Alphabet, states: Vec<String>, initial: StateId) -> Result<Self> {
        if initial >= states.len() {
            return Err(Error::UnknownState(initial.to_string()));
        }
        for (i, s) in states.iter().enumerate() {
            if states[..i].contains(s) {
                return Err(Error::validation(format!("duplicate state `{s}`")));
            }
        }
        let n = states.len();
        Ok(SequentialTransducer {
            transitions: input.symbols().iter().map(|a| (a.clone(), vec![None; n])).collect(),
            input,
            output,
            final_output: vec![Word::new(); n],
            states,
            initial,
        })
    }

    pub fn set_transition(&mut self, letter: &Symbol, source: StateId, target: StateId, out: Word) -> Result<()> {
        let n = self.states.len();
        if source >= n || target >= n {
            return Err(Error::UnknownState(source.max(target).to_string()));
        }
        self.output.check_word(&out)?;
        let row = self
            .transitions
            .get_mut(letter)
            .ok_or_else(|| Error::AlphabetError(letter.to_string()))?;
        row[source] = Some((target, out));
        Ok(())
    }

    pub fn set_final_output(&mut self, state: StateId, out: Word) -> Result<()> {
        if state >= self.states.len() {
            return Err(Error::UnknownState(state.to_string()));
        }
        self.output.check_word(&out)?;
        self.final_output[state] = out;
        Ok(())
    }

    /// Fails unless every letter acts on every state.
    pub fn check_total(&self) -> Result<()> {
        for (a, row) in &self.transitions {
            if let Some(q) = row.iter().position(Option::is_none) {
                return Err(Error::validation(format!(
                    "no transition from state `{}` on `{a}`",
                    self.states[q]
                )));
            }
        }
        Ok(())
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output
    }

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn index_of(&self, name: &str) -> Result<StateId> {
        self.states
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    /// `∂(a)(q)`.
    pub fn transition(&self, letter: &Symbol, state: StateId) -> Option<(StateId, &[Symbol])> {
        let (r, w) = self.transitions.get(letter)?[state].as_ref()?;
        Some((*r, w.as_slice()))
    }

    pub fn final_output(&self, state: StateId) -> &[Symbol] {
        &self.final_output[state]
    }

    /// `∂1(a)` as a relation on the states.
    pub fn state_map(&self, letter: &Symbol) -> Behavior {
        let row = &self.transitions[letter];
        Behavior::from_pairs(
            row.len(),
            row.iter()
                .enumerate()
                .filter_map(|(q, t)| t.as_ref().map(|(r, _)| (q, *r))),
        )
    }

    /// `∂2*(w)(q0) · o(∂1*(w)(q0))`.
    pub fn apply(&self, word: &[Symbol]) -> Result<Word> {
        let mut q = self.initial;
        let mut out = Word::new();
        for a in word {
            let (r, w) = self
                .transitions
                .get(a)
                .ok_or_else(|| Error::AlphabetError(a.to_string()))?[q]
                .as_ref()
                .ok_or_else(|| Error::validation(format!("no transition from `{}` on `{a}`", self.states[q])))?;
            out.extend_from_slice(w);
            q = *r;
        }
        out.extend_from_slice(&self.final_output[q]);
        Ok(out)
    }

    /// The same transducer with the initial state renamed `1` and the other `2`.
    pub fn canonical_two_state(&self) -> Result<SequentialTransducer> {
        if self.states.len() != 2 {
            return Err(Error::WrongStateCount(self.states.len()));
        }
        let perm = |q: StateId| if self.initial == 0 { q } else { 1 - q };
        let mut out = SequentialTransducer::new(
            self.input.clone(),
            self.output.clone(),
            vec!["1".into(), "2".into()],
            0,
        )?;
        for (a, row) in &self.transitions {
            for (q, t) in row.iter().enumerate() {
                if let Some((r, w)) = t {
                    out.set_transition(a, perm(q), perm(*r), w.clone())?;
                }
            }
        }
        for q in 0..2 {
            out.final_output[perm(q)] = self.final_output[q].clone();
        }
        Ok(out)
    }
}

pub fn seq_run(seq: &SequentialTransducer, word: &[Symbol]) -> Result<Word> {
    seq.apply(word)
}

/// Whether the transition monoid generated by the maps `∂1(a)` is aperiodic.
pub fn is_aperiodic_sequential(seq: &SequentialTransducer) -> Result<bool> {
    let states = DirectedStateSet::from_directions(&vec![Direction::Forward; seq.state_count()]);
    let generators = seq
        .input
        .symbols()
        .iter()
        .map(|a| (TapeSymbol::Letter(a.clone()), seq.state_map(a)))
        .collect();
    Ok(generate_monoid(&states, generators, DEFAULT_MONOID_CAP)?
        .aperiodicity()
        .aperiodic)
}
