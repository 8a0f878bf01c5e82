//! Two-way machines over the tape `⊳ w ⊲`.
//!
//! Automata and transducers share [`TwoWayMachine`]; an automaton is a
//! transducer whose transitions all emit the empty word.

use std::collections::{BTreeMap, BTreeSet};

use crate::alphabet::{Alphabet, Symbol, TapeSymbol, Word, LEFT_MARKER_TOKEN, RIGHT_MARKER_TOKEN};
use crate::error::{Error, Result};
use crate::monoid::Behavior;
use crate::states::{DirectedStateSet, Direction, StateId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MachineKind {
    Automaton,
    Transducer,
}

/// One transition triple `(source, output, target)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub source: StateId,
    pub target: StateId,
    pub output: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoWayMachine {
    kind: MachineKind,
    input: Alphabet,
    output: Alphabet,
    states: DirectedStateSet,
    initial: StateId,
    finals: BTreeSet<StateId>,
    delta: BTreeMap<TapeSymbol, BTreeSet<Transition>>,
}

impl TwoWayMachine {
    pub fn new(
        kind: MachineKind,
        input: Alphabet,
        output: Alphabet,
        states: DirectedStateSet,
        initial: StateId,
        finals: impl IntoIterator<Item = StateId>,
    ) -> Result<Self> {
        if initial >= states.len() {
            return Err(Error::UnknownState(initial.to_string()));
        }
        if !states.is_forward(initial) {
            return Err(Error::validation(format!(
                "initial state `{}` must be a forward state",
                states.name(initial)
            )));
        }
        let finals: BTreeSet<StateId> = finals.into_iter().collect();
        if let Some(&bad) = finals.iter().find(|&&q| q >= states.len()) {
            return Err(Error::UnknownState(bad.to_string()));
        }
        Ok(TwoWayMachine {
            kind,
            input,
            output,
            states,
            initial,
            finals,
            delta: BTreeMap::new(),
        })
    }

    /// Adds a transition reading `on`.
    pub fn add_transition(
        &mut self,
        on: TapeSymbol,
        source: StateId,
        output: Word,
        target: StateId,
    ) -> Result<()> {
        if let TapeSymbol::Letter(a) = &on {
            if !self.input.contains(a) {
                return Err(Error::AlphabetError(a.to_string()));
            }
        }
        for q in [source, target] {
            if q >= self.states.len() {
                return Err(Error::UnknownState(q.to_string()));
            }
        }
        if self.kind == MachineKind::Automaton && !output.is_empty() {
            return Err(Error::validation("automaton transitions cannot emit output"));
        }
        self.output.check_word(&output)?;
        self.delta.entry(on).or_default().insert(Transition {
            source,
            target,
            output,
        });
        Ok(())
    }

    /// Name-based variant of [`TwoWayMachine::add_transition`]; `on` may be `^` or `$`.
    pub fn add(&mut self, on: &str, source: &str, output: &[Symbol], target: &str) -> Result<()> {
        let on = match on {
            LEFT_MARKER_TOKEN => TapeSymbol::LeftMarker,
            RIGHT_MARKER_TOKEN => TapeSymbol::RightMarker,
            a => TapeSymbol::letter(a),
        };
        let source = self.states.index_of(source)?;
        let target = self.states.index_of(target)?;
        self.add_transition(on, source, output.to_vec(), target)
    }

    pub fn kind(&self) -> MachineKind {
        self.kind
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output
    }

    pub fn states(&self) -> &DirectedStateSet {
        &self.states
    }

    pub fn set_order(&mut self, order: Vec<StateId>) -> Result<()> {
        self.states.set_order(order)
    }

    pub fn clear_order(&mut self) {
        self.states.clear_order();
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.contains(&q)
    }

    pub fn delta(&self) -> &BTreeMap<TapeSymbol, BTreeSet<Transition>> {
        &self.delta
    }

    pub fn transitions(&self, on: &TapeSymbol) -> impl Iterator<Item = &Transition> {
        self.delta.get(on).into_iter().flatten()
    }

    pub fn transition_count(&self) -> usize {
        self.delta.values().map(BTreeSet::len).sum()
    }

    /// The projected relation `⌊δ(x)⌋`.
    pub fn relation(&self, on: &TapeSymbol) -> Behavior {
        Behavior::from_pairs(
            self.states.len(),
            self.transitions(on).map(|t| (t.source, t.target)),
        )
    }

    /// The first symbol and state with two applicable transitions, if any.
    pub fn determinism_violation(&self) -> Option<(TapeSymbol, StateId)> {
        for (on, ts) in &self.delta {
            let mut seen = vec![false; self.states.len()];
            for t in ts {
                if std::mem::replace(&mut seen[t.source], true) {
                    return Some((on.clone(), t.source));
                }
            }
        }
        None
    }

    /// Every `δ(x)`, markers included, is a partial function and no pair
    /// carries two different outputs.
    pub fn is_deterministic(&self) -> bool {
        self.determinism_violation().is_none()
    }

    /// Deterministic, and every projected `δ(x)` is injective.
    pub fn is_reversible(&self) -> bool {
        self.is_deterministic()
            && self.delta.values().all(|ts| {
                let mut hit = vec![false; self.states.len()];
                ts.iter().all(|t| !std::mem::replace(&mut hit[t.target], true))
            })
    }

    /// `⌊T⌋`: the same machine with every output erased.
    pub fn domain_automaton(&self) -> TwoWayMachine {
        let delta = self
            .delta
            .iter()
            .map(|(on, ts)| {
                let erased = ts
                    .iter()
                    .map(|t| Transition {
                        source: t.source,
                        target: t.target,
                        output: Word::new(),
                    })
                    .collect();
                (on.clone(), erased)
            })
            .collect();
        TwoWayMachine {
            kind: MachineKind::Automaton,
            input: self.input.clone(),
            output: Alphabet::default(),
            states: self.states.clone(),
            initial: self.initial,
            finals: self.finals.clone(),
            delta,
        }
    }

    /// Every transition triple turned around: `(q, v, r)` becomes `(r, v, q)`.
    ///
    /// Directions are kept, so this is only meaningful as a relation-level check.
    pub fn transposed_transitions(&self) -> TwoWayMachine {
        let mut m = self.clone();
        for ts in m.delta.values_mut() {
            *ts = ts
                .iter()
                .map(|t| Transition {
                    source: t.target,
                    target: t.source,
                    output: t.output.clone(),
                })
                .collect();
        }
        m
    }

    /// Restricts the machine to the states reachable from the initial state
    /// in the transition graph (ignoring the tape). Keeps the relative order.
    pub fn trim(&self) -> TwoWayMachine {
        let n = self.states.len();
        let mut succ = vec![Vec::new(); n];
        for ts in self.delta.values() {
            for t in ts {
                succ[t.source].push(t.target);
            }
        }
        let mut reach = vec![false; n];
        let mut stack = vec![self.initial];
        reach[self.initial] = true;
        while let Some(q) = stack.pop() {
            for &r in &succ[q] {
                if !std::mem::replace(&mut reach[r], true) {
                    stack.push(r);
                }
            }
        }
        let kept: Vec<StateId> = (0..n).filter(|&q| reach[q]).collect();
        let mut new_id = vec![usize::MAX; n];
        for (i, &q) in kept.iter().enumerate() {
            new_id[q] = i;
        }
        let mut states = DirectedStateSet::new(
            kept.iter()
                .map(|&q| (self.states.name(q).to_string(), self.states.direction(q))),
        )
        .expect("names were already valid");
        if let Some(order) = self.states.order() {
            let order = order
                .iter()
                .filter(|&&q| reach[q])
                .map(|&q| new_id[q])
                .collect();
            states.set_order(order).expect("restriction of a permutation");
        }
        let delta = self
            .delta
            .iter()
            .map(|(on, ts)| {
                let ts = ts
                    .iter()
                    .filter(|t| reach[t.source])
                    .map(|t| Transition {
                        source: new_id[t.source],
                        target: new_id[t.target],
                        output: t.output.clone(),
                    })
                    .collect();
                (on.clone(), ts)
            })
            .collect();
        TwoWayMachine {
            kind: self.kind,
            input: self.input.clone(),
            output: self.output.clone(),
            states,
            initial: new_id[self.initial],
            finals: self.finals.iter().filter(|&&q| reach[q]).map(|&q| new_id[q]).collect(),
            delta,
        }
    }

    /// The one-state transducer copying its input.
    pub fn identity_transducer(alphabet: &Alphabet) -> TwoWayMachine {
        let states = DirectedStateSet::new([("1", Direction::Forward)])
            .expect("valid")
            .with_natural_order();
        let mut m = TwoWayMachine::new(
            MachineKind::Transducer,
            alphabet.clone(),
            alphabet.clone(),
            states,
            0,
            [0],
        )
        .expect("valid");
        for x in alphabet.tape_symbols() {
            let out = x.as_letter().map(|a| vec![a.clone()]).unwrap_or_default();
            m.add_transition(x, 0, out, 0).expect("valid");
        }
        m
    }
}
