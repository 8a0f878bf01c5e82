//! Configurations and deterministic run semantics.

use std::collections::HashMap;

use crate::alphabet::{Symbol, TapeSymbol, Word};
use crate::error::{Error, Result};
use crate::machine::TwoWayMachine;
use crate::states::StateId;

/// A configuration `(left, state, right)`; the head sits between `left` and `right`.
///
/// A forward state reads the first symbol of `right`, a backward state the
/// last symbol of `left`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub left: Vec<TapeSymbol>,
    pub state: StateId,
    pub right: Vec<TapeSymbol>,
}

impl Configuration {
    /// `(ε, q0, ⊳w⊲)`.
    pub fn initial(machine: &TwoWayMachine, w: &[Symbol]) -> Self {
        Configuration {
            left: Vec::new(),
            state: machine.initial(),
            right: TapeSymbol::tape(w),
        }
    }

    pub fn position(&self) -> usize {
        self.left.len()
    }

    pub fn tape(&self) -> Vec<TapeSymbol> {
        let mut t = self.left.clone();
        t.extend(self.right.iter().cloned());
        t
    }

    fn from_tape(tape: &[TapeSymbol], position: usize, state: StateId) -> Self {
        Configuration {
            left: tape[..position].to_vec(),
            state,
            right: tape[position..].to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunStatus {
    Accepted,
    /// No transition applies before the right end is reached.
    RejectedStuck,
    /// The right end was reached in a non-final state.
    RejectedNonfinal,
    /// More steps than there are configurations: the run cycles.
    Looping,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub config: Configuration,
    /// Output of the step that produced `config` (empty for the initial one).
    pub emitted: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunResult {
    pub status: RunStatus,
    pub output: Word,
    pub trace: Option<Vec<TraceStep>>,
    pub steps: usize,
}

impl RunResult {
    pub fn accepted(&self) -> bool {
        self.status == RunStatus::Accepted
    }

    /// The output if the run accepted.
    pub fn into_output(self) -> Option<Word> {
        self.accepted().then_some(self.output)
    }
}

impl TwoWayMachine {
    /// One step of the successor relation, or `None` when no transition applies.
    pub fn step(&self, config: &Configuration) -> Result<Option<(Configuration, Word)>> {
        let q = config.state;
        let forward = self.states().is_forward(q);
        let read = if forward {
            config.right.first()
        } else {
            config.left.last()
        };
        let Some(read) = read else {
            return Ok(None);
        };
        let mut applicable = self.transitions(read).filter(|t| t.source == q);
        let Some(t) = applicable.next() else {
            return Ok(None);
        };
        if applicable.next().is_some() {
            return Err(Error::NondeterministicMachine {
                state: self.states().name(q).to_string(),
                symbol: read.clone(),
            });
        }
        let mut next = config.clone();
        next.state = t.target;
        match (forward, self.states().is_forward(t.target)) {
            (true, true) => {
                let a = next.right.remove(0);
                next.left.push(a);
            }
            (false, false) => {
                let a = next.left.pop().expect("read from left");
                next.right.insert(0, a);
            }
            _ => {}
        }
        Ok(Some((next, t.output.clone())))
    }

    /// Runs the machine on `w` from `(ε, q0, ⊳w⊲)`.
    pub fn run(&self, w: &[Symbol]) -> Result<RunResult> {
        self.runner()?.run(w)
    }

    /// Like [`TwoWayMachine::run`], also recording every configuration.
    pub fn run_traced(&self, w: &[Symbol]) -> Result<RunResult> {
        self.runner()?.run_traced(w)
    }

    /// Precompiles the transition table; reuse it when running many words.
    pub fn runner(&self) -> Result<Runner<'_>> {
        Runner::new(self)
    }
}

/// Where a run over a segment left it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum SegmentExit {
    /// Left the segment across its left boundary in a backward state.
    Left(StateId, Word),
    /// Left the segment across its right boundary in a forward state.
    Right(StateId, Word),
    Stuck,
    Looping,
}

/// A deterministic machine with its transition table indexed by symbol code.
///
/// Codes: `0` is `⊳`, `1..=k` are the input letters, `k + 1` is `⊲`.
pub struct Runner<'a> {
    machine: &'a TwoWayMachine,
    codes: HashMap<&'a Symbol, usize>,
    table: Vec<Option<(StateId, &'a [Symbol])>>,
    forward: Vec<bool>,
}

impl<'a> Runner<'a> {
    fn new(machine: &'a TwoWayMachine) -> Result<Self> {
        if let Some((symbol, q)) = machine.determinism_violation() {
            return Err(Error::NondeterministicMachine {
                state: machine.states().name(q).to_string(),
                symbol,
            });
        }
        let n = machine.states().len();
        let letters = machine.input_alphabet().symbols();
        let codes: HashMap<&Symbol, usize> =
            letters.iter().enumerate().map(|(i, a)| (a, i + 1)).collect();
        let mut table = vec![None; n * (letters.len() + 2)];
        for (on, ts) in machine.delta() {
            let code = match on {
                TapeSymbol::LeftMarker => 0,
                TapeSymbol::RightMarker => letters.len() + 1,
                TapeSymbol::Letter(a) => codes[a],
            };
            for t in ts {
                table[code * n + t.source] = Some((t.target, t.output.as_slice()));
            }
        }
        let forward = (0..n).map(|q| machine.states().is_forward(q)).collect();
        Ok(Runner {
            machine,
            codes,
            table,
            forward,
        })
    }

    pub fn machine(&self) -> &'a TwoWayMachine {
        self.machine
    }

    fn right_marker(&self) -> usize {
        self.codes.len() + 1
    }

    pub(crate) fn encode_letter(&self, a: &Symbol) -> Result<usize> {
        self.codes
            .get(a)
            .copied()
            .ok_or_else(|| Error::AlphabetError(a.to_string()))
    }

    pub(crate) fn encode(&self, tape: &[TapeSymbol]) -> Result<Vec<usize>> {
        tape.iter()
            .map(|x| match x {
                TapeSymbol::LeftMarker => Ok(0),
                TapeSymbol::RightMarker => Ok(self.right_marker()),
                TapeSymbol::Letter(a) => self.encode_letter(a),
            })
            .collect()
    }

    fn encode_word(&self, w: &[Symbol]) -> Result<Vec<usize>> {
        let mut tape = Vec::with_capacity(w.len() + 2);
        tape.push(0);
        for a in w {
            tape.push(self.encode_letter(a)?);
        }
        tape.push(self.right_marker());
        Ok(tape)
    }

    /// Runs from `state` entering the segment on the side its direction
    /// dictates, until the head leaves the segment, blocks, or exceeds
    /// `max_steps`. Returns the exit and the number of steps taken.
    pub(crate) fn run_segment(
        &self,
        segment: &[usize],
        state: StateId,
        max_steps: usize,
        mut on_step: impl FnMut(usize, StateId, &[Symbol]),
    ) -> (SegmentExit, usize) {
        let n = self.forward.len();
        let len = segment.len();
        let mut q = state;
        let mut pos = if self.forward[q] { 0 } else { len };
        let mut out = Word::new();
        let mut steps = 0;
        loop {
            let code = if self.forward[q] {
                if pos == len {
                    return (SegmentExit::Right(q, out), steps);
                }
                segment[pos]
            } else {
                if pos == 0 {
                    return (SegmentExit::Left(q, out), steps);
                }
                segment[pos - 1]
            };
            let Some((r, emitted)) = self.table[code * n + q] else {
                return (SegmentExit::Stuck, steps);
            };
            match (self.forward[q], self.forward[r]) {
                (true, true) => pos += 1,
                (false, false) => pos -= 1,
                _ => {}
            }
            q = r;
            out.extend_from_slice(emitted);
            steps += 1;
            on_step(pos, q, emitted);
            if steps > max_steps {
                return (SegmentExit::Looping, steps);
            }
        }
    }

    pub fn run(&self, w: &[Symbol]) -> Result<RunResult> {
        self.run_inner(w, false)
    }

    pub fn run_traced(&self, w: &[Symbol]) -> Result<RunResult> {
        self.run_inner(w, true)
    }

    fn run_inner(&self, w: &[Symbol], traced: bool) -> Result<RunResult> {
        let tape = self.encode_word(w)?;
        let q0 = self.machine.initial();
        let bound = self.forward.len() * (w.len() + 3);
        let full_tape = traced.then(|| TapeSymbol::tape(w));
        let mut trace = full_tape.as_ref().map(|t| {
            vec![TraceStep {
                config: Configuration::from_tape(t, 0, q0),
                emitted: Word::new(),
            }]
        });
        let (exit, steps) = self.run_segment(&tape, q0, bound, |pos, q, emitted| {
            if let (Some(trace), Some(t)) = (trace.as_mut(), full_tape.as_ref()) {
                trace.push(TraceStep {
                    config: Configuration::from_tape(t, pos, q),
                    emitted: emitted.to_vec(),
                });
            }
        });
        let (status, output) = match exit {
            SegmentExit::Right(q, out) if self.machine.is_final(q) => (RunStatus::Accepted, out),
            SegmentExit::Right(_, out) => (RunStatus::RejectedNonfinal, out),
            // a backward state at position 0 has nothing to read
            SegmentExit::Left(_, out) => (RunStatus::RejectedStuck, out),
            SegmentExit::Stuck => (RunStatus::RejectedStuck, Word::new()),
            SegmentExit::Looping => (RunStatus::Looping, Word::new()),
        };
        Ok(RunResult {
            status,
            output,
            trace,
            steps,
        })
    }
}
