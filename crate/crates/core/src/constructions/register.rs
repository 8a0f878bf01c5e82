//! Monotone register transducers: stateless streaming transducers whose
//! registers are updated by copyless updates listing the registers in increasing order.

use std::collections::BTreeMap;

use crate::alphabet::{Alphabet, Symbol, TapeSymbol, Word};
use crate::error::{Error, Result};
use crate::machine::{MachineKind, TwoWayMachine};
use crate::states::{DirectedStateSet, Direction, StateId};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum UpdateItem {
    Symbol(Symbol),
    Register(usize),
}

/// `σ`: for every register, in register order, a word over registers and output symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RegisterUpdate {
    assignment: Vec<Vec<UpdateItem>>,
}

impl RegisterUpdate {
    /// All registers set to `ε`.
    pub fn empty(registers: usize) -> Self {
        RegisterUpdate {
            assignment: vec![Vec::new(); registers],
        }
    }

    pub fn from_assignment(assignment: Vec<Vec<UpdateItem>>) -> Self {
        RegisterUpdate { assignment }
    }

    pub fn set(&mut self, register: usize, rhs: Vec<UpdateItem>) {
        self.assignment[register] = rhs;
    }

    pub fn get(&self, register: usize) -> &[UpdateItem] {
        &self.assignment[register]
    }

    pub fn registers(&self) -> usize {
        self.assignment.len()
    }

    /// `σ†`: substitutes the current register values into every right-hand side.
    pub fn apply(&self, values: &[Word]) -> Vec<Word> {
        self.assignment
            .iter()
            .map(|rhs| {
                let mut w = Word::new();
                for item in rhs {
                    match item {
                        UpdateItem::Symbol(s) => w.push(s.clone()),
                        UpdateItem::Register(r) => w.extend_from_slice(&values[*r]),
                    }
                }
                w
            })
            .collect()
    }

    /// Register occurrences in `σ(r1) … σ(rn)`.
    pub fn occurrences(&self) -> Vec<usize> {
        self.assignment
            .iter()
            .flatten()
            .filter_map(|i| match i {
                UpdateItem::Register(r) => Some(*r),
                UpdateItem::Symbol(_) => None,
            })
            .collect()
    }

    /// Splits `σ(r)` as `w0 r'1 w1 … r'k wk`: returns the registers and the `k + 1` constant chunks.
    pub fn chunks(&self, register: usize) -> (Vec<usize>, Vec<Word>) {
        let mut regs = Vec::new();
        let mut words = vec![Word::new()];
        for item in &self.assignment[register] {
            match item {
                UpdateItem::Symbol(s) => words.last_mut().expect("nonempty").push(s.clone()),
                UpdateItem::Register(r) => {
                    regs.push(*r);
                    words.push(Word::new());
                }
            }
        }
        (regs, words)
    }

    /// Describes why the update is not copyless monotone, if it is not.
    pub fn monotonicity_violation(&self) -> Option<String> {
        let occ = self.occurrences();
        if let Some(&r) = occ.iter().find(|&&r| r >= self.registers()) {
            return Some(format!("unknown register #{r}"));
        }
        occ.windows(2).find(|w| w[0] >= w[1]).map(|w| {
            if w[0] == w[1] {
                format!("register #{} occurs twice", w[0])
            } else {
                format!("register #{} occurs after register #{}", w[1], w[0])
            }
        })
    }

    pub fn is_copyless_monotone(&self) -> bool {
        self.monotonicity_violation().is_none()
    }
}

pub fn is_copyless_monotone(update: &RegisterUpdate) -> bool {
    update.is_copyless_monotone()
}

/// Registers `R` in increasing order (the first is the output register `X`)
/// and one update per input letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneRegisterTransducer {
    input: Alphabet,
    output: Alphabet,
    registers: Vec<String>,
    updates: BTreeMap<Symbol, RegisterUpdate>,
}

impl MonotoneRegisterTransducer {
    /// Every letter starts with the update setting all registers to `ε`.
    pub fn new(input: Alphabet, output: Alphabet, registers: Vec<String>) -> Result<Self> {
        if registers.is_empty() {
            return Err(Error::validation("at least one register is required"));
        }
        for (i, r) in registers.iter().enumerate() {
            if registers[..i].contains(r) {
                return Err(Error::validation(format!("duplicate register `{r}`")));
            }
            if output.contains(&Symbol::new(r)) {
                return Err(Error::validation(format!("register `{r}` is also an output symbol")));
            }
        }
        let n = registers.len();
        Ok(MonotoneRegisterTransducer {
            updates: input
                .symbols()
                .iter()
                .map(|a| (a.clone(), RegisterUpdate::empty(n)))
                .collect(),
            input,
            output,
            registers,
        })
    }

    pub fn set_update(&mut self, letter: &Symbol, register: usize, rhs: Vec<UpdateItem>) -> Result<()> {
        if register >= self.registers.len() {
            return Err(Error::UnknownState(register.to_string()));
        }
        for item in &rhs {
            match item {
                UpdateItem::Symbol(s) if !self.output.contains(s) => {
                    return Err(Error::AlphabetError(s.to_string()))
                }
                UpdateItem::Register(r) if *r >= self.registers.len() => {
                    return Err(Error::UnknownState(r.to_string()))
                }
                _ => {}
            }
        }
        self.updates
            .get_mut(letter)
            .ok_or_else(|| Error::AlphabetError(letter.to_string()))?
            .set(register, rhs);
        Ok(())
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output
    }

    pub fn registers(&self) -> &[String] {
        &self.registers
    }

    pub fn register_index(&self, name: &str) -> Option<usize> {
        self.registers.iter().position(|r| r == name)
    }

    pub fn update(&self, letter: &Symbol) -> Option<&RegisterUpdate> {
        self.updates.get(letter)
    }

    pub fn updates(&self) -> &BTreeMap<Symbol, RegisterUpdate> {
        &self.updates
    }

    pub fn check_copyless_monotone(&self) -> Result<()> {
        for (a, u) in &self.updates {
            if let Some(reason) = u.monotonicity_violation() {
                return Err(Error::NotCopylessMonotone {
                    letter: a.to_string(),
                    reason,
                });
            }
        }
        Ok(())
    }

    /// Register values after reading `word` from the all-`ε` vector.
    pub fn register_values(&self, word: &[Symbol]) -> Result<Vec<Word>> {
        let mut values = vec![Word::new(); self.registers.len()];
        for a in word {
            let u = self.updates.get(a).ok_or_else(|| Error::AlphabetError(a.to_string()))?;
            values = u.apply(&values);
        }
        Ok(values)
    }

    pub fn apply(&self, word: &[Symbol]) -> Result<Word> {
        Ok(self.register_values(word)?.swap_remove(0))
    }
}

pub fn mrt_apply(mrt: &MonotoneRegisterTransducer, word: &[Symbol]) -> Result<Word> {
    mrt.apply(word)
}

/// Name of the idle state of [`mrt_to_planar`].
pub const IDLE_STATE: &str = "•";

/// Index of the query state `(r, −1)` in the translated machine.
pub fn query_state(register: usize) -> StateId {
    1 + 2 * register
}

/// Index of the answer state `(r, +1)` in the translated machine.
pub fn answer_state(register: usize) -> StateId {
    2 + 2 * register
}

/// A planar reversible two-way transducer computing the same function.
///
/// `(r, −1)` asks for the value of register `r` on the prefix left of the
/// head; the machine answers by returning to the same boundary in `(r, +1)`
/// after emitting that value.
pub fn mrt_to_planar(mrt: &MonotoneRegisterTransducer) -> Result<TwoWayMachine> {
    mrt.check_copyless_monotone()?;
    let mut names = vec![(IDLE_STATE.to_string(), Direction::Forward)];
    for r in &mrt.registers {
        names.push((format!("{r}-"), Direction::Backward));
        names.push((format!("{r}+"), Direction::Forward));
    }
    let states = DirectedStateSet::new(names)?.with_natural_order();
    let (idle, q, a) = (0, query_state, answer_state);
    let mut m = TwoWayMachine::new(
        MachineKind::Transducer,
        mrt.input.clone(),
        mrt.output.clone(),
        states,
        idle,
        [a(0)],
    )?;
    m.add_transition(TapeSymbol::LeftMarker, idle, vec![], idle)?;
    for r in 0..mrt.registers.len() {
        m.add_transition(TapeSymbol::LeftMarker, q(r), vec![], a(r))?;
    }
    m.add_transition(TapeSymbol::RightMarker, idle, vec![], q(0))?;
    m.add_transition(TapeSymbol::RightMarker, a(0), vec![], a(0))?;
    for (letter, u) in &mrt.updates {
        let x = TapeSymbol::Letter(letter.clone());
        m.add_transition(x.clone(), idle, vec![], idle)?;
        for r in 0..mrt.registers.len() {
            let (regs, mut words) = u.chunks(r);
            if regs.is_empty() {
                m.add_transition(x.clone(), q(r), words.remove(0), a(r))?;
                continue;
            }
            m.add_transition(x.clone(), q(r), words[0].clone(), q(regs[0]))?;
            for j in 1..regs.len() {
                m.add_transition(x.clone(), a(regs[j - 1]), words[j].clone(), q(regs[j]))?;
            }
            let k = regs.len();
            m.add_transition(x.clone(), a(regs[k - 1]), words[k].clone(), a(r))?;
        }
    }
    Ok(m)
}
