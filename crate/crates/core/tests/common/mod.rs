#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use planar_twoway::alphabet::{Alphabet, Symbol, TapeSymbol, Word};
use planar_twoway::constructions::{MonotoneRegisterTransducer, SequentialTransducer};
use planar_twoway::io::{parse_document, parse_two_way, MachineDocument};
use planar_twoway::monoid::Behavior;
use planar_twoway::planarity::{check_planar_machine, LetterScope};
use planar_twoway::states::{DirectedStateSet, Direction, StateId};
use planar_twoway::{MachineKind, TwoWayMachine};

pub const M_EX: &str = include_str!("../../fixtures/b_two_before_first_c.2dfa");
pub const SEQ: &str = include_str!("../../fixtures/two_state_aperiodic.seq");
pub const MRT: &str = include_str!("../../fixtures/two_register.mrt");
pub const SEQ_RESET: &str = include_str!("../../fixtures/reset_or_keep.seq");
pub const SWAP: &str = include_str!("../../fixtures/forward_swap.2dfa");

pub fn example_automaton() -> TwoWayMachine {
    parse_two_way(M_EX).unwrap()
}

pub fn sequential_fixture() -> SequentialTransducer {
    sequential(SEQ)
}

pub fn reset_fixture() -> SequentialTransducer {
    sequential(SEQ_RESET)
}

fn sequential(text: &str) -> SequentialTransducer {
    match parse_document(text).unwrap() {
        MachineDocument::Sequential(s) => s,
        _ => unreachable!(),
    }
}

pub fn register_fixture() -> MonotoneRegisterTransducer {
    match parse_document(MRT).unwrap() {
        MachineDocument::Register(m) => m,
        _ => unreachable!(),
    }
}

/// The language `{a,b}* b {a,b} c {a,b,c}*`, as a regular expression.
pub fn example_language() -> regex::Regex {
    regex::Regex::new("^[ab]*b[ab]c[abc]*$").unwrap()
}

pub fn text(w: &[Symbol]) -> String {
    w.iter().map(Symbol::as_str).collect()
}

/// All `2^n` direction assignments, with the natural order.
pub fn direction_assignments(n: usize) -> Vec<DirectedStateSet> {
    (0..1u32 << n)
        .map(|mask| {
            let dirs: Vec<Direction> = (0..n)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Direction::Backward
                    } else {
                        Direction::Forward
                    }
                })
                .collect();
            DirectedStateSet::from_directions(&dirs).with_natural_order()
        })
        .collect()
}

pub fn random_states(rng: &mut impl Rng, n: usize) -> DirectedStateSet {
    let dirs: Vec<Direction> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Direction::Forward
            } else {
                Direction::Backward
            }
        })
        .collect();
    let mut order: Vec<StateId> = (0..n).collect();
    order.shuffle(rng);
    DirectedStateSet::from_directions(&dirs).with_order(order).unwrap()
}

pub fn random_relation(rng: &mut impl Rng, n: usize, density: f64) -> Behavior {
    let mut b = Behavior::empty(n);
    for q in 0..n {
        for r in 0..n {
            if rng.gen_bool(density) {
                b.insert(q, r);
            }
        }
    }
    b
}

pub fn random_partial_function(rng: &mut impl Rng, n: usize) -> Behavior {
    let f: Vec<Option<StateId>> = (0..n).map(|_| rng.gen_range(0..=n).checked_sub(1)).collect();
    Behavior::from_partial_function(&f)
}

pub fn random_partial_injection(rng: &mut impl Rng, n: usize) -> Behavior {
    let mut targets: Vec<StateId> = (0..n).collect();
    targets.shuffle(rng);
    let mut b = Behavior::empty(n);
    for (q, &r) in targets.iter().enumerate() {
        if rng.gen_bool(0.75) {
            b.insert(q, r);
        }
    }
    b
}

fn random_word(rng: &mut impl Rng, alphabet: &Alphabet, max: usize) -> Word {
    let len = rng.gen_range(0..=max);
    (0..len)
        .map(|_| alphabet.symbols()[rng.gen_range(0..alphabet.len())].clone())
        .collect()
}

/// A random reversible transducer with at most `max_states` states that is
/// planar under its (natural) order, over `alphabet` in and out.
pub fn random_planar_reversible(rng: &mut impl Rng, alphabet: &Alphabet, max_states: usize) -> TwoWayMachine {
    loop {
        let n = rng.gen_range(1..=max_states);
        let mut dirs: Vec<Direction> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Direction::Forward
                } else {
                    Direction::Backward
                }
            })
            .collect();
        dirs[0] = Direction::Forward;
        let states = DirectedStateSet::from_directions(&dirs).with_natural_order();
        let finals: Vec<StateId> = (0..n).filter(|&q| dirs[q].is_forward() && rng.gen_bool(0.6)).collect();
        let mut m = TwoWayMachine::new(
            MachineKind::Transducer,
            alphabet.clone(),
            alphabet.clone(),
            states,
            0,
            finals,
        )
        .unwrap();
        for x in alphabet.tape_symbols() {
            let rel = random_partial_injection(rng, n);
            for (q, r) in rel.pairs() {
                m.add_transition(x.clone(), q, random_word(rng, alphabet, 2), r).unwrap();
            }
        }
        if check_planar_machine(&m, LetterScope::All).unwrap().is_planar() && accepts_something(&m, alphabet) {
            return m;
        }
    }
}

fn accepts_something(m: &TwoWayMachine, alphabet: &Alphabet) -> bool {
    planar_twoway::oracles::enumerate_words(alphabet, 3).any(|w| m.run(&w).unwrap().accepted())
}

pub fn tape(s: &str) -> Vec<TapeSymbol> {
    s.chars()
        .map(|c| match c {
            '^' => TapeSymbol::LeftMarker,
            '$' => TapeSymbol::RightMarker,
            c => TapeSymbol::letter(&c.to_string()),
        })
        .collect()
}

/// How a walk over a tape segment ended.
#[derive(Debug, PartialEq, Eq)]
pub enum Walk {
    Right(StateId, Word),
    Left(StateId, Word),
    Stuck,
    Looping,
}

/// Naive step-by-step walk of a deterministic machine over `segment`,
/// entering in `state` on the side its direction dictates.
pub fn walk(m: &TwoWayMachine, segment: &[TapeSymbol], state: StateId) -> Walk {
    let len = segment.len();
    let mut q = state;
    let mut pos = if m.states().is_forward(q) { 0 } else { len };
    let mut out = Word::new();
    for _ in 0..=m.states().len() * (len + 2) {
        let forward = m.states().is_forward(q);
        let cell = match (forward, pos) {
            (true, p) if p == len => return Walk::Right(q, out),
            (false, 0) => return Walk::Left(q, out),
            (true, p) => p,
            (false, p) => p - 1,
        };
        let Some(t) = m.transitions(&segment[cell]).find(|t| t.source == q) else {
            return Walk::Stuck;
        };
        match (forward, m.states().is_forward(t.target)) {
            (true, true) => pos += 1,
            (false, false) => pos -= 1,
            _ => {}
        }
        out.extend(t.output.iter().cloned());
        q = t.target;
    }
    Walk::Looping
}

/// The function computed by a deterministic transducer, via [`walk`].
pub fn walk_output(m: &TwoWayMachine, w: &[Symbol]) -> Option<Word> {
    match walk(m, &TapeSymbol::tape(w), m.initial()) {
        Walk::Right(q, out) if m.is_final(q) => Some(out),
        _ => None,
    }
}
