//! Composition of planar reversible two-way transducers.
//!
//! The composite runs on the cells of the first machine. Each transition
//! `(q, v, q')` of the first machine lays the word `v` out on the tape of the
//! second machine; the second machine is simulated on that segment from each
//! state it could enter with, and the way it leaves the segment determines a
//! transition of the product.

use std::collections::BTreeSet;

use crate::alphabet::TapeSymbol;
use crate::error::{Error, Result};
use crate::machine::{MachineKind, Transition, TwoWayMachine};
use crate::planarity::{check_planar_machine, find_planar_order, LetterScope, MachinePlanarity, DEFAULT_ORDER_SEARCH_CAP};
use crate::run::SegmentExit;
use crate::states::{DirectedStateSet, StateId};

/// The output of `t`, as laid out on the second machine's tape: `⊳` is added
/// in front of the opening move of a run and `⊲` behind its closing move.
fn decorated_output(states: &DirectedStateSet, on: &TapeSymbol, t: &Transition) -> Vec<TapeSymbol> {
    let mut tape: Vec<TapeSymbol> = t.output.iter().cloned().map(TapeSymbol::Letter).collect();
    match on {
        TapeSymbol::LeftMarker if states.is_forward(t.source) => tape.insert(0, TapeSymbol::LeftMarker),
        TapeSymbol::RightMarker if states.is_forward(t.target) => tape.push(TapeSymbol::RightMarker),
        _ => {}
    }
    tape
}

fn ensure_reversible(m: &TwoWayMachine, which: &'static str) -> Result<()> {
    if m.is_reversible() {
        Ok(())
    } else {
        Err(Error::NotReversible { which })
    }
}

fn ensure_planar(m: &TwoWayMachine, which: &'static str) -> Result<()> {
    match check_planar_machine(m, LetterScope::All)? {
        MachinePlanarity::Planar => Ok(()),
        MachinePlanarity::NonPlanar { symbol, witness } => Err(Error::NotPlanar {
            which,
            symbol,
            witness: Box::new(witness),
        }),
    }
}

/// Returns `m` with a planar order, searching for one if none is set.
fn with_planar_order(m: &TwoWayMachine, which: &'static str) -> Result<TwoWayMachine> {
    let mut m = m.clone();
    if !m.states().has_order() {
        match find_planar_order(&m, LetterScope::All, DEFAULT_ORDER_SEARCH_CAP)? {
            Some(order) => m.set_order(order)?,
            None => return Err(Error::NoPlanarOrder { which }),
        }
    }
    ensure_planar(&m, which)?;
    Ok(m)
}

/// Which state order made the composite planar.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositeOrder {
    /// `(q, r) < (q', r')` iff `q < q'`, or `q = q'` and `r < r'`.
    Lexicographic,
    /// Lexicographic, except that the order on the second machine's states
    /// is reversed inside the block of each backward state of the first.
    Twisted,
    /// Found by exhaustive search.
    Searched,
}

#[derive(Clone, Debug)]
pub struct Composition {
    pub machine: TwoWayMachine,
    pub order: CompositeOrder,
}

/// Product order on `Q × R`, Q-major, with states indexed `q * |R| + r`.
pub fn product_order(qs: &DirectedStateSet, rs: &DirectedStateSet, twisted: bool) -> Result<Vec<StateId>> {
    let o1 = qs.order().ok_or(Error::MissingOrder)?;
    let o2 = rs.order().ok_or(Error::MissingOrder)?;
    let nr = rs.len();
    Ok(o1
        .iter()
        .flat_map(|&q| {
            let mut block: Vec<StateId> = o2.iter().map(|&r| q * nr + r).collect();
            if twisted && !qs.is_forward(q) {
                block.reverse();
            }
            block
        })
        .collect())
}

/// A transducer computing `second ∘ first`, checked to be reversible and planar.
pub fn compose_transducers(first: &TwoWayMachine, second: &TwoWayMachine) -> Result<TwoWayMachine> {
    Ok(compose_with_report(first, second)?.machine)
}

/// Like [`compose_transducers`], also telling which product order was used:
/// the lexicographic order if it makes the composite planar, else the
/// twisted one, else the first planar order found by search.
pub fn compose_with_report(first: &TwoWayMachine, second: &TwoWayMachine) -> Result<Composition> {
    ensure_reversible(first, "first")?;
    ensure_reversible(second, "second")?;
    let first = with_planar_order(first, "first")?;
    let second = with_planar_order(second, "second")?;
    let mut machine = compose_unchecked(&first, &second)?;
    ensure_reversible(&machine, "composite")?;
    if check_planar_machine(&machine, LetterScope::All)?.is_planar() {
        return Ok(Composition {
            machine,
            order: CompositeOrder::Lexicographic,
        });
    }
    let lexicographic_failure = ensure_planar(&machine, "composite").unwrap_err();
    machine.set_order(product_order(first.states(), second.states(), true)?)?;
    if check_planar_machine(&machine, LetterScope::All)?.is_planar() {
        return Ok(Composition {
            machine,
            order: CompositeOrder::Twisted,
        });
    }
    if machine.states().len() <= DEFAULT_ORDER_SEARCH_CAP {
        if let Some(order) = find_planar_order(&machine, LetterScope::All, DEFAULT_ORDER_SEARCH_CAP)? {
            machine.set_order(order)?;
            return Ok(Composition {
                machine,
                order: CompositeOrder::Searched,
            });
        }
    }
    Err(lexicographic_failure)
}

/// The product construction without the reversibility and planarity checks.
///
/// Both machines must be deterministic. The result carries the lexicographic
/// order when both inputs are ordered.
pub fn compose_unchecked(first: &TwoWayMachine, second: &TwoWayMachine) -> Result<TwoWayMachine> {
    if let Some(a) = first
        .output_alphabet()
        .symbols()
        .iter()
        .find(|a| !second.input_alphabet().contains(a))
    {
        return Err(Error::AlphabetMismatch(a.to_string()));
    }
    let (qs, rs) = (first.states(), second.states());
    let nr = rs.len();
    let pair = |q: StateId, r: StateId| q * nr + r;
    let mut states = DirectedStateSet::new((0..qs.len()).flat_map(|q| {
        (0..nr).map(move |r| {
            (
                format!("({},{})", qs.name(q), rs.name(r)),
                qs.direction(q).times(rs.direction(r)),
            )
        })
    }))?;
    if qs.has_order() && rs.has_order() {
        states.set_order(product_order(qs, rs, false)?)?;
    }
    let finals: Vec<StateId> = first
        .finals()
        .iter()
        .flat_map(|&q| second.finals().iter().map(move |&r| pair(q, r)))
        .collect();
    let mut out = TwoWayMachine::new(
        MachineKind::Transducer,
        first.input_alphabet().clone(),
        second.output_alphabet().clone(),
        states,
        pair(first.initial(), second.initial()),
        finals,
    )?;

    let runner = second.runner()?;
    let mut triples = BTreeSet::new();
    for (on, ts) in first.delta() {
        for t in ts {
            let segment = runner.encode(&decorated_output(qs, on, t))?;
            let bound = nr * (segment.len() + 2);
            for r in 0..nr {
                let (exit, _) = runner.run_segment(&segment, r, bound, |_, _, _| {});
                let forward = rs.is_forward(r);
                let (from_q, to) = match exit {
                    SegmentExit::Right(r2, w) => ((if forward { t.source } else { t.target }), (t.target, r2, w)),
                    SegmentExit::Left(r2, w) => ((if forward { t.source } else { t.target }), (t.source, r2, w)),
                    SegmentExit::Stuck | SegmentExit::Looping => continue,
                };
                let (to_q, r2, w) = to;
                triples.insert((on.clone(), pair(from_q, r), w, pair(to_q, r2)));
            }
        }
    }
    for (on, source, w, target) in triples {
        out.add_transition(on, source, w, target)?;
    }
    Ok(out)
}
