//! Brute-force reference implementations for checking the rest of the crate.

use std::collections::VecDeque;

use crate::alphabet::{Alphabet, Symbol, TapeSymbol, Word};
use crate::error::Result;
use crate::machine::TwoWayMachine;
use crate::monoid::Behavior;

/// All words of length `0..=max_length` in length-lexicographic order.
pub fn enumerate_words(alphabet: &Alphabet, max_length: usize) -> impl Iterator<Item = Word> + '_ {
    let k = alphabet.len();
    let mut digits: Vec<usize> = Vec::new();
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let w: Word = digits.iter().map(|&d| alphabet.symbols()[d].clone()).collect();
        // Odometer increment, growing the length when all digits wrap.
        let mut i = digits.len();
        loop {
            if i == 0 {
                if digits.len() == max_length || k == 0 {
                    done = true;
                } else {
                    digits = vec![0; digits.len() + 1];
                }
                break;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < k {
                break;
            }
            digits[i] = 0;
        }
        Some(w)
    })
}

/// `None` means undefined (rejected).
pub type Outcome = Option<Word>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub equal: bool,
    /// Least word (length-lexicographically) on which the two sides differ.
    pub counterexample: Option<(Word, Outcome, Outcome)>,
    pub words_checked: usize,
    pub max_length: usize,
}

pub const DEFAULT_MAX_LENGTH: usize = 8;

/// Compares two partial functions on every word up to `max_length`.
pub fn semantic_equiv(
    left: impl Fn(&[Symbol]) -> Outcome,
    right: impl Fn(&[Symbol]) -> Outcome,
    alphabet: &Alphabet,
    max_length: usize,
) -> EquivalenceReport {
    let mut checked = 0;
    for w in enumerate_words(alphabet, max_length) {
        checked += 1;
        let (l, r) = (left(&w), right(&w));
        if l != r {
            return EquivalenceReport {
                equal: false,
                counterexample: Some((w, l, r)),
                words_checked: checked,
                max_length,
            };
        }
    }
    EquivalenceReport {
        equal: true,
        counterexample: None,
        words_checked: checked,
        max_length,
    }
}

/// The function computed by a deterministic machine; undefined unless accepted.
pub fn machine_function(machine: &TwoWayMachine) -> Result<impl Fn(&[Symbol]) -> Outcome + '_> {
    let runner = machine.runner()?;
    Ok(move |w: &[Symbol]| runner.run(w).ok().and_then(|r| r.into_output()))
}

/// Accepted words up to `max_length`, in enumeration order.
pub fn language_of(machine: &TwoWayMachine, max_length: usize) -> Result<Vec<Word>> {
    let runner = machine.runner()?;
    let mut out = Vec::new();
    for w in enumerate_words(machine.input_alphabet(), max_length) {
        if runner.run(&w)?.accepted() {
            out.push(w);
        }
    }
    Ok(out)
}

/// The behaviour of `segment` computed by exploring every configuration of
/// the machine on it: `(q, r)` when entering in `q` can leave in `r`.
///
/// Works for nondeterministic machines; outputs are ignored.
pub fn segment_behavior(machine: &TwoWayMachine, segment: &[TapeSymbol]) -> Behavior {
    let states = machine.states();
    let n = states.len();
    let len = segment.len();
    let mut out = Behavior::empty(n);
    for q in 0..n {
        let entry = if states.is_forward(q) { 0 } else { len };
        let mut seen = vec![false; n * (len + 1)];
        let mut queue = VecDeque::from([(q, entry)]);
        seen[q * (len + 1) + entry] = true;
        while let Some((p, pos)) = queue.pop_front() {
            let fw = states.is_forward(p);
            let read = match (fw, pos) {
                (true, _) if pos == len => {
                    out.insert(q, p);
                    continue;
                }
                (false, 0) => {
                    out.insert(q, p);
                    continue;
                }
                (true, _) => &segment[pos],
                (false, _) => &segment[pos - 1],
            };
            for t in machine.transitions(read).filter(|t| t.source == p) {
                let next = match (fw, states.is_forward(t.target)) {
                    (true, true) => pos + 1,
                    (false, false) => pos - 1,
                    _ => pos,
                };
                if !std::mem::replace(&mut seen[t.target * (len + 1) + next], true) {
                    queue.push_back((t.target, next));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::word;

    #[test]
    fn word_enumeration() {
        let a = Alphabet::from_chars("a").unwrap();
        assert_eq!(enumerate_words(&a, 2).collect::<Vec<_>>(), vec![word(""), word("a"), word("aa")]);
        let ab = Alphabet::from_chars("ab").unwrap();
        assert_eq!(enumerate_words(&ab, 1).collect::<Vec<_>>(), vec![word(""), word("a"), word("b")]);
        let abc = Alphabet::from_chars("abc").unwrap();
        assert_eq!(enumerate_words(&abc, 4).count(), 121);
        assert_eq!(enumerate_words(&abc, 0).count(), 1);
        assert_eq!(enumerate_words(&Alphabet::default(), 3).count(), 1);
    }

    #[test]
    fn counterexample_is_least() {
        let ab = Alphabet::from_chars("ab").unwrap();
        let r = semantic_equiv(|w| Some(w.to_vec()), |w| (w.len() < 2).then(|| w.to_vec()), &ab, 3);
        assert!(!r.equal);
        assert_eq!(r.counterexample.unwrap().0, word("aa"));
        assert_eq!(r.words_checked, 4);
    }
}
