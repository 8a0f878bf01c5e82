mod common;

use common::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use planar_twoway::alphabet::{word, Alphabet, Symbol, TapeSymbol, Word};
use planar_twoway::constructions::{
    answer_state, compose_transducers, compose_with_report, flipflop_to_planar, is_aperiodic_sequential,
    letter_action, mrt_apply, mrt_to_planar, query_state, reverse_transducer, seq_run, CompositeOrder,
    LetterAction, MonotoneRegisterTransducer, SequentialTransducer, UpdateItem, FLIPFLOP_STATES,
};
use planar_twoway::oracles::{enumerate_words, semantic_equiv};
use planar_twoway::planarity::{check_planar_machine, LetterScope};
use planar_twoway::{Error, TwoWayMachine};

fn planar(m: &TwoWayMachine) -> bool {
    check_planar_machine(m, LetterScope::All).unwrap().is_planar()
}

fn reversed(w: &[Symbol]) -> Word {
    w.iter().rev().cloned().collect()
}

/// `∂*(w)` applied to the canonical initial state: the state reached and the
/// output emitted, without the final output.
fn sequential_step(seq: &SequentialTransducer, w: &[Symbol]) -> (usize, Word) {
    let mut q = seq.initial();
    let mut out = Word::new();
    for a in w {
        let (r, u) = seq.transition(a, q).unwrap();
        out.extend_from_slice(u);
        q = r;
    }
    (q, out)
}

#[test]
fn flipflop_matches_sequential_run() {
    for seq in [sequential_fixture(), reset_fixture()] {
        assert!(is_aperiodic_sequential(&seq).unwrap());
        let m = flipflop_to_planar(&seq).unwrap();
        assert_eq!(m.states().names(), FLIPFLOP_STATES);
        assert!(m.is_reversible() && planar(&m));
        let r = semantic_equiv(|w| walk_output(&m, w), |w| Some(seq_run(&seq, w).unwrap()), seq.input_alphabet(), 8);
        assert!(r.equal, "{:?}", r.counterexample);
        assert_eq!(r.words_checked, 9841);
    }
    let m = flipflop_to_planar(&sequential_fixture()).unwrap();
    assert_eq!(walk_output(&m, &word("abca")), Some(word("acbbcab")));
}

#[test]
fn flipflop_invariant() {
    let seq = sequential_fixture().canonical_two_state().unwrap();
    let m = flipflop_to_planar(&seq).unwrap();
    let q = |i: usize| [0, 4][i];
    let r = |i: usize| [1, 3][i];
    let s = 2;
    for w in enumerate_words(seq.input_alphabet(), 6) {
        let (i, u) = sequential_step(&seq, &w);
        let mut segment = vec![TapeSymbol::LeftMarker];
        segment.extend(w.iter().cloned().map(TapeSymbol::Letter));
        assert_eq!(walk(&m, &segment, q(0)), Walk::Right(q(i), u));
        assert_eq!(walk(&m, &segment, r(i)), Walk::Right(s, Word::new()));
    }
}

#[test]
fn letter_actions() {
    let seq = reset_fixture();
    let act = |s: &str| letter_action(&seq, &Symbol::new(s)).unwrap();
    assert_eq!(act("a"), LetterAction::Identity);
    assert_eq!(act("b"), LetterAction::Constant(1));
    assert_eq!(act("c"), LetterAction::Constant(0));
    let abc = Alphabet::from_chars("a").unwrap();
    let mut swap = SequentialTransducer::new(abc.clone(), abc, vec!["1".into(), "2".into()], 0).unwrap();
    swap.set_transition(&Symbol::new("a"), 0, 1, vec![]).unwrap();
    swap.set_transition(&Symbol::new("a"), 1, 0, vec![]).unwrap();
    assert!(!is_aperiodic_sequential(&swap).unwrap());
    assert!(matches!(flipflop_to_planar(&swap), Err(Error::NotAperiodic(_))));
}

#[test]
fn register_translation_matches_fold() {
    let mrt = register_fixture();
    let m = mrt_to_planar(&mrt).unwrap();
    assert_eq!(m.states().names(), ["•", "X-", "X+", "Y-", "Y+"]);
    assert!(m.is_reversible() && planar(&m));
    let r = semantic_equiv(|w| walk_output(&m, w), |w| Some(mrt_apply(&mrt, w).unwrap()), mrt.input_alphabet(), 8);
    assert!(r.equal, "{:?}", r.counterexample);
    assert_eq!(walk_output(&m, &word("abca")), Some(word("aabebacb")));
}

#[test]
fn register_invariant() {
    let mrt = register_fixture();
    let m = mrt_to_planar(&mrt).unwrap();
    for w in enumerate_words(mrt.input_alphabet(), 6) {
        let values = mrt.register_values(&w).unwrap();
        let mut segment = vec![TapeSymbol::LeftMarker];
        segment.extend(w.iter().cloned().map(TapeSymbol::Letter));
        for (r, v) in values.into_iter().enumerate() {
            assert_eq!(walk(&m, &segment, query_state(r)), Walk::Right(answer_state(r), v));
        }
    }
}

#[test]
fn identity_register_transducer() {
    let ab = Alphabet::from_chars("ab").unwrap();
    let mut mrt = MonotoneRegisterTransducer::new(ab.clone(), ab.clone(), vec!["X".into()]).unwrap();
    for a in ab.symbols() {
        mrt.set_update(a, 0, vec![UpdateItem::Register(0), UpdateItem::Symbol(a.clone())]).unwrap();
    }
    let m = mrt_to_planar(&mrt).unwrap();
    let r = semantic_equiv(|w| walk_output(&m, w), |w| Some(w.to_vec()), &ab, 8);
    assert!(r.equal);
}

#[test]
fn non_monotone_updates_are_rejected() {
    let ab = Alphabet::from_chars("a").unwrap();
    let mut mrt = MonotoneRegisterTransducer::new(ab.clone(), ab, vec!["X".into(), "Y".into()]).unwrap();
    let a = Symbol::new("a");
    mrt.set_update(&a, 0, vec![UpdateItem::Register(1)]).unwrap();
    mrt.set_update(&a, 1, vec![UpdateItem::Register(0)]).unwrap();
    assert!(mrt_to_planar(&mrt).is_err());
}

#[test]
fn reverse_up_to_ten() {
    let ab = Alphabet::from_chars("ab").unwrap();
    let m = reverse_transducer(&ab);
    assert!(m.is_reversible() && planar(&m));
    let r = semantic_equiv(|w| walk_output(&m, w), |w| Some(reversed(w)), &ab, 10);
    assert!(r.equal);
    assert_eq!(r.words_checked, 2047);
}

fn assert_composes(first: &TwoWayMachine, second: &TwoWayMachine, max: usize) -> CompositeOrder {
    let c = compose_with_report(first, second).unwrap();
    assert!(c.machine.is_reversible());
    assert!(planar(&c.machine));
    let r = semantic_equiv(
        |w| walk_output(&c.machine, w),
        |w| walk_output(first, w).and_then(|v| walk_output(second, &v)),
        first.input_alphabet(),
        max,
    );
    assert!(r.equal, "{:?}", r.counterexample);
    c.order
}

#[test]
fn identity_is_neutral() {
    let abc = Alphabet::from_chars("abc").unwrap();
    let id = TwoWayMachine::identity_transducer(&abc);
    let ff = flipflop_to_planar(&sequential_fixture()).unwrap();
    assert_composes(&id, &ff, 6);
    assert_composes(&ff, &id, 6);
    let rev = reverse_transducer(&abc);
    assert_composes(&id, &rev, 6);
    assert_composes(&rev, &id, 6);
}

#[test]
fn reverse_twice_is_identity() {
    let ab = Alphabet::from_chars("ab").unwrap();
    let rev = reverse_transducer(&ab);
    let c = compose_transducers(&rev, &rev).unwrap();
    let r = semantic_equiv(|w| walk_output(&c, w), |w| Some(w.to_vec()), &ab, 8);
    assert!(r.equal);
}

#[test]
fn fixture_pairs_compose() {
    let abc = Alphabet::from_chars("abc").unwrap();
    let ff = flipflop_to_planar(&sequential_fixture()).unwrap();
    let rev = reverse_transducer(&abc);
    let mrt = mrt_to_planar(&register_fixture()).unwrap();
    assert_composes(&ff, &rev, 6);
    assert_composes(&rev, &ff, 6);
    assert_composes(&rev, &mrt, 6);
    assert_composes(&ff, &mrt, 6);
}

#[test]
fn composition_is_associative() {
    let abc = Alphabet::from_chars("abc").unwrap();
    let ff = flipflop_to_planar(&sequential_fixture()).unwrap();
    let rev = reverse_transducer(&abc);
    let mrt = mrt_to_planar(&register_fixture()).unwrap();
    let left = compose_transducers(&compose_transducers(&ff, &rev).unwrap(), &mrt).unwrap();
    let right = compose_transducers(&ff, &compose_transducers(&rev, &mrt).unwrap()).unwrap();
    let r = semantic_equiv(|w| walk_output(&left, w), |w| walk_output(&right, w), &abc, 5);
    assert!(r.equal, "{:?}", r.counterexample);
}

#[test]
fn random_planar_pairs_compose() {
    let mut rng = StdRng::seed_from_u64(17);
    let ab = Alphabet::from_chars("ab").unwrap();
    for _ in 0..20 {
        let a = random_planar_reversible(&mut rng, &ab, 3);
        let b = random_planar_reversible(&mut rng, &ab, 3);
        assert_composes(&a, &b, 6);
    }
}

#[test]
fn composition_rejects_bad_inputs() {
    let ab = Alphabet::from_chars("ab").unwrap();
    let example = example_automaton();
    let rev = reverse_transducer(&ab);
    assert!(compose_transducers(&example, &rev).is_err());
    let abc = Alphabet::from_chars("abc").unwrap();
    assert!(matches!(
        compose_transducers(&reverse_transducer(&abc), &rev),
        Err(Error::AlphabetMismatch { .. })
    ));
}
