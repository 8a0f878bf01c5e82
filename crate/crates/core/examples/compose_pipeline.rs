//! Builds flip-flop, reverse, flip-flop, reverse, register as one planar
//! reversible transducer by pairwise composition.

use planar_twoway::alphabet::{word, Alphabet};
use planar_twoway::constructions::{compose_with_report, flipflop_to_planar, mrt_to_planar, reverse_transducer};
use planar_twoway::io::{parse_document, MachineDocument};
use planar_twoway::planarity::{check_planar_machine, LetterScope};

fn main() -> Result<(), planar_twoway::Error> {
    let seq = |text| match parse_document(text) {
        Ok(MachineDocument::Sequential(s)) => s,
        other => panic!("{other:?}"),
    };
    let MachineDocument::Register(mrt) = parse_document(include_str!("../fixtures/two_register.mrt"))? else {
        unreachable!()
    };
    let abc = Alphabet::from_chars("abc")?;
    let stages = [
        reverse_transducer(&abc),
        flipflop_to_planar(&seq(include_str!("../fixtures/reset_or_keep.seq")))?,
        reverse_transducer(&abc),
        mrt_to_planar(&mrt)?,
    ];
    let mut m = flipflop_to_planar(&seq(include_str!("../fixtures/two_state_aperiodic.seq")))?;
    for next in &stages {
        let c = compose_with_report(&m, next)?;
        m = c.machine.trim();
        println!("{} states after trimming (order {:?})", m.states().len(), c.order);
    }
    println!("reversible: {}", m.is_reversible());
    println!("planar: {}", check_planar_machine(&m, LetterScope::All)?.is_planar());
    for w in ["", "a", "abca", "cab"] {
        let out = m.run(&word(w))?.into_output().unwrap();
        println!("{w:>5} -> {}", m.output_alphabet().format(&out));
    }
    Ok(())
}
