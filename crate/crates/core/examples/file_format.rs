//! Builds a machine in code, writes it in the text format and reads it back.

use planar_twoway::alphabet::{word, Alphabet};
use planar_twoway::io::{parse_two_way, serialize_two_way, TwoWayTag};
use planar_twoway::states::{DirectedStateSet, Direction};
use planar_twoway::{Error, MachineKind, TwoWayMachine};

fn main() -> Result<(), Error> {
    let ab = Alphabet::from_chars("ab")?;
    let states = DirectedStateSet::new([
        ("go", Direction::Forward),
        ("back", Direction::Backward),
        ("done", Direction::Forward),
    ])?
    .with_natural_order();
    // doubles every a, then walks back to the start and over the word once more
    let mut m = TwoWayMachine::new(MachineKind::Transducer, ab.clone(), ab, states, 0, [2])?;
    m.add("^", "go", &[], "go")?;
    m.add("a", "go", &word("aa"), "go")?;
    m.add("b", "go", &word("b"), "go")?;
    m.add("$", "go", &[], "back")?;
    m.add("a", "back", &[], "back")?;
    m.add("b", "back", &[], "back")?;
    m.add("^", "back", &[], "done")?;
    m.add("a", "done", &[], "done")?;
    m.add("b", "done", &[], "done")?;
    m.add("$", "done", &[], "done")?;

    let text = serialize_two_way(TwoWayTag::Transducer, &m);
    print!("{text}");
    let back = parse_two_way(&text)?;
    assert_eq!(back, m);
    let out = back.run(&word("abab"))?.into_output().unwrap();
    println!("round trip ok; abab -> {}", back.output_alphabet().format(&out));

    match parse_two_way("machine 2dfa\ninput a\nstates p:>\ninitial p\nt p a p\n") {
        Err(e) => println!("bad input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
