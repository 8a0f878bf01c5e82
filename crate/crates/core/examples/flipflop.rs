//! Translates a two-state aperiodic sequential transducer into a five-state
//! planar reversible two-way transducer.

use planar_twoway::alphabet::word;
use planar_twoway::constructions::{flipflop_to_planar, seq_run};
use planar_twoway::io::{parse_document, serialize_two_way, MachineDocument, TwoWayTag};

fn main() -> Result<(), planar_twoway::Error> {
    let MachineDocument::Sequential(seq) = parse_document(include_str!("../fixtures/two_state_aperiodic.seq"))? else {
        unreachable!()
    };
    let m = flipflop_to_planar(&seq)?;
    print!("{}", serialize_two_way(TwoWayTag::ReversiblePlanar, &m));
    for w in ["abca", "b", "", "cab"] {
        let two_way = m.run(&word(w))?.into_output().unwrap();
        let one_way = seq_run(&seq, &word(w))?;
        println!("{w:>5} -> {} (sequential: {})", seq.output_alphabet().format(&two_way), seq.output_alphabet().format(&one_way));
    }
    Ok(())
}
