//! A monotone register transducer and its planar reversible translation.

use planar_twoway::alphabet::word;
use planar_twoway::constructions::mrt_to_planar;
use planar_twoway::io::{parse_document, MachineDocument};

fn main() -> Result<(), planar_twoway::Error> {
    let MachineDocument::Register(mrt) = parse_document(include_str!("../fixtures/two_register.mrt"))? else {
        unreachable!()
    };
    let out = mrt.output_alphabet();
    for prefix in ["", "a", "ab", "abc", "abca"] {
        let values = mrt.register_values(&word(prefix))?;
        let shown: Vec<String> = values.iter().map(|v| format!("{:?}", out.format(v))).collect();
        println!("after {prefix:>4}: X={} Y={}", shown[0], shown[1]);
    }
    let m = mrt_to_planar(&mrt)?;
    println!("states: {}", m.states().names().join(" < "));
    let result = m.run(&word("abca"))?;
    println!("two-way run on abca: {} in {} steps", out.format(&result.output), result.steps);
    Ok(())
}
