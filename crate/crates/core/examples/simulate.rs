//! Runs the "b two cells before the first c" automaton on a few words.

use planar_twoway::alphabet::word;
use planar_twoway::io::parse_two_way;

fn main() -> Result<(), planar_twoway::Error> {
    let m = parse_two_way(include_str!("../fixtures/b_two_before_first_c.2dfa"))?;
    for w in ["abac", "bbc", "ac", "abcbac", ""] {
        let r = m.run(&word(w))?;
        println!("{:>8}  {:?} after {} steps", format!("{w:?}"), r.status, r.steps);
    }

    let r = m.run_traced(&word("abac"))?;
    println!("\ntrace of abac:");
    for step in r.trace.unwrap() {
        let c = &step.config;
        let left: Vec<String> = c.left.iter().map(ToString::to_string).collect();
        let right: Vec<String> = c.right.iter().map(ToString::to_string).collect();
        println!("  {} [{}] {}", left.join(""), m.states().name(c.state), right.join(""));
    }
    Ok(())
}
