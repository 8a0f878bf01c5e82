//! Graphviz output: one transition profile and one run.
//!
//! `cargo run --example diagrams | dot -Tsvg > out.svg`

use planar_twoway::alphabet::{word, TapeSymbol};
use planar_twoway::io::{emit_dot, parse_two_way, DotView};

fn main() -> Result<(), planar_twoway::Error> {
    let m = parse_two_way(include_str!("../fixtures/b_two_before_first_c.2dfa"))?;
    println!("{}", emit_dot(&m, &DotView::Profile(TapeSymbol::letter("c")))?);
    println!("{}", emit_dot(&m, &DotView::Run(word("abac")))?);
    Ok(())
}
