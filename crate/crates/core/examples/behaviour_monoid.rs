//! Behaviour monoids: the product of transitions and aperiodicity.

use planar_twoway::alphabet::TapeSymbol;
use planar_twoway::io::parse_two_way;
use planar_twoway::monoid::{compose_behaviors, machine_monoid, verify_tl_submonoid, SubmonoidCheck, DEFAULT_MONOID_CAP};
use planar_twoway::states::{DirectedStateSet, Direction};

fn main() -> Result<(), planar_twoway::Error> {
    let m = parse_two_way(include_str!("../fixtures/b_two_before_first_c.2dfa"))?;
    let b = m.relation(&TapeSymbol::letter("b"));
    let c = m.relation(&TapeSymbol::letter("c"));
    println!("b = {b:?}\nc = {c:?}\nbc = {:?}", compose_behaviors(m.states(), &b, &c));

    for (name, text) in [
        ("example", include_str!("../fixtures/b_two_before_first_c.2dfa")),
        ("forward swap", include_str!("../fixtures/forward_swap.2dfa")),
    ] {
        let monoid = machine_monoid(&parse_two_way(text)?, DEFAULT_MONOID_CAP)?;
        let report = monoid.aperiodicity();
        println!("{name}: {} elements, aperiodic {}, index {}", monoid.len(), report.aperiodic, report.index);
    }

    use Direction::{Backward as B, Forward as F};
    let s = DirectedStateSet::from_directions(&[F, B, F, B]).with_natural_order();
    let report = verify_tl_submonoid(&s, SubmonoidCheck::default())?;
    println!(
        "planar deterministic transitions on (F,B,F,B): {} of them, closed and aperiodic: {}",
        report.carrier_size,
        report.passes()
    );
    Ok(())
}
