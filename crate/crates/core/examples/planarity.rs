//! Planarity of single transitions and whole machines.

use planar_twoway::io::parse_two_way;
use planar_twoway::monoid::Behavior;
use planar_twoway::planarity::{check_planar_machine, check_planar_transition, find_planar_order, LetterScope};
use planar_twoway::states::{DirectedStateSet, Direction};

fn main() -> Result<(), planar_twoway::Error> {
    let s = DirectedStateSet::new([("q1", Direction::Forward), ("q2", Direction::Backward), ("q3", Direction::Backward)])?
        .with_natural_order();
    for pairs in [vec![(0, 1), (1, 2)], vec![(0, 2), (2, 1)]] {
        let f = Behavior::from_pairs(3, pairs);
        match check_planar_transition(&s, &f)? {
            p if p.is_planar() => println!("{f:?}: planar"),
            p => {
                let w = p.witness().unwrap();
                println!("{f:?}: crossing edges {:?} and {:?}", w.edge1, w.edge2);
            }
        }
    }

    let mut m = parse_two_way(include_str!("../fixtures/b_two_before_first_c.2dfa"))?;
    println!("\nexample automaton planar: {}", check_planar_machine(&m, LetterScope::All)?.is_planar());
    m.clear_order();
    let order = find_planar_order(&m, LetterScope::All, 10)?;
    println!("first planar order found: {order:?}");

    let swap = parse_two_way(include_str!("../fixtures/forward_swap.2dfa"))?;
    println!("forward swap admits an order: {:?}", find_planar_order(&swap, LetterScope::All, 10)?);
    Ok(())
}
