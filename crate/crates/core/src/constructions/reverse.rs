use crate::alphabet::{Alphabet, TapeSymbol};
use crate::machine::{MachineKind, TwoWayMachine};
use crate::states::{DirectedStateSet, Direction};

/// Three-state planar reversible transducer computing `w ↦ reverse(w)`:
/// run to `⊲` in `1`, walk back emitting every letter in `2`, bounce off `⊳`
/// and run out in `3`.
pub fn reverse_transducer(alphabet: &Alphabet) -> TwoWayMachine {
    let states = DirectedStateSet::new([
        ("1", Direction::Forward),
        ("2", Direction::Backward),
        ("3", Direction::Forward),
    ])
    .expect("valid names")
    .with_natural_order();
    let mut m = TwoWayMachine::new(MachineKind::Transducer, alphabet.clone(), alphabet.clone(), states, 0, [2])
        .expect("initial state is forward");
    let mut add = |x: TapeSymbol, q, out, r| m.add_transition(x, q, out, r).expect("valid transition");
    add(TapeSymbol::LeftMarker, 0, vec![], 0);
    add(TapeSymbol::LeftMarker, 1, vec![], 2);
    for a in alphabet.symbols() {
        let x = TapeSymbol::Letter(a.clone());
        add(x.clone(), 0, vec![], 0);
        add(x.clone(), 1, vec![a.clone()], 1);
        add(x, 2, vec![], 2);
    }
    add(TapeSymbol::RightMarker, 0, vec![], 1);
    add(TapeSymbol::RightMarker, 2, vec![], 2);
    m
}
