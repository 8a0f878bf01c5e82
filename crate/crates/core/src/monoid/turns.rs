use crate::states::DirectedStateSet;

use super::{compose_behaviors, Behavior};

/// `f` split by direction signature, with the turning parts padded by
/// partial identities on the states they leave untouched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TurnFactorization {
    /// `f ∩ (Q→ × Q←)`: pairs turning back at the right boundary.
    pub into_turns: Behavior,
    /// `f ∩ (Q← × Q→)`: pairs turning back at the left boundary.
    pub out_turns: Behavior,
    /// The remaining crossing pairs.
    pub through: Behavior,
    /// `into_turns` plus `(q, q)` for every `q` it does not relate.
    pub left_factor: Behavior,
    /// `out_turns` plus `(q, q)` for every `q` it does not relate.
    pub right_factor: Behavior,
}

impl TurnFactorization {
    /// `left_factor * through * right_factor`.
    pub fn recompose(&self, states: &DirectedStateSet) -> Behavior {
        let a = compose_behaviors(states, &self.left_factor, &self.through);
        compose_behaviors(states, &a, &self.right_factor)
    }
}

fn pad(part: &Behavior) -> Behavior {
    let mut out = part.clone();
    for q in 0..part.size() {
        if part.images(q).next().is_none() {
            out.insert(q, q);
        }
    }
    out
}

pub fn factor_turns(states: &DirectedStateSet, f: &Behavior) -> TurnFactorization {
    let fw = |q| states.is_forward(q);
    let into_turns = f.filter(|q, r| fw(q) && !fw(r));
    let out_turns = f.filter(|q, r| !fw(q) && fw(r));
    let through = f.filter(|q, r| fw(q) == fw(r));
    TurnFactorization {
        left_factor: pad(&into_turns),
        right_factor: pad(&out_turns),
        into_turns,
        out_turns,
        through,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::Direction::{Backward as B, Forward as F};

    #[test]
    fn forward_only_has_no_turns() {
        let s = DirectedStateSet::from_directions(&[F, F, F]);
        let f = Behavior::from_pairs(3, [(0, 1), (2, 2)]);
        let t = factor_turns(&s, &f);
        assert!(t.into_turns.is_empty() && t.out_turns.is_empty());
        assert_eq!(t.left_factor, Behavior::identity(3));
        assert_eq!(t.right_factor, Behavior::identity(3));
        assert_eq!(t.through, f);
        assert_eq!(t.recompose(&s), f);
    }

    #[test]
    fn example_column_c() {
        let s = DirectedStateSet::from_directions(&[F, B, B, F]);
        let f = Behavior::from_pairs(4, [(0, 1), (1, 2), (3, 3)]);
        let t = factor_turns(&s, &f);
        assert_eq!(t.into_turns, Behavior::from_pairs(4, [(0, 1)]));
        assert!(t.out_turns.is_empty());
        assert_eq!(t.through, Behavior::from_pairs(4, [(1, 2), (3, 3)]));
        assert_eq!(t.recompose(&s), f);
    }

    #[test]
    fn mixed_images_break_the_identity() {
        // A forward state with both a turning and a crossing image: the padding
        // skips it in the left factor, so the crossing pair is lost.
        let s = DirectedStateSet::from_directions(&[F, B]);
        let f = Behavior::from_pairs(2, [(0, 0), (0, 1)]);
        let t = factor_turns(&s, &f);
        assert_eq!(t.recompose(&s), Behavior::from_pairs(2, [(0, 1)]));
    }
}
