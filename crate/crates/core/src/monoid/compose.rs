use crate::alphabet::TapeSymbol;
use crate::error::{Error, Result};
use crate::machine::TwoWayMachine;
use crate::planarity::{edge_of, Side, Vertex};
use crate::states::{DirectedStateSet, StateId};

use super::Behavior;

/// Column of the glued diagram: the outer left boundary, the shared middle
/// boundary, and the outer right boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Left,
    Middle,
    Right,
}

impl Level {
    fn index(self) -> usize {
        match self {
            Level::Left => 0,
            Level::Middle => 1,
            Level::Right => 2,
        }
    }

    /// Level of a boundary of the first (left) cell.
    fn of_first(side: Side) -> Level {
        match side {
            Side::Left => Level::Left,
            Side::Right => Level::Middle,
        }
    }

    /// Level of a boundary of the second (right) cell.
    fn of_second(side: Side) -> Level {
        match side {
            Side::Left => Level::Middle,
            Side::Right => Level::Right,
        }
    }

    fn outer(side: Side) -> Level {
        match side {
            Side::Left => Level::Left,
            Side::Right => Level::Right,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlueVertex {
    pub state: StateId,
    pub level: Level,
}

/// The graph `C(ρ, f, g)`: the profiles of `f` and `g` side by side, with
/// the right boundary of `f` identified with the left boundary of `g`.
#[derive(Clone, Debug)]
pub struct CompositionGraph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
}

impl CompositionGraph {
    pub fn new(states: &DirectedStateSet, f: &Behavior, g: &Behavior) -> Self {
        let n = states.len();
        let mut adjacency = vec![Vec::new(); 3 * n];
        let idx = |q: StateId, l: Level| l.index() * n + q;
        for (q, r) in f.pairs() {
            let (a, b) = edge_of(states, q, r);
            adjacency[idx(a.state, Level::of_first(a.side))].push(idx(b.state, Level::of_first(b.side)));
        }
        for (q, r) in g.pairs() {
            let (a, b) = edge_of(states, q, r);
            adjacency[idx(a.state, Level::of_second(a.side))]
                .push(idx(b.state, Level::of_second(b.side)));
        }
        CompositionGraph { n, adjacency }
    }

    fn vertex(&self, i: usize) -> GlueVertex {
        let level = [Level::Left, Level::Middle, Level::Right][i / self.n];
        GlueVertex {
            state: i % self.n,
            level,
        }
    }

    pub fn edges(&self) -> Vec<(GlueVertex, GlueVertex)> {
        let mut out: Vec<_> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, succ)| succ.iter().map(move |&j| (i, j)))
            .map(|(i, j)| (self.vertex(i), self.vertex(j)))
            .collect();
        out.sort();
        out
    }

    /// Vertices reachable from `start` by a path of length ≥ 0.
    pub fn reachable_from(&self, start: GlueVertex) -> Vec<GlueVertex> {
        let seen = self.reach(start.level.index() * self.n + start.state);
        (0..seen.len())
            .filter(|&i| seen[i])
            .map(|i| self.vertex(i))
            .collect()
    }

    fn reach(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adjacency.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }
}

/// An outer boundary vertex of a single cell, placed on the glued diagram.
pub fn outer_vertex(v: Vertex) -> GlueVertex {
    GlueVertex {
        state: v.state,
        level: Level::outer(v.side),
    }
}

/// `f * g`: `q` is related to `r` when `(r, ρ(r))` is reachable from
/// `(q, −ρ(q))` in `C(ρ, f, g)`.
pub fn compose_behaviors(states: &DirectedStateSet, f: &Behavior, g: &Behavior) -> Behavior {
    let n = states.len();
    debug_assert!(f.size() == n && g.size() == n);
    let graph = CompositionGraph::new(states, f, g);
    let start = |q: StateId| Level::outer(Side::entry(states.direction(q))).index() * n + q;
    let end = |r: StateId| Level::outer(Side::exit(states.direction(r))).index() * n + r;
    let mut out = Behavior::empty(n);
    for q in 0..n {
        let s = start(q);
        if graph.adjacency[s].is_empty() {
            continue;
        }
        let seen = graph.reach(s);
        for r in 0..n {
            if seen[end(r)] {
                out.insert(q, r);
            }
        }
    }
    out
}

/// Product of the projected transitions along `word` (identity for the empty word).
pub fn behavior_of_word(machine: &TwoWayMachine, word: &[TapeSymbol]) -> Result<Behavior> {
    let states = machine.states();
    let mut acc = Behavior::identity(states.len());
    for x in word {
        if let TapeSymbol::Letter(a) = x {
            if !machine.input_alphabet().contains(a) {
                return Err(Error::AlphabetError(a.to_string()));
            }
        }
        acc = compose_behaviors(states, &acc, &machine.relation(x));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_two_way;
    use crate::states::Direction::{Backward as B, Forward as F};

    const M_EX: &str = include_str!("../../fixtures/b_two_before_first_c.2dfa");

    fn letters(s: &str) -> Vec<TapeSymbol> {
        s.chars().map(|c| TapeSymbol::letter(&c.to_string())).collect()
    }

    #[test]
    fn glued_example() {
        let s = DirectedStateSet::from_directions(&[F, B, B]);
        let f = Behavior::from_pairs(3, [(0, 0), (1, 2)]);
        let g = Behavior::from_pairs(3, [(0, 1), (1, 0), (2, 2)]);
        assert_eq!(compose_behaviors(&s, &f, &g), Behavior::from_pairs(3, [(0, 2), (1, 0)]));
    }

    #[test]
    fn example_automaton_products() {
        let m = parse_two_way(M_EX).unwrap();
        assert_eq!(
            behavior_of_word(&m, &letters("bc")).unwrap(),
            Behavior::from_pairs(4, [(0, 2), (1, 3), (3, 3)])
        );
        assert_eq!(
            behavior_of_word(&m, &letters("c")).unwrap(),
            Behavior::from_pairs(4, [(0, 1), (1, 2), (3, 3)])
        );
        assert_eq!(behavior_of_word(&m, &[]).unwrap(), Behavior::identity(4));
        assert!(behavior_of_word(&m, &letters("abac")).unwrap().contains(0, 3));
        assert!(matches!(behavior_of_word(&m, &letters("x")), Err(Error::AlphabetError(_))));
    }

    #[test]
    fn graph_edges_follow_levels() {
        let s = DirectedStateSet::from_directions(&[F, B]);
        let f = Behavior::from_pairs(2, [(0, 1)]);
        let g = Behavior::from_pairs(2, [(1, 0)]);
        let c = CompositionGraph::new(&s, &f, &g);
        let v = |state, level| GlueVertex { state, level };
        assert_eq!(
            c.edges(),
            vec![
                (v(0, Level::Left), v(1, Level::Left)),
                (v(1, Level::Right), v(0, Level::Right)),
            ]
        );
    }
}
