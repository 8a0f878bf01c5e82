//! Transition profiles and planarity.
//!
//! A transition `f ⊆ Q × Q` is drawn in one tape cell: every state has a copy
//! on the left boundary and one on the right boundary, and each pair
//! `(q, r) ∈ f` becomes an edge from `(q, −ρ(q))` to `(r, ρ(r))`. Given a total
//! order on `Q`, the boundary copies are arranged around the cell: the left
//! side from the largest state down to the smallest, then the right side from
//! the smallest up. The transition is planar when no two edges interleave in
//! that cyclic arrangement.

use std::cmp::Ordering;

use crate::alphabet::{TapeSymbol, Word};
use crate::error::{Error, Result};
use crate::machine::TwoWayMachine;
use crate::monoid::Behavior;
use crate::states::{DirectedStateSet, Direction, StateId};

/// Default bound on the number of states for [`find_planar_order`].
pub const DEFAULT_ORDER_SEARCH_CAP: usize = 10;

/// Boundary of a cell: `Left` is −1, `Right` is +1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn sign(self) -> i8 {
        match self {
            Side::Left => -1,
            Side::Right => 1,
        }
    }

    /// The side a state of direction `d` exits through (`ρ(q)`).
    pub fn exit(d: Direction) -> Side {
        match d {
            Direction::Forward => Side::Right,
            Direction::Backward => Side::Left,
        }
    }

    /// The side a state of direction `d` enters through (`−ρ(q)`).
    pub fn entry(d: Direction) -> Side {
        Side::exit(d.flip())
    }
}

/// A vertex `(q, i)` of `Q × {−1, +1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub state: StateId,
    pub side: Side,
}

impl Vertex {
    pub fn new(state: StateId, side: Side) -> Self {
        Vertex { state, side }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileEdge {
    pub from: Vertex,
    pub to: Vertex,
    pub label: Option<Word>,
}

/// The directed graph `G(ρ, f)` on `Q × {−1, +1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionProfile {
    pub state_count: usize,
    pub edges: Vec<ProfileEdge>,
}

impl TransitionProfile {
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.state_count)
            .flat_map(|q| [Vertex::new(q, Side::Left), Vertex::new(q, Side::Right)])
    }
}

pub fn edge_of(states: &DirectedStateSet, q: StateId, r: StateId) -> (Vertex, Vertex) {
    (
        Vertex::new(q, Side::entry(states.direction(q))),
        Vertex::new(r, Side::exit(states.direction(r))),
    )
}

pub fn transition_profile(states: &DirectedStateSet, relation: &Behavior) -> Result<TransitionProfile> {
    if relation.size() != states.len() {
        return Err(Error::UnknownState(format!(
            "relation over {} states, state set has {}",
            relation.size(),
            states.len()
        )));
    }
    let edges = relation
        .pairs()
        .map(|(q, r)| {
            let (from, to) = edge_of(states, q, r);
            ProfileEdge {
                from,
                to,
                label: None,
            }
        })
        .collect();
    Ok(TransitionProfile {
        state_count: states.len(),
        edges,
    })
}

impl TwoWayMachine {
    /// The profile of `δ(on)` with outputs as edge labels.
    pub fn profile(&self, on: &TapeSymbol) -> TransitionProfile {
        let edges = self
            .transitions(on)
            .map(|t| {
                let (from, to) = edge_of(self.states(), t.source, t.target);
                ProfileEdge {
                    from,
                    to,
                    label: Some(t.output.clone()),
                }
            })
            .collect();
        TransitionProfile {
            state_count: self.states().len(),
            edges,
        }
    }
}

/// The total order on `Q × {−1, +1}` induced by an order on `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedOrder {
    /// position of `(q, Left)` at `2q`, of `(q, Right)` at `2q + 1`
    positions: Vec<usize>,
}

impl ExtendedOrder {
    pub fn new(states: &DirectedStateSet) -> Result<Self> {
        let ranks = states.ranks()?;
        let n = ranks.len();
        let mut positions = vec![0; 2 * n];
        for (q, &k) in ranks.iter().enumerate() {
            positions[2 * q] = n - 1 - k;
            positions[2 * q + 1] = n + k;
        }
        Ok(ExtendedOrder { positions })
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.positions[2 * v.state + usize::from(v.side == Side::Right)]
    }

    pub fn compare(&self, a: Vertex, b: Vertex) -> Ordering {
        self.position(a).cmp(&self.position(b))
    }

    /// All vertices from smallest to largest.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = (0..self.positions.len() / 2)
            .flat_map(|q| [Vertex::new(q, Side::Left), Vertex::new(q, Side::Right)])
            .collect();
        vs.sort_by_key(|&v| self.position(v));
        vs
    }
}

/// Four vertices `u < r < v < s` with an edge joining `u` and `v` and an
/// edge joining `r` and `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarityWitness {
    pub u: Vertex,
    pub r: Vertex,
    pub v: Vertex,
    pub s: Vertex,
    pub edge1: (Vertex, Vertex),
    pub edge2: (Vertex, Vertex),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Planarity {
    Planar,
    NonPlanar(PlanarityWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar)
    }

    pub fn witness(&self) -> Option<&PlanarityWitness> {
        match self {
            Planarity::Planar => None,
            Planarity::NonPlanar(w) => Some(w),
        }
    }
}

/// Which transitions a machine-level check covers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LetterScope {
    /// Input letters only.
    InputOnly,
    /// Input letters and both end markers.
    #[default]
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MachinePlanarity {
    Planar,
    NonPlanar {
        symbol: TapeSymbol,
        witness: PlanarityWitness,
    },
}

impl MachinePlanarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, MachinePlanarity::Planar)
    }
}

/// Least interleaving pair of edges, with positions computed by `pos`.
/// Edges whose endpoints are not placed (`pos` returns `None`) are ignored.
fn least_witness(
    states: &DirectedStateSet,
    relation: &Behavior,
    pos: impl Fn(Vertex) -> Option<usize>,
) -> Option<PlanarityWitness> {
    let chords: Vec<(usize, usize, Vertex, Vertex)> = relation
        .pairs()
        .filter_map(|(q, r)| {
            let (from, to) = edge_of(states, q, r);
            let (a, b) = (pos(from)?, pos(to)?);
            Some((a.min(b), a.max(b), from, to))
        })
        .collect();
    let mut best: Option<([usize; 4], usize, usize)> = None;
    for (i, c1) in chords.iter().enumerate() {
        for (j, c2) in chords.iter().enumerate().skip(i + 1) {
            let (outer, inner, key) = if c1.0 < c2.0 && c2.0 < c1.1 && c1.1 < c2.1 {
                (i, j, [c1.0, c2.0, c1.1, c2.1])
            } else if c2.0 < c1.0 && c1.0 < c2.1 && c2.1 < c1.1 {
                (j, i, [c2.0, c1.0, c2.1, c1.1])
            } else {
                continue;
            };
            if best.as_ref().is_none_or(|b| key < b.0) {
                best = Some((key, outer, inner));
            }
        }
    }
    best.map(|(_, e1, e2)| {
        let (a1, b1, f1, t1) = chords[e1];
        let (a2, b2, f2, t2) = chords[e2];
        let at = |p: usize, x: Vertex, y: Vertex| if pos(x) == Some(p) { x } else { y };
        PlanarityWitness {
            u: at(a1, f1, t1),
            v: at(b1, f1, t1),
            r: at(a2, f2, t2),
            s: at(b2, f2, t2),
            edge1: (f1, t1),
            edge2: (f2, t2),
        }
    })
}

/// Checks a single transition against the order of `states`, returning the
/// lexicographically least witness `(u, r, v, s)` when it is not planar.
pub fn check_planar_transition(states: &DirectedStateSet, relation: &Behavior) -> Result<Planarity> {
    let order = ExtendedOrder::new(states)?;
    Ok(match least_witness(states, relation, |v| Some(order.position(v))) {
        None => Planarity::Planar,
        Some(w) => Planarity::NonPlanar(w),
    })
}

pub fn is_planar_transition(states: &DirectedStateSet, relation: &Behavior) -> Result<bool> {
    Ok(check_planar_transition(states, relation)?.is_planar())
}

fn scoped_symbols(machine: &TwoWayMachine, scope: LetterScope) -> Vec<TapeSymbol> {
    let all = machine.input_alphabet().tape_symbols();
    match scope {
        LetterScope::All => all,
        LetterScope::InputOnly => all.into_iter().filter(|x| !x.is_marker()).collect(),
    }
}

/// Checks every `⌊δ(x)⌋` in scope against the machine's state order.
pub fn check_planar_machine(machine: &TwoWayMachine, scope: LetterScope) -> Result<MachinePlanarity> {
    let states = machine.states();
    let order = ExtendedOrder::new(states)?;
    for x in scoped_symbols(machine, scope) {
        let rel = machine.relation(&x);
        if let Some(witness) = least_witness(states, &rel, |v| Some(order.position(v))) {
            return Ok(MachinePlanarity::NonPlanar { symbol: x, witness });
        }
    }
    Ok(MachinePlanarity::Planar)
}

/// Searches all state orders (in lexicographic order of the permutation,
/// pruning prefixes) for one under which every transition in scope is planar.
pub fn find_planar_order(
    machine: &TwoWayMachine,
    scope: LetterScope,
    cap: usize,
) -> Result<Option<Vec<StateId>>> {
    let states = machine.states();
    let n = states.len();
    if n > cap {
        return Err(Error::StateSpaceTooLarge { size: n, cap });
    }
    let relations: Vec<Behavior> = scoped_symbols(machine, scope)
        .iter()
        .map(|x| machine.relation(x))
        .filter(|r| !r.is_empty())
        .collect();
    let mut prefix = Vec::with_capacity(n);
    let mut rank: Vec<Option<usize>> = vec![None; n];
    Ok(extend_order(states, &relations, &mut prefix, &mut rank).then_some(prefix))
}

fn extend_order(
    states: &DirectedStateSet,
    relations: &[Behavior],
    prefix: &mut Vec<StateId>,
    rank: &mut [Option<usize>],
) -> bool {
    let n = states.len();
    if prefix.len() == n {
        return true;
    }
    for q in 0..n {
        if rank[q].is_some() {
            continue;
        }
        rank[q] = Some(prefix.len());
        prefix.push(q);
        let k = prefix.len();
        let pos = |v: Vertex| {
            rank[v.state].map(|i| match v.side {
                Side::Left => k - 1 - i,
                Side::Right => k + i,
            })
        };
        let ok = relations
            .iter()
            .all(|rel| least_witness(states, rel, pos).is_none());
        if ok && extend_order(states, relations, prefix, rank) {
            return true;
        }
        prefix.pop();
        rank[q] = None;
    }
    false
}

/// Independent check: put the `2|Q|` boundary vertices on a circle in
/// extended order, draw every edge as a straight chord, and test the chords
/// for proper geometric intersection.
pub fn geometric_planarity_oracle(states: &DirectedStateSet, relation: &Behavior) -> Result<bool> {
    let order = ExtendedOrder::new(states)?;
    let m = 2 * states.len();
    let point = |v: Vertex| {
        let theta = std::f64::consts::TAU * order.position(v) as f64 / m as f64;
        (theta.cos(), theta.sin())
    };
    type Chord = ((f64, f64), (f64, f64), [Vertex; 2]);
    let chords: Vec<Chord> = relation
        .pairs()
        .map(|(q, r)| {
            let (a, b) = edge_of(states, q, r);
            (point(a), point(b), [a, b])
        })
        .collect();
    let orient = |p: (f64, f64), q: (f64, f64), r: (f64, f64)| {
        let cross = (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
        if cross.abs() < 1e-12 {
            0
        } else if cross > 0.0 {
            1
        } else {
            -1
        }
    };
    for (i, (p1, p2, e1)) in chords.iter().enumerate() {
        for (q1, q2, e2) in &chords[i + 1..] {
            if e1.iter().any(|v| e2.contains(v)) {
                continue;
            }
            let d1 = orient(*p1, *p2, *q1);
            let d2 = orient(*p1, *p2, *q2);
            let d3 = orient(*q1, *q2, *p1);
            let d4 = orient(*q1, *q2, *p2);
            if d1 * d2 < 0 && d3 * d4 < 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
