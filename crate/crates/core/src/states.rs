//! Directed state sets: states, their reading direction, and an optional total order.

use std::fmt;

use crate::error::{Error, Result};

pub type StateId = usize;

/// Which way a state reads the tape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Backward,
    Forward,
}

impl Direction {
    pub fn sign(self) -> i8 {
        match self {
            Direction::Forward => 1,
            Direction::Backward => -1,
        }
    }

    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    /// Sign product: `Forward` is +1 and `Backward` is −1.
    pub fn times(self, other: Direction) -> Direction {
        if self == other {
            Direction::Forward
        } else {
            Direction::Backward
        }
    }

    pub fn is_forward(self) -> bool {
        self == Direction::Forward
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => ">",
            Direction::Backward => "<",
        })
    }
}

/// A finite set of named states with a direction map and, optionally, a total order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedStateSet {
    names: Vec<String>,
    directions: Vec<Direction>,
    /// `order[i]` is the state at position `i`.
    order: Option<Vec<StateId>>,
    /// `rank[q]` is the position of `q` in `order`.
    rank: Option<Vec<usize>>,
}

impl DirectedStateSet {
    pub fn new<I, S>(states: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, Direction)>,
        S: Into<String>,
    {
        let mut names: Vec<String> = Vec::new();
        let mut directions = Vec::new();
        for (name, dir) in states {
            let name = name.into();
            if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '"' || c == '#') {
                return Err(Error::validation(format!("invalid state name `{name}`")));
            }
            if names.contains(&name) {
                return Err(Error::validation(format!("duplicate state `{name}`")));
            }
            names.push(name);
            directions.push(dir);
        }
        Ok(DirectedStateSet {
            names,
            directions,
            order: None,
            rank: None,
        })
    }

    /// Anonymous states named `0`, `1`, … with the given directions.
    pub fn from_directions(directions: &[Direction]) -> Self {
        DirectedStateSet::new(
            directions
                .iter()
                .enumerate()
                .map(|(i, &d)| (i.to_string(), d)),
        )
        .expect("numeric names are valid")
    }

    /// Same state set, ordered by declaration order.
    pub fn with_natural_order(mut self) -> Self {
        let order: Vec<StateId> = (0..self.len()).collect();
        self.rank = Some(order.clone());
        self.order = Some(order);
        self
    }

    /// Installs a total order given as a permutation of the state ids.
    pub fn with_order(mut self, order: Vec<StateId>) -> Result<Self> {
        self.set_order(order)?;
        Ok(self)
    }

    pub fn set_order(&mut self, order: Vec<StateId>) -> Result<()> {
        let n = self.len();
        if order.len() != n {
            return Err(Error::validation(format!(
                "order lists {} states, expected {n}",
                order.len()
            )));
        }
        let mut rank = vec![usize::MAX; n];
        for (pos, &q) in order.iter().enumerate() {
            if q >= n || rank[q] != usize::MAX {
                return Err(Error::validation("order is not a permutation of the states"));
            }
            rank[q] = pos;
        }
        self.order = Some(order);
        self.rank = Some(rank);
        Ok(())
    }

    pub fn clear_order(&mut self) {
        self.order = None;
        self.rank = None;
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, q: StateId) -> &str {
        &self.names[q]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<StateId> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    pub fn direction(&self, q: StateId) -> Direction {
        self.directions[q]
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn is_forward(&self, q: StateId) -> bool {
        self.directions[q].is_forward()
    }

    pub fn order(&self) -> Option<&[StateId]> {
        self.order.as_deref()
    }

    pub fn has_order(&self) -> bool {
        self.order.is_some()
    }

    pub fn rank(&self, q: StateId) -> Option<usize> {
        self.rank.as_ref().map(|r| r[q])
    }

    pub fn ranks(&self) -> Result<&[usize]> {
        self.rank.as_deref().ok_or(Error::MissingOrder)
    }

    pub fn forward_states(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.len()).filter(|&q| self.is_forward(q))
    }

    pub fn backward_states(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.len()).filter(|&q| !self.is_forward(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_must_be_permutation() {
        let s = DirectedStateSet::from_directions(&[Direction::Forward, Direction::Backward]);
        assert!(s.clone().with_order(vec![0, 0]).is_err());
        assert!(s.clone().with_order(vec![0]).is_err());
        let s = s.with_order(vec![1, 0]).unwrap();
        assert_eq!(s.rank(0), Some(1));
        assert_eq!(s.rank(1), Some(0));
    }

    #[test]
    fn direction_product() {
        use Direction::*;
        assert_eq!(Forward.times(Forward), Forward);
        assert_eq!(Backward.times(Backward), Forward);
        assert_eq!(Forward.times(Backward), Backward);
    }
}
