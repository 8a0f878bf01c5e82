use std::fmt;

use crate::states::StateId;

const WORD_BITS: usize = 64;

/// A binary relation on a state set `{0, …, n−1}`, stored as an `n × n` bit matrix.
///
/// Rows are sources and columns are targets. Equality, hashing and ordering
/// are structural, so behaviours can be used directly as set elements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Behavior {
    size: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Behavior {
    pub fn empty(size: usize) -> Self {
        let stride = size.div_ceil(WORD_BITS).max(1);
        Behavior {
            size,
            stride,
            bits: vec![0; stride * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut b = Behavior::empty(size);
        for q in 0..size {
            b.insert(q, q);
        }
        b
    }

    pub fn from_pairs<I>(size: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (StateId, StateId)>,
    {
        let mut b = Behavior::empty(size);
        for (q, r) in pairs {
            b.insert(q, r);
        }
        b
    }

    /// The partial function `q ↦ f[q]`.
    pub fn from_partial_function(f: &[Option<StateId>]) -> Self {
        Behavior::from_pairs(
            f.len(),
            f.iter()
                .enumerate()
                .filter_map(|(q, r)| r.map(|r| (q, r))),
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, q: StateId, r: StateId) -> bool {
        self.bits[q * self.stride + r / WORD_BITS] >> (r % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, q: StateId, r: StateId) {
        assert!(q < self.size && r < self.size, "pair ({q},{r}) out of range");
        self.bits[q * self.stride + r / WORD_BITS] |= 1 << (r % WORD_BITS);
    }

    pub fn remove(&mut self, q: StateId, r: StateId) {
        self.bits[q * self.stride + r / WORD_BITS] &= !(1 << (r % WORD_BITS));
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Targets related to `q`, in increasing order.
    pub fn images(&self, q: StateId) -> impl Iterator<Item = StateId> + '_ {
        let row = &self.bits[q * self.stride..(q + 1) * self.stride];
        row.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD_BITS + tz)
            })
        })
    }

    pub fn image(&self, q: StateId) -> Option<StateId> {
        self.images(q).next()
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (StateId, StateId)> + '_ {
        (0..self.size).flat_map(move |q| self.images(q).map(move |r| (q, r)))
    }

    pub fn is_partial_function(&self) -> bool {
        (0..self.size).all(|q| self.images(q).nth(1).is_none())
    }

    pub fn is_partial_injection(&self) -> bool {
        if !self.is_partial_function() {
            return false;
        }
        let mut hit = vec![false; self.size];
        for (_, r) in self.pairs() {
            if std::mem::replace(&mut hit[r], true) {
                return false;
            }
        }
        true
    }

    pub fn transpose(&self) -> Behavior {
        Behavior::from_pairs(self.size, self.pairs().map(|(q, r)| (r, q)))
    }

    pub fn union(&self, other: &Behavior) -> Behavior {
        assert_eq!(self.size, other.size);
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
        out
    }

    /// Keeps the pairs satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(StateId, StateId) -> bool) -> Behavior {
        Behavior::from_pairs(self.size, self.pairs().filter(|&(q, r)| keep(q, r)))
    }

    pub fn is_subset(&self, other: &Behavior) -> bool {
        self.size == other.size && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for Behavior {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}
