use std::collections::{BTreeMap, HashMap};

use indexmap::IndexSet;

use crate::alphabet::TapeSymbol;
use crate::error::{Error, Result};
use crate::machine::TwoWayMachine;
use crate::states::DirectedStateSet;

use super::{compose_behaviors, Behavior};

pub const DEFAULT_MONOID_CAP: usize = 1_000_000;

/// The submonoid of `B(Q, ρ)` generated by a family of behaviours.
#[derive(Clone, Debug)]
pub struct BehaviorMonoid {
    states: DirectedStateSet,
    generators: BTreeMap<TapeSymbol, Behavior>,
    elements: IndexSet<Behavior>,
}

impl BehaviorMonoid {
    pub fn states(&self) -> &DirectedStateSet {
        &self.states
    }

    pub fn generators(&self) -> &BTreeMap<TapeSymbol, Behavior> {
        &self.generators
    }

    /// Elements in discovery order; the unit comes first.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = &Behavior> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn unit(&self) -> &Behavior {
        &self.elements[0]
    }

    pub fn contains(&self, b: &Behavior) -> bool {
        self.elements.contains(b)
    }

    pub fn index_of(&self, b: &Behavior) -> Option<usize> {
        self.elements.get_index_of(b)
    }

    pub fn multiply(&self, f: &Behavior, g: &Behavior) -> Behavior {
        compose_behaviors(&self.states, f, g)
    }

    pub fn aperiodicity(&self) -> AperiodicityReport {
        aperiodicity_of(&self.states, self.elements.iter())
    }
}

/// Breadth-first closure of `{unit} ∪ generators` under right multiplication by generators.
pub fn generate_monoid(
    states: &DirectedStateSet,
    generators: BTreeMap<TapeSymbol, Behavior>,
    cap: usize,
) -> Result<BehaviorMonoid> {
    let n = states.len();
    if let Some(g) = generators.values().find(|g| g.size() != n) {
        return Err(Error::validation(format!(
            "generator over {} states used with {} states",
            g.size(),
            n
        )));
    }
    let cap = cap.max(1);
    let mut elements = IndexSet::new();
    elements.insert(Behavior::identity(n));
    for g in generators.values() {
        elements.insert(g.clone());
    }
    if elements.len() > cap {
        return Err(Error::CapExceeded { cap });
    }
    let gens: Vec<&Behavior> = generators.values().collect();
    let mut i = 0;
    while i < elements.len() {
        let x = elements[i].clone();
        for g in &gens {
            let p = compose_behaviors(states, &x, g);
            if elements.insert(p) && elements.len() > cap {
                return Err(Error::CapExceeded { cap });
            }
        }
        i += 1;
    }
    Ok(BehaviorMonoid {
        states: states.clone(),
        generators,
        elements,
    })
}

/// Monoid generated by the input letters of `machine` (markers excluded).
pub fn machine_monoid(machine: &TwoWayMachine, cap: usize) -> Result<BehaviorMonoid> {
    let generators = machine
        .input_alphabet()
        .symbols()
        .iter()
        .map(|a| {
            let x = TapeSymbol::Letter(a.clone());
            let b = machine.relation(&x);
            (x, b)
        })
        .collect();
    generate_monoid(machine.states(), generators, cap)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerCycle {
    /// Least `i` with `x^i = x^(i+p)`.
    pub threshold: usize,
    /// Least `p ≥ 1` with that property.
    pub period: usize,
}

/// Threshold and period of the power sequence `x^0 = 1, x^1, x^2, …`.
pub fn power_cycle(states: &DirectedStateSet, x: &Behavior) -> PowerCycle {
    let mut seen: HashMap<Behavior, usize> = HashMap::new();
    let mut p = Behavior::identity(states.len());
    let mut k = 0;
    loop {
        if let Some(&i) = seen.get(&p) {
            return PowerCycle {
                threshold: i,
                period: k - i,
            };
        }
        let next = compose_behaviors(states, &p, x);
        seen.insert(p, k);
        p = next;
        k += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperiodicityReport {
    pub aperiodic: bool,
    /// Largest stabilisation threshold; meaningful when aperiodic.
    pub index: usize,
    /// First element whose powers cycle with period > 1.
    pub offending: Option<(Behavior, PowerCycle)>,
    pub elements_checked: usize,
}

pub fn aperiodicity_of<'a>(
    states: &DirectedStateSet,
    elements: impl IntoIterator<Item = &'a Behavior>,
) -> AperiodicityReport {
    let mut index = 0;
    let mut checked = 0;
    for x in elements {
        checked += 1;
        let c = power_cycle(states, x);
        if c.period != 1 {
            return AperiodicityReport {
                aperiodic: false,
                index,
                offending: Some((x.clone(), c)),
                elements_checked: checked,
            };
        }
        index = index.max(c.threshold);
    }
    AperiodicityReport {
        aperiodic: true,
        index,
        offending: None,
        elements_checked: checked,
    }
}
