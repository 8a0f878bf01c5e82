use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::planarity::{is_planar_transition, ExtendedOrder};
use crate::states::DirectedStateSet;

use super::closure::{aperiodicity_of, AperiodicityReport};
use super::{compose_behaviors, Behavior};

pub const DEFAULT_ENUMERATION_CAP: usize = 6;
/// Relations are enumerated as all `2^(n²)` subsets, so the cap is lower.
pub const DEFAULT_RELATION_ENUMERATION_CAP: usize = 4;

/// Every partial function on `states`, in odometer order (`None` first).
pub fn partial_functions(n: usize) -> impl Iterator<Item = Behavior> {
    let mut digits = vec![0usize; n];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let f: Vec<Option<usize>> = digits.iter().map(|&d| d.checked_sub(1)).collect();
        done = true;
        for d in digits.iter_mut() {
            if *d < n {
                *d += 1;
                done = false;
                break;
            }
            *d = 0;
        }
        Some(Behavior::from_partial_function(&f))
    })
}

/// Every relation on `n` states.
pub fn all_relations(n: usize) -> impl Iterator<Item = Behavior> {
    assert!(n * n < 64, "too many relations to enumerate");
    (0u64..1 << (n * n)).map(move |mask| {
        Behavior::from_pairs(
            n,
            (0..n * n).filter(|i| mask >> i & 1 == 1).map(|i| (i / n, i % n)),
        )
    })
}

/// The carrier of `T(Q, ρ, <)`: partial functions that are planar for the order of `states`.
pub fn enumerate_planar_deterministic(states: &DirectedStateSet, cap: usize) -> Result<Vec<Behavior>> {
    ExtendedOrder::new(states)?;
    let n = states.len();
    if n > cap {
        return Err(Error::StateSpaceTooLarge { size: n, cap });
    }
    let mut out = Vec::new();
    for f in partial_functions(n) {
        if is_planar_transition(states, &f)? {
            out.push(f);
        }
    }
    Ok(out)
}

/// All planar relations, deterministic or not.
pub fn enumerate_planar_relations(states: &DirectedStateSet, cap: usize) -> Result<Vec<Behavior>> {
    ExtendedOrder::new(states)?;
    let n = states.len();
    if n > cap {
        return Err(Error::StateSpaceTooLarge { size: n, cap });
    }
    let mut out = Vec::new();
    for f in all_relations(n) {
        if is_planar_transition(states, &f)? {
            out.push(f);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubmonoidCheck {
    /// Restrict the carrier to partial functions.
    pub require_deterministic: bool,
    pub cap: usize,
}

impl Default for SubmonoidCheck {
    fn default() -> Self {
        SubmonoidCheck {
            require_deterministic: true,
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl SubmonoidCheck {
    pub fn nondeterministic() -> Self {
        SubmonoidCheck {
            require_deterministic: false,
            cap: DEFAULT_RELATION_ENUMERATION_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SubmonoidReport {
    pub carrier_size: usize,
    pub contains_unit: bool,
    /// `(f, g, f * g)` with `f * g` outside the carrier.
    pub closure_counterexample: Option<(Behavior, Behavior, Behavior)>,
    pub aperiodicity: AperiodicityReport,
}

impl SubmonoidReport {
    pub fn passes(&self) -> bool {
        self.contains_unit && self.closure_counterexample.is_none() && self.aperiodicity.aperiodic
    }
}

/// Checks that the planar (deterministic) transitions contain the unit, are
/// closed under `*`, and form an aperiodic set.
pub fn verify_tl_submonoid(states: &DirectedStateSet, check: SubmonoidCheck) -> Result<SubmonoidReport> {
    let carrier = if check.require_deterministic {
        enumerate_planar_deterministic(states, check.cap)?
    } else {
        enumerate_planar_relations(states, check.cap)?
    };
    let members: HashSet<&Behavior> = carrier.iter().collect();
    let contains_unit = members.contains(&Behavior::identity(states.len()));
    let mut closure_counterexample = None;
    'outer: for f in &carrier {
        for g in &carrier {
            let p = compose_behaviors(states, f, g);
            if !members.contains(&p) {
                closure_counterexample = Some((f.clone(), g.clone(), p));
                break 'outer;
            }
        }
    }
    Ok(SubmonoidReport {
        carrier_size: carrier.len(),
        contains_unit,
        closure_counterexample,
        aperiodicity: aperiodicity_of(states, &carrier),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planarity::geometric_planarity_oracle;
    use crate::states::Direction::{Backward as B, Forward as F};

    #[test]
    fn small_carriers() {
        let one = DirectedStateSet::from_directions(&[F]).with_natural_order();
        assert_eq!(enumerate_planar_deterministic(&one, 6).unwrap().len(), 2);
        let two = DirectedStateSet::from_directions(&[F, F]).with_natural_order();
        let c = enumerate_planar_deterministic(&two, 6).unwrap();
        assert_eq!(c.len(), 8);
        assert!(!c.contains(&Behavior::from_pairs(2, [(0, 1), (1, 0)])));
    }

    #[test]
    fn carrier_size_matches_geometric_filter() {
        let s = DirectedStateSet::from_directions(&[F, B, B]).with_natural_order();
        let geometric = partial_functions(3)
            .filter(|f| geometric_planarity_oracle(&s, f).unwrap())
            .count();
        assert_eq!(enumerate_planar_deterministic(&s, 6).unwrap().len(), geometric);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partial_functions(3).count(), 64);
        assert_eq!(all_relations(2).count(), 16);
    }

    #[test]
    fn cap_and_order_required() {
        let s = DirectedStateSet::from_directions(&[F, F, F]).with_natural_order();
        assert!(matches!(
            enumerate_planar_deterministic(&s, 2),
            Err(Error::StateSpaceTooLarge { size: 3, cap: 2 })
        ));
        let unordered = DirectedStateSet::from_directions(&[F]);
        assert_eq!(enumerate_planar_deterministic(&unordered, 6).unwrap_err(), Error::MissingOrder);
    }

    #[test]
    fn trivial_space_passes() {
        let s = DirectedStateSet::from_directions(&[B]).with_natural_order();
        assert!(verify_tl_submonoid(&s, SubmonoidCheck::default()).unwrap().passes());
    }

    #[test]
    fn planar_relations_do_not_compose() {
        let s = DirectedStateSet::from_directions(&[F, F]).with_natural_order();
        let r = verify_tl_submonoid(&s, SubmonoidCheck::nondeterministic()).unwrap();
        let (f, g, p) = r.closure_counterexample.expect("closure must fail");
        assert!(is_planar_transition(&s, &f).unwrap());
        assert!(is_planar_transition(&s, &g).unwrap());
        assert!(!is_planar_transition(&s, &p).unwrap());
    }
}
