//! Ideal closure and exhaustive ideal enumeration.

use super::{Elem, FiniteRing, RingSubset};
use crate::CapStatus;
use serde::Serialize;
use std::collections::{BTreeSet, VecDeque};

/// Default ring-order cap for ideal enumeration.
pub const IDEAL_ENUMERATION_CAP: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealSide {
    Right,
    Left,
    TwoSided,
}

/// Smallest ideal of the given side containing the generators: fixpoint
/// closure under addition and the side's ring multiplications. Always
/// contains 0.
pub fn ideal_closure(ring: &FiniteRing, side: IdealSide, gens: &[Elem]) -> RingSubset {
    let mut set: BTreeSet<Elem> = BTreeSet::new();
    set.insert(ring.zero());
    set.extend(gens.iter().copied());
    loop {
        let snapshot: Vec<Elem> = set.iter().copied().collect();
        let before = set.len();
        for &a in &snapshot {
            for &b in &snapshot {
                set.insert(ring.add(a, b));
            }
            for r in ring.elements() {
                match side {
                    IdealSide::Right => {
                        set.insert(ring.mul(a, r));
                    }
                    IdealSide::Left => {
                        set.insert(ring.mul(r, a));
                    }
                    IdealSide::TwoSided => {
                        set.insert(ring.mul(a, r));
                        set.insert(ring.mul(r, a));
                    }
                }
            }
        }
        if set.len() == before {
            return RingSubset::new(set);
        }
    }
}

/// All ideals of the given side, by closure search: starting from {0}, grow
/// each known ideal by one new generator until no new ideals appear. Refuses
/// rings larger than `cap`.
pub fn enumerate_ideals(
    ring: &FiniteRing,
    side: IdealSide,
    cap: usize,
) -> CapStatus<Vec<RingSubset>> {
    if ring.order() > cap {
        return CapStatus::UndecidedAtCap {
            cap,
            required: ring.order(),
        };
    }
    let mut known: BTreeSet<RingSubset> = BTreeSet::new();
    let mut queue: VecDeque<RingSubset> = VecDeque::new();
    let zero_ideal = ideal_closure(ring, side, &[]);
    known.insert(zero_ideal.clone());
    queue.push_back(zero_ideal);
    while let Some(ideal) = queue.pop_front() {
        for a in ring.elements() {
            if ideal.contains(a) {
                continue;
            }
            let mut gens: Vec<Elem> = ideal.iter().collect();
            gens.push(a);
            let bigger = ideal_closure(ring, side, &gens);
            if known.insert(bigger.clone()) {
                queue.push_back(bigger);
            }
        }
    }
    CapStatus::Decided(known.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::super::{build, principal_right};
    use super::*;

    fn subset(els: &[Elem]) -> RingSubset {
        RingSubset::from_iter(els.iter().copied())
    }

    #[test]
    fn zmod4_has_three_ideals() {
        let ring = build::zmod(4);
        let ideals = enumerate_ideals(&ring, IdealSide::TwoSided, IDEAL_ENUMERATION_CAP);
        let ideals = ideals.expect_decided("small ring");
        assert_eq!(ideals.len(), 3);
        assert!(ideals.contains(&subset(&[0])));
        assert!(ideals.contains(&subset(&[0, 2])));
        assert!(ideals.contains(&subset(&[0, 1, 2, 3])));
    }

    #[test]
    fn z2xz2_has_four_ideals() {
        let z2 = build::zmod(2);
        let ring = build::product(&[&z2, &z2]).unwrap();
        let ideals = enumerate_ideals(&ring, IdealSide::TwoSided, IDEAL_ENUMERATION_CAP);
        let ideals = ideals.expect_decided("small ring");
        // 0, e1R, e2R, R with e1 = (1,0) index 1, e2 = (0,1) index 2
        assert_eq!(ideals.len(), 4);
        assert!(ideals.contains(&subset(&[0])));
        assert!(ideals.contains(&subset(&[0, 1])));
        assert!(ideals.contains(&subset(&[0, 2])));
        assert!(ideals.contains(&subset(&[0, 1, 2, 3])));
    }

    #[test]
    fn fields_have_only_trivial_ideals() {
        let ring = build::gf(2, 2).unwrap();
        for side in [IdealSide::Right, IdealSide::Left, IdealSide::TwoSided] {
            let ideals = enumerate_ideals(&ring, side, IDEAL_ENUMERATION_CAP);
            assert_eq!(ideals.expect_decided("small ring").len(), 2);
        }
    }

    #[test]
    fn matrix_ring_is_simple_but_has_five_right_ideals() {
        let ring = build::matrix(&build::zmod(2), 2).unwrap();
        let two_sided = enumerate_ideals(&ring, IdealSide::TwoSided, IDEAL_ENUMERATION_CAP);
        assert_eq!(two_sided.expect_decided("small ring").len(), 2);
        // right ideals are the column-space constraints: 0, three minimal
        // ones (4 matrices each), and the whole ring
        let right = enumerate_ideals(&ring, IdealSide::Right, IDEAL_ENUMERATION_CAP);
        let right = right.expect_decided("small ring");
        assert_eq!(right.len(), 5);
        let mut sizes: Vec<usize> = right.iter().map(|i| i.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 4, 4, 4, 16]);
        for ideal in right {
            assert!(ideal.is_right_ideal(&ring));
        }
    }

    #[test]
    fn singleton_closure_matches_principal_ideal() {
        let ring = build::matrix(&build::zmod(2), 2).unwrap();
        for a in ring.elements() {
            assert_eq!(
                ideal_closure(&ring, IdealSide::Right, &[a]),
                principal_right(&ring, a)
            );
        }
    }

    #[test]
    fn cap_overrun_is_explicit() {
        let ring = build::zmod(6);
        assert_eq!(
            enumerate_ideals(&ring, IdealSide::TwoSided, 4),
            CapStatus::UndecidedAtCap { cap: 4, required: 6 }
        );
    }
}
