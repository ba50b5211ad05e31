//! Element-level ring-class predicates: idempotent structure, nil structure,
//! Baer/p.p./p.q.-Baer classification and the exact annihilator condition.
//!
//! Everything is decided by exhaustive search; anything that needs the ideal
//! lattice goes through [`enumerate_ideals`] and inherits its cap.

use super::ideals::{enumerate_ideals, IdealSide};
use super::{principal_left, principal_right, Elem, FiniteRing, RingSubset};
use crate::{CapStatus, Side};
use serde::Serialize;
use std::collections::BTreeSet;

/// Idempotents and their centrality classes.
///
/// Left semicentral means re = ere for all r; right semicentral means
/// er = ere for all r; central idempotents are both.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotentReport {
    pub idempotents: RingSubset,
    pub central_idempotents: RingSubset,
    pub left_semicentral: RingSubset,
    pub right_semicentral: RingSubset,
}

pub fn idempotent_sets(ring: &FiniteRing) -> IdempotentReport {
    let idempotents: Vec<Elem> = ring.elements().filter(|&e| ring.is_idempotent(e)).collect();
    let left_semicentral = RingSubset::from_iter(idempotents.iter().copied().filter(|&e| {
        ring.elements()
            .all(|r| ring.mul(r, e) == ring.mul(ring.mul(e, r), e))
    }));
    let right_semicentral = RingSubset::from_iter(idempotents.iter().copied().filter(|&e| {
        ring.elements()
            .all(|r| ring.mul(e, r) == ring.mul(ring.mul(e, r), e))
    }));
    let central_idempotents = RingSubset::from_iter(
        idempotents
            .iter()
            .copied()
            .filter(|&e| ring.elements().all(|r| ring.mul(e, r) == ring.mul(r, e))),
    );
    IdempotentReport {
        idempotents: RingSubset::from_iter(idempotents),
        central_idempotents,
        left_semicentral,
        right_semicentral,
    }
}

/// How the nil set fails to be an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NiFailure {
    /// a, b nilpotent but a+b is not.
    Sum { a: Elem, b: Elem },
    /// a nilpotent but a·r is not.
    RightMul { a: Elem, r: Elem },
    /// a nilpotent but r·a is not.
    LeftMul { a: Elem, r: Elem },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NilReport {
    pub nil_set: RingSubset,
    pub is_reduced: bool,
    /// The nil set is an ideal (equivalently, the largest nil ideal is all of
    /// it, which makes the upper nilradical equal the nil set).
    pub is_ni: bool,
    pub ni_failure: Option<NiFailure>,
    /// Intersection of all prime two-sided ideals.
    pub prime_radical: CapStatus<RingSubset>,
    pub is_2_primal: CapStatus<bool>,
    pub is_semiprime: CapStatus<bool>,
}

/// Proper P is prime when for all a, b outside P some r has arb outside P.
fn is_prime_ideal(ring: &FiniteRing, p: &RingSubset) -> bool {
    if p.len() == ring.order() {
        return false;
    }
    let outside: Vec<Elem> = ring.elements().filter(|&a| !p.contains(a)).collect();
    for &a in &outside {
        for &b in &outside {
            let escapes = ring
                .elements()
                .any(|r| !p.contains(ring.mul(ring.mul(a, r), b)));
            if !escapes {
                return false;
            }
        }
    }
    true
}

pub fn nil_structure(ring: &FiniteRing, ideal_cap: usize) -> NilReport {
    let nil: Vec<Elem> = ring.elements().filter(|&a| ring.is_nilpotent(a)).collect();
    let nil_set = RingSubset::from_iter(nil.iter().copied());
    let is_reduced = nil_set.len() == 1;

    let mut ni_failure = None;
    'scan: for &a in &nil {
        for &b in &nil {
            if !nil_set.contains(ring.add(a, b)) {
                ni_failure = Some(NiFailure::Sum { a, b });
                break 'scan;
            }
        }
        for r in ring.elements() {
            if !nil_set.contains(ring.mul(a, r)) {
                ni_failure = Some(NiFailure::RightMul { a, r });
                break 'scan;
            }
            if !nil_set.contains(ring.mul(r, a)) {
                ni_failure = Some(NiFailure::LeftMul { a, r });
                break 'scan;
            }
        }
    }
    let is_ni = ni_failure.is_none();

    let (prime_radical, is_2_primal, is_semiprime) =
        match enumerate_ideals(ring, IdealSide::TwoSided, ideal_cap) {
            CapStatus::Decided(ideals) => {
                let mut radical: BTreeSet<Elem> = ring.elements().collect();
                for ideal in ideals.iter().filter(|p| is_prime_ideal(ring, p)) {
                    radical.retain(|a| ideal.contains(*a));
                }
                let radical = RingSubset::new(radical);
                let two_primal = radical == nil_set;
                let semiprime = radical.len() == 1;
                (
                    CapStatus::Decided(radical),
                    CapStatus::Decided(two_primal),
                    CapStatus::Decided(semiprime),
                )
            }
            CapStatus::UndecidedAtCap { cap, required } => (
                CapStatus::UndecidedAtCap { cap, required },
                CapStatus::UndecidedAtCap { cap, required },
                CapStatus::UndecidedAtCap { cap, required },
            ),
        };

    NilReport {
        nil_set,
        is_reduced,
        is_ni,
        ni_failure,
        prime_radical,
        is_2_primal,
        is_semiprime,
    }
}

/// Smallest idempotent e with eR = target (or Re on the left), if any.
pub fn generating_idempotent(
    ring: &FiniteRing,
    target: &RingSubset,
    side: Side,
) -> Option<Elem> {
    ring.elements()
        .filter(|&e| ring.is_idempotent(e))
        .find(|&e| {
            let principal = match side {
                Side::Right => principal_right(ring, e),
                Side::Left => principal_left(ring, e),
            };
            principal == *target
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub is_abelian: bool,
    /// (idempotent, element) with er ≠ re.
    pub abelian_failure: Option<(Elem, Elem)>,
    pub is_baer: bool,
    /// A subset annihilator not of the form eR.
    pub baer_failure: Option<RingSubset>,
    pub is_pp_right: bool,
    pub pp_right_failure: Option<Elem>,
    pub is_pp_left: bool,
    pub pp_left_failure: Option<Elem>,
    pub is_pq_baer_right: bool,
    pub pq_baer_right_failure: Option<Elem>,
    pub is_pq_baer_left: bool,
    pub pq_baer_left_failure: Option<Elem>,
}

/// Exhaustive classification.
///
/// Baer is checked over the intersection-closure of the element annihilators,
/// which is exactly the set of subset annihilators because
/// r_R(S) = ∩_{s∈S} r_R(s).
pub fn classify_ring(ring: &FiniteRing) -> ClassifyReport {
    let mut abelian_failure = None;
    'ab: for e in ring.elements().filter(|&e| ring.is_idempotent(e)) {
        for r in ring.elements() {
            if ring.mul(e, r) != ring.mul(r, e) {
                abelian_failure = Some((e, r));
                break 'ab;
            }
        }
    }

    let elem_anns: BTreeSet<RingSubset> = ring
        .elements()
        .map(|a| RingSubset::from_iter([a]).right_annihilator(ring))
        .collect();
    let mut closure = elem_anns.clone();
    loop {
        let mut fresh: Vec<RingSubset> = Vec::new();
        for x in &closure {
            for y in &elem_anns {
                let inter = RingSubset::new(
                    x.members.intersection(&y.members).copied().collect(),
                );
                if !closure.contains(&inter) {
                    fresh.push(inter);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        closure.extend(fresh);
    }
    let baer_failure = closure
        .iter()
        .find(|ann| generating_idempotent(ring, ann, Side::Right).is_none())
        .cloned();

    let pp_right_failure = ring.elements().find(|&a| {
        let ann = RingSubset::from_iter([a]).right_annihilator(ring);
        generating_idempotent(ring, &ann, Side::Right).is_none()
    });
    let pp_left_failure = ring.elements().find(|&a| {
        let ann = RingSubset::from_iter([a]).left_annihilator(ring);
        generating_idempotent(ring, &ann, Side::Left).is_none()
    });
    let pq_baer_right_failure = ring.elements().find(|&a| {
        let ann = principal_right(ring, a).right_annihilator(ring);
        generating_idempotent(ring, &ann, Side::Right).is_none()
    });
    let pq_baer_left_failure = ring.elements().find(|&a| {
        let ann = principal_left(ring, a).left_annihilator(ring);
        generating_idempotent(ring, &ann, Side::Left).is_none()
    });

    ClassifyReport {
        is_abelian: abelian_failure.is_none(),
        abelian_failure,
        is_baer: baer_failure.is_none(),
        baer_failure,
        is_pp_right: pp_right_failure.is_none(),
        pp_right_failure,
        is_pp_left: pp_left_failure.is_none(),
        pp_left_failure,
        is_pq_baer_right: pq_baer_right_failure.is_none(),
        pq_baer_right_failure,
        is_pq_baer_left: pq_baer_left_failure.is_none(),
        pq_baer_left_failure,
    }
}

/// Exact annihilator-condition report: every one-sided ideal's annihilator
/// must match the annihilator of a principal ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AcExactReport {
    pub side: Side,
    pub holds: bool,
    /// One witness c per ideal with r(I) = r(cR) (left mirror: ℓ(I) = ℓ(Rc)).
    pub witness_map: Vec<(RingSubset, Elem)>,
    pub counterexample: Option<RingSubset>,
}

/// Checks the condition exactly over the full ideal lattice of the given
/// side. In a finite ring every ideal is finitely generated, so this is the
/// whole condition, not an approximation.
pub fn ring_ac_exact(ring: &FiniteRing, side: Side, ideal_cap: usize) -> CapStatus<AcExactReport> {
    let ideal_side = match side {
        Side::Right => IdealSide::Right,
        Side::Left => IdealSide::Left,
    };
    let ideals = match enumerate_ideals(ring, ideal_side, ideal_cap) {
        CapStatus::Decided(is) => is,
        CapStatus::UndecidedAtCap { cap, required } => {
            return CapStatus::UndecidedAtCap { cap, required }
        }
    };
    let mut witness_map = Vec::new();
    let mut counterexample = None;
    for ideal in &ideals {
        let ann = ideal.annihilator(ring, side);
        let witness = ring.elements().find(|&c| {
            let principal = match side {
                Side::Right => principal_right(ring, c),
                Side::Left => principal_left(ring, c),
            };
            principal.annihilator(ring, side) == ann
        });
        match witness {
            Some(c) => witness_map.push((ideal.clone(), c)),
            None => {
                if counterexample.is_none() {
                    counterexample = Some(ideal.clone());
                }
            }
        }
    }
    CapStatus::Decided(AcExactReport {
        side,
        holds: counterexample.is_none(),
        witness_map,
        counterexample,
    })
}
