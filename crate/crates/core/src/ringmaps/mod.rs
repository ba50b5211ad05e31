//! Table-based ring endomorphisms and twisted derivations.
//!
//! A [`RingMap`] is an injective unital ring endomorphism given as an
//! element-index table; a [`SigmaDerivation`] is an additive map δ satisfying
//! the twisted Leibniz law δ(ab) = σ(a)δ(b) + δ(a)b. Both are validated
//! exhaustively at construction. [`SigmaFamily`] composes a family of maps
//! into the monoid of componentwise-power composites.

mod builtins;
mod compat;
mod family;

pub use builtins::{
    formal_derivative_table, frobenius_table, identity_table, swap_table, zero_table,
    BuiltinError,
};
pub use compat::{
    check_compat_consequences, check_compatibility, CompatReport, ConsequenceFailure,
};
pub use family::{delta_chain, sigma_monoid, SigmaFamily};

use crate::finring::{Elem, FiniteRing};
use serde::Serialize;
use std::sync::Arc;

/// A validated injective unital ring endomorphism.
#[derive(Debug, Clone)]
pub struct RingMap {
    ring: Arc<FiniteRing>,
    table: Vec<Elem>,
    name: String,
}

impl PartialEq for RingMap {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}
impl Eq for RingMap {}

impl RingMap {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.table[a]
    }

    pub fn identity(ring: &Arc<FiniteRing>) -> RingMap {
        RingMap {
            ring: Arc::clone(ring),
            table: ring.elements().collect(),
            name: "id".to_string(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// self ∘ other: applies `other` first.
    pub fn compose(&self, other: &RingMap) -> RingMap {
        debug_assert!(Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring);
        RingMap {
            ring: Arc::clone(&self.ring),
            table: other.table.iter().map(|&a| self.table[a]).collect(),
            name: format!("{}∘{}", self.name, other.name),
        }
    }

    /// k-fold self-composition; k = 0 is the identity.
    pub fn power(&self, k: usize) -> RingMap {
        let mut acc = RingMap::identity(&self.ring);
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        RingMap { name: format!("{}^{k}", self.name), ..acc }
    }

    /// Order as a permutation of the element set (maps are injective on a
    /// finite set, hence bijective).
    pub fn permutation_order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = self.compose(&acc);
            k += 1;
        }
        k
    }
}

/// The law a candidate table failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapLaw {
    Additive,
    Multiplicative,
    Unital,
    Injective,
    TwistedLeibniz,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapViolation {
    pub law: MapLaw,
    pub witness: Vec<Elem>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error("map table has {got} entries for a ring of order {expected}")]
    TableLength { got: usize, expected: usize },
    #[error("map table entry {entry} is not an element index below {order}")]
    EntryRange { entry: Elem, order: usize },
    #[error("{} law fails at {:?}: {}", law_name(.0.law), .0.witness, .0.detail)]
    Violation(MapViolation),
}

fn law_name(law: MapLaw) -> &'static str {
    match law {
        MapLaw::Additive => "additivity",
        MapLaw::Multiplicative => "multiplicativity",
        MapLaw::Unital => "unitality",
        MapLaw::Injective => "injectivity",
        MapLaw::TwistedLeibniz => "twisted Leibniz",
    }
}

fn check_shape(ring: &FiniteRing, table: &[Elem]) -> Result<(), MapError> {
    if table.len() != ring.order() {
        return Err(MapError::TableLength {
            got: table.len(),
            expected: ring.order(),
        });
    }
    if let Some(&entry) = table.iter().find(|&&e| e >= ring.order()) {
        return Err(MapError::EntryRange {
            entry,
            order: ring.order(),
        });
    }
    Ok(())
}

fn check_additive(ring: &FiniteRing, table: &[Elem]) -> Result<(), MapError> {
    for a in ring.elements() {
        for b in ring.elements() {
            let lhs = table[ring.add(a, b)];
            let rhs = ring.add(table[a], table[b]);
            if lhs != rhs {
                return Err(MapError::Violation(MapViolation {
                    law: MapLaw::Additive,
                    witness: vec![a, b],
                    detail: format!(
                        "map({}+{}) = {} but map({})+map({}) = {}",
                        ring.elem_name(a),
                        ring.elem_name(b),
                        ring.elem_name(lhs),
                        ring.elem_name(a),
                        ring.elem_name(b),
                        ring.elem_name(rhs)
                    ),
                }));
            }
        }
    }
    Ok(())
}

/// Validates all four endomorphism laws over every pair and returns the map,
/// or the first violation in deterministic scan order.
pub fn validate_endomorphism(
    ring: &Arc<FiniteRing>,
    table: Vec<Elem>,
    name: impl Into<String>,
) -> Result<RingMap, MapError> {
    check_shape(ring, &table)?;
    // cheapest law first, so the diagnosis names the most basic failure
    if table[ring.one()] != ring.one() {
        return Err(MapError::Violation(MapViolation {
            law: MapLaw::Unital,
            witness: vec![ring.one()],
            detail: format!("map(1) = {}", ring.elem_name(table[ring.one()])),
        }));
    }
    check_additive(ring, &table)?;
    for a in ring.elements() {
        for b in ring.elements() {
            let lhs = table[ring.mul(a, b)];
            let rhs = ring.mul(table[a], table[b]);
            if lhs != rhs {
                return Err(MapError::Violation(MapViolation {
                    law: MapLaw::Multiplicative,
                    witness: vec![a, b],
                    detail: format!(
                        "map({}*{}) = {} but map({})*map({}) = {}",
                        ring.elem_name(a),
                        ring.elem_name(b),
                        ring.elem_name(lhs),
                        ring.elem_name(a),
                        ring.elem_name(b),
                        ring.elem_name(rhs)
                    ),
                }));
            }
        }
    }
    let mut seen = vec![false; ring.order()];
    for a in ring.elements() {
        if seen[table[a]] {
            let other = ring.elements().find(|&b| table[b] == table[a]).unwrap();
            return Err(MapError::Violation(MapViolation {
                law: MapLaw::Injective,
                witness: vec![other, a],
                detail: format!(
                    "map({}) = map({}) = {}",
                    ring.elem_name(other),
                    ring.elem_name(a),
                    ring.elem_name(table[a])
                ),
            }));
        }
        seen[table[a]] = true;
    }
    Ok(RingMap {
        ring: Arc::clone(ring),
        table,
        name: name.into(),
    })
}

/// An additive map δ with δ(ab) = σ(a)δ(b) + δ(a)b, validated exhaustively.
///
/// That orientation is the one forced by associativity of x(ab) under the
/// commutation rule x·r = σ(r)x + δ(r); the extension's confluence check
/// re-verifies it independently.
#[derive(Debug, Clone)]
pub struct SigmaDerivation {
    ring: Arc<FiniteRing>,
    sigma: RingMap,
    table: Vec<Elem>,
    name: String,
}

impl PartialEq for SigmaDerivation {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.sigma == other.sigma
    }
}
impl Eq for SigmaDerivation {}

impl SigmaDerivation {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn sigma(&self) -> &RingMap {
        &self.sigma
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.table[a]
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|&v| v == self.ring.zero())
    }

    pub fn zero(ring: &Arc<FiniteRing>, sigma: &RingMap) -> SigmaDerivation {
        SigmaDerivation {
            ring: Arc::clone(ring),
            sigma: sigma.clone(),
            table: vec![ring.zero(); ring.order()],
            name: "0".to_string(),
        }
    }
}

/// Validates additivity and the twisted Leibniz law over every pair.
pub fn validate_sigma_derivation(
    ring: &Arc<FiniteRing>,
    sigma: &RingMap,
    table: Vec<Elem>,
    name: impl Into<String>,
) -> Result<SigmaDerivation, MapError> {
    check_shape(ring, &table)?;
    check_additive(ring, &table)?;
    for a in ring.elements() {
        for b in ring.elements() {
            let lhs = table[ring.mul(a, b)];
            let rhs = ring.add(
                ring.mul(sigma.apply(a), table[b]),
                ring.mul(table[a], b),
            );
            if lhs != rhs {
                return Err(MapError::Violation(MapViolation {
                    law: MapLaw::TwistedLeibniz,
                    witness: vec![a, b],
                    detail: format!(
                        "delta({}*{}) = {} but sigma({})delta({})+delta({}){} = {}",
                        ring.elem_name(a),
                        ring.elem_name(b),
                        ring.elem_name(lhs),
                        ring.elem_name(a),
                        ring.elem_name(b),
                        ring.elem_name(a),
                        ring.elem_name(b),
                        ring.elem_name(rhs)
                    ),
                }));
            }
        }
    }
    Ok(SigmaDerivation {
        ring: Arc::clone(ring),
        sigma: sigma.clone(),
        table,
        name: name.into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::build;

    fn arc(r: FiniteRing) -> Arc<FiniteRing> {
        Arc::new(r)
    }

    #[test]
    fn frobenius_on_gf4_is_valid_of_order_two() {
        let ring = arc(build::gf(2, 2).unwrap());
        let table = frobenius_table(&ring).unwrap();
        let frob = validate_endomorphism(&ring, table, "frobenius").unwrap();
        assert_eq!(frob.permutation_order(), 2);
        // w ↦ w^2 = w+1 ↦ w
        assert_eq!(frob.apply(2), 3);
        assert_eq!(frob.apply(3), 2);
    }

    #[test]
    fn swap_on_z2xz2_is_valid() {
        let z2 = build::zmod(2);
        let ring = arc(build::product(&[&z2, &z2]).unwrap());
        let table = swap_table(&ring).unwrap();
        let swap = validate_endomorphism(&ring, table, "swap").unwrap();
        assert_eq!(swap.apply(1), 2);
        assert_eq!(swap.apply(2), 1);
        assert_eq!(swap.permutation_order(), 2);
    }

    #[test]
    fn doubling_on_zmod4_fails_unitality() {
        let ring = arc(build::zmod(4));
        let table: Vec<Elem> = ring.elements().map(|a| ring.mul(2, a)).collect();
        let err = validate_endomorphism(&ring, table, "double").unwrap_err();
        match err {
            MapError::Violation(v) => {
                assert_eq!(v.law, MapLaw::Unital);
                assert_eq!(v.witness, vec![1]);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn non_injective_table_is_rejected() {
        let ring = arc(build::zmod(2));
        // constant-to-zero map is additive and multiplicative but not unital;
        // catch injectivity with the table on the trivial quotient ring
        let one = arc(build::zmod(1));
        let table = vec![0];
        assert!(validate_endomorphism(&one, table, "id").is_ok());
        let bad = vec![0, 0];
        let err = validate_endomorphism(&ring, bad, "collapse").unwrap_err();
        assert!(matches!(err, MapError::Violation(v) if v.law == MapLaw::Unital));
    }

    #[test]
    fn formal_derivative_is_a_derivation() {
        let ring = arc(build::trunc_poly(2, 2));
        let id = RingMap::identity(&ring);
        let table = formal_derivative_table(&ring).unwrap();
        let ddt = validate_sigma_derivation(&ring, &id, table, "d/dt").unwrap();
        // delta(t) = 1, delta(1) = 0, delta(t·t) = delta(0) = 0
        assert_eq!(ddt.apply(2), 1);
        assert_eq!(ddt.apply(1), 0);
        assert_eq!(ddt.apply(ring.mul(2, 2)), 0);
    }

    #[test]
    fn zero_derivation_is_valid_for_any_sigma() {
        let ring = arc(build::gf(2, 2).unwrap());
        let frob =
            validate_endomorphism(&ring, frobenius_table(&ring).unwrap(), "frobenius").unwrap();
        let z = zero_table(&ring);
        assert!(validate_sigma_derivation(&ring, &frob, z, "0").is_ok());
    }

    #[test]
    fn identity_is_not_a_derivation_on_zmod4() {
        let ring = arc(build::zmod(4));
        let id = RingMap::identity(&ring);
        let table: Vec<Elem> = ring.elements().collect();
        let err = validate_sigma_derivation(&ring, &id, table, "bad").unwrap_err();
        match err {
            MapError::Violation(v) => {
                assert_eq!(v.law, MapLaw::TwistedLeibniz);
                assert_eq!(v.witness, vec![1, 1]);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn composition_and_powers() {
        let ring = arc(build::gf(2, 2).unwrap());
        let frob =
            validate_endomorphism(&ring, frobenius_table(&ring).unwrap(), "frobenius").unwrap();
        assert!(frob.compose(&frob).is_identity());
        assert!(frob.power(0).is_identity());
        assert_eq!(frob.power(3), frob);
    }
}
