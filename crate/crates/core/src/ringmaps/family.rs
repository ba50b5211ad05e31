//! Families of commutation maps and their composite monoid.

use super::{RingMap, SigmaDerivation};
use crate::finring::{Elem, FiniteRing};
use std::sync::Arc;

/// The n-tuple (σ_1, ..., σ_n) of commutation endomorphisms.
///
/// A composite exponent α acts as σ^α = σ_1^{α_1}∘…∘σ_n^{α_n}: the highest
/// index is applied first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaFamily {
    ring: Arc<FiniteRing>,
    maps: Vec<RingMap>,
}

impl SigmaFamily {
    pub fn new(ring: &Arc<FiniteRing>, maps: Vec<RingMap>) -> SigmaFamily {
        assert!(!maps.is_empty());
        for m in &maps {
            debug_assert!(Arc::ptr_eq(m.ring(), ring) || *m.ring() == *ring);
        }
        SigmaFamily {
            ring: Arc::clone(ring),
            maps,
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.maps.len()
    }

    pub fn map(&self, i: usize) -> &RingMap {
        &self.maps[i]
    }

    pub fn maps(&self) -> &[RingMap] {
        &self.maps
    }

    /// σ^α(a) without materializing the composite table.
    pub fn apply_composite(&self, alpha: &[usize], a: Elem) -> Elem {
        debug_assert_eq!(alpha.len(), self.maps.len());
        let mut v = a;
        for i in (0..self.maps.len()).rev() {
            for _ in 0..alpha[i] {
                v = self.maps[i].apply(v);
            }
        }
        v
    }

    /// The composite map σ^α as a table.
    pub fn composite(&self, alpha: &[usize]) -> RingMap {
        let mut acc = RingMap::identity(&self.ring);
        for i in (0..self.maps.len()).rev() {
            for _ in 0..alpha[i] {
                acc = self.maps[i].compose(&acc);
            }
        }
        acc
    }
}

/// All distinct composites σ^α with a representative exponent each.
///
/// Exponents range over the box Π [0, ord(σ_i)), which reaches every
/// composite of the normal form σ_1^{α_1}∘…∘σ_n^{α_n}; the first exponent in
/// ascending odometer order (last coordinate fastest) is kept per distinct
/// table. The identity (α = 0) is always present.
pub fn sigma_monoid(family: &SigmaFamily) -> Vec<(Vec<usize>, RingMap)> {
    let orders: Vec<usize> = family.maps.iter().map(|m| m.permutation_order()).collect();
    let n = orders.len();
    let mut out: Vec<(Vec<usize>, RingMap)> = Vec::new();
    let mut alpha = vec![0usize; n];
    loop {
        let comp = family.composite(&alpha);
        if !out.iter().any(|(_, m)| *m == comp) {
            out.push((alpha.clone(), comp));
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            alpha[i] += 1;
            if alpha[i] < orders[i] {
                break;
            }
            alpha[i] = 0;
        }
    }
}

/// Distinct power tables δ^0 = id, δ, δ∘δ, ... of one derivation, stopping at
/// the first repeat. Derivations are plain element maps here, so powers are
/// table compositions.
pub fn delta_chain(delta: &SigmaDerivation) -> Vec<Vec<Elem>> {
    let ring = delta.ring();
    let mut chain: Vec<Vec<Elem>> = vec![ring.elements().collect()];
    loop {
        let last = chain.last().unwrap();
        let next: Vec<Elem> = last.iter().map(|&a| delta.apply(a)).collect();
        if chain.contains(&next) {
            return chain;
        }
        chain.push(next);
    }
}
