//! Normal-form rewriting: the two relation families
//!
//! * x_i·r → σ_i(r)·x_i + δ_i(r)
//! * x_j·x_i → d·x_i·x_j + Σ_k c_k·x_k + c_0 (i < j)
//!
//! applied until every term is a left coefficient times a standard monomial.
//!
//! Termination: `nf_scalar` recurses on strictly smaller |α|; `nf_push`
//! peels the highest variable off α and recurses only on words of strictly
//! smaller total degree, re-appending that variable afterwards (legal
//! because every normal-form monomial of the recursive call stays within the
//! peeled prefix's variable range). All three entry points are memoized per
//! extension.

use super::{ExtensionSpec, Monomial, SkewPoly, SpecError, Terms};
use crate::finring::Elem;
use std::sync::Arc;

fn add_term(ext: &ExtensionSpec, terms: &mut Terms, m: Monomial, c: Elem) {
    let ring = &ext.ring;
    if c == ring.zero() {
        return;
    }
    match terms.get_mut(&m) {
        Some(v) => {
            *v = ring.add(*v, c);
            if *v == ring.zero() {
                terms.remove(&m);
            }
        }
        None => {
            terms.insert(m, c);
        }
    }
}

impl ExtensionSpec {
    /// Normal form of x^α·r. Every output monomial is componentwise ≤ α.
    pub(crate) fn nf_scalar(&self, alpha: &Monomial, r: Elem) -> Terms {
        let ring = &self.ring;
        if r == ring.zero() {
            return Terms::new();
        }
        let i = match alpha.max_var() {
            None => {
                let mut t = Terms::new();
                t.insert(alpha.clone(), r);
                return t;
            }
            Some(i) => i,
        };
        let key = (alpha.clone(), r);
        if let Some(hit) = self.caches.scalar.read().unwrap().get(&key) {
            return hit.clone();
        }
        // x^α·r = x^{α-e_i}·(x_i·r) with i the highest variable of α
        let head = alpha.minus_var(i);
        let mut out = Terms::new();
        for (gamma, s) in self.nf_scalar(&head, self.sigmas.map(i).apply(r)) {
            add_term(self, &mut out, gamma.plus_var(i), s);
        }
        for (gamma, s) in self.nf_scalar(&head, self.deltas[i].apply(r)) {
            add_term(self, &mut out, gamma, s);
        }
        self.caches.scalar.write().unwrap().insert(key, out.clone());
        out
    }

    /// Normal form of x^α·x_i. Output monomials use no variable above
    /// max(max_var(α), i).
    pub(crate) fn nf_push(&self, alpha: &Monomial, i: usize) -> Terms {
        let ring = &self.ring;
        let m = match alpha.max_var() {
            Some(m) if m > i => m,
            _ => {
                let mut t = Terms::new();
                t.insert(alpha.plus_var(i), ring.one());
                return t;
            }
        };
        let key = (alpha.clone(), i);
        if let Some(hit) = self.caches.push.read().unwrap().get(&key) {
            return hit.clone();
        }
        // x^α·x_i = x^{α-e_m}·(x_m·x_i), rewriting the out-of-order pair
        let head = alpha.minus_var(m);
        let rel = self.relation(i, m).clone();
        let mut out = Terms::new();
        for (gamma, s) in self.nf_scalar(&head, rel.d) {
            for (mu, t) in self.nf_push(&gamma, i) {
                add_term(self, &mut out, mu.plus_var(m), ring.mul(s, t));
            }
        }
        for (k, &c) in rel.linear.iter().enumerate() {
            if c == ring.zero() {
                continue;
            }
            for (gamma, s) in self.nf_scalar(&head, c) {
                for (mu, t) in self.nf_push(&gamma, k) {
                    add_term(self, &mut out, mu, ring.mul(s, t));
                }
            }
        }
        for (gamma, s) in self.nf_scalar(&head, rel.constant) {
            add_term(self, &mut out, gamma, s);
        }
        self.caches.push.write().unwrap().insert(key, out.clone());
        out
    }

    /// Normal form of x^α·x^β.
    pub(crate) fn nf_mono(&self, alpha: &Monomial, beta: &Monomial) -> Terms {
        let ring = &self.ring;
        if beta.is_one() {
            let mut t = Terms::new();
            t.insert(alpha.clone(), ring.one());
            return t;
        }
        let key = (alpha.clone(), beta.clone());
        if let Some(hit) = self.caches.mono.read().unwrap().get(&key) {
            return hit.clone();
        }
        let mut out = Terms::new();
        out.insert(alpha.clone(), ring.one());
        for (i, &b) in beta.0.iter().enumerate() {
            for _ in 0..b {
                let mut next = Terms::new();
                for (gamma, c) in &out {
                    for (mu, t) in self.nf_push(gamma, i) {
                        add_term(self, &mut next, mu, ring.mul(*c, t));
                    }
                }
                out = next;
            }
        }
        self.caches.mono.write().unwrap().insert(key, out.clone());
        out
    }
}

impl SkewPoly {
    /// Exact product in normal form.
    pub fn mul(&self, other: &SkewPoly) -> SkewPoly {
        let ext = self.ext();
        debug_assert!(Arc::ptr_eq(ext, other.ext()));
        let ring = &ext.ring;
        let mut out = SkewPoly::zero(ext);
        for (alpha, a) in self.terms() {
            for (beta, b) in other.terms() {
                // a·x^α·b·x^β = Σ_γ a·s_γ·(x^γ·x^β)
                for (gamma, s) in ext.nf_scalar(alpha, b) {
                    let coeff = ring.mul(a, s);
                    if coeff == ring.zero() {
                        continue;
                    }
                    for (mu, t) in ext.nf_mono(&gamma, beta) {
                        out.accumulate(&mu, ring.mul(coeff, t));
                    }
                }
            }
        }
        out
    }

    /// f^k with f^0 = 1.
    pub fn pow(&self, k: usize) -> SkewPoly {
        let mut acc = SkewPoly::one(self.ext());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

/// A commutation decomposition: leading coefficient on the expected monomial
/// plus a lower-degree tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompResult {
    pub leading: Elem,
    pub tail: SkewPoly,
}

/// Decomposes x^α·r = σ^α(r)·x^α + tail with deg(tail) < |α|.
pub fn scalar_commutation(
    ext: &Arc<ExtensionSpec>,
    alpha: &Monomial,
    r: Elem,
) -> Result<DecompResult, SpecError> {
    let ring = ext.ring();
    if r == ring.zero() {
        return Err(SpecError::ZeroScalar);
    }
    let mut terms = ext.nf_scalar(alpha, r);
    let leading = terms.remove(alpha).unwrap_or_else(|| ring.zero());
    debug_assert_eq!(leading, ext.sigmas().apply_composite(&alpha.0, r));
    debug_assert_ne!(leading, ring.zero());
    let tail = SkewPoly::from_terms(ext, terms);
    debug_assert!(tail.deg().map_or(true, |d| d < alpha.deg()));
    Ok(DecompResult { leading, tail })
}

/// Decomposes x^α·x^β = c·x^{α+β} + tail with c left invertible and
/// deg(tail) < |α+β|.
pub fn monomial_product(
    ext: &Arc<ExtensionSpec>,
    alpha: &Monomial,
    beta: &Monomial,
) -> Result<DecompResult, SpecError> {
    let ring = ext.ring();
    let mut terms = ext.nf_mono(alpha, beta);
    let target = alpha.plus(beta);
    let leading = terms.remove(&target).unwrap_or_else(|| ring.zero());
    if ring.left_inverse(leading).is_none() {
        return Err(SpecError::NotLeftInvertible { c: leading });
    }
    let tail = SkewPoly::from_terms(ext, terms);
    debug_assert!(tail.deg().map_or(true, |d| d < target.deg()));
    Ok(DecompResult { leading, tail })
}
