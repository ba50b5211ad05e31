//! Named map tables for scenario files: identity, zero, Frobenius,
//! coordinate swap and formal derivative.
//!
//! These produce candidate tables only; callers still run them through
//! validation, so a built-in requested on an unsuitable ring fails with a
//! law witness rather than being trusted.

use crate::finring::{Elem, FiniteRing, RingDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuiltinError {
    #[error("built-in map '{builtin}' is not defined on ring {ring}")]
    Unsupported { builtin: &'static str, ring: String },
}

/// a ↦ a.
pub fn identity_table(ring: &FiniteRing) -> Vec<Elem> {
    ring.elements().collect()
}

/// a ↦ 0 (a derivation table, not an endomorphism).
pub fn zero_table(ring: &FiniteRing) -> Vec<Elem> {
    vec![ring.zero(); ring.order()]
}

/// a ↦ a^p with p the ring characteristic.
pub fn frobenius_table(ring: &FiniteRing) -> Result<Vec<Elem>, BuiltinError> {
    let p = ring.characteristic();
    Ok(ring.elements().map(|a| ring.pow(a, p)).collect())
}

/// (a, b) ↦ (b, a) on a product of two identical factors.
pub fn swap_table(ring: &FiniteRing) -> Result<Vec<Elem>, BuiltinError> {
    let unsupported = || BuiltinError::Unsupported {
        builtin: "swap",
        ring: ring.name().to_string(),
    };
    let factors = match ring.descriptor() {
        Some(RingDescriptor::Product { factors }) if factors.len() == 2 => factors,
        _ => return Err(unsupported()),
    };
    if factors[0] != factors[1] {
        return Err(unsupported());
    }
    let o = (ring.order() as f64).sqrt().round() as usize;
    debug_assert_eq!(o * o, ring.order());
    Ok(ring
        .elements()
        .map(|e| {
            let (a, b) = (e % o, e / o);
            b + o * a
        })
        .collect())
}

/// Coefficientwise d/dt on a truncated polynomial ring.
pub fn formal_derivative_table(ring: &FiniteRing) -> Result<Vec<Elem>, BuiltinError> {
    let (p, m) = match ring.descriptor() {
        Some(&RingDescriptor::TruncPoly { p, m }) => (p, m),
        _ => {
            return Err(BuiltinError::Unsupported {
                builtin: "formal_derivative",
                ring: ring.name().to_string(),
            })
        }
    };
    Ok(ring
        .elements()
        .map(|e| {
            // coefficients are base-p digits, low degree first
            let mut coeffs: Vec<usize> = {
                let mut e = e;
                (0..m)
                    .map(|_| {
                        let d = e % p;
                        e /= p;
                        d
                    })
                    .collect()
            };
            for i in 0..m {
                coeffs[i] = if i + 1 < m {
                    ((i + 1) * coeffs[i + 1]) % p
                } else {
                    0
                };
            }
            coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::build;

    #[test]
    fn derivative_of_cubic_truncation() {
        let ring = build::trunc_poly(3, 3);
        let table = formal_derivative_table(&ring).unwrap();
        // d/dt(t^2) = 2t: t^2 has index 9, 2t has index 6
        assert_eq!(table[9], 6);
        // d/dt(1 + 2t + t^2) = 2 + 2t
        let e = 1 + 2 * 3 + 9;
        assert_eq!(table[e], 2 + 2 * 3);
    }

    #[test]
    fn swap_requires_identical_binary_factors() {
        let z2 = build::zmod(2);
        let z4 = build::zmod(4);
        let mixed = build::product(&[&z2, &z4]).unwrap();
        assert!(swap_table(&mixed).is_err());
        assert!(swap_table(&z4).is_err());
    }

    #[test]
    fn frobenius_on_zmod_p_is_identity() {
        let ring = build::zmod(5);
        assert_eq!(frobenius_table(&ring).unwrap(), identity_table(&ring));
    }
}
