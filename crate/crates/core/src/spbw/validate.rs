//! Presentation classification and the bounded confluence certificate.
//!
//! A presentation only defines an extension with the standard monomials as a
//! free-module basis if the rewriting system is confluent. That is not
//! checked symbolically; instead multiplication is required to be
//! associative over an exhaustive seed set of low-degree terms. A failure
//! witness means the presentation must be rejected for downstream use.

use super::{monomials_up_to, ExtensionSpec, SkewPoly};
use std::fmt;
use std::sync::Arc;

/// An associativity counterexample: (u·v)·w ≠ u·(v·w).
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ConfluenceWitness {
    pub u: SkewPoly,
    pub v: SkewPoly,
    pub w: SkewPoly,
    pub left_assoc: SkewPoly,
    pub right_assoc: SkewPoly,
}

impl fmt::Display for ConfluenceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "associativity fails on u = {}, v = {}, w = {}: (u*v)*w = {} but u*(v*w) = {}",
            self.u, self.v, self.w, self.left_assoc, self.right_assoc
        )
    }
}

/// Classification flags plus the bounded confluence result.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ExtensionReport {
    /// Every δ_i = 0 and every quadratic relation has no lower terms.
    pub quasi_commutative: bool,
    /// Every σ_i bijective (automatic for validated maps on a finite ring)
    /// and every d coefficient invertible.
    pub bijective: bool,
    /// Every σ_i is the identity.
    pub derivation_type: bool,
    /// Every δ_i = 0.
    pub endomorphism_type: bool,
    pub degree_bound: usize,
    /// Number of seed terms the associativity triples were drawn from.
    pub seed_count: usize,
    pub confluence: Result<(), ConfluenceWitness>,
}

impl ExtensionReport {
    pub fn is_confluent(&self) -> bool {
        self.confluence.is_ok()
    }
}

/// Seed terms r·x^α for r ∈ R nonzero and |α| ≤ max_deg, plus the zero
/// polynomial.
pub(crate) fn seed_terms(ext: &Arc<ExtensionSpec>, max_deg: usize) -> Vec<SkewPoly> {
    let ring = ext.ring().clone();
    let mut seeds = vec![SkewPoly::zero(ext)];
    for alpha in monomials_up_to(ext.n(), max_deg) {
        for r in ring.elements() {
            if r != ring.zero() {
                seeds.push(SkewPoly::term(ext, &alpha, r));
            }
        }
    }
    seeds
}

/// Classifies the presentation and certifies associativity over all triples
/// of seed terms r·x^α with |α| ≤ degree_bound/3, so that every bracketed
/// product stays within degree_bound.
pub fn validate_extension(ext: &Arc<ExtensionSpec>, degree_bound: usize) -> ExtensionReport {
    let ring = ext.ring();
    let no_lower_terms = ext.relations().iter().all(|rel| {
        rel.constant == ring.zero() && rel.linear.iter().all(|&c| c == ring.zero())
    });
    let endomorphism_type = ext.deltas().iter().all(|d| d.is_zero());
    let quasi_commutative = endomorphism_type && no_lower_terms;
    let bijective = ext
        .relations()
        .iter()
        .all(|rel| ring.is_invertible(rel.d));
    let derivation_type = (0..ext.n()).all(|i| ext.sigmas().map(i).is_identity());

    let seeds = seed_terms(ext, degree_bound / 3);
    let mut confluence = Ok(());
    'outer: for u in &seeds {
        for v in &seeds {
            let uv = u.mul(v);
            for w in &seeds {
                let left_assoc = uv.mul(w);
                let right_assoc = u.mul(&v.mul(w));
                if left_assoc != right_assoc {
                    confluence = Err(ConfluenceWitness {
                        u: u.clone(),
                        v: v.clone(),
                        w: w.clone(),
                        left_assoc,
                        right_assoc,
                    });
                    break 'outer;
                }
            }
        }
    }

    ExtensionReport {
        quasi_commutative,
        bijective,
        derivation_type,
        endomorphism_type,
        degree_bound,
        seed_count: seeds.len(),
        confluence,
    }
}

#[cfg(test)]
mod tests {
    use super::super::{fixtures, scalar_commutation, Monomial, QuadRelation};
    use super::*;
    use crate::finring::build;
    use crate::ringmaps::{validate_endomorphism, SigmaDerivation, SigmaFamily};

    #[test]
    fn quantum_plane_classification() {
        let report = validate_extension(&fixtures::quantum_plane_f3(), 6);
        assert!(report.quasi_commutative);
        assert!(report.bijective);
        assert!(report.derivation_type);
        assert!(report.endomorphism_type);
        assert!(report.is_confluent());
        // monomials of degree ≤ 2 in two variables: 6; nonzero scalars: 2
        assert_eq!(report.seed_count, 1 + 2 * 6);
    }

    #[test]
    fn diff_ops_classification() {
        let report = validate_extension(&fixtures::diff_ops_z2t(), 6);
        assert!(report.derivation_type);
        assert!(report.bijective);
        assert!(!report.endomorphism_type);
        assert!(!report.quasi_commutative);
        assert!(report.is_confluent());
    }

    #[test]
    fn frobenius_skew_classification() {
        let report = validate_extension(&fixtures::gf4_frobenius_skew(), 6);
        assert!(report.endomorphism_type);
        assert!(!report.derivation_type);
        assert!(report.bijective);
        assert!(report.quasi_commutative);
        assert!(report.is_confluent());
    }

    #[test]
    fn plain_polynomial_ring_classification() {
        let report = validate_extension(&fixtures::z4_poly(), 6);
        assert!(report.quasi_commutative);
        assert!(report.bijective);
        assert!(report.derivation_type);
        assert!(report.endomorphism_type);
        assert!(report.is_confluent());
    }

    /// Conjugation by u = E12+E21 and by v = I+E12 in M_2(Z_2) do not
    /// commute, so pairing them with the plain relation x2·x1 = x1·x2 makes
    /// x^(1,1)·r ambiguous; the triple check must catch it.
    #[test]
    fn noncommuting_twists_are_rejected_with_witness() {
        let ring = Arc::new(build::matrix(&build::zmod(2), 2).unwrap());
        let conj = |g: usize| {
            let table: Vec<usize> = ring
                .elements()
                .map(|a| ring.mul(ring.mul(g, a), g))
                .collect();
            validate_endomorphism(&ring, table, format!("conj{g}")).unwrap()
        };
        // both elements are involutions, so g⁻¹ = g
        let sigma1 = conj(6);
        let sigma2 = conj(11);
        let sigmas = SigmaFamily::new(&ring, vec![sigma1, sigma2]);
        let deltas = vec![
            SigmaDerivation::zero(&ring, sigmas.map(0)),
            SigmaDerivation::zero(&ring, sigmas.map(1)),
        ];
        let rel = QuadRelation::commuting(&ring, 2);
        let ext = super::super::ExtensionSpec::new("bad twists", &ring, sigmas, deltas, vec![rel])
            .unwrap();

        let report = validate_extension(&ext, 3);
        let witness = report.confluence.unwrap_err();
        assert_eq!(
            witness.left_assoc,
            witness.u.mul(&witness.v).mul(&witness.w)
        );
        assert_eq!(
            witness.right_assoc,
            witness.u.mul(&witness.v.mul(&witness.w))
        );
        assert_ne!(witness.left_assoc, witness.right_assoc);
    }

    #[test]
    fn products_distribute_over_seed_sums() {
        for ext in [fixtures::quantum_plane_f3(), fixtures::diff_ops_z2t()] {
            let seeds = seed_terms(&ext, 1);
            for u in &seeds {
                for v in &seeds {
                    for w in &seeds {
                        assert_eq!(u.add(v).mul(w), u.mul(w).add(&v.mul(w)));
                        assert_eq!(w.mul(&u.add(v)), w.mul(u).add(&w.mul(v)));
                    }
                }
            }
        }
    }

    #[test]
    fn quasi_commutative_monomial_products_have_zero_tail() {
        let ext = fixtures::quantum_plane_f3();
        let monos = monomials_up_to(2, 3);
        for alpha in &monos {
            for beta in &monos {
                let d = super::super::monomial_product(&ext, alpha, beta).unwrap();
                assert!(d.tail.is_zero());
            }
        }
    }

    #[test]
    fn scalar_commutation_recomposes_with_bounded_tail() {
        for ext in [
            fixtures::quantum_plane_f3(),
            fixtures::diff_ops_z2t(),
            fixtures::gf4_frobenius_skew(),
        ] {
            let ring = ext.ring().clone();
            for alpha in monomials_up_to(ext.n(), 3) {
                let xa = SkewPoly::term(&ext, &alpha, ring.one());
                for r in ring.elements() {
                    if r == ring.zero() {
                        continue;
                    }
                    let d = scalar_commutation(&ext, &alpha, r).unwrap();
                    if let Some(t) = d.tail.deg() {
                        assert!(t < alpha.deg());
                    }
                    let recomposed =
                        SkewPoly::term(&ext, &alpha, d.leading).add(&d.tail);
                    assert_eq!(recomposed, xa.mul(&SkewPoly::constant(&ext, r)));
                }
            }
        }
    }

    #[test]
    fn renormalizing_a_product_is_idempotent() {
        let ext = fixtures::diff_ops_z2t();
        let f = SkewPoly::from_pairs(&ext, [(vec![2], 3), (vec![1], 2), (vec![0], 1)]);
        let g = SkewPoly::from_pairs(&ext, [(vec![1], 3), (vec![0], 2)]);
        let p = f.mul(&g);
        let rebuilt = SkewPoly::from_pairs(
            &ext,
            p.terms().map(|(m, c)| (m.0.clone(), c)).collect::<Vec<_>>(),
        );
        assert_eq!(rebuilt, p);
        assert_eq!(p.mul(&SkewPoly::one(&ext)), p);
        assert_eq!(SkewPoly::one(&ext).mul(&p), p);
    }

    #[test]
    fn monomial_enumeration_is_complete_and_sorted() {
        let monos = monomials_up_to(2, 2);
        assert_eq!(monos.len(), 6);
        assert!(monos.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(monos[0], Monomial(vec![0, 0]));
        assert_eq!(monos[5], Monomial(vec![0, 2]));
    }
}
