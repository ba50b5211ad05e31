//! Compatibility and rigidity of a commutation family against the
//! coefficient ring's zero divisors.
//!
//! Compatibility is checked per generator: ab = 0 ⇔ aσ_i(b) = 0 and
//! ab = 0 ⇒ aδ_i(b) = 0 for every pair. The per-generator form implies the
//! statement for every composite exponent by induction (apply one generator
//! map at a time), and [`check_compat_consequences`] re-verifies the
//! composite-level consequences exhaustively over the finite monoid.

use super::family::{delta_chain, sigma_monoid, SigmaFamily};
use super::SigmaDerivation;
use crate::finring::Elem;
use serde::Serialize;

/// A pair breaking a per-generator compatibility law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatWitness {
    /// Generator index (0-based).
    pub generator: usize,
    pub a: Elem,
    pub b: Elem,
}

/// An element breaking rigidity: a·σ^α(a) = 0 with a ≠ 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RigidWitness {
    pub alpha: Vec<usize>,
    pub a: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatReport {
    pub sigma_compatible: bool,
    pub sigma_witness: Option<CompatWitness>,
    pub delta_compatible: bool,
    pub delta_witness: Option<CompatWitness>,
    /// Both of the above.
    pub sigma_delta_compatible: bool,
    /// a·σ^α(a) = 0 ⇒ a = 0 over every distinct composite, including α = 0
    /// (so rigidity forces a reduced ring).
    pub sigma_rigid: bool,
    pub rigid_witness: Option<RigidWitness>,
}

pub fn check_compatibility(family: &SigmaFamily, deltas: &[SigmaDerivation]) -> CompatReport {
    assert_eq!(family.n(), deltas.len());
    let ring = family.ring();
    let zero = ring.zero();

    let mut sigma_witness = None;
    'sig: for i in 0..family.n() {
        let sigma = family.map(i);
        for a in ring.elements() {
            for b in ring.elements() {
                let plain = ring.mul(a, b) == zero;
                let twisted = ring.mul(a, sigma.apply(b)) == zero;
                if plain != twisted {
                    sigma_witness = Some(CompatWitness { generator: i, a, b });
                    break 'sig;
                }
            }
        }
    }

    let mut delta_witness = None;
    'del: for (i, delta) in deltas.iter().enumerate() {
        for a in ring.elements() {
            for b in ring.elements() {
                if ring.mul(a, b) == zero && ring.mul(a, delta.apply(b)) != zero {
                    delta_witness = Some(CompatWitness { generator: i, a, b });
                    break 'del;
                }
            }
        }
    }

    let mut rigid_witness = None;
    'rig: for (alpha, comp) in sigma_monoid(family) {
        for a in ring.elements() {
            if a != zero && ring.mul(a, comp.apply(a)) == zero {
                rigid_witness = Some(RigidWitness { alpha, a });
                break 'rig;
            }
        }
    }

    CompatReport {
        sigma_compatible: sigma_witness.is_none(),
        delta_compatible: delta_witness.is_none(),
        sigma_delta_compatible: sigma_witness.is_none() && delta_witness.is_none(),
        sigma_witness,
        delta_witness,
        sigma_rigid: rigid_witness.is_none(),
        rigid_witness,
    }
}

/// Which composite-level consequence failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConsequenceFailure {
    /// ab = 0 but aσ^θ(b) ≠ 0 or σ^θ(a)b ≠ 0.
    TwistAnnihilation { theta: Vec<usize>, a: Elem, b: Elem },
    /// σ^β(a)b = 0 but ab ≠ 0.
    Untwist { beta: Vec<usize>, a: Elem, b: Elem },
    /// ab = 0 but σ^θ(a)δ^β(b) ≠ 0 or δ^β(a)σ^θ(b) ≠ 0.
    MixedAnnihilation {
        theta: Vec<usize>,
        beta_table_index: usize,
        a: Elem,
        b: Elem,
    },
}

/// Exhaustively verifies the consequences the per-generator laws promise at
/// the composite level, over every distinct σ^θ and every distinct mixed
/// derivation composite δ_1^{β_1}∘…∘δ_n^{β_n}. Returns the first failure, or
/// None when everything holds.
pub fn check_compat_consequences(
    family: &SigmaFamily,
    deltas: &[SigmaDerivation],
) -> Option<ConsequenceFailure> {
    let ring = family.ring();
    let zero = ring.zero();
    let monoid = sigma_monoid(family);

    // distinct mixed derivation-composite tables (highest index applied
    // first, matching the composite convention)
    let chains: Vec<Vec<Vec<Elem>>> = deltas.iter().map(delta_chain).collect();
    let mut delta_tables: Vec<Vec<Elem>> = Vec::new();
    let mut beta = vec![0usize; chains.len()];
    loop {
        let mut table: Vec<Elem> = ring.elements().collect();
        for i in (0..chains.len()).rev() {
            let step = &chains[i][beta[i]];
            table = table.iter().map(|&v| step[v]).collect();
        }
        if !delta_tables.contains(&table) {
            delta_tables.push(table);
        }
        let mut i = chains.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            beta[i] += 1;
            if beta[i] < chains[i].len() {
                break;
            }
            beta[i] = 0;
        }
        if beta.iter().all(|&v| v == 0) {
            break;
        }
    }

    for a in ring.elements() {
        for b in ring.elements() {
            let plain_zero = ring.mul(a, b) == zero;
            for (theta, comp) in &monoid {
                if plain_zero {
                    if ring.mul(a, comp.apply(b)) != zero || ring.mul(comp.apply(a), b) != zero {
                        return Some(ConsequenceFailure::TwistAnnihilation {
                            theta: theta.clone(),
                            a,
                            b,
                        });
                    }
                } else if ring.mul(comp.apply(a), b) == zero {
                    return Some(ConsequenceFailure::Untwist {
                        beta: theta.clone(),
                        a,
                        b,
                    });
                }
            }
            if plain_zero {
                for (theta, comp) in &monoid {
                    for (bi, dt) in delta_tables.iter().enumerate() {
                        if ring.mul(comp.apply(a), dt[b]) != zero
                            || ring.mul(dt[a], comp.apply(b)) != zero
                        {
                            return Some(ConsequenceFailure::MixedAnnihilation {
                                theta: theta.clone(),
                                beta_table_index: bi,
                                a,
                                b,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::super::{
        formal_derivative_table, frobenius_table, swap_table, validate_endomorphism,
        validate_sigma_derivation, RingMap,
    };
    use super::*;
    use crate::finring::{build, nil_structure, FiniteRing};
    use std::sync::Arc;

    fn id_family(ring: &Arc<FiniteRing>, n: usize) -> (SigmaFamily, Vec<SigmaDerivation>) {
        let maps = (0..n).map(|_| RingMap::identity(ring)).collect();
        let family = SigmaFamily::new(ring, maps);
        let deltas = (0..n)
            .map(|i| SigmaDerivation::zero(ring, family.map(i)))
            .collect();
        (family, deltas)
    }

    #[test]
    fn gf4_frobenius_is_compatible_and_rigid() {
        let ring = Arc::new(build::gf(2, 2).unwrap());
        let frob =
            validate_endomorphism(&ring, frobenius_table(&ring).unwrap(), "frobenius").unwrap();
        let family = SigmaFamily::new(&ring, vec![frob]);
        let deltas = vec![SigmaDerivation::zero(&ring, family.map(0))];
        let rep = check_compatibility(&family, &deltas);
        assert!(rep.sigma_delta_compatible);
        assert!(rep.sigma_rigid);
        assert_eq!(check_compat_consequences(&family, &deltas), None);
    }

    #[test]
    fn swap_on_z2xz2_is_incompatible() {
        let z2 = build::zmod(2);
        let ring = Arc::new(build::product(&[&z2, &z2]).unwrap());
        let swap = validate_endomorphism(&ring, swap_table(&ring).unwrap(), "swap").unwrap();
        let family = SigmaFamily::new(&ring, vec![swap.clone()]);
        let deltas = vec![SigmaDerivation::zero(&ring, family.map(0))];
        let rep = check_compatibility(&family, &deltas);
        assert!(!rep.sigma_compatible);
        assert!(!rep.sigma_delta_compatible);
        assert!(!rep.sigma_rigid);
        // the reported witness actually violates the law
        let w = rep.sigma_witness.unwrap();
        assert_ne!(
            ring.mul(w.a, w.b) == ring.zero(),
            ring.mul(w.a, swap.apply(w.b)) == ring.zero()
        );
        // so does the pair (1,0), (0,1): product 0, twisted product (1,0)
        assert_eq!(ring.mul(1, 2), 0);
        assert_eq!(ring.mul(1, swap.apply(2)), 1);
    }

    #[test]
    fn formal_derivative_breaks_delta_compatibility() {
        let ring = Arc::new(build::trunc_poly(2, 2));
        let id = RingMap::identity(&ring);
        let ddt = validate_sigma_derivation(
            &ring,
            &id,
            formal_derivative_table(&ring).unwrap(),
            "d/dt",
        )
        .unwrap();
        let family = SigmaFamily::new(&ring, vec![id]);
        let rep = check_compatibility(&family, &[ddt]);
        assert!(rep.sigma_compatible);
        assert!(!rep.delta_compatible);
        // t·t = 0 but t·delta(t) = t
        assert_eq!(
            rep.delta_witness,
            Some(CompatWitness { generator: 0, a: 2, b: 2 })
        );
    }

    #[test]
    fn identity_on_non_reduced_ring_is_compatible_but_not_rigid() {
        let ring = Arc::new(build::trunc_poly(2, 2));
        let (family, deltas) = id_family(&ring, 1);
        let rep = check_compatibility(&family, &deltas);
        assert!(rep.sigma_delta_compatible);
        assert!(!rep.sigma_rigid);
        assert_eq!(rep.rigid_witness, Some(RigidWitness { alpha: vec![0], a: 2 }));
    }

    #[test]
    fn rigidity_matches_compatibility_on_reduced_rings() {
        for base in [build::zmod(6), build::gf(3, 2).unwrap()] {
            let ring = Arc::new(base);
            assert!(nil_structure(&ring, 256).is_reduced);
            let (family, deltas) = id_family(&ring, 2);
            let rep = check_compatibility(&family, &deltas);
            assert_eq!(rep.sigma_delta_compatible, rep.sigma_rigid, "{}", ring.name());
            assert!(rep.sigma_rigid);
        }
    }

    #[test]
    fn rigid_implies_compatible_and_reduced_on_sample() {
        let rings = [
            Arc::new(build::gf(2, 2).unwrap()),
            Arc::new(build::zmod(6)),
            Arc::new(build::zmod(4)),
            Arc::new(build::trunc_poly(2, 2)),
        ];
        for ring in rings {
            let (family, deltas) = id_family(&ring, 1);
            let rep = check_compatibility(&family, &deltas);
            if rep.sigma_rigid {
                assert!(rep.sigma_delta_compatible, "{}", ring.name());
                assert!(nil_structure(&ring, 256).is_reduced, "{}", ring.name());
            }
        }
    }

    #[test]
    fn consequences_hold_where_compatibility_holds() {
        let z2 = build::zmod(2);
        let rings = [
            Arc::new(build::zmod(4)),
            Arc::new(build::zmod(6)),
            Arc::new(build::trunc_poly(2, 2)),
            Arc::new(build::product(&[&z2, &z2]).unwrap()),
        ];
        for ring in rings {
            let (family, deltas) = id_family(&ring, 2);
            let rep = check_compatibility(&family, &deltas);
            assert!(rep.sigma_delta_compatible);
            assert_eq!(check_compat_consequences(&family, &deltas), None, "{}", ring.name());
        }
    }
}
