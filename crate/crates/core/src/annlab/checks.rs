//! Exhaustive and seeded-random checkers for the coefficient-wise
//! annihilation conditions: plain products (fg = 0 forces a·b = 0 per
//! coefficient pair) and the middle-factor variant (f·h·g = 0 for all
//! bounded h forces a·r·b = 0 for every ring element r).

use super::{advance_odometer, middle_terms, Ambient, AnnError, PAIR_CAP};
use crate::finring::Elem;
use crate::spbw::{ExtensionSpec, Monomial, SkewPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum CheckMode {
    Exhaustive,
    Random { seed: u64, trials: u64 },
}

/// A coefficient pair that survives although the polynomial-level product
/// vanishes. `middle` is the interposed ring element for the middle-factor
/// form and None for the plain form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCounterexample {
    pub f: SkewPoly,
    pub g: SkewPoly,
    pub f_monomial: Monomial,
    pub g_monomial: Monomial,
    pub middle: Option<Elem>,
    pub product: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sa1Report {
    pub gen_degree: usize,
    pub mode: CheckMode,
    pub pairs_checked: u64,
    pub vanishing_products: u64,
    pub holds_at_bound: bool,
    pub counterexample: Option<PairCounterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QaReport {
    pub gen_degree: usize,
    pub middle_degree: usize,
    pub mode: CheckMode,
    pub pairs_checked: u64,
    pub annihilating_pairs: u64,
    pub holds_at_bound: bool,
    pub counterexample: Option<PairCounterexample>,
}

fn coefficient_violation(
    ext: &Arc<ExtensionSpec>,
    f: &SkewPoly,
    g: &SkewPoly,
) -> Option<PairCounterexample> {
    let ring = ext.ring();
    for (alpha, a) in f.terms() {
        for (beta, b) in g.terms() {
            let product = ring.mul(a, b);
            if product != ring.zero() {
                return Some(PairCounterexample {
                    f: f.clone(),
                    g: g.clone(),
                    f_monomial: alpha.clone(),
                    g_monomial: beta.clone(),
                    middle: None,
                    product,
                });
            }
        }
    }
    None
}

fn middle_violation(
    ext: &Arc<ExtensionSpec>,
    f: &SkewPoly,
    g: &SkewPoly,
) -> Option<PairCounterexample> {
    let ring = ext.ring();
    for (alpha, a) in f.terms() {
        for (beta, b) in g.terms() {
            for r in ring.elements() {
                let product = ring.mul(ring.mul(a, r), b);
                if product != ring.zero() {
                    return Some(PairCounterexample {
                        f: f.clone(),
                        g: g.clone(),
                        f_monomial: alpha.clone(),
                        g_monomial: beta.clone(),
                        middle: Some(r),
                        product,
                    });
                }
            }
        }
    }
    None
}

fn random_poly(
    ext: &Arc<ExtensionSpec>,
    amb: &Ambient,
    rng: &mut ChaCha8Rng,
) -> SkewPoly {
    let coords: Vec<i64> = amb.moduli.iter().map(|&m| rng.gen_range(0..m)).collect();
    amb.poly(ext, &coords)
}

fn exhaustive_space(amb: &Ambient) -> Result<u128, AnnError> {
    let per_poly = amb.size();
    let space = per_poly.saturating_mul(per_poly);
    if space > PAIR_CAP {
        Err(AnnError::ExhaustiveCapExceeded {
            space,
            cap: PAIR_CAP,
        })
    } else {
        Ok(space)
    }
}

/// Scans pairs (f, g) of degree ≤ gen_degree; whenever fg = 0, every
/// coefficient product a·b must vanish.
pub fn check_sa1(
    ext: &Arc<ExtensionSpec>,
    gen_degree: usize,
    mode: CheckMode,
) -> Result<Sa1Report, AnnError> {
    let amb = Ambient::new(ext, gen_degree);
    let mut pairs_checked = 0u64;
    let mut vanishing = 0u64;
    let mut counterexample = None;

    let mut consider = |f: &SkewPoly, g: &SkewPoly| -> bool {
        pairs_checked += 1;
        if !f.mul(g).is_zero() {
            return true;
        }
        vanishing += 1;
        match coefficient_violation(ext, f, g) {
            Some(ce) => {
                counterexample = Some(ce);
                false
            }
            None => true,
        }
    };

    match mode {
        CheckMode::Exhaustive => {
            exhaustive_space(&amb)?;
            let mut fc = vec![0i64; amb.moduli.len()];
            'outer: loop {
                let f = amb.poly(ext, &fc);
                let mut gc = vec![0i64; amb.moduli.len()];
                loop {
                    let g = amb.poly(ext, &gc);
                    if !consider(&f, &g) {
                        break 'outer;
                    }
                    if !advance_odometer(&mut gc, &amb.moduli) {
                        break;
                    }
                }
                if !advance_odometer(&mut fc, &amb.moduli) {
                    break;
                }
            }
        }
        CheckMode::Random { seed, trials } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let f = random_poly(ext, &amb, &mut rng);
                let g = random_poly(ext, &amb, &mut rng);
                if !consider(&f, &g) {
                    break;
                }
            }
        }
    }

    Ok(Sa1Report {
        gen_degree,
        mode,
        pairs_checked,
        vanishing_products: vanishing,
        holds_at_bound: counterexample.is_none(),
        counterexample,
    })
}

/// Scans pairs (f, g) of degree ≤ gen_degree; whenever f·h·g = 0 for every
/// h of degree ≤ middle_degree (checked on the additive generators of the
/// middle space, which span all such h), every product a·r·b over ring
/// elements r must vanish.
pub fn check_quasi_armendariz(
    ext: &Arc<ExtensionSpec>,
    gen_degree: usize,
    middle_degree: usize,
    mode: CheckMode,
) -> Result<QaReport, AnnError> {
    let amb = Ambient::new(ext, gen_degree);
    let middles = middle_terms(ext, middle_degree);
    let mut pairs_checked = 0u64;
    let mut annihilating = 0u64;
    let mut counterexample = None;

    let mut consider = |f: &SkewPoly, g: &SkewPoly| -> bool {
        pairs_checked += 1;
        if !middles.iter().all(|h| f.mul(h).mul(g).is_zero()) {
            return true;
        }
        annihilating += 1;
        match middle_violation(ext, f, g) {
            Some(ce) => {
                counterexample = Some(ce);
                false
            }
            None => true,
        }
    };

    match mode {
        CheckMode::Exhaustive => {
            exhaustive_space(&amb)?;
            let mut fc = vec![0i64; amb.moduli.len()];
            'outer: loop {
                let f = amb.poly(ext, &fc);
                let mut gc = vec![0i64; amb.moduli.len()];
                loop {
                    let g = amb.poly(ext, &gc);
                    if !consider(&f, &g) {
                        break 'outer;
                    }
                    if !advance_odometer(&mut gc, &amb.moduli) {
                        break;
                    }
                }
                if !advance_odometer(&mut fc, &amb.moduli) {
                    break;
                }
            }
        }
        CheckMode::Random { seed, trials } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let f = random_poly(ext, &amb, &mut rng);
                let g = random_poly(ext, &amb, &mut rng);
                if !consider(&f, &g) {
                    break;
                }
            }
        }
    }

    Ok(QaReport {
        gen_degree,
        middle_degree,
        mode,
        pairs_checked,
        annihilating_pairs: annihilating,
        holds_at_bound: counterexample.is_none(),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures;
    use super::*;

    #[test]
    fn z4_coefficient_condition_holds_exhaustively() {
        let ext = fixtures::z4_poly();
        let report = check_sa1(&ext, 2, CheckMode::Exhaustive).unwrap();
        assert!(report.holds_at_bound);
        assert_eq!(report.pairs_checked, 4096);
        // zero pairs: 64 with f = 0, 63 more with g = 0, and 7·7 pairs of
        // nonzero polynomials with all coefficients in {0, 2}
        assert_eq!(report.vanishing_products, 176);
    }

    #[test]
    fn skew_field_extension_is_a_domain_at_bound() {
        let ext = fixtures::gf4_frobenius_skew();
        let report = check_sa1(&ext, 2, CheckMode::Exhaustive).unwrap();
        assert!(report.holds_at_bound);
        assert_eq!(report.pairs_checked, 4096);
        // only pairs with a zero factor vanish: 64 + 64 - 1
        assert_eq!(report.vanishing_products, 127);
    }

    #[test]
    fn matrix_coefficients_break_the_condition() {
        let ext = fixtures::m2z2_poly();
        let report = check_sa1(&ext, 1, CheckMode::Exhaustive).unwrap();
        assert!(!report.holds_at_bound);
        let ce = report.counterexample.unwrap();
        let ring = ext.ring();
        assert!(ce.f.mul(&ce.g).is_zero());
        assert_eq!(
            ring.mul(ce.f.coeff(&ce.f_monomial), ce.g.coeff(&ce.g_monomial)),
            ce.product
        );
        assert_ne!(ce.product, ring.zero());
    }

    #[test]
    fn exhaustive_cap_refuses_oversized_scans() {
        let ext = fixtures::m2z2_poly();
        let err = check_sa1(&ext, 3, CheckMode::Exhaustive).unwrap_err();
        assert!(matches!(err, AnnError::ExhaustiveCapExceeded { .. }));
    }

    #[test]
    fn random_mode_is_deterministic_per_seed() {
        let ext = fixtures::z4_poly();
        let mode = CheckMode::Random {
            seed: 11,
            trials: 300,
        };
        let a = check_sa1(&ext, 2, mode).unwrap();
        let b = check_sa1(&ext, 2, mode).unwrap();
        assert_eq!(a, b);
        assert!(a.holds_at_bound);
        assert_eq!(a.pairs_checked, 300);
    }

    #[test]
    fn z4_middle_factor_condition_holds() {
        let ext = fixtures::z4_poly();
        let report = check_quasi_armendariz(&ext, 1, 1, CheckMode::Exhaustive).unwrap();
        assert!(report.holds_at_bound);
        assert_eq!(report.pairs_checked, 256);
        // 16 pairs with f = 0, 15 more with g = 0, 3·3 even nonzero pairs
        assert_eq!(report.annihilating_pairs, 40);
    }

    #[test]
    fn reduced_coefficients_pass_the_middle_factor_condition() {
        let ring = Arc::new(crate::finring::build::zmod(6));
        let id = crate::ringmaps::RingMap::identity(&ring);
        let sigmas = crate::ringmaps::SigmaFamily::new(&ring, vec![id]);
        let deltas = vec![crate::ringmaps::SigmaDerivation::zero(&ring, sigmas.map(0))];
        let ext = ExtensionSpec::new("Z_6[x]", &ring, sigmas, deltas, vec![]).unwrap();
        let report = check_quasi_armendariz(&ext, 1, 1, CheckMode::Exhaustive).unwrap();
        assert!(report.holds_at_bound);
    }

    #[test]
    fn qa_random_mode_is_deterministic_per_seed() {
        let ext = fixtures::diff_ops_z2t();
        let mode = CheckMode::Random {
            seed: 3,
            trials: 200,
        };
        let a = check_quasi_armendariz(&ext, 1, 1, mode).unwrap();
        let b = check_quasi_armendariz(&ext, 1, 1, mode).unwrap();
        assert_eq!(a, b);
    }
}
