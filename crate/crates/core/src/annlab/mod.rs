//! Degree-bounded annihilators in a skew polynomial extension, plus the
//! annihilator-driven condition checkers.
//!
//! Polynomials of degree ≤ T form a finite abelian group: one additive
//! cyclic summand of R per (monomial, decomposition generator) slot. Every
//! condition of the form f·h·g = 0 is additive in g, so a bounded
//! annihilator is the kernel of finitely many congruence rows over that
//! group, and the kernel keeps a canonical lattice basis that makes subgroup
//! equality a matrix comparison.
//!
//! Coordinate convention: slot index = monomial position × summand count +
//! summand index, monomials ascending, summand fastest.

mod ac;
mod checks;

pub use ac::{ac_verify_witness, ac_witness_search, AcComparison, AcSearchReport, AcStatus,
             AcStrategy};
pub use checks::{check_quasi_armendariz, check_sa1, CheckMode, PairCounterexample, Sa1Report,
                 QaReport};

use crate::spbw::{monomials_up_to, ExtensionSpec, Monomial, SkewPoly};
use crate::zlin::{self, CongruenceKernel};
use crate::Side;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Search-space cap for the enumeration oracle and exhaustive witness
/// search.
pub const ENUMERATION_CAP: u128 = 1 << 20;

/// Search-space cap for exhaustive condition checking over pairs.
pub const PAIR_CAP: u128 = 1 << 24;

/// Degree bounds for the bounded annihilator semantics: generators f of
/// degree ≤ D, middle factors h of degree ≤ E, annihilator candidates g of
/// degree ≤ T, witnesses c of degree ≤ C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct DegreeBounds {
    pub gen_degree: usize,
    pub middle_degree: usize,
    pub target_degree: usize,
    pub witness_degree: usize,
}

impl Default for DegreeBounds {
    fn default() -> Self {
        DegreeBounds {
            gen_degree: 1,
            middle_degree: 2,
            target_degree: 2,
            witness_degree: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnnError {
    #[error("generator degree {deg} exceeds the bound D = {bound}")]
    GeneratorDegree { deg: usize, bound: usize },
    #[error("witness degree {deg} exceeds the bound C = {bound}")]
    WitnessDegree { deg: usize, bound: usize },
    #[error("enumeration space of {space} states exceeds the cap {cap}; oracle unavailable")]
    OracleUnavailable { space: u128, cap: u128 },
    #[error("exhaustive space of {space} states exceeds the cap {cap}")]
    ExhaustiveCapExceeded { space: u128, cap: u128 },
    #[error("the generator list is empty")]
    EmptyGenerators,
}

/// Advances a mixed-radix counter, first coordinate fastest; false on wrap.
pub(crate) fn advance_odometer(coords: &mut [i64], moduli: &[i64]) -> bool {
    for (c, &m) in coords.iter_mut().zip(moduli) {
        *c += 1;
        if *c < m {
            return true;
        }
        *c = 0;
    }
    false
}

/// The ambient coordinate system for polynomials of degree ≤ max_deg.
pub(crate) struct Ambient {
    pub monomials: Vec<Monomial>,
    pub moduli: Vec<i64>,
    summands: usize,
}

impl Ambient {
    pub fn new(ext: &Arc<ExtensionSpec>, max_deg: usize) -> Ambient {
        let decomp = ext.ring().decomposition();
        let monomials = monomials_up_to(ext.n(), max_deg);
        let mut moduli = Vec::with_capacity(monomials.len() * decomp.len());
        for _ in &monomials {
            for &(_, order) in decomp {
                moduli.push(order as i64);
            }
        }
        Ambient {
            monomials,
            moduli,
            summands: decomp.len(),
        }
    }

    pub fn size(&self) -> u128 {
        self.moduli.iter().map(|&m| m as u128).product()
    }

    /// One r·x^α term per coordinate slot, r a decomposition generator.
    pub fn unit_polys(&self, ext: &Arc<ExtensionSpec>) -> Vec<SkewPoly> {
        let decomp = ext.ring().decomposition().to_vec();
        self.monomials
            .iter()
            .flat_map(|alpha| {
                decomp
                    .iter()
                    .map(|&(gen, _)| SkewPoly::term(ext, alpha, gen))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    pub fn poly(&self, ext: &Arc<ExtensionSpec>, coords: &[i64]) -> SkewPoly {
        debug_assert_eq!(coords.len(), self.moduli.len());
        let ring = ext.ring().clone();
        let s = self.summands;
        let mut pairs = Vec::new();
        for (p, alpha) in self.monomials.iter().enumerate() {
            let cs: Vec<usize> = (0..s)
                .map(|j| {
                    let m = self.moduli[p * s + j];
                    coords[p * s + j].rem_euclid(m) as usize
                })
                .collect();
            pairs.push((alpha.0.clone(), ring.from_coords(&cs)));
        }
        SkewPoly::from_pairs(ext, pairs)
    }

    /// None when the polynomial has support outside the ambient monomials.
    pub fn coords(&self, ext: &Arc<ExtensionSpec>, g: &SkewPoly) -> Option<Vec<i64>> {
        let ring = ext.ring().clone();
        let s = self.summands;
        let mut out = vec![0i64; self.moduli.len()];
        for (alpha, c) in g.terms() {
            let p = self.monomials.binary_search(alpha).ok()?;
            let cs = ring.decomp_coords(c).expect("validated decomposition");
            for (j, &v) in cs.iter().enumerate() {
                out[p * s + j] = v as i64;
            }
        }
        Some(out)
    }
}

/// Canonical basis of the bounded annihilator subgroup
/// {g : deg g ≤ T, f·h·g = 0 for all f ∈ F and all h with deg h ≤ E}
/// (mirrored to g·h·f for the left side).
#[derive(Debug, Clone)]
pub struct AnnBasis {
    ext: Arc<ExtensionSpec>,
    side: Side,
    bounds: DegreeBounds,
    monomials: Vec<Monomial>,
    moduli: Vec<i64>,
    basis: Vec<Vec<i64>>,
}

impl PartialEq for AnnBasis {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side && self.moduli == other.moduli && self.basis == other.basis
    }
}
impl Eq for AnnBasis {}

impl AnnBasis {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn bounds(&self) -> &DegreeBounds {
        &self.bounds
    }

    pub fn ambient_size(&self) -> u128 {
        self.moduli.iter().map(|&m| m as u128).product()
    }

    pub fn subgroup_size(&self) -> u128 {
        zlin::subgroup_size(&self.basis, &self.moduli)
    }

    pub fn is_zero_subgroup(&self) -> bool {
        self.subgroup_size() == 1
    }

    pub fn is_full(&self) -> bool {
        self.subgroup_size() == self.ambient_size()
    }

    fn ambient(&self) -> Ambient {
        Ambient {
            monomials: self.monomials.clone(),
            moduli: self.moduli.clone(),
            summands: self.ext.ring().decomposition().len(),
        }
    }

    pub fn contains(&self, g: &SkewPoly) -> bool {
        match self.ambient().coords(&self.ext, g) {
            Some(coords) => zlin::lattice_contains(&self.basis, &coords),
            None => false,
        }
    }

    /// Same subgroup of the same ambient group; canonical bases make this a
    /// plain comparison.
    pub fn same_subgroup(&self, other: &AnnBasis) -> bool {
        debug_assert_eq!(self.moduli, other.moduli);
        self.basis == other.basis
    }

    /// Nonzero generators as polynomials.
    pub fn generator_polys(&self) -> Vec<SkewPoly> {
        let amb = self.ambient();
        self.basis
            .iter()
            .map(|col| amb.poly(&self.ext, col))
            .filter(|g| !g.is_zero())
            .collect()
    }

    /// Every member, in canonical coordinate order. Caller must keep the
    /// subgroup small; guarded by the enumeration cap.
    pub fn elements(&self) -> Vec<SkewPoly> {
        assert!(self.subgroup_size() <= ENUMERATION_CAP);
        let amb = self.ambient();
        zlin::coset_reps(&self.basis, &self.moduli)
            .iter()
            .map(|coords| amb.poly(&self.ext, coords))
            .collect()
    }

    pub(crate) fn basis_columns(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub(crate) fn raw_contains(&self, coords: &[i64]) -> bool {
        zlin::lattice_contains(&self.basis, coords)
    }

    pub(crate) fn column_poly(&self, col: &[i64]) -> SkewPoly {
        self.ambient().poly(&self.ext, col)
    }
}

/// Middle factors: one generator·x^γ term per additive generator of R and
/// each |γ| ≤ middle_deg. By additivity of f·h·g in h these span the same
/// constraints as all h of degree ≤ middle_deg.
fn middle_terms(ext: &Arc<ExtensionSpec>, middle_deg: usize) -> Vec<SkewPoly> {
    let decomp = ext.ring().decomposition().to_vec();
    monomials_up_to(ext.n(), middle_deg)
        .iter()
        .flat_map(|gamma| {
            decomp
                .iter()
                .map(|&(gen, _)| SkewPoly::term(ext, gamma, gen))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Kernel computation without the generator-degree precondition; the public
/// entry points layer their own degree checks on top.
pub(crate) fn annihilator_core(
    ext: &Arc<ExtensionSpec>,
    side: Side,
    gens: &[SkewPoly],
    bounds: &DegreeBounds,
) -> AnnBasis {
    let ring = ext.ring().clone();
    let amb = Ambient::new(ext, bounds.target_degree);
    let units = amb.unit_polys(ext);
    let summands = ring.decomposition().len();
    let mut kernel = CongruenceKernel::all(&amb.moduli);

    for f in gens {
        if f.is_zero() {
            continue;
        }
        for h in middle_terms(ext, bounds.middle_degree) {
            let images: Vec<SkewPoly> = match side {
                Side::Right => {
                    let fh = f.mul(&h);
                    units.iter().map(|u| fh.mul(u)).collect()
                }
                Side::Left => {
                    let hf = h.mul(f);
                    units.iter().map(|u| u.mul(&hf)).collect()
                }
            };
            let mut out_monos = std::collections::BTreeSet::new();
            for p in &images {
                for (m, _) in p.terms() {
                    out_monos.insert(m.clone());
                }
            }
            for mu in &out_monos {
                let coord_rows: Vec<Vec<usize>> = images
                    .iter()
                    .map(|p| ring.decomp_coords(p.coeff(mu)).expect("validated decomposition"))
                    .collect();
                for t in 0..summands {
                    let row: Vec<i64> =
                        coord_rows.iter().map(|cs| cs[t] as i64).collect();
                    if row.iter().any(|&v| v != 0) {
                        let modulus = ring.decomposition()[t].1 as i64;
                        kernel.add_constraint(&row, modulus);
                    }
                }
            }
        }
    }

    AnnBasis {
        ext: Arc::clone(ext),
        side,
        bounds: *bounds,
        monomials: amb.monomials,
        moduli: amb.moduli,
        basis: kernel.basis().to_vec(),
    }
}

fn check_gen_degrees(gens: &[SkewPoly], bound: usize) -> Result<(), AnnError> {
    for f in gens {
        if let Some(d) = f.deg() {
            if d > bound {
                return Err(AnnError::GeneratorDegree { deg: d, bound });
            }
        }
    }
    Ok(())
}

/// Bounded right annihilator of the right ideal generated by `gens`.
pub fn bounded_right_annihilator(
    ext: &Arc<ExtensionSpec>,
    gens: &[SkewPoly],
    bounds: &DegreeBounds,
) -> Result<AnnBasis, AnnError> {
    bounded_annihilator(ext, Side::Right, gens, bounds)
}

/// Bounded left annihilator of the left ideal generated by `gens`.
pub fn bounded_left_annihilator(
    ext: &Arc<ExtensionSpec>,
    gens: &[SkewPoly],
    bounds: &DegreeBounds,
) -> Result<AnnBasis, AnnError> {
    bounded_annihilator(ext, Side::Left, gens, bounds)
}

pub fn bounded_annihilator(
    ext: &Arc<ExtensionSpec>,
    side: Side,
    gens: &[SkewPoly],
    bounds: &DegreeBounds,
) -> Result<AnnBasis, AnnError> {
    check_gen_degrees(gens, bounds.gen_degree)?;
    Ok(annihilator_core(ext, side, gens, bounds))
}

/// Brute-force annihilator: literally enumerates every g of degree ≤ T and
/// every monomial-scalar middle factor. Independent of the kernel path.
pub fn annihilator_oracle_enum(
    ext: &Arc<ExtensionSpec>,
    side: Side,
    gens: &[SkewPoly],
    bounds: &DegreeBounds,
) -> Result<Vec<SkewPoly>, AnnError> {
    check_gen_degrees(gens, bounds.gen_degree)?;
    let ring = ext.ring().clone();
    let amb = Ambient::new(ext, bounds.target_degree);
    let space = amb.size();
    if space > ENUMERATION_CAP {
        return Err(AnnError::OracleUnavailable {
            space,
            cap: ENUMERATION_CAP,
        });
    }

    let mut middles = Vec::new();
    for gamma in monomials_up_to(ext.n(), bounds.middle_degree) {
        for r in ring.elements() {
            if r != ring.zero() {
                middles.push(SkewPoly::term(ext, &gamma, r));
            }
        }
    }
    // one-sided products with g factored out, precomputed per (f, h)
    let mut outer = Vec::new();
    for f in gens {
        if f.is_zero() {
            continue;
        }
        for h in &middles {
            outer.push(match side {
                Side::Right => f.mul(h),
                Side::Left => h.mul(f),
            });
        }
    }

    let mut found = Vec::new();
    let mut coords = vec![0i64; amb.moduli.len()];
    loop {
        let g = amb.poly(ext, &coords);
        let ok = outer.iter().all(|fh| match side {
            Side::Right => fh.mul(&g).is_zero(),
            Side::Left => g.mul(fh).is_zero(),
        });
        if ok {
            found.push(g);
        }
        if !advance_odometer(&mut coords, &amb.moduli) {
            return Ok(found);
        }
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures;
    use super::*;
    use crate::zlin::lattice_intersect;

    fn all_polys_up_to(ext: &Arc<ExtensionSpec>, deg: usize) -> Vec<SkewPoly> {
        let amb = Ambient::new(ext, deg);
        assert!(amb.size() <= 1 << 16);
        let mut out = Vec::new();
        let mut coords = vec![0i64; amb.moduli.len()];
        loop {
            out.push(amb.poly(ext, &coords));
            if !advance_odometer(&mut coords, &amb.moduli) {
                return out;
            }
        }
    }

    #[test]
    fn scaling_by_two_pins_coefficients_to_the_even_part() {
        let ext = fixtures::z4_poly();
        let bounds = DegreeBounds {
            gen_degree: 1,
            middle_degree: 1,
            target_degree: 2,
            witness_degree: 2,
        };
        let f = SkewPoly::constant(&ext, 2);
        let ann = bounded_right_annihilator(&ext, &[f], &bounds).unwrap();
        // three monomial slots, each restricted to {0, 2}
        assert_eq!(ann.subgroup_size(), 8);
        assert!(ann.contains(&SkewPoly::from_pairs(&ext, [(vec![2], 2), (vec![1], 2), (vec![0], 2)])));
        assert!(!ann.contains(&SkewPoly::one(&ext)));
        assert!(!ann.contains(&SkewPoly::from_pairs(&ext, [(vec![1], 1)])));
        for g in ann.elements() {
            assert!(g.terms().all(|(_, c)| c == 0 || c == 2));
        }
    }

    #[test]
    fn zero_or_empty_generators_leave_the_full_space() {
        let ext = fixtures::z4_poly();
        let bounds = DegreeBounds::default();
        let zero = bounded_right_annihilator(&ext, &[SkewPoly::zero(&ext)], &bounds).unwrap();
        assert!(zero.is_full());
        assert_eq!(zero.subgroup_size(), 64);
        let empty = bounded_right_annihilator(&ext, &[], &bounds).unwrap();
        assert!(empty.same_subgroup(&zero));
    }

    #[test]
    fn unit_generator_annihilates_nothing() {
        let ext = fixtures::z4_poly();
        let bounds = DegreeBounds::default();
        let ann =
            bounded_right_annihilator(&ext, &[SkewPoly::one(&ext)], &bounds).unwrap();
        assert!(ann.is_zero_subgroup());
    }

    #[test]
    fn skew_variable_over_a_field_has_zero_annihilator() {
        let ext = fixtures::gf4_frobenius_skew();
        let bounds = DegreeBounds::default();
        let x = SkewPoly::var(&ext, 0);
        let ann = bounded_right_annihilator(&ext, &[x], &bounds).unwrap();
        assert!(ann.is_zero_subgroup());
    }

    #[test]
    fn field_annihilators_vanish_for_every_nonzero_generator() {
        let ext = fixtures::gf4_frobenius_skew();
        let bounds = DegreeBounds::default();
        for f in all_polys_up_to(&ext, 1) {
            let ann = bounded_annihilator(&ext, Side::Right, &[f.clone()], &bounds).unwrap();
            if f.is_zero() {
                assert!(ann.is_full());
            } else {
                assert!(ann.is_zero_subgroup(), "nonzero f = {f} must have zero annihilator");
            }
            let ann = bounded_annihilator(&ext, Side::Left, &[f.clone()], &bounds).unwrap();
            if f.is_zero() {
                assert!(ann.is_full());
            } else {
                assert!(ann.is_zero_subgroup());
            }
        }
    }

    #[test]
    fn kernel_matches_enumeration_oracle_on_singletons() {
        let bounds = DegreeBounds {
            gen_degree: 1,
            middle_degree: 2,
            target_degree: 2,
            witness_degree: 2,
        };
        for ext in [fixtures::z4_poly(), fixtures::diff_ops_z2t()] {
            for side in [Side::Right, Side::Left] {
                for f in all_polys_up_to(&ext, 1) {
                    let ann = bounded_annihilator(&ext, side, &[f.clone()], &bounds).unwrap();
                    let oracle =
                        annihilator_oracle_enum(&ext, side, &[f.clone()], &bounds).unwrap();
                    assert_eq!(
                        ann.subgroup_size(),
                        oracle.len() as u128,
                        "size mismatch for {side} annihilator of {f} over {}",
                        ext.name()
                    );
                    for g in &oracle {
                        assert!(ann.contains(g));
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_matches_enumeration_oracle_on_a_pair_sample() {
        let bounds = DegreeBounds::default();
        let ext = fixtures::diff_ops_z2t();
        let pool = all_polys_up_to(&ext, 1);
        // a fixed stride sample keeps the pair count modest
        for (i, f1) in pool.iter().enumerate().step_by(3) {
            for f2 in pool.iter().skip(i).step_by(5) {
                let gens = vec![f1.clone(), f2.clone()];
                let ann = bounded_annihilator(&ext, Side::Right, &gens, &bounds).unwrap();
                let oracle = annihilator_oracle_enum(&ext, Side::Right, &gens, &bounds).unwrap();
                assert_eq!(ann.subgroup_size(), oracle.len() as u128);
                for g in &oracle {
                    assert!(ann.contains(g));
                }
            }
        }
    }

    #[test]
    fn multi_generator_annihilator_is_the_intersection_of_singletons() {
        let ext = fixtures::z4_poly();
        let bounds = DegreeBounds::default();
        let f1 = SkewPoly::constant(&ext, 2);
        let f2 = SkewPoly::from_pairs(&ext, [(vec![1], 2), (vec![0], 1)]);
        let joint = bounded_right_annihilator(&ext, &[f1.clone(), f2.clone()], &bounds).unwrap();
        let a1 = bounded_right_annihilator(&ext, &[f1], &bounds).unwrap();
        let a2 = bounded_right_annihilator(&ext, &[f2], &bounds).unwrap();
        let meet = lattice_intersect(a1.basis_columns(), a2.basis_columns(), &a1.moduli);
        assert_eq!(joint.basis_columns(), &meet[..]);
    }

    #[test]
    fn larger_middle_degree_never_enlarges_the_annihilator() {
        let ext = fixtures::diff_ops_z2t();
        let t = SkewPoly::constant(&ext, 2);
        let at = |e: usize| {
            let bounds = DegreeBounds {
                gen_degree: 1,
                middle_degree: e,
                target_degree: 2,
                witness_degree: 2,
            };
            bounded_right_annihilator(&ext, &[t.clone()], &bounds).unwrap()
        };
        let wide = at(0);
        let narrow = at(2);
        for col in narrow.basis_columns() {
            assert!(wide.raw_contains(col));
        }
    }

    #[test]
    fn raising_target_degree_preserves_the_truncation() {
        let ext = fixtures::diff_ops_z2t();
        let t = SkewPoly::constant(&ext, 2);
        let mk = |t_deg: usize| {
            let bounds = DegreeBounds {
                gen_degree: 1,
                middle_degree: 2,
                target_degree: t_deg,
                witness_degree: 2,
            };
            bounded_right_annihilator(&ext, &[t.clone()], &bounds).unwrap()
        };
        let low = mk(1);
        let high = mk(2);
        let k_low = low.moduli.len();
        let k_high = high.moduli.len();
        // the larger ambient, restricted to the low-degree slots
        let mut trunc_gens: Vec<Vec<i64>> = Vec::new();
        for j in 0..k_low {
            let mut col = vec![0; k_high];
            col[j] = 1;
            trunc_gens.push(col);
        }
        let trunc = zlin::canonical_subgroup_basis(trunc_gens, &high.moduli);
        let restricted = lattice_intersect(high.basis_columns(), &trunc, &high.moduli);
        let padded: Vec<Vec<i64>> = low
            .basis_columns()
            .iter()
            .map(|col| {
                let mut v = col.clone();
                v.resize(k_high, 0);
                v
            })
            .collect();
        let padded = zlin::canonical_subgroup_basis(padded, &high.moduli);
        assert_eq!(restricted, padded);
    }

    #[test]
    fn annihilator_members_annihilate_and_basis_is_reproducible() {
        let ext = fixtures::diff_ops_z2t();
        let bounds = DegreeBounds::default();
        let f = SkewPoly::from_pairs(&ext, [(vec![1], 2), (vec![0], 2)]);
        let ann = bounded_right_annihilator(&ext, &[f.clone()], &bounds).unwrap();
        let again = bounded_right_annihilator(&ext, &[f.clone()], &bounds).unwrap();
        assert!(ann.same_subgroup(&again));
        for g in ann.elements() {
            for h in super::middle_terms(&ext, bounds.middle_degree) {
                assert!(f.mul(&h).mul(&g).is_zero());
            }
        }
        for g in ann.generator_polys() {
            assert!(ann.contains(&g));
            assert!(f.mul(&g).is_zero());
        }
    }

    #[test]
    fn oracle_cap_is_enforced() {
        let ext = fixtures::m2z2_poly();
        let bounds = DegreeBounds {
            gen_degree: 1,
            middle_degree: 1,
            target_degree: 5,
            witness_degree: 2,
        };
        // 16^6 ambient states exceed 2^20
        let err = annihilator_oracle_enum(&ext, Side::Right, &[SkewPoly::one(&ext)], &bounds)
            .unwrap_err();
        assert!(matches!(err, AnnError::OracleUnavailable { .. }));
    }

    #[test]
    fn generator_degree_precondition_is_enforced() {
        let ext = fixtures::z4_poly();
        let bounds = DegreeBounds::default();
        let f = SkewPoly::from_pairs(&ext, [(vec![2], 1)]);
        let err = bounded_right_annihilator(&ext, &[f], &bounds).unwrap_err();
        assert_eq!(err, AnnError::GeneratorDegree { deg: 2, bound: 1 });
    }

    #[test]
    fn matrix_unit_annihilator_matches_oracle() {
        // the R-valued middle factors make E12·R·g = 0 force g = 0
        let ext = fixtures::m2z2_poly();
        let bounds = DegreeBounds {
            gen_degree: 1,
            middle_degree: 1,
            target_degree: 1,
            witness_degree: 2,
        };
        let e12 = SkewPoly::constant(&ext, 2);
        for side in [Side::Right, Side::Left] {
            let ann = bounded_annihilator(&ext, side, &[e12.clone()], &bounds).unwrap();
            let oracle = annihilator_oracle_enum(&ext, side, &[e12.clone()], &bounds).unwrap();
            assert_eq!(ann.subgroup_size(), oracle.len() as u128);
            for g in &oracle {
                assert!(ann.contains(g));
            }
            assert!(ann.is_zero_subgroup());
        }
    }
}
