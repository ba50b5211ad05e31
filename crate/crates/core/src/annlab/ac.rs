//! Bounded Property (a.c.) on the extension: is the annihilator of a
//! finitely generated one-sided ideal also the annihilator of a single
//! principal ideal? Witnesses are confirmations at the stated bounds; an
//! exhausted candidate space is a bounded refutation, never a disproof of
//! the unbounded property.

use super::{
    advance_odometer, annihilator_core, check_gen_degrees, Ambient, AnnError, DegreeBounds,
    ENUMERATION_CAP,
};
use crate::spbw::{ExtensionSpec, SkewPoly};
use crate::Side;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "strategy", rename_all = "snake_case")]
pub enum AcStrategy {
    /// Every candidate of degree ≤ C, in canonical coordinate order.
    Exhaustive,
    /// Generators, their pair sums, and idempotent combinations.
    Heuristic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AcStatus {
    Witness { c: SkewPoly },
    /// No candidate of degree ≤ C works; valid only for the stated bounds.
    BoundedRefutation,
    /// The heuristic candidates missed; nothing is concluded.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AcSearchReport {
    pub side: Side,
    pub bounds: DegreeBounds,
    pub strategy: AcStrategy,
    pub annihilator_size: u64,
    pub ambient_size: u64,
    pub candidates_tried: u64,
    pub status: AcStatus,
}

fn sat64(x: u128) -> u64 {
    u64::try_from(x).unwrap_or(u64::MAX)
}

fn heuristic_candidates(
    ext: &Arc<ExtensionSpec>,
    gens: &[SkewPoly],
    extra: &[SkewPoly],
) -> Vec<SkewPoly> {
    let ring = ext.ring().clone();
    let mut out: Vec<SkewPoly> = Vec::new();
    let mut push = |c: SkewPoly| {
        if !out.contains(&c) {
            out.push(c);
        }
    };
    for f in gens {
        push(f.clone());
    }
    for (i, f) in gens.iter().enumerate() {
        for g in gens.iter().skip(i + 1) {
            push(f.add(g));
        }
    }
    let idems: Vec<usize> = ring.elements().filter(|&e| ring.is_idempotent(e)).collect();
    for f in gens {
        for &e in &idems {
            push(f.scale_left(e));
        }
    }
    // idempotent-weighted sums Σ e_i·f_i over all tuples, when affordable
    if idems.len().checked_pow(gens.len() as u32).map_or(false, |n| n <= 4096) {
        let moduli: Vec<i64> = vec![idems.len() as i64; gens.len()];
        let mut pick = vec![0i64; gens.len()];
        loop {
            let mut acc = SkewPoly::zero(ext);
            for (f, &k) in gens.iter().zip(&pick) {
                acc = acc.add(&f.scale_left(idems[k as usize]));
            }
            push(acc);
            if !advance_odometer(&mut pick, &moduli) {
                break;
            }
        }
    }
    for c in extra {
        push(c.clone());
    }
    out
}

/// Searches for c with the same bounded annihilator as the ideal generated
/// by `gens`. Deterministic: the first matching candidate in canonical
/// order is returned.
pub fn ac_witness_search(
    ext: &Arc<ExtensionSpec>,
    side: Side,
    gens: &[SkewPoly],
    bounds: &DegreeBounds,
    strategy: AcStrategy,
    extra: &[SkewPoly],
) -> Result<AcSearchReport, AnnError> {
    if gens.is_empty() {
        return Err(AnnError::EmptyGenerators);
    }
    check_gen_degrees(gens, bounds.gen_degree)?;
    let target = annihilator_core(ext, side, gens, bounds);
    let mut tried = 0u64;
    let mut witness = None;

    match strategy {
        AcStrategy::Exhaustive => {
            let amb = Ambient::new(ext, bounds.witness_degree);
            let space = amb.size();
            if space > ENUMERATION_CAP {
                return Err(AnnError::ExhaustiveCapExceeded {
                    space,
                    cap: ENUMERATION_CAP,
                });
            }
            let mut coords = vec![0i64; amb.moduli.len()];
            loop {
                let c = amb.poly(ext, &coords);
                tried += 1;
                if annihilator_core(ext, side, std::slice::from_ref(&c), bounds)
                    .same_subgroup(&target)
                {
                    witness = Some(c);
                    break;
                }
                if !advance_odometer(&mut coords, &amb.moduli) {
                    break;
                }
            }
        }
        AcStrategy::Heuristic => {
            for c in heuristic_candidates(ext, gens, extra) {
                tried += 1;
                if annihilator_core(ext, side, std::slice::from_ref(&c), bounds)
                    .same_subgroup(&target)
                {
                    witness = Some(c);
                    break;
                }
            }
        }
    }

    let status = match (witness, strategy) {
        (Some(c), _) => AcStatus::Witness { c },
        (None, AcStrategy::Exhaustive) => AcStatus::BoundedRefutation,
        (None, AcStrategy::Heuristic) => AcStatus::Inconclusive,
    };
    Ok(AcSearchReport {
        side,
        bounds: *bounds,
        strategy,
        annihilator_size: sat64(target.subgroup_size()),
        ambient_size: sat64(target.ambient_size()),
        candidates_tried: tried,
        status,
    })
}

/// Containment relation between the ideal's bounded annihilator and the
/// witness candidate's, with a gap element on any strict side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum AcComparison {
    Equal,
    /// ann(cA) ⊊ ann(ideal); the gap annihilates the ideal but not c.
    WitnessStrictlySmaller { gap: SkewPoly },
    /// ann(ideal) ⊊ ann(cA); the gap annihilates c but not the ideal.
    WitnessStrictlyLarger { gap: SkewPoly },
    Incomparable {
        ideal_gap: SkewPoly,
        witness_gap: SkewPoly,
    },
}

pub fn ac_verify_witness(
    ext: &Arc<ExtensionSpec>,
    side: Side,
    gens: &[SkewPoly],
    c: &SkewPoly,
    bounds: &DegreeBounds,
) -> Result<AcComparison, AnnError> {
    check_gen_degrees(gens, bounds.gen_degree)?;
    if let Some(d) = c.deg() {
        if d > bounds.witness_degree {
            return Err(AnnError::WitnessDegree {
                deg: d,
                bound: bounds.witness_degree,
            });
        }
    }
    let ideal_ann = annihilator_core(ext, side, gens, bounds);
    let witness_ann = annihilator_core(ext, side, std::slice::from_ref(c), bounds);
    if ideal_ann.same_subgroup(&witness_ann) {
        return Ok(AcComparison::Equal);
    }
    let ideal_gap = ideal_ann
        .basis_columns()
        .iter()
        .find(|col| !witness_ann.raw_contains(col))
        .map(|col| ideal_ann.column_poly(col));
    let witness_gap = witness_ann
        .basis_columns()
        .iter()
        .find(|col| !ideal_ann.raw_contains(col))
        .map(|col| witness_ann.column_poly(col));
    Ok(match (ideal_gap, witness_gap) {
        (Some(gap), None) => AcComparison::WitnessStrictlySmaller { gap },
        (None, Some(gap)) => AcComparison::WitnessStrictlyLarger { gap },
        (Some(ideal_gap), Some(witness_gap)) => AcComparison::Incomparable {
            ideal_gap,
            witness_gap,
        },
        (None, None) => unreachable!("mutually contained canonical bases must be equal"),
    })
}
