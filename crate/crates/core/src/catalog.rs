//! Named example rings and extension families at desk scale.
//!
//! The families here (skew bi-quadratic presentations, ambiskew rings, the
//! two-generator quadratic algebras Q(a,b,0), quantum planes) are classically
//! studied over characteristic-zero fields. Exhaustive verification needs
//! finite carriers, so every catalog instance substitutes a finite coefficient
//! ring; the instance names record the substituted base.

use crate::finring::{build, Elem, FiniteRing, RingDescriptor};
use crate::ringmaps::{
    formal_derivative_table, frobenius_table, identity_table, swap_table, validate_endomorphism,
    validate_sigma_derivation, MapError, RingMap, SigmaDerivation, SigmaFamily,
};
use crate::spbw::{var_pairs, ExtensionSpec, QuadRelation, SpecError};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog example {name:?}")]
    UnknownExample { name: String },
    #[error("catalog example {example}: bad parameters: {detail}")]
    BadParams {
        example: &'static str,
        detail: String,
    },
    #[error("catalog example {example}: constraint violated: {constraint}")]
    Constraint {
        example: &'static str,
        constraint: String,
    },
    #[error("catalog example {example}: unresolved map reference {name:?}")]
    UnresolvedMap {
        example: &'static str,
        name: String,
    },
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Spec(#[from] SpecError),
}

/// The fixed reference rings every ring-level suite runs over.
pub fn catalog_rings() -> Vec<Arc<FiniteRing>> {
    let z2 = build::zmod(2);
    vec![
        Arc::new(build::zmod(2)),
        Arc::new(build::zmod(3)),
        Arc::new(build::zmod(4)),
        Arc::new(build::zmod(6)),
        Arc::new(build::zmod(8)),
        Arc::new(build::product(&[&z2, &z2]).expect("product of two finite rings")),
        Arc::new(build::gf(2, 2).expect("GF(4)")),
        Arc::new(build::matrix(&z2, 2).expect("2x2 matrices over Z_2")),
        Arc::new(build::trunc_poly(2, 2)),
    ]
}

/// R[x]: one central variable, σ = id, δ = 0.
pub fn poly_ring(ring: &Arc<FiniteRing>) -> Arc<ExtensionSpec> {
    let id = RingMap::identity(ring);
    let sigmas = SigmaFamily::new(ring, vec![id]);
    let deltas = vec![SigmaDerivation::zero(ring, sigmas.map(0))];
    ExtensionSpec::new(format!("{}[x]", ring.name()), ring, sigmas, deltas, vec![])
        .expect("identity presentation is always valid")
}

/// R[x; σ, δ]: one variable with the given validated twist data.
pub fn skew_poly_ring(
    name: impl Into<String>,
    ring: &Arc<FiniteRing>,
    sigma: RingMap,
    delta: SigmaDerivation,
) -> Result<Arc<ExtensionSpec>, SpecError> {
    let sigmas = SigmaFamily::new(ring, vec![sigma]);
    ExtensionSpec::new(name, ring, sigmas, vec![delta], vec![])
}

/// Relation data for a skew bi-quadratic presentation: for each variable
/// pair i < j (1-based), x_j·x_i = q·x_i·x_j + Σ_k linear_k·x_k + constant.
/// Missing pairs default to plain commutation.
#[derive(Debug, Clone, Default)]
pub struct SbqaData {
    pub q: BTreeMap<(usize, usize), Elem>,
    pub linear: BTreeMap<(usize, usize), Vec<Elem>>,
    pub constant: BTreeMap<(usize, usize), Elem>,
}

fn check_pair_keys<T>(
    example: &'static str,
    n: usize,
    map: &BTreeMap<(usize, usize), T>,
) -> Result<(), CatalogError> {
    for &(i, j) in map.keys() {
        if i == 0 || j == 0 || i >= j || j > n {
            return Err(CatalogError::BadParams {
                example,
                detail: format!("pair ({i}, {j}) is not an ascending 1-based pair within {n} variables"),
            });
        }
    }
    Ok(())
}

/// Skew bi-quadratic presentation: commuting twist maps, central nonzero q
/// coefficients and arbitrary linear lower terms.
pub fn sbqa(
    name: impl Into<String>,
    ring: &Arc<FiniteRing>,
    sigmas: SigmaFamily,
    deltas: Vec<SigmaDerivation>,
    data: &SbqaData,
) -> Result<Arc<ExtensionSpec>, CatalogError> {
    const EX: &str = "sbqa";
    let n = sigmas.n();
    for i in 0..n {
        for j in (i + 1)..n {
            let ij = sigmas.map(i).compose(sigmas.map(j));
            let ji = sigmas.map(j).compose(sigmas.map(i));
            if ij.table() != ji.table() {
                return Err(CatalogError::Constraint {
                    example: EX,
                    constraint: format!(
                        "twist maps must commute, but σ_{}∘σ_{} ≠ σ_{}∘σ_{}",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    ),
                });
            }
        }
    }
    check_pair_keys(EX, n, &data.q)?;
    check_pair_keys(EX, n, &data.linear)?;
    check_pair_keys(EX, n, &data.constant)?;
    let center = ring.center();
    for (&(i, j), &q) in &data.q {
        if q == ring.zero() {
            return Err(CatalogError::Constraint {
                example: EX,
                constraint: format!("q[({i}, {j})] must be nonzero"),
            });
        }
        if !center.contains(&q) {
            return Err(CatalogError::Constraint {
                example: EX,
                constraint: format!(
                    "q[({i}, {j})] = {} must be central",
                    ring.elem_name(q)
                ),
            });
        }
    }
    let mut relations = Vec::new();
    for (i, j) in var_pairs(n) {
        let key = (i + 1, j + 1);
        let linear = match data.linear.get(&key) {
            Some(v) if v.len() == n => v.clone(),
            Some(v) => {
                return Err(CatalogError::BadParams {
                    example: EX,
                    detail: format!(
                        "linear coefficients for pair {key:?} have length {}, expected {n}",
                        v.len()
                    ),
                })
            }
            None => vec![ring.zero(); n],
        };
        relations.push(QuadRelation {
            d: data.q.get(&key).copied().unwrap_or(ring.one()),
            linear,
            constant: data.constant.get(&key).copied().unwrap_or(ring.zero()),
        });
    }
    Ok(ExtensionSpec::new(name, ring, sigmas, deltas, relations)?)
}

/// Two commuting-twist variables with x₂x₁ = q·x₁x₂ and no lower terms.
pub fn quantum_plane(ring: &Arc<FiniteRing>, q: Elem) -> Result<Arc<ExtensionSpec>, CatalogError> {
    let id = RingMap::identity(ring);
    let sigmas = SigmaFamily::new(ring, vec![id.clone(), id]);
    let deltas = (0..2)
        .map(|i| SigmaDerivation::zero(ring, sigmas.map(i)))
        .collect();
    let mut data = SbqaData::default();
    data.q.insert((1, 2), q);
    sbqa(
        format!("quantum plane over {} (q = {})", ring.name(), ring.elem_name(q)),
        ring,
        sigmas,
        deltas,
        &data,
    )
}

/// Ambiskew presentation over a commutative base B: variables x and y with
/// x·b = σ⁻¹(b)·x, y·b = σ(b)·y and y·x = p·x·y + c for a unit p.
pub fn ambiskew(
    ring: &Arc<FiniteRing>,
    sigma: &RingMap,
    p: Elem,
    c: Elem,
) -> Result<Arc<ExtensionSpec>, CatalogError> {
    const EX: &str = "ambiskew";
    let constraint = |text: String| CatalogError::Constraint {
        example: EX,
        constraint: text,
    };
    for a in ring.elements() {
        for b in ring.elements() {
            if ring.mul(a, b) != ring.mul(b, a) {
                return Err(constraint(format!(
                    "base ring must be commutative, but {}·{} ≠ {}·{}",
                    ring.elem_name(a),
                    ring.elem_name(b),
                    ring.elem_name(b),
                    ring.elem_name(a)
                )));
            }
        }
    }
    if p >= ring.order() || c >= ring.order() {
        return Err(CatalogError::BadParams {
            example: EX,
            detail: format!("p and c must be element indices below {}", ring.order()),
        });
    }
    if !ring.is_invertible(p) {
        return Err(constraint(format!(
            "twist parameter p = {} must be a unit",
            ring.elem_name(p)
        )));
    }
    let mut inverse = vec![usize::MAX; ring.order()];
    for a in ring.elements() {
        inverse[sigma.apply(a)] = a;
    }
    if inverse.contains(&usize::MAX) {
        return Err(constraint("sigma must be an automorphism".to_string()));
    }
    let sigma_inv = validate_endomorphism(ring, inverse, format!("{}^-1", sigma.name()))?;
    let sigmas = SigmaFamily::new(ring, vec![sigma_inv, sigma.clone()]);
    let deltas = (0..2)
        .map(|i| SigmaDerivation::zero(ring, sigmas.map(i)))
        .collect();
    let relations = vec![QuadRelation {
        d: p,
        linear: vec![ring.zero(); 2],
        constant: c,
    }];
    Ok(ExtensionSpec::new(
        format!(
            "ambiskew over {} (sigma = {}, p = {}, c = {})",
            ring.name(),
            sigma.name(),
            ring.elem_name(p),
            ring.elem_name(c)
        ),
        ring,
        sigmas,
        deltas,
        relations,
    )?)
}

fn trunc_shape(ring: &FiniteRing) -> Option<(usize, usize)> {
    match ring.descriptor() {
        Some(RingDescriptor::TruncPoly { p, m }) => Some((*p, *m)),
        _ => None,
    }
}

/// Q(a,b,0) as a one-variable extension of the truncated polynomial ring
/// Z_p[t]/(t^m): the generator y acts by y·t = b·t·y + a·t², i.e. σ(t) = bt
/// and δ(t) = at², both extended by the twisted Leibniz rule.
pub fn q_one_variable(
    ring: &Arc<FiniteRing>,
    a: Elem,
    b: Elem,
) -> Result<Arc<ExtensionSpec>, CatalogError> {
    const EX: &str = "q_one_variable";
    let Some((p, m)) = trunc_shape(ring) else {
        return Err(CatalogError::Constraint {
            example: EX,
            constraint: "base must be a truncated polynomial ring Z_p[t]/(t^m)".to_string(),
        });
    };
    if a >= p || b >= p {
        return Err(CatalogError::BadParams {
            example: EX,
            detail: format!("a and b must be scalars below the characteristic {p}"),
        });
    }
    if b == 0 {
        return Err(CatalogError::Constraint {
            example: EX,
            constraint: "b must be nonzero: y·t = a·t² alone is not a skew PBW commutation rule"
                .to_string(),
        });
    }
    // σ(Σ c_k t^k) = Σ c_k b^k t^k; δ(t^k) = a·(Σ_{j<k} b^j)·t^{k+1}
    let mut bpow = vec![1usize; m];
    for k in 1..m {
        bpow[k] = bpow[k - 1] * b % p;
    }
    let mut geom = vec![0usize; m];
    for k in 1..m {
        geom[k] = (geom[k - 1] + bpow[k - 1]) % p;
    }
    let mut sigma_table = Vec::with_capacity(ring.order());
    let mut delta_table = Vec::with_capacity(ring.order());
    for e in ring.elements() {
        let coords = ring
            .decomp_coords(e)
            .expect("truncated polynomial rings decompose every element");
        let sigma_coords: Vec<usize> = coords
            .iter()
            .enumerate()
            .map(|(k, &c)| c * bpow[k] % p)
            .collect();
        let mut delta_coords = vec![0usize; m];
        for (k, &c) in coords.iter().enumerate() {
            if k + 1 < m {
                delta_coords[k + 1] = (delta_coords[k + 1] + c * a % p * geom[k]) % p;
            }
        }
        sigma_table.push(ring.from_coords(&sigma_coords));
        delta_table.push(ring.from_coords(&delta_coords));
    }
    let sigma = validate_endomorphism(ring, sigma_table, format!("t->{b}t"))?;
    let delta = validate_sigma_derivation(ring, &sigma, delta_table, format!("t->{a}t^2"))?;
    Ok(skew_poly_ring(
        format!("Q({a},{b},0) over Z_{p}[t]/(t^{m})"),
        ring,
        sigma,
        delta,
    )?)
}

/// Q(a,b,0) over a finite field with both generators as extension variables.
/// For b ≠ 1 the substitution y ↦ y − a(1−b)⁻¹x removes the quadratic term,
/// leaving the quantum-plane relation yx = b·xy on the new generators.
pub fn q_two_variable(
    ring: &Arc<FiniteRing>,
    a: Elem,
    b: Elem,
) -> Result<Arc<ExtensionSpec>, CatalogError> {
    const EX: &str = "q_two_variable";
    let constraint = |text: &str| CatalogError::Constraint {
        example: EX,
        constraint: text.to_string(),
    };
    if a >= ring.order() || b >= ring.order() {
        return Err(CatalogError::BadParams {
            example: EX,
            detail: format!("a and b must be element indices below {}", ring.order()),
        });
    }
    if ring
        .elements()
        .any(|e| e != ring.zero() && !ring.is_invertible(e))
    {
        return Err(constraint("base must be a field"));
    }
    if b == ring.zero() {
        return Err(constraint(
            "b must be nonzero: Q(a,0,0) is not a skew PBW extension on these generators",
        ));
    }
    if b == ring.one() && a != ring.zero() {
        return Err(constraint(
            "a ≠ 0 with b = 1 admits no quantum-plane normalization; use the one-variable encoding",
        ));
    }
    let id = RingMap::identity(ring);
    let sigmas = SigmaFamily::new(ring, vec![id.clone(), id]);
    let deltas = (0..2)
        .map(|i| SigmaDerivation::zero(ring, sigmas.map(i)))
        .collect();
    let relations = vec![QuadRelation {
        d: b,
        linear: vec![ring.zero(); 2],
        constant: ring.zero(),
    }];
    Ok(ExtensionSpec::new(
        format!(
            "Q({},{},0) over {} on normalized generators",
            ring.elem_name(a),
            ring.elem_name(b),
            ring.name()
        ),
        ring,
        sigmas,
        deltas,
        relations,
    )?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QuantumPlaneParams {
    q: Elem,
}

#[derive(Deserialize)]
struct PairValue {
    pair: [usize; 2],
    value: Elem,
}

#[derive(Deserialize)]
struct PairVector {
    pair: [usize; 2],
    coeffs: Vec<Elem>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SbqaParams {
    n: usize,
    #[serde(default)]
    sigma: Vec<String>,
    #[serde(default)]
    delta: Vec<String>,
    #[serde(default)]
    q: Vec<PairValue>,
    #[serde(default)]
    linear: Vec<PairVector>,
    #[serde(default)]
    constant: Vec<PairValue>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AmbiskewParams {
    p: Elem,
    c: Elem,
    #[serde(default)]
    sigma: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QParams {
    a: Elem,
    b: Elem,
}

fn parse_params<T: serde::de::DeserializeOwned>(
    example: &'static str,
    params: &toml::Value,
) -> Result<T, CatalogError> {
    params
        .clone()
        .try_into()
        .map_err(|e: toml::de::Error| CatalogError::BadParams {
            example,
            detail: e.message().to_string(),
        })
}

/// Resolves a map name to a candidate table: scenario-supplied tables first,
/// then the built-in names.
fn lookup_table(
    example: &'static str,
    ring: &FiniteRing,
    maps: &BTreeMap<String, Vec<Elem>>,
    name: &str,
) -> Result<Vec<Elem>, CatalogError> {
    if let Some(table) = maps.get(name) {
        return Ok(table.clone());
    }
    let built = match name {
        "identity" => Some(identity_table(ring)),
        "zero" => Some(vec![ring.zero(); ring.order()]),
        "frobenius" => frobenius_table(ring).ok(),
        "formal_derivative" => formal_derivative_table(ring).ok(),
        "swap" => swap_table(ring).ok(),
        _ => None,
    };
    built.ok_or_else(|| CatalogError::UnresolvedMap {
        example,
        name: name.to_string(),
    })
}

fn resolve_family(
    example: &'static str,
    ring: &Arc<FiniteRing>,
    maps: &BTreeMap<String, Vec<Elem>>,
    n: usize,
    sigma_names: &[String],
    delta_names: &[String],
) -> Result<(SigmaFamily, Vec<SigmaDerivation>), CatalogError> {
    let bad_len = |what: &str, got: usize| CatalogError::BadParams {
        example,
        detail: format!("{what} names have length {got}, expected {n}"),
    };
    if !sigma_names.is_empty() && sigma_names.len() != n {
        return Err(bad_len("sigma", sigma_names.len()));
    }
    if !delta_names.is_empty() && delta_names.len() != n {
        return Err(bad_len("delta", delta_names.len()));
    }
    let mut sigma_maps = Vec::new();
    for i in 0..n {
        let name = sigma_names.get(i).map(String::as_str).unwrap_or("identity");
        let table = lookup_table(example, ring, maps, name)?;
        sigma_maps.push(validate_endomorphism(ring, table, name)?);
    }
    let family = SigmaFamily::new(ring, sigma_maps);
    let mut deltas = Vec::new();
    for i in 0..n {
        let name = delta_names.get(i).map(String::as_str).unwrap_or("zero");
        let table = lookup_table(example, ring, maps, name)?;
        deltas.push(validate_sigma_derivation(ring, family.map(i), table, name)?);
    }
    Ok((family, deltas))
}

/// Builds a named catalog family over the given ring. `maps` supplies named
/// candidate tables (a scenario's map section); built-in names resolve even
/// when absent from it.
pub fn build_catalog_example(
    name: &str,
    ring: &Arc<FiniteRing>,
    maps: &BTreeMap<String, Vec<Elem>>,
    params: &toml::Value,
) -> Result<Arc<ExtensionSpec>, CatalogError> {
    match name {
        "quantum_plane" => {
            let p: QuantumPlaneParams = parse_params("quantum_plane", params)?;
            quantum_plane(ring, p.q)
        }
        "sbqa" => {
            let p: SbqaParams = parse_params("sbqa", params)?;
            let (family, deltas) = resolve_family("sbqa", ring, maps, p.n, &p.sigma, &p.delta)?;
            let mut data = SbqaData::default();
            for pv in &p.q {
                data.q.insert((pv.pair[0], pv.pair[1]), pv.value);
            }
            for pv in &p.linear {
                data.linear
                    .insert((pv.pair[0], pv.pair[1]), pv.coeffs.clone());
            }
            for pv in &p.constant {
                data.constant.insert((pv.pair[0], pv.pair[1]), pv.value);
            }
            sbqa(
                format!("sbqa over {} ({} variables)", ring.name(), p.n),
                ring,
                family,
                deltas,
                &data,
            )
        }
        "ambiskew" => {
            let p: AmbiskewParams = parse_params("ambiskew", params)?;
            let sigma_name = p.sigma.as_deref().unwrap_or("identity");
            let table = lookup_table("ambiskew", ring, maps, sigma_name)?;
            let sigma = validate_endomorphism(ring, table, sigma_name)?;
            ambiskew(ring, &sigma, p.p, p.c)
        }
        "q_one_variable" => {
            let p: QParams = parse_params("q_one_variable", params)?;
            q_one_variable(ring, p.a, p.b)
        }
        "q_two_variable" => {
            let p: QParams = parse_params("q_two_variable", params)?;
            q_two_variable(ring, p.a, p.b)
        }
        other => Err(CatalogError::UnknownExample {
            name: other.to_string(),
        }),
    }
}

/// A shipped instance: a stable id (matching the scenario file stem) and the
/// built presentation.
pub struct CatalogEntry {
    pub id: &'static str,
    pub ext: Arc<ExtensionSpec>,
}

/// Every extension the desk-scale suites run over.
pub fn shipped_extensions() -> Vec<CatalogEntry> {
    let z2 = build::zmod(2);
    let entry = |id: &'static str, ext: Arc<ExtensionSpec>| CatalogEntry { id, ext };

    let z4 = Arc::new(build::zmod(4));
    let z6 = Arc::new(build::zmod(6));
    let z3 = Arc::new(build::zmod(3));
    let m2 = Arc::new(build::matrix(&z2, 2).expect("M_2(Z_2)"));
    let f4 = Arc::new(build::gf(2, 2).expect("GF(4)"));
    let z2t = Arc::new(build::trunc_poly(2, 2));
    let z2xz2 = Arc::new(build::product(&[&z2, &z2]).expect("Z_2 x Z_2"));
    let f3t = Arc::new(build::trunc_poly(3, 3));

    let frob = validate_endomorphism(&f4, frobenius_table(&f4).expect("field"), "frobenius")
        .expect("Frobenius is a field endomorphism");
    let gf4_skew = skew_poly_ring(
        format!("{}[y; frobenius]", f4.name()),
        &f4,
        frob.clone(),
        SigmaDerivation::zero(&f4, &frob),
    )
    .expect("validated twist data");

    let id_z2t = RingMap::identity(&z2t);
    let ddt = validate_sigma_derivation(
        &z2t,
        &id_z2t,
        formal_derivative_table(&z2t).expect("truncated polynomial ring"),
        "d/dt",
    )
    .expect("formal derivative is an identity-twisted derivation");
    let z2t_diff = skew_poly_ring(format!("{}[x; id, d/dt]", z2t.name()), &z2t, id_z2t, ddt)
        .expect("validated twist data");

    let swap = validate_endomorphism(
        &z2xz2,
        swap_table(&z2xz2).expect("two-factor product"),
        "swap",
    )
    .expect("coordinate swap is an automorphism");
    let z2xz2_swap = skew_poly_ring(
        format!("{}[x; swap]", z2xz2.name()),
        &z2xz2,
        swap.clone(),
        SigmaDerivation::zero(&z2xz2, &swap),
    )
    .expect("validated twist data");

    let mut sbqa_data = SbqaData::default();
    sbqa_data.q.insert((1, 2), 1);
    sbqa_data.constant.insert((1, 2), 2);
    let id_z4 = RingMap::identity(&z4);
    let sbqa_sigmas = SigmaFamily::new(&z4, vec![id_z4.clone(), id_z4]);
    let sbqa_deltas = (0..2)
        .map(|i| SigmaDerivation::zero(&z4, sbqa_sigmas.map(i)))
        .collect();
    let sbqa_z4 = sbqa(
        "sbqa over Z_4 (x2·x1 = x1·x2 + 2)",
        &z4,
        sbqa_sigmas,
        sbqa_deltas,
        &sbqa_data,
    )
    .expect("central unit q with constant lower term");

    vec![
        entry("z4-poly", poly_ring(&z4)),
        entry("z6-poly", poly_ring(&z6)),
        entry("m2z2-poly", poly_ring(&m2)),
        entry("gf4-frobenius", gf4_skew),
        entry("z2t-diff", z2t_diff),
        entry("z2xz2-swap", z2xz2_swap),
        entry(
            "quantum-plane-f3",
            quantum_plane(&z3, 2).expect("2 is a central unit in Z_3"),
        ),
        entry("sbqa-z4", sbqa_z4),
        entry(
            "ambiskew-f3",
            ambiskew(&z3, &RingMap::identity(&z3), 2, 1).expect("units over Z_3"),
        ),
        entry(
            "q-family-y",
            q_one_variable(&f3t, 1, 2).expect("scalars over Z_3"),
        ),
        entry(
            "q-family-xy",
            q_two_variable(&z3, 1, 2).expect("2 ≠ 1 is a unit in Z_3"),
        ),
    ]
}

/// Looks up a shipped instance by id.
pub fn shipped_extension(id: &str) -> Option<Arc<ExtensionSpec>> {
    shipped_extensions()
        .into_iter()
        .find(|e| e.id == id)
        .map(|e| e.ext)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spbw::{validate_extension, SkewPoly};

    #[test]
    fn catalog_rings_are_the_expected_nine() {
        let rings = catalog_rings();
        let orders: Vec<usize> = rings.iter().map(|r| r.order()).collect();
        assert_eq!(orders, vec![2, 3, 4, 6, 8, 4, 4, 16, 4]);
        let names: Vec<&str> = rings.iter().map(|r| r.name()).collect();
        let mut unique = names.clone();
        unique.sort();
        unique.dedup();
        assert_eq!(unique.len(), names.len(), "names must be distinct: {names:?}");
    }

    #[test]
    fn sbqa_over_z4_has_the_stated_relation_and_is_confluent() {
        let ext = shipped_extension("sbqa-z4").unwrap();
        assert_eq!(
            ext.relation(0, 1),
            &QuadRelation { d: 1, linear: vec![0, 0], constant: 2 }
        );
        let x1 = SkewPoly::var(&ext, 0);
        let x2 = SkewPoly::var(&ext, 1);
        let expected = x1.mul(&x2).add(&SkewPoly::constant(&ext, 2));
        assert_eq!(x2.mul(&x1), expected);
        assert!(validate_extension(&ext, 3).is_confluent());
    }

    #[test]
    fn ambiskew_over_f3_has_the_twisted_relation() {
        let ext = shipped_extension("ambiskew-f3").unwrap();
        let x = SkewPoly::var(&ext, 0);
        let y = SkewPoly::var(&ext, 1);
        let expected = x.mul(&y).scale_left(2).add(&SkewPoly::one(&ext));
        assert_eq!(y.mul(&x), expected, "y·x = 2·x·y + 1");
        assert!(validate_extension(&ext, 3).is_confluent());
    }

    #[test]
    fn quantum_plane_is_quasi_commutative() {
        let ext = shipped_extension("quantum-plane-f3").unwrap();
        let report = validate_extension(&ext, 2);
        assert!(report.quasi_commutative);
        assert!(report.bijective);
        assert!(report.is_confluent());
    }

    #[test]
    fn q_one_variable_realizes_the_quadratic_relation() {
        let ext = shipped_extension("q-family-y").unwrap();
        let ring = ext.ring().clone();
        assert_eq!(ring.order(), 27);
        // t is the degree-1 summand generator
        let t = ring.from_coords(&[0, 1, 0]);
        let t2 = ring.mul(t, t);
        assert_eq!(ext.sigmas().map(0).apply(t), ring.smul(2, t), "σ(t) = 2t");
        assert_eq!(ext.deltas()[0].apply(t), t2, "δ(t) = t²");
        // y·t = 2t·y + t²
        let y = SkewPoly::var(&ext, 0);
        let lhs = y.mul(&SkewPoly::constant(&ext, t));
        let rhs = SkewPoly::from_pairs(&ext, [(vec![1], ring.smul(2, t)), (vec![0], t2)]);
        assert_eq!(lhs, rhs);
        assert!(validate_extension(&ext, 3).is_confluent());
    }

    #[test]
    fn q_two_variable_is_the_normalized_quantum_plane() {
        let ext = shipped_extension("q-family-xy").unwrap();
        assert_eq!(ext.relation(0, 1).d, 2, "relation carries d = b");
        assert!(ext.relation(0, 1).linear.iter().all(|&c| c == 0));
        assert!(validate_extension(&ext, 3).is_confluent());
    }

    #[test]
    fn q_family_parameter_constraints_are_enforced() {
        let z3 = Arc::new(build::zmod(3));
        let f3t = Arc::new(build::trunc_poly(3, 3));
        let is_constraint = |r: Result<Arc<ExtensionSpec>, CatalogError>, needle: &str| {
            match r {
                Err(CatalogError::Constraint { constraint, .. }) => {
                    assert!(constraint.contains(needle), "{constraint:?} lacks {needle:?}")
                }
                other => panic!("expected a constraint rejection, got {:?}", other.err()),
            }
        };
        is_constraint(q_two_variable(&z3, 1, 0), "b must be nonzero");
        is_constraint(q_two_variable(&z3, 1, 1), "no quantum-plane normalization");
        is_constraint(q_one_variable(&f3t, 1, 0), "b must be nonzero");
        is_constraint(q_one_variable(&z3, 1, 2), "truncated polynomial ring");
        // the degenerate commutative member a = 0, b = 1 is legal
        assert!(q_two_variable(&z3, 0, 1).is_ok());
        // non-field base is rejected for the two-variable encoding
        let z4 = Arc::new(build::zmod(4));
        is_constraint(q_two_variable(&z4, 1, 2), "must be a field");
    }

    #[test]
    fn ambiskew_constraints_are_enforced() {
        let z4 = Arc::new(build::zmod(4));
        let id = RingMap::identity(&z4);
        match ambiskew(&z4, &id, 2, 0) {
            Err(CatalogError::Constraint { constraint, .. }) => {
                assert!(constraint.contains("must be a unit"))
            }
            other => panic!("non-unit p must be rejected, got {:?}", other.err()),
        }
        assert!(ambiskew(&z4, &id, 3, 2).is_ok(), "3 is a unit mod 4");
        let z2 = build::zmod(2);
        let m2 = Arc::new(build::matrix(&z2, 2).unwrap());
        let id_m2 = RingMap::identity(&m2);
        match ambiskew(&m2, &id_m2, 1, 0) {
            Err(CatalogError::Constraint { constraint, .. }) => {
                assert!(constraint.contains("commutative"))
            }
            other => panic!("matrix base must be rejected, got {:?}", other.err()),
        }
    }

    #[test]
    fn sbqa_rejects_noncentral_q_and_noncommuting_twists() {
        let z2 = build::zmod(2);
        let m2 = Arc::new(build::matrix(&z2, 2).unwrap());
        let id = RingMap::identity(&m2);
        let sigmas = SigmaFamily::new(&m2, vec![id.clone(), id.clone()]);
        let deltas: Vec<_> = (0..2)
            .map(|i| SigmaDerivation::zero(&m2, sigmas.map(i)))
            .collect();
        let mut data = SbqaData::default();
        // the swap matrix E12+E21 is a non-central unit
        data.q.insert((1, 2), 6);
        match sbqa("bad q", &m2, sigmas, deltas, &data) {
            Err(CatalogError::Constraint { constraint, .. }) => {
                assert!(constraint.contains("central"))
            }
            other => panic!("non-central q must be rejected, got {:?}", other.err()),
        }

        // conjugation by the swap matrix and by I+E12 do not commute
        let conj = |g: Elem| {
            let table: Vec<Elem> = m2.elements().map(|x| m2.mul(m2.mul(g, x), g)).collect();
            validate_endomorphism(&m2, table, format!("conj({g})")).unwrap()
        };
        let sigmas = SigmaFamily::new(&m2, vec![conj(6), conj(11)]);
        let deltas: Vec<_> = (0..2)
            .map(|i| SigmaDerivation::zero(&m2, sigmas.map(i)))
            .collect();
        match sbqa("bad twists", &m2, sigmas, deltas, &SbqaData::default()) {
            Err(CatalogError::Constraint { constraint, .. }) => {
                assert!(constraint.contains("commute"))
            }
            other => panic!("non-commuting twists must be rejected, got {:?}", other.err()),
        }
    }

    #[test]
    fn dispatcher_builds_families_and_rejects_unknown_names() {
        let z3 = Arc::new(build::zmod(3));
        let maps = BTreeMap::new();
        let params: toml::Value = toml::from_str("q = 2").unwrap();
        let ext = build_catalog_example("quantum_plane", &z3, &maps, &params).unwrap();
        assert_eq!(ext.n(), 2);
        assert_eq!(ext.relation(0, 1).d, 2);

        let params: toml::Value = toml::from_str("p = 2\nc = 1").unwrap();
        let ext = build_catalog_example("ambiskew", &z3, &maps, &params).unwrap();
        assert_eq!(ext.relation(0, 1).constant, 1);

        let text = "n = 2\nq = [{ pair = [1, 2], value = 1 }]\nconstant = [{ pair = [1, 2], value = 2 }]";
        let params: toml::Value = toml::from_str(text).unwrap();
        let z4 = Arc::new(build::zmod(4));
        let ext = build_catalog_example("sbqa", &z4, &maps, &params).unwrap();
        assert_eq!(ext.relation(0, 1).constant, 2);

        let err = build_catalog_example("nope", &z3, &maps, &toml::Value::Table(Default::default()))
            .unwrap_err();
        assert_eq!(err, CatalogError::UnknownExample { name: "nope".into() });

        let params: toml::Value = toml::from_str("p = 2\nc = 1\nsigma = \"frob2\"").unwrap();
        let err = build_catalog_example("ambiskew", &z3, &maps, &params).unwrap_err();
        assert!(matches!(err, CatalogError::UnresolvedMap { name, .. } if name == "frob2"));
    }

    #[test]
    fn shipped_catalog_ids_are_unique_and_every_entry_is_confluent() {
        let entries = shipped_extensions();
        let mut ids: Vec<&str> = entries.iter().map(|e| e.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), entries.len());
        for e in &entries {
            let report = validate_extension(&e.ext, 2);
            assert!(
                report.is_confluent(),
                "{} fails bounded confluence: {:?}",
                e.id,
                report.confluence.err()
            );
        }
    }
}
