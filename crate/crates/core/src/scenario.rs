//! Scenario files: one TOML document naming a coefficient ring, optional
//! map tables, an optional extension presentation and a task list.
//!
//! Parsing is two-staged: serde reads the raw document shape, then
//! resolution builds the ring, validates every referenced map and
//! instantiates the extension. The raw document survives inside the parsed
//! [`Scenario`] so canonical re-emission is exact; golden files are byte
//! equal to their own canonical form.

use crate::annlab::{AcStrategy, CheckMode, DegreeBounds};
use crate::catalog::{build_catalog_example, CatalogError};
use crate::finring::{
    build_ring, BuildCaps, BuildError, Elem, FiniteRing, RingDescriptor,
};
use crate::ringmaps::{
    formal_derivative_table, frobenius_table, identity_table, swap_table, validate_endomorphism,
    validate_sigma_derivation, zero_table, BuiltinError, MapError, SigmaDerivation, SigmaFamily,
};
use crate::spbw::{ExtensionSpec, QuadRelation, SkewPoly, SpecError};
use crate::theorems::SuiteId;
use crate::Side;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScenarioError {
    #[error("scenario syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown ring constructor {kind:?}")]
    UnknownRingConstructor { kind: String },
    #[error("ring constructor {kind:?} is missing the field {field:?}")]
    MissingRingField { kind: String, field: &'static str },
    #[error("unresolved map reference {name:?}")]
    UnresolvedMapReference { name: String },
    #[error("malformed exponent vector: {detail}")]
    MalformedExponentVector { detail: String },
    #[error("coefficient {value} is not an element index below {order}")]
    CoefficientRange { value: usize, order: usize },
    #[error("map {name:?} must define exactly one of `builtin` or `table`")]
    MapShape { name: String },
    #[error("extension block must define exactly one of `catalog` or `n`")]
    ExtensionShape,
    #[error("relation pair [{i}, {j}] is not an ascending 1-based pair within {n} variables")]
    BadRelationPair { i: usize, j: usize, n: usize },
    #[error("duplicate relation for pair [{i}, {j}]")]
    DuplicateRelation { i: usize, j: usize },
    #[error("relation pair [{i}, {j}]: linear coefficients have length {got}, expected {expected}")]
    BadLinearLength {
        i: usize,
        j: usize,
        got: usize,
        expected: usize,
    },
    #[error("task {index} ({kind}) needs an extension, but the scenario defines none")]
    TaskNeedsExtension { index: usize, kind: String },
    #[error("task {index}: unknown property {prop:?} (expected sa1, quasi_armendariz or compatibility)")]
    UnknownProperty { index: usize, prop: String },
    #[error("task {index}: unknown theorem suite {suite:?}")]
    UnknownSuite { index: usize, suite: String },
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Builtin(#[from] BuiltinError),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Raw document shape; field order here is the canonical emission order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDoc {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub ring: RingBlock,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, MapBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionBlock>,
    #[serde(default, rename = "task", skip_serializing_if = "Vec::is_empty")]
    pub tasks: Vec<TaskBlock>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingBlock {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<RingBlock>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<RingBlock>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<TableBlock>,
}

/// Explicit operation tables, for loading presentations that the builders
/// cannot produce (including deliberately corrupted ones; axiom validation
/// is a task, not a parse step).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableBlock {
    pub name: String,
    pub order: usize,
    pub zero: Elem,
    pub one: Elem,
    pub add: Vec<Elem>,
    pub mul: Vec<Elem>,
    pub decomposition: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Elem>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<String>>,
    #[serde(default, rename = "relation", skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<RelationBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<toml::Table>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationBlock {
    /// 1-based ascending variable pair [i, j]; the relation rewrites
    /// x_j·x_i as d·x_i·x_j + Σ linear_k·x_k + constant.
    pub pair: [usize; 2],
    pub d: Elem,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linear: Option<Vec<Elem>>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub constant: Elem,
}

fn is_zero(e: &Elem) -> bool {
    *e == 0
}

/// One term of a polynomial literal: coeff·x^exp.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermBlock {
    pub exp: Vec<usize>,
    pub coeff: Elem,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TaskBlock {
    /// Ring axiom validation plus, when an extension is present, bounded
    /// confluence and classification.
    Validate {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree_bound: Option<usize>,
    },
    Classify {},
    Check {
        prop: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        gen_degree: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        middle_degree: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mode: Option<CheckMode>,
    },
    Ac {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        side: Option<Side>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        strategy: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bounds: Option<DegreeBounds>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pool_degree: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_set_size: Option<usize>,
        /// Explicit generator set; absent means sweep the degree-bounded
        /// pool.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generators: Option<Vec<Vec<TermBlock>>>,
        /// Extra candidate witnesses for the heuristic strategy.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        extras: Option<Vec<Vec<TermBlock>>>,
    },
    Theorems {
        suite: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        escalate: Option<bool>,
    },
}

/// A resolved task, ready to run.
#[derive(Debug, Clone, PartialEq)]
pub enum Task {
    Validate {
        degree_bound: usize,
    },
    Classify,
    CheckSa1 {
        gen_degree: usize,
        mode: CheckMode,
    },
    CheckQuasiArmendariz {
        gen_degree: usize,
        middle_degree: usize,
        mode: CheckMode,
    },
    CheckCompatibility,
    Ac {
        side: Side,
        strategy: AcStrategy,
        bounds: DegreeBounds,
        pool_degree: usize,
        max_set_size: usize,
        generators: Option<Vec<SkewPoly>>,
        extras: Vec<SkewPoly>,
    },
    Theorems {
        suite: SuiteId,
        escalate: bool,
    },
}

/// A fully resolved scenario. The raw document is kept for canonical
/// emission.
pub struct Scenario {
    pub doc: ScenarioDoc,
    pub ring: Arc<FiniteRing>,
    /// Validated-shape map tables by name (laws are checked at use sites).
    pub maps: BTreeMap<String, Vec<Elem>>,
    pub extension: Option<Arc<ExtensionSpec>>,
    pub tasks: Vec<Task>,
}

impl Scenario {
    pub fn name(&self) -> &str {
        &self.doc.name
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let clamped = offset.min(text.len());
    let line = text[..clamped].bytes().filter(|&b| b == b'\n').count() + 1;
    let column = text[..clamped]
        .rfind('\n')
        .map(|p| clamped - p)
        .unwrap_or(clamped + 1);
    (line, column)
}

fn ring_descriptor(block: &RingBlock) -> Result<RingDescriptor, ScenarioError> {
    let kind = block.kind.as_str();
    let need = |field: &'static str, v: Option<usize>| {
        v.ok_or(ScenarioError::MissingRingField {
            kind: kind.to_string(),
            field,
        })
    };
    match kind {
        "zmod" => Ok(RingDescriptor::Zmod {
            n: need("n", block.n)?,
        }),
        "gf" => Ok(RingDescriptor::Gf {
            p: need("p", block.p)?,
            k: need("k", block.k)?,
        }),
        "trunc_poly" => Ok(RingDescriptor::TruncPoly {
            p: need("p", block.p)?,
            m: need("m", block.m)?,
        }),
        "matrix" => {
            let base = block
                .base
                .as_ref()
                .ok_or(ScenarioError::MissingRingField {
                    kind: kind.to_string(),
                    field: "base",
                })?;
            Ok(RingDescriptor::Matrix {
                base: Box::new(ring_descriptor(base)?),
                k: need("k", block.k)?,
            })
        }
        "product" => {
            let factors = block
                .factors
                .as_ref()
                .ok_or(ScenarioError::MissingRingField {
                    kind: kind.to_string(),
                    field: "factors",
                })?;
            let factors = factors
                .iter()
                .map(ring_descriptor)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(RingDescriptor::Product { factors })
        }
        "table" => {
            let t = block.table.as_ref().ok_or(ScenarioError::MissingRingField {
                kind: kind.to_string(),
                field: "table",
            })?;
            Ok(RingDescriptor::Table {
                name: t.name.clone(),
                order: t.order,
                zero: t.zero,
                one: t.one,
                add: t.add.clone(),
                mul: t.mul.clone(),
                decomposition: t.decomposition.iter().map(|&[g, o]| (g, o)).collect(),
                elem_names: None,
            })
        }
        other => Err(ScenarioError::UnknownRingConstructor {
            kind: other.to_string(),
        }),
    }
}

fn resolve_maps(
    ring: &FiniteRing,
    blocks: &BTreeMap<String, MapBlock>,
) -> Result<BTreeMap<String, Vec<Elem>>, ScenarioError> {
    let mut out = BTreeMap::new();
    for (name, block) in blocks {
        let table = match (&block.builtin, &block.table) {
            (Some(builtin), None) => match builtin.as_str() {
                "identity" => identity_table(ring),
                "zero" => zero_table(ring),
                "frobenius" => frobenius_table(ring)?,
                "formal_derivative" => formal_derivative_table(ring)?,
                "swap" => swap_table(ring)?,
                other => {
                    return Err(ScenarioError::UnresolvedMapReference {
                        name: other.to_string(),
                    })
                }
            },
            (None, Some(table)) => {
                if table.len() != ring.order() {
                    return Err(MapError::TableLength {
                        got: table.len(),
                        expected: ring.order(),
                    }
                    .into());
                }
                if let Some(&entry) = table.iter().find(|&&e| e >= ring.order()) {
                    return Err(MapError::EntryRange {
                        entry,
                        order: ring.order(),
                    }
                    .into());
                }
                table.clone()
            }
            _ => {
                return Err(ScenarioError::MapShape {
                    name: name.clone(),
                })
            }
        };
        out.insert(name.clone(), table);
    }
    Ok(out)
}

fn named_table(
    ring: &FiniteRing,
    maps: &BTreeMap<String, Vec<Elem>>,
    name: &str,
) -> Result<Vec<Elem>, ScenarioError> {
    if let Some(t) = maps.get(name) {
        return Ok(t.clone());
    }
    match name {
        "identity" => Ok(identity_table(ring)),
        "zero" => Ok(zero_table(ring)),
        _ => Err(ScenarioError::UnresolvedMapReference {
            name: name.to_string(),
        }),
    }
}

fn resolve_extension(
    doc_name: &str,
    block: &ExtensionBlock,
    ring: &Arc<FiniteRing>,
    maps: &BTreeMap<String, Vec<Elem>>,
) -> Result<Arc<ExtensionSpec>, ScenarioError> {
    match (&block.catalog, block.n) {
        (Some(catalog), None) => {
            let params = toml::Value::Table(block.params.clone().unwrap_or_default());
            Ok(build_catalog_example(catalog, ring, maps, &params)?)
        }
        (None, Some(n)) => {
            let names =
                |given: &Option<Vec<String>>, default: &str| -> Vec<String> {
                    given
                        .clone()
                        .unwrap_or_else(|| vec![default.to_string(); n])
                };
            let sigma_names = names(&block.sigma, "identity");
            let delta_names = names(&block.delta, "zero");
            let arity = |what: &'static str, got: usize| {
                ScenarioError::Syntax {
                    line: 0,
                    column: 0,
                    message: format!("{what} names have length {got}, expected {n}"),
                }
            };
            if sigma_names.len() != n {
                return Err(arity("sigma", sigma_names.len()));
            }
            if delta_names.len() != n {
                return Err(arity("delta", delta_names.len()));
            }
            let mut sigma_maps = Vec::new();
            for name in &sigma_names {
                let table = named_table(ring, maps, name)?;
                sigma_maps.push(validate_endomorphism(ring, table, name.as_str())?);
            }
            let family = SigmaFamily::new(ring, sigma_maps);
            let mut deltas = Vec::new();
            for (i, name) in delta_names.iter().enumerate() {
                let table = named_table(ring, maps, name)?;
                deltas.push(validate_sigma_derivation(
                    ring,
                    family.map(i),
                    table,
                    name.as_str(),
                )?);
            }
            let mut by_pair: BTreeMap<(usize, usize), QuadRelation> = BTreeMap::new();
            for rel in &block.relations {
                let [i, j] = rel.pair;
                if i == 0 || j == 0 || i >= j || j > n {
                    return Err(ScenarioError::BadRelationPair { i, j, n });
                }
                if by_pair.contains_key(&(i, j)) {
                    return Err(ScenarioError::DuplicateRelation { i, j });
                }
                let linear = match &rel.linear {
                    Some(v) if v.len() == n => v.clone(),
                    Some(v) => {
                        return Err(ScenarioError::BadLinearLength {
                            i,
                            j,
                            got: v.len(),
                            expected: n,
                        })
                    }
                    None => vec![ring.zero(); n],
                };
                by_pair.insert(
                    (i, j),
                    QuadRelation {
                        d: rel.d,
                        linear,
                        constant: rel.constant,
                    },
                );
            }
            let relations = crate::spbw::var_pairs(n)
                .map(|(i, j)| {
                    by_pair
                        .remove(&(i + 1, j + 1))
                        .unwrap_or_else(|| QuadRelation::commuting(ring, n))
                })
                .collect();
            Ok(ExtensionSpec::new(
                format!("{doc_name} extension"),
                ring,
                family,
                deltas,
                relations,
            )?)
        }
        _ => Err(ScenarioError::ExtensionShape),
    }
}

fn poly_literal(
    ext: &Arc<ExtensionSpec>,
    terms: &[TermBlock],
) -> Result<SkewPoly, ScenarioError> {
    let n = ext.n();
    let order = ext.ring().order();
    let mut pairs = Vec::new();
    for term in terms {
        if term.exp.len() != n {
            return Err(ScenarioError::MalformedExponentVector {
                detail: format!(
                    "exponent vector {:?} has length {}, expected {n}",
                    term.exp,
                    term.exp.len()
                ),
            });
        }
        if term.coeff >= order {
            return Err(ScenarioError::CoefficientRange {
                value: term.coeff,
                order,
            });
        }
        pairs.push((term.exp.clone(), term.coeff));
    }
    Ok(SkewPoly::from_pairs(ext, pairs))
}

fn resolve_tasks(
    doc: &ScenarioDoc,
    extension: &Option<Arc<ExtensionSpec>>,
) -> Result<Vec<Task>, ScenarioError> {
    let mut out = Vec::new();
    for (index, block) in doc.tasks.iter().enumerate() {
        let need_ext = |kind: &str| -> Result<&Arc<ExtensionSpec>, ScenarioError> {
            extension.as_ref().ok_or(ScenarioError::TaskNeedsExtension {
                index: index + 1,
                kind: kind.to_string(),
            })
        };
        let task = match block {
            TaskBlock::Validate { degree_bound } => Task::Validate {
                degree_bound: degree_bound.unwrap_or(3),
            },
            TaskBlock::Classify {} => Task::Classify,
            TaskBlock::Check {
                prop,
                gen_degree,
                middle_degree,
                mode,
            } => {
                need_ext("check")?;
                let mode = mode.unwrap_or(CheckMode::Exhaustive);
                match prop.as_str() {
                    "sa1" => Task::CheckSa1 {
                        gen_degree: gen_degree.unwrap_or(2),
                        mode,
                    },
                    "quasi_armendariz" => Task::CheckQuasiArmendariz {
                        gen_degree: gen_degree.unwrap_or(1),
                        middle_degree: middle_degree.unwrap_or(2),
                        mode,
                    },
                    "compatibility" => Task::CheckCompatibility,
                    other => {
                        return Err(ScenarioError::UnknownProperty {
                            index: index + 1,
                            prop: other.to_string(),
                        })
                    }
                }
            }
            TaskBlock::Ac {
                side,
                strategy,
                bounds,
                pool_degree,
                max_set_size,
                generators,
                extras,
            } => {
                let ext = need_ext("ac")?;
                let strategy = match strategy.as_deref() {
                    None | Some("heuristic") => AcStrategy::Heuristic,
                    Some("exhaustive") => AcStrategy::Exhaustive,
                    Some(other) => {
                        return Err(ScenarioError::Syntax {
                            line: 0,
                            column: 0,
                            message: format!(
                                "task {}: unknown strategy {other:?} (expected exhaustive or heuristic)",
                                index + 1
                            ),
                        })
                    }
                };
                let generators = generators
                    .as_ref()
                    .map(|sets| {
                        sets.iter()
                            .map(|terms| poly_literal(ext, terms))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .transpose()?;
                let extras = extras
                    .as_ref()
                    .map(|polys| {
                        polys
                            .iter()
                            .map(|terms| poly_literal(ext, terms))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .transpose()?
                    .unwrap_or_default();
                Task::Ac {
                    side: side.unwrap_or(Side::Right),
                    strategy,
                    bounds: bounds.unwrap_or_default(),
                    pool_degree: pool_degree.unwrap_or(1),
                    max_set_size: max_set_size.unwrap_or(2),
                    generators,
                    extras,
                }
            }
            TaskBlock::Theorems { suite, escalate } => {
                need_ext("theorems")?;
                let suite = SuiteId::parse(suite).ok_or(ScenarioError::UnknownSuite {
                    index: index + 1,
                    suite: suite.clone(),
                })?;
                Task::Theorems {
                    suite,
                    escalate: escalate.unwrap_or(true),
                }
            }
        };
        out.push(task);
    }
    Ok(out)
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let doc: ScenarioDoc = toml::from_str(text).map_err(|e| {
        let (line, column) = e
            .span()
            .map(|s| line_col(text, s.start))
            .unwrap_or((0, 0));
        ScenarioError::Syntax {
            line,
            column,
            message: e.message().to_string(),
        }
    })?;
    let descriptor = ring_descriptor(&doc.ring)?;
    let ring = Arc::new(build_ring(&descriptor, &BuildCaps::default())?);
    let maps = resolve_maps(&ring, &doc.maps)?;
    let extension = doc
        .extension
        .as_ref()
        .map(|block| resolve_extension(&doc.name, block, &ring, &maps))
        .transpose()?;
    let tasks = resolve_tasks(&doc, &extension)?;
    Ok(Scenario {
        doc,
        ring,
        maps,
        extension,
        tasks,
    })
}

/// Canonical emission: serializing the raw document in declaration order.
/// Parsing the output yields an identical document.
pub fn canonical_text(doc: &ScenarioDoc) -> String {
    toml::to_string(doc).expect("scenario documents serialize to TOML")
}
