//! Skew polynomial extensions with a Poincaré-Birkhoff-Witt basis.
//!
//! An [`ExtensionSpec`] presents a ring A = R⟨x_1..x_n⟩ by commutation data
//! over a finite coefficient ring R:
//!
//! * x_i·r = σ_i(r)·x_i + δ_i(r) for r ∈ R,
//! * x_j·x_i = d·x_i·x_j + Σ_k c_k·x_k + c_0 for i < j, with d ≠ 0.
//!
//! Elements of A are [`SkewPoly`] values: left-coefficient combinations of
//! standard monomials x_1^{a_1}…x_n^{a_n}, kept in normal form by the
//! rewriting engine. Whether the presentation really yields a free module
//! with that basis is certified (boundedly) by the confluence check in
//! [`validate_extension`].

mod engine;
mod oracle;
mod validate;

pub use engine::{monomial_product, scalar_commutation, DecompResult};
pub use oracle::expand_prop29;
pub use validate::{validate_extension, ConfluenceWitness, ExtensionReport};

use crate::finring::{Elem, FiniteRing};
use crate::ringmaps::{SigmaDerivation, SigmaFamily};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

/// Exponent vector of a standard monomial; index i is the power of x_{i+1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<usize>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn deg(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn plus(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }

    pub fn plus_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    pub fn minus_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] -= 1;
        Monomial(e)
    }

    /// Largest variable index with nonzero exponent.
    pub fn max_var(&self) -> Option<usize> {
        (0..self.0.len()).rev().find(|&i| self.0[i] > 0)
    }
}

/// Degree first; ties by the exponent of the highest variable downwards
/// (x_1 < x_2 < … < x_n).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.deg()
            .cmp(&other.deg())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if a == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, a)?;
            }
        }
        Ok(())
    }
}

/// The quadratic relation x_j·x_i = d·x_i·x_j + Σ_k linear[k]·x_{k+1} +
/// constant, for a pair i < j.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadRelation {
    pub d: Elem,
    pub linear: Vec<Elem>,
    pub constant: Elem,
}

impl QuadRelation {
    /// Plain commutation: x_j·x_i = x_i·x_j.
    pub fn commuting(ring: &FiniteRing, n: usize) -> QuadRelation {
        QuadRelation {
            d: ring.one(),
            linear: vec![ring.zero(); n],
            constant: ring.zero(),
        }
    }
}

/// Pairs (i, j) with i < j in lexicographic order; the order of the
/// `relations` argument to [`ExtensionSpec::new`].
pub fn var_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| (i, j)))
}

/// All exponent vectors in n variables with total degree ≤ max_deg, in
/// ascending order.
pub fn monomials_up_to(n: usize, max_deg: usize) -> Vec<Monomial> {
    fn rec(n: usize, budget: usize, prefix: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if prefix.len() == n {
            out.push(Monomial(prefix.clone()));
            return;
        }
        for a in 0..=budget {
            prefix.push(a);
            rec(n, budget - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_deg, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("coefficient d for the pair (x{}, x{}) is zero", i + 1, j + 1)]
    ZeroD { i: usize, j: usize },
    #[error("expected {expected} quadratic relations for {n} variables, got {got}")]
    RelationCount { n: usize, expected: usize, got: usize },
    #[error("{sigmas} endomorphisms vs {deltas} derivations; counts must match")]
    ArityMismatch { sigmas: usize, deltas: usize },
    #[error("derivation {} is twisted by a map that is not sigma {}", i + 1, i + 1)]
    SigmaMismatch { i: usize },
    #[error("element index {elem} out of range for a ring of order {order}")]
    ElemRange { elem: Elem, order: usize },
    #[error("scalar commutation of zero is undefined; decompose r = 0 directly")]
    ZeroScalar,
    #[error("monomial-product leading coefficient {c} has no left inverse")]
    NotLeftInvertible { c: Elem },
}

type Terms = BTreeMap<Monomial, Elem>;

#[derive(Default)]
struct EngineCaches {
    /// Normal form of x^α·r.
    scalar: RwLock<HashMap<(Monomial, Elem), Terms>>,
    /// Normal form of x^α·x_i.
    push: RwLock<HashMap<(Monomial, usize), Terms>>,
    /// Normal form of x^α·x^β.
    mono: RwLock<HashMap<(Monomial, Monomial), Terms>>,
}

/// A validated presentation of a skew polynomial extension.
pub struct ExtensionSpec {
    name: String,
    ring: Arc<FiniteRing>,
    n: usize,
    sigmas: SigmaFamily,
    deltas: Vec<SigmaDerivation>,
    /// Indexed by [`var_pairs`] order.
    relations: Vec<QuadRelation>,
    caches: EngineCaches,
}

impl fmt::Debug for ExtensionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtensionSpec")
            .field("name", &self.name)
            .field("ring", &self.ring.name())
            .field("n", &self.n)
            .finish_non_exhaustive()
    }
}

impl ExtensionSpec {
    /// Builds a presentation. The maps must already be validated; this
    /// checks arities, that each δ_i is twisted by σ_i, element ranges, and
    /// that every d coefficient is nonzero.
    pub fn new(
        name: impl Into<String>,
        ring: &Arc<FiniteRing>,
        sigmas: SigmaFamily,
        deltas: Vec<SigmaDerivation>,
        relations: Vec<QuadRelation>,
    ) -> Result<Arc<ExtensionSpec>, SpecError> {
        let n = sigmas.n();
        if deltas.len() != n {
            return Err(SpecError::ArityMismatch {
                sigmas: n,
                deltas: deltas.len(),
            });
        }
        for (i, delta) in deltas.iter().enumerate() {
            if delta.sigma() != sigmas.map(i) {
                return Err(SpecError::SigmaMismatch { i });
            }
        }
        let expected = n * (n - 1) / 2;
        if relations.len() != expected {
            return Err(SpecError::RelationCount {
                n,
                expected,
                got: relations.len(),
            });
        }
        for (rel, (i, j)) in relations.iter().zip(var_pairs(n)) {
            if rel.d == ring.zero() {
                return Err(SpecError::ZeroD { i, j });
            }
            for &e in [rel.d, rel.constant].iter().chain(rel.linear.iter()) {
                if e >= ring.order() {
                    return Err(SpecError::ElemRange {
                        elem: e,
                        order: ring.order(),
                    });
                }
            }
            if rel.linear.len() != n {
                return Err(SpecError::RelationCount {
                    n,
                    expected: n,
                    got: rel.linear.len(),
                });
            }
        }
        Ok(Arc::new(ExtensionSpec {
            name: name.into(),
            ring: Arc::clone(ring),
            n,
            sigmas,
            deltas,
            relations,
            caches: EngineCaches::default(),
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigmas(&self) -> &SigmaFamily {
        &self.sigmas
    }

    pub fn deltas(&self) -> &[SigmaDerivation] {
        &self.deltas
    }

    pub fn relation(&self, i: usize, j: usize) -> &QuadRelation {
        debug_assert!(i < j && j < self.n);
        let idx = var_pairs(self.n).position(|p| p == (i, j)).unwrap();
        &self.relations[idx]
    }

    pub fn relations(&self) -> &[QuadRelation] {
        &self.relations
    }
}

/// An element of the extension in canonical normal form: a left-coefficient
/// combination of standard monomials with no zero coefficients stored.
#[derive(Clone)]
pub struct SkewPoly {
    ext: Arc<ExtensionSpec>,
    terms: Terms,
}

impl PartialEq for SkewPoly {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(Arc::ptr_eq(&self.ext, &other.ext));
        self.terms == other.terms
    }
}
impl Eq for SkewPoly {}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly({self})")
    }
}

impl SkewPoly {
    pub fn zero(ext: &Arc<ExtensionSpec>) -> SkewPoly {
        SkewPoly {
            ext: Arc::clone(ext),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ext: &Arc<ExtensionSpec>, r: Elem) -> SkewPoly {
        SkewPoly::term(ext, &Monomial::one(ext.n), r)
    }

    pub fn one(ext: &Arc<ExtensionSpec>) -> SkewPoly {
        SkewPoly::constant(ext, ext.ring.one())
    }

    pub fn var(ext: &Arc<ExtensionSpec>, i: usize) -> SkewPoly {
        SkewPoly::term(ext, &Monomial::var(ext.n, i), ext.ring.one())
    }

    /// r·x^α as a polynomial.
    pub fn term(ext: &Arc<ExtensionSpec>, alpha: &Monomial, r: Elem) -> SkewPoly {
        let mut terms = BTreeMap::new();
        if r != ext.ring.zero() {
            terms.insert(alpha.clone(), r);
        }
        SkewPoly {
            ext: Arc::clone(ext),
            terms,
        }
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, summing
    /// repeats and pruning zeros.
    pub fn from_pairs(
        ext: &Arc<ExtensionSpec>,
        pairs: impl IntoIterator<Item = (Vec<usize>, Elem)>,
    ) -> SkewPoly {
        let mut acc = SkewPoly::zero(ext);
        for (exps, r) in pairs {
            assert_eq!(exps.len(), ext.n);
            acc.accumulate(&Monomial(exps), r);
        }
        acc
    }

    pub fn ext(&self) -> &Arc<ExtensionSpec> {
        &self.ext
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ext.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Elem)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, alpha: &Monomial) -> Elem {
        self.terms
            .get(alpha)
            .copied()
            .unwrap_or_else(|| self.ext.ring.zero())
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; None for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.deg()).max()
    }

    pub(crate) fn accumulate(&mut self, alpha: &Monomial, r: Elem) {
        let ring = &self.ext.ring;
        if r == ring.zero() {
            return;
        }
        match self.terms.get_mut(alpha) {
            Some(c) => {
                *c = ring.add(*c, r);
                if *c == ring.zero() {
                    self.terms.remove(alpha);
                }
            }
            None => {
                self.terms.insert(alpha.clone(), r);
            }
        }
    }

    pub fn add(&self, other: &SkewPoly) -> SkewPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.accumulate(m, c);
        }
        out
    }

    pub fn neg(&self) -> SkewPoly {
        let ring = &self.ext.ring;
        SkewPoly {
            ext: Arc::clone(&self.ext),
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.clone(), ring.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &SkewPoly) -> SkewPoly {
        self.add(&other.neg())
    }

    /// r·f (left module action).
    pub fn scale_left(&self, r: Elem) -> SkewPoly {
        let ring = &self.ext.ring;
        let mut out = SkewPoly::zero(&self.ext);
        for (m, c) in self.terms() {
            out.accumulate(m, ring.mul(r, c));
        }
        out
    }

    pub(crate) fn from_terms(ext: &Arc<ExtensionSpec>, terms: Terms) -> SkewPoly {
        debug_assert!(terms.values().all(|&c| c != ext.ring.zero()));
        SkewPoly {
            ext: Arc::clone(ext),
            terms,
        }
    }
}

/// Serializes as (exponent vector, coefficient) pairs in descending order.
impl Serialize for SkewPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(&[usize], Elem)> = self
            .terms
            .iter()
            .rev()
            .map(|(m, &c)| (m.0.as_slice(), c))
            .collect();
        pairs.serialize(s)
    }
}

/// Leading data under the fixed order, with the zero conventions lm(0) = 0,
/// lc(0) = 0 (None encodes the formal zero monomial).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingData {
    pub lm: Option<Monomial>,
    pub lc: Elem,
    pub lt: Option<(Monomial, Elem)>,
    pub exp: Option<Monomial>,
    pub deg: Option<usize>,
}

pub fn leading_data(f: &SkewPoly) -> LeadingData {
    match f.terms.iter().next_back() {
        Some((m, &c)) => LeadingData {
            lm: Some(m.clone()),
            lc: c,
            lt: Some((m.clone(), c)),
            exp: Some(m.clone()),
            deg: Some(m.deg()),
        },
        None => LeadingData {
            lm: None,
            lc: f.ext.ring.zero(),
            lt: None,
            exp: None,
            deg: None,
        },
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let ring = &self.ext.ring;
        let mut first = true;
        for (m, &c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cname = ring.elem_name(c);
            let needs_parens = cname.contains('+') || cname.contains(' ');
            if m.is_one() {
                write!(f, "{cname}")?;
            } else if c == ring.one() {
                write!(f, "{m}")?;
            } else if needs_parens {
                write!(f, "({cname})*{m}")?;
            } else {
                write!(f, "{cname}*{m}")?;
            }
        }
        Ok(())
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_orders_by_degree_then_top_variable() {
        let m = |v: Vec<usize>| Monomial(v);
        assert!(m(vec![2, 0]) < m(vec![1, 1]));
        assert!(m(vec![1, 1]) < m(vec![0, 2]));
        assert!(m(vec![0, 2]) < m(vec![3, 0]));
        assert!(m(vec![0, 0]) < m(vec![1, 0]));
        assert_eq!(m(vec![1, 2]).cmp(&m(vec![1, 2])), std::cmp::Ordering::Equal);
    }

    #[test]
    fn leading_data_examples() {
        let ext = fixtures::quantum_plane_f3();
        // f = 2·x1·x2² + x1
        let f = SkewPoly::from_pairs(&ext, [(vec![1, 2], 2), (vec![1, 0], 1)]);
        let ld = leading_data(&f);
        assert_eq!(ld.lm, Some(Monomial(vec![1, 2])));
        assert_eq!(ld.lc, 2);
        assert_eq!(ld.deg, Some(3));

        let zero = SkewPoly::zero(&ext);
        let ld0 = leading_data(&zero);
        assert_eq!(ld0.lm, None);
        assert_eq!(ld0.lc, 0);
        assert_eq!(ld0.deg, None);

        let c = SkewPoly::constant(&ext, 2);
        let ldc = leading_data(&c);
        assert_eq!(ldc.lm, Some(Monomial::one(2)));
        assert_eq!(ldc.deg, Some(0));
    }

    #[test]
    fn addition_prunes_cancelled_terms() {
        let ext = fixtures::z4_poly();
        let f = SkewPoly::from_pairs(&ext, [(vec![1], 2), (vec![0], 1)]);
        let g = SkewPoly::from_pairs(&ext, [(vec![1], 2), (vec![0], 3)]);
        let sum = f.add(&g);
        assert!(sum.is_zero());
        assert_eq!(f.sub(&f), SkewPoly::zero(&ext));
    }

    #[test]
    fn display_is_deglex_descending() {
        let ext = fixtures::quantum_plane_f3();
        let f = SkewPoly::from_pairs(&ext, [(vec![1, 0], 1), (vec![1, 2], 2), (vec![0, 0], 1)]);
        assert_eq!(f.to_string(), "2*x1*x2^2 + x1 + 1");
    }

    #[test]
    fn zero_d_is_rejected() {
        let ring = Arc::new(crate::finring::build::zmod(3));
        let id = crate::ringmaps::RingMap::identity(&ring);
        let sigmas = SigmaFamily::new(&ring, vec![id.clone(), id]);
        let deltas = vec![
            SigmaDerivation::zero(&ring, sigmas.map(0)),
            SigmaDerivation::zero(&ring, sigmas.map(1)),
        ];
        let rel = QuadRelation {
            d: 0,
            linear: vec![0, 0],
            constant: 0,
        };
        assert_eq!(
            ExtensionSpec::new("bad", &ring, sigmas, deltas, vec![rel]).unwrap_err(),
            SpecError::ZeroD { i: 0, j: 1 }
        );
    }
}
