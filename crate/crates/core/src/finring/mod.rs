//! Exact finite-ring core.
//!
//! A [`FiniteRing`] is a finite associative unital ring given by dense
//! element-indexed addition and multiplication tables plus a decomposition of
//! its additive group into cyclic summands. Elements are plain indices
//! (`Elem`) into those tables; all arithmetic is table lookup, all predicates
//! are exhaustive scans.

pub mod build;
mod ideals;
mod predicates;
mod validate;

pub use build::{build_ring, BuildCaps, BuildError, RingDescriptor};
pub use ideals::{enumerate_ideals, ideal_closure, IdealSide, IDEAL_ENUMERATION_CAP};
pub use predicates::{
    classify_ring, idempotent_sets, nil_structure, ring_ac_exact, AcExactReport, ClassifyReport,
    IdempotentReport, NilReport,
};
pub use validate::{validate_ring_axioms, RingAxiom, RingViolation, ValidationReport};

use std::collections::BTreeSet;

/// An element of a [`FiniteRing`], i.e. an index into its tables.
pub type Elem = usize;

/// A finite associative unital ring presented by explicit operation tables.
///
/// Invariants (checked by [`validate_ring_axioms`], not by construction):
/// the addition table is a commutative group table with identity `zero`, the
/// multiplication table is associative with two-sided identity `one` and
/// distributes over addition, and `decomposition` presents the additive group
/// as a direct sum of cyclic subgroups so that every element is a unique
/// reduced integer combination of the listed generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    order: usize,
    zero: Elem,
    one: Elem,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    /// (generator, additive order) pairs presenting the additive group.
    decomposition: Vec<(Elem, usize)>,
    /// Per-element display names (residues, pairs, matrices, polynomials).
    elem_names: Vec<String>,
    /// The descriptor this ring was built from, when built by a constructor.
    descriptor: Option<RingDescriptor>,
}

impl FiniteRing {
    /// Builds a ring directly from tables. Only shapes are checked here; run
    /// [`validate_ring_axioms`] to check the algebra.
    pub fn from_tables(
        name: impl Into<String>,
        order: usize,
        zero: Elem,
        one: Elem,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        decomposition: Vec<(Elem, usize)>,
    ) -> Result<Self, ShapeError> {
        if order == 0 {
            return Err(ShapeError::EmptyRing);
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(ShapeError::TableSize {
                expected: order * order,
                add: add.len(),
                mul: mul.len(),
            });
        }
        if zero >= order || one >= order {
            return Err(ShapeError::ConstantOutOfRange { zero, one, order });
        }
        if let Some(&bad) = add.iter().chain(mul.iter()).find(|&&e| e >= order) {
            return Err(ShapeError::EntryOutOfRange { entry: bad, order });
        }
        if let Some(&(g, _)) = decomposition.iter().find(|&&(g, _)| g >= order) {
            return Err(ShapeError::EntryOutOfRange { entry: g, order });
        }
        if decomposition.iter().any(|&(_, m)| m == 0) {
            return Err(ShapeError::ZeroAdditiveOrder);
        }
        let elem_names = (0..order).map(|e| e.to_string()).collect();
        Ok(FiniteRing {
            name: name.into(),
            order,
            zero,
            one,
            add,
            mul,
            decomposition,
            elem_names,
            descriptor: None,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn descriptor(&self) -> Option<&RingDescriptor> {
        self.descriptor.as_ref()
    }

    /// The additive-group decomposition as (generator, additive order) pairs.
    pub fn decomposition(&self) -> &[(Elem, usize)] {
        &self.decomposition
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        0..self.order
    }

    pub fn elem_name(&self, a: Elem) -> &str {
        &self.elem_names[a]
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b]
    }

    /// Additive inverse, by row scan. Panics if none exists (invalid table).
    pub fn neg(&self, a: Elem) -> Elem {
        self.elements()
            .find(|&b| self.add(a, b) == self.zero)
            .unwrap_or_else(|| panic!("element {a} has no additive inverse"))
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// a^k with a^0 = 1.
    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        let mut acc = self.one;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// n·a = a + a + ... + a (n summands), with 0·a = 0.
    pub fn smul(&self, n: usize, a: Elem) -> Elem {
        let mut acc = self.zero;
        for _ in 0..n {
            acc = self.add(acc, a);
        }
        acc
    }

    /// Powers cycle in a finite ring, so exponents up to `order` suffice.
    pub fn is_nilpotent(&self, a: Elem) -> bool {
        let mut p = a;
        for _ in 0..self.order {
            if p == self.zero {
                return true;
            }
            p = self.mul(p, a);
        }
        false
    }

    pub fn is_idempotent(&self, e: Elem) -> bool {
        self.mul(e, e) == e
    }

    /// Two-sided invertibility by exhaustive search.
    pub fn is_invertible(&self, a: Elem) -> bool {
        self.elements()
            .any(|u| self.mul(u, a) == self.one && self.mul(a, u) == self.one)
    }

    /// Searches for u with u·a = 1.
    pub fn left_inverse(&self, a: Elem) -> Option<Elem> {
        self.elements().find(|&u| self.mul(u, a) == self.one)
    }

    /// The characteristic, i.e. the additive order of 1.
    pub fn characteristic(&self) -> usize {
        let mut acc = self.one;
        let mut k = 1;
        while acc != self.zero {
            acc = self.add(acc, self.one);
            k += 1;
        }
        k
    }

    pub fn center(&self) -> BTreeSet<Elem> {
        self.elements()
            .filter(|&a| self.elements().all(|r| self.mul(a, r) == self.mul(r, a)))
            .collect()
    }

    /// Coordinates of `a` over the additive decomposition, reduced mod the
    /// listed orders. Returns `None` when the decomposition does not generate
    /// the element uniquely (an invalid presentation).
    pub fn decomp_coords(&self, a: Elem) -> Option<Vec<usize>> {
        self.coords_table().get(a).and_then(|c| c.clone())
    }

    /// Element represented by the given decomposition coordinates.
    pub fn from_coords(&self, coords: &[usize]) -> Elem {
        assert_eq!(coords.len(), self.decomposition.len());
        let mut acc = self.zero;
        for (&c, &(g, m)) in coords.iter().zip(&self.decomposition) {
            acc = self.add(acc, self.smul(c % m, g));
        }
        acc
    }

    fn coords_table(&self) -> Vec<Option<Vec<usize>>> {
        let mut table: Vec<Option<Vec<usize>>> = vec![None; self.order];
        let mut coords = vec![0usize; self.decomposition.len()];
        loop {
            let e = self.from_coords(&coords);
            if table[e].is_none() {
                table[e] = Some(coords.clone());
            }
            // odometer over the coordinate box
            let mut i = 0;
            loop {
                if i == coords.len() {
                    return table;
                }
                coords[i] += 1;
                if coords[i] < self.decomposition[i].1 {
                    break;
                }
                coords[i] = 0;
                i += 1;
            }
        }
    }

    pub(crate) fn with_meta(
        mut self,
        names: Vec<String>,
        descriptor: RingDescriptor,
    ) -> FiniteRing {
        assert_eq!(names.len(), self.order);
        self.elem_names = names;
        self.descriptor = Some(descriptor);
        self
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum ShapeError {
    #[error("a ring must have at least one element")]
    EmptyRing,
    #[error("tables must have order^2 = {expected} entries (add: {add}, mul: {mul})")]
    TableSize { expected: usize, add: usize, mul: usize },
    #[error("zero ({zero}) and one ({one}) must be element indices below {order}")]
    ConstantOutOfRange { zero: Elem, one: Elem, order: usize },
    #[error("table entry {entry} is not an element index below {order}")]
    EntryOutOfRange { entry: Elem, order: usize },
    #[error("additive decomposition lists a generator of order 0")]
    ZeroAdditiveOrder,
}

/// A subset of a ring's elements, kept sorted for canonical display and
/// comparison. Used for annihilators, ideals, nilpotent sets and idempotent
/// classes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default, serde::Serialize)]
#[serde(transparent)]
pub struct RingSubset {
    pub members: BTreeSet<Elem>,
}

impl RingSubset {
    pub fn new(members: BTreeSet<Elem>) -> Self {
        RingSubset { members }
    }

    pub fn from_iter(iter: impl IntoIterator<Item = Elem>) -> Self {
        RingSubset {
            members: iter.into_iter().collect(),
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(&a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().copied()
    }

    /// {a : sa = 0 for all s in members}; always a right ideal.
    pub fn right_annihilator(&self, ring: &FiniteRing) -> RingSubset {
        RingSubset::from_iter(
            ring.elements()
                .filter(|&a| self.iter().all(|s| ring.mul(s, a) == ring.zero())),
        )
    }

    /// {a : as = 0 for all s in members}; always a left ideal.
    pub fn left_annihilator(&self, ring: &FiniteRing) -> RingSubset {
        RingSubset::from_iter(
            ring.elements()
                .filter(|&a| self.iter().all(|s| ring.mul(a, s) == ring.zero())),
        )
    }

    pub fn annihilator(&self, ring: &FiniteRing, side: crate::Side) -> RingSubset {
        match side {
            crate::Side::Right => self.right_annihilator(ring),
            crate::Side::Left => self.left_annihilator(ring),
        }
    }

    pub fn is_right_ideal(&self, ring: &FiniteRing) -> bool {
        self.contains(ring.zero())
            && self
                .iter()
                .all(|a| self.iter().all(|b| self.contains(ring.add(a, b))))
            && self
                .iter()
                .all(|a| ring.elements().all(|r| self.contains(ring.mul(a, r))))
    }

    pub fn is_left_ideal(&self, ring: &FiniteRing) -> bool {
        self.contains(ring.zero())
            && self
                .iter()
                .all(|a| self.iter().all(|b| self.contains(ring.add(a, b))))
            && self
                .iter()
                .all(|a| ring.elements().all(|r| self.contains(ring.mul(r, a))))
    }

    pub fn display(&self, ring: &FiniteRing) -> String {
        let names: Vec<&str> = self.iter().map(|e| ring.elem_name(e)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

/// The principal right ideal aR = {a·r : r ∈ R} (closed under addition
/// already, by distributivity).
pub fn principal_right(ring: &FiniteRing, a: Elem) -> RingSubset {
    RingSubset::from_iter(ring.elements().map(|r| ring.mul(a, r)))
}

/// The principal left ideal Ra.
pub fn principal_left(ring: &FiniteRing, a: Elem) -> RingSubset {
    RingSubset::from_iter(ring.elements().map(|r| ring.mul(r, a)))
}
