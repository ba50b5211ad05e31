//! Exhaustive ring-axiom validation with explicit witnesses.
//!
//! Every axiom is checked over all element tuples it quantifies; the first
//! failing tuple per axiom is recorded (scan order is ascending indices, so
//! reports are deterministic).

use super::{Elem, FiniteRing};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RingAxiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    AddInverse,
    MulAssociative,
    OneIdentity,
    LeftDistributive,
    RightDistributive,
    DecompositionCovers,
}

/// One failed axiom with the elements that break it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingViolation {
    pub axiom: RingAxiom,
    pub witness: Vec<Elem>,
    /// The failing equation, rendered with element names.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct ValidationReport {
    pub violations: Vec<RingViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the full axiom list: additive abelian group, associative
/// multiplication, two-sided identity, both distributive laws, and that the
/// additive decomposition enumerates every element exactly once.
pub fn validate_ring_axioms(ring: &FiniteRing) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = ring.order();
    let zero = ring.zero();
    let one = ring.one();
    let name = |e: Elem| ring.elem_name(e);

    'add_assoc: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = ring.add(ring.add(a, b), c);
                let rhs = ring.add(a, ring.add(b, c));
                if lhs != rhs {
                    report.violations.push(RingViolation {
                        axiom: RingAxiom::AddAssociative,
                        witness: vec![a, b, c],
                        detail: format!(
                            "({}+{})+{} = {} but {}+({}+{}) = {}",
                            name(a), name(b), name(c), name(lhs),
                            name(a), name(b), name(c), name(rhs)
                        ),
                    });
                    break 'add_assoc;
                }
            }
        }
    }

    'add_comm: for a in 0..n {
        for b in (a + 1)..n {
            if ring.add(a, b) != ring.add(b, a) {
                report.violations.push(RingViolation {
                    axiom: RingAxiom::AddCommutative,
                    witness: vec![a, b],
                    detail: format!(
                        "{}+{} = {} but {}+{} = {}",
                        name(a), name(b), name(ring.add(a, b)),
                        name(b), name(a), name(ring.add(b, a))
                    ),
                });
                break 'add_comm;
            }
        }
    }

    for a in 0..n {
        if ring.add(a, zero) != a || ring.add(zero, a) != a {
            report.violations.push(RingViolation {
                axiom: RingAxiom::AddIdentity,
                witness: vec![a],
                detail: format!(
                    "{}+0 = {} and 0+{} = {}",
                    name(a), name(ring.add(a, zero)), name(a), name(ring.add(zero, a))
                ),
            });
            break;
        }
    }

    for a in 0..n {
        if !(0..n).any(|b| ring.add(a, b) == zero) {
            report.violations.push(RingViolation {
                axiom: RingAxiom::AddInverse,
                witness: vec![a],
                detail: format!("{} has no additive inverse", name(a)),
            });
            break;
        }
    }

    'mul_assoc: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = ring.mul(ring.mul(a, b), c);
                let rhs = ring.mul(a, ring.mul(b, c));
                if lhs != rhs {
                    report.violations.push(RingViolation {
                        axiom: RingAxiom::MulAssociative,
                        witness: vec![a, b, c],
                        detail: format!(
                            "({}*{})*{} = {} but {}*({}*{}) = {}",
                            name(a), name(b), name(c), name(lhs),
                            name(a), name(b), name(c), name(rhs)
                        ),
                    });
                    break 'mul_assoc;
                }
            }
        }
    }

    for a in 0..n {
        if ring.mul(a, one) != a || ring.mul(one, a) != a {
            report.violations.push(RingViolation {
                axiom: RingAxiom::OneIdentity,
                witness: vec![a],
                detail: format!(
                    "{}*1 = {} and 1*{} = {}",
                    name(a), name(ring.mul(a, one)), name(a), name(ring.mul(one, a))
                ),
            });
            break;
        }
    }

    'ldist: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = ring.mul(a, ring.add(b, c));
                let rhs = ring.add(ring.mul(a, b), ring.mul(a, c));
                if lhs != rhs {
                    report.violations.push(RingViolation {
                        axiom: RingAxiom::LeftDistributive,
                        witness: vec![a, b, c],
                        detail: format!(
                            "{}*({}+{}) = {} but {}*{}+{}*{} = {}",
                            name(a), name(b), name(c), name(lhs),
                            name(a), name(b), name(a), name(c), name(rhs)
                        ),
                    });
                    break 'ldist;
                }
            }
        }
    }

    'rdist: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = ring.mul(ring.add(a, b), c);
                let rhs = ring.add(ring.mul(a, c), ring.mul(b, c));
                if lhs != rhs {
                    report.violations.push(RingViolation {
                        axiom: RingAxiom::RightDistributive,
                        witness: vec![a, b, c],
                        detail: format!(
                            "({}+{})*{} = {} but {}*{}+{}*{} = {}",
                            name(a), name(b), name(c), name(lhs),
                            name(a), name(c), name(b), name(c), name(rhs)
                        ),
                    });
                    break 'rdist;
                }
            }
        }
    }

    // the decomposition box must enumerate each element exactly once
    let box_size: usize = ring.decomposition().iter().map(|&(_, m)| m).product();
    if box_size != n {
        report.violations.push(RingViolation {
            axiom: RingAxiom::DecompositionCovers,
            witness: vec![],
            detail: format!(
                "decomposition box has {box_size} coordinate tuples for {n} elements"
            ),
        });
    } else {
        let mut seen = vec![false; n];
        let mut coords = vec![0usize; ring.decomposition().len()];
        let mut dup = None;
        'outer: loop {
            let e = ring.from_coords(&coords);
            if seen[e] {
                dup = Some(e);
                break;
            }
            seen[e] = true;
            let mut i = 0;
            loop {
                if i == coords.len() {
                    break 'outer;
                }
                coords[i] += 1;
                if coords[i] < ring.decomposition()[i].1 {
                    break;
                }
                coords[i] = 0;
                i += 1;
            }
        }
        if let Some(e) = dup {
            report.violations.push(RingViolation {
                axiom: RingAxiom::DecompositionCovers,
                witness: vec![e],
                detail: format!("element {} reached by two coordinate tuples", name(e)),
            });
        }
    }

    report
}
