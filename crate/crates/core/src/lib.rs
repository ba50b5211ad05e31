//! Exact workbench for skew PBW extensions over finite coefficient rings.
//!
//! Everything here is table-based and exhaustive: rings are given by explicit
//! addition/multiplication tables over element indices, ring maps are index
//! tables, and extension arithmetic is exact normal-form rewriting. Predicates
//! (Baer, p.p., p.q.-Baer, NI, 2-primal, compatibility, rigidity, annihilator
//! conditions) are decided by enumeration, with explicit caps where the search
//! space can grow.
//!
//! Module map:
//! - [`finring`]: finite rings, axiom validation, ideals, annihilators and
//!   element-level ring-class predicates.
//! - [`ringmaps`]: table-based endomorphisms, twisted derivations, composite
//!   families, compatibility and rigidity checks.
//! - [`spbw`]: presentation data for skew PBW extensions and the normal-form
//!   multiplication engine, with an independent closed-form expansion oracle.
//! - [`annlab`]: degree-bounded annihilator spaces in the extension via
//!   integer-lattice kernels, annihilator-condition witness searches, and the
//!   zero-product coefficient checks.
//! - [`scenario`], [`catalog`], [`theorems`], [`report`]: the scenario file
//!   format, the example catalog, the theorem suites and report emission used
//!   by the CLI.

pub mod annlab;
pub mod catalog;
pub mod finring;
pub mod report;
pub mod ringmaps;
pub mod scenario;
pub mod spbw;
pub mod theorems;
pub mod zlin;

/// Outcome of a computation that may refuse to run past a configured cap.
///
/// Cap overruns are an explicit status, never a silent guess.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CapStatus<T> {
    Decided(T),
    UndecidedAtCap { cap: usize, required: usize },
}

impl<T> CapStatus<T> {
    pub fn decided(&self) -> Option<&T> {
        match self {
            CapStatus::Decided(t) => Some(t),
            CapStatus::UndecidedAtCap { .. } => None,
        }
    }

    /// Unwraps a decided value; panics on a cap overrun.
    pub fn expect_decided(&self, msg: &str) -> &T {
        match self {
            CapStatus::Decided(t) => t,
            CapStatus::UndecidedAtCap { cap, required } => {
                panic!("{msg}: undecided at cap {cap} (required {required})")
            }
        }
    }
}

/// Which side a one-sided notion (annihilator, ideal, property) refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Right => write!(f, "right"),
            Side::Left => write!(f, "left"),
        }
    }
}
