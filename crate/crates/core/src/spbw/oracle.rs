//! Closed-form expansion of x^α·r, used as an independent oracle for the
//! rewriting engine.
//!
//! The expansion is
//!
//!   x^α·r = σ^α(r)·x^α
//!         + Σ_{i=1}^{n} x_1^{α_1}⋯x_{i-1}^{α_{i-1}} · B_i ·
//!           x_{i+1}^{α_{i+1}}⋯x_n^{α_n}
//!
//! with B_i = Σ_{j=1}^{α_i} x_i^{α_i-j} · δ_i(σ_i^{j-1}(s_i)) · x_i^{j-1}
//! and s_i = σ_{i+1}^{α_{i+1}}(⋯σ_n^{α_n}(r)⋯).
//!
//! The head term is written down directly and every other summand touches
//! the engine only through commutations of strictly smaller degree and
//! in-order monomial concatenations, so agreement with the engine's own
//! x^α·r at degree d is evidence from independently assembled degree < d
//! pieces.

use super::{ExtensionSpec, Monomial, SkewPoly};
use crate::finring::Elem;
use std::sync::Arc;

/// Evaluates the closed-form sum for x^α·r.
pub fn expand_prop29(ext: &Arc<ExtensionSpec>, alpha: &Monomial, r: Elem) -> SkewPoly {
    let ring = ext.ring();
    let n = ext.n();
    debug_assert_eq!(alpha.0.len(), n);
    let mut out = SkewPoly::term(ext, alpha, ext.sigmas().apply_composite(&alpha.0, r));
    for i in 0..n {
        if alpha.0[i] == 0 {
            continue;
        }
        let mut above = vec![0; n];
        above[(i + 1)..].copy_from_slice(&alpha.0[(i + 1)..]);
        let s_i = ext.sigmas().apply_composite(&above, r);

        let mut bracket = SkewPoly::zero(ext);
        let mut twisted = s_i;
        for j in 1..=alpha.0[i] {
            let coeff = ext.deltas()[i].apply(twisted);
            let left = SkewPoly::term(ext, &power(n, i, alpha.0[i] - j), ring.one());
            let mid = SkewPoly::constant(ext, coeff);
            let right = SkewPoly::term(ext, &power(n, i, j - 1), ring.one());
            bracket = bracket.add(&left.mul(&mid).mul(&right));
            twisted = ext.sigmas().map(i).apply(twisted);
        }

        let mut pre = vec![0; n];
        pre[..i].copy_from_slice(&alpha.0[..i]);
        let prefix = SkewPoly::term(ext, &Monomial(pre), ring.one());
        let suffix = SkewPoly::term(ext, &Monomial(above), ring.one());
        out = out.add(&prefix.mul(&bracket).mul(&suffix));
    }
    out
}

fn power(n: usize, i: usize, a: usize) -> Monomial {
    let mut e = vec![0; n];
    e[i] = a;
    Monomial(e)
}
