//! Witness searches for the skewness-propagation and trivial-annihilator
//! properties on a finite window.
//!
//! Neither search ever certifies the property itself: failing to find a
//! witness inside the window is reported as inconclusive.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::{BasisIndex, MapAlgebra};
use crate::coefficients::Mono;
use crate::error::Result;
use crate::scalar::Scalar;
use crate::tensor::{is_skew, symmetrize, Tensor2, Tensor3};
use crate::window::Window;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "witness", rename_all = "snake_case")]
pub enum Witness {
    /// The input already has the property (skew `r`, or `c = 0`).
    NotNeeded,
    Found(String),
    /// Every candidate in the window was tried without success.
    NoWitnessInWindow,
}

impl Witness {
    pub fn is_found(&self) -> bool {
        matches!(self, Witness::Found(_))
    }
}

/// Degrees ordered by absolute value, positive before negative, zero excluded.
fn by_magnitude(gamma: &[Scalar]) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = gamma.iter().filter(|a| !a.is_zero()).cloned().collect();
    out.sort_by(|a, b| match a.abs().cmp(&b.abs()) {
        Ordering::Equal => b.cmp(a),
        o => o,
    });
    out
}

fn mono_weight(m: &Mono) -> (i64, Mono) {
    let w = match m {
        Mono::Laurent(e) => e.iter().map(|x| x.abs()).sum(),
        Mono::Table(_) => 0,
    };
    (w, m.clone())
}

/// Looks for `a` with `(1+τ)(a·r) ≠ 0` among `L_0·m` for window monomials
/// `m` (smallest exponents first) and then `L_β·1` for nonzero window `β`
/// (smallest `|β|` first). Such an `a` shows that `a·r ∉ Im(1−τ)`.
pub fn skewness_witness(g: &MapAlgebra, r: &Tensor2, window: &Window) -> Result<Witness> {
    if is_skew(r) {
        return Ok(Witness::NotNeeded);
    }
    let mut monos = window.monos(g)?;
    monos.sort_by_key(mono_weight);
    let candidates = monos
        .into_iter()
        .map(|m| BasisIndex::new(Scalar::zero(), m))
        .chain(by_magnitude(window.gamma()).into_iter().map(|b| g.l(b)));
    for a in candidates {
        let image = g.act2(&g.basis_element(a.clone()), r);
        if !symmetrize(&image).is_zero() {
            return Ok(Witness::Found(a.to_string()));
        }
    }
    Ok(Witness::NoWitnessInWindow)
}

/// Maximal-term heuristic: order the support of `c` lexicographically by
/// slot degrees, let `α₀` be the first-slot degree of the largest term, and
/// try `L_δ·1` for window `δ ∉ {0, α₀}`, positive `δ` first. For `δ > 0` the
/// largest term of `L_δ·c` is `(α₀ − δ)·L_{α₀+δ}⊗…`, which cannot cancel.
pub fn annihilator_witness(g: &MapAlgebra, c: &Tensor3, window: &Window) -> Result<Witness> {
    window.check(g)?;
    let Some(alpha0) = c
        .keys()
        .map(|(a, b, d)| (a.alpha.clone(), b.alpha.clone(), d.alpha.clone()))
        .max()
        .map(|(a, _, _)| a)
    else {
        return Ok(Witness::NotNeeded);
    };
    let mut positives: Vec<Scalar> = window.gamma().iter().filter(|d| d.is_positive()).cloned().collect();
    positives.sort();
    let mut negatives: Vec<Scalar> = window.gamma().iter().filter(|d| d.is_negative()).cloned().collect();
    negatives.sort_by(|a, b| b.cmp(a));
    for delta in positives.into_iter().chain(negatives) {
        if delta == alpha0 {
            continue;
        }
        let a = g.l(delta);
        if !g.act3(&g.basis_element(a.clone()), c).is_zero() {
            return Ok(Witness::Found(a.to_string()));
        }
    }
    Ok(Witness::NoWitnessInWindow)
}
