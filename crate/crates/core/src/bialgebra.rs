//! Coboundary Lie bialgebra structures `Δ_r(x) = x·r` and the classical
//! Yang–Baxter machinery.
//!
//! `c(r)` is evaluated directly in `L ⊗ L ⊗ L`: in each of the three
//! commutators `[r¹², r¹³]`, `[r¹², r²³]`, `[r¹³, r²³]` exactly one slot
//! pairs two algebra factors, so no enveloping algebra is needed.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Element, MapAlgebra};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{cyclic, is_skew, Tensor2, Tensor3};
use crate::coefficients::Mono;
use crate::algebra::BasisIndex;

/// A candidate r-matrix. Skewness is checked, never assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix(pub Tensor2);

impl RMatrix {
    pub fn tensor(&self) -> &Tensor2 {
        &self.0
    }

    pub fn is_skew(&self) -> bool {
        is_skew(&self.0)
    }
}

impl From<Tensor2> for RMatrix {
    fn from(t: Tensor2) -> Self {
        RMatrix(t)
    }
}

impl MapAlgebra {
    /// `Δ_r(x) = x·r`.
    pub fn cobracket(&self, r: &RMatrix, x: &Element) -> Tensor2 {
        self.act2(x, &r.0)
    }

    /// `(1+ε+ε²)(1⊗Δ_r)Δ_r(x)`.
    pub fn cojacobi_residual(&self, r: &RMatrix, x: &Element) -> Tensor3 {
        let delta = self.cobracket(r, x);
        let mut nested = Tensor3::zero();
        for ((u, v), c) in &delta {
            let dv = self.cobracket(r, &self.basis_element(v.clone()));
            for ((p, q), k) in &dv {
                nested.add_term((u.clone(), p.clone(), q.clone()), c * k);
            }
        }
        let once = cyclic(&nested);
        let twice = cyclic(&once);
        let mut out = nested;
        out.add_assign(&once);
        out.add_assign(&twice);
        out
    }

    /// `Δ_r([x,y]) − x·Δ_r(y) + y·Δ_r(x)`; zero for every `r` by the module law.
    pub fn compatibility_residual(&self, r: &RMatrix, x: &Element, y: &Element) -> Tensor2 {
        let mut out = self.cobracket(r, &self.bracket(x, y));
        out.sub_assign(&self.act2(x, &self.cobracket(r, y)));
        out.add_assign(&self.act2(y, &self.cobracket(r, x)));
        out
    }

    /// `c(r) = [r¹²,r¹³] + [r¹²,r²³] + [r¹³,r²³]`.
    ///
    /// For `r = Σ aᵢ⊗bᵢ` this is
    /// `Σᵢⱼ [aᵢ,aⱼ]⊗bᵢ⊗bⱼ + aᵢ⊗[bᵢ,aⱼ]⊗bⱼ + aᵢ⊗aⱼ⊗[bᵢ,bⱼ]`.
    pub fn cybe_c(&self, r: &RMatrix) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((ai, bi), ci) in &r.0 {
            for ((aj, bj), cj) in &r.0 {
                let c = ci * cj;
                for (k, x) in &self.bracket_basis(ai, aj) {
                    out.add_term((k.clone(), bi.clone(), bj.clone()), x * &c);
                }
                for (k, x) in &self.bracket_basis(bi, aj) {
                    out.add_term((ai.clone(), k.clone(), bj.clone()), x * &c);
                }
                for (k, x) in &self.bracket_basis(bi, bj) {
                    out.add_term((ai.clone(), aj.clone(), k.clone()), x * &c);
                }
            }
        }
        out
    }

    /// `x·c(r)`, the modified Yang–Baxter residual.
    pub fn mybe_residual(&self, r: &RMatrix, x: &Element) -> Tensor3 {
        self.act3(x, &self.cybe_c(r))
    }

    /// `a⊗b − b⊗a` with `a = (1/α)L_0` and `b = L_α·m`, so `[a,b] = b`.
    ///
    /// Every two-dimensional nonabelian subalgebra `span{a, b}` yields a
    /// solution of the classical Yang–Baxter equation this way.
    pub fn triangular_r(&self, alpha: &Scalar, mono: Mono) -> Result<RMatrix> {
        if alpha.is_zero() {
            return Err(Error::config("triangular r-matrix needs a nonzero degree"));
        }
        self.coefficients().validate(&mono)?;
        let a = self.l(Scalar::zero());
        let b = BasisIndex::new(alpha.clone(), mono);
        let inv = Scalar::one() / alpha;
        let mut t = Tensor2::zero();
        t.add_term((a.clone(), b.clone()), inv.clone());
        t.add_term((b, a), -inv);
        Ok(RMatrix(t))
    }

    /// Checks the coboundary bialgebra axioms for `Δ_r` on an explicit sample.
    ///
    /// The co-Jacobi residual is evaluated at every sample element and the
    /// compatibility residual at the cyclically consecutive pairs
    /// `(xᵢ, xᵢ₊₁)`.
    pub fn certify_bialgebra(&self, r: &RMatrix, sample: &[Element], seed: u64) -> BialgebraReport {
        let skew = r.is_skew();
        let cybe_zero = self.cybe_c(r).is_zero();
        let max_cojacobi_terms = sample
            .iter()
            .map(|x| self.cojacobi_residual(r, x).len())
            .max()
            .unwrap_or(0);
        let n = sample.len();
        let max_compat_terms = (0..n)
            .map(|i| {
                self.compatibility_residual(r, &sample[i], &sample[(i + 1) % n])
                    .len()
            })
            .max()
            .unwrap_or(0);
        let mut failures = Vec::new();
        if !skew {
            failures.push("r is not skew");
        }
        if !cybe_zero {
            failures.push("c(r) != 0");
        }
        if max_cojacobi_terms > 0 {
            failures.push("co-Jacobi identity fails");
        }
        if max_compat_terms > 0 {
            failures.push("cobracket is not a derivation");
        }
        let verdict = if failures.is_empty() {
            "triangular coboundary bialgebra on sample".to_string()
        } else {
            format!("not certified: {}", failures.join("; "))
        };
        BialgebraReport {
            skew,
            cybe_zero,
            max_cojacobi_terms,
            max_compat_terms,
            sample_size: n,
            seed,
            verdict,
        }
    }
}

/// Outcome of [`MapAlgebra::certify_bialgebra`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BialgebraReport {
    pub skew: bool,
    pub cybe_zero: bool,
    pub max_cojacobi_terms: usize,
    pub max_compat_terms: usize,
    pub sample_size: usize,
    pub seed: u64,
    pub verdict: String,
}

impl BialgebraReport {
    pub fn passed(&self) -> bool {
        self.skew && self.cybe_zero && self.max_cojacobi_terms == 0 && self.max_compat_terms == 0
    }
}
