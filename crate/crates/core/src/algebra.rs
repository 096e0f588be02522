//! The generalized map Virasoro algebra `W(Γ) ⊗ A`.
//!
//! Basis elements are `L_α·m` with `α ∈ Γ ⊂ ℚ` and `m` a basis element of the
//! coefficient algebra, and the bracket is
//! `[L_α·m, L_β·m'] = (β − α)·L_{α+β}·(m·m')`.
//! With `A = ℚ[t^{±1}]` this is the loop algebra spanned by `L_α tⁱ`; with
//! no variables it is the centerless Virasoro (Witt) algebra itself.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::coefficients::{CoefficientAlgebra, Mono};
use crate::combination::Combination;
use crate::error::Result;
use crate::scalar::Scalar;

/// A basis symbol `L_α·m`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    pub alpha: Scalar,
    pub mono: Mono,
}

impl BasisIndex {
    pub fn new(alpha: Scalar, mono: Mono) -> Self {
        Self { alpha, mono }
    }

    /// `L_α t^{exps}` for a Laurent backend.
    pub fn laurent(alpha: Scalar, exps: impl Into<Vec<i64>>) -> Self {
        Self::new(alpha, Mono::Laurent(exps.into()))
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L[{}", self.alpha)?;
        match &self.mono {
            Mono::Laurent(e) if e.is_empty() => {}
            Mono::Laurent(e) => {
                let parts: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                write!(f, ";{}", parts.join(","))?;
            }
            Mono::Table(i) => write!(f, ";{i}")?,
        }
        write!(f, "]")
    }
}

/// An element of the algebra: a finite combination of basis symbols.
pub type Element = Combination<BasisIndex>;

/// Multidegree of a basis symbol: the Γ-degree together with the exponent
/// vector (empty for table backends). Brackets add grades.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade {
    pub alpha: Scalar,
    pub exps: Vec<i64>,
}

impl Grade {
    pub fn add(&self, other: &Grade) -> Grade {
        Grade {
            alpha: &self.alpha + &other.alpha,
            exps: zip_with(&self.exps, &other.exps, |a, b| a + b),
        }
    }

    pub fn sub(&self, other: &Grade) -> Grade {
        Grade {
            alpha: &self.alpha - &other.alpha,
            exps: zip_with(&self.exps, &other.exps, |a, b| a - b),
        }
    }
}

fn zip_with(a: &[i64], b: &[i64], f: impl Fn(i64, i64) -> i64) -> Vec<i64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()
}

/// `W(Γ) ⊗ A` for a fixed coefficient algebra `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapAlgebra {
    coeffs: CoefficientAlgebra,
}

impl MapAlgebra {
    pub fn new(coeffs: CoefficientAlgebra) -> Self {
        Self { coeffs }
    }

    /// Laurent coefficients in `vars` variables; `vars = 1` is the loop algebra.
    pub fn laurent(vars: usize) -> Self {
        Self::new(CoefficientAlgebra::laurent(vars))
    }

    pub fn coefficients(&self) -> &CoefficientAlgebra {
        &self.coeffs
    }

    pub fn unit_mono(&self) -> Mono {
        self.coeffs.unit()
    }

    /// `L_α ⊗ 1`.
    pub fn l(&self, alpha: Scalar) -> BasisIndex {
        BasisIndex::new(alpha, self.unit_mono())
    }

    pub fn basis_element(&self, b: BasisIndex) -> Element {
        Element::single(b, Scalar::one())
    }

    pub fn grade(&self, b: &BasisIndex) -> Grade {
        Grade {
            alpha: b.alpha.clone(),
            exps: self.coeffs.exponent_grade(&b.mono),
        }
    }

    pub fn validate_basis(&self, b: &BasisIndex) -> Result<()> {
        self.coeffs.validate(&b.mono)
    }

    pub fn validate(&self, x: &Element) -> Result<()> {
        x.keys().try_for_each(|b| self.validate_basis(b))
    }

    /// Bracket of two basis symbols.
    pub fn bracket_basis(&self, a: &BasisIndex, b: &BasisIndex) -> Element {
        let factor = &b.alpha - &a.alpha;
        if factor.is_zero() {
            return Element::zero();
        }
        let alpha = &a.alpha + &b.alpha;
        let mut out = Element::zero();
        for (m, c) in self.coeffs.mul(&a.mono, &b.mono) {
            out.add_term(BasisIndex::new(alpha.clone(), m), c * &factor);
        }
        out
    }

    /// Bilinear bracket. Inputs are assumed to be valid for this algebra;
    /// see [`MapAlgebra::try_bracket`] for checked input.
    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                out.add_scaled(&self.bracket_basis(a, b), &(ca * cb));
            }
        }
        out
    }

    pub fn try_bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.validate(x)?;
        self.validate(y)?;
        Ok(self.bracket(x, y))
    }

    /// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`.
    pub fn jacobi_residual(&self, x: &Element, y: &Element, z: &Element) -> Element {
        let mut out = self.bracket(x, &self.bracket(y, z));
        out.add_assign(&self.bracket(y, &self.bracket(z, x)));
        out.add_assign(&self.bracket(z, &self.bracket(x, y)));
        out
    }
}

/// The Γ-degrees occurring in `x`.
pub fn gamma_degree(x: &Element) -> BTreeSet<Scalar> {
    x.keys().map(|b| b.alpha.clone()).collect()
}

/// The component of `x` in `L_d = span{L_d·m}`.
pub fn homogeneous_component(x: &Element, d: &Scalar) -> Element {
    x.filter(|b| &b.alpha == d)
}
