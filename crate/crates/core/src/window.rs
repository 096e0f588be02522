//! Finite truncations of the algebra used for desk-scale checks.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::algebra::{BasisIndex, MapAlgebra};
use crate::coefficients::{CoefficientAlgebra, Mono};
use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

/// Allowed Γ-degrees plus, for Laurent backends, one inclusive exponent
/// range per variable. Table backends always use the full table basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    gamma: Vec<Scalar>,
    exp_ranges: Vec<(i64, i64)>,
}

impl Window {
    /// Requires a nonempty Γ-set that contains 0 and is closed under negation.
    pub fn new(gamma: impl IntoIterator<Item = Scalar>, exp_ranges: Vec<(i64, i64)>) -> Result<Self> {
        let gamma: BTreeSet<Scalar> = gamma.into_iter().collect();
        if !gamma.contains(&Scalar::zero()) {
            return Err(Error::config("window Γ-set must contain 0"));
        }
        if let Some(a) = gamma.iter().find(|a| !gamma.contains(&-*a)) {
            return Err(Error::config(format!("window Γ-set is not closed under negation (missing {})", -a)));
        }
        if let Some(&(lo, hi)) = exp_ranges.iter().find(|(lo, hi)| lo > hi) {
            return Err(Error::config(format!("empty exponent range {lo}..={hi}")));
        }
        Ok(Self {
            gamma: gamma.into_iter().collect(),
            exp_ranges,
        })
    }

    /// `Γ = {−max, …, max}` in steps of `step`, exponents `|e| ≤ exp_bound`
    /// in each of `vars` variables.
    pub fn symmetric(max: &Scalar, step: &Scalar, exp_bound: i64, vars: usize) -> Result<Self> {
        if !step.is_positive() {
            return Err(Error::config("Γ step must be positive"));
        }
        if exp_bound < 0 {
            return Err(Error::config("exponent bound must be nonnegative"));
        }
        let mut gamma = vec![Scalar::zero()];
        let mut a = step.clone();
        while &a <= max {
            gamma.push(a.clone());
            gamma.push(-a.clone());
            a += step;
        }
        Self::new(gamma, vec![(-exp_bound, exp_bound); vars])
    }

    /// Integer window `|α| ≤ max`, `|e| ≤ exp_bound`.
    pub fn integer(max: i64, exp_bound: i64, vars: usize) -> Result<Self> {
        Self::symmetric(&int(max), &int(1), exp_bound, vars)
    }

    pub fn gamma(&self) -> &[Scalar] {
        &self.gamma
    }

    pub fn exp_ranges(&self) -> &[(i64, i64)] {
        &self.exp_ranges
    }

    pub fn contains_alpha(&self, a: &Scalar) -> bool {
        self.gamma.binary_search(a).is_ok()
    }

    /// Checks that the exponent ranges fit the algebra.
    pub fn check(&self, g: &MapAlgebra) -> Result<()> {
        if let CoefficientAlgebra::Laurent { vars } = g.coefficients() {
            if self.exp_ranges.len() != *vars {
                return Err(Error::Arity {
                    expected: *vars,
                    found: self.exp_ranges.len(),
                });
            }
        }
        Ok(())
    }

    /// Coefficient-algebra basis elements inside the window, in sorted order.
    pub fn monos(&self, g: &MapAlgebra) -> Result<Vec<Mono>> {
        self.check(g)?;
        Ok(match g.coefficients() {
            CoefficientAlgebra::Laurent { .. } => {
                let mut out: Vec<Vec<i64>> = vec![Vec::new()];
                for &(lo, hi) in &self.exp_ranges {
                    out = out
                        .into_iter()
                        .flat_map(|p| {
                            (lo..=hi).map(move |e| {
                                let mut q = p.clone();
                                q.push(e);
                                q
                            })
                        })
                        .collect();
                }
                out.into_iter().map(Mono::Laurent).collect()
            }
            CoefficientAlgebra::Table(t) => (0..t.dim()).map(Mono::Table).collect(),
        })
    }

    /// All basis symbols `L_α·m` inside the window, sorted.
    pub fn basis(&self, g: &MapAlgebra) -> Result<Vec<BasisIndex>> {
        let monos = self.monos(g)?;
        let mut out: Vec<BasisIndex> = self
            .gamma
            .iter()
            .flat_map(|a| monos.iter().map(move |m| BasisIndex::new(a.clone(), m.clone())))
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn contains(&self, b: &BasisIndex) -> bool {
        if !self.contains_alpha(&b.alpha) {
            return false;
        }
        match &b.mono {
            Mono::Laurent(e) => {
                e.len() == self.exp_ranges.len()
                    && e.iter().zip(&self.exp_ranges).all(|(x, (lo, hi))| lo <= x && x <= hi)
            }
            Mono::Table(_) => true,
        }
    }

    /// Smallest window containing every given basis symbol, closed under
    /// negation and containing 0.
    pub fn covering<'a>(basis: impl IntoIterator<Item = &'a BasisIndex>, vars: usize) -> Result<Self> {
        let mut gamma = BTreeSet::from([Scalar::zero()]);
        let mut ranges = vec![(0i64, 0i64); vars];
        for b in basis {
            gamma.insert(b.alpha.clone());
            gamma.insert(-b.alpha.clone());
            if let Mono::Laurent(e) = &b.mono {
                for (r, &x) in ranges.iter_mut().zip(e) {
                    r.0 = r.0.min(x);
                    r.1 = r.1.max(x);
                }
            }
        }
        Self::new(gamma, ranges)
    }

    /// `Γ + Γ` and every exponent range widened on both sides by the largest
    /// absolute exponent in the window.
    pub fn inflated(&self) -> Self {
        let gamma: BTreeSet<Scalar> = self
            .gamma
            .iter()
            .flat_map(|a| self.gamma.iter().map(move |b| a + b))
            .collect();
        let m = self
            .exp_ranges
            .iter()
            .map(|(lo, hi)| lo.abs().max(hi.abs()))
            .max()
            .unwrap_or(0);
        let exp_ranges = self.exp_ranges.iter().map(|(lo, hi)| (lo - m, hi + m)).collect();
        Self {
            gamma: gamma.into_iter().collect(),
            exp_ranges,
        }
    }
}
