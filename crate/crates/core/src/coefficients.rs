//! Commutative associative unital coefficient algebras `A`.
//!
//! Two backends exist. Laurent monomials in `k` variables cover the Witt
//! algebra (`k = 0`), the loop algebra (`k = 1`) and its multi-loop
//! relatives; a finite structure table covers arbitrary finite-dimensional
//! algebras given by their multiplication constants.

use num_traits::One;

use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

/// A basis element of the coefficient algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mono {
    /// `t₁^{e₁}⋯t_k^{e_k}`
    Laurent(Vec<i64>),
    /// Basis id of a structure table.
    Table(usize),
}

impl Mono {
    pub fn exponents(&self) -> Option<&[i64]> {
        match self {
            Mono::Laurent(e) => Some(e),
            Mono::Table(_) => None,
        }
    }
}

/// Multiplication constants `xᵢ·xⱼ = Σ m[i][j][l]·x_l` of a finite basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    unit: usize,
    products: Vec<Vec<Combination<usize>>>,
}

impl StructureTable {
    /// Validates the table: ids in range, unit acts as identity, and
    /// multiplication is commutative and associative on every basis triple.
    pub fn new(unit: usize, products: Vec<Vec<Combination<usize>>>) -> Result<Self> {
        let n = products.len();
        if n == 0 {
            return Err(Error::config("structure table must have at least one basis element"));
        }
        if unit >= n {
            return Err(Error::config(format!("unit id {unit} out of range 0..{n}")));
        }
        for (i, row) in products.iter().enumerate() {
            if row.len() != n {
                return Err(Error::config(format!(
                    "row {i} of the structure table has {} entries, expected {n}",
                    row.len()
                )));
            }
            for comb in row {
                if let Some(&bad) = comb.keys().find(|&&l| l >= n) {
                    return Err(Error::config(format!("basis id {bad} out of range 0..{n}")));
                }
            }
        }
        let table = Self { unit, products };
        table.check_axioms()?;
        Ok(table)
    }

    pub fn dim(&self) -> usize {
        self.products.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn product(&self, i: usize, j: usize) -> &Combination<usize> {
        &self.products[i][j]
    }

    fn mul_comb(&self, a: &Combination<usize>, b: &Combination<usize>) -> Combination<usize> {
        let mut out = Combination::zero();
        for (&i, ci) in a {
            for (&j, cj) in b {
                out.add_scaled(&self.products[i][j], &(ci * cj));
            }
        }
        out
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            let e = Combination::single(i, Scalar::one());
            if self.products[self.unit][i] != e || self.products[i][self.unit] != e {
                return Err(Error::config(format!("unit {} does not fix basis id {i}", self.unit)));
            }
            for j in 0..n {
                if self.products[i][j] != self.products[j][i] {
                    return Err(Error::config(format!("table is not commutative at ({i}, {j})")));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = &self.products[i][j];
                for l in 0..n {
                    let left = self.mul_comb(ij, &Combination::single(l, Scalar::one()));
                    let right =
                        self.mul_comb(&Combination::single(i, Scalar::one()), &self.products[j][l]);
                    if left != right {
                        return Err(Error::config(format!(
                            "table is not associative at ({i}, {j}, {l})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The coefficient algebra `A` of `W(Γ) ⊗ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoefficientAlgebra {
    Laurent { vars: usize },
    Table(StructureTable),
}

impl CoefficientAlgebra {
    pub fn laurent(vars: usize) -> Self {
        CoefficientAlgebra::Laurent { vars }
    }

    /// `ℚ[ε]/(ε²)`, basis `{1, ε}`.
    pub fn dual_numbers() -> Self {
        let one = |i| Combination::single(i, Scalar::one());
        let products = vec![vec![one(0), one(1)], vec![one(1), Combination::zero()]];
        CoefficientAlgebra::Table(StructureTable::new(0, products).expect("valid table"))
    }

    /// `ℚ[u]/(u² − d)`, basis `{1, u}`.
    pub fn quadratic(d: i64) -> Self {
        let one = |i| Combination::single(i, Scalar::one());
        let products = vec![
            vec![one(0), one(1)],
            vec![one(1), Combination::single(0, int(d))],
        ];
        CoefficientAlgebra::Table(StructureTable::new(0, products).expect("valid table"))
    }

    pub fn unit(&self) -> Mono {
        match self {
            CoefficientAlgebra::Laurent { vars } => Mono::Laurent(vec![0; *vars]),
            CoefficientAlgebra::Table(t) => Mono::Table(t.unit()),
        }
    }

    /// Whether `A ⊗ A` is an integral domain. True for every Laurent ring;
    /// a finite table only qualifies when it is one-dimensional (`A = ℚ`).
    pub fn tensor_square_is_domain(&self) -> bool {
        match self {
            CoefficientAlgebra::Laurent { .. } => true,
            CoefficientAlgebra::Table(t) => t.dim() == 1,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            CoefficientAlgebra::Laurent { vars } => format!("laurent(k={vars})"),
            CoefficientAlgebra::Table(t) => format!("table(n={})", t.dim()),
        }
    }

    pub fn validate(&self, m: &Mono) -> Result<()> {
        match (self, m) {
            (CoefficientAlgebra::Laurent { vars }, Mono::Laurent(e)) => {
                if e.len() == *vars {
                    Ok(())
                } else {
                    Err(Error::Arity {
                        expected: *vars,
                        found: e.len(),
                    })
                }
            }
            (CoefficientAlgebra::Table(t), Mono::Table(i)) => {
                if *i < t.dim() {
                    Ok(())
                } else {
                    Err(Error::config(format!("basis id {i} out of range 0..{}", t.dim())))
                }
            }
            (CoefficientAlgebra::Laurent { .. }, Mono::Table(_)) => Err(Error::config(
                "table basis id used with a Laurent coefficient algebra",
            )),
            (CoefficientAlgebra::Table(_), Mono::Laurent(_)) => Err(Error::config(
                "exponent vector used with a structure-table coefficient algebra",
            )),
        }
    }

    /// Product of two basis elements, expanded in the basis.
    pub fn mul(&self, a: &Mono, b: &Mono) -> Combination<Mono> {
        match (self, a, b) {
            (CoefficientAlgebra::Laurent { .. }, Mono::Laurent(x), Mono::Laurent(y)) => {
                debug_assert_eq!(x.len(), y.len());
                let e = x.iter().zip(y).map(|(p, q)| p + q).collect();
                Combination::single(Mono::Laurent(e), Scalar::one())
            }
            (CoefficientAlgebra::Table(t), Mono::Table(i), Mono::Table(j)) => {
                t.product(*i, *j).map_keys(|&l| Mono::Table(l))
            }
            _ => panic!("monomial does not belong to the coefficient algebra; validate inputs first"),
        }
    }

    /// Sum of two exponent-grade vectors; empty for table backends.
    pub(crate) fn exponent_grade(&self, m: &Mono) -> Vec<i64> {
        match m {
            Mono::Laurent(e) => e.clone(),
            Mono::Table(_) => Vec::new(),
        }
    }
}
