//! Finite-window 1-cocycles `D: L → V` with values in the tensor square.
//!
//! A derivation table lists `D(x)` for every basis symbol of an explicit
//! domain. Inner derivations `D_v(x) = x·v` are built by
//! [`coboundary_of`] and recovered by [`inner_solve`], which solves
//! `x·v = D(x)` exactly over ℚ.

mod witness;

pub use witness::{annihilator_witness, skewness_witness, Witness};

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{BasisIndex, Grade, MapAlgebra};
use crate::coefficients::CoefficientAlgebra;
use crate::error::Result;
use crate::linsolve::{Echelon, Pushed};
use crate::scalar::Scalar;
use crate::tensor::{tensor_gamma_component, Pair, Tensor2};
use crate::window::Window;

/// A candidate derivation on a finite domain of basis symbols.
///
/// Domain symbols without a stored value map to zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DerivationTable {
    domain: BTreeSet<BasisIndex>,
    values: BTreeMap<BasisIndex, Tensor2>,
}

impl DerivationTable {
    pub fn new(domain: impl IntoIterator<Item = BasisIndex>) -> Self {
        Self {
            domain: domain.into_iter().collect(),
            values: BTreeMap::new(),
        }
    }

    pub fn domain(&self) -> &BTreeSet<BasisIndex> {
        &self.domain
    }

    pub fn in_domain(&self, x: &BasisIndex) -> bool {
        self.domain.contains(x)
    }

    /// Sets `D(x)`, adding `x` to the domain.
    pub fn set(&mut self, x: BasisIndex, value: Tensor2) {
        self.domain.insert(x.clone());
        if value.is_zero() {
            self.values.remove(&x);
        } else {
            self.values.insert(x, value);
        }
    }

    pub fn value(&self, x: &BasisIndex) -> Tensor2 {
        self.values.get(x).cloned().unwrap_or_default()
    }

    /// Nonzero values in domain order.
    pub fn values(&self) -> impl Iterator<Item = (&BasisIndex, &Tensor2)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn add(&self, other: &DerivationTable) -> DerivationTable {
        let mut out = self.clone();
        out.domain.extend(other.domain.iter().cloned());
        for (x, v) in &other.values {
            let sum = out.value(x).add(v);
            out.set(x.clone(), sum);
        }
        out
    }
}

/// `x ↦ x·v` on every basis symbol of the window.
pub fn coboundary_of(g: &MapAlgebra, v: &Tensor2, window: &Window) -> Result<DerivationTable> {
    let basis = window.basis(g)?;
    let mut table = DerivationTable::new(basis.iter().cloned());
    for x in basis {
        let value = g.act2(&g.basis_element(x.clone()), v);
        table.set(x, value);
    }
    Ok(table)
}

/// `D([x,y]) − x·D(y) + y·D(x)`, or `None` when some basis symbol of
/// `[x,y]` lies outside the domain (or `x`, `y` themselves do).
pub fn cocycle_residual(g: &MapAlgebra, d: &DerivationTable, x: &BasisIndex, y: &BasisIndex) -> Option<Tensor2> {
    if !d.in_domain(x) || !d.in_domain(y) {
        return None;
    }
    let xy = g.bracket_basis(x, y);
    let mut out = Tensor2::zero();
    for (b, c) in &xy {
        if !d.in_domain(b) {
            return None;
        }
        out.add_scaled(&d.value(b), c);
    }
    out.sub_assign(&g.act2(&g.basis_element(x.clone()), &d.value(y)));
    out.add_assign(&g.act2(&g.basis_element(y.clone()), &d.value(x)));
    Some(out)
}

/// Cocycle condition over all unordered pairs of distinct domain symbols.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CocycleReport {
    pub pairs_total: usize,
    pub pairs_defined: usize,
    pub pairs_failing: usize,
    pub max_residual_terms: usize,
    pub coverage: f64,
    /// Up to ten failing pairs, rendered.
    pub failures: Vec<(String, String)>,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.pairs_failing == 0
    }
}

pub fn cocycle_sweep(g: &MapAlgebra, d: &DerivationTable) -> CocycleReport {
    let dom: Vec<&BasisIndex> = d.domain().iter().collect();
    let mut report = CocycleReport {
        pairs_total: 0,
        pairs_defined: 0,
        pairs_failing: 0,
        max_residual_terms: 0,
        coverage: 0.0,
        failures: Vec::new(),
    };
    for (i, x) in dom.iter().enumerate() {
        for y in &dom[i + 1..] {
            report.pairs_total += 1;
            if let Some(res) = cocycle_residual(g, d, x, y) {
                report.pairs_defined += 1;
                if !res.is_zero() {
                    report.pairs_failing += 1;
                    report.max_residual_terms = report.max_residual_terms.max(res.len());
                    if report.failures.len() < 10 {
                        report.failures.push((x.to_string(), y.to_string()));
                    }
                }
            }
        }
    }
    if report.pairs_total > 0 {
        report.coverage = report.pairs_defined as f64 / report.pairs_total as f64;
    }
    report
}

/// An equation of the system `x·v = D(x)` that no `v` on the chosen tensor
/// window satisfies, given the equations processed before it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InconsistencyCertificate {
    /// Grade of the unknown block being solved.
    pub block: Grade,
    /// Domain symbol `x` whose equation failed.
    pub element: BasisIndex,
    /// Output coordinate of `x·v` the equation constrains.
    pub coordinate: Pair,
    /// Coefficients of the unknowns `v[u]` in this equation.
    pub coefficients: Vec<(Pair, Scalar)>,
    /// Required value `D(x)[coordinate]`.
    pub rhs: Scalar,
    /// Value of `0 = residual` after elimination against earlier equations.
    pub residual: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InnerSolution {
    Inner(Tensor2),
    Inconsistent(Box<InconsistencyCertificate>),
}

impl InnerSolution {
    pub fn tensor(&self) -> Option<&Tensor2> {
        match self {
            InnerSolution::Inner(v) => Some(v),
            InnerSolution::Inconsistent(_) => None,
        }
    }
}

/// The tensor window used when none is given: the window spanned by the
/// domain, inflated so that `Γ` becomes `Γ + Γ` and exponent ranges grow by
/// the largest exponent in the domain.
pub fn default_tensor_window(g: &MapAlgebra, d: &DerivationTable) -> Result<Window> {
    let vars = match g.coefficients() {
        CoefficientAlgebra::Laurent { vars } => *vars,
        CoefficientAlgebra::Table(_) => 0,
    };
    Ok(Window::covering(d.domain(), vars)?.inflated())
}

/// Solves `x·v = D(x)` for every domain symbol `x`, with `v` supported on
/// pairs of basis symbols from `tensor_window`.
///
/// The action preserves grades, so the system splits into independent
/// blocks indexed by the grade of `v`'s component; only blocks that `D`
/// reaches are solved and every other component of `v` is zero. Free
/// unknowns are set to zero.
pub fn inner_solve(g: &MapAlgebra, d: &DerivationTable, tensor_window: Option<&Window>) -> Result<InnerSolution> {
    let window = match tensor_window {
        Some(w) => w.clone(),
        None => default_tensor_window(g, d)?,
    };
    let slots = window.basis(g)?;
    let mut by_grade: BTreeMap<Grade, Vec<BasisIndex>> = BTreeMap::new();
    for b in &slots {
        by_grade.entry(g.grade(b)).or_default().push(b.clone());
    }

    let mut blocks = BTreeSet::new();
    for (x, value) in d.values() {
        let gx = g.grade(x);
        for (u, w) in value.keys() {
            blocks.insert(g.grade(u).add(&g.grade(w)).sub(&gx));
        }
    }

    let mut v = Tensor2::zero();
    for block in blocks {
        let mut unknowns: Vec<Pair> = Vec::new();
        for b1 in &slots {
            let need = block.sub(&g.grade(b1));
            if let Some(seconds) = by_grade.get(&need) {
                unknowns.extend(seconds.iter().map(|b2| (b1.clone(), b2.clone())));
            }
        }
        unknowns.sort();

        let mut echelon = Echelon::new();
        for x in d.domain() {
            let target = block.add(&g.grade(x));
            let mut rows: BTreeMap<Pair, Vec<(usize, Scalar)>> = BTreeMap::new();
            for (j, (u, w)) in unknowns.iter().enumerate() {
                for (bu, k) in &g.bracket_basis(x, u) {
                    rows.entry((bu.clone(), w.clone())).or_default().push((j, k.clone()));
                }
                for (bw, k) in &g.bracket_basis(x, w) {
                    rows.entry((u.clone(), bw.clone())).or_default().push((j, k.clone()));
                }
            }
            let rhs_part = d
                .value(x)
                .filter(|(p, q)| g.grade(p).add(&g.grade(q)) == target);
            for coord in rhs_part.keys() {
                rows.entry(coord.clone()).or_default();
            }
            for (coord, coeffs) in rows {
                let rhs = rhs_part.coeff(&coord);
                if let Pushed::Inconsistent { residual } = echelon.push(&coeffs, &rhs) {
                    let mut merged = BTreeMap::<usize, Scalar>::new();
                    for (j, c) in coeffs {
                        *merged.entry(j).or_insert_with(Scalar::zero) += c;
                    }
                    let coefficients = merged
                        .into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(j, c)| (unknowns[j].clone(), c))
                        .collect();
                    return Ok(InnerSolution::Inconsistent(Box::new(InconsistencyCertificate {
                        block,
                        element: x.clone(),
                        coordinate: coord,
                        coefficients,
                        rhs,
                        residual: Scalar::from_integer(residual),
                    })));
                }
            }
        }
        for (j, c) in echelon.solve(unknowns.len()).into_iter().enumerate() {
            v.add_term(unknowns[j].clone(), c);
        }
    }
    Ok(InnerSolution::Inner(v))
}

/// Checks that a derivation with `D(L_{0,0}) = 0` is homogeneous of
/// degree 0, i.e. `D(L_α·m) ∈ V_α` for every domain symbol.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeZeroReport {
    pub applicable: bool,
    pub note: String,
    pub violations: Vec<String>,
}

impl DegreeZeroReport {
    pub fn passed(&self) -> bool {
        self.applicable && self.violations.is_empty()
    }
}

pub fn degree_zero_check(g: &MapAlgebra, d: &DerivationTable) -> DegreeZeroReport {
    let l00 = g.l(Scalar::zero());
    if !d.in_domain(&l00) {
        return DegreeZeroReport {
            applicable: false,
            note: format!("{l00} is not in the domain"),
            violations: Vec::new(),
        };
    }
    if !d.value(&l00).is_zero() {
        return DegreeZeroReport {
            applicable: false,
            note: format!("D({l00}) is nonzero"),
            violations: Vec::new(),
        };
    }
    let violations = d
        .domain()
        .iter()
        .filter(|x| {
            let value = d.value(x);
            tensor_gamma_component(&value, &x.alpha) != value
        })
        .map(|x| x.to_string())
        .collect();
    DegreeZeroReport {
        applicable: true,
        note: format!("D({l00}) = 0"),
        violations,
    }
}

/// Splits `D` into Γ-homogeneous parts: `D_d(L_α·m)` is the `V_{α+d}`
/// component of `D(L_α·m)`. Every part keeps the full domain.
pub fn grading_split(d: &DerivationTable) -> BTreeMap<Scalar, DerivationTable> {
    let mut parts: BTreeMap<Scalar, DerivationTable> = BTreeMap::new();
    for (x, value) in d.values() {
        for ((u, w), c) in value {
            let deg = &(&u.alpha + &w.alpha) - &x.alpha;
            let part = parts
                .entry(deg)
                .or_insert_with(|| DerivationTable::new(d.domain().iter().cloned()));
            let mut cur = part.value(x);
            cur.add_term((u.clone(), w.clone()), c.clone());
            part.set(x.clone(), cur);
        }
    }
    parts
}

/// Whether `D(L_α·m) ∈ V_{α+deg}` throughout.
pub fn is_homogeneous(d: &DerivationTable, deg: &Scalar) -> bool {
    d.values().all(|(x, value)| {
        value
            .keys()
            .all(|(u, w)| &(&u.alpha + &w.alpha) - &x.alpha == *deg)
    })
}

