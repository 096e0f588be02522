//! Exact incremental row echelon form over ℚ.
//!
//! Equations arrive one at a time as sparse rows. Each row is scaled to
//! integers and reduced fraction-free against the stored pivot rows, scanning
//! columns in increasing order, so the pivot of a row is always its first
//! surviving column. Contents are divided out after every update to keep the
//! integers small. Back substitution sets every free column to zero.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::scalar::Scalar;

#[derive(Clone, Debug)]
struct Row {
    entries: Vec<(usize, BigInt)>,
    rhs: BigInt,
}

impl Row {
    fn from_rational(coeffs: &[(usize, Scalar)], rhs: &Scalar) -> Self {
        let mut merged: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (j, c) in coeffs {
            *merged.entry(*j).or_insert_with(Scalar::zero) += c;
        }
        let mut lcm = rhs.denom().clone();
        for c in merged.values() {
            lcm = lcm.lcm(c.denom());
        }
        let scale = |c: &Scalar| c.numer() * (&lcm / c.denom());
        let entries = merged
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(&j, c)| (j, scale(c)))
            .collect();
        let mut row = Row {
            entries,
            rhs: scale(rhs),
        };
        row.normalize();
        row
    }

    fn normalize(&mut self) {
        let mut g = self.rhs.abs();
        for (_, c) in &self.entries {
            g = g.gcd(c);
        }
        if !g.is_zero() && g != BigInt::from(1) {
            for (_, c) in &mut self.entries {
                *c /= &g;
            }
            self.rhs /= &g;
        }
    }

    /// `lead·self − self[col]·pivot`, eliminating `col`.
    fn eliminate(&mut self, at: usize, pivot: &Row) {
        let a = pivot.entries[0].1.clone();
        let b = self.entries[at].1.clone();
        let mut out = Vec::with_capacity(self.entries.len() + pivot.entries.len());
        out.extend(self.entries[..at].iter().map(|(j, c)| (*j, c * &a)));
        let mut i = at;
        let mut k = 0;
        let rest = &self.entries;
        let piv = &pivot.entries;
        while i < rest.len() || k < piv.len() {
            let (j, v) = match (rest.get(i), piv.get(k)) {
                (Some((ji, ci)), Some((jk, ck))) if ji == jk => {
                    i += 1;
                    k += 1;
                    (*ji, ci * &a - ck * &b)
                }
                (Some((ji, ci)), Some((jk, _))) if ji < jk => {
                    i += 1;
                    (*ji, ci * &a)
                }
                (Some((ji, ci)), None) => {
                    i += 1;
                    (*ji, ci * &a)
                }
                (_, Some((jk, ck))) => {
                    k += 1;
                    (*jk, -(ck * &b))
                }
                (None, None) => unreachable!(),
            };
            if !v.is_zero() {
                out.push((j, v));
            }
        }
        self.entries = out;
        self.rhs = &self.rhs * &a - &pivot.rhs * &b;
        self.normalize();
    }
}

/// Result of adding one equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pushed {
    /// The equation introduced a new pivot column.
    Pivot(usize),
    /// The equation is a combination of earlier ones.
    Redundant,
    /// The equation reduced to `0 = residual` with `residual ≠ 0`.
    Inconsistent { residual: BigInt },
}

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, Row>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds `Σ coeffs[j]·x_j = rhs`.
    pub fn push(&mut self, coeffs: &[(usize, Scalar)], rhs: &Scalar) -> Pushed {
        let mut row = Row::from_rational(coeffs, rhs);
        let mut at = 0;
        while at < row.entries.len() {
            let col = row.entries[at].0;
            match self.pivots.get(&col) {
                Some(p) => row.eliminate(at, p),
                None => at += 1,
            }
        }
        match row.entries.first() {
            Some(&(col, _)) => {
                self.pivots.insert(col, row);
                Pushed::Pivot(col)
            }
            None if row.rhs.is_zero() => Pushed::Redundant,
            None => Pushed::Inconsistent { residual: row.rhs },
        }
    }

    /// A solution with every non-pivot column set to zero.
    pub fn solve(&self, ncols: usize) -> Vec<Scalar> {
        let mut x = vec![Scalar::zero(); ncols];
        for (&col, row) in self.pivots.iter().rev() {
            let mut acc = Scalar::from_integer(row.rhs.clone());
            for (j, c) in &row.entries[1..] {
                if !x[*j].is_zero() {
                    acc -= &x[*j] * Scalar::from_integer(c.clone());
                }
            }
            x[col] = acc / Scalar::from_integer(row.entries[0].1.clone());
        }
        x
    }
}
