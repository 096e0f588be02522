//! Seeded random generation of algebra elements and tensors.
//!
//! Degrees are drawn uniformly from the window's Γ-set, exponents uniformly
//! from its ranges, and coefficients from `{±1, ±2, ±3} × {1, 1/2, 1/3}`.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{BasisIndex, Element, MapAlgebra};
use crate::error::Result;
use crate::scalar::{ratio, Scalar};
use crate::tensor::{symmetrize, twist, Tensor2, Tensor3};
use crate::window::Window;
use crate::coefficients::Mono;

pub type TrialRng = ChaCha8Rng;

/// RNG stream for trial `index` of a run seeded with `seed`.
///
/// Streams depend only on `(seed, index)`, so trials may run in any order
/// or on any number of threads.
pub fn trial_rng(seed: u64, index: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Draws basis symbols and combinations from a window.
#[derive(Clone, Debug)]
pub struct Sampler {
    algebra: MapAlgebra,
    basis: Vec<BasisIndex>,
    gamma: Vec<Scalar>,
    monos: Vec<Mono>,
    max_terms: usize,
}

impl Sampler {
    pub fn new(algebra: &MapAlgebra, window: &Window) -> Result<Self> {
        Ok(Self {
            algebra: algebra.clone(),
            basis: window.basis(algebra)?,
            gamma: window.gamma().to_vec(),
            monos: window.monos(algebra)?,
            max_terms: 3,
        })
    }

    pub fn with_max_terms(mut self, n: usize) -> Self {
        self.max_terms = n.max(1);
        self
    }

    pub fn algebra(&self) -> &MapAlgebra {
        &self.algebra
    }

    pub fn basis(&self) -> &[BasisIndex] {
        &self.basis
    }

    pub fn coeff(&self, rng: &mut impl Rng) -> Scalar {
        let num = *[-3i64, -2, -1, 1, 2, 3].choose(rng).unwrap();
        let den = *[1i64, 2, 3].choose(rng).unwrap();
        ratio(num, den)
    }

    pub fn alpha(&self, rng: &mut impl Rng) -> Scalar {
        self.gamma.choose(rng).unwrap().clone()
    }

    /// A nonzero Γ-degree from the window.
    pub fn nonzero_alpha(&self, rng: &mut impl Rng) -> Scalar {
        loop {
            let a = self.alpha(rng);
            if a != Scalar::from_integer(0.into()) {
                return a;
            }
        }
    }

    pub fn mono(&self, rng: &mut impl Rng) -> Mono {
        self.monos.choose(rng).unwrap().clone()
    }

    pub fn basis_index(&self, rng: &mut impl Rng) -> BasisIndex {
        self.basis.choose(rng).unwrap().clone()
    }

    fn term_count(&self, rng: &mut impl Rng) -> usize {
        rng.random_range(1..=self.max_terms)
    }

    /// A random element; nonzero unless all drawn terms cancel.
    pub fn element(&self, rng: &mut impl Rng) -> Element {
        let n = self.term_count(rng);
        (0..n).map(|_| (self.basis_index(rng), self.coeff(rng))).collect()
    }

    pub fn nonzero_element(&self, rng: &mut impl Rng) -> Element {
        loop {
            let x = self.element(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn tensor2(&self, rng: &mut impl Rng) -> Tensor2 {
        let n = self.term_count(rng);
        (0..n)
            .map(|_| ((self.basis_index(rng), self.basis_index(rng)), self.coeff(rng)))
            .collect()
    }

    pub fn nonzero_tensor2(&self, rng: &mut impl Rng) -> Tensor2 {
        loop {
            let w = self.tensor2(rng);
            if !w.is_zero() {
                return w;
            }
        }
    }

    pub fn tensor3(&self, rng: &mut impl Rng) -> Tensor3 {
        let n = self.term_count(rng);
        (0..n)
            .map(|_| {
                let k = (self.basis_index(rng), self.basis_index(rng), self.basis_index(rng));
                (k, self.coeff(rng))
            })
            .collect()
    }

    pub fn nonzero_tensor3(&self, rng: &mut impl Rng) -> Tensor3 {
        loop {
            let w = self.tensor3(rng);
            if !w.is_zero() {
                return w;
            }
        }
    }

    /// `u − τ(u)` for random `u`, never zero.
    pub fn skew_tensor2(&self, rng: &mut impl Rng) -> Tensor2 {
        loop {
            let u = self.tensor2(rng);
            let s = u.sub(&twist(&u));
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// A random tensor with nonzero symmetric part.
    pub fn non_skew_tensor2(&self, rng: &mut impl Rng) -> Tensor2 {
        loop {
            let u = self.tensor2(rng);
            if !symmetrize(&u).is_zero() {
                return u;
            }
        }
    }
}
