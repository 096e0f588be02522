//! Reference computations that share no arithmetic with the library.
//!
//! Elements are plain maps from `(degree, exponents)` to rationals and the
//! bracket is the defining formula written out once more by hand.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use virbi::algebra::Element;
use virbi::coefficients::Mono;
use virbi::tensor::{Tensor2, Tensor3};

pub type Key = (BigRational, Vec<i64>);
pub type Vec1 = BTreeMap<Key, BigRational>;
pub type Vec3 = BTreeMap<(Key, Key, Key), BigRational>;

fn key(b: &virbi::algebra::BasisIndex) -> Key {
    match &b.mono {
        Mono::Laurent(e) => (b.alpha.clone(), e.clone()),
        Mono::Table(_) => panic!("oracle covers Laurent coefficients only"),
    }
}

fn push<K: Ord>(map: &mut BTreeMap<K, BigRational>, k: K, c: BigRational) {
    let slot = map.entry(k).or_insert_with(BigRational::zero);
    *slot += c;
}

fn prune<K: Ord>(mut map: BTreeMap<K, BigRational>) -> BTreeMap<K, BigRational> {
    map.retain(|_, c| !c.is_zero());
    map
}

/// `[L_a t^m, L_b t^n] = (b − a) L_{a+b} t^{m+n}`.
pub fn bracket_keys(x: &Key, y: &Key) -> (Key, BigRational) {
    let exps = x.1.iter().zip(&y.1).map(|(p, q)| p + q).collect();
    ((&x.0 + &y.0, exps), &y.0 - &x.0)
}

pub fn element(x: &Element) -> Vec1 {
    x.iter().map(|(b, c)| (key(b), c.clone())).collect()
}

pub fn terms2(w: &Tensor2) -> Vec<(Key, Key, BigRational)> {
    w.iter().map(|((a, b), c)| (key(a), key(b), c.clone())).collect()
}

pub fn tensor3(w: &Tensor3) -> Vec3 {
    w.iter().map(|((a, b, c), k)| ((key(a), key(b), key(c)), k.clone())).collect()
}

pub fn bracket(x: &Vec1, y: &Vec1) -> Vec1 {
    let mut out = Vec1::new();
    for (a, ca) in x {
        for (b, cb) in y {
            let (k, f) = bracket_keys(a, b);
            push(&mut out, k, f * ca * cb);
        }
    }
    prune(out)
}

/// `c(r) = [r12, r13] + [r12, r23] + [r13, r23]`, expanded over every
/// ordered pair of terms of `r`.
pub fn cybe(r: &Tensor2) -> Vec3 {
    let t = terms2(r);
    let mut out = Vec3::new();
    for (a1, b1, c1) in &t {
        for (a2, b2, c2) in &t {
            let c = c1 * c2;
            let (k, f) = bracket_keys(a1, a2);
            push(&mut out, (k, b1.clone(), b2.clone()), &f * &c);
            let (k, f) = bracket_keys(b1, a2);
            push(&mut out, (a1.clone(), k, b2.clone()), &f * &c);
            let (k, f) = bracket_keys(b1, b2);
            push(&mut out, (a1.clone(), a2.clone(), k), &f * &c);
        }
    }
    prune(out)
}

/// Diagonal action of one basis key on a three-fold tensor.
pub fn act3_key(a: &Key, w: &Vec3) -> Vec3 {
    let mut out = Vec3::new();
    for ((x, y, z), c) in w {
        let (k, f) = bracket_keys(a, x);
        push(&mut out, (k, y.clone(), z.clone()), &f * c);
        let (k, f) = bracket_keys(a, y);
        push(&mut out, (x.clone(), k, z.clone()), &f * c);
        let (k, f) = bracket_keys(a, z);
        push(&mut out, (x.clone(), y.clone(), k), &f * c);
    }
    prune(out)
}

type Word = Vec<Key>;
type Words3 = BTreeMap<(Word, Word, Word), BigRational>;

/// Places the two factors of each term of `r` in slots `i` and `j`, with the
/// empty word elsewhere.
fn embed(r: &Tensor2, i: usize, j: usize) -> Words3 {
    let mut out = Words3::new();
    for (a, b, c) in terms2(r) {
        let mut slots: [Word; 3] = Default::default();
        slots[i] = vec![a];
        slots[j] = vec![b];
        let [x, y, z] = slots;
        push(&mut out, (x, y, z), c);
    }
    out
}

fn concat(x: &Word, y: &Word) -> Word {
    x.iter().chain(y).cloned().collect()
}

fn commutator(p: &Words3, q: &Words3) -> Words3 {
    let mut out = Words3::new();
    for ((x1, y1, z1), c1) in p {
        for ((x2, y2, z2), c2) in q {
            let c = c1 * c2;
            push(&mut out, (concat(x1, x2), concat(y1, y2), concat(z1, z2)), c.clone());
            push(&mut out, (concat(x2, x1), concat(y2, y1), concat(z2, z1)), -c);
        }
    }
    prune(out)
}

/// `c(r)` computed from its definition in the tensor cube of the tensor
/// algebra, then lowered to `L⊗L⊗L` through `xy − yx ↦ [x,y]`.
///
/// Panics if a slot holds a word the lowering cannot interpret, i.e. if the
/// result is not in the image of `L⊗L⊗L`.
pub fn cybe_words(r: &Tensor2) -> Vec3 {
    let (r12, r13, r23) = (embed(r, 0, 1), embed(r, 0, 2), embed(r, 1, 2));
    let mut sum = Words3::new();
    for part in [commutator(&r12, &r13), commutator(&r12, &r23), commutator(&r13, &r23)] {
        for (k, c) in part {
            push(&mut sum, k, c);
        }
    }
    let sum = prune(sum);
    let half = BigRational::new(1.into(), 2.into());
    let mut out = Vec3::new();
    for ((x, y, z), c) in &sum {
        let long: Vec<usize> = [x, y, z].iter().enumerate().filter(|(_, w)| w.len() != 1).map(|(i, _)| i).collect();
        assert_eq!(long.len(), 1, "term outside the image of L⊗L⊗L");
        let slot = long[0];
        let word = [x, y, z][slot];
        assert_eq!(word.len(), 2, "word of length {} survives", word.len());
        let mut swapped = [x.clone(), y.clone(), z.clone()];
        swapped[slot] = vec![word[1].clone(), word[0].clone()];
        let [sx, sy, sz] = swapped;
        let partner = sum.get(&(sx, sy, sz)).cloned().unwrap_or_else(BigRational::zero);
        assert!((c + &partner).is_zero(), "symmetric word survives in slot {slot}");
        let (k, f) = bracket_keys(&word[0], &word[1]);
        let mut keys = [x.first().cloned(), y.first().cloned(), z.first().cloned()];
        keys[slot] = Some(k);
        let [a, b, d] = keys.map(Option::unwrap);
        push(&mut out, (a, b, d), f * c * &half);
    }
    prune(out)
}

pub mod strategies {
    use proptest::prelude::*;

    use virbi::algebra::{BasisIndex, Element};
    use virbi::scalar::ratio;
    use virbi::tensor::{Tensor2, Tensor3};

    /// Degrees in `{−2, −3/2, …, 2}`, exponents in `[−2, 2]`.
    pub fn basis(vars: usize) -> impl Strategy<Value = BasisIndex> {
        (-4i64..=4, prop::collection::vec(-2i64..=2, vars))
            .prop_map(|(h, e)| BasisIndex::laurent(ratio(h, 2), e))
    }

    /// Nonzero rationals `p/q` with `|p| ≤ 3`, `q ∈ {1, 2, 3}`.
    pub fn coeff() -> impl Strategy<Value = num_rational::BigRational> {
        (prop_oneof![-3i64..=-1, 1i64..=3], 1i64..=3).prop_map(|(p, q)| ratio(p, q))
    }

    pub fn element(vars: usize) -> impl Strategy<Value = Element> {
        prop::collection::vec((basis(vars), coeff()), 0..=3).prop_map(|terms| {
            let mut x = Element::zero();
            for (b, c) in terms {
                x.add_term(b, c);
            }
            x
        })
    }

    pub fn tensor2(vars: usize) -> impl Strategy<Value = Tensor2> {
        prop::collection::vec((basis(vars), basis(vars), coeff()), 0..=3).prop_map(|terms| {
            let mut w = Tensor2::zero();
            for (a, b, c) in terms {
                w.add_term((a, b), c);
            }
            w
        })
    }

    pub fn tensor3(vars: usize) -> impl Strategy<Value = Tensor3> {
        prop::collection::vec((basis(vars), basis(vars), basis(vars), coeff()), 0..=3).prop_map(|terms| {
            let mut w = Tensor3::zero();
            for (a, b, d, c) in terms {
                w.add_term((a, b, d), c);
            }
            w
        })
    }

    /// `w − τ(w)` for a random `w`.
    pub fn skew_tensor2(vars: usize) -> impl Strategy<Value = Tensor2> {
        tensor2(vars).prop_map(|w| w.sub(&virbi::tensor::twist(&w)))
    }
}
