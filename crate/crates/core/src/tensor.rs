//! Tensor square and cube of the algebra as modules under the diagonal
//! adjoint action, with the twist `τ` and the cyclic permutation `ε`.

use num_traits::Zero;

use crate::algebra::{BasisIndex, Element, MapAlgebra};
use crate::combination::Combination;
use crate::scalar::{ratio, Scalar};

pub type Pair = (BasisIndex, BasisIndex);
pub type Triple = (BasisIndex, BasisIndex, BasisIndex);

/// An element of `V = L ⊗ L`.
pub type Tensor2 = Combination<Pair>;
/// An element of `L ⊗ L ⊗ L`.
pub type Tensor3 = Combination<Triple>;

/// `x ⊗ y` for algebra elements.
pub fn tensor2(x: &Element, y: &Element) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            out.add_term((a.clone(), b.clone()), ca * cb);
        }
    }
    out
}

pub fn tensor3(x: &Element, y: &Element, z: &Element) -> Tensor3 {
    let mut out = Tensor3::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            let cab = ca * cb;
            for (c, cc) in z {
                out.add_term((a.clone(), b.clone(), c.clone()), &cab * cc);
            }
        }
    }
    out
}

impl MapAlgebra {
    /// `a·(u⊗v) = [a,u]⊗v + u⊗[a,v]`, extended bilinearly.
    pub fn act2(&self, a: &Element, w: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (x, cx) in a {
            for ((u, v), cw) in w {
                let c = cx * cw;
                for (bu, k) in &self.bracket_basis(x, u) {
                    out.add_term((bu.clone(), v.clone()), k * &c);
                }
                for (bv, k) in &self.bracket_basis(x, v) {
                    out.add_term((u.clone(), bv.clone()), k * &c);
                }
            }
        }
        out
    }

    /// Three-slot Leibniz action on `L ⊗ L ⊗ L`.
    pub fn act3(&self, a: &Element, w: &Tensor3) -> Tensor3 {
        let mut out = Tensor3::zero();
        for (x, cx) in a {
            for ((u, v, z), cw) in w {
                let c = cx * cw;
                for (b, k) in &self.bracket_basis(x, u) {
                    out.add_term((b.clone(), v.clone(), z.clone()), k * &c);
                }
                for (b, k) in &self.bracket_basis(x, v) {
                    out.add_term((u.clone(), b.clone(), z.clone()), k * &c);
                }
                for (b, k) in &self.bracket_basis(x, z) {
                    out.add_term((u.clone(), v.clone(), b.clone()), k * &c);
                }
            }
        }
        out
    }
}

/// `τ(x⊗y) = y⊗x`; coefficient monomials travel with their slot.
pub fn twist(w: &Tensor2) -> Tensor2 {
    w.map_keys(|(u, v)| (v.clone(), u.clone()))
}

/// `ε(x₁⊗x₂⊗x₃) = x₂⊗x₃⊗x₁`.
pub fn cyclic(w: &Tensor3) -> Tensor3 {
    w.map_keys(|(a, b, c)| (b.clone(), c.clone(), a.clone()))
}

/// `x₁⊗x₂⊗x₃ ↦ x₃⊗x₂⊗x₁`.
pub fn reverse3(w: &Tensor3) -> Tensor3 {
    w.map_keys(|(a, b, c)| (c.clone(), b.clone(), a.clone()))
}

/// `w ∈ Im(1−τ)`, decided as `w + τ(w) = 0`.
pub fn is_skew(w: &Tensor2) -> bool {
    w.iter().all(|((u, v), c)| {
        let mirrored = w.coeff(&(v.clone(), u.clone()));
        (c + mirrored).is_zero()
    })
}

/// `(w − τ(w))/2`.
pub fn skew_part(w: &Tensor2) -> Tensor2 {
    w.sub(&twist(w)).scale(&ratio(1, 2))
}

/// `(1+τ)(w)`.
pub fn symmetrize(w: &Tensor2) -> Tensor2 {
    w.add(&twist(w))
}

/// Terms of `w` whose slot degrees sum to `d`, i.e. the component in `V_d`.
pub fn tensor_gamma_component(w: &Tensor2, d: &Scalar) -> Tensor2 {
    w.filter(|(u, v)| &(&u.alpha + &v.alpha) == d)
}

pub fn tensor3_gamma_component(w: &Tensor3, d: &Scalar) -> Tensor3 {
    w.filter(|(u, v, z)| &(&(&u.alpha + &v.alpha) + &z.alpha) == d)
}

/// Total Γ-degrees occurring in `w`.
pub fn tensor_gamma_degrees(w: &Tensor2) -> std::collections::BTreeSet<Scalar> {
    w.keys().map(|(u, v)| &u.alpha + &v.alpha).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use num_traits::One;

    fn lt(alpha: i64, i: i64) -> BasisIndex {
        BasisIndex::laurent(int(alpha), [i])
    }

    fn e(b: BasisIndex) -> Element {
        Element::single(b, Scalar::one())
    }

    fn t2(a: BasisIndex, b: BasisIndex) -> Tensor2 {
        Tensor2::single((a, b), Scalar::one())
    }

    #[test]
    fn degree_zero_pair_under_l01() {
        let g = MapAlgebra::laurent(1);
        for alpha in [1, 2, -3] {
            let w = t2(lt(alpha, 0), lt(-alpha, 0));
            let got = g.act2(&e(lt(0, 1)), &w);
            let mut want = t2(lt(alpha, 1), lt(-alpha, 0)).scale(&int(alpha));
            want.sub_assign(&t2(lt(alpha, 0), lt(-alpha, 1)).scale(&int(alpha)));
            assert_eq!(got, want);
        }
    }

    #[test]
    fn l11_on_l0_l0() {
        let g = MapAlgebra::laurent(1);
        let got = g.act2(&e(lt(1, 1)), &t2(lt(0, 0), lt(0, 0)));
        let want = t2(lt(1, 1), lt(0, 0)).add(&t2(lt(0, 0), lt(1, 1))).neg();
        assert_eq!(got, want);
        assert!(g.act2(&Element::zero(), &got).is_zero());
    }

    #[test]
    fn act3_examples() {
        let g = MapAlgebra::laurent(0);
        let l = |a: i64| BasisIndex::laurent(int(a), Vec::new());
        let w = Tensor3::single((l(0), l(0), l(0)), Scalar::one());
        let got = g.act3(&e(l(1)), &w);
        let mut want = Tensor3::zero();
        want.add_term((l(1), l(0), l(0)), int(-1));
        want.add_term((l(0), l(1), l(0)), int(-1));
        want.add_term((l(0), l(0), l(1)), int(-1));
        assert_eq!(got, want);

        let w = Tensor3::single((l(2), l(-5), l(1)), Scalar::one());
        assert_eq!(g.act3(&e(l(0)), &w), w.scale(&int(-2)));
        assert!(g.act3(&e(l(3)), &Tensor3::zero()).is_zero());
    }

    #[test]
    fn twist_and_cyclic() {
        let w = t2(lt(1, 1), lt(2, 2));
        assert_eq!(twist(&w), t2(lt(2, 2), lt(1, 1)));
        assert_eq!(twist(&twist(&w)), w);
        let d = t2(lt(1, 1), lt(1, 1));
        assert_eq!(twist(&d), d);

        let c = Tensor3::single((lt(1, 0), lt(2, 0), lt(3, 0)), int(5));
        assert_eq!(cyclic(&c), Tensor3::single((lt(2, 0), lt(3, 0), lt(1, 0)), int(5)));
        assert_eq!(cyclic(&cyclic(&cyclic(&c))), c);
    }

    #[test]
    fn skewness() {
        let s = t2(lt(1, 0), lt(2, 0)).sub(&t2(lt(2, 0), lt(1, 0)));
        assert!(is_skew(&s));
        assert!(!is_skew(&t2(lt(0, 0), lt(0, 0))));
        let w = t2(lt(1, 0), lt(2, 0)).add(&t2(lt(0, 0), lt(0, 0)));
        assert!(is_skew(&skew_part(&w)));
        assert!(is_skew(&Tensor2::zero()));
    }

    #[test]
    fn gamma_components() {
        let w = t2(lt(1, 0), lt(-1, 0)).add(&t2(lt(0, 0), lt(1, 0)));
        assert_eq!(tensor_gamma_component(&w, &int(0)), t2(lt(1, 0), lt(-1, 0)));
        assert!(tensor_gamma_component(&w, &int(7)).is_zero());
    }
}
