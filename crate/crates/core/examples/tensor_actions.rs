//! The diagonal action on L⊗L and L⊗L⊗L, the twist τ and the cyclic shift ε.

use virbi::algebra::MapAlgebra;
use virbi::parser::{parse_element, parse_tensor2, parse_tensor3, render_tensor2, render_tensor3};
use virbi::tensor::{cyclic, is_skew, skew_part, symmetrize, twist};

fn main() {
    let g = MapAlgebra::laurent(1);
    let a = parse_element(&g, "L[1;0]").unwrap();
    let w = parse_tensor2(&g, "L[0;0] (x) L[-1;1] + 2*L[1;1] (x) L[0;0]").unwrap();
    println!("w        = {}", render_tensor2(&w));
    println!("a·w      = {}", render_tensor2(&g.act2(&a, &w)));
    println!("τ(w)     = {}", render_tensor2(&twist(&w)));
    println!("w + τ(w) = {}", render_tensor2(&symmetrize(&w)));
    println!("skew part: {} (skew: {})", render_tensor2(&skew_part(&w)), is_skew(&skew_part(&w)));

    let u = parse_tensor3(&g, "L[1;0] (x) L[2;0] (x) L[3;1]").unwrap();
    println!("u        = {}", render_tensor3(&u));
    println!("ε(u)     = {}", render_tensor3(&cyclic(&u)));
    println!("a·u      = {}", render_tensor3(&g.act3(&a, &u)));

    // The action commutes with τ.
    let lhs = twist(&g.act2(&a, &w));
    let rhs = g.act2(&a, &twist(&w));
    println!("τ(a·w) = a·τ(w): {}", lhs == rhs);
}
