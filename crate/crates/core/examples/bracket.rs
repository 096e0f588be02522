//! Brackets in the Witt algebra, the loop algebra and a two-variable map algebra.

use virbi::algebra::MapAlgebra;
use virbi::parser::{parse_element, render_element};

fn show(g: &MapAlgebra, x: &str, y: &str) {
    let z = g.bracket(&parse_element(g, x).unwrap(), &parse_element(g, y).unwrap());
    println!("  [{x}, {y}] = {}", render_element(&z));
}

fn main() {
    let witt = MapAlgebra::laurent(0);
    println!("Witt algebra (degrees in Q):");
    show(&witt, "L[1]", "L[-1]");
    show(&witt, "L[1/2]", "L[3/2]");
    show(&witt, "L[2] + L[-2]", "L[0]");

    let loop_alg = MapAlgebra::laurent(1);
    println!("loop algebra, L[a;i] = L_a t^i:");
    show(&loop_alg, "L[1;2]", "L[2;3]");
    show(&loop_alg, "L[-1/2;1]", "L[1/2;-1]");

    let two = MapAlgebra::laurent(2);
    println!("map algebra over Q[t1^±, t2^±]:");
    show(&two, "L[1;1,0]", "L[-1;0,1]");

    let (x, y, z) = ("L[1;1] + L[0;-1]", "L[2;0]", "3*L[-1;2]");
    let p = |s| parse_element(&loop_alg, s).unwrap();
    let jac = loop_alg.jacobi_residual(&p(x), &p(y), &p(z));
    println!("Jacobi residual for ({x}, {y}, {z}): {}", render_element(&jac));
}
