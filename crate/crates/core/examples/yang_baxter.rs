//! The classical Yang–Baxter element c(r) and the modified equation x·c(r) = 0.
//!
//! For skew r the co-Jacobi residual of x ↦ x·r equals x·c(r), so the
//! cobracket is a Lie coalgebra exactly when c(r) is L-invariant.

use virbi::algebra::MapAlgebra;
use virbi::bialgebra::RMatrix;
use virbi::parser::{parse_element, parse_tensor2, render_tensor3};

fn main() {
    let g = MapAlgebra::laurent(0);
    let r = RMatrix(parse_tensor2(&g, "L[1] (x) L[-1] - L[-1] (x) L[1]").unwrap());
    let c = g.cybe_c(&r);
    println!("r = L[1]⊗L[-1] − L[-1]⊗L[1]");
    println!("c(r) = {}", render_tensor3(&c));

    for x in ["L[0]", "L[1]", "L[2]"] {
        let x_el = parse_element(&g, x).unwrap();
        let mybe = g.mybe_residual(&r, &x_el);
        let cojacobi = g.cojacobi_residual(&r, &x_el);
        println!(
            "x = {x}: x·c(r) has {} terms, co-Jacobi residual has {} terms, equal: {}",
            mybe.len(),
            cojacobi.len(),
            mybe == cojacobi
        );
    }

    let tri = RMatrix(parse_tensor2(&g, "L[0] (x) L[1] - L[1] (x) L[0]").unwrap());
    println!("r = L[0]⊗L[1] − L[1]⊗L[0]: c(r) = {}", render_tensor3(&g.cybe_c(&tri)));
}
