//! Map algebras over a finite-dimensional coefficient algebra given by a
//! structure table, here Q[x]/(x² − 2) loaded from JSON.

use std::path::Path;

use virbi::algebra::MapAlgebra;
use virbi::commands::load_table;
use virbi::parser::{parse_element, render_element};

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let g = MapAlgebra::new(load_table(&dir.join("quadratic_sqrt2.json")).unwrap());
    println!("backend: {}", g.coefficients().describe());
    let p = |s| parse_element(&g, s).unwrap();
    for (x, y) in [("L[1;1]", "L[2;1]"), ("L[1/2;0]", "L[-1/2;1]"), ("L[1;0] + L[1;1]", "L[-1;1]")] {
        println!("[{x}, {y}] = {}", render_element(&g.bracket(&p(x), &p(y))));
    }
    let jac = g.jacobi_residual(&p("L[1;1]"), &p("L[2;1]"), &p("L[-1;1]"));
    println!("Jacobi residual: {}", render_element(&jac));

    match load_table(&dir.join("not_associative.json")) {
        Ok(_) => println!("bad table accepted"),
        Err(e) => println!("rejected: {e}"),
    }
}
