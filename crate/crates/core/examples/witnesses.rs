//! Explicit elements showing that a·r leaves Im(1−τ), or that c is not
//! annihilated by L.

use virbi::algebra::MapAlgebra;
use virbi::cohomology::{annihilator_witness, skewness_witness};
use virbi::parser::{parse_tensor2, parse_tensor3};
use virbi::window::Window;

fn main() {
    let g = MapAlgebra::laurent(1);
    let search = Window::integer(3, 3, 1).unwrap();
    for r in [
        "L[1;0] (x) L[-1;0]",
        "L[0;0] (x) L[0;0]",
        "L[2;1] (x) L[1;0] + L[1;0] (x) L[2;1]",
        "L[1;0] (x) L[-1;0] - L[-1;0] (x) L[1;0]",
    ] {
        let w = skewness_witness(&g, &parse_tensor2(&g, r).unwrap(), &search).unwrap();
        println!("skewness, r = {r}: {w:?}");
    }
    for c in ["L[1;0] (x) L[1;0] (x) L[-2;0]", "L[0;0] (x) L[0;0] (x) L[0;0]", "0"] {
        let w = annihilator_witness(&g, &parse_tensor3(&g, c).unwrap(), &search).unwrap();
        println!("annihilator, c = {c}: {w:?}");
    }
}
