//! Recovering v from the derivation x ↦ x·v, and certifying that a corrupted
//! table is not inner.

use virbi::algebra::MapAlgebra;
use virbi::cohomology::{coboundary_of, cocycle_sweep, inner_solve, InnerSolution};
use virbi::parser::{parse_element, parse_tensor2, render_tensor2};
use virbi::scalar::ratio;
use virbi::window::Window;

fn main() {
    let g = MapAlgebra::laurent(1);
    let window = Window::symmetric(&ratio(1, 1), &ratio(1, 2), 1, 1).unwrap();
    let v = parse_tensor2(&g, "L[1/2;1] (x) L[0;0] - 2*L[-1;0] (x) L[1;-1]").unwrap();
    let d = coboundary_of(&g, &v, &window).unwrap();
    println!("D = x ↦ x·v on {} domain symbols", d.domain().len());
    println!("cocycle pairs failing: {}", cocycle_sweep(&g, &d).pairs_failing);

    match inner_solve(&g, &d, None).unwrap() {
        InnerSolution::Inner(found) => {
            println!("recovered v' = {}", render_tensor2(&found));
            println!("D(v') = D(v): {}", coboundary_of(&g, &found, &window).unwrap() == d);
        }
        InnerSolution::Inconsistent(_) => unreachable!("a coboundary is inner"),
    }

    let x = parse_element(&g, "L[1/2;0]").unwrap().into_iter().next().unwrap().0;
    let mut corrupted = d.clone();
    corrupted.set(x.clone(), d.value(&x).add(&parse_tensor2(&g, "L[0;0] (x) L[1/2;0]").unwrap()));
    match inner_solve(&g, &corrupted, None).unwrap() {
        InnerSolution::Inner(_) => println!("corrupted table unexpectedly inner"),
        InnerSolution::Inconsistent(cert) => {
            println!("corrupted at {x}: no v exists");
            println!("{}", serde_json::to_string_pretty(&virbi::json::certificate_to_json(&cert)).unwrap());
        }
    }
}
