//! Splitting a derivation into Γ-homogeneous parts and the degree-zero check.

use virbi::algebra::MapAlgebra;
use virbi::cohomology::{coboundary_of, degree_zero_check, grading_split, is_homogeneous};
use virbi::parser::parse_tensor2;
use virbi::scalar::{format_rational, ratio};
use virbi::window::Window;

fn main() {
    let g = MapAlgebra::laurent(1);
    let window = Window::symmetric(&ratio(1, 1), &ratio(1, 2), 1, 1).unwrap();
    let v = parse_tensor2(&g, "L[1;0] (x) L[0;1] + L[-1/2;0] (x) L[0;0] + L[1/2;1] (x) L[-1/2;-1]").unwrap();
    let d = coboundary_of(&g, &v, &window).unwrap();
    for (deg, part) in grading_split(&d) {
        println!("degree {}: homogeneous {}", format_rational(&deg), is_homogeneous(&part, &deg));
    }

    let v0 = parse_tensor2(&g, "L[1;0] (x) L[-1;1] - L[1/2;0] (x) L[-1/2;0]").unwrap();
    let report = degree_zero_check(&g, &coboundary_of(&g, &v0, &window).unwrap());
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
