//! Triangular coboundary Lie bialgebras from r = a⊗b − b⊗a with [a, b] = b.

use virbi::algebra::MapAlgebra;
use virbi::coefficients::Mono;
use virbi::parser::{parse_element, render_tensor2};
use virbi::sampling::{trial_rng, Sampler};
use virbi::scalar::ratio;
use virbi::window::Window;

fn main() {
    let g = MapAlgebra::laurent(1);
    let r = g.triangular_r(&ratio(3, 2), Mono::Laurent(vec![-1])).unwrap();
    println!("r = {}", render_tensor2(r.tensor()));
    println!("skew: {}, c(r) = 0: {}", r.is_skew(), g.cybe_c(&r).is_zero());

    let x = parse_element(&g, "L[1;2] - 1/2*L[-1/2;0]").unwrap();
    println!("cobracket of x = L[1;2] - 1/2*L[-1/2;0]: {}", render_tensor2(&g.cobracket(&r, &x)));

    let window = Window::symmetric(&ratio(2, 1), &ratio(1, 2), 2, 1).unwrap();
    let sampler = Sampler::new(&g, &window).unwrap();
    let mut rng = trial_rng(2024, 0);
    let sample: Vec<_> = (0..50).map(|_| sampler.element(&mut rng)).collect();
    let report = g.certify_bialgebra(&r, &sample, 2024);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
