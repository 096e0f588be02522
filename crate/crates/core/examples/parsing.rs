//! The text grammar and the JSON encodings.

use virbi::algebra::MapAlgebra;
use virbi::json::{element_to_json, tensor2_to_json};
use virbi::parser::{parse_element, parse_tensor2, render_element, render_tensor2};

fn main() {
    let g = MapAlgebra::laurent(1);
    let x = parse_element(&g, "2*(L[1/2;1] - L[0]) + 1/3*L[-1;-2]").unwrap();
    println!("element: {}", render_element(&x));
    println!("{}", serde_json::to_string_pretty(&element_to_json(&x)).unwrap());

    let w = parse_tensor2(&g, "(L[1;0] + L[2;0]) (x) -L[0;1]").unwrap();
    println!("tensor: {}", render_tensor2(&w));
    println!("{}", tensor2_to_json(&w));

    for bad in ["L[1;2", "L[1;2,3]", "L[1/0;0]"] {
        println!("{bad:?}: {}", parse_element(&g, bad).unwrap_err());
    }
}
