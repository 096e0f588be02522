mod common;

use proptest::prelude::*;

use common::strategies::{element, tensor2, tensor3};
use virbi::algebra::MapAlgebra;
use virbi::coefficients::CoefficientAlgebra;
use virbi::error::Error;
use virbi::json::{element_from_json, element_to_json, tensor3_from_json, tensor3_to_json};
use virbi::parser::{parse_element, parse_tensor2, parse_tensor3, render_element, render_tensor2, render_tensor3};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn element_round_trip(x in element(2)) {
        let g = MapAlgebra::laurent(2);
        let text = render_element(&x);
        let back = parse_element(&g, &text).unwrap();
        prop_assert_eq!(render_element(&back), text);
        prop_assert_eq!(back, x);
    }

    #[test]
    fn tensor_round_trip(w2 in tensor2(1), w3 in tensor3(0)) {
        prop_assert_eq!(parse_tensor2(&MapAlgebra::laurent(1), &render_tensor2(&w2)).unwrap(), w2);
        prop_assert_eq!(parse_tensor3(&MapAlgebra::laurent(0), &render_tensor3(&w3)).unwrap(), w3);
    }

    #[test]
    fn json_round_trip(x in element(1), w in tensor3(1)) {
        let g = MapAlgebra::laurent(1);
        prop_assert_eq!(element_from_json(&g, &element_to_json(&x)).unwrap(), x);
        prop_assert_eq!(tensor3_from_json(&g, &tensor3_to_json(&w)).unwrap(), w);
    }
}

#[test]
fn linear_combinations_collect() {
    let g = MapAlgebra::laurent(1);
    let x = parse_element(&g, "2*L[1/2;1] - (L[1/2;1] - 3/2*L[-1])").unwrap();
    assert_eq!(render_element(&x), "3/2*L[-1;0] + L[1/2;1]");
    assert!(parse_element(&g, "L[1;2] - L[1;2]").unwrap().is_zero());
    assert_eq!(render_element(&parse_element(&g, "0").unwrap()), "0");
}

#[test]
fn tensor_expressions_distribute() {
    let g = MapAlgebra::laurent(0);
    let w = parse_tensor2(&g, "(L[1] + L[2]) (x) 2*L[0]").unwrap();
    assert_eq!(render_tensor2(&w), "2*L[1](x)L[0] + 2*L[2](x)L[0]");
}

#[test]
fn errors_are_specific() {
    let g = MapAlgebra::laurent(2);
    assert!(matches!(parse_element(&g, "L[1;2]"), Err(Error::Arity { expected: 2, found: 1 })));
    assert!(matches!(parse_element(&g, "L[1/0;0,0]"), Err(Error::ZeroDenominator)));
    assert!(matches!(parse_element(&g, "L[1;0,0] +\n  * L[0;0,0]"), Err(Error::Parse { line: 2, .. })));
    assert!(parse_tensor2(&g, "L[1;0,0]").is_err());
    let t = MapAlgebra::new(CoefficientAlgebra::dual_numbers());
    assert!(parse_element(&t, "L[1;2]").is_err());
    assert_eq!(parse_element(&t, "L[1]").unwrap(), parse_element(&t, "L[1;0]").unwrap());
}
