mod common;

use proptest::prelude::*;

use common::strategies::{element, skew_tensor2, tensor2};
use virbi::algebra::{Element, MapAlgebra};
use virbi::bialgebra::RMatrix;
use virbi::coefficients::{CoefficientAlgebra, Mono};
use virbi::parser::{parse_element, parse_tensor2, parse_tensor3};
use virbi::scalar::{int, ratio};
use virbi::tensor::{is_skew, reverse3, twist};

fn loop1() -> MapAlgebra {
    MapAlgebra::laurent(1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cybe_matches_both_expansions(r in tensor2(1)) {
        let lib = common::tensor3(&loop1().cybe_c(&RMatrix(r.clone())));
        prop_assert_eq!(&lib, &common::cybe(&r));
        prop_assert_eq!(&lib, &common::cybe_words(&r));
    }

    #[test]
    fn cybe_of_twisted_r(r in tensor2(1)) {
        // c(τr) is −c(r) with the outer slots exchanged.
        let g = loop1();
        let lhs = g.cybe_c(&RMatrix(twist(&r)));
        prop_assert_eq!(lhs, reverse3(&g.cybe_c(&RMatrix(r))).neg());
    }

    #[test]
    fn skew_r_gives_skew_cobracket(r in skew_tensor2(1), x in element(1)) {
        prop_assert!(is_skew(&loop1().cobracket(&RMatrix(r), &x)));
    }

    #[test]
    fn cojacobi_equals_mybe_for_skew_r(r in skew_tensor2(1), x in element(1)) {
        let g = loop1();
        let r = RMatrix(r);
        prop_assert_eq!(g.cojacobi_residual(&r, &x), g.mybe_residual(&r, &x));
    }

    #[test]
    fn compatibility_for_any_r(r in tensor2(1), x in element(1), y in element(1)) {
        prop_assert!(loop1().compatibility_residual(&RMatrix(r), &x, &y).is_zero());
    }

    #[test]
    fn triangular_vanishes(h in prop_oneof![-4i64..=-1, 1i64..=4], e in -3i64..=3, x in element(1)) {
        let g = loop1();
        let r = g.triangular_r(&ratio(h, 2), Mono::Laurent(vec![e])).unwrap();
        prop_assert!(r.is_skew());
        prop_assert!(g.cybe_c(&r).is_zero());
        prop_assert!(g.cojacobi_residual(&r, &x).is_zero());
    }
}

#[test]
fn cojacobi_and_mybe_differ_for_non_skew_r() {
    let g = loop1();
    let r = RMatrix(parse_tensor2(&g, "L[1;0] (x) L[-1;0]").unwrap());
    let x = parse_element(&g, "L[2;1]").unwrap();
    assert!(!r.is_skew());
    assert_ne!(g.cojacobi_residual(&r, &x), g.mybe_residual(&r, &x));
}

#[test]
fn witt_sl2_r_is_not_a_solution() {
    // Hand expansion of the nine terms for r = L_1⊗L_{−1} − L_{−1}⊗L_1.
    let g = MapAlgebra::laurent(0);
    let r = RMatrix(parse_tensor2(&g, "L[1](x)L[-1] - L[-1](x)L[1]").unwrap());
    let expected = parse_tensor3(
        &g,
        "2*L[1](x)L[0](x)L[-1] + 2*L[0](x)L[-1](x)L[1] - 2*L[1](x)L[-1](x)L[0] \
         - 2*L[0](x)L[1](x)L[-1] + 2*L[-1](x)L[1](x)L[0] - 2*L[-1](x)L[0](x)L[1]",
    )
    .unwrap();
    assert_eq!(g.cybe_c(&r), expected);
    assert_eq!(common::tensor3(&expected), common::cybe(r.tensor()));
}

#[test]
fn triangular_needs_nonzero_degree() {
    assert!(loop1().triangular_r(&int(0), Mono::Laurent(vec![1])).is_err());
    assert!(loop1().triangular_r(&int(1), Mono::Laurent(vec![1, 2])).is_err());
}

#[test]
fn triangular_on_table_backend() {
    let g = MapAlgebra::new(CoefficientAlgebra::dual_numbers());
    let r = g.triangular_r(&ratio(-3, 2), Mono::Table(1)).unwrap();
    assert!(g.cybe_c(&r).is_zero());
    let sample: Vec<Element> = ["L[1;0] + L[-1/2;1]", "3*L[2;1]", "L[0;0] - L[1/2;0]"]
        .iter()
        .map(|s| parse_element(&g, s).unwrap())
        .collect();
    let rep = g.certify_bialgebra(&r, &sample, 7);
    assert!(rep.passed(), "{rep:?}");
}

#[test]
fn certify_rejects_non_solutions() {
    let g = loop1();
    let sample: Vec<Element> = ["L[1;0]", "L[-1;2]", "L[2;-1] + L[0;1]"]
        .iter()
        .map(|s| parse_element(&g, s).unwrap())
        .collect();
    let non_skew = RMatrix(parse_tensor2(&g, "L[1;0] (x) L[0;0]").unwrap());
    let rep = g.certify_bialgebra(&non_skew, &sample, 1);
    assert!(!rep.skew && !rep.passed());
    let skew = RMatrix(parse_tensor2(&g, "L[1;0](x)L[-1;0] - L[-1;0](x)L[1;0]").unwrap());
    let rep = g.certify_bialgebra(&skew, &sample, 1);
    assert!(rep.skew && !rep.cybe_zero && rep.max_cojacobi_terms > 0);
    assert!(rep.verdict.starts_with("not certified"));
}
