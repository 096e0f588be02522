mod common;

use proptest::prelude::*;

use common::strategies::{element, tensor2, tensor3};
use virbi::algebra::MapAlgebra;
use virbi::tensor::{cyclic, is_skew, reverse3, skew_part, symmetrize, twist};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn module_law_tensor2(a in element(1), b in element(1), w in tensor2(1)) {
        let g = MapAlgebra::laurent(1);
        let lhs = g.act2(&g.bracket(&a, &b), &w);
        prop_assert_eq!(lhs, g.act2(&a, &g.act2(&b, &w)).sub(&g.act2(&b, &g.act2(&a, &w))));
    }

    #[test]
    fn module_law_tensor3(a in element(2), b in element(2), w in tensor3(2)) {
        let g = MapAlgebra::laurent(2);
        let lhs = g.act3(&g.bracket(&a, &b), &w);
        prop_assert_eq!(lhs, g.act3(&a, &g.act3(&b, &w)).sub(&g.act3(&b, &g.act3(&a, &w))));
    }

    #[test]
    fn act3_matches_reference(a in common::strategies::basis(1), w in tensor3(1)) {
        let g = MapAlgebra::laurent(1);
        let key = common::element(&g.basis_element(a.clone())).into_keys().next().unwrap();
        prop_assert_eq!(common::tensor3(&g.act3(&g.basis_element(a), &w)), common::act3_key(&key, &common::tensor3(&w)));
    }

    #[test]
    fn involutions(w2 in tensor2(1), w3 in tensor3(1)) {
        prop_assert_eq!(twist(&twist(&w2)), w2.clone());
        prop_assert_eq!(cyclic(&cyclic(&cyclic(&w3))), w3.clone());
        prop_assert_eq!(reverse3(&reverse3(&w3)), w3);
    }

    #[test]
    fn equivariance(a in element(1), w2 in tensor2(1), w3 in tensor3(1)) {
        let g = MapAlgebra::laurent(1);
        prop_assert_eq!(twist(&g.act2(&a, &w2)), g.act2(&a, &twist(&w2)));
        prop_assert_eq!(cyclic(&g.act3(&a, &w3)), g.act3(&a, &cyclic(&w3)));
        prop_assert_eq!(reverse3(&g.act3(&a, &w3)), g.act3(&a, &reverse3(&w3)));
    }

    #[test]
    fn symmetric_and_skew_parts(w in tensor2(1)) {
        prop_assert!(is_skew(&skew_part(&w)));
        prop_assert_eq!(is_skew(&w), symmetrize(&w).is_zero());
        prop_assert_eq!(twist(&symmetrize(&w)), symmetrize(&w));
    }
}
