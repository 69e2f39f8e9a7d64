use curvecount_core::{CohClass, DegreeCoeff, Ring, RingSpec};
use proptest::prelude::*;

fn shapes() -> Vec<Ring> {
    let base = |k| RingSpec::new().projective("y", k).projective("a", 2);
    let p3p2 = Ring::new(base(3)).unwrap();
    let a = p3p2.gen("a").unwrap();
    let three = DegreeCoeff::constant(3);
    let lambda = p3p2
        .extend_proj_bundle("l", vec![a.scale(&three), a.pow(2).scale(&three)])
        .unwrap();
    vec![
        Ring::new(base(1)).unwrap(),
        Ring::new(base(2)).unwrap(),
        p3p2,
        lambda,
    ]
}

/// A random class: integer-polynomial coefficients on random monomials.
fn class(ring: &Ring, terms: &[(Vec<u32>, Vec<i64>)]) -> CohClass {
    let n = ring.num_generators();
    let mut x = ring.zero();
    for (exps, coeffs) in terms {
        let exps: Vec<u32> = exps.iter().cycle().take(n).copied().collect();
        x = &x + &ring.monomial(&exps, DegreeCoeff::from_coeffs(coeffs, 1));
    }
    x
}

fn terms() -> impl Strategy<Value = Vec<(Vec<u32>, Vec<i64>)>> {
    prop::collection::vec(
        (
            prop::collection::vec(0u32..4, 3),
            prop::collection::vec(-9i64..10, 1..3),
        ),
        0..5,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(shape in 0usize..4, x in terms(), y in terms(), z in terms()) {
        let ring = &shapes()[shape];
        let (x, y, z) = (class(ring, &x), class(ring, &y), class(ring, &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &ring.one(), x.clone());
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn grading_is_additive(shape in 0usize..4, x in terms(), y in terms()) {
        let ring = &shapes()[shape];
        let (x, y) = (class(ring, &x), class(ring, &y));
        let prod = &x * &y;
        for k in 0..=ring.dim() {
            let mut expected = ring.zero();
            for i in 0..=k {
                expected = &expected + &(&x.component(i) * &y.component(k - i));
            }
            prop_assert_eq!(prod.component(k), expected);
        }
        prop_assert!(prod.max_degree().is_none_or(|m| m <= ring.dim()));
    }

    #[test]
    fn integration_is_linear(shape in 0usize..4, x in terms(), y in terms(), c in -20i64..20) {
        let ring = &shapes()[shape];
        let (x, y) = (class(ring, &x), class(ring, &y));
        let c = DegreeCoeff::constant(c);
        let lhs = ring.integrate(&(&x.scale(&c) + &y)).unwrap();
        let rhs = ring.integrate(&x).unwrap() * &c + ring.integrate(&y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn top_degree_products_integrate_to_one() {
    for ring in shapes() {
        let top = ring.monomial(&ring.top_monomial(), DegreeCoeff::one());
        assert_eq!(ring.integrate(&top).unwrap(), DegreeCoeff::one());
        assert_eq!(top.homogeneous_degree(), Some(ring.dim()));
    }
}

#[test]
fn fiber_integral_of_the_tautological_class() {
    let lambda = shapes().pop().unwrap();
    let l = lambda.gen("l").unwrap();
    let base = lambda.prefix(2).unwrap();
    let a = base.gen("a").unwrap();
    assert_eq!(lambda.pushforward(&l).unwrap(), base.one());
    assert_eq!(
        lambda.pushforward(&l.pow(2)).unwrap(),
        a.scale(&DegreeCoeff::constant(-3))
    );
    assert_eq!(
        lambda.pushforward(&l.pow(3)).unwrap(),
        a.pow(2).scale(&DegreeCoeff::constant(6))
    );
}
