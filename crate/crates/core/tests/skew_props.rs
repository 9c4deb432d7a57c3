mod common;

use common::strategies::*;
use intdiff::arith::{PolyH, RatFunc};
use intdiff::skew::{B1Element, CalB1Element};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn b1_ring_axioms(a in b1_s(), b in b1_s(), c in b1_s()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &B1Element::one(), a.clone());
    }

    #[test]
    fn calb1_ring_axioms(a in calb1_s(2), b in calb1_s(2), c in calb1_s(2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn embedding_is_multiplicative(a in b1_s(), b in b1_s()) {
        prop_assert_eq!((&a * &b).embed(), &a.embed() * &b.embed());
    }

    #[test]
    fn projection_from_i1(a in i1_s(4), b in i1_s(4)) {
        prop_assert_eq!((&a * &b).project_b1(), &a.project_b1() * &b.project_b1());
    }

    #[test]
    fn division_with_remainder(b in calb1_s(4), c in nonzero_calb1_s(3)) {
        let lc = c.length().unwrap();
        let (q, r) = b.right_divide(&c).unwrap();
        prop_assert_eq!(&(&q * &c) + &r, b.clone());
        prop_assert!(r.length().is_none_or(|l| l < lc));
        let (q, r) = b.left_divide(&c).unwrap();
        prop_assert_eq!(&(&c * &q) + &r, b.clone());
        prop_assert!(r.length().is_none_or(|l| l < lc));
    }

    #[test]
    fn involution_reverses_products(a in b1_s(), b in b1_s()) {
        prop_assert_eq!((&a * &b).involution(), &b.involution() * &a.involution());
    }
}

#[test]
fn division_by_zero() {
    let b = CalB1Element::d_pow(1);
    assert_eq!(b.right_divide(&CalB1Element::zero()), Err(intdiff::Error::DivisionByZero));
    assert_eq!(b.left_divide(&CalB1Element::zero()), Err(intdiff::Error::DivisionByZero));
}

#[test]
fn left_division_example() {
    let h = CalB1Element::term(RatFunc::from_poly(PolyH::var()), 0);
    let b = &CalB1Element::d_pow(1) * &h;
    let (q, r) = b.left_divide(&h).unwrap();
    assert_eq!(&(&h * &q) + &r, b);
    assert!(r.is_zero());
}
