mod common;

use common::strategies::*;
use intdiff::parser::{format_i1, format_operator, parse_operator, parse_poly};
use intdiff::tensor::InElement;
use intdiff::Error;
use proptest::prelude::*;
use proptest::sample::select;

const TOKENS: &[&str] = &[
    "x1", "x2", "d1", "d2", "int1", "int2", "H1", "H2", "e1[0,1]", "e2[2,0]", "e3[0,0]", "x", "d",
    "∂1", "∫2", "e1[", "]", ",", "1", "0", "3/2", "1/0", "7", "+", "-", "*", "^", "^2", "^-1",
    "(", ")", "/", " ", "D1", "y",
];

fn declared(e: &Error) -> bool {
    matches!(
        e,
        Error::Syntax { .. } | Error::IndexOutOfRange { .. } | Error::NegativeExponent { .. }
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn round_trip_n1(a in in_s(1, 6)) {
        let text = format_operator(&a);
        prop_assert_eq!(parse_operator(&text, 1).unwrap(), a.clone());
        let bare = format_i1(&a.to_i1().unwrap());
        prop_assert_eq!(parse_operator(&bare, 1).unwrap(), a);
    }

    #[test]
    fn round_trip_n2(a in in_s(2, 6)) {
        let text = format_operator(&a);
        prop_assert_eq!(parse_operator(&text, 2).unwrap(), a);
    }

    #[test]
    fn token_streams_parse_or_fail_cleanly(toks in proptest::collection::vec(select(TOKENS), 0..12)) {
        let src: String = toks.concat();
        if let Err(e) = parse_operator(&src, 2) {
            prop_assert!(declared(&e), "{src:?} gave {e:?}");
        }
        if let Err(e) = parse_poly(&src, 2) {
            prop_assert!(declared(&e), "{src:?} gave {e:?}");
        }
    }

    #[test]
    fn arbitrary_text_never_panics(src in "\\PC{0,24}") {
        if let Err(e) = parse_operator(&src, 3) {
            prop_assert!(declared(&e));
        }
    }

    #[test]
    fn error_positions_are_in_range(toks in proptest::collection::vec(select(TOKENS), 1..10)) {
        let src: String = toks.concat();
        let len = src.chars().count();
        match parse_operator(&src, 2) {
            Err(Error::Syntax { pos, .. }) | Err(Error::IndexOutOfRange { pos, .. })
            | Err(Error::NegativeExponent { pos }) => prop_assert!(pos <= len),
            _ => {}
        }
    }

    #[test]
    fn sums_and_products_of_texts(a in in_s(2, 3), b in in_s(2, 3)) {
        let (ta, tb) = (format_operator(&a), format_operator(&b));
        let sum = parse_operator(&format!("({ta}) + ({tb})"), 2).unwrap();
        let prod = parse_operator(&format!("({ta})*({tb})"), 2).unwrap();
        prop_assert_eq!(sum, &a + &b);
        prop_assert_eq!(prod, &a * &b);
    }
}

#[test]
fn precedence() {
    let p = |s: &str| parse_operator(s, 1).unwrap();
    assert_eq!(p("2*H1^2"), p("2*(H1^2)"));
    assert_eq!(p("-d1^2"), p("-(d1^2)"));
    assert_eq!(p("1 - d1 + int1"), p("(1 - d1) + int1"));
    assert_eq!(p("1 - d1*int1"), InElement::zero(1));
    assert_eq!(p("-2*-d1"), p("2*d1"));
}

#[test]
fn declared_errors() {
    assert!(matches!(parse_operator("x3", 2), Err(Error::IndexOutOfRange { index: 3, n: 2, pos: 0 })));
    assert!(matches!(parse_operator("H1^-2", 1), Err(Error::NegativeExponent { pos: 3 })));
    assert!(matches!(parse_operator("d1 d1", 1), Err(Error::Syntax { pos: 3, .. })));
    assert!(matches!(parse_poly("x1*d1", 1), Err(Error::Syntax { pos: 3, .. })));
    assert!(matches!(parse_poly("x0", 1), Err(Error::IndexOutOfRange { index: 0, .. })));
}
