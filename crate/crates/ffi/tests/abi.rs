use std::ffi::{c_char, CStr, CString};
use std::ptr;

use intdiff_ffi::*;

fn text(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { intdiff_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(intdiff_last_error()) }.to_str().unwrap().to_owned()
}

fn element(src: &str, n: usize) -> *mut IntdiffElement {
    let c = CString::new(src).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { intdiff_element_parse(c.as_ptr(), n, &mut out) }, IntdiffStatus::Ok);
    out
}

fn ideal(src: &str, n: usize) -> *mut IntdiffIdeal {
    let c = CString::new(src).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { intdiff_ideal_parse(c.as_ptr(), n, &mut out) }, IntdiffStatus::Ok);
    out
}

fn format(a: *const IntdiffElement) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { intdiff_element_format(a, &mut s) }, IntdiffStatus::Ok);
    text(s)
}

fn canonical(src: &str, n: usize) -> String {
    intdiff::format_operator(&intdiff::parse_operator(src, n).unwrap())
}

#[test]
fn element_arithmetic_matches_the_engine() {
    let (a, b) = (element("int1", 1), element("d1", 1));
    let (mut p, mut s) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(intdiff_element_mul(a, b, &mut p), IntdiffStatus::Ok);
        assert_eq!(intdiff_element_add(a, b, &mut s), IntdiffStatus::Ok);
    }
    assert_eq!(format(p), canonical("int1*d1", 1));
    assert_eq!(format(s), canonical("int1 + d1", 1));
    let one = element("d1*int1", 1);
    assert_eq!(format(one), "1");
    unsafe {
        for h in [a, b, p, s, one] {
            intdiff_element_free(h);
        }
    }
}

#[test]
fn involution_and_equality() {
    let a = element("x1*d2 - 1/3*e1[2,0]*H2^2", 2);
    let want = element("H1*d1*int2 - 1/3*e1[0,2]*H2^2", 2);
    let mut inv = ptr::null_mut();
    let mut eq = false;
    unsafe {
        assert_eq!(intdiff_element_involution(a, &mut inv), IntdiffStatus::Ok);
        assert_eq!(intdiff_element_equal(inv, want, &mut eq), IntdiffStatus::Ok);
        assert!(eq);
        assert_eq!(intdiff_element_equal(a, want, &mut eq), IntdiffStatus::Ok);
        assert!(!eq);
        for h in [a, want, inv] {
            intdiff_element_free(h);
        }
    }
}

#[test]
fn projection_and_membership() {
    let a = element("e1[0,0]*d2 + int1*d1*H2", 2);
    let mut p = ptr::null_mut();
    let primes = [1usize];
    unsafe {
        assert_eq!(intdiff_element_project(a, primes.as_ptr(), 1, &mut p), IntdiffStatus::Ok);
    }
    let engine = intdiff::parse_operator("e1[0,0]*d2 + int1*d1*H2", 2)
        .unwrap()
        .project_modulo_prime(&[1])
        .unwrap();
    assert_eq!(format(p), intdiff::format_operator(&engine));

    let c = ideal("{01}", 2);
    let e = element("e1[0,0]*x2", 2);
    let mut member = false;
    unsafe {
        assert_eq!(intdiff_element_is_member(e, c, &mut member), IntdiffStatus::Ok);
        assert!(member);
        assert_eq!(intdiff_element_is_member(a, c, &mut member), IntdiffStatus::Ok);
        assert!(!member);
        let mut wrong = ptr::null_mut();
        let d = ideal("{011}", 3);
        assert_eq!(intdiff_element_project(a, ptr::null(), 0, &mut wrong), IntdiffStatus::Ok);
        intdiff_element_free(wrong);
        assert_eq!(intdiff_element_is_member(a, d, &mut member), IntdiffStatus::DomainError);
        assert!(!last_error().is_empty());
        intdiff_ideal_free(d);
        for h in [a, p, e] {
            intdiff_element_free(h);
        }
        intdiff_ideal_free(c);
    }
}

#[test]
fn ideal_lattice_operations() {
    let (p1, p2) = (ideal("{01}", 2), ideal("{10}", 2));
    let (mut s, mut m) = (ptr::null_mut(), ptr::null_mut());
    let mut inc = false;
    unsafe {
        assert_eq!(intdiff_ideal_sum(p1, p2, &mut s), IntdiffStatus::Ok);
        assert_eq!(intdiff_ideal_product(p1, p2, &mut m), IntdiffStatus::Ok);
        assert_eq!(intdiff_ideal_includes(m, p1, &mut inc), IntdiffStatus::Ok);
        assert!(inc);
        assert_eq!(intdiff_ideal_includes(p1, p2, &mut inc), IntdiffStatus::Ok);
        assert!(!inc);
        for (h, want) in [(s, "{01,10}"), (m, "{00}")] {
            let mut out = ptr::null_mut();
            assert_eq!(intdiff_ideal_format(h, &mut out), IntdiffStatus::Ok);
            assert_eq!(text(out), want);
        }
        for h in [p1, p2, s, m] {
            intdiff_ideal_free(h);
        }
    }
}

#[test]
fn dedekind_numbers() {
    let mut v = 0u64;
    for (n, want) in [(1, 3), (2, 6), (3, 20), (4, 168), (5, 7581)] {
        assert_eq!(unsafe { intdiff_dedekind(n, &mut v) }, IntdiffStatus::Ok);
        assert_eq!(v, want);
    }
    assert_eq!(unsafe { intdiff_dedekind(7, &mut v) }, IntdiffStatus::DomainError);
    assert_eq!(unsafe { intdiff_dedekind(2, ptr::null_mut()) }, IntdiffStatus::NullPointer);
}

#[test]
fn error_codes_and_messages() {
    let mut out = ptr::null_mut();
    let bad = CString::new("d1 + * int1").unwrap();
    assert_eq!(unsafe { intdiff_element_parse(bad.as_ptr(), 1, &mut out) }, IntdiffStatus::ParseError);
    assert!(out.is_null());
    assert_eq!(last_error(), "syntax error at position 5: unexpected token");

    let high = CString::new("x3").unwrap();
    assert_eq!(unsafe { intdiff_element_parse(high.as_ptr(), 2, &mut out) }, IntdiffStatus::ParseError);

    let latin1 = [0x78u8, 0xff, 0x31, 0];
    let status = unsafe { intdiff_element_parse(latin1.as_ptr().cast(), 1, &mut out) };
    assert_eq!(status, IntdiffStatus::InvalidUtf8);

    let (a, b) = (element("d1", 1), element("d1", 2));
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { intdiff_element_mul(a, b, &mut c) }, IntdiffStatus::DomainError);
    assert_eq!(unsafe { intdiff_element_add(a, ptr::null(), &mut c) }, IntdiffStatus::NullPointer);
    assert!(c.is_null());

    let mut i = ptr::null_mut();
    let s = CString::new("{0}").unwrap();
    assert_eq!(unsafe { intdiff_ideal_parse(s.as_ptr(), 2, &mut i) }, IntdiffStatus::ParseError);
    assert_eq!(unsafe { intdiff_ideal_parse(s.as_ptr(), 0, &mut i) }, IntdiffStatus::DomainError);
    unsafe {
        intdiff_element_free(a);
        intdiff_element_free(b);
        intdiff_element_free(ptr::null_mut());
        intdiff_ideal_free(ptr::null_mut());
        intdiff_string_free(ptr::null_mut());
    }
}
