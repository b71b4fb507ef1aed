use std::ffi::{CStr, CString};
use std::ptr;

use gaussforge_ffi::*;

fn parse(code: &str) -> *mut GfDiagram {
    let c = CString::new(code).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { gf_diagram_parse(c.as_ptr(), &mut d) }, GfStatus::Ok);
    d
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(gf_last_error_message()) }.to_string_lossy().into_owned()
}

fn terms(p: *const GfPoly) -> Vec<(i32, i64)> {
    (0..unsafe { gf_poly_len(p) })
        .map(|k| {
            let (mut e, mut c) = (0, 0);
            assert_eq!(unsafe { gf_poly_term(p, k, &mut e, &mut c) }, GfStatus::Ok);
            (e, c)
        })
        .collect()
}

#[test]
fn jones_of_trefoil_projections() {
    let d = parse("O1+ U2+ O3+ U1+ O2+ U3+");
    assert_eq!(unsafe { gf_diagram_chord_count(d) }, 3);
    let mut v = ptr::null_mut();
    assert_eq!(unsafe { gf_jones(d, GfMap::Pr, &mut v) }, GfStatus::Ok);
    assert_eq!(terms(v), vec![(-16, -1), (-12, 1), (-4, 1)]);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { gf_poly_to_string(v, GfVar::A, &mut s) }, GfStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(s) }.to_str().unwrap(), "-A^-16 + A^-12 + A^-4");
    unsafe {
        gf_string_free(s);
        gf_poly_free(v);
    }
    // descending classical diagram: i∘p is trivial
    let mut v = ptr::null_mut();
    assert_eq!(unsafe { gf_jones(d, GfMap::Iap, &mut v) }, GfStatus::Ok);
    assert_eq!(terms(v), vec![(0, 1)]);
    let (mut e, mut c) = (0, 0);
    assert_eq!(unsafe { gf_poly_term(v, 5, &mut e, &mut c) }, GfStatus::OutOfRange);
    unsafe {
        gf_poly_free(v);
        gf_diagram_free(d);
    }
}

#[test]
fn serialize_round_trip() {
    let d = parse("O1-U1-");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { gf_diagram_serialize(d, &mut s) }, GfStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(s) }.to_str().unwrap(), "O1- U1-");
    unsafe {
        gf_string_free(s);
        gf_diagram_free(d);
    }
}

#[test]
fn khovanov_table_of_unknot() {
    let d = parse("");
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { gf_khovanov(d, GfMap::Pra, &mut t) }, GfStatus::Ok);
    let rows: Vec<(i32, i32, usize)> = (0..unsafe { gf_kh_table_len(t) })
        .map(|k| {
            let (mut i, mut j, mut dim) = (0, 0, 0);
            assert_eq!(unsafe { gf_kh_table_entry(t, k, &mut i, &mut j, &mut dim) }, GfStatus::Ok);
            (i, j, dim)
        })
        .collect();
    assert_eq!(rows, vec![(0, -1, 1), (0, 1, 1)]);
    unsafe {
        gf_kh_table_free(t);
        gf_diagram_free(d);
    }
}

#[test]
fn errors_become_status_codes() {
    let bad = CString::new("O1+ U1-").unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { gf_diagram_parse(bad.as_ptr(), &mut d) }, GfStatus::ParseError);
    assert!(d.is_null());
    assert!(last_error().contains("SignMismatch"), "{}", last_error());

    assert_eq!(unsafe { gf_diagram_parse(ptr::null(), &mut d) }, GfStatus::NullPointer);
    let good = CString::new("O1+ U1+").unwrap();
    assert_eq!(unsafe { gf_diagram_parse(good.as_ptr(), ptr::null_mut()) }, GfStatus::NullPointer);

    let closed = parse("O1+ U1+ @closed");
    let mut v = ptr::null_mut();
    assert_eq!(unsafe { gf_jones(closed, GfMap::Ip, &mut v) }, GfStatus::RequiresBasePoint);
    assert!(v.is_null());
    assert_eq!(unsafe { gf_jones(closed, GfMap::Pra, &mut v) }, GfStatus::Ok);
    unsafe {
        gf_poly_free(v);
        gf_diagram_free(closed);
    }

    let big: String = (1..=13).map(|k| format!("O{k}+ U{k}+ ")).collect();
    let d = parse(&big);
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { gf_khovanov(d, GfMap::Pr, &mut t) }, GfStatus::TooManyChords);
    unsafe { gf_diagram_free(d) };
}

#[test]
fn null_handles_are_harmless() {
    unsafe {
        gf_diagram_free(ptr::null_mut());
        gf_poly_free(ptr::null_mut());
        gf_kh_table_free(ptr::null_mut());
        gf_string_free(ptr::null_mut());
        assert_eq!(gf_poly_len(ptr::null()), 0);
        assert_eq!(gf_kh_table_len(ptr::null()), 0);
        assert_eq!(gf_diagram_chord_count(ptr::null()), 0);
    }
}
