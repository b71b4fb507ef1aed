//! C interface to `gaussforge`.
//!
//! Objects are opaque handles created by `gf_*` constructors and released by
//! the matching `*_free` function. Every fallible call returns a [`GfStatus`];
//! on failure `gf_last_error_message` describes the error on the calling thread.
//! Strings returned through `char **` outputs must be released with
//! `gf_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gaussforge::bracket::jones;
use gaussforge::khovanov::{homology_dims, GradedDims};
use gaussforge::maps::{project, MapKind};
use gaussforge::{parse_gauss_code, BasedGaussDiagram, Error, LaurentPoly, Var};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    TooManyChords = 5,
    RequiresBasePoint = 6,
    OutOfRange = 7,
    Internal = 8,
}

/// Which projection of a based diagram to evaluate.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfMap {
    Pr = 0,
    Pra = 1,
    Ip = 2,
    Iap = 3,
}

/// Display variable for polynomials.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfVar {
    A = 0,
    T = 1,
    Q = 2,
}

/// A parsed Gauss diagram.
pub struct GfDiagram(BasedGaussDiagram);

/// A Laurent polynomial in the bracket variable `A`.
pub struct GfPoly(Vec<(i32, i64)>, LaurentPoly);

/// A table of `(i, j, dim)` rows sorted by `(i, j)`.
pub struct GfKhTable(Vec<(i32, i32, usize)>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> GfStatus {
    match e {
        Error::MalformedToken { .. }
        | Error::ChordSeenOnceOrThrice { .. }
        | Error::SignMismatch { .. }
        | Error::DuplicateRole { .. }
        | Error::InvalidDiagram(_) => GfStatus::ParseError,
        Error::TooManyChords { .. } | Error::TooLarge { .. } => GfStatus::TooManyChords,
        Error::RequiresBasePoint => GfStatus::RequiresBasePoint,
        Error::Internal(_) => GfStatus::Internal,
        _ => GfStatus::InvalidArgument,
    }
}

fn fail(status: GfStatus, msg: &str) -> GfStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), GfStatus>) -> GfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GfStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(GfStatus::Internal, "panic inside gaussforge"),
    }
}

fn lift(e: Error) -> GfStatus {
    fail(status_of(&e), &format!("{}: {e}", e.kind()))
}

unsafe fn out_ptr<'a, T>(out: *mut T) -> Result<&'a mut T, GfStatus> {
    out.as_mut().ok_or_else(|| fail(GfStatus::NullPointer, "null output pointer"))
}

unsafe fn in_ref<'a, T>(p: *const T) -> Result<&'a T, GfStatus> {
    p.as_ref().ok_or_else(|| fail(GfStatus::NullPointer, "null handle"))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

impl From<GfMap> for MapKind {
    fn from(m: GfMap) -> MapKind {
        match m {
            GfMap::Pr => MapKind::Pr,
            GfMap::Pra => MapKind::Pra,
            GfMap::Ip => MapKind::Ip,
            GfMap::Iap => MapKind::Iap,
        }
    }
}

impl From<GfVar> for Var {
    fn from(v: GfVar) -> Var {
        match v {
            GfVar::A => Var::A,
            GfVar::T => Var::T,
            GfVar::Q => Var::Q,
        }
    }
}

/// Message of the last failed call on this thread. Valid until the next call
/// on the same thread; never null.
#[no_mangle]
pub extern "C" fn gf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn gf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a Gauss code such as `"O1+ U2+ O3+ U1+ O2+ U3+"`.
///
/// # Safety
/// `code` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_diagram_parse(code: *const c_char, out: *mut *mut GfDiagram) -> GfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        if code.is_null() {
            return Err(fail(GfStatus::NullPointer, "null code"));
        }
        let text = CStr::from_ptr(code).to_str().map_err(|_| fail(GfStatus::InvalidUtf8, "code is not UTF-8"))?;
        let d = parse_gauss_code(text).map_err(lift)?;
        *out = Box::into_raw(Box::new(GfDiagram(d)));
        Ok(())
    })
}

/// # Safety
/// `d` must be null or a handle from `gf_diagram_parse`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gf_diagram_free(d: *mut GfDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of chords, or 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gf_diagram_chord_count(d: *const GfDiagram) -> usize {
    d.as_ref().map_or(0, |d| d.0.n_chords())
}

/// Canonical Gauss code of the diagram.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_diagram_serialize(d: *const GfDiagram, out: *mut *mut c_char) -> GfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        *out = to_c_string(in_ref(d)?.0.serialize());
        Ok(())
    })
}

/// Jones polynomial of one projection of `d`.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_jones(d: *const GfDiagram, map: GfMap, out: *mut *mut GfPoly) -> GfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let d = in_ref(d)?;
        let p = project(&d.0, map.into()).map_err(lift)?;
        let v = jones(&p).map_err(lift)?;
        *out = Box::into_raw(Box::new(GfPoly(v.to_pairs(), v)));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a handle from `gf_jones`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gf_poly_free(p: *mut GfPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of nonzero terms.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gf_poly_len(p: *const GfPoly) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Term `index` in increasing order of the exponent of `A`.
///
/// # Safety
/// `p` must be a live handle; `exponent` and `coefficient` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_poly_term(
    p: *const GfPoly,
    index: usize,
    exponent: *mut i32,
    coefficient: *mut i64,
) -> GfStatus {
    guard(|| {
        let p = in_ref(p)?;
        let (e, c) = *p.0.get(index).ok_or_else(|| fail(GfStatus::OutOfRange, "term index out of range"))?;
        *out_ptr(exponent)? = e;
        *out_ptr(coefficient)? = c;
        Ok(())
    })
}

/// Renders the polynomial in `A`, `t` or `q`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_poly_to_string(p: *const GfPoly, var: GfVar, out: *mut *mut c_char) -> GfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        *out = to_c_string(in_ref(p)?.1.render(var.into()));
        Ok(())
    })
}

fn table_of(g: &GradedDims) -> GfKhTable {
    GfKhTable(g.entries().map(|((i, j), d)| (i, j, d)).collect())
}

/// Z/2 Khovanov homology of one projection of `d`.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_khovanov(d: *const GfDiagram, map: GfMap, out: *mut *mut GfKhTable) -> GfStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let d = in_ref(d)?;
        let p = project(&d.0, map.into()).map_err(lift)?;
        let g = homology_dims(&p).map_err(lift)?;
        *out = Box::into_raw(Box::new(table_of(&g)));
        Ok(())
    })
}

/// # Safety
/// `t` must be null or a handle from `gf_khovanov`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gf_kh_table_free(t: *mut GfKhTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of nonzero `(i, j)` entries.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gf_kh_table_len(t: *const GfKhTable) -> usize {
    t.as_ref().map_or(0, |t| t.0.len())
}

/// Row `index` of the table.
///
/// # Safety
/// `t` must be a live handle; `i`, `j`, `dim` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_kh_table_entry(
    t: *const GfKhTable,
    index: usize,
    i: *mut i32,
    j: *mut i32,
    dim: *mut usize,
) -> GfStatus {
    guard(|| {
        let t = in_ref(t)?;
        let (a, b, d) = *t.0.get(index).ok_or_else(|| fail(GfStatus::OutOfRange, "row index out of range"))?;
        *out_ptr(i)? = a;
        *out_ptr(j)? = b;
        *out_ptr(dim)? = d;
        Ok(())
    })
}
