use std::ffi::{CStr, CString};
use std::ptr;

use schur9_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = schur9_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn verify_running_example() {
    let (l, m, s) = (c("5,4,4,2"), c("3,2"), c("profile:-3:ENEEENE"));
    let mut r = ptr::null_mut();
    let st = unsafe { schur9_verify(l.as_ptr(), m.as_ptr(), s.as_ptr(), 3, false, false, &mut r) };
    assert_eq!(st, Schur9Status::Ok);
    assert!(unsafe { schur9_report_equal(r) });
    let (mut lhs, mut rhs) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(
        unsafe { schur9_report_sides(r, &mut lhs, &mut rhs) },
        Schur9Status::Ok
    );
    assert!(unsafe { schur9_poly_equal(lhs, rhs) });
    assert_eq!(unsafe { schur9_poly_num_terms(lhs) }, 54);
    let json = unsafe { schur9_report_json(r) };
    let text = unsafe { CStr::from_ptr(json) }
        .to_str()
        .unwrap()
        .to_string();
    assert!(text.contains("\"schema\":\"schur9/1\""));
    assert!(text.contains("\"equal\":true"));
    unsafe {
        schur9_string_free(json);
        schur9_poly_free(lhs);
        schur9_poly_free(rhs);
        schur9_report_free(r);
    }
}

#[test]
fn perturbed_pfaffian_differs() {
    let (l, m, s) = (c("9,6,4,2"), c("4,3"), c("profile:0:EENNEEEE"));
    let mut r = ptr::null_mut();
    let st = unsafe { schur9_verify(l.as_ptr(), m.as_ptr(), s.as_ptr(), 2, true, true, &mut r) };
    assert_eq!(st, Schur9Status::Different);
    assert!(!unsafe { schur9_report_equal(r) });
    unsafe { schur9_report_free(r) };
}

#[test]
fn corollary_and_sum() {
    let (name, l, m) = (c("q-inner"), c("7,6,4,2"), c("4,3"));
    let mut r = ptr::null_mut();
    assert_eq!(
        unsafe { schur9_corollary(name.as_ptr(), l.as_ptr(), m.as_ptr(), 2, &mut r) },
        Schur9Status::Ok
    );
    unsafe { schur9_report_free(r) };

    let l = c("2,1");
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { schur9_tableau_sum(l.as_ptr(), ptr::null(), 2, false, &mut p) },
        Schur9Status::Ok
    );
    let s = unsafe { schur9_poly_to_string(p) };
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    assert_eq!(unsafe { schur9_poly_num_terms(p) }, 2);
    assert!(text.contains("x[1,0]"), "{text}");
    unsafe {
        schur9_string_free(s);
        schur9_poly_free(p);
    }
}

#[test]
fn errors_are_reported() {
    let (l, m) = (c("1"), c("2"));
    let mut r = ptr::null_mut();
    let st = unsafe { schur9_verify(l.as_ptr(), m.as_ptr(), ptr::null(), 2, false, false, &mut r) };
    assert_eq!(st, Schur9Status::InvalidArgument);
    assert!(r.is_null());
    assert!(last_error().starts_with("ContainmentError"));

    let st = unsafe {
        schur9_verify(
            ptr::null(),
            ptr::null(),
            ptr::null(),
            2,
            false,
            false,
            &mut r,
        )
    };
    assert_eq!(st, Schur9Status::NullPointer);
    assert!(last_error().contains("lambda"));

    let name = c("nope");
    let st = unsafe { schur9_corollary(name.as_ptr(), l.as_ptr(), ptr::null(), 2, &mut r) };
    assert_eq!(st, Schur9Status::InvalidArgument);

    assert!(!unsafe { schur9_report_equal(ptr::null()) });
    assert_eq!(unsafe { schur9_poly_num_terms(ptr::null()) }, 0);
    unsafe {
        schur9_report_free(ptr::null_mut());
        schur9_poly_free(ptr::null_mut());
        schur9_string_free(ptr::null_mut());
    }
}

#[test]
fn header_lists_every_export() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/schur9.h")).unwrap();
    for f in [
        "schur9_last_error",
        "schur9_version",
        "schur9_verify",
        "schur9_corollary",
        "schur9_report_equal",
        "schur9_report_json",
        "schur9_report_sides",
        "schur9_report_free",
        "schur9_tableau_sum",
        "schur9_poly_num_terms",
        "schur9_poly_equal",
        "schur9_poly_to_string",
        "schur9_poly_free",
        "schur9_string_free",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(header.contains("typedef struct Schur9Report Schur9Report;"));
    let v = unsafe { CStr::from_ptr(schur9_version()) }
        .to_str()
        .unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
