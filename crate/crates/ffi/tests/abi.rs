use std::ffi::{CStr, CString};
use std::ptr;

use signed_hom_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn context(shape: &str, kind: &str, t0: Option<&str>) -> (SignedHomStatus, *mut SignedHomContext) {
    let (shape, kind) = (c(shape), c(kind));
    let t0 = t0.map(c);
    let mut out = ptr::null_mut();
    let st = unsafe {
        signed_hom_context_new(
            shape.as_ptr(),
            kind.as_ptr(),
            t0.as_ref().map_or(ptr::null(), |t| t.as_ptr()),
            &mut out,
        )
    };
    (st, out)
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(signed_hom_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn counts_and_ranks() {
    let (st, ctx) = context("2,1,1,1,1,1", "|3,2,2", Some("1,7/2/3/4/5/6"));
    assert_eq!(st, SignedHomStatus::Ok);
    let mut v = 0usize;
    unsafe {
        assert_eq!(signed_hom_sstd_count(ctx, &mut v), SignedHomStatus::Ok);
        assert_eq!(v, 2);
        assert_eq!(signed_hom_gamma_len(ctx, &mut v), SignedHomStatus::Ok);
        assert_eq!(v, 210);
        assert_eq!(signed_hom_standard_count(ctx, &mut v), SignedHomStatus::Ok);
        assert_eq!(v, 6);
        assert_eq!(signed_hom_sstd_rank(ctx, 0, &mut v), SignedHomStatus::Ok);
        assert_eq!(v, 2);
        assert_eq!(signed_hom_sstd_rank(ctx, 3, &mut v), SignedHomStatus::Ok);
        assert_eq!(v, 1);
        assert_eq!(signed_hom_sstd_rank(ctx, 4, &mut v), SignedHomStatus::Invalid);
        assert!(last_error().contains("not a prime"));
        signed_hom_context_free(ctx);
    }
}

#[test]
fn theta_json_roundtrip() {
    let (_, ctx) = context("1,1,1,1,1,1", "|6", None);
    let rep = c("0");
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(signed_hom_theta_json(ctx, rep.as_ptr(), &mut s), SignedHomStatus::Ok);
        let json = CStr::from_ptr(s).to_str().unwrap().to_string();
        assert!(json.contains(r#""entries":[["720"]]"#), "{json}");
        signed_hom_string_free(s);
        let mut d = 0usize;
        assert_eq!(signed_hom_hom_dim(ctx, 5, &mut d), SignedHomStatus::Ok);
        assert_eq!(d, 1);
        signed_hom_context_free(ctx);
    }
}

#[test]
fn error_codes() {
    assert_eq!(context("2,x", "|3", None).0, SignedHomStatus::Parse);
    assert!(last_error().contains("parse error"));
    assert_eq!(context("2,1", "|4", None).0, SignedHomStatus::Invalid);
    assert_eq!(context("2,1", "|3", Some("1,2/2")).0, SignedHomStatus::Parse);
    assert_eq!(context("2,1", "|3", Some("1,2,3")).0, SignedHomStatus::Invalid);

    let mut out = ptr::null_mut();
    let kind = c("|3");
    let st = unsafe { signed_hom_context_new(ptr::null(), kind.as_ptr(), ptr::null(), &mut out) };
    assert_eq!(st, SignedHomStatus::NullArgument);
    let mut v = 0usize;
    assert_eq!(unsafe { signed_hom_gamma_len(ptr::null(), &mut v) }, SignedHomStatus::NullArgument);

    let (_, ctx) = context("2", "|2", None);
    let rep = c("[1,2]");
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(signed_hom_theta_json(ctx, rep.as_ptr(), &mut s), SignedHomStatus::NotInR);
        assert!(s.is_null());
        let idx = c("7");
        assert_eq!(signed_hom_theta_json(ctx, idx.as_ptr(), &mut s), SignedHomStatus::Invalid);
        signed_hom_context_free(ctx);
    }

    let (_, big) = context("1,1,1,1,1,1,1", "|1,1,1,1,1,1,1", None);
    unsafe {
        assert_eq!(signed_hom_hom_dim(big, 0, &mut v), SignedHomStatus::TooLarge);
        signed_hom_context_free(big);
    }
    unsafe { signed_hom_context_free(ptr::null_mut()) };
    unsafe { signed_hom_string_free(ptr::null_mut()) };
}

#[test]
fn header_declares_the_api() {
    let header = include_str!("../include/signed_hom.h");
    for name in [
        "signed_hom_context_new",
        "signed_hom_context_free",
        "signed_hom_gamma_len",
        "signed_hom_standard_count",
        "signed_hom_sstd_count",
        "signed_hom_theta_json",
        "signed_hom_sstd_rank",
        "signed_hom_hom_dim",
        "signed_hom_string_free",
        "signed_hom_last_error",
        "SIGNED_HOM_STATUS_NOT_IN_R",
        "typedef struct SignedHomContext SignedHomContext",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
