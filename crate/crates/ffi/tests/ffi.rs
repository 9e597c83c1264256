use std::ffi::{c_char, CStr, CString};
use std::ptr;

use halfspin_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    hs_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(hs_last_error_message()).to_str().unwrap().to_owned()
}

unsafe fn context(n: usize) -> *mut HsContext {
    let mut ctx = ptr::null_mut();
    assert_eq!(hs_context_new(n, &mut ctx), HsStatus::Ok);
    ctx
}

#[test]
fn spin_word_and_phi() {
    unsafe {
        let ctx = context(4);
        assert_eq!(hs_context_rank(ctx), 4);
        let mut v = ptr::null_mut();
        assert_eq!(hs_spin_vector_parse(ctx, c("(plus,-)").as_ptr(), &mut v), HsStatus::Ok);
        let mut w = ptr::null_mut();
        assert_eq!(hs_spin_apply_word(ctx, c("F_2 F_4").as_ptr(), v, &mut w), HsStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(hs_spin_vector_to_string(w, &mut s), HsStatus::Ok);
        assert_eq!(take(s), "(plus,2)");

        let mut f = ptr::null_mut();
        assert_eq!(hs_phi(ctx, w, &mut f), HsStatus::Ok);
        assert_eq!(hs_fock_vector_to_string(f, &mut s), HsStatus::Ok);
        let text = take(s);
        assert!(text.starts_with('{') || text.contains("* {"), "{text}");

        hs_fock_vector_free(f);
        hs_spin_vector_free(w);
        hs_spin_vector_free(v);
        hs_context_free(ctx);
    }
}

#[test]
fn clifford_product_and_action() {
    unsafe {
        let ctx = context(4);
        let (mut b2, mut a1, mut p) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(hs_clifford_parse(ctx, c("b2").as_ptr(), &mut b2), HsStatus::Ok);
        assert_eq!(hs_clifford_parse(ctx, c("a1").as_ptr(), &mut a1), HsStatus::Ok);
        assert_eq!(hs_clifford_mul(b2, a1, &mut p), HsStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(hs_clifford_to_string(p, &mut s), HsStatus::Ok);
        assert_eq!(take(s), "b2 a1");

        let (mut v, mut r) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(hs_fock_vector_parse(ctx, c("{1,3}").as_ptr(), &mut v), HsStatus::Ok);
        assert_eq!(hs_clifford_apply(ctx, p, v, &mut r), HsStatus::Ok);
        assert_eq!(hs_fock_vector_to_string(r, &mut s), HsStatus::Ok);
        assert_eq!(take(s), "{2,3}");

        for x in [b2, a1, p] {
            hs_clifford_free(x);
        }
        hs_fock_vector_free(v);
        hs_fock_vector_free(r);
        hs_context_free(ctx);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(hs_context_new(1, &mut ctx), HsStatus::InvalidRank);
        assert!(ctx.is_null());
        assert!(last_error().contains("invalid rank"));

        let ctx = context(3);
        assert!(last_error().is_empty());
        let mut v = ptr::null_mut();
        assert_eq!(hs_spin_vector_parse(ctx, c("(plus,").as_ptr(), &mut v), HsStatus::Parse);
        assert_eq!(hs_spin_vector_parse(ctx, c("(plus,3)").as_ptr(), &mut v), HsStatus::OutOfRange);
        assert_eq!(hs_spin_vector_parse(ctx, ptr::null(), &mut v), HsStatus::NullPointer);
        assert_eq!(hs_spin_vector_parse(ctx, c("(plus,-)").as_ptr(), ptr::null_mut()), HsStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(hs_spin_vector_parse(ctx, bad.as_ptr().cast(), &mut v), HsStatus::Utf8);

        assert_eq!(hs_spin_vector_parse(ctx, c("(minus,-)").as_ptr(), &mut v), HsStatus::Ok);
        let mut w = ptr::null_mut();
        assert_eq!(hs_spin_apply_word(ctx, c("E_9").as_ptr(), v, &mut w), HsStatus::OutOfRange);
        assert_eq!(hs_spin_apply_word(ctx, c("Q_1").as_ptr(), v, &mut w), HsStatus::UnknownOperator);
        assert!(w.is_null());
        hs_spin_vector_free(v);
        hs_context_free(ctx);
        hs_context_free(ptr::null_mut());
        assert_eq!(hs_context_rank(ptr::null()), 0);
    }
}

#[test]
fn verification_reports() {
    unsafe {
        let mut json = ptr::null_mut();
        assert_eq!(hs_verify(c("chevalley").as_ptr(), 4, &mut json), HsStatus::Ok);
        let report: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(report["rank"], 4);
        assert!(report["entries"].as_array().unwrap().iter().all(|e| e["status"] == "pass"));

        assert_eq!(hs_verify_unbounded(c("serre").as_ptr(), 4, 6, &mut json), HsStatus::Ok);
        let report: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(report["max_boxes"], 4);

        // Weights carry an expected failure for the printed half-row form; that is not a failure.
        assert_eq!(hs_verify(c("weights").as_ptr(), 4, &mut json), HsStatus::Ok);
        hs_string_free(json);

        json = ptr::null_mut();
        assert_eq!(hs_verify(c("nonsense").as_ptr(), 4, &mut json), HsStatus::UnknownOperator);
        assert!(json.is_null());
        assert_eq!(hs_verify(c("serre").as_ptr(), 99, &mut json), HsStatus::InvalidRank);
    }
}

#[test]
fn version_matches_package() {
    let v = unsafe { CStr::from_ptr(hs_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
