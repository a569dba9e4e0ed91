use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use excverify_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn context() -> *mut ExcContext {
    let mut ctx = ptr::null_mut();
    assert_eq!(unsafe { exc_context_new(7, 50, 1, ptr::null(), &mut ctx) }, ExcStatus::Ok);
    assert!(!ctx.is_null());
    ctx
}

#[test]
fn basis_and_fixed_dims() {
    let ctx = context();
    let mut n = 0usize;
    unsafe {
        assert_eq!(exc_basis_dim(ctx, cstr("f4").as_ptr(), &mut n), ExcStatus::Ok);
        assert_eq!(n, 52);
        assert_eq!(exc_fixed_dim(ctx, cstr("f4").as_ptr(), cstr("sigma").as_ptr(), &mut n), ExcStatus::Ok);
        assert_eq!(n, 36);
        assert_eq!(exc_fixed_dim(ctx, cstr("g2").as_ptr(), cstr("gamma").as_ptr(), &mut n), ExcStatus::Ok);
        assert_eq!(n, 6);
        exc_context_free(ctx);
    }
}

#[test]
fn error_codes_and_messages() {
    let ctx = context();
    let mut n = 0usize;
    unsafe {
        assert_eq!(exc_basis_dim(ctx, cstr("e9").as_ptr(), &mut n), ExcStatus::InvalidArgument);
        let msg = CStr::from_ptr(exc_last_error()).to_str().unwrap();
        assert!(msg.contains("e9"), "{msg}");
        assert_eq!(exc_basis_dim(ctx, ptr::null(), &mut n), ExcStatus::NullPointer);
        assert_eq!(exc_basis_dim(ptr::null(), cstr("g2").as_ptr(), &mut n), ExcStatus::NullPointer);
        assert_eq!(exc_fixed_dim(ctx, cstr("g2").as_ptr(), cstr("no_such_map").as_ptr(), &mut n), ExcStatus::ComputationFailed);
        let bad = [0xffu8, 0];
        assert_eq!(exc_basis_dim(ctx, bad.as_ptr().cast(), &mut n), ExcStatus::InvalidUtf8);
        let mut report = ptr::null_mut();
        assert_eq!(exc_run_suite(ctx, cstr("everything").as_ptr(), &mut report), ExcStatus::InvalidArgument);
        assert!(report.is_null());
        exc_context_free(ctx);
        exc_context_free(ptr::null_mut());
        exc_report_free(ptr::null_mut());
        exc_string_free(ptr::null_mut());
    }
}

#[test]
fn run_and_render_report() {
    let ctx = context();
    unsafe {
        let mut report = ptr::null_mut();
        assert_eq!(exc_run_suite(ctx, cstr("table2").as_ptr(), &mut report), ExcStatus::Ok);
        assert_eq!(exc_report_len(report), 24);
        assert_eq!(exc_report_failures(report), 0);
        let mut text = ptr::null_mut();
        assert_eq!(exc_report_render(report, 0, &mut text), ExcStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(CStr::from_ptr(text).to_str().unwrap()).unwrap();
        assert_eq!(json["run_meta"]["suite"], "table2");
        assert_eq!(json["checks"].as_array().unwrap().len(), 24);
        exc_string_free(text);
        assert_eq!(exc_report_render(report, 1, &mut text), ExcStatus::Ok);
        assert!(CStr::from_ptr(text).to_str().unwrap().starts_with("# excverify report"));
        exc_string_free(text);
        exc_report_free(report);
        exc_context_free(ctx);
    }
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/excverify.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["exc_context_new", "exc_fixed_dim", "exc_run_suite", "exc_report_render", "exc_last_error", "EXC_STATUS_PANIC"] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let Ok(out) = Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"]).arg(&header).output() else {
        eprintln!("no C compiler; header syntax not checked");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
