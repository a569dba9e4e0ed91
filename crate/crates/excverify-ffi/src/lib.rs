//! C ABI over the excverify harness.
//!
//! Handles are opaque and owned by the caller once returned; free them with the
//! matching `*_free` function. Every fallible call returns an [`ExcStatus`] and
//! records a message retrievable with [`exc_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;

use excverify::harness::{self, convention_fingerprint, CheckResult, Context, Format, Report, RunConfig, RunMeta, Status, Suite, BRACKET_ROWS};
use excverify::liealg::AlgebraId;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    ComputationFailed = 4,
    Panic = 5,
}

/// Run configuration and lazily built bases.
pub struct ExcContext {
    inner: Context,
}

/// Results of one suite run.
pub struct ExcReport {
    results: Vec<CheckResult>,
    suite: Suite,
    seed: u64,
    sample: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn guard(f: impl FnOnce() -> Result<(), (ExcStatus, String)>) -> ExcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ExcStatus::Ok,
        Ok(Err((code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            ExcStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (ExcStatus, String)> {
    if p.is_null() {
        return Err((ExcStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (ExcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn algebra(name: &str) -> Result<AlgebraId, (ExcStatus, String)> {
    AlgebraId::parse(name).ok_or_else(|| (ExcStatus::InvalidArgument, format!("unknown algebra {name:?}")))
}

fn suite(name: &str) -> Result<Suite, (ExcStatus, String)> {
    Ok(match name {
        "bases" => Suite::Bases,
        "table1" => Suite::Table1,
        "table2" => Suite::Table2,
        "lemmas" => Suite::Lemmas,
        "identities" => Suite::Identities,
        "all" => Suite::All,
        _ => return Err((ExcStatus::InvalidArgument, format!("unknown suite {name:?}"))),
    })
}

fn failed(e: impl ToString) -> (ExcStatus, String) {
    (ExcStatus::ComputationFailed, e.to_string())
}

/// Message for the most recent failure on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn exc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Create a context. `cache_dir` may be NULL; `jobs` of 0 means one thread.
///
/// # Safety
/// `cache_dir` must be NULL or a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn exc_context_new(seed: u64, sample: usize, jobs: usize, cache_dir: *const c_char, out: *mut *mut ExcContext) -> ExcStatus {
    guard(|| {
        if out.is_null() {
            return Err((ExcStatus::NullPointer, "out is null".into()));
        }
        let cache_dir = if cache_dir.is_null() { None } else { Some(PathBuf::from(str_arg(cache_dir, "cache_dir")?)) };
        let config = RunConfig { seed, sample, jobs: jobs.max(1), cache_dir };
        *out = Box::into_raw(Box::new(ExcContext { inner: Context::new(config) }));
        Ok(())
    })
}

/// # Safety
/// `ctx` must be NULL or a handle from [`exc_context_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn exc_context_free(ctx: *mut ExcContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Dimension of the compact basis of `algebra` ("g2", "f4", "e6", "e7", "e8").
///
/// # Safety
/// `ctx` must be a live context, `algebra` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn exc_basis_dim(ctx: *const ExcContext, algebra_name: *const c_char, out: *mut usize) -> ExcStatus {
    guard(|| {
        if ctx.is_null() || out.is_null() {
            return Err((ExcStatus::NullPointer, "ctx or out is null".into()));
        }
        let id = algebra(str_arg(algebra_name, "algebra")?)?;
        *out = (*ctx).inner.basis(id).map_err(failed)?.dim();
        Ok(())
    })
}

/// Dimension of the subalgebra fixed by the map word `word` (for example
/// "lambda gamma" on e7).
///
/// # Safety
/// As for [`exc_basis_dim`]; `word` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn exc_fixed_dim(ctx: *const ExcContext, algebra_name: *const c_char, word: *const c_char, out: *mut usize) -> ExcStatus {
    guard(|| {
        if ctx.is_null() || out.is_null() {
            return Err((ExcStatus::NullPointer, "ctx or out is null".into()));
        }
        let id = algebra(str_arg(algebra_name, "algebra")?)?;
        let word = str_arg(word, "word")?;
        let basis = (*ctx).inner.basis(id).map_err(failed)?;
        *out = basis.act_word(word).and_then(|a| a.fixed_dim()).map_err(failed)?;
        Ok(())
    })
}

/// Run a suite ("bases", "table1", "table2", "lemmas", "identities", "all").
///
/// # Safety
/// `ctx` must be a live context, `suite_name` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn exc_run_suite(ctx: *const ExcContext, suite_name: *const c_char, out: *mut *mut ExcReport) -> ExcStatus {
    guard(|| {
        if ctx.is_null() || out.is_null() {
            return Err((ExcStatus::NullPointer, "ctx or out is null".into()));
        }
        let s = suite(str_arg(suite_name, "suite")?)?;
        let c = &(*ctx).inner;
        let results = harness::run_suite(s, &[], c);
        *out = Box::into_raw(Box::new(ExcReport { results, suite: s, seed: c.config.seed, sample: c.config.sample }));
        Ok(())
    })
}

/// # Safety
/// `report` must be NULL or a handle from [`exc_run_suite`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn exc_report_free(report: *mut ExcReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Number of checks in the report.
///
/// # Safety
/// `report` must be a live report handle.
#[no_mangle]
pub unsafe extern "C" fn exc_report_len(report: *const ExcReport) -> usize {
    report.as_ref().map_or(0, |r| r.results.len())
}

/// Number of checks that did not pass (failed or errored).
///
/// # Safety
/// `report` must be a live report handle.
#[no_mangle]
pub unsafe extern "C" fn exc_report_failures(report: *const ExcReport) -> usize {
    report.as_ref().map_or(0, |r| r.results.iter().filter(|c| matches!(c.status, Status::Fail | Status::Error)).count())
}

/// Serialize the report as JSON (`markdown` nonzero selects Markdown). The
/// string is owned by the caller and released with [`exc_string_free`].
///
/// # Safety
/// `report` must be a live report handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn exc_report_render(report: *const ExcReport, markdown: i32, out: *mut *mut c_char) -> ExcStatus {
    guard(|| {
        let r = report.as_ref().ok_or((ExcStatus::NullPointer, "report is null".to_string()))?;
        if out.is_null() {
            return Err((ExcStatus::NullPointer, "out is null".into()));
        }
        let meta = RunMeta {
            convention_fingerprint: convention_fingerprint(),
            seed: r.seed,
            sample: r.sample,
            version: env!("CARGO_PKG_VERSION").to_string(),
            suite: r.suite.name().to_string(),
            bracket_rows: BRACKET_ROWS.name().to_string(),
            timing: None,
        };
        let format = if markdown != 0 { Format::Markdown } else { Format::Json };
        let text = harness::emit_report(&Report::new(r.results.clone(), meta), format);
        *out = CString::new(text).map_err(failed)?.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn exc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
