//! C interface to hopfcyc.
//!
//! Instances and reports are opaque handles owned by the caller and released
//! with the matching `_free` function. Every fallible call returns a
//! [`HopfcycStatus`]; the message of the last failure on the calling thread
//! is available from [`hopfcyc_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hopfcyc::cli::{parse_args, run};
use hopfcyc::cyclic::{build_hopf_cyclic, verify_cyclic_axioms, HopfCyclic};
use hopfcyc::field::Field;
use hopfcyc::homology::{cyclic_homology, hochschild_homology};
use hopfcyc::hopf::ModularPair;
use hopfcyc::instances::{build_instance, Instance};
use hopfcyc::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfcycStatus {
    Ok = 0,
    /// A verification ran and at least one check failed.
    CheckFailed = 1,
    /// Unknown instance, field, pair or flag, or bounds out of range.
    ConfigError = 2,
    /// The computation itself failed, e.g. a truncation was exceeded.
    ComputeError = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// A built Hopf algebra instance.
pub struct HopfcycInstance {
    inner: Instance,
}

/// A finished command-line run: JSON report and exit code.
pub struct HopfcycReport {
    json: CString,
    exit_code: i32,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior NUL"));
}

fn status_of(e: &Error) -> HopfcycStatus {
    match e {
        Error::Config(_)
        | Error::Parse(_)
        | Error::UnknownGenerator(_)
        | Error::InvalidPair(_)
        | Error::NotGrouplike(_)
        | Error::InvalidGroupTable(_)
        | Error::Io(_) => HopfcycStatus::ConfigError,
        _ => HopfcycStatus::ComputeError,
    }
}

fn fail(e: Error) -> HopfcycStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

fn guard(f: impl FnOnce() -> HopfcycStatus) -> HopfcycStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            HopfcycStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, HopfcycStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(HopfcycStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        HopfcycStatus::InvalidUtf8
    })
}

unsafe fn instance<'a>(p: *const HopfcycInstance) -> Result<&'a Instance, HopfcycStatus> {
    p.as_ref().map(|i| &i.inner).ok_or_else(|| {
        set_error("null instance handle");
        HopfcycStatus::NullPointer
    })
}

unsafe fn hopf_cyclic(inst: &Instance, pair: *const c_char, check: Option<u32>) -> Result<HopfCyclic, HopfcycStatus> {
    let h = &inst.hopf;
    let pair = if pair.is_null() {
        ModularPair::trivial(&**h)
    } else {
        ModularPair::parse(&**h, text(pair)?).map_err(fail)?
    };
    build_hopf_cyclic(h.clone(), pair, check).map_err(fail)
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hopfcyc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `len`). Returns the length the full message needs including
/// the NUL.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn hopfcyc_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let bytes = e.as_bytes_with_nul();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len);
            std::ptr::copy_nonoverlapping(bytes.as_ptr().cast(), buf, n);
            *buf.add(n - 1) = 0;
        }
        bytes.len()
    })
}

/// Builds an instance by name (`group:Z3`, `tensor:2`, `uqsl2`, ...). `field`
/// may be null for the instance's default field.
///
/// # Safety
/// `name` and a non-null `field` must be NUL-terminated strings; `out` must be
/// valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hopfcyc_instance_new(
    name: *const c_char,
    field: *const c_char,
    out: *mut *mut HopfcycInstance,
) -> HopfcycStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return HopfcycStatus::NullPointer;
        }
        let name = tri!(text(name));
        let field = if field.is_null() { None } else { Some(tri!(tri!(text(field)).parse::<Field>().map_err(fail))) };
        let inner = tri!(build_instance(name, field).map_err(fail));
        *out = Box::into_raw(Box::new(HopfcycInstance { inner }));
        HopfcycStatus::Ok
    })
}

/// Releases an instance. Null is ignored.
///
/// # Safety
/// `inst` must come from [`hopfcyc_instance_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hopfcyc_instance_free(inst: *mut HopfcycInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Runs the cyclic identity checks on the module of `inst` with the modular
/// pair `pair` (`"<character>,<sigma>"`, null for `(epsilon,1)`) at levels
/// `0..=n_max` on words of degree `<= degree`. With `unchecked` the pair is
/// not validated first. Writes the number of failing checks to `failed`.
///
/// # Safety
/// `inst` must be a live handle, `pair` null or a NUL-terminated string and
/// `failed` null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hopfcyc_verify_cyclic_axioms(
    inst: *const HopfcycInstance,
    pair: *const c_char,
    unchecked: bool,
    n_max: u32,
    degree: u32,
    failed: *mut usize,
) -> HopfcycStatus {
    guard(|| {
        let inst = tri!(instance(inst));
        let m = tri!(hopf_cyclic(inst, pair, (!unchecked).then_some(degree)));
        let checks = verify_cyclic_axioms(&m, n_max as usize, degree);
        let bad: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        if !failed.is_null() {
            *failed = bad.len();
        }
        match bad.first() {
            None => HopfcycStatus::Ok,
            Some(c) => {
                set_error(format!("{}: witness {}", c.name, c.witness.as_deref().unwrap_or("")));
                HopfcycStatus::CheckFailed
            }
        }
    })
}

unsafe fn write_dims(dims: &[usize], out: *mut usize, len: usize) -> HopfcycStatus {
    if out.is_null() {
        set_error("null output buffer");
        return HopfcycStatus::NullPointer;
    }
    if len < dims.len() {
        set_error(format!("buffer holds {len} entries, {} needed", dims.len()));
        return HopfcycStatus::BufferTooSmall;
    }
    std::ptr::copy_nonoverlapping(dims.as_ptr(), out, dims.len());
    HopfcycStatus::Ok
}

/// Hochschild homology dimensions for `n = 0..=n_max` of the module of `inst`
/// with `pair`, summed over weights `<= weight_cap` for graded instances.
/// `dims` must hold `n_max + 1` entries.
///
/// # Safety
/// `inst` must be a live handle, `pair` null or a NUL-terminated string and
/// `dims` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn hopfcyc_hochschild_dims(
    inst: *const HopfcycInstance,
    pair: *const c_char,
    n_max: u32,
    weight_cap: u32,
    dims: *mut usize,
    len: usize,
) -> HopfcycStatus {
    guard(|| {
        let inst = tri!(instance(inst));
        let m = tri!(hopf_cyclic(inst, pair, None));
        let hh = tri!(hochschild_homology(&m, n_max as usize, weight_cap).map_err(fail));
        write_dims(&hh.dims, dims, len)
    })
}

/// Cyclic homology dimensions, otherwise as [`hopfcyc_hochschild_dims`].
///
/// # Safety
/// As for [`hopfcyc_hochschild_dims`].
#[no_mangle]
pub unsafe extern "C" fn hopfcyc_cyclic_dims(
    inst: *const HopfcycInstance,
    pair: *const c_char,
    n_max: u32,
    weight_cap: u32,
    dims: *mut usize,
    len: usize,
) -> HopfcycStatus {
    guard(|| {
        let inst = tri!(instance(inst));
        let m = tri!(hopf_cyclic(inst, pair, None));
        let hc = tri!(cyclic_homology(&m, n_max as usize, weight_cap).map_err(fail));
        write_dims(&hc.hc.dims, dims, len)
    })
}

/// Runs one command-line invocation, e.g. `{"cyclic", "--instance",
/// "group:Z3"}` (without the program name), and returns its report. The
/// `--output` and `--csv` flags are ignored. The status mirrors the exit
/// code: `Ok`, `CheckFailed` or `ConfigError`.
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings and `out` must be valid
/// for a write.
#[no_mangle]
pub unsafe extern "C" fn hopfcyc_run(
    argv: *const *const c_char,
    argc: usize,
    out: *mut *mut HopfcycReport,
) -> HopfcycStatus {
    guard(|| {
        if out.is_null() || (argv.is_null() && argc > 0) {
            set_error("null pointer argument");
            return HopfcycStatus::NullPointer;
        }
        let mut args = vec!["hopfcyc".to_string()];
        for i in 0..argc {
            args.push(tri!(text(*argv.add(i))).to_string());
        }
        let cfg = match parse_args(args) {
            Ok(c) => c,
            Err(e) => {
                set_error(e.to_string());
                return HopfcycStatus::ConfigError;
            }
        };
        let o = run(&cfg);
        let json = CString::new(o.json).expect("JSON has no NUL");
        *out = Box::into_raw(Box::new(HopfcycReport { json, exit_code: o.code }));
        match o.code {
            0 => HopfcycStatus::Ok,
            1 => HopfcycStatus::CheckFailed,
            _ => HopfcycStatus::ConfigError,
        }
    })
}

/// The JSON text of a report, valid until the report is freed.
///
/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn hopfcyc_report_json(report: *const HopfcycReport) -> *const c_char {
    report.as_ref().map_or(std::ptr::null(), |r| r.json.as_ptr())
}

/// The exit code the command-line tool would return, or -1 for null.
///
/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn hopfcyc_report_exit_code(report: *const HopfcycReport) -> i32 {
    report.as_ref().map_or(-1, |r| r.exit_code)
}

/// Releases a report. Null is ignored.
///
/// # Safety
/// `report` must come from [`hopfcyc_run`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hopfcyc_report_free(report: *mut HopfcycReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
