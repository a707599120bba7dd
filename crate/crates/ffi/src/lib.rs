//! C interface. Codes are opaque `DnaCode` handles; every fallible call
//! returns a `DnaStatus` and writes its result through an out-pointer. The
//! message for the most recent failure on the calling thread is available
//! from `dna_last_error_message`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dnacodes::cli::{self, Method, Mode};
use dnacodes::code::{CodeReport, CodeSpec, CyclicCode};
use dnacodes::dual::{dual_code, Flavor};
use dnacodes::{Error, RingWord};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DnaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    CapExceeded = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DnaFlavor {
    Euclidean = 0,
    Hermitian = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DnaMode {
    Reversible = 0,
    ReverseComplement = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DnaMethod {
    Theorem = 0,
    Oracle = 1,
    Both = 2,
}

/// Opaque code handle.
pub struct DnaCode {
    code: CyclicCode,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn status_for(e: &Error) -> DnaStatus {
    match e {
        Error::CapExceeded { .. } => DnaStatus::CapExceeded,
        Error::Parse(_) | Error::UnmappedCodon(_) | Error::InvalidNucleotide(_) => DnaStatus::Parse,
        _ => DnaStatus::InvalidInput,
    }
}

fn fail(e: Error) -> DnaStatus {
    let s = status_for(&e);
    set_error(e.to_string());
    s
}

fn guard(f: impl FnOnce() -> DnaStatus) -> DnaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            DnaStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, DnaStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(DnaStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not UTF-8");
        DnaStatus::InvalidUtf8
    })
}

unsafe fn handle<'a>(p: *const DnaCode) -> Result<&'a DnaCode, DnaStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null code handle");
        DnaStatus::NullPointer
    })
}

unsafe fn write<T>(out: *mut T, v: T) -> DnaStatus {
    if out.is_null() {
        set_error("null output pointer");
        return DnaStatus::NullPointer;
    }
    *out = v;
    DnaStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> DnaStatus {
    match CString::new(s) {
        Ok(c) => write(out, c.into_raw()),
        Err(_) => {
            set_error("output contains a NUL byte");
            DnaStatus::Internal
        }
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! lib {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return fail(e),
        }
    };
}

/// Builds a code from a JSON spec `{"n": .., "generators": [..]}`.
/// On success `*out` owns a handle to release with `dna_code_free`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dna_code_from_json(json: *const c_char, out: *mut *mut DnaCode) -> DnaStatus {
    guard(|| {
        let text = tri!(read_str(json));
        let code = lib!(CodeSpec::from_json(text).and_then(|s| s.build()));
        write(out, Box::into_raw(Box::new(DnaCode { code })))
    })
}

/// # Safety
/// `code` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn dna_code_free(code: *mut DnaCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dna_code_length(code: *const DnaCode, out: *mut usize) -> DnaStatus {
    guard(|| write(out, tri!(handle(code)).code.len()))
}

/// F2-dimension; the code has `2^dim` words.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dna_code_dim(code: *const DnaCode, out: *mut usize) -> DnaStatus {
    guard(|| write(out, tri!(handle(code)).code.dim()))
}

/// Minimum Hamming distance, or -1 for the zero code. Fails with
/// `CAP_EXCEEDED` when the dimension is above `cap`.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dna_code_min_distance(code: *const DnaCode, cap: usize, out: *mut i32) -> DnaStatus {
    guard(|| {
        let c = tri!(handle(code));
        let d = lib!(c.code.min_hamming_distance_with_cap(cap));
        write(out, d.map_or(-1, |d| d as i32))
    })
}

/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dna_code_is_reversible(code: *const DnaCode, out: *mut bool) -> DnaStatus {
    guard(|| write(out, tri!(handle(code)).code.is_reversible_linear()))
}

/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dna_code_is_rc_closed(code: *const DnaCode, out: *mut bool) -> DnaStatus {
    guard(|| write(out, tri!(handle(code)).code.is_rc_closed_linear()))
}

/// Whether the DNA string (two nucleotides per coordinate) is a codeword.
///
/// # Safety
/// `code` must be a live handle, `dna` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dna_code_contains_dna(
    code: *const DnaCode,
    dna: *const c_char,
    out: *mut bool,
) -> DnaStatus {
    guard(|| {
        let c = tri!(handle(code));
        let w = lib!(RingWord::from_dna(tri!(read_str(dna))));
        write(out, lib!(c.code.contains(&w)))
    })
}

/// New handle for the dual code.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dna_code_dual(code: *const DnaCode, flavor: DnaFlavor, out: *mut *mut DnaCode) -> DnaStatus {
    guard(|| {
        let c = tri!(handle(code));
        let flavor = match flavor {
            DnaFlavor::Euclidean => Flavor::Euclidean,
            DnaFlavor::Hermitian => Flavor::Hermitian,
        };
        let d = dual_code(&c.code, flavor);
        write(out, Box::into_raw(Box::new(DnaCode { code: d })))
    })
}

/// JSON report; release with `dna_string_free`.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dna_code_report_json(code: *const DnaCode, cap: usize, out: *mut *mut c_char) -> DnaStatus {
    guard(|| {
        let c = tri!(handle(code));
        let r = lib!(CodeReport::new(&c.code, cap));
        write_string(out, serde_json::to_string(&r).expect("serializable"))
    })
}

/// Theorem and/or exhaustive check of a JSON spec; the result is the JSON
/// check report. `*satisfied` receives the overall outcome.
///
/// # Safety
/// `spec` must be NUL-terminated; `satisfied` and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dna_check_json(
    spec: *const c_char,
    mode: DnaMode,
    method: DnaMethod,
    cap: usize,
    satisfied: *mut bool,
    out: *mut *mut c_char,
) -> DnaStatus {
    guard(|| {
        let s = lib!(CodeSpec::from_json(tri!(read_str(spec))));
        let mode = match mode {
            DnaMode::Reversible => Mode::Reversible,
            DnaMode::ReverseComplement => Mode::Rc,
        };
        let method = match method {
            DnaMethod::Theorem => Method::Theorem,
            DnaMethod::Oracle => Method::Oracle,
            DnaMethod::Both => Method::Both,
        };
        let r = lib!(cli::check(&s, mode, method, cap));
        let st = write(satisfied, r.exit_code() == cli::EXIT_OK);
        if st != DnaStatus::Ok {
            return st;
        }
        write_string(out, serde_json::to_string(&r).expect("serializable"))
    })
}

/// The worked example's multiples and shifts as a JSON array of DNA strings.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dna_table2_json(out: *mut *mut c_char) -> DnaStatus {
    guard(|| write_string(out, serde_json::to_string(&cli::table2()).expect("serializable")))
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn dna_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn dna_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
