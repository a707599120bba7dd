use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use dnacodes_ffi::*;

const EXAMPLE: &str = r#"{"n":8,"generators":[{"f2":"x^6+x^4+x^2+1","u":"x^5+x","u2":"x^4+x^2"}]}"#;

fn code(json: &str) -> *mut DnaCode {
    let s = CString::new(json).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { dna_code_from_json(s.as_ptr(), &mut out) }, DnaStatus::Ok);
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(dna_last_error_message()) }.to_string_lossy().into_owned()
}

#[test]
fn example_properties() {
    let c = code(EXAMPLE);
    let (mut dim, mut n, mut d) = (0usize, 0usize, 0i32);
    let (mut rev, mut rc) = (false, false);
    unsafe {
        assert_eq!(dna_code_dim(c, &mut dim), DnaStatus::Ok);
        assert_eq!(dna_code_length(c, &mut n), DnaStatus::Ok);
        assert_eq!(dna_code_min_distance(c, 24, &mut d), DnaStatus::Ok);
        assert_eq!(dna_code_is_reversible(c, &mut rev), DnaStatus::Ok);
        assert_eq!(dna_code_is_rc_closed(c, &mut rc), DnaStatus::Ok);
        dna_code_free(c);
    }
    assert_eq!((dim, n, d, rev, rc), (6, 8, 4, true, true));
}

#[test]
fn zero_code_distance_is_minus_one() {
    let c = code(r#"{"n":3,"generators":[]}"#);
    let mut d = 0i32;
    unsafe {
        assert_eq!(dna_code_min_distance(c, 24, &mut d), DnaStatus::Ok);
        dna_code_free(c);
    }
    assert_eq!(d, -1);
}

#[test]
fn dual_handles() {
    let c = code(EXAMPLE);
    for (flavor, want) in [(DnaFlavor::Euclidean, 18usize), (DnaFlavor::Hermitian, 18)] {
        let mut d = ptr::null_mut();
        let mut dim = 0usize;
        unsafe {
            assert_eq!(dna_code_dual(c, flavor, &mut d), DnaStatus::Ok);
            assert_eq!(dna_code_dim(d, &mut dim), DnaStatus::Ok);
            dna_code_free(d);
        }
        assert_eq!(dim, want);
    }
    unsafe { dna_code_free(c) };
}

#[test]
fn membership_by_dna() {
    let c = code(EXAMPLE);
    let mut yes = false;
    let mut no = true;
    let a = CString::new("CGCGCGCGCGCGCGCG").unwrap();
    let b = CString::new("ATATATATATATATAT").unwrap();
    let bad = CString::new("AAAA").unwrap();
    unsafe {
        assert_eq!(dna_code_contains_dna(c, a.as_ptr(), &mut yes), DnaStatus::Ok);
        assert_eq!(dna_code_contains_dna(c, b.as_ptr(), &mut no), DnaStatus::Ok);
        assert_eq!(dna_code_contains_dna(c, bad.as_ptr(), &mut no), DnaStatus::Parse);
        dna_code_free(c);
    }
    assert!(yes);
    assert!(last_error().contains("AA"));
}

#[test]
fn json_outputs() {
    let c = code(EXAMPLE);
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(dna_code_report_json(c, 24, &mut s), DnaStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
        assert_eq!(v["min_distance"], 4);
        assert_eq!(v["cardinality"], 64);
        dna_string_free(s);

        assert_eq!(dna_table2_json(&mut s), DnaStatus::Ok);
        let v: Vec<String> = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
        assert_eq!(v.len(), 28);
        dna_string_free(s);

        let spec = CString::new(EXAMPLE).unwrap();
        let mut ok = false;
        assert_eq!(
            dna_check_json(spec.as_ptr(), DnaMode::ReverseComplement, DnaMethod::Both, 24, &mut ok, &mut s),
            DnaStatus::Ok
        );
        assert!(ok);
        dna_string_free(s);
        dna_code_free(c);
    }
}

#[test]
fn error_statuses() {
    let mut out = ptr::null_mut();
    let mut dim = 0usize;
    let mut d = 0i32;
    unsafe {
        assert_eq!(dna_code_from_json(ptr::null(), &mut out), DnaStatus::NullPointer);
        let bad = CString::new("{\"n\":0,\"generators\":[]}").unwrap();
        assert_eq!(dna_code_from_json(bad.as_ptr(), &mut out), DnaStatus::InvalidInput);
        assert!(!last_error().is_empty());
        let junk = CString::new("nope").unwrap();
        assert_eq!(dna_code_from_json(junk.as_ptr(), &mut out), DnaStatus::Parse);
        assert_eq!(dna_code_dim(ptr::null(), &mut dim), DnaStatus::NullPointer);
        let full = code(r#"{"n":12,"generators":[{"f2":"1"}]}"#);
        assert_eq!(dna_code_min_distance(full, 10, &mut d), DnaStatus::CapExceeded);
        assert_eq!(dna_code_dim(full, ptr::null_mut()), DnaStatus::NullPointer);
        dna_code_free(full);
        dna_code_free(ptr::null_mut());
        dna_string_free(ptr::null_mut());
    }
}

/// Compiles the C example against the static library and runs it.
#[test]
fn c_smoke() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let target = std::env::var_os("CARGO_TARGET_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| manifest.join("../../target"));
    let lib = target.join("debug").join("libdnacodes_ffi.a");
    if !lib.exists() {
        let st = Command::new(env!("CARGO"))
            .args(["build", "-p", "dnacodes-ffi", "--lib"])
            .status()
            .unwrap();
        assert!(st.success());
    }
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("dnacodes_smoke");
    let st = Command::new("cc")
        .arg(manifest.join("examples/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler is available");
    assert!(st.success());
    let out = Command::new(&exe).output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{text}");
    assert!(text.contains("dim=6 dist=4"));
}
