use std::ffi::{CStr, CString};
use std::ptr;

use interval_xag_ffi::*;

fn synth(n: u32, a: u64, b: u64) -> *mut IxFormula {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { ix_synth(n, a, b, &mut f) }, IxStatus::Ok);
    assert!(!f.is_null());
    f
}

fn render(f: *const IxFormula, fmt: IxFormat) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ix_formula_render(f, fmt, &mut s) }, IxStatus::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { ix_string_free(s) };
    out
}

#[test]
fn synth_eval_and_cost() {
    let f = synth(4, 3, 9);
    assert_eq!(unsafe { ix_formula_mult_cost(f) }, 2);
    for x in 0..16u64 {
        let mut v = false;
        assert_eq!(unsafe { ix_formula_eval(f, x, &mut v) }, IxStatus::Ok);
        assert_eq!(v, (3..9).contains(&x), "x={x}");
    }
    let mut v = false;
    assert_eq!(
        unsafe { ix_formula_eval(f, 16, &mut v) },
        IxStatus::InvalidArgument
    );
    unsafe { ix_formula_free(f) };
}

#[test]
fn render_formats() {
    let f = synth(3, 2, 4);
    assert_eq!(render(f, IxFormat::Expr), "(!x1 & x2)");
    let bristol = interval_xag::from_bristol(&render(f, IxFormat::Bristol)).unwrap();
    let json = interval_xag::from_json(&render(f, IxFormat::Json)).unwrap();
    assert_eq!(bristol, json);
    assert_eq!(bristol.and_count(), 1);
    unsafe { ix_formula_free(f) };
}

#[test]
fn predicted_and_verify() {
    let mut p = 0;
    assert_eq!(unsafe { ix_predicted_mc(8, 1, 255, &mut p) }, IxStatus::Ok);
    assert_eq!(p, 6);
    let mut r = IxReport::default();
    assert_eq!(unsafe { ix_verify(4, 3, 9, 0, &mut r) }, IxStatus::Ok);
    assert!(r.equivalent && !r.has_counterexample);
    assert_eq!((r.actual, r.predicted, r.naive, r.degree), (2, 2, 6, 3));
    assert_eq!(
        unsafe { ix_verify(17, 3, 9, 0, &mut r) },
        IxStatus::WidthLimit
    );
    assert_eq!(
        unsafe { ix_verify(10, 3, 9, 8, &mut r) },
        IxStatus::WidthLimit
    );
}

#[test]
fn errors_set_last_error() {
    let mut f = ptr::null_mut();
    assert_eq!(
        unsafe { ix_synth(3, 5, 5, &mut f) },
        IxStatus::InvalidArgument
    );
    assert!(f.is_null());
    assert!(
        last_error().contains("invalid interval"),
        "{}",
        last_error()
    );
    assert_eq!(
        unsafe { ix_synth(0, 0, 1, &mut f) },
        IxStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { ix_synth(3, 1, 2, ptr::null_mut()) },
        IxStatus::NullPointer
    );
    assert_eq!(
        unsafe { ix_formula_render(ptr::null(), IxFormat::Expr, &mut ptr::null_mut()) },
        IxStatus::NullPointer
    );
    let f = synth(3, 1, 2);
    assert_eq!(last_error(), "");
    unsafe {
        ix_formula_free(f);
        ix_formula_free(ptr::null_mut());
        ix_string_free(ptr::null_mut());
    }
    assert_eq!(unsafe { ix_formula_mult_cost(ptr::null()) }, 0);
}

#[test]
fn header_declares_the_api() {
    let header = include_str!("../include/interval_xag.h");
    for name in [
        "ix_synth",
        "ix_formula_free",
        "ix_formula_mult_cost",
        "ix_formula_eval",
        "ix_formula_render",
        "ix_string_free",
        "ix_predicted_mc",
        "ix_verify",
        "ix_last_error",
        "typedef struct IxFormula IxFormula",
        "IX_STATUS_OK = 0",
        "IX_FORMAT_BRISTOL",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
    let _ = CString::new(header).unwrap();
}
