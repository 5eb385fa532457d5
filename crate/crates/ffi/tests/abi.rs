use std::ffi::{c_char, CStr, CString};
use std::ptr;

use seqspace_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    seqspace_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(seqspace_last_error())
        .to_string_lossy()
        .into_owned()
}

unsafe fn operator(
    alpha: &str,
    r: &str,
    s: &str,
    lambda: &str,
    backend: SeqspaceBackend,
) -> *mut SeqspaceOperator {
    let mut op = ptr::null_mut();
    let st = seqspace_operator_new(
        c(alpha).as_ptr(),
        c(r).as_ptr(),
        c(s).as_ptr(),
        c(lambda).as_ptr(),
        backend,
        &mut op,
    );
    assert_eq!(st, SeqspaceStatus::Ok, "{}", last_error());
    op
}

unsafe fn window(text: &str, backend: SeqspaceBackend) -> *mut SeqspaceWindow {
    let mut w = ptr::null_mut();
    assert_eq!(
        seqspace_window_parse(c(text).as_ptr(), backend, &mut w),
        SeqspaceStatus::Ok
    );
    w
}

#[test]
fn entries_exact_and_float() {
    unsafe {
        let op = operator("1/2", "1", "1", "cesaro", SeqspaceBackend::Exact);
        let mut s = ptr::null_mut();
        let m = c("composed");
        assert_eq!(
            seqspace_entry_string(op, m.as_ptr(), 2, 0, &mut s),
            SeqspaceStatus::Ok
        );
        assert_eq!(take(s), "-1/96");
        let mut v = 0.0;
        assert_eq!(
            seqspace_entry_f64(op, m.as_ptr(), 1, 0, &mut v),
            SeqspaceStatus::Ok
        );
        assert_eq!(v, 0.125);
        let inv = c("composed-inv");
        assert_eq!(
            seqspace_entry_string(op, inv.as_ptr(), 3, 3, &mut s),
            SeqspaceStatus::Ok
        );
        assert_eq!(take(s), "32");

        assert_eq!(
            seqspace_entry_string(op, c("nope").as_ptr(), 0, 0, &mut s),
            SeqspaceStatus::InvalidArgument
        );
        assert!(last_error().contains("unknown matrix"));
        assert_eq!(
            seqspace_entry_string(op, m.as_ptr(), 1, 2, &mut s),
            SeqspaceStatus::InvalidArgument
        );
        seqspace_operator_free(op);

        let fop = operator("0.5", "1", "1", "cesaro", SeqspaceBackend::Float);
        assert_eq!(seqspace_operator_backend(fop), SeqspaceBackend::Float);
        assert_eq!(
            seqspace_entry_string(fop, m.as_ptr(), 2, 2, &mut s),
            SeqspaceStatus::Ok
        );
        assert_eq!(take(s), "8.3333333333333329e-2");
        seqspace_operator_free(fop);
    }
}

#[test]
fn status_codes() {
    unsafe {
        let mut op = ptr::null_mut();
        let (half, one, minus, ces) = (c("1/2"), c("1"), c("-1"), c("cesaro"));
        assert_eq!(
            seqspace_operator_new(
                half.as_ptr(),
                one.as_ptr(),
                minus.as_ptr(),
                ces.as_ptr(),
                SeqspaceBackend::Exact,
                &mut op
            ),
            SeqspaceStatus::Domain
        );
        assert!(op.is_null());
        assert_eq!(
            seqspace_operator_new(
                ptr::null(),
                one.as_ptr(),
                one.as_ptr(),
                ces.as_ptr(),
                SeqspaceBackend::Exact,
                &mut op
            ),
            SeqspaceStatus::NullPointer
        );
        assert_eq!(
            seqspace_operator_new(
                c("0.5").as_ptr(),
                one.as_ptr(),
                one.as_ptr(),
                ces.as_ptr(),
                SeqspaceBackend::Exact,
                &mut op
            ),
            SeqspaceStatus::InvalidArgument
        );

        let zero_r = operator("1/2", "0", "1", "cesaro", SeqspaceBackend::Exact);
        let y = window("1\n1\n", SeqspaceBackend::Exact);
        let mut out = ptr::null_mut();
        assert_eq!(
            seqspace_inverse_apply(zero_r, y, &mut out),
            SeqspaceStatus::Domain
        );

        let fw = window("1\n1\n", SeqspaceBackend::Float);
        assert_eq!(
            seqspace_apply(zero_r, fw, &mut out),
            SeqspaceStatus::InvalidArgument
        );
        assert!(last_error().contains("backends"));

        let mut v = 0.0;
        assert_eq!(
            seqspace_window_get_f64(y, 5, &mut v),
            SeqspaceStatus::OutOfRange
        );

        seqspace_window_free(y);
        seqspace_window_free(fw);
        seqspace_operator_free(zero_r);
        seqspace_operator_free(ptr::null_mut());
        seqspace_window_free(ptr::null_mut());
        seqspace_string_free(ptr::null_mut());
    }
}

#[test]
fn transforms_round_trip() {
    unsafe {
        let op = operator("3/2", "2", "3", "squares", SeqspaceBackend::Exact);
        let vals = [1.0, -0.25, 3.5, 8.0, 0.0, -1.0];
        let mut x = ptr::null_mut();
        assert_eq!(
            seqspace_window_from_f64(vals.as_ptr(), vals.len(), SeqspaceBackend::Exact, &mut x),
            SeqspaceStatus::Ok
        );
        let (mut y, mut back) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(seqspace_apply(op, x, &mut y), SeqspaceStatus::Ok);
        assert_eq!(seqspace_inverse_apply(op, y, &mut back), SeqspaceStatus::Ok);
        let mut len = 0;
        assert_eq!(seqspace_window_len(back, &mut len), SeqspaceStatus::Ok);
        assert_eq!(len, vals.len());
        for (i, want) in vals.iter().enumerate() {
            let mut v = f64::NAN;
            assert_eq!(seqspace_window_get_f64(back, i, &mut v), SeqspaceStatus::Ok);
            assert_eq!(v, *want);
        }

        let (mut theta, mut unit) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(seqspace_theta(op, 2, 5, &mut theta), SeqspaceStatus::Ok);
        assert_eq!(seqspace_apply(op, theta, &mut unit), SeqspaceStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(seqspace_window_to_text(unit, &mut text), SeqspaceStatus::Ok);
        assert_eq!(take(text), "0\n0\n1\n0\n0\n");

        let (mut eta, mut ones) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(seqspace_eta(op, 4, &mut eta), SeqspaceStatus::Ok);
        assert_eq!(seqspace_apply(op, eta, &mut ones), SeqspaceStatus::Ok);
        assert_eq!(seqspace_window_to_text(ones, &mut text), SeqspaceStatus::Ok);
        assert_eq!(take(text), "1\n1\n1\n1\n");

        for w in [x, y, back, theta, unit, eta, ones] {
            seqspace_window_free(w);
        }
        seqspace_operator_free(op);
    }
}

#[test]
fn json_reports() {
    unsafe {
        let mut op = ptr::null_mut();
        let cfg = c(r#"{"lambda": {"preset": "squares"}}"#);
        assert_eq!(
            seqspace_operator_from_json(cfg.as_ptr(), &mut op),
            SeqspaceStatus::Ok
        );

        let mut json = ptr::null_mut();
        assert_eq!(
            seqspace_verify(op, 6, ptr::null(), &mut json),
            SeqspaceStatus::Ok
        );
        let doc: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(doc["pass"], true);
        assert_eq!(doc["suites"].as_array().unwrap().len(), 8);

        let variant = c("lemma3");
        assert_eq!(
            seqspace_verify(op, 3, variant.as_ptr(), &mut json),
            SeqspaceStatus::Failed
        );
        let doc: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(doc["discrepancy"]["first_mismatch"]["row"], 1);

        let eta = {
            let mut w = ptr::null_mut();
            assert_eq!(seqspace_eta(op, 10, &mut w), SeqspaceStatus::Ok);
            w
        };
        let mut verdict = SeqspaceVerdict::Inconclusive;
        assert_eq!(
            seqspace_membership_json(
                op,
                eta,
                c("c").as_ptr(),
                f64::NAN,
                ptr::null(),
                &mut json,
                &mut verdict
            ),
            SeqspaceStatus::Ok
        );
        assert_eq!(verdict, SeqspaceVerdict::Consistent);
        let doc: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(doc["space"], "c");
        assert_eq!(
            seqspace_membership_json(
                op,
                eta,
                c("c0").as_ptr(),
                f64::NAN,
                ptr::null(),
                ptr::null_mut(),
                &mut verdict
            ),
            SeqspaceStatus::Ok
        );
        assert_eq!(verdict, SeqspaceVerdict::Inconsistent);

        let d = window(&"1\n".repeat(16), SeqspaceBackend::Exact);
        let (alpha, beta, c0, cc) = (c("alpha"), c("beta"), c("c0"), c("c"));
        assert_eq!(
            seqspace_dual_json(op, d, alpha.as_ptr(), c0.as_ptr(), 16, &mut json),
            SeqspaceStatus::OutOfRange
        );
        assert!(last_error().contains("cap 15"));
        assert_eq!(
            seqspace_dual_json(op, d, beta.as_ptr(), cc.as_ptr(), 8, &mut json),
            SeqspaceStatus::Ok
        );
        let doc: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(doc["order"], 8);

        seqspace_window_free(eta);
        seqspace_window_free(d);
        seqspace_operator_free(op);
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(seqspace_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
