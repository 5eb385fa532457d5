//! C ABI over `seqspace`.
//!
//! Every fallible function returns a [`SeqspaceStatus`]. On failure the
//! message is available from [`seqspace_last_error`] until the next failing
//! call on the same thread. Strings handed out through `char **` belong to
//! the caller and are released with [`seqspace_string_free`]; handles are
//! released with their matching `_free` function.
//!
//! Operators and windows carry a backend. Mixing an exact operator with a
//! float window (or the reverse) is rejected with
//! `SEQSPACE_STATUS_INVALID_ARGUMENT`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde_json::json;

use seqspace::config::{ConfigFile, RunConfig};
use seqspace::duals::{dual_report, DualCandidate, DualKind, SourceSpace};
use seqspace::operators::{
    discrepancy_report, verification_suites, NamedMatrix, PrintedForm, MAX_EXACT_ORDER,
};
use seqspace::transforms::{
    apply, eta_sequence, inverse_apply, membership_report, theta_basis, Space, Verdict,
};
use seqspace::{
    Backend, BinomialParams, Error, Float, FractionalOrder, LambdaPreset, LambdaSeq,
    ProductOperator, Rational, Scalar, SequenceWindow,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqspaceStatus {
    Ok = 0,
    NullPointer = 1,
    /// Unparseable literal, unknown name, bad config, backend mismatch.
    InvalidArgument = 2,
    /// Parameters outside the operator's domain: `r + s = 0`, `r = 0` for
    /// inverses, non-increasing lambda, singular diagonal, gamma pole.
    Domain = 3,
    /// Truncation order or index beyond what is available.
    OutOfRange = 4,
    /// A verification ran and found a disagreement.
    Failed = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqspaceBackend {
    Exact = 0,
    Float = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqspaceVerdict {
    Consistent = 0,
    Inconsistent = 1,
    Inconclusive = 2,
}

enum Op {
    Exact(ProductOperator<Rational>),
    Float(ProductOperator<Float>),
}

enum Win {
    Exact(SequenceWindow<Rational>),
    Float(SequenceWindow<Float>),
}

/// Opaque operator handle.
pub struct SeqspaceOperator {
    inner: Op,
}

/// Opaque sequence window handle.
pub struct SeqspaceWindow {
    inner: Win,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(SeqspaceStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. }
            | Error::Line { .. }
            | Error::Config(_)
            | Error::InvalidExponent(_)
            | Error::LengthMismatch(..) => SeqspaceStatus::InvalidArgument,
            Error::DegenerateBinomial
            | Error::ZeroR
            | Error::LambdaNotIncreasing { .. }
            | Error::EmptyLambda
            | Error::SingularDiagonal(_)
            | Error::GammaPole(_) => SeqspaceStatus::Domain,
            Error::ExtentExceeded { .. }
            | Error::EmptyTruncation
            | Error::TruncationCap { .. }
            | Error::IndexOutOfWindow { .. } => SeqspaceStatus::OutOfRange,
        };
        Failure(status, e.to_string())
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(SeqspaceStatus::InvalidArgument, msg.into())
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SeqspaceStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SeqspaceStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(&format!("internal panic: {msg}"));
            SeqspaceStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(
            SeqspaceStatus::NullPointer,
            format!("{what} is null"),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(format!("{what} is not valid UTF-8")))
}

unsafe fn opt_str_arg<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        str_arg(p, what).map(Some)
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(SeqspaceStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(
            SeqspaceStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| invalid("string contains NUL"))
}

fn mismatch() -> Failure {
    invalid("operator and window use different backends")
}

fn backend_of(b: SeqspaceBackend) -> Backend {
    match b {
        SeqspaceBackend::Exact => Backend::Exact,
        SeqspaceBackend::Float => Backend::Float,
    }
}

fn build_op<S: Scalar>(
    alpha: &str,
    r: &str,
    s: &str,
    preset: LambdaPreset,
) -> Result<ProductOperator<S>, Error> {
    Ok(ProductOperator::new(
        BinomialParams::new(S::parse(r)?, S::parse(s)?)?,
        FractionalOrder::new(S::parse(alpha)?),
        LambdaSeq::preset(preset),
    ))
}

fn boxed_window(w: Win) -> *mut SeqspaceWindow {
    Box::into_raw(Box::new(SeqspaceWindow { inner: w }))
}

/// Message of the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn seqspace_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn seqspace_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn seqspace_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds an operator from scalar literals (`"1/2"`, `"-1"`; decimals are
/// accepted by the float backend only) and a lambda preset name
/// (`cesaro`, `squares`, `powers2`).
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_operator_new(
    alpha: *const c_char,
    r: *const c_char,
    s: *const c_char,
    lambda_preset: *const c_char,
    backend: SeqspaceBackend,
    out: *mut *mut SeqspaceOperator,
) -> SeqspaceStatus {
    guard(|| {
        let alpha = str_arg(alpha, "alpha")?;
        let r = str_arg(r, "r")?;
        let s = str_arg(s, "s")?;
        let preset: LambdaPreset = str_arg(lambda_preset, "lambda_preset")?.parse()?;
        let inner = match backend {
            SeqspaceBackend::Exact => Op::Exact(build_op(alpha, r, s, preset)?),
            SeqspaceBackend::Float => Op::Float(build_op(alpha, r, s, preset)?),
        };
        write_out(out, Box::into_raw(Box::new(SeqspaceOperator { inner })))
    })
}

/// Builds an operator from a JSON config record with the same fields as
/// the CLI's `--config` file. Missing fields take the CLI defaults.
///
/// # Safety
/// `json` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_operator_from_json(
    json: *const c_char,
    out: *mut *mut SeqspaceOperator,
) -> SeqspaceStatus {
    guard(|| {
        let file = ConfigFile::from_json(str_arg(json, "json")?)?;
        let cfg = RunConfig::resolve(file, Backend::Exact)?;
        let inner = match cfg.backend {
            Backend::Exact => Op::Exact(cfg.operator()?),
            Backend::Float => Op::Float(cfg.operator()?),
        };
        write_out(out, Box::into_raw(Box::new(SeqspaceOperator { inner })))
    })
}

/// # Safety
/// `op` must be a live operator handle.
#[no_mangle]
pub unsafe extern "C" fn seqspace_operator_backend(op: *const SeqspaceOperator) -> SeqspaceBackend {
    match op.as_ref().map(|o| &o.inner) {
        Some(Op::Float(_)) => SeqspaceBackend::Float,
        _ => SeqspaceBackend::Exact,
    }
}

/// # Safety
/// `op` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn seqspace_operator_free(op: *mut SeqspaceOperator) {
    if !op.is_null() {
        drop(Box::from_raw(op));
    }
}

fn entry_of<S: Scalar>(
    op: &ProductOperator<S>,
    matrix: NamedMatrix,
    row: usize,
    col: usize,
) -> Result<S, Failure> {
    if col > row {
        return Err(invalid(format!(
            "entry requires col <= row, got ({row}, {col})"
        )));
    }
    let t = matrix.build(op)?;
    t.check_order(row + 1)?;
    Ok(t.entry(row, col))
}

/// Entry `(row, col)` of a named matrix (`delta`, `delta-inv`, `binomial`,
/// `binomial-inv`, `lambda`, `lambda-inv`, `composed`, `composed-inv`)
/// formatted as text: `p/q` for exact operators, 17 significant digits for
/// float ones.
///
/// # Safety
/// `op` must be live, `matrix` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_entry_string(
    op: *const SeqspaceOperator,
    matrix: *const c_char,
    row: usize,
    col: usize,
    out: *mut *mut c_char,
) -> SeqspaceStatus {
    guard(|| {
        let op = deref(op, "op")?;
        let matrix: NamedMatrix = str_arg(matrix, "matrix")?.parse()?;
        let text = match &op.inner {
            Op::Exact(o) => entry_of(o, matrix, row, col)?.to_string(),
            Op::Float(o) => entry_of(o, matrix, row, col)?.to_string(),
        };
        write_out(out, to_c_string(text)?)
    })
}

/// Same as [`seqspace_entry_string`] but converted to `double`.
///
/// # Safety
/// `op` must be live, `matrix` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_entry_f64(
    op: *const SeqspaceOperator,
    matrix: *const c_char,
    row: usize,
    col: usize,
    out: *mut f64,
) -> SeqspaceStatus {
    guard(|| {
        let op = deref(op, "op")?;
        let matrix: NamedMatrix = str_arg(matrix, "matrix")?.parse()?;
        let v = match &op.inner {
            Op::Exact(o) => entry_of(o, matrix, row, col)?.to_f64(),
            Op::Float(o) => entry_of(o, matrix, row, col)?.to_f64(),
        };
        write_out(out, v)
    })
}

/// Parses a window from text: one scalar per line, blank lines and `#`
/// comments skipped.
///
/// # Safety
/// `text` must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_window_parse(
    text: *const c_char,
    backend: SeqspaceBackend,
    out: *mut *mut SeqspaceWindow,
) -> SeqspaceStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        let inner = match backend_of(backend) {
            Backend::Exact => Win::Exact(SequenceWindow::parse_lines(text)?),
            Backend::Float => Win::Float(SequenceWindow::parse_lines(text)?),
        };
        write_out(out, boxed_window(inner))
    })
}

/// Builds a window from `len` doubles. Under the exact backend each value
/// is converted to the rational it represents exactly.
///
/// # Safety
/// `values` must point to `len` readable doubles (or be NULL with
/// `len == 0`); `out` writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_window_from_f64(
    values: *const f64,
    len: usize,
    backend: SeqspaceBackend,
    out: *mut *mut SeqspaceWindow,
) -> SeqspaceStatus {
    guard(|| {
        let slice: &[f64] = if len == 0 {
            &[]
        } else if values.is_null() {
            return Err(Failure(
                SeqspaceStatus::NullPointer,
                "values is null".into(),
            ));
        } else {
            std::slice::from_raw_parts(values, len)
        };
        let inner = match backend_of(backend) {
            Backend::Exact => Win::Exact(SequenceWindow::new(
                slice
                    .iter()
                    .enumerate()
                    .map(|(i, v)| {
                        Rational::from_f64(*v)
                            .ok_or_else(|| invalid(format!("value {i} is not finite")))
                    })
                    .collect::<Result<_, _>>()?,
            )),
            Backend::Float => Win::Float(SequenceWindow::new(
                slice.iter().map(|v| Float(*v)).collect(),
            )),
        };
        write_out(out, boxed_window(inner))
    })
}

/// # Safety
/// `w` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_window_len(
    w: *const SeqspaceWindow,
    out: *mut usize,
) -> SeqspaceStatus {
    guard(|| {
        let len = match &deref(w, "window")?.inner {
            Win::Exact(x) => x.len(),
            Win::Float(x) => x.len(),
        };
        write_out(out, len)
    })
}

/// # Safety
/// `w` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_window_get_f64(
    w: *const SeqspaceWindow,
    index: usize,
    out: *mut f64,
) -> SeqspaceStatus {
    guard(|| {
        let (v, len) = match &deref(w, "window")?.inner {
            Win::Exact(x) => (x.get(index).map(Scalar::to_f64), x.len()),
            Win::Float(x) => (x.get(index).map(Scalar::to_f64), x.len()),
        };
        let v = v.ok_or(Error::IndexOutOfWindow { index, len })?;
        write_out(out, v)
    })
}

/// The window as text, one value per line.
///
/// # Safety
/// `w` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_window_to_text(
    w: *const SeqspaceWindow,
    out: *mut *mut c_char,
) -> SeqspaceStatus {
    guard(|| {
        let text = match &deref(w, "window")?.inner {
            Win::Exact(x) => x.to_lines(),
            Win::Float(x) => x.to_lines(),
        };
        write_out(out, to_c_string(text)?)
    })
}

/// # Safety
/// `w` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn seqspace_window_free(w: *mut SeqspaceWindow) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// `y = A x` on the window.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_apply(
    op: *const SeqspaceOperator,
    x: *const SeqspaceWindow,
    out: *mut *mut SeqspaceWindow,
) -> SeqspaceStatus {
    guard(|| {
        let inner = match (&deref(op, "op")?.inner, &deref(x, "x")?.inner) {
            (Op::Exact(o), Win::Exact(x)) => Win::Exact(apply(&o.forward(), x)?),
            (Op::Float(o), Win::Float(x)) => Win::Float(apply(&o.forward(), x)?),
            _ => return Err(mismatch()),
        };
        write_out(out, boxed_window(inner))
    })
}

/// `x = A^{-1} y` on the window.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_inverse_apply(
    op: *const SeqspaceOperator,
    y: *const SeqspaceWindow,
    out: *mut *mut SeqspaceWindow,
) -> SeqspaceStatus {
    guard(|| {
        let inner = match (&deref(op, "op")?.inner, &deref(y, "y")?.inner) {
            (Op::Exact(o), Win::Exact(y)) => Win::Exact(inverse_apply(o, y)?),
            (Op::Float(o), Win::Float(y)) => Win::Float(inverse_apply(o, y)?),
            _ => return Err(mismatch()),
        };
        write_out(out, boxed_window(inner))
    })
}

/// Basis sequence `theta^(k)` over `len` terms.
///
/// # Safety
/// `op` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_theta(
    op: *const SeqspaceOperator,
    k: usize,
    len: usize,
    out: *mut *mut SeqspaceWindow,
) -> SeqspaceStatus {
    guard(|| {
        let inner = match &deref(op, "op")?.inner {
            Op::Exact(o) => Win::Exact(theta_basis(o, k, len)?),
            Op::Float(o) => Win::Float(theta_basis(o, k, len)?),
        };
        write_out(out, boxed_window(inner))
    })
}

/// The sequence `eta` with `A eta = (1, 1, ...)`, over `len` terms.
///
/// # Safety
/// `op` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_eta(
    op: *const SeqspaceOperator,
    len: usize,
    out: *mut *mut SeqspaceWindow,
) -> SeqspaceStatus {
    guard(|| {
        let inner = match &deref(op, "op")?.inner {
            Op::Exact(o) => Win::Exact(eta_sequence(o, len)?),
            Op::Float(o) => Win::Float(eta_sequence(o, len)?),
        };
        write_out(out, boxed_window(inner))
    })
}

fn verdict_code(v: Verdict) -> SeqspaceVerdict {
    match v {
        Verdict::Consistent => SeqspaceVerdict::Consistent,
        Verdict::Inconsistent => SeqspaceVerdict::Inconsistent,
        Verdict::Inconclusive => SeqspaceVerdict::Inconclusive,
    }
}

fn membership_json<S: Scalar>(
    op: &ProductOperator<S>,
    x: &SequenceWindow<S>,
    space: Space,
    bound: Option<&str>,
) -> Result<(String, SeqspaceVerdict), Failure> {
    let bound = bound.map(S::parse).transpose()?;
    let rep = membership_report(x, space, op, bound.as_ref())?;
    let text = serde_json::to_string(&rep).map_err(|e| invalid(e.to_string()))?;
    Ok((text, verdict_code(rep.verdict)))
}

/// Membership diagnostics for `x` in the space named `space` (`c0`, `c`,
/// `linf`, `lp`). `p` is read only for `lp`. `bound` may be NULL. Either
/// output pointer may be NULL when not wanted.
///
/// # Safety
/// Handles must be live; strings NUL-terminated or NULL where allowed.
#[no_mangle]
pub unsafe extern "C" fn seqspace_membership_json(
    op: *const SeqspaceOperator,
    x: *const SeqspaceWindow,
    space: *const c_char,
    p: f64,
    bound: *const c_char,
    out_json: *mut *mut c_char,
    out_verdict: *mut SeqspaceVerdict,
) -> SeqspaceStatus {
    guard(|| {
        let name = str_arg(space, "space")?;
        let space = Space::parse(name, (name.eq_ignore_ascii_case("lp")).then_some(p))?;
        let bound = opt_str_arg(bound, "bound")?;
        let (text, verdict) = match (&deref(op, "op")?.inner, &deref(x, "x")?.inner) {
            (Op::Exact(o), Win::Exact(x)) => membership_json(o, x, space, bound)?,
            (Op::Float(o), Win::Float(x)) => membership_json(o, x, space, bound)?,
            _ => return Err(mismatch()),
        };
        if !out_verdict.is_null() {
            out_verdict.write(verdict);
        }
        if !out_json.is_null() {
            out_json.write(to_c_string(text)?);
        }
        Ok(())
    })
}

fn dual_json<S: Scalar>(
    op: &ProductOperator<S>,
    d: &SequenceWindow<S>,
    kind: DualKind,
    source: SourceSpace,
    order: usize,
) -> Result<String, Failure> {
    let rep = dual_report(&DualCandidate::new(d.clone()), kind, source, op, order)?;
    serde_json::to_string(&rep).map_err(|e| invalid(e.to_string()))
}

/// Dual-condition report for the multiplier window `d`. `kind` is
/// `alpha`, `beta` or `gamma`; `source` is `c0`, `c` or `linf`; `order`
/// must not exceed the window length (15 when condition 4.1 applies).
///
/// # Safety
/// Handles must be live; strings NUL-terminated; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_dual_json(
    op: *const SeqspaceOperator,
    d: *const SeqspaceWindow,
    kind: *const c_char,
    source: *const c_char,
    order: usize,
    out_json: *mut *mut c_char,
) -> SeqspaceStatus {
    guard(|| {
        let kind: DualKind = str_arg(kind, "kind")?.parse()?;
        let source: SourceSpace = str_arg(source, "source")?.parse()?;
        let text = match (&deref(op, "op")?.inner, &deref(d, "d")?.inner) {
            (Op::Exact(o), Win::Exact(d)) => dual_json(o, d, kind, source, order)?,
            (Op::Float(o), Win::Float(d)) => dual_json(o, d, kind, source, order)?,
            _ => return Err(mismatch()),
        };
        write_out(out_json, to_c_string(text)?)
    })
}

fn verify_json<S: Scalar>(
    op: &ProductOperator<S>,
    order: usize,
    variant: Option<PrintedForm>,
) -> Result<(String, bool), Failure> {
    if S::BACKEND == Backend::Exact && order > MAX_EXACT_ORDER {
        return Err(Error::TruncationCap {
            requested: order,
            cap: MAX_EXACT_ORDER,
        }
        .into());
    }
    let suites = verification_suites(op, order)?;
    let mut pass = suites.iter().all(|s| s.pass);
    let mut doc = json!({ "order": order, "suites": suites });
    if let Some(v) = variant {
        let rep = discrepancy_report(v, op, order)?;
        pass &= rep.agrees;
        doc["discrepancy"] = serde_json::to_value(&rep).map_err(|e| invalid(e.to_string()))?;
    }
    doc["pass"] = json!(pass);
    Ok((doc.to_string(), pass))
}

/// Runs the inverse-identity and oracle suites at `order`, plus the
/// discrepancy report for `variant` (`lemma3`, `theorem4`, `eq21`, `theta`)
/// when it is not NULL. Returns `SEQSPACE_STATUS_FAILED` when anything
/// disagrees; the JSON report is written in both cases.
///
/// # Safety
/// `op` must be live; `variant` NULL or NUL-terminated; `out_json` NULL or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn seqspace_verify(
    op: *const SeqspaceOperator,
    order: usize,
    variant: *const c_char,
    out_json: *mut *mut c_char,
) -> SeqspaceStatus {
    guard(|| {
        let variant = opt_str_arg(variant, "variant")?
            .map(str::parse::<PrintedForm>)
            .transpose()?;
        let (text, pass) = match &deref(op, "op")?.inner {
            Op::Exact(o) => verify_json(o, order, variant)?,
            Op::Float(o) => verify_json(o, order, variant)?,
        };
        if !out_json.is_null() {
            out_json.write(to_c_string(text)?);
        }
        if pass {
            Ok(())
        } else {
            Err(Failure(
                SeqspaceStatus::Failed,
                "verification found disagreements".into(),
            ))
        }
    })
}
