//! C ABI over the `hermops` core.
//!
//! Polynomials and operators cross the boundary as opaque handles owned by
//! the caller and released with the matching `_free`. Every fallible call
//! returns a [`HermopsStatus`]; on anything other than `HERMOPS_STATUS_OK`
//! the message is available from [`hermops_last_error`] on the same thread.
//! Strings handed out by the library are released with [`hermops_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hermops::hermite::{
    bivariate_hermite, hermite_e, laguerre_rodrigues, legendre_rodrigues, u_poly_with, Convention,
    LambdaForm,
};
use hermops::verify::{all_passed, run_check, to_json, CheckConfig};
use hermops::weyl::{OpTerm, Poly, WeylOp};
use hermops::{Error, Scalar};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HermopsStatus {
    Ok = 0,
    /// Malformed input: bad rational, non positive-definite form, unknown check id.
    InvalidArgument = 1,
    NullPointer = 2,
    /// An operator image left the finite space it was restricted to.
    DegreeOverflow = 3,
    /// Operands live on different numbers of variables.
    VariableMismatch = 4,
    Internal = 5,
}

/// Which index pairs with `x` in the `u_{n,m}` basis.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HermopsConvention {
    NWithX = 0,
    MWithX = 1,
}

/// Opaque polynomial in one or two variables with exact coefficients.
pub struct HermopsPoly {
    inner: Poly,
}

/// Opaque normal-ordered differential operator.
pub struct HermopsOp {
    inner: WeylOp,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: HermopsStatus,
    message: String,
}

impl Failure {
    fn new(status: HermopsStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }

    fn null(what: &str) -> Self {
        Failure::new(HermopsStatus::NullPointer, format!("{what} is null"))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::DegreeOverflow { .. } => HermopsStatus::DegreeOverflow,
            Error::VariableMismatch { .. } => HermopsStatus::VariableMismatch,
            Error::NoSolution | Error::NotInverse { .. } => HermopsStatus::Internal,
            _ => HermopsStatus::InvalidArgument,
        };
        Failure::new(status, e.to_string())
    }
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `f`, records any failure for `hermops_last_error` and never unwinds
/// across the boundary.
fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> HermopsStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HermopsStatus::Ok,
        Ok(Err(fail)) => {
            set_last_error(fail.message);
            fail.status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(format!("internal error: {msg}"));
            HermopsStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        Failure::new(
            HermopsStatus::InvalidArgument,
            format!("{what} is not UTF-8"),
        )
    })
}

unsafe fn read_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::null(what))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null("output pointer"));
    }
    let c = CString::new(s)
        .map_err(|_| Failure::new(HermopsStatus::Internal, "string contains NUL"))?;
    *out = c.into_raw();
    Ok(())
}

fn parse_lambda(s: &str) -> Result<LambdaForm, Failure> {
    Ok(s.parse::<LambdaForm>()?)
}

unsafe fn emit_poly(out: *mut *mut HermopsPoly, p: Poly) -> Result<(), Failure> {
    write_out(out, HermopsPoly { inner: p })
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn hermops_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn hermops_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Probabilists' Hermite polynomial `He_n`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn hermops_poly_hermite(n: u32, out: *mut *mut HermopsPoly) -> HermopsStatus {
    guard(|| emit_poly(out, hermite_e(n)))
}

/// Bivariate Hermite polynomial for the form given as `"sqrt_a,b,sqrt_c"`.
///
/// # Safety
/// `lambda` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hermops_poly_bivariate_hermite(
    n: u32,
    m: u32,
    lambda: *const c_char,
    out: *mut *mut HermopsPoly,
) -> HermopsStatus {
    guard(|| {
        let lam = parse_lambda(read_str(lambda, "lambda")?)?;
        emit_poly(out, bivariate_hermite(n, m, &lam)?)
    })
}

/// The monomial-basis polynomial `u_{n,m}` under the given index pairing.
///
/// # Safety
/// `lambda` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hermops_poly_u(
    n: u32,
    m: u32,
    lambda: *const c_char,
    convention: HermopsConvention,
    out: *mut *mut HermopsPoly,
) -> HermopsStatus {
    guard(|| {
        let lam = parse_lambda(read_str(lambda, "lambda")?)?;
        let conv = match convention {
            HermopsConvention::NWithX => Convention::NWithX,
            HermopsConvention::MWithX => Convention::MWithX,
        };
        emit_poly(out, u_poly_with(n, m, &lam, conv))
    })
}

/// Legendre polynomial `P_n` from the Rodrigues formula.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hermops_poly_legendre(
    n: u32,
    out: *mut *mut HermopsPoly,
) -> HermopsStatus {
    guard(|| emit_poly(out, legendre_rodrigues(n)))
}

/// Laguerre polynomial `L_n` from the Rodrigues formula.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hermops_poly_laguerre(
    n: u32,
    out: *mut *mut HermopsPoly,
) -> HermopsStatus {
    guard(|| emit_poly(out, laguerre_rodrigues(n)))
}

/// `{"nvars": k, "terms": [{"xdeg", "ydeg", "coeff"}]}` with coefficients
/// as exact rational strings, terms in ascending `(xdeg, ydeg)` order.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable. Free the result with
/// `hermops_string_free`.
#[no_mangle]
pub unsafe extern "C" fn hermops_poly_to_json(
    p: *const HermopsPoly,
    out: *mut *mut c_char,
) -> HermopsStatus {
    guard(|| {
        let p = &read_ref(p, "poly")?.inner;
        let terms: Vec<_> = p
            .terms()
            .map(|(&(x, y), c)| serde_json::json!({"xdeg": x, "ydeg": y, "coeff": c.to_string()}))
            .collect();
        let doc = serde_json::json!({"nvars": p.nvars(), "terms": terms});
        write_string(out, doc.to_string())
    })
}

/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hermops_poly_free(p: *mut HermopsPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Zero operator on `nvars` (1 or 2) variables.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hermops_op_new(nvars: u8, out: *mut *mut HermopsOp) -> HermopsStatus {
    guard(|| {
        if !(1..=2).contains(&nvars) {
            return Err(Error::BadVariableCount(nvars).into());
        }
        write_out(
            out,
            HermopsOp {
                inner: WeylOp::zero(nvars),
            },
        )
    })
}

/// Adds `coeff * x^x y^y ∂x^dx ∂y^dy`; `coeff` is an exact rational such as `"-3/4"`.
///
/// # Safety
/// `op` must be a live handle and `coeff` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn hermops_op_add_term(
    op: *mut HermopsOp,
    x: u32,
    y: u32,
    dx: u32,
    dy: u32,
    coeff: *const c_char,
) -> HermopsStatus {
    guard(|| {
        let op = op.as_mut().ok_or_else(|| Failure::null("op"))?;
        let c: Scalar = read_str(coeff, "coeff")?.parse()?;
        if op.inner.nvars() == 1 && (y != 0 || dy != 0) {
            return Err(Failure::new(
                HermopsStatus::VariableMismatch,
                "univariate operator cannot carry y or d/dy",
            ));
        }
        op.inner.add_term(OpTerm::new(x, y, dx, dy), c);
        Ok(())
    })
}

/// Normal-ordered product `a * b`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hermops_op_mul(
    a: *const HermopsOp,
    b: *const HermopsOp,
    out: *mut *mut HermopsOp,
) -> HermopsStatus {
    guard(|| {
        let r = read_ref(a, "a")?.inner.compose(&read_ref(b, "b")?.inner)?;
        write_out(out, HermopsOp { inner: r })
    })
}

/// `[a, b] = ab - ba`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hermops_op_commutator(
    a: *const HermopsOp,
    b: *const HermopsOp,
    out: *mut *mut HermopsOp,
) -> HermopsStatus {
    guard(|| {
        let r = read_ref(a, "a")?
            .inner
            .commutator(&read_ref(b, "b")?.inner)?;
        write_out(out, HermopsOp { inner: r })
    })
}

/// Applies the operator to a polynomial.
///
/// # Safety
/// `op` and `p` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hermops_op_apply(
    op: *const HermopsOp,
    p: *const HermopsPoly,
    out: *mut *mut HermopsPoly,
) -> HermopsStatus {
    guard(|| {
        let r = read_ref(op, "op")?
            .inner
            .apply(&read_ref(p, "poly")?.inner)?;
        emit_poly(out, r)
    })
}

/// Human-readable normal-ordered form.
///
/// # Safety
/// `op` must be a live handle; `out` must be writable. Free the result with
/// `hermops_string_free`.
#[no_mangle]
pub unsafe extern "C" fn hermops_op_to_string(
    op: *const HermopsOp,
    out: *mut *mut c_char,
) -> HermopsStatus {
    guard(|| write_string(out, read_ref(op, "op")?.inner.to_string()))
}

/// # Safety
/// `op` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hermops_op_free(op: *mut HermopsOp) {
    if !op.is_null() {
        drop(Box::from_raw(op));
    }
}

/// Runs a verification check (or `"all"`) and writes the JSON report.
/// `config_json` may be null for defaults; otherwise it is an object with
/// the same keys as the command-line flags (`n`, `lambda`, `precision`, ...).
/// `all_passed` may be null. A failing verdict is not an error: the call
/// still returns `HERMOPS_STATUS_OK` and reports it through `all_passed`.
///
/// # Safety
/// String arguments must be NUL-terminated; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hermops_check(
    check_id: *const c_char,
    config_json: *const c_char,
    out_json: *mut *mut c_char,
    all_passed_out: *mut bool,
) -> HermopsStatus {
    guard(|| {
        let id = read_str(check_id, "check_id")?;
        let config: CheckConfig = if config_json.is_null() {
            CheckConfig::default()
        } else {
            serde_json::from_str(read_str(config_json, "config_json")?)
                .map_err(|e| Failure::new(HermopsStatus::InvalidArgument, format!("config: {e}")))?
        };
        let reports = run_check(id, &config)?;
        write_string(out_json, to_json(&reports))?;
        if !all_passed_out.is_null() {
            *all_passed_out = all_passed(&reports);
        }
        Ok(())
    })
}
