//! C ABI for `curvecount`.
//!
//! Results are returned through opaque handles (`CcReport`, `CcClass`) that
//! the caller releases with the matching `*_free` function. Every fallible
//! call returns a [`CcStatus`]; on failure `cc_last_error` describes what went
//! wrong on the calling thread. Strings returned by this library are
//! heap-allocated and must be released with `cc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use curvecount::pipelines;
use curvecount::{ChowClass, CountReport, Error, GrassmannianRing, NormalBundleType, Partition};

/// Status codes. The numeric values of `PRECONDITION` and `INTERNAL` match the
/// command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Precondition = 3,
    Internal = 4,
    Unsupported = 5,
    Panic = 6,
}

/// Opaque pipeline result.
pub struct CcReport(CountReport);

/// Opaque Chow-ring class on a Grassmannian.
pub struct CcClass(ChowClass);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes replaced");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CcStatus {
    match e {
        Error::Unsupported(_) => CcStatus::Unsupported,
        Error::Internal(_) | Error::Cache(_) => CcStatus::Internal,
        Error::InvalidPartition(_) | Error::InvalidGrassmannian { .. } | Error::OutOfBox { .. } => {
            CcStatus::InvalidArgument
        }
        _ => CcStatus::Precondition,
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard<F>(f: F) -> CcStatus
where
    F: FnOnce() -> Result<(), (CcStatus, String)>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside curvecount");
            CcStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (CcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null_err(what: &str) -> (CcStatus, String) {
    (CcStatus::NullPointer, format!("{what} is NULL"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `out` must be NULL or valid for a pointer write.
unsafe fn emit_report(
    out: *mut *mut CcReport,
    compute: impl FnOnce() -> curvecount::Result<CountReport>,
) -> CcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_err("out"));
        }
        let report = compute().map_err(lib_err)?;
        // SAFETY: `out` is non-null and the caller guarantees it is writable.
        unsafe { *out = Box::into_raw(Box::new(CcReport(report))) };
        Ok(())
    })
}

/// Message describing the last failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn cc_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: caller guarantees `s` came from `CString::into_raw`.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Lines on a general degree-`degree` hypersurface in `P^ambient`.
///
/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_count_lines_hypersurface(
    ambient: u32,
    degree: u32,
    out: *mut *mut CcReport,
) -> CcStatus {
    unsafe { emit_report(out, || pipelines::count_lines_hypersurface(ambient, degree)) }
}

/// Lines on a general complete intersection of `len` hypersurfaces.
///
/// # Safety
/// `degrees` must point to `len` readable `uint32_t` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_count_lines_complete_intersection(
    ambient: u32,
    degrees: *const u32,
    len: usize,
    out: *mut *mut CcReport,
) -> CcStatus {
    if degrees.is_null() && len > 0 {
        set_last_error("degrees is NULL");
        return CcStatus::NullPointer;
    }
    let degrees = if len == 0 {
        Vec::new()
    } else {
        // SAFETY: non-null and `len` elements readable per the contract above.
        unsafe { std::slice::from_raw_parts(degrees, len) }.to_vec()
    };
    unsafe {
        emit_report(out, || {
            pipelines::count_lines_complete_intersection(ambient, &degrees)
        })
    }
}

/// Conics on a general quintic threefold.
///
/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_count_conics_quintic(out: *mut *mut CcReport) -> CcStatus {
    unsafe { emit_report(out, pipelines::count_conics_quintic) }
}

/// Equivalence of the lines on a degree-`factor_degree` component.
///
/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_equivalence_lines_on_factor(
    total_degree: u32,
    factor_degree: u32,
    ambient: u32,
    out: *mut *mut CcReport,
) -> CcStatus {
    unsafe {
        emit_report(out, || {
            pipelines::equivalence_lines_on_factor(total_degree, factor_degree, ambient)
        })
    }
}

/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_degeneration_split_report(
    total_degree: u32,
    ambient: u32,
    out: *mut *mut CcReport,
) -> CcStatus {
    unsafe {
        emit_report(out, || {
            pipelines::degeneration_split_report(total_degree, ambient)
        })
    }
}

/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_tally_checks(out: *mut *mut CcReport) -> CcStatus {
    unsafe { emit_report(out, pipelines::tally_checks) }
}

/// Always fails with `CC_STATUS_UNSUPPORTED`.
///
/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn cc_count_twisted_cubics_quintic(out: *mut *mut CcReport) -> CcStatus {
    unsafe { emit_report(out, pipelines::count_twisted_cubics_quintic) }
}

/// The count as a decimal string (free with `cc_string_free`); NULL if `report` is NULL.
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cc_report_count(report: *const CcReport) -> *mut c_char {
    // SAFETY: caller guarantees a live handle or NULL.
    match unsafe { report.as_ref() } {
        Some(r) => into_c_string(r.0.count.to_string()),
        None => ptr::null_mut(),
    }
}

/// Structured JSON form of the report (free with `cc_string_free`).
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cc_report_to_json(
    report: *const CcReport,
    with_trace: bool,
) -> *mut c_char {
    // SAFETY: caller guarantees a live handle or NULL.
    match unsafe { report.as_ref() } {
        Some(r) => into_c_string(r.0.to_json(with_trace)),
        None => ptr::null_mut(),
    }
}

/// True when every consistency identity in the report holds.
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cc_report_all_consistent(report: *const CcReport) -> bool {
    // SAFETY: caller guarantees a live handle or NULL.
    unsafe { report.as_ref() }.is_some_and(|r| r.0.all_consistent())
}

/// # Safety
/// `report` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_report_free(report: *mut CcReport) {
    if !report.is_null() {
        // SAFETY: handle was produced by `Box::into_raw`.
        drop(unsafe { Box::from_raw(report) });
    }
}

/// The Schubert class `σ_λ` on `Gr(r, n)`; `parts` lists `λ` (may be NULL when `len == 0`).
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_class_schubert(
    r: u32,
    n: u32,
    parts: *const u32,
    len: usize,
    out: *mut *mut CcClass,
) -> CcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_err("out"));
        }
        if parts.is_null() && len > 0 {
            return Err(null_err("parts"));
        }
        let parts = if len == 0 {
            Vec::new()
        } else {
            // SAFETY: non-null with `len` readable elements.
            unsafe { std::slice::from_raw_parts(parts, len) }.to_vec()
        };
        let ring = GrassmannianRing::new(r, n).map_err(lib_err)?;
        let lambda = Partition::new(parts).map_err(lib_err)?;
        let class = ChowClass::schubert(ring, lambda).map_err(lib_err)?;
        // SAFETY: `out` checked non-null.
        unsafe { *out = Box::into_raw(Box::new(CcClass(class))) };
        Ok(())
    })
}

/// Product of two classes on the same Grassmannian.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_class_multiply(
    a: *const CcClass,
    b: *const CcClass,
    out: *mut *mut CcClass,
) -> CcStatus {
    guard(|| {
        // SAFETY: caller guarantees live handles or NULL.
        let (a, b) = unsafe { (a.as_ref(), b.as_ref()) };
        let (Some(a), Some(b)) = (a, b) else {
            return Err(null_err("operand"));
        };
        if out.is_null() {
            return Err(null_err("out"));
        }
        let prod = a.0.multiply(&b.0).map_err(lib_err)?;
        // SAFETY: `out` checked non-null.
        unsafe { *out = Box::into_raw(Box::new(CcClass(prod))) };
        Ok(())
    })
}

/// Pieri product with the special class `σ_k`.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_class_pieri(
    a: *const CcClass,
    k: u32,
    out: *mut *mut CcClass,
) -> CcStatus {
    guard(|| {
        // SAFETY: caller guarantees a live handle or NULL.
        let Some(a) = (unsafe { a.as_ref() }) else {
            return Err(null_err("operand"));
        };
        if out.is_null() {
            return Err(null_err("out"));
        }
        // SAFETY: `out` checked non-null.
        unsafe { *out = Box::into_raw(Box::new(CcClass(a.0.pieri(k)))) };
        Ok(())
    })
}

/// Degree of the class as a decimal string (free with `cc_string_free`).
///
/// # Safety
/// `a` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cc_class_integrate(a: *const CcClass) -> *mut c_char {
    // SAFETY: caller guarantees a live handle or NULL.
    match unsafe { a.as_ref() } {
        Some(a) => into_c_string(a.0.integrate().to_string()),
        None => ptr::null_mut(),
    }
}

/// Serialized class: JSON list of `[partition, "coefficient"]` pairs.
///
/// # Safety
/// `a` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cc_class_to_json(a: *const CcClass) -> *mut c_char {
    // SAFETY: caller guarantees a live handle or NULL.
    match unsafe { a.as_ref() } {
        Some(a) => {
            into_c_string(serde_json::to_string(&a.0.to_serialized()).expect("class serializes"))
        }
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `a` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_class_free(a: *mut CcClass) {
    if !a.is_null() {
        // SAFETY: handle was produced by `Box::into_raw`.
        drop(unsafe { Box::from_raw(a) });
    }
}

/// `h^0` of `O(a) ⊕ O(b)` and whether the curve is infinitesimally rigid.
///
/// # Safety
/// `h0` and `rigid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_normal_bundle_h0(
    a: i64,
    b: i64,
    h0: *mut i64,
    rigid: *mut bool,
) -> CcStatus {
    guard(|| {
        if h0.is_null() || rigid.is_null() {
            return Err(null_err("output pointer"));
        }
        let t = NormalBundleType::new(a, b).map_err(lib_err)?;
        let report = pipelines::normal_bundle_h0(t);
        // SAFETY: both pointers checked non-null.
        unsafe {
            *h0 = report.h0;
            *rigid = report.rigid;
        }
        Ok(())
    })
}

/// Reads a NUL-terminated partition string such as `"2,1"`.
///
/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_class_parse(
    r: u32,
    n: u32,
    text: *const c_char,
    out: *mut *mut CcClass,
) -> CcStatus {
    guard(|| {
        if text.is_null() {
            return Err(null_err("text"));
        }
        if out.is_null() {
            return Err(null_err("out"));
        }
        // SAFETY: caller guarantees a valid C string.
        let text = unsafe { CStr::from_ptr(text) }.to_str().map_err(|_| {
            (
                CcStatus::InvalidArgument,
                "partition is not UTF-8".to_string(),
            )
        })?;
        let ring = GrassmannianRing::new(r, n).map_err(lib_err)?;
        let lambda: Partition = text.parse().map_err(lib_err)?;
        let class = ChowClass::schubert(ring, lambda).map_err(lib_err)?;
        // SAFETY: `out` checked non-null.
        unsafe { *out = Box::into_raw(Box::new(CcClass(class))) };
        Ok(())
    })
}
