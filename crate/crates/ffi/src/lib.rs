//! C ABI for the `tracenorm` library.
//!
//! Digraphs cross the boundary as opaque `TnDigraph` handles created by
//! [`tn_digraph_from_arcs`] or [`tn_digraph_parse`] and released with
//! [`tn_digraph_free`]. Every fallible call returns a [`TnStatus`]; on
//! failure a message is kept per thread and can be read with
//! [`tn_last_error_message`].
//!
//! # Safety
//!
//! Pointer arguments must be null or valid for the duration of the call.
//! Null pointers are reported as `TN_STATUS_NULL_POINTER` rather than
//! dereferenced. Handles must come from this library and be freed once.
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use tracenorm::digraph::parse_digraph;
use tracenorm::spectra::alpha_spectrum;
use tracenorm::variation::{self, DeletionKind, DeletionReport};
use tracenorm::{AlphaParam, Digraph, Error};

/// Status codes. Values 2 and 3 match the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TnStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Numerical = 3,
    Domain = 4,
    Parse = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Opaque digraph handle.
pub struct TnDigraph {
    inner: Digraph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TnDeletionKind {
    Arc = 0,
    LeafVertex = 1,
    NonleafVertex = 2,
}

/// Trace norms before and after one deletion, with the bound and equality flags.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct TnDeletionReport {
    pub kind: TnDeletionKind,
    pub alpha: f64,
    pub norm_before: f64,
    pub norm_after: f64,
    pub bound: f64,
    pub slack: f64,
    pub equality_predicted: bool,
    pub equality_observed: bool,
}

impl From<&DeletionReport> for TnDeletionReport {
    fn from(r: &DeletionReport) -> Self {
        TnDeletionReport {
            kind: match r.kind {
                DeletionKind::Arc => TnDeletionKind::Arc,
                DeletionKind::LeafVertex => TnDeletionKind::LeafVertex,
                DeletionKind::NonleafVertex => TnDeletionKind::NonleafVertex,
            },
            alpha: r.alpha.value(),
            norm_before: r.norm_before,
            norm_after: r.norm_after,
            bound: r.bound,
            slack: r.slack,
            equality_predicted: r.equality_predicted,
            equality_observed: r.equality_observed,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: TnStatus, msg: impl Into<String>) -> TnStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> TnStatus {
    match e {
        Error::Input(_) => TnStatus::InvalidInput,
        Error::Parse { .. } => TnStatus::Parse,
        Error::Domain(_) => TnStatus::Domain,
        Error::Numerical(_) => TnStatus::Numerical,
    }
}

fn guard(f: impl FnOnce() -> TnStatus + UnwindSafe) -> TnStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(f).unwrap_or_else(|_| fail(TnStatus::Panic, "panic inside tracenorm"))
}

fn lift<T>(r: tracenorm::Result<T>) -> Result<T, TnStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

fn alpha_of(alpha: f64) -> Result<AlphaParam, TnStatus> {
    lift(AlphaParam::new(alpha))
}

unsafe fn digraph_ref<'a>(h: *const TnDigraph) -> Result<&'a Digraph, TnStatus> {
    h.as_ref().map(|h| &h.inner).ok_or_else(|| fail(TnStatus::NullPointer, "null digraph handle"))
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn tn_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a digraph on `n` vertices from `m` arcs `tails[i] → heads[i]`.
/// `tails` and `heads` may be null when `m` is 0.
#[no_mangle]
pub unsafe extern "C" fn tn_digraph_from_arcs(
    n: usize,
    tails: *const usize,
    heads: *const usize,
    m: usize,
    out: *mut *mut TnDigraph,
) -> TnStatus {
    guard(|| {
        if out.is_null() || (m > 0 && (tails.is_null() || heads.is_null())) {
            return fail(TnStatus::NullPointer, "null argument");
        }
        let arcs: Vec<(usize, usize)> = if m == 0 {
            Vec::new()
        } else {
            let t = std::slice::from_raw_parts(tails, m);
            let h = std::slice::from_raw_parts(heads, m);
            t.iter().copied().zip(h.iter().copied()).collect()
        };
        let d = try_status!(lift(Digraph::new(n, arcs)));
        *out = Box::into_raw(Box::new(TnDigraph { inner: d }));
        TnStatus::Ok
    })
}

/// Parses the digraph text format from a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn tn_digraph_parse(text: *const c_char, out: *mut *mut TnDigraph) -> TnStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(TnStatus::NullPointer, "null argument");
        }
        let s = match CStr::from_ptr(text).to_str() {
            Ok(s) => s,
            Err(_) => return fail(TnStatus::Parse, "input is not valid UTF-8"),
        };
        let d = try_status!(lift(parse_digraph(s)));
        *out = Box::into_raw(Box::new(TnDigraph { inner: d }));
        TnStatus::Ok
    })
}

/// Releases a handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn tn_digraph_free(handle: *mut TnDigraph) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of vertices, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn tn_digraph_order(handle: *const TnDigraph) -> usize {
    handle.as_ref().map_or(0, |h| h.inner.order())
}

/// Number of arcs, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn tn_digraph_arc_count(handle: *const TnDigraph) -> usize {
    handle.as_ref().map_or(0, |h| h.inner.arc_count())
}

/// `sqrt(2a^2 - 2a + 1)`, the largest drop from deleting one arc.
#[no_mangle]
pub unsafe extern "C" fn tn_arc_bound(alpha: f64, out: *mut f64) -> TnStatus {
    guard(|| {
        if out.is_null() {
            return fail(TnStatus::NullPointer, "null output");
        }
        *out = variation::arc_bound(try_status!(alpha_of(alpha)));
        TnStatus::Ok
    })
}

/// Alpha trace norm of the digraph.
#[no_mangle]
pub unsafe extern "C" fn tn_trace_norm(handle: *const TnDigraph, alpha: f64, out: *mut f64) -> TnStatus {
    guard(|| {
        let d = try_status!(digraph_ref(handle));
        if out.is_null() {
            return fail(TnStatus::NullPointer, "null output");
        }
        let a = try_status!(alpha_of(alpha));
        *out = try_status!(lift(tracenorm::spectra::trace_norm(d, a)));
        TnStatus::Ok
    })
}

/// Writes the `n` alpha singular values, descending, into `values`.
/// `len` must be at least the order of the digraph.
#[no_mangle]
pub unsafe extern "C" fn tn_singular_values(
    handle: *const TnDigraph,
    alpha: f64,
    values: *mut f64,
    len: usize,
) -> TnStatus {
    guard(|| {
        let d = try_status!(digraph_ref(handle));
        if len < d.order() {
            return fail(TnStatus::BufferTooSmall, format!("buffer holds {len} values, need {}", d.order()));
        }
        if values.is_null() && d.order() > 0 {
            return fail(TnStatus::NullPointer, "null output buffer");
        }
        let a = try_status!(alpha_of(alpha));
        let s = try_status!(lift(alpha_spectrum(d, a)));
        if !s.values.is_empty() {
            std::slice::from_raw_parts_mut(values, s.values.len()).copy_from_slice(&s.values);
        }
        TnStatus::Ok
    })
}

/// Report for deleting arc `u → v`.
#[no_mangle]
pub unsafe extern "C" fn tn_arc_deletion_report(
    handle: *const TnDigraph,
    u: usize,
    v: usize,
    alpha: f64,
    tol: f64,
    out: *mut TnDeletionReport,
) -> TnStatus {
    guard(|| {
        let d = try_status!(digraph_ref(handle));
        if out.is_null() {
            return fail(TnStatus::NullPointer, "null output");
        }
        let a = try_status!(alpha_of(alpha));
        let r = try_status!(lift(variation::arc_deletion_report(d, u, v, a, tol)));
        *out = TnDeletionReport::from(&r);
        TnStatus::Ok
    })
}

/// Report for deleting vertex `u`, as a leaf or nonleaf deletion by degree.
#[no_mangle]
pub unsafe extern "C" fn tn_vertex_deletion_report(
    handle: *const TnDigraph,
    u: usize,
    alpha: f64,
    tol: f64,
    out: *mut TnDeletionReport,
) -> TnStatus {
    guard(|| {
        let d = try_status!(digraph_ref(handle));
        if out.is_null() {
            return fail(TnStatus::NullPointer, "null output");
        }
        let a = try_status!(alpha_of(alpha));
        let r = try_status!(lift(variation::vertex_deletion_report(d, u, a, tol)));
        *out = TnDeletionReport::from(&r);
        TnStatus::Ok
    })
}
