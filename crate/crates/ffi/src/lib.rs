//! C ABI for the rainbow-cycles library.
//!
//! Graphs travel as opaque handles; results come back as UTF-8 JSON strings
//! allocated by Rust and released with [`rc_string_free`]. Every function
//! returns an [`RcStatus`]; on failure, [`rc_last_error`] holds a
//! thread-local message until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rainbow_cycles::gen;
use rainbow_cycles::graph::validate;
use rainbow_cycles::params::PipelineParams;
use rainbow_cycles::pipeline::{find_short_rainbow_cycle, PipelineError};
use rainbow_cycles::rainbow::{shortest_rainbow_cycle_exact, SearchError};
use rainbow_cycles::ColoredGraph;

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RcStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    BadParameter = 4,
    HypothesesNotMet = 5,
    NotFound = 6,
    BudgetExceeded = 7,
    InternalError = 8,
}

/// Opaque colored-graph handle.
pub struct RcGraph {
    inner: ColoredGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(msg.replace('\0', "?")).unwrap_or_default();
    });
}

/// Message for the most recent failure on this thread. Valid until the next
/// call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn rc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

fn to_cstring(s: String) -> *mut c_char {
    CString::new(s.replace('\0', "?"))
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// Frees a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must have been returned by a function of this library and not freed
/// before.
#[no_mangle]
pub unsafe extern "C" fn rc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Frees a graph handle. Null is a no-op.
///
/// # Safety
/// `g` must have been returned by a graph-producing function of this
/// library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_free(g: *mut RcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

fn guard<F: FnOnce() -> RcStatus>(f: F) -> RcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            RcStatus::InternalError
        }
    }
}

/// Parses the colored-graph text format (`n m` header, `u v c` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_parse(text: *const c_char, out: *mut *mut RcGraph) -> RcStatus {
    if text.is_null() || out.is_null() {
        set_error("null argument");
        return RcStatus::NullArgument;
    }
    let bytes = CStr::from_ptr(text);
    guard(|| {
        let s = match bytes.to_str() {
            Ok(s) => s,
            Err(e) => {
                set_error(format!("input is not UTF-8: {e}"));
                return RcStatus::InvalidUtf8;
            }
        };
        match rainbow_cycles::read_colored_graph(s.as_bytes()) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(RcGraph { inner: g }));
                RcStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                RcStatus::ParseError
            }
        }
    })
}

/// Builds the tight complete instance for `k` (cap on the vertex count).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_generate_equitable(
    k: u32,
    cap: usize,
    out: *mut *mut RcGraph,
) -> RcStatus {
    if out.is_null() {
        set_error("null argument");
        return RcStatus::NullArgument;
    }
    guard(|| match gen::gen_equitable_complete(k, cap) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(RcGraph { inner: g }));
            RcStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            RcStatus::BadParameter
        }
    })
}

/// Random instance whose `n` color classes each have `class_size` edges.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_generate_relaxed(
    n: usize,
    class_size: usize,
    seed: u64,
    out: *mut *mut RcGraph,
) -> RcStatus {
    if out.is_null() {
        set_error("null argument");
        return RcStatus::NullArgument;
    }
    guard(|| match gen::gen_relaxed(n, class_size, seed) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(RcGraph { inner: g }));
            RcStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            RcStatus::BadParameter
        }
    })
}

/// Vertex count, or -1 on a null handle.
///
/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_vertex_count(g: *const RcGraph) -> i64 {
    if g.is_null() {
        return -1;
    }
    (*g).inner.vertex_count() as i64
}

/// Edge count, or -1 on a null handle.
///
/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_edge_count(g: *const RcGraph) -> i64 {
    if g.is_null() {
        return -1;
    }
    (*g).inner.edge_count() as i64
}

/// Serializes the graph back to the text format.
///
/// # Safety
/// `g` must be a live graph handle, `out` a valid pointer; free the result
/// with [`rc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rc_graph_write(g: *const RcGraph, out: *mut *mut c_char) -> RcStatus {
    if g.is_null() || out.is_null() {
        set_error("null argument");
        return RcStatus::NullArgument;
    }
    guard(|| {
        let mut buf = Vec::new();
        if let Err(e) = rainbow_cycles::write_colored_graph(&(*g).inner, &mut buf) {
            set_error(e.to_string());
            return RcStatus::InternalError;
        }
        *out = to_cstring(String::from_utf8_lossy(&buf).into_owned());
        RcStatus::Ok
    })
}

fn params_for(k: u32, relaxed: bool) -> Result<PipelineParams, String> {
    if relaxed {
        PipelineParams::relaxed(k).map_err(|e| e.to_string())
    } else {
        PipelineParams::strict(k).map_err(|e| e.to_string())
    }
}

/// Validation report as JSON.
///
/// # Safety
/// `g` must be a live graph handle, `out` a valid pointer; free the result
/// with [`rc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rc_validate_json(
    g: *const RcGraph,
    k: u32,
    relaxed: bool,
    out: *mut *mut c_char,
) -> RcStatus {
    if g.is_null() || out.is_null() {
        set_error("null argument");
        return RcStatus::NullArgument;
    }
    guard(|| {
        let p = match params_for(k, relaxed) {
            Ok(p) => p,
            Err(e) => {
                set_error(e);
                return RcStatus::BadParameter;
            }
        };
        let report = validate(&(*g).inner, &p);
        *out = to_cstring(serde_json::to_string(&report).unwrap_or_default());
        RcStatus::Ok
    })
}

/// Runs the search pipeline; on success `out` holds the verified witness as
/// JSON. `budget = 0` means unbounded.
///
/// # Safety
/// `g` must be a live graph handle, `out` a valid pointer; free the result
/// with [`rc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rc_find_json(
    g: *const RcGraph,
    k: u32,
    relaxed: bool,
    budget: u64,
    out: *mut *mut c_char,
) -> RcStatus {
    if g.is_null() || out.is_null() {
        set_error("null argument");
        return RcStatus::NullArgument;
    }
    guard(|| {
        let p = match params_for(k, relaxed) {
            Ok(p) => p,
            Err(e) => {
                set_error(e);
                return RcStatus::BadParameter;
            }
        };
        let budget = if budget == 0 { None } else { Some(budget) };
        match find_short_rainbow_cycle(&(*g).inner, &p, budget) {
            Ok(outcome) => {
                *out = to_cstring(serde_json::to_string(&outcome.witness).unwrap_or_default());
                RcStatus::Ok
            }
            Err(PipelineError::NotFound) => {
                set_error("no rainbow cycle within ceil(n/k) (relaxed mode)");
                RcStatus::NotFound
            }
            Err(PipelineError::Budget(e)) => {
                set_error(e.to_string());
                RcStatus::BudgetExceeded
            }
            Err(PipelineError::Hypotheses(e)) => {
                set_error(e);
                RcStatus::HypothesesNotMet
            }
            Err(e) => {
                set_error(e.to_string());
                RcStatus::InternalError
            }
        }
    })
}

/// Exact minimum rainbow-cycle length: writes it to `out_len` (-1 when none
/// exists) and, when a cycle exists and `out_witness` is non-null, the
/// witness JSON. `max_len <= 0` means unbounded; `budget = 0` unbounded.
///
/// # Safety
/// `g` must be a live graph handle and `out_len` valid; `out_witness` may
/// be null. Free the witness with [`rc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rc_oracle_shortest_rainbow(
    g: *const RcGraph,
    max_len: i64,
    budget: u64,
    out_len: *mut i64,
    out_witness: *mut *mut c_char,
) -> RcStatus {
    if g.is_null() || out_len.is_null() {
        set_error("null argument");
        return RcStatus::NullArgument;
    }
    guard(|| {
        let max_len = if max_len <= 0 {
            None
        } else {
            Some(max_len as usize)
        };
        let budget = if budget == 0 { None } else { Some(budget) };
        match shortest_rainbow_cycle_exact(&(*g).inner, max_len, budget) {
            Ok(Some(w)) => {
                *out_len = w.length as i64;
                if !out_witness.is_null() {
                    *out_witness = to_cstring(serde_json::to_string(&w).unwrap_or_default());
                }
                RcStatus::Ok
            }
            Ok(None) => {
                *out_len = -1;
                RcStatus::Ok
            }
            Err(SearchError::BudgetExceeded { expanded }) => {
                set_error(format!("budget exhausted after {expanded} expansions"));
                RcStatus::BudgetExceeded
            }
        }
    })
}

/// All standard inequality checks over a geometric grid, as a JSON array.
///
/// # Safety
/// `out` must be a valid pointer; free the result with [`rc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rc_bounds_check_json(
    k_min: f64,
    k_max: f64,
    samples: usize,
    out: *mut *mut c_char,
) -> RcStatus {
    if out.is_null() {
        set_error("null argument");
        return RcStatus::NullArgument;
    }
    guard(|| {
        let reports = rainbow_cycles::bounds::standard_reports(k_min, k_max, samples);
        let all_ok = reports.iter().all(|r| r.passed && r.marginal_k.is_empty());
        *out = to_cstring(serde_json::to_string(&reports).unwrap_or_default());
        if all_ok {
            RcStatus::Ok
        } else {
            set_error("at least one inequality check failed or was marginal");
            RcStatus::InternalError
        }
    })
}
