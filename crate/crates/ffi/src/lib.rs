//! C interface to `cutbound`.
//!
//! Graphs and reports are opaque handles owned by the caller and released
//! with the matching `*_free` function. Every fallible call returns a
//! [`CbStatus`]; on failure `cb_last_error_message` describes the error
//! for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cutbound::bounds::{BoundReport, Mode};
use cutbound::cli::{run_bound, SuiteOptions};
use cutbound::error::Error;
use cutbound::generate::GeneratorSpec;
use cutbound::graph::WeightedGraph;
use cutbound::oracle;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CbStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed graph, bad parameter or unknown name.
    InvalidInput = 2,
    /// The graph does not satisfy the bound's hypotheses.
    Precondition = 3,
    SizeGuard = 4,
    /// A structural assertion failed inside the library.
    Internal = 5,
    Panic = 6,
}

pub struct CbGraph {
    graph: WeightedGraph,
}

pub struct CbReport {
    report: BoundReport,
    json: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(err: &Error) -> CbStatus {
    match err {
        Error::Disconnected
        | Error::TriangleFound(..)
        | Error::DegreeTooLarge { .. }
        | Error::GirthTooSmall { .. }
        | Error::OddCyclePrecondition { .. }
        | Error::ImproperColoring { .. } => CbStatus::Precondition,
        Error::SizeGuard { .. } => CbStatus::SizeGuard,
        Error::Structural(_) => CbStatus::Internal,
        _ => CbStatus::InvalidInput,
    }
}

fn guarded<F: FnOnce() -> Result<(), CbStatus>>(f: F) -> CbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CbStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("panic inside cutbound".into());
            CbStatus::Panic
        }
    }
}

fn fail(err: Error) -> CbStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, CbStatus> {
    if p.is_null() {
        set_error("null string".into());
        return Err(CbStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string is not UTF-8".into());
        CbStatus::InvalidInput
    })
}

fn null_check<T>(p: *const T) -> Result<(), CbStatus> {
    if p.is_null() {
        set_error("null pointer argument".into());
        return Err(CbStatus::NullPointer);
    }
    Ok(())
}

fn hand_out<T>(value: T, out: *mut *mut T) {
    // SAFETY: callers check `out` for null first
    unsafe { *out = Box::into_raw(Box::new(value)) };
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a graph from parallel arrays of `edge_count` endpoints and weights.
///
/// # Safety
/// `us`, `vs` and `weights` must point to `edge_count` readable elements
/// (they may be NULL when `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_new(
    vertex_count: usize,
    us: *const u32,
    vs: *const u32,
    weights: *const f64,
    edge_count: usize,
    out: *mut *mut CbGraph,
) -> CbStatus {
    guarded(|| {
        null_check(out)?;
        if edge_count > 0 {
            null_check(us)?;
            null_check(vs)?;
            null_check(weights)?;
        }
        let triples: Vec<(usize, usize, f64)> = (0..edge_count)
            .map(|i| (*us.add(i) as usize, *vs.add(i) as usize, *weights.add(i)))
            .collect();
        let graph = WeightedGraph::new(vertex_count, triples).map_err(fail)?;
        hand_out(CbGraph { graph }, out);
        Ok(())
    })
}

/// Parses the line-oriented graph format (`p n m` header, `e u v w` lines).
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_parse(source: *const c_char, out: *mut *mut CbGraph) -> CbStatus {
    guarded(|| {
        null_check(out)?;
        let graph = cutbound::io::load_graph(text(source)?).map_err(fail)?;
        hand_out(CbGraph { graph }, out);
        Ok(())
    })
}

/// Runs a named generator, e.g. `"petersen_c3"` with params `{"10", "1"}`.
///
/// # Safety
/// `kind` and each of the `param_count` entries of `params` must be
/// NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_generate(
    kind: *const c_char,
    params: *const *const c_char,
    param_count: usize,
    seed: u64,
    out: *mut *mut CbGraph,
) -> CbStatus {
    guarded(|| {
        null_check(out)?;
        let kind = text(kind)?;
        if param_count > 0 {
            null_check(params)?;
        }
        let mut list = Vec::with_capacity(param_count);
        for i in 0..param_count {
            list.push(text(*params.add(i))?.to_string());
        }
        let graph = GeneratorSpec::parse(kind, &list, seed).and_then(|s| s.build()).map_err(fail)?;
        hand_out(CbGraph { graph }, out);
        Ok(())
    })
}

/// # Safety
/// `graph` must come from a `cb_graph_*` constructor and not be freed yet.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_free(graph: *mut CbGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle or NULL (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn cb_graph_vertex_count(graph: *const CbGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.vertex_count())
}

/// # Safety
/// `graph` must be a live handle or NULL (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn cb_graph_edge_count(graph: *const CbGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// # Safety
/// `graph` must be a live handle or NULL (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn cb_graph_total_weight(graph: *const CbGraph) -> f64 {
    graph.as_ref().map_or(0.0, |g| g.graph.total_weight())
}

/// Runs one bound by name (`"poljak_turzik"`, `"dfs"`, `"mainprob"`, ...).
/// `seed` and `trials` only matter for Monte Carlo bounds; `trials = 0`
/// picks the default.
///
/// # Safety
/// `graph` must be a live handle, `name` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn cb_bound(
    graph: *const CbGraph,
    name: *const c_char,
    seed: u64,
    trials: usize,
    out: *mut *mut CbReport,
) -> CbStatus {
    guarded(|| {
        null_check(graph)?;
        null_check(out)?;
        let name = text(name)?;
        let mut options = SuiteOptions { seed, ..SuiteOptions::default() };
        if trials > 0 {
            options.trials = trials;
        }
        let g = &(*graph).graph;
        let report = run_bound(g, name, &options).map_err(fail)?;
        let json = serde_json::json!({
            "name": report.name,
            "bound_value": report.bound_value,
            "cut_weight": report.cut.weight(),
            "mode": report.mode,
            "meets_bound": report.cut_meets_bound(g),
            "cut": report.cut.bitstring(),
            "details": report.details,
        });
        let json = CString::new(json.to_string()).map_err(|_| CbStatus::Internal)?;
        hand_out(CbReport { report, json }, out);
        Ok(())
    })
}

/// # Safety
/// `report` must be a live handle or NULL (which yields NaN).
#[no_mangle]
pub unsafe extern "C" fn cb_report_bound_value(report: *const CbReport) -> f64 {
    report.as_ref().map_or(f64::NAN, |r| r.report.bound_value)
}

/// # Safety
/// `report` must be a live handle or NULL (which yields NaN).
#[no_mangle]
pub unsafe extern "C" fn cb_report_cut_weight(report: *const CbReport) -> f64 {
    report.as_ref().map_or(f64::NAN, |r| r.report.cut.weight())
}

/// 1 for a deterministic guarantee, 0 for a Monte Carlo expectation or NULL.
///
/// # Safety
/// `report` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn cb_report_is_deterministic(report: *const CbReport) -> i32 {
    report.as_ref().map_or(0, |r| (r.report.mode == Mode::Deterministic) as i32)
}

/// Copies the cut sides (0 or 1) into `sides`, which holds `len` bytes.
///
/// # Safety
/// `report` must be a live handle and `sides` writable for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn cb_report_cut_sides(report: *const CbReport, sides: *mut u8, len: usize) -> CbStatus {
    guarded(|| {
        null_check(report)?;
        null_check(sides)?;
        let side = (*report).report.cut.side();
        if len < side.len() {
            set_error(format!("buffer holds {len} bytes, need {}", side.len()));
            return Err(CbStatus::InvalidInput);
        }
        for (i, &s) in side.iter().enumerate() {
            *sides.add(i) = s as u8;
        }
        Ok(())
    })
}

/// The report as one JSON object. The string lives as long as the report.
///
/// # Safety
/// `report` must be a live handle or NULL (which yields NULL).
#[no_mangle]
pub unsafe extern "C" fn cb_report_json(report: *const CbReport) -> *const c_char {
    report.as_ref().map_or(ptr::null(), |r| r.json.as_ptr())
}

/// # Safety
/// `report` must come from `cb_bound` and not be freed yet.
#[no_mangle]
pub unsafe extern "C" fn cb_report_free(report: *mut CbReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Exact maximum cut. `max_vertices = 0` keeps the default size guard.
/// `sides` may be NULL; otherwise it receives one byte per vertex.
///
/// # Safety
/// `graph` must be a live handle, `value` writable, and `sides` NULL or
/// writable for as many bytes as the graph has vertices.
#[no_mangle]
pub unsafe extern "C" fn cb_exact_max_cut(
    graph: *const CbGraph,
    max_vertices: usize,
    value: *mut f64,
    sides: *mut u8,
) -> CbStatus {
    guarded(|| {
        null_check(graph)?;
        null_check(value)?;
        let limit = if max_vertices == 0 { oracle::MAX_CUT_LIMIT } else { max_vertices };
        let result = oracle::exact_max_cut_with_limit(&(*graph).graph, limit).map_err(fail)?;
        *value = result.value;
        if !sides.is_null() {
            if let oracle::Witness::Cut(cut) = &result.witness {
                for (i, &s) in cut.side().iter().enumerate() {
                    *sides.add(i) = s as u8;
                }
            }
        }
        Ok(())
    })
}
