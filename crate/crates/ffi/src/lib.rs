//! C ABI over the tropical-Jacobian library.
//!
//! Conventions, uniform across the API:
//!
//! * Every fallible call returns a [`TropJacStatus`]; results travel
//!   through out-pointers, which are written only on `Ok` (except where a
//!   function documents otherwise).
//! * Strings crossing the boundary are NUL-terminated UTF-8. Strings
//!   returned by this library are heap-allocated and must be released with
//!   [`tropjac_string_free`].
//! * Graphs are opaque handles created by [`tropjac_graph_from_json`] and
//!   released with [`tropjac_graph_free`].
//! * After any non-`Ok` status, [`tropjac_last_error_message`] returns a
//!   human-readable description, valid on the calling thread until the
//!   next failing call.
//!
//! The JSON report strings use exactly the same versioned envelope as the
//! `trop-jac` command-line tool, so downstream consumers can share one
//! parser for both surfaces.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use trop_jac::graph::CircuitBasis;
use trop_jac::graph::MetricGraph;
use trop_jac::io::{
    graph_to_json, parse_rational_vector, period_to_doc, report_json, theta_eval_to_doc,
    verification_to_doc,
};
use trop_jac::jacobian::{period_matrix, PeriodMatrix};
use trop_jac::tautological::verify_poincare;
use trop_jac::theta::{theta_value, AppellHumbertDatum};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TropJacStatus {
    /// Success; out-pointers have been written.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input failed to parse or validate (malformed JSON, bad rational,
    /// disconnected graph, ...).
    ParseError = 3,
    /// Arguments were structurally valid but out of range for the handle
    /// (wrong dimension, unsupported genus, ...).
    InvalidArgument = 4,
    /// The computation ran, the report was written, but a verification
    /// inside it failed.
    VerificationFailed = 5,
}

/// Opaque handle: a validated, leaf-pruned metric graph together with the
/// circuit basis and period matrix chosen at construction time.
pub struct TropJacGraph {
    graph: MetricGraph,
    #[allow(dead_code)]
    basis: CircuitBasis,
    periods: PeriodMatrix,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    // NUL bytes cannot occur in our own messages, but never panic on the
    // boundary: sanitize instead.
    let clean = CString::new(msg.replace('\0', "?")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = clean);
}

fn fail(status: TropJacStatus, msg: impl Into<String>) -> TropJacStatus {
    set_error(msg.into());
    status
}

/// Reads a caller-supplied string, recording the failure kind on error.
unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, TropJacStatus> {
    if ptr.is_null() {
        return Err(fail(TropJacStatus::NullArgument, format!("{what} is NULL")));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(TropJacStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

/// Transfers an owned string to the caller through `out`.
unsafe fn export_string(s: String, out: *mut *mut c_char) -> TropJacStatus {
    if out.is_null() {
        return fail(TropJacStatus::NullArgument, "output pointer is NULL");
    }
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TropJacStatus::Ok
        }
        Err(_) => fail(TropJacStatus::InvalidArgument, "report contains a NUL byte"),
    }
}

unsafe fn borrow_graph<'a>(
    graph: *const TropJacGraph,
) -> Result<&'a TropJacGraph, TropJacStatus> {
    graph
        .as_ref()
        .ok_or_else(|| fail(TropJacStatus::NullArgument, "graph handle is NULL"))
}

/// Parses a graph document, validates it (pruning leaves), and builds the
/// circuit basis and period matrix for the given spanning-tree seed
/// (0 selects the deterministic minimal tree).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer; the
/// returned handle must be released with [`tropjac_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn tropjac_graph_from_json(
    json: *const c_char,
    seed: u64,
    out: *mut *mut TropJacGraph,
) -> TropJacStatus {
    let text = match read_str(json, "graph JSON") {
        Ok(t) => t,
        Err(status) => return status,
    };
    if out.is_null() {
        return fail(TropJacStatus::NullArgument, "output pointer is NULL");
    }
    let parsed = match trop_jac::io::graph_from_json(text) {
        Ok(g) => g,
        Err(e) => return fail(TropJacStatus::ParseError, e.to_string()),
    };
    let graph = match parsed.validate_and_prune() {
        Ok(g) => g,
        Err(e) => return fail(TropJacStatus::ParseError, e.to_string()),
    };
    let basis = graph.circuit_basis(seed);
    let periods = period_matrix(&graph, &basis);
    *out = Box::into_raw(Box::new(TropJacGraph { graph, basis, periods }));
    TropJacStatus::Ok
}

/// Releases a graph handle. NULL is a no-op.
///
/// # Safety
/// `graph` must be NULL or a handle obtained from
/// [`tropjac_graph_from_json`] that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn tropjac_graph_free(graph: *mut TropJacGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Writes the genus (first Betti number) of the graph.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tropjac_graph_genus(
    graph: *const TropJacGraph,
    out: *mut usize,
) -> TropJacStatus {
    let handle = match borrow_graph(graph) {
        Ok(h) => h,
        Err(status) => return status,
    };
    if out.is_null() {
        return fail(TropJacStatus::NullArgument, "output pointer is NULL");
    }
    *out = handle.graph.genus();
    TropJacStatus::Ok
}

/// Serializes the validated (leaf-pruned) graph back to its JSON document
/// form.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer; the string is
/// released with [`tropjac_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tropjac_graph_json(
    graph: *const TropJacGraph,
    out: *mut *mut c_char,
) -> TropJacStatus {
    let handle = match borrow_graph(graph) {
        Ok(h) => h,
        Err(status) => return status,
    };
    export_string(graph_to_json(&handle.graph), out)
}

/// Writes the period-matrix report (the same versioned JSON envelope the
/// CLI `period` command prints).
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer; the string is
/// released with [`tropjac_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tropjac_period_json(
    graph: *const TropJacGraph,
    out: *mut *mut c_char,
) -> TropJacStatus {
    let handle = match borrow_graph(graph) {
        Ok(h) => h,
        Err(status) => return status,
    };
    export_string(report_json("period", &period_to_doc(&handle.periods)), out)
}

/// Runs the full cycle-class verification at the graph's genus and writes
/// the report. Returns [`TropJacStatus::VerificationFailed`] — with the
/// report still written — if any check inside it fails.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer; the string is
/// released with [`tropjac_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tropjac_verify_poincare_json(
    graph: *const TropJacGraph,
    out: *mut *mut c_char,
) -> TropJacStatus {
    let handle = match borrow_graph(graph) {
        Ok(h) => h,
        Err(status) => return status,
    };
    let report = verify_poincare(handle.graph.genus());
    let doc = verification_to_doc(&report);
    let status = export_string(report_json("verify poincare", &doc), out);
    if status == TropJacStatus::Ok && !report.all_passed {
        return fail(
            TropJacStatus::VerificationFailed,
            format!("verification failed at genus {}", report.genus),
        );
    }
    status
}

/// Evaluates the tropical Riemann theta function of the principal
/// polarization at the lift `x`, given as comma-separated rationals
/// (for example `"1,0"` or `"1/2,-2/5"`), and writes the report.
///
/// # Safety
/// `graph` must be a live handle, `x` a NUL-terminated string, and `out` a
/// valid pointer; the string is released with [`tropjac_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tropjac_theta_eval_json(
    graph: *const TropJacGraph,
    x: *const c_char,
    out: *mut *mut c_char,
) -> TropJacStatus {
    let handle = match borrow_graph(graph) {
        Ok(h) => h,
        Err(status) => return status,
    };
    let x_text = match read_str(x, "theta argument") {
        Ok(t) => t,
        Err(status) => return status,
    };
    let xv = match parse_rational_vector(x_text) {
        Ok(v) => v,
        Err(e) => return fail(TropJacStatus::ParseError, e.to_string()),
    };
    let datum = AppellHumbertDatum::principal(handle.periods.clone());
    let value = match theta_value(&datum, &xv) {
        Ok(v) => v,
        Err(e) => return fail(TropJacStatus::InvalidArgument, e.to_string()),
    };
    let doc = theta_eval_to_doc(&datum, &xv, &value);
    export_string(report_json("theta eval", &doc), out)
}

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a string obtained from this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn tropjac_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message describing the most recent failure on the calling thread, or an
/// empty string if none occurred. The pointer stays valid until the next
/// failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn tropjac_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    const THETA_GRAPH: &str = r#"{
        "vertices": ["q", "w"],
        "edges": [
            {"id": "e1", "src": "q", "dst": "w", "length": "1"},
            {"id": "e2", "src": "q", "dst": "w", "length": "1"},
            {"id": "e3", "src": "q", "dst": "w", "length": "1"}
        ],
        "basepoint": "q"
    }"#;

    unsafe fn make_graph(json: &str) -> *mut TropJacGraph {
        let c = CString::new(json).unwrap();
        let mut handle: *mut TropJacGraph = ptr::null_mut();
        let status = tropjac_graph_from_json(c.as_ptr(), 0, &mut handle);
        assert_eq!(status, TropJacStatus::Ok);
        assert!(!handle.is_null());
        handle
    }

    unsafe fn take_string(s: *mut c_char) -> String {
        assert!(!s.is_null());
        let text = CStr::from_ptr(s).to_str().unwrap().to_string();
        tropjac_string_free(s);
        text
    }

    unsafe fn last_error() -> String {
        CStr::from_ptr(tropjac_last_error_message()).to_str().unwrap().to_string()
    }

    #[test]
    fn graph_handles_round_trip() {
        unsafe {
            let handle = make_graph(THETA_GRAPH);

            let mut genus = 0usize;
            assert_eq!(tropjac_graph_genus(handle, &mut genus), TropJacStatus::Ok);
            assert_eq!(genus, 2);

            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(tropjac_graph_json(handle, &mut json), TropJacStatus::Ok);
            let text = take_string(json);
            assert!(text.contains("\"basepoint\": \"q\""), "got: {text}");

            tropjac_graph_free(handle);
        }
    }

    #[test]
    fn period_report_matches_the_library_renderer() {
        unsafe {
            let handle = make_graph(THETA_GRAPH);
            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(tropjac_period_json(handle, &mut out), TropJacStatus::Ok);
            let text = take_string(out);
            assert!(text.contains("\"command\": \"period\""), "got: {text}");
            assert!(text.contains("\"schema_version\": 1"), "got: {text}");
            // The unit theta graph's Gram matrix rows are (2,1) and (1,2).
            let compact: String = text.split_whitespace().collect();
            assert!(compact.contains("[\"2\",\"1\"]"), "got: {text}");
            assert!(compact.contains("[\"1\",\"2\"]"), "got: {text}");
            tropjac_graph_free(handle);
        }
    }

    #[test]
    fn verification_reports_success() {
        unsafe {
            let handle = make_graph(THETA_GRAPH);
            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(tropjac_verify_poincare_json(handle, &mut out), TropJacStatus::Ok);
            let text = take_string(out);
            assert!(text.contains("\"all_passed\": true"), "got: {text}");
            tropjac_graph_free(handle);
        }
    }

    #[test]
    fn theta_evaluation_reports_minimizers() {
        unsafe {
            let handle = make_graph(THETA_GRAPH);
            let x = CString::new("1,0").unwrap();
            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(tropjac_theta_eval_json(handle, x.as_ptr(), &mut out), TropJacStatus::Ok);
            let text = take_string(out);
            assert!(text.contains("\"value\": \"0\""), "got: {text}");
            assert!(text.contains("\"on_divisor\": true"), "got: {text}");
            tropjac_graph_free(handle);
        }
    }

    #[test]
    fn error_paths_set_statuses_and_messages() {
        unsafe {
            let mut handle: *mut TropJacGraph = ptr::null_mut();

            // NULL inputs.
            assert_eq!(
                tropjac_graph_from_json(ptr::null(), 0, &mut handle),
                TropJacStatus::NullArgument
            );
            assert!(last_error().contains("NULL"));

            // Invalid UTF-8.
            let bad = [0xFFu8, 0x00];
            assert_eq!(
                tropjac_graph_from_json(bad.as_ptr().cast(), 0, &mut handle),
                TropJacStatus::InvalidUtf8
            );

            // Malformed JSON carries the parser's position in the message.
            let broken = CString::new("{\"vertices\": [,]}").unwrap();
            assert_eq!(
                tropjac_graph_from_json(broken.as_ptr(), 0, &mut handle),
                TropJacStatus::ParseError
            );
            assert!(last_error().contains("line 1"), "got: {}", last_error());

            // A valid document that fails validation (an isolated tree has
            // genus 0 and no basepoint cycle structure to speak of, but a
            // disconnected graph is the clearest rejection).
            let disconnected = CString::new(
                r#"{
                    "vertices": ["a", "b"],
                    "edges": [
                        {"id": "x", "src": "a", "dst": "a", "length": "1"},
                        {"id": "y", "src": "b", "dst": "b", "length": "1"}
                    ]
                }"#,
            )
            .unwrap();
            assert_eq!(
                tropjac_graph_from_json(disconnected.as_ptr(), 0, &mut handle),
                TropJacStatus::ParseError
            );

            // Dimension mismatch on a live handle.
            let graph = make_graph(THETA_GRAPH);
            let x = CString::new("1,0,0").unwrap();
            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(
                tropjac_theta_eval_json(graph, x.as_ptr(), &mut out),
                TropJacStatus::InvalidArgument
            );
            assert!(out.is_null());

            // Frees tolerate NULL.
            tropjac_graph_free(ptr::null_mut());
            tropjac_string_free(ptr::null_mut());
            tropjac_graph_free(graph);
        }
    }
}
