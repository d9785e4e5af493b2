//! C ABI over the `abfactor` crate.
//!
//! Graphs and factors are opaque heap handles created by `abf_*` functions
//! and released with the matching `*_free`. Every fallible call returns an
//! [`AbfStatus`]; on failure [`abf_last_error_message`] describes the cause.
//! Vertex ids and counts are `size_t`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use abfactor::connectivity::{edge_connectivity, vertex_connectivity};
use abfactor::constructions::{complete_bipartite, example1, example2, h_na};
use abfactor::criteria::criterion_decide;
use abfactor::factor::{find_ab_factor, find_even_factor, verify_factor, AbSearch, Factor, FactorSearch};
use abfactor::graph::{min_degree, sigma2, Extended, Graph};
use abfactor::io::parse_graph;
use abfactor::spectral::{lambda1, rho};
use abfactor::Error;

/// Opaque graph handle.
pub struct AbfGraph {
    inner: Graph,
}

/// Opaque factor handle.
pub struct AbfFactor {
    inner: Factor,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbfStatus {
    Ok = 0,
    /// The decision is negative: no factor exists.
    Absent = 1,
    InvalidArgument = 2,
    /// Instance size or search budget exceeded.
    Scale = 3,
    NullPointer = 4,
    Internal = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).expect("NUL bytes removed"));
}

fn fail(e: Error) -> AbfStatus {
    set_error(e.to_string());
    match e {
        _ if e.is_scale() => AbfStatus::Scale,
        Error::NonConvergence { .. } | Error::NoBracket { .. } => AbfStatus::Internal,
        _ => AbfStatus::InvalidArgument,
    }
}

fn guard(body: impl FnOnce() -> AbfStatus) -> AbfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            AbfStatus::Internal
        }
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            set_error("null pointer argument");
            return AbfStatus::NullPointer;
        }
    };
}

unsafe fn put_graph(result: abfactor::Result<Graph>, out: *mut *mut AbfGraph) -> AbfStatus {
    match result {
        Ok(g) => {
            *out = Box::into_raw(Box::new(AbfGraph { inner: g }));
            AbfStatus::Ok
        }
        Err(e) => {
            *out = ptr::null_mut();
            fail(e)
        }
    }
}

unsafe fn put_search(result: abfactor::Result<FactorSearch>, out: *mut *mut AbfFactor) -> AbfStatus {
    *out = ptr::null_mut();
    match result {
        Ok(FactorSearch::Found(f)) => {
            *out = Box::into_raw(Box::new(AbfFactor { inner: f }));
            AbfStatus::Ok
        }
        Ok(FactorSearch::Absent(reason)) => {
            set_error(format!("no factor: {reason:?}"));
            AbfStatus::Absent
        }
        Err(e) => fail(e),
    }
}

/// Message for the last failing call on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn abf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn abf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or may be null
/// when `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut AbfGraph,
) -> AbfStatus {
    non_null!(out);
    if edge_count > 0 {
        non_null!(edges);
    }
    guard(|| {
        let flat = if edge_count == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        put_graph(Graph::from_edges(n, &pairs), out)
    })
}

/// Parses an edge-list (`n m` header, then `u v` lines) or DOT document.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_graph_parse(text: *const c_char, out: *mut *mut AbfGraph) -> AbfStatus {
    non_null!(text, out);
    guard(|| match CStr::from_ptr(text).to_str() {
        Ok(s) => put_graph(parse_graph(s), out),
        Err(_) => {
            *out = ptr::null_mut();
            set_error("graph text is not UTF-8");
            AbfStatus::InvalidArgument
        }
    })
}

/// # Safety
/// `graph` must come from this library and not be freed twice. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn abf_graph_free(graph: *mut AbfGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn abf_graph_vertex_count(graph: *const AbfGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.vertex_count())
}

/// # Safety
/// `graph` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn abf_graph_edge_count(graph: *const AbfGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// Writes the `index`-th edge in sorted order, `u < v`.
///
/// # Safety
/// `graph` must be a live handle; `u` and `v` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_graph_edge(graph: *const AbfGraph, index: usize, u: *mut usize, v: *mut usize) -> AbfStatus {
    non_null!(graph, u, v);
    match (*graph).inner.edges().nth(index) {
        Some((a, b)) => {
            *u = a;
            *v = b;
            AbfStatus::Ok
        }
        None => {
            set_error(format!("edge index {index} out of range"));
            AbfStatus::InvalidArgument
        }
    }
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_example1(a: usize, b: usize, t: usize, out: *mut *mut AbfGraph) -> AbfStatus {
    non_null!(out);
    guard(|| put_graph(example1(a, b, t), out))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_example2(a: usize, b: usize, t: usize, out: *mut *mut AbfGraph) -> AbfStatus {
    non_null!(out);
    guard(|| put_graph(example2(a, b, t), out))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_h_na(n: usize, a: usize, out: *mut *mut AbfGraph) -> AbfStatus {
    non_null!(out);
    guard(|| put_graph(h_na(n, a), out))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_complete_bipartite(x: usize, y: usize, out: *mut *mut AbfGraph) -> AbfStatus {
    non_null!(out);
    guard(|| put_graph(complete_bipartite(x, y), out))
}

unsafe fn write_count(graph: *const AbfGraph, out: *mut usize, f: fn(&Graph) -> abfactor::Result<usize>) -> AbfStatus {
    non_null!(graph, out);
    guard(|| match f(&(*graph).inner) {
        Ok(v) => {
            *out = v;
            AbfStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// κ′(G).
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_edge_connectivity(graph: *const AbfGraph, out: *mut usize) -> AbfStatus {
    write_count(graph, out, edge_connectivity)
}

/// κ(G); n − 1 for complete graphs.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_vertex_connectivity(graph: *const AbfGraph, out: *mut usize) -> AbfStatus {
    write_count(graph, out, vertex_connectivity)
}

/// δ(G).
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_min_degree(graph: *const AbfGraph, out: *mut usize) -> AbfStatus {
    write_count(graph, out, min_degree)
}

/// σ₂(G). `*infinite` is set when every pair is adjacent; `*out` is then 0.
///
/// # Safety
/// `graph` must be a live handle; `out` and `infinite` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_sigma2(graph: *const AbfGraph, out: *mut usize, infinite: *mut bool) -> AbfStatus {
    non_null!(graph, out, infinite);
    match sigma2(&(*graph).inner) {
        Extended::Finite(v) => {
            *out = v;
            *infinite = false;
        }
        Extended::Infinity => {
            *out = 0;
            *infinite = true;
        }
    }
    AbfStatus::Ok
}

/// Exact even [a,b]-factor search. Returns `Ok` with a new factor in `*out`,
/// or `Absent` with `*out` null.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_find_even_factor(
    graph: *const AbfGraph,
    a: usize,
    b: usize,
    out: *mut *mut AbfFactor,
) -> AbfStatus {
    non_null!(graph, out);
    guard(|| put_search(find_even_factor(&(*graph).inner, a, b), out))
}

/// Parity-free [a,b]-factor search with a node budget (0 selects the
/// default). Budget exhaustion returns `Scale`.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_find_ab_factor(
    graph: *const AbfGraph,
    a: usize,
    b: usize,
    budget: u64,
    out: *mut *mut AbfFactor,
) -> AbfStatus {
    non_null!(graph, out);
    let mut options = AbSearch::default();
    if budget > 0 {
        options.budget = budget;
    }
    guard(|| put_search(find_ab_factor(&(*graph).inner, a, b, options), out))
}

/// # Safety
/// `factor` must come from this library and not be freed twice. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn abf_factor_free(factor: *mut AbfFactor) {
    if !factor.is_null() {
        drop(Box::from_raw(factor));
    }
}

/// # Safety
/// `factor` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn abf_factor_edge_count(factor: *const AbfFactor) -> usize {
    factor.as_ref().map_or(0, |f| f.inner.edges().len())
}

/// # Safety
/// `factor` must be a live handle; `u` and `v` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_factor_edge(
    factor: *const AbfFactor,
    index: usize,
    u: *mut usize,
    v: *mut usize,
) -> AbfStatus {
    non_null!(factor, u, v);
    match (*factor).inner.edges().get(index) {
        Some(&(a, b)) => {
            *u = a;
            *v = b;
            AbfStatus::Ok
        }
        None => {
            set_error(format!("edge index {index} out of range"));
            AbfStatus::InvalidArgument
        }
    }
}

/// Checks that every factor degree lies in [a, b] (and is even when `even`).
///
/// # Safety
/// Handles must be live; `valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_verify_factor(
    graph: *const AbfGraph,
    factor: *const AbfFactor,
    a: usize,
    b: usize,
    even: bool,
    valid: *mut bool,
) -> AbfStatus {
    non_null!(graph, factor, valid);
    guard(|| match verify_factor(&(*graph).inner, &(*factor).inner, a, b, even) {
        Ok(v) => {
            *valid = v;
            AbfStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Exhaustive deficiency criterion for graphs with at most `max_n` ≤ 18
/// vertices. `*holds` is false when some pair (S, T) has positive
/// deficiency; `*max_value` receives the maximum deficiency.
///
/// # Safety
/// `graph` must be a live handle; `holds` and `max_value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_criterion_decide(
    graph: *const AbfGraph,
    a: usize,
    b: usize,
    max_n: usize,
    holds: *mut bool,
    max_value: *mut i64,
) -> AbfStatus {
    non_null!(graph, holds, max_value);
    guard(|| match criterion_decide(&(*graph).inner, a, b, max_n) {
        Ok(outcome) => {
            *holds = outcome.holds;
            *max_value = outcome.max_value;
            AbfStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Largest adjacency eigenvalue with residual at most `tolerance`.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_lambda1(graph: *const AbfGraph, tolerance: f64, out: *mut f64) -> AbfStatus {
    non_null!(graph, out);
    guard(|| match lambda1(&(*graph).inner, tolerance) {
        Ok(r) => {
            *out = r.lambda1;
            AbfStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Largest root ρ(n,a) of the H_{n,a} characteristic cubic.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abf_rho(n: usize, a: usize, tolerance: f64, out: *mut f64) -> AbfStatus {
    non_null!(out);
    guard(|| match rho(n, a, tolerance) {
        Ok(r) => {
            *out = r;
            AbfStatus::Ok
        }
        Err(e) => fail(e),
    })
}
