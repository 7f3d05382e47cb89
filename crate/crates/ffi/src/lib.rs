//! C ABI over `pgaut`.
//!
//! Graphs and groups are opaque handles owned by the caller and released with
//! the matching `_free` function. Every fallible call returns a
//! `PgautStatus`; on failure a message is kept per thread and can be read
//! with `pgaut_last_error_message`. Strings handed out by the library are
//! NUL-terminated and must be released with `pgaut_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pgaut::aut::{
    brute_force_aut, search_automorphisms, twin_lower_bound_order, Permutation, PermutationGroup,
    SearchOptions,
};
use pgaut::graph::io::Format;
use pgaut::graph::Graph;
use pgaut::powergraph::build_power_graph;
use pgaut::theorem::aut_order_formula;
use pgaut::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgautStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// A size cap or the search node budget was exceeded.
    ResourceCap = 3,
    Panic = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgautMethod {
    /// Individualization-refinement search.
    Ir = 0,
    /// Exhaustive enumeration; at most 10 vertices.
    Brute = 1,
}

/// An undirected simple graph, optionally carrying element orders.
pub struct PgautGraph {
    graph: Graph,
    orders: Option<Vec<u64>>,
}

/// A permutation group with its stabilizer chain.
pub struct PgautGroup {
    group: PermutationGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: PgautStatus, msg: &str) -> PgautStatus {
    set_error(msg);
    status
}

fn from_error(e: &Error) -> PgautStatus {
    let status = if e.is_resource_cap() {
        PgautStatus::ResourceCap
    } else {
        PgautStatus::InvalidArgument
    };
    fail(status, &e.to_string())
}

/// Runs `f`, mapping panics to `Panic` and clearing the error on success.
fn guard(f: impl FnOnce() -> PgautStatus) -> PgautStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == PgautStatus::Ok {
                LAST_ERROR.with(|e| *e.borrow_mut() = None);
            }
            s
        }
        Err(_) => fail(PgautStatus::Panic, "internal panic"),
    }
}

fn write_string(out: *mut *mut c_char, s: String) -> PgautStatus {
    match CString::new(s) {
        Ok(c) => {
            // SAFETY: callers check `out` for null before reaching here.
            unsafe { *out = c.into_raw() };
            PgautStatus::Ok
        }
        Err(_) => fail(PgautStatus::InvalidArgument, "string contains NUL"),
    }
}

/// Builds the power graph of Z_n (vertices 0..n-1).
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn pgaut_power_graph_new(n: u64, out: *mut *mut PgautGraph) -> PgautStatus {
    guard(|| {
        if out.is_null() {
            return fail(PgautStatus::NullPointer, "out is null");
        }
        match build_power_graph(n) {
            Ok(pg) => {
                let orders = pg.orders().to_vec();
                let h = Box::new(PgautGraph {
                    graph: pg.into_graph(),
                    orders: Some(orders),
                });
                *out = Box::into_raw(h);
                PgautStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Builds a graph from `edge_count` pairs stored flat in `edges`
/// (`edges[2i]`, `edges[2i+1]`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (may be null when
/// `edge_count` is 0); `out` must be valid for one handle.
#[no_mangle]
pub unsafe extern "C" fn pgaut_graph_from_edges(
    vertex_count: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut PgautGraph,
) -> PgautStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return fail(PgautStatus::NullPointer, "null argument");
        }
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs = flat.chunks_exact(2).map(|c| (c[0] as usize, c[1] as usize));
        match Graph::from_edges(vertex_count, pairs) {
            Ok(graph) => {
                *out = Box::into_raw(Box::new(PgautGraph {
                    graph,
                    orders: None,
                }));
                PgautStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pgaut_graph_free(g: *mut PgautGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pgaut_graph_vertex_count(g: *const PgautGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.vertex_count())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pgaut_graph_edge_count(g: *const PgautGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// # Safety
/// `g` must be a live handle and `out` valid for one `bool`.
#[no_mangle]
pub unsafe extern "C" fn pgaut_graph_has_edge(
    g: *const PgautGraph,
    u: usize,
    v: usize,
    out: *mut bool,
) -> PgautStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(PgautStatus::NullPointer, "null argument");
        };
        let n = g.graph.vertex_count();
        if u >= n || v >= n {
            return fail(PgautStatus::InvalidArgument, "vertex out of range");
        }
        *out = g.graph.has_edge(u, v);
        PgautStatus::Ok
    })
}

/// Serializes as `edgelist`, `dot`, `dimacs` or `json`.
///
/// # Safety
/// `g` must be a live handle, `format` a NUL-terminated string and `out`
/// valid for one pointer. Release the result with `pgaut_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pgaut_graph_export(
    g: *const PgautGraph,
    format: *const c_char,
    out: *mut *mut c_char,
) -> PgautStatus {
    guard(|| {
        let (Some(g), false, false) = (g.as_ref(), format.is_null(), out.is_null()) else {
            return fail(PgautStatus::NullPointer, "null argument");
        };
        let Ok(name) = CStr::from_ptr(format).to_str() else {
            return fail(PgautStatus::InvalidArgument, "format is not UTF-8");
        };
        let fmt: Format = match name.parse() {
            Ok(f) => f,
            Err(e) => return from_error(&e),
        };
        let bytes = pgaut::graph::io::write_graph(&g.graph, fmt, g.orders.as_deref(), "G");
        write_string(out, String::from_utf8(bytes).expect("writers emit UTF-8"))
    })
}

/// Computes the automorphism group. `node_budget` of 0 selects the default.
///
/// # Safety
/// `g` must be a live handle and `out` valid for one handle.
#[no_mangle]
pub unsafe extern "C" fn pgaut_automorphism_group(
    g: *const PgautGraph,
    method: PgautMethod,
    node_budget: u64,
    out: *mut *mut PgautGroup,
) -> PgautStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(PgautStatus::NullPointer, "null argument");
        };
        let result = match method {
            PgautMethod::Ir => {
                let mut opts = SearchOptions::default();
                if node_budget > 0 {
                    opts.node_budget = node_budget;
                }
                search_automorphisms(&g.graph, opts).map(|r| r.group)
            }
            PgautMethod::Brute => brute_force_aut(&g.graph),
        };
        match result {
            Ok(group) => {
                *out = Box::into_raw(Box::new(PgautGroup { group }));
                PgautStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// # Safety
/// `grp` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pgaut_group_free(grp: *mut PgautGroup) {
    if !grp.is_null() {
        drop(Box::from_raw(grp));
    }
}

/// Exact group order as a decimal string.
///
/// # Safety
/// `grp` must be a live handle and `out` valid for one pointer.
#[no_mangle]
pub unsafe extern "C" fn pgaut_group_order(
    grp: *const PgautGroup,
    out: *mut *mut c_char,
) -> PgautStatus {
    guard(|| {
        let (Some(grp), false) = (grp.as_ref(), out.is_null()) else {
            return fail(PgautStatus::NullPointer, "null argument");
        };
        write_string(out, grp.group.order().to_string())
    })
}

/// # Safety
/// `grp` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pgaut_group_degree(grp: *const PgautGroup) -> usize {
    grp.as_ref().map_or(0, |g| g.group.degree())
}

/// # Safety
/// `grp` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pgaut_group_generator_count(grp: *const PgautGroup) -> usize {
    grp.as_ref().map_or(0, |g| g.group.generators().len())
}

/// Writes generator `index` as its image array; `len` must equal the degree.
///
/// # Safety
/// `grp` must be a live handle and `images` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn pgaut_group_generator(
    grp: *const PgautGroup,
    index: usize,
    images: *mut u32,
    len: usize,
) -> PgautStatus {
    guard(|| {
        let (Some(grp), false) = (grp.as_ref(), images.is_null() && len > 0) else {
            return fail(PgautStatus::NullPointer, "null argument");
        };
        let Some(p) = grp.group.generators().get(index) else {
            return fail(PgautStatus::InvalidArgument, "generator index out of range");
        };
        if len != p.degree() {
            return fail(
                PgautStatus::InvalidArgument,
                "buffer length differs from the degree",
            );
        }
        if len > 0 {
            std::slice::from_raw_parts_mut(images, len).copy_from_slice(p.images());
        }
        PgautStatus::Ok
    })
}

/// Membership test for the permutation given by its image array.
///
/// # Safety
/// `grp` must be a live handle, `images` valid for `len` reads and `out`
/// valid for one `bool`.
#[no_mangle]
pub unsafe extern "C" fn pgaut_group_contains(
    grp: *const PgautGroup,
    images: *const u32,
    len: usize,
    out: *mut bool,
) -> PgautStatus {
    guard(|| {
        let (Some(grp), false, false) = (grp.as_ref(), images.is_null() && len > 0, out.is_null())
        else {
            return fail(PgautStatus::NullPointer, "null argument");
        };
        if len != grp.group.degree() {
            return fail(
                PgautStatus::InvalidArgument,
                "length differs from the degree",
            );
        }
        let v = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(images, len).to_vec()
        };
        match Permutation::from_images(v) {
            Ok(p) => {
                *out = grp.group.contains(&p);
                PgautStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Product of factorials of closed-twin class sizes, as a decimal string.
///
/// # Safety
/// `g` must be a live handle and `out` valid for one pointer.
#[no_mangle]
pub unsafe extern "C" fn pgaut_twin_lower_bound(
    g: *const PgautGraph,
    out: *mut *mut c_char,
) -> PgautStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(PgautStatus::NullPointer, "null argument");
        };
        write_string(out, twin_lower_bound_order(&g.graph).to_string())
    })
}

/// Closed-form automorphism group order of the power graph of Z_n.
///
/// # Safety
/// `out` must be valid for one pointer.
#[no_mangle]
pub unsafe extern "C" fn pgaut_formula_order(n: u64, out: *mut *mut c_char) -> PgautStatus {
    guard(|| {
        if out.is_null() {
            return fail(PgautStatus::NullPointer, "out is null");
        }
        match aut_order_formula(n) {
            Ok(d) => write_string(out, d.order.to_string()),
            Err(e) => from_error(&e),
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pgaut_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn pgaut_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
