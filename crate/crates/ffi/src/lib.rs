//! C ABI for tropex.
//!
//! Graphs and cycle sets cross the boundary as opaque handles that the
//! caller releases with the matching `_free` function. Every fallible call
//! returns a [`TropexStatus`]; on failure a description is available from
//! [`tropex_last_error_message`] on the same thread. Strings returned by the
//! library are released with [`tropex_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use tropex::error::SearchError;
use tropex::format::{parse_dimacs, parse_graph, parse_solution, write_graph, write_solution, GadgetMap};
use tropex::{ColoredDigraph, CycleSet, Objective, SearchBudget};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TropexStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidGraph = 4,
    InvalidSolution = 5,
    BudgetExceeded = 6,
    TooLarge = 7,
    InvalidArgument = 8,
    Panic = 9,
}

pub const TROPEX_OBJECTIVE_MAX_VERTICES: u32 = 0;
pub const TROPEX_OBJECTIVE_MAX_COLORS: u32 = 1;
pub const TROPEX_OBJECTIVE_MAX_COLORS_AMONG_MAX_VERTICES: u32 = 2;
pub const TROPEX_OBJECTIVE_MAX_VERTICES_AMONG_MAX_COLORS: u32 = 3;

pub const TROPEX_VARIANT_PLAIN: u32 = 0;
pub const TROPEX_VARIANT_BALANCED: u32 = 1;
pub const TROPEX_VARIANT_TWO_PER_COLOR: u32 = 2;

/// Opaque graph handle.
pub struct TropexGraph {
    inner: ColoredDigraph,
}

/// Opaque cycle set handle. Edge ids refer to the graph it was solved on or
/// parsed against.
pub struct TropexCycleSet {
    inner: CycleSet,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior NULs were replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(TropexStatus, String);

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        let status = match e {
            SearchError::BudgetExceeded { .. } => TropexStatus::BudgetExceeded,
            SearchError::TooLarge { .. } => TropexStatus::TooLarge,
        };
        Failure(status, e.to_string())
    }
}

fn fail<E: std::fmt::Display>(status: TropexStatus) -> impl FnOnce(E) -> Failure {
    move |e| Failure(status, e.to_string())
}

/// Runs `body`, turning errors and panics into a status plus the thread's
/// last error message.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> TropexStatus {
    match panic::catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => TropexStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            TropexStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(TropexStatus::NullPointer, format!("{what} is null")))
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(TropexStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(TropexStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(TropexStatus::NullPointer, format!("{what} is null")));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("formatted output has no NUL").into_raw()
}

fn objective(code: u32) -> Result<Objective, Failure> {
    match code {
        TROPEX_OBJECTIVE_MAX_VERTICES => Ok(Objective::MaxVertices),
        TROPEX_OBJECTIVE_MAX_COLORS => Ok(Objective::MaxColors),
        TROPEX_OBJECTIVE_MAX_COLORS_AMONG_MAX_VERTICES => Ok(Objective::MaxColorsAmongMaxVertices),
        TROPEX_OBJECTIVE_MAX_VERTICES_AMONG_MAX_COLORS => Ok(Objective::MaxVerticesAmongMaxColors),
        other => Err(Failure(
            TropexStatus::InvalidArgument,
            format!("unknown objective {other}"),
        )),
    }
}

/// Message describing the last failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tropex_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
///
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn tropex_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the `V name color` / `E from to` text format.
///
/// # Safety
///
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn tropex_graph_parse(text: *const c_char, out: *mut *mut TropexGraph) -> TropexStatus {
    guard(|| {
        let g = parse_graph(c_str(text, "text")?).map_err(fail(TropexStatus::ParseError))?;
        put(out, Box::into_raw(Box::new(TropexGraph { inner: g })), "out")
    })
}

/// Builds a graph from a color index per vertex and parallel `from`/`to`
/// edge arrays. Colors must be numbered densely from 0.
///
/// # Safety
///
/// `colors` must hold `vertex_count` entries, `from` and `to` must hold
/// `edge_count` entries each (any of them may be null when its count is 0).
#[no_mangle]
pub unsafe extern "C" fn tropex_graph_from_arrays(
    colors: *const usize,
    vertex_count: usize,
    from: *const usize,
    to: *const usize,
    edge_count: usize,
    out: *mut *mut TropexGraph,
) -> TropexStatus {
    guard(|| {
        let slice = |p: *const usize, n: usize, what: &str| -> Result<&[usize], Failure> {
            match (p.is_null(), n) {
                (_, 0) => Ok(&[]),
                (true, _) => Err(Failure(TropexStatus::NullPointer, format!("{what} is null"))),
                (false, _) => Ok(std::slice::from_raw_parts(p, n)),
            }
        };
        let colors = slice(colors, vertex_count, "colors")?;
        let edges: Vec<(usize, usize)> = slice(from, edge_count, "from")?
            .iter()
            .copied()
            .zip(slice(to, edge_count, "to")?.iter().copied())
            .collect();
        let g = ColoredDigraph::from_parts(colors, &edges).map_err(fail(TropexStatus::InvalidGraph))?;
        put(out, Box::into_raw(Box::new(TropexGraph { inner: g })), "out")
    })
}

/// # Safety
///
/// `g` must come from this library and not have been freed already. Null
/// is ignored.
#[no_mangle]
pub unsafe extern "C" fn tropex_graph_free(g: *mut TropexGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
///
/// `g` must be a live graph handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn tropex_graph_vertex_count(g: *const TropexGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.vertex_count())
}

/// # Safety
///
/// `g` must be a live graph handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn tropex_graph_edge_count(g: *const TropexGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// # Safety
///
/// `g` must be a live graph handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn tropex_graph_color_count(g: *const TropexGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.color_count())
}

/// Serializes a graph; release the result with [`tropex_string_free`].
///
/// # Safety
///
/// `g` must be a live graph handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn tropex_graph_to_text(g: *const TropexGraph, out: *mut *mut c_char) -> TropexStatus {
    guard(|| {
        let g = borrow(g, "graph")?;
        put(out, c_string(write_graph(&g.inner)), "out")
    })
}

fn cycle_set_handle(s: CycleSet) -> *mut TropexCycleSet {
    Box::into_raw(Box::new(TropexCycleSet { inner: s }))
}

/// Solves `objective` (one of the `TROPEX_OBJECTIVE_*` constants).
/// `TROPEX_OBJECTIVE_MAX_VERTICES` is polynomial and ignores the budget.
/// A `node_limit` or `time_limit_ms` of 0 means no limit on that axis.
///
/// # Safety
///
/// `g` must be a live graph handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn tropex_solve(
    g: *const TropexGraph,
    objective_code: u32,
    node_limit: u64,
    time_limit_ms: u64,
    out: *mut *mut TropexCycleSet,
) -> TropexStatus {
    guard(|| {
        let g = &borrow(g, "graph")?.inner;
        let obj = objective(objective_code)?;
        let s = if obj == Objective::MaxVertices {
            tropex::solve_max_size(g)
        } else {
            let unlimited = SearchBudget::unlimited();
            let budget = SearchBudget::new(
                if node_limit == 0 {
                    unlimited.node_limit
                } else {
                    node_limit
                },
                if time_limit_ms == 0 {
                    unlimited.time_limit
                } else {
                    Duration::from_millis(time_limit_ms)
                },
            );
            tropex::solve(g, obj, budget)?.cycles
        };
        put(out, cycle_set_handle(s), "out")
    })
}

/// Color-blind approximation; `out_bound` receives the largest color class
/// size `j`, so the result has at least `1/j` of the optimal color count.
///
/// # Safety
///
/// `g` must be a live graph handle; `out` and `out_bound` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tropex_approx(
    g: *const TropexGraph,
    out: *mut *mut TropexCycleSet,
    out_bound: *mut usize,
) -> TropexStatus {
    guard(|| {
        let g = &borrow(g, "graph")?.inner;
        let res = tropex::approx_jpc(g).map_err(fail(TropexStatus::InvalidArgument))?;
        put(out_bound, res.bound.0, "out_bound")?;
        put(out, cycle_set_handle(res.cycles), "out")
    })
}

/// # Safety
///
/// `s` must come from this library and not have been freed already. Null
/// is ignored.
#[no_mangle]
pub unsafe extern "C" fn tropex_cycle_set_free(s: *mut TropexCycleSet) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of cycles in the set (0 for null).
///
/// # Safety
///
/// `s` must be a live cycle set handle or null.
#[no_mangle]
pub unsafe extern "C" fn tropex_cycle_set_len(s: *const TropexCycleSet) -> usize {
    s.as_ref().map_or(0, |s| s.inner.len())
}

/// Copies the vertex indices of cycle `index` into `buf`. `out_len` always
/// receives the cycle length; when it exceeds `capacity` nothing is copied
/// and `TROPEX_STATUS_INVALID_ARGUMENT` is returned.
///
/// # Safety
///
/// `g` and `s` must be live handles with `s` belonging to `g`; `buf` must be
/// writable for `capacity` entries (or null with capacity 0).
#[no_mangle]
pub unsafe extern "C" fn tropex_cycle_vertices(
    g: *const TropexGraph,
    s: *const TropexCycleSet,
    index: usize,
    buf: *mut usize,
    capacity: usize,
    out_len: *mut usize,
) -> TropexStatus {
    guard(|| {
        let g = &borrow(g, "graph")?.inner;
        let s = &borrow(s, "cycle set")?.inner;
        let cycle = s.cycles().get(index).ok_or_else(|| {
            Failure(
                TropexStatus::InvalidArgument,
                format!("cycle {index} of {} does not exist", s.len()),
            )
        })?;
        if cycle.edges().iter().any(|&e| g.edge(e).is_none()) {
            return Err(Failure(
                TropexStatus::InvalidSolution,
                "cycle set does not belong to this graph".into(),
            ));
        }
        let vertices = cycle.vertices(g);
        put(out_len, vertices.len(), "out_len")?;
        if vertices.len() > capacity {
            return Err(Failure(
                TropexStatus::InvalidArgument,
                format!("cycle has {} vertices, buffer holds {capacity}", vertices.len()),
            ));
        }
        for (i, v) in vertices.into_iter().enumerate() {
            buf.add(i).write(v.index());
        }
        Ok(())
    })
}

/// Checks that `s` is a vertex-disjoint cycle set of `g` and reports how
/// many vertices and colors it covers.
///
/// # Safety
///
/// `g` and `s` must be live handles; the two out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn tropex_validate(
    g: *const TropexGraph,
    s: *const TropexCycleSet,
    out_vertices: *mut usize,
    out_colors: *mut usize,
) -> TropexStatus {
    guard(|| {
        let g = &borrow(g, "graph")?.inner;
        let s = &borrow(s, "cycle set")?.inner;
        let m = g.validate(s).map_err(fail(TropexStatus::InvalidSolution))?;
        put(out_vertices, m.vertex_count, "out_vertices")?;
        put(out_colors, m.color_count, "out_colors")
    })
}

/// Serializes a cycle set as `C v1 v2 ...` lines in canonical order.
///
/// # Safety
///
/// `g` and `s` must be live handles with `s` valid for `g`; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tropex_solution_to_text(
    g: *const TropexGraph,
    s: *const TropexCycleSet,
    out: *mut *mut c_char,
) -> TropexStatus {
    guard(|| {
        let g = &borrow(g, "graph")?.inner;
        let s = &borrow(s, "cycle set")?.inner;
        g.validate(s).map_err(fail(TropexStatus::InvalidSolution))?;
        put(out, c_string(write_solution(g, s)), "out")
    })
}

/// Parses `C v1 v2 ...` lines against `g`. The result is not validated; use
/// [`tropex_validate`].
///
/// # Safety
///
/// `g` must be a live handle, `text` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tropex_solution_parse(
    g: *const TropexGraph,
    text: *const c_char,
    out: *mut *mut TropexCycleSet,
) -> TropexStatus {
    guard(|| {
        let g = &borrow(g, "graph")?.inner;
        let s = parse_solution(g, c_str(text, "text")?).map_err(fail(TropexStatus::ParseError))?;
        put(out, cycle_set_handle(s), "out")
    })
}

/// Compiles a DIMACS CNF into a gadget graph (`TROPEX_VARIANT_*`). When
/// `out_map` is non-null it receives the sidecar map text.
///
/// # Safety
///
/// `dimacs` must be NUL-terminated; `out_graph` must be writable; `out_map`
/// must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn tropex_reduce_dimacs(
    dimacs: *const c_char,
    variant: u32,
    out_graph: *mut *mut TropexGraph,
    out_map: *mut *mut c_char,
) -> TropexStatus {
    guard(|| {
        let cnf = parse_dimacs(c_str(dimacs, "dimacs")?).map_err(fail(TropexStatus::ParseError))?;
        let art = match variant {
            TROPEX_VARIANT_PLAIN => tropex::build_sat_graph(&cnf),
            TROPEX_VARIANT_BALANCED => tropex::add_balance_vertices(&tropex::build_sat_graph(&cnf)),
            TROPEX_VARIANT_TWO_PER_COLOR => {
                tropex::build_2pc_graph(&cnf).map_err(fail(TropexStatus::InvalidArgument))?
            }
            other => {
                return Err(Failure(
                    TropexStatus::InvalidArgument,
                    format!("unknown variant {other}"),
                ))
            }
        };
        if out_graph.is_null() {
            return Err(Failure(TropexStatus::NullPointer, "out_graph is null".into()));
        }
        if !out_map.is_null() {
            out_map.write(c_string(GadgetMap::from_artifact(&art).write()));
        }
        out_graph.write(Box::into_raw(Box::new(TropexGraph { inner: art.graph })));
        Ok(())
    })
}
