//! C ABI for the `kcore` library.
//!
//! Graphs and core assignments are opaque handles created by `kc_*` functions
//! and released with the matching `*_free`. Fallible calls return a
//! [`KcStatus`] and write results through out-pointers; the message of the
//! most recent failure on the calling thread is available from
//! [`kc_last_error_message`]. Vertex ids are zero-based.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kcore::io::{parse_edgelist, parse_pajek, write_clu, write_pajek};
use kcore::{core_decompose, CoreAssignment, DegreeMode, Error, Graph, LabeledGraph, LoopPolicy};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KcStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// A vertex id, line endpoint or buffer size was out of range.
    InvalidArgument = 2,
    /// The degree mode does not fit the graph's directedness.
    ModeMismatch = 3,
    /// Input text could not be parsed.
    ParseError = 4,
    /// Text was not valid UTF-8.
    Utf8Error = 5,
    /// The library panicked; this is a bug.
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KcDegreeMode {
    Undirected = 0,
    In = 1,
    Out = 2,
    InOut = 3,
}

impl From<KcDegreeMode> for DegreeMode {
    fn from(mode: KcDegreeMode) -> Self {
        match mode {
            KcDegreeMode::Undirected => DegreeMode::Undirected,
            KcDegreeMode::In => DegreeMode::In,
            KcDegreeMode::Out => DegreeMode::Out,
            KcDegreeMode::InOut => DegreeMode::InOut,
        }
    }
}

/// Opaque graph handle.
pub struct KcGraph {
    inner: LabeledGraph,
}

/// Opaque handle to the core numbers of one graph.
pub struct KcCores {
    inner: CoreAssignment,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(text).ok());
}

fn fail(status: KcStatus, message: impl Into<String>) -> KcStatus {
    set_error(message);
    status
}

fn status_of(e: Error) -> KcStatus {
    let status = match &e {
        Error::ModeMismatch { .. } => KcStatus::ModeMismatch,
        Error::Parse { .. } | Error::DuplicateWord(_) | Error::Io(_) => KcStatus::ParseError,
        Error::EndpointOutOfRange { .. } | Error::SelfLoop { .. } | Error::TooManyVertices(_) => {
            KcStatus::InvalidArgument
        }
    };
    fail(status, e.to_string())
}

fn guarded(body: impl FnOnce() -> KcStatus) -> KcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(KcStatus::Panic, "internal panic"),
    }
}

unsafe fn text_arg<'a>(text: *const c_char) -> Result<&'a str, KcStatus> {
    if text.is_null() {
        return Err(fail(KcStatus::NullArgument, "text is NULL"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| fail(KcStatus::Utf8Error, e.to_string()))
}

fn into_c_string(bytes: Vec<u8>) -> *mut c_char {
    CString::new(bytes).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn store<T>(out: *mut *mut T, value: T) -> KcStatus {
    *out = Box::into_raw(Box::new(value));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    KcStatus::Ok
}

/// Message describing the most recent failure on this thread, or NULL. The
/// pointer stays valid until the next `kc_*` call on the same thread.
#[no_mangle]
pub extern "C" fn kc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a simple graph on `n` vertices from `line_count` pairs stored
/// flat in `lines` (`u0, v0, u1, v1, ...`). Duplicate lines are collapsed;
/// self-loops are dropped, or rejected when `reject_loops` is set.
///
/// # Safety
/// `lines` must point to `2 * line_count` readable values (it may be NULL
/// when `line_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_from_lines(
    n: usize,
    lines: *const u32,
    line_count: usize,
    directed: bool,
    reject_loops: bool,
    out: *mut *mut KcGraph,
) -> KcStatus {
    guarded(|| {
        if out.is_null() || (lines.is_null() && line_count > 0) {
            return fail(KcStatus::NullArgument, "lines or out is NULL");
        }
        let flat: &[u32] = if line_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(lines, 2 * line_count)
        };
        let pairs: Vec<(usize, usize)> = flat
            .chunks_exact(2)
            .map(|p| (p[0] as usize, p[1] as usize))
            .collect();
        let policy = if reject_loops {
            LoopPolicy::Reject
        } else {
            LoopPolicy::Ignore
        };
        match Graph::from_lines(n, &pairs, directed, policy) {
            Ok(g) => store(out, KcGraph { inner: g.into() }),
            Err(e) => status_of(e),
        }
    })
}

/// Parses a Pajek `.net` network from NUL-terminated UTF-8 text.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_from_pajek(
    text: *const c_char,
    out: *mut *mut KcGraph,
) -> KcStatus {
    guarded(|| {
        if out.is_null() {
            return fail(KcStatus::NullArgument, "out is NULL");
        }
        let text = match text_arg(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match parse_pajek(text.as_bytes()) {
            Ok(lg) => store(out, KcGraph { inner: lg }),
            Err(e) => status_of(e),
        }
    })
}

/// Parses a zero-based `u v` edge list from NUL-terminated UTF-8 text.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_from_edgelist(
    text: *const c_char,
    directed: bool,
    out: *mut *mut KcGraph,
) -> KcStatus {
    guarded(|| {
        if out.is_null() {
            return fail(KcStatus::NullArgument, "out is NULL");
        }
        let text = match text_arg(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match parse_edgelist(text.as_bytes(), directed, None) {
            Ok(g) => store(out, KcGraph { inner: g.into() }),
            Err(e) => status_of(e),
        }
    })
}

/// # Safety
/// `graph` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_free(graph: *mut KcGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices; 0 for NULL.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_vertex_count(graph: *const KcGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.graph.n())
}

/// Number of edges (undirected) or arcs (directed); 0 for NULL.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_line_count(graph: *const KcGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.graph.m())
}

/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_is_directed(graph: *const KcGraph) -> bool {
    graph.as_ref().is_some_and(|g| g.inner.graph.is_directed())
}

/// # Safety
/// `graph` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_degree(
    graph: *const KcGraph,
    vertex: u32,
    mode: KcDegreeMode,
    out: *mut usize,
) -> KcStatus {
    guarded(|| {
        let (Some(g), false) = (graph.as_ref(), out.is_null()) else {
            return fail(KcStatus::NullArgument, "graph or out is NULL");
        };
        let g = &g.inner.graph;
        if vertex as usize >= g.n() {
            return fail(
                KcStatus::InvalidArgument,
                format!("vertex {vertex} out of range"),
            );
        }
        match g.degree(vertex, mode.into()) {
            Ok(d) => {
                *out = d;
                KcStatus::Ok
            }
            Err(e) => status_of(e),
        }
    })
}

/// Writes the graph as Pajek text. Free the result with [`kc_string_free`].
/// Returns NULL for a NULL handle.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_to_pajek(graph: *const KcGraph) -> *mut c_char {
    let Some(g) = graph.as_ref() else {
        return ptr::null_mut();
    };
    let mut buf = Vec::new();
    match write_pajek(&g.inner, &mut buf) {
        Ok(()) => into_c_string(buf),
        Err(_) => ptr::null_mut(),
    }
}

/// Computes the core number of every vertex under `mode`.
///
/// # Safety
/// `graph` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kc_cores_decompose(
    graph: *const KcGraph,
    mode: KcDegreeMode,
    out: *mut *mut KcCores,
) -> KcStatus {
    guarded(|| {
        let (Some(g), false) = (graph.as_ref(), out.is_null()) else {
            return fail(KcStatus::NullArgument, "graph or out is NULL");
        };
        match core_decompose(&g.inner.graph, mode.into()) {
            Ok(a) => store(out, KcCores { inner: a }),
            Err(e) => status_of(e),
        }
    })
}

/// # Safety
/// `cores` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kc_cores_free(cores: *mut KcCores) {
    if !cores.is_null() {
        drop(Box::from_raw(cores));
    }
}

/// Number of vertices covered; 0 for NULL.
///
/// # Safety
/// `cores` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kc_cores_len(cores: *const KcCores) -> usize {
    cores.as_ref().map_or(0, |c| c.inner.len())
}

/// Order of the main core; 0 for NULL or an empty graph.
///
/// # Safety
/// `cores` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kc_cores_max(cores: *const KcCores) -> usize {
    cores.as_ref().map_or(0, |c| c.inner.max_core())
}

/// # Safety
/// `cores` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kc_cores_get(
    cores: *const KcCores,
    vertex: u32,
    out: *mut usize,
) -> KcStatus {
    let (Some(c), false) = (cores.as_ref(), out.is_null()) else {
        return fail(KcStatus::NullArgument, "cores or out is NULL");
    };
    match c.inner.as_slice().get(vertex as usize) {
        Some(&k) => {
            *out = k;
            KcStatus::Ok
        }
        None => fail(
            KcStatus::InvalidArgument,
            format!("vertex {vertex} out of range"),
        ),
    }
}

/// Copies all core numbers into `buffer`, which must hold at least
/// [`kc_cores_len`] entries.
///
/// # Safety
/// `cores` must be a live handle and `buffer` writable for `capacity`
/// entries.
#[no_mangle]
pub unsafe extern "C" fn kc_cores_copy(
    cores: *const KcCores,
    buffer: *mut usize,
    capacity: usize,
) -> KcStatus {
    let Some(c) = cores.as_ref() else {
        return fail(KcStatus::NullArgument, "cores is NULL");
    };
    let values = c.inner.as_slice();
    if values.is_empty() {
        return KcStatus::Ok;
    }
    if buffer.is_null() {
        return fail(KcStatus::NullArgument, "buffer is NULL");
    }
    if capacity < values.len() {
        return fail(
            KcStatus::InvalidArgument,
            format!("buffer holds {capacity} entries, {} needed", values.len()),
        );
    }
    ptr::copy_nonoverlapping(values.as_ptr(), buffer, values.len());
    KcStatus::Ok
}

/// Writes the ids of the `k`-core's vertices, ascending, into `buffer` and
/// their count into `count`. When `capacity` is too small nothing is copied,
/// `count` still receives the required size and the call reports
/// `KC_STATUS_INVALID_ARGUMENT`; pass a NULL buffer with capacity 0 to query
/// the size.
///
/// # Safety
/// `cores` must be a live handle, `count` writable, and `buffer` writable
/// for `capacity` entries.
#[no_mangle]
pub unsafe extern "C" fn kc_cores_k_core_vertices(
    cores: *const KcCores,
    k: usize,
    buffer: *mut u32,
    capacity: usize,
    count: *mut usize,
) -> KcStatus {
    let (Some(c), false) = (cores.as_ref(), count.is_null()) else {
        return fail(KcStatus::NullArgument, "cores or count is NULL");
    };
    let members = c.inner.k_core_vertices(k);
    *count = members.len();
    if members.is_empty() {
        return KcStatus::Ok;
    }
    if buffer.is_null() || capacity < members.len() {
        return fail(
            KcStatus::InvalidArgument,
            format!("buffer holds {capacity} entries, {} needed", members.len()),
        );
    }
    ptr::copy_nonoverlapping(members.as_ptr(), buffer, members.len());
    KcStatus::Ok
}

/// Core numbers as a Pajek `.clu` partition. Free the result with
/// [`kc_string_free`]. Returns NULL for a NULL handle.
///
/// # Safety
/// `cores` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kc_cores_to_clu(cores: *const KcCores) -> *mut c_char {
    let Some(c) = cores.as_ref() else {
        return ptr::null_mut();
    };
    let mut buf = Vec::new();
    match write_clu(&c.inner, &mut buf) {
        Ok(()) => into_c_string(buf),
        Err(_) => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
