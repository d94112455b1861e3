//! C ABI for `dimspec`.
//!
//! Graphs cross the boundary as opaque `DimGraph` handles created by one of
//! the `dim_graph_*` constructors and released with [`dim_graph_free`].
//! Every fallible function returns a [`DimStatus`]; on failure a message is
//! available from [`dim_last_error_message`] on the same thread.
//!
//! Array outputs use caller-provided buffers. When a buffer is too small the
//! call returns `DIM_STATUS_BUFFER_TOO_SMALL` and still writes the required
//! length through the `len_out` pointer.
//!
//! Vertex labels are 1-based, as everywhere else in the library.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dimspec::bounds::full_report;
use dimspec::closed_form::{cdim_principal, cdim_spectrum};
use dimspec::eigen::{eig_sym, principal_pair};
use dimspec::oracle::enumerate_dims_with_limit;
use dimspec::recognition::{recognize_cdim, recognize_cdim_spectral};
use dimspec::{generate_cdim, io, matrix, Error, Graph, MatrixKind};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    NumericalFailure = 3,
    SizeGuard = 4,
    Disconnected = 5,
    NotApplicable = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// Matrix selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimMatrixKind {
    Adjacency = 0,
    Laplacian = 1,
    SignlessLaplacian = 2,
}

impl From<DimMatrixKind> for MatrixKind {
    fn from(k: DimMatrixKind) -> Self {
        match k {
            DimMatrixKind::Adjacency => MatrixKind::Adjacency,
            DimMatrixKind::Laplacian => MatrixKind::Laplacian,
            DimMatrixKind::SignlessLaplacian => MatrixKind::SignlessLaplacian,
        }
    }
}

/// Opaque graph handle.
pub struct DimGraph {
    inner: Graph,
}

/// Flat bounds report. `has_*` flags mark which optional values are valid.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct DimBounds {
    pub n: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub rho_a: f64,
    pub mu_1: f64,
    pub q_1: f64,
    pub trace_l: f64,
    pub trace_q: f64,
    pub has_window: bool,
    pub window_lo: i64,
    pub window_hi: i64,
    pub window_m1: f64,
    pub window_m2: f64,
    pub has_lb_adjacency: bool,
    pub lb_adjacency: i64,
    pub lb_adjacency_raw: f64,
    pub has_lb_laplacian: bool,
    pub lb_laplacian: i64,
    pub lb_laplacian_raw: f64,
    pub has_lb_signless: bool,
    pub lb_signless: i64,
    pub lb_signless_raw: f64,
    pub lambda_minus: usize,
    pub lambda_plus: usize,
    pub ub_lambda_count: usize,
    pub index_bound_holds: bool,
    pub index_bound_equality: bool,
}

/// Summary of a brute-force DIM enumeration. Sizes are -1 when no DIM exists.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct DimOracleSummary {
    pub dim_count: usize,
    pub min_dim_size: i64,
    pub max_dim_size: i64,
    pub max_induced_matching: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> DimStatus {
    match e {
        Error::NoConvergence { .. } => DimStatus::NumericalFailure,
        Error::SizeGuard(_) => DimStatus::SizeGuard,
        Error::Disconnected => DimStatus::Disconnected,
        Error::NotApplicable(_) => DimStatus::NotApplicable,
        _ => DimStatus::InvalidInput,
    }
}

fn guard<F>(f: F) -> DimStatus
where
    F: FnOnce() -> Result<(), DimStatus>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DimStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("panic inside dimspec".into());
            DimStatus::Panic
        }
    }
}

trait OrStatus<T> {
    fn or_status(self) -> Result<T, DimStatus>;
}

impl<T> OrStatus<T> for Result<T, Error> {
    fn or_status(self) -> Result<T, DimStatus> {
        self.map_err(|e| {
            set_error(e.to_string());
            status_of(&e)
        })
    }
}

fn null_error(what: &str) -> DimStatus {
    set_error(format!("{what} is null"));
    DimStatus::NullPointer
}

unsafe fn graph_ref<'a>(g: *const DimGraph) -> Result<&'a Graph, DimStatus> {
    g.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| null_error("graph"))
}

unsafe fn write_handle(out: *mut *mut DimGraph, g: Graph) -> Result<(), DimStatus> {
    if out.is_null() {
        return Err(null_error("output handle"));
    }
    *out = Box::into_raw(Box::new(DimGraph { inner: g }));
    Ok(())
}

unsafe fn write_slice(
    src: &[f64],
    dst: *mut f64,
    capacity: usize,
    len_out: *mut usize,
) -> Result<(), DimStatus> {
    if !len_out.is_null() {
        *len_out = src.len();
    }
    if capacity < src.len() {
        set_error(format!(
            "buffer holds {capacity} values, {} needed",
            src.len()
        ));
        return Err(DimStatus::BufferTooSmall);
    }
    if src.is_empty() {
        return Ok(());
    }
    if dst.is_null() {
        return Err(null_error("output buffer"));
    }
    ptr::copy_nonoverlapping(src.as_ptr(), dst, src.len());
    Ok(())
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn dim_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn dim_version() -> *const c_char {
    static VERSION: &[u8] = concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes();
    VERSION.as_ptr() as *const c_char
}

/// Builds a graph on `n` vertices from `pair_count` pairs stored flat in
/// `pairs` (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `pairs` must point to `2 * pair_count` readable values (may be null when
/// `pair_count` is 0); `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dim_graph_from_edges(
    n: usize,
    pairs: *const usize,
    pair_count: usize,
    out: *mut *mut DimGraph,
) -> DimStatus {
    guard(|| {
        let flat: &[usize] = if pair_count == 0 {
            &[]
        } else if pairs.is_null() {
            return Err(null_error("pairs"));
        } else {
            std::slice::from_raw_parts(pairs, 2 * pair_count)
        };
        let list: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let g = Graph::from_edge_list(n, &list).or_status()?;
        write_handle(out, g)
    })
}

/// Parses the edge-list text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dim_graph_parse(
    text: *const c_char,
    out: *mut *mut DimGraph,
) -> DimStatus {
    guard(|| {
        if text.is_null() {
            return Err(null_error("text"));
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| {
            set_error("text is not valid UTF-8".into());
            DimStatus::InvalidInput
        })?;
        let g = io::parse_graph(s).or_status()?;
        write_handle(out, g)
    })
}

/// Builds `K_{M,S}` with `|M| = m`, `|S| = s`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dim_graph_generate_cdim(
    m: usize,
    s: usize,
    out: *mut *mut DimGraph,
) -> DimStatus {
    guard(|| {
        let g = generate_cdim(m, s).or_status()?;
        write_handle(out, g)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from a `dim_graph_*` constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dim_graph_free(g: *mut DimGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dim_graph_order(g: *const DimGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.order())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dim_graph_size(g: *const DimGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.size())
}

/// Canonical edge-list text. Free the result with [`dim_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dim_graph_serialize(
    g: *const DimGraph,
    out: *mut *mut c_char,
) -> DimStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null_error("output string"));
        }
        let text = CString::new(io::serialize_graph(g)).expect("no interior NUL");
        *out = text.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dim_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// All `n` eigenvalues of the chosen matrix, non-increasing.
///
/// # Safety
/// `values` must hold `capacity` doubles; `len_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn dim_eigenvalues(
    g: *const DimGraph,
    kind: DimMatrixKind,
    values: *mut f64,
    capacity: usize,
    len_out: *mut usize,
) -> DimStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let dec = eig_sym(&matrix(g, kind.into())).or_status()?;
        write_slice(&dec.values, values, capacity, len_out)
    })
}

/// Principal eigenpair; the vector is scaled so that its first entry is 1.
///
/// # Safety
/// `radius` must be valid; `vector` must hold `capacity` doubles.
#[no_mangle]
pub unsafe extern "C" fn dim_principal(
    g: *const DimGraph,
    kind: DimMatrixKind,
    radius: *mut f64,
    vector: *mut f64,
    capacity: usize,
    len_out: *mut usize,
) -> DimStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let kind = MatrixKind::from(kind);
        let pair = principal_pair(&matrix(g, kind), kind).or_status()?;
        if radius.is_null() {
            return Err(null_error("radius"));
        }
        *radius = pair.radius;
        write_slice(&pair.vector, vector, capacity, len_out)
    })
}

/// Closed-form eigenvalues of `K_{M,S}` on `n` vertices with `|M| = m`,
/// expanded with multiplicity and non-increasing.
///
/// # Safety
/// `values` must hold `capacity` doubles; `len_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn dim_cdim_eigenvalues(
    kind: DimMatrixKind,
    n: usize,
    m: usize,
    values: *mut f64,
    capacity: usize,
    len_out: *mut usize,
) -> DimStatus {
    guard(|| {
        let spec = cdim_spectrum(kind.into(), n, m).or_status()?;
        write_slice(&spec.values(), values, capacity, len_out)
    })
}

/// Closed-form principal eigenpair of `K_{M,S}`.
///
/// # Safety
/// As for [`dim_principal`].
#[no_mangle]
pub unsafe extern "C" fn dim_cdim_principal(
    kind: DimMatrixKind,
    n: usize,
    m: usize,
    radius: *mut f64,
    vector: *mut f64,
    capacity: usize,
    len_out: *mut usize,
) -> DimStatus {
    guard(|| {
        let pair = cdim_principal(kind.into(), n, m).or_status()?;
        if radius.is_null() {
            return Err(null_error("radius"));
        }
        *radius = pair.radius;
        write_slice(&pair.vector, vector, capacity, len_out)
    })
}

/// Recognizes `K_{M,S}`. On success `*found` is 1 and the matching is
/// written flat into `matching` (`u0, v0, u1, v1, ...`, `2 * |M|` entries,
/// `*len_out = |M|`); otherwise `*found` is 0. A nonzero `spectral`
/// selects the eigenvector recognizer, which rejects disconnected graphs.
///
/// # Safety
/// `found` must be valid; `matching` must hold `2 * capacity` values.
#[no_mangle]
pub unsafe extern "C" fn dim_recognize(
    g: *const DimGraph,
    spectral: c_int,
    found: *mut c_int,
    matching: *mut usize,
    capacity: usize,
    len_out: *mut usize,
) -> DimStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if found.is_null() {
            return Err(null_error("found"));
        }
        let cert = if spectral != 0 {
            recognize_cdim_spectral(g).or_status()?
        } else {
            recognize_cdim(g)
        };
        *found = cert.is_some() as c_int;
        let edges = cert.map(|c| c.matching).unwrap_or_default();
        if !len_out.is_null() {
            *len_out = edges.len();
        }
        if capacity < edges.len() {
            set_error(format!(
                "buffer holds {capacity} edges, {} needed",
                edges.len()
            ));
            return Err(DimStatus::BufferTooSmall);
        }
        if edges.is_empty() {
            return Ok(());
        }
        if matching.is_null() {
            return Err(null_error("matching"));
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            *matching.add(2 * i) = u;
            *matching.add(2 * i + 1) = v;
        }
        Ok(())
    })
}

/// Fills every eigenvalue bound on DIM size.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn dim_bounds(g: *const DimGraph, out: *mut DimBounds) -> DimStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null_error("bounds"));
        }
        let r = full_report(g).or_status()?;
        let mut b = DimBounds {
            n: r.n,
            edges: r.edges,
            min_degree: r.min_degree,
            rho_a: r.rho_a,
            mu_1: r.mu_1,
            q_1: r.q_1,
            trace_l: r.trace_l,
            trace_q: r.trace_q,
            lambda_minus: r.lambda_minus,
            lambda_plus: r.lambda_plus,
            ub_lambda_count: r.ub_lambda_count,
            index_bound_holds: r.index_bound.holds,
            index_bound_equality: r.index_bound.equality,
            ..Default::default()
        };
        if let Some(w) = r.window {
            b.has_window = true;
            b.window_lo = w.lo;
            b.window_hi = w.hi;
            b.window_m1 = w.m1;
            b.window_m2 = w.m2;
        }
        if let Some(v) = r.lb_adjacency {
            b.has_lb_adjacency = true;
            b.lb_adjacency = v.bound;
            b.lb_adjacency_raw = v.raw;
        }
        if let Some(v) = r.lb_laplacian {
            b.has_lb_laplacian = true;
            b.lb_laplacian = v.bound;
            b.lb_laplacian_raw = v.raw;
        }
        if let Some(v) = r.lb_signless {
            b.has_lb_signless = true;
            b.lb_signless = v.bound;
            b.lb_signless_raw = v.raw;
        }
        *out = b;
        Ok(())
    })
}

/// Brute-force DIM enumeration summary, refusing graphs with more than
/// `max_edges` edges.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn dim_oracle(
    g: *const DimGraph,
    max_edges: usize,
    out: *mut DimOracleSummary,
) -> DimStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null_error("summary"));
        }
        let r = enumerate_dims_with_limit(g, max_edges).or_status()?;
        *out = DimOracleSummary {
            dim_count: r.dims.len(),
            min_dim_size: r.min_dim_size.map_or(-1, |x| x as i64),
            max_dim_size: r.max_dim_size.map_or(-1, |x| x as i64),
            max_induced_matching: r.max_induced_matching,
        };
        Ok(())
    })
}
