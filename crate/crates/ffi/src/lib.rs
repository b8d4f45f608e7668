//! C interface to the characteristic-number engine.
//!
//! Every fallible call returns a [`CharnumStatus`]. On failure a message is
//! kept per thread and can be read with [`charnum_last_error`]. Strings
//! handed out through `out` parameters are owned by the caller and must be
//! released with [`charnum_string_free`].

use charnum::cache;
use charnum::engine::{kontsevich_oracle, Engine, EngineConfig, EvalError};
use charnum::model::{CondClass, Family, InvariantKey};
use charnum::rational::format_rational;
use charnum::render::{render, Format};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharnumStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    InvalidKey = 3,
    Cycle = 4,
    DegreeGuard = 5,
    NotComputable = 6,
    Cache = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharnumFamily {
    N = 0,
    C = 1,
    E = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharnumFormat {
    Markdown = 0,
    Csv = 1,
    Json = 2,
}

/// Opaque engine handle: a memo store plus its degree limits.
pub struct CharnumEngine {
    engine: Engine,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: CharnumStatus, msg: impl Into<String>) -> CharnumStatus {
    set_error(msg);
    status
}

fn eval_status(e: &EvalError) -> CharnumStatus {
    let status = match e {
        EvalError::CycleDetected(_) => CharnumStatus::Cycle,
        EvalError::DegreeGuardExceeded { .. } => CharnumStatus::DegreeGuard,
        EvalError::NotComputable(_) => CharnumStatus::NotComputable,
        EvalError::Precondition { .. } => CharnumStatus::InvalidKey,
    };
    fail(status, e.to_string())
}

fn guarded(f: impl FnOnce() -> CharnumStatus) -> CharnumStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(CharnumStatus::Panic, "internal panic"),
    }
}

fn class_of(index: i32) -> Result<Option<CondClass>, CharnumStatus> {
    if index < 0 {
        return Ok(None);
    }
    CondClass::from_index(index as usize)
        .map(Some)
        .ok_or_else(|| fail(CharnumStatus::InvalidArgument, format!("class index {index} is not in 0..=5")))
}

fn family_of(f: CharnumFamily) -> Family {
    match f {
        CharnumFamily::N => Family::N,
        CharnumFamily::C => Family::C,
        CharnumFamily::E => Family::E,
    }
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> CharnumStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            CharnumStatus::Ok
        }
        Err(_) => fail(CharnumStatus::Panic, "output contained a nul byte"),
    }
}

unsafe fn path_arg<'a>(path: *const c_char) -> Result<&'a Path, CharnumStatus> {
    if path.is_null() {
        return Err(fail(CharnumStatus::NullArgument, "path is null"));
    }
    CStr::from_ptr(path)
        .to_str()
        .map(Path::new)
        .map_err(|_| fail(CharnumStatus::InvalidArgument, "path is not UTF-8"))
}

/// Creates an engine. Returns null when a limit is out of range.
#[no_mangle]
pub extern "C" fn charnum_engine_new(max_degree: i32, max_cusp_degree: i32) -> *mut CharnumEngine {
    clear_error();
    if max_degree < 1 || max_cusp_degree < 2 {
        set_error("max_degree must be >= 1 and max_cusp_degree >= 2");
        return ptr::null_mut();
    }
    let config = EngineConfig { max_degree, max_cusp_degree, ..EngineConfig::default() };
    Box::into_raw(Box::new(CharnumEngine { engine: Engine::new(config) }))
}

/// Releases an engine. Null is ignored.
///
/// # Safety
/// `engine` must come from [`charnum_engine_new`] and not be used again.
#[no_mangle]
pub unsafe extern "C" fn charnum_engine_free(engine: *mut CharnumEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used again.
#[no_mangle]
pub unsafe extern "C" fn charnum_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn charnum_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Computes one value and writes it as `num` or `num/den` to `*out`.
/// `class` is the basis index 0..=5 (`1, h, h2, hv, hv2, h2hv`) or -1 for
/// none.
///
/// # Safety
/// `engine` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn charnum_compute(
    engine: *mut CharnumEngine,
    family: CharnumFamily,
    class: i32,
    d: i32,
    a: i32,
    b: i32,
    c: i32,
    out: *mut *mut c_char,
) -> CharnumStatus {
    guarded(|| {
        if engine.is_null() || out.is_null() {
            return fail(CharnumStatus::NullArgument, "engine or out is null");
        }
        let class = match class_of(class) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let key = InvariantKey { family: family_of(family), class, d, a, b, c };
        if !key.is_valid() {
            return fail(CharnumStatus::InvalidKey, format!("{key}: {}", key.rule()));
        }
        match (*engine).engine.compute(&key) {
            Ok(v) => write_string(out, format_rational(&v)),
            Err(e) => eval_status(&e),
        }
    })
}

/// Number of rational plane curves of degree `d` through `3d - 1` points,
/// by the classical recursion.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn charnum_kontsevich(d: i32, out: *mut *mut c_char) -> CharnumStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CharnumStatus::NullArgument, "out is null");
        }
        if !(1..=64).contains(&d) {
            return fail(CharnumStatus::InvalidArgument, "degree must be in 1..=64");
        }
        write_string(out, format_rational(&kontsevich_oracle(d)))
    })
}

/// Renders a full table.
///
/// # Safety
/// `engine` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn charnum_render_table(
    engine: *mut CharnumEngine,
    family: CharnumFamily,
    class: i32,
    d: i32,
    format: CharnumFormat,
    out: *mut *mut c_char,
) -> CharnumStatus {
    guarded(|| {
        if engine.is_null() || out.is_null() {
            return fail(CharnumStatus::NullArgument, "engine or out is null");
        }
        let class = match class_of(class) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let family = family_of(family);
        if (family == Family::N) != class.is_none() {
            return fail(CharnumStatus::InvalidArgument, "N tables take no class; C and E tables need one");
        }
        let format = match format {
            CharnumFormat::Markdown => Format::Markdown,
            CharnumFormat::Csv => Format::Csv,
            CharnumFormat::Json => Format::Json,
        };
        match (*engine).engine.table(family, d, class) {
            Ok(t) => write_string(out, render(&t, format)),
            Err(e) => eval_status(&e),
        }
    })
}

/// Writes every stored value, zeros included, as a JSON-lines cache file.
///
/// # Safety
/// `engine` must be a live handle and `path` a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn charnum_cache_export(engine: *const CharnumEngine, path: *const c_char) -> CharnumStatus {
    guarded(|| {
        if engine.is_null() {
            return fail(CharnumStatus::NullArgument, "engine is null");
        }
        let path = match path_arg(path) {
            Ok(p) => p,
            Err(status) => return status,
        };
        match cache::export_to(&(*engine).engine.store, path, true) {
            Ok(()) => CharnumStatus::Ok,
            Err(e) => fail(CharnumStatus::Cache, e.to_string()),
        }
    })
}

/// Replaces the engine's store with the contents of a cache file. The
/// store is left untouched when the file is rejected.
///
/// # Safety
/// `engine` must be a live handle and `path` a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn charnum_cache_import(engine: *mut CharnumEngine, path: *const c_char) -> CharnumStatus {
    guarded(|| {
        if engine.is_null() {
            return fail(CharnumStatus::NullArgument, "engine is null");
        }
        let path = match path_arg(path) {
            Ok(p) => p,
            Err(status) => return status,
        };
        match cache::import_from(path) {
            Ok(store) => {
                (*engine).engine.store = store;
                CharnumStatus::Ok
            }
            Err(e) => fail(CharnumStatus::Cache, e.to_string()),
        }
    })
}

/// Number of values held by the engine's store.
///
/// # Safety
/// `engine` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn charnum_engine_len(engine: *const CharnumEngine) -> usize {
    if engine.is_null() {
        0
    } else {
        (*engine).engine.store.len()
    }
}
