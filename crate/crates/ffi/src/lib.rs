//! C interface to `dinfty`.
//!
//! Elements live behind opaque handles owned by the caller and released with
//! the matching `_free` function. Every fallible call returns a
//! [`DinftyStatus`]; on failure [`dinfty_last_error`] describes the cause.
//! Strings handed out by the library are released with [`dinfty_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dinfty::cartan::Rank;
use dinfty::crystalgraph::check_isomorphism;
use dinfty::{Error, KostantPartition, MLTableau};

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DinftyStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidRank = 2,
    InvalidIndex = 3,
    /// Malformed UTF-8, JSON, or a buffer that is too small.
    InvalidInput = 4,
    /// Well-formed input that is not an element of the crystal.
    InvalidElement = 5,
    /// `e_i` of the element is zero.
    Undefined = 6,
    LimitExceeded = 7,
    VerificationFailed = 8,
    Internal = 9,
}

/// A marginally large tableau.
pub struct DinftyTableau(MLTableau);

/// A Kostant partition.
pub struct DinftyKostant(KostantPartition);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> DinftyStatus {
    match err {
        Error::InvalidRank(_) | Error::RankMismatch { .. } => DinftyStatus::InvalidRank,
        Error::IndexOutOfRange { .. } => DinftyStatus::InvalidIndex,
        Error::InvalidRoot { .. } | Error::InvalidTableau(_) | Error::InvalidPartition(_) => {
            DinftyStatus::InvalidElement
        }
        Error::LengthMismatch { .. } | Error::OperatorParse(_) | Error::Json(_) => DinftyStatus::InvalidInput,
        Error::LimitExceeded { .. } => DinftyStatus::LimitExceeded,
        Error::KeyCollision(_) | Error::Io(_) => DinftyStatus::Internal,
    }
}

struct Fail(DinftyStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> DinftyStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => DinftyStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            DinftyStatus::Internal
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(DinftyStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(DinftyStatus::NullPointer, format!("{what} is null")));
    }
    out.write(value);
    Ok(())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(DinftyStatus::NullPointer, "string is null".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(DinftyStatus::InvalidInput, "string is not UTF-8".into()))
}

fn into_c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(DinftyStatus::Internal, "interior NUL in output".into()))
}

fn rank(n: usize) -> Result<Rank, Fail> {
    Ok(Rank::new(n)?)
}

fn index(r: Rank, i: usize) -> Result<(), Fail> {
    Ok(r.check_index(i)?)
}

fn copy_weight(coords: &[i64], buf: *mut i64, len: usize, written: *mut usize) -> Result<(), Fail> {
    if !written.is_null() {
        unsafe { written.write(coords.len()) };
    }
    if len < coords.len() {
        return Err(Fail(
            DinftyStatus::InvalidInput,
            format!("buffer holds {len} entries, {} needed", coords.len()),
        ));
    }
    if buf.is_null() {
        return Err(Fail(DinftyStatus::NullPointer, "buffer is null".into()));
    }
    unsafe { ptr::copy_nonoverlapping(coords.as_ptr(), buf, coords.len()) };
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn dinfty_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn dinfty_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dinfty_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// tableaux

/// The highest-weight tableau `T∞` of `D_n`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_tableau_highest_weight(n: usize, out: *mut *mut DinftyTableau) -> DinftyStatus {
    guard(|| {
        let t = MLTableau::highest_weight(rank(n)?);
        write(out, Box::into_raw(Box::new(DinftyTableau(t))), "out")
    })
}

/// Parses `{"n":…,"rows":[[…],…]}`; barred letters are negative.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_tableau_from_json(json: *const c_char, out: *mut *mut DinftyTableau) -> DinftyStatus {
    guard(|| {
        let t = MLTableau::from_json_str(read_str(json)?)?;
        write(out, Box::into_raw(Box::new(DinftyTableau(t))), "out")
    })
}

/// # Safety
/// `t` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_tableau_to_json(t: *const DinftyTableau, out: *mut *mut c_char) -> DinftyStatus {
    guard(|| {
        let t = deref(t, "tableau")?;
        write(out, into_c_string(t.0.to_json())?, "out")
    })
}

/// # Safety
/// `t` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_tableau_f(t: *const DinftyTableau, i: usize, out: *mut *mut DinftyTableau) -> DinftyStatus {
    guard(|| {
        let t = &deref(t, "tableau")?.0;
        index(t.rank(), i)?;
        write(out, Box::into_raw(Box::new(DinftyTableau(t.f(i)))), "out")
    })
}

/// Returns `DINFTY_STATUS_UNDEFINED` and leaves `out` untouched when `e_i T = 0`.
///
/// # Safety
/// `t` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_tableau_e(t: *const DinftyTableau, i: usize, out: *mut *mut DinftyTableau) -> DinftyStatus {
    guard(|| {
        let t = &deref(t, "tableau")?.0;
        index(t.rank(), i)?;
        match t.e(i) {
            Some(x) => write(out, Box::into_raw(Box::new(DinftyTableau(x))), "out"),
            None => Err(Fail(DinftyStatus::Undefined, format!("e_{i} is zero"))),
        }
    })
}

/// # Safety
/// `t` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_tableau_epsilon(t: *const DinftyTableau, i: usize, out: *mut u32) -> DinftyStatus {
    guard(|| {
        let t = &deref(t, "tableau")?.0;
        index(t.rank(), i)?;
        write(out, t.epsilon(i), "out")
    })
}

/// # Safety
/// `t` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_tableau_phi(t: *const DinftyTableau, i: usize, out: *mut i64) -> DinftyStatus {
    guard(|| {
        let t = &deref(t, "tableau")?.0;
        index(t.rank(), i)?;
        write(out, t.phi(i), "out")
    })
}

/// Copies the weight (ε-coordinates, `n` entries) into `buf`. `written`, if
/// not NULL, receives `n` even when `len` is too small.
///
/// # Safety
/// `t` must be a live handle; `buf` must hold `len` entries.
#[no_mangle]
pub unsafe extern "C" fn dinfty_tableau_weight(
    t: *const DinftyTableau,
    buf: *mut i64,
    len: usize,
    written: *mut usize,
) -> DinftyStatus {
    guard(|| {
        let t = &deref(t, "tableau")?.0;
        copy_weight(t.weight().coords(), buf, len, written)
    })
}

/// # Safety
/// `t` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dinfty_tableau_free(t: *mut DinftyTableau) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

// Kostant partitions

/// The empty partition of `D_n`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_kostant_empty(n: usize, out: *mut *mut DinftyKostant) -> DinftyStatus {
    guard(|| {
        let a = KostantPartition::empty(rank(n)?);
        write(out, Box::into_raw(Box::new(DinftyKostant(a))), "out")
    })
}

/// Parses `{"n":…,"parts":[{"kind":"beta","i":…,"k":…,"mult":…},…]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_kostant_from_json(json: *const c_char, out: *mut *mut DinftyKostant) -> DinftyStatus {
    guard(|| {
        let a = KostantPartition::from_json_str(read_str(json)?)?;
        write(out, Box::into_raw(Box::new(DinftyKostant(a))), "out")
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_kostant_to_json(a: *const DinftyKostant, out: *mut *mut c_char) -> DinftyStatus {
    guard(|| {
        let a = deref(a, "partition")?;
        write(out, into_c_string(a.0.to_json())?, "out")
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_kostant_f(a: *const DinftyKostant, i: usize, out: *mut *mut DinftyKostant) -> DinftyStatus {
    guard(|| {
        let a = &deref(a, "partition")?.0;
        index(a.rank(), i)?;
        write(out, Box::into_raw(Box::new(DinftyKostant(a.f(i)))), "out")
    })
}

/// Returns `DINFTY_STATUS_UNDEFINED` and leaves `out` untouched when `e_i A = 0`.
///
/// # Safety
/// `a` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_kostant_e(a: *const DinftyKostant, i: usize, out: *mut *mut DinftyKostant) -> DinftyStatus {
    guard(|| {
        let a = &deref(a, "partition")?.0;
        index(a.rank(), i)?;
        match a.e(i) {
            Some(x) => write(out, Box::into_raw(Box::new(DinftyKostant(x))), "out"),
            None => Err(Fail(DinftyStatus::Undefined, format!("e_{i} is zero"))),
        }
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_kostant_epsilon(a: *const DinftyKostant, i: usize, out: *mut u32) -> DinftyStatus {
    guard(|| {
        let a = &deref(a, "partition")?.0;
        index(a.rank(), i)?;
        write(out, a.epsilon(i), "out")
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_kostant_phi(a: *const DinftyKostant, i: usize, out: *mut i64) -> DinftyStatus {
    guard(|| {
        let a = &deref(a, "partition")?.0;
        index(a.rank(), i)?;
        write(out, a.phi(i), "out")
    })
}

/// Same contract as [`dinfty_tableau_weight`].
///
/// # Safety
/// `a` must be a live handle; `buf` must hold `len` entries.
#[no_mangle]
pub unsafe extern "C" fn dinfty_kostant_weight(
    a: *const DinftyKostant,
    buf: *mut i64,
    len: usize,
    written: *mut usize,
) -> DinftyStatus {
    guard(|| {
        let a = &deref(a, "partition")?.0;
        copy_weight(a.weight().coords(), buf, len, written)
    })
}

/// # Safety
/// `a` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dinfty_kostant_free(a: *mut DinftyKostant) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

// the isomorphism

/// # Safety
/// `t` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_psi(t: *const DinftyTableau, out: *mut *mut DinftyKostant) -> DinftyStatus {
    guard(|| {
        let a = dinfty::psi(&deref(t, "tableau")?.0)?;
        write(out, Box::into_raw(Box::new(DinftyKostant(a))), "out")
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn dinfty_psi_inverse(a: *const DinftyKostant, out: *mut *mut DinftyTableau) -> DinftyStatus {
    guard(|| {
        let t = dinfty::psi_inverse(&deref(a, "partition")?.0);
        write(out, Box::into_raw(Box::new(DinftyTableau(t))), "out")
    })
}

/// Generates both balls of radius `depth` in `D_n` and checks the map
/// between them. `DINFTY_STATUS_VERIFICATION_FAILED` carries a summary in
/// [`dinfty_last_error`].
#[no_mangle]
pub extern "C" fn dinfty_verify(n: usize, depth: usize) -> DinftyStatus {
    guard(|| {
        let report = check_isomorphism(rank(n)?, depth)?;
        if report.passed() {
            Ok(())
        } else {
            Err(Fail(DinftyStatus::VerificationFailed, report.to_string()))
        }
    })
}
