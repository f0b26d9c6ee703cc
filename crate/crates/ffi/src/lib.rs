//! C ABI over `starlattice`.
//!
//! Algebras and lattices live behind opaque handles. Every fallible call
//! returns an [`SlStatus`]; on anything but `SL_STATUS_OK` a message is available
//! from [`sl_last_error`] on the same thread. Strings handed out by the
//! library are NUL-terminated JSON and must be released with
//! [`sl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use starlattice::qlogic::FiniteOrtholattice;
use starlattice::{cli, hilbert_lattice, locality, star_algebra, states_norms, wedderburn};
use starlattice::{Error, ScalarRing, StarAlgebra};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON, bad shapes or out-of-range arguments.
    InvalidInput = 3,
    NotSemisimple = 4,
    NotCStar = 5,
    DecompositionFailed = 6,
    /// A state-space or lattice-operation failure.
    VerificationError = 7,
    /// A Rust panic was caught at the boundary.
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlRing {
    Real = 0,
    Complex = 1,
    Quaternion = 2,
}

impl From<SlRing> for ScalarRing {
    fn from(r: SlRing) -> Self {
        match r {
            SlRing::Real => ScalarRing::R,
            SlRing::Complex => ScalarRing::C,
            SlRing::Quaternion => ScalarRing::H,
        }
    }
}

/// One row of the tensor-product deficit table.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SlDeficit {
    pub sym_dim: usize,
    pub span_dim: usize,
    pub deficit: usize,
}

/// Opaque finite-dimensional *-algebra.
pub struct SlAlgebra(StarAlgebra);

/// Opaque finite ortholattice.
pub struct SlLattice(FiniteOrtholattice);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior NUL"));
}

fn status_of(e: &Error) -> SlStatus {
    match e {
        Error::NotSemisimple { .. } => SlStatus::NotSemisimple,
        Error::NotCStar { .. } => SlStatus::NotCStar,
        Error::DecompositionFailed { .. } | Error::NotIrreducible { .. } | Error::RingMismatch { .. } => {
            SlStatus::DecompositionFailed
        }
        e if cli::is_input_error(e) => SlStatus::InvalidInput,
        _ => SlStatus::VerificationError,
    }
}

enum Failure {
    Status(SlStatus, String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Runs `f`, translating errors and panics into a status and the
/// thread-local message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SlStatus::Ok
        }
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Failure::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            SlStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure::Status(SlStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure::Status(SlStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no interior NUL").into_raw()
}

/// Message for the last failing call on this thread; empty after a
/// success. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn sl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an algebra from its JSON description.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_from_json(json: *const c_char, out: *mut *mut SlAlgebra) -> SlStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let a = StarAlgebra::from_json(read_str(json, "json")?)?;
        *out = Box::into_raw(Box::new(SlAlgebra(a)));
        Ok(())
    })
}

/// Builds `M_n(K)` in its standard basis.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_matrix(n: usize, ring: SlRing, out: *mut *mut SlAlgebra) -> SlStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let a = star_algebra::matrix_algebra(&[(n, ring.into())])?;
        *out = Box::into_raw(Box::new(SlAlgebra(a)));
        Ok(())
    })
}

/// # Safety
/// `a` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_free(a: *mut SlAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Real dimension, or 0 for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_dim(a: *const SlAlgebra) -> usize {
    a.as_ref().map_or(0, |a| a.0.dim())
}

/// Serializes the algebra back to JSON.
///
/// # Safety
/// `a` must be a live handle and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_to_json(a: *const SlAlgebra, out_json: *mut *mut c_char) -> SlStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("algebra"))?;
        *out_ref(out_json, "out_json")? = into_c_string(a.0.to_json());
        Ok(())
    })
}

/// Runs the `verify-algebra` battery. `workers = 0` uses the default pool;
/// the report does not depend on it. `*out_passed` is set to whether every
/// check passed; the report JSON goes to `*out_json`.
///
/// # Safety
/// `a` must be a live handle; `out_json` and `out_passed` writable.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_verify(
    a: *const SlAlgebra,
    seed: u64,
    samples: usize,
    forms: usize,
    workers: usize,
    out_json: *mut *mut c_char,
    out_passed: *mut bool,
) -> SlStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("algebra"))?;
        let out_json = out_ref(out_json, "out_json")?;
        let out_passed = out_ref(out_passed, "out_passed")?;
        let report = cli::verify_algebra(&a.0, seed, samples, forms, workers);
        *out_passed = report.passed();
        *out_json = into_c_string(report.to_json());
        Ok(())
    })
}

/// Block-diagonalizes the left-regular representation; the JSON lists the
/// blocks, the verification residual and the seed.
///
/// # Safety
/// `a` must be a live handle and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_decompose(a: *const SlAlgebra, seed: u64, out_json: *mut *mut c_char) -> SlStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("algebra"))?;
        let out_json = out_ref(out_json, "out_json")?;
        let dec = wedderburn::block_diagonalize(&a.0, seed)?;
        wedderburn::verify_decomposition(&a.0, &dec)?;
        *out_json = into_c_string(serde_json::to_string(&dec.report()).map_err(Error::from)?);
        Ok(())
    })
}

/// State-space norm of the element with coordinates `coords[0..len]`.
///
/// # Safety
/// `a` must be a live handle, `coords` readable for `len` doubles and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_norm(
    a: *const SlAlgebra,
    coords: *const f64,
    len: usize,
    out: *mut f64,
) -> SlStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("algebra"))?;
        if coords.is_null() {
            return Err(null("coords"));
        }
        let out = out_ref(out, "out")?;
        let x = a.0.element(std::slice::from_raw_parts(coords, len).to_vec())?;
        *out = states_norms::sup_norm(&a.0, &x)?;
        Ok(())
    })
}

/// Deficit of `M_n(K) ⊗ M_m(K)`; the complex case uses the ℂ-linear tensor.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_tensor_deficit(ring: SlRing, n: usize, m: usize, out: *mut SlDeficit) -> SlStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let d = locality::deficit_for(ring.into(), n, m)?;
        *out = SlDeficit {
            sym_dim: d.sym_dim,
            span_dim: d.span_dim,
            deficit: d.deficit,
        };
        Ok(())
    })
}

/// Parses a lattice from its JSON description.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sl_lattice_from_json(json: *const c_char, out: *mut *mut SlLattice) -> SlStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let l = FiniteOrtholattice::from_json(read_str(json, "json")?)?;
        *out = Box::into_raw(Box::new(SlLattice(l)));
        Ok(())
    })
}

/// # Safety
/// `l` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sl_lattice_free(l: *mut SlLattice) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `l` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sl_lattice_size(l: *const SlLattice) -> usize {
    l.as_ref().map_or(0, |l| l.0.size())
}

/// Runs the staged `verify-lattice` battery with no expected failures.
///
/// # Safety
/// `l` must be a live handle; `out_json` and `out_passed` writable.
#[no_mangle]
pub unsafe extern "C" fn sl_lattice_verify(
    l: *const SlLattice,
    out_json: *mut *mut c_char,
    out_passed: *mut bool,
) -> SlStatus {
    guard(|| {
        let l = l.as_ref().ok_or_else(|| null("lattice"))?;
        let out_json = out_ref(out_json, "out_json")?;
        let out_passed = out_ref(out_passed, "out_passed")?;
        let report = cli::verify_lattice(&l.0, Vec::new())?;
        *out_passed = report.passed();
        *out_json = into_c_string(report.to_json());
        Ok(())
    })
}

/// Pointwise subspace-lattice axioms on `samples` random subspaces of `K^n`.
///
/// # Safety
/// `out_json` and `out_passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_subspace_verify(
    ring: SlRing,
    n: usize,
    samples: usize,
    seed: u64,
    out_json: *mut *mut c_char,
    out_passed: *mut bool,
) -> SlStatus {
    guard(|| {
        let out_json = out_ref(out_json, "out_json")?;
        let out_passed = out_ref(out_passed, "out_passed")?;
        if n == 0 {
            return Err(Failure::Status(SlStatus::InvalidInput, "n must be positive".into()));
        }
        let r = hilbert_lattice::verify_pointwise_axioms(ring.into(), n, samples, seed)?;
        let mut report = starlattice::VerificationReport::new("subspace", seed, r.checks);
        report.ring = Some(ring.into());
        report.ambient_dim = Some(n);
        *out_passed = report.passed();
        *out_json = into_c_string(report.to_json());
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_out_pointer_is_reported() {
        let s = unsafe { sl_algebra_matrix(2, SlRing::Real, std::ptr::null_mut()) };
        assert_eq!(s, SlStatus::NullPointer);
        let msg = unsafe { CStr::from_ptr(sl_last_error()) };
        assert_eq!(msg.to_str().unwrap(), "out is null");
    }
}
