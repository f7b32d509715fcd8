//! C interface to `latscarf`.
//!
//! Objects are opaque handles created by `ls_*_new` or `ls_problem_from_json`
//! and released with the matching `ls_*_free`. Every fallible call returns an
//! [`LsStatus`]; on failure `ls_last_error_message` describes the error on the
//! calling thread until the next failing call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use latscarf::cli::{betti_json, build_complex, complex_json, parse_spec_str, ComplexKind, ProblemSpec};
use latscarf::fiber::{enumerate_fiber, DegreeScan, Fiber};
use latscarf::scarf::{verify_zero_composition, AlgebraicComplex, StrongMode};
use latscarf::{BettiTable, Error, Field};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    NotInLattice = 5,
    NoPreimage = 6,
    /// The scan bound does not reach every face the computation needs.
    BoundTooSmall = 7,
    OutOfRange = 8,
    Overflow = 9,
    Internal = 10,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LsComplexKind {
    Generalized = 0,
    Scarf = 1,
    Strong = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LsStrongMode {
    Strict = 0,
    Paper = 1,
}

/// A parsed problem and its lattice.
pub struct LsProblem(ProblemSpec);

/// The monomials of one fiber, in canonical order.
pub struct LsFiber(Fiber);

pub struct LsBettiTable(BettiTable);

pub struct LsComplex(AlgebraicComplex);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> LsStatus {
    match err {
        Error::Parse { .. } => LsStatus::Parse,
        Error::NotInLattice(_) => LsStatus::NotInLattice,
        Error::NoPreimage(_) => LsStatus::NoPreimage,
        Error::MissingFace(_) => LsStatus::BoundTooSmall,
        Error::Overflow => LsStatus::Overflow,
        _ => LsStatus::InvalidInput,
    }
}

fn fail(status: LsStatus, message: impl Into<String>) -> LsStatus {
    set_error(message.into());
    status
}

/// Runs `f`, turning errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), LsStatus>) -> LsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LsStatus::Ok,
        Ok(Err(s)) => s,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".into());
            fail(LsStatus::Internal, msg)
        }
    }
}

fn lift<T>(r: latscarf::Result<T>) -> Result<T, LsStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, LsStatus> {
    p.as_ref().ok_or_else(|| fail(LsStatus::NullPointer, "null handle"))
}

unsafe fn slice<'a>(p: *const i64, len: usize) -> Result<&'a [i64], LsStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(fail(LsStatus::NullPointer, "null array"));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn check_out<T>(out: *mut T) -> Result<(), LsStatus> {
    if out.is_null() {
        Err(fail(LsStatus::NullPointer, "null output pointer"))
    } else {
        Ok(())
    }
}

fn check_bound(bound: i64) -> Result<(), LsStatus> {
    if bound < 1 {
        return Err(fail(LsStatus::InvalidInput, format!("bound must be at least 1, got {bound}")));
    }
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// The message for the last failing call on this thread, or null.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ls_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ls_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a problem document (the same JSON the command-line tool reads).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ls_problem_from_json(json: *const c_char, out: *mut *mut LsProblem) -> LsStatus {
    guard(|| {
        check_out(out)?;
        let text = deref(json)?;
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| fail(LsStatus::InvalidUtf8, e.to_string()))?;
        let spec = lift(parse_spec_str(text))?;
        *out = Box::into_raw(Box::new(LsProblem(spec)));
        Ok(())
    })
}

/// # Safety
/// `problem` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_problem_free(problem: *mut LsProblem) {
    if !problem.is_null() {
        drop(Box::from_raw(problem));
    }
}

/// Number of variables, or 0 for a null handle.
///
/// # Safety
/// `problem` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_problem_num_vars(problem: *const LsProblem) -> usize {
    problem.as_ref().map_or(0, |p| p.0.lattice.num_vars())
}

/// Rank of the lattice, or 0 for a null handle.
///
/// # Safety
/// `problem` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_problem_rank(problem: *const LsProblem) -> usize {
    problem.as_ref().map_or(0, |p| p.0.lattice.rank())
}

/// Enumerates the fiber of `degree`: a semigroup degree when the problem
/// has a semigroup, otherwise an exponent vector.
///
/// # Safety
/// `degree` must point to `len` values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ls_fiber_new(
    problem: *const LsProblem,
    degree: *const i64,
    len: usize,
    out: *mut *mut LsFiber,
) -> LsStatus {
    guard(|| {
        check_out(out)?;
        let spec = &deref(problem)?.0;
        let b = lift(spec.degree_class(slice(degree, len)?))?;
        let fiber = lift(enumerate_fiber(&spec.lattice, b.representative()))?;
        *out = Box::into_raw(Box::new(LsFiber(fiber)));
        Ok(())
    })
}

/// # Safety
/// `fiber` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_fiber_free(fiber: *mut LsFiber) {
    if !fiber.is_null() {
        drop(Box::from_raw(fiber));
    }
}

/// # Safety
/// `fiber` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_fiber_len(fiber: *const LsFiber) -> usize {
    fiber.as_ref().map_or(0, |f| f.0.len())
}

/// Copies the exponent vector of monomial `index` into `out`, which holds
/// `len` entries; `len` must equal the number of variables.
///
/// # Safety
/// `out` must point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn ls_fiber_monomial(fiber: *const LsFiber, index: usize, out: *mut i64, len: usize) -> LsStatus {
    guard(|| {
        check_out(out)?;
        let f = &deref(fiber)?.0;
        let m = f
            .members
            .get(index)
            .ok_or_else(|| fail(LsStatus::OutOfRange, format!("index {index} in a fiber of size {}", f.len())))?;
        if m.len() != len {
            return Err(fail(
                LsStatus::OutOfRange,
                format!("buffer holds {len} entries, monomials have {}", m.len()),
            ));
        }
        std::slice::from_raw_parts_mut(out, len).copy_from_slice(m.exponents());
        Ok(())
    })
}

/// Betti numbers of every degree of weight at most `bound`. `prime` selects
/// GF(prime); 0 means the rationals.
///
/// # Safety
/// `problem` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ls_betti_new(
    problem: *const LsProblem,
    bound: i64,
    prime: u64,
    out: *mut *mut LsBettiTable,
) -> LsStatus {
    guard(|| {
        check_out(out)?;
        let spec = &deref(problem)?.0;
        check_bound(bound)?;
        let field = if prime == 0 { Field::Rational } else { lift(Field::prime(prime))? };
        let table = BettiTable::from_scan(&spec.lattice, &DegreeScan::new(&spec.lattice, bound), field);
        *out = Box::into_raw(Box::new(LsBettiTable(table)));
        Ok(())
    })
}

/// # Safety
/// `table` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_betti_free(table: *mut LsBettiTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Largest homological index with a nonzero entry.
///
/// # Safety
/// `table` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_betti_max_index(table: *const LsBettiTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.max_index())
}

/// Sum of β_{i,b} over all scanned degrees, for `i ≥ 1`; 0 out of range.
///
/// # Safety
/// `table` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_betti_total(table: *const LsBettiTable, i: usize) -> usize {
    table
        .as_ref()
        .and_then(|t| i.checked_sub(1).and_then(|k| t.0.totals().get(k).copied()))
        .unwrap_or(0)
}

/// β_{i,b} for the degree given as in [`ls_fiber_new`].
///
/// # Safety
/// Handles must be live, `degree` must point to `len` values, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ls_betti_value(
    problem: *const LsProblem,
    table: *const LsBettiTable,
    i: usize,
    degree: *const i64,
    len: usize,
    out: *mut usize,
) -> LsStatus {
    guard(|| {
        check_out(out)?;
        let spec = &deref(problem)?.0;
        let t = &deref(table)?.0;
        let b = lift(spec.degree_class(slice(degree, len)?))?;
        *out = t.value(&spec.lattice, i, &b);
        Ok(())
    })
}

/// The table as JSON. Free with [`ls_string_free`].
///
/// # Safety
/// Handles must be null or live.
#[no_mangle]
pub unsafe extern "C" fn ls_betti_to_json(problem: *const LsProblem, table: *const LsBettiTable) -> *mut c_char {
    match (problem.as_ref(), table.as_ref()) {
        (Some(p), Some(t)) => into_c_string(betti_json(&p.0, &t.0).to_string()),
        _ => ptr::null_mut(),
    }
}

/// Builds the complex of basic components up to `bound`. `mode` only
/// matters for [`LsComplexKind::Strong`].
///
/// # Safety
/// `problem` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ls_complex_new(
    problem: *const LsProblem,
    kind: LsComplexKind,
    mode: LsStrongMode,
    bound: i64,
    out: *mut *mut LsComplex,
) -> LsStatus {
    guard(|| {
        check_out(out)?;
        let spec = &deref(problem)?.0;
        check_bound(bound)?;
        let kind = match kind {
            LsComplexKind::Generalized => ComplexKind::Generalized,
            LsComplexKind::Scarf => ComplexKind::Scarf,
            LsComplexKind::Strong => ComplexKind::Strong,
        };
        let mode = match mode {
            LsStrongMode::Strict => StrongMode::Strict,
            LsStrongMode::Paper => StrongMode::Paper,
        };
        let x = lift(build_complex(spec, &DegreeScan::new(&spec.lattice, bound), kind, mode))?;
        *out = Box::into_raw(Box::new(LsComplex(x)));
        Ok(())
    })
}

/// # Safety
/// `complex` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_complex_free(complex: *mut LsComplex) {
    if !complex.is_null() {
        drop(Box::from_raw(complex));
    }
}

/// Top homological degree.
///
/// # Safety
/// `complex` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_complex_length(complex: *const LsComplex) -> usize {
    complex.as_ref().map_or(0, |x| x.0.length())
}

/// Number of basis elements in degree `i`; 0 out of range.
///
/// # Safety
/// `complex` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_complex_rank(complex: *const LsComplex, i: usize) -> usize {
    complex
        .as_ref()
        .and_then(|x| x.0.ranks().get(i).copied())
        .unwrap_or(0)
}

/// Whether consecutive differentials compose to zero.
///
/// # Safety
/// `complex` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_complex_squares_to_zero(complex: *const LsComplex) -> bool {
    complex.as_ref().is_some_and(|x| verify_zero_composition(&x.0))
}

/// The complex as JSON. Free with [`ls_string_free`].
///
/// # Safety
/// Handles must be null or live.
#[no_mangle]
pub unsafe extern "C" fn ls_complex_to_json(problem: *const LsProblem, complex: *const LsComplex) -> *mut c_char {
    match (problem.as_ref(), complex.as_ref()) {
        (Some(p), Some(x)) => into_c_string(complex_json(&p.0, &x.0).to_string()),
        _ => ptr::null_mut(),
    }
}
