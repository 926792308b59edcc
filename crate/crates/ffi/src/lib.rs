//! C ABI for `avecond`.
//!
//! Every entry point returns an [`AvecondStatus`]. On failure a message is
//! stored per thread and copied out with [`avecond_last_error`]. Matrices
//! cross the boundary as opaque [`AvecondMatrix`] handles built from
//! row-major data; vectors are caller-owned `double` arrays whose length is
//! the matrix dimension.

use std::cell::RefCell;
use std::ffi::{c_char, c_int};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::{ptr, slice};

use avecond::cond::{self, CondKind, CondResult};
use avecond::lcp::{self, LcpProblem};
use avecond::regularity::{self, Verdict};
use avecond::{ave, certify, AveProblem, Error, Matrix, NormSpec, PNorm};

/// Opaque square or rectangular matrix.
pub struct AvecondMatrix(Matrix);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AvecondStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DimensionMismatch = 3,
    DimensionTooLarge = 4,
    Singular = 5,
    /// `[A - I, A + I]` contains a singular matrix.
    NotRegular = 6,
    /// Preconditions of the requested formula do not hold.
    NotApplicable = 7,
    NoSolution = 8,
    MultipleSolutions = 9,
    NoConvergence = 10,
    /// Other mathematical verdicts: eigenvalue 1, not a P-matrix, zero
    /// right-hand side, route disagreement.
    Domain = 11,
    Panic = 12,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AvecondNorm {
    One = 1,
    Two = 2,
    Inf = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AvecondKind {
    Exact = 0,
    UpperBound = 1,
    LowerBound = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> AvecondStatus {
    match e {
        Error::SingularMatrix { .. } => AvecondStatus::Singular,
        Error::DimensionMismatch(_) => AvecondStatus::DimensionMismatch,
        Error::InvalidArgument(_) | Error::Parse { .. } | Error::Io(_) => AvecondStatus::InvalidArgument,
        Error::DimensionTooLarge { .. } => AvecondStatus::DimensionTooLarge,
        Error::NoConvergence { .. } => AvecondStatus::NoConvergence,
        Error::NotRegular { .. } => AvecondStatus::NotRegular,
        Error::NotApplicable { .. } | Error::NotSymmetric { .. } => AvecondStatus::NotApplicable,
        Error::NoSolution { .. } => AvecondStatus::NoSolution,
        Error::MultipleSolutions { .. } => AvecondStatus::MultipleSolutions,
        Error::ZeroRightHandSide
        | Error::OneIsEigenvalue { .. }
        | Error::NotPMatrix
        | Error::IdentityMismatch { .. } => AvecondStatus::Domain,
    }
}

struct Fail(AvecondStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(AvecondStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, records any failure and turns panics into `Panic`.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> AvecondStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            AvecondStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            AvecondStatus::Panic
        }
    }
}

unsafe fn matrix_ref<'a>(m: *const AvecondMatrix, what: &str) -> Result<&'a Matrix, Fail> {
    m.as_ref().map(|h| &h.0).ok_or_else(|| null(what))
}

unsafe fn input<'a>(p: *const f64, len: usize, what: &str) -> Result<&'a [f64], Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts(p, len))
}

unsafe fn output<'a, T>(p: *mut T, len: usize, what: &str) -> Result<&'a mut [T], Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts_mut(p, len))
}

unsafe fn write<T>(p: *mut T, v: T) {
    if !p.is_null() {
        *p = v;
    }
}

unsafe fn norm_spec(norm: AvecondNorm, scaling: *const f64, n: usize) -> Result<NormSpec, Fail> {
    let p = match norm {
        AvecondNorm::One => PNorm::One,
        AvecondNorm::Two => PNorm::Two,
        AvecondNorm::Inf => PNorm::Inf,
    };
    if scaling.is_null() {
        return Ok(NormSpec::plain(p));
    }
    Ok(NormSpec::scaled(p, slice::from_raw_parts(scaling, n).to_vec())?)
}

fn square(m: &Matrix) -> Result<usize, Fail> {
    Ok(m.square_dim("avecond")?)
}

unsafe fn publish(r: &CondResult, value: *mut f64, kind: *mut AvecondKind, witness: *mut i8) -> Result<(), Fail> {
    write(value, r.value());
    write(
        kind,
        match r.kind {
            CondKind::Exact => AvecondKind::Exact,
            CondKind::UpperBound => AvecondKind::UpperBound,
            _ => AvecondKind::LowerBound,
        },
    );
    if let (false, Some(w)) = (witness.is_null(), &r.witness) {
        output(witness, w.len(), "witness")?.copy_from_slice(w);
    }
    Ok(())
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `len - 1` bytes) and returns the full message length.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn avecond_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn avecond_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a `rows x cols` matrix from row-major `data`.
///
/// # Safety
/// `data` must point to `rows * cols` readable doubles; `out` must be
/// writable. Release the handle with [`avecond_matrix_free`].
#[no_mangle]
pub unsafe extern "C" fn avecond_matrix_new(
    rows: usize,
    cols: usize,
    data: *const f64,
    out: *mut *mut AvecondMatrix,
) -> AvecondStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let len = rows
            .checked_mul(cols)
            .ok_or_else(|| Fail(AvecondStatus::InvalidArgument, "rows * cols overflows".into()))?;
        let m = Matrix::new(rows, cols, input(data, len, "data")?.to_vec())?;
        *out = Box::into_raw(Box::new(AvecondMatrix(m)));
        Ok(())
    })
}

/// # Safety
/// `m` must be null or a handle from this library that is not used again.
#[no_mangle]
pub unsafe extern "C" fn avecond_matrix_free(m: *mut AvecondMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a valid handle; `rows` and `cols` may be null.
#[no_mangle]
pub unsafe extern "C" fn avecond_matrix_shape(m: *const AvecondMatrix, rows: *mut usize, cols: *mut usize) -> AvecondStatus {
    guard(|| {
        let a = matrix_ref(m, "matrix")?;
        write(rows, a.rows());
        write(cols, a.cols());
        Ok(())
    })
}

/// Copies the entries in row-major order into `out` (`rows * cols` doubles).
///
/// # Safety
/// `m` must be a valid handle and `out` must have room for every entry.
#[no_mangle]
pub unsafe extern "C" fn avecond_matrix_data(m: *const AvecondMatrix, out: *mut f64) -> AvecondStatus {
    guard(|| {
        let a = matrix_ref(m, "matrix")?;
        output(out, a.as_slice().len(), "out")?.copy_from_slice(a.as_slice());
        Ok(())
    })
}

/// Exact `c(A)` by vertex enumeration (`n <= 20`). `scaling` is null for a
/// plain norm or points to `n` positive weights. `witness` may be null or
/// receive `n` signs.
///
/// # Safety
/// Pointers must be null (where allowed) or valid for the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn avecond_cond_exact(
    a: *const AvecondMatrix,
    norm: AvecondNorm,
    scaling: *const f64,
    value: *mut f64,
    witness: *mut i8,
) -> AvecondStatus {
    guard(|| {
        let a = matrix_ref(a, "a")?;
        let ns = norm_spec(norm, scaling, square(a)?)?;
        let r = cond::cond_exact(a, &ns)?;
        publish(&r, value, ptr::null_mut(), witness)
    })
}

/// Automatic method selection: exact closed form, then enumeration for
/// `n <= enum_threshold`, then the smallest applicable upper bound.
///
/// # Safety
/// As for [`avecond_cond_exact`]; `kind` may be null.
#[no_mangle]
pub unsafe extern "C" fn avecond_cond_auto(
    a: *const AvecondMatrix,
    norm: AvecondNorm,
    scaling: *const f64,
    enum_threshold: usize,
    value: *mut f64,
    kind: *mut AvecondKind,
    witness: *mut i8,
) -> AvecondStatus {
    guard(|| {
        let a = matrix_ref(a, "a")?;
        let ns = norm_spec(norm, scaling, square(a)?)?;
        let r = cond::cond_auto(a, &ns, enum_threshold)?;
        publish(&r, value, kind, witness)
    })
}

/// Exact regularity test. `regular` receives 1 or 0; when 0 and `witness`
/// is not null, the offending sign vector is written there (`n` entries).
/// A singular interval matrix is a verdict, not an error: the status is `Ok`.
///
/// # Safety
/// `a` must be valid, `regular` writable, `witness` null or `n` long.
#[no_mangle]
pub unsafe extern "C" fn avecond_regularity(
    a: *const AvecondMatrix,
    regular: *mut c_int,
    witness: *mut i8,
) -> AvecondStatus {
    guard(|| {
        let a = matrix_ref(a, "a")?;
        square(a)?;
        if regular.is_null() {
            return Err(null("regular"));
        }
        let r = regularity::regularity_exact(a)?;
        *regular = c_int::from(r.verdict == Verdict::Regular);
        if let (false, Some(w)) = (witness.is_null(), &r.witness) {
            output(witness, w.len(), "witness")?.copy_from_slice(w);
        }
        Ok(())
    })
}

/// Unique solution of `Ax - b = |x|` by sign enumeration, written to `x`.
///
/// # Safety
/// `b` and `x` must hold `n` doubles.
#[no_mangle]
pub unsafe extern "C" fn avecond_solve(a: *const AvecondMatrix, b: *const f64, x: *mut f64) -> AvecondStatus {
    guard(|| {
        let a = matrix_ref(a, "a")?;
        let n = square(a)?;
        let p = AveProblem::new(a.clone(), input(b, n, "b")?.to_vec())?;
        let s = ave::solve_exact(&p)?;
        output(x, n, "x")?.copy_from_slice(&s.x_star);
        Ok(())
    })
}

/// `||x - x*|| <= c(A) ||Ax - b - |x|||` with the exact `c(A)`.
/// `abs_bound` and `residual_norm` may be null.
///
/// # Safety
/// `b` and `x` must hold `n` doubles; `scaling` null or `n` long.
#[no_mangle]
pub unsafe extern "C" fn avecond_certify_abs(
    a: *const AvecondMatrix,
    b: *const f64,
    x: *const f64,
    norm: AvecondNorm,
    scaling: *const f64,
    abs_bound: *mut f64,
    residual_norm: *mut f64,
) -> AvecondStatus {
    guard(|| {
        let a = matrix_ref(a, "a")?;
        let n = square(a)?;
        let ns = norm_spec(norm, scaling, n)?;
        let p = AveProblem::new(a.clone(), input(b, n, "b")?.to_vec())?;
        let c = cond::cond_exact(a, &ns)?;
        let r = certify::certify_abs(&p, input(x, n, "x")?, &ns, &c)?;
        write(abs_bound, r.abs_bound);
        write(residual_norm, r.residual_norm);
        Ok(())
    })
}

/// Transforms the LCP `(M, q)` to `Ax - b = |x|`. `a_out` receives a new
/// handle (free it with [`avecond_matrix_free`]); `b_out` receives `n` doubles.
///
/// # Safety
/// `q` and `b_out` must hold `n` doubles; `a_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn avecond_lcp_to_ave(
    m: *const AvecondMatrix,
    q: *const f64,
    a_out: *mut *mut AvecondMatrix,
    b_out: *mut f64,
) -> AvecondStatus {
    guard(|| {
        let m = matrix_ref(m, "m")?;
        let n = square(m)?;
        if a_out.is_null() {
            return Err(null("a_out"));
        }
        let lp = LcpProblem::new(m.clone(), input(q, n, "q")?.to_vec())?;
        let p = lcp::lcp_to_ave(&lp)?;
        output(b_out, n, "b_out")?.copy_from_slice(&p.b);
        *a_out = Box::into_raw(Box::new(AvecondMatrix(p.a)));
        Ok(())
    })
}
