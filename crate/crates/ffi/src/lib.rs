//! C ABI. Every call returns a [`SignedHomStatus`]; on failure the message is
//! available from [`signed_hom_last_error`] on the same thread. Strings handed
//! out by the library are freed with [`signed_hom_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use signed_hom::combinatorics::{Bicomposition, NumericTableau, Partition};
use signed_hom::exact_linalg::{hom_dim_with, FieldSpec};
use signed_hom::hom_builder::{stacked_rank, HomContext};
use signed_hom::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignedHomStatus {
    Ok = 0,
    NullArgument = 1,
    Parse = 2,
    Invalid = 3,
    NotInR = 4,
    TooLarge = 5,
    Panic = 6,
}

/// Opaque handle: shape, type, initial tableau and the distinguished transversal.
pub struct SignedHomContext {
    inner: HomContext,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let clean = msg.replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(clean).expect("no interior nul"));
}

fn status_of(e: &Error) -> SignedHomStatus {
    match e {
        Error::Parse { .. } => SignedHomStatus::Parse,
        Error::NotInR(_) => SignedHomStatus::NotInR,
        Error::SizeBound { .. } => SignedHomStatus::TooLarge,
        _ => SignedHomStatus::Invalid,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guarded(f: impl FnOnce() -> Result<(), (SignedHomStatus, String)>) -> SignedHomStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SignedHomStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SignedHomStatus::Panic
        }
    }
}

fn lib(e: Error) -> (SignedHomStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (SignedHomStatus, String) {
    (SignedHomStatus::NullArgument, format!("{what} is null"))
}

/// # Safety
/// `s` is null or a valid nul-terminated string.
unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (SignedHomStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (SignedHomStatus::Parse, format!("{what} is not UTF-8")))
}

/// # Safety
/// `ctx` is null or a handle from [`signed_hom_context_new`].
unsafe fn read_ctx<'a>(ctx: *const SignedHomContext) -> Result<&'a HomContext, (SignedHomStatus, String)> {
    ctx.as_ref().map(|c| &c.inner).ok_or_else(|| null("context"))
}

fn field_of(p: u64) -> Result<FieldSpec, (SignedHomStatus, String)> {
    if p == 0 {
        Ok(FieldSpec::Rationals)
    } else {
        FieldSpec::prime(p).map_err(lib)
    }
}

fn write_out<T>(out: *mut T, v: T) -> Result<(), (SignedHomStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    // SAFETY: checked non-null; the caller provides writable storage
    unsafe { out.write(v) };
    Ok(())
}

/// Builds a context from `shape` ("3,2,1"), `kind` ("2|2,1") and an optional
/// initial tableau `t0` ("1,7/2/3/4/5/6", or null for the row reading).
///
/// # Safety
/// String arguments are null or valid nul-terminated strings; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn signed_hom_context_new(
    shape: *const c_char,
    kind: *const c_char,
    t0: *const c_char,
    out: *mut *mut SignedHomContext,
) -> SignedHomStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let shape: Partition = read_str(shape, "shape")?.parse().map_err(lib)?;
        let kind: Bicomposition = read_str(kind, "type")?.parse().map_err(lib)?;
        if shape.n() != kind.n() {
            return Err(lib(Error::SizeMismatch {
                shape: shape.n(),
                kind: kind.n(),
            }));
        }
        let inner = if t0.is_null() {
            HomContext::new(&shape, &kind)
        } else {
            let t = NumericTableau::parse(read_str(t0, "t0")?).map_err(lib)?;
            HomContext::with_t0(&shape, &kind, t)
        }
        .map_err(lib)?;
        write_out(out, Box::into_raw(Box::new(SignedHomContext { inner })))
    })
}

/// # Safety
/// `ctx` is null or a handle from [`signed_hom_context_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn signed_hom_context_free(ctx: *mut SignedHomContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Size of the transversal, i.e. the rank of the signed permutation module.
///
/// # Safety
/// `ctx` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn signed_hom_gamma_len(ctx: *const SignedHomContext, out: *mut usize) -> SignedHomStatus {
    guarded(|| write_out(out, read_ctx(ctx)?.gamma().len()))
}

/// Number of standard tableaux of the shape.
///
/// # Safety
/// `ctx` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn signed_hom_standard_count(ctx: *const SignedHomContext, out: *mut usize) -> SignedHomStatus {
    guarded(|| write_out(out, read_ctx(ctx)?.basis().dim()))
}

/// Number of semistandard tableaux of the type.
///
/// # Safety
/// `ctx` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn signed_hom_sstd_count(ctx: *const SignedHomContext, out: *mut usize) -> SignedHomStatus {
    guarded(|| write_out(out, read_ctx(ctx)?.gamma_sstd_indices().len()))
}

/// Matrix of the homomorphism for `rep` (index into the transversal, image
/// list or cycles) as JSON. Free the result with [`signed_hom_string_free`].
///
/// # Safety
/// `ctx` is a live handle; `rep` is a valid string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn signed_hom_theta_json(
    ctx: *const SignedHomContext,
    rep: *const c_char,
    out: *mut *mut c_char,
) -> SignedHomStatus {
    guarded(|| {
        let ctx = read_ctx(ctx)?;
        let rep = ctx.resolve_rep(read_str(rep, "rep")?).map_err(lib)?;
        let m = ctx.theta_matrix(&rep).map_err(lib)?;
        let s = serde_json::to_string(&m).expect("serializable");
        let c = CString::new(s).expect("JSON has no nul");
        write_out(out, c.into_raw())
    })
}

/// Rank of the stacked semistandard matrices over `F_p`, or over `Q` when `p = 0`.
///
/// # Safety
/// `ctx` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn signed_hom_sstd_rank(ctx: *const SignedHomContext, p: u64, out: *mut usize) -> SignedHomStatus {
    guarded(|| {
        let ctx = read_ctx(ctx)?;
        let field = field_of(p)?;
        let thetas = ctx.theta_sstd().map_err(lib)?;
        write_out(out, stacked_rank(&thetas, field))
    })
}

/// Dimension of the Hom space over `F_p`, or over `Q` when `p = 0`.
///
/// # Safety
/// `ctx` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn signed_hom_hom_dim(ctx: *const SignedHomContext, p: u64, out: *mut usize) -> SignedHomStatus {
    guarded(|| {
        let ctx = read_ctx(ctx)?;
        let field = field_of(p)?;
        let bound = signed_hom::exact_linalg::HOM_DIM_GAMMA_BOUND;
        if ctx.gamma().len() > bound {
            return Err(lib(Error::SizeBound {
                what: "|Γ|",
                value: ctx.gamma().len(),
                bound,
            }));
        }
        let sg = ctx.basis().generator_matrices();
        let mg = ctx.signed_module().generator_matrices();
        write_out(out, hom_dim_with(&sg, &mg, field))
    })
}

/// # Safety
/// `s` is null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn signed_hom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn signed_hom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
