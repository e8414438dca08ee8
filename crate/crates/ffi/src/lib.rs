//! C ABI for brauer-type. Groups and algebras are opaque handles; every call
//! returns a `BtStatus` and the message of the last failure on the calling
//! thread is available from `bt_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use brauer_type::algebra::{check_star, Algebra, BrauerTypeAlgebra, EngineError, ParamSet, ParamValues};
use brauer_type::cli;
use brauer_type::exactnum::{is_prime, ModP};
use brauer_type::refgroups::{parse_group_spec, GroupError, ReflectionGroup};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    BadGroup = 3,
    Unsupported = 4,
    InvalidArgument = 5,
    Panic = 6,
}

/// A finite reflection group.
pub struct BtGroup(ReflectionGroup);

/// A Brauer-type algebra over Z/p with mu = 1 and tau specialized.
pub struct BtAlgebra(BrauerTypeAlgebra<ModP>);

#[derive(Debug, thiserror::Error)]
enum FfiError {
    #[error("null pointer argument")]
    Null,
    #[error("string is not UTF-8")]
    Utf8,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("{0}")]
    Argument(String),
}

impl FfiError {
    fn status(&self) -> BtStatus {
        match self {
            FfiError::Null => BtStatus::NullPointer,
            FfiError::Utf8 => BtStatus::InvalidUtf8,
            FfiError::Group(_) => BtStatus::BadGroup,
            FfiError::Engine(_) => BtStatus::Unsupported,
            FfiError::Argument(_) => BtStatus::InvalidArgument,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), FfiError>) -> BtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BtStatus::Ok,
        Ok(Err(e)) => {
            set_error(e.to_string());
            e.status()
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(msg);
            BtStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, FfiError> {
    if s.is_null() {
        return Err(FfiError::Null);
    }
    CStr::from_ptr(s).to_str().map_err(|_| FfiError::Utf8)
}

unsafe fn handle<'a, T>(h: *const T) -> Result<&'a T, FfiError> {
    h.as_ref().ok_or(FfiError::Null)
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), FfiError> {
    if out.is_null() {
        return Err(FfiError::Null);
    }
    out.write(v);
    Ok(())
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parse a group spec such as "dihedral:5", "h3", "a:4" or "g:2,1,3".
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bt_group_parse(spec: *const c_char, out: *mut *mut BtGroup) -> BtStatus {
    guard(|| {
        let spec = str_arg(spec)?;
        if out.is_null() {
            return Err(FfiError::Null);
        }
        let g = parse_group_spec(spec)?;
        write_out(out, Box::into_raw(Box::new(BtGroup(g))))
    })
}

/// # Safety
/// `g` must come from `bt_group_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bt_group_free(g: *mut BtGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bt_group_order(g: *const BtGroup, out: *mut usize) -> BtStatus {
    guard(|| write_out(out, handle(g)?.0.order()))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bt_group_rank(g: *const BtGroup, out: *mut usize) -> BtStatus {
    guard(|| write_out(out, handle(g)?.0.rank()))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bt_group_hyperplanes(g: *const BtGroup, out: *mut usize) -> BtStatus {
    guard(|| write_out(out, handle(g)?.0.num_hyperplanes()))
}

/// Build the algebra of `g` over Z/`prime` with every mu = 1 and every tau
/// equal to `tau`. `prime` must be an odd prime below 2^62.
///
/// # Safety
/// `g` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bt_algebra_new(g: *const BtGroup, tau: u64, prime: u64, out: *mut *mut BtAlgebra) -> BtStatus {
    guard(|| {
        let g = &handle(g)?.0;
        if out.is_null() {
            return Err(FfiError::Null);
        }
        if prime <= 2 || prime >= 1 << 62 || !is_prime(prime) {
            return Err(FfiError::Argument(format!("{} is not an odd prime below 2^62", prime)));
        }
        let params = ParamSet::unit_mu(g);
        let vals: ParamValues<u64> = params.vars().names().iter().map(|n| (n.clone(), tau % prime)).collect();
        let alg = BrauerTypeAlgebra::new(g, &params, ModP::new(prime), &vals)?;
        write_out(out, Box::into_raw(Box::new(BtAlgebra(alg))))
    })
}

/// # Safety
/// `a` must come from `bt_algebra_new` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bt_algebra_free(a: *mut BtAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bt_algebra_dim(a: *const BtAlgebra, out: *mut usize) -> BtStatus {
    guard(|| write_out(out, handle(a)?.0.dim()))
}

/// Whether every defining relation holds on the full basis.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bt_algebra_relations_hold(a: *const BtAlgebra, out: *mut bool) -> BtStatus {
    guard(|| {
        let report = handle(a)?.0.relation_soundness()?;
        write_out(out, report.passed())
    })
}

/// Whether the star map is an involutive anti-automorphism of the table.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bt_algebra_star_holds(a: *const BtAlgebra, out: *mut bool) -> BtStatus {
    guard(|| write_out(out, check_star(&handle(a)?.0, None).passed()))
}

/// Run the command-line tool in-process. `argv` excludes the program name.
/// On return `*out_json` holds the report (free it with `bt_string_free`)
/// and `*exit_code` the code the binary would exit with.
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings; outputs must be valid.
#[no_mangle]
pub unsafe extern "C" fn bt_cli_run(
    argv: *const *const c_char,
    argc: usize,
    out_json: *mut *mut c_char,
    exit_code: *mut i32,
) -> BtStatus {
    guard(|| {
        if out_json.is_null() || exit_code.is_null() || (argv.is_null() && argc > 0) {
            return Err(FfiError::Null);
        }
        let mut args = vec!["brauer-type".to_string()];
        for k in 0..argc {
            args.push(str_arg(*argv.add(k))?.to_string());
        }
        let outcome = cli::run(args);
        let json = CString::new(outcome.output.replace('\0', " ")).unwrap_or_default();
        write_out(out_json, json.into_raw())?;
        write_out(exit_code, outcome.code)
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
