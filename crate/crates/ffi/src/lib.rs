//! C ABI for `ordlen`.
//!
//! Objects cross the boundary as opaque handles that must be released with
//! the matching `*_free` function. Every fallible call returns an
//! [`OrdlenStatus`] and writes its result through an out-pointer; on failure
//! [`ordlen_last_error`] describes what went wrong on the calling thread.
//! Strings returned by the library are released with [`ordlen_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ordlen::length::{fundamental_cycle, is_open, length_of, Subquotient};
use ordlen::monomial::{MonomialIdeal, Ring};
use ordlen::ordinal::Ordinal;
use ordlen::Error;

/// Result codes shared by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrdlenStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Overflow = 5,
    Internal = 6,
}

/// An ordinal below `w^w`.
pub struct OrdlenOrdinal(Ordinal);

/// A polynomial ring given by its variable names.
pub struct OrdlenRing(Ring);

/// A monomial subquotient `I/J` together with its ring.
pub struct OrdlenModule {
    ring: Ring,
    module: Subquotient,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(OrdlenStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Syntax { .. } | Error::UnknownVariable(_) => OrdlenStatus::Parse,
            Error::Overflow(_) => OrdlenStatus::Overflow,
            Error::Internal(_) => OrdlenStatus::Internal,
            _ => OrdlenStatus::Domain,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(OrdlenStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, turning errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> OrdlenStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OrdlenStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("panic inside ordlen".into());
            OrdlenStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        Failure(
            OrdlenStatus::InvalidUtf8,
            format!("{what} is not valid UTF-8"),
        )
    })
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(OrdlenStatus::Internal, "string contains a nul byte".into()))
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ordlen_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ordlen_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn ordlen_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses text such as `"3*w^2 + 9*w + 7"`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordlen_ordinal_parse(
    text: *const c_char,
    out: *mut *mut OrdlenOrdinal,
) -> OrdlenStatus {
    guard(|| {
        let a: Ordinal = read_str(text, "text")?.parse()?;
        write_out(out, Box::into_raw(Box::new(OrdlenOrdinal(a))))
    })
}

/// # Safety
/// `a` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ordlen_ordinal_free(a: *mut OrdlenOrdinal) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` must be a live handle; `out` must be writable. Free the result with
/// [`ordlen_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ordlen_ordinal_to_string(
    a: *const OrdlenOrdinal,
    out: *mut *mut c_char,
) -> OrdlenStatus {
    guard(|| {
        let a = borrow(a, "ordinal")?;
        write_out(out, owned_string(a.0.to_string())?)
    })
}

unsafe fn binary(
    a: *const OrdlenOrdinal,
    b: *const OrdlenOrdinal,
    out: *mut *mut OrdlenOrdinal,
    op: fn(&Ordinal, &Ordinal) -> ordlen::Result<Ordinal>,
) -> OrdlenStatus {
    guard(|| {
        let (a, b) = (borrow(a, "left operand")?, borrow(b, "right operand")?);
        let c = op(&a.0, &b.0)?;
        write_out(out, Box::into_raw(Box::new(OrdlenOrdinal(c))))
    })
}

/// Ordinal (non-commutative) sum `a + b`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordlen_ordinal_sum(
    a: *const OrdlenOrdinal,
    b: *const OrdlenOrdinal,
    out: *mut *mut OrdlenOrdinal,
) -> OrdlenStatus {
    binary(a, b, out, Ordinal::ord_sum)
}

/// Shuffle (natural) sum `a # b`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordlen_ordinal_shuffle_sum(
    a: *const OrdlenOrdinal,
    b: *const OrdlenOrdinal,
    out: *mut *mut OrdlenOrdinal,
) -> OrdlenStatus {
    binary(a, b, out, Ordinal::shuffle_sum)
}

/// Writes -1, 0 or 1 as `a` is less than, equal to or greater than `b`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordlen_ordinal_compare(
    a: *const OrdlenOrdinal,
    b: *const OrdlenOrdinal,
    out: *mut i32,
) -> OrdlenStatus {
    guard(|| {
        let (a, b) = (borrow(a, "left operand")?, borrow(b, "right operand")?);
        write_out(out, a.0.cmp(&b.0) as i32)
    })
}

/// Largest exponent, or -1 for zero.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordlen_ordinal_degree(
    a: *const OrdlenOrdinal,
    out: *mut i64,
) -> OrdlenStatus {
    guard(|| {
        let a = borrow(a, "ordinal")?;
        let d = match a.0.degree() {
            None => -1,
            Some(d) => i64::try_from(d)
                .map_err(|_| Failure(OrdlenStatus::Overflow, "degree exceeds i64".into()))?,
        };
        write_out(out, d)
    })
}

/// Sum of the Cantor coefficients.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordlen_ordinal_valence(
    a: *const OrdlenOrdinal,
    out: *mut u64,
) -> OrdlenStatus {
    guard(|| {
        let a = borrow(a, "ordinal")?;
        write_out(out, a.0.checked_valence()?)
    })
}

/// Cantor coefficient of `w^exp`.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordlen_ordinal_coefficient(
    a: *const OrdlenOrdinal,
    exp: u64,
    out: *mut u64,
) -> OrdlenStatus {
    guard(|| {
        let a = borrow(a, "ordinal")?;
        write_out(out, a.0.coefficient(exp))
    })
}

/// A ring from comma-separated variable names, e.g. `"x,y,z"`.
///
/// # Safety
/// `vars` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordlen_ring_new(
    vars: *const c_char,
    out: *mut *mut OrdlenRing,
) -> OrdlenStatus {
    guard(|| {
        let ring = Ring::parse_vars(read_str(vars, "vars")?)?;
        write_out(out, Box::into_raw(Box::new(OrdlenRing(ring))))
    })
}

/// # Safety
/// `r` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ordlen_ring_free(r: *mut OrdlenRing) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// The module `upper / lower`; a null `upper` means the whole ring.
///
/// # Safety
/// `ring` must be a live handle, `lower` a nul-terminated string, `upper`
/// null or nul-terminated, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ordlen_module_new(
    ring: *const OrdlenRing,
    lower: *const c_char,
    upper: *const c_char,
    out: *mut *mut OrdlenModule,
) -> OrdlenStatus {
    guard(|| {
        let ring = &borrow(ring, "ring")?.0;
        let j = ring.parse_ideal(read_str(lower, "lower ideal")?)?;
        let i = if upper.is_null() {
            MonomialIdeal::unit(ring.nvars())
        } else {
            ring.parse_ideal(read_str(upper, "upper ideal")?)?
        };
        let module = Subquotient::new(i, j)?;
        write_out(
            out,
            Box::into_raw(Box::new(OrdlenModule {
                ring: ring.clone(),
                module,
            })),
        )
    })
}

/// # Safety
/// `m` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ordlen_module_free(m: *mut OrdlenModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Ordinal length of the module.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ordlen_module_length(
    m: *const OrdlenModule,
    out: *mut *mut OrdlenOrdinal,
) -> OrdlenStatus {
    guard(|| {
        let m = borrow(m, "module")?;
        let len = length_of(&m.module)?;
        write_out(out, Box::into_raw(Box::new(OrdlenOrdinal(len))))
    })
}

/// Fundamental cycle and length as JSON:
/// `{"cycle":[{"prime":["x","y"],"mult":5}],"length":{"terms":[...]},"pretty":"..."}`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable. Free the result with
/// [`ordlen_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ordlen_module_cycle_json(
    m: *const OrdlenModule,
    out: *mut *mut c_char,
) -> OrdlenStatus {
    guard(|| {
        let m = borrow(m, "module")?;
        let cycle = fundamental_cycle(&m.module)?;
        let len = cycle.to_ordinal()?;
        let entries: Vec<serde_json::Value> = cycle
            .iter()
            .map(|(p, &mult)| serde_json::json!({ "prime": m.ring.prime_names(p), "mult": mult }))
            .collect();
        let doc = serde_json::json!({
            "cycle": entries,
            "length": len,
            "pretty": len.to_string(),
        });
        write_out(out, owned_string(doc.to_string())?)
    })
}

/// Whether the submodule generated by the monomials in `sub` is open.
///
/// # Safety
/// `m` must be a live handle, `sub` nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ordlen_module_is_open(
    m: *const OrdlenModule,
    sub: *const c_char,
    out: *mut bool,
) -> OrdlenStatus {
    guard(|| {
        let m = borrow(m, "module")?;
        let gens = m.ring.parse_ideal(read_str(sub, "submodule generators")?)?;
        write_out(out, is_open(gens.generators(), &m.module)?)
    })
}
