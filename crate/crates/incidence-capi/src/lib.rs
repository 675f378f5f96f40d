//! C bindings for the incidence cohomology library.
//!
//! Conventions:
//! - Handles (`IncOracle`, `IncTable`, `IncCharacter`) are opaque; create
//!   them with the `*_new` constructors or receive them from queries, and
//!   release them with the matching `*_free`. Freeing null is a no-op.
//! - Every fallible call returns an [`IncStatus`]; outputs go through
//!   pointer parameters that are written only on `INC_STATUS_OK`.
//! - Strings returned through `char**` are UTF-8, allocated by this
//!   library, and must be released with [`inc_string_free`].
//! - On failure, [`inc_last_error_message`] returns a thread-local
//!   description of the most recent error on the calling thread.
//! - Panics never unwind across the boundary; they become
//!   `INC_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use incidence::characters::CharacterTable;
use incidence::oracle::Oracle;
use incidence::{Character, Error};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IncStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    Utf8 = 2,
    /// Operands live in character rings of different ranks.
    RankMismatch = 3,
    /// The characteristic must be prime.
    NotPrime = 4,
    /// Frobenius twists must be prime powers (or 1).
    NotPrimePower = 5,
    /// An argument was outside the documented domain.
    Domain = 6,
    /// The zero character has no highest weight.
    ZeroCharacter = 7,
    /// Malformed serialized input.
    Parse = 8,
    /// Output could not be written.
    Io = 9,
    /// Internal invariant violation; report as a bug.
    Internal = 10,
    /// A panic was caught at the boundary.
    Panic = 11,
}

/// Opaque handle to a kernel/cokernel rank oracle.
pub struct IncOracle(Oracle);

/// Opaque handle to the memoized character recursion for n = 3.
pub struct IncTable(CharacterTable);

/// Opaque handle to a character (sparse Laurent polynomial value).
pub struct IncCharacter(Character);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> IncStatus {
    match err {
        Error::RankMismatch { .. } => IncStatus::RankMismatch,
        Error::NotPrime(_) => IncStatus::NotPrime,
        Error::NotPrimePower(_) => IncStatus::NotPrimePower,
        Error::Domain(_) => IncStatus::Domain,
        Error::ZeroCharacter => IncStatus::ZeroCharacter,
        Error::Parse(_) => IncStatus::Parse,
        Error::Io(_) => IncStatus::Io,
        Error::Internal(_) => IncStatus::Internal,
    }
}

fn fail(status: IncStatus, msg: impl Into<String>) -> IncStatus {
    set_error(msg.into());
    status
}

fn fail_err(err: &Error) -> IncStatus {
    fail(status_of(err), err.to_string())
}

/// Runs `body` with panics converted to `INC_STATUS_PANIC`.
fn guarded(body: impl FnOnce() -> IncStatus) -> IncStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic across the C boundary".into());
            fail(IncStatus::Panic, msg)
        }
    }
}

/// Checks a required pointer, reading nothing.
macro_rules! require {
    ($ptr:expr) => {
        if $ptr.is_null() {
            return fail(IncStatus::NullPointer, concat!(stringify!($ptr), " is null"));
        }
    };
}

unsafe fn write_character(out: *mut *mut IncCharacter, c: Character) -> IncStatus {
    *out = Box::into_raw(Box::new(IncCharacter(c)));
    IncStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> IncStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            IncStatus::Ok
        }
        Err(_) => fail(IncStatus::Internal, "interior NUL in output string"),
    }
}

/// Returns the library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn inc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the most recent error on this thread, or null if none.
///
/// The pointer stays valid until the next failing call on the same
/// thread; do not free it.
#[no_mangle]
pub extern "C" fn inc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |c| c.as_ptr())
    })
}

/// Releases a string allocated by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed before; null
/// is allowed.
#[no_mangle]
pub unsafe extern "C" fn inc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a rank oracle for `n >= 2` and prime `p`.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn inc_oracle_new(n: usize, p: u64, out: *mut *mut IncOracle) -> IncStatus {
    guarded(|| {
        require!(out);
        match Oracle::new(n, p) {
            Ok(oracle) => {
                *out = Box::into_raw(Box::new(IncOracle(oracle)));
                IncStatus::Ok
            }
            Err(err) => fail_err(&err),
        }
    })
}

/// Releases an oracle handle; null is a no-op.
///
/// # Safety
/// `oracle` must come from [`inc_oracle_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn inc_oracle_free(oracle: *mut IncOracle) {
    if !oracle.is_null() {
        drop(Box::from_raw(oracle));
    }
}

/// Cohomology dimensions of `D^d R(e)`: writes `h0` and `h1`.
///
/// # Safety
/// `oracle`, `h0`, and `h1` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn inc_oracle_h_dims(
    oracle: *const IncOracle,
    d: i64,
    e: i64,
    h0: *mut u64,
    h1: *mut u64,
) -> IncStatus {
    guarded(|| {
        require!(oracle);
        require!(h0);
        require!(h1);
        match (*oracle).0.h_dims(d, e) {
            Ok((a, b)) => {
                *h0 = a;
                *h1 = b;
                IncStatus::Ok
            }
            Err(err) => fail_err(&err),
        }
    })
}

/// Cohomology characters of `D^d R(e)`: writes two new character handles.
///
/// # Safety
/// All pointers must be valid; the returned handles must be freed with
/// [`inc_character_free`].
#[no_mangle]
pub unsafe extern "C" fn inc_oracle_h_characters(
    oracle: *const IncOracle,
    d: i64,
    e: i64,
    h0: *mut *mut IncCharacter,
    h1: *mut *mut IncCharacter,
) -> IncStatus {
    guarded(|| {
        require!(oracle);
        require!(h0);
        require!(h1);
        match (*oracle).0.h_characters(d, e) {
            Ok((a, b)) => {
                write_character(h0, a);
                write_character(h1, b)
            }
            Err(err) => fail_err(&err),
        }
    })
}

/// Largest twist `m <= m_max` with nonzero `H^1(P, D^d R(m - 2))`,
/// written to `out`; this is the regularity when `m_max` clears the bound.
///
/// # Safety
/// `oracle` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn inc_oracle_regularity_scan(
    oracle: *const IncOracle,
    d: i64,
    m_max: i64,
    out: *mut i64,
) -> IncStatus {
    guarded(|| {
        require!(oracle);
        require!(out);
        match (*oracle).0.regularity_scan(d, m_max) {
            Ok(m) => {
                *out = m;
                IncStatus::Ok
            }
            Err(err) => fail_err(&err),
        }
    })
}

/// Creates the memoized `n = 3` recursion table for prime `p`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn inc_table_new(p: u64, out: *mut *mut IncTable) -> IncStatus {
    guarded(|| {
        require!(out);
        match CharacterTable::new(p) {
            Ok(table) => {
                *out = Box::into_raw(Box::new(IncTable(table)));
                IncStatus::Ok
            }
            Err(err) => fail_err(&err),
        }
    })
}

/// Releases a table handle; null is a no-op.
///
/// # Safety
/// `table` must come from [`inc_table_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn inc_table_free(table: *mut IncTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// `h0(d, e) = [H^0(P, D^d R(e-1))]` as a new character handle.
///
/// # Safety
/// `table` and `out` must be valid pointers; free the result.
#[no_mangle]
pub unsafe extern "C" fn inc_table_h0(
    table: *const IncTable,
    d: i64,
    e: i64,
    out: *mut *mut IncCharacter,
) -> IncStatus {
    guarded(|| {
        require!(table);
        require!(out);
        match (*table).0.h0(d, e) {
            Ok(c) => write_character(out, c),
            Err(err) => fail_err(&err),
        }
    })
}

/// `h1(d, e) = [H^1(P, D^d R(e-1))]` as a new character handle.
///
/// # Safety
/// `table` and `out` must be valid pointers; free the result.
#[no_mangle]
pub unsafe extern "C" fn inc_table_h1(
    table: *const IncTable,
    d: i64,
    e: i64,
    out: *mut *mut IncCharacter,
) -> IncStatus {
    guarded(|| {
        require!(table);
        require!(out);
        match (*table).0.h1(d, e) {
            Ok(c) => write_character(out, c),
            Err(err) => fail_err(&err),
        }
    })
}

/// Releases a character handle; null is a no-op.
///
/// # Safety
/// `ch` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn inc_character_free(ch: *mut IncCharacter) {
    if !ch.is_null() {
        drop(Box::from_raw(ch));
    }
}

/// Number of variables of the ambient character ring.
///
/// # Safety
/// `ch` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn inc_character_rank(ch: *const IncCharacter, out: *mut usize) -> IncStatus {
    guarded(|| {
        require!(ch);
        require!(out);
        *out = (*ch).0.n();
        IncStatus::Ok
    })
}

/// Writes 1 if the character is zero, 0 otherwise.
///
/// # Safety
/// `ch` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn inc_character_is_zero(ch: *const IncCharacter, out: *mut u8) -> IncStatus {
    guarded(|| {
        require!(ch);
        require!(out);
        *out = u8::from((*ch).0.is_zero());
        IncStatus::Ok
    })
}

/// Sum of coefficients as u64; `INC_STATUS_DOMAIN` if it does not fit.
///
/// # Safety
/// `ch` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn inc_character_dim(ch: *const IncCharacter, out: *mut u64) -> IncStatus {
    guarded(|| {
        require!(ch);
        require!(out);
        match (*ch).0.dim_eval().to_string().parse::<u64>() {
            Ok(v) => {
                *out = v;
                IncStatus::Ok
            }
            Err(_) => fail(IncStatus::Domain, "dimension does not fit in u64"),
        }
    })
}

/// Sum of coefficients as an exact decimal string.
///
/// # Safety
/// `ch` and `out` must be valid; free the string with [`inc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn inc_character_dim_str(
    ch: *const IncCharacter,
    out: *mut *mut c_char,
) -> IncStatus {
    guarded(|| {
        require!(ch);
        require!(out);
        write_string(out, (*ch).0.dim_eval().to_string())
    })
}

/// Writes the normalized highest weight into `out[0..len]`; `len` must
/// equal the rank. Fails with `INC_STATUS_ZERO_CHARACTER` on zero input.
///
/// # Safety
/// `ch` must be valid and `out` must point to `len` writable i64 slots.
#[no_mangle]
pub unsafe extern "C" fn inc_character_highest_weight(
    ch: *const IncCharacter,
    out: *mut i64,
    len: usize,
) -> IncStatus {
    guarded(|| {
        require!(ch);
        require!(out);
        let c = &(*ch).0;
        if len != c.n() {
            return fail(
                IncStatus::Domain,
                format!("buffer holds {len} slots, rank is {}", c.n()),
            );
        }
        match c.highest_weight() {
            Ok(w) => {
                std::ptr::copy_nonoverlapping(w.exps().as_ptr(), out, len);
                IncStatus::Ok
            }
            Err(err) => fail_err(&err),
        }
    })
}

/// Serializes the character to its canonical JSON form.
///
/// # Safety
/// `ch` and `out` must be valid; free the string with [`inc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn inc_character_to_json(
    ch: *const IncCharacter,
    out: *mut *mut c_char,
) -> IncStatus {
    guarded(|| {
        require!(ch);
        require!(out);
        write_string(out, (*ch).0.to_json())
    })
}

/// Parses the canonical JSON form in rank `n`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer;
/// free the result with [`inc_character_free`].
#[no_mangle]
pub unsafe extern "C" fn inc_character_from_json(
    n: usize,
    json: *const c_char,
    out: *mut *mut IncCharacter,
) -> IncStatus {
    guarded(|| {
        require!(json);
        require!(out);
        let Ok(s) = CStr::from_ptr(json).to_str() else {
            return fail(IncStatus::Utf8, "json argument is not UTF-8");
        };
        match Character::from_json(n, s) {
            Ok(c) => write_character(out, c),
            Err(err) => fail_err(&err),
        }
    })
}

/// Writes 1 if the characters are equal, 0 otherwise.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn inc_character_eq(
    a: *const IncCharacter,
    b: *const IncCharacter,
    out: *mut u8,
) -> IncStatus {
    guarded(|| {
        require!(a);
        require!(b);
        require!(out);
        *out = u8::from((*a).0 == (*b).0);
        IncStatus::Ok
    })
}

macro_rules! binop {
    ($(#[$doc:meta])* $name:ident, $method:ident) => {
        $(#[$doc])*
        ///
        /// # Safety
        /// All pointers must be valid; free the result with
        /// [`inc_character_free`].
        #[no_mangle]
        pub unsafe extern "C" fn $name(
            a: *const IncCharacter,
            b: *const IncCharacter,
            out: *mut *mut IncCharacter,
        ) -> IncStatus {
            guarded(|| {
                require!(a);
                require!(b);
                require!(out);
                match (*a).0.$method(&(*b).0) {
                    Ok(c) => write_character(out, c),
                    Err(err) => fail_err(&err),
                }
            })
        }
    };
}

binop!(
    /// Sum of two characters of the same rank.
    inc_character_add,
    checked_add
);
binop!(
    /// Difference of two characters of the same rank.
    inc_character_sub,
    checked_sub
);
binop!(
    /// Product of two characters of the same rank.
    inc_character_mul,
    checked_mul
);

/// Dual character (inverts variables and renormalizes).
///
/// # Safety
/// `ch` and `out` must be valid; free the result.
#[no_mangle]
pub unsafe extern "C" fn inc_character_dual(
    ch: *const IncCharacter,
    out: *mut *mut IncCharacter,
) -> IncStatus {
    guarded(|| {
        require!(ch);
        require!(out);
        write_character(out, (*ch).0.dual())
    })
}

/// Frobenius twist: scales all exponents by the prime power `q`.
///
/// # Safety
/// `ch` and `out` must be valid; free the result.
#[no_mangle]
pub unsafe extern "C" fn inc_character_frobenius(
    ch: *const IncCharacter,
    q: u64,
    out: *mut *mut IncCharacter,
) -> IncStatus {
    guarded(|| {
        require!(ch);
        require!(out);
        match (*ch).0.frobenius(q) {
            Ok(c) => write_character(out, c),
            Err(err) => fail_err(&err),
        }
    })
}

/// Castelnuovo-Mumford regularity of `D^d R`: `(t+n-2) p^k - n + 2`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn inc_regularity_formula(
    n: usize,
    p: u64,
    d: i64,
    out: *mut i64,
) -> IncStatus {
    guarded(|| {
        require!(out);
        match incidence::vanishing::regularity_formula(n, p, d) {
            Ok(v) => {
                *out = v;
                IncStatus::Ok
            }
            Err(err) => fail_err(&err),
        }
    })
}

/// Middle-degree flags for `O(a, b)` with `b <= -n`, `a >= -b-n+1`:
/// writes 1/0 for `H^(n-2)` and `H^(n-1)` being nonzero.
///
/// # Safety
/// `hn2_nonzero` and `hn1_nonzero` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn inc_region_vi_vanishing(
    n: usize,
    p: u64,
    a: i64,
    b: i64,
    hn2_nonzero: *mut u8,
    hn1_nonzero: *mut u8,
) -> IncStatus {
    guarded(|| {
        require!(hn2_nonzero);
        require!(hn1_nonzero);
        match incidence::vanishing::region_vi_vanishing(n, p, a, b) {
            Ok(flags) => {
                *hn2_nonzero = u8::from(flags.hn2_nonzero);
                *hn1_nonzero = u8::from(flags.hn1_nonzero);
                IncStatus::Ok
            }
            Err(err) => fail_err(&err),
        }
    })
}

/// Degrees with nonzero cohomology for `O(a, b)`, written to
/// `out[0..cap]`; `count` receives the true number (at most 2).
///
/// # Safety
/// `out` must point to `cap` writable usize slots; `count` must be valid.
#[no_mangle]
pub unsafe extern "C" fn inc_nonzero_degrees(
    n: usize,
    p: u64,
    a: i64,
    b: i64,
    out: *mut usize,
    cap: usize,
    count: *mut usize,
) -> IncStatus {
    guarded(|| {
        require!(count);
        if cap > 0 {
            require!(out);
        }
        match incidence::vanishing::full_profile(n, p, a, b) {
            Ok(profile) => {
                let degrees = profile.nonzero_degrees();
                *count = degrees.len();
                for (slot, deg) in (0..cap).zip(degrees) {
                    *out.add(slot) = deg;
                }
                IncStatus::Ok
            }
            Err(err) => fail_err(&err),
        }
    })
}
