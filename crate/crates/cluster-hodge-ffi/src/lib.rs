//! C ABI for the cluster-hodge library.
//!
//! Conventions:
//!
//! * Every function returns a [`ChStatus`]; results come back through out
//!   parameters, which are written only when the status is [`ChStatus::Ok`].
//! * `ChSeed` and `ChTable` are opaque handles released with the matching
//!   `_free` function. Strings returned through `char **` are owned by the
//!   caller and released with [`ch_string_free`].
//! * After any status other than `Ok`, [`ch_last_error_message`] returns a
//!   description of the failure, valid on the calling thread until the next
//!   failing call.
//! * JSON layouts match the `cluster-hodge` CLI: object keys are sorted and
//!   serialization is deterministic.

#![deny(unsafe_op_in_unsafe_fn)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use cluster_hodge::count::PrimeField;
use cluster_hodge::hodge::table_for;
use cluster_hodge::{
    basis_for, classify, count_variety, finite_type_check, verify_table, Classification,
    CountError, FormError, HodgeError, MixedHodgeTable, QuiverError, Seed, TwoMutableBasisVariant,
};
use serde_json::{json, Value};

/// Outcome of an FFI call.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChStatus {
    /// The call succeeded and the out parameters are valid.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input could not be parsed or violates a structural requirement
    /// (malformed JSON, non-skew principal part, unsupported dimension,
    /// composite characteristic).
    MalformedInput = 3,
    /// The seed is valid but the requested artifact does not exist for its
    /// classification (open case, no finite-type table, no published basis).
    UnsupportedCase = 4,
    /// Point counts over the verification primes fit no single integer
    /// polynomial, so there is nothing to compare against the table.
    NonPolynomialCounts = 5,
    /// An internal invariant failed; this indicates a bug in the library.
    InternalError = 6,
}

/// Selects the generator list used for the mixed-weight basis families of
/// the two-mutable case.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChBasisVariant {
    /// Families indexed by gcd(a, b), matching the closed-form table.
    Statement = 0,
    /// Families indexed by gcd(b, c).
    Alternate = 1,
}

impl From<ChBasisVariant> for TwoMutableBasisVariant {
    fn from(v: ChBasisVariant) -> Self {
        match v {
            ChBasisVariant::Statement => TwoMutableBasisVariant::Statement,
            ChBasisVariant::Alternate => TwoMutableBasisVariant::Alternate,
        }
    }
}

/// Opaque handle to a parsed seed.
pub struct ChSeed(Seed);

/// Opaque handle to a mixed Hodge number table.
pub struct ChTable(MixedHodgeTable);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn fail(status: ChStatus, message: &str) -> ChStatus {
    set_error(message);
    status
}

fn quiver_status(_: &QuiverError) -> ChStatus {
    // Every quiver error describes a defect of the input seed.
    ChStatus::MalformedInput
}

fn hodge_status(err: &HodgeError) -> ChStatus {
    match err {
        HodgeError::TableUnavailable { .. } | HodgeError::NotSmooth => ChStatus::UnsupportedCase,
        HodgeError::Quiver(q) => quiver_status(q),
        HodgeError::InvalidWeight { .. } => ChStatus::MalformedInput,
        _ => ChStatus::InternalError,
    }
}

fn count_status(err: &CountError) -> ChStatus {
    match err {
        CountError::NotPrime(_) | CountError::PrimeTooLarge(_) => ChStatus::MalformedInput,
        CountError::Unsupported(_) => ChStatus::UnsupportedCase,
        CountError::NonIntegerCoefficient { .. } | CountError::HeldOutMismatch { .. } => {
            ChStatus::NonPolynomialCounts
        }
        CountError::Hodge(h) => hodge_status(h),
        CountError::Quiver(q) => quiver_status(q),
        _ => ChStatus::InternalError,
    }
}

fn form_status(err: &FormError) -> ChStatus {
    match err {
        FormError::BasisUnavailable { .. } => ChStatus::UnsupportedCase,
        FormError::BadBasisParameter { .. } => ChStatus::MalformedInput,
        _ => ChStatus::InternalError,
    }
}

/// Sorted-key compact serialization, shared with the CLI output format.
fn canonical(value: &Value) -> String {
    serde_json::to_string(value).unwrap_or_else(|_| "null".to_string())
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> ChStatus {
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            ChStatus::Ok
        }
        Err(_) => fail(ChStatus::InternalError, "output contained a NUL byte"),
    }
}

unsafe fn seed_ref<'a>(seed: *const ChSeed) -> Option<&'a Seed> {
    unsafe { seed.as_ref() }.map(|s| &s.0)
}

unsafe fn table_ref<'a>(table: *const ChTable) -> Option<&'a MixedHodgeTable> {
    unsafe { table.as_ref() }.map(|t| &t.0)
}

fn classification_value(case: &Classification, mutations: usize, dim: usize) -> Value {
    let mut object = json!({
        "case": case.case_name(),
        "description": case.to_string(),
        "mutations": mutations,
        "params": case.params(),
        "variables": dim,
    });
    if !matches!(
        case,
        Classification::NotFiniteType { .. } | Classification::Unsupported { .. }
    ) {
        object["smooth"] = Value::Bool(case.smooth());
    }
    object
}

/// Parses a seed from its JSON description `{"n", "m", "matrix", "labels"?}`.
///
/// On success writes a new handle to `out`; release it with [`ch_seed_free`].
#[no_mangle]
pub unsafe extern "C" fn ch_seed_parse(json: *const c_char, out: *mut *mut ChSeed) -> ChStatus {
    if json.is_null() || out.is_null() {
        return fail(ChStatus::NullArgument, "ch_seed_parse: null argument");
    }
    let text = match unsafe { CStr::from_ptr(json) }.to_str() {
        Ok(t) => t,
        Err(_) => return fail(ChStatus::InvalidUtf8, "seed JSON is not valid UTF-8"),
    };
    match Seed::from_json(text) {
        Ok(seed) => {
            unsafe { *out = Box::into_raw(Box::new(ChSeed(seed))) };
            ChStatus::Ok
        }
        Err(e) => fail(quiver_status(&e), &e.to_string()),
    }
}

/// Releases a seed handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ch_seed_free(seed: *mut ChSeed) {
    if !seed.is_null() {
        drop(unsafe { Box::from_raw(seed) });
    }
}

/// Writes the number of mutable vertices, frozen vertices, and the total
/// dimension of the seed.
#[no_mangle]
pub unsafe extern "C" fn ch_seed_shape(
    seed: *const ChSeed,
    n: *mut usize,
    m: *mut usize,
    dim: *mut usize,
) -> ChStatus {
    let (Some(s), false) = (unsafe { seed_ref(seed) }, n.is_null() || m.is_null() || dim.is_null())
    else {
        return fail(ChStatus::NullArgument, "ch_seed_shape: null argument");
    };
    unsafe {
        *n = s.n();
        *m = s.m();
        *dim = s.dim();
    }
    ChStatus::Ok
}

/// Mutates the seed at the given mutable vertex, writing a new handle.
#[no_mangle]
pub unsafe extern "C" fn ch_seed_mutate(
    seed: *const ChSeed,
    vertex: usize,
    out: *mut *mut ChSeed,
) -> ChStatus {
    let (Some(s), false) = (unsafe { seed_ref(seed) }, out.is_null()) else {
        return fail(ChStatus::NullArgument, "ch_seed_mutate: null argument");
    };
    match s.mutate(vertex) {
        Ok(mutated) => {
            unsafe { *out = Box::into_raw(Box::new(ChSeed(mutated))) };
            ChStatus::Ok
        }
        Err(e) => fail(quiver_status(&e), &e.to_string()),
    }
}

/// Serializes the seed back to its JSON description.
#[no_mangle]
pub unsafe extern "C" fn ch_seed_to_json(
    seed: *const ChSeed,
    out: *mut *mut c_char,
) -> ChStatus {
    let (Some(s), false) = (unsafe { seed_ref(seed) }, out.is_null()) else {
        return fail(ChStatus::NullArgument, "ch_seed_to_json: null argument");
    };
    match s.to_json() {
        Ok(text) => unsafe { write_string(out, text) },
        Err(e) => fail(quiver_status(&e), &e.to_string()),
    }
}

/// Classifies the seed and writes the result as a JSON object with keys
/// `case`, `description`, `mutations`, `params`, `variables`, and `smooth`
/// (the latter only for cases carrying a table).
#[no_mangle]
pub unsafe extern "C" fn ch_classify_json(
    seed: *const ChSeed,
    out: *mut *mut c_char,
) -> ChStatus {
    let (Some(s), false) = (unsafe { seed_ref(seed) }, out.is_null()) else {
        return fail(ChStatus::NullArgument, "ch_classify_json: null argument");
    };
    match classify(s) {
        Ok(classified) => {
            let value =
                classification_value(&classified.case, classified.mutations, s.dim());
            unsafe { write_string(out, canonical(&value)) }
        }
        Err(e) => fail(hodge_status(&e), &e.to_string()),
    }
}

/// Computes the mixed Hodge number table of the seed's variety. Pass
/// `intersection = true` for the intersection cohomology variant, which
/// differs only in the singular case.
#[no_mangle]
pub unsafe extern "C" fn ch_table(
    seed: *const ChSeed,
    intersection: bool,
    out: *mut *mut ChTable,
) -> ChStatus {
    let (Some(s), false) = (unsafe { seed_ref(seed) }, out.is_null()) else {
        return fail(ChStatus::NullArgument, "ch_table: null argument");
    };
    let table = classify(s).and_then(|c| table_for(&c, intersection));
    match table {
        Ok(table) => {
            unsafe { *out = Box::into_raw(Box::new(ChTable(table))) };
            ChStatus::Ok
        }
        Err(e) => fail(hodge_status(&e), &e.to_string()),
    }
}

/// Releases a table handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ch_table_free(table: *mut ChTable) {
    if !table.is_null() {
        drop(unsafe { Box::from_raw(table) });
    }
}

/// Writes the entry h^{k,(p,p)} of the table; entries outside the
/// admissible range are zero.
#[no_mangle]
pub unsafe extern "C" fn ch_table_entry(
    table: *const ChTable,
    k: usize,
    p: usize,
    out: *mut i64,
) -> ChStatus {
    let (Some(t), false) = (unsafe { table_ref(table) }, out.is_null()) else {
        return fail(ChStatus::NullArgument, "ch_table_entry: null argument");
    };
    unsafe { *out = t.entry(k, p) };
    ChStatus::Ok
}

/// Writes the dimension, smoothness flag, and Euler characteristic.
#[no_mangle]
pub unsafe extern "C" fn ch_table_summary(
    table: *const ChTable,
    dim: *mut usize,
    smooth: *mut bool,
    euler: *mut i64,
) -> ChStatus {
    let (Some(t), false) = (
        unsafe { table_ref(table) },
        dim.is_null() || smooth.is_null() || euler.is_null(),
    ) else {
        return fail(ChStatus::NullArgument, "ch_table_summary: null argument");
    };
    unsafe {
        *dim = t.dim();
        *smooth = t.smooth();
        *euler = t.euler_characteristic();
    }
    ChStatus::Ok
}

/// Serializes the table as JSON (`dim`, `smooth`, `variant`, `entries`).
#[no_mangle]
pub unsafe extern "C" fn ch_table_to_json(
    table: *const ChTable,
    out: *mut *mut c_char,
) -> ChStatus {
    let (Some(t), false) = (unsafe { table_ref(table) }, out.is_null()) else {
        return fail(ChStatus::NullArgument, "ch_table_to_json: null argument");
    };
    match t.to_json().parse::<Value>() {
        Ok(value) => unsafe { write_string(out, canonical(&value)) },
        Err(_) => fail(ChStatus::InternalError, "table serialization failed"),
    }
}

/// Counts points of the seed's variety over the prime field F_prime.
#[no_mangle]
pub unsafe extern "C" fn ch_count(
    seed: *const ChSeed,
    prime: u64,
    out: *mut u64,
) -> ChStatus {
    let (Some(s), false) = (unsafe { seed_ref(seed) }, out.is_null()) else {
        return fail(ChStatus::NullArgument, "ch_count: null argument");
    };
    let count = PrimeField::new(prime).and_then(|field| count_variety(s, &field));
    match count {
        Ok(count) => {
            unsafe { *out = count };
            ChStatus::Ok
        }
        Err(e) => fail(count_status(&e), &e.to_string()),
    }
}

/// Verifies the seed's table against finite-field point counts and writes
/// the verification report as JSON (`case`, `params`, `predicted`,
/// `observed`, `verdict`). Counts that fit no integer polynomial yield
/// `NonPolynomialCounts` instead of a report.
#[no_mangle]
pub unsafe extern "C" fn ch_verify_json(
    seed: *const ChSeed,
    out: *mut *mut c_char,
) -> ChStatus {
    let (Some(s), false) = (unsafe { seed_ref(seed) }, out.is_null()) else {
        return fail(ChStatus::NullArgument, "ch_verify_json: null argument");
    };
    match verify_table(s) {
        Ok(report) => match serde_json::to_value(&report) {
            Ok(value) => unsafe { write_string(out, canonical(&value)) },
            Err(_) => fail(ChStatus::InternalError, "report serialization failed"),
        },
        Err(e) => fail(count_status(&e), &e.to_string()),
    }
}

/// Runs the finite-type search on a seed with three mutable and no frozen
/// vertices, writing the verdict as JSON.
#[no_mangle]
pub unsafe extern "C" fn ch_finite_type_json(
    seed: *const ChSeed,
    out: *mut *mut c_char,
) -> ChStatus {
    let (Some(s), false) = (unsafe { seed_ref(seed) }, out.is_null()) else {
        return fail(ChStatus::NullArgument, "ch_finite_type_json: null argument");
    };
    match finite_type_check(s) {
        Ok(verdict) => match serde_json::to_value(&verdict) {
            Ok(value) => unsafe { write_string(out, canonical(&value)) },
            Err(_) => fail(ChStatus::InternalError, "verdict serialization failed"),
        },
        Err(e) => fail(quiver_status(&e), &e.to_string()),
    }
}

/// Computes the log-form basis realising the seed's table and writes it as
/// JSON (`case`, `generators`, `groups` with rendered forms).
#[no_mangle]
pub unsafe extern "C" fn ch_basis_json(
    seed: *const ChSeed,
    variant: ChBasisVariant,
    out: *mut *mut c_char,
) -> ChStatus {
    let (Some(s), false) = (unsafe { seed_ref(seed) }, out.is_null()) else {
        return fail(ChStatus::NullArgument, "ch_basis_json: null argument");
    };
    let classified = match classify(s) {
        Ok(c) => c,
        Err(e) => return fail(hodge_status(&e), &e.to_string()),
    };
    match basis_for(&classified.case, variant.into()) {
        Ok(basis) => {
            let groups: Vec<Value> = basis
                .iter()
                .map(|((k, p), forms)| {
                    json!({
                        "forms": forms.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                        "k": k,
                        "p": p,
                    })
                })
                .collect();
            let value = json!({
                "case": classified.case.case_name(),
                "generators": basis.generators(),
                "groups": groups,
                "params": classified.case.params(),
            });
            unsafe { write_string(out, canonical(&value)) }
        }
        Err(e) => fail(form_status(&e), &e.to_string()),
    }
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ch_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}

/// Returns the message of the most recent failure on this thread. The
/// pointer stays valid until the next failing call on the same thread; do
/// not free it.
#[no_mangle]
pub extern "C" fn ch_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}
