//! C ABI for the kleinian-rp library.
//!
//! Conventions:
//!
//! - every fallible call returns a [`KrpStatus`]; out-parameters are written
//!   only on `KRP_STATUS_OK`;
//! - classification results are opaque [`KrpClassification`] handles with
//!   accessor functions, freed by [`krp_classification_free`];
//! - strings returned through `char**` are NUL-terminated UTF-8 owned by the
//!   library and freed by [`krp_string_free`];
//! - structured data (matches, relator reports, census rows) is exposed as
//!   JSON, the same wire format the CLI emits;
//! - presentation exponents are passed as `int64_t`: values ≥ 2 are finite,
//!   [`KRP_EXP_INF`] (−1) is `∞`, [`KRP_EXP_BARINF`] (−2) is `∞̄`.
//!
//! All entry points catch panics and report them as `KRP_STATUS_PANIC`
//! rather than unwinding across the boundary.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use kleinian_rp::census::{finite_volume_census, CensusFilter};
use kleinian_rp::exponent::ExtExp;
use kleinian_rp::presentation::build;
use kleinian_rp::realize::realize;
use kleinian_rp::table::{classify, two_elliptic_discreteness};
use kleinian_rp::trace::{reduce_to_primitive, Parameters};
use kleinian_rp::verify::verify_relators;
use kleinian_rp::{ClassificationResult, Config, Schema};

/// Exponent sentinel for `∞`.
pub const KRP_EXP_INF: i64 = -1;
/// Exponent sentinel for `∞̄`.
pub const KRP_EXP_BARINF: i64 = -2;

/// Status code of every fallible call.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrpStatus {
    KrpStatusOk = 0,
    KrpStatusNullPointer = 1,
    KrpStatusInvalidArgument = 2,
    KrpStatusDomainError = 3,
    KrpStatusPanic = 4,
}

/// Classification verdict; the numeric values match the CLI exit codes.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrpVerdict {
    KrpVerdictDiscrete = 0,
    KrpVerdictNotDiscrete = 1,
    KrpVerdictNotClassD = 2,
    KrpVerdictUnresolved = 3,
}

/// Numerical policy knobs; obtain defaults from [`krp_options_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct KrpOptions {
    /// Relative tolerance for matching reals to table formulas.
    pub tolerance: f64,
    /// Tolerance for relator matrices against ±identity.
    pub relator_tolerance: f64,
    /// Integer search bound for row inversion.
    pub int_bound: u32,
    /// Search bound for elliptic rotation orders.
    pub order_bound: u32,
    /// Enumeration bound for infinite census families.
    pub census_bound: u32,
}

impl From<&KrpOptions> for Config {
    fn from(o: &KrpOptions) -> Config {
        Config {
            tol: o.tolerance,
            relator_tol: o.relator_tolerance,
            int_bound: o.int_bound,
            order_bound: o.order_bound,
            census_bound: o.census_bound,
        }
    }
}

/// Opaque classification result; free with [`krp_classification_free`].
pub struct KrpClassification {
    result: ClassificationResult,
}

fn config_of(opts: *const KrpOptions) -> Config {
    if opts.is_null() {
        Config::default()
    } else {
        Config::from(unsafe { &*opts })
    }
}

fn guarded(f: impl FnOnce() -> KrpStatus) -> KrpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => KrpStatus::KrpStatusPanic,
    }
}

fn hand_out_string(s: String, out: *mut *mut c_char) -> KrpStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            KrpStatus::KrpStatusOk
        }
        Err(_) => KrpStatus::KrpStatusInvalidArgument,
    }
}

/// Default options matching the library defaults.
#[no_mangle]
pub extern "C" fn krp_options_default() -> KrpOptions {
    let c = Config::default();
    KrpOptions {
        tolerance: c.tol,
        relator_tolerance: c.relator_tol,
        int_bound: c.int_bound,
        order_bound: c.order_bound,
        census_bound: c.census_bound,
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn krp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Free a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be a pointer previously returned through a `char**`
/// out-parameter of this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn krp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Classify a parameter triple (β, β′, γ). `opts` may be NULL for defaults.
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn krp_classify(
    beta: f64,
    beta_prime: f64,
    gamma: f64,
    opts: *const KrpOptions,
    out: *mut *mut KrpClassification,
) -> KrpStatus {
    if out.is_null() {
        return KrpStatus::KrpStatusNullPointer;
    }
    guarded(|| {
        if !(beta.is_finite() && beta_prime.is_finite() && gamma.is_finite()) {
            return KrpStatus::KrpStatusInvalidArgument;
        }
        let cfg = config_of(opts);
        let result = classify(Parameters::new(beta, beta_prime, gamma), &cfg);
        unsafe { *out = Box::into_raw(Box::new(KrpClassification { result })) };
        KrpStatus::KrpStatusOk
    })
}

/// Discreteness for two primitive elliptic generators of orders n, m ≥ 3.
///
/// # Safety
/// `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn krp_two_elliptic(
    n: u32,
    m: u32,
    gamma: f64,
    opts: *const KrpOptions,
    out: *mut *mut KrpClassification,
) -> KrpStatus {
    if out.is_null() {
        return KrpStatus::KrpStatusNullPointer;
    }
    guarded(|| {
        let cfg = config_of(opts);
        let result = two_elliptic_discreteness(n, m, gamma, &cfg);
        unsafe { *out = Box::into_raw(Box::new(KrpClassification { result })) };
        KrpStatus::KrpStatusOk
    })
}

/// # Safety
/// `c` must be a live handle from `krp_classify` or `krp_two_elliptic`.
#[no_mangle]
pub unsafe extern "C" fn krp_classification_verdict(c: *const KrpClassification) -> KrpVerdict {
    if c.is_null() {
        return KrpVerdict::KrpVerdictUnresolved;
    }
    match (*c).result {
        ClassificationResult::DiscreteInD { .. } => KrpVerdict::KrpVerdictDiscrete,
        ClassificationResult::NotDiscrete => KrpVerdict::KrpVerdictNotDiscrete,
        ClassificationResult::NotClassD => KrpVerdict::KrpVerdictNotClassD,
        ClassificationResult::Unresolved { .. } => KrpVerdict::KrpVerdictUnresolved,
    }
}

/// Number of family-table matches (0 unless discrete).
///
/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn krp_classification_match_count(c: *const KrpClassification) -> usize {
    if c.is_null() {
        return 0;
    }
    (*c).result.matches().len()
}

/// Table row (1..=24) of match `index`.
///
/// # Safety
/// `c` must be a live handle; `row_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn krp_classification_match_row(
    c: *const KrpClassification,
    index: usize,
    row_out: *mut u8,
) -> KrpStatus {
    if c.is_null() || row_out.is_null() {
        return KrpStatus::KrpStatusNullPointer;
    }
    match (*c).result.matches().get(index) {
        Some(m) => {
            *row_out = m.id.row;
            KrpStatus::KrpStatusOk
        }
        None => KrpStatus::KrpStatusInvalidArgument,
    }
}

/// Group name of match `index` in family notation, e.g. `GT[3,3;inf]`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable. Free the string with
/// `krp_string_free`.
#[no_mangle]
pub unsafe extern "C" fn krp_classification_group_name(
    c: *const KrpClassification,
    index: usize,
    out: *mut *mut c_char,
) -> KrpStatus {
    if c.is_null() || out.is_null() {
        return KrpStatus::KrpStatusNullPointer;
    }
    guarded(|| match (*c).result.matches().get(index) {
        Some(m) => hand_out_string(m.group_name(), out),
        None => KrpStatus::KrpStatusInvalidArgument,
    })
}

/// Whole result as JSON (the same document the CLI emits).
///
/// # Safety
/// `c` must be a live handle; `out` must be writable. Free the string with
/// `krp_string_free`.
#[no_mangle]
pub unsafe extern "C" fn krp_classification_to_json(
    c: *const KrpClassification,
    out: *mut *mut c_char,
) -> KrpStatus {
    if c.is_null() || out.is_null() {
        return KrpStatus::KrpStatusNullPointer;
    }
    guarded(|| match serde_json::to_string(&(*c).result) {
        Ok(json) => hand_out_string(json, out),
        Err(_) => KrpStatus::KrpStatusDomainError,
    })
}

/// # Safety
/// `c` must come from this library and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn krp_classification_free(c: *mut KrpClassification) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Realize (β, β′, γ) as a matrix pair. Each matrix is written as eight
/// doubles, row-major with interleaved real and imaginary parts:
/// `[re a, im a, re b, im b, re c, im c, re d, im d]`.
///
/// # Safety
/// `f_out` and `g_out` must point to writable arrays of eight doubles.
#[no_mangle]
pub unsafe extern "C" fn krp_realize(
    beta: f64,
    beta_prime: f64,
    gamma: f64,
    opts: *const KrpOptions,
    f_out: *mut f64,
    g_out: *mut f64,
) -> KrpStatus {
    if f_out.is_null() || g_out.is_null() {
        return KrpStatus::KrpStatusNullPointer;
    }
    guarded(|| {
        if !(beta.is_finite() && beta_prime.is_finite() && gamma.is_finite()) {
            return KrpStatus::KrpStatusInvalidArgument;
        }
        let cfg = config_of(opts);
        let pair = realize(Parameters::new(beta, beta_prime, gamma), &cfg);
        for (slot, m) in [(f_out, pair.f), (g_out, pair.g)] {
            let vals = [m.a, m.b, m.c, m.d];
            for (i, z) in vals.iter().enumerate() {
                *slot.add(2 * i) = z.re;
                *slot.add(2 * i + 1) = z.im;
            }
        }
        KrpStatus::KrpStatusOk
    })
}

/// Classify (β, β′, γ) and verify the relators of every match; writes a
/// JSON array of relator reports.
///
/// # Safety
/// `out` must be writable. Free the string with `krp_string_free`.
#[no_mangle]
pub unsafe extern "C" fn krp_verify_params(
    beta: f64,
    beta_prime: f64,
    gamma: f64,
    opts: *const KrpOptions,
    out: *mut *mut c_char,
) -> KrpStatus {
    if out.is_null() {
        return KrpStatus::KrpStatusNullPointer;
    }
    guarded(|| {
        let cfg = config_of(opts);
        let res = classify(Parameters::new(beta, beta_prime, gamma), &cfg);
        let mut reports = Vec::new();
        for m in res.matches() {
            match verify_relators(m, &cfg) {
                Ok(r) => reports.push(r),
                Err(_) => return KrpStatus::KrpStatusDomainError,
            }
        }
        match serde_json::to_string(&reports) {
            Ok(json) => hand_out_string(json, out),
            Err(_) => KrpStatus::KrpStatusDomainError,
        }
    })
}

/// Rewrite a non-primitive elliptic (order n, q turns, gcd(q,n) = 1,
/// 1 < q < n/2) as a primitive power: writes the power r = q⁻¹ mod n and
/// the rescaled γ.
///
/// # Safety
/// `r_out` and `gamma_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn krp_reduce(
    n: u32,
    q: u32,
    gamma: f64,
    r_out: *mut u32,
    gamma_out: *mut f64,
) -> KrpStatus {
    if r_out.is_null() || gamma_out.is_null() {
        return KrpStatus::KrpStatusNullPointer;
    }
    guarded(|| match reduce_to_primitive(n, q, gamma) {
        Ok((r, g)) => {
            *r_out = r;
            *gamma_out = g;
            KrpStatus::KrpStatusOk
        }
        Err(_) => KrpStatus::KrpStatusDomainError,
    })
}

/// Gram-matrix determinant for the `R[n,m;q]` orbifold and its sign test.
///
/// # Safety
/// `det_out` and `hyperbolic_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn krp_gram(
    n: u32,
    m: u32,
    q: u32,
    det_out: *mut f64,
    hyperbolic_out: *mut bool,
) -> KrpStatus {
    if det_out.is_null() || hyperbolic_out.is_null() {
        return KrpStatus::KrpStatusNullPointer;
    }
    guarded(|| match kleinian_rp::orbifold::gram_det(n, m, q) {
        Ok(det) => {
            *det_out = det;
            *hyperbolic_out = det < 0.0;
            KrpStatus::KrpStatusOk
        }
        Err(_) => KrpStatus::KrpStatusDomainError,
    })
}

/// Finite-volume census as JSON lines. `filter`: 0 all, 1 compact,
/// 2 cusped. `schema` may be NULL for every schema.
///
/// # Safety
/// `schema`, when non-NULL, must be a NUL-terminated string; `out` must be
/// writable. Free the string with `krp_string_free`.
#[no_mangle]
pub unsafe extern "C" fn krp_census_json(
    filter: i32,
    schema: *const c_char,
    bound: u32,
    out: *mut *mut c_char,
) -> KrpStatus {
    if out.is_null() {
        return KrpStatus::KrpStatusNullPointer;
    }
    guarded(|| {
        let filter = match filter {
            0 => CensusFilter::All,
            1 => CensusFilter::Compact,
            2 => CensusFilter::Cusped,
            _ => return KrpStatus::KrpStatusInvalidArgument,
        };
        let schema = if schema.is_null() {
            None
        } else {
            match CStr::from_ptr(schema).to_str() {
                Ok(s) => match s.parse::<Schema>() {
                    Ok(sch) => Some(sch),
                    Err(_) => return KrpStatus::KrpStatusInvalidArgument,
                },
                Err(_) => return KrpStatus::KrpStatusInvalidArgument,
            }
        };
        let lines: Vec<String> = finite_volume_census(filter, schema, bound)
            .iter()
            .map(|e| serde_json::to_string(e).expect("census serializes"))
            .collect();
        hand_out_string(lines.join("\n"), out)
    })
}

/// Canonical text of a presentation, e.g. `⟨f,g | f^5, g^inf⟩`. Exponents
/// use the `int64_t` encoding described at the top; `abstract_form` drops
/// the `∞` relators.
///
/// # Safety
/// `schema` must be NUL-terminated; `exponents` must point to `len` values;
/// `out` must be writable. Free the string with `krp_string_free`.
#[no_mangle]
pub unsafe extern "C" fn krp_presentation_text(
    schema: *const c_char,
    exponents: *const i64,
    len: usize,
    abstract_form: bool,
    out: *mut *mut c_char,
) -> KrpStatus {
    if schema.is_null() || out.is_null() || (exponents.is_null() && len > 0) {
        return KrpStatus::KrpStatusNullPointer;
    }
    guarded(|| {
        let schema: Schema = match CStr::from_ptr(schema).to_str().map(str::parse) {
            Ok(Ok(s)) => s,
            _ => return KrpStatus::KrpStatusInvalidArgument,
        };
        let mut exps = Vec::with_capacity(len);
        for i in 0..len {
            let raw = *exponents.add(i);
            let exp = match raw {
                KRP_EXP_INF => ExtExp::Inf,
                KRP_EXP_BARINF => ExtExp::BarInf,
                k if (2..=i64::from(u32::MAX)).contains(&k) => ExtExp::Fin(k as u32),
                _ => return KrpStatus::KrpStatusInvalidArgument,
            };
            exps.push(exp);
        }
        match build(schema, &exps) {
            Ok(p) => {
                let p = if abstract_form { p.to_abstract() } else { p };
                hand_out_string(p.text(), out)
            }
            Err(_) => KrpStatus::KrpStatusDomainError,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn classify_round_trip_through_abi() {
        let mut handle: *mut KrpClassification = ptr::null_mut();
        let status = unsafe { krp_classify(-3.0, -3.0, -4.0, ptr::null(), &mut handle) };
        assert_eq!(status, KrpStatus::KrpStatusOk);
        unsafe {
            assert_eq!(
                krp_classification_verdict(handle),
                KrpVerdict::KrpVerdictDiscrete
            );
            assert_eq!(krp_classification_match_count(handle), 1);
            let mut row = 0u8;
            assert_eq!(
                krp_classification_match_row(handle, 0, &mut row),
                KrpStatus::KrpStatusOk
            );
            assert_eq!(row, 1);
            let mut name: *mut c_char = ptr::null_mut();
            assert_eq!(
                krp_classification_group_name(handle, 0, &mut name),
                KrpStatus::KrpStatusOk
            );
            assert_eq!(CStr::from_ptr(name).to_str().unwrap(), "GT[3,3;inf]");
            krp_string_free(name);
            let mut json: *mut c_char = ptr::null_mut();
            assert_eq!(
                krp_classification_to_json(handle, &mut json),
                KrpStatus::KrpStatusOk
            );
            let doc: serde_json::Value =
                serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
            assert_eq!(doc["verdict"], "discrete_in_d");
            krp_string_free(json);
            krp_classification_free(handle);
        }
    }

    #[test]
    fn verdicts_match_exit_codes() {
        for (triple, want) in [
            ((-1.0, -1.0, -0.5), KrpVerdict::KrpVerdictNotDiscrete),
            ((-3.0, -3.0, 0.0), KrpVerdict::KrpVerdictNotClassD),
        ] {
            let mut handle: *mut KrpClassification = ptr::null_mut();
            let status =
                unsafe { krp_classify(triple.0, triple.1, triple.2, ptr::null(), &mut handle) };
            assert_eq!(status, KrpStatus::KrpStatusOk);
            unsafe {
                assert_eq!(krp_classification_verdict(handle), want);
                krp_classification_free(handle);
            }
        }
    }

    #[test]
    fn realize_writes_interleaved_components() {
        let mut f = [0.0f64; 8];
        let mut g = [0.0f64; 8];
        let status =
            unsafe { krp_realize(0.0, 0.0, -4.0, ptr::null(), f.as_mut_ptr(), g.as_mut_ptr()) };
        assert_eq!(status, KrpStatus::KrpStatusOk);
        // F = [[1,1],[0,1]] and G = [[1,0],[2i,1]]
        assert_eq!(f, [1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
        assert_eq!(g, [1.0, 0.0, 0.0, 0.0, 0.0, 2.0, 1.0, 0.0]);
    }

    #[test]
    fn reduce_and_gram() {
        let (mut r, mut gp) = (0u32, 0.0f64);
        assert_eq!(
            unsafe { krp_reduce(5, 2, -1.0, &mut r, &mut gp) },
            KrpStatus::KrpStatusOk
        );
        assert_eq!(r, 3);
        assert!((gp + 0.38196601125010515).abs() < 1e-12);
        assert_eq!(
            unsafe { krp_reduce(6, 2, -1.0, &mut r, &mut gp) },
            KrpStatus::KrpStatusDomainError
        );

        let (mut det, mut hyp) = (0.0f64, false);
        assert_eq!(
            unsafe { krp_gram(5, 2, 2, &mut det, &mut hyp) },
            KrpStatus::KrpStatusOk
        );
        assert!(det < 0.0 && hyp);
    }

    #[test]
    fn census_and_presentation_strings() {
        let schema = CString::new("GT").unwrap();
        let mut out: *mut c_char = ptr::null_mut();
        let status = unsafe { krp_census_json(2, schema.as_ptr(), 50, &mut out) };
        assert_eq!(status, KrpStatus::KrpStatusOk);
        let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
        unsafe { krp_string_free(out) };
        assert_eq!(text.lines().count(), 3);

        let exps = [5i64, KRP_EXP_INF, KRP_EXP_BARINF];
        let mut out: *mut c_char = ptr::null_mut();
        let status =
            unsafe { krp_presentation_text(schema.as_ptr(), exps.as_ptr(), 3, false, &mut out) };
        assert_eq!(status, KrpStatus::KrpStatusOk);
        let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
        unsafe { krp_string_free(out) };
        assert_eq!(text, "⟨f,g | f^5, g^inf⟩");

        let mut out: *mut c_char = ptr::null_mut();
        let status =
            unsafe { krp_presentation_text(schema.as_ptr(), exps.as_ptr(), 3, true, &mut out) };
        assert_eq!(status, KrpStatus::KrpStatusOk);
        let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
        unsafe { krp_string_free(out) };
        assert_eq!(text, "⟨f,g | f^5⟩");
    }

    #[test]
    fn verify_json_reports() {
        let mut out: *mut c_char = ptr::null_mut();
        let status = unsafe { krp_verify_params(-3.0, -3.0, -3.0, ptr::null(), &mut out) };
        assert_eq!(status, KrpStatus::KrpStatusOk);
        let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
        unsafe { krp_string_free(out) };
        let reports: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(reports
            .as_array()
            .unwrap()
            .iter()
            .all(|r| r["all_pass"] == true));
    }

    #[test]
    fn null_safety() {
        unsafe {
            assert_eq!(
                krp_classify(-3.0, -3.0, -4.0, ptr::null(), ptr::null_mut()),
                KrpStatus::KrpStatusNullPointer
            );
            assert_eq!(krp_classification_match_count(ptr::null()), 0);
            krp_classification_free(ptr::null_mut());
            krp_string_free(ptr::null_mut());
            let mut h: *mut KrpClassification = ptr::null_mut();
            assert_eq!(
                krp_classify(f64::NAN, 0.0, -4.0, ptr::null(), &mut h),
                KrpStatus::KrpStatusInvalidArgument
            );
        }
    }
}
