//! Complex translation half-lengths.
//!
//! The set 𝒰 = { iπ/p : p ∈ ℤ, p ≥ 2 } ∪ [0, +∞) collects the complex
//! translation half-lengths of primitive elliptic, parabolic, and hyperbolic
//! elements. The type map `t` sends a half-length to the element's order,
//! `∞` (parabolic), or `∞̄` (hyperbolic):
//!
//! ```text
//! t(iπ/p) = p,    t(0) = ∞,    t(l) = ∞̄  for l > 0.
//! ```
//!
//! All row formulas consume a half-length through `cosh`, `cosh²`, or
//! `sinh²`, which stay real on 𝒰.

use std::f64::consts::PI;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exponent::ExtExp;

/// A point of 𝒰: `Angle(p)` is `iπ/p`, `Zero` is `0`, `Len(l)` is `l > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UPoint {
    Angle(u32),
    Zero,
    Len(f64),
}

impl UPoint {
    /// The type map `t`.
    pub fn t(self) -> ExtExp {
        match self {
            UPoint::Angle(p) => ExtExp::Fin(p),
            UPoint::Zero => ExtExp::Inf,
            UPoint::Len(_) => ExtExp::BarInf,
        }
    }

    /// `cosh u`: `cos(π/p)`, `1`, or `cosh l`.
    pub fn cosh(self) -> f64 {
        match self {
            UPoint::Angle(p) => (PI / f64::from(p)).cos(),
            UPoint::Zero => 1.0,
            UPoint::Len(l) => l.cosh(),
        }
    }

    /// `cosh² u`: `cos²(π/p)`, `1`, or `cosh² l`.
    pub fn cosh_sq(self) -> f64 {
        let c = self.cosh();
        c * c
    }

    /// `sinh² u`: `−sin²(π/p)`, `0`, or `sinh² l`.
    pub fn sinh_sq(self) -> f64 {
        match self {
            UPoint::Angle(p) => {
                let s = (PI / f64::from(p)).sin();
                -s * s
            }
            UPoint::Zero => 0.0,
            UPoint::Len(l) => {
                let s = l.sinh();
                s * s
            }
        }
    }
}

impl fmt::Display for UPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UPoint::Angle(p) => write!(f, "angle:{p}"),
            UPoint::Zero => write!(f, "zero"),
            UPoint::Len(l) => write!(f, "len:{l}"),
        }
    }
}

impl std::str::FromStr for UPoint {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "zero" {
            return Ok(UPoint::Zero);
        }
        if let Some(p) = s.strip_prefix("angle:") {
            return p
                .parse::<u32>()
                .ok()
                .filter(|&p| p >= 2)
                .map(UPoint::Angle)
                .ok_or_else(|| format!("bad angle denominator in {s:?}"));
        }
        if let Some(l) = s.strip_prefix("len:") {
            return l
                .parse::<f64>()
                .ok()
                .filter(|l| *l > 0.0 && l.is_finite())
                .map(UPoint::Len)
                .ok_or_else(|| format!("bad length in {s:?}"));
        }
        Err(format!("not a half-length: {s:?}"))
    }
}

impl Serialize for UPoint {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for UPoint {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        String::deserialize(de)?.parse().map_err(D::Error::custom)
    }
}

/// `β = 4 sinh² u`: the squared-trace parameter of an element with complex
/// translation half-length u. Lands in `[−4, 0)` for rotations, `0` for
/// parabolics, `(0, ∞)` for hyperbolics.
pub fn beta_from_upoint(u: UPoint) -> f64 {
    4.0 * u.sinh_sq()
}

/// `γ = −4 cosh² w`: the commutator parameter carried by a half-length w.
/// `Angle(2)` is rejected — it would give γ = 0, a reducible pair.
pub fn gamma_from_upoint(w: UPoint) -> Result<f64, UPointError> {
    if w == UPoint::Angle(2) {
        return Err(UPointError::ZeroGamma);
    }
    Ok(-4.0 * w.cosh_sq())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum UPointError {
    #[error("a quarter-turn half-length gives γ = 0, which no irreducible pair attains")]
    ZeroGamma,
}

/// Constraint a table row places on the type `t(u)` of a half-length slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlotCond {
    /// Lower bound on `t(u)` (infinite values always pass, by the order).
    pub min: u32,
    pub parity: SlotParity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotParity {
    /// No parity condition.
    Any,
    /// `(t(u), 2) = 1`: finite and odd.
    OddFinite,
    /// `(t(u), 2) = 2`: even, `∞`, or `∞̄`.
    EvenOrInfinite,
}

impl SlotCond {
    pub const fn any(min: u32) -> Self {
        SlotCond {
            min,
            parity: SlotParity::Any,
        }
    }
    pub const fn odd(min: u32) -> Self {
        SlotCond {
            min,
            parity: SlotParity::OddFinite,
        }
    }
    pub const fn even(min: u32) -> Self {
        SlotCond {
            min,
            parity: SlotParity::EvenOrInfinite,
        }
    }

    pub fn admits(&self, t: ExtExp) -> bool {
        let parity_ok = match self.parity {
            SlotParity::Any => true,
            SlotParity::OddFinite => t.is_odd(),
            SlotParity::EvenOrInfinite => t.is_even_or_infinite(),
        };
        parity_ok && t >= self.min
    }
}

/// Result of inverting a row formula for one slot.
#[derive(Debug, Clone, PartialEq)]
pub enum SlotMatch {
    Hit(UPoint),
    Miss,
    /// The inversion lands on an integer beyond the search bound, so the
    /// slot can be neither confirmed nor excluded at this tolerance.
    Unresolved,
}

impl SlotMatch {
    pub fn hit(self) -> Option<UPoint> {
        match self {
            SlotMatch::Hit(u) => Some(u),
            _ => None,
        }
    }
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

/// Candidate integers around a real-valued inversion, clamped to `[2, ∞)`.
fn integer_candidates(approx: f64) -> impl Iterator<Item = u32> {
    let base = approx.round();
    [-1.0, 0.0, 1.0]
        .into_iter()
        .map(move |d| base + d)
        .filter(|p| *p >= 2.0 && *p <= f64::from(u32::MAX))
        .map(|p| p as u32)
}

/// Invert `β = 4 sinh² u` over 𝒰.
pub fn upoint_from_beta(beta: f64, cond: SlotCond, tol: f64, bound: u32) -> SlotMatch {
    if beta.abs() <= tol {
        return if cond.admits(ExtExp::Inf) {
            SlotMatch::Hit(UPoint::Zero)
        } else {
            SlotMatch::Miss
        };
    }
    if beta > 0.0 {
        let u = UPoint::Len((beta.sqrt() / 2.0).asinh());
        return if cond.admits(ExtExp::BarInf) {
            SlotMatch::Hit(u)
        } else {
            SlotMatch::Miss
        };
    }
    if beta < -4.0 - tol {
        return SlotMatch::Miss;
    }
    let approx = PI / ((-beta).sqrt() / 2.0).min(1.0).asin();
    angle_candidate(
        approx,
        |p| 4.0 * UPoint::Angle(p).sinh_sq(),
        beta,
        cond,
        tol,
        bound,
    )
}

/// Invert `γ = −4 cosh² w` over 𝒰.
pub fn upoint_from_neg4_cosh_sq(gamma: f64, cond: SlotCond, tol: f64, bound: u32) -> SlotMatch {
    upoint_from_cosh_sq(-gamma / 4.0, cond, tol, bound)
}

/// Invert `c = cosh² u` over 𝒰.
pub fn upoint_from_cosh_sq(c: f64, cond: SlotCond, tol: f64, bound: u32) -> SlotMatch {
    if rel_close(c, 1.0, tol) {
        return if cond.admits(ExtExp::Inf) {
            SlotMatch::Hit(UPoint::Zero)
        } else {
            SlotMatch::Miss
        };
    }
    if c > 1.0 {
        let u = UPoint::Len(c.sqrt().acosh());
        return if cond.admits(ExtExp::BarInf) {
            SlotMatch::Hit(u)
        } else {
            SlotMatch::Miss
        };
    }
    if c < -tol {
        return SlotMatch::Miss;
    }
    let approx = PI / c.max(0.0).sqrt().acos();
    angle_candidate(approx, |p| UPoint::Angle(p).cosh_sq(), c, cond, tol, bound)
}

/// Invert `c = cosh u` over 𝒰 (first power; used by the rows whose β′ cell
/// is linear in `cosh v`).
pub fn upoint_from_cosh(c: f64, cond: SlotCond, tol: f64, bound: u32) -> SlotMatch {
    if rel_close(c, 1.0, tol) {
        return if cond.admits(ExtExp::Inf) {
            SlotMatch::Hit(UPoint::Zero)
        } else {
            SlotMatch::Miss
        };
    }
    if c > 1.0 {
        let u = UPoint::Len(c.acosh());
        return if cond.admits(ExtExp::BarInf) {
            SlotMatch::Hit(u)
        } else {
            SlotMatch::Miss
        };
    }
    if c < -tol {
        return SlotMatch::Miss;
    }
    let approx = PI / c.clamp(0.0, 1.0).acos();
    angle_candidate(approx, |p| UPoint::Angle(p).cosh(), c, cond, tol, bound)
}

fn angle_candidate(
    approx: f64,
    value: impl Fn(u32) -> f64,
    target: f64,
    cond: SlotCond,
    tol: f64,
    bound: u32,
) -> SlotMatch {
    if !approx.is_finite() {
        return SlotMatch::Miss;
    }
    for p in integer_candidates(approx) {
        if p <= bound && cond.admits(ExtExp::Fin(p)) && rel_close(value(p), target, tol) {
            return SlotMatch::Hit(UPoint::Angle(p));
        }
    }
    if approx > f64::from(bound) + 0.5 {
        SlotMatch::Unresolved
    } else {
        SlotMatch::Miss
    }
}

/// Same candidate logic for bare integer slots (`n = round(approx)` checked
/// back against the row formula).
pub fn integer_from(
    approx: f64,
    value: impl Fn(u32) -> f64,
    target: f64,
    accept: impl Fn(u32) -> bool,
    tol: f64,
    bound: u32,
) -> SlotMatch {
    if !approx.is_finite() {
        return SlotMatch::Miss;
    }
    for n in integer_candidates(approx) {
        if n <= bound && accept(n) && rel_close(value(n), target, tol) {
            return SlotMatch::Hit(UPoint::Angle(n));
        }
    }
    if approx > f64::from(bound) + 0.5 {
        SlotMatch::Unresolved
    } else {
        SlotMatch::Miss
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-9;

    #[test]
    fn type_map() {
        assert_eq!(UPoint::Angle(5).t(), ExtExp::Fin(5));
        assert_eq!(UPoint::Zero.t(), ExtExp::Inf);
        assert_eq!(UPoint::Len(0.7).t(), ExtExp::BarInf);
    }

    #[test]
    fn beta_values() {
        // 4 sinh²(iπ/3) = −4 sin²(π/3) = −3
        assert!((beta_from_upoint(UPoint::Angle(3)) + 3.0).abs() < 1e-12);
        assert_eq!(beta_from_upoint(UPoint::Zero), 0.0);
        let l = 1f64.asinh();
        assert!((beta_from_upoint(UPoint::Len(l)) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn gamma_values() {
        assert!((gamma_from_upoint(UPoint::Zero).unwrap() + 4.0).abs() < 1e-15);
        assert!((gamma_from_upoint(UPoint::Angle(3)).unwrap() + 1.0).abs() < 1e-12);
        let l = (2f64).sqrt().acosh();
        assert!((gamma_from_upoint(UPoint::Len(l)).unwrap() + 8.0).abs() < 1e-12);
        assert_eq!(
            gamma_from_upoint(UPoint::Angle(2)),
            Err(UPointError::ZeroGamma)
        );
    }

    #[test]
    fn invert_beta() {
        for p in 2..=60 {
            let beta = 4.0 * UPoint::Angle(p).sinh_sq();
            let got = upoint_from_beta(beta, SlotCond::any(2), TOL, 200);
            assert_eq!(got, SlotMatch::Hit(UPoint::Angle(p)), "p={p}");
        }
        assert_eq!(
            upoint_from_beta(0.0, SlotCond::any(3), TOL, 200),
            SlotMatch::Hit(UPoint::Zero)
        );
        match upoint_from_beta(2.5, SlotCond::any(3), TOL, 200) {
            SlotMatch::Hit(UPoint::Len(l)) => {
                assert!((4.0 * l.sinh() * l.sinh() - 2.5).abs() < 1e-12)
            }
            other => panic!("expected length, got {other:?}"),
        }
        // below −4: not a half-length
        assert_eq!(
            upoint_from_beta(-4.5, SlotCond::any(2), TOL, 200),
            SlotMatch::Miss
        );
        // irrational angle
        assert_eq!(
            upoint_from_beta(-1.234, SlotCond::any(2), TOL, 200),
            SlotMatch::Miss
        );
        // beyond the bound
        let tiny = 4.0 * UPoint::Angle(500).sinh_sq();
        assert_eq!(
            upoint_from_beta(tiny, SlotCond::any(2), TOL, 200),
            SlotMatch::Unresolved
        );
    }

    #[test]
    fn invert_gamma() {
        assert_eq!(
            upoint_from_neg4_cosh_sq(-4.0, SlotCond::even(2), TOL, 200),
            SlotMatch::Hit(UPoint::Zero)
        );
        assert_eq!(
            upoint_from_neg4_cosh_sq(-1.0, SlotCond::any(2), TOL, 200),
            SlotMatch::Hit(UPoint::Angle(3))
        );
        // odd slot rejects the even denominator
        assert_eq!(
            upoint_from_neg4_cosh_sq(-3.0, SlotCond::odd(2), TOL, 200),
            SlotMatch::Miss
        );
        match upoint_from_neg4_cosh_sq(-8.0, SlotCond::even(2), TOL, 200) {
            SlotMatch::Hit(UPoint::Len(l)) => assert!((l.cosh() - 2f64.sqrt()).abs() < 1e-12),
            other => panic!("expected length, got {other:?}"),
        }
    }

    #[test]
    fn slot_conditions() {
        assert!(SlotCond::any(3).admits(ExtExp::Inf));
        assert!(SlotCond::any(3).admits(ExtExp::BarInf));
        assert!(!SlotCond::any(3).admits(ExtExp::Fin(2)));
        assert!(SlotCond::odd(3).admits(ExtExp::Fin(9)));
        assert!(!SlotCond::odd(3).admits(ExtExp::Inf));
        assert!(SlotCond::even(4).admits(ExtExp::Inf));
        assert!(!SlotCond::even(4).admits(ExtExp::Fin(2)));
    }
}
