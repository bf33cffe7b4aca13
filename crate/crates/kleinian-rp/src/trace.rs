//! Trace-parameter algebra.
//!
//! An element f ∈ PSL(2,ℂ) with real β = tr²f − 4 is elliptic, parabolic,
//! hyperbolic, or π-loxodromic according to whether β lies in `[−4, 0)`,
//! `{0}`, `(0, ∞)`, or `(−∞, −4)`. A pair (f, g) is described by
//! (β, β′, γ) with γ = tr`[f,g]` − 2; the class-D gate
//! `β > −4 ∧ β′ > −4 ∧ γ < −ββ′/4 ∧ γ ≠ 0` cuts out exactly the
//! non-elementary RP groups without invariant plane whose generators are
//! elliptic, parabolic, or hyperbolic.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exponent::gcd_u32;
use crate::Config;

/// The real triple (β, β′, γ).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub beta: f64,
    pub beta_prime: f64,
    pub gamma: f64,
}

impl Parameters {
    pub fn new(beta: f64, beta_prime: f64, gamma: f64) -> Self {
        Parameters {
            beta,
            beta_prime,
            gamma,
        }
    }

    /// The triple with the generator roles exchanged; γ is symmetric in
    /// f and g.
    pub fn swapped(self) -> Self {
        Parameters {
            beta: self.beta_prime,
            beta_prime: self.beta,
            gamma: self.gamma,
        }
    }

    /// All three fields finite, i.e. the pair is an RP pair at all.
    pub fn is_finite(self) -> bool {
        self.beta.is_finite() && self.beta_prime.is_finite() && self.gamma.is_finite()
    }
}

impl fmt::Display for Parameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(β={}, β′={}, γ={})",
            self.beta, self.beta_prime, self.gamma
        )
    }
}

/// Element type of a single generator, refined for elliptics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ElementClass {
    /// Rotation through `2πq/n` with `gcd(q, n) = 1`; primitive iff `q = 1`.
    Elliptic {
        order: u32,
        turns: u32,
    },
    Parabolic,
    /// `translation_length = 2 arcsinh(√β / 2)`.
    Hyperbolic {
        translation_length: f64,
    },
    /// Elliptic whose rotation angle was not recognised as a rational
    /// multiple of π within the order search bound.
    EllipticIrrational {
        angle: f64,
    },
}

impl ElementClass {
    pub fn is_primitive(self) -> bool {
        matches!(self, ElementClass::Elliptic { turns: 1, .. })
    }
}

/// Total classification of a real β, including the rejected type.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ElementType {
    Admissible(ElementClass),
    /// β < −4: real trace squared is negative. Not a class-D generator,
    /// reported rather than silently mapped.
    PiLoxodromic {
        beta: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TraceError {
    #[error("invalid rotation data (q, n) = ({q}, {n}): need gcd(q,n)=1 and 1 < q < n/2")]
    InvalidRotation { n: u32, q: u32 },
    #[error("β must be finite, got {0}")]
    NonFiniteBeta(f64),
}

/// β of a primitive elliptic of order n, `−4 sin²(π/n)`.
pub fn beta_elliptic(n: u32) -> f64 {
    let s = (PI / f64::from(n)).sin();
    -4.0 * s * s
}

/// β of a rotation through `2πq/n`, `−4 sin²(πq/n)`.
pub fn beta_rotation(q: u32, n: u32) -> f64 {
    let s = (PI * f64::from(q) / f64::from(n)).sin();
    -4.0 * s * s
}

/// Classify a generator from β.
///
/// Elliptic β are matched against rotations `2πq/n` with
/// `n ≤ cfg.order_bound`; beyond the bound the angle is reported as
/// irrational. β = −4 classifies as the order-2 half turn; the class-D gate,
/// not the classifier, rejects it.
pub fn classify_element(beta: f64, cfg: &Config) -> Result<ElementType, TraceError> {
    if !beta.is_finite() {
        return Err(TraceError::NonFiniteBeta(beta));
    }
    if beta < -4.0 - cfg.tol * 4.0 {
        return Ok(ElementType::PiLoxodromic { beta });
    }
    if beta.abs() <= cfg.tol {
        return Ok(ElementType::Admissible(ElementClass::Parabolic));
    }
    if beta > 0.0 {
        let d = 2.0 * (beta.sqrt() / 2.0).asinh();
        return Ok(ElementType::Admissible(ElementClass::Hyperbolic {
            translation_length: d,
        }));
    }
    // β ∈ [−4, 0): rotation angle θ with β = −4 sin²(θ/2), θ ∈ (0, π]
    let theta = 2.0 * ((-beta).sqrt() / 2.0).min(1.0).asin();
    for n in 2..=cfg.order_bound {
        let q = (theta * f64::from(n) / (2.0 * PI)).round();
        if q < 1.0 || 2.0 * q > f64::from(n) {
            continue;
        }
        let q = q as u32;
        if gcd_u32(q, n) != 1 {
            continue;
        }
        let value = beta_rotation(q, n);
        if (value - beta).abs() <= cfg.tol * 1f64.max(beta.abs()) {
            return Ok(ElementType::Admissible(ElementClass::Elliptic {
                order: n,
                turns: q,
            }));
        }
    }
    Ok(ElementType::Admissible(ElementClass::EllipticIrrational {
        angle: theta,
    }))
}

/// The class-D membership gate: `β > −4, β′ > −4, γ < −ββ′/4, γ ≠ 0`.
///
/// The inequalities are compared exactly; only `γ ≠ 0` carries a tolerance,
/// since γ = 0 (a reducible pair) is numerically indistinguishable from
/// near-zero.
pub fn is_class_d(p: Parameters, cfg: &Config) -> bool {
    p.is_finite()
        && p.beta > -4.0
        && p.beta_prime > -4.0
        && p.gamma < -p.beta * p.beta_prime / 4.0
        && p.gamma.abs() > cfg.tol
}

/// Replace a non-primitive elliptic generator by a primitive power.
///
/// For f a rotation through `2πq/n` with `gcd(q, n) = 1`, `1 < q < n/2`,
/// the power `r = q⁻¹ mod n` makes `fʳ` a rotation through exactly `2π/n`,
/// and γ rescales by `β(fʳ)/β(f) = sin²(π/n) / sin²(πq/n)`.
pub fn reduce_to_primitive(n: u32, q: u32, gamma: f64) -> Result<(u32, f64), TraceError> {
    if n < 5 || q <= 1 || 2 * q >= n || gcd_u32(q, n) != 1 {
        return Err(TraceError::InvalidRotation { n, q });
    }
    let r = (1..n)
        .find(|r| (q as u64 * *r as u64) % n as u64 == 1)
        .expect("q is invertible mod n when gcd(q,n)=1");
    let scale = beta_elliptic(n) / beta_rotation(q, n);
    Ok((r, scale * gamma))
}
