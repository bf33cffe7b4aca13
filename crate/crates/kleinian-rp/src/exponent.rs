//! Extended relator exponents.
//!
//! Presentation exponents may be integers, `∞`, or `∞̄`. A relator `w^∞̄`
//! marks a hyperbolic element and is removed from every presentation; `w^∞`
//! marks a parabolic and is kept in Kleinian form but removed from the
//! abstract form. The arithmetic conventions are
//!
//! ```text
//! ∞̄ > ∞ > x            for every real x,
//! x/∞ = x/∞̄ = 0,        ∞/x = ∞, ∞̄/x = ∞̄   for x > 0,
//! gcd(∞, n) = gcd(∞̄, n) = n                 for every positive integer n.
//! ```
//!
//! In particular a condition like `(t, 2) = 1` forces `t` finite and odd.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exponent value: a positive integer, `inf`, or `barinf`.
///
/// Presentation slots require `Fin(k)` with `k ≥ 2`; `Fin(1)` only appears
/// on fixed commutation relators such as `[x,z]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtExp {
    Fin(u32),
    Inf,
    BarInf,
}

impl ExtExp {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtExp::Fin(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            ExtExp::Fin(k) => Some(k),
            _ => None,
        }
    }

    /// gcd with a positive integer, under `gcd(∞, n) = gcd(∞̄, n) = n`.
    pub fn gcd(self, n: u32) -> u32 {
        assert!(n > 0, "gcd with zero is undefined here");
        match self {
            ExtExp::Fin(k) => gcd_u32(k, n),
            ExtExp::Inf | ExtExp::BarInf => n,
        }
    }

    /// Finite and odd, i.e. `(self, 2) = 1`.
    pub fn is_odd(self) -> bool {
        self.gcd(2) == 1
    }

    /// Even, `∞`, or `∞̄`, i.e. `(self, 2) = 2`.
    pub fn is_even_or_infinite(self) -> bool {
        self.gcd(2) == 2
    }

    /// Division by a positive integer. Defined for `Fin(k)` only when `d`
    /// divides `k`; infinite values are fixed by division.
    pub fn checked_div(self, d: u32) -> Option<ExtExp> {
        assert!(d > 0);
        match self {
            ExtExp::Fin(k) => (k % d == 0).then_some(ExtExp::Fin(k / d)),
            inf => Some(inf),
        }
    }

    /// `1/self` with `1/∞ = 1/∞̄ = 0`, as a real number.
    pub fn recip(self) -> f64 {
        match self {
            ExtExp::Fin(k) => 1.0 / f64::from(k),
            ExtExp::Inf | ExtExp::BarInf => 0.0,
        }
    }

    /// `cos(π/self)`, with `π/∞ = π/∞̄ = 0`.
    pub fn cos_pi_over(self) -> f64 {
        match self {
            ExtExp::Fin(k) => (std::f64::consts::PI / f64::from(k)).cos(),
            ExtExp::Inf | ExtExp::BarInf => 1.0,
        }
    }

    /// `sin(π/self)`, with `π/∞ = π/∞̄ = 0`.
    pub fn sin_pi_over(self) -> f64 {
        match self {
            ExtExp::Fin(k) => (std::f64::consts::PI / f64::from(k)).sin(),
            ExtExp::Inf | ExtExp::BarInf => 0.0,
        }
    }
}

impl PartialOrd for ExtExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtExp {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtExp::*;
        match (self, other) {
            (Fin(a), Fin(b)) => a.cmp(b),
            (Fin(_), _) => Ordering::Less,
            (_, Fin(_)) => Ordering::Greater,
            (Inf, Inf) | (BarInf, BarInf) => Ordering::Equal,
            (Inf, BarInf) => Ordering::Less,
            (BarInf, Inf) => Ordering::Greater,
        }
    }
}

impl PartialEq<u32> for ExtExp {
    fn eq(&self, other: &u32) -> bool {
        matches!(self, ExtExp::Fin(k) if k == other)
    }
}

impl PartialOrd<u32> for ExtExp {
    fn partial_cmp(&self, other: &u32) -> Option<Ordering> {
        Some(match self {
            ExtExp::Fin(k) => k.cmp(other),
            _ => Ordering::Greater,
        })
    }
}

impl From<u32> for ExtExp {
    fn from(k: u32) -> Self {
        ExtExp::Fin(k)
    }
}

impl fmt::Display for ExtExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtExp::Fin(k) => write!(f, "{k}"),
            ExtExp::Inf => write!(f, "inf"),
            ExtExp::BarInf => write!(f, "barinf"),
        }
    }
}

impl std::str::FromStr for ExtExp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inf" | "∞" => Ok(ExtExp::Inf),
            "barinf" | "∞̄" => Ok(ExtExp::BarInf),
            _ => {
                let t = s.strip_prefix("fin:").unwrap_or(s);
                t.parse::<u32>()
                    .map(ExtExp::Fin)
                    .map_err(|_| format!("not an exponent: {s:?}"))
            }
        }
    }
}

// Wire form: "fin:k" | "inf" | "barinf".
impl Serialize for ExtExp {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtExp::Fin(k) => ser.serialize_str(&format!("fin:{k}")),
            ExtExp::Inf => ser.serialize_str("inf"),
            ExtExp::BarInf => ser.serialize_str("barinf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtExp {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(D::Error::custom)
    }
}

pub(crate) fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
