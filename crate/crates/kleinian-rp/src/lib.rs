//! Two-generator subgroups of PSL(2,ℂ) with real trace parameters.
//!
//! A pair (f, g) of Möbius transformations is described up to conjugacy by the
//! three trace parameters
//!
//! ```text
//! β  = tr²f − 4,    β′ = tr²g − 4,    γ = tr[f,g] − 2.
//! ```
//!
//! When all three are real, the pair generates an "RP group". This crate
//! works with the class of non-elementary Kleinian RP groups without an
//! invariant plane whose generators have real traces (called *class D*
//! throughout), which is cut out of parameter space by
//! `β > −4, β′ > −4, γ < −ββ′/4, γ ≠ 0`.
//!
//! What the library provides:
//!
//! - [`trace`]: the parameter algebra — element-type classification from β,
//!   the class-D membership gate, and reduction of non-primitive elliptic
//!   generators to primitive ones.
//! - [`exponent`] / [`upoint`]: extended relator exponents (finite, `inf`,
//!   `barinf`) with their ordering, gcd, and division conventions, and the
//!   complex translation half-lengths that parametrise the family table.
//! - [`table`]: the 24-row registry of parameter triples for discrete
//!   class-D groups, in both directions: instantiate a row
//!   ([`table::generate_family`]) or decide where a given triple lands
//!   ([`table::classify`], [`table::two_elliptic_discreteness`]).
//! - [`presentation`]: the ten presentation schemas as first-class relator
//!   lists, plus the f,g-words for relators of the two-elliptic families.
//! - [`matrix`] / [`realize`] / [`verify`]: explicit SL(2,ℂ) matrix pairs
//!   with prescribed parameters, word evaluation, numerical relator
//!   verification, and the half-turn square root of the commutator.
//! - [`orbifold`] / [`census`]: singular-graph vertex and cusp rules,
//!   ambient spaces per family, the Gram-matrix hyperbolicity test, and the
//!   finite-volume census.
//!
//! The `kleinian-rp` binary exposes all of this on the command line; see the
//! repository README.

pub mod census;
pub mod exponent;
pub mod expr;
pub mod family;
pub mod matrix;
pub mod orbifold;
pub mod presentation;
pub mod realize;
pub mod table;
pub mod trace;
pub mod upoint;
pub mod verify;
pub mod word;

pub use exponent::ExtExp;
pub use family::{ClassificationResult, FamilyData, FamilyId, FamilyInstance};
pub use matrix::Mat2C;
pub use presentation::{Presentation, Schema};
pub use realize::MatrixPair;
pub use trace::{ElementClass, Parameters};
pub use upoint::UPoint;

/// Numerical policy shared by the search and verification routines.
///
/// All table constants are algebraic numbers evaluated in double precision,
/// so a single relative tolerance is used for matching reals against row
/// formulas; sign conditions are compared exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    /// Relative tolerance for matching reals to table formulas.
    pub tol: f64,
    /// Tolerance for relator matrices against ±identity (word evaluation
    /// accumulates more rounding than plain formula matching).
    pub relator_tol: f64,
    /// Largest integer slot value the inverse search will confirm; a formula
    /// inversion landing beyond this bound reports `Unresolved`.
    pub int_bound: u32,
    /// Search bound for recognising rational rotation angles of elliptic
    /// elements.
    pub order_bound: u32,
    /// Enumeration bound for the infinite families of the finite-volume
    /// census.
    pub census_bound: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            tol: 1e-9,
            relator_tol: 1e-8,
            int_bound: 200,
            order_bound: 1000,
            census_bound: 50,
        }
    }
}

impl Config {
    /// Relative comparison under [`Config::tol`].
    pub fn close(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.tol * 1f64.max(a.abs()).max(b.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // all values are immutable after construction and move freely across
    // threads
    #[test]
    fn core_types_are_send_sync() {
        fn check<T: Send + Sync>() {}
        check::<Parameters>();
        check::<ElementClass>();
        check::<ExtExp>();
        check::<UPoint>();
        check::<FamilyInstance>();
        check::<ClassificationResult>();
        check::<Presentation>();
        check::<Mat2C>();
        check::<MatrixPair>();
        check::<Config>();
        check::<census::CensusEntry>();
        check::<orbifold::SingularGraph>();
    }
}
