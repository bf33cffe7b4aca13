//! Matrix pairs with prescribed trace parameters.
//!
//! The normal form is
//!
//! ```text
//! F = [ s  1 ]      G = [ t  0 ]
//!     [ 0 1/s ],        [ r 1/t ],
//! ```
//!
//! with `(s − 1/s)² = β`, `(t − 1/t)² = β′`, and `r` a root of
//! `r² + r·σσ′ − γ = 0` where `σ = s − 1/s`, `σ′ = t − 1/t`. Expanding the
//! commutator trace of the normal form gives `tr[F,G] − 2 = r² + r·σσ′`
//! identically, which pins γ; the identity is kept under test on random
//! samples.

use num_complex::Complex64;
use thiserror::Error;

use crate::matrix::{Mat2C, DET_TOL};
use crate::trace::Parameters;
use crate::word::Word;
use crate::Config;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixPair {
    pub f: Mat2C,
    pub g: Mat2C,
    pub params: Parameters,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RealizeError {
    #[error("word uses symbol {0:?}, pair binds only f and g")]
    UnboundSymbol(char),
    #[error("commutator is ±identity (γ ≈ {gamma}): no half root")]
    NoCommutator { gamma: f64 },
    #[error("rotation angle must lie in (0, π), got {0}")]
    AngleRange(f64),
}

fn csqrt(x: f64) -> Complex64 {
    Complex64::from(x).sqrt()
}

/// Solve `x − 1/x = σ` with `σ² = β`, taking principal branches. For
/// β ∈ [−4, 0) this lands on `exp(i·arcsin(√−β/2))`, for β ≥ 0 on
/// `exp(arcsinh(√β/2))`.
fn half_trace_root(beta: f64) -> Complex64 {
    (csqrt(beta) + csqrt(beta + 4.0)) / 2.0
}

/// Construct the normal-form pair for any finite real triple.
///
/// Root choice for `r`: non-negative imaginary part, ties broken by
/// non-negative real part, so realizations are deterministic. γ ≈ 0 yields
/// `r = 0` (a reducible pair), flagged by [`MatrixPair::is_reducible`].
pub fn realize(p: Parameters, _cfg: &Config) -> MatrixPair {
    let s = half_trace_root(p.beta);
    let t = half_trace_root(p.beta_prime);
    let sigma = s - 1.0 / s;
    let sigma_p = t - 1.0 / t;
    let b = sigma * sigma_p; // real or purely imaginary; (σσ′)² is real
    let disc = b * b + 4.0 * p.gamma;
    let root = disc.sqrt();
    let r1 = (-b + root) / 2.0;
    let r2 = (-b - root) / 2.0;
    let r = if (r1.im, r1.re) >= (r2.im, r2.re) {
        r1
    } else {
        r2
    };
    let f = Mat2C::new(s, 1.0.into(), 0.0.into(), 1.0 / s);
    let g = Mat2C::new(t, 0.0.into(), r, 1.0 / t);
    MatrixPair { f, g, params: p }
}

impl MatrixPair {
    /// Recompute (β, β′, γ) from the matrices.
    pub fn measured_params(&self) -> Parameters {
        let tf = self.f.trace();
        let tg = self.g.trace();
        let k = self.commutator();
        Parameters {
            beta: (tf * tf - 4.0).re,
            beta_prime: (tg * tg - 4.0).re,
            gamma: (k.trace() - 2.0).re,
        }
    }

    pub fn commutator(&self) -> Mat2C {
        self.f * self.g * self.f.inverse() * self.g.inverse()
    }

    /// γ ≈ 0 means the pair shares a fixed point and generates an
    /// elementary group.
    pub fn is_reducible(&self, cfg: &Config) -> bool {
        self.params.gamma.abs() <= cfg.tol
    }
}

/// Evaluate a word over the pair's symbols (`f`, `g`), renormalizing
/// determinant drift as powers accumulate. The empty word is the identity.
pub fn evaluate_word(w: &Word, pair: &MatrixPair) -> Result<Mat2C, RealizeError> {
    let mut acc = Mat2C::identity();
    for &(gen, e) in w.letters() {
        let base = match gen.0 {
            'f' => pair.f,
            'g' => pair.g,
            other => return Err(RealizeError::UnboundSymbol(other)),
        };
        acc = (acc * base.powi(e.into())).renormalized();
    }
    debug_assert!((acc.det() - Complex64::from(1.0)).norm() <= DET_TOL);
    Ok(acc)
}

/// Both square-root candidates of K = `[F,G]` as elements of PSL(2,ℂ).
///
/// For tr K ≠ −2 the root squaring to +K is `(K + I)/√(tr K + 2)`; for
/// tr K ≠ +2 the other PSL root lifts to `(I − K)/√(2 − tr K)`, which
/// squares to −K. A parabolic commutator admits exactly one.
pub fn sqrt_candidates(k: &Mat2C) -> Vec<Mat2C> {
    let tr = k.trace();
    let id = Mat2C::identity();
    let mut out = Vec::new();
    if (tr + 2.0).norm() > 1e-12 {
        out.push(k.add(&id).scale(1.0 / (tr + 2.0).sqrt()));
    }
    if (tr - 2.0).norm() > 1e-12 {
        out.push(id.sub(k).scale(1.0 / (Complex64::from(2.0) - tr).sqrt()));
    }
    out
}

/// The half root of the commutator: the element h with `h² = [f,g]` and
/// `(hg)² = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfRoot {
    pub h: Mat2C,
    /// `|tr(h·g)|`; the involution condition `(hg)² = 1` is `tr(hg) = 0`.
    pub involution_defect: f64,
    /// The rejected candidate, when the commutator is not parabolic.
    pub rejected: Option<Mat2C>,
    /// Set when zero or both candidates meet the trace condition — the pair
    /// is outside the two-orthogonal-elliptics setting, both roots are
    /// reported.
    pub not_unique: bool,
}

/// Compute the square root h of `[F,G]` selected by `tr(hG) = 0`.
///
/// Exactly one of the two PSL square roots satisfies the condition when the
/// generators are elliptic with orthogonal axes; the other root h̄ has
/// `(h̄g)² ≠ 1`. A parabolic commutator has a unique square root, which is
/// returned with the condition checked.
pub fn commutator_half_root(pair: &MatrixPair, cfg: &Config) -> Result<HalfRoot, RealizeError> {
    let k = pair.commutator();
    if k.dist_pm_identity() <= cfg.tol {
        return Err(RealizeError::NoCommutator {
            gamma: pair.params.gamma,
        });
    }
    let cands = sqrt_candidates(&k);
    let defect = |h: &Mat2C| (*h * pair.g).trace().norm();
    match cands.as_slice() {
        [h] => Ok(HalfRoot {
            h: *h,
            involution_defect: defect(h),
            rejected: None,
            not_unique: false,
        }),
        [h1, h2] => {
            let (d1, d2) = (defect(h1), defect(h2));
            let pass1 = d1 <= cfg.tol;
            let pass2 = d2 <= cfg.tol;
            let (h, hbar, d) = if d1 <= d2 {
                (*h1, *h2, d1)
            } else {
                (*h2, *h1, d2)
            };
            Ok(HalfRoot {
                h,
                involution_defect: d,
                rejected: Some(hbar),
                not_unique: pass1 == pass2,
            })
        }
        _ => Err(RealizeError::NoCommutator {
            gamma: pair.params.gamma,
        }),
    }
}

/// γ from the rotation angle φ ∈ (0, π) of the commutator's half root:
/// `γ = −2 cos φ − 2`, the branch fixed by `tr[f,g] → −2` as `φ → 0`.
pub fn gamma_of_angle(phi: f64) -> Result<f64, RealizeError> {
    if !(phi > 0.0 && phi < std::f64::consts::PI) {
        return Err(RealizeError::AngleRange(phi));
    }
    Ok(-2.0 * phi.cos() - 2.0)
}

/// Inverse of [`gamma_of_angle`] for γ ∈ (−4, 0).
pub fn angle_of_gamma(gamma: f64) -> Result<f64, RealizeError> {
    if !(gamma > -4.0 && gamma < 0.0) {
        return Err(RealizeError::AngleRange(gamma));
    }
    Ok((-(gamma + 2.0) / 2.0).acos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::beta_elliptic;
    use std::f64::consts::PI;

    fn cfg() -> Config {
        Config::default()
    }

    fn pair(beta: f64, beta_prime: f64, gamma: f64) -> MatrixPair {
        realize(Parameters::new(beta, beta_prime, gamma), &cfg())
    }

    #[test]
    fn doubly_parabolic() {
        // σ = σ′ = 0 forces γ = r²; here r = 2i and tr[F,G] = −2
        let p = pair(0.0, 0.0, -4.0);
        assert!((p.g.c - Complex64::new(0.0, 2.0)).norm() < 1e-12);
        assert!((p.commutator().trace() + 2.0).norm() < 1e-12);
    }

    #[test]
    fn recompute_examples() {
        let s5 = 5f64.sqrt();
        for (b, bp, g) in [
            (-3.0, s5 - 1.0, (s5 - 1.0) / 2.0),
            (-3.0, -3.0, -3.0),
            (2.5, -1.5, -7.0),
            (-4.2, 0.3, 1.7), // π-loxodromic side still realizes
        ] {
            let m = pair(b, bp, g).measured_params();
            assert!((m.beta - b).abs() < 1e-10, "beta {b}");
            assert!((m.beta_prime - bp).abs() < 1e-10);
            assert!((m.gamma - g).abs() < 1e-10);
        }
        // order-3 commutator: tr[F,G] = −1 and [F,G]³ = ±I
        let p = pair(-3.0, -3.0, -3.0);
        assert!((p.commutator().trace() + 1.0).norm() < 1e-12);
        assert!(p.commutator().powi(3).dist_pm_identity() < 1e-12);
    }

    #[test]
    fn reducible_flag() {
        assert!(pair(-3.0, -2.0, 0.0).is_reducible(&cfg()));
        assert!(!pair(-3.0, -2.0, -1.0).is_reducible(&cfg()));
    }

    #[test]
    fn word_evaluation() {
        let p = pair(-3.0, -3.0, -3.0);
        assert_eq!(
            evaluate_word(&Word::empty(), &p).unwrap(),
            Mat2C::identity()
        );
        let w = Word::from_letters([('f', 1), ('f', -1)]);
        assert!(evaluate_word(&w, &p).unwrap().dist_pm_identity() < 1e-14);
        let c = Word::commutator(&Word::gen('f'), &Word::gen('g'));
        let m = evaluate_word(&c, &p).unwrap();
        assert!((m.trace() - Complex64::from(-1.0)).norm() < 1e-12);
        let bad = Word::gen('x');
        assert!(matches!(
            evaluate_word(&bad, &p),
            Err(RealizeError::UnboundSymbol('x'))
        ));
    }

    #[test]
    fn half_root_two_elliptic() {
        let c = cfg();
        let p = pair(beta_elliptic(3), beta_elliptic(3), -3.0);
        let hr = commutator_half_root(&p, &c).unwrap();
        assert!(!hr.not_unique);
        assert!(hr.involution_defect <= 1e-10);
        let k = p.commutator();
        assert!((hr.h * hr.h).dist_pm(&k) < 1e-10);
        // the rejected root fails the involution condition decisively
        let hbar = hr.rejected.unwrap();
        assert!((hbar * p.g).trace().norm() > 1e-3);
    }

    #[test]
    fn half_root_parabolic_commutator() {
        let c = cfg();
        let p = pair(beta_elliptic(3), beta_elliptic(4), -4.0);
        let hr = commutator_half_root(&p, &c).unwrap();
        assert!(hr.rejected.is_none());
        assert!(hr.involution_defect <= 1e-10);
        assert!((hr.h * hr.h).dist_pm(&p.commutator()) < 1e-10);
    }

    #[test]
    fn half_root_rejects_trivial_commutator() {
        let c = cfg();
        // γ = 0 with β′ = 0 makes G the identity, so [F,G] = I exactly
        let p = pair(-3.0, 0.0, 0.0);
        assert!(matches!(
            commutator_half_root(&p, &c),
            Err(RealizeError::NoCommutator { .. })
        ));
        // γ = 0 with nontrivial G leaves a parabolic commutator: a single
        // root comes back, with its involution defect reported
        let p = pair(-3.0, -2.0, 0.0);
        let hr = commutator_half_root(&p, &c).unwrap();
        assert!((hr.h * hr.h).dist_pm(&p.commutator()) < 1e-10);
    }

    #[test]
    fn angle_bridge() {
        assert!((gamma_of_angle(2.0 * PI / 3.0).unwrap() + 1.0).abs() < 1e-12);
        // φ → 0⁺ drives γ → −4
        assert!((gamma_of_angle(1e-8).unwrap() + 4.0).abs() < 1e-12);
        // γ = −4 cos²(π/p) corresponds to φ = 2π/p
        for p in 3..=12u32 {
            let g = -4.0 * (PI / f64::from(p)).cos().powi(2);
            let phi = angle_of_gamma(g).unwrap();
            assert!((phi - 2.0 * PI / f64::from(p)).abs() < 1e-12, "p={p}");
        }
        assert!(gamma_of_angle(-0.1).is_err());
        assert!(angle_of_gamma(0.5).is_err());
    }
}
