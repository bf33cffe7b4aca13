//! 2×2 complex matrices of unit determinant.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Determinant drift beyond which words renormalize back to SL(2,ℂ).
pub const DET_TOL: f64 = 1e-12;

/// Row-major 2×2 complex matrix. Construction keeps `det ≈ 1`; long products
/// renormalize by the principal square root of the determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2C {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl Mat2C {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2C { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2C::new(1.0.into(), 0.0.into(), 0.0.into(), 1.0.into())
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// Inverse for unit-determinant matrices: the adjugate divided by det.
    pub fn inverse(&self) -> Mat2C {
        let det = self.det();
        Mat2C::new(self.d / det, -self.b / det, -self.c / det, self.a / det)
    }

    pub fn scale(&self, k: Complex64) -> Mat2C {
        Mat2C::new(self.a * k, self.b * k, self.c * k, self.d * k)
    }

    pub fn add(&self, rhs: &Mat2C) -> Mat2C {
        Mat2C::new(
            self.a + rhs.a,
            self.b + rhs.b,
            self.c + rhs.c,
            self.d + rhs.d,
        )
    }

    pub fn sub(&self, rhs: &Mat2C) -> Mat2C {
        Mat2C::new(
            self.a - rhs.a,
            self.b - rhs.b,
            self.c - rhs.c,
            self.d - rhs.d,
        )
    }

    pub fn neg(&self) -> Mat2C {
        self.scale((-1.0).into())
    }

    /// Entrywise max norm.
    pub fn norm_inf(&self) -> f64 {
        self.a
            .norm()
            .max(self.b.norm())
            .max(self.c.norm())
            .max(self.d.norm())
    }

    /// Divide by the principal square root of the determinant when it has
    /// drifted.
    pub fn renormalized(&self) -> Mat2C {
        let det = self.det();
        if (det - Complex64::from(1.0)).norm() > DET_TOL / 2.0 {
            self.scale(1.0 / det.sqrt())
        } else {
            *self
        }
    }

    /// Integer power by repeated squaring, renormalizing drift.
    pub fn powi(&self, k: i64) -> Mat2C {
        if k == 0 {
            return Mat2C::identity();
        }
        let mut base = if k < 0 { self.inverse() } else { *self };
        let mut e = k.unsigned_abs();
        let mut acc = Mat2C::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = (acc * base).renormalized();
            }
            base = (base * base).renormalized();
            e >>= 1;
        }
        acc
    }

    /// Entrywise distance to the nearer of ±identity. In PSL(2,ℂ) a relator
    /// holds when its matrix is +I or −I.
    pub fn dist_pm_identity(&self) -> f64 {
        let id = Mat2C::identity();
        self.sub(&id).norm_inf().min(self.add(&id).norm_inf())
    }

    /// Entrywise distance to the nearer of ±rhs.
    pub fn dist_pm(&self, rhs: &Mat2C) -> f64 {
        self.sub(rhs).norm_inf().min(self.add(rhs).norm_inf())
    }
}

impl Mul for Mat2C {
    type Output = Mat2C;

    fn mul(self, rhs: Mat2C) -> Mat2C {
        Mat2C::new(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }
}

impl fmt::Display for Mat2C {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

// Wire form: [[re,im], [re,im], [re,im], [re,im]] in row-major order.
impl Serialize for Mat2C {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(4))?;
        for z in [self.a, self.b, self.c, self.d] {
            seq.serialize_element(&[z.re, z.im])?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Mat2C {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw: [[f64; 2]; 4] = Deserialize::deserialize(de)?;
        let z = |p: [f64; 2]| Complex64::new(p[0], p[1]);
        Ok(Mat2C::new(z(raw[0]), z(raw[1]), z(raw[2]), z(raw[3])))
    }
}
