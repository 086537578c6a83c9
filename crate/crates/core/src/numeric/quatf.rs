use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{precondition, Error, Result};
use crate::qpoly::QPoly;
use crate::quat::Quaternion;
use crate::rational;

/// A Hamilton quaternion with `f64` coordinates. All components finite.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct QuatF {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl QuatF {
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        if [w, x, y, z].iter().all(|v| v.is_finite()) {
            Ok(Self { w, x, y, z })
        } else {
            precondition(format!("non-finite quaternion ({w}, {x}, {y}, {z})"))
        }
    }

    pub(crate) const fn raw(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub const ZERO: QuatF = QuatF::raw(0.0, 0.0, 0.0, 0.0);
    pub const ONE: QuatF = QuatF::raw(1.0, 0.0, 0.0, 0.0);

    pub fn scalar(w: f64) -> Self {
        Self::raw(w, 0.0, 0.0, 0.0)
    }

    pub fn from_exact(q: &Quaternion) -> Result<Self> {
        let [w, x, y, z] = q.components().map(rational::to_f64);
        Self::new(w, x, y, z)
    }

    pub fn conj(self) -> Self {
        Self::raw(self.w, -self.x, -self.y, -self.z)
    }

    /// Squared Euclidean norm, the reduced norm in Hamilton's algebra.
    pub fn norm(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn abs(self) -> f64 {
        self.norm().sqrt()
    }

    pub fn pure_abs(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn trace(self) -> f64 {
        2.0 * self.w
    }

    pub fn scale(self, s: f64) -> Self {
        Self::raw(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn inv(self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(1.0 / n))
    }

    pub fn pure_part(self) -> Self {
        Self::raw(0.0, self.x, self.y, self.z)
    }

    pub fn components(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }
}

impl Add for QuatF {
    type Output = QuatF;
    fn add(self, o: QuatF) -> QuatF {
        QuatF::raw(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for QuatF {
    type Output = QuatF;
    fn sub(self, o: QuatF) -> QuatF {
        QuatF::raw(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for QuatF {
    type Output = QuatF;
    fn neg(self) -> QuatF {
        self.scale(-1.0)
    }
}

impl Mul for QuatF {
    type Output = QuatF;
    fn mul(self, q: QuatF) -> QuatF {
        let p = self;
        QuatF::raw(
            p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
        )
    }
}

impl fmt::Display for QuatF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:+}i {:+}j {:+}k", self.w, self.x, self.y, self.z)
    }
}

/// A polynomial over the floating-point Hamilton quaternions, constant term
/// first, without trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct QPolyF {
    coeffs: Vec<QuatF>,
}

impl QPolyF {
    pub fn new(mut coeffs: Vec<QuatF>) -> Self {
        while coeffs.last().is_some_and(|c| *c == QuatF::ZERO) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Conversion from an exact polynomial over `(-1, -1)`.
    pub fn from_exact(p: &QPoly) -> Result<Self> {
        if !p.algebra().is_hamilton() {
            return precondition("the numeric backend models the (-1, -1) algebra only");
        }
        let c = p
            .coeffs()
            .iter()
            .map(QuatF::from_exact)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(c))
    }

    pub fn coeffs(&self) -> &[QuatF] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_right(&self, q: QuatF) -> QuatF {
        self.coeffs
            .iter()
            .rev()
            .fold(QuatF::ZERO, |acc, c| acc * q + *c)
    }

    pub fn scale_left(&self, q: QuatF) -> Self {
        Self::new(self.coeffs.iter().map(|c| q * *c).collect())
    }

    /// `P * conj(P)` with the (rounding-level) pure parts dropped.
    pub fn companion(&self) -> Vec<f64> {
        let n = self.coeffs.len();
        if n == 0 {
            return vec![];
        }
        let mut out = vec![0.0; 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in self.coeffs.iter().enumerate() {
                out[i + j] += (*a * b.conj()).w;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_products() {
        let i = QuatF::raw(0.0, 1.0, 0.0, 0.0);
        let j = QuatF::raw(0.0, 0.0, 1.0, 0.0);
        let k = QuatF::raw(0.0, 0.0, 0.0, 1.0);
        assert_eq!(i * j, k);
        assert_eq!(j * i, -k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        assert_eq!(i * i, -QuatF::ONE);
        let q = QuatF::raw(1.0, 2.0, -1.0, 0.5);
        let r = q * q.inv().unwrap();
        assert!((r - QuatF::ONE).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(QuatF::new(f64::NAN, 0.0, 0.0, 0.0).is_err());
        assert!(QuatF::new(0.0, f64::INFINITY, 0.0, 0.0).is_err());
    }

    #[test]
    fn agrees_with_exact_product() {
        use crate::quat::Algebra;
        let alg = Algebra::hamilton();
        let p = Quaternion::from_ints(1, -2, 3, 5);
        let q = Quaternion::from_ints(-4, 1, 0, 2);
        let exact = QuatF::from_exact(&alg.mul(&p, &q)).unwrap();
        let float = QuatF::from_exact(&p).unwrap() * QuatF::from_exact(&q).unwrap();
        assert_eq!(exact, float);
    }
}
