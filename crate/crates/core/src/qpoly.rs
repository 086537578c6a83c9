//! The polynomial ring `Q[x]` with quaternion coefficients and a central
//! variable.
//!
//! Coefficients sit on the left of the powers of `x`, so evaluation
//! substitutes powers on the right: `P(q) = sum a_i q^i`. Division and the
//! Euclidean algorithm are right-handed accordingly: `P = Q*D + R`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::central::{CentralPoly, Degree};
use crate::error::{precondition, Error, Result};
use crate::quat::{Algebra, Quaternion};
use crate::rational::Rational;

/// A polynomial over a quaternion algebra, constant term first. Never
/// carries trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    alg: Algebra,
    coeffs: Vec<Quaternion>,
}

impl QPoly {
    pub fn new(alg: &Algebra, mut coeffs: Vec<Quaternion>) -> Self {
        while coeffs.last().is_some_and(Quaternion::is_zero) {
            coeffs.pop();
        }
        Self {
            alg: alg.clone(),
            coeffs,
        }
    }

    pub fn zero(alg: &Algebra) -> Self {
        Self::new(alg, vec![])
    }

    pub fn one(alg: &Algebra) -> Self {
        Self::constant(alg, Quaternion::one())
    }

    pub fn x(alg: &Algebra) -> Self {
        Self::monomial(alg, Quaternion::one(), 1)
    }

    pub fn constant(alg: &Algebra, q: Quaternion) -> Self {
        Self::new(alg, vec![q])
    }

    pub fn monomial(alg: &Algebra, q: Quaternion, n: usize) -> Self {
        let mut v = vec![Quaternion::zero(); n + 1];
        v[n] = q;
        Self::new(alg, v)
    }

    /// `x - q`.
    pub fn linear(alg: &Algebra, q: &Quaternion) -> Self {
        Self::new(alg, vec![-q, Quaternion::one()])
    }

    pub fn from_central(alg: &Algebra, p: &CentralPoly) -> Self {
        Self::new(
            alg,
            p.coeffs().iter().cloned().map(Quaternion::scalar).collect(),
        )
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Quaternion {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Quaternion> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Quaternion::is_one)
    }

    /// All coefficients central.
    pub fn is_central(&self) -> bool {
        self.coeffs.iter().all(Quaternion::is_central)
    }

    pub fn to_central(&self) -> Option<CentralPoly> {
        self.is_central()
            .then(|| CentralPoly::new(self.coeffs.iter().map(|c| c.w.clone()).collect()))
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.alg == o.alg {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let n = self.coeffs.len().max(o.coeffs.len());
        Ok(Self::new(
            &self.alg,
            (0..n).map(|i| self.coeff(i) + o.coeff(i)).collect(),
        ))
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.checked_add(&-o)
    }

    /// Product with `x` central: `(p x^i)(s x^j) = (p s) x^(i+j)`.
    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero(&self.alg));
        }
        let mut out = vec![Quaternion::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &self.alg.mul(a, b);
            }
        }
        Ok(Self::new(&self.alg, out))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.alg), |acc, _| &acc * self)
    }

    /// `q * P`.
    pub fn scale_left(&self, q: &Quaternion) -> Self {
        Self::new(
            &self.alg,
            self.coeffs.iter().map(|c| self.alg.mul(q, c)).collect(),
        )
    }

    /// `P * q`.
    pub fn scale_right(&self, q: &Quaternion) -> Self {
        Self::new(
            &self.alg,
            self.coeffs.iter().map(|c| self.alg.mul(c, q)).collect(),
        )
    }

    /// Left-multiply by the inverse of the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading().ok_or(Error::DivisionByZero)?;
        Ok(self.scale_left(&self.alg.inv(lc)?))
    }

    /// Right division with remainder: `self = quotient * d + remainder`
    /// with `deg remainder < deg d`.
    pub fn right_divrem(&self, d: &Self) -> Result<(Self, Self)> {
        self.check_same(d)?;
        let dl = d.leading().ok_or(Error::DivisionByZero)?;
        let dl_inv = self.alg.inv(dl)?;
        let dn = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dn {
            return Ok((Self::zero(&self.alg), self.clone()));
        }
        let mut quot = vec![Quaternion::zero(); rem.len() - dn];
        for shift in (0..quot.len()).rev() {
            let c = self.alg.mul(&rem[shift + dn], &dl_inv);
            if !c.is_zero() {
                for (idx, dc) in d.coeffs.iter().enumerate() {
                    rem[shift + idx] -= &self.alg.mul(&c, dc);
                }
            }
            quot[shift] = c;
        }
        rem.truncate(dn);
        Ok((Self::new(&self.alg, quot), Self::new(&self.alg, rem)))
    }

    pub fn right_rem(&self, d: &Self) -> Result<Self> {
        Ok(self.right_divrem(d)?.1)
    }

    /// Whether `d` is a right divisor of `self`.
    pub fn right_divisible_by(&self, d: &Self) -> Result<bool> {
        Ok(self.right_rem(d)?.is_zero())
    }

    /// Greatest common right divisor by the right Euclidean algorithm,
    /// normalized to be monic. `gcrd(P, 0) = monic(P)`.
    pub fn gcrd(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        if self.is_zero() && o.is_zero() {
            return precondition("gcrd of two zero polynomials");
        }
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.right_rem(&b)?;
            a = b;
            b = if r.is_zero() { r } else { r.monic()? };
        }
        a.monic()
    }

    /// `P(q) = sum a_i q^i` by right Horner: `r <- r*q + a_i`.
    pub fn eval_right(&self, q: &Quaternion) -> Quaternion {
        self.coeffs.iter().rev().fold(Quaternion::zero(), |acc, c| {
            let mut r = self.alg.mul(&acc, q);
            r += c;
            r
        })
    }

    /// Root test through division: the remainder of `P` by `x - q`.
    pub fn remainder_at(&self, q: &Quaternion) -> Quaternion {
        let d = Self::linear(&self.alg, q);
        self.right_rem(&d).expect("x - q is monic").coeff(0)
    }

    /// `(G*H)(q)` without expanding the product: zero when `H(q) = 0`,
    /// otherwise `G(h q h^-1) * h` with `h = H(q)`.
    pub fn eval_product(g: &Self, h: &Self, q: &Quaternion) -> Result<Quaternion> {
        g.check_same(h)?;
        let hq = h.eval_right(q);
        if hq.is_zero() {
            return Ok(Quaternion::zero());
        }
        let moved = g.alg.conjugate_by(&hq, q)?;
        Ok(g.alg.mul(&g.eval_right(&moved), &hq))
    }

    /// Coefficient-wise conjugate.
    pub fn conj_poly(&self) -> Self {
        Self::new(
            &self.alg,
            self.coeffs.iter().map(Quaternion::conj).collect(),
        )
    }

    /// The norm polynomial `P * conj(P)`, which has central coefficients.
    pub fn companion(&self) -> CentralPoly {
        let prod = self * &self.conj_poly();
        debug_assert!(prod.is_central());
        CentralPoly::new(prod.coeffs.into_iter().map(|c| c.w).collect())
    }

    /// Maximum absolute value over all coefficient components.
    pub fn height(&self) -> Rational {
        self.coeffs
            .iter()
            .flat_map(|c| c.components())
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

fn assert_same(a: &QPoly, b: &QPoly) {
    assert!(
        a.alg == b.alg,
        "polynomials over different algebras; use the checked_* methods"
    );
}

/// Panics on mismatched algebras; see [`QPoly::checked_add`].
impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        assert_same(self, o);
        self.checked_add(o).unwrap()
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, o: QPoly) -> QPoly {
        &self + &o
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        assert_same(self, o);
        self.checked_sub(o).unwrap()
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, o: QPoly) -> QPoly {
        &self - &o
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(&self.alg, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

/// Panics on mismatched algebras; see [`QPoly::checked_mul`].
impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        assert_same(self, o);
        self.checked_mul(o).unwrap()
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, o: QPoly) -> QPoly {
        &self * &o
    }
}

/// Writes terms from the highest degree down: `x^3 - i x^2 + (1 - 2i) x - i`.
/// Single-component coefficients print bare, others parenthesized.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, coeffs: &[Quaternion]) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    if coeffs.len() == 1 {
        return write!(f, "{}", coeffs[0]);
    }
    let mut first = true;
    for (deg, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let power = match deg {
            0 => String::new(),
            1 => "x".to_string(),
            n => format!("x^{n}"),
        };
        let nonzero = c.components().into_iter().filter(|v| !v.is_zero()).count();
        let (negative, body) = if nonzero == 1 {
            let (idx, v) = c
                .components()
                .into_iter()
                .enumerate()
                .find(|(_, v)| !v.is_zero())
                .unwrap();
            let unit = ["", "i", "j", "k"][idx];
            let mag = v.abs();
            let lit = match (unit, mag.is_one()) {
                ("", true) => String::new(),
                ("", false) => mag.to_string(),
                (u, true) => u.to_string(),
                (u, false) => format!("{mag}{u}"),
            };
            let body = match (lit.is_empty(), power.is_empty()) {
                (true, true) => "1".to_string(),
                (true, false) => power,
                (false, true) => lit,
                (false, false) => format!("{lit} {power}"),
            };
            (v.is_negative(), body)
        } else if power.is_empty() {
            (false, format!("({c})"))
        } else {
            (false, format!("({c}) {power}"))
        };
        match (first, negative) {
            (true, false) => write!(f, "{body}")?,
            (true, true) => write!(f, "-{body}")?,
            (false, false) => write!(f, " + {body}")?,
            (false, true) => write!(f, " - {body}")?,
        }
        first = false;
    }
    Ok(())
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}
