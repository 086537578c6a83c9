//! Commutative polynomials over the center `Q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{precondition, Error, Result};
use crate::rational::{self, Rational};

/// Degree of a polynomial; the zero polynomial has degree `MinusInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(n) => Some(n),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(n) => write!(f, "{n}"),
        }
    }
}

/// A polynomial with rational coefficients, constant term first.
/// Never carries trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CentralPoly {
    coeffs: Vec<Rational>,
}

impl CentralPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| rational::int(v)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut v = vec![Rational::zero(); n + 1];
        v[n] = c;
        Self::new(v)
    }

    /// `x - r`.
    pub fn linear(r: &Rational) -> Self {
        Self::new(vec![-r, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
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

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading().ok_or(Error::DivisionByZero)?;
        Ok(self.scale(&lc.recip()))
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rational::int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?.clone();
        let dn = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dn {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dn];
        for shift in (0..quot.len()).rev() {
            let c = &rem[shift + dn] / &dl;
            if !c.is_zero() {
                for (idx, dc) in d.coeffs.iter().enumerate() {
                    rem[shift + idx] -= &c * dc;
                }
            }
            quot[shift] = c;
        }
        rem.truncate(dn);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.divrem(d)?.1)
    }

    pub fn divides(&self, p: &Self) -> Result<bool> {
        Ok(p.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor. `gcd(f, 0) = monic(f)`.
    pub fn gcd(f: &Self, g: &Self) -> Result<Self> {
        if f.is_zero() && g.is_zero() {
            return precondition("gcd of two zero polynomials");
        }
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            // keep intermediate coefficients small
            b = if r.is_zero() { r } else { r.monic()? };
        }
        a.monic()
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return precondition("square-free part of the zero polynomial");
        }
        if self.degree() == Degree::Finite(0) {
            return Ok(Self::one());
        }
        let g = Self::gcd(self, &self.derivative())?;
        self.divrem(&g)?.0.monic()
    }

    /// Integer polynomial with coprime coefficients and positive leading
    /// coefficient, proportional to `self`.
    pub fn primitive_integer_form(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() {
            for c in &mut ints {
                *c /= &g;
            }
        }
        if ints.last().is_some_and(Signed::is_negative) {
            for c in &mut ints {
                *c = -&*c;
            }
        }
        ints
    }

    /// All distinct rational roots, ascending, via the rational-root theorem.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return precondition("every rational is a root of the zero polynomial");
        }
        let mut roots = Vec::new();
        let ints = self.primitive_integer_form();
        let zeros = ints.iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            roots.push(Rational::zero());
        }
        let ints = &ints[zeros..];
        if ints.len() > 1 {
            let p = self.clone();
            let nums = rational::divisors(&ints[0]);
            let dens = rational::divisors(ints.last().unwrap());
            for n in &nums {
                for d in &dens {
                    if !n.gcd(d).is_one() {
                        continue;
                    }
                    for s in [n.clone(), -n] {
                        let cand = Rational::new(s, d.clone());
                        if p.eval(&cand).is_zero() {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational::to_f64).collect()
    }

    pub(crate) fn add_ref(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Add for &CentralPoly {
    type Output = CentralPoly;
    fn add(self, o: &CentralPoly) -> CentralPoly {
        self.add_ref(o)
    }
}

impl Sub for &CentralPoly {
    type Output = CentralPoly;
    fn sub(self, o: &CentralPoly) -> CentralPoly {
        self.add_ref(&-o)
    }
}

impl Neg for &CentralPoly {
    type Output = CentralPoly;
    fn neg(self) -> CentralPoly {
        CentralPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &CentralPoly {
    type Output = CentralPoly;
    fn mul(self, o: &CentralPoly) -> CentralPoly {
        if self.is_zero() || o.is_zero() {
            return CentralPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CentralPoly::new(out)
    }
}

impl Mul for CentralPoly {
    type Output = CentralPoly;
    fn mul(self, o: CentralPoly) -> CentralPoly {
        &self * &o
    }
}

impl fmt::Display for CentralPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self
            .coeffs
            .iter()
            .map(|c| crate::quat::Quaternion::scalar(c.clone()))
            .collect();
        crate::qpoly::write_terms(f, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(c: &[i64]) -> CentralPoly {
        CentralPoly::from_ints(c)
    }

    #[test]
    fn degree_of_zero_is_minus_infinity() {
        assert_eq!(CentralPoly::zero().degree(), Degree::MinusInfinity);
        assert!(Degree::MinusInfinity < Degree::Finite(0));
        assert_eq!(p(&[1, 0, 0]).degree(), Degree::Finite(0));
    }

    #[test]
    fn gcd_examples() {
        // x^3 + x and x^2
        assert_eq!(
            CentralPoly::gcd(&p(&[0, 1, 0, 1]), &p(&[0, 0, 1])).unwrap(),
            p(&[0, 1])
        );
        assert_eq!(
            CentralPoly::gcd(&p(&[2, 0, 4]), &CentralPoly::zero()).unwrap(),
            CentralPoly::new(vec![frac(1, 2), int(0), int(1)])
        );
        assert_eq!(
            CentralPoly::gcd(&p(&[1, 0, 1]), &p(&[1, 0, 1])).unwrap(),
            p(&[1, 0, 1])
        );
        assert!(CentralPoly::gcd(&CentralPoly::zero(), &CentralPoly::zero()).is_err());
    }

    #[test]
    fn division() {
        let (q, r) = p(&[1, 0, 0, 1]).divrem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[3]).divrem(&p(&[0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[3]));
        assert!(p(&[1]).divrem(&CentralPoly::zero()).is_err());
    }

    #[test]
    fn squarefree() {
        // (x^2+1)^3 (x-2)^2
        let f = &p(&[1, 0, 1]).pow(3) * &p(&[-2, 1]).pow(2);
        assert_eq!(f.squarefree_part().unwrap(), &p(&[1, 0, 1]) * &p(&[-2, 1]));
    }

    #[test]
    fn rational_roots() {
        // (2x - 3)(x + 1) x^2 (x^2 + 1)
        let f = &(&p(&[-3, 2]) * &p(&[1, 1])) * &(&p(&[0, 0, 1]) * &p(&[1, 0, 1]));
        assert_eq!(
            f.rational_roots().unwrap(),
            vec![int(-1), int(0), frac(3, 2)]
        );
        assert!(p(&[1, 0, 1]).rational_roots().unwrap().is_empty());
        assert!(p(&[5]).rational_roots().unwrap().is_empty());
        let g = CentralPoly::new(vec![frac(1, 4), int(-1), int(1)]);
        assert_eq!(g.rational_roots().unwrap(), vec![frac(1, 2)]);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 1, 0, 1]).to_string(), "x^3 + x");
        assert_eq!(p(&[1, -3, 2]).to_string(), "2 x^2 - 3 x + 1");
        assert_eq!(CentralPoly::zero().to_string(), "0");
    }
}
