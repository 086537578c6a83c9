//! Exact arithmetic in a generalized quaternion algebra `(a, b / Q)`.
//!
//! The algebra has basis `1, i, j, k` with `i^2 = a`, `j^2 = b` and
//! `ij = -ji = k`. Elements are plain coordinate vectors ([`Quaternion`]);
//! the multiplication table lives in [`Algebra`], which every product,
//! norm and inverse goes through.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::central::CentralPoly;
use crate::error::{precondition, Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, PartialEq, Eq, Hash)]
struct Params {
    a: Rational,
    b: Rational,
}

/// Structure constants of a quaternion algebra. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra(Arc<Params>);

impl Default for Algebra {
    fn default() -> Self {
        Self::hamilton()
    }
}

impl Algebra {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidAlgebra(format!(
                "a = {a}, b = {b}: both must be nonzero"
            )));
        }
        Ok(Self(Arc::new(Params { a, b })))
    }

    /// The rational Hamilton quaternions `(-1, -1)`.
    pub fn hamilton() -> Self {
        Self(Arc::new(Params {
            a: rational::int(-1),
            b: rational::int(-1),
        }))
    }

    pub fn a(&self) -> &Rational {
        &self.0.a
    }

    pub fn b(&self) -> &Rational {
        &self.0.b
    }

    /// `a < 0` and `b < 0`: the norm form is positive definite, so every
    /// nonzero element is invertible. Other parameters are accepted on a
    /// best-effort basis and fail lazily with [`Error::ZeroDivisor`].
    pub fn is_certified_division(&self) -> bool {
        self.a().is_negative() && self.b().is_negative()
    }

    pub fn is_hamilton(&self) -> bool {
        *self.a() == rational::int(-1) && *self.b() == rational::int(-1)
    }

    pub fn mul(&self, p: &Quaternion, q: &Quaternion) -> Quaternion {
        let (a, b) = (self.a(), self.b());
        let ab = a * b;
        Quaternion {
            w: &p.w * &q.w + a * (&p.x * &q.x) + b * (&p.y * &q.y) - &ab * (&p.z * &q.z),
            x: &p.w * &q.x + &p.x * &q.w - b * (&p.y * &q.z) + b * (&p.z * &q.y),
            y: &p.w * &q.y + &p.y * &q.w + a * (&p.x * &q.z) - a * (&p.z * &q.x),
            z: &p.w * &q.z + &p.z * &q.w + &p.x * &q.y - &p.y * &q.x,
        }
    }

    /// `N(q) = q * conj(q) = w^2 - a x^2 - b y^2 + ab z^2`.
    pub fn norm(&self, q: &Quaternion) -> Rational {
        let (a, b) = (self.a(), self.b());
        &q.w * &q.w - a * (&q.x * &q.x) - b * (&q.y * &q.y) + a * b * (&q.z * &q.z)
    }

    /// Norm of the pure part, `-a x^2 - b y^2 + ab z^2`.
    pub fn pure_norm(&self, q: &Quaternion) -> Rational {
        self.norm(&q.pure_part())
    }

    pub fn inv(&self, q: &Quaternion) -> Result<Quaternion> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm(q);
        if n.is_zero() {
            return Err(Error::ZeroDivisor(q.to_string()));
        }
        Ok(q.conj().scale(&n.recip()))
    }

    pub fn pow(&self, q: &Quaternion, e: u32) -> Quaternion {
        let mut acc = Quaternion::one();
        for _ in 0..e {
            acc = self.mul(&acc, q);
        }
        acc
    }

    /// `g * q * g^-1`.
    pub fn conjugate_by(&self, g: &Quaternion, q: &Quaternion) -> Result<Quaternion> {
        let gi = self.inv(g)?;
        Ok(self.mul(&self.mul(g, q), &gi))
    }

    pub fn commutator(&self, p: &Quaternion, q: &Quaternion) -> Quaternion {
        self.mul(p, q) - self.mul(q, p)
    }

    pub fn commutes(&self, p: &Quaternion, q: &Quaternion) -> bool {
        self.commutator(p, q).is_zero()
    }

    /// Membership of `q` in the maximal subfield `F(s)`, which is the
    /// centralizer of the non-central element `s`.
    pub fn in_subfield(&self, q: &Quaternion, s: &Quaternion) -> Result<bool> {
        if s.is_central() {
            return precondition("subfield generator must be non-central");
        }
        Ok(self.commutes(q, s))
    }

    pub fn class_of(&self, q: &Quaternion) -> ConjClass {
        if q.is_central() {
            ConjClass::Central(q.w.clone())
        } else {
            ConjClass::Sphere {
                trace: q.trace(),
                norm: self.norm(q),
                validated: true,
            }
        }
    }

    pub fn same_class(&self, p: &Quaternion, q: &Quaternion) -> bool {
        self.class_of(p) == self.class_of(q)
    }

    /// `k` pairwise distinct conjugates of a non-central `c`, using the
    /// conjugators `1 + m*u` (`m = 1, 2, ...`) for the first basis unit `u`
    /// that does not commute with `c`.
    pub fn distinct_conjugates(&self, c: &Quaternion, k: usize) -> Result<Vec<Quaternion>> {
        if c.is_central() {
            return precondition("central element has a singleton conjugacy class");
        }
        let u = [Quaternion::i(), Quaternion::j(), Quaternion::k()]
            .into_iter()
            .find(|u| !self.commutes(u, c))
            .expect("non-central element fails to commute with some unit");
        let mut out: Vec<Quaternion> = Vec::with_capacity(k);
        let mut m = 1i64;
        let max_attempts = 4 * k as i64 + 64;
        while out.len() < k {
            if m > max_attempts {
                return Err(Error::ZeroDivisor(format!(
                    "too many non-invertible conjugators 1 + m*{u}"
                )));
            }
            let g = Quaternion::one() + u.scale(&rational::int(m));
            m += 1;
            let d = match self.conjugate_by(&g, c) {
                Ok(d) => d,
                Err(Error::ZeroDivisor(_)) => continue,
                Err(e) => return Err(e),
            };
            if !out.contains(&d) {
                out.push(d);
            }
        }
        Ok(out)
    }

    /// Whether the class contains an element of this (rational) algebra.
    ///
    /// `Some(true)`/`Some(false)` when decided, `None` when undecided. The
    /// Hamilton case is decided by the three-square theorem; other
    /// parameters only by a bounded witness search.
    pub fn realized(&self, class: &ConjClass) -> Option<bool> {
        let (t, n) = match class {
            ConjClass::Central(_) => return Some(true),
            ConjClass::Sphere { trace, norm, .. } => (trace, norm),
        };
        let d = n - t * t / rational::int(4);
        if self.is_certified_division() && !d.is_positive() {
            return Some(false);
        }
        if self.is_hamilton() {
            return Some(rational::is_sum_of_three_squares(&d));
        }
        self.class_witness(class).map(|_| true)
    }

    /// Some element of the class, when one is found.
    pub fn class_witness(&self, class: &ConjClass) -> Option<Quaternion> {
        let (t, n) = match class {
            ConjClass::Central(v) => return Some(Quaternion::scalar(v.clone())),
            ConjClass::Sphere { trace, norm, .. } => (trace, norm),
        };
        let half = t / rational::int(2);
        let d = n - &half * &half;
        if self.is_hamilton() {
            if !d.is_positive() {
                return None;
            }
            // x^2 + y^2 + z^2 = d with x = X/q where X^2 + Y^2 + Z^2 = p*q.
            let q = d.denom().clone();
            let m = d.numer() * &q;
            let (x, y, z) = rational::three_squares(&m, 50_000_000)?;
            let den = Rational::from_integer(q);
            return Some(Quaternion::new(
                half,
                Rational::from_integer(x) / &den,
                Rational::from_integer(y) / &den,
                Rational::from_integer(z) / &den,
            ));
        }
        const B: i64 = 6;
        for den in 1..=B {
            let den = rational::int(den);
            for x in -B..=B {
                for y in -B..=B {
                    for z in -B..=B {
                        let p = Quaternion::new(
                            Rational::zero(),
                            rational::int(x) / &den,
                            rational::int(y) / &den,
                            rational::int(z) / &den,
                        );
                        if p.is_zero() {
                            continue;
                        }
                        if self.norm(&p) == d {
                            return Some(p + Quaternion::scalar(half));
                        }
                    }
                }
            }
        }
        None
    }
}

/// An element `w + x i + y j + z k` with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Self { w, x, y, z }
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(
            rational::int(w),
            rational::int(x),
            rational::int(y),
            rational::int(z),
        )
    }

    pub fn scalar(w: Rational) -> Self {
        Self::new(w, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn from_components(c: [Rational; 4]) -> Self {
        let [w, x, y, z] = c;
        Self { w, x, y, z }
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.is_central()
    }

    pub fn is_one(&self) -> bool {
        self.w.is_one() && self.is_central()
    }

    /// Zero pure part.
    pub fn is_central(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// `q + conj(q) = 2w`.
    pub fn trace(&self) -> Rational {
        &self.w + &self.w
    }

    pub fn pure_part(&self) -> Self {
        Self::new(
            Rational::zero(),
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(&self.w * s, &self.x * s, &self.y * s, &self.z * s)
    }
}

impl From<Rational> for Quaternion {
    fn from(r: Rational) -> Self {
        Self::scalar(r)
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w + &o.w,
            &self.x + &o.x,
            &self.y + &o.y,
            &self.z + &o.z,
        )
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        &self + &o
    }
}

impl AddAssign<&Quaternion> for Quaternion {
    fn add_assign(&mut self, o: &Quaternion) {
        self.w += &o.w;
        self.x += &o.x;
        self.y += &o.y;
        self.z += &o.z;
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w - &o.w,
            &self.x - &o.x,
            &self.y - &o.y,
            &self.z - &o.z,
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        &self - &o
    }
}

impl SubAssign<&Quaternion> for Quaternion {
    fn sub_assign(&mut self, o: &Quaternion) {
        self.w -= &o.w;
        self.x -= &o.x;
        self.y -= &o.y;
        self.z -= &o.z;
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

/// Scalar multiplication by a central element.
impl Mul<&Rational> for &Quaternion {
    type Output = Quaternion;
    fn mul(self, s: &Rational) -> Quaternion {
        self.scale(s)
    }
}

/// Writes `3/2 - 2i + j`, `-k`, `0`, ... in the same surface syntax the
/// expression parser accepts.
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, unit) in self.components().into_iter().zip(["", "i", "j", "k"]) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if !unit.is_empty() && mag.is_one() {
                unit.to_string()
            } else {
                format!("{mag}{unit}")
            };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A conjugacy class, identified by its invariants.
///
/// Equality compares invariants only; `validated` records whether the class
/// was produced from an actual element.
#[derive(Clone, Debug)]
pub enum ConjClass {
    Central(Rational),
    Sphere {
        trace: Rational,
        norm: Rational,
        validated: bool,
    },
}

impl PartialEq for ConjClass {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ConjClass::Central(a), ConjClass::Central(b)) => a == b,
            (
                ConjClass::Sphere {
                    trace: t1,
                    norm: n1,
                    ..
                },
                ConjClass::Sphere {
                    trace: t2,
                    norm: n2,
                    ..
                },
            ) => t1 == t2 && n1 == n2,
            _ => false,
        }
    }
}

impl Eq for ConjClass {}

impl ConjClass {
    /// A non-central class from raw invariants, without a witness element.
    /// `x^2 - t x + n` must be irreducible over the rationals.
    pub fn sphere(trace: Rational, norm: Rational) -> Result<Self> {
        let disc = &trace * &trace - rational::int(4) * &norm;
        if rational::is_square(&disc) {
            return precondition(format!(
                "x^2 - ({trace})x + {norm} is reducible: not a non-central class"
            ));
        }
        Ok(ConjClass::Sphere {
            trace,
            norm,
            validated: false,
        })
    }

    pub fn is_central(&self) -> bool {
        matches!(self, ConjClass::Central(_))
    }

    pub fn is_validated(&self) -> bool {
        match self {
            ConjClass::Central(_) => true,
            ConjClass::Sphere { validated, .. } => *validated,
        }
    }

    pub fn with_validated(self, v: bool) -> Self {
        match self {
            ConjClass::Sphere { trace, norm, .. } => ConjClass::Sphere {
                trace,
                norm,
                validated: v,
            },
            c => c,
        }
    }

    /// `x - v` for a central class, `x^2 - t x + n` otherwise.
    pub fn min_poly(&self) -> CentralPoly {
        match self {
            ConjClass::Central(v) => CentralPoly::new(vec![-v, Rational::one()]),
            ConjClass::Sphere { trace, norm, .. } => {
                CentralPoly::new(vec![norm.clone(), -trace, Rational::one()])
            }
        }
    }

    pub(crate) fn invariants(&self) -> Option<(&Rational, &Rational)> {
        match self {
            ConjClass::Central(_) => None,
            ConjClass::Sphere { trace, norm, .. } => Some((trace, norm)),
        }
    }
}

impl fmt::Display for ConjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjClass::Central(v) => write!(f, "central {v}"),
            ConjClass::Sphere { trace, norm, .. } => {
                write!(f, "sphere(t={trace}, n={norm})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn h() -> Algebra {
        Algebra::hamilton()
    }

    #[test]
    fn unit_products() {
        let a = h();
        assert_eq!(a.mul(&Quaternion::i(), &Quaternion::j()), Quaternion::k());
        assert_eq!(a.mul(&Quaternion::j(), &Quaternion::i()), -Quaternion::k());
        assert_eq!(
            a.mul(&Quaternion::i(), &Quaternion::i()),
            -Quaternion::one()
        );
    }

    #[test]
    fn general_unit_table() {
        let alg = Algebra::new(int(2), int(5)).unwrap();
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(alg.mul(&i, &i), Quaternion::scalar(int(2)));
        assert_eq!(alg.mul(&j, &j), Quaternion::scalar(int(5)));
        assert_eq!(alg.mul(&k, &k), Quaternion::scalar(int(-10)));
        assert_eq!(alg.mul(&j, &k), i.scale(&int(-5)));
        assert_eq!(alg.mul(&k, &j), i.scale(&int(5)));
        assert_eq!(alg.mul(&i, &k), j.scale(&int(2)));
        assert_eq!(alg.mul(&k, &i), j.scale(&int(-2)));
        assert_eq!(alg.norm(&i), int(-2));
        assert_eq!(alg.norm(&j), int(-5));
    }

    #[test]
    fn norm_of_one_plus_all_units() {
        assert_eq!(h().norm(&Quaternion::from_ints(1, 1, 1, 1)), int(4));
    }

    #[test]
    fn inverses() {
        let a = h();
        assert_eq!(a.inv(&Quaternion::i()).unwrap(), -Quaternion::i());
        let q = Quaternion::from_ints(1, 1, 0, 0);
        let expected = Quaternion::new(frac(1, 2), frac(-1, 2), int(0), int(0));
        assert_eq!(a.inv(&q).unwrap(), expected);
        assert_eq!(a.mul(&q, &expected), Quaternion::one());
        assert_eq!(a.inv(&Quaternion::zero()), Err(Error::DivisionByZero));
        let split = Algebra::new(int(1), int(1)).unwrap();
        assert!(matches!(split.inv(&q), Err(Error::ZeroDivisor(_))));
        assert!(!split.is_certified_division());
    }

    #[test]
    fn rejects_degenerate_params() {
        assert!(Algebra::new(int(0), int(1)).is_err());
        assert!(Algebra::new(int(-1), int(0)).is_err());
    }

    #[test]
    fn classes() {
        let a = h();
        assert_eq!(
            a.class_of(&Quaternion::scalar(frac(3, 2))),
            ConjClass::Central(frac(3, 2))
        );
        assert_eq!(
            a.class_of(&Quaternion::i()),
            ConjClass::sphere(int(0), int(1)).unwrap()
        );
        let half = Quaternion::new(frac(1, 2), frac(1, 2), frac(1, 2), frac(1, 2));
        assert_eq!(
            a.class_of(&half),
            ConjClass::sphere(int(1), int(1)).unwrap()
        );
        assert!(a.same_class(&Quaternion::i(), &-Quaternion::i()));
        assert!(a.same_class(&Quaternion::i(), &Quaternion::j()));
        assert!(!a.same_class(&Quaternion::one(), &Quaternion::i()));
        // j i j^-1 = -i
        assert_eq!(
            a.conjugate_by(&Quaternion::j(), &Quaternion::i()).unwrap(),
            -Quaternion::i()
        );
    }

    #[test]
    fn sphere_rejects_reducible() {
        // x^2 - 1 splits
        assert!(ConjClass::sphere(int(0), int(-1)).is_err());
        assert!(!ConjClass::sphere(int(0), int(1)).unwrap().is_validated());
    }

    #[test]
    fn minimal_polynomials() {
        assert_eq!(
            ConjClass::Central(int(2)).min_poly(),
            CentralPoly::from_ints(&[-2, 1])
        );
        assert_eq!(
            ConjClass::sphere(int(0), int(1)).unwrap().min_poly(),
            CentralPoly::from_ints(&[1, 0, 1])
        );
        assert_eq!(
            ConjClass::sphere(int(-1), int(1)).unwrap().min_poly(),
            CentralPoly::from_ints(&[1, 1, 1])
        );
    }

    #[test]
    fn subfield_membership() {
        let a = h();
        let i = Quaternion::i();
        assert!(a.commutes(&i, &Quaternion::from_ints(1, 1, 0, 0)));
        assert!(a
            .in_subfield(&Quaternion::from_ints(3, -2, 0, 0), &i)
            .unwrap());
        assert!(!a.in_subfield(&Quaternion::j(), &i).unwrap());
        assert!(a.in_subfield(&i, &Quaternion::one()).is_err());
    }

    #[test]
    fn conjugates_of_i() {
        let a = h();
        let i = Quaternion::i();
        let c = a.distinct_conjugates(&i, 2).unwrap();
        assert_eq!(c.len(), 2);
        assert_ne!(c[0], c[1]);
        // (1 + j) i (1 + j)^-1 = -k
        assert_eq!(c[0], -Quaternion::k());
        for q in &c {
            assert!(a.same_class(q, &i));
        }
        assert_eq!(a.distinct_conjugates(&i, 1).unwrap().len(), 1);
        assert!(a
            .distinct_conjugates(&Quaternion::scalar(int(5)), 3)
            .is_err());
    }

    #[test]
    fn realization() {
        let a = h();
        let s = |t, n| ConjClass::sphere(int(t), int(n)).unwrap();
        assert_eq!(a.realized(&s(0, 1)), Some(true));
        // x^2 + 7 has no rational quaternion root
        assert_eq!(a.realized(&s(0, 7)), Some(false));
        let w = a.class_witness(&s(0, 3)).unwrap();
        assert_eq!(a.class_of(&w), s(0, 3));
        let w = a.class_witness(&s(-1, 1)).unwrap();
        assert_eq!(a.class_of(&w), s(-1, 1));
        assert!(a.class_witness(&s(0, 7)).is_none());

        let g = Algebra::new(int(-1), int(-3)).unwrap();
        let w = g.class_witness(&s(0, 3)).unwrap();
        assert_eq!(g.class_of(&w), s(0, 3));
    }

    #[test]
    fn display() {
        assert_eq!(Quaternion::from_ints(3, -2, 0, 1).to_string(), "3 - 2i + k");
        assert_eq!((-Quaternion::k()).to_string(), "-k");
        assert_eq!(Quaternion::zero().to_string(), "0");
        assert_eq!(
            Quaternion::new(frac(-1, 2), frac(3, 2), int(0), int(0)).to_string(),
            "-1/2 + 3/2i"
        );
    }
}
