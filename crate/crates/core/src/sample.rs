//! Random rationals, quaternions and polynomials for tests and benchmarks.
//!
//! Height bounds the absolute value of numerators, `max_den` the
//! denominators; `max_den = 1` gives integer coordinates.

use num_bigint::BigInt;
use rand::Rng;

use crate::central::CentralPoly;
use crate::qpoly::QPoly;
use crate::quat::{Algebra, Quaternion};
use crate::rational::Rational;

pub fn rational<R: Rng + ?Sized>(rng: &mut R, height: i64, max_den: i64) -> Rational {
    let n = rng.random_range(-height..=height);
    let d = rng.random_range(1..=max_den.max(1));
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn quaternion<R: Rng + ?Sized>(rng: &mut R, height: i64, max_den: i64) -> Quaternion {
    Quaternion::new(
        rational(rng, height, max_den),
        rational(rng, height, max_den),
        rational(rng, height, max_den),
        rational(rng, height, max_den),
    )
}

/// A quaternion with nonzero norm in `alg`.
pub fn invertible<R: Rng + ?Sized>(
    rng: &mut R,
    alg: &Algebra,
    height: i64,
    max_den: i64,
) -> Quaternion {
    loop {
        let q = quaternion(rng, height.max(1), max_den);
        if !q.is_zero() && alg.inv(&q).is_ok() {
            return q;
        }
    }
}

pub fn noncentral<R: Rng + ?Sized>(rng: &mut R, height: i64, max_den: i64) -> Quaternion {
    loop {
        let q = quaternion(rng, height.max(1), max_den);
        if !q.is_central() {
            return q;
        }
    }
}

/// A polynomial of exactly the given degree with an invertible leading
/// coefficient.
pub fn poly<R: Rng + ?Sized>(
    rng: &mut R,
    alg: &Algebra,
    degree: usize,
    height: i64,
    max_den: i64,
) -> QPoly {
    let mut c: Vec<Quaternion> = (0..degree)
        .map(|_| quaternion(rng, height, max_den))
        .collect();
    c.push(invertible(rng, alg, height, max_den));
    QPoly::new(alg, c)
}

pub fn monic_poly<R: Rng + ?Sized>(
    rng: &mut R,
    alg: &Algebra,
    degree: usize,
    height: i64,
    max_den: i64,
) -> QPoly {
    let mut c: Vec<Quaternion> = (0..degree)
        .map(|_| quaternion(rng, height, max_den))
        .collect();
    c.push(Quaternion::one());
    QPoly::new(alg, c)
}

pub fn monic_central<R: Rng + ?Sized>(rng: &mut R, degree: usize, height: i64) -> CentralPoly {
    let mut c: Vec<Rational> = (0..degree).map(|_| rational(rng, height, 1)).collect();
    c.push(Rational::from_integer(1.into()));
    CentralPoly::new(c)
}

/// A polynomial of the given degree assembled from factors with known
/// roots: linear factors `x - q`, rational linear factors and irreducible
/// central quadratics, in random order, under a random leading coefficient.
/// Returns the polynomial and the `q` of each linear factor; in a division
/// algebra the class of every such `q` contains a root of the product.
pub fn root_bearing<R: Rng + ?Sized>(
    rng: &mut R,
    alg: &Algebra,
    degree: usize,
    height: i64,
) -> (QPoly, Vec<Quaternion>) {
    let mut p = QPoly::constant(alg, invertible(rng, alg, height, 1));
    let mut roots = Vec::new();
    let mut left = degree;
    while left > 0 {
        let factor = match rng.random_range(0..3) {
            0 if left >= 2 => {
                // x^2 - t x + n with negative discriminant
                let t = rng.random_range(-height..=height);
                let min_n = t * t / 4 + 1;
                let n = rng.random_range(min_n..=min_n + height);
                left -= 2;
                QPoly::from_central(alg, &CentralPoly::from_ints(&[n, -t, 1]))
            }
            1 => {
                left -= 1;
                let r = Quaternion::scalar(rational(rng, height, 1));
                roots.push(r.clone());
                QPoly::linear(alg, &r)
            }
            _ => {
                left -= 1;
                let q = noncentral(rng, height, 1);
                roots.push(q.clone());
                QPoly::linear(alg, &q)
            }
        };
        p = &p * &factor;
    }
    (p, roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::central::Degree;
    use rand::SeedableRng;

    #[test]
    fn degrees_and_leading_coefficients() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let alg = Algebra::hamilton();
        for d in 0..6 {
            assert_eq!(poly(&mut rng, &alg, d, 10, 3).degree(), Degree::Finite(d));
            assert!(monic_poly(&mut rng, &alg, d, 10, 1).is_monic());
            let (p, _) = root_bearing(&mut rng, &alg, d, 4);
            assert_eq!(p.degree(), Degree::Finite(d));
        }
    }
}
