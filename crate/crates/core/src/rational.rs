//! Helpers around [`num_rational::BigRational`], the exact scalar type of
//! the base field.

use num_bigint::{BigInt, Sign};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational as Rational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` in lowest terms. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let r: Rational = s.parse().ok()?;
    Some(r)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Out of range: saturate with the correct sign.
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = sqrt_int(r.numer())?;
    let d = sqrt_int(r.denom())?;
    Some(Rational::new(n, d))
}

pub fn is_square(r: &Rational) -> bool {
    sqrt_exact(r).is_some()
}

fn sqrt_int(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Best rational approximation of `v` with denominator at most `max_den`,
/// accepted only if it lies within `tol * max(1, |v|)` of `v`.
///
/// Continued-fraction convergents are walked until the denominator bound is
/// hit; the last convergent within tolerance wins.
pub fn rationalize(v: f64, max_den: u64, tol: f64) -> Option<Rational> {
    if !v.is_finite() {
        return None;
    }
    let limit = tol * v.abs().max(1.0);
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let max_den = BigInt::from(max_den);
    let mut x = v;
    let mut best = None;
    for _ in 0..64 {
        let a = x.floor();
        let ai = BigInt::from(a as i128);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2 > max_den {
            break;
        }
        let cand = Rational::new(h2.clone(), k2.clone());
        if (to_f64(&cand) - v).abs() <= limit {
            best = Some(cand);
        }
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        let frac_part = x - a;
        if frac_part.abs() < 1e-300 {
            break;
        }
        x = 1.0 / frac_part;
        if !x.is_finite() || x.abs() > 1e18 {
            break;
        }
    }
    best
}

/// Positive divisors of a nonzero integer, by trial division.
pub(crate) fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1u32;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Whether a positive rational is a sum of three rational squares.
///
/// `p/q` is such a sum iff the integer `p*q` is, and by Legendre's
/// three-square theorem that fails exactly for `4^e (8m + 7)`.
pub fn is_sum_of_three_squares(r: &Rational) -> bool {
    if !r.is_positive() {
        return r.is_zero();
    }
    let mut m = r.numer() * r.denom();
    let four = BigInt::from(4);
    while (&m % &four).is_zero() {
        m /= &four;
    }
    (m % BigInt::from(8)) != BigInt::from(7)
}

/// Integer triple with `x^2 + y^2 + z^2 = m`, searched exhaustively up to a
/// size limit.
pub(crate) fn three_squares(m: &BigInt, limit: u64) -> Option<(BigInt, BigInt, BigInt)> {
    let m = m.to_u64().filter(|&m| m <= limit)?;
    let mut x = 0u64;
    while x * x <= m {
        let rest = m - x * x;
        let mut y = 0u64;
        while y * y <= rest {
            let zz = rest - y * y;
            let z = zz.sqrt();
            if z * z == zz {
                return Some((x.into(), y.into(), z.into()));
            }
            y += 1;
        }
        x += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationalize_recovers_small_fractions() {
        assert_eq!(rationalize(1.5, 1_000_000, 1e-8), Some(frac(3, 2)));
        assert_eq!(rationalize(-2.0 / 7.0, 1_000_000, 1e-8), Some(frac(-2, 7)));
        assert_eq!(rationalize(0.0, 10, 1e-8), Some(int(0)));
        assert_eq!(rationalize(f64::NAN, 10, 1e-8), None);
        // sqrt(2) has no approximation with denominator <= 10 within 1e-8
        assert_eq!(rationalize(2f64.sqrt(), 10, 1e-8), None);
    }

    #[test]
    fn squares() {
        assert_eq!(sqrt_exact(&frac(9, 4)), Some(frac(3, 2)));
        assert!(sqrt_exact(&int(2)).is_none());
        assert!(sqrt_exact(&int(-4)).is_none());
        assert!(is_square(&int(0)));
    }

    #[test]
    fn legendre() {
        assert!(is_sum_of_three_squares(&int(1)));
        assert!(is_sum_of_three_squares(&int(3)));
        assert!(!is_sum_of_three_squares(&int(7)));
        assert!(!is_sum_of_three_squares(&int(28)));
        // 7/4 -> 7*4 = 28 = 4 * 7
        assert!(!is_sum_of_three_squares(&frac(7, 4)));
        // 7/2 -> 14, fine
        assert!(is_sum_of_three_squares(&frac(7, 2)));
        assert!(!is_sum_of_three_squares(&int(-1)));
    }

    #[test]
    fn divisor_list() {
        let d: Vec<i64> = divisors(&BigInt::from(-12))
            .iter()
            .map(|b| b.to_i64().unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(three_squares(&BigInt::from(7), 100), None);
        let (x, y, z) = three_squares(&BigInt::from(14), 100).unwrap();
        assert_eq!(&x * &x + &y * &y + &z * &z, BigInt::from(14));
    }
}
