//! Conjugates of a non-root that are themselves non-roots.
//!
//! For `y` invertible, `P(y c y^-1) = (sum a_i y c^i) y^-1`, so the
//! conjugators carrying `c` to a root are the nonzero elements of the
//! kernel of the linear map `y -> sum a_i y c^i`. The kernel is a right
//! `F(c)`-space, hence of even dimension over `F`.

use crate::error::{precondition, Error, Result};
use crate::linalg;
use crate::qpoly::QPoly;
use crate::quat::Quaternion;
use crate::rational::{self, Rational};

/// A basis of `{y : sum a_i y c^i = 0}` over the rationals.
pub fn root_conjugator_space(p: &QPoly, c: &Quaternion) -> Result<Vec<Quaternion>> {
    if c.is_central() {
        return precondition("conjugating a central element is trivial");
    }
    let alg = p.algebra();
    let mut powers = Vec::with_capacity(p.coeffs().len());
    let mut acc = Quaternion::one();
    for _ in p.coeffs() {
        powers.push(acc.clone());
        acc = alg.mul(&acc, c);
    }
    let image = |y: &Quaternion| {
        p.coeffs()
            .iter()
            .zip(&powers)
            .fold(Quaternion::zero(), |s, (a, ci)| {
                s + alg.mul(&alg.mul(a, y), ci)
            })
    };
    let cols: Vec<Quaternion> = [
        Quaternion::one(),
        Quaternion::i(),
        Quaternion::j(),
        Quaternion::k(),
    ]
    .iter()
    .map(image)
    .collect();
    let m: Vec<Vec<Rational>> = (0..4)
        .map(|r| cols.iter().map(|q| q.components()[r].clone()).collect())
        .collect();
    Ok(linalg::kernel(&m)
        .into_iter()
        .map(|v| Quaternion::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()))
        .collect())
}

/// `k` pairwise distinct elements of the class of `c`, none a root of `P`.
///
/// With a trivial kernel no conjugate of `c` is a root and the standard
/// conjugator family is used. Otherwise the conjugators `1 + y`, `y` in the
/// kernel, are used: `1` is not in the kernel since `P(c) != 0`, so `1 + y`
/// is not either.
pub fn nonroot_conjugates(p: &QPoly, c: &Quaternion, k: usize) -> Result<Vec<Quaternion>> {
    if c.is_central() {
        return precondition("c must be non-central");
    }
    if k == 0 {
        return precondition("k must be at least 1");
    }
    if p.eval_right(c).is_zero() {
        return precondition(format!("{c} is a root of {p}"));
    }
    let alg = p.algebra();
    let kernel = root_conjugator_space(p, c)?;
    let out = if kernel.is_empty() {
        alg.distinct_conjugates(c, k)?
    } else {
        let mut out: Vec<Quaternion> = Vec::with_capacity(k);
        let max_m = 4 * k as i64 + 64;
        'search: for m in 1..=max_m {
            for sign in [1, -1] {
                for v in &kernel {
                    let g = Quaternion::one() + v.scale(&rational::int(sign * m));
                    let d = match alg.conjugate_by(&g, c) {
                        Ok(d) => d,
                        Err(Error::ZeroDivisor(_)) => continue,
                        Err(e) => return Err(e),
                    };
                    if !out.contains(&d) && !p.eval_right(&d).is_zero() {
                        out.push(d);
                        if out.len() == k {
                            break 'search;
                        }
                    }
                }
            }
        }
        if out.len() < k {
            // the kernel family can collapse onto few conjugates; top up
            for d in alg.distinct_conjugates(c, 4 * k + 16)? {
                if out.len() == k {
                    break;
                }
                if !out.contains(&d) && !p.eval_right(&d).is_zero() {
                    out.push(d);
                }
            }
        }
        out
    };
    let class = alg.class_of(c);
    let ok = out.len() == k
        && out
            .iter()
            .all(|d| alg.class_of(d) == class && !p.eval_right(d).is_zero());
    if !ok {
        return Err(Error::InvariantViolation(format!(
            "could not produce {k} distinct non-root conjugates of {c}"
        )));
    }
    Ok(out)
}
