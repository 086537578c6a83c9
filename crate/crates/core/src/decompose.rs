//! Coordinate decompositions of a polynomial and the `c * G * H`
//! factorization.
//!
//! Writing every coefficient in a basis of the algebra over a subring `R0`
//! (the center with basis `1, i, j, k`, or a maximal subfield `F(s)` with
//! basis `1, u`) turns `P` into a combination `sum c_i b_i(x)` of coordinate
//! polynomials over `R0`. A polynomial over `R0` right-divides `P` exactly
//! when it divides every coordinate, which is what the functions here
//! exploit.

use crate::central::{CentralPoly, Degree};
use crate::error::{precondition, Error, Result};
use crate::linalg;
use crate::qpoly::QPoly;
use crate::quat::{Algebra, Quaternion};
use crate::rational::Rational;

/// Coordinates of a polynomial in the basis `1, i, j, k` over the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterCoords {
    pub one: CentralPoly,
    pub i: CentralPoly,
    pub j: CentralPoly,
    pub k: CentralPoly,
}

impl CenterCoords {
    pub fn as_array(&self) -> [&CentralPoly; 4] {
        [&self.one, &self.i, &self.j, &self.k]
    }

    pub fn recombine(&self, alg: &Algebra) -> QPoly {
        let units = [
            Quaternion::one(),
            Quaternion::i(),
            Quaternion::j(),
            Quaternion::k(),
        ];
        self.as_array()
            .into_iter()
            .zip(units)
            .fold(QPoly::zero(alg), |acc, (b, u)| {
                &acc + &QPoly::from_central(alg, b).scale_left(&u)
            })
    }

    /// Monic GCD of the nonzero coordinates.
    pub fn gcd(&self) -> Result<CentralPoly> {
        let mut acc = CentralPoly::zero();
        for b in self.as_array() {
            if !b.is_zero() {
                acc = if acc.is_zero() {
                    b.monic()?
                } else {
                    CentralPoly::gcd(&acc, b)?
                };
            }
        }
        if acc.is_zero() {
            return precondition("coordinates of the zero polynomial");
        }
        Ok(acc)
    }
}

pub fn coords_center(p: &QPoly) -> CenterCoords {
    let column = |f: fn(&Quaternion) -> &Rational| {
        CentralPoly::new(p.coeffs().iter().map(|c| f(c).clone()).collect())
    };
    CenterCoords {
        one: column(|q| &q.w),
        i: column(|q| &q.x),
        j: column(|q| &q.y),
        k: column(|q| &q.z),
    }
}

/// `P = c * G * H` with `c` the leading coefficient, `H` monic central and
/// `G` monic without non-constant central right divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeckFactorization {
    pub c: Quaternion,
    pub g: QPoly,
    pub h: CentralPoly,
}

impl BeckFactorization {
    pub fn recompose(&self) -> QPoly {
        let alg = self.g.algebra();
        &self.g.scale_left(&self.c) * &QPoly::from_central(alg, &self.h)
    }
}

pub fn beck_decompose(p: &QPoly) -> Result<BeckFactorization> {
    let c = p
        .leading()
        .ok_or_else(|| Error::Precondition("decomposition of the zero polynomial".into()))?
        .clone();
    let alg = p.algebra();
    let h = coords_center(p).gcd()?;
    let monic = p.scale_left(&alg.inv(&c)?);
    let (g, rem) = monic.right_divrem(&QPoly::from_central(alg, &h))?;
    if !rem.is_zero() {
        return Err(Error::InvariantViolation(format!(
            "coordinate gcd {h} does not right-divide {p}"
        )));
    }
    let out = BeckFactorization { c, g, h };
    if out.recompose() != *p || !coords_center(&out.g).gcd()?.is_one() {
        return Err(Error::InvariantViolation(format!(
            "c*G*H factorization of {p} failed to verify"
        )));
    }
    Ok(out)
}

/// The central right divisor of greatest degree (the `H` factor).
pub fn max_central_right_divisor(p: &QPoly) -> Result<CentralPoly> {
    if p.is_zero() {
        return precondition("zero polynomial");
    }
    Ok(beck_decompose(p)?.h)
}

/// Rational roots of `P`: the common rational roots of its coordinates,
/// i.e. the rational roots of `H`. Each one is re-checked by evaluation.
pub fn roots_in_center(p: &QPoly) -> Result<Vec<Rational>> {
    let h = max_central_right_divisor(p)?;
    let roots = h.rational_roots()?;
    for r in &roots {
        if !p.eval_right(&Quaternion::scalar(r.clone())).is_zero() {
            return Err(Error::InvariantViolation(format!(
                "{r} is a root of H = {h} but not of {p}"
            )));
        }
    }
    Ok(roots)
}

/// Outcome of testing a central candidate `h` against `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralDivisorCheck {
    pub divides: bool,
    pub degree: Degree,
    /// The maximal central right divisor `H`.
    pub maximal_divisor: CentralPoly,
    /// `h` right-divides `P` and has the degree of `H`.
    pub is_maximal: bool,
}

pub fn check_central_divisor(p: &QPoly, h: &CentralPoly) -> Result<CentralDivisorCheck> {
    let divides = p.right_divisible_by(&QPoly::from_central(p.algebra(), h))?;
    let maximal_divisor = max_central_right_divisor(p)?;
    Ok(CentralDivisorCheck {
        divides,
        degree: h.degree(),
        is_maximal: divides && h.degree() == maximal_divisor.degree(),
        maximal_divisor,
    })
}

/// Coordinates over a maximal subfield `F(s)` in the basis `1, u`:
/// `P = b1 + u * b2` with all coefficients of `b1`, `b2` commuting with `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubfieldCoords {
    pub s: Quaternion,
    pub u: Quaternion,
    pub b1: QPoly,
    pub b2: QPoly,
}

impl SubfieldCoords {
    pub fn recombine(&self) -> QPoly {
        &self.b1 + &self.b2.scale_left(&self.u)
    }
}

fn column_matrix(cols: &[Quaternion]) -> Vec<Vec<Rational>> {
    (0..4)
        .map(|r| cols.iter().map(|q| q.components()[r].clone()).collect())
        .collect()
}

pub fn coords_subfield(p: &QPoly, s: &Quaternion, u: &Quaternion) -> Result<SubfieldCoords> {
    if s.is_central() {
        return precondition("subfield generator must be non-central");
    }
    let alg = p.algebra();
    let us = alg.mul(u, s);
    let basis = [Quaternion::one(), s.clone(), u.clone(), us];
    let m = column_matrix(&basis);
    if linalg::rank(&m) < 4 {
        return precondition(format!("{{1, {s}, {u}, ({u})({s})}} is linearly dependent"));
    }
    let mut b1 = Vec::with_capacity(p.coeffs().len());
    let mut b2 = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        let rhs: Vec<Rational> = c.components().into_iter().cloned().collect();
        let v = linalg::solve(&m, &rhs).expect("basis is independent");
        b1.push(Quaternion::scalar(v[0].clone()) + s.scale(&v[1]));
        b2.push(Quaternion::scalar(v[2].clone()) + s.scale(&v[3]));
    }
    Ok(SubfieldCoords {
        s: s.clone(),
        u: u.clone(),
        b1: QPoly::new(alg, b1),
        b2: QPoly::new(alg, b2),
    })
}

/// First of `j, i, k` that does not commute with `s`; together with `s`
/// it completes `1, s` to a basis `1, s, u, us`.
pub fn complementary_unit(alg: &Algebra, s: &Quaternion) -> Result<Quaternion> {
    if s.is_central() {
        return precondition("subfield generator must be non-central");
    }
    Ok([Quaternion::j(), Quaternion::i(), Quaternion::k()]
        .into_iter()
        .find(|u| !alg.commutes(u, s))
        .expect("a non-central element fails to commute with some unit"))
}

/// Monic GCD of the subfield coordinates, computed inside `F(s)`. Every root
/// of `P` lying in `F(s)` is a root of the result.
pub fn subfield_gcd(coords: &SubfieldCoords) -> Result<QPoly> {
    if coords.b1.is_zero() && coords.b2.is_zero() {
        return precondition("both subfield coordinates are zero");
    }
    // F(s) is commutative, so the right Euclidean algorithm is the ordinary
    // one; its quotients and remainders never leave F(s).
    let g = coords.b1.gcrd(&coords.b2)?;
    let alg = g.algebra();
    if !g.coeffs().iter().all(|c| alg.commutes(c, &coords.s)) {
        return Err(Error::InvariantViolation(
            "subfield gcd left the subfield".into(),
        ));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn alg() -> Algebra {
        Algebra::hamilton()
    }

    fn central(c: &[i64]) -> QPoly {
        QPoly::from_central(&alg(), &CentralPoly::from_ints(c))
    }

    fn qp(c: Vec<Quaternion>) -> QPoly {
        QPoly::new(&alg(), c)
    }

    #[test]
    fn center_coordinates() {
        let (one, i) = (Quaternion::one(), Quaternion::i());
        let p = qp(vec![Quaternion::zero(), i.clone(), one.clone()]);
        let c = coords_center(&p);
        assert_eq!(c.one, CentralPoly::from_ints(&[0, 0, 1]));
        assert_eq!(c.i, CentralPoly::from_ints(&[0, 1]));
        assert!(c.j.is_zero() && c.k.is_zero());
        assert_eq!(c.recombine(&alg()), p);

        let c = coords_center(&central(&[0, 1, 0, 1]));
        assert_eq!(c.one, CentralPoly::from_ints(&[0, 1, 0, 1]));
        assert!(c.i.is_zero());

        let c = coords_center(&QPoly::constant(&alg(), Quaternion::k()));
        assert!(c.one.is_zero() && c.i.is_zero() && c.j.is_zero());
        assert_eq!(c.k, CentralPoly::one());
    }

    #[test]
    fn beck_examples() {
        let f = beck_decompose(&central(&[0, 1, 0, 1])).unwrap();
        assert_eq!(f.c, Quaternion::one());
        assert_eq!(f.g, QPoly::one(&alg()));
        assert_eq!(f.h, CentralPoly::from_ints(&[0, 1, 0, 1]));

        let p = qp(vec![Quaternion::zero(), Quaternion::i(), Quaternion::one()]);
        let f = beck_decompose(&p).unwrap();
        assert_eq!(f.g, qp(vec![Quaternion::i(), Quaternion::one()]));
        assert_eq!(f.h, CentralPoly::x());

        let j = Quaternion::j();
        let p = qp(vec![Quaternion::zero(), j.clone(), j.clone()]);
        let f = beck_decompose(&p).unwrap();
        assert_eq!(f.c, j);
        assert_eq!(f.g, QPoly::one(&alg()));
        assert_eq!(f.h, CentralPoly::from_ints(&[0, 1, 1]));

        assert!(beck_decompose(&QPoly::zero(&alg())).is_err());
    }

    #[test]
    fn non_maximal_central_divisor() {
        let p = central(&[0, 1, 0, 1]);
        let check = check_central_divisor(&p, &CentralPoly::x()).unwrap();
        assert!(check.divides);
        assert!(!check.is_maximal);
        assert_eq!(check.maximal_divisor, CentralPoly::from_ints(&[0, 1, 0, 1]));
    }

    #[test]
    fn central_roots() {
        assert_eq!(
            roots_in_center(&central(&[0, 1, 0, 1])).unwrap(),
            vec![int(0)]
        );
        let i = Quaternion::i();
        let p = &QPoly::linear(&alg(), &i) * &central(&[1, 1]).pow(2);
        assert_eq!(roots_in_center(&p).unwrap(), vec![int(-1)]);
        assert!(roots_in_center(&central(&[1, 0, 1])).unwrap().is_empty());
        assert!(roots_in_center(&QPoly::zero(&alg())).is_err());
    }

    #[test]
    fn subfield_coordinates() {
        let (i, j) = (Quaternion::i(), Quaternion::j());
        let p = central(&[1, -2, 3]);
        let c = coords_subfield(&p, &i, &j).unwrap();
        assert_eq!(c.b1, p);
        assert!(c.b2.is_zero());

        // x^3 + i x + j over Q(i) with u = j
        let p = qp(vec![
            j.clone(),
            i.clone(),
            Quaternion::zero(),
            Quaternion::one(),
        ]);
        let c = coords_subfield(&p, &i, &j).unwrap();
        assert_eq!(
            c.b1,
            qp(vec![
                Quaternion::zero(),
                i.clone(),
                Quaternion::zero(),
                Quaternion::one()
            ])
        );
        assert_eq!(c.b2, QPoly::one(&alg()));
        assert_eq!(c.recombine(), p);

        assert!(coords_subfield(&p, &i, &Quaternion::from_ints(2, 3, 0, 0)).is_err());
        assert!(coords_subfield(&p, &Quaternion::one(), &j).is_err());
    }

    #[test]
    fn subfield_gcd_examples() {
        let (i, j) = (Quaternion::i(), Quaternion::j());
        let p = &QPoly::linear(&alg(), &i) * &central(&[1, 0, 1]);
        let c = coords_subfield(&p, &j, &i).unwrap();
        let g = subfield_gcd(&c).unwrap();
        assert_eq!(g, central(&[1, 0, 1]));
        assert!(p.eval_right(&j).is_zero());
        assert!(p.right_divisible_by(&g).unwrap());

        let c = coords_subfield(&central(&[2, 0, 4]), &i, &j).unwrap();
        assert_eq!(
            subfield_gcd(&c).unwrap(),
            central(&[2, 0, 4]).monic().unwrap()
        );

        // x^4 + j x: over Q(i) with u = j the second coordinate is x
        let p = qp(vec![
            Quaternion::zero(),
            j.clone(),
            Quaternion::zero(),
            Quaternion::zero(),
            Quaternion::one(),
        ]);
        let c = coords_subfield(&p, &i, &j).unwrap();
        assert_eq!(c.b2, QPoly::x(&alg()));
        let g = subfield_gcd(&c).unwrap();
        assert!(QPoly::x(&alg()).right_divisible_by(&g).unwrap());
    }
}
