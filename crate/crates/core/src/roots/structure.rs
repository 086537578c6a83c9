//! Structural bounds on spherical classes read off the coefficients.
//!
//! A spherical class has a central minimal polynomial `lambda` that divides
//! `P`, hence divides each coordinate of `P` over the center. The analyzers
//! below use that to bound the number of spherical classes from the pattern
//! of non-central coefficients alone; [`super::classify`] is the reference
//! they are tested against.

use std::fmt;

use num_traits::Zero;

use super::{classify, coefficients_commute};
use crate::central::{CentralPoly, Degree};
use crate::error::{precondition, Error, Result};
use crate::qpoly::QPoly;
use crate::quat::{ConjClass, Quaternion};
use crate::rational::Rational;

pub fn spherical_classes(p: &QPoly) -> Result<Vec<ConjClass>> {
    Ok(classify(p)?.spherical_classes())
}

/// Count of spherical classes against the `floor(n/2)` bound, with the
/// coefficient conditions forced in the two equality cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalBoundReport {
    pub degree: usize,
    pub spherical: Vec<ConjClass>,
    pub bound: usize,
    /// Even degree with `n/2` classes, or odd degree with `(n-1)/2`.
    pub equality_case: bool,
    pub coefficients_central: bool,
    pub coefficients_commute: bool,
    /// The bound holds and, in an equality case, so does its coefficient
    /// condition.
    pub holds: bool,
}

pub fn spherical_bound_report(p: &QPoly) -> Result<SphericalBoundReport> {
    let monic = p.monic()?;
    let report = classify(&monic)?;
    let n = report.degree;
    let spherical = report.spherical_classes();
    let count = spherical.len();
    let coefficients_central = monic.is_central();
    let coefficients_commute = coefficients_commute(&monic);
    let even_eq = n % 2 == 0 && count == n / 2;
    let odd_eq = n % 2 == 1 && count == (n - 1) / 2;
    let holds =
        count <= n / 2 && (!even_eq || coefficients_central) && (!odd_eq || coefficients_commute);
    Ok(SphericalBoundReport {
        degree: n,
        spherical,
        bound: n / 2,
        equality_case: even_eq || odd_eq,
        coefficients_central,
        coefficients_commute,
        holds,
    })
}

/// A subfield holding every coefficient.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubfieldGenerator {
    /// All coefficients are central.
    Central,
    /// All coefficients lie in `F(s)` for this non-central `s`.
    Generator(Quaternion),
}

pub fn common_subfield(p: &QPoly) -> Option<SubfieldGenerator> {
    let alg = p.algebra();
    let noncentral: Vec<&Quaternion> = p.coeffs().iter().filter(|c| !c.is_central()).collect();
    let Some(first) = noncentral.first() else {
        return Some(SubfieldGenerator::Central);
    };
    // Non-central elements commute iff their pure parts are proportional,
    // so commuting with the first one suffices.
    noncentral
        .iter()
        .all(|c| alg.commutes(c, first))
        .then(|| SubfieldGenerator::Generator((*first).clone()))
}

/// Coefficient pattern of a monic cubic `x^3 + a x^2 + b x + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicCase {
    /// `a, b, c` central.
    AllCentral,
    /// `a, c` non-central, `b` central, `a` in `F(c)`.
    OuterPairShared,
    /// `a, b, c` non-central, `a, c` in `F(b)`.
    AllShared,
    /// Exactly one non-central coefficient.
    SingleNonCentral,
    /// `a` central, `b, c` non-central, `b` in `F(c)`.
    LowerPairShared,
    /// `c` central, `a, b` non-central, `a` in `F(b)`.
    UpperPairShared,
    /// No common subfield.
    NoCommonSubfield,
}

impl CubicCase {
    /// At most one spherical class in the first three cases, none otherwise.
    pub fn spherical_bound(self) -> usize {
        match self {
            CubicCase::AllCentral | CubicCase::OuterPairShared | CubicCase::AllShared => 1,
            _ => 0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CubicCase::AllCentral => "1a",
            CubicCase::OuterPairShared => "1b",
            CubicCase::AllShared => "1c",
            CubicCase::SingleNonCentral => "2a",
            CubicCase::LowerPairShared => "2b",
            CubicCase::UpperPairShared => "2c",
            CubicCase::NoCommonSubfield => "2d",
        }
    }
}

impl fmt::Display for CubicCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Which coefficient pattern a cubic falls into; non-monic input is first
/// normalized by the inverse of its leading coefficient.
pub fn classify_cubic(p: &QPoly) -> Result<CubicCase> {
    if p.degree() != Degree::Finite(3) {
        return precondition(format!("expected a cubic, got degree {}", p.degree()));
    }
    let monic = p.monic()?;
    let alg = monic.algebra();
    let (a, b, c) = (monic.coeff(2), monic.coeff(1), monic.coeff(0));
    let nc = [&a, &b, &c].map(|q| !q.is_central());
    let same = |x: &Quaternion, y: &Quaternion| alg.commutes(x, y);
    Ok(match nc {
        [false, false, false] => CubicCase::AllCentral,
        [true, false, false] | [false, true, false] | [false, false, true] => {
            CubicCase::SingleNonCentral
        }
        [true, false, true] if same(&a, &c) => CubicCase::OuterPairShared,
        [false, true, true] if same(&b, &c) => CubicCase::LowerPairShared,
        [true, true, false] if same(&a, &b) => CubicCase::UpperPairShared,
        [true, true, true] if same(&a, &b) && same(&c, &b) => CubicCase::AllShared,
        _ => CubicCase::NoCommonSubfield,
    })
}

/// Spherical-class analysis of a monic polynomial whose coefficients are
/// central except at most two, at positions `k > m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SparseReport {
    /// No non-central coefficient; only the general `floor(n/2)` bound.
    AllCentral { bound: usize },
    /// Exactly one non-central coefficient: no spherical classes.
    OneNonCentral { position: usize },
    /// `a_k = u + v a_m` with `v != 0`: every spherical class has its minimal
    /// polynomial dividing `x^(k-m) + 1/v`, so at most `(k-m)/2` of them.
    SameSubfield {
        k: usize,
        m: usize,
        u: Rational,
        v: Rational,
        factor: CentralPoly,
        bound: usize,
    },
    /// `a_k` and `a_m` do not commute: no spherical classes.
    DifferentSubfields { k: usize, m: usize },
    /// Three or more non-central coefficients.
    NotApplicable { positions: Vec<usize> },
}

impl SparseReport {
    pub fn spherical_bound(&self) -> Option<usize> {
        match self {
            SparseReport::AllCentral { bound } | SparseReport::SameSubfield { bound, .. } => {
                Some(*bound)
            }
            SparseReport::OneNonCentral { .. } | SparseReport::DifferentSubfields { .. } => Some(0),
            SparseReport::NotApplicable { .. } => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SparseReport::AllCentral { .. } => "all-central",
            SparseReport::OneNonCentral { .. } => "case-1",
            SparseReport::SameSubfield { .. } => "case-2",
            SparseReport::DifferentSubfields { .. } => "case-3",
            SparseReport::NotApplicable { .. } => "not-applicable",
        }
    }
}

pub fn analyze_sparse(p: &QPoly) -> Result<SparseReport> {
    let n = match p.degree() {
        Degree::Finite(n) if n >= 1 => n,
        d => return precondition(format!("expected degree >= 1, got {d}")),
    };
    let monic = p.monic()?;
    let alg = monic.algebra();
    let positions: Vec<usize> = (0..n).filter(|&i| !monic.coeff(i).is_central()).collect();
    Ok(match positions.as_slice() {
        [] => SparseReport::AllCentral { bound: n / 2 },
        [pos] => SparseReport::OneNonCentral { position: *pos },
        [m, k] => {
            let (m, k) = (*m, *k);
            let (am, ak) = (monic.coeff(m), monic.coeff(k));
            if !alg.commutes(&am, &ak) {
                SparseReport::DifferentSubfields { k, m }
            } else {
                let v = pure_ratio(&ak, &am)?;
                let u = &ak.w - &v * &am.w;
                let mut c = vec![Rational::zero(); k - m + 1];
                c[0] = v.recip();
                c[k - m] = Rational::from_integer(1.into());
                SparseReport::SameSubfield {
                    k,
                    m,
                    u,
                    v,
                    factor: CentralPoly::new(c),
                    bound: (k - m) / 2,
                }
            }
        }
        _ => SparseReport::NotApplicable { positions },
    })
}

/// `v` with `pure(x) = v * pure(y)`, for commuting non-central `x`, `y`.
fn pure_ratio(x: &Quaternion, y: &Quaternion) -> Result<Rational> {
    let (px, py) = (x.pure_part(), y.pure_part());
    let idx = (1..4)
        .find(|&i| !py.components()[i].is_zero())
        .ok_or_else(|| {
            Error::InvariantViolation("non-central element with zero pure part".into())
        })?;
    let v = px.components()[idx] / py.components()[idx];
    if py.scale(&v) != px {
        return Err(Error::InvariantViolation(format!(
            "commuting elements {x} and {y} with non-proportional pure parts"
        )));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Algebra;
    use crate::rational::int;

    fn alg() -> Algebra {
        Algebra::hamilton()
    }

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(w, x, y, z)
    }

    fn poly(c: Vec<Quaternion>) -> QPoly {
        QPoly::new(&alg(), c)
    }

    fn central(c: &[i64]) -> QPoly {
        QPoly::from_central(&alg(), &CentralPoly::from_ints(c))
    }

    #[test]
    fn bound_equality_cases() {
        let p = &central(&[1, 0, 1]) * &central(&[1, 1, 1]);
        let r = spherical_bound_report(&p).unwrap();
        assert_eq!(r.spherical.len(), 2);
        assert!(r.equality_case && r.coefficients_central && r.holds);

        let p = &QPoly::linear(&alg(), &Quaternion::i()) * &central(&[1, 0, 1]);
        let r = spherical_bound_report(&p).unwrap();
        assert_eq!(r.spherical.len(), 1);
        assert!(r.equality_case && r.coefficients_commute && r.holds);

        let r = spherical_bound_report(&central(&[1, 1, 1])).unwrap();
        assert_eq!(r.spherical.len(), 1);
        assert!(r.holds);
    }

    #[test]
    fn common_subfields() {
        let i = Quaternion::i();
        let p = poly(vec![
            q(3, 0, 0, 0),
            q(1, 1, 0, 0),
            i.clone(),
            Quaternion::one(),
        ]);
        assert_eq!(
            common_subfield(&p),
            Some(SubfieldGenerator::Generator(q(1, 1, 0, 0)))
        );
        let p = poly(vec![q(1, 0, 0, 0), Quaternion::j(), i, Quaternion::one()]);
        assert_eq!(common_subfield(&p), None);
        assert_eq!(
            common_subfield(&central(&[1, 2, 3])),
            Some(SubfieldGenerator::Central)
        );
    }

    #[test]
    fn cubic_cases() {
        let i = Quaternion::i();
        let ex = poly(vec![
            -i.clone(),
            Quaternion::one(),
            -i.clone(),
            Quaternion::one(),
        ]);
        assert_eq!(classify_cubic(&ex).unwrap(), CubicCase::OuterPairShared);
        let p = poly(vec![
            Quaternion::one(),
            Quaternion::j(),
            i.clone(),
            Quaternion::one(),
        ]);
        assert_eq!(classify_cubic(&p).unwrap(), CubicCase::NoCommonSubfield);
        assert_eq!(
            classify_cubic(&central(&[0, -1, 0, 1])).unwrap(),
            CubicCase::AllCentral
        );
        let p = poly(vec![
            q(0, -1, 0, 0),
            q(1, -2, 0, 0),
            q(2, -1, 0, 0),
            Quaternion::one(),
        ]);
        assert_eq!(classify_cubic(&p).unwrap(), CubicCase::AllShared);
        let p = poly(vec![
            q(1, 0, 0, 0),
            q(1, 0, 0, 0),
            i.clone(),
            Quaternion::one(),
        ]);
        assert_eq!(classify_cubic(&p).unwrap(), CubicCase::SingleNonCentral);
        let p = poly(vec![
            i.clone(),
            q(0, 2, 0, 0),
            q(1, 0, 0, 0),
            Quaternion::one(),
        ]);
        assert_eq!(classify_cubic(&p).unwrap(), CubicCase::LowerPairShared);
        let p = poly(vec![q(1, 0, 0, 0), q(0, 2, 0, 0), i, Quaternion::one()]);
        assert_eq!(classify_cubic(&p).unwrap(), CubicCase::UpperPairShared);
        assert!(classify_cubic(&central(&[1, 1])).is_err());
    }

    #[test]
    fn sparse_cases() {
        let (i, j) = (Quaternion::i(), Quaternion::j());
        let z = Quaternion::zero;
        let p = poly(vec![Quaternion::one(), z(), i.clone(), Quaternion::one()]);
        assert_eq!(
            analyze_sparse(&p).unwrap(),
            SparseReport::OneNonCentral { position: 2 }
        );

        let p = poly(vec![z(), i.clone(), z(), i.clone(), Quaternion::one()]);
        match analyze_sparse(&p).unwrap() {
            SparseReport::SameSubfield {
                k,
                m,
                u,
                v,
                factor,
                bound,
            } => {
                assert_eq!((k, m, bound), (3, 1, 1));
                assert_eq!((u, v), (int(0), int(1)));
                assert_eq!(factor, CentralPoly::from_ints(&[1, 0, 1]));
            }
            other => panic!("unexpected {other:?}"),
        }

        let p = poly(vec![z(), j.clone(), z(), i.clone(), Quaternion::one()]);
        assert_eq!(
            analyze_sparse(&p).unwrap(),
            SparseReport::DifferentSubfields { k: 3, m: 1 }
        );

        let p = poly(vec![i.clone(), j, i, Quaternion::one()]);
        assert_eq!(
            analyze_sparse(&p).unwrap(),
            SparseReport::NotApplicable {
                positions: vec![0, 1, 2]
            }
        );
        assert_eq!(
            analyze_sparse(&central(&[1, 0, 1])).unwrap(),
            SparseReport::AllCentral { bound: 1 }
        );
    }
}
