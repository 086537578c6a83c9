use num_complex::Complex64;

use crate::central::CentralPoly;
use crate::error::Result;
use crate::numeric::polyroots::clustered_roots;
use crate::qpoly::QPoly;
use crate::quat::ConjClass;
use crate::rational::{self, Rational};

/// Rationalization parameters for numerically located class invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct CandidateSettings {
    pub max_denominator: u64,
    pub tolerance: f64,
}

impl Default for CandidateSettings {
    fn default() -> Self {
        Self {
            max_denominator: 1_000_000,
            tolerance: 1e-8,
        }
    }
}

pub fn candidate_classes(p: &QPoly) -> Result<Vec<ConjClass>> {
    candidate_classes_with(p, &CandidateSettings::default())
}

/// Classes whose minimal polynomial divides the norm polynomial of `P`.
///
/// The complex roots of the square-free part of `P * conj(P)` are located
/// numerically; each real root and each pair of roots with real sum and
/// product is rationalized and kept only if the resulting minimal
/// polynomial divides the norm polynomial exactly.
pub fn candidate_classes_with(p: &QPoly, settings: &CandidateSettings) -> Result<Vec<ConjClass>> {
    let norm_poly = p.companion();
    if norm_poly.is_zero() {
        return Ok(vec![]);
    }
    let sf = norm_poly.squarefree_part()?;
    let roots: Vec<Complex64> = clustered_roots(&sf.to_f64())?
        .into_iter()
        .map(|c| c.center)
        .collect();
    let rat = |v: f64| rational::rationalize(v, settings.max_denominator, settings.tolerance);
    let is_real = |v: Complex64| v.im.abs() <= settings.tolerance * v.norm().max(1.0);

    let mut central: Vec<Rational> = Vec::new();
    let mut spheres: Vec<(Rational, Rational)> = Vec::new();
    for (a, za) in roots.iter().enumerate() {
        if is_real(*za) {
            if let Some(r) = rat(za.re) {
                if sf.eval(&r) == Rational::from_integer(0.into()) && !central.contains(&r) {
                    central.push(r);
                }
            }
        }
        for zb in &roots[a + 1..] {
            let (t, n) = (za + zb, za * zb);
            if !is_real(t) || !is_real(n) {
                continue;
            }
            let (Some(t), Some(n)) = (rat(t.re), rat(n.re)) else {
                continue;
            };
            let disc = &t * &t - rational::int(4) * &n;
            if rational::is_square(&disc) || spheres.contains(&(t.clone(), n.clone())) {
                continue;
            }
            let lambda = CentralPoly::new(vec![n.clone(), -&t, rational::int(1)]);
            if sf.rem(&lambda)?.is_zero() {
                spheres.push((t, n));
            }
        }
    }
    central.sort();
    spheres.sort();
    let mut out: Vec<ConjClass> = central.into_iter().map(ConjClass::Central).collect();
    for (t, n) in spheres {
        out.push(ConjClass::sphere(t, n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::{Algebra, Quaternion};
    use crate::rational::int;

    fn alg() -> Algebra {
        Algebra::hamilton()
    }

    #[test]
    fn examples() {
        let (i, j) = (Quaternion::i(), Quaternion::j());
        let s01 = ConjClass::sphere(int(0), int(1)).unwrap();
        let central = |c: &[i64]| QPoly::from_central(&alg(), &CentralPoly::from_ints(c));
        let p = &QPoly::linear(&alg(), &i) * &central(&[1, 0, 1]);
        assert_eq!(candidate_classes(&p).unwrap(), vec![s01.clone()]);

        let p = central(&[-2, 1]);
        assert_eq!(
            candidate_classes(&p).unwrap(),
            vec![ConjClass::Central(int(2))]
        );

        let p = &QPoly::linear(&alg(), &i) * &QPoly::linear(&alg(), &j);
        assert!(candidate_classes(&p).unwrap().contains(&s01));
    }

    #[test]
    fn irrational_classes_are_dropped() {
        // x^4 + 1 splits over R into classes with trace +-sqrt(2)
        let p = QPoly::from_central(&alg(), &CentralPoly::from_ints(&[1, 0, 0, 0, 1]));
        assert!(candidate_classes(&p).unwrap().is_empty());
    }

    #[test]
    fn indefinite_algebra_pairs_real_roots() {
        // In (2, 5) the element i has minimal polynomial x^2 - 2, whose
        // roots are real but irrational.
        let alg = Algebra::new(int(2), int(5)).unwrap();
        let p = QPoly::linear(&alg, &Quaternion::i());
        assert_eq!(
            candidate_classes(&p).unwrap(),
            vec![ConjClass::sphere(int(0), int(-2)).unwrap()]
        );
    }
}
