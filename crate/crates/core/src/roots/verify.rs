//! Randomized re-checks of a classification: a spherical class consists of
//! roots throughout, an isolated root is alone in its class, and on every
//! class `P` agrees with `alpha q + beta`.

use rand::Rng;

use super::{class_remainder, ClassStatus, RootReport};
use crate::error::Result;
use crate::qpoly::QPoly;
use crate::quat::{Algebra, ConjClass, Quaternion};
use crate::sample;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DichotomyReport {
    /// Class elements evaluated, over all checked classes.
    pub samples: usize,
    /// Spherical classes without a known rational element; not sampled.
    pub skipped: Vec<ConjClass>,
    pub failures: Vec<String>,
}

impl DichotomyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Random conjugates `g q g^-1` with small integer conjugators.
fn random_conjugates<R: Rng + ?Sized>(
    rng: &mut R,
    alg: &Algebra,
    q: &Quaternion,
    count: usize,
) -> Result<Vec<Quaternion>> {
    (0..count)
        .map(|_| {
            let g = sample::invertible(rng, alg, 5, 1);
            alg.conjugate_by(&g, q)
        })
        .collect()
}

/// For every spherical class, `per_class` elements all evaluate to zero; for
/// every isolated root `q`, `per_class` conjugates other than `q` do not.
pub fn dichotomy_check<R: Rng + ?Sized>(
    p: &QPoly,
    report: &RootReport,
    rng: &mut R,
    per_class: usize,
) -> Result<DichotomyReport> {
    let alg = p.algebra();
    let mut out = DichotomyReport::default();
    for entry in &report.entries {
        match &entry.status {
            ClassStatus::Spherical => {
                let Some(w) = alg.class_witness(&entry.class) else {
                    out.skipped.push(entry.class.clone());
                    continue;
                };
                let mut elems = alg.distinct_conjugates(&w, per_class / 2)?;
                elems.extend(random_conjugates(rng, alg, &w, per_class - per_class / 2)?);
                for d in elems {
                    out.samples += 1;
                    if !p.eval_right(&d).is_zero() {
                        out.failures.push(format!(
                            "{d} in spherical class {} is not a root",
                            entry.class
                        ));
                    }
                }
            }
            ClassStatus::IsolatedRoot(q) => {
                for d in random_conjugates(rng, alg, q, per_class)? {
                    if d == *q {
                        continue;
                    }
                    out.samples += 1;
                    if p.eval_right(&d).is_zero() {
                        out.failures
                            .push(format!("{d} is a second root next to isolated root {q}"));
                    }
                }
            }
            ClassStatus::NoRoot { .. } => {}
        }
    }
    Ok(out)
}

/// `P(q) = alpha q + beta` for `count` random elements `q` of the class of
/// `c`, `(alpha, beta)` being the class remainder.
pub fn remainder_contract<R: Rng + ?Sized>(
    p: &QPoly,
    c: &Quaternion,
    rng: &mut R,
    count: usize,
) -> Result<bool> {
    let alg = p.algebra();
    let (alpha, beta) = class_remainder(p, &alg.class_of(c))?;
    let mut elems = vec![c.clone()];
    elems.extend(random_conjugates(rng, alg, c, count)?);
    Ok(elems
        .iter()
        .all(|q| p.eval_right(q) == alg.mul(&alpha, q) + beta.clone()))
}
