use num_traits::{Signed, Zero};

use super::{classify, ClassStatus};
use crate::error::{precondition, Error, Result};
use crate::qpoly::QPoly;
use crate::quat::Quaternion;
use crate::rational;

/// Roots of `P` lying in the maximal subfield `F(s)`.
///
/// Central roots always lie there; an isolated root does iff it commutes
/// with `s`. A spherical class `(t, n)` meets `F(s)` in `t/2 +- beta s0`
/// (`s0` the pure part of `s`) with `beta^2 = (n - t^2/4) / N(s0)`, which
/// over the rationals exists only when `beta^2` is a square.
pub fn roots_in_subfield(p: &QPoly, s: &Quaternion) -> Result<Vec<Quaternion>> {
    if s.is_central() {
        return precondition("subfield generator must be non-central");
    }
    let alg = p.algebra();
    let report = classify(p)?;
    let mut out: Vec<Quaternion> = report
        .central_roots
        .iter()
        .map(|r| Quaternion::scalar(r.clone()))
        .collect();
    let s0 = s.pure_part();
    let ns0 = alg.norm(&s0);
    for entry in &report.entries {
        match &entry.status {
            ClassStatus::IsolatedRoot(q) if alg.commutes(q, s) => out.push(q.clone()),
            ClassStatus::Spherical if !ns0.is_zero() => {
                let (t, n) = entry.class.invariants().expect("spherical class");
                let half = t / rational::int(2);
                let beta2 = (n - &half * &half) / &ns0;
                if beta2.is_negative() {
                    continue;
                }
                let Some(beta) = rational::sqrt_exact(&beta2) else {
                    continue;
                };
                for b in [beta.clone(), -beta] {
                    out.push(Quaternion::scalar(half.clone()) + s0.scale(&b));
                }
            }
            _ => {}
        }
    }
    for q in &out {
        if !p.eval_right(q).is_zero() || !alg.commutes(q, s) {
            return Err(Error::InvariantViolation(format!(
                "{q} reported as a root of {p} in the subfield of {s}"
            )));
        }
    }
    Ok(out)
}
