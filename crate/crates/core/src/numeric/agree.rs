//! Cross-check of the floating-point classifier against the exact one.
//!
//! The exact backend only sees classes with rational invariants, the
//! numeric one every class over the Hamilton quaternions. So every exact
//! class and central root must be found numerically with the same status,
//! while a numeric class without exact counterpart is acceptable only if
//! its invariants are not rational (checked exactly, after rationalizing).

use super::{classify_f64, NumericEntry, NumericSettings, NumericStatus, QPolyF, QuatF};
use crate::central::CentralPoly;
use crate::error::Result;
use crate::qpoly::QPoly;
use crate::quat::Quaternion;
use crate::rational::{self, Rational};
use crate::roots::{classify, ClassEntry, ClassStatus};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct AgreementReport {
    pub agree: bool,
    /// Exact classes and central roots found numerically with equal status.
    pub matched: usize,
    pub mismatches: Vec<String>,
    /// Disagreements involving an entry the numeric side flagged uncertain.
    pub uncertain: Vec<String>,
    /// Numeric classes or central roots with irrational invariants.
    pub hamilton_only: Vec<String>,
}

fn close(a: f64, b: &Rational, eps: f64) -> bool {
    let b = rational::to_f64(b);
    (a - b).abs() <= eps * b.abs().max(1.0)
}

fn quat_close(a: QuatF, b: &Quaternion, eps: f64) -> bool {
    a.components()
        .iter()
        .zip(b.components())
        .all(|(x, y)| close(*x, y, eps))
}

fn same_status(n: &NumericEntry, e: &ClassEntry, eps: f64) -> bool {
    match (&n.status, &e.status) {
        (NumericStatus::Spherical, ClassStatus::Spherical) => true,
        (NumericStatus::Isolated(q), ClassStatus::IsolatedRoot(r)) => quat_close(*q, r, eps),
        (NumericStatus::NoRoot { .. }, ClassStatus::NoRoot { .. }) => true,
        _ => false,
    }
}

/// Whether a numerically found value is (within tolerance) a rational
/// invariant that the exact side should have produced.
fn rational_near(v: f64, eps: f64) -> Option<Rational> {
    rational::rationalize(v, 1_000_000, eps)
}

pub fn agree_with_exact(p: &QPoly, settings: &NumericSettings) -> Result<AgreementReport> {
    let exact = classify(p)?;
    let numeric = classify_f64(&QPolyF::from_exact(p)?, settings)?;
    let eps = settings.eps_class;
    let companion = p.companion();
    let mut out = AgreementReport::default();

    let mut used_roots = vec![false; numeric.central_roots.len()];
    for r in &exact.central_roots {
        match numeric
            .central_roots
            .iter()
            .position(|n| close(n.value, r, eps))
        {
            Some(idx) => {
                used_roots[idx] = true;
                out.matched += 1;
            }
            None => out
                .mismatches
                .push(format!("central root {r} not found numerically")),
        }
    }
    for (n, used) in numeric.central_roots.iter().zip(&used_roots) {
        if *used {
            continue;
        }
        let is_exact_root = rational_near(n.value, eps)
            .is_some_and(|r| p.eval_right(&Quaternion::scalar(r)).is_zero());
        let msg = format!("numeric central root {}", n.value);
        if !is_exact_root {
            out.hamilton_only.push(msg);
        } else if n.uncertain {
            out.uncertain.push(msg);
        } else {
            out.mismatches
                .push(format!("{msg} missed by the exact backend"));
        }
    }

    let mut used = vec![false; numeric.entries.len()];
    for e in &exact.entries {
        let (t, n) = e.class.invariants().expect("non-central class");
        let found = numeric
            .entries
            .iter()
            .position(|x| close(x.trace, t, eps) && close(x.norm, n, eps));
        match found {
            Some(idx) => {
                used[idx] = true;
                let x = &numeric.entries[idx];
                if same_status(x, e, eps) {
                    out.matched += 1;
                } else {
                    let msg = format!(
                        "class {}: exact {}, numeric {}",
                        e.class,
                        e.status.label(),
                        x.status.label()
                    );
                    if x.uncertain {
                        out.uncertain.push(msg);
                    } else {
                        out.mismatches.push(msg);
                    }
                }
            }
            None => out
                .mismatches
                .push(format!("class {} not found numerically", e.class)),
        }
    }
    for (x, used) in numeric.entries.iter().zip(&used) {
        if *used {
            continue;
        }
        let msg = format!(
            "numeric class (t={}, n={}) {}",
            x.trace,
            x.norm,
            x.status.label()
        );
        let rational_class = match (rational_near(x.trace, eps), rational_near(x.norm, eps)) {
            (Some(t), Some(n)) => {
                let lambda = CentralPoly::new(vec![n, -t, rational::int(1)]);
                companion.rem(&lambda)?.is_zero()
            }
            _ => false,
        };
        if !rational_class {
            out.hamilton_only.push(msg);
        } else if x.uncertain {
            out.uncertain.push(msg);
        } else {
            out.mismatches
                .push(format!("{msg} missed by the exact backend"));
        }
    }
    out.agree = out.mismatches.is_empty();
    Ok(out)
}
