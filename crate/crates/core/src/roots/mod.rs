//! Classification of the right roots of a polynomial.
//!
//! In a quaternion division algebra a conjugacy class either consists
//! entirely of roots (a spherical class), contains exactly one root (an
//! isolated root), or contains none. Which of the three happens is read off
//! the remainder of `P` modulo the class's minimal polynomial
//! `x^2 - t x + n`: it is linear, `alpha x + beta`, and on the class `P`
//! agrees with `q -> alpha q + beta`.
//!
//! Candidate classes come from the norm polynomial `P * conj(P)`, every
//! root class of `P` has its minimal polynomial dividing it.

mod candidates;
mod nonroot;
mod structure;
mod subfield;
pub mod verify;

use std::fmt;

use num_traits::Zero;

pub use candidates::{candidate_classes, candidate_classes_with, CandidateSettings};
pub use nonroot::{nonroot_conjugates, root_conjugator_space};
pub use structure::{
    analyze_sparse, classify_cubic, common_subfield, spherical_bound_report, spherical_classes,
    CubicCase, SparseReport, SphericalBoundReport, SubfieldGenerator,
};
pub use subfield::roots_in_subfield;

use crate::central::{CentralPoly, Degree};
use crate::decompose::roots_in_center;
use crate::error::{precondition, Error, Result};
use crate::qpoly::QPoly;
use crate::quat::{ConjClass, Quaternion};
use crate::rational::Rational;

/// What a polynomial does on one non-central conjugacy class.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassStatus {
    Spherical,
    IsolatedRoot(Quaternion),
    /// No root in the class; the remainder `alpha x + beta` is kept.
    NoRoot {
        alpha: Quaternion,
        beta: Quaternion,
    },
}

impl ClassStatus {
    pub fn has_root(&self) -> bool {
        !matches!(self, ClassStatus::NoRoot { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            ClassStatus::Spherical => "spherical",
            ClassStatus::IsolatedRoot(_) => "isolated",
            ClassStatus::NoRoot { .. } => "no-root",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEntry {
    pub class: ConjClass,
    pub status: ClassStatus,
    /// Whether the class has an element in the rational algebra (`None`:
    /// undecided).
    pub realized: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Every reported class and root certified by exact arithmetic.
    Exact,
    Numeric,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Exact => "exact",
            Provenance::Numeric => "numeric",
        })
    }
}

/// A named structural check carried out on a result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub(crate) fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name,
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    pub degree: usize,
    pub central_roots: Vec<Rational>,
    pub entries: Vec<ClassEntry>,
    pub provenance: Provenance,
    pub checks: Vec<Check>,
}

impl RootReport {
    pub fn spherical(&self) -> impl Iterator<Item = &ClassEntry> {
        self.entries
            .iter()
            .filter(|e| e.status == ClassStatus::Spherical)
    }

    pub fn spherical_classes(&self) -> Vec<ConjClass> {
        self.spherical().map(|e| e.class.clone()).collect()
    }

    /// Spherical classes with no element in the rational algebra; their
    /// sphericity only shows after extending scalars.
    pub fn unrealized_spherical(&self) -> Vec<ConjClass> {
        self.spherical()
            .filter(|e| e.realized != Some(true))
            .map(|e| e.class.clone())
            .collect()
    }

    pub fn isolated_roots(&self) -> Vec<Quaternion> {
        self.entries
            .iter()
            .filter_map(|e| match &e.status {
                ClassStatus::IsolatedRoot(q) => Some(q.clone()),
                _ => None,
            })
            .collect()
    }

    /// Number of conjugacy classes (central ones included) holding a root.
    pub fn classes_with_roots(&self) -> usize {
        self.central_roots.len() + self.entries.iter().filter(|e| e.status.has_root()).count()
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn sphere_invariants(c: &ConjClass) -> Result<(&Rational, &Rational)> {
    c.invariants()
        .ok_or_else(|| Error::Precondition("a central class has no remainder form".into()))
}

/// `(alpha, beta)` with `P = Q * lambda + alpha x + beta`, `lambda` the
/// minimal polynomial of the (non-central) class.
pub fn class_remainder(p: &QPoly, class: &ConjClass) -> Result<(Quaternion, Quaternion)> {
    sphere_invariants(class)?;
    let lambda = QPoly::from_central(p.algebra(), &class.min_poly());
    let r = p.right_rem(&lambda)?;
    Ok((r.coeff(1), r.coeff(0)))
}

pub fn class_status(p: &QPoly, class: &ConjClass) -> Result<ClassStatus> {
    let (alpha, beta) = class_remainder(p, class)?;
    if alpha.is_zero() {
        return Ok(if beta.is_zero() {
            ClassStatus::Spherical
        } else {
            ClassStatus::NoRoot { alpha, beta }
        });
    }
    let alg = p.algebra();
    let q = -alg.mul(&alg.inv(&alpha)?, &beta);
    if alg.class_of(&q) == *class {
        Ok(ClassStatus::IsolatedRoot(q))
    } else {
        Ok(ClassStatus::NoRoot { alpha, beta })
    }
}

pub fn classify(p: &QPoly) -> Result<RootReport> {
    classify_with(p, &CandidateSettings::default())
}

pub fn classify_with(p: &QPoly, settings: &CandidateSettings) -> Result<RootReport> {
    let degree = match p.degree() {
        Degree::Finite(n) if n >= 1 => n,
        _ => {
            return precondition(format!(
                "classification needs degree >= 1, got {}",
                p.degree()
            ))
        }
    };
    let alg = p.algebra();
    let central_roots = roots_in_center(p)?;
    let mut entries = Vec::new();
    for class in candidate_classes_with(p, settings)? {
        if class.is_central() {
            continue;
        }
        let status = class_status(p, &class)?;
        let realized = match &status {
            ClassStatus::Spherical => alg.realized(&class),
            ClassStatus::IsolatedRoot(_) => Some(true),
            ClassStatus::NoRoot { .. } => None,
        };
        entries.push(ClassEntry {
            class: class.with_validated(realized == Some(true)),
            status,
            realized,
        });
    }
    let mut report = RootReport {
        degree,
        central_roots,
        entries,
        provenance: Provenance::Exact,
        checks: vec![],
    };
    report.checks = structural_checks(p, &report)?;
    if let Some(bad) = report.checks.iter().find(|c| !c.passed) {
        return Err(Error::InvariantViolation(format!(
            "{}: {} (polynomial {p})",
            bad.name, bad.detail
        )));
    }
    Ok(report)
}

/// Coefficients of `P` pairwise commute.
pub(crate) fn coefficients_commute(p: &QPoly) -> bool {
    let c = p.coeffs();
    let alg = p.algebra();
    (0..c.len()).all(|a| (a + 1..c.len()).all(|b| alg.commutes(&c[a], &c[b])))
}

fn structural_checks(p: &QPoly, report: &RootReport) -> Result<Vec<Check>> {
    let n = report.degree;
    let with_roots = report.classes_with_roots();
    let spherical = report.spherical_classes();
    let mut checks = vec![
        Check::new(
            "root-class-count",
            with_roots <= n,
            format!("{with_roots} classes with roots, degree {n}"),
        ),
        Check::new(
            "spherical-count",
            spherical.len() <= n / 2,
            format!("{} spherical classes, bound {}", spherical.len(), n / 2),
        ),
    ];

    let product = spherical
        .iter()
        .fold(CentralPoly::one(), |acc, c| &acc * &c.min_poly());
    let divides = p.right_divisible_by(&QPoly::from_central(p.algebra(), &product))?;
    checks.push(Check::new(
        "spherical-product-divides",
        divides,
        format!("product of spherical minimal polynomials {product}"),
    ));

    let monic = p.monic()?;
    let (eq, ok, what) = if n.is_multiple_of(2) && spherical.len() == n / 2 {
        (true, monic.is_central(), "all coefficients central")
    } else if n % 2 == 1 && spherical.len() == (n - 1) / 2 {
        (
            true,
            coefficients_commute(&monic),
            "coefficients pairwise commute",
        )
    } else {
        (false, true, "not an equality case")
    };
    checks.push(Check::new(
        "spherical-equality-case",
        ok,
        if eq {
            format!("equality case: {what}: {ok}")
        } else {
            what.to_string()
        },
    ));

    let central_ok = report
        .central_roots
        .iter()
        .all(|r| p.eval_right(&Quaternion::scalar(r.clone())).is_zero());
    let isolated_ok = report
        .isolated_roots()
        .iter()
        .all(|q| p.eval_right(q).is_zero() && p.remainder_at(q).is_zero());
    checks.push(Check::new(
        "roots-verified",
        central_ok && isolated_ok,
        "every reported root evaluates to zero",
    ));
    Ok(checks)
}

/// Remainder of `P` modulo `x^2 - t x + n` through the power recurrence
/// `x^(k+1) = (t A_k + B_k) x - n A_k` for `x^k = A_k x + B_k`; independent
/// of polynomial division.
pub fn class_remainder_by_powers(
    p: &QPoly,
    t: &Rational,
    n: &Rational,
) -> (Quaternion, Quaternion) {
    let (mut a, mut b) = (Rational::zero(), Rational::from_integer(1.into()));
    let mut alpha = Quaternion::zero();
    let mut beta = Quaternion::zero();
    for c in p.coeffs() {
        alpha += &c.scale(&a);
        beta += &c.scale(&b);
        let next_a = t * &a + &b;
        b = -(n * &a);
        a = next_a;
    }
    (alpha, beta)
}
