//! Floating-point classification over the Hamilton quaternions.
//!
//! Mirrors [`crate::roots::classify`]: the complex roots of the real
//! companion polynomial give the candidate classes (a root `z` off the real
//! axis gives `(t, n) = (2 Re z, |z|^2)`, a real one a central root), and
//! each class is settled by the remainder modulo `x^2 - t x + n`. Zero tests
//! are relative to the coefficient scale `sum |a_i| R^i` at the relevant
//! radius `R`. A test value within a factor ten above its tolerance marks
//! the entry uncertain instead of being silently rounded either way.

mod agree;
pub mod polyroots;
mod quatf;

use num_complex::Complex64;

pub use agree::{agree_with_exact, AgreementReport};
pub use polyroots::RootCluster;
pub use quatf::{QPolyF, QuatF};

use crate::error::{precondition, Error, Result};
use crate::roots::Check;

#[derive(Clone, Debug, PartialEq)]
pub struct NumericSettings {
    /// Relative tolerance of zero tests on evaluations and remainders.
    pub eps_zero: f64,
    /// Relative tolerance when comparing class invariants.
    pub eps_class: f64,
    /// Largest accepted ratio between the biggest coefficient and the
    /// leading one.
    pub max_condition: f64,
}

impl Default for NumericSettings {
    fn default() -> Self {
        Self {
            eps_zero: 1e-9,
            eps_class: 1e-8,
            max_condition: 1e12,
        }
    }
}

impl NumericSettings {
    pub fn new(eps_zero: f64, eps_class: f64, max_condition: f64) -> Result<Self> {
        if [eps_zero, eps_class, max_condition]
            .iter()
            .all(|v| v.is_finite() && *v > 0.0)
        {
            Ok(Self {
                eps_zero,
                eps_class,
                max_condition,
            })
        } else {
            precondition("numeric tolerances must be finite and positive")
        }
    }

    /// `eps_zero = eps`, `eps_class = 10 eps`.
    pub fn with_eps(eps: f64) -> Result<Self> {
        Self::new(eps, 10.0 * eps, Self::default().max_condition)
    }
}

/// Outcome of a relative zero test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Zero {
    Yes,
    No,
    /// Non-zero, but within ten times the tolerance.
    Gray,
}

impl Zero {
    fn test(value: f64, tol: f64) -> Self {
        if value <= tol {
            Zero::Yes
        } else if value <= 10.0 * tol {
            Zero::Gray
        } else {
            Zero::No
        }
    }
}

fn rel_close(a: f64, b: f64, eps: f64) -> Zero {
    Zero::test((a - b).abs(), eps * a.abs().max(b.abs()).max(1.0))
}

/// `sum |a_i| r^i`.
fn coefficient_scale(p: &QPolyF, r: f64) -> f64 {
    p.coeffs().iter().rev().fold(0.0, |s, c| s * r + c.abs())
}

fn failure(message: impl Into<String>, partial: &[Complex64]) -> Error {
    Error::NumericFailure {
        message: message.into(),
        partial: partial.iter().map(|z| (z.re, z.im)).collect(),
    }
}

fn check_conditioning(p: &QPolyF, settings: &NumericSettings) -> Result<usize> {
    let Some(n) = p.degree().filter(|n| *n >= 1) else {
        return precondition("numeric classification needs degree >= 1");
    };
    let lead = p.coeffs()[n].abs();
    let big = p.coeffs().iter().map(|c| c.abs()).fold(0.0, f64::max);
    if big / lead > settings.max_condition {
        return Err(failure(
            format!("leading coefficient too small: ratio {:e}", big / lead),
            &[],
        ));
    }
    Ok(n)
}

/// Root clusters of the companion polynomial, after the residual check.
fn companion_clusters(p: &QPolyF, settings: &NumericSettings) -> Result<Vec<RootCluster>> {
    let c = p.companion();
    let clusters = polyroots::clustered_roots(&c)?;
    let centers: Vec<Complex64> = clusters.iter().map(|k| k.center).collect();
    for z in &centers {
        let (value, scale) = c
            .iter()
            .rev()
            .fold((Complex64::new(0.0, 0.0), 0.0), |(v, s), a| {
                (v * z + a, s * z.norm() + a.abs())
            });
        if value.norm() > settings.eps_zero * scale {
            return Err(failure(
                format!(
                    "companion residual {:e} at {z} exceeds tolerance",
                    value.norm() / scale
                ),
                &centers,
            ));
        }
    }
    Ok(clusters)
}

/// The `2n` complex roots of `P * conj(P)`, repeated by multiplicity.
pub fn companion_roots_f64(p: &QPolyF, settings: &NumericSettings) -> Result<Vec<Complex64>> {
    check_conditioning(p, settings)?;
    let clusters = companion_clusters(p, settings)?;
    Ok(clusters
        .iter()
        .flat_map(|k| std::iter::repeat_n(k.center, k.multiplicity))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericCentralRoot {
    pub value: f64,
    pub uncertain: bool,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NumericStatus {
    Spherical,
    Isolated(QuatF),
    NoRoot { alpha: QuatF, beta: QuatF },
}

impl NumericStatus {
    pub fn has_root(&self) -> bool {
        !matches!(self, NumericStatus::NoRoot { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            NumericStatus::Spherical => "spherical",
            NumericStatus::Isolated(_) => "isolated",
            NumericStatus::NoRoot { .. } => "no-root",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericEntry {
    pub trace: f64,
    pub norm: f64,
    pub status: NumericStatus,
    pub uncertain: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericReport {
    pub degree: usize,
    pub central_roots: Vec<NumericCentralRoot>,
    pub entries: Vec<NumericEntry>,
    pub diagnostics: Vec<String>,
    pub checks: Vec<Check>,
}

impl NumericReport {
    pub fn spherical(&self) -> impl Iterator<Item = &NumericEntry> {
        self.entries
            .iter()
            .filter(|e| e.status == NumericStatus::Spherical)
    }

    pub fn classes_with_roots(&self) -> usize {
        self.central_roots.len() + self.entries.iter().filter(|e| e.status.has_root()).count()
    }

    pub fn any_uncertain(&self) -> bool {
        self.central_roots.iter().any(|r| r.uncertain) || self.entries.iter().any(|e| e.uncertain)
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `(alpha, beta)` with `P = Q (x^2 - t x + n) + alpha x + beta`, by the
/// power recurrence `x^(k+1) = (t A_k + B_k) x - n A_k`.
pub fn class_remainder_f64(p: &QPolyF, t: f64, n: f64) -> (QuatF, QuatF) {
    let (mut a, mut b) = (0.0, 1.0);
    let (mut alpha, mut beta) = (QuatF::ZERO, QuatF::ZERO);
    for c in p.coeffs() {
        alpha = alpha + c.scale(a);
        beta = beta + c.scale(b);
        (a, b) = (t * a + b, -n * a);
    }
    (alpha, beta)
}

fn classify_class(p: &QPolyF, t: f64, n: f64, s: &NumericSettings) -> (NumericStatus, bool) {
    let r = n.abs().sqrt();
    let scale = coefficient_scale(p, r);
    let (alpha, beta) = class_remainder_f64(p, t, n);
    let za = Zero::test(alpha.abs() * r, s.eps_zero * scale);
    let zb = Zero::test(beta.abs(), s.eps_zero * scale);
    let gray = za == Zero::Gray || zb == Zero::Gray;
    if za != Zero::No {
        return if zb != Zero::No {
            (NumericStatus::Spherical, gray)
        } else {
            (NumericStatus::NoRoot { alpha, beta }, gray)
        };
    }
    let q = match alpha.inv() {
        Ok(ai) => -(ai * beta),
        Err(_) => return (NumericStatus::NoRoot { alpha, beta }, true),
    };
    let ct = rel_close(q.trace(), t, s.eps_class);
    let cn = rel_close(q.norm(), n, s.eps_class);
    let gray = gray || ct == Zero::Gray || cn == Zero::Gray;
    if ct != Zero::No && cn != Zero::No {
        (NumericStatus::Isolated(q), gray)
    } else {
        (NumericStatus::NoRoot { alpha, beta }, gray)
    }
}

/// Classification of the roots of `P` over the Hamilton quaternions.
pub fn classify_f64(p: &QPolyF, settings: &NumericSettings) -> Result<NumericReport> {
    let degree = check_conditioning(p, settings)?;
    let lead_inv = p.coeffs()[degree].inv()?;
    let p = p.scale_left(lead_inv);
    let mut diagnostics = Vec::new();

    // coefficient components that are non-zero yet below resolution make
    // every decision depending on them unreliable
    let big = p
        .coeffs()
        .iter()
        .flat_map(|c| c.components())
        .fold(0.0, |m: f64, v| m.max(v.abs()));
    let tiny: Vec<f64> = p
        .coeffs()
        .iter()
        .flat_map(|c| c.components())
        .filter(|v| *v != 0.0 && v.abs() <= 10.0 * settings.eps_zero * big)
        .collect();
    let unresolved = !tiny.is_empty();
    if unresolved {
        diagnostics.push(format!(
            "coefficient components {tiny:?} are below the resolution {:e} of the zero tests",
            settings.eps_zero * big
        ));
    }

    let clusters = companion_clusters(&p, settings)?;
    let is_real = |k: &RootCluster| {
        k.center.im.abs() <= k.radius.max(settings.eps_class * k.center.norm().max(1.0))
    };
    let mut central_roots: Vec<NumericCentralRoot> = Vec::new();
    let mut entries = Vec::new();
    for k in &clusters {
        if is_real(k) {
            let r = k.center.re;
            let value = p.eval_right(QuatF::scalar(r)).abs();
            let z = Zero::test(value, settings.eps_zero * coefficient_scale(&p, r.abs()));
            if z == Zero::No {
                diagnostics.push(format!(
                    "real companion root {r} is not a root of P (|P| = {value:e})"
                ));
                continue;
            }
            central_roots.push(NumericCentralRoot {
                value: r,
                uncertain: z == Zero::Gray || unresolved,
            });
        } else if k.center.im > 0.0 {
            let partner = clusters.iter().any(|o| {
                o.multiplicity == k.multiplicity
                    && (o.center - k.center.conj()).norm()
                        <= settings.eps_class * k.center.norm().max(1.0) + o.radius
            });
            if !partner {
                diagnostics.push(format!(
                    "companion root {} has no conjugate partner",
                    k.center
                ));
            }
            let (t, n) = (2.0 * k.center.re, k.center.norm_sqr());
            let (status, gray) = classify_class(&p, t, n, settings);
            entries.push(NumericEntry {
                trace: t,
                norm: n,
                status,
                uncertain: gray || unresolved || !partner,
            });
        }
    }
    central_roots.sort_by(|a, b| a.value.total_cmp(&b.value));
    entries.sort_by(|a, b| {
        (a.trace, a.norm)
            .partial_cmp(&(b.trace, b.norm))
            .expect("finite")
    });

    let mut report = NumericReport {
        degree,
        central_roots,
        entries,
        diagnostics,
        checks: vec![],
    };
    let with_roots = report.classes_with_roots();
    let spherical = report.spherical().count();
    let isolated_ok = report.entries.iter().all(|e| match e.status {
        NumericStatus::Isolated(q) => {
            p.eval_right(q).abs() <= settings.eps_class * coefficient_scale(&p, q.abs())
        }
        _ => true,
    });
    report.checks = vec![
        Check::new(
            "root-class-count",
            with_roots <= degree,
            format!("{with_roots} classes with roots, degree {degree}"),
        ),
        Check::new(
            "spherical-count",
            spherical <= degree / 2,
            format!("{spherical} spherical classes, bound {}", degree / 2),
        ),
        Check::new(
            "roots-verified",
            isolated_ok,
            "every isolated root evaluates to zero within tolerance",
        ),
    ];
    if let Some(bad) = report.checks.iter().find(|c| !c.passed) {
        return Err(failure(format!("{}: {}", bad.name, bad.detail), &[]));
    }
    Ok(report)
}

/// Roots of `P` in the maximal subfield `R(s)` of the Hamilton quaternions.
/// Every spherical class meets it in two points.
pub fn roots_in_subfield_f64(
    p: &QPolyF,
    s: QuatF,
    settings: &NumericSettings,
) -> Result<Vec<QuatF>> {
    let s0 = s.pure_part();
    if s0.abs() <= settings.eps_zero * s.abs() {
        return precondition("subfield generator must be non-central");
    }
    let unit = s0.scale(1.0 / s0.abs());
    let report = classify_f64(p, settings)?;
    let mut out: Vec<QuatF> = report
        .central_roots
        .iter()
        .map(|r| QuatF::scalar(r.value))
        .collect();
    for e in &report.entries {
        match e.status {
            NumericStatus::Isolated(q) => {
                let comm = (q * s - s * q).abs();
                if comm <= settings.eps_class * q.abs().max(1.0) * s.abs() {
                    out.push(q);
                }
            }
            NumericStatus::Spherical => {
                let half = e.trace / 2.0;
                let beta = (e.norm - half * half).max(0.0).sqrt();
                out.push(QuatF::scalar(half) + unit.scale(beta));
                out.push(QuatF::scalar(half) - unit.scale(beta));
            }
            NumericStatus::NoRoot { .. } => {}
        }
    }
    Ok(out)
}
