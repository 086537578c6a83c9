use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use quatpoly::decompose::{
    beck_decompose, complementary_unit, coords_center, coords_subfield, roots_in_center,
    subfield_gcd,
};
use quatpoly::numeric::{
    classify_f64, roots_in_subfield_f64, NumericReport, NumericSettings, NumericStatus, QPolyF,
    QuatF,
};
use quatpoly::roots::verify::dichotomy_check;
use quatpoly::roots::{
    analyze_sparse, classify, classify_cubic, common_subfield, nonroot_conjugates,
    roots_in_subfield, spherical_bound_report, ClassStatus, RootReport, SparseReport,
    SubfieldGenerator,
};
use quatpoly::{Algebra, QPoly, Quaternion};

use crate::expr::{self, ParseError};
use crate::json;

pub const DEFAULT_SEED: u64 = 1;

/// Samples per class when re-checking an exact classification.
const DICHOTOMY_SAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Numeric,
}

impl Backend {
    fn name(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Numeric => "numeric",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "quatpoly",
    version,
    about = "Polynomials over quaternion algebras: arithmetic, decomposition and root classification"
)]
pub struct Cli {
    /// Algebra parameters `a,b` with i^2 = a, j^2 = b.
    #[arg(
        long,
        global = true,
        value_name = "A,B",
        default_value = "-1,-1",
        allow_hyphen_values = true
    )]
    pub algebra: String,

    /// Use the floating-point backend (Hamilton quaternions only).
    #[arg(long, global = true)]
    pub numeric: bool,

    /// Zero-test tolerance of the numeric backend; classes are compared at
    /// ten times this.
    #[arg(long, global = true, value_name = "FLOAT")]
    pub eps: Option<f64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for the randomized re-checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Right evaluation P(q).
    Eval {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Right division P = Q D + R.
    Divrem {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        divisor: String,
    },
    /// Monic greatest common right divisor.
    Gcrd {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        other: String,
    },
    /// Product P S.
    Mul {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        other: String,
    },
    /// Factorization P = c G H with H central.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Coordinates over the center, or over the subfield of `--subfield`.
    Coords {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        subfield: Option<String>,
    },
    /// Central roots and the status of every candidate conjugacy class.
    Classify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Spherical classes against the deg/2 bound.
    Spherical {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Sparse-coefficient analysis and common subfield.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Coefficient pattern of a cubic.
    Cubic {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Conjugates of a non-root that are not roots.
    Nonroots {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(short = 'k', default_value_t = 1)]
        k: usize,
    },
    /// Roots lying in the maximal subfield generated by `--subfield`.
    SubfieldRoots {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        subfield: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::Divrem { .. } => "divrem",
            Command::Gcrd { .. } => "gcrd",
            Command::Mul { .. } => "mul",
            Command::Decompose { .. } => "decompose",
            Command::Coords { .. } => "coords",
            Command::Classify { .. } => "classify",
            Command::Spherical { .. } => "spherical",
            Command::Analyze { .. } => "analyze",
            Command::Cubic { .. } => "cubic",
            Command::Nonroots { .. } => "nonroots",
            Command::SubfieldRoots { .. } => "subfield-roots",
        }
    }
}

/// Settings shared by every command of one run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub algebra: Algebra,
    pub backend: Backend,
    pub numeric: NumericSettings,
    pub format: Format,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            algebra: Algebra::hamilton(),
            backend: Backend::Exact,
            numeric: NumericSettings::default(),
            format: Format::Text,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Library(#[from] quatpoly::Error),
    #[error("usage: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use quatpoly::Error as E;
        match self {
            CliError::Parse(_) => 1,
            CliError::Usage(_) => 3,
            CliError::Library(e) => match e {
                E::ZeroDivisor(_)
                | E::InvariantViolation(_)
                | E::InvalidAlgebra(_)
                | E::AlgebraMismatch => 2,
                E::Precondition(_) | E::DivisionByZero => 3,
                E::NumericFailure { .. } => 4,
            },
        }
    }

    fn kind(&self) -> &'static str {
        match self.exit_code() {
            1 => "parse",
            2 => "algebra",
            4 => "numeric",
            _ => "precondition",
        }
    }
}

/// The result of one command, before rendering.
#[derive(Debug)]
pub struct Outcome {
    pub input: Value,
    pub result: Value,
    pub text: String,
    pub diagnostics: Vec<String>,
}

fn parse_algebra(s: &str) -> Result<Algebra, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, b] = parts.as_slice() else {
        return Err(CliError::Usage(format!("--algebra expects a,b; got '{s}'")));
    };
    let r = |v: &str| {
        quatpoly::rational::parse(v)
            .ok_or_else(|| CliError::Usage(format!("'{v}' is not a rational number")))
    };
    Ok(Algebra::new(r(a)?, r(b)?)?)
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let numeric = match cli.eps {
            Some(eps) => NumericSettings::with_eps(eps)?,
            None => NumericSettings::default(),
        };
        Ok(Self {
            algebra: parse_algebra(&cli.algebra)?,
            backend: if cli.numeric {
                Backend::Numeric
            } else {
                Backend::Exact
            },
            numeric,
            format: cli.format,
            seed: cli.seed,
        })
    }
}

fn poly_arg(s: &str, cfg: &RunConfig) -> Result<QPoly, CliError> {
    Ok(expr::parse_poly(s, &cfg.algebra)?)
}

fn quat_arg(s: &str, cfg: &RunConfig) -> Result<Quaternion, CliError> {
    Ok(expr::parse_quaternion(s, &cfg.algebra)?)
}

fn exact_only(cmd: &Command, cfg: &RunConfig) -> Result<(), CliError> {
    if cfg.backend == Backend::Numeric {
        return Err(CliError::Usage(format!(
            "--numeric is supported by classify and subfield-roots, not {}",
            cmd.name()
        )));
    }
    Ok(())
}

fn fmt_f(v: f64) -> String {
    let s = format!("{v:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn fmt_qf(q: QuatF) -> String {
    format!(
        "{} {} {}i {} {}j {} {}k",
        fmt_f(q.w),
        if q.x < 0.0 { '-' } else { '+' },
        fmt_f(q.x.abs()),
        if q.y < 0.0 { '-' } else { '+' },
        fmt_f(q.y.abs()),
        if q.z < 0.0 { '-' } else { '+' },
        fmt_f(q.z.abs()),
    )
}

fn qf_json(q: QuatF) -> Value {
    json!([q.w, q.x, q.y, q.z])
}

fn list<T: ToString>(v: &[T]) -> String {
    if v.is_empty() {
        "none".into()
    } else {
        v.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
    }
}

fn report_text(r: &RootReport, out: &mut String) {
    let _ = writeln!(out, "degree {} ({} classification)", r.degree, r.provenance);
    let _ = writeln!(out, "central roots: {}", list(&r.central_roots));
    if r.entries.is_empty() {
        let _ = writeln!(out, "non-central classes: none");
    }
    for e in &r.entries {
        let (t, n) = match &e.class {
            quatpoly::ConjClass::Sphere { trace, norm, .. } => (trace, norm),
            quatpoly::ConjClass::Central(_) => unreachable!("central entries are roots"),
        };
        let what = match &e.status {
            ClassStatus::Spherical => "spherical".to_string(),
            ClassStatus::IsolatedRoot(q) => format!("isolated root {q}"),
            ClassStatus::NoRoot { .. } => "no root".to_string(),
        };
        let realized = match (&e.status, e.realized) {
            (ClassStatus::Spherical, Some(false)) => " [no rational element]",
            (ClassStatus::Spherical, None) => " [rational element not found]",
            _ => "",
        };
        let _ = writeln!(
            out,
            "class {} (t = {t}, n = {n}): {what}{realized}",
            e.class.min_poly()
        );
    }
    let passed = r.checks.iter().filter(|c| c.passed).count();
    let _ = write!(out, "checks: {passed}/{} passed", r.checks.len());
}

fn numeric_report_json(r: &NumericReport) -> Value {
    json!({
        "degree": r.degree,
        "provenance": "numeric",
        "central_roots": r.central_roots.iter().map(|c| json!({
            "value": c.value,
            "uncertain": c.uncertain,
        })).collect::<Vec<_>>(),
        "classes": r.entries.iter().map(|e| {
            let mut v = json!({
                "trace": e.trace,
                "norm": e.norm,
                "status": e.status.label(),
                "uncertain": e.uncertain,
            });
            match e.status {
                NumericStatus::Isolated(q) => v["root"] = qf_json(q),
                NumericStatus::NoRoot { alpha, beta } => {
                    v["remainder"] = json!({ "alpha": qf_json(alpha), "beta": qf_json(beta) })
                }
                NumericStatus::Spherical => {}
            }
            v
        }).collect::<Vec<_>>(),
        "checks": r.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

fn numeric_report_text(r: &NumericReport, out: &mut String) {
    let flag = |u: bool| if u { " [uncertain]" } else { "" };
    let _ = writeln!(out, "degree {} (numeric classification)", r.degree);
    let roots: Vec<String> = r
        .central_roots
        .iter()
        .map(|c| format!("{}{}", fmt_f(c.value), flag(c.uncertain)))
        .collect();
    let _ = writeln!(out, "central roots: {}", list(&roots));
    if r.entries.is_empty() {
        let _ = writeln!(out, "non-central classes: none");
    }
    for e in &r.entries {
        let what = match e.status {
            NumericStatus::Spherical => "spherical".to_string(),
            NumericStatus::Isolated(q) => format!("isolated root {}", fmt_qf(q)),
            NumericStatus::NoRoot { .. } => "no root".to_string(),
        };
        let _ = writeln!(
            out,
            "class t = {}, n = {}: {what}{}",
            fmt_f(e.trace),
            fmt_f(e.norm),
            flag(e.uncertain)
        );
    }
    let passed = r.checks.iter().filter(|c| c.passed).count();
    let _ = write!(out, "checks: {passed}/{} passed", r.checks.len());
}

fn numeric_poly(p: &QPoly) -> Result<QPolyF, CliError> {
    Ok(QPolyF::from_exact(p)?)
}

pub fn execute(cmd: &Command, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let alg = &cfg.algebra;
    let mut diagnostics = Vec::new();
    if cfg.backend == Backend::Exact && cfg.numeric != NumericSettings::default() {
        diagnostics.push("--eps has no effect on the exact backend".to_string());
    }
    let mut text = String::new();
    let (input, result) = match cmd {
        Command::Eval { poly, at } => {
            exact_only(cmd, cfg)?;
            let p = poly_arg(poly, cfg)?;
            let q = quat_arg(at, cfg)?;
            let v = p.eval_right(&q);
            let by_division = p.remainder_at(&q);
            if by_division != v {
                return Err(quatpoly::Error::InvariantViolation(format!(
                    "evaluation {v} and division remainder {by_division} differ"
                ))
                .into());
            }
            let _ = write!(
                text,
                "P({q}) = {v}\nx - ({q}) right-divides P: {}",
                if v.is_zero() { "yes" } else { "no" }
            );
            (
                json!({ "poly": json::poly_doc(&p), "at": json::quaternion(&q) }),
                json!({ "value": json::quaternion(&v), "is_root": v.is_zero() }),
            )
        }
        Command::Divrem { poly, divisor } => {
            exact_only(cmd, cfg)?;
            let p = poly_arg(poly, cfg)?;
            let d = poly_arg(divisor, cfg)?;
            if d.is_zero() {
                return Err(CliError::Usage("division by the zero polynomial".into()));
            }
            let (q, r) = p.right_divrem(&d)?;
            let _ = write!(text, "quotient: {q}\nremainder: {r}");
            (
                json!({ "poly": json::poly_doc(&p), "divisor": json::poly_doc(&d) }),
                json!({ "quotient": json::poly_doc(&q), "remainder": json::poly_doc(&r) }),
            )
        }
        Command::Gcrd { poly, other } => {
            exact_only(cmd, cfg)?;
            let p = poly_arg(poly, cfg)?;
            let s = poly_arg(other, cfg)?;
            let g = p.gcrd(&s)?;
            let _ = write!(text, "gcrd: {g}");
            (
                json!({ "poly": json::poly_doc(&p), "other": json::poly_doc(&s) }),
                json!({ "gcrd": json::poly_doc(&g) }),
            )
        }
        Command::Mul { poly, other } => {
            exact_only(cmd, cfg)?;
            let p = poly_arg(poly, cfg)?;
            let s = poly_arg(other, cfg)?;
            let m = p.checked_mul(&s)?;
            let _ = write!(text, "product: {m}");
            (
                json!({ "poly": json::poly_doc(&p), "other": json::poly_doc(&s) }),
                json!({ "product": json::poly_doc(&m) }),
            )
        }
        Command::Decompose { poly } => {
            exact_only(cmd, cfg)?;
            let p = poly_arg(poly, cfg)?;
            let f = beck_decompose(&p)?;
            let roots = roots_in_center(&p)?;
            let coords = coords_center(&p);
            let _ = write!(
                text,
                "c = {}\nG = {}\nH = {}\ncentral roots: {}",
                f.c,
                f.g,
                f.h,
                list(&roots)
            );
            (
                json!({ "poly": json::poly_doc(&p) }),
                json!({
                    "c": json::quaternion(&f.c),
                    "g": json::poly_doc(&f.g),
                    "h": json::central_doc(&f.h),
                    "coordinates": {
                        "1": json::central_doc(&coords.one),
                        "i": json::central_doc(&coords.i),
                        "j": json::central_doc(&coords.j),
                        "k": json::central_doc(&coords.k),
                    },
                    "central_roots": roots.iter().map(json::rational).collect::<Vec<_>>(),
                }),
            )
        }
        Command::Coords { poly, subfield } => {
            exact_only(cmd, cfg)?;
            let p = poly_arg(poly, cfg)?;
            match subfield {
                None => {
                    let c = coords_center(&p);
                    let _ = write!(text, "1: {}\ni: {}\nj: {}\nk: {}", c.one, c.i, c.j, c.k);
                    (
                        json!({ "poly": json::poly_doc(&p) }),
                        json!({
                            "basis": "center",
                            "1": json::central_doc(&c.one),
                            "i": json::central_doc(&c.i),
                            "j": json::central_doc(&c.j),
                            "k": json::central_doc(&c.k),
                        }),
                    )
                }
                Some(s) => {
                    let s = quat_arg(s, cfg)?;
                    let u = complementary_unit(alg, &s)?;
                    let c = coords_subfield(&p, &s, &u)?;
                    let gcd = if p.is_zero() {
                        None
                    } else {
                        Some(subfield_gcd(&c)?)
                    };
                    let _ = write!(
                        text,
                        "s = {s}\nu = {u}\nb1 = {}\nb2 = {}\ngcd = {}",
                        c.b1,
                        c.b2,
                        gcd.as_ref()
                            .map_or("undefined".to_string(), |g| g.to_string())
                    );
                    diagnostics.push(format!("basis element u = {u} chosen automatically"));
                    (
                        json!({ "poly": json::poly_doc(&p), "subfield": json::quaternion(&s) }),
                        json!({
                            "basis": "subfield",
                            "s": json::quaternion(&s),
                            "u": json::quaternion(&u),
                            "b1": json::poly_doc(&c.b1),
                            "b2": json::poly_doc(&c.b2),
                            "gcd": gcd.as_ref().map(json::poly_doc),
                        }),
                    )
                }
            }
        }
        Command::Classify { poly } => {
            let p = poly_arg(poly, cfg)?;
            let input = json!({ "poly": json::poly_doc(&p) });
            match cfg.backend {
                Backend::Exact => {
                    let r = classify(&p)?;
                    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                    let d = dichotomy_check(&p, &r, &mut rng, DICHOTOMY_SAMPLES)?;
                    if !d.passed() {
                        return Err(
                            quatpoly::Error::InvariantViolation(d.failures.join("; ")).into()
                        );
                    }
                    diagnostics.push(format!(
                        "class dichotomy re-checked on {} sampled elements",
                        d.samples
                    ));
                    for c in &d.skipped {
                        diagnostics.push(format!("{c}: no rational element to sample"));
                    }
                    report_text(&r, &mut text);
                    (input, json::root_report(&r))
                }
                Backend::Numeric => {
                    let r = classify_f64(&numeric_poly(&p)?, &cfg.numeric)?;
                    diagnostics.extend(r.diagnostics.iter().cloned());
                    numeric_report_text(&r, &mut text);
                    (input, numeric_report_json(&r))
                }
            }
        }
        Command::Spherical { poly } => {
            exact_only(cmd, cfg)?;
            let p = poly_arg(poly, cfg)?;
            let b = spherical_bound_report(&p)?;
            let _ = write!(
                text,
                "spherical classes: {} of at most {}\n{}\nequality case: {}\ncoefficients central: {}\ncoefficients pairwise commute: {}\nbound and equality conditions hold: {}",
                b.spherical.len(),
                b.bound,
                b.spherical
                    .iter()
                    .map(|c| format!("  {} ({c})", c.min_poly()))
                    .collect::<Vec<_>>()
                    .join("\n"),
                b.equality_case,
                b.coefficients_central,
                b.coefficients_commute,
                b.holds,
            );
            let text2 = text.replace("\n\n", "\n");
            text = text2;
            (
                json!({ "poly": json::poly_doc(&p) }),
                json!({
                    "degree": b.degree,
                    "spherical": b.spherical.iter().map(json::class).collect::<Vec<_>>(),
                    "bound": b.bound,
                    "equality_case": b.equality_case,
                    "coefficients_central": b.coefficients_central,
                    "coefficients_commute": b.coefficients_commute,
                    "holds": b.holds,
                }),
            )
        }
        Command::Analyze { poly } => {
            exact_only(cmd, cfg)?;
            let p = poly_arg(poly, cfg)?;
            let s = analyze_sparse(&p)?;
            let sub = common_subfield(&p);
            let sub_json = match &sub {
                None => Value::Null,
                Some(SubfieldGenerator::Central) => json!("central"),
                Some(SubfieldGenerator::Generator(g)) => json::quaternion(g),
            };
            let sub_text = match &sub {
                None => "none".to_string(),
                Some(SubfieldGenerator::Central) => "center (all coefficients central)".into(),
                Some(SubfieldGenerator::Generator(g)) => format!("generated by {g}"),
            };
            let mut detail = json!({ "case": s.label(), "spherical_bound": s.spherical_bound() });
            let desc = match &s {
                SparseReport::AllCentral { bound } => {
                    format!("all coefficients central; at most {bound} spherical classes")
                }
                SparseReport::OneNonCentral { position } => {
                    detail["position"] = json!(position);
                    format!(
                        "only the coefficient of x^{position} is non-central; no spherical classes"
                    )
                }
                SparseReport::SameSubfield {
                    k,
                    m,
                    u,
                    v,
                    factor,
                    bound,
                } => {
                    detail["k"] = json!(k);
                    detail["m"] = json!(m);
                    detail["u"] = json::rational(u);
                    detail["v"] = json::rational(v);
                    detail["factor"] = json::central_doc(factor);
                    format!(
                        "non-central coefficients at x^{k} and x^{m} in one subfield (a_{k} = {u} + {v} a_{m}); spherical classes divide {factor}; at most {bound}"
                    )
                }
                SparseReport::DifferentSubfields { k, m } => {
                    detail["k"] = json!(k);
                    detail["m"] = json!(m);
                    format!("non-central coefficients at x^{k} and x^{m} do not commute; no spherical classes")
                }
                SparseReport::NotApplicable { positions } => {
                    detail["positions"] = json!(positions);
                    format!(
                        "{} non-central coefficients; no sparse bound",
                        positions.len()
                    )
                }
            };
            let _ = write!(
                text,
                "sparse case: {} ({desc})\ncommon subfield: {sub_text}",
                s.label()
            );
            detail["common_subfield"] = sub_json;
            (json!({ "poly": json::poly_doc(&p) }), detail)
        }
        Command::Cubic { poly } => {
            exact_only(cmd, cfg)?;
            let p = poly_arg(poly, cfg)?;
            let case = classify_cubic(&p)?;
            let count = classify(&p)?.spherical_classes().len();
            if count > case.spherical_bound() {
                return Err(quatpoly::Error::InvariantViolation(format!(
                    "case {case} allows {} spherical classes, found {count}",
                    case.spherical_bound()
                ))
                .into());
            }
            let _ = write!(
                text,
                "case {case}: at most {} spherical class(es); found {count}",
                case.spherical_bound()
            );
            (
                json!({ "poly": json::poly_doc(&p) }),
                json!({ "case": case.label(), "spherical_bound": case.spherical_bound(), "spherical_count": count }),
            )
        }
        Command::Nonroots { poly, at, k } => {
            exact_only(cmd, cfg)?;
            let p = poly_arg(poly, cfg)?;
            let c = quat_arg(at, cfg)?;
            let out = nonroot_conjugates(&p, &c, *k)?;
            let _ = write!(
                text,
                "{} non-root conjugate(s) of {c}:\n{}",
                out.len(),
                out.iter()
                    .map(|q| format!("  {q}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            );
            (
                json!({ "poly": json::poly_doc(&p), "at": json::quaternion(&c), "k": k }),
                json!({ "conjugates": out.iter().map(json::quaternion).collect::<Vec<_>>() }),
            )
        }
        Command::SubfieldRoots { poly, subfield } => {
            let p = poly_arg(poly, cfg)?;
            let s = quat_arg(subfield, cfg)?;
            let input = json!({ "poly": json::poly_doc(&p), "subfield": json::quaternion(&s) });
            match cfg.backend {
                Backend::Exact => {
                    let r = roots_in_subfield(&p, &s)?;
                    let _ = write!(text, "roots in the subfield of {s}: {}", list(&r));
                    (
                        input,
                        json!({ "roots": r.iter().map(json::quaternion).collect::<Vec<_>>() }),
                    )
                }
                Backend::Numeric => {
                    let sf = QuatF::from_exact(&s)?;
                    let r = roots_in_subfield_f64(&numeric_poly(&p)?, sf, &cfg.numeric)?;
                    let shown: Vec<String> = r.iter().map(|q| fmt_qf(*q)).collect();
                    let _ = write!(text, "roots in the subfield of {s}: {}", list(&shown));
                    (
                        input,
                        json!({ "roots": r.iter().map(|q| qf_json(*q)).collect::<Vec<_>>() }),
                    )
                }
            }
        }
    };
    Ok(Outcome {
        input,
        result,
        text,
        diagnostics,
    })
}

fn document(
    cmd: &str,
    cfg: &RunConfig,
    input: Value,
    result: Value,
    diagnostics: &[String],
) -> Value {
    json!({
        "command": cmd,
        "algebra": json::algebra(&cfg.algebra),
        "backend": cfg.backend.name(),
        "input": input,
        "result": result,
        "diagnostics": diagnostics,
    })
}

/// Everything a run prints, and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                RunOutput {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                RunOutput {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    let cfg = match RunConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(e) => return failure(&cli, &RunConfig::default(), &e),
    };
    match execute(&cli.command, &cfg) {
        Ok(out) => {
            let stdout = match cfg.format {
                Format::Text => {
                    let mut s = out.text;
                    for d in &out.diagnostics {
                        let _ = write!(s, "\nnote: {d}");
                    }
                    s.push('\n');
                    s
                }
                Format::Json => {
                    let doc = document(
                        cli.command.name(),
                        &cfg,
                        out.input,
                        out.result,
                        &out.diagnostics,
                    );
                    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
                    s.push('\n');
                    s
                }
            };
            RunOutput {
                code: 0,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => failure(&cli, &cfg, &e),
    }
}

fn failure(cli: &Cli, cfg: &RunConfig, e: &CliError) -> RunOutput {
    let code = e.exit_code();
    let stderr = format!("error: {e}\n");
    let stdout = match cli.format {
        Format::Text => String::new(),
        Format::Json => {
            let mut doc = document(cli.command.name(), cfg, Value::Null, Value::Null, &[]);
            doc["error"] = json!({ "kind": e.kind(), "message": e.to_string(), "exit_code": code });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
    };
    RunOutput {
        code,
        stdout,
        stderr,
    }
}
