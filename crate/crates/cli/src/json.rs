//! Structured output. Rationals are strings (`"-3/2"`), quaternions
//! `[w, x, y, z]` arrays of rationals and polynomials arrays of quaternions,
//! constant term first.

use quatpoly::roots::{ClassStatus, RootReport};
use quatpoly::{Algebra, CentralPoly, ConjClass, QPoly, Quaternion, Rational};
use serde_json::{json, Value};

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn quaternion(q: &Quaternion) -> Value {
    Value::Array(q.components().into_iter().map(rational).collect())
}

pub fn poly(p: &QPoly) -> Value {
    Value::Array(p.coeffs().iter().map(quaternion).collect())
}

pub fn central(p: &CentralPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational).collect())
}

/// A polynomial both as coefficients and as text.
pub fn poly_doc(p: &QPoly) -> Value {
    json!({ "text": p.to_string(), "coefficients": poly(p) })
}

pub fn central_doc(p: &CentralPoly) -> Value {
    json!({ "text": p.to_string(), "coefficients": central(p) })
}

pub fn class(c: &ConjClass) -> Value {
    match c {
        ConjClass::Central(v) => json!({ "kind": "central", "value": rational(v) }),
        ConjClass::Sphere {
            trace,
            norm,
            validated,
        } => json!({
            "kind": "sphere",
            "trace": rational(trace),
            "norm": rational(norm),
            "validated": validated,
            "min_poly": c.min_poly().to_string(),
        }),
    }
}

pub fn algebra(alg: &Algebra) -> Value {
    json!({ "a": rational(alg.a()), "b": rational(alg.b()) })
}

pub fn root_report(r: &RootReport) -> Value {
    let entries: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            let mut v = json!({
                "class": class(&e.class),
                "status": e.status.label(),
                "realized": e.realized,
            });
            match &e.status {
                ClassStatus::IsolatedRoot(q) => {
                    v["root"] = quaternion(q);
                }
                ClassStatus::NoRoot { alpha, beta } => {
                    v["remainder"] =
                        json!({ "alpha": quaternion(alpha), "beta": quaternion(beta) });
                }
                ClassStatus::Spherical => {}
            }
            v
        })
        .collect();
    json!({
        "degree": r.degree,
        "provenance": r.provenance.to_string(),
        "central_roots": r.central_roots.iter().map(rational).collect::<Vec<_>>(),
        "classes": entries,
        "checks": r.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

#[derive(Debug, thiserror::Error)]
#[error("malformed polynomial document: {0}")]
pub struct DecodeError(String);

fn decode_rational(v: &Value) -> Result<Rational, DecodeError> {
    v.as_str()
        .and_then(quatpoly::rational::parse)
        .ok_or_else(|| DecodeError(format!("expected a rational string, got {v}")))
}

pub fn decode_quaternion(v: &Value) -> Result<Quaternion, DecodeError> {
    let a = v
        .as_array()
        .filter(|a| a.len() == 4)
        .ok_or_else(|| DecodeError(format!("expected [w, x, y, z], got {v}")))?;
    let c: Vec<Rational> = a.iter().map(decode_rational).collect::<Result<_, _>>()?;
    let [w, x, y, z]: [Rational; 4] = c.try_into().expect("four components");
    Ok(Quaternion::new(w, x, y, z))
}

pub fn decode_poly(v: &Value, alg: &Algebra) -> Result<QPoly, DecodeError> {
    let a = v
        .as_array()
        .ok_or_else(|| DecodeError(format!("expected a coefficient array, got {v}")))?;
    let c = a
        .iter()
        .map(decode_quaternion)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QPoly::new(alg, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use quatpoly::rational::frac;

    #[test]
    fn round_trip() {
        let alg = Algebra::hamilton();
        let p = QPoly::new(
            &alg,
            vec![
                Quaternion::new(frac(-3, 2), frac(0, 1), frac(1, 7), frac(5, 1)),
                Quaternion::zero(),
                Quaternion::one(),
            ],
        );
        let v = poly(&p);
        assert_eq!(v[0], json!(["-3/2", "0", "1/7", "5"]));
        assert_eq!(decode_poly(&v, &alg).unwrap(), p);
        let text = serde_json::to_string(&v).unwrap();
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(decode_poly(&back, &alg).unwrap(), p);
        assert!(decode_poly(&json!([["1", "2"]]), &alg).is_err());
        assert!(decode_poly(&json!([["1", "x", "0", "0"]]), &alg).is_err());
    }
}
