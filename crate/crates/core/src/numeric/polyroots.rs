//! Complex roots of real polynomials by Aberth-Ehrlich iteration.
//!
//! Multiple roots come back from the iteration as tight clusters. Clusters
//! are recovered from overlapping inclusion discs, replaced by their
//! centroid and polished by Newton's method on the derivative of order
//! `multiplicity - 1`, where the root is simple.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_ITER: usize = 2000;

/// A root with its multiplicity as seen by the clustering step.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootCluster {
    pub center: Complex64,
    pub multiplicity: usize,
    /// Radius of the union of inclusion discs that formed the cluster.
    pub radius: f64,
}

fn trim(coeffs: &[f64]) -> &[f64] {
    let n = coeffs.iter().rposition(|c| *c != 0.0).map_or(0, |p| p + 1);
    &coeffs[..n]
}

/// `p(z)`, `p'(z)` and the rounding-noise scale `sum |c_k| |z|^k`.
fn eval(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    let r = z.norm();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
        scale = scale * r + c.abs();
    }
    (p, dp, scale)
}

fn derivative(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect()
}

fn noise(scale: f64, degree: usize) -> f64 {
    4.0 * f64::EPSILON * scale * (degree as f64 + 1.0)
}

/// All roots, repeated according to multiplicity, in no particular order.
pub fn aberth(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let coeffs = trim(coeffs);
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::NumericFailure {
            message: "non-finite coefficient".into(),
            partial: vec![],
        });
    }
    if coeffs.len() < 2 {
        return Ok(vec![]);
    }
    let zeros = coeffs.iter().take_while(|c| **c == 0.0).count();
    let core = &coeffs[zeros..];
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    let m = core.len() - 1;
    if m == 0 {
        return Ok(roots);
    }
    if m == 1 {
        roots.push(Complex64::new(-core[0] / core[1], 0.0));
        return Ok(roots);
    }
    let lead = core[m];
    let r0 = (core[0] / lead)
        .abs()
        .powf(1.0 / m as f64)
        .max(f64::MIN_POSITIVE);
    let mut z: Vec<Complex64> = (0..m)
        .map(|k| Complex64::from_polar(r0, 2.0 * PI * k as f64 / m as f64 + 0.4))
        .collect();
    let mut done = vec![false; m];
    for _ in 0..MAX_ITER {
        for i in 0..m {
            if done[i] {
                continue;
            }
            let (p, dp, scale) = eval(core, z[i]);
            if p.norm() <= noise(scale, m) {
                done[i] = true;
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..m)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !w.is_finite() {
                // coincident estimates; nudge apart
                let bump = Complex64::new(1e-8, 1e-8) * z[i].norm().max(1.0);
                z[i] += bump;
                continue;
            }
            z[i] -= w;
            if w.norm() <= f64::EPSILON * z[i].norm() {
                done[i] = true;
            }
        }
        if done.iter().all(|d| *d) {
            roots.extend(z);
            return Ok(roots);
        }
    }
    Err(Error::NumericFailure {
        message: format!("Aberth iteration did not converge in {MAX_ITER} sweeps"),
        partial: z.iter().map(|c| (c.re, c.im)).collect(),
    })
}

fn newton(coeffs: &[f64], start: Complex64) -> Option<Complex64> {
    let mut z = start;
    for _ in 0..100 {
        let (p, dp, scale) = eval(coeffs, z);
        if p.norm() <= noise(scale, coeffs.len()) {
            return Some(z);
        }
        let step = p / dp;
        if !step.is_finite() {
            return None;
        }
        z -= step;
        if step.norm() <= 4.0 * f64::EPSILON * z.norm().max(f64::MIN_POSITIVE) {
            return Some(z);
        }
    }
    Some(z)
}

/// Roots grouped into clusters of (numerically) equal roots.
pub fn clustered_roots(coeffs: &[f64]) -> Result<Vec<RootCluster>> {
    let coeffs = trim(coeffs);
    let roots = aberth(coeffs)?;
    let n = roots.len();
    if n == 0 {
        return Ok(vec![]);
    }
    let lead = coeffs[n].abs();
    // inclusion radii, floored by the evaluation noise at each estimate
    let radii: Vec<f64> = (0..n)
        .map(|i| {
            let (p, _, scale) = eval(coeffs, roots[i]);
            let num = p.norm().max(noise(scale, n));
            // identical estimates are joined below regardless of radius
            let den: f64 = (0..n)
                .filter(|&j| j != i && roots[j] != roots[i])
                .map(|j| (roots[i] - roots[j]).norm())
                .product::<f64>()
                * lead;
            let r = n as f64 * num / den;
            if r.is_finite() {
                r
            } else {
                f64::INFINITY
            }
        })
        .collect();

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i] - roots[j]).norm() <= radii[i] + radii[j] {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut label = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if label[r] == usize::MAX {
            label[r] = groups.len();
            groups.push(vec![]);
        }
        groups[label[r]].push(i);
    }

    let mut out = Vec::with_capacity(groups.len());
    for g in groups {
        let m = g.len();
        let centroid = g.iter().map(|&i| roots[i]).sum::<Complex64>() / m as f64;
        let spread = g
            .iter()
            .map(|&i| (roots[i] - centroid).norm() + radii[i].min(1e300))
            .fold(0.0, f64::max);
        let mut d = coeffs.to_vec();
        for _ in 1..m {
            d = derivative(&d);
        }
        let center = match newton(&d, centroid) {
            Some(z) if (z - centroid).norm() <= spread.max(1e-12 * centroid.norm()) => z,
            _ => centroid,
        };
        out.push(RootCluster {
            center,
            multiplicity: m,
            radius: spread,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
        v
    }

    #[test]
    fn simple_roots() {
        // (x - 1)(x - 2)(x - 3)
        let r = sorted(aberth(&[-6.0, 11.0, -6.0, 1.0]).unwrap());
        for (z, e) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((z - Complex64::new(e, 0.0)).norm() < 1e-12);
        }
        let r = aberth(&[1.0, 0.0, 1.0]).unwrap();
        assert_eq!(r.len(), 2);
        for z in r {
            assert!((z.norm() - 1.0).abs() < 1e-14 && z.re.abs() < 1e-14);
        }
    }

    #[test]
    fn zero_roots_are_exact() {
        let r = aberth(&[0.0, 0.0, -2.0, 1.0]).unwrap();
        assert_eq!(
            r.iter().filter(|z| **z == Complex64::new(0.0, 0.0)).count(),
            2
        );
    }

    #[test]
    fn multiple_roots_cluster() {
        // (x^2 + 1)^3 = x^6 + 3x^4 + 3x^2 + 1
        let c = clustered_roots(&[1.0, 0.0, 3.0, 0.0, 3.0, 0.0, 1.0]).unwrap();
        assert_eq!(c.len(), 2);
        for cl in &c {
            assert_eq!(cl.multiplicity, 3);
            assert!(cl.center.re.abs() < 1e-12);
            assert!((cl.center.im.abs() - 1.0).abs() < 1e-12);
        }
        // (x - 2)^2
        let c = clustered_roots(&[4.0, -4.0, 1.0]).unwrap();
        assert_eq!(c.len(), 1);
        assert!((c[0].center - Complex64::new(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn quartic_plus_one() {
        // (x^4 + 1)^2 x^2
        let c = clustered_roots(&[0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(c.len(), 5);
        for cl in c.iter().filter(|c| c.center.norm() > 0.5) {
            assert_eq!(cl.multiplicity, 2);
            assert!((cl.center.re.abs() - s).abs() < 1e-12);
            assert!((cl.center.im.abs() - s).abs() < 1e-12);
        }
    }
}
