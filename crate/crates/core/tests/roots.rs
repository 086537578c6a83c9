use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quatpoly::central::CentralPoly;
use quatpoly::decompose::{beck_decompose, check_central_divisor, roots_in_center};
use quatpoly::numeric::{agree_with_exact, NumericSettings};
use quatpoly::rational::{frac, int};
use quatpoly::roots::verify::{dichotomy_check, remainder_contract};
use quatpoly::roots::{
    analyze_sparse, candidate_classes, class_status, classify, classify_cubic, nonroot_conjugates,
    root_conjugator_space, roots_in_subfield, spherical_bound_report, ClassStatus, CubicCase,
    SparseReport,
};
use quatpoly::{sample, Algebra, ConjClass, QPoly, Quaternion};

fn hamilton() -> Algebra {
    Algebra::hamilton()
}

fn central(c: &[i64]) -> QPoly {
    QPoly::from_central(&hamilton(), &CentralPoly::from_ints(c))
}

fn lin(q: &Quaternion) -> QPoly {
    QPoly::linear(&hamilton(), q)
}

fn sphere(t: i64, n: i64) -> ConjClass {
    ConjClass::sphere(int(t), int(n)).unwrap()
}

fn has_root_in_class(p: &QPoly, q: &Quaternion) -> bool {
    let r = classify(p).unwrap();
    if q.is_central() {
        return r.central_roots.contains(&q.w);
    }
    let class = p.algebra().class_of(q);
    r.entries
        .iter()
        .any(|e| e.class == class && e.status.has_root())
}

#[test]
fn worked_cubics() {
    let i = Quaternion::i();
    // x(x^2 - 1): central roots only
    let r = classify(&central(&[0, -1, 0, 1])).unwrap();
    assert_eq!(r.central_roots, vec![int(-1), int(0), int(1)]);
    assert!(r.spherical_classes().is_empty());

    // x(x^2 + 1): spherical root i
    let r = classify(&central(&[0, 1, 0, 1])).unwrap();
    assert_eq!(r.spherical_classes(), vec![sphere(0, 1)]);

    // (x - i)(x^2 - 1): no spherical roots
    let p = &lin(&i) * &central(&[-1, 0, 1]);
    let r = classify(&p).unwrap();
    assert!(r.spherical_classes().is_empty());
    assert_eq!(r.isolated_roots(), vec![i.clone()]);

    // (x - i)(x^2 + 1)
    let r = classify(&(&lin(&i) * &central(&[1, 0, 1]))).unwrap();
    assert_eq!(r.spherical_classes(), vec![sphere(0, 1)]);

    // (x - i)(x + 1)^2
    let r = classify(&(&lin(&i) * &central(&[1, 1]).pow(2))).unwrap();
    assert!(r.spherical_classes().is_empty());
    assert_eq!(r.central_roots, vec![int(-1)]);

    // (x - i)(x^2 + x + 1): the spherical class is the one of x^2 + x + 1
    let p = &lin(&i) * &central(&[1, 1, 1]);
    let r = classify(&p).unwrap();
    assert_eq!(r.spherical_classes(), vec![sphere(-1, 1)]);
    assert_eq!(r.isolated_roots(), vec![i]);
}

#[test]
fn non_maximal_central_divisor() {
    let p = central(&[0, 1, 0, 1]);
    let f = beck_decompose(&p).unwrap();
    assert_eq!(f.h, CentralPoly::from_ints(&[0, 1, 0, 1]));
    assert_eq!(f.g, QPoly::one(&hamilton()));
    let check = check_central_divisor(&p, &CentralPoly::x()).unwrap();
    assert!(check.divides && !check.is_maximal);
    assert_eq!(roots_in_center(&p).unwrap(), vec![int(0)]);
}

#[test]
fn root_classes_are_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let alg = hamilton();
    for n in 1..=6 {
        for _ in 0..12 {
            let p = if rng.random_bool(0.5) {
                sample::poly(&mut rng, &alg, n, 10, 1)
            } else {
                sample::root_bearing(&mut rng, &alg, n, 4).0
            };
            let r = classify(&p).unwrap();
            assert!(r.classes_with_roots() <= n, "{p}");
            assert!(r.spherical_classes().len() <= n / 2, "{p}");
            let b = spherical_bound_report(&p).unwrap();
            assert!(b.holds, "{p}: {b:?}");
        }
    }
}

#[test]
fn constructed_roots_are_found() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for alg in [hamilton(), Algebra::new(int(-2), int(-3)).unwrap()] {
        for n in 1..=5 {
            for _ in 0..8 {
                let (p, qs) = sample::root_bearing(&mut rng, &alg, n, 4);
                let cands = candidate_classes(&p).unwrap();
                for q in &qs {
                    assert!(
                        cands.contains(&alg.class_of(q)),
                        "{p}: class of {q} missing"
                    );
                    assert!(has_root_in_class(&p, q), "{p}: no root in class of {q}");
                }
            }
        }
    }
}

#[test]
fn indefinite_algebra_classification() {
    // (2, 5) is a division algebra; x^2 - 2 has the spherical class of i.
    let alg = Algebra::new(int(2), int(5)).unwrap();
    let p = QPoly::from_central(&alg, &CentralPoly::from_ints(&[-2, 0, 1]));
    let r = classify(&p).unwrap();
    assert_eq!(
        r.spherical_classes(),
        vec![ConjClass::sphere(int(0), int(-2)).unwrap()]
    );
    assert_eq!(r.entries[0].realized, Some(true));
    let p = &QPoly::linear(&alg, &Quaternion::j()) * &QPoly::linear(&alg, &Quaternion::i());
    let r = classify(&p).unwrap();
    assert!(r.isolated_roots().contains(&Quaternion::i()));
}

#[test]
fn dichotomy_on_random_classifications() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let alg = hamilton();
    for n in 2..=5 {
        for _ in 0..6 {
            let (p, qs) = sample::root_bearing(&mut rng, &alg, n, 3);
            let r = classify(&p).unwrap();
            let d = dichotomy_check(&p, &r, &mut rng, 20).unwrap();
            assert!(d.passed(), "{p}: {:?}", d.failures);
            for q in qs.iter().filter(|q| !q.is_central()) {
                assert!(remainder_contract(&p, q, &mut rng, 5).unwrap());
            }
        }
    }
}

#[test]
fn unrealized_sphere_is_reported_separately() {
    // x^2 + 7: no rational quaternion of norm 7 and trace 0
    let r = classify(&central(&[7, 0, 1])).unwrap();
    assert_eq!(r.unrealized_spherical(), vec![sphere(0, 7)]);
    assert!(!r.entries[0].class.is_validated());
    let r = classify(&central(&[3, 0, 1])).unwrap();
    assert!(r.unrealized_spherical().is_empty());
    assert!(r.entries[0].class.is_validated());
}

#[test]
fn status_examples() {
    let (i, j) = (Quaternion::i(), Quaternion::j());
    let p = &lin(&i) * &lin(&j);
    assert_eq!(
        class_status(&p, &sphere(0, 1)).unwrap(),
        ClassStatus::IsolatedRoot(j)
    );
    assert!(!class_status(&central(&[1, 1, 1]), &sphere(0, 1))
        .unwrap()
        .has_root());
}

#[test]
fn subfield_roots() {
    let (i, j) = (Quaternion::i(), Quaternion::j());
    assert_eq!(
        roots_in_subfield(&central(&[1, 0, 1]), &j).unwrap(),
        vec![j.clone(), -&j]
    );
    assert!(roots_in_subfield(&(&lin(&i) * &lin(&j)), &i)
        .unwrap()
        .is_empty());
    let p = &lin(&i) * &central(&[1, 0, 1]);
    let r = roots_in_subfield(&p, &Quaternion::from_ints(1, 0, 3, 4)).unwrap();
    assert_eq!(r.len(), 2);
}

#[test]
fn nonroots_and_kernel_parity() {
    let alg = hamilton();
    let i = Quaternion::i();
    let p = central(&[1, 1, 1]);
    let out = nonroot_conjugates(&p, &i, 10).unwrap();
    assert_eq!(out.len(), 10);
    for (a, d) in out.iter().enumerate() {
        assert!(alg.same_class(d, &i) && !p.eval_right(d).is_zero());
        assert!(!out[a + 1..].contains(d));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..60 {
        let n = rng.random_range(1..=4);
        let p = if rng.random_bool(0.5) {
            sample::poly(&mut rng, &alg, n, 5, 1)
        } else {
            sample::root_bearing(&mut rng, &alg, n, 3).0
        };
        let c = sample::noncentral(&mut rng, 3, 1);
        let dim = root_conjugator_space(&p, &c).unwrap().len();
        assert!(matches!(dim, 0 | 2 | 4), "{p}, {c}: dimension {dim}");
        if !p.eval_right(&c).is_zero() {
            let out = nonroot_conjugates(&p, &c, 4).unwrap();
            for d in &out {
                assert!(alg.same_class(d, &c) && !p.eval_right(d).is_zero());
            }
        }
    }
}

fn cubic(a: Quaternion, b: Quaternion, c: Quaternion) -> QPoly {
    QPoly::new(&hamilton(), vec![c, b, a, Quaternion::one()])
}

#[test]
fn cubic_cases_bound_classify() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let mut seen = std::collections::HashSet::new();
    for _ in 0..300 {
        // coefficients from a few subfields so that every case shows up
        let gens = [
            Quaternion::i(),
            Quaternion::from_ints(0, 1, 1, 0),
            Quaternion::j(),
        ];
        let mut coef = || -> Quaternion {
            let w = int(rng.random_range(-3..=3));
            if rng.random_bool(0.4) {
                Quaternion::scalar(w)
            } else {
                let g = &gens[rng.random_range(0..gens.len())];
                Quaternion::scalar(w) + g.scale(&int(rng.random_range(1..=2)))
            }
        };
        let p = cubic(coef(), coef(), coef());
        let case = classify_cubic(&p).unwrap();
        seen.insert(case.label());
        let count = classify(&p).unwrap().spherical_classes().len();
        assert!(
            count <= case.spherical_bound(),
            "{p}: case {case}, {count} spherical"
        );
    }
    assert_eq!(seen.len(), 7, "{seen:?}");
    assert_eq!(
        classify_cubic(&central(&[0, -1, 0, 1])).unwrap(),
        CubicCase::AllCentral
    );
}

#[test]
fn sparse_patterns_bound_classify() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let (i, j) = (Quaternion::i(), Quaternion::j());
    let mut cases = [0usize; 3];
    for _ in 0..120 {
        let n = rng.random_range(3..=6);
        let mut c: Vec<Quaternion> = (0..n)
            .map(|_| Quaternion::scalar(int(rng.random_range(-3..=3))))
            .collect();
        c.push(Quaternion::one());
        let m = rng.random_range(0..n - 1);
        let k = rng.random_range(m + 1..n);
        match rng.random_range(0..3) {
            0 => c[k] = &c[k] + &i,
            1 => {
                c[m] = &c[m] + &i;
                let v = int(rng.random_range(1..=2))
                    * if rng.random_bool(0.5) {
                        int(1)
                    } else {
                        int(-1)
                    };
                c[k] = &c[k] + &i.scale(&v);
            }
            _ => {
                c[m] = &c[m] + &i;
                c[k] = &c[k] + &j;
            }
        }
        let p = QPoly::new(&hamilton(), c);
        let report = analyze_sparse(&p).unwrap();
        let count = classify(&p).unwrap().spherical_classes().len();
        let bound = report.spherical_bound().unwrap();
        assert!(count <= bound, "{p}: {report:?} but {count} spherical");
        match report {
            SparseReport::OneNonCentral { .. } => cases[0] += 1,
            SparseReport::SameSubfield { .. } => cases[1] += 1,
            SparseReport::DifferentSubfields { .. } => cases[2] += 1,
            _ => {}
        }
    }
    assert!(cases.iter().all(|c| *c > 0), "{cases:?}");
}

#[test]
fn sparse_same_subfield_factor_divides_spherical_classes() {
    // x^4 + i x^3 + i x: the factor x^2 + 1 carries the only spherical class
    let i = Quaternion::i();
    let z = Quaternion::zero;
    let p = QPoly::new(&hamilton(), vec![z(), i.clone(), z(), i, Quaternion::one()]);
    let SparseReport::SameSubfield { factor, bound, .. } = analyze_sparse(&p).unwrap() else {
        panic!("expected the same-subfield case");
    };
    assert_eq!(bound, 1);
    for c in classify(&p).unwrap().spherical_classes() {
        assert!(c.min_poly().divides(&factor).unwrap());
    }
}

#[test]
fn backends_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let alg = hamilton();
    let settings = NumericSettings::default();
    for n in 1..=5 {
        for _ in 0..10 {
            let p = if rng.random_bool(0.5) {
                sample::poly(&mut rng, &alg, n, 10, 1)
            } else {
                sample::root_bearing(&mut rng, &alg, n, 4).0
            };
            let r = agree_with_exact(&p, &settings).unwrap();
            assert!(r.agree, "{p}: {:?}", r.mismatches);
        }
    }
}

#[test]
fn nearly_spherical_perturbation_is_uncertain() {
    let eps = frac(1, 1_000_000_000_000);
    let p = QPoly::from_central(&hamilton(), &CentralPoly::new(vec![int(1), eps, int(1)]));
    let r = agree_with_exact(&p, &NumericSettings::default()).unwrap();
    let numeric = quatpoly::numeric::classify_f64(
        &quatpoly::numeric::QPolyF::from_exact(&p).unwrap(),
        &NumericSettings::default(),
    )
    .unwrap();
    assert!(numeric.any_uncertain());
    assert!(r.agree || !r.uncertain.is_empty());
}
