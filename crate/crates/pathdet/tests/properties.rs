//! Randomized properties: ring laws, evaluation homomorphisms, exact-division
//! round trips, the floating complex embeddings, and commutation of
//! specialization with the determinant.

use proptest::prelude::*;

use pathdet::matrix::Matrix;
use pathdet::mpoly::MPoly;
use pathdet::paths::SpecKind;
use pathdet::rings::{EisenInt, GaussInt, Integer, Ring, RingValue};

fn arb_mpoly() -> impl Strategy<Value = MPoly> {
    proptest::collection::vec(((-20i64..=20), 0u32..4, 0u32..4, 0u32..3), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .fold(MPoly::zero(), |acc, (c, ex, ey, et)| {
                acc.add(&MPoly::term(c, ex, ey, et))
            })
    })
}

fn arb_gauss() -> impl Strategy<Value = GaussInt> {
    let bound = 1i64 << 30;
    ((-bound..=bound), (-bound..=bound)).prop_map(|(re, im)| GaussInt::new(re, im))
}

fn arb_eisen() -> impl Strategy<Value = EisenInt> {
    let bound = 1i64 << 30;
    ((-bound..=bound), (-bound..=bound)).prop_map(|(a, b)| EisenInt::new(a, b))
}

fn ring_laws<R: Ring>(a: &R, b: &R, c: &R) {
    assert_eq!(a.add(b), b.add(a));
    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    assert_eq!(a.mul(b), b.mul(a));
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert_eq!(a.add(&R::zero()), a.clone());
    assert_eq!(a.mul(&R::one()), a.clone());
    assert_eq!(a.sub(a), R::zero());
    assert_eq!(a.neg().neg(), a.clone());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn mpoly_ring_laws(a in arb_mpoly(), b in arb_mpoly(), c in arb_mpoly()) {
        ring_laws(&a, &b, &c);
    }

    #[test]
    fn gauss_ring_laws(a in arb_gauss(), b in arb_gauss(), c in arb_gauss()) {
        ring_laws(&a, &b, &c);
        if !Ring::is_zero(&b) {
            prop_assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
        }
    }

    #[test]
    fn eisen_ring_laws(a in arb_eisen(), b in arb_eisen(), c in arb_eisen()) {
        ring_laws(&a, &b, &c);
        if !Ring::is_zero(&b) {
            prop_assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
        }
    }

    #[test]
    fn mpoly_exact_division_round_trip(p in arb_mpoly(), q in arb_mpoly()) {
        if !q.is_zero() {
            let r = p.mul(&q);
            prop_assert_eq!(r.exact_div(&q).unwrap(), p);
        }
    }
}

fn as_f64_pair(v: &Integer) -> f64 {
    // components are bounded by 2^61 in these tests; exact in f64 up to 2^53,
    // comparison below is relative
    v.to_string().parse::<f64>().unwrap()
}

fn gauss_embed(z: &GaussInt) -> (f64, f64) {
    (as_f64_pair(&z.re), as_f64_pair(&z.im))
}

fn eisen_embed(z: &EisenInt) -> (f64, f64) {
    // w = 1/2 + sqrt(3)/2 i
    let a = as_f64_pair(&z.a);
    let b = as_f64_pair(&z.b);
    (a + 0.5 * b, (3f64).sqrt() / 2.0 * b)
}

fn complex_mul(x: (f64, f64), y: (f64, f64)) -> (f64, f64) {
    (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)
}

fn rel_close(x: (f64, f64), y: (f64, f64)) -> bool {
    let scale = (x.0.abs() + x.1.abs()).max(1.0);
    ((x.0 - y.0).abs() + (x.1 - y.1).abs()) / scale < 1e-9
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn gauss_matches_complex_embedding(a in arb_gauss(), b in arb_gauss()) {
        let exact = gauss_embed(&a.mul(&b));
        let approx = complex_mul(gauss_embed(&a), gauss_embed(&b));
        prop_assert!(rel_close(exact, approx));
        let exact = gauss_embed(&a.add(&b));
        let approx = (gauss_embed(&a).0 + gauss_embed(&b).0, gauss_embed(&a).1 + gauss_embed(&b).1);
        prop_assert!(rel_close(exact, approx));
    }

    #[test]
    fn eisen_matches_complex_embedding(a in arb_eisen(), b in arb_eisen()) {
        let exact = eisen_embed(&a.mul(&b));
        let approx = complex_mul(eisen_embed(&a), eisen_embed(&b));
        prop_assert!(rel_close(exact, approx));
    }

    #[test]
    fn eval_is_a_homomorphism(p in arb_mpoly(), q in arb_mpoly()) {
        for kind in [SpecKind::Catalan, SpecKind::Motzkin, SpecKind::Central] {
            let (x, y, t) = kind.point();
            let ep = p.eval(&x, &y, &t).unwrap();
            let eq = q.eval(&x, &y, &t).unwrap();
            prop_assert_eq!(p.mul(&q).eval(&x, &y, &t).unwrap(), ep.mul(&eq).unwrap());
            prop_assert_eq!(p.add(&q).eval(&x, &y, &t).unwrap(), ep.add(&eq).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn specialization_commutes_with_determinant(
        entries in proptest::collection::vec(arb_mpoly(), 9)
    ) {
        let m = Matrix::from_fn(3, 3, |i, j| entries[3 * i + j].clone());
        let det = m.det_bareiss();
        for kind in [SpecKind::Catalan, SpecKind::Motzkin, SpecKind::Central] {
            let (x, y, t) = kind.point();
            let det_then_eval = det.eval(&x, &y, &t).unwrap();
            let eval_then_det = match kind {
                SpecKind::Catalan => {
                    let (RingValue::Gauss(gx), RingValue::Gauss(gy), RingValue::Gauss(gt)) =
                        (x.clone(), y.clone(), t.clone())
                    else { unreachable!() };
                    RingValue::Gauss(m.map(|p| p.eval_in(&gx, &gy, &gt)).det_bareiss())
                }
                SpecKind::Motzkin => {
                    let (RingValue::Eisen(ex), RingValue::Eisen(ey), RingValue::Eisen(et)) =
                        (x.clone(), y.clone(), t.clone())
                    else { unreachable!() };
                    RingValue::Eisen(m.map(|p| p.eval_in(&ex, &ey, &et)).det_bareiss())
                }
                SpecKind::Central => {
                    let (RingValue::Int(ix), RingValue::Int(iy), RingValue::Int(it)) =
                        (x.clone(), y.clone(), t.clone())
                    else { unreachable!() };
                    RingValue::Int(m.map(|p| p.eval_in(&ix, &iy, &it)).det_bareiss())
                }
            };
            prop_assert_eq!(det_then_eval, eval_then_det);
        }
    }
}
