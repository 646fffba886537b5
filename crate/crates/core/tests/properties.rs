use gmcone::cone::{
    ext_on_cone, lift_phi, lift_psi, pairing_i, pairing_i_based, pairing_i_squared, ClosurePoint,
    ConePoint, ModelPoint,
};
use gmcone::foliation::{intersection_number, normalize_projective, MeasuredFoliation};
use gmcone::mcg::{act_on_cone, act_on_foliation, act_on_teich, Generator, MappingClass};
use gmcone::teich::{
    extremal_length, geodesic_ray, kerckhoff_sup, minsky_partner, teich_distance, TeichPoint,
};
use gmcone::walsh::{walsh_distance, WalshPoint};
use gmcone::Real;
use num_rational::Rational64;
use proptest::prelude::*;

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

prop_compose! {
    fn rational_tau()(xn in -300i64..=300, yn in 25i64..=400) -> TeichPoint {
        TeichPoint::new(Real::ratio(xn, 100), Real::ratio(yn, 100)).unwrap()
    }
}

prop_compose! {
    fn float_tau()(x in -3.0f64..3.0, y in 0.25f64..4.0) -> TeichPoint {
        TeichPoint::new(x, y).unwrap()
    }
}

prop_compose! {
    fn int_foliation()(a in -40i64..=40, b in -40i64..=40) -> MeasuredFoliation {
        MeasuredFoliation::new(a, b)
    }
}

fn nonzero_int_foliation() -> impl Strategy<Value = MeasuredFoliation> {
    int_foliation().prop_filter("nonzero", |f| !f.is_zero())
}

fn cone_point() -> impl Strategy<Value = ConePoint> {
    prop_oneof![
        1 => Just(ConePoint::Zero),
        3 => (0.05f64..5.0, float_tau())
            .prop_map(|(c, t)| ConePoint::interior(c, t).unwrap()),
        3 => (nonzero_int_foliation(), 1i64..=9, 1i64..=9).prop_map(|(f, p, q)| {
            ConePoint::boundary(f).unwrap().scaled(&Real::ratio(p, q))
        }),
    ]
}

fn closure_point() -> impl Strategy<Value = ClosurePoint> {
    prop_oneof![
        float_tau().prop_map(ClosurePoint::Interior),
        nonzero_int_foliation().prop_map(ClosurePoint::Boundary),
    ]
}

fn word() -> impl Strategy<Value = MappingClass> {
    prop::collection::vec(prop::sample::select(Generator::ALL.to_vec()), 1..=8)
        .prop_map(|w| MappingClass::from_word(&w))
}

fn walsh_point() -> impl Strategy<Value = WalshPoint> {
    prop_oneof![
        (-200i64..=200).prop_map(|k| WalshPoint::line(Rational64::new(k, 3))),
        (1u32..=20)
            .prop_flat_map(|n| (Just(n), 0i64..=12 * n as i64))
            .prop_map(|(n, k)| WalshPoint::frame(n, Rational64::new(k, 3)).unwrap()),
    ]
}

proptest! {
    #[test]
    fn intersection_is_symmetric(f in int_foliation(), g in int_foliation()) {
        prop_assert_eq!(intersection_number(&f, &g), intersection_number(&g, &f));
    }

    #[test]
    fn intersection_is_bihomogeneous(
        f in int_foliation(), g in int_foliation(), s in 0i64..20, t in 1i64..20, u in 0i64..20
    ) {
        let s = Real::ratio(s, t);
        let u = Real::ratio(u, t);
        let lhs = intersection_number(&f.scale(&s), &g.scale(&u));
        prop_assert_eq!(lhs, &s * &u * intersection_number(&f, &g));
    }

    #[test]
    fn intersection_vanishes_iff_proportional(f in int_foliation(), g in int_foliation()) {
        let proportional = f.is_zero() || g.is_zero() || {
            let (a, b) = f.to_f64();
            let (c, d) = g.to_f64();
            // Compare reduced directions.
            let k = if a != 0.0 { c / a } else { d / b };
            c == k * a && d == k * b
        };
        prop_assert_eq!(intersection_number(&f, &g).is_zero(), proportional);
    }

    #[test]
    fn normalize_is_idempotent_and_scale_invariant(f in nonzero_int_foliation(), s in 1i64..50) {
        let n = normalize_projective(&f).unwrap();
        let nn = normalize_projective(&n).unwrap();
        let ns = normalize_projective(&f.scale(&Real::from(s))).unwrap();
        for (x, y) in [(n.to_f64(), nn.to_f64()), (n.to_f64(), ns.to_f64())] {
            prop_assert!(rel_close(x.0, y.0, 1e-15) && rel_close(x.1, y.1, 1e-15));
        }
    }

    #[test]
    fn extremal_length_is_degree_two(tau in rational_tau(), f in int_foliation(), t in -9i64..9) {
        let t = Real::from(t);
        prop_assert_eq!(
            extremal_length(&tau, &f.scale(&t)),
            t.square() * extremal_length(&tau, &f)
        );
    }

    #[test]
    fn distance_is_a_metric(a in float_tau(), b in float_tau(), c in float_tau()) {
        let ab = teich_distance(&a, &b);
        prop_assert!(rel_close(ab, teich_distance(&b, &a), 1e-12));
        prop_assert!(teich_distance(&a, &c) <= ab + teich_distance(&b, &c) + 1e-12);
        prop_assert!(ab >= 0.0);
    }

    #[test]
    fn minsky_inequality(tau in float_tau(), f in int_foliation(), g in int_foliation()) {
        let lhs = intersection_number(&f, &g).square().to_f64();
        let rhs = (extremal_length(&tau, &f) * extremal_length(&tau, &g)).to_f64();
        prop_assert!(lhs <= rhs * (1.0 + 1e-12));
    }

    #[test]
    fn minsky_partner_is_sharp_exactly(tau in rational_tau(), f in nonzero_int_foliation()) {
        let g = minsky_partner(&tau, &f);
        prop_assert_eq!(
            intersection_number(&f, &g).square(),
            extremal_length(&tau, &f) * extremal_length(&tau, &g)
        );
    }

    #[test]
    fn sharp_pair_realizes_both_extreme_ratios(a in float_tau(), b in float_tau()) {
        let k = kerckhoff_sup(&a, &b, &TeichPoint::i());
        prop_assume!(!k.is_isotropic());
        let pair = k.pair.unwrap();
        let ratio = |f: &MeasuredFoliation| {
            extremal_length(&a, f).to_f64() / extremal_length(&b, f).to_f64()
        };
        prop_assert!(rel_close(ratio(&pair.maximizer), k.lambda_max, 1e-10));
        prop_assert!(rel_close(ratio(&pair.minimizer), 1.0 / k.lambda_max, 1e-10));
    }

    #[test]
    fn geodesic_ray_has_unit_speed(
        tau in float_tau(), theta in 0.0f64..std::f64::consts::PI, t in 0.0f64..10.0
    ) {
        let alpha = MeasuredFoliation::from_angle(theta);
        let p = geodesic_ray(&tau, &alpha, t).unwrap();
        prop_assert!((teich_distance(&tau, &p) - t).abs() <= 1e-12 * t.max(1.0));
    }

    #[test]
    fn light_cone_and_hyperboloid(a in cone_point()) {
        let expected = match &a {
            ConePoint::Zero | ConePoint::Boundary { .. } => Real::zero(),
            ConePoint::Interior { scale, .. } => Real::from(scale * scale),
        };
        prop_assert_eq!(pairing_i(&a, &a), expected);
    }

    #[test]
    fn log_pairing_is_distance(y in float_tau(), z in float_tau()) {
        let p = pairing_i(&lift_phi(&y), &lift_phi(&z)).to_f64();
        prop_assert!((p.ln() - teich_distance(&y, &z)).abs() <= 1e-12);
    }

    #[test]
    fn pairing_is_symmetric(a in cone_point(), b in cone_point()) {
        prop_assert_eq!(pairing_i(&a, &b), pairing_i(&b, &a));
    }

    #[test]
    fn extended_minsky(x in float_tau(), a in cone_point(), b in cone_point()) {
        let lhs = pairing_i_squared(&a, &b).to_f64();
        let rhs = ext_on_cone(&x, &a).to_f64() * ext_on_cone(&x, &b).to_f64();
        prop_assert!(lhs <= rhs * (1.0 + 1e-12) + 1e-300);
    }

    #[test]
    fn distortion_property(y1 in float_tau(), y2 in float_tau(), a in cone_point()) {
        prop_assume!(!a.is_zero());
        let k = (2.0 * teich_distance(&y1, &y2)).exp();
        let r = ext_on_cone(&y2, &a).to_f64() / ext_on_cone(&y1, &a).to_f64();
        prop_assert!(r <= k * (1.0 + 1e-12));
        prop_assert!(r >= (1.0 / k) * (1.0 - 1e-12));
    }

    #[test]
    fn nontriviality(y in float_tau(), a in cone_point()) {
        prop_assert_eq!(ext_on_cone(&y, &a).is_zero(), a.is_zero());
    }

    #[test]
    fn slice_has_unit_extremal_length(x0 in rational_tau(), p in closure_point()) {
        let a = lift_psi(&x0, &ModelPoint::unit(p.clone()));
        let e = ext_on_cone(&x0, &a);
        match p {
            ClosurePoint::Boundary(_) => prop_assert_eq!(e, Real::one()),
            ClosurePoint::Interior(_) => prop_assert!(rel_close(e.to_f64(), 1.0, 1e-12)),
        }
    }

    #[test]
    fn lift_psi_is_homogeneous(x0 in float_tau(), p in closure_point(), s in 1i64..40) {
        let s = Real::ratio(s, 7);
        let m = ModelPoint::unit(p);
        let lhs = lift_psi(&x0, &m.scaled(&s));
        let rhs = lift_psi(&x0, &m).scaled(&s);
        let probe = ConePoint::boundary(MeasuredFoliation::new(2, -1)).unwrap();
        prop_assert!(rel_close(
            pairing_i(&lhs, &probe).to_f64(),
            pairing_i(&rhs, &probe).to_f64(),
            1e-14
        ));
    }

    #[test]
    fn pairing_is_basepoint_independent(
        x0 in float_tau(), x1 in float_tau(), a in cone_point(), b in cone_point()
    ) {
        use gmcone::cone::cone_to_model;
        let p0 = pairing_i_based(&x0, &cone_to_model(&x0, &a), &cone_to_model(&x0, &b));
        let p1 = pairing_i_based(&x1, &cone_to_model(&x1, &a), &cone_to_model(&x1, &b));
        prop_assert!(rel_close(p0.to_f64(), p1.to_f64(), 1e-12));
    }

    #[test]
    fn mcg_preserves_extremal_length(m in word(), tau in rational_tau(), f in int_foliation()) {
        prop_assert_eq!(
            extremal_length(&act_on_teich(&m, &tau), &act_on_foliation(&m, &f)),
            extremal_length(&tau, &f)
        );
    }

    #[test]
    fn mcg_pairing_equivariance(m in word(), a in cone_point(), b in cone_point()) {
        let lhs = pairing_i(&act_on_cone(&m, &a), &act_on_cone(&m, &b)).to_f64();
        prop_assert!(rel_close(lhs, pairing_i(&a, &b).to_f64(), 1e-12));
    }

    #[test]
    fn walsh_metric(p in walsh_point(), q in walsh_point(), r in walsh_point()) {
        let pq = walsh_distance(&p, &q);
        prop_assert_eq!(pq, walsh_distance(&q, &p));
        prop_assert!(walsh_distance(&p, &r) <= pq + walsh_distance(&q, &r));
        prop_assert_eq!(pq == Rational64::from(0), p == q);
    }
}
