use std::f64::consts::PI;

use fdw_core::analysis::*;
use fdw_core::scheme::{BoundaryScheme, BulkScheme, Dissipative, LeapFrog};
use fdw_core::C64;
use proptest::prelude::*;

fn lf(c: f64) -> LeapFrog {
    LeapFrog::new(c).unwrap()
}

fn cis(t: f64) -> C64 {
    C64::from_polar(1.0, t)
}

#[test]
fn kappa_examples() {
    let b = lf(-0.5);
    assert!((kappa_s(&b, C64::new(-1.0, 0.0)).unwrap() - 1.0).norm() < 1e-6);
    assert!((kappa_s(&b, C64::new(1.0, 0.0)).unwrap() + 1.0).norm() < 1e-6);
    assert!(kappa_s(&b, C64::new(2.0, 0.0)).unwrap().norm() < 1.0);
    assert!(kappa_s(&b, C64::new(1e6, 0.0)).unwrap().norm() < 1e-5);
}

#[test]
fn branch_point_examples() {
    let bp = branch_points(&lf(-0.5)).unwrap();
    assert!((bp.angle - PI / 6.0).abs() < 1e-12);
    for want in [cis(PI / 6.0), cis(-PI / 6.0), -cis(PI / 6.0), -cis(-PI / 6.0)] {
        assert!(bp.points.iter().any(|p| (p - want).norm() < 1e-12), "{want}");
    }
    assert!(leap_frog_branch_angle(-1e-9) < 1e-8);

    let lax = branch_points(&Dissipative::new(0.5, 1.0).unwrap()).unwrap();
    assert!(lax.inside_disk);
    let mut mags: Vec<f64> = lax.points.iter().map(|p| p.norm()).collect();
    mags.sort_by(f64::total_cmp);
    assert!(mags[0] < 1e-12 && mags[1] < 1e-12);
    assert!((mags[3] - 0.75f64.sqrt()).abs() < 1e-12);
}

#[test]
fn saddle_examples() {
    let b = lf(-0.5);
    let wall = saddle_points(&b, 0.0).unwrap();
    assert_eq!(wall.zone, Zone::NearWall);
    assert!(wall.points.is_empty());

    let front = saddle_points(&b, 0.5).unwrap();
    assert_eq!(front.zone, Zone::Front);
    assert!(front.degenerate);
    assert_eq!(front.second_derivative, C64::new(0.0, 0.0));
    for want in [1.0, -1.0] {
        assert!(front.points.iter().any(|p| (p - want).norm() < 1e-12));
    }

    let t = saddle_points(&b, 0.25).unwrap();
    assert_eq!(t.zone, Zone::Transition);
    assert!((t.theta_sp.unwrap() - 0.4636476).abs() < 1e-7);
    assert!((t.xi_sp.unwrap() - 1.1071487).abs() < 1e-7);
    let tb = leap_frog_branch_angle(-0.5);
    assert!(t.theta_sp.unwrap() > 0.0 && t.theta_sp.unwrap() < tb);
    for p in &t.points {
        assert!((p.norm() - 1.0).abs() < 1e-12);
        let e = f_eval(&b, *p * (1.0 + 1e-12), 0.25).unwrap();
        assert!(e.f1.norm() <= 1e-10 * 1e2, "|f'| = {}", e.f1.norm());
        assert!(e.f.re.abs() < 1e-9);
    }
    assert!(saddle_points(&b, 1.5).is_err());
    assert!(saddle_points(&b, -0.1).is_err());
}

#[test]
fn phase_and_determinant_examples() {
    let b = lf(-0.5);
    for nu in [0.0, 0.2, 0.7] {
        let f = f_eval(&b, C64::new(-1.0, 0.0), nu).unwrap().f;
        assert!((f - C64::new(0.0, PI)).norm() < 1e-6);
    }
    let two = C64::new(2.0, 0.0);
    let dir = BoundaryScheme::dirichlet();
    assert!((boundary_determinant(&dir, &b, two).unwrap() - 4.0).norm() < 1e-15);
    let g = g_eval(&dir, &b, two).unwrap();
    assert!((g - 1.0 / (C64::new(0.0, 2.0 * PI) * 4.0)).norm() < 1e-15);

    let up = BoundaryScheme::upwind(-0.5);
    assert!((boundary_determinant(&up, &b, C64::new(1.0, 0.0)).unwrap() - 1.0).norm() < 1e-6);
    assert!((boundary_determinant(&up, &b, C64::new(-1.0, 0.0)).unwrap() - 2.0).norm() < 1e-6);

    let ex = BoundaryScheme::extrapolated_leap_frog(-0.5);
    assert!(boundary_determinant(&ex, &b, C64::new(-1.0, 0.0)).unwrap().norm() < 1e-6);
    assert!(g_eval(&ex, &b, C64::new(-1.0, 0.0)).is_err());
}

#[test]
fn residue_examples() {
    for c in [-0.5, -0.3, -0.8] {
        let r = residue_r(&BoundaryScheme::extrapolated_leap_frog(c), c).unwrap().r;
        assert!((r - c / 2.0).abs() < 1e-14);
        let r = residue_r(&BoundaryScheme::anti_bounce_back(c), c).unwrap().r;
        assert!((r + 1.0).abs() < 1e-14);
    }
    assert!(residue_r(&BoundaryScheme::upwind(-0.5), -0.5).is_err());
}

#[test]
fn sigma_matches_finite_difference_f_second() {
    let c = -0.5f64;
    let b = lf(c);
    for k in [0.1, 0.2, 0.3, 0.4] {
        let nu = k * c.abs() * 2.0;
        let (theta, _) = transition_angles(c, nu);
        let z = cis(theta);
        let h = 1e-5;
        let f1 = |w: C64| f_eval(&b, w, nu).unwrap().f1;
        let fd = (f1(z * cis(h)) - f1(z * cis(-h))) / (z * (cis(h) - cis(-h)));
        let closed = sigma_closed_form(c, nu);
        let direct = f_eval(&b, z, nu).unwrap().f2;
        assert!((fd - direct).norm() <= 1e-6 * direct.norm(), "nu = {nu}");
        assert!((fd - closed).norm() <= 1e-6 * closed.norm(), "nu = {nu}: {fd} vs {closed}");
    }
}

fn bulks() -> impl Strategy<Value = Box<dyn BulkScheme>> {
    prop_oneof![
        (-0.95f64..-0.05).prop_map(|c| Box::new(lf(c)) as Box<dyn BulkScheme>),
        (0.05f64..1.0, 0.05f64..1.95).prop_filter_map("exceptional omega", |(c, w)| {
            ((w - 2.0 / (1.0 + c)).abs() > 1e-3)
                .then(|| Box::new(Dissipative::new(c, w).unwrap()) as Box<dyn BulkScheme>)
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kappa_is_a_root(b in bulks(), r in (1.0 + 1e-8)..10.0f64, t in -PI..PI) {
        let z = C64::from_polar(r, t);
        let k = kappa_s(b.as_ref(), z).unwrap();
        let res = CharPoly::of(b.as_ref()).residual(z, k);
        prop_assert!(res.norm() <= 1e-12 * (1.0 + z.norm()), "residual {}", res.norm());
        prop_assert!(k.norm() <= 1.0 + 1e-9);
    }

    // A literal 1e-3 bound on jumps is impossible at step 1e-3 (|kappa'(1)| = 1/|C| > 1), so each jump is
    // held to the local derivative bound and kept far below the gap to the other root.
    #[test]
    fn kappa_is_continuous_along_rays(b in bulks(), t in -PI..PI) {
        let poly = CharPoly::of(b.as_ref());
        let mut path = KappaPath::new(poly);
        let h = 1e-3;
        let mut prev: Option<(C64, f64)> = None;
        let mut r = 1.0 + 1e-8;
        while r <= 10.0 {
            let z = C64::from_polar(r, t);
            let e = kappa_s_eval(b.as_ref(), z).unwrap();
            let k = e.value;
            prop_assert!((path.eval(z).unwrap().value - k).norm() < 1e-9);
            let slope = poly.root_derivatives(z, k).0.norm();
            if let Some((p, ps)) = prev {
                let jump = (k - p).norm();
                let gap = (e.other - k).norm();
                let lip = if slope.is_finite() && ps.is_finite() { ps.max(slope) } else { f64::INFINITY };
                prop_assert!(jump <= 1.5 * h * lip || jump <= 1e-3, "jump {} vs h|k'| {} at r = {}", jump, h * lip, r);
                prop_assert!(jump < 0.5 * gap || gap < 1e-6, "jump {} vs root gap {} at r = {}", jump, gap, r);
            }
            prev = Some((k, slope));
            r += h;
        }
    }

    #[test]
    fn kappa_conjugate_symmetry(b in bulks(), r in 1.0f64..10.0, t in 0.0..PI) {
        let z = C64::from_polar(r, t);
        let k = kappa_s(b.as_ref(), z).unwrap();
        let kc = kappa_s(b.as_ref(), z.conj()).unwrap();
        prop_assert!((kc - k.conj()).norm() < 1e-12);
    }

    #[test]
    fn kappa_vanishes_at_infinity(c in -0.95f64..-0.05, t in -PI..PI) {
        prop_assert!(kappa_s(&lf(c), C64::from_polar(1e6, t)).unwrap().norm() < 1e-5);
    }

    #[test]
    fn saddle_sets_are_conjugation_closed(c in -0.95f64..-0.05, s in 0.0f64..1.0) {
        let nu = s * 0.999;
        let set = saddle_points(&lf(c), nu).unwrap();
        for p in &set.points {
            prop_assert!(set.points.iter().any(|q| (q - p.conj()).norm() < 1e-9), "{}", p);
        }
        for p in &set.points {
            if matches!(set.zone, Zone::Transition | Zone::AheadOfFront) {
                let e = f_eval(&lf(c), *p * (1.0 + 1e-12), nu);
                if let Ok(e) = e {
                    prop_assert!(e.f1.norm() < 1e-6, "|f'| = {}", e.f1.norm());
                }
            }
        }
    }
}
