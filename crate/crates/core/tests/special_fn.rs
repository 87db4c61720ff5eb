use fdw_core::special::{airy_ai, airy_primitive, chebyshev, ChebKind};
use proptest::prelude::*;

fn oracle() -> Vec<(f64, f64)> {
    let text = include_str!("data/airy_oracle.csv");
    text.lines()
        .skip(1)
        .map(|l| {
            let (x, v) = l.split_once(',').unwrap();
            (x.parse().unwrap(), v.parse().unwrap())
        })
        .collect()
}

#[test]
fn airy_matches_frozen_table() {
    let mut worst = 0.0f64;
    for (x, want) in oracle() {
        let got = airy_ai(x).unwrap();
        let rel = ((got - want) / want).abs();
        if (-12.0..=6.0).contains(&x) {
            assert!(rel <= 1e-9, "Ai({x}) = {got}, oracle {want}, rel {rel}");
            worst = worst.max(rel);
        } else {
            // far field: absolute agreement
            assert!((got - want).abs() <= 1e-12 * (1.0 + want.abs()), "Ai({x})");
        }
    }
    assert!(worst < 1e-9);
}

#[test]
fn airy_ode_residual() {
    let h = 1e-2;
    let mut x = -10.0;
    while x <= 5.0 {
        let f = |t: f64| airy_ai(t).unwrap();
        let d2 = (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h)) / (12.0 * h * h);
        assert!((d2 - x * f(x)).abs() <= 1e-6, "residual at {x}");
        x += 0.37;
    }
}

#[test]
fn primitive_derivative_is_ai() {
    let h = 1e-3;
    let mut x = -10.0;
    while x <= 5.0 {
        let d = (airy_primitive(x + h).unwrap() - airy_primitive(x - h).unwrap()) / (2.0 * h);
        assert!((d - airy_ai(x).unwrap()).abs() <= 1e-6, "at {x}");
        x += 0.53;
    }
}

#[test]
fn primitive_limits() {
    assert!((airy_primitive(f64::INFINITY).unwrap() - 1.0 / 3.0).abs() < 1e-8);
    assert_eq!(airy_primitive(0.0).unwrap(), 0.0);
    assert!((airy_primitive(f64::NEG_INFINITY).unwrap() + 2.0 / 3.0).abs() < 1e-15);
    // mpmath quadrature over [-40, 0] at 30 digits
    assert!((airy_primitive(-40.0).unwrap() + 0.631_969_184_789_078_7).abs() < 1e-9);
    assert!((airy_primitive(10.0).unwrap() - 1.0 / 3.0).abs() < 1e-8);
}

#[test]
fn chebyshev_examples() {
    assert!((chebyshev(ChebKind::T, 2, 0.3).unwrap() + 0.82).abs() < 1e-15);
    assert!((chebyshev(ChebKind::U, 3, 0.5).unwrap() + 1.0).abs() < 1e-14);
    for n in 0..=100 {
        assert_eq!(chebyshev(ChebKind::T, n, 1.0).unwrap(), 1.0);
    }
}

#[test]
fn chebyshev_cosine_identity() {
    for theta in [0.1f64, 0.7, 2.3] {
        for n in 0..=50 {
            let t = chebyshev(ChebKind::T, n, theta.cos()).unwrap();
            assert!((t - (n as f64 * theta).cos()).abs() < 1e-12);
            let u = chebyshev(ChebKind::U, n, theta.cos()).unwrap();
            assert!((u - ((n + 1) as f64 * theta).sin() / theta.sin()).abs() < 1e-11);
        }
    }
}

proptest! {
    #[test]
    fn ai_positive_and_primitive_increasing(x in 0.0f64..20.0, dx in 0.01f64..1.0) {
        prop_assert!(airy_ai(x).unwrap() > 0.0);
        prop_assert!(airy_primitive(x + dx).unwrap() >= airy_primitive(x).unwrap());
    }
}
