use fdw_core::green::*;
use std::f64::consts::PI;

fn row(c: f64, n: usize) -> GreenField {
    let mut st = GreenStepper::new(c, GreenKind::Second, n).unwrap();
    while st.n() < n {
        st.step();
    }
    st.field()
}

#[test]
fn parity_and_support() {
    let rows = green_simulate(0.6, GreenKind::First, 50).unwrap();
    for (n, r) in rows.iter().enumerate().skip(2) {
        for j in -52i64..=52 {
            if (n as i64 + j) % 2 != 0 || j.unsigned_abs() as usize >= n - 1 {
                assert_eq!(r.at(j), 0.0, "n={n} j={j}");
            }
            let mirror = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((r.at(-j) - mirror * r.at(j)).abs() < 1e-14);
        }
    }
}

#[test]
fn time_reversibility() {
    let c = -0.7;
    let rows = green_simulate(c, GreenKind::Second, 101).unwrap();
    for n in 1..=100 {
        for j in -100i64..=100 {
            let back = rows[n + 1].at(j) - c * (rows[n].at(j - 1) - rows[n].at(j + 1));
            assert!((back - rows[n - 1].at(j)).abs() < 1e-12);
        }
    }
}

#[test]
fn inverse_fourier_and_parseval() {
    let c = -0.5;
    let rows = green_simulate(c, GreenKind::Second, 50).unwrap();
    for j in -22i64..=22 {
        assert!((green_inverse_fourier(c, 20, j, 1 << 12) - rows[20].at(j)).abs() < 1e-8);
    }
    for n in [1usize, 2, 17, 50] {
        let m = 1 << 12;
        let h = 2.0 * PI / m as f64;
        let q: f64 = (0..m).map(|k| green_fourier(c, n, -PI + k as f64 * h).norm_sqr() * h).sum();
        assert!((q - rows[n].l2().powi(2)).abs() < 1e-8);
    }
    for n in [4usize, 5] {
        let v = green_fourier(c, n, 0.0);
        assert!((v.re - (1.0 + if n % 2 == 0 { -1.0 } else { 1.0 }) / (2.0 * (2.0 * PI).sqrt())).abs() < 1e-15);
    }
}

#[test]
fn chebyshev_forms() {
    for n in [1usize, 6, 7, 30] {
        let chk = chebyshev_form_check(-0.5, n, 257);
        assert!(chk.max_dev_corrected < 1e-12);
        assert!(!chk.as_printed_agrees);
    }
}

#[test]
fn transition_error_scales_like_n_minus_three_halves() {
    let c = -0.5;
    let mut scaled = Vec::new();
    for n in [2000usize, 4000] {
        let f = row(c, n);
        let j = (c.abs() * n as f64 / 2.0) as i64 + 1;
        let e = (f.at(j) - green_transition_predict(c, n, j).unwrap()).abs();
        scaled.push(e * (n as f64).powf(1.5));
    }
    assert!(scaled[0] / scaled[1] < 3.0 && scaled[1] / scaled[0] < 3.0, "{scaled:?}");
}

#[test]
fn front_errors_and_mask() {
    let c = -0.5;
    for n in [2000usize, 4000] {
        let f = row(c, n);
        let jf = (-c * n as f64) as i64;
        assert_eq!(green_front_predict(c, n, jf, GreenFront::Spurious).unwrap(), 0.0);
        let w = (0.5 * c * (c * c - 1.0) * n as f64).cbrt();
        let p = green_front_predict(c, n, jf + 1, GreenFront::Spurious).unwrap();
        let exact = f.at(jf + 1);
        assert!((exact - p).abs() * (n as f64).powf(2.0 / 3.0) < 0.1, "{exact} {p} {w}");
        let q = green_front_predict(c, n, -jf - 1, GreenFront::Physical).unwrap();
        assert!((f.at(-jf - 1) - q).abs() * (n as f64).powf(2.0 / 3.0) < 0.1);
    }
}

#[test]
fn l2_limit_and_energy_bound() {
    assert!((green_l2_limit(0.5).unwrap() - 0.759_835_685_651_592_4).abs() < 1e-12);
    for c in [0.25f64, -0.25, 0.5, -0.5, 0.9, -0.9] {
        let l = green_l2_limit(c).unwrap();
        assert!(2.0 * l * l <= (1.0 + c.abs()) / (1.0 - c.abs()));
        assert!((2.0 * l * l - 1.0 / (1.0 - c * c).sqrt()).abs() < 1e-12);
    }
    let lim = green_l2_limit(-0.5).unwrap();
    let k: Vec<f64> = [1000usize, 4000]
        .iter()
        .map(|&n| (green_l2_series(-0.5, n).unwrap() - lim).abs() * (n as f64).sqrt())
        .collect();
    assert!(k[0] < 1.0 && k[1] < 1.0, "{k:?}");
}

#[test]
fn saddle_points() {
    let sp = green_saddle_points(-0.5, 0.0).unwrap();
    assert!(sp.iter().all(|s| (s.xi.abs() - PI / 2.0).abs() < 1e-15));
    assert!(green_saddle_points(0.5, 0.8).unwrap().is_empty());
    assert!(green_saddle_points(0.5, 0.5).unwrap().iter().all(|s| s.degenerate));
}

#[test]
fn trace_series() {
    let c = -0.5;
    let t = trace_divergence(c, 20_000).unwrap();
    assert!((t.fitted_log_coeff - t.derived_log_coeff).abs() < 0.05 * t.derived_log_coeff);
    let (max, bound) = trace_companion_sums(c, 100_000).unwrap();
    assert!(max <= bound * (1.0 + 1e-12));
}
