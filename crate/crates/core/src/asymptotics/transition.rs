//! `j = nu n` with `0 < nu < |C|`: two saddle points on the unit circle, `n^{-1/2}` decay.

use std::f64::consts::PI;

use super::{
    leap_frog_courant, residue_part, sign, Diagnostics, Mode, PredictContext, Prediction, PredictionZone, ZonePredictor,
};
use crate::analysis::{sigma_closed_form, transition_angles};
use crate::error::{Error, Result};
use crate::scheme::{BoundaryScheme, BulkScheme};
use crate::C64;

/// Closest `nu` may come to `0` or `|C|`.
pub const NU_MARGIN: f64 = 1e-3;

fn check_nu(c: f64, n: usize, j: usize) -> Result<f64> {
    let nu = j as f64 / n as f64;
    if !(nu >= NU_MARGIN && nu <= c.abs() - NU_MARGIN) {
        return Err(Error::NotApplicable(format!(
            "transition zone needs {NU_MARGIN} <= j/n <= |C| - {NU_MARGIN} (got j/n = {nu})"
        )));
    }
    Ok(nu)
}

/// `(G_R, G_L)` at `(theta, xi)`.
fn g_right_left(boundary: &BoundaryScheme, theta: f64, xi: f64) -> (C64, C64) {
    let e = |k: usize| C64::from_polar(1.0, -(k as f64) * xi);
    let mut alt = [C64::new(0.0, 0.0); 2];
    let mut plain = [C64::new(0.0, 0.0); 2];
    for (k, &x) in boundary.b.iter().enumerate() {
        alt[0] += sign(k) * x * e(k);
        plain[0] += x * e(k);
    }
    for (k, &x) in boundary.bt.iter().enumerate() {
        alt[1] += sign(k) * x * e(k);
        plain[1] += x * e(k);
    }
    let z = C64::from_polar(1.0, theta);
    let zi = z.conj();
    (z - alt[0] - zi * alt[1], z + plain[0] - zi * plain[1])
}

fn amplitude(sigma: C64, n: usize) -> f64 {
    (2.0 / (PI * sigma.norm())).sqrt() / (n as f64).sqrt()
}

/// The two upwind envelopes `(E1, E2)`; the prediction oscillates inside `max(|E1|, |E2|)`.
pub fn transition_envelopes(courant: f64, n: usize, j: usize) -> (f64, f64) {
    let c = courant;
    let nu = j as f64 / n as f64;
    let a = amplitude(sigma_closed_form(c, nu), n);
    let e1 = a / (nu - c) * ((1.0 - nu * nu) * (1.0 - c) / (1.0 + c)).sqrt();
    let e2 = a * (1.0 - nu) / (nu - c);
    (e1, e2)
}

/// The upwind-specialized transition formula.
pub fn transition_upwind(courant: f64, n: usize, j: usize) -> f64 {
    let c = courant;
    let nu = j as f64 / n as f64;
    let (theta, xi) = transition_angles(c, nu);
    let sigma = sigma_closed_form(c, nu);
    let phi = (n as f64 - 1.0) * theta - j as f64 * xi - 0.5 * sigma.arg();
    let s = ((1.0 - c * c) * (1.0 + nu) / (1.0 - nu)).sqrt();
    amplitude(sigma, n) * (sign(j) / (-(1.0 + c) + s) - sign(n) / ((1.0 + c) + s)) * phi.cos()
}

pub fn predict_transition(
    boundary: &BoundaryScheme,
    bulk: &dyn BulkScheme,
    n: usize,
    j: usize,
    mode: Mode,
) -> Result<Prediction> {
    let c = leap_frog_courant(bulk)?;
    if n == 0 {
        return Err(Error::NotApplicable("transition prediction needs n >= 1".into()));
    }
    let nu = check_nu(c, n, j)?;
    let (theta, xi) = transition_angles(c, nu);
    let sigma = sigma_closed_form(c, nu);
    let (gr, gl) = g_right_left(boundary, theta, xi);
    if gr.norm() < 1e-12 || gl.norm() < 1e-12 {
        return Err(Error::NotApplicable("transition denominator G_R or G_L vanishes".into()));
    }
    let phi = (n as f64 - 1.0) * theta - j as f64 * xi - 0.5 * sigma.arg();
    let (sj, sn) = (sign(j), sign(n));
    let rr = gr.norm_sqr();
    let ll = gl.norm_sqr();
    let re = gr.re / rr * sj - gl.re / ll * sn;
    let im = gr.im / rr * sj - gl.im / ll * sn;
    let tau = amplitude(sigma, n) * (phi.cos() * re + phi.sin() * im);

    let mut diagnostics = Diagnostics {
        gr: Some(gr),
        gl: Some(gl),
        sigma: Some(sigma),
        theta: Some(theta),
        xi: Some(xi),
        ..Default::default()
    };
    if boundary.approx_eq(&BoundaryScheme::upwind(c), 1e-14) {
        diagnostics.upwind_form = Some(transition_upwind(c, n, j));
        diagnostics.envelope = Some(transition_envelopes(c, n, j));
    }
    let (value, scale_exponent) = match mode {
        Mode::Stable => (tau, -0.5),
        Mode::Unstable => {
            let rp = residue_part(boundary, c, n)?;
            diagnostics.r = Some(rp * sign(n));
            diagnostics.tau = Some(tau);
            (rp + tau, 0.0)
        }
    };
    Ok(Prediction { zone: PredictionZone::Transition, n, j, value, scale_exponent, diagnostics })
}

#[derive(Clone, Copy, Debug, Default)]
pub struct TransitionPredictor;

impl ZonePredictor for TransitionPredictor {
    fn zone(&self) -> PredictionZone {
        PredictionZone::Transition
    }

    fn covers(&self, ctx: &PredictContext<'_>, n: usize, j: usize) -> bool {
        n > 0 && leap_frog_courant(ctx.bulk).is_ok_and(|c| check_nu(c, n, j).is_ok())
    }

    fn predict(&self, ctx: &PredictContext<'_>, n: usize, j: usize) -> Result<Prediction> {
        predict_transition(ctx.boundary, ctx.bulk, n, j, ctx.mode)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::LeapFrog;

    #[test]
    fn upwind_has_real_g_and_matches_special_form() {
        let c = -0.5;
        let bulk = LeapFrog::new(c).unwrap();
        let b = BoundaryScheme::upwind(c);
        for (n, j) in [(1000, 100), (1000, 250), (4001, 1700), (777, 3)] {
            let p = predict_transition(&b, &bulk, n, j, Mode::Stable).unwrap();
            let d = &p.diagnostics;
            let u = d.upwind_form.unwrap();
            let (e1, e2) = d.envelope.unwrap();
            let scale = (n as f64).powf(-0.5);
            assert!((p.value - u).abs() < 1e-12 * scale, "n={n} j={j}: {} vs {u}", p.value);
            assert!(p.value.abs() <= e1.abs().max(e2.abs()) * (1.0 + 1e-12));
        }
    }
}
