//! Fixed `j`, `n -> inf`: the branch point dominates and the error decays like `n^{-3/2}`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use super::{
    leap_frog_courant, residue_part, sign, Diagnostics, Mode, PredictContext, Prediction, PredictionZone, ZonePredictor,
};
use crate::analysis::leap_frog_branch_angle;
use crate::error::{Error, Result};
use crate::scheme::{BoundaryScheme, BulkScheme};
use crate::C64;

/// `(sum_k b_k (-i)^k, sum_k bt_k (-i)^k)` and the same weighted by `k`.
fn quarter_sums(boundary: &BoundaryScheme) -> ([C64; 2], [C64; 2]) {
    let rot = |k: usize| C64::new(0.0, -1.0).powu(k as u32);
    let mut s = [C64::new(0.0, 0.0); 2];
    let mut s1 = [C64::new(0.0, 0.0); 2];
    for (k, &x) in boundary.b.iter().enumerate() {
        s[0] += x * rot(k);
        s1[0] += k as f64 * x * rot(k);
    }
    for (k, &x) in boundary.bt.iter().enumerate() {
        s[1] += x * rot(k);
        s1[1] += k as f64 * x * rot(k);
    }
    (s, s1)
}

/// `G^0_{+-}(theta)` and `G^1_{+-}(theta)`.
fn g_pair(sums: &[C64; 2], theta: f64, plus: bool) -> C64 {
    let pm = if plus { 1.0 } else { -1.0 };
    C64::from_polar(1.0, theta) * sums[0] + pm * C64::from_polar(1.0, 2.0 * theta) * sums[1]
}

fn nonzero(d: C64, what: &str) -> Result<C64> {
    if d.norm() < 1e-12 {
        return Err(Error::NotApplicable(format!("near-wall denominator {what} vanishes")));
    }
    Ok(d)
}

/// The upwind-specialized near-wall formula.
pub fn near_wall_upwind(courant: f64, n: usize, j: usize) -> f64 {
    let c = courant;
    let theta = leap_frog_branch_angle(c);
    let pre = (2.0 / (PI * c.abs())).sqrt() * (1.0 - c * c).powf(0.25);
    let sm = (1.0 - c).sqrt() - (1.0 + c).sqrt();
    let sp = (1.0 - c).sqrt() + (1.0 + c).sqrt();
    let s = -sign(n + j);
    let nf = n as f64;
    let jf = j as f64;
    let phase = theta * nf + jf * FRAC_PI_2 - FRAC_PI_4;
    let first = c / (1.0 + c) * (1.0 / (sm * sm) + s / (sp * sp)) * phase.sin();
    let second = jf / (1.0 + c).sqrt() * (1.0 / sm + s / sp) * phase.cos();
    pre * (first + second) * nf.powf(-1.5)
}

/// Near-wall prediction for the leap-frog bulk.
pub fn predict_near_wall(
    boundary: &BoundaryScheme,
    bulk: &dyn BulkScheme,
    n: usize,
    j: usize,
    mode: Mode,
) -> Result<Prediction> {
    let c = leap_frog_courant(bulk)?;
    if n == 0 {
        return Err(Error::NotApplicable("near-wall prediction needs n >= 1".into()));
    }
    let theta = leap_frog_branch_angle(c);
    let (s, s1) = quarter_sums(boundary);
    let g0p = g_pair(&s, theta, true);
    let g1p = g_pair(&s1, theta, true);
    let g0m = g_pair(&s, -theta, false);
    let g1m = g_pair(&s1, -theta, false);
    let nf = n as f64;
    let jf = j as f64;
    let dp = nonzero(1.0 - g0p, "1 - G0+")?;
    let dm = nonzero(1.0 + g0m, "1 + G0-")?;
    let ph1 = (1.0 - nf) * theta + (1.0 - jf) * FRAC_PI_2 - FRAC_PI_4;
    let t1 = (C64::from_polar(1.0, ph1) / dp * (g1p / dp + jf)).re;
    let ph2 = (nf - 1.0) * theta + (1.0 - jf) * FRAC_PI_2 + FRAC_PI_4;
    let t2 = sign(n) * (C64::from_polar(1.0, ph2) / dm * (-g1m / dm + jf)).re;
    let pre = (2.0 / (PI * c.abs())).sqrt() * (1.0 - c * c).powf(0.25);
    let tau = pre * (t1 + t2) * nf.powf(-1.5);

    let mut diagnostics = Diagnostics {
        g0_plus: Some(g0p),
        g0_minus: Some(g0m),
        g1_plus: Some(g1p),
        g1_minus: Some(g1m),
        theta: Some(theta),
        ..Default::default()
    };
    if boundary.approx_eq(&BoundaryScheme::upwind(c), 1e-14) {
        diagnostics.upwind_form = Some(near_wall_upwind(c, n, j));
    }
    let (value, scale_exponent) = match mode {
        Mode::Stable => (tau, -1.5),
        Mode::Unstable => {
            let rp = residue_part(boundary, c, n)?;
            diagnostics.r = Some(rp * sign(n));
            diagnostics.tau = Some(tau);
            (rp + tau, 0.0)
        }
    };
    Ok(Prediction { zone: PredictionZone::NearWall, n, j, value, scale_exponent, diagnostics })
}

/// Covers `j <= max_j` with `j` well behind the front.
#[derive(Clone, Copy, Debug)]
pub struct NearWallPredictor {
    pub max_j: usize,
}

impl Default for NearWallPredictor {
    fn default() -> Self {
        NearWallPredictor { max_j: 16 }
    }
}

impl ZonePredictor for NearWallPredictor {
    fn zone(&self) -> PredictionZone {
        PredictionZone::NearWall
    }

    fn covers(&self, ctx: &PredictContext<'_>, n: usize, j: usize) -> bool {
        leap_frog_courant(ctx.bulk).is_ok_and(|c| j <= self.max_j && (j as f64) < 0.25 * c.abs() * n as f64)
    }

    fn predict(&self, ctx: &PredictContext<'_>, n: usize, j: usize) -> Result<Prediction> {
        predict_near_wall(ctx.boundary, ctx.bulk, n, j, ctx.mode)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::LeapFrog;

    #[test]
    fn general_formula_matches_upwind_form() {
        for c in [-0.25, -0.5, -0.75, -0.9] {
            let bulk = LeapFrog::new(c).unwrap();
            let b = BoundaryScheme::upwind(c);
            for n in [1, 7, 100, 1001] {
                for j in 0..6 {
                    let p = predict_near_wall(&b, &bulk, n, j, Mode::Stable).unwrap();
                    let u = p.diagnostics.upwind_form.unwrap();
                    let scale = u.abs().max((n as f64).powf(-1.5));
                    assert!((p.value - u).abs() <= 1e-12 * scale, "c={c} n={n} j={j}: {} vs {u}", p.value);
                }
            }
        }
    }
}
