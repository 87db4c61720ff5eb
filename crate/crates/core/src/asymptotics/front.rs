//! `j + C n = O(n^{1/3})`: the saddle points coalesce at `z = +-1`, giving an Airy profile.

use super::{
    leap_frog_courant, residue_part, sign, Diagnostics, Mode, PredictContext, Prediction, PredictionZone, ZonePredictor,
};
use crate::error::{Error, Result};
use crate::scheme::{BoundaryScheme, BulkScheme};
use crate::special::{airy_ai, airy_primitive, AIRY_RANGE};

/// The zone is `|j + C n| <= FRONT_WIDTH n^{1/3}`.
pub const FRONT_WIDTH: f64 = 10.0;

/// `w = ((C/2)(C^2 - 1) n)^{1/3}`.
pub fn front_scale(courant: f64, n: usize) -> f64 {
    (0.5 * courant * (courant * courant - 1.0) * n as f64).cbrt()
}

pub fn predict_front(
    boundary: &BoundaryScheme,
    bulk: &dyn BulkScheme,
    n: usize,
    j: usize,
    mode: Mode,
) -> Result<Prediction> {
    let c = leap_frog_courant(bulk)?;
    if n == 0 {
        return Err(Error::NotApplicable("front prediction needs n >= 1".into()));
    }
    let w = front_scale(c, n);
    let delta = j as f64 + c * n as f64;
    let x = delta / w;
    let mut diagnostics = Diagnostics { offset: Some(delta), width: Some(w), ..Default::default() };
    let (value, scale_exponent) = match mode {
        Mode::Stable => {
            let right = 1.0 + boundary.sum_b() - boundary.sum_bt();
            let left = 1.0 - boundary.alternating_sum_b() - boundary.alternating_sum_bt();
            if right.abs() < 1e-12 || left.abs() < 1e-12 {
                return Err(Error::NotApplicable(
                    "front denominator vanishes; the boundary has a determinant zero at z = +-1".into(),
                ));
            }
            let ai = if x > AIRY_RANGE { 0.0 } else { airy_ai(x)? };
            (c * (sign(n) / right - sign(j) / left) * ai / w, -1.0 / 3.0)
        }
        Mode::Unstable => {
            let rp = residue_part(boundary, c, n)?;
            diagnostics.r = Some(rp * sign(n));
            (rp * (1.0 / 3.0 - airy_primitive(x)?), 0.0)
        }
    };
    Ok(Prediction { zone: PredictionZone::Front, n, j, value, scale_exponent, diagnostics })
}

#[derive(Clone, Copy, Debug)]
pub struct FrontPredictor {
    pub width: f64,
}

impl Default for FrontPredictor {
    fn default() -> Self {
        FrontPredictor { width: FRONT_WIDTH }
    }
}

impl ZonePredictor for FrontPredictor {
    fn zone(&self) -> PredictionZone {
        PredictionZone::Front
    }

    fn covers(&self, ctx: &PredictContext<'_>, n: usize, j: usize) -> bool {
        n > 0
            && leap_frog_courant(ctx.bulk)
                .is_ok_and(|c| (j as f64 + c * n as f64).abs() <= self.width * (n as f64).cbrt())
    }

    fn predict(&self, ctx: &PredictContext<'_>, n: usize, j: usize) -> Result<Prediction> {
        predict_front(ctx.boundary, ctx.bulk, n, j, ctx.mode)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::LeapFrog;

    #[test]
    fn unstable_front_at_zero_offset() {
        let c = -0.5;
        let bulk = LeapFrog::new(c).unwrap();
        let b = BoundaryScheme::extrapolated_leap_frog(c);
        for n in [1000usize, 1002] {
            let p = predict_front(&b, &bulk, n, n / 2, Mode::Unstable).unwrap();
            let want = sign(n + 1) / 12.0;
            assert!((p.value - want).abs() < 1e-14, "{} vs {want}", p.value);
        }
    }
}
