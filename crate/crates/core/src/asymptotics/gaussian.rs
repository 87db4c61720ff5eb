//! Dissipative bulk: a Gaussian bump travelling at speed `C` whose variance grows like `n`.

use std::f64::consts::PI;

use super::{sign, Diagnostics, PredictContext, Prediction, PredictionZone, ZonePredictor};
use crate::error::{invalid, Error, Result};
use crate::scheme::{BoundaryScheme, BulkKind, BulkScheme};

/// The zone is `|j - C n| <= GAUSSIAN_WIDTH sqrt(n)`.
pub const GAUSSIAN_WIDTH: f64 = 10.0;

/// `2 n (1/omega - 1/2)(1 - C^2)`.
pub fn gaussian_variance(courant: f64, omega: f64, n: usize) -> f64 {
    2.0 * n as f64 * (1.0 / omega - 0.5) * (1.0 - courant * courant)
}

fn dissipative_params(bulk: &dyn BulkScheme) -> Result<(f64, f64)> {
    if bulk.kind() != BulkKind::Dissipative {
        return Err(Error::NotApplicable(format!(
            "the Gaussian predictor needs the dissipative bulk (got {})",
            bulk.kind()
        )));
    }
    let omega = bulk.omega().ok_or_else(|| invalid("dissipative bulk without omega"))?;
    Ok((bulk.courant(), omega))
}

pub fn predict_gaussian(boundary: &BoundaryScheme, bulk: &dyn BulkScheme, n: usize, j: usize) -> Result<Prediction> {
    let (c, omega) = dissipative_params(bulk)?;
    if n == 0 {
        return Err(Error::NotApplicable("Gaussian prediction needs n >= 1".into()));
    }
    let var = gaussian_variance(c, omega, n);
    if !(var > 0.0) {
        return Err(Error::NotApplicable(format!("no diffusion at omega = {omega}, C = {c}")));
    }
    let right = 1.0 - boundary.sum_b() - boundary.sum_bt();
    let left = 1.0 + boundary.alternating_sum_b() - boundary.alternating_sum_bt();
    if right.abs() < 1e-12 || left.abs() < 1e-12 {
        return Err(Error::NotApplicable(
            "Gaussian amplitude denominator vanishes; the boundary has a determinant zero at z = +-1".into(),
        ));
    }
    let offset = j as f64 - c * n as f64;
    let density = (-offset * offset / (2.0 * var)).exp() / (2.0 * PI * var).sqrt();
    let value = c * (1.0 / right - sign(n + j) / left) * density;
    Ok(Prediction {
        zone: PredictionZone::Gaussian,
        n,
        j,
        value,
        scale_exponent: -0.5,
        diagnostics: Diagnostics { offset: Some(offset), width: Some(var.sqrt()), ..Default::default() },
    })
}

#[derive(Clone, Copy, Debug, Default)]
pub struct GaussianPredictor;

impl ZonePredictor for GaussianPredictor {
    fn zone(&self) -> PredictionZone {
        PredictionZone::Gaussian
    }

    fn covers(&self, ctx: &PredictContext<'_>, n: usize, j: usize) -> bool {
        n > 0
            && dissipative_params(ctx.bulk)
                .is_ok_and(|(c, _)| (j as f64 - c * n as f64).abs() <= GAUSSIAN_WIDTH * (n as f64).sqrt())
    }

    fn predict(&self, ctx: &PredictContext<'_>, n: usize, j: usize) -> Result<Prediction> {
        predict_gaussian(ctx.boundary, ctx.bulk, n, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::Dissipative;

    #[test]
    fn width_and_dirichlet_bracket() {
        let bulk = Dissipative::new(0.5, 1.5).unwrap();
        let b = BoundaryScheme::dirichlet();
        let p = predict_gaussian(&b, &bulk, 10_000, 5000).unwrap();
        assert!((p.diagnostics.width.unwrap() - 50.0).abs() < 1e-12);
        let peak = 1.0 / (2.0 * PI * 2500.0f64).sqrt();
        // bracket C (1 - (-1)^{n+j}) vanishes for n + j even
        assert!(p.value.abs() < 1e-15);
        let p = predict_gaussian(&b, &bulk, 10_000, 5001).unwrap();
        let want = 0.5 * 2.0 * peak * (-1.0 / 5000.0f64).exp();
        assert!((p.value - want).abs() < 1e-15);
    }

    #[test]
    fn upwind_zero_denominator_is_rejected() {
        let c = 0.5;
        let bulk = Dissipative::new(c, 1.5).unwrap();
        assert!(predict_gaussian(&BoundaryScheme::upwind(c), &bulk, 100, 50).is_err());
    }
}
