//! Global quantities: the limit of the `l^2` norm, the first moments, and the `l^p` growth rate.

use std::f64::consts::PI;

use serde::Serialize;

use super::{leap_frog_courant, sign};
use crate::analysis::{boundary_determinant, kappa_s, leap_frog_branch_angle};
use crate::error::{invalid, Error, Result};
use crate::scheme::{BoundaryScheme, BulkScheme};
use crate::special::tanh_sinh;
use crate::C64;

/// Largest imaginary part tolerated in the `l^2` integral.
pub const L2_IMAG_TOL: f64 = 1e-6;
const L2_POLE_SCAN: usize = 4096;
const L2_POLE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct L2Asymptote {
    /// `lim_n ||eps^n||_2`.
    pub limit: f64,
    /// Imaginary part left over in `lim ||eps||^2`; zero up to quadrature error.
    pub imag_residual: f64,
    pub error_estimate: f64,
}

/// `sqrt(1 - sqrt(1 - C^2))`, the homogeneous-Dirichlet value.
pub fn dirichlet_l2_limit(courant: f64) -> f64 {
    (1.0 - (1.0 - courant * courant).sqrt()).sqrt()
}

/// `lim ||eps^n||_2^2 = (1/2pi) int_0^{2pi} C u (kappa_s + 1/kappa_s) / ((u^2 + 1) D(u) D(1/u)) d theta`
/// with `u = e^{i theta}`, folded onto `[0, pi]`.
pub fn l2_asymptote(boundary: &BoundaryScheme, bulk: &dyn BulkScheme) -> Result<L2Asymptote> {
    let c = leap_frog_courant(bulk)?;
    // A determinant zero on the circle makes the integrand non-integrable.
    for k in 0..=L2_POLE_SCAN {
        let u = C64::from_polar(1.0, PI * k as f64 / L2_POLE_SCAN as f64);
        let d = boundary_determinant(boundary, bulk, u)?.norm();
        if d < L2_POLE_TOL {
            return Err(Error::Numerical(format!(
                "boundary determinant vanishes near z = {u:.6} (|D| = {d:e}); the l2 norm has no finite limit"
            )));
        }
    }
    let integrand = |theta: f64| -> C64 {
        let one = |t: f64| -> C64 {
            let u = C64::from_polar(1.0, t);
            let (Ok(k), Ok(d), Ok(dc)) = (
                kappa_s(bulk, u),
                boundary_determinant(boundary, bulk, u),
                boundary_determinant(boundary, bulk, u.conj()),
            ) else {
                return C64::new(f64::NAN, 0.0);
            };
            c * u * (k + 1.0 / k) / ((u * u + 1.0) * d * dc)
        };
        one(theta) + one(-theta)
    };
    // On (theta_BP, pi - theta_BP) the weight is imaginary and odd under theta -> -theta, so the
    // folded integrand vanishes there; only the two arcs where it is real are integrated.
    let tb = leap_frog_branch_angle(c);
    let mut total = C64::new(0.0, 0.0);
    let mut err = 0.0;
    for (a, b) in [(0.0, tb), (PI - tb, PI)] {
        let q = tanh_sinh(&integrand, a, b, 1e-13);
        total += q.value;
        err += q.error_estimate;
    }
    let sq = total / (2.0 * PI);
    if sq.im.abs() > L2_IMAG_TOL {
        return Err(Error::Numerical(format!("l2 integral has imaginary part {:e}", sq.im)));
    }
    if !(sq.re >= 0.0) {
        return Err(Error::Numerical(format!("l2 integral is not a nonnegative real ({})", sq.re)));
    }
    Ok(L2Asymptote { limit: sq.re.sqrt(), imag_residual: sq.im.abs(), error_estimate: err / (2.0 * PI) })
}

fn denom(x: f64, what: &str) -> Result<f64> {
    if x.abs() < 1e-12 {
        return Err(Error::NotApplicable(format!("moment denominator {what} vanishes")));
    }
    Ok(x)
}

/// Large-`n` value of `sum_j eps_j^n` (`order = 0`), `sum_j (-1)^j eps_j^n` (`order = 0`,
/// `alternating`) or `sum_j j eps_j^n` (`order = 1`).
pub fn moment_asymptote(
    boundary: &BoundaryScheme,
    courant: f64,
    order: u32,
    alternating: bool,
    n: usize,
) -> Result<f64> {
    let c = courant;
    let sb = boundary.sum_b();
    let sbt = boundary.sum_bt();
    let s = denom(1.0 + sb - sbt, "1 + sum(b - bt)")?;
    match (order, alternating) {
        (0, false) => Ok(c * sign(n) / s),
        (0, true) => {
            let a =
                denom(boundary.alternating_sum_b() + boundary.alternating_sum_bt() - 1.0, "sum (-1)^k (b + bt) - 1")?;
            Ok(c / a)
        }
        (1, false) => {
            let k1 = boundary.first_moment_b() - boundary.first_moment_bt();
            let tail = c + (k1 + c * (2.0 * sbt - sb)) / s;
            Ok(-c * c * sign(n) * n as f64 / s + c * sign(n) / s * tail)
        }
        (1, true) => Err(Error::NotApplicable("no asymptote for the alternating first moment".into())),
        _ => Err(invalid(format!("moment order must be 0 or 1 (got {order})"))),
    }
}

/// Growth rate in `n` of `|sum_j j eps_j^n|`: `-C^2 / (1 + sum(b - bt))`.
pub fn first_moment_slope(boundary: &BoundaryScheme, courant: f64) -> Result<f64> {
    let s = denom(1.0 + boundary.sum_b() - boundary.sum_bt(), "1 + sum(b - bt)")?;
    Ok(-courant * courant / s)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LpExponent {
    pub p: f64,
    /// `||eps^n||_p ~ n^exponent`.
    pub exponent: f64,
    /// `"transition"`, `"front"` or `"tie"`.
    pub dominant: &'static str,
}

/// `max(1/p - 1/2, 1/(3p) - 1/3)` for `p` in `[1, inf]`.
pub fn lp_exponent(p: f64) -> Result<LpExponent> {
    if !(p >= 1.0) {
        return Err(invalid(format!("p must be >= 1 (got {p})")));
    }
    let q = if p.is_infinite() { 0.0 } else { 1.0 / p };
    let transition = q - 0.5;
    let front = q / 3.0 - 1.0 / 3.0;
    let dominant = if p == 4.0 {
        "tie"
    } else if p < 4.0 {
        "transition"
    } else {
        "front"
    };
    Ok(LpExponent { p, exponent: transition.max(front), dominant })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::LeapFrog;

    #[test]
    fn dirichlet_closed_form() {
        for c in [-0.25, -0.5, -0.75] {
            let bulk = LeapFrog::new(c).unwrap();
            let l = l2_asymptote(&BoundaryScheme::dirichlet(), &bulk).unwrap();
            assert!((l.limit - dirichlet_l2_limit(c)).abs() < 1e-8, "c={c}: {l:?} vs {}", dirichlet_l2_limit(c));
        }
    }

    #[test]
    fn lp_exponents() {
        assert_eq!(lp_exponent(2.0).unwrap().exponent, 0.0);
        assert_eq!(lp_exponent(4.0).unwrap().dominant, "tie");
        assert!((lp_exponent(4.0).unwrap().exponent + 0.25).abs() < 1e-15);
        assert_eq!(lp_exponent(f64::INFINITY).unwrap().exponent, -1.0 / 3.0);
        assert!(lp_exponent(0.5).is_err());
    }

    #[test]
    fn upwind_mass() {
        let b = BoundaryScheme::upwind(-0.5);
        assert!((moment_asymptote(&b, -0.5, 0, false, 10).unwrap() + 0.25).abs() < 1e-15);
    }
}
