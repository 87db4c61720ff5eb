//! The phase function `f(z; nu) = log z + nu log kappa_s(z)`, the boundary
//! determinant `D(z)` and `g(z) = 1 / (2 pi i D(z))`, and the residue at `z = -1`.

use std::f64::consts::PI;

use serde::Serialize;

use super::kappa::{kappa_s_eval, CharPoly};
use crate::error::{invalid, Error, Result};
use crate::scheme::{BoundaryScheme, BulkScheme};
use crate::C64;

/// `|D(z)|` below this is reported as a pole of `g`.
pub const POLE_TOL: f64 = 1e-12;

/// Tolerance of the first identity of the simple-zero test.
pub const SIMPLE_ZERO_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseEval {
    pub f: C64,
    pub f1: C64,
    pub f2: C64,
    pub kappa: C64,
}

/// `f`, `f'`, `f''` at `z` (principal logarithms).
pub fn f_eval(bulk: &dyn BulkScheme, z: C64, nu: f64) -> Result<PhaseEval> {
    let poly = CharPoly::of(bulk);
    let k = kappa_s_eval(bulk, z)?.value;
    if k == C64::new(0.0, 0.0) {
        return Err(invalid("kappa_s(z) = 0: log undefined"));
    }
    let (k1, k2) = poly.root_derivatives(z, k);
    if !(k1.re.is_finite() && k1.im.is_finite() && k2.re.is_finite() && k2.im.is_finite()) {
        return Err(Error::NotApplicable(format!("z = {z} is a branch point of kappa_s")));
    }
    let f = z.ln() + nu * k.ln();
    let f1 = 1.0 / z + nu * k1 / k;
    let f2 = -1.0 / (z * z) + nu * (k2 * k - k1 * k1) / (k * k);
    Ok(PhaseEval { f, f1, f2, kappa: k })
}

fn sum_powers(coeffs: &[f64], k: C64) -> C64 {
    coeffs.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * k + c)
}

fn sum_powers_d(coeffs: &[f64], k: C64) -> C64 {
    // d/dk sum c_m k^m
    coeffs.iter().enumerate().skip(1).rev().fold(C64::new(0.0, 0.0), |acc, (m, c)| acc * k + m as f64 * c)
}

/// `D` as a function of `(z, kappa)`.
pub fn determinant_at(boundary: &BoundaryScheme, z: C64, k: C64) -> C64 {
    z * z - z * sum_powers(&boundary.b, k) - sum_powers(&boundary.bt, k)
}

/// `D(z) = z^2 - z sum b_k kappa_s^k - sum bt_k kappa_s^k`.
pub fn boundary_determinant(boundary: &BoundaryScheme, bulk: &dyn BulkScheme, z: C64) -> Result<C64> {
    let k = kappa_s_eval(bulk, z)?.value;
    Ok(determinant_at(boundary, z, k))
}

/// `D(z)` and `D'(z)`.
pub fn determinant_with_derivative(boundary: &BoundaryScheme, bulk: &dyn BulkScheme, z: C64) -> Result<(C64, C64)> {
    let k = kappa_s_eval(bulk, z)?.value;
    let (k1, _) = CharPoly::of(bulk).root_derivatives(z, k);
    let d = determinant_at(boundary, z, k);
    let sb = sum_powers(&boundary.b, k);
    let dsb = sum_powers_d(&boundary.b, k);
    let dsbt = sum_powers_d(&boundary.bt, k);
    let dd = 2.0 * z - sb - (z * dsb + dsbt) * k1;
    Ok((d, dd))
}

/// `g(z) = (2 pi i)^{-1} / D(z)`.
pub fn g_eval(boundary: &BoundaryScheme, bulk: &dyn BulkScheme, z: C64) -> Result<C64> {
    let d = boundary_determinant(boundary, bulk, z)?;
    if d.norm() < POLE_TOL {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    Ok(1.0 / (C64::new(0.0, 2.0 * PI) * d))
}

/// The two coefficient identities that make `z = -1` a simple zero of `D`
/// for the leap-frog bulk.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SimpleZeroCheck {
    /// `1 + sum b - sum bt = 0`.
    pub holds_first: bool,
    /// `2 + sum b + (1/C) sum k (b_k - bt_k) != 0`; only meaningful when the first holds.
    pub holds_second: bool,
    pub first_value: f64,
    pub second_value: f64,
}

pub fn check_simple_zero_minus_one(boundary: &BoundaryScheme, courant: f64) -> SimpleZeroCheck {
    let first_value = 1.0 + boundary.sum_b() - boundary.sum_bt();
    let second_value = 2.0 + boundary.sum_b() + (boundary.first_moment_b() - boundary.first_moment_bt()) / courant;
    let holds_first = first_value.abs() <= SIMPLE_ZERO_TOL;
    SimpleZeroCheck {
        holds_first,
        holds_second: holds_first && second_value.abs() > SIMPLE_ZERO_TOL,
        first_value,
        second_value,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ResidueValue {
    pub r: f64,
}

/// `R = -(2 + sum b + (1/C) sum k (b_k - bt_k))^{-1}`, the residue of `2 pi i g` at `z = -1`.
pub fn residue_r(boundary: &BoundaryScheme, courant: f64) -> Result<ResidueValue> {
    if courant == 0.0 || !courant.is_finite() {
        return Err(invalid("residue needs a non-zero Courant number"));
    }
    let chk = check_simple_zero_minus_one(boundary, courant);
    if !chk.holds_first {
        return Err(Error::ResidueUndefined(format!(
            "first identity fails: 1 + sum b - sum bt = {} (no zero at z = -1)",
            chk.first_value
        )));
    }
    if !chk.holds_second {
        return Err(Error::ResidueUndefined(format!(
            "second identity fails: 2 + sum b + (1/C) sum k (b_k - bt_k) = {} (zero is not simple)",
            chk.second_value
        )));
    }
    Ok(ResidueValue { r: -1.0 / chk.second_value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::LeapFrog;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn f_at_minus_one_is_i_pi() {
        let lf = LeapFrog::new(-0.5).unwrap();
        for nu in [0.0, 0.2, 0.7] {
            let p = f_eval(&lf, c(-1.0, 0.0), nu).unwrap();
            assert!((p.f - c(0.0, PI)).norm() < 1e-12);
        }
    }

    #[test]
    fn g_of_dirichlet_is_inverse_square() {
        let lf = LeapFrog::new(-0.5).unwrap();
        let g = g_eval(&BoundaryScheme::dirichlet(), &lf, c(2.0, 0.0)).unwrap();
        let want = 1.0 / (c(0.0, 2.0 * PI) * 4.0);
        assert!((g - want).norm() < 1e-15);
    }

    #[test]
    fn upwind_determinant_values() {
        let lf = LeapFrog::new(-0.5).unwrap();
        let up = BoundaryScheme::upwind(-0.5);
        assert!((boundary_determinant(&up, &lf, c(1.0, 0.0)).unwrap() - 1.0).norm() < 1e-12);
        assert!((boundary_determinant(&up, &lf, c(-1.0, 0.0)).unwrap() - 2.0).norm() < 1e-12);
    }

    #[test]
    fn extrapolated_boundary_has_pole_at_minus_one() {
        let lf = LeapFrog::new(-0.5).unwrap();
        let b = BoundaryScheme::extrapolated_leap_frog(-0.5);
        assert!(matches!(g_eval(&b, &lf, c(-1.0, 0.0)), Err(Error::Pole { .. })));
    }

    #[test]
    fn determinant_derivative_matches_difference() {
        let lf = LeapFrog::new(-0.4).unwrap();
        let b = BoundaryScheme::upwind_diffusive(-0.4, 0.3);
        let z = c(1.2, -0.7);
        let (_, dd) = determinant_with_derivative(&b, &lf, z).unwrap();
        let h = 1e-6;
        let fd =
            (boundary_determinant(&b, &lf, z + h).unwrap() - boundary_determinant(&b, &lf, z - h).unwrap()) / (2.0 * h);
        assert!((fd - dd).norm() < 1e-7);
    }

    #[test]
    fn residues_of_named_boundaries() {
        let c0 = -0.5;
        let r = residue_r(&BoundaryScheme::extrapolated_leap_frog(c0), c0).unwrap().r;
        assert!((r + 0.25).abs() < 1e-14);
        for cc in [-0.3, -0.7] {
            let r = residue_r(&BoundaryScheme::anti_bounce_back(cc), cc).unwrap().r;
            assert!((r + 1.0).abs() < 1e-14);
        }
        let e = residue_r(&BoundaryScheme::upwind(c0), c0).unwrap_err();
        assert!(e.to_string().contains("first identity"));
    }
}
