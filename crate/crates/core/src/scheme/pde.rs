//! Leap-frog approximation of `u_t + a u_x = 0` on `[0, 1]` with `a = -1`.

use serde::Serialize;

use super::boundary::{BoundaryScheme, CornerScheme};
use super::bulk::Stencil;
use super::simulate::{ErrorField, Simulator};
use crate::error::{invalid, Result};

/// Transport velocity; negative, so `x = 0` is an outflow wall when `C < 0`.
pub const ADVECTION_SPEED: f64 = -1.0;

/// `exp(-50 (x - 1/10)^2)`.
pub fn gaussian_datum(x: f64) -> f64 {
    (-50.0 * (x - 0.1) * (x - 0.1)).exp()
}

#[derive(Clone, Debug, Serialize)]
pub struct PdeRun {
    pub dx: f64,
    pub dt: f64,
    pub n_final: usize,
    /// `u^0` and `u^{n_final}` on `j dx in [0, 1]`.
    pub u: Vec<ErrorField>,
    /// `e = u(t, x) - u_j^n` at the same times.
    pub e: Vec<ErrorField>,
}

impl PdeRun {
    /// `l^2(dx N)` norm of the final error restricted to `[0, 1]`.
    pub fn final_error_l2(&self) -> f64 {
        let e = self.e.last().expect("a run has a final row");
        (self.dx * e.values.iter().map(|v| v * v).sum::<f64>()).sqrt()
    }
}

/// Runs the scheme until the step closest to `t_final`.
///
/// The computational window extends `n_final` cells past `x = 1` and imposes
/// the exact solution in its last cell, which cannot influence `[0, 1]` in
/// `n_final` steps.
pub fn simulate_pde(
    boundary: &BoundaryScheme,
    corner: &CornerScheme,
    datum: &dyn Fn(f64) -> f64,
    dx: f64,
    courant: f64,
    t_final: f64,
) -> Result<PdeRun> {
    if !(dx > 0.0 && dx <= 0.5) {
        return Err(invalid(format!("dx must be in (0, 1/2] (got {dx})")));
    }
    if !(courant > -1.0 && courant < 0.0) {
        return Err(invalid(format!("the PDE run needs -1 < courant < 0 (got {courant})")));
    }
    if !(t_final >= 0.0) || !t_final.is_finite() {
        return Err(invalid("t_final must be finite and non-negative"));
    }
    // Re-validate: callers may have built the structs directly.
    let corner = CornerScheme::new(corner.c.clone(), corner.s_minus1, corner.s.clone())?;
    let boundary = BoundaryScheme::new(boundary.b.clone(), boundary.bt.clone())?;

    let a = ADVECTION_SPEED;
    let dt = courant * dx / a;
    let n_final = (t_final / dt).round() as usize;
    let j_unit = (1.0 / dx).round() as usize;
    let j_max = j_unit + n_final + boundary.width().max(corner.c.len()).max(corner.s.len()) + 2;
    let x = |j: usize| j as f64 * dx;
    let exact = |n: usize, j: usize| datum(x(j) - a * n as f64 * dt);

    let u0: Vec<f64> = (0..=j_max).map(|j| datum(x(j))).collect();
    let at = |j: isize| -> f64 {
        if j < 0 || j as usize > j_max {
            0.0
        } else {
            u0[j as usize]
        }
    };
    let mut u1 = vec![0.0; j_max + 1];
    u1[0] = corner.c.iter().enumerate().map(|(k, ck)| ck * at(k as isize)).sum();
    for (j, slot) in u1.iter_mut().enumerate().take(j_max).skip(1) {
        let mut v = corner.s_minus1 * at(j as isize - 1);
        for (k, sk) in corner.s.iter().enumerate() {
            v += sk * at(j as isize + k as isize);
        }
        *slot = v;
    }
    u1[j_max] = exact(1, j_max);

    let first = |row: &[f64], n: usize| -> (ErrorField, ErrorField) {
        let u: Vec<f64> = row[..=j_unit].to_vec();
        let e: Vec<f64> = u.iter().enumerate().map(|(j, v)| exact(n, j) - v).collect();
        (ErrorField::new(n, u).with_dx(dx), ErrorField::new(n, e).with_dx(dx))
    };
    let (u_start, e_start) = first(&u0, 0);

    let final_row = if n_final == 0 {
        u0.clone()
    } else {
        let mut sim =
            Simulator::with_rows(Stencil::leap_frog(courant), boundary.b.clone(), boundary.bt.clone(), u0, u1, 1)?;
        while sim.time_index() < n_final {
            let edge = exact(sim.time_index() + 1, j_max);
            sim.step_with_edge(edge);
        }
        sim.current().to_vec()
    };
    let (u_end, e_end) = first(&final_row, n_final);
    Ok(PdeRun { dx, dt, n_final, u: vec![u_start, u_end], e: vec![e_start, e_end] })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_datum_stays_zero() {
        let c = -0.5;
        let run =
            simulate_pde(&BoundaryScheme::upwind(c), &CornerScheme::lax_friedrichs(c), &|_| 0.0, 0.01, c, 0.5).unwrap();
        assert!(run.u.iter().chain(run.e.iter()).all(|f| f.values.iter().all(|v| *v == 0.0)));
    }

    #[test]
    fn first_row_samples_the_datum() {
        let c = -0.5;
        let dx = 0.01;
        let run =
            simulate_pde(&BoundaryScheme::upwind(c), &CornerScheme::lax_friedrichs(c), &gaussian_datum, dx, c, 0.1)
                .unwrap();
        for (j, v) in run.u[0].values.iter().enumerate() {
            assert_eq!(*v, gaussian_datum(j as f64 * dx));
        }
        assert_eq!(run.n_final, 20);
    }

    #[test]
    fn gaussian_slope_at_the_wall() {
        let h = 1e-6;
        let d = (gaussian_datum(h) - gaussian_datum(-h)) / (2.0 * h);
        assert!((d - 10.0 * (-0.5f64).exp()).abs() < 1e-6);
    }
}
