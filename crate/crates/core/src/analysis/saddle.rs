//! Saddle points of `f(z; nu)` and the zone they select.

use serde::{Deserialize, Serialize};

use super::phase::f_eval;
use crate::error::{invalid, Error, Result};
use crate::scheme::{BulkKind, BulkScheme};
use crate::C64;

/// `|nu - |C||` below this is the front.
pub const FRONT_TOL: f64 = 1e-12;

/// Largest `|f'|` accepted at a reported saddle point.
pub const SADDLE_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Zone {
    NearWall,
    Transition,
    Front,
    AheadOfFront,
}

impl Zone {
    pub fn name(self) -> &'static str {
        match self {
            Zone::NearWall => "near-wall",
            Zone::Transition => "transition",
            Zone::Front => "front",
            Zone::AheadOfFront => "ahead-of-front",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SaddlePointSet {
    pub nu: f64,
    pub zone: Zone,
    pub theta_sp: Option<f64>,
    pub xi_sp: Option<f64>,
    #[serde(serialize_with = "crate::cjson::many")]
    pub points: Vec<C64>,
    #[serde(serialize_with = "crate::cjson::many")]
    pub kappa_at_points: Vec<C64>,
    /// `sigma`: `f''` at the first listed point.
    #[serde(serialize_with = "crate::cjson::one")]
    pub second_derivative: C64,
    #[serde(serialize_with = "crate::cjson::many")]
    pub second_derivatives: Vec<C64>,
    pub degenerate: bool,
    /// Roots of the saddle equation inside the unit disk, where `kappa_s` is undefined.
    #[serde(serialize_with = "crate::cjson::many")]
    pub interior_points: Vec<C64>,
}

/// The diagnostic record `{nu, zone, theta_sp, xi_sp, sigma_re, sigma_im}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SaddleRecord {
    pub nu: f64,
    pub zone: Zone,
    pub theta_sp: Option<f64>,
    pub xi_sp: Option<f64>,
    pub sigma_re: f64,
    pub sigma_im: f64,
}

impl SaddlePointSet {
    pub fn record(&self) -> SaddleRecord {
        SaddleRecord {
            nu: self.nu,
            zone: self.zone,
            theta_sp: self.theta_sp,
            xi_sp: self.xi_sp,
            sigma_re: self.second_derivative.re,
            sigma_im: self.second_derivative.im,
        }
    }
}

/// `(theta_SP, xi_SP)` for leap-frog in the transition zone.
pub fn transition_angles(courant: f64, nu: f64) -> (f64, f64) {
    let c2 = courant * courant;
    let nu2 = nu * nu;
    let theta = 0.5 * ((1.0 + nu2 - 2.0 * c2) / (1.0 - nu2)).clamp(-1.0, 1.0).acos();
    let xi = (-(nu / courant) * ((1.0 - c2) / (1.0 - nu2)).sqrt()).clamp(-1.0, 1.0).acos();
    (theta, xi)
}

/// Closed form of `f''(e^{i theta_SP}; nu)` for leap-frog.
pub fn sigma_closed_form(courant: f64, nu: f64) -> C64 {
    let (t, xi) = transition_angles(courant, nu);
    let c2m = 2.0 * courant * courant - 1.0;
    let s3 = ((1.0 - courant * courant) / (1.0 - nu * nu)).powf(1.5);
    let e = |k: f64| C64::from_polar(1.0, k * t);
    let first = -(1.0 + 1.0 / nu) * e(-2.0);
    let bracket = c2m * e(6.0) + 3.0 * e(4.0) + 3.0 * c2m * e(2.0) + 1.0 + 8.0 * nu.powi(3) * e(3.0) * s3;
    let num = C64::from_polar(1.0, xi - 6.0 * t) * bracket;
    first - num / (8.0 * courant * nu * nu * s3)
}

/// `kappa` at a saddle point `z`: `2 C z / ((1 + nu) z^2 - (1 - nu))`.
pub fn leap_frog_saddle_kappa(courant: f64, nu: f64, z: C64) -> C64 {
    2.0 * courant * z / ((1.0 + nu) * z * z - (1.0 - nu))
}

/// The four real roots of `(1 - nu^2) w^2 + 2 (2 C^2 - 1 - nu^2) w + (1 - nu^2) = 0`, `w = z^2`,
/// ahead of the front; empty at `nu = 1`. The two `w` are reciprocal.
pub fn ahead_of_front_roots(courant: f64, nu: f64) -> Vec<C64> {
    let c2 = courant * courant;
    let nu2 = nu * nu;
    if (nu2 - 1.0).abs() < 1e-15 {
        return Vec::new();
    }
    let s = 2.0 * ((c2 - 1.0) * (c2 - nu2)).max(0.0).sqrt();
    let mut out = Vec::with_capacity(4);
    for beta in [1.0, -1.0] {
        let w = C64::new((2.0 * c2 - nu2 - 1.0 - beta * s) / (nu2 - 1.0), 0.0);
        let r = w.sqrt();
        out.push(r);
        out.push(-r);
    }
    out
}

fn require_nu(nu: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&nu) {
        return Err(invalid(format!("nu must lie in [0, 1] (got {nu})")));
    }
    Ok(())
}

fn near_wall(nu: f64) -> SaddlePointSet {
    SaddlePointSet {
        nu,
        zone: Zone::NearWall,
        theta_sp: None,
        xi_sp: None,
        points: Vec::new(),
        kappa_at_points: Vec::new(),
        second_derivative: C64::new(0.0, 0.0),
        second_derivatives: Vec::new(),
        degenerate: false,
        interior_points: Vec::new(),
    }
}

fn leap_frog_saddles(bulk: &dyn BulkScheme, nu: f64) -> Result<SaddlePointSet> {
    let c = bulk.courant();
    if c >= 0.0 {
        return Err(Error::NotApplicable("saddle analysis needs an outflow leap-frog (C < 0)".into()));
    }
    let ac = c.abs();
    if nu == 0.0 {
        return Ok(near_wall(nu));
    }
    let mut points = Vec::new();
    let mut kappas = Vec::new();
    let mut f2s = Vec::new();
    let mut off = Vec::new();
    let (zone, theta, xi, sigma, degenerate) = if (nu - ac).abs() <= FRONT_TOL {
        for z in [C64::new(1.0, 0.0), C64::new(-1.0, 0.0)] {
            let p = f_eval(bulk, z, nu)?;
            points.push(z);
            kappas.push(p.kappa);
            f2s.push(p.f2);
        }
        (Zone::Front, None, None, C64::new(0.0, 0.0), true)
    } else if nu < ac {
        let (t, x) = transition_angles(c, nu);
        for z in [
            C64::from_polar(1.0, t),
            C64::from_polar(1.0, -t),
            C64::from_polar(1.0, t - std::f64::consts::PI),
            C64::from_polar(1.0, std::f64::consts::PI - t),
        ] {
            let p = f_eval(bulk, z, nu)?;
            points.push(z);
            kappas.push(p.kappa);
            f2s.push(p.f2);
        }
        (Zone::Transition, Some(t), Some(x), sigma_closed_form(c, nu), false)
    } else {
        for z in ahead_of_front_roots(c, nu) {
            if z.norm() > 1.0 {
                let p = f_eval(bulk, z, nu)?;
                if p.f1.norm() > SADDLE_TOL {
                    return Err(Error::Numerical(format!("|f'| = {} at the saddle point {z}", p.f1.norm())));
                }
                points.push(z);
                kappas.push(p.kappa);
                f2s.push(p.f2);
            } else {
                off.push(z);
            }
        }
        let sigma = f2s.first().copied().unwrap_or(C64::new(0.0, 0.0));
        (Zone::AheadOfFront, None, None, sigma, false)
    };
    Ok(SaddlePointSet {
        nu,
        zone,
        theta_sp: theta,
        xi_sp: xi,
        points,
        kappa_at_points: kappas,
        second_derivative: sigma,
        second_derivatives: f2s,
        degenerate,
        interior_points: off,
    })
}

/// Dissipative bulks: only the wall and the Gaussian peak at `nu = C` are tracked.
fn dissipative_saddles(bulk: &dyn BulkScheme, nu: f64) -> Result<SaddlePointSet> {
    let c = bulk.courant();
    if nu == 0.0 {
        return Ok(near_wall(nu));
    }
    if (nu - c).abs() > FRONT_TOL {
        return Err(Error::NotApplicable(format!(
            "for the {} scheme only nu = 0 and nu = C = {c} are classified",
            bulk.name()
        )));
    }
    let mut points = Vec::new();
    let mut kappas = Vec::new();
    let mut f2s = Vec::new();
    for z in [C64::new(1.0, 0.0), C64::new(-1.0, 0.0)] {
        let p = f_eval(bulk, z, nu)?;
        points.push(z);
        kappas.push(p.kappa);
        f2s.push(p.f2);
    }
    Ok(SaddlePointSet {
        nu,
        zone: Zone::Front,
        theta_sp: None,
        xi_sp: None,
        points,
        kappa_at_points: kappas,
        second_derivative: f2s[0],
        second_derivatives: f2s,
        degenerate: false,
        interior_points: Vec::new(),
    })
}

pub fn saddle_points(bulk: &dyn BulkScheme, nu: f64) -> Result<SaddlePointSet> {
    require_nu(nu)?;
    match bulk.kind() {
        BulkKind::LeapFrog => leap_frog_saddles(bulk, nu),
        BulkKind::Dissipative | BulkKind::ManufacturedDissipative => dissipative_saddles(bulk, nu),
    }
}

/// Zone of `nu` for a leap-frog bulk, without computing saddle data.
pub fn zone_of(courant: f64, nu: f64) -> Zone {
    let ac = courant.abs();
    if nu == 0.0 {
        Zone::NearWall
    } else if (nu - ac).abs() <= FRONT_TOL {
        Zone::Front
    } else if nu < ac {
        Zone::Transition
    } else {
        Zone::AheadOfFront
    }
}
