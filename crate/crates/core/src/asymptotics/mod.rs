//! Long-time predictors for the half-line error, zone by zone, plus the
//! `l^2` plateau, the moments and the `l^p` growth exponent.
//!
//! Each zone predictor implements [`ZonePredictor`] and is registered by name
//! in a [`PredictorRegistry`]; [`PredictorRegistry::select`] picks the zone
//! that owns a given `(n, j)`.

use serde::{Deserialize, Serialize};

use crate::analysis::residue_r;
use crate::error::{invalid, Error, Result};
use crate::scheme::{BoundaryScheme, BulkScheme};
use crate::C64;

mod front;
mod gaussian;
mod near_wall;
mod plateau;
mod transition;

pub use front::{predict_front, FrontPredictor};
pub use gaussian::{gaussian_variance, predict_gaussian, GaussianPredictor};
pub use near_wall::{near_wall_upwind, predict_near_wall, NearWallPredictor};
pub use plateau::{
    dirichlet_l2_limit, first_moment_slope, l2_asymptote, lp_exponent, moment_asymptote, L2Asymptote, LpExponent,
};
pub use transition::{predict_transition, transition_envelopes, transition_upwind, TransitionPredictor};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Stable,
    /// Simple determinant zero at `z = -1`: adds the residue term `(-1)^n R`.
    Unstable,
}

impl Mode {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "stable" => Ok(Mode::Stable),
            "unstable" => Ok(Mode::Unstable),
            _ => Err(invalid(format!("unknown mode `{s}` (stable or unstable)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PredictionZone {
    NearWall,
    Transition,
    Front,
    Gaussian,
}

impl PredictionZone {
    pub fn name(self) -> &'static str {
        match self {
            PredictionZone::NearWall => "near-wall",
            PredictionZone::Transition => "transition",
            PredictionZone::Front => "front",
            PredictionZone::Gaussian => "gaussian",
        }
    }

    /// Expected decay rate of `|eps - prediction|` in `n` for a stable boundary.
    pub fn error_exponent(self) -> f64 {
        match self {
            PredictionZone::NearWall => 2.5,
            PredictionZone::Transition => 1.5,
            PredictionZone::Front => 2.0 / 3.0,
            PredictionZone::Gaussian => 1.0,
        }
    }
}

/// Intermediate quantities of a prediction. Fields not used by a zone stay `None`.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Diagnostics {
    #[serde(serialize_with = "crate::cjson::opt", skip_serializing_if = "Option::is_none")]
    pub g0_plus: Option<C64>,
    #[serde(serialize_with = "crate::cjson::opt", skip_serializing_if = "Option::is_none")]
    pub g0_minus: Option<C64>,
    #[serde(serialize_with = "crate::cjson::opt", skip_serializing_if = "Option::is_none")]
    pub g1_plus: Option<C64>,
    #[serde(serialize_with = "crate::cjson::opt", skip_serializing_if = "Option::is_none")]
    pub g1_minus: Option<C64>,
    #[serde(serialize_with = "crate::cjson::opt", skip_serializing_if = "Option::is_none")]
    pub gr: Option<C64>,
    #[serde(serialize_with = "crate::cjson::opt", skip_serializing_if = "Option::is_none")]
    pub gl: Option<C64>,
    #[serde(serialize_with = "crate::cjson::opt", skip_serializing_if = "Option::is_none")]
    pub sigma: Option<C64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
    /// `j + C n` (front) or `j - C n` (Gaussian).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub envelope: Option<(f64, f64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<f64>,
    /// Value of the upwind-specialized formula, when the boundary is upwind.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upwind_form: Option<f64>,
    /// The bounded part `tau` in unstable mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<f64>,
    /// Scale `w` of the Airy variable, or the Gaussian standard deviation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub width: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Prediction {
    pub zone: PredictionZone,
    pub n: usize,
    pub j: usize,
    pub value: f64,
    pub scale_exponent: f64,
    pub diagnostics: Diagnostics,
}

pub(crate) fn sign(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `(-1)^n R` for unstable mode, with `R` stored in the diagnostics.
pub(crate) fn residue_part(boundary: &BoundaryScheme, courant: f64, n: usize) -> Result<f64> {
    Ok(sign(n) * residue_r(boundary, courant)?.r)
}

/// Everything a predictor needs besides `(n, j)`.
#[derive(Clone, Copy, Debug)]
pub struct PredictContext<'a> {
    pub boundary: &'a BoundaryScheme,
    pub bulk: &'a dyn BulkScheme,
    pub mode: Mode,
}

pub trait ZonePredictor: Send + Sync {
    fn zone(&self) -> PredictionZone;

    fn name(&self) -> &'static str {
        self.zone().name()
    }

    /// Does `(n, j)` lie where this predictor is meant to be used?
    fn covers(&self, ctx: &PredictContext<'_>, n: usize, j: usize) -> bool;

    fn predict(&self, ctx: &PredictContext<'_>, n: usize, j: usize) -> Result<Prediction>;
}

/// Name-indexed predictors, in selection priority order.
pub struct PredictorRegistry {
    entries: Vec<Box<dyn ZonePredictor>>,
}

impl PredictorRegistry {
    pub fn empty() -> Self {
        PredictorRegistry { entries: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(GaussianPredictor));
        r.register(Box::new(FrontPredictor::default()));
        r.register(Box::new(NearWallPredictor::default()));
        r.register(Box::new(TransitionPredictor));
        r
    }

    pub fn register(&mut self, p: Box<dyn ZonePredictor>) {
        self.entries.push(p);
    }

    pub fn get(&self, name: &str) -> Option<&dyn ZonePredictor> {
        let name = name.to_ascii_lowercase();
        self.entries.iter().rev().find(|p| p.name() == name).map(|p| p.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|p| p.name()).collect()
    }

    /// First registered predictor covering `(n, j)`.
    pub fn select(&self, ctx: &PredictContext<'_>, n: usize, j: usize) -> Option<&dyn ZonePredictor> {
        self.entries.iter().find(|p| p.covers(ctx, n, j)).map(|p| p.as_ref())
    }

    /// Prediction by the named zone, or by [`select`](Self::select) for `"auto"`.
    pub fn predict(&self, zone: &str, ctx: &PredictContext<'_>, n: usize, j: usize) -> Result<Prediction> {
        let p = if zone.eq_ignore_ascii_case("auto") {
            self.select(ctx, n, j)
                .ok_or_else(|| Error::NotApplicable(format!("no zone predictor covers (n, j) = ({n}, {j})")))?
        } else {
            self.get(zone)
                .ok_or_else(|| invalid(format!("unknown zone `{zone}` (known: auto, {})", self.names().join(", "))))?
        };
        p.predict(ctx, n, j)
    }
}

impl Default for PredictorRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

/// Courant number of a leap-frog bulk with outflow at the wall.
pub(crate) fn leap_frog_courant(bulk: &dyn BulkScheme) -> Result<f64> {
    if bulk.kind() != crate::scheme::BulkKind::LeapFrog {
        return Err(Error::NotApplicable(format!("this predictor needs the leapfrog bulk (got {})", bulk.kind())));
    }
    let c = bulk.courant();
    if !(c < 0.0 && c > -1.0) {
        return Err(Error::NotApplicable(format!("this predictor needs -1 < C < 0 (got {c})")));
    }
    Ok(c)
}
