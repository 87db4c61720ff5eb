//! Boundary rows at `j = 0`, corner (start-up) rows, and the JSON scheme file.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Longest coefficient sequence accepted anywhere.
pub const MAX_SUPPORT: usize = 64;

/// `e_0^{n+1} = sum_k b[k] e_k^n + sum_k bt[k] e_k^{n-1}`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BoundaryScheme {
    #[serde(default)]
    pub b: Vec<f64>,
    #[serde(default)]
    pub bt: Vec<f64>,
}

fn check_seq(name: &'static str, v: &[f64]) -> Result<()> {
    if v.len() > MAX_SUPPORT {
        return Err(Error::SupportTooLong { name, len: v.len(), max: MAX_SUPPORT });
    }
    if let Some(x) = v.iter().find(|x| !x.is_finite()) {
        return Err(invalid(format!("coefficient sequence `{name}` contains {x}")));
    }
    Ok(())
}

fn trim(mut v: Vec<f64>) -> Vec<f64> {
    while v.last() == Some(&0.0) {
        v.pop();
    }
    v
}

impl BoundaryScheme {
    pub fn new(b: Vec<f64>, bt: Vec<f64>) -> Result<Self> {
        check_seq("b", &b)?;
        check_seq("bt", &bt)?;
        Ok(BoundaryScheme { b: trim(b), bt: trim(bt) })
    }

    pub fn dirichlet() -> Self {
        BoundaryScheme::default()
    }

    /// First-order upwind extrapolation: `b = (1 + C, -C)`.
    pub fn upwind(courant: f64) -> Self {
        BoundaryScheme { b: vec![1.0 + courant, -courant], bt: vec![] }
    }

    /// Upwind plus a second difference of strength `delta` on the old level.
    pub fn upwind_diffusive(courant: f64, delta: f64) -> Self {
        let h = 0.5 * delta * courant;
        BoundaryScheme { b: vec![1.0 + courant, -courant], bt: vec![h, -delta * courant, h] }
    }

    /// Leap-frog row closed by a linear ghost extrapolation; has a simple
    /// determinant zero at `z = -1`.
    pub fn extrapolated_leap_frog(courant: f64) -> Self {
        let a = 1.0 + 2.0 * courant;
        BoundaryScheme { b: vec![a, -a], bt: vec![0.0, 1.0] }
    }

    /// `b = (C, -C)`, `bt = (1)`; simple determinant zero at `z = -1`.
    pub fn anti_bounce_back(courant: f64) -> Self {
        BoundaryScheme { b: vec![courant, -courant], bt: vec![1.0] }
    }

    /// `b0 = 2 sqrt((1 - C^2) / (1 - nubar^2))`, `bt0 = -1`: the determinant is
    /// `z^2 - b0 z + 1`, whose zeros sit on the unit circle at the transition
    /// saddle points of group velocity `nubar`.
    pub fn resonant(courant: f64, nubar: f64) -> Result<Self> {
        if !(nubar.abs() < 1.0) || !(courant.abs() < 1.0) {
            return Err(invalid("resonant boundary needs |courant| < 1 and |nubar| < 1"));
        }
        let b0 = 2.0 * ((1.0 - courant * courant) / (1.0 - nubar * nubar)).sqrt();
        Ok(BoundaryScheme { b: vec![b0], bt: vec![-1.0] })
    }

    pub fn b_at(&self, k: usize) -> f64 {
        self.b.get(k).copied().unwrap_or(0.0)
    }

    pub fn bt_at(&self, k: usize) -> f64 {
        self.bt.get(k).copied().unwrap_or(0.0)
    }

    /// Number of cells the boundary row reads.
    pub fn width(&self) -> usize {
        self.b.len().max(self.bt.len())
    }

    pub fn sum_b(&self) -> f64 {
        self.b.iter().sum()
    }

    pub fn sum_bt(&self) -> f64 {
        self.bt.iter().sum()
    }

    pub fn first_moment_b(&self) -> f64 {
        self.b.iter().enumerate().map(|(k, x)| k as f64 * x).sum()
    }

    pub fn first_moment_bt(&self) -> f64 {
        self.bt.iter().enumerate().map(|(k, x)| k as f64 * x).sum()
    }

    pub fn alternating_sum_b(&self) -> f64 {
        self.b.iter().enumerate().map(|(k, x)| if k % 2 == 0 { *x } else { -x }).sum()
    }

    pub fn alternating_sum_bt(&self) -> f64 {
        self.bt.iter().enumerate().map(|(k, x)| if k % 2 == 0 { *x } else { -x }).sum()
    }

    /// Consistency of the boundary row as an approximation of the transport equation.
    pub fn order_report(&self, courant: f64) -> BoundaryOrderReport {
        let zeroth = self.sum_b() + self.sum_bt();
        let first = self.first_moment_b() + self.first_moment_bt();
        let first_target = -courant * (1.0 + self.sum_bt());
        BoundaryOrderReport {
            zeroth,
            first,
            first_target,
            consistent: (zeroth - 1.0).abs() < 1e-12 && (first - first_target).abs() < 1e-12,
        }
    }

    /// Equal to `other` coefficient by coefficient within `tol`.
    pub fn approx_eq(&self, other: &BoundaryScheme, tol: f64) -> bool {
        let n = self.width().max(other.width());
        (0..n).all(|k| (self.b_at(k) - other.b_at(k)).abs() <= tol && (self.bt_at(k) - other.bt_at(k)).abs() <= tol)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundaryOrderReport {
    /// `sum (b + bt)`, should be 1.
    pub zeroth: f64,
    /// `sum k (b + bt)`.
    pub first: f64,
    /// `-C (1 + sum bt)`.
    pub first_target: f64,
    pub consistent: bool,
}

/// Start-up rows: `u_0^1 = sum c[k] u_k^0` and `u_j^1 = sum_{k >= -1} s_k u_{j+k}^0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CornerScheme {
    pub c: Vec<f64>,
    pub s_minus1: f64,
    /// `s_0, s_1, ...`
    pub s: Vec<f64>,
}

impl CornerScheme {
    pub fn new(c: Vec<f64>, s_minus1: f64, s: Vec<f64>) -> Result<Self> {
        check_seq("c", &c)?;
        check_seq("s", &s)?;
        if !s_minus1.is_finite() {
            return Err(invalid("s_minus1 must be finite"));
        }
        Ok(CornerScheme { c, s_minus1, s })
    }

    pub fn lax_friedrichs(courant: f64) -> Self {
        CornerScheme {
            c: vec![0.5 * (1.0 + courant), 0.5 * (1.0 - courant)],
            s_minus1: 0.5 * (1.0 + courant),
            s: vec![0.0, 0.5 * (1.0 - courant)],
        }
    }

    /// `s_k` for `k >= -1`.
    pub fn s_at(&self, k: isize) -> f64 {
        match k {
            -1 => self.s_minus1,
            k if k >= 0 => self.s.get(k as usize).copied().unwrap_or(0.0),
            _ => 0.0,
        }
    }

    pub fn order_report(&self, courant: f64) -> CornerOrderReport {
        let sum_c: f64 = self.c.iter().sum();
        let sum_s: f64 = self.s_minus1 + self.s.iter().sum::<f64>();
        let moment_s: f64 = -self.s_minus1 + self.s.iter().enumerate().map(|(k, x)| k as f64 * x).sum::<f64>();
        CornerOrderReport {
            sum_c,
            sum_s,
            moment_s,
            consistent: (sum_c - 1.0).abs() < 1e-12
                && (sum_s - 1.0).abs() < 1e-12
                && (moment_s + courant).abs() < 1e-12,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CornerOrderReport {
    pub sum_c: f64,
    pub sum_s: f64,
    pub moment_s: f64,
    pub consistent: bool,
}

/// On-disk scheme description: `{"b": [...], "bt": [...], "c": [...], "s_minus1": x, "s": [...]}`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeFile {
    #[serde(default)]
    pub b: Vec<f64>,
    #[serde(default)]
    pub bt: Vec<f64>,
    #[serde(default)]
    pub c: Vec<f64>,
    #[serde(default)]
    pub s_minus1: Option<f64>,
    #[serde(default)]
    pub s: Vec<f64>,
}

impl SchemeFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn boundary(&self) -> Result<BoundaryScheme> {
        BoundaryScheme::new(self.b.clone(), self.bt.clone())
    }

    /// The corner scheme, if the file defines one.
    pub fn corner(&self) -> Result<Option<CornerScheme>> {
        if self.c.is_empty() && self.s.is_empty() && self.s_minus1.is_none() {
            return Ok(None);
        }
        CornerScheme::new(self.c.clone(), self.s_minus1.unwrap_or(0.0), self.s.clone()).map(Some)
    }

    pub fn from_parts(boundary: &BoundaryScheme, corner: Option<&CornerScheme>) -> Self {
        SchemeFile {
            b: boundary.b.clone(),
            bt: boundary.bt.clone(),
            c: corner.map(|c| c.c.clone()).unwrap_or_default(),
            s_minus1: corner.map(|c| c.s_minus1),
            s: corner.map(|c| c.s.clone()).unwrap_or_default(),
        }
    }
}

pub type BoundaryConstructor = fn(courant: f64, param: Option<f64>) -> Result<BoundaryScheme>;

pub struct BoundaryPreset {
    pub name: &'static str,
    pub summary: &'static str,
    pub build: BoundaryConstructor,
}

/// Named boundary schemes, parameterised by the Courant number and an
/// optional scalar written as `name:value`.
pub struct BoundaryPresets {
    entries: Vec<BoundaryPreset>,
}

impl BoundaryPresets {
    pub fn builtin() -> Self {
        let mut p = BoundaryPresets { entries: Vec::new() };
        p.register(BoundaryPreset {
            name: "dirichlet",
            summary: "homogeneous wall value",
            build: |_, _| Ok(BoundaryScheme::dirichlet()),
        });
        p.register(BoundaryPreset {
            name: "upwind",
            summary: "b = (1+C, -C)",
            build: |c, _| Ok(BoundaryScheme::upwind(c)),
        });
        p.register(BoundaryPreset {
            name: "upwind-diffusive",
            summary: "upwind plus old-level second difference, strength param (default 1/4)",
            build: |c, d| Ok(BoundaryScheme::upwind_diffusive(c, d.unwrap_or(0.25))),
        });
        p.register(BoundaryPreset {
            name: "extrapolated-leapfrog",
            summary: "b = (1+2C, -(1+2C)), bt = (0, 1); simple zero at z = -1",
            build: |c, _| Ok(BoundaryScheme::extrapolated_leap_frog(c)),
        });
        p.register(BoundaryPreset {
            name: "anti-bounce-back",
            summary: "b = (C, -C), bt = (1); simple zero at z = -1",
            build: |c, _| Ok(BoundaryScheme::anti_bounce_back(c)),
        });
        p.register(BoundaryPreset {
            name: "resonant",
            summary: "unit-circle zeros at the saddle angle of group velocity param (default 3|C|/4)",
            build: |c, nu| BoundaryScheme::resonant(c, nu.unwrap_or(0.75 * c.abs())),
        });
        p
    }

    pub fn register(&mut self, preset: BoundaryPreset) {
        self.entries.push(preset);
    }

    /// Parses `name` or `name:value`.
    pub fn build(&self, spec: &str, courant: f64) -> Result<BoundaryScheme> {
        let (name, param) = match spec.split_once(':') {
            Some((n, v)) => {
                let v: f64 = v.trim().parse().map_err(|_| invalid(format!("bad preset parameter in `{spec}`")))?;
                (n.trim(), Some(v))
            }
            None => (spec.trim(), None),
        };
        let preset =
            self.entries.iter().rev().find(|p| p.name.eq_ignore_ascii_case(name)).ok_or_else(|| {
                invalid(format!("unknown boundary preset `{name}` (known: {})", self.names().join(", ")))
            })?;
        (preset.build)(courant, param)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|p| p.name).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &BoundaryPreset> {
        self.entries.iter()
    }
}

impl Default for BoundaryPresets {
    fn default() -> Self {
        Self::builtin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upwind_and_lax_friedrichs_are_consistent() {
        for c in [-0.25, -0.5, -0.9] {
            assert!(BoundaryScheme::upwind(c).order_report(c).consistent);
            assert!(BoundaryScheme::upwind_diffusive(c, 0.25).order_report(c).consistent);
            assert!(CornerScheme::lax_friedrichs(c).order_report(c).consistent);
        }
    }

    #[test]
    fn dirichlet_is_not_consistent() {
        assert!(!BoundaryScheme::dirichlet().order_report(-0.5).consistent);
    }

    #[test]
    fn scheme_file_round_trip() {
        let text = r#"{"b":[0.5,0.5],"bt":[],"c":[0.25,0.75],"s_minus1":0.25,"s":[0.0,0.75]}"#;
        let f = SchemeFile::from_json(text).unwrap();
        assert_eq!(f.boundary().unwrap(), BoundaryScheme::upwind(-0.5));
        assert_eq!(f.corner().unwrap().unwrap(), CornerScheme::lax_friedrichs(-0.5));
        let back = serde_json::to_string(&f).unwrap();
        assert_eq!(SchemeFile::from_json(&back).unwrap(), f);
    }

    #[test]
    fn scheme_file_rejects_unknown_keys_and_long_support() {
        assert!(SchemeFile::from_json(r#"{"b":[1],"q":2}"#).is_err());
        let long = SchemeFile { b: vec![0.0; 65], ..Default::default() };
        assert!(matches!(long.boundary(), Err(Error::SupportTooLong { .. })));
    }

    #[test]
    fn presets_parse_parameters() {
        let p = BoundaryPresets::builtin();
        let b = p.build("upwind-diffusive:0.5", -0.5).unwrap();
        assert_eq!(b.bt, vec![-0.125, 0.25, -0.125]);
        assert!(p.build("bogus", -0.5).is_err());
        assert!(p.build("upwind:x", -0.5).is_err());
    }
}
