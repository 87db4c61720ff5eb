//! Green functions of the leap-frog scheme on the whole line.
//!
//! `F` starts from `F^0 = delta`, `F^1 = 0`; `S` from `S^0 = 0`, `S^1 = delta`.
//! Both follow `G_j^{n+1} = G_j^{n-1} + C (G_{j-1}^n - G_{j+1}^n)` and `S^n = F^{n+1}`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::special::{airy_ai, chebyshev_unchecked, ChebKind, AIRY_RANGE};
use crate::C64;

fn check_courant(courant: f64) -> Result<()> {
    if !(courant.abs() < 1.0) || courant == 0.0 {
        return Err(invalid(format!("Green functions need 0 < |C| < 1 (got {courant})")));
    }
    Ok(())
}

fn sign(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GreenKind {
    First,
    Second,
}

impl GreenKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "first" | "f" => Ok(GreenKind::First),
            "second" | "s" => Ok(GreenKind::Second),
            _ => Err(invalid(format!("unknown Green function `{s}` (first or second)"))),
        }
    }
}

/// Row `n` of a Green function on `j = -J..=J`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GreenField {
    pub which: GreenKind,
    pub n: usize,
    pub half_width: usize,
    pub values: Vec<f64>,
}

impl GreenField {
    pub fn at(&self, j: i64) -> f64 {
        let idx = j + self.half_width as i64;
        if idx < 0 {
            return 0.0;
        }
        self.values.get(idx as usize).copied().unwrap_or(0.0)
    }

    pub fn l2(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// Two-row stepper on a fixed window `j = -J..=J` with zero outside.
#[derive(Clone, Debug)]
pub struct GreenStepper {
    courant: f64,
    which: GreenKind,
    half_width: usize,
    prev: Vec<f64>,
    cur: Vec<f64>,
    n: usize,
}

impl GreenStepper {
    /// Rows 0 and 1 on a window wide enough for `n <= n_max`.
    pub fn new(courant: f64, which: GreenKind, n_max: usize) -> Result<Self> {
        check_courant(courant)?;
        let half_width = n_max + 1;
        let len = 2 * half_width + 1;
        let mut prev = vec![0.0; len];
        let mut cur = vec![0.0; len];
        match which {
            GreenKind::First => prev[half_width] = 1.0,
            GreenKind::Second => cur[half_width] = 1.0,
        }
        Ok(GreenStepper { courant, which, half_width, prev, cur, n: 1 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn step(&mut self) {
        let c = self.courant;
        let len = self.cur.len();
        for j in 1..len - 1 {
            self.prev[j] += c * (self.cur[j - 1] - self.cur[j + 1]);
        }
        std::mem::swap(&mut self.prev, &mut self.cur);
        self.n += 1;
    }

    pub fn field(&self) -> GreenField {
        GreenField { which: self.which, n: self.n, half_width: self.half_width, values: self.cur.clone() }
    }

    pub fn previous(&self) -> GreenField {
        GreenField { which: self.which, n: self.n - 1, half_width: self.half_width, values: self.prev.clone() }
    }

    pub fn current_values(&self) -> &[f64] {
        &self.cur
    }
}

/// Rows `0..=n_max`.
pub fn green_simulate(courant: f64, which: GreenKind, n_max: usize) -> Result<Vec<GreenField>> {
    if n_max < 2 {
        return Err(invalid("n_max must be >= 2"));
    }
    let mut st = GreenStepper::new(courant, which, n_max)?;
    let mut out = vec![st.previous(), st.field()];
    while st.n() < n_max {
        st.step();
        out.push(st.field());
    }
    Ok(out)
}

/// `||S^n||_2` from the recurrence.
pub fn green_l2_series(courant: f64, n: usize) -> Result<f64> {
    let mut st = GreenStepper::new(courant, GreenKind::Second, n.max(1))?;
    while st.n() < n {
        st.step();
    }
    Ok(if n == 0 { 0.0 } else { st.field().l2() })
}

/// `lim ||S^n||_2 = 1 / (sqrt 2 (1 - C^2)^{1/4})`.
pub fn green_l2_limit(courant: f64) -> Result<f64> {
    check_courant(courant)?;
    Ok(1.0 / (2f64.sqrt() * (1.0 - courant * courant).powf(0.25)))
}

/// `S_0^n` for `n = 0..=n_max`.
///
/// Uses the parity of `j -> S_j^n` to store `j >= 0` only, and shrinks the
/// window to the cells that still reach `j = 0` by `n_max`.
pub fn green_trace(courant: f64, n_max: usize) -> Result<Vec<f64>> {
    check_courant(courant)?;
    let c = courant;
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(0.0);
    if n_max == 0 {
        return Ok(out);
    }
    out.push(1.0);
    let len = n_max / 2 + 3;
    let mut prev = vec![0.0; len];
    let mut cur = vec![0.0; len];
    cur[0] = 1.0;
    for n in 1..n_max {
        // S^n is even in j for n odd and odd for n even
        let mirror = if n % 2 == 1 { 1.0 } else { -1.0 };
        let reach = (n + 1).min(n_max - n).min(len - 2);
        prev[0] += c * (mirror * cur[1] - cur[1]);
        for j in 1..=reach {
            prev[j] += c * (cur[j - 1] - cur[j + 1]);
        }
        std::mem::swap(&mut prev, &mut cur);
        out.push(cur[0]);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceDivergence {
    pub n_max: usize,
    pub partial_sum: f64,
    /// Least-squares slope of the partial sums against `ln N` on `[N/10, N]`.
    pub fitted_log_coeff: f64,
    /// `1 / (pi |C| sqrt(1 - C^2))`.
    pub stated_log_coeff: f64,
    /// `1 / (2 pi |C| sqrt(1 - C^2))`, from summing the squared trace asymptote.
    pub derived_log_coeff: f64,
    /// Partial sums `sum_{n <= N} |S_0^n|^2`, `N = 0..=n_max`.
    #[serde(skip)]
    pub partial_sums: Vec<f64>,
}

pub fn trace_divergence(courant: f64, n_max: usize) -> Result<TraceDivergence> {
    if n_max < 1000 {
        return Err(invalid("trace divergence needs N >= 1000"));
    }
    let trace = green_trace(courant, n_max)?;
    let mut partial_sums = Vec::with_capacity(trace.len());
    let mut s = 0.0;
    for v in &trace {
        s += v * v;
        partial_sums.push(s);
    }
    let lo = n_max / 10;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    let m = (n_max - lo + 1) as f64;
    for (n, y) in partial_sums.iter().enumerate().skip(lo) {
        let x = (n as f64).ln();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    let base = PI * courant.abs() * (1.0 - courant * courant).sqrt();
    Ok(TraceDivergence {
        n_max,
        partial_sum: s,
        fitted_log_coeff: slope,
        stated_log_coeff: 1.0 / base,
        derived_log_coeff: 0.5 / base,
        partial_sums,
    })
}

/// Largest `|sum_{n <= N} b_n|` for `b_n = (1 - (-1)^n) sin(2 n arcsin|C|)`, with the bound `2 / sin(2 arcsin|C|)`.
pub fn trace_companion_sums(courant: f64, n_max: usize) -> Result<(f64, f64)> {
    check_courant(courant)?;
    let a = courant.abs().asin();
    let mut s = 0.0;
    let mut max = 0.0f64;
    for n in 1..=n_max {
        if n % 2 == 1 {
            s += 2.0 * (2.0 * n as f64 * a).sin();
        }
        max = max.max(s.abs());
    }
    Ok((max, 2.0 / (2.0 * a).sin()))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FourierSymbolEval {
    pub xi: f64,
    #[serde(serialize_with = "crate::cjson::one")]
    pub z_phi: C64,
    pub theta_phi: f64,
    pub f_plus: f64,
    pub f_minus: f64,
    pub g_xi: f64,
}

/// Physical symbol `z_phi = exp(-i arcsin(C sin xi))`, phases `f_{+-}(xi; nu)` and weight `g(xi)`.
pub fn fourier_symbol(courant: f64, xi: f64, nu: f64) -> FourierSymbolEval {
    let phi = (courant * xi.sin()).asin();
    let root = (1.0 - (courant * xi.sin()).powi(2)).sqrt();
    FourierSymbolEval {
        xi,
        z_phi: C64::from_polar(1.0, -phi),
        theta_phi: -phi,
        f_plus: nu * xi + phi,
        f_minus: nu * xi - phi,
        g_xi: 1.0 / (4.0 * PI * root),
    }
}

/// `S^n` hat at `xi`, exponential form.
pub fn green_fourier(courant: f64, n: usize, xi: f64) -> C64 {
    let phi = (courant * xi.sin()).asin();
    let root = (1.0 - (courant * xi.sin()).powi(2)).sqrt();
    let nf = n as f64;
    let v = C64::from_polar(1.0, -nf * phi) + sign(n as i64 + 1) * C64::from_polar(1.0, nf * phi);
    v / (2.0 * root * (2.0 * PI).sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChebyshevConvention {
    /// `T_n` weighted by `((-1)^n + 1)/2`, `+ i C sin U_{n-1}` by `(1 - (-1)^n)/2`.
    AsPrinted,
    /// `T_n` weighted by `(1 - (-1)^n)/2`, `- i C sin U_{n-1}` by `(1 + (-1)^n)/2`.
    ParityCorrected,
}

/// `S^n` hat at `xi`, Chebyshev form.
pub fn green_fourier_chebyshev(courant: f64, n: usize, xi: f64, convention: ChebyshevConvention) -> C64 {
    let s = courant * xi.sin();
    let root = (1.0 - s * s).sqrt();
    let t = chebyshev_unchecked(ChebKind::T, n, root) / root;
    let u = if n == 0 { 0.0 } else { s * chebyshev_unchecked(ChebKind::U, n - 1, root) / root };
    let even = if n % 2 == 0 { 1.0 } else { 0.0 };
    let odd = 1.0 - even;
    let v = match convention {
        ChebyshevConvention::AsPrinted => C64::new(even * t, odd * u),
        ChebyshevConvention::ParityCorrected => C64::new(odd * t, -even * u),
    };
    v / (2.0 * PI).sqrt()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ChebyshevCheck {
    pub n: usize,
    pub max_dev_as_printed: f64,
    pub max_dev_corrected: f64,
    /// The printed Chebyshev form agrees with the exponential one to `1e-12`.
    pub as_printed_agrees: bool,
}

/// Compares both Chebyshev forms with the exponential form on `samples` points of `[-pi, pi]`.
pub fn chebyshev_form_check(courant: f64, n: usize, samples: usize) -> ChebyshevCheck {
    let (mut a, mut b) = (0.0f64, 0.0f64);
    for k in 0..samples.max(2) {
        let xi = -PI + 2.0 * PI * k as f64 / (samples.max(2) - 1) as f64;
        let e = green_fourier(courant, n, xi);
        a = a.max((green_fourier_chebyshev(courant, n, xi, ChebyshevConvention::AsPrinted) - e).norm());
        b = b.max((green_fourier_chebyshev(courant, n, xi, ChebyshevConvention::ParityCorrected) - e).norm());
    }
    ChebyshevCheck { n, max_dev_as_printed: a, max_dev_corrected: b, as_printed_agrees: a < 1e-12 }
}

/// `S_j^n` by the trapezoidal rule on `samples` points of the periodic inverse transform.
pub fn green_inverse_fourier(courant: f64, n: usize, j: i64, samples: usize) -> f64 {
    let h = 2.0 * PI / samples as f64;
    let mut s = C64::new(0.0, 0.0);
    for k in 0..samples {
        let xi = -PI + k as f64 * h;
        s += green_fourier(courant, n, xi) * C64::from_polar(1.0, j as f64 * xi);
    }
    (s * h).re / (2.0 * PI).sqrt()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GreenSaddle {
    /// `+1` for `f_+`, `-1` for `f_-`.
    pub branch: i8,
    pub r: u8,
    pub xi: f64,
    pub f2: f64,
    pub degenerate: bool,
}

/// Saddle points of `xi -> f_{+-}(xi; nu)` on `[-pi, pi]`; empty for `|nu| > |C|`.
pub fn green_saddle_points(courant: f64, nu: f64) -> Result<Vec<GreenSaddle>> {
    check_courant(courant)?;
    if !(nu.abs() <= 1.0) {
        return Err(invalid(format!("|nu| <= 1 required (got {nu})")));
    }
    let c = courant;
    if nu.abs() > c.abs() {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(4);
    for branch in [1i8, -1] {
        let pm = branch as f64;
        let arg = (-pm * nu / c * ((1.0 - c * c) / (1.0 - nu * nu)).sqrt()).clamp(-1.0, 1.0);
        let base = arg.acos();
        for r in 0..2u8 {
            let rs = if r == 0 { 1.0 } else { -1.0 };
            let f2 = -pm * rs * c.signum() * (1.0 - nu * nu) * (c * c - nu * nu).max(0.0).sqrt() / (1.0 - c * c).sqrt();
            out.push(GreenSaddle { branch, r, xi: rs * base, f2, degenerate: f2.abs() < 1e-12 });
        }
    }
    Ok(out)
}

/// `f''_{+-}(xi)` evaluated directly, for checking [`green_saddle_points`].
pub fn green_phase_second_derivative(courant: f64, xi: f64, branch: i8) -> f64 {
    let c = courant;
    let s = xi.sin();
    branch as f64 * c * s * (c * c - 1.0) / (1.0 - c * c * s * s).powf(1.5)
}

/// Closest `|nu|` may come to `|C|`.
pub const GREEN_NU_MARGIN: f64 = 1e-3;

/// Two-cosine transition approximation of `S_j^n`, `|j| < |C| n`.
pub fn green_transition_predict(courant: f64, n: usize, j: i64) -> Result<f64> {
    check_courant(courant)?;
    let c = courant;
    let nf = n as f64;
    let jf = j as f64;
    let nu = jf / nf;
    if n == 0 || !(nu.abs() <= c.abs() - GREEN_NU_MARGIN) {
        return Err(Error::NotApplicable(format!(
            "Green transition zone needs |j/n| <= |C| - {GREEN_NU_MARGIN} (got j/n = {nu})"
        )));
    }
    let q = jf / (c * nf);
    let a = (c * ((1.0 - q * q) / (1.0 - nu * nu)).sqrt()).asin();
    let b = q * ((1.0 - c * c) / (1.0 - nu * nu)).sqrt();
    let shift = FRAC_PI_4 * c.signum();
    let amp = (2.0 * PI).sqrt().recip() / c.abs().sqrt() / (1.0 - c * c).powf(0.25) / (1.0 - q * q).powf(0.25);
    let first = (nf * a - jf * b.clamp(-1.0, 1.0).acos() - shift).cos();
    let second = (nf * a + jf * (-b).clamp(-1.0, 1.0).acos() - shift).cos();
    Ok(amp * (first - sign(n as i64) * second) / nf.sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GreenFront {
    /// Group velocity `C`, at `j = C n`.
    Physical,
    /// Group velocity `-C`, at `j = -C n`.
    Spurious,
}

impl GreenFront {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "physical" => Ok(GreenFront::Physical),
            "spurious" => Ok(GreenFront::Spurious),
            _ => Err(invalid(format!("unknown front `{s}` (physical or spurious)"))),
        }
    }
}

/// Airy approximation of `S_j^n` near one of the two fronts, for `-1 < C < 0`.
pub fn green_front_predict(courant: f64, n: usize, j: i64, front: GreenFront) -> Result<f64> {
    let c = courant;
    if !(c > -1.0 && c < 0.0) {
        return Err(invalid(format!("Green front predictor needs -1 < C < 0 (got {c})")));
    }
    if n == 0 {
        return Err(invalid("n >= 1 required"));
    }
    let nf = n as f64;
    let w = (0.5 * c * (c * c - 1.0) * nf).cbrt();
    let mask = ((sign(n as i64) - sign(j)) / 2.0).abs();
    if mask == 0.0 {
        return Ok(0.0);
    }
    let (x, pre) = match front {
        GreenFront::Spurious => ((j as f64 + c * nf) / w, sign(n as i64 + 1)),
        GreenFront::Physical => (-(j as f64 - c * nf) / w, 1.0),
    };
    let ai = if x > AIRY_RANGE { 0.0 } else { airy_ai(x)? };
    Ok(pre * mask * ai / w)
}

/// `arcsin(|C|)`, the glancing phase speed.
pub fn glancing_angle(courant: f64) -> f64 {
    courant.abs().asin().min(FRAC_PI_2)
}
