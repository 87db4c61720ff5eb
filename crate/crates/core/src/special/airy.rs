//! Airy function `Ai` on `[-40, 40]` and its primitive from 0.
//!
//! - `|x| <= 1`: Maclaurin series.
//! - `x > 1`: `Ai(x) = sqrt(x/3) K_{1/3}(zeta) / pi`, `zeta = 2 x^{3/2} / 3`, with `K`
//!   from the trapezoidal rule on `int_0^inf exp(-zeta cosh t) cosh(t/3) dt`.
//! - `x < -1`: Taylor continuation of `(Ai, Ai')` along a node table built once
//!   from `x = 0` with the ODE `Ai'' = x Ai`.

use std::sync::OnceLock;

use serde::Serialize;

use super::quad::adaptive_simpson;
use crate::error::{Error, Result};

/// `Ai(0) = 1 / (3^{2/3} Gamma(2/3))`.
pub const AI0: f64 = 0.355_028_053_887_817_2;
/// `-Ai'(0) = 1 / (3^{1/3} Gamma(1/3))`.
pub const AIP0: f64 = 0.258_819_403_792_806_8;

pub const AIRY_RANGE: f64 = 40.0;

const NODE_STEP: f64 = 0.25;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AiryEval {
    pub x: f64,
    pub ai: f64,
    pub primitive: f64,
}

fn maclaurin(x: f64) -> (f64, f64) {
    let x3 = x * x * x;
    // f = sum a_k x^{3k}, g = sum b_k x^{3k+1}
    let (mut t, mut u) = (1.0, x);
    let (mut f, mut g) = (1.0, x);
    let (mut df, mut dg) = (0.0, 1.0);
    for k in 1..60 {
        let k3 = 3.0 * k as f64;
        t *= x3 / ((k3 - 1.0) * k3);
        u *= x3 / (k3 * (k3 + 1.0));
        f += t;
        g += u;
        if x != 0.0 {
            df += k3 * t / x;
            dg += (k3 + 1.0) * u / x;
        }
        if t.abs() < 1e-18 * f.abs() && u.abs() < 1e-18 * g.abs().max(1e-300) {
            break;
        }
    }
    (AI0 * f - AIP0 * g, AI0 * df - AIP0 * dg)
}

/// `K_{1/3}(zeta)` for `zeta >= 2/3`.
fn bessel_k_third(zeta: f64) -> f64 {
    let h = (0.5 / zeta.sqrt()).min(0.1);
    let term = |t: f64| (-zeta * (t.cosh() - 1.0)).exp() * (t / 3.0).cosh();
    let mut sum = 0.5 * term(0.0);
    let mut k = 1;
    loop {
        let v = term(k as f64 * h);
        sum += v;
        if v < 1e-19 * sum {
            break;
        }
        k += 1;
    }
    (-zeta).exp() * h * sum
}

/// One Taylor step of `y'' = x y` from `x0` by `h`.
fn taylor_step(x0: f64, y: f64, dy: f64, h: f64) -> (f64, f64) {
    let (mut am1, mut a0, mut a1) = (0.0, y, dy);
    let mut val = a0 + a1 * h;
    let mut der = a1;
    let mut hp = h; // h^{k+1}
                    // |h| <= 1/8 and |x0| <= 40 make 60 terms ample
    for k in 0..60 {
        let kf = k as f64;
        let a2 = (x0 * a0 + am1) / ((kf + 1.0) * (kf + 2.0));
        // a2 is the coefficient of h^{k+2}
        val += a2 * hp * h;
        der += (kf + 2.0) * a2 * hp;
        hp *= h;
        am1 = a0;
        a0 = a1;
        a1 = a2;
    }
    (val, der)
}

fn negative_table() -> &'static [(f64, f64)] {
    static TABLE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = (AIRY_RANGE / NODE_STEP).round() as usize;
        let mut out = Vec::with_capacity(n + 1);
        let (mut y, mut dy) = (AI0, -AIP0);
        out.push((y, dy));
        for i in 0..n {
            let x0 = -(i as f64) * NODE_STEP;
            (y, dy) = taylor_step(x0, y, dy, -NODE_STEP);
            out.push((y, dy));
        }
        out
    })
}

fn check_range(x: f64) -> Result<()> {
    if !(x.abs() <= AIRY_RANGE) {
        return Err(Error::OutOfRange(format!("Ai is supported on [-40, 40] (got {x})")));
    }
    Ok(())
}

/// `Ai(x)` for `x` in `[-40, 40]`.
pub fn airy_ai(x: f64) -> Result<f64> {
    check_range(x)?;
    if x.abs() <= 1.0 {
        return Ok(maclaurin(x).0);
    }
    if x > 1.0 {
        let zeta = 2.0 / 3.0 * x.powf(1.5);
        return Ok((x / 3.0).sqrt() * bessel_k_third(zeta) / std::f64::consts::PI);
    }
    let table = negative_table();
    let i = ((-x) / NODE_STEP).round() as usize;
    let x0 = -(i as f64) * NODE_STEP;
    let (y, dy) = table[i];
    Ok(taylor_step(x0, y, dy, x - x0).0)
}

/// `Ai(x)` and `Ai'(x)` for `x <= 1`.
pub fn airy_ai_with_derivative(x: f64) -> Result<(f64, f64)> {
    check_range(x)?;
    if x > 1.0 {
        return Err(Error::OutOfRange("derivative is only tabulated for x <= 1".into()));
    }
    if x >= -1.0 {
        return Ok(maclaurin(x));
    }
    let table = negative_table();
    let i = ((-x) / NODE_STEP).round() as usize;
    let x0 = -(i as f64) * NODE_STEP;
    let (y, dy) = table[i];
    Ok(taylor_step(x0, y, dy, x - x0))
}

/// Past this point `Ai` is below `1e-20` and the tail is dropped.
const TAIL_END: f64 = 20.0;
const PRIMITIVE_TOL: f64 = 1e-14;

fn ai_unchecked(x: f64) -> f64 {
    airy_ai(x.clamp(-AIRY_RANGE, AIRY_RANGE)).unwrap_or(0.0)
}

/// `int_0^x Ai`, with `x = +inf` giving `1/3` and `x = -inf` giving `-2/3`.
pub fn airy_primitive(x: f64) -> Result<f64> {
    if x == f64::INFINITY {
        return Ok(1.0 / 3.0);
    }
    if x == f64::NEG_INFINITY {
        return Ok(-2.0 / 3.0);
    }
    if x.is_nan() || x < -AIRY_RANGE {
        return Err(Error::OutOfRange(format!("the Airy primitive is supported on [-40, +inf] (got {x})")));
    }
    if x >= TAIL_END {
        return Ok(1.0 / 3.0);
    }
    if x > 2.0 {
        // the tail is about Ai(x) / sqrt(x); scale the tolerance to it
        let tol = PRIMITIVE_TOL * ai_unchecked(x).max(1e-300);
        let tail = adaptive_simpson(&ai_unchecked, x, TAIL_END, tol);
        return Ok(1.0 / 3.0 - tail);
    }
    Ok(adaptive_simpson(&ai_unchecked, 0.0, x, PRIMITIVE_TOL))
}

pub fn airy_eval(x: f64) -> Result<AiryEval> {
    Ok(AiryEval { x, ai: airy_ai(x)?, primitive: airy_primitive(x)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        assert!((airy_ai(0.0).unwrap() - 0.355_028_053_9).abs() < 1e-10);
        assert!((airy_ai(1.0).unwrap() / 0.135_292_416_312_881_4 - 1.0).abs() < 1e-12);
        assert!((airy_ai(-2.0).unwrap() / 0.227_407_428_201_685_6 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn maclaurin_and_bessel_agree_at_the_seam() {
        let (a, _) = maclaurin(1.0);
        let zeta = 2.0 / 3.0;
        let b = (1.0f64 / 3.0).sqrt() * bessel_k_third(zeta) / std::f64::consts::PI;
        assert!((a - b).abs() < 1e-15);
    }

    #[test]
    fn primitive_limits() {
        assert_eq!(airy_primitive(0.0).unwrap(), 0.0);
        assert_eq!(airy_primitive(f64::INFINITY).unwrap(), 1.0 / 3.0);
        assert!((airy_primitive(10.0).unwrap() - 1.0 / 3.0).abs() < 1e-10);
        assert!(airy_ai(41.0).is_err());
    }
}
