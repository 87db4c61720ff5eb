//! One-dimensional quadrature: adaptive Simpson and tanh-sinh.

use crate::C64;

/// Adaptive Simpson on `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 50)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: C64,
    /// Difference between the last two refinement levels.
    pub error_estimate: f64,
    pub levels: u32,
}

const TS_TMAX: f64 = 4.5;
const TS_MAX_LEVELS: u32 = 12;

/// Tanh-sinh quadrature of a complex integrand on `[a, b]`.
///
/// Tolerates integrable endpoint singularities; non-finite samples are dropped.
pub fn tanh_sinh(f: &dyn Fn(f64) -> C64, a: f64, b: f64, tol: f64) -> QuadResult {
    let d = 0.5 * (b - a);
    let half_pi = std::f64::consts::FRAC_PI_2;
    let sample = |t: f64| -> C64 {
        let u = half_pi * t.sinh();
        let ch = u.cosh();
        let w = d * half_pi * t.cosh() / (ch * ch);
        // distance to the nearer endpoint, computed without cancellation
        let gap = d / (u.abs().exp() * ch);
        let x = if t >= 0.0 { b - gap } else { a + gap };
        if x <= a || x >= b || w == 0.0 {
            return C64::new(0.0, 0.0);
        }
        let v = f(x);
        if v.re.is_finite() && v.im.is_finite() {
            v * w
        } else {
            C64::new(0.0, 0.0)
        }
    };
    let mut h = 1.0;
    let mut sum = sample(0.0);
    let mut k = 1;
    while k as f64 * h <= TS_TMAX {
        let t = k as f64 * h;
        sum += sample(t) + sample(-t);
        k += 1;
    }
    let mut estimate = sum * h;
    let mut err = f64::INFINITY;
    let mut level = 0;
    while level < TS_MAX_LEVELS {
        level += 1;
        h *= 0.5;
        let mut k = 1;
        while k as f64 * h <= TS_TMAX {
            let t = k as f64 * h;
            sum += sample(t) + sample(-t);
            k += 2;
        }
        let next = sum * h;
        err = (next - estimate).norm();
        estimate = next;
        if err <= tol * (1.0 + estimate.norm()) && level >= 3 {
            break;
        }
    }
    QuadResult { value: estimate, error_estimate: err, levels: level }
}

/// Real-valued convenience wrapper around [`tanh_sinh`].
pub fn tanh_sinh_real(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    tanh_sinh(&|x| C64::new(f(x), 0.0), a, b, tol).value.re
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_integrates_sine() {
        let v = adaptive_simpson(&f64::sin, 0.0, std::f64::consts::PI, 1e-12);
        assert!((v - 2.0).abs() < 1e-11);
    }

    #[test]
    fn tanh_sinh_handles_sqrt_endpoint() {
        // int_0^1 sqrt(1 - x^2) = pi/4
        let v = tanh_sinh_real(&|x| (1.0 - x * x).sqrt(), 0.0, 1.0, 1e-14);
        assert!((v - std::f64::consts::FRAC_PI_4).abs() < 1e-13);
        // int_0^1 1/sqrt(x) = 2
        let v = tanh_sinh_real(&|x| 1.0 / x.sqrt(), 0.0, 1.0, 1e-14);
        assert!((v - 2.0).abs() < 1e-10);
    }
}
