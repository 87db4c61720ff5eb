//! Classification of a boundary scheme by the zeros of `D(z)` on `|z| >= 1`.
//!
//! Zeros strictly outside the unit circle are counted by the winding number of
//! `D` on `|z| = 1 + delta` (`D(z) ~ z^2` at infinity) and located from contour
//! power sums. Zeros on the circle come from a modulus scan of the radial
//! limit, refined by golden-section search.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::analysis::{boundary_determinant, determinant_with_derivative};
use crate::cjson::Cplx;
use crate::error::{invalid, Result};
use crate::scheme::{BoundaryScheme, BulkKind, BulkScheme};
use crate::C64;

pub use crate::analysis::{check_simple_zero_minus_one, SimpleZeroCheck};

pub const DEFAULT_DELTA: f64 = 1e-3;
pub const DEFAULT_GRID: usize = 1 << 14;
pub const MAX_GRID: usize = 1 << 18;
/// Refined scan minima below this are zeros.
pub const ZERO_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StabilityClass {
    Stable,
    UnstableSimpleZero,
    UnstableUnitCircleZeros,
    GodunovRyabenkii,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilityVerdict {
    pub class: StabilityClass,
    pub zeros: Vec<C64>,
    pub multiplicities: Vec<u32>,
    /// Smallest `|D|` found on the unit circle.
    pub min_abs_d: f64,
    /// Winding number of `D` on `|z| = 1 + delta`.
    pub winding: i64,
    /// Samples used for the winding number.
    pub grid: usize,
    pub delta: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub re: f64,
    pub im: f64,
    pub multiplicity: u32,
}

/// JSON form `{class, zeros: [{re, im, multiplicity}], min_abs_D, winding}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub class: StabilityClass,
    pub zeros: Vec<ZeroRecord>,
    #[serde(rename = "min_abs_D")]
    pub min_abs_d: f64,
    pub winding: i64,
}

impl StabilityVerdict {
    pub fn record(&self) -> VerdictRecord {
        VerdictRecord {
            class: self.class,
            zeros: self
                .zeros
                .iter()
                .zip(&self.multiplicities)
                .map(|(z, m)| ZeroRecord { re: z.re, im: z.im, multiplicity: *m })
                .collect(),
            min_abs_d: self.min_abs_d,
            winding: self.winding,
        }
    }

    pub fn zeros_json(&self) -> Vec<Cplx> {
        self.zeros.iter().map(|z| Cplx::from(*z)).collect()
    }
}

fn on_circle(r: f64, theta: f64) -> C64 {
    C64::from_polar(r, theta)
}

/// Winding number of `D` on `|z| = r`, or `None` if adjacent samples differ
/// in phase by more than `pi/2`.
fn winding_on(boundary: &BoundaryScheme, bulk: &dyn BulkScheme, r: f64, grid: usize) -> Result<Option<i64>> {
    let mut total = 0.0;
    let first = boundary_determinant(boundary, bulk, on_circle(r, 0.0))?;
    let mut prev = first;
    for k in 1..=grid {
        let d = if k == grid {
            first
        } else {
            boundary_determinant(boundary, bulk, on_circle(r, 2.0 * PI * k as f64 / grid as f64))?
        };
        let step = (d / prev).arg();
        if step.abs() > PI / 2.0 || !step.is_finite() {
            return Ok(None);
        }
        total += step;
        prev = d;
    }
    let w = total / (2.0 * PI);
    if (w - w.round()).abs() > 1e-6 {
        return Ok(None);
    }
    Ok(Some(w.round() as i64))
}

/// Zeros of `D` in `1 + delta < |z| < radius` from contour power sums.
fn exterior_zeros(
    boundary: &BoundaryScheme,
    bulk: &dyn BulkScheme,
    count: usize,
    inner: f64,
    outer: f64,
    grid: usize,
) -> Result<Vec<C64>> {
    // s_p = (1 / 2 pi i) (oint_outer - oint_inner) z^p D'/D dz
    let mut sums = vec![C64::new(0.0, 0.0); count + 1];
    for (r, sign) in [(outer, 1.0), (inner, -1.0)] {
        for k in 0..grid {
            let z = on_circle(r, 2.0 * PI * k as f64 / grid as f64);
            let (d, dd) = determinant_with_derivative(boundary, bulk, z)?;
            let base = dd / d * z / grid as f64 * sign;
            let mut zp = C64::new(1.0, 0.0);
            for s in sums.iter_mut() {
                *s += base * zp;
                zp *= z;
            }
        }
    }
    // Newton identities for the elementary symmetric polynomials
    let mut e = vec![C64::new(1.0, 0.0)];
    for k in 1..=count {
        let mut acc = C64::new(0.0, 0.0);
        for i in 1..=k {
            let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
            acc += sign * e[k - i] * sums[i];
        }
        e.push(acc / k as f64);
    }
    // monic polynomial z^m - e1 z^{m-1} + e2 z^{m-2} ...
    let coeffs: Vec<C64> = (0..=count).map(|i| if i % 2 == 0 { e[i] } else { -e[i] }).collect();
    let mut roots = durand_kerner(&coeffs);
    for z in roots.iter_mut() {
        for _ in 0..50 {
            let (d, dd) = determinant_with_derivative(boundary, bulk, *z)?;
            let step = d / dd;
            *z -= step;
            if step.norm() < 1e-15 * z.norm() {
                break;
            }
        }
    }
    Ok(roots)
}

/// Roots of the monic polynomial `sum_i coeffs[i] z^{m-i}`, `coeffs[0] = 1`.
fn durand_kerner(coeffs: &[C64]) -> Vec<C64> {
    let m = coeffs.len() - 1;
    if m == 0 {
        return Vec::new();
    }
    let eval = |z: C64| coeffs.iter().fold(C64::new(0.0, 0.0), |acc, c| acc * z + c);
    let seed = C64::new(0.4, 0.9);
    let mut roots: Vec<C64> = (0..m).map(|k| seed.powu(k as u32) * (1.0 + coeffs[m].norm())).collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..m {
            let mut den = C64::new(1.0, 0.0);
            for j in 0..m {
                if i != j {
                    den *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / den;
            roots[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }
    roots
}

fn golden_min(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > 1e-14 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    let t = 0.5 * (a + b);
    (t, f(t))
}

/// Local vanishing order of `|D|` at the unit-circle point `z0`, from the
/// radial slope on a log-log stencil.
fn radial_order(boundary: &BoundaryScheme, bulk: &dyn BulkScheme, z0: C64) -> Result<u32> {
    let (e1, e2) = (1e-3, 1e-4);
    let d1 = boundary_determinant(boundary, bulk, z0 * (1.0 + e1))?.norm();
    let d2 = boundary_determinant(boundary, bulk, z0 * (1.0 + e2))?.norm();
    let slope = (d1 / d2).ln() / (e1 / e2).ln();
    Ok(slope.round().max(1.0) as u32)
}

/// Unit-circle zeros other than `z = +-1` for leap-frog bulks.
fn unit_circle_scan(boundary: &BoundaryScheme, bulk: &dyn BulkScheme, grid: usize) -> Result<(Vec<C64>, f64)> {
    let theta = |k: usize| 2.0 * PI * k as f64 / grid as f64;
    let mut mods = Vec::with_capacity(grid);
    for k in 0..grid {
        mods.push(boundary_determinant(boundary, bulk, on_circle(1.0, theta(k)))?.norm());
    }
    let mut min_abs = mods.iter().copied().fold(f64::INFINITY, f64::min);
    let abs_d =
        |t: f64| boundary_determinant(boundary, bulk, on_circle(1.0, t)).map(|d| d.norm()).unwrap_or(f64::INFINITY);
    let mut zeros: Vec<C64> = Vec::new();
    for k in 0..grid {
        let l = mods[(k + grid - 1) % grid];
        let r = mods[(k + 1) % grid];
        if mods[k] <= l && mods[k] <= r {
            let (t, v) = golden_min(&abs_d, theta(k) - 2.0 * PI / grid as f64, theta(k) + 2.0 * PI / grid as f64);
            min_abs = min_abs.min(v);
            if v < ZERO_TOL {
                let z = on_circle(1.0, t);
                if !zeros.iter().any(|w| (w - z).norm() < 1e-8) {
                    zeros.push(z);
                }
            }
        }
    }
    Ok((zeros, min_abs))
}

/// Classifies `boundary` for `bulk`. See the module notes for the method.
pub fn classify(boundary: &BoundaryScheme, bulk: &dyn BulkScheme, delta: f64, grid: usize) -> Result<StabilityVerdict> {
    if !(delta > 0.0 && delta < 0.5) {
        return Err(invalid(format!("delta must be in (0, 1/2) (got {delta})")));
    }
    if grid < 16 {
        return Err(invalid("grid must have at least 16 samples"));
    }
    let r_in = 1.0 + delta;
    let mut g = grid;
    let winding = loop {
        if let Some(w) = winding_on(boundary, bulk, r_in, g)? {
            break Some(w);
        }
        if g >= MAX_GRID {
            break None;
        }
        g *= 2;
    };
    let (unit_zeros, min_abs_d) = unit_circle_scan(boundary, bulk, grid)?;
    let Some(winding) = winding else {
        return Ok(StabilityVerdict {
            class: StabilityClass::Indeterminate,
            zeros: unit_zeros,
            multiplicities: Vec::new(),
            min_abs_d,
            winding: 0,
            grid: g,
            delta,
        });
    };
    let outside = 2 - winding;
    if outside > 0 {
        let outer = 2.0
            + boundary.b.iter().map(|x| x.abs()).sum::<f64>()
            + boundary.bt.iter().map(|x| x.abs()).sum::<f64>().sqrt();
        let zeros = exterior_zeros(boundary, bulk, outside as usize, r_in, outer, g.max(1 << 12))?;
        let multiplicities = vec![1; zeros.len()];
        return Ok(StabilityVerdict {
            class: StabilityClass::GodunovRyabenkii,
            zeros,
            multiplicities,
            min_abs_d,
            winding,
            grid: g,
            delta,
        });
    }
    if outside < 0 {
        return Ok(StabilityVerdict {
            class: StabilityClass::Indeterminate,
            zeros: unit_zeros,
            multiplicities: Vec::new(),
            min_abs_d,
            winding,
            grid: g,
            delta,
        });
    }

    let minus_one = C64::new(-1.0, 0.0);
    let plus_one = C64::new(1.0, 0.0);
    let mut zeros: Vec<C64> =
        unit_zeros.into_iter().filter(|z| (z - minus_one).norm() > 1e-6 && (z - plus_one).norm() > 1e-6).collect();
    let mut multiplicities = Vec::with_capacity(zeros.len() + 2);
    for z in &zeros {
        multiplicities.push(radial_order(boundary, bulk, *z)?);
    }
    // z = -1 and z = +1 analytically
    if bulk.kind() == BulkKind::LeapFrog {
        let chk = check_simple_zero_minus_one(boundary, bulk.courant());
        if chk.holds_first {
            zeros.push(minus_one);
            multiplicities.push(if chk.holds_second { 1 } else { 2 });
        }
    } else if boundary_determinant(boundary, bulk, minus_one)?.norm() < 1e-12 {
        zeros.push(minus_one);
        multiplicities.push(radial_order(boundary, bulk, minus_one)?);
    }
    if boundary_determinant(boundary, bulk, plus_one)?.norm() < 1e-12 {
        zeros.push(plus_one);
        multiplicities.push(radial_order(boundary, bulk, plus_one)?);
    }
    let class = match zeros.as_slice() {
        [] => StabilityClass::Stable,
        [z] if (z.im == 0.0 && z.re.abs() == 1.0) && multiplicities[0] == 1 => StabilityClass::UnstableSimpleZero,
        _ => StabilityClass::UnstableUnitCircleZeros,
    };
    Ok(StabilityVerdict { class, zeros, multiplicities, min_abs_d, winding, grid: g, delta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::LeapFrog;

    #[test]
    fn durand_kerner_quadratic() {
        // (z - 2)(z + 3) = z^2 + z - 6
        let c = [C64::new(1.0, 0.0), C64::new(1.0, 0.0), C64::new(-6.0, 0.0)];
        let mut r = durand_kerner(&c);
        r.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((r[0] + 3.0).norm() < 1e-12 && (r[1] - 2.0).norm() < 1e-12);
    }

    #[test]
    fn godunov_ryabenkii_zero_is_located() {
        // b0 = 3: D = z^2 - 3z has the zero z = 3
        let lf = LeapFrog::new(-0.5).unwrap();
        let b = BoundaryScheme::new(vec![3.0], vec![]).unwrap();
        let v = classify(&b, &lf, DEFAULT_DELTA, 1 << 10).unwrap();
        assert_eq!(v.class, StabilityClass::GodunovRyabenkii);
        assert_eq!(v.zeros.len(), 1);
        assert!((v.zeros[0] - 3.0).norm() < 1e-10);
    }
}
