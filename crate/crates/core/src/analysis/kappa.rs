//! The characteristic quadratic of a bulk scheme and its stable root `kappa_s`.
//!
//! Substituting `e_j^n = z^n kappa^j` into a [`Stencil`] gives
//! `a(z) kappa^2 + b(z) kappa + c(z) = 0` with `a, b, c` polynomials of degree
//! at most two. `kappa_s(z)` is the root inside the unit disk for `|z| > 1`;
//! on the unit circle it is the radial limit from outside.

use crate::error::{invalid, Error, Result};
use crate::scheme::{BulkScheme, Stencil};
use crate::C64;

/// Radial offset of the probe used to pick the branch on `|z| = 1`.
pub const RADIAL_PROBE: f64 = 1e-8;

/// Root moduli closer than this are treated as indistinguishable.
pub const NEAR_EQUAL_ROOTS: f64 = 1e-9;

/// `a(z) k^2 + b(z) k + c(z)`, each coefficient stored as `[z^0, z^1, z^2]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CharPoly {
    pub a: [f64; 3],
    pub b: [f64; 3],
    pub c: [f64; 3],
}

fn horner(p: &[f64; 3], z: C64) -> C64 {
    (z * p[2] + p[1]) * z + p[0]
}

fn horner_d1(p: &[f64; 3], z: C64) -> C64 {
    z * (2.0 * p[2]) + p[1]
}

impl CharPoly {
    pub fn from_stencil(s: &Stencil<f64>) -> Self {
        let [cm, c0, cp] = s.current;
        let [pm, p0, pp] = s.previous;
        CharPoly { a: [-pp, -cp, 0.0], b: [-p0, -c0, 1.0], c: [-pm, -cm, 0.0] }
    }

    pub fn of(bulk: &dyn BulkScheme) -> Self {
        Self::from_stencil(&bulk.stencil())
    }

    pub fn coefficients(&self, z: C64) -> [C64; 3] {
        [horner(&self.a, z), horner(&self.b, z), horner(&self.c, z)]
    }

    fn first_derivatives(&self, z: C64) -> [C64; 3] {
        [horner_d1(&self.a, z), horner_d1(&self.b, z), horner_d1(&self.c, z)]
    }

    fn second_derivatives(&self) -> [f64; 3] {
        [2.0 * self.a[2], 2.0 * self.b[2], 2.0 * self.c[2]]
    }

    /// Value of the quadratic at `(z, k)`.
    pub fn residual(&self, z: C64, k: C64) -> C64 {
        let [a, b, c] = self.coefficients(z);
        (a * k + b) * k + c
    }

    /// Is the `k^2` coefficient identically zero?
    pub fn is_degenerate(&self) -> bool {
        self.a.iter().all(|x| x.abs() < 1e-14)
    }

    /// Both roots, smaller modulus first. A vanishing leading coefficient
    /// sends one root to infinity.
    pub fn roots(&self, z: C64) -> [C64; 2] {
        let [a, b, c] = self.coefficients(z);
        let inf = C64::new(f64::INFINITY, 0.0);
        let mut r = if a == C64::new(0.0, 0.0) {
            if b == C64::new(0.0, 0.0) {
                [inf, inf]
            } else {
                [-c / b, inf]
            }
        } else {
            let s = (b * b - 4.0 * a * c).sqrt();
            let q = if (b.conj() * s).re >= 0.0 { -0.5 * (b + s) } else { -0.5 * (b - s) };
            if q == C64::new(0.0, 0.0) {
                [C64::new(0.0, 0.0); 2]
            } else {
                [q / a, c / q]
            }
        };
        if r[1].norm() < r[0].norm() {
            r.swap(0, 1);
        }
        r
    }

    /// Coefficients of `b(z)^2 - 4 a(z) c(z)`, `[z^0 ..= z^4]`.
    pub fn discriminant(&self) -> [f64; 5] {
        let mut d = [0.0; 5];
        for i in 0..3 {
            for k in 0..3 {
                d[i + k] += self.b[i] * self.b[k] - 4.0 * self.a[i] * self.c[k];
            }
        }
        d
    }

    /// First and second `z`-derivatives of the root `k` at `z` by implicit differentiation.
    pub fn root_derivatives(&self, z: C64, k: C64) -> (C64, C64) {
        let [a, b, _] = self.coefficients(z);
        let [a1, b1, c1] = self.first_derivatives(z);
        let [a2, b2, c2] = self.second_derivatives();
        let pk = 2.0 * a * k + b;
        let pz = (a1 * k + b1) * k + c1;
        let pzz = (k * a2 + b2) * k + c2;
        let pzk = 2.0 * a1 * k + b1;
        let pkk = 2.0 * a;
        let k1 = -pz / pk;
        let k2 = -(pzz + 2.0 * pzk * k1 + pkk * k1 * k1) / pk;
        (k1, k2)
    }
}

/// A `kappa_s` value with the information used to select it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KappaEval {
    pub value: C64,
    /// The other root of the quadratic.
    pub other: C64,
    /// The two roots were within [`NEAR_EQUAL_ROOTS`] in modulus at the selection point.
    pub near_branch: bool,
    /// `z` was on the unit circle and the branch came from the radial probe.
    pub radial_limit: bool,
}

fn check_point(z: C64) -> Result<f64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(invalid(format!("kappa_s needs a finite argument (got {z})")));
    }
    let r = z.norm();
    if r == 0.0 {
        return Err(invalid("kappa_s is undefined at z = 0"));
    }
    if r < 1.0 - 1e-12 {
        return Err(Error::OutOfRange(format!(
            "kappa_s is defined on the closed exterior of the unit disk (|z| = {r})"
        )));
    }
    Ok(r)
}

/// Selects the stable root of `poly` at `z`.
pub fn kappa_select(poly: &CharPoly, z: C64) -> Result<KappaEval> {
    let r = check_point(z)?;
    if r <= 1.0 + RADIAL_PROBE {
        let probe = z * ((1.0 + RADIAL_PROBE) / r);
        let [p_small, p_big] = poly.roots(probe);
        let near = p_big.norm() - p_small.norm() < NEAR_EQUAL_ROOTS;
        let [r1, r2] = poly.roots(z);
        let (value, other) = if (r1 - p_small).norm() <= (r2 - p_small).norm() { (r1, r2) } else { (r2, r1) };
        Ok(KappaEval { value, other, near_branch: near, radial_limit: true })
    } else {
        let [small, big] = poly.roots(z);
        let near = big.norm() - small.norm() < NEAR_EQUAL_ROOTS;
        Ok(KappaEval { value: small, other: big, near_branch: near, radial_limit: false })
    }
}

pub fn kappa_s_eval(bulk: &dyn BulkScheme, z: C64) -> Result<KappaEval> {
    kappa_select(&CharPoly::of(bulk), z)
}

/// The stable characteristic root at `z` (radial limit on the unit circle).
pub fn kappa_s(bulk: &dyn BulkScheme, z: C64) -> Result<C64> {
    Ok(kappa_s_eval(bulk, z)?.value)
}

/// Evaluates `kappa_s` along a path, resolving near-equal roots by continuity
/// with the previous sample.
#[derive(Clone, Debug)]
pub struct KappaPath {
    poly: CharPoly,
    last: Option<C64>,
}

impl KappaPath {
    pub fn new(poly: CharPoly) -> Self {
        KappaPath { poly, last: None }
    }

    pub fn eval(&mut self, z: C64) -> Result<KappaEval> {
        let mut e = kappa_select(&self.poly, z)?;
        if e.near_branch {
            if let Some(last) = self.last {
                if (e.other - last).norm() < (e.value - last).norm() {
                    std::mem::swap(&mut e.value, &mut e.other);
                }
            }
        }
        self.last = Some(e.value);
        Ok(e)
    }
}
