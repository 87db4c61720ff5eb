//! Branch points of `kappa_s`: zeros of the discriminant `b^2 - 4ac`.

use serde::Serialize;

use super::kappa::CharPoly;
use crate::error::{invalid, Error, Result};
use crate::scheme::{BulkKind, BulkScheme};
use crate::C64;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BranchPointSet {
    /// `theta_BP` in `[0, pi/2]`.
    pub angle: f64,
    #[serde(serialize_with = "crate::cjson::many")]
    pub points: Vec<C64>,
    /// All four points lie strictly inside the unit disk.
    pub inside_disk: bool,
    /// The `kappa^2` coefficient vanishes identically (dissipative `omega = 2/(1+C)`).
    pub degenerate_quartic: bool,
}

/// `theta_BP = arccos(1 - 2 C^2) / 2` for leap-frog.
pub fn leap_frog_branch_angle(courant: f64) -> f64 {
    0.5 * (1.0 - 2.0 * courant * courant).acos()
}

fn folded_angle(z: C64) -> f64 {
    let a = z.arg().abs();
    if a > std::f64::consts::FRAC_PI_2 {
        std::f64::consts::PI - a
    } else {
        a
    }
}

pub fn branch_points(bulk: &dyn BulkScheme) -> Result<BranchPointSet> {
    let c = bulk.courant();
    if !(c.abs() < 1.0) {
        return Err(invalid(format!("branch points need |courant| < 1 (got {c})")));
    }
    let poly = CharPoly::of(bulk);
    let d = poly.discriminant();
    if d[1].abs() > 1e-14 || d[3].abs() > 1e-14 || d[4] != 1.0 {
        return Err(Error::Numerical("discriminant is not a monic even quartic".into()));
    }
    // w^2 + d2 w + d0 with w = z^2
    let s = C64::new(d[2] * d[2] - 4.0 * d[0], 0.0).sqrt();
    let w1 = 0.5 * (-d[2] + s);
    let w2 = 0.5 * (-d[2] - s);
    let (r1, r2) = (w1.sqrt(), w2.sqrt());
    let points = if bulk.kind() == BulkKind::LeapFrog {
        let t = leap_frog_branch_angle(c);
        vec![C64::from_polar(1.0, t), C64::from_polar(1.0, -t), -C64::from_polar(1.0, -t), -C64::from_polar(1.0, t)]
    } else {
        vec![r1, r2, -r2, -r1]
    };
    let angle = if bulk.kind() == BulkKind::LeapFrog {
        leap_frog_branch_angle(c)
    } else {
        points.iter().map(|z| folded_angle(*z)).fold(0.0, f64::max)
    };
    Ok(BranchPointSet {
        angle,
        inside_disk: points.iter().all(|z| z.norm() < 1.0 - 1e-12),
        degenerate_quartic: poly.is_degenerate(),
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{Dissipative, LeapFrog};
    use std::f64::consts::PI;

    #[test]
    fn leap_frog_half_courant() {
        let bp = branch_points(&LeapFrog::new(-0.5).unwrap()).unwrap();
        assert!((bp.angle - PI / 6.0).abs() < 1e-15);
        assert!(!bp.inside_disk);
        let poly = CharPoly::of(&LeapFrog::new(-0.5).unwrap());
        let d = poly.discriminant();
        for z in &bp.points {
            let q = (((z * d[4] + d[3]) * z + d[2]) * z + d[1]) * z + d[0];
            assert!(q.norm() < 1e-14);
        }
    }

    #[test]
    fn lax_friedrichs_quartic() {
        let bp = branch_points(&Dissipative::new(0.5, 1.0).unwrap()).unwrap();
        let mut mods: Vec<f64> = bp.points.iter().map(|z| z.norm()).collect();
        mods.sort_by(f64::total_cmp);
        assert!(mods[0] < 1e-12 && mods[1] < 1e-12);
        assert!((mods[2] - 0.75f64.sqrt()).abs() < 1e-14);
        assert!(bp.inside_disk);
        assert!(!bp.degenerate_quartic);
    }

    #[test]
    fn exceptional_omega_is_flagged() {
        let c = 0.5;
        let bp = branch_points(&Dissipative::new(c, 2.0 / (1.0 + c)).unwrap()).unwrap();
        assert!(bp.degenerate_quartic);
    }
}
