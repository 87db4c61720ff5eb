//! Interior update rules.
//!
//! Every bulk scheme is a two-step, three-point rule
//!
//! ```text
//! e[j]^{n+1} = sum_m current[m] e[j+m]^n + sum_m previous[m] e[j+m]^{n-1},   m in {-1, 0, 1}
//! ```
//!
//! so a [`Stencil`] carries everything the simulators and the characteristic
//! analysis need. Concrete schemes sit behind the [`BulkScheme`] trait and are
//! built by name through a [`BulkRegistry`].

use std::fmt;

use num_traits::Num;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Coefficients of a two-step three-point rule, indexed by offset -1, 0, +1.
#[derive(Clone, Debug, PartialEq)]
pub struct Stencil<T> {
    pub current: [T; 3],
    pub previous: [T; 3],
}

impl<T: Clone + Num> Stencil<T> {
    pub fn leap_frog(courant: T) -> Self {
        Stencil {
            current: [courant.clone(), T::zero(), T::zero() - courant],
            previous: [T::zero(), T::one(), T::zero()],
        }
    }

    pub fn dissipative(courant: T, omega: T) -> Self {
        let two = T::one() + T::one();
        let avg = (two.clone() - omega.clone()) / two.clone();
        let adv = omega.clone() * courant / two;
        Stencil {
            current: [avg.clone() + adv.clone(), T::zero(), avg - adv],
            previous: [T::zero(), omega - T::one(), T::zero()],
        }
    }

    pub fn manufactured(courant: T) -> Self {
        let two = T::one() + T::one();
        let diff = courant.clone() * (T::one() - courant.clone());
        Stencil {
            current: [courant.clone(), T::zero(), T::zero() - courant],
            previous: [diff.clone(), T::one() - two * diff.clone(), diff],
        }
    }

    pub fn for_kind(kind: BulkKind, courant: T, omega: Option<T>) -> Result<Self> {
        Ok(match kind {
            BulkKind::LeapFrog => Self::leap_frog(courant),
            BulkKind::ManufacturedDissipative => Self::manufactured(courant),
            BulkKind::Dissipative => {
                let omega = omega.ok_or_else(|| invalid("the dissipative scheme needs omega"))?;
                Self::dissipative(courant, omega)
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BulkKind {
    LeapFrog,
    Dissipative,
    ManufacturedDissipative,
}

impl BulkKind {
    pub fn name(self) -> &'static str {
        match self {
            BulkKind::LeapFrog => "leapfrog",
            BulkKind::Dissipative => "dissipative",
            BulkKind::ManufacturedDissipative => "manufactured",
        }
    }
}

impl fmt::Display for BulkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An interior update rule with its parameters.
pub trait BulkScheme: fmt::Debug + Send + Sync {
    fn kind(&self) -> BulkKind;

    fn courant(&self) -> f64;

    fn omega(&self) -> Option<f64> {
        None
    }

    fn stencil(&self) -> Stencil<f64>;

    fn name(&self) -> &'static str {
        self.kind().name()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LeapFrog {
    courant: f64,
}

impl LeapFrog {
    /// Outflow leap-frog, `-1 < courant < 0`.
    pub fn new(courant: f64) -> Result<Self> {
        if !(courant > -1.0 && courant < 0.0) {
            return Err(invalid(format!(
                "leap-frog needs -1 < courant < 0 (got {courant}); use the override to allow 0 < |courant| < 1"
            )));
        }
        Ok(LeapFrog { courant })
    }

    /// Any `0 < |courant| < 1`; used for whole-line studies and inflow experiments.
    pub fn with_override(courant: f64) -> Result<Self> {
        if !(courant.abs() < 1.0 && courant != 0.0) {
            return Err(invalid(format!("leap-frog needs 0 < |courant| < 1 (got {courant})")));
        }
        Ok(LeapFrog { courant })
    }
}

impl BulkScheme for LeapFrog {
    fn kind(&self) -> BulkKind {
        BulkKind::LeapFrog
    }

    fn courant(&self) -> f64 {
        self.courant
    }

    fn stencil(&self) -> Stencil<f64> {
        Stencil::leap_frog(self.courant)
    }
}

/// Blend of leap-frog and Lax-Friedrichs with relaxation parameter `omega`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dissipative {
    courant: f64,
    omega: f64,
}

impl Dissipative {
    pub fn new(courant: f64, omega: f64) -> Result<Self> {
        if !(omega > 0.0 && omega < 2.0) {
            return Err(invalid(format!("dissipative scheme needs omega in (0, 2) (got {omega})")));
        }
        if !(courant > 0.0 && courant <= 1.0) {
            return Err(invalid(format!("dissipative scheme needs 0 < courant <= 1 (got {courant})")));
        }
        Ok(Dissipative { courant, omega })
    }
}

impl BulkScheme for Dissipative {
    fn kind(&self) -> BulkKind {
        BulkKind::Dissipative
    }

    fn courant(&self) -> f64 {
        self.courant
    }

    fn omega(&self) -> Option<f64> {
        Some(self.omega)
    }

    fn stencil(&self) -> Stencil<f64> {
        Stencil::dissipative(self.courant, self.omega)
    }
}

/// Leap-frog plus a second-difference correction on the old level; with a
/// Dirichlet wall its corner response is a scaled binomial distribution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Manufactured {
    courant: f64,
}

impl Manufactured {
    pub fn new(courant: f64) -> Result<Self> {
        if !(courant > 0.0 && courant < 1.0) {
            return Err(invalid(format!("manufactured scheme needs 0 < courant < 1 (got {courant})")));
        }
        Ok(Manufactured { courant })
    }
}

impl BulkScheme for Manufactured {
    fn kind(&self) -> BulkKind {
        BulkKind::ManufacturedDissipative
    }

    fn courant(&self) -> f64 {
        self.courant
    }

    fn stencil(&self) -> Stencil<f64> {
        Stencil::manufactured(self.courant)
    }
}

/// Parameters handed to a registry constructor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BulkParams {
    pub courant: f64,
    pub omega: Option<f64>,
    /// Lift the outflow restriction on the leap-frog Courant number.
    #[serde(default)]
    pub allow_any_courant: bool,
}

pub type BulkConstructor = fn(&BulkParams) -> Result<Box<dyn BulkScheme>>;

pub struct BulkEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub summary: &'static str,
    pub build: BulkConstructor,
}

/// Name-indexed collection of bulk scheme constructors.
pub struct BulkRegistry {
    entries: Vec<BulkEntry>,
}

impl BulkRegistry {
    pub fn empty() -> Self {
        BulkRegistry { entries: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut reg = Self::empty();
        reg.register(BulkEntry {
            name: "leapfrog",
            aliases: &["leap-frog", "lf"],
            summary: "centred two-step scheme, non-dissipative",
            build: |p| {
                let s =
                    if p.allow_any_courant { LeapFrog::with_override(p.courant)? } else { LeapFrog::new(p.courant)? };
                Ok(Box::new(s))
            },
        });
        reg.register(BulkEntry {
            name: "dissipative",
            aliases: &["omega"],
            summary: "leap-frog / Lax-Friedrichs blend with parameter omega",
            build: |p| {
                let omega = p.omega.ok_or_else(|| invalid("dissipative scheme needs --omega"))?;
                Ok(Box::new(Dissipative::new(p.courant, omega)?))
            },
        });
        reg.register(BulkEntry {
            name: "manufactured",
            aliases: &["manufactured-dissipative", "binomial"],
            summary: "dissipative scheme whose Dirichlet corner response is binomial",
            build: |p| Ok(Box::new(Manufactured::new(p.courant)?)),
        });
        reg
    }

    /// Adds an entry; a later entry with the same name shadows earlier ones.
    pub fn register(&mut self, entry: BulkEntry) {
        self.entries.push(entry);
    }

    pub fn get(&self, name: &str) -> Option<&BulkEntry> {
        let name = name.to_ascii_lowercase();
        self.entries.iter().rev().find(|e| e.name == name || e.aliases.contains(&name.as_str()))
    }

    pub fn build(&self, name: &str, params: &BulkParams) -> Result<Box<dyn BulkScheme>> {
        let entry = self
            .get(name)
            .ok_or_else(|| invalid(format!("unknown bulk scheme `{name}` (known: {})", self.names().join(", "))))?;
        (entry.build)(params)
    }

    pub fn names(&self) -> Vec<&'static str> {
        let mut names: Vec<_> = self.entries.iter().map(|e| e.name).collect();
        names.dedup();
        names
    }

    pub fn iter(&self) -> impl Iterator<Item = &BulkEntry> {
        self.entries.iter()
    }
}

impl Default for BulkRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leap_frog_rejects_inflow_without_override() {
        assert!(LeapFrog::new(0.5).is_err());
        assert!(LeapFrog::with_override(0.5).is_ok());
        assert!(LeapFrog::new(-1.0).is_err());
    }

    #[test]
    fn registry_builds_by_name_and_alias() {
        let reg = BulkRegistry::builtin();
        let p = BulkParams { courant: -0.5, ..Default::default() };
        assert_eq!(reg.build("LF", &p).unwrap().kind(), BulkKind::LeapFrog);
        let p = BulkParams { courant: 0.5, omega: Some(1.5), ..Default::default() };
        let d = reg.build("dissipative", &p).unwrap();
        assert_eq!(d.omega(), Some(1.5));
        assert!(reg.build("nope", &p).is_err());
    }

    #[test]
    fn dissipative_with_omega_one_is_lax_friedrichs() {
        let s = Stencil::dissipative(0.5, 1.0);
        assert_eq!(s.current, [0.75, 0.0, 0.25]);
        assert_eq!(s.previous, [0.0, 0.0, 0.0]);
    }

    #[test]
    fn dissipative_with_omega_two_is_leap_frog() {
        let s = Stencil::dissipative(0.3, 2.0);
        assert_eq!(s, Stencil::leap_frog(0.3));
    }
}
