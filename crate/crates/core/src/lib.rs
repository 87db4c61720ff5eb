//! Simulation and long-time asymptotics of boundary-generated errors in
//! leap-frog type finite-difference schemes for linear advection.
//!
//! The crate is organised by layer:
//!
//! - [`scheme`]: bulk/boundary/corner schemes, the exact recurrences, the PDE run.
//! - [`analysis`]: the stable characteristic root, phase and boundary functions,
//!   branch points, saddle points, residues.
//! - [`special`]: Airy function, its primitive, Chebyshev polynomials, quadrature.
//! - [`stability`]: classification of boundary schemes.
//! - [`asymptotics`]: zone predictors, plateaus and moments on the half-line.
//! - [`green`]: Green functions of the leap-frog scheme on the whole line.
//! - [`exact`]: rational-arithmetic oracles.

pub mod analysis;
pub mod asymptotics;
pub mod cjson;
pub mod error;
pub mod exact;
pub mod green;
pub mod scheme;
pub mod special;
pub mod stability;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
