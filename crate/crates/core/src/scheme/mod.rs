//! Schemes and exact simulation of the recurrences.

pub mod boundary;
pub mod bulk;
pub mod pde;
pub mod simulate;

pub use boundary::{BoundaryPresets, BoundaryScheme, CornerScheme, SchemeFile, MAX_SUPPORT};
pub use bulk::{BulkKind, BulkParams, BulkRegistry, BulkScheme, Dissipative, LeapFrog, Manufactured, Stencil};
pub use pde::{gaussian_datum, simulate_pde, PdeRun, ADVECTION_SPEED};
pub use simulate::{
    corner_simulator, lp_norm, moments, simulate_error, simulate_exact, simulate_snapshots, ErrorField, NormOrder,
    Simulator,
};
