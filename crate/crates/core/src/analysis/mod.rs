//! Complex-variable layer: `kappa_s`, `f`, `g`, branch and saddle points, residues.

pub mod branch;
pub mod kappa;
pub mod phase;
pub mod saddle;

pub use branch::{branch_points, leap_frog_branch_angle, BranchPointSet};
pub use kappa::{kappa_s, kappa_s_eval, kappa_select, CharPoly, KappaEval, KappaPath};
pub use phase::{
    boundary_determinant, check_simple_zero_minus_one, determinant_at, determinant_with_derivative, f_eval, g_eval,
    residue_r, PhaseEval, ResidueValue, SimpleZeroCheck,
};
pub use saddle::{
    ahead_of_front_roots, saddle_points, sigma_closed_form, transition_angles, zone_of, SaddlePointSet, SaddleRecord,
    Zone,
};
