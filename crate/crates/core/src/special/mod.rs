//! Special functions and quadrature.

pub mod airy;
pub mod chebyshev;
pub mod quad;

pub use airy::{airy_ai, airy_ai_with_derivative, airy_eval, airy_primitive, AiryEval, AIRY_RANGE};
pub use chebyshev::{chebyshev, chebyshev_unchecked, ChebKind};
pub use quad::{adaptive_simpson, tanh_sinh, tanh_sinh_real, QuadResult};
