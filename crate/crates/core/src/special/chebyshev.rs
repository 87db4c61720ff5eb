//! Chebyshev polynomials by the three-term recurrence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChebKind {
    T,
    U,
}

/// `T_n(x)` or `U_n(x)` for `|x| <= 1 + 1e-12`.
pub fn chebyshev(kind: ChebKind, n: usize, x: f64) -> Result<f64> {
    if !(x.abs() <= 1.0 + 1e-12) {
        return Err(Error::OutOfRange(format!("Chebyshev argument must satisfy |x| <= 1 (got {x})")));
    }
    Ok(chebyshev_unchecked(kind, n, x))
}

pub fn chebyshev_unchecked(kind: ChebKind, n: usize, x: f64) -> f64 {
    let mut prev = 1.0;
    let mut cur = match kind {
        ChebKind::T => x,
        ChebKind::U => 2.0 * x,
    };
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}
