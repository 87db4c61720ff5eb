//! Exact time stepping of the error recurrence on the half-line.

use num_traits::Num;
use serde::{Deserialize, Serialize};

use super::boundary::BoundaryScheme;
use super::bulk::{BulkScheme, Stencil};
use crate::error::{invalid, Error, Result};

/// One time row `values[j]`, `j = 0..=J` (or `j = -J..=J` for whole-line fields).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorField {
    pub time_index: usize,
    pub values: Vec<f64>,
    /// Mesh size, when the field approximates a function on `dx * N`.
    pub dx: Option<f64>,
}

impl ErrorField {
    pub fn new(time_index: usize, values: Vec<f64>) -> Self {
        ErrorField { time_index, values, dx: None }
    }

    pub fn with_dx(mut self, dx: f64) -> Self {
        self.dx = Some(dx);
        self
    }
}

/// Exponent of an `l^p` norm.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum NormOrder {
    P(f64),
    Infinity,
}

impl NormOrder {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "max" => Ok(NormOrder::Infinity),
            t => t
                .parse::<f64>()
                .ok()
                .filter(|p| *p >= 1.0)
                .map(NormOrder::P)
                .ok_or_else(|| invalid(format!("bad norm order `{s}` (need p >= 1 or inf)"))),
        }
    }

    pub fn value(self) -> f64 {
        match self {
            NormOrder::P(p) => p,
            NormOrder::Infinity => f64::INFINITY,
        }
    }
}

/// `(sum |v_j|^p)^{1/p}`, times `dx^{1/p}` when `scaled`.
pub fn lp_norm(field: &ErrorField, p: NormOrder, scaled: bool) -> Result<f64> {
    let weight = if scaled {
        Some(field.dx.ok_or_else(|| invalid("scaled norm requested but the field has no dx"))?)
    } else {
        None
    };
    match p {
        NormOrder::Infinity => Ok(field.values.iter().fold(0.0_f64, |m, x| m.max(x.abs()))),
        NormOrder::P(p) if p >= 1.0 => {
            let s: f64 = if p == 2.0 {
                field.values.iter().map(|x| x * x).sum()
            } else if p == 1.0 {
                field.values.iter().map(|x| x.abs()).sum()
            } else {
                field.values.iter().map(|x| x.abs().powf(p)).sum()
            };
            let norm = s.powf(1.0 / p);
            Ok(match weight {
                Some(dx) => norm * dx.powf(1.0 / p),
                None => norm,
            })
        }
        NormOrder::P(p) => Err(invalid(format!("norm order must be >= 1 (got {p})"))),
    }
}

/// `sum_j j^order (-1)^{j alt} values[j]` over the half-line indices.
pub fn moments(field: &ErrorField, order: u32, alternating: bool) -> f64 {
    field
        .values
        .iter()
        .enumerate()
        .map(|(j, v)| {
            let w = if order == 0 { 1.0 } else { (j as f64).powi(order as i32) };
            let s = if alternating && j % 2 == 1 { -1.0 } else { 1.0 };
            w * s * v
        })
        .sum()
}

/// Default window: the corner support grows one cell per step, plus the boundary stencil.
pub fn default_window(n_max: usize, boundary_width: usize) -> usize {
    n_max + boundary_width.max(2) + 1
}

/// Two-level time stepper for a [`Stencil`] with a boundary row.
///
/// Holds rows `n - 1` and `n`; `step` advances to `n + 1`. Cells past the
/// window are zero.
#[derive(Clone, Debug)]
pub struct Simulator<T> {
    stencil: Stencil<T>,
    b: Vec<T>,
    bt: Vec<T>,
    prev: Vec<T>,
    cur: Vec<T>,
    next: Vec<T>,
    n: usize,
}

impl<T: Clone + Num> Simulator<T> {
    /// Starts from rows `prev = e^{n0-1}` and `cur = e^{n0}` of equal length.
    pub fn with_rows(stencil: Stencil<T>, b: Vec<T>, bt: Vec<T>, prev: Vec<T>, cur: Vec<T>, n0: usize) -> Result<Self> {
        if prev.len() != cur.len() || cur.len() < 2 {
            return Err(invalid("initial rows must have equal length >= 2"));
        }
        if b.len() > cur.len() || bt.len() > cur.len() {
            return Err(invalid("window narrower than the boundary stencil"));
        }
        let next = vec![T::zero(); cur.len()];
        Ok(Simulator { stencil, b, bt, prev, cur, next, n: n0 })
    }

    /// Corner data `e^0 = 0`, `e^1 = delta_{j,0}` on cells `0..=j_max`.
    pub fn corner(stencil: Stencil<T>, b: Vec<T>, bt: Vec<T>, j_max: usize) -> Result<Self> {
        let len = j_max + 1;
        let prev = vec![T::zero(); len];
        let mut cur = vec![T::zero(); len];
        cur[0] = T::one();
        Self::with_rows(stencil, b, bt, prev, cur, 1)
    }

    pub fn time_index(&self) -> usize {
        self.n
    }

    pub fn current(&self) -> &[T] {
        &self.cur
    }

    pub fn previous(&self) -> &[T] {
        &self.prev
    }

    pub fn j_max(&self) -> usize {
        self.cur.len() - 1
    }

    /// Advances one step with a zero value at the right edge.
    pub fn step(&mut self) {
        self.step_with_edge(T::zero());
    }

    /// Advances one step, imposing `edge` in the last cell.
    pub fn step_with_edge(&mut self, edge: T) {
        let len = self.cur.len();
        let [cm, c0, cp] = &self.stencil.current;
        let [pm, p0, pp] = &self.stencil.previous;
        let (cur, prev, next) = (&self.cur, &self.prev, &mut self.next);
        for j in 1..len - 1 {
            next[j] = cm.clone() * cur[j - 1].clone()
                + c0.clone() * cur[j].clone()
                + cp.clone() * cur[j + 1].clone()
                + pm.clone() * prev[j - 1].clone()
                + p0.clone() * prev[j].clone()
                + pp.clone() * prev[j + 1].clone();
        }
        next[len - 1] = edge;
        let mut wall = T::zero();
        for (k, bk) in self.b.iter().enumerate() {
            wall = wall + bk.clone() * cur[k].clone();
        }
        for (k, bk) in self.bt.iter().enumerate() {
            wall = wall + bk.clone() * prev[k].clone();
        }
        next[0] = wall;
        std::mem::swap(&mut self.prev, &mut self.cur);
        std::mem::swap(&mut self.cur, &mut self.next);
        self.n += 1;
    }

    pub fn run_to(&mut self, n: usize) {
        while self.n < n {
            self.step();
        }
    }
}

impl Simulator<f64> {
    pub fn field(&self) -> ErrorField {
        ErrorField::new(self.n, self.cur.clone())
    }
}

/// Corner-data simulator for a bulk/boundary pair.
pub fn corner_simulator(
    bulk: &dyn BulkScheme,
    boundary: &BoundaryScheme,
    n_max: usize,
    j_max: Option<usize>,
    truncate: bool,
) -> Result<Simulator<f64>> {
    if n_max < 1 {
        return Err(invalid("n_max must be >= 1"));
    }
    let j_max = j_max.unwrap_or_else(|| default_window(n_max, boundary.width()));
    if j_max < n_max && !truncate {
        return Err(Error::WindowTooSmall { n_max, j_max });
    }
    let j_max = j_max.max(boundary.width()).max(1);
    Simulator::corner(bulk.stencil(), boundary.b.clone(), boundary.bt.clone(), j_max)
}

/// All rows `e^0 ..= e^{n_max}` of the corner problem on cells `0..=j_max`.
///
/// Keeps every row; for long runs use [`simulate_snapshots`] or drive a
/// [`Simulator`] directly.
pub fn simulate_error(
    bulk: &dyn BulkScheme,
    boundary: &BoundaryScheme,
    n_max: usize,
    j_max: usize,
) -> Result<Vec<ErrorField>> {
    let mut sim = corner_simulator(bulk, boundary, n_max, Some(j_max), false)?;
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(ErrorField::new(0, sim.previous().to_vec()));
    out.push(sim.field());
    while sim.time_index() < n_max {
        sim.step();
        out.push(sim.field());
    }
    Ok(out)
}

/// Rows at the requested times only (sorted, deduplicated), with the default window.
pub fn simulate_snapshots(
    bulk: &dyn BulkScheme,
    boundary: &BoundaryScheme,
    snapshots: &[usize],
) -> Result<Vec<ErrorField>> {
    let mut times: Vec<usize> = snapshots.to_vec();
    times.sort_unstable();
    times.dedup();
    let n_max = *times.last().ok_or_else(|| invalid("no snapshot times given"))?;
    let mut sim = corner_simulator(bulk, boundary, n_max.max(1), None, false)?;
    let mut out = Vec::with_capacity(times.len());
    for t in times {
        if t == 0 {
            out.push(ErrorField::new(0, vec![0.0; sim.current().len()]));
            continue;
        }
        sim.run_to(t);
        out.push(sim.field());
    }
    Ok(out)
}

/// Corner problem in arbitrary exact arithmetic; returns rows `1..=n_max` on `0..=j_max`.
pub fn simulate_exact<T: Clone + Num>(
    stencil: Stencil<T>,
    b: Vec<T>,
    bt: Vec<T>,
    n_max: usize,
    j_max: usize,
) -> Result<Vec<Vec<T>>> {
    let mut sim = Simulator::corner(stencil, b, bt, j_max)?;
    let mut rows = vec![sim.current().to_vec()];
    while sim.time_index() < n_max {
        sim.step();
        rows.push(sim.current().to_vec());
    }
    Ok(rows)
}
