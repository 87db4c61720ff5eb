use std::path::Path;

use anyhow::{bail, Context, Result};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use fdw_core::asymptotics::{
    dirichlet_l2_limit, first_moment_slope, l2_asymptote, lp_exponent, moment_asymptote, Mode, PredictContext,
    Prediction, PredictorRegistry,
};
use fdw_core::exact::{manufactured_closed_form, parse_rational, to_f64, upwind_explicit, Rational};
use fdw_core::green::{green_trace, trace_divergence, GreenKind, GreenStepper};
use fdw_core::scheme::{
    corner_simulator, gaussian_datum, lp_norm, moments, simulate_exact, simulate_pde, BoundaryPresets, BoundaryScheme,
    BulkKind, BulkParams, BulkRegistry, BulkScheme, CornerScheme, ErrorField, NormOrder, SchemeFile, Stencil,
};
use fdw_core::stability::classify;
use fdw_core::Error;

use crate::config::{Command, Format, ProbeArgs, RunConfig, SchemeArgs};
use crate::out::{num, Sink};

fn validation(msg: impl Into<String>) -> anyhow::Error {
    Error::InvalidParameter(msg.into()).into()
}

fn rational(s: &str) -> Result<Rational> {
    Ok(parse_rational(s)?)
}

fn real(s: &str) -> Result<f64> {
    Ok(to_f64(&rational(s)?))
}

struct Setup {
    courant: f64,
    bulk: Box<dyn BulkScheme>,
    boundary: BoundaryScheme,
    corner: Option<CornerScheme>,
}

const BUNDLED: [(&str, &str); 4] = [
    ("upwind.json", include_str!("../../../schemes/upwind.json")),
    ("dirichlet.json", include_str!("../../../schemes/dirichlet.json")),
    ("upwind-diffusive.json", include_str!("../../../schemes/upwind-diffusive.json")),
    ("ex29.json", include_str!("../../../schemes/ex29.json")),
];

fn is_file(spec: &str) -> bool {
    spec.ends_with(".json") || Path::new(spec).is_file()
}

/// Reads a scheme file, falling back to the bundled copies (C = -1/2) by file name.
fn load_scheme_file(spec: &str) -> Result<SchemeFile> {
    let path = Path::new(spec);
    if !path.exists() {
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
        if let Some((_, text)) = BUNDLED.iter().find(|(n, _)| *n == name) {
            return Ok(SchemeFile::from_json(text)?);
        }
    }
    SchemeFile::load(path).with_context(|| format!("reading scheme file `{spec}`"))
}

fn setup(s: &SchemeArgs) -> Result<Setup> {
    let courant = real(&s.courant)?;
    let omega = s.omega.as_deref().map(real).transpose()?;
    let params = BulkParams { courant, omega, allow_any_courant: s.allow_any_courant };
    let bulk = BulkRegistry::builtin().build(&s.bulk, &params)?;
    let spec = s.boundary_spec();
    let (boundary, corner) = if is_file(spec) {
        let f = load_scheme_file(spec)?;
        (f.boundary()?, f.corner()?)
    } else {
        (BoundaryPresets::builtin().build(&preset_spec(spec)?, courant)?, None)
    };
    Ok(Setup { courant, bulk, boundary, corner })
}

/// `name:p/q` with the parameter turned into a float.
fn preset_spec(spec: &str) -> Result<String> {
    Ok(match spec.split_once(':') {
        Some((name, p)) => format!("{name}:{:?}", real(p)?),
        None => spec.to_string(),
    })
}

/// Boundary with exact coefficients for the presets that have them.
fn exact_boundary(spec: &str, c: &Rational) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let one = Rational::one();
    let (name, param) = match spec.split_once(':') {
        Some((n, p)) => (n.trim(), Some(rational(p)?)),
        None => (spec.trim(), None),
    };
    Ok(match name.to_ascii_lowercase().as_str() {
        "dirichlet" => (vec![], vec![]),
        "upwind" => (vec![&one + c, -c.clone()], vec![]),
        "upwind-diffusive" => {
            let d = param.unwrap_or_else(|| Rational::new(1.into(), 4.into()));
            let h = &d * c / Rational::from_integer(2.into());
            (vec![&one + c, -c.clone()], vec![h.clone(), -(&d * c), h])
        }
        "extrapolated-leapfrog" => {
            let a = &one + c + c;
            (vec![a.clone(), -a], vec![Rational::zero(), one])
        }
        "anti-bounce-back" => (vec![c.clone(), -c.clone()], vec![one]),
        _ if is_file(spec) => {
            let f = load_scheme_file(spec)?;
            let conv = |v: &[f64]| -> Result<Vec<Rational>> {
                v.iter().map(|x| Rational::from_float(*x).ok_or_else(|| validation("non-finite coefficient"))).collect()
            };
            (conv(&f.b)?, conv(&f.bt)?)
        }
        _ => bail!(validation(format!("exact mode has no rational form of boundary `{spec}`"))),
    })
}

pub fn run(cfg: &RunConfig) -> Result<()> {
    let mut sink = Sink::open(cfg.output.as_deref())?;
    match &cfg.command {
        Command::Simulate { scheme, nmax, jmax, snapshots, exact } => {
            simulate(&mut sink, cfg.format, scheme, *nmax, *jmax, snapshots, *exact)?
        }
        Command::PdeDemo { scheme, dx, t_final } => pde_demo(&mut sink, cfg.format, scheme, dx, *t_final)?,
        Command::Predict { scheme, probe, n } => predict(&mut sink, cfg.format, scheme, probe, *n)?,
        Command::Compare { scheme, probe, nmax, ns } => compare(&mut sink, cfg.format, scheme, probe, *nmax, ns)?,
        Command::Stability { scheme, delta, grid } => {
            let s = setup(scheme)?;
            let v = classify(&s.boundary, s.bulk.as_ref(), *delta, *grid)?;
            sink.json(&v.record())?;
        }
        Command::L2 { scheme, nmax } => l2(&mut sink, cfg.format, scheme, *nmax)?,
        Command::Moments { scheme, nmax, ns } => moment_table(&mut sink, cfg.format, scheme, *nmax, ns)?,
        Command::Green { courant, which, nmax, snapshots } => {
            green(&mut sink, cfg.format, &real(courant)?, which, *nmax, snapshots)?
        }
        Command::Trace { courant, nmax, every } => trace(&mut sink, cfg.format, real(courant)?, *nmax, *every)?,
        Command::LpScan { scheme, p, ns } => lp_scan(&mut sink, cfg.format, scheme, p, ns)?,
        Command::OracleCheck { which, courant } => oracle_check(&mut sink, cfg.format, which, courant)?,
    }
    sink.finish()
}

fn default_ns(nmax: usize, ns: &[usize]) -> Vec<usize> {
    let mut v = if ns.is_empty() { vec![nmax / 8, nmax / 4, nmax / 2, nmax] } else { ns.to_vec() };
    v.retain(|&n| n >= 1);
    v.sort_unstable();
    v.dedup();
    v
}

/// Rows `e^n` at the requested times, computed in one pass.
fn snapshots(s: &Setup, times: &[usize], jmax: Option<usize>, truncate: bool) -> Result<Vec<ErrorField>> {
    let n_max = *times.iter().max().ok_or_else(|| validation("no times requested"))?;
    let mut sim = corner_simulator(s.bulk.as_ref(), &s.boundary, n_max.max(1), jmax, truncate)?;
    let mut out = Vec::with_capacity(times.len());
    for &t in times {
        if t == 0 {
            out.push(ErrorField::new(0, vec![0.0; sim.current().len()]));
            continue;
        }
        sim.run_to(t);
        out.push(sim.field());
    }
    Ok(out)
}

#[derive(Serialize)]
struct Row<T> {
    n: usize,
    values: Vec<T>,
}

fn simulate(
    sink: &mut Sink,
    format: Format,
    scheme: &SchemeArgs,
    nmax: usize,
    jmax: Option<usize>,
    snaps: &[usize],
    exact: bool,
) -> Result<()> {
    let keep = |n: usize| snaps.is_empty() || snaps.contains(&n);
    if exact {
        let c = rational(&scheme.courant)?;
        let omega = scheme.omega.as_deref().map(rational).transpose()?;
        let kind = BulkRegistry::builtin()
            .build(
                &scheme.bulk,
                &BulkParams {
                    courant: to_f64(&c),
                    omega: omega.as_ref().map(to_f64),
                    allow_any_courant: scheme.allow_any_courant,
                },
            )?
            .kind();
        let stencil = Stencil::for_kind(kind, c.clone(), omega)?;
        let (b, bt) = exact_boundary(scheme.boundary_spec(), &c)?;
        let width = b.len().max(bt.len());
        let j_max = jmax.unwrap_or(nmax + width.max(2) + 1);
        let rows = simulate_exact(stencil, b, bt, nmax.max(1), j_max)?;
        let mut all = vec![(0usize, vec![Rational::zero(); j_max + 1])];
        all.extend(rows.into_iter().enumerate().map(|(i, r)| (i + 1, r)));
        all.retain(|(n, _)| *n <= nmax && keep(*n));
        match format {
            Format::Csv => {
                sink.header(&["n", "j", "value"])?;
                for (n, r) in &all {
                    for (j, v) in r.iter().enumerate() {
                        sink.line(&[n.to_string(), j.to_string(), v.to_string()])?;
                    }
                }
            }
            Format::Json => {
                let rows: Vec<Row<String>> =
                    all.iter().map(|(n, r)| Row { n: *n, values: r.iter().map(|v| v.to_string()).collect() }).collect();
                sink.json(&rows)?;
            }
        }
        return Ok(());
    }
    let s = setup(scheme)?;
    let times: Vec<usize> = (0..=nmax).filter(|&n| keep(n)).collect();
    let rows = snapshots(&s, &times, jmax, false)?;
    match format {
        Format::Csv => {
            sink.header(&["n", "j", "value"])?;
            for r in &rows {
                for (j, v) in r.values.iter().enumerate() {
                    sink.line(&[r.time_index.to_string(), j.to_string(), num(*v)])?;
                }
            }
        }
        Format::Json => {
            let rows: Vec<Row<f64>> = rows.into_iter().map(|r| Row { n: r.time_index, values: r.values }).collect();
            sink.json(&rows)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct PdeLine {
    dx: f64,
    n_final: usize,
    l2_error: f64,
    order: Option<f64>,
}

fn pde_demo(sink: &mut Sink, format: Format, scheme: &SchemeArgs, dx: &[String], t_final: f64) -> Result<()> {
    let s = setup(scheme)?;
    if s.bulk.kind() != BulkKind::LeapFrog {
        bail!(validation("pde-demo runs the leap-frog bulk"));
    }
    let corner = s.corner.clone().unwrap_or_else(|| CornerScheme::lax_friedrichs(s.courant));
    let dxs: Vec<f64> = dx.iter().map(|d| real(d)).collect::<Result<_>>()?;
    let runs: Vec<(f64, usize, f64)> = dxs
        .par_iter()
        .map(|&h| {
            let r = simulate_pde(&s.boundary, &corner, &gaussian_datum, h, s.courant, t_final)?;
            Ok((h, r.n_final, r.final_error_l2()))
        })
        .collect::<Result<_>>()?;
    let mut lines = Vec::with_capacity(runs.len());
    for (i, &(h, n, e)) in runs.iter().enumerate() {
        let order = (i > 0).then(|| {
            let (h0, _, e0) = runs[i - 1];
            (e0 / e).ln() / (h0 / h).ln()
        });
        lines.push(PdeLine { dx: h, n_final: n, l2_error: e, order });
    }
    match format {
        Format::Csv => {
            sink.header(&["dx", "n_final", "l2_error", "order"])?;
            for l in &lines {
                sink.line(&[num(l.dx), l.n_final.to_string(), num(l.l2_error), l.order.map(num).unwrap_or_default()])?;
            }
        }
        Format::Json => sink.json(&lines)?,
    }
    Ok(())
}

/// The cell probed at time `n`.
fn probe_j(probe: &ProbeArgs, courant: f64, n: usize) -> Result<usize> {
    if let Some(j) = probe.j {
        return Ok(j);
    }
    if let Some(nu) = &probe.nu {
        let nu = rational(nu)?;
        if nu.is_negative() {
            bail!(validation("nu must be nonnegative"));
        }
        let q = nu.denom().to_usize().ok_or_else(|| validation("nu denominator too large"))?;
        let p = nu.numer().to_usize().ok_or_else(|| validation("nu numerator too large"))?;
        if n % q != 0 {
            bail!(validation(format!("n = {n} is not a multiple of the denominator of nu = {nu}")));
        }
        return Ok(p * (n / q));
    }
    let centre = match probe.zone.to_ascii_lowercase().as_str() {
        "front" => -courant * n as f64,
        "gaussian" => courant * n as f64,
        "transition" => 0.5 * courant.abs() * n as f64,
        _ => bail!(validation("give --j or --nu for this zone")),
    };
    let j = centre.round() as i64 + probe.offset;
    usize::try_from(j).map_err(|_| validation(format!("probe cell {j} is negative")))
}

fn predict(sink: &mut Sink, format: Format, scheme: &SchemeArgs, probe: &ProbeArgs, n: usize) -> Result<()> {
    let s = setup(scheme)?;
    let ctx = PredictContext { boundary: &s.boundary, bulk: s.bulk.as_ref(), mode: Mode::parse(&probe.mode)? };
    let j = probe_j(probe, s.courant, n)?;
    let p = PredictorRegistry::builtin().predict(&probe.zone, &ctx, n, j)?;
    match format {
        Format::Csv => {
            sink.header(&["n", "j", "zone", "value", "scale_exponent"])?;
            sink.line(&[n.to_string(), j.to_string(), p.zone.name().into(), num(p.value), num(p.scale_exponent)])?;
        }
        Format::Json => sink.json(&p)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct CompareRow {
    n: usize,
    j: usize,
    zone: &'static str,
    simulated: f64,
    predicted: f64,
    abs_err: f64,
    scaled_err: f64,
}

fn compare(
    sink: &mut Sink,
    format: Format,
    scheme: &SchemeArgs,
    probe: &ProbeArgs,
    nmax: usize,
    ns: &[usize],
) -> Result<()> {
    let s = setup(scheme)?;
    let mode = Mode::parse(&probe.mode)?;
    let mut ns = default_ns(nmax, ns);
    if let Some(nu) = &probe.nu {
        let q = rational(nu)?.denom().to_usize().unwrap_or(1).max(1);
        ns = ns.into_iter().map(|n| n - n % q).filter(|&n| n > 0).collect();
        ns.dedup();
    }
    let probes: Vec<(usize, usize)> =
        ns.iter().map(|&n| Ok((n, probe_j(probe, s.courant, n)?))).collect::<Result<_>>()?;
    let fields = snapshots(&s, &ns, None, false)?;
    let reg = PredictorRegistry::builtin();
    let ctx = PredictContext { boundary: &s.boundary, bulk: s.bulk.as_ref(), mode };
    let preds: Vec<Prediction> =
        probes.par_iter().map(|&(n, j)| reg.predict(&probe.zone, &ctx, n, j)).collect::<fdw_core::Result<_>>()?;
    let rows: Vec<CompareRow> = preds
        .iter()
        .zip(&fields)
        .map(|(p, f)| {
            let sim = f.values.get(p.j).copied().unwrap_or(0.0);
            let abs_err = (sim - p.value).abs();
            CompareRow {
                n: p.n,
                j: p.j,
                zone: p.zone.name(),
                simulated: sim,
                predicted: p.value,
                abs_err,
                scaled_err: abs_err * (p.n as f64).powf(p.zone.error_exponent()),
            }
        })
        .collect();
    match format {
        Format::Csv => {
            sink.header(&["n", "j", "zone", "simulated", "predicted", "abs_err", "scaled_err"])?;
            for r in &rows {
                sink.line(&[
                    r.n.to_string(),
                    r.j.to_string(),
                    r.zone.into(),
                    num(r.simulated),
                    num(r.predicted),
                    num(r.abs_err),
                    num(r.scaled_err),
                ])?;
            }
        }
        Format::Json => sink.json(&rows)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct L2Report {
    limit: f64,
    imag_residual: f64,
    error_estimate: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    dirichlet_closed_form: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    simulated: Option<f64>,
}

fn l2(sink: &mut Sink, format: Format, scheme: &SchemeArgs, nmax: Option<usize>) -> Result<()> {
    let s = setup(scheme)?;
    let a = l2_asymptote(&s.boundary, s.bulk.as_ref())?;
    let simulated = match nmax {
        Some(n) => Some(lp_norm(&snapshots(&s, &[n], None, false)?[0], NormOrder::P(2.0), false)?),
        None => None,
    };
    let dirichlet = (s.boundary == BoundaryScheme::dirichlet()).then(|| dirichlet_l2_limit(s.courant));
    let rep = L2Report {
        limit: a.limit,
        imag_residual: a.imag_residual,
        error_estimate: a.error_estimate,
        dirichlet_closed_form: dirichlet,
        n: nmax,
        simulated,
    };
    match format {
        Format::Csv => {
            sink.header(&["quantity", "value"])?;
            sink.line(&["limit".into(), num(rep.limit)])?;
            sink.line(&["imag_residual".into(), num(rep.imag_residual)])?;
            if let Some(d) = rep.dirichlet_closed_form {
                sink.line(&["dirichlet_closed_form".into(), num(d)])?;
            }
            if let (Some(n), Some(v)) = (rep.n, rep.simulated) {
                sink.line(&[format!("simulated_n{n}"), num(v)])?;
            }
        }
        Format::Json => sink.json(&rep)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct MomentRow {
    n: usize,
    m0: f64,
    m0_pred: f64,
    alt: f64,
    alt_pred: f64,
    m1: f64,
    m1_pred: f64,
    /// Slope of `(-1)^n m1` since the previous row.
    m1_slope: Option<f64>,
    m1_slope_pred: f64,
}

fn moment_table(sink: &mut Sink, format: Format, scheme: &SchemeArgs, nmax: usize, ns: &[usize]) -> Result<()> {
    let s = setup(scheme)?;
    let c = s.courant;
    let ns = default_ns(nmax, ns);
    let fields = snapshots(&s, &ns, None, false)?;
    let slope = first_moment_slope(&s.boundary, c)?;
    let mut rows: Vec<MomentRow> = Vec::with_capacity(ns.len());
    for f in &fields {
        let n = f.time_index;
        let m1 = moments(f, 1, false);
        let m1_slope = rows.last().map(|p| {
            let sgn = |k: usize| if k % 2 == 0 { 1.0 } else { -1.0 };
            (sgn(n) * m1 - sgn(p.n) * p.m1) / (n - p.n) as f64
        });
        rows.push(MomentRow {
            n,
            m0: moments(f, 0, false),
            m0_pred: moment_asymptote(&s.boundary, c, 0, false, n)?,
            alt: moments(f, 0, true),
            alt_pred: moment_asymptote(&s.boundary, c, 0, true, n)?,
            m1,
            m1_pred: moment_asymptote(&s.boundary, c, 1, false, n)?,
            m1_slope,
            m1_slope_pred: slope,
        });
    }
    match format {
        Format::Csv => {
            sink.header(&["n", "m0", "m0_pred", "alt", "alt_pred", "m1", "m1_pred", "m1_slope", "m1_slope_pred"])?;
            for r in &rows {
                sink.line(&[
                    r.n.to_string(),
                    num(r.m0),
                    num(r.m0_pred),
                    num(r.alt),
                    num(r.alt_pred),
                    num(r.m1),
                    num(r.m1_pred),
                    r.m1_slope.map(num).unwrap_or_default(),
                    num(r.m1_slope_pred),
                ])?;
            }
        }
        Format::Json => sink.json(&rows)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct GreenRow {
    n: usize,
    j: i64,
    value: f64,
}

fn green(sink: &mut Sink, format: Format, courant: &f64, which: &str, nmax: usize, snaps: &[usize]) -> Result<()> {
    let which = GreenKind::parse(which)?;
    let times = if snaps.is_empty() { vec![nmax] } else { snaps.to_vec() };
    let mut st = GreenStepper::new(*courant, which, nmax.max(1))?;
    let mut rows = Vec::new();
    let mut sorted = times.clone();
    sorted.sort_unstable();
    sorted.dedup();
    for t in sorted {
        if t > nmax {
            bail!(validation(format!("snapshot {t} beyond nmax = {nmax}")));
        }
        let field = if t == 0 {
            st.previous()
        } else {
            while st.n() < t {
                st.step();
            }
            st.field()
        };
        let w = t as i64 + 1;
        for j in -w..=w {
            rows.push(GreenRow { n: t, j, value: field.at(j) });
        }
    }
    match format {
        Format::Csv => {
            sink.header(&["n", "j", "value"])?;
            for r in &rows {
                sink.line(&[r.n.to_string(), r.j.to_string(), num(r.value)])?;
            }
        }
        Format::Json => sink.json(&rows)?,
    }
    Ok(())
}

fn trace(sink: &mut Sink, format: Format, courant: f64, nmax: usize, every: Option<usize>) -> Result<()> {
    let every = every.unwrap_or((nmax / 100).max(1)).max(1);
    match format {
        Format::Csv => {
            let tr = green_trace(courant, nmax)?;
            sink.header(&["N", "partial_sum"])?;
            let mut s = 0.0;
            for (n, v) in tr.iter().enumerate() {
                s += v * v;
                if n % every == 0 || n == nmax {
                    sink.line(&[n.to_string(), num(s)])?;
                }
            }
        }
        Format::Json => sink.json(&trace_divergence(courant, nmax)?)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct LpRow {
    p: f64,
    norms: Vec<f64>,
    fitted_exponent: f64,
    predicted_exponent: f64,
    dominant: &'static str,
}

fn lp_scan(sink: &mut Sink, format: Format, scheme: &SchemeArgs, ps: &[String], ns: &[usize]) -> Result<()> {
    let s = setup(scheme)?;
    let ns = default_ns(*ns.iter().max().unwrap_or(&0), ns);
    if ns.len() < 2 {
        bail!(validation("lp-scan needs at least two times"));
    }
    let fields = snapshots(&s, &ns, None, false)?;
    let mut rows = Vec::with_capacity(ps.len());
    for p in ps {
        let order = NormOrder::parse(p)?;
        let norms: Vec<f64> = fields.iter().map(|f| lp_norm(f, order, false)).collect::<fdw_core::Result<_>>()?;
        let xs: Vec<f64> = ns.iter().map(|&n| (n as f64).ln()).collect();
        let ys: Vec<f64> = norms.iter().map(|v| v.ln()).collect();
        let m = xs.len() as f64;
        let (sx, sy) = (xs.iter().sum::<f64>(), ys.iter().sum::<f64>());
        let sxx: f64 = xs.iter().map(|x| x * x).sum();
        let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| x * y).sum();
        let fitted = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        let pred = lp_exponent(order.value())?;
        rows.push(LpRow {
            p: order.value(),
            norms,
            fitted_exponent: fitted,
            predicted_exponent: pred.exponent,
            dominant: pred.dominant,
        });
    }
    match format {
        Format::Csv => {
            sink.header(&["p", "fitted_exponent", "predicted_exponent", "dominant"])?;
            for r in &rows {
                sink.line(&[num(r.p), num(r.fitted_exponent), num(r.predicted_exponent), r.dominant.into()])?;
            }
        }
        Format::Json => sink.json(&rows)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct OracleRow {
    check: &'static str,
    courant: String,
    pairs: usize,
    mismatches: usize,
}

fn oracle_check(sink: &mut Sink, format: Format, which: &str, courants: &[String]) -> Result<()> {
    let which = which.to_ascii_lowercase();
    if !["all", "upwind-explicit", "manufactured"].contains(&which.as_str()) {
        bail!(validation(format!("unknown oracle `{which}` (upwind-explicit, manufactured, all)")));
    }
    let cs: Vec<Rational> = courants.iter().map(|c| rational(c)).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for c in &cs {
        if which != "manufactured" {
            let one = Rational::one();
            let recur = simulate_exact(Stencil::leap_frog(c.clone()), vec![&one + c, -c.clone()], vec![], 20, 22)?;
            let pairs: Vec<(usize, usize)> = (2..=20).flat_map(|n| (0..=n).map(move |j| (n, j))).collect();
            let bad = pairs
                .par_iter()
                .map(|&(n, j)| upwind_explicit(c, n, j).map(|v| usize::from(v != recur[n - 1][j])))
                .collect::<fdw_core::Result<Vec<_>>>()?
                .into_iter()
                .sum();
            rows.push(OracleRow {
                check: "upwind-explicit",
                courant: c.to_string(),
                pairs: pairs.len(),
                mismatches: bad,
            });
        }
        if which != "upwind-explicit" {
            let recur = simulate_exact(Stencil::manufactured(c.clone()), vec![], vec![], 30, 32)?;
            let mut pairs = 0;
            let mut bad = 0;
            for n in 2..=30 {
                for j in 0..=n {
                    pairs += 1;
                    bad += usize::from(manufactured_closed_form(c, n, j) != recur[n - 1][j]);
                }
            }
            rows.push(OracleRow { check: "manufactured", courant: c.to_string(), pairs, mismatches: bad });
        }
    }
    match format {
        Format::Csv => {
            sink.header(&["check", "courant", "pairs", "mismatches"])?;
            for r in &rows {
                sink.line(&[r.check.into(), r.courant.clone(), r.pairs.to_string(), r.mismatches.to_string()])?;
            }
        }
        Format::Json => sink.json(&rows)?,
    }
    let total: usize = rows.iter().map(|r| r.mismatches).sum();
    if total > 0 {
        return Err(Error::Numerical(format!("{total} oracle mismatches")).into());
    }
    Ok(())
}
