//! Semi-infinite integration engines.
//!
//! Two integral classes appear in the energy pipeline:
//!
//! - **Damped** (imaginary axis): ∫₀^∞ f(u) du where f decays like
//!   e^(−u/scale) times a polynomial, or at worst like a power law u⁻² or
//!   faster. Handled by [`integrate_damped`]: the rational map
//!   u = scale·x/(1−x) compactifies the half line onto [0, 1) and an adaptive
//!   Gauss-Kronrod 15-point rule does the rest. Because the map normalizes
//!   the decay scale away, the panel decisions for f = uⁿe^(−2uR) are
//!   identical for every R and the relative accuracy is R-independent.
//!
//! - **Oscillatory** (real axis): ∫₀^∞ f(k) dk with f = (polynomial in k) ×
//!   sin/cos(2kR). These diverge classically; [`integrate_oscillatory`]
//!   defines them by Abel regularization, lim_{ε→0⁺} ∫ f(k) e^(−εk) dk,
//!   evaluating the damped integral on a geometric ε ladder and extrapolating
//!   the ladder to ε = 0 with cubic Neville polynomials. The moment oracle
//!   ∫ kⁿ trig(2kR) dk = n!·trig((n+1)π/2)/(2R)^(n+1) pins the accuracy.
//!
//! Both engines are strictly sequential with a fixed evaluation order, so
//! identical inputs give bit-identical results.

use crate::error::{Error, Result};

/// Tolerances and controls for one semi-infinite integral.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    /// Abel regulator ladder for the oscillatory engine. `None` selects the
    /// default ε_n = (R/2)·2⁻ⁿ, n = 0..7. Entries must be positive and
    /// strictly decreasing.
    pub regulator_sequence: Option<Vec<f64>>,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            abs_tol: 1e-30,
            max_subdivisions: 200,
            regulator_sequence: None,
        }
    }
}

impl QuadratureSpec {
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        Self {
            rel_tol,
            ..Self::default()
        }
    }

    fn tolerance(&self, value: f64) -> f64 {
        (self.rel_tol * value.abs()).max(self.abs_tol)
    }
}

/// Value and diagnostics of one integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadratureResult {
    /// Apply an exact prefactor to the value (and to the error estimate).
    pub fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            error_estimate: self.error_estimate * factor.abs(),
            ..self
        }
    }
}

// 15-point Kronrod nodes with the embedded 7-point Gauss rule, on [-1, 1].
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One Gauss-Kronrod 15 panel: returns (kronrod value, error estimate).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut resk = WGK[7] * fc;
    let mut resg = WG[3] * fc;
    let mut resabs = WGK[7] * fc.abs();
    let mut fv = [0.0f64; 15];
    fv[7] = fc;
    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv[j] = f1;
        fv[14 - j] = f2;
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * resk;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }
    let err = rescale_error((resk - resg) * half, resabs * half.abs(), resasc * half.abs());
    (resk * half, err)
}

/// QUADPACK error model: sharpen the raw |K15 − G7| difference against the
/// integrand's variation, floor it at the roundoff level of the panel.
fn rescale_error(err: f64, resabs: f64, resasc: f64) -> f64 {
    let mut e = err.abs();
    if resasc != 0.0 && e != 0.0 {
        let scale = (200.0 * e / resasc).powf(1.5);
        e = if scale < 1.0 { resasc * scale } else { resasc };
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        e = e.max(50.0 * f64::EPSILON * resabs);
    }
    e
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

/// Adaptive bisection on a finite interval, splitting the worst panel first.
fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: &F,
    seeds: &[(f64, f64)],
    spec: &QuadratureSpec,
) -> Result<QuadratureResult> {
    let mut panels: Vec<Panel> = Vec::with_capacity(spec.max_subdivisions + seeds.len());
    let mut evaluations = 0usize;
    for &(a, b) in seeds {
        let (value, error) = gk15(f, a, b);
        evaluations += 15;
        panels.push(Panel { a, b, value, error });
    }
    let mut splits = 0usize;
    loop {
        let mut value = neumaier_sum(panels.iter().map(|p| p.value));
        let mut error = neumaier_sum(panels.iter().map(|p| p.error));
        if !value.is_finite() {
            return Err(Error::QuadratureNonConvergence {
                error_estimate: f64::INFINITY,
                evaluations,
            });
        }
        if error <= spec.tolerance(value) {
            return Ok(QuadratureResult {
                value,
                error_estimate: error,
                evaluations,
                converged: true,
            });
        }
        if splits >= spec.max_subdivisions {
            return Err(Error::QuadratureNonConvergence {
                error_estimate: error,
                evaluations,
            });
        }
        // worst panel, leftmost on ties, so the walk order is reproducible
        let mut worst = 0;
        for (i, p) in panels.iter().enumerate() {
            if p.error > panels[worst].error {
                worst = i;
            }
        }
        let Panel { a, b, .. } = panels[worst];
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            // interval too small to split further
            value = neumaier_sum(panels.iter().map(|p| p.value));
            error = neumaier_sum(panels.iter().map(|p| p.error));
            return Ok(QuadratureResult {
                value,
                error_estimate: error,
                evaluations,
                converged: false,
            });
        }
        let (v1, e1) = gk15(f, a, mid);
        let (v2, e2) = gk15(f, mid, b);
        evaluations += 30;
        panels[worst] = Panel {
            a,
            b: mid,
            value: v1,
            error: e1,
        };
        panels.push(Panel {
            a: mid,
            b,
            value: v2,
            error: e2,
        });
        splits += 1;
    }
}

/// Compensated (Neumaier) summation in the iterator's order.
pub(crate) fn neumaier_sum<I: Iterator<Item = f64>>(it: I) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for x in it {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// ∫₀^∞ f(u) du for integrands decaying at least like u⁻² at infinity
/// (exponential damping included). `scale` sets the substitution
/// u = scale·x/(1−x); pass the decay scale, e.g. 1/(2R) for e^(−2uR).
pub fn integrate_damped<F: Fn(f64) -> f64>(
    f: F,
    scale: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult> {
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::Unsupported(format!(
            "damped integration needs a positive finite scale, got {scale}"
        )));
    }
    let g = |x: f64| {
        let one_minus = 1.0 - x;
        let u = scale * x / one_minus;
        let jac = scale / (one_minus * one_minus);
        let fu = f(u);
        if fu == 0.0 {
            0.0
        } else {
            fu * jac
        }
    };
    // seed panels crowd toward x = 1 where e^(-u/scale) integrands still
    // carry mass under the rational map
    let seeds = [
        (0.0, 0.25),
        (0.25, 0.5),
        (0.5, 0.75),
        (0.75, 0.875),
        (0.875, 0.9375),
        (0.9375, 1.0),
    ];
    integrate_adaptive(&g, &seeds, spec)
}

/// Abel-regularized ∫₀^∞ f(k) dk for integrands of the form
/// (polynomial in k) × sin/cos(2kR), optionally weighted by a bounded,
/// pole-free factor. Defined as lim_{ε→0⁺} of the e^(−εk)-damped integral,
/// computed on the regulator ladder and extrapolated to ε = 0.
pub fn integrate_oscillatory<F: Fn(f64) -> f64>(
    f: F,
    r: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult> {
    if !(r > 0.0) {
        return Err(Error::NonPositiveSeparation(r));
    }
    let ladder: Vec<f64> = match &spec.regulator_sequence {
        Some(seq) => {
            if seq.is_empty()
                || seq.iter().any(|&e| !(e > 0.0))
                || seq.windows(2).any(|w| w[1] >= w[0])
            {
                return Err(Error::BadRegulatorSequence);
            }
            seq.clone()
        }
        None => (0..8).map(|n| 0.5 * r / f64::powi(2.0, n)).collect(),
    };
    let mut values = Vec::with_capacity(ladder.len());
    let mut rung_errs = Vec::with_capacity(ladder.len());
    let mut evaluations = 0usize;
    for &eps in &ladder {
        let (v, e, n) = abel_damped(&f, r, eps, spec)?;
        values.push(v);
        rung_errs.push(e);
        evaluations += n;
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::RegulatorDivergence);
    }
    // A regulator ladder that keeps growing is a divergent input, not a
    // limit to extrapolate.
    if values.len() >= 4 {
        let m = values.len();
        let grows = (m - 3..m).all(|i| values[i].abs() > 2.0 * values[i - 1].abs().max(1e-300));
        let scale_ref = values[0].abs().max(spec.abs_tol);
        if grows && values[m - 1].abs() > 100.0 * scale_ref {
            return Err(Error::RegulatorDivergence);
        }
    }
    let (value, error_estimate) = extrapolate_to_zero(&ladder, &values, &rung_errs)?;
    Ok(QuadratureResult {
        value,
        error_estimate,
        evaluations,
        converged: error_estimate <= spec.tolerance(value),
    })
}

/// One rung of the Abel ladder: ∫₀^∞ f(k) e^(−εk) dk summed over half-period
/// panels of the 2kR oscillation, each panel a fixed 4×GK15 composite.
fn abel_damped<F: Fn(f64) -> f64>(
    f: &F,
    r: f64,
    eps: f64,
    spec: &QuadratureSpec,
) -> Result<(f64, f64, usize)> {
    let h = std::f64::consts::FRAC_PI_2 / r;
    let g = |k: f64| f(k) * (-eps * k).exp();
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut err: f64 = 0.0;
    let mut evaluations = 0usize;
    let mut small_run = 0usize;
    let max_panels = 2_000_000usize;
    for m in 0..max_panels {
        let a = m as f64 * h;
        let b = a + h;
        let mut pv = 0.0;
        let mut pe = 0.0;
        for s in 0..4 {
            let sa = a + h * (s as f64 / 4.0);
            let sb = a + h * ((s + 1) as f64 / 4.0);
            let (v, e) = gk15(&g, sa, sb);
            pv += v;
            pe += e;
        }
        evaluations += 60;
        let t = sum + pv;
        if sum.abs() >= pv.abs() {
            comp += (sum - t) + pv;
        } else {
            comp += (pv - t) + sum;
        }
        sum = t;
        err += pe;
        let total = sum + comp;
        // The panel sums alternate under a decaying envelope, so once they
        // drop below tolerance (and the damping has truly set in) the rest
        // of the tail is bounded by the last panel.
        let tol = (0.2 * spec.rel_tol.min(1e-6) * total.abs()).max(spec.abs_tol);
        if pv.abs() < tol {
            small_run += 1;
            if small_run >= 3 && eps * b >= 30.0 {
                return Ok((total, err + pv.abs(), evaluations));
            }
        } else {
            small_run = 0;
        }
        if !total.is_finite() {
            return Err(Error::RegulatorDivergence);
        }
    }
    Err(Error::QuadratureNonConvergence {
        error_estimate: err,
        evaluations,
    })
}

/// Neville tableau at ε = 0 over sliding windows of four ladder rungs,
/// keeping the window whose final correction is smallest. Returns
/// (value, last-increment error estimate).
fn extrapolate_to_zero(eps: &[f64], values: &[f64], rung_errs: &[f64]) -> Result<(f64, f64)> {
    let n = eps.len();
    if n == 1 {
        return Ok((values[0], f64::INFINITY));
    }
    let width = 4.min(n);
    let mut best: Option<(f64, f64)> = None;
    for start in 0..=(n - width) {
        let e = &eps[start..start + width];
        let v = &values[start..start + width];
        let mut tab = v.to_vec();
        let mut last = tab[0];
        for order in 1..width {
            for i in 0..width - order {
                tab[i] = tab[i + 1] + (tab[i] - tab[i + 1]) * e[i + order] / (e[i + order] - e[i]);
            }
            last = tab[0];
        }
        let prev = {
            // value of the (width−2)-order tableau over the same window's tail
            let mut t = v[1..].to_vec();
            let et = &e[1..];
            for order in 1..width - 1 {
                for i in 0..width - 1 - order {
                    t[i] = t[i + 1] + (t[i] - t[i + 1]) * et[i + order] / (et[i + order] - et[i]);
                }
            }
            t[0]
        };
        // Score each window by its final Neville correction plus the
        // quadrature error of the rungs it uses; deep rungs drown narrow
        // brackets in roundoff, so the cheapest honest window wins.
        let window_err = rung_errs[start..start + width]
            .iter()
            .fold(0.0f64, |m, &x| m.max(x));
        let score = (last - prev).abs() + window_err;
        match best {
            Some((_, b)) if score >= b => {}
            _ => best = Some((last, score)),
        }
    }
    best.ok_or(Error::RegulatorDivergence)
}
