//! Fracton occupation statistics.
//!
//! The average occupation of a state with label h in [1, 2] at Boltzmann
//! weight ξ = exp((ε−μ)/KT) is n = 1/(Y[ξ] − h), where Y is the unique
//! solution in [2, ∞) of
//!
//! ```text
//! ξ = (Y − 1)^(h−1) · (Y − 2)^(2−h)
//! ```
//!
//! h = 1 collapses to Fermi-Dirac (Y = ξ + 2, n = 1/(ξ+1)) and h = 2 to
//! Bose-Einstein (Y = ξ + 1, n = 1/(ξ−1), valid only for ξ > 1); in between
//! the statistics interpolate, with the exclusion bound n ≤ 1/(2−h).
//!
//! The equation is solved in log form, g(Y) = (h−1)·ln(Y−1) + (2−h)·ln(Y−2)
//! = ln ξ, which is strictly increasing on (2, ∞). Away from the boundary a
//! safeguarded Newton iteration runs in Y directly; near Y = 2 it runs in
//! w = ln(Y−2), which keeps the residual and the occupation at full
//! precision even where Y − 2 underflows the f64 returned to the caller.

use crate::error::{Error, Result};

/// One solved point of the distribution function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractonPoint {
    pub h: f64,
    pub xi: f64,
    /// Solution of the transcendental equation, Y in [2, ∞).
    pub y: f64,
    /// Average occupation 1/(Y − h), computed from the solver's internal
    /// state so it stays accurate when Y is close to 2.
    pub n: f64,
    /// Achieved log-form residual g(Y) − ln ξ at the solution.
    pub residual: f64,
}

/// Thermodynamic inputs defining ξ. Dimensionless by default (K = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoInput {
    pub energy: f64,
    pub chemical_potential: f64,
    pub temperature: f64,
    pub boltzmann: f64,
}

impl ThermoInput {
    pub fn new(energy: f64, chemical_potential: f64, temperature: f64) -> Self {
        ThermoInput {
            energy,
            chemical_potential,
            temperature,
            boltzmann: 1.0,
        }
    }

    pub fn with_boltzmann(mut self, boltzmann: f64) -> Self {
        self.boltzmann = boltzmann;
        self
    }
}

/// ξ = exp((ε − μ)/(K·T)).
pub fn boltzmann_weight(input: &ThermoInput) -> Result<f64> {
    if input.temperature <= 0.0 || input.temperature.is_nan() {
        return Err(Error::NonpositiveTemperature);
    }
    if input.boltzmann <= 0.0 || input.boltzmann.is_nan() {
        return Err(Error::NonpositiveBoltzmann);
    }
    Ok(((input.energy - input.chemical_potential) / (input.boltzmann * input.temperature)).exp())
}

fn validate(h: f64, xi: f64) -> Result<()> {
    if !h.is_finite() || !(1.0..=2.0).contains(&h) {
        return Err(Error::InvalidLabel(h.to_string()));
    }
    if xi < 0.0 || !xi.is_finite() {
        return Err(Error::NegativeWeight(xi));
    }
    if h == 2.0 && xi <= 1.0 {
        return Err(Error::CondensationRegion);
    }
    Ok(())
}

/// Solves the distribution function at (h, ξ).
pub fn solve_point(h: f64, xi: f64) -> Result<FractonPoint> {
    validate(h, xi)?;
    let a = h - 1.0;
    let b = 2.0 - h;

    if xi == 0.0 {
        // the (Y-2) factor forces the boundary; handled analytically so the
        // logarithm of zero never appears
        return Ok(FractonPoint {
            h,
            xi,
            y: 2.0,
            n: 1.0 / b,
            residual: 0.0,
        });
    }

    let t = xi.ln();
    // rough asymptotic scale of Y - 2; decides which variable to iterate in
    let boundary_scale = xi + 1.0 - h;
    let point = if boundary_scale > 2.0 {
        solve_in_y(h, xi, a, b, t)
    } else {
        solve_in_w(h, xi, a, b, t)
    };
    Ok(point)
}

/// Y component only.
pub fn solve_y(h: f64, xi: f64) -> Result<f64> {
    Ok(solve_point(h, xi)?.y)
}

/// Occupation n = 1/(Y − h).
pub fn occupation(h: f64, xi: f64) -> Result<f64> {
    Ok(solve_point(h, xi)?.n)
}

/// g(Y) − t with g the log form of the equation.
fn y_residual(a: f64, b: f64, y: f64, t: f64) -> f64 {
    a * (y - 1.0).ln() + b * (y - 2.0).ln() - t
}

/// Safeguarded Newton in Y, for solutions comfortably away from Y = 2.
fn solve_in_y(h: f64, xi: f64, a: f64, b: f64, t: f64) -> FractonPoint {
    // g(3) = a ln 2 <= ln xi here, and g(xi + 3) > ln xi always
    let mut lo = 3.0;
    let mut hi = xi + 3.0;
    let mut y = (xi + 3.0 - h).clamp(lo, hi);
    for _ in 0..200 {
        let f = y_residual(a, b, y, t);
        if f == 0.0 {
            break;
        }
        if f > 0.0 {
            hi = y;
        } else {
            lo = y;
        }
        let slope = a / (y - 1.0) + b / (y - 2.0);
        let mut next = y - f / slope;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let done = (next - y).abs() <= 1e-16 * y.abs() || hi - lo <= f64::EPSILON * hi;
        y = next;
        if done {
            break;
        }
    }
    FractonPoint {
        h,
        xi,
        y,
        n: 1.0 / (y - h),
        residual: y_residual(a, b, y, t),
    }
}

/// ln(1 + e^w) without overflow.
fn ln_1p_exp(w: f64) -> f64 {
    if w > 0.0 {
        w + (-w).exp().ln_1p()
    } else {
        w.exp().ln_1p()
    }
}

/// Logistic function, the derivative of ln_1p_exp.
fn sigmoid(w: f64) -> f64 {
    1.0 / (1.0 + (-w).exp())
}

/// Safeguarded Newton in w = ln(Y − 2), for solutions near the boundary.
fn solve_in_w(h: f64, xi: f64, a: f64, b: f64, t: f64) -> FractonPoint {
    let g = |w: f64| a * ln_1p_exp(w) + b * w;

    // seed: exact for h = 2; the linearized boundary expansion otherwise,
    // refined once through the fixed-point form w = (t - a ln(1 + e^w))/b
    let mut w = if b == 0.0 {
        t.exp_m1().ln()
    } else {
        let w0 = t / b;
        (t - a * ln_1p_exp(w0.min(5.0))) / b
    };

    // bracket the root; g is increasing in w
    let mut lo = w.min(0.0) - 1.0;
    let mut hi = w.max(0.0) + 1.0;
    let mut stride = 1.0;
    while g(lo) > t {
        lo -= stride;
        stride *= 2.0;
    }
    stride = 1.0;
    while g(hi) < t {
        hi += stride;
        stride *= 2.0;
    }
    w = w.clamp(lo, hi);

    for _ in 0..200 {
        let f = g(w) - t;
        if f == 0.0 {
            break;
        }
        if f > 0.0 {
            hi = w;
        } else {
            lo = w;
        }
        let slope = a * sigmoid(w) + b;
        let mut next = w - f / slope;
        if !slope.is_normal() || !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let done = (next - w).abs() <= 1e-16 * (1.0 + w.abs());
        w = next;
        if done {
            break;
        }
    }

    let u = w.exp();
    FractonPoint {
        h,
        xi,
        y: 2.0 + u,
        n: 1.0 / (b + u),
        residual: g(w) - t,
    }
}

/// Analytic solutions for the three labels with closed forms: Y = ξ + 2 at
/// h = 1, Y = ξ + 1 at h = 2, and the quadratic root (3 + √(1+4ξ²))/2 at
/// h = 3/2. The additive constant at the endpoints is the dual label 3 − h.
pub fn closed_form_y(h: f64, xi: f64) -> Result<f64> {
    validate(h, xi)?;
    if h == 1.0 {
        Ok(xi + 2.0)
    } else if h == 2.0 {
        Ok(xi + 1.0)
    } else if h == 1.5 {
        Ok(0.5 * (3.0 + (1.0 + 4.0 * xi * xi).sqrt()))
    } else {
        Err(Error::NoClosedForm(h))
    }
}

/// Largest attainable occupation, 1/(2 − h), reached at ξ = 0.
pub fn max_occupation(h: f64) -> Result<f64> {
    if !h.is_finite() || !(1.0..=2.0).contains(&h) {
        return Err(Error::InvalidLabel(h.to_string()));
    }
    if h == 2.0 {
        return Err(Error::Unbounded);
    }
    Ok(1.0 / (2.0 - h))
}
