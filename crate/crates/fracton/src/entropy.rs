//! Entropy per state for fracton statistics.
//!
//! For label h and occupation n the entropy per state is
//!
//! ```text
//! S[h, n] = K·[ (1 + (h−1)n)·ln((1 + (h−1)n)/n) − (1 + (h−2)n)·ln((1 + (h−2)n)/n) ]
//! ```
//!
//! reducing to the Fermi mixing entropy at h = 1 and the Bose form at h = 2.
//! At equilibrium the occupation of the distribution function maximizes it:
//! ∂S/∂n = K·ln ξ, which [`equilibrium_residual`] checks by central
//! differences.

use crate::error::{Error, Result};
use crate::statistics;

/// One evaluated entropy point, in units of the Boltzmann constant used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyPoint {
    pub h: f64,
    pub n: f64,
    pub entropy: f64,
}

/// Entropy per state at label h and occupation n, in units of `boltzmann`.
///
/// Both x·ln(x/n) terms take their limit value 0 when x vanishes, which
/// happens for the second term exactly at the exclusion bound n = 1/(2−h).
pub fn entropy_per_state(h: f64, n: f64, boltzmann: f64) -> Result<f64> {
    if !h.is_finite() || !(1.0..=2.0).contains(&h) {
        return Err(Error::InvalidLabel(h.to_string()));
    }
    if boltzmann <= 0.0 || boltzmann.is_nan() {
        return Err(Error::NonpositiveBoltzmann);
    }
    if n <= 0.0 || n.is_nan() {
        return Err(Error::InvalidOccupation(n));
    }
    if h < 2.0 {
        let bound = 1.0 / (2.0 - h);
        if n > bound {
            return Err(Error::ExclusionViolation {
                occupation: n,
                bound,
            });
        }
    }

    let first = 1.0 + (h - 1.0) * n;
    // nonnegative for n within the bound; clamp the last-bit dust so the
    // logarithm never sees a negative argument
    let second = (1.0 + (h - 2.0) * n).max(0.0);
    let term = |x: f64| if x == 0.0 { 0.0 } else { x * (x / n).ln() };
    Ok(boltzmann * (term(first) - term(second)))
}

/// Convenience bundle used by grid sweeps.
pub fn entropy_point(h: f64, n: f64, boltzmann: f64) -> Result<EntropyPoint> {
    Ok(EntropyPoint {
        h,
        n,
        entropy: entropy_per_state(h, n, boltzmann)?,
    })
}

/// |∂S/∂n − K·ln ξ| at the equilibrium occupation n(h, ξ).
///
/// The derivative is taken by central differences with step 1e-6; the
/// distribution function should drive the residual to zero.
pub fn equilibrium_residual(h: f64, xi: f64, boltzmann: f64) -> Result<f64> {
    let n = statistics::occupation(h, xi)?;
    let step = 1e-6;
    let above = entropy_per_state(h, n + step, boltzmann)?;
    let below = entropy_per_state(h, n - step, boltzmann)?;
    let derivative = (above - below) / (2.0 * step);
    Ok((derivative - boltzmann * xi.ln()).abs())
}
