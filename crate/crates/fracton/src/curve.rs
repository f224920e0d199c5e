//! Divider (caliper) dimension of planar fractal curves.
//!
//! A curve is walked with a fixed opening R: from the current anchor, jump
//! to the first point of the polyline at chord distance R. The measured
//! length L(R) of a fractal curve scales as R^(1−h), so the dimension falls
//! out of the slope of ln L against ln R: h = 1 − slope. A rectifiable
//! curve gives slope 0 and h = 1.
//!
//! The built-in generator produces generalized Koch curves: four segments
//! of ratio r per level, with r = 4^(−1/d) so the curve's similarity
//! dimension is exactly d. The classic snowflake edge is d = ln 4 / ln 3.

use crate::error::{Error, Result};

/// Hard cap on the generator depth; level 12 is already 16.7M segments.
pub const MAX_KOCH_LEVEL: u32 = 12;

/// An ordered planar polyline with generator metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvePolyline {
    points: Vec<[f64; 2]>,
    generator: String,
    level: u32,
}

impl CurvePolyline {
    /// Wraps explicit points; at least two, consecutive points distinct.
    pub fn from_points(points: Vec<[f64; 2]>) -> Result<Self> {
        Self::with_metadata(points, "custom", 0)
    }

    fn with_metadata(points: Vec<[f64; 2]>, generator: &str, level: u32) -> Result<Self> {
        if points.len() < 2 || points.iter().flatten().any(|c| !c.is_finite()) {
            return Err(Error::DegenerateCurve);
        }
        if points.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::DegenerateCurve);
        }
        Ok(CurvePolyline {
            points,
            generator: generator.to_string(),
            level,
        })
    }

    pub fn points(&self) -> &[[f64; 2]] {
        &self.points
    }

    pub fn generator(&self) -> &str {
        &self.generator
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Diagonal of the bounding box.
    pub fn extent(&self) -> f64 {
        let mut min = [f64::INFINITY; 2];
        let mut max = [f64::NEG_INFINITY; 2];
        for p in &self.points {
            for axis in 0..2 {
                min[axis] = min[axis].min(p[axis]);
                max[axis] = max[axis].max(p[axis]);
            }
        }
        ((max[0] - min[0]).powi(2) + (max[1] - min[1]).powi(2)).sqrt()
    }

    /// The same curve with all coordinates multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let points = self
            .points
            .iter()
            .map(|p| [p[0] * factor, p[1] * factor])
            .collect();
        Self::with_metadata(points, &self.generator, self.level)
    }
}

/// Segment ratio r solving 4·r^d = 1 for the four-piece Koch generator.
pub fn koch_ratio(dimension: f64) -> Result<f64> {
    if !(dimension > 1.0 && dimension < 2.0) {
        return Err(Error::InvalidDimension(dimension));
    }
    Ok(4.0_f64.powf(-1.0 / dimension))
}

/// Generalized Koch curve over the unit base segment.
///
/// Each level replaces a segment A→B by four of length r·|AB|: the first
/// and last quarter stay on the base line, the middle two rise to the apex
/// above the midpoint. r in (1/4, 1/2) keeps the apex height real, which is
/// exactly the dimension range (1, 2).
pub fn generate_koch(level: u32, dimension: f64) -> Result<CurvePolyline> {
    let ratio = koch_ratio(dimension)?;
    if level > MAX_KOCH_LEVEL {
        return Err(Error::TooManyPoints(level));
    }
    // apex height above the midpoint, per unit of segment length
    let rise = (ratio * ratio - (0.5 - ratio) * (0.5 - ratio)).sqrt();

    let mut points = vec![[0.0, 0.0], [1.0, 0.0]];
    for _ in 0..level {
        let mut refined = Vec::with_capacity(points.len() * 4);
        for pair in points.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let d = [b[0] - a[0], b[1] - a[1]];
            let perp = [-d[1], d[0]];
            refined.push(a);
            refined.push([a[0] + ratio * d[0], a[1] + ratio * d[1]]);
            refined.push([
                a[0] + 0.5 * d[0] + rise * perp[0],
                a[1] + 0.5 * d[1] + rise * perp[1],
            ]);
            refined.push([b[0] - ratio * d[0], b[1] - ratio * d[1]]);
        }
        refined.push(*points.last().expect("nonempty"));
        points = refined;
    }
    CurvePolyline::with_metadata(points, "koch", level)
}

/// Result of one divider walk: steps at opening R plus the remainder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaliperWalk {
    pub length: f64,
    pub steps: u64,
}

/// Walks the curve with a fixed opening and returns L = steps·R + remainder.
///
/// From the current anchor the walk advances to the first polyline point at
/// chord distance R, interpolating within segments. The remainder is the
/// final anchor's distance to the curve end.
pub fn caliper_length(curve: &CurvePolyline, resolution: f64) -> Result<CaliperWalk> {
    if resolution <= 0.0 || !resolution.is_finite() {
        return Err(Error::DegenerateResolutions);
    }
    let extent = curve.extent();
    if resolution > extent {
        return Err(Error::ResolutionTooCoarse {
            resolution,
            extent,
        });
    }

    let pts = curve.points();
    // Openings matched to a generator chord make every step an exact
    // tangency, where the crossing decision degenerates to last-bit
    // rounding of the vertex coordinates. Shrinking the opening by a
    // relative 1e-9 keeps all crossings transversal; the step length uses
    // the shrunken value so the walk stays a genuine divider walk.
    let opening = resolution * (1.0 - 1e-9);
    let r2 = opening * opening;
    let mut anchor = pts[0];
    let mut seg = 0usize;
    let mut tpos = 0.0f64;
    let mut steps = 0u64;

    while let Some((j, t)) = next_crossing(pts, anchor, seg, tpos, r2) {
        let (a, b) = (pts[j], pts[j + 1]);
        anchor = [
            a[0] + t * (b[0] - a[0]),
            a[1] + t * (b[1] - a[1]),
        ];
        seg = j;
        tpos = t;
        steps += 1;
    }

    let end = pts[pts.len() - 1];
    let remainder = ((end[0] - anchor[0]).powi(2) + (end[1] - anchor[1]).powi(2)).sqrt();
    Ok(CaliperWalk {
        length: steps as f64 * opening + remainder,
        steps,
    })
}

/// First point past (seg, tpos) at squared distance `r2` from `anchor`,
/// as a segment index and parameter.
fn next_crossing(
    pts: &[[f64; 2]],
    anchor: [f64; 2],
    seg: usize,
    tpos: f64,
    r2: f64,
) -> Option<(usize, f64)> {
    for j in seg..pts.len() - 1 {
        let (a, b) = (pts[j], pts[j + 1]);
        let d = [b[0] - a[0], b[1] - a[1]];
        let f = [a[0] - anchor[0], a[1] - anchor[1]];
        // |f + t d|^2 = R^2; from inside the circle the outward crossing is
        // the larger quadratic root
        let qa = d[0] * d[0] + d[1] * d[1];
        let qb = 2.0 * (f[0] * d[0] + f[1] * d[1]);
        let qc = f[0] * f[0] + f[1] * f[1] - r2;
        let disc = qb * qb - 4.0 * qa * qc;
        if disc < 0.0 {
            continue;
        }
        let t = (-qb + disc.sqrt()) / (2.0 * qa);
        let past_anchor = if j == seg { t > tpos } else { t >= 0.0 };
        if past_anchor && t <= 1.0 {
            return Some((j, t));
        }
    }
    None
}

/// One (R, L) point of a divider sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolutionSample {
    pub resolution: f64,
    pub length: f64,
}

/// Least-squares dimension estimate from a resolution sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionEstimate {
    pub dimension: f64,
    pub std_error: f64,
    pub samples: Vec<ResolutionSample>,
}

/// Estimates h = 1 − slope(ln L, ln R) over the given openings.
///
/// Needs at least three resolutions spanning a decade so the slope is
/// identified; the reported error is the standard error of the fitted
/// slope.
pub fn estimate_dimension(
    curve: &CurvePolyline,
    resolutions: &[f64],
) -> Result<DimensionEstimate> {
    if resolutions.len() < 3 || resolutions.iter().any(|r| *r <= 0.0 || !r.is_finite()) {
        return Err(Error::DegenerateResolutions);
    }
    let widest = resolutions.iter().cloned().fold(f64::MIN, f64::max);
    let finest = resolutions.iter().cloned().fold(f64::MAX, f64::min);
    if widest / finest < 9.99 {
        return Err(Error::DegenerateResolutions);
    }

    let samples: Vec<ResolutionSample> = resolutions
        .iter()
        .map(|&resolution| {
            caliper_length(curve, resolution).map(|walk| ResolutionSample {
                resolution,
                length: walk.length,
            })
        })
        .collect::<Result<_>>()?;

    let xs: Vec<f64> = samples.iter().map(|s| s.resolution.ln()).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.length.ln()).collect();
    let count = xs.len() as f64;
    let x_mean = xs.iter().sum::<f64>() / count;
    let y_mean = ys.iter().sum::<f64>() / count;
    let sxx: f64 = xs.iter().map(|x| (x - x_mean) * (x - x_mean)).sum();
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - x_mean) * (y - y_mean))
        .sum();
    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let ss_res: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let e = y - (intercept + slope * x);
            e * e
        })
        .sum();
    let std_error = (ss_res / (count - 2.0) / sxx).sqrt();

    Ok(DimensionEstimate {
        dimension: 1.0 - slope,
        std_error,
        samples,
    })
}

/// Geometric opening grid ratio^1 .. ratio^count, widest first.
pub fn geometric_resolutions(ratio: f64, count: usize) -> Vec<f64> {
    (1..=count as i32).map(|k| ratio.powi(k)).collect()
}
