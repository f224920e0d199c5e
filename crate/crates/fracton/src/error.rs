use thiserror::Error;

/// Errors shared across the crate. Variant names follow the domain
/// vocabulary so CLI diagnostics and library callers see the same thing.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("malformed fraction `{0}`")]
    ParseError(String),
    #[error("Farey order must be at least 1")]
    InvalidOrder,
    #[error("fractions are not adjacent in the sequence")]
    NotAdjacent,
    #[error("filling factor must be nonnegative, got {0}")]
    NegativeFilling(String),
    #[error("Hausdorff label must lie in [1, 2], got {0}")]
    InvalidLabel(String),
    #[error("negative spin {0}")]
    NegativeSpin(String),
    #[error("filling-factor inputs must be positive")]
    NonpositiveInput,
    #[error("temperature must be positive")]
    NonpositiveTemperature,
    #[error("Boltzmann constant must be positive")]
    NonpositiveBoltzmann,
    #[error("xi must be nonnegative, got {0}")]
    NegativeWeight(f64),
    #[error("condensation region: h = 2 has no solution for xi <= 1")]
    CondensationRegion,
    #[error("no closed form for h = {0}")]
    NoClosedForm(f64),
    #[error("occupation is unbounded at h = 2")]
    Unbounded,
    #[error("occupation must be positive, got {0}")]
    InvalidOccupation(f64),
    #[error("occupation {occupation} exceeds the exclusion bound {bound}")]
    ExclusionViolation { occupation: f64, bound: f64 },
    #[error("recursion level {0} exceeds the point-count guard")]
    TooManyPoints(u32),
    #[error("curve dimension must lie strictly between 1 and 2, got {0}")]
    InvalidDimension(f64),
    #[error("curve needs at least 2 points with consecutive points distinct")]
    DegenerateCurve,
    #[error("resolution {resolution} is no finer than the curve extent {extent}")]
    ResolutionTooCoarse { resolution: f64, extent: f64 },
    #[error("need at least 3 positive resolutions spanning a decade")]
    DegenerateResolutions,
}

pub type Result<T> = std::result::Result<T, Error>;
