use thiserror::Error;

/// Errors shared across the crate. Variants mirror the failure modes of the
/// geometry, quadrature and solver layers so callers can map them to exit
/// codes without string matching.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate curve: |gamma'| = {speed:.3e} at parameter {param:.6}")]
    DegenerateCurve { param: f64, speed: f64 },

    #[error("Frenet frame degenerate at parameter {param:.6}: {what}")]
    FrenetDegenerate { param: f64, what: String },

    #[error("point (t={t:.4e}, |z|={znorm:.4e}) outside chart of half-width {r_max:.4e}")]
    OutOfChart { t: f64, znorm: f64, r_max: f64 },

    #[error("chart interval [{lo:.4}, {hi:.4}] crosses the frame seam at {seam:.4}")]
    FrameSeam { lo: f64, hi: f64, seam: f64 },

    #[error("expansion residuals below machine epsilon before the fit window ({n_usable} usable points)")]
    ResidualUnderflow { n_usable: usize },

    #[error("invalid parameters: {0}")]
    BadParams(String),

    #[error("closed-form profile only available for sigma = 1 (got {0})")]
    UnsupportedSigma(f64),

    #[error("iteration budget exhausted: {0}")]
    NoConvergence(String),

    #[error("grid too coarse: residual {residual:.3e} above tolerance {tol:.3e}")]
    GridTooCoarse { residual: f64, tol: f64 },

    #[error("quadrature tail estimate {tail_frac:.3e} of the integral exceeds budget {budget:.3e}")]
    QuadratureDivergence { tail_frac: f64, budget: f64 },

    #[error("curve too close to domain boundary: clearance {clearance:.4e} < required {required:.4e}")]
    CurveTooCloseToBoundary { clearance: f64, required: f64 },

    #[error("quadrature not converged: resolution doubling moved the value by {rel_change:.3e}")]
    NotConverged { rel_change: f64 },

    #[error("linear solver stalled: {0}")]
    SolverStall(String),

    #[error("chart/profile mismatch: {0}")]
    ChartMismatch(String),

    #[error("eps {eps:.3e} too large for cutoff radius {r:.3e} (need eps <= r/10)")]
    EpsTooLarge { eps: f64, r: f64 },

    #[error("normalization mismatch: c used = {c_used:.6e}, profile c_infinity = {c_profile:.6e}")]
    NormalizationMismatch { c_used: f64, c_profile: f64 },

    #[error("fit regime masked: {0}")]
    RegimeMasked(String),

    #[error("operator -Laplace + h is not coercive: lambda_min = {0:.6e}")]
    NonCoercive(f64),

    #[error("descent collapsed to zero field; last level {0:.6e}")]
    Collapse(f64),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Msg(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn msg(s: impl Into<String>) -> Self {
        Error::Msg(s.into())
    }
}
