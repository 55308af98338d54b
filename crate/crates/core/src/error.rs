use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("no sign change of f on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("no convergence after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("invalid numeric configuration: {0}")]
    InvalidConfig(String),

    #[error("series exponent must have a zero constant term (got {0})")]
    NonzeroConstantTerm(Complex64),
    #[error("series operation needs constant term 1 (got {0})")]
    ConstantTermNotOne(Complex64),
    #[error("sigma = {0} outside [-pi/2, pi/2] \\ {{0}}")]
    SigmaOutOfRange(f64),
    #[error("truncation order {order} too small for n = {n}")]
    BadOrder { n: usize, order: usize },
    #[error("parameter out of domain: {0}")]
    ParamOutOfDomain(String),
    #[error("|z| = {0} outside the series accuracy domain |z| <= 0.95")]
    OutsideAccuracyDomain(f64),
    #[error("r = {0} outside (0, 1]")]
    ROutOfRange(f64),

    #[error("center c = {c} outside ({lo}, {hi})")]
    COutOfRange { c: f64, lo: f64, hi: f64 },
    #[error("inscribed radius {closed_form} disagrees with grid minimum {grid}")]
    InscribedMismatch { closed_form: f64, grid: f64 },
    #[error("hpl threshold is only stated for |sigma| <= pi/3 (got {0})")]
    HplDomain(f64),

    #[error("zeta = {0} outside [cos 1, 1)")]
    ZetaOutOfRange(f64),
    #[error("beta = {0} must exceed 1")]
    BetaOutOfRange(f64),
    #[error("alpha = {0} outside [0, 1)")]
    AlphaOutOfRange(f64),
    #[error("Janowski parameters need -1 <= B < A <= 1 (got A = {a}, B = {b})")]
    ParamOrder { a: f64, b: f64 },
    #[error("radius for B < 0 with A <= 0 is not covered (A = {a}, B = {b})")]
    UnsupportedSigns { a: f64, b: f64 },
    #[error("A = {0} outside [-1, 1]")]
    AOutOfRange(f64),
    #[error("bad index n = {0}")]
    BadN(usize),

    #[error("f vanishes (|f| < 1e-12) at sample z = {0}; result inconclusive")]
    ZeroOfF(Complex64),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
