//! Deterministic scalar root finding, one-dimensional extremization and
//! adaptive quadrature.
//!
//! Every routine here is a pure function of its arguments and the supplied
//! [`NumericConfig`]; repeated calls produce bit-identical results.

use crate::error::{Error, Result};

/// Environment variable that overrides [`NumericConfig::grid_n`].
pub const GRID_N_ENV: &str = "SRHO_GRID_N";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_iter: usize,
    /// Number of points used by sign scans and coarse extremization grids.
    pub grid_n: usize,
}

impl Default for NumericConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_iter: 200,
            grid_n: 2048,
        }
    }
}

impl NumericConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(Error::InvalidConfig(format!("abs_tol = {}", self.abs_tol)));
        }
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidConfig(format!("rel_tol = {}", self.rel_tol)));
        }
        if self.max_iter < 1 {
            return Err(Error::InvalidConfig("max_iter must be >= 1".into()));
        }
        if self.grid_n < 16 {
            return Err(Error::InvalidConfig(format!("grid_n = {} < 16", self.grid_n)));
        }
        Ok(())
    }

    pub fn with_grid_n(mut self, grid_n: usize) -> Self {
        self.grid_n = grid_n;
        self
    }

    /// Default configuration with `grid_n` taken from `SRHO_GRID_N` when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Self::default();
        if let Ok(raw) = std::env::var(GRID_N_ENV) {
            cfg.grid_n = raw
                .trim()
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("{GRID_N_ENV}={raw}")))?;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo < hi) {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Brent's method: inverse quadratic / secant steps with a bisection fallback.
///
/// Returns `x` in `[b.lo, b.hi]` with either `|f(x)| <= abs_tol` or the
/// remaining bracket narrower than `abs_tol`.
pub fn find_root<F>(f: F, b: Bracket, cfg: &NumericConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let (mut a, mut bb) = (b.lo, b.hi);
    let (mut fa, mut fb) = (f(a), f(bb));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(bb);
    }
    if fa * fb > 0.0 || fa.is_nan() || fb.is_nan() {
        return Err(Error::NoSignChange { lo: b.lo, hi: b.hi });
    }
    let (mut c, mut fc) = (a, fa);
    let (mut d, mut e) = (bb - a, bb - a);

    for _ in 0..cfg.max_iter {
        if fb * fc > 0.0 {
            c = a;
            fc = fa;
            d = bb - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = bb;
            bb = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * bb.abs() + 0.5 * cfg.abs_tol;
        let m = 0.5 * (c - bb);
        if fb == 0.0 || m.abs() <= tol {
            return Ok(bb);
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (bb - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = bb;
        fa = fb;
        bb += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(bb);
    }
    if fb.abs() <= cfg.abs_tol {
        return Ok(bb);
    }
    Err(Error::NoConvergence {
        iterations: cfg.max_iter,
    })
}

fn grid_point(lo: f64, hi: f64, i: usize, n: usize) -> f64 {
    if i + 1 == n {
        hi
    } else {
        lo + (hi - lo) * (i as f64) / ((n - 1) as f64)
    }
}

/// Leftmost sign change of `f` over `grid_n` equispaced points of `[lo, hi]`.
///
/// An exact zero at a grid point is returned as a degenerate `(x, x)` pair.
pub fn first_sign_change<F>(f: F, lo: f64, hi: f64, cfg: &NumericConfig) -> Result<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    if !(lo < hi) {
        return Err(Error::InvalidInterval { lo, hi });
    }
    let n = cfg.grid_n.max(2);
    let mut x_prev = lo;
    let mut f_prev = f(lo);
    if f_prev == 0.0 {
        return Ok((lo, lo));
    }
    for i in 1..n {
        let x = grid_point(lo, hi, i, n);
        let fx = f(x);
        if fx == 0.0 {
            return Ok((x, x));
        }
        if f_prev * fx < 0.0 {
            return Ok((x_prev, x));
        }
        x_prev = x;
        f_prev = fx;
    }
    Err(Error::NoSignChange { lo, hi })
}

/// Least root of `f` in `[lo, hi]`: leftmost grid sign change, then Brent.
pub fn least_root<F>(f: F, lo: f64, hi: f64, cfg: &NumericConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let (a, b) = first_sign_change(&f, lo, hi, cfg)?;
    if a == b {
        return Ok(a);
    }
    find_root(&f, Bracket::new(a, b)?, cfg)
}

/// Coarse scan with `grid_n` points followed by golden-section refinement
/// around the best grid cell. Ties on the grid go to the leftmost point.
pub fn maximize_on_interval<F>(f: F, lo: f64, hi: f64, cfg: &NumericConfig) -> Result<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    if !(lo < hi) {
        return Err(Error::InvalidInterval { lo, hi });
    }
    let n = cfg.grid_n.max(3);
    let mut best_i = 0;
    let mut best = f(lo);
    for i in 1..n {
        let v = f(grid_point(lo, hi, i, n));
        if v > best || best.is_nan() {
            best = v;
            best_i = i;
        }
    }
    let best_x = grid_point(lo, hi, best_i, n);
    let a = grid_point(lo, hi, best_i.saturating_sub(1), n);
    let b = grid_point(lo, hi, (best_i + 1).min(n - 1), n);
    let (x, v) = golden_max(&f, a, b, cfg);
    if v > best {
        Ok((x, v))
    } else {
        Ok((best_x, best))
    }
}

pub fn minimize_on_interval<F>(f: F, lo: f64, hi: f64, cfg: &NumericConfig) -> Result<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    let (x, v) = maximize_on_interval(|t| -f(t), lo, hi, cfg)?;
    Ok((x, -v))
}

fn golden_max<F>(f: &F, mut a: f64, mut b: f64, cfg: &NumericConfig) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..cfg.max_iter {
        let scale = x1.abs().max(x2.abs());
        if (b - a) <= cfg.abs_tol.max(cfg.rel_tol * scale * 1e-3) {
            break;
        }
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_DEPTH: usize = 48;

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let sum = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * sum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * sum;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Adaptive 15-point Gauss–Kronrod quadrature.
///
/// Nodes are strictly interior, so integrands with a removable singularity
/// at an endpoint are never evaluated there; callers still have to evaluate
/// such integrands stably close to the singular point.
pub fn integrate<F>(f: F, a: f64, b: f64, cfg: &NumericConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        return integrate(f, b, a, cfg).map(|v| -v);
    }
    let mut total = 0.0;
    // (lo, hi, depth); left halves pushed last so summation order is fixed
    let mut stack = vec![(a, b, 0usize)];
    let full = b - a;
    while let Some((lo, hi, depth)) = stack.pop() {
        let (value, err) = gauss_kronrod(&f, lo, hi);
        let share = cfg.abs_tol * (hi - lo) / full;
        if err <= share.max(f64::EPSILON * value.abs()) || err < 1e-300 {
            total += value;
            continue;
        }
        if depth >= MAX_DEPTH {
            return Err(Error::NoConvergence { iterations: depth });
        }
        let mid = 0.5 * (lo + hi);
        stack.push((mid, hi, depth + 1));
        stack.push((lo, mid, depth + 1));
    }
    Ok(total)
}
