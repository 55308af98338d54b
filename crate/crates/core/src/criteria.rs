//! Coefficient-level membership criteria for `sigma = 1`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::region::c1;
use crate::series::TaylorSeries;
use crate::verify::VerificationReport;

/// Tail `a_2, ..., a_M` of `f(z) = z + sum a_k z^k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoeffList {
    a: Vec<Complex64>,
}

impl CoeffList {
    pub fn new(a: Vec<Complex64>) -> Result<Self> {
        if a.iter().any(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::BadParams("non-finite coefficient".into()));
        }
        Ok(Self { a })
    }

    pub fn from_real(a: &[f64]) -> Result<Self> {
        Self::new(a.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Drops `a_0 = 0` and `a_1 = 1`; the truncation order is kept.
    pub fn from_series(s: &TaylorSeries) -> Result<Self> {
        if !s.is_normalized(1e-12) {
            return Err(Error::BadParams("series is not normalized (f(0) = 0, f'(0) = 1)".into()));
        }
        Self::new(s.coeffs().iter().skip(2).copied().collect())
    }

    /// `a_n` for `n >= 2`, zero past the end.
    pub fn coeff(&self, n: usize) -> Complex64 {
        if n < 2 {
            return Complex64::new(0.0, 0.0);
        }
        self.a.get(n - 2).copied().unwrap_or_default()
    }

    /// Highest index `M` carried, or 1 for `f = z`.
    pub fn max_index(&self) -> usize {
        self.a.len() + 1
    }

    pub fn tail(&self) -> &[Complex64] {
        &self.a
    }
}

/// `cosh(e^{it/2})`, the boundary value of `cosh sqrt z` at `e^{it}`.
fn boundary_value(t: f64) -> Complex64 {
    Complex64::from_polar(1.0, t / 2.0).cosh()
}

fn t_grid(t_samples: usize) -> impl Iterator<Item = f64> + Clone {
    // both endpoints: t = +-pi is where the bound is usually worst
    (0..t_samples).map(move |k| -PI + 2.0 * PI * k as f64 / (t_samples - 1) as f64)
}

/// Coefficients of `1 - sum (n - C)/(C - 1) a_n z^{n-1}` in ascending powers.
fn characteristic_poly(c: &CoeffList, t: f64) -> Vec<Complex64> {
    let cv = boundary_value(t);
    let mut p = Vec::with_capacity(c.a.len() + 1);
    p.push(Complex64::new(1.0, 0.0));
    for (i, a) in c.a.iter().enumerate() {
        let n = (i + 2) as f64;
        p.push(-(n - cv) / (cv - 1.0) * a);
    }
    p
}

fn horner(p: &[Complex64], z: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// Zeros of `p` inside `|z| < rho` by the argument principle, refining any
/// step whose phase jump exceeds `pi/4`.
fn zeros_inside(p: &[Complex64], rho: f64) -> usize {
    if p.len() < 2 {
        return 0;
    }
    let base = (16 * p.len()).max(256);
    let at = |th: f64| horner(p, Complex64::from_polar(rho, th));
    fn step<F: Fn(f64) -> Complex64>(at: &F, a: f64, b: f64, fa: Complex64, fb: Complex64, depth: u32) -> f64 {
        let d = (fb / fa).arg();
        if d.abs() <= PI / 4.0 || depth == 0 {
            return d;
        }
        let m = 0.5 * (a + b);
        let fm = at(m);
        step(at, a, m, fa, fm, depth - 1) + step(at, m, b, fm, fb, depth - 1)
    }
    let mut total = 0.0;
    let mut prev = at(0.0);
    for k in 1..=base {
        let th = 2.0 * PI * k as f64 / base as f64;
        let cur = at(th);
        total += step(&at, 2.0 * PI * (k - 1) as f64 / base as f64, th, prev, cur, 24);
        prev = cur;
    }
    (total / (2.0 * PI)).round().max(0.0) as usize
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvolutionReport {
    /// `worst_margin` is minus the smallest modulus found.
    #[serde(flatten)]
    pub report: VerificationReport,
    pub min_modulus: f64,
    pub worst_t: f64,
    /// Largest zero count inside `|z| < 0.999` over the sampled `t`.
    pub zeros_inside: usize,
}

pub const CONVOLUTION_RADII: usize = 64;

/// Non-vanishing of the convolution characterization on a `(t, z)` grid.
///
/// `z_samples` is the number of angles per circle; circles are 64 radii
/// spread over `[0.1, 0.999]`. Besides the minimum modulus, the zeros inside
/// `|z| < 0.999` are counted by the argument principle for every `t`.
pub fn convolution_nonvanishing(c: &CoeffList, t_samples: usize, z_samples: usize) -> Result<ConvolutionReport> {
    if t_samples < 64 || z_samples < 64 {
        return Err(Error::BadParams("t_samples and z_samples must be >= 64".into()));
    }
    let rho_max = 0.999;
    let radii: Vec<f64> = (0..CONVOLUTION_RADII)
        .map(|i| 0.1 + (rho_max - 0.1) * i as f64 / (CONVOLUTION_RADII - 1) as f64)
        .collect();
    let ts: Vec<f64> = t_grid(t_samples).collect();
    let per_t: Vec<(f64, Complex64, usize)> = ts
        .par_iter()
        .map(|&t| {
            let p = characteristic_poly(c, t);
            let mut best = (f64::INFINITY, Complex64::new(0.0, 0.0));
            for &r in &radii {
                for k in 0..z_samples {
                    let z = Complex64::from_polar(r, -PI + 2.0 * PI * k as f64 / z_samples as f64);
                    let m = horner(&p, z).norm();
                    if m < best.0 {
                        best = (m, z);
                    }
                }
            }
            (best.0, best.1, zeros_inside(&p, rho_max))
        })
        .collect();
    let mut min_modulus = f64::INFINITY;
    let mut witness = Complex64::new(0.0, 0.0);
    let mut worst_t = ts[0];
    let mut zeros = 0;
    for (i, &(m, z, nz)) in per_t.iter().enumerate() {
        if m < min_modulus {
            min_modulus = m;
            witness = z;
            worst_t = ts[i];
        }
        zeros = zeros.max(nz);
    }
    let pass = min_modulus > 1e-9 && zeros == 0;
    Ok(ConvolutionReport {
        report: VerificationReport {
            pass,
            worst_margin: -min_modulus,
            witness: Some(witness),
            samples_checked: t_samples * CONVOLUTION_RADII * z_samples,
            cross_check: None,
        },
        min_modulus,
        worst_t,
        zeros_inside: zeros,
    })
}

/// `sum |(n - C_t)/(C_t - 1)| |a_n|` at one `t`.
pub fn coeff_sum(c: &CoeffList, t: f64) -> f64 {
    let cv = boundary_value(t);
    c.a.iter()
        .enumerate()
        .map(|(i, a)| ((i + 2) as f64 - cv).norm() / (cv - 1.0).norm() * a.norm())
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoeffSufficiency {
    pub pass: bool,
    pub worst_sum: f64,
    pub worst_t: f64,
}

/// Sufficient coefficient condition, required for every sampled `t`.
pub fn coeff_sufficient(c: &CoeffList, t_samples: usize) -> Result<CoeffSufficiency> {
    if t_samples < 64 {
        return Err(Error::BadParams("t_samples must be >= 64".into()));
    }
    let (worst_sum, worst_t) = t_grid(t_samples)
        .map(|t| (coeff_sum(c, t), t))
        .fold((f64::NEG_INFINITY, 0.0), |acc, v| if v.0 > acc.0 { v } else { acc });
    Ok(CoeffSufficiency {
        pass: worst_sum < 1.0,
        worst_sum,
        worst_t,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct L2Check {
    pub pass: bool,
    pub lhs: f64,
    pub rhs: f64,
}

/// Necessary condition `sum (k^2 - c1^2) |a_k|^2 <= c1^2 - 1`.
pub fn coeff_l2_check(c: &CoeffList) -> L2Check {
    let k1 = c1();
    let lhs = c
        .a
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let k = (i + 2) as f64;
            (k * k - k1 * k1) * a.norm_sqr()
        })
        .sum();
    let rhs = k1 * k1 - 1.0;
    L2Check {
        pass: lhs <= rhs,
        lhs,
        rhs,
    }
}

/// `(1/4) max(1, |mu - 7/12|)`.
pub fn fekete_szego_bound(mu: Complex64) -> f64 {
    0.25 * (mu - 7.0 / 12.0).norm().max(1.0)
}

/// `|a_3 - mu a_2^2|`.
pub fn fekete_szego_functional(c: &CoeffList, mu: Complex64) -> f64 {
    let a2 = c.coeff(2);
    (c.coeff(3) - mu * a2 * a2).norm()
}
