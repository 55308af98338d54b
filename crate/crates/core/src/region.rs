//! Geometry of the region `Omega_sigma = cosh(sigma sqrt z)(D)`.
//!
//! Membership is decided through the analytic inverse
//! `|arccosh u| < |sigma|`, with `arccosh u = log(u + sqrt(u-1) sqrt(u+1))`
//! taken on principal branches so that `Re arccosh u >= 0`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};
use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{least_root, maximize_on_interval, minimize_on_interval, NumericConfig};

/// Region parameter, stored as `|sigma|` since `rho_sigma = rho_{-sigma}`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Sigma(f64);

impl Sigma {
    pub const ONE: Sigma = Sigma(1.0);

    pub fn new(value: f64) -> Result<Self> {
        // pi/2 itself is admissible; allow the rounding of a user-typed 1.5707963267948966
        if !value.is_finite() || value == 0.0 || value.abs() > FRAC_PI_2 * (1.0 + 4.0 * f64::EPSILON) {
            return Err(Error::SigmaOutOfRange(value));
        }
        Ok(Self(value.abs().min(FRAC_PI_2)))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `c0 = cos 1`, `c1 = cosh 1`, at full double precision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constants {
    pub c0: f64,
    pub c1: f64,
}

impl Constants {
    pub fn new() -> Self {
        Self {
            c0: 1f64.cos(),
            c1: 1f64.cosh(),
        }
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.c0 + self.c1)
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self::new()
    }
}

pub fn c0() -> f64 {
    1f64.cos()
}

pub fn c1() -> f64 {
    1f64.cosh()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Disc {
    pub center: Complex64,
    pub radius: f64,
}

impl Disc {
    pub fn new(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius >= 0.0) {
            return Err(Error::BadParams(format!("disc radius {radius} < 0")));
        }
        Ok(Self { center, radius })
    }

    pub fn point(&self, theta: f64) -> Complex64 {
        self.center + Complex64::from_polar(self.radius, theta)
    }
}

/// `(x, y) = (Re, Im) rho_sigma(e^{it})`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryPoint {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

impl BoundaryPoint {
    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }
}

pub fn eval_rho(sigma: Sigma, z: Complex64) -> Complex64 {
    let s = sigma.value();
    if z.norm() <= 1e-8 {
        let s2 = s * s;
        return 1.0 + z * (s2 / 2.0) + z * z * (s2 * s2 / 24.0);
    }
    (z.sqrt() * s).cosh()
}

/// Principal `arccosh u` in the product form that keeps `Re >= 0`.
pub fn arccosh_principal(u: Complex64) -> Complex64 {
    (u + (u - 1.0).sqrt() * (u + 1.0).sqrt()).ln()
}

/// `|arccosh u| / |sigma| - 1`: negative inside, zero on the boundary.
pub fn membership_excess(sigma: Sigma, u: Complex64) -> f64 {
    arccosh_principal(u).norm() / sigma.value() - 1.0
}

/// `|arccosh u| < |sigma| (1 + margin)`; a positive margin widens the test.
pub fn contains(sigma: Sigma, u: Complex64, margin: f64) -> bool {
    arccosh_principal(u).norm() < sigma.value() * (1.0 + margin)
}

fn x_of(sigma: f64, tau: f64) -> f64 {
    (sigma * tau.sin()).cos() * (sigma * tau.cos()).cosh()
}

fn y_of(sigma: f64, tau: f64) -> f64 {
    (sigma * tau.sin()).sin() * (sigma * tau.cos()).sinh()
}

pub fn boundary_point(sigma: Sigma, t: f64) -> Result<BoundaryPoint> {
    if !(t.abs() <= PI * (1.0 + 1e-15)) {
        return Err(Error::BadParams(format!("t = {t} outside [-pi, pi]")));
    }
    let s = sigma.value();
    let tau = t / 2.0;
    Ok(BoundaryPoint {
        t,
        x: x_of(s, tau),
        y: y_of(s, tau),
    })
}

/// `samples` boundary points at `t = -pi + 2 pi k / samples`.
pub fn boundary_samples(sigma: Sigma, samples: usize) -> Vec<BoundaryPoint> {
    (0..samples)
        .map(|k| {
            let t = -PI + 2.0 * PI * k as f64 / samples as f64;
            let tau = t / 2.0;
            BoundaryPoint {
                t,
                x: x_of(sigma.value(), tau),
                y: y_of(sigma.value(), tau),
            }
        })
        .collect()
}

/// `t,x,y` CSV with 17 significant digits.
pub fn boundary_csv(points: &[BoundaryPoint]) -> String {
    let mut out = String::from("t,x,y\n");
    for p in points {
        let _ = writeln!(out, "{:.16e},{:.16e},{:.16e}", p.t, p.x, p.y);
    }
    out
}

fn check_center(sigma: Sigma, c: f64) -> Result<()> {
    let s = sigma.value();
    let (lo, hi) = (s.cos(), s.cosh());
    if !(c > lo && c < hi) {
        return Err(Error::COutOfRange { c, lo, hi });
    }
    Ok(())
}

/// Squared distance from `(c, 0)` to the boundary point at `t = 2 tau`.
pub fn distance_sq(sigma: Sigma, c: f64, tau: f64) -> Result<f64> {
    check_center(sigma, c)?;
    if !(-1e-15..=FRAC_PI_2 + 1e-15).contains(&tau) {
        return Err(Error::BadParams(format!("tau = {tau} outside [0, pi/2]")));
    }
    Ok(distance_sq_unchecked(sigma.value(), c, tau))
}

fn distance_sq_unchecked(s: f64, c: f64, tau: f64) -> f64 {
    let dx = c - x_of(s, tau);
    let y = y_of(s, tau);
    dx * dx + y * y
}

/// `d/dtau` of [`distance_sq`].
pub fn distance_sq_derivative(sigma: Sigma, c: f64, tau: f64) -> f64 {
    let s = sigma.value();
    let (st, ct) = (tau.sin(), tau.cos());
    let (a, b) = (s * st, s * ct);
    let dx = -s * st * b.sinh() * a.cos() - s * ct * b.cosh() * a.sin();
    let dy = -s * st * b.cosh() * a.sin() + s * ct * b.sinh() * a.cos();
    -2.0 * (c - x_of(s, tau)) * dx + 2.0 * y_of(s, tau) * dy
}

/// Interior critical points of `tau -> distance_sq(sigma, c, tau)` in
/// `(0, pi/2)`, located by sign scan of the derivative and refined by Brent.
pub fn interior_critical_points(sigma: Sigma, c: f64, cfg: &NumericConfig) -> Result<Vec<f64>> {
    check_center(sigma, c)?;
    let n = cfg.grid_n.max(16);
    let eps = 1e-9;
    let (lo, hi) = (eps, FRAC_PI_2 - eps);
    let g = |tau: f64| distance_sq_derivative(sigma, c, tau);
    let mut roots = Vec::new();
    let mut a = lo;
    let mut ga = g(a);
    for i in 1..n {
        let b = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let gb = g(b);
        if ga * gb < 0.0 {
            roots.push(crate::numerics::find_root(g, crate::numerics::Bracket::new(a, b)?, cfg)?);
        }
        a = b;
        ga = gb;
    }
    Ok(roots)
}

/// Largest disc centred at `(c, 0)` inside `Omega_sigma`.
///
/// The closed form is cross-checked against a scan-and-refine minimum of
/// `sqrt(distance_sq)` over `tau in [0, pi/2]`.
pub fn inscribed_radius(sigma: Sigma, c: f64, cfg: &NumericConfig) -> Result<Disc> {
    let closed = inscribed_radius_closed_form(sigma, c)?;
    let s = sigma.value();
    let (_, g_min) = minimize_on_interval(|tau| distance_sq_unchecked(s, c, tau), 0.0, FRAC_PI_2, cfg)?;
    let grid = g_min.max(0.0).sqrt();
    if (grid - closed).abs() > 1e-8 {
        return Err(Error::InscribedMismatch {
            closed_form: closed,
            grid,
        });
    }
    Disc::new(Complex64::new(c, 0.0), closed)
}

/// `c - cos sigma` up to the midpoint of `(cos sigma, cosh sigma)`, then
/// `cosh sigma - c`.
pub fn inscribed_radius_closed_form(sigma: Sigma, c: f64) -> Result<f64> {
    check_center(sigma, c)?;
    let s = sigma.value();
    let (lo, hi) = (s.cos(), s.cosh());
    Ok(if c <= 0.5 * (lo + hi) { c - lo } else { hi - c })
}

/// Largest `|arg u|` over the region and the boundary parameter attaining it.
pub fn max_argument(sigma: Sigma, cfg: &NumericConfig) -> Result<(f64, f64)> {
    let s = sigma.value();
    if s.cos() <= 1e-15 {
        // the boundary passes through 0 at t = pi; the supremum is approached there
        return Ok((FRAC_PI_2, PI));
    }
    let (t, m) = maximize_on_interval(|t| boundary_argument(sigma, t), 0.0, PI, cfg)?;
    Ok((m, t))
}

/// `arg rho_sigma(e^{it}) = arctan(tan(sigma sin(t/2)) tanh(sigma cos(t/2)))`.
pub fn boundary_argument(sigma: Sigma, t: f64) -> f64 {
    let s = sigma.value();
    let tau = t / 2.0;
    y_of(s, tau).atan2(x_of(s, tau))
}

/// Imaginary extent from the chord equation
/// `cos sigma + cosh sigma - 2 X(t) = 0`: returns `(l, t0)` with `l = |Y(t0)|`.
pub fn imag_extent(sigma: Sigma, cfg: &NumericConfig) -> Result<(f64, f64)> {
    let s = sigma.value();
    let mid2 = s.cos() + s.cosh();
    let t0 = least_root(|t| mid2 - 2.0 * x_of(s, t / 2.0), 0.0, PI, cfg)?;
    Ok((y_of(s, t0 / 2.0).abs(), t0))
}

/// True supremum of `|Im u|` over the region and its boundary parameter.
pub fn imag_supremum(sigma: Sigma, cfg: &NumericConfig) -> Result<(f64, f64)> {
    let s = sigma.value();
    let (t, y) = maximize_on_interval(|t| y_of(s, t / 2.0), 0.0, PI, cfg)?;
    Ok((y, t))
}

/// `H(tau) = sin^2(sin tau) sinh^2(cos tau) / (4 cos(sin tau) cosh(cos tau))`,
/// i.e. `y^2 / (4x)` on the boundary of `Omega_1`.
pub fn st_p_h(tau: f64) -> f64 {
    let y = y_of(1.0, tau);
    let x = x_of(1.0, tau);
    y * y / (4.0 * x)
}

/// `(gamma0, tau_tilde)`: maximum of [`st_p_h`] over `[0, pi/2]`.
pub fn st_p_gamma(cfg: &NumericConfig) -> Result<(f64, f64)> {
    let (tau, h) = maximize_on_interval(st_p_h, 0.0, FRAC_PI_2, cfg)?;
    Ok((h, tau))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdRecord {
    pub sigma: f64,
    /// starlike order `cos sigma`
    pub zeta: f64,
    /// `M(beta)` parameter `cosh sigma`
    pub beta: f64,
    /// largest `kappa` with `sqrt(1 + kappa z)` subordinate
    pub kappa_max: f64,
    /// smallest `k` for the `k`-starlike inclusion
    pub k_min: f64,
    /// `log(sec sigma)/log 2`, only for `|sigma| <= pi/3`
    pub s_hpl_min: Option<f64>,
    /// `1 - sqrt(cos sigma)`
    pub s_l_min: f64,
}

pub fn hpl_threshold(sigma: Sigma) -> Result<f64> {
    let s = sigma.value();
    if s > FRAC_PI_3 * (1.0 + 4.0 * f64::EPSILON) {
        return Err(Error::HplDomain(s));
    }
    Ok((1.0 / s.cos()).ln() / 2f64.ln())
}

pub fn inclusion_thresholds(sigma: Sigma) -> ThresholdRecord {
    let s = sigma.value();
    let (cs, chs) = (s.cos(), s.cosh());
    ThresholdRecord {
        sigma: s,
        zeta: cs,
        beta: chs,
        kappa_max: 1.0 - cs * cs,
        k_min: chs / (chs - 1.0),
        s_hpl_min: hpl_threshold(sigma).ok(),
        s_l_min: 1.0 - cs.sqrt(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cz(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cfg() -> NumericConfig {
        NumericConfig::default()
    }

    #[test]
    fn sigma_canonicalizes() {
        assert_eq!(Sigma::new(-1.0).unwrap(), Sigma::new(1.0).unwrap());
        assert!(Sigma::new(0.0).is_err());
        assert!(Sigma::new(1.6).is_err());
        assert!(Sigma::new(f64::NAN).is_err());
        assert_eq!(Sigma::new(FRAC_PI_2).unwrap().value(), FRAC_PI_2);
    }

    #[test]
    fn constants_ranges() {
        let k = Constants::new();
        assert!(0.5403 < k.c0 && k.c0 < 0.5404);
        assert!(1.5430 < k.c1 && k.c1 < 1.5431);
    }

    #[test]
    fn eval_rho_examples() {
        let s = Sigma::ONE;
        assert_eq!(eval_rho(s, cz(0.0, 0.0)), cz(1.0, 0.0));
        assert!((eval_rho(s, cz(1.0, 0.0)) - 1f64.cosh()).norm() < 1e-15);
        assert!((eval_rho(s, cz(-1.0, 0.0)) - 1f64.cos()).norm() < 1e-15);
        let tiny = cz(3e-9, -2e-9);
        let direct = (tiny.sqrt()).cosh();
        assert!((eval_rho(s, tiny) - direct).norm() < 1e-15);
    }

    #[test]
    fn contains_examples() {
        let s = Sigma::ONE;
        assert!(contains(s, cz(1.0, 0.0), 0.0));
        assert!(!contains(s, cz(1.6, 0.0), 0.0));
        let u = eval_rho(s, cz(0.5, 0.0));
        assert!((u.re - 1.260_59).abs() < 1e-5);
        assert!(contains(s, u, 0.0));
        // far left half-plane must not land on the wrong sheet
        assert!(!contains(s, cz(-0.9, 0.1), 0.0));
        assert!(!contains(s, cz(-1.2, 0.0), 0.0));
    }

    #[test]
    fn real_axis_extremes() {
        for sv in [0.5, 1.0, FRAC_PI_2] {
            let s = Sigma::new(sv).unwrap();
            let e = 1e-6;
            assert!(contains(s, cz(sv.cos() + e, 0.0), 0.0));
            assert!(!contains(s, cz(sv.cos() - e, 0.0), 0.0));
            assert!(contains(s, cz(sv.cosh() - e, 0.0), 0.0));
            assert!(!contains(s, cz(sv.cosh() + e, 0.0), 0.0));
        }
    }

    #[test]
    fn boundary_examples() {
        let s = Sigma::new(0.7).unwrap();
        let p = boundary_point(s, 0.0).unwrap();
        assert!((p.x - 0.7f64.cosh()).abs() < 1e-15 && p.y == 0.0);
        let p = boundary_point(s, PI).unwrap();
        assert!((p.x - 0.7f64.cos()).abs() < 1e-15 && p.y.abs() < 1e-16);
        let p = boundary_point(Sigma::ONE, FRAC_PI_2).unwrap();
        let w = eval_rho(Sigma::ONE, cz(0.0, 1.0));
        assert!((p.as_complex() - w).norm() < 1e-12);
        let q = boundary_point(Sigma::ONE, -FRAC_PI_2).unwrap();
        assert_eq!(q.y, -p.y);
        assert!(boundary_point(s, 4.0).is_err());
    }

    #[test]
    fn boundary_csv_layout() {
        let pts = boundary_samples(Sigma::ONE, 4);
        let csv = boundary_csv(&pts);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "t,x,y");
        assert_eq!(lines.len(), 5);
        let row: Vec<f64> = lines[3].split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(row[0], 0.0);
        assert_eq!(row[1], 1f64.cosh());
        assert_eq!(row[2], 0.0);
    }

    #[test]
    fn distance_sq_examples() {
        let s = Sigma::ONE;
        let c = 1.1;
        let at_half_pi = distance_sq(s, c, FRAC_PI_2).unwrap();
        assert!((at_half_pi - (c - c0()).powi(2)).abs() < 1e-15);
        let at_zero = distance_sq(s, c, 0.0).unwrap();
        assert!((at_zero - (c - c1()).powi(2)).abs() < 1e-15);
        assert!(matches!(distance_sq(s, 2.0, 0.1), Err(Error::COutOfRange { .. })));
    }

    #[test]
    fn g_has_interior_critical_point_at_1_042() {
        let s = Sigma::ONE;
        let roots = interior_critical_points(s, 1.042, &cfg()).unwrap();
        assert_eq!(roots.len(), 1, "{roots:?}");
        // dense-scan oracle for the interior extremum of G
        let n = 200_000;
        let g = |tau: f64| distance_sq(s, 1.042, tau).unwrap();
        let mut sign_changes = vec![];
        let mut prev = g(1e-6) - g(0.0);
        for i in 1..n {
            let a = FRAC_PI_2 * i as f64 / n as f64;
            let b = FRAC_PI_2 * (i + 1) as f64 / n as f64;
            let d = g(b) - g(a);
            if d * prev < 0.0 {
                sign_changes.push(a);
            }
            prev = d;
        }
        assert_eq!(sign_changes.len(), 1);
        assert!((sign_changes[0] - roots[0]).abs() < 1e-4);
        // and none for small c where G is monotone
        assert!(interior_critical_points(s, 0.8, &cfg()).unwrap().is_empty());
    }

    #[test]
    fn inscribed_examples() {
        let s = Sigma::ONE;
        let d = inscribed_radius(s, 1.0, &cfg()).unwrap();
        assert!((d.radius - 0.459_698).abs() < 1e-6);
        let k = Constants::new();
        let d = inscribed_radius(s, k.midpoint(), &cfg()).unwrap();
        assert!((d.radius - (k.c1 - k.c0) / 2.0).abs() < 1e-15);
        let d = inscribed_radius(s, 1.3, &cfg()).unwrap();
        assert!((d.radius - 0.243_081).abs() < 1e-6);
        // grid-min oracle
        let n = 100_000;
        let grid = (0..=n)
            .map(|i| distance_sq(s, 1.3, FRAC_PI_2 * i as f64 / n as f64).unwrap())
            .fold(f64::INFINITY, f64::min)
            .sqrt();
        assert!((grid - d.radius).abs() < 1e-9);
        assert!(matches!(inscribed_radius(s, 0.5, &cfg()), Err(Error::COutOfRange { .. })));
    }

    #[test]
    fn max_argument_values() {
        let (m, t) = max_argument(Sigma::ONE, &cfg()).unwrap();
        assert!((m - 0.506_053).abs() < 1e-5 && (t - 1.916_72).abs() < 1e-4);
        assert_eq!(max_argument(Sigma::new(-1.0).unwrap(), &cfg()).unwrap(), (m, t));
        assert_eq!(max_argument(Sigma::new(FRAC_PI_2).unwrap(), &cfg()).unwrap().0, FRAC_PI_2);

        // dense grid oracle at sigma = 1.5
        let s = Sigma::new(1.5).unwrap();
        let n = 1_000_000;
        let oracle = (0..=n)
            .map(|i| boundary_argument(s, PI * i as f64 / n as f64))
            .fold(f64::NEG_INFINITY, f64::max);
        let (m, _) = max_argument(s, &cfg()).unwrap();
        assert!((m - oracle).abs() < 1e-8, "{m} vs {oracle}");
    }

    #[test]
    fn imag_extent_values() {
        let c = cfg();
        let (l, t0) = imag_extent(Sigma::ONE, &c).unwrap();
        let k = Constants::new();
        let residual = k.c0 + k.c1 - 2.0 * boundary_point(Sigma::ONE, t0).unwrap().x;
        assert!(residual.abs() <= 1e-10);
        assert_eq!(imag_extent(Sigma::new(-1.0).unwrap(), &c).unwrap(), (l, t0));
        // boundary-scan oracle: Y at the crossing of X with the chord
        let n = 400_000;
        let mut found = None;
        let mut prev = boundary_point(Sigma::ONE, 0.0).unwrap();
        for i in 1..=n {
            let p = boundary_point(Sigma::ONE, PI * i as f64 / n as f64).unwrap();
            if (prev.x - k.midpoint()) * (p.x - k.midpoint()) <= 0.0 {
                found = Some(0.5 * (prev.y + p.y));
                break;
            }
            prev = p;
        }
        assert!((found.unwrap() - l).abs() < 1e-5);
        let (sup, _) = imag_supremum(Sigma::ONE, &c).unwrap();
        assert!(sup >= l);
    }

    #[test]
    fn gamma_values() {
        assert_eq!(st_p_h(0.0), 0.0);
        assert!(st_p_h(FRAC_PI_2).abs() < 1e-32);
        let (g, tau) = st_p_gamma(&cfg()).unwrap();
        assert!((g - 0.065_423_8).abs() < 1e-7);
        assert!((tau - 0.832_934).abs() < 1e-5);
    }

    #[test]
    fn thresholds() {
        let k = Constants::new();
        let r = inclusion_thresholds(Sigma::ONE);
        assert_eq!(r.zeta, k.c0);
        assert_eq!(r.beta, k.c1);
        assert!((r.kappa_max - (1.0 - k.c0 * k.c0)).abs() < 1e-16);
        assert!((r.k_min - k.c1 / (k.c1 - 1.0)).abs() < 1e-15);
        assert!((r.s_l_min - 0.264_947_4).abs() < 1e-7);
        let third = inclusion_thresholds(Sigma::new(FRAC_PI_3).unwrap());
        assert!((third.s_hpl_min.unwrap() - 1.0).abs() < 1e-14);
        assert!(inclusion_thresholds(Sigma::new(1.2).unwrap()).s_hpl_min.is_none());
        assert!(matches!(hpl_threshold(Sigma::new(1.2).unwrap()), Err(Error::HplDomain(_))));
    }

    #[test]
    fn forward_inverse_consistency() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for sv in [0.5, 1.0, FRAC_PI_2] {
            let s = Sigma::new(sv).unwrap();
            for _ in 0..10_000 {
                let r = 0.999 * rng.gen::<f64>().sqrt();
                let z = Complex64::from_polar(r, rng.gen_range(-PI..PI));
                assert!(contains(s, eval_rho(s, z), 0.0), "inside z = {z}");
                let r = rng.gen_range(1.001..2.0);
                let z = Complex64::from_polar(r, rng.gen_range(-PI..PI));
                assert!(!contains(s, eval_rho(s, z), 0.0), "outside z = {z}");
            }
        }
    }

    #[test]
    fn conjugate_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let z = cz(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let s = Sigma::new(rng.gen_range(0.1..FRAC_PI_2)).unwrap();
            assert!((eval_rho(s, z.conj()) - eval_rho(s, z).conj()).norm() <= 1e-14);
        }
    }

    #[test]
    fn inscribed_disc_is_maximal() {
        for sv in [0.5, 1.0, FRAC_PI_2] {
            let s = Sigma::new(sv).unwrap();
            let (lo, hi) = (sv.cos() + 1e-3, sv.cosh() - 1e-3);
            for i in 0..50 {
                let c = lo + (hi - lo) * i as f64 / 49.0;
                let r = inscribed_radius(s, c, &cfg()).unwrap().radius;
                let ring = |scale: f64| {
                    (0..720).map(move |k| {
                        let th = 2.0 * PI * k as f64 / 720.0;
                        c + Complex64::from_polar(r * scale, th)
                    })
                };
                assert!(ring(1.0 - 1e-6).all(|u| contains(s, u, 0.0)), "c = {c}");
                assert!(ring(1.0 + 1e-3).any(|u| !contains(s, u, 0.0)), "c = {c}");
            }
        }
    }

    #[test]
    fn monotone_in_sigma() {
        let grid = [0.3, 0.6, 0.9, 1.2, FRAC_PI_2];
        for w in grid.windows(2) {
            let (small, big) = (Sigma::new(w[0]).unwrap(), Sigma::new(w[1]).unwrap());
            for p in boundary_samples(small, 512) {
                assert!(contains(big, p.as_complex(), 1e-9));
            }
        }
    }
}
