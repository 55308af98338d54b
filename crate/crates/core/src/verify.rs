//! Sampling oracles for subordination, region inclusion and sharpness.
//!
//! Every check reduces to a signed excess per sample (negative inside the
//! target) and keeps the worst sample. Samples are evaluated in parallel and
//! reduced in index order, so reports are deterministic.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::radii::{RadiusReport, TargetRegion};
use crate::region::{boundary_samples, inscribed_radius_closed_form, membership_excess, Sigma};
use crate::series::{FamilySpec, TaylorSeries, ACCURACY_RADIUS};

#[derive(Debug, Clone, PartialEq)]
pub struct SamplingPlan {
    pub radii: Vec<f64>,
    pub angles: usize,
    pub margin_in: f64,
    pub margin_out: f64,
}

impl Default for SamplingPlan {
    fn default() -> Self {
        Self {
            radii: vec![0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999],
            angles: 1024,
            margin_in: 1e-9,
            margin_out: 1e-3,
        }
    }
}

impl SamplingPlan {
    pub fn validate(&self) -> Result<()> {
        if self.radii.is_empty() || self.radii.iter().any(|r| !(*r > 0.0 && *r < 1.0)) {
            return Err(Error::BadParams("sampling radii must lie in (0, 1)".into()));
        }
        if self.angles < 64 {
            return Err(Error::BadParams(format!("angles = {} < 64", self.angles)));
        }
        if !(self.margin_in >= 0.0 && self.margin_out > 0.0) {
            return Err(Error::BadParams("margins must be non-negative".into()));
        }
        Ok(())
    }

    pub fn with_angles(mut self, angles: usize) -> Self {
        self.angles = angles;
        self
    }

    fn angle(&self, k: usize) -> f64 {
        -PI + 2.0 * PI * k as f64 / self.angles as f64
    }
}

fn ser_witness<S: Serializer>(w: &Option<Complex64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    w.map(|w| [w.re, w.im]).serialize(s)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub pass: bool,
    /// Largest signed excess over all samples; negative means strictly inside.
    pub worst_margin: f64,
    #[serde(serialize_with = "ser_witness")]
    pub witness: Option<Complex64>,
    #[serde(rename = "samples")]
    pub samples_checked: usize,
    /// Closed-form slack, when one exists for the check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<f64>,
}

impl VerificationReport {
    fn from_worst(worst: Option<(f64, Complex64)>, samples: usize, pass: impl Fn(f64) -> bool) -> Self {
        match worst {
            Some((m, w)) => Self {
                pass: pass(m),
                worst_margin: m,
                witness: Some(w),
                samples_checked: samples,
                cross_check: None,
            },
            None => Self {
                pass: true,
                worst_margin: f64::NEG_INFINITY,
                witness: None,
                samples_checked: 0,
                cross_check: None,
            },
        }
    }
}

/// Max-excess reduction with the lowest index winning ties (NaN counts as worst).
fn worst_of(items: Vec<(f64, Complex64)>) -> Option<(f64, Complex64)> {
    items.into_iter().fold(None, |acc, (m, w)| match acc {
        None => Some((m, w)),
        Some((best, _)) if best.is_nan() => acc,
        Some((best, _)) if m.is_nan() || m > best => Some((m, w)),
        _ => acc,
    })
}

/// Function whose `z f'/f` is being tested.
#[derive(Debug, Clone, PartialEq)]
pub enum Subject {
    Family(FamilySpec),
    Series(TaylorSeries),
}

impl Subject {
    fn f_and_log_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        match self {
            Subject::Family(spec) => (spec.eval(z), spec.log_derivative(z)),
            Subject::Series(s) => {
                let f = s.eval_unchecked(z);
                (f, z * s.eval_derivative_unchecked(z) / f)
            }
        }
    }
}

/// Worst excess of `z f'/f` over the circles `radii` against `target`.
fn image_worst(
    subject: &Subject,
    target: &TargetRegion,
    radii: &[f64],
    angles: usize,
) -> Result<(Option<(f64, Complex64)>, usize)> {
    let total = radii.len() * angles;
    let samples: Vec<std::result::Result<(f64, Complex64), Complex64>> = (0..total)
        .into_par_iter()
        .map(|i| {
            let r = radii[i / angles];
            let theta = -PI + 2.0 * PI * (i % angles) as f64 / angles as f64;
            let z = Complex64::from_polar(r, theta);
            let (f, w) = subject.f_and_log_derivative(z);
            if f.norm() < 1e-12 {
                return Err(z);
            }
            Ok((target.excess(w), z))
        })
        .collect();
    let mut ok = Vec::with_capacity(total);
    for s in samples {
        match s {
            Ok(v) => ok.push(v),
            Err(z) => return Err(Error::ZeroOfF(z)),
        }
    }
    Ok((worst_of(ok), total))
}

/// Certifies `z f'/f` subordinate to `cosh(sigma sqrt z)` by containment of
/// sampled images. Series subjects are only sampled inside `|z| <= 0.95`.
pub fn verify_subordination(subject: &Subject, sigma: Sigma, plan: &SamplingPlan) -> Result<VerificationReport> {
    plan.validate()?;
    if let Subject::Family(spec) = subject {
        spec.validate()?;
    }
    let radii: Vec<f64> = match subject {
        Subject::Family(_) => plan.radii.clone(),
        Subject::Series(_) => {
            let mut r: Vec<f64> = plan.radii.iter().map(|r| r.min(ACCURACY_RADIUS)).collect();
            r.dedup();
            r
        }
    };
    let target = TargetRegion::Omega { sigma: sigma.value() };
    let (worst, n) = image_worst(subject, &target, &radii, plan.angles)?;
    Ok(VerificationReport::from_worst(worst, n, |m| m < plan.margin_in))
}

/// Sets whose inclusion relation with `Omega_sigma` is checked.
///
/// The first four are tested as subsets of `Omega_sigma`; the last three are
/// targets that must contain `Omega_sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "region", rename_all = "snake_case")]
pub enum InclusionRegion {
    /// `|u - c| < r` with real centre
    Disc { c: f64, r: f64 },
    /// `(1 + A z)/(1 + B z)` image of the disc
    JanowskiImage { a: f64, b: f64 },
    /// `sqrt(1 + kappa z)` image
    SqrtKappa { kappa: f64 },
    /// `Re u > k |u - 1|`, an ellipse for `k > 1`
    EllipseK { k: f64 },
    /// `(1 - z)^{-s}` image, contains `Omega` when `s` is large enough
    HplImage { s: f64 },
    /// `(1 + s z)^2` image
    LimaconImage { s: f64 },
    /// `Re u + gamma > |u - gamma|`
    ParabolaImage { gamma: f64 },
}

impl InclusionRegion {
    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::BadParams(m));
        match *self {
            InclusionRegion::Disc { r, .. } if !(r >= 0.0) => bad(format!("disc radius {r}")),
            InclusionRegion::JanowskiImage { a, b } if !(b < a && b.abs() < 1.0 && a.abs() <= 1.0) => {
                bad(format!("Janowski image needs -1 < B < A <= 1 (A = {a}, B = {b})"))
            }
            InclusionRegion::SqrtKappa { kappa } if !(kappa > 0.0 && kappa <= 1.0) => {
                bad(format!("kappa = {kappa} outside (0, 1]"))
            }
            InclusionRegion::EllipseK { k } if !(k > 1.0) => bad(format!("k = {k} must exceed 1")),
            InclusionRegion::HplImage { s } | InclusionRegion::LimaconImage { s } if !(s > 0.0 && s <= 1.0) => {
                bad(format!("s = {s} outside (0, 1]"))
            }
            InclusionRegion::ParabolaImage { gamma } if !(gamma > 0.0) => bad(format!("gamma = {gamma} <= 0")),
            _ => Ok(()),
        }
    }

    fn contains_omega(&self) -> bool {
        matches!(
            self,
            InclusionRegion::HplImage { .. } | InclusionRegion::LimaconImage { .. } | InclusionRegion::ParabolaImage { .. }
        )
    }

    fn boundary(&self, theta: f64) -> Complex64 {
        let e = Complex64::from_polar(1.0, theta);
        match *self {
            InclusionRegion::Disc { c, r } => c + r * e,
            InclusionRegion::JanowskiImage { a, b } => (1.0 + a * e) / (1.0 + b * e),
            InclusionRegion::SqrtKappa { kappa } => (1.0 + kappa * e).sqrt(),
            InclusionRegion::EllipseK { k } => {
                let d = k * k - 1.0;
                Complex64::new(k * k / d + k / d * theta.cos(), theta.sin() / d.sqrt())
            }
            _ => unreachable!("target regions are not sampled"),
        }
    }

    /// Signed excess of `u` against a target region, negative inside.
    fn target_excess(&self, u: Complex64) -> f64 {
        match *self {
            InclusionRegion::HplImage { s } => (1.0 - u.powf(-1.0 / s)).norm() - 1.0,
            InclusionRegion::LimaconImage { s } => (u.sqrt() - 1.0).norm() / s - 1.0,
            InclusionRegion::ParabolaImage { gamma } => ((u - gamma).norm() - u.re) / gamma - 1.0,
            _ => unreachable!("only target regions have an excess"),
        }
    }
}

pub fn verify_region_inclusion(
    region: InclusionRegion,
    sigma: Sigma,
    plan: &SamplingPlan,
) -> Result<VerificationReport> {
    plan.validate()?;
    region.validate()?;
    let n = plan.angles;
    let samples: Vec<(f64, Complex64)> = if region.contains_omega() {
        boundary_samples(sigma, n)
            .par_iter()
            .map(|p| (region.target_excess(p.as_complex()), p.as_complex()))
            .collect()
    } else {
        (0..n)
            .into_par_iter()
            .map(|k| {
                let u = region.boundary(plan.angle(k));
                (membership_excess(sigma, u), u)
            })
            .collect()
    };
    let mut rep = VerificationReport::from_worst(worst_of(samples), n, |m| m < plan.margin_in);
    if let InclusionRegion::Disc { c, r } = region {
        rep.cross_check = inscribed_radius_closed_form(sigma, c).ok().map(|ins| ins - r);
    }
    Ok(rep)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpnessReport {
    pub pass: bool,
    pub inner_radius: f64,
    pub containment: VerificationReport,
    /// `None` when the radius is 1 and there is nothing outside to probe.
    pub outer_radius: Option<f64>,
    pub escape: Option<VerificationReport>,
}

/// Containment of the extremal's image just inside the radius and escape
/// just outside it.
pub fn sharpness_probe(report: &RadiusReport, plan: &SamplingPlan) -> Result<SharpnessReport> {
    plan.validate()?;
    let (Some(spec), Some(target)) = (&report.extremal, &report.target) else {
        return Err(Error::BadParams(format!("{} radius has no extremal function", report.class)));
    };
    let subject = Subject::Family(*spec);
    let inner = report.radius * (1.0 - 1e-4);
    let mut radii: Vec<f64> = plan.radii.iter().map(|q| q * inner).collect();
    radii.push(inner);
    let (worst, n) = image_worst(&subject, target, &radii, plan.angles)?;
    let containment = VerificationReport::from_worst(worst, n, |m| m < plan.margin_in);

    let outer = (report.radius * (1.0 + 1e-2)).min(0.999);
    let (outer_radius, escape) = if report.radius >= 1.0 || outer <= inner {
        (None, None)
    } else {
        let (worst, n) = image_worst(&subject, target, &[outer], plan.angles)?;
        // pass here means "some sample escaped by more than margin_out"
        let rep = VerificationReport::from_worst(worst, n, |m| m > plan.margin_out);
        (Some(outer), Some(rep))
    };
    let pass = containment.pass && escape.as_ref().is_none_or(|e| e.pass);
    Ok(SharpnessReport {
        pass,
        inner_radius: inner,
        containment,
        outer_radius,
        escape,
    })
}

/// Winding number of the closed polygon `poly` around `u`.
pub fn winding_number(poly: &[Complex64], u: Complex64) -> i32 {
    let mut wn = 0;
    let n = poly.len();
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        let cross = (b.re - a.re) * (u.im - a.im) - (u.re - a.re) * (b.im - a.im);
        if a.im <= u.im {
            if b.im > u.im && cross > 0.0 {
                wn += 1;
            }
        } else if b.im <= u.im && cross < 0.0 {
            wn -= 1;
        }
    }
    wn
}

/// Membership by winding number of the sampled boundary of `Omega_sigma`.
pub fn polygon_contains(sigma: Sigma, vertices: usize, u: Complex64) -> bool {
    let poly: Vec<Complex64> = boundary_samples(sigma, vertices).iter().map(|p| p.as_complex()).collect();
    winding_number(&poly, u) != 0
}

/// Largest `r` for which the disc `(center(r), radius(r))` passes a sampled
/// containment test in `Omega_sigma`; independent of any closed-form
/// inscribed radius. Angles include `0` and `pi`, where real-centred discs
/// touch the boundary.
pub fn sampled_disc_radius<F>(family: F, sigma: Sigma, angles: usize, tol: f64) -> f64
where
    F: Fn(f64) -> (f64, f64) + Sync,
{
    let angles = angles.max(8) & !1;
    let fits = |r: f64| {
        let (c, rad) = family(r);
        if !(c.is_finite() && rad.is_finite()) {
            return false;
        }
        (0..angles).into_par_iter().all(|k| {
            let u = Complex64::new(c, 0.0) + Complex64::from_polar(rad, 2.0 * PI * k as f64 / angles as f64);
            membership_excess(sigma, u) <= 0.0
        })
    };
    if fits(1.0 - 1e-15) {
        return 1.0;
    }
    let (mut lo, mut hi) = (0.0, 1.0 - 1e-15);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radii::{mbeta_radius, mn_beta_radius, starlike_order_radius};
    use crate::region::{c0, c1, contains, eval_rho, inscribed_radius};
    use crate::numerics::NumericConfig;
    use crate::series::build_phi_n;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn plan() -> SamplingPlan {
        SamplingPlan::default()
    }

    #[test]
    fn plan_validation() {
        assert!(plan().validate().is_ok());
        assert!(plan().with_angles(10).validate().is_err());
        let mut p = plan();
        p.radii.push(1.0);
        assert!(p.validate().is_err());
    }

    #[test]
    fn subordination_examples() {
        let s = Sigma::ONE;
        assert!(verify_subordination(&Subject::Family(FamilySpec::PhiN { n: 2 }), s, &plan()).unwrap().pass);
        assert!(verify_subordination(&Subject::Family(FamilySpec::Fun1), s, &plan()).unwrap().pass);
        assert!(verify_subordination(&Subject::Family(FamilySpec::Fun2), s, &plan()).unwrap().pass);
        let rep = verify_subordination(&Subject::Family(FamilySpec::HalfKoebe { a: 1.0 }), s, &plan()).unwrap();
        assert!(!rep.pass);
        assert!(rep.witness.unwrap().norm() > 0.99);
        let series = build_phi_n(3, 48).unwrap();
        assert!(verify_subordination(&Subject::Series(series), s, &plan()).unwrap().pass);
    }

    #[test]
    fn subordination_reports_zero_of_f() {
        // z + 2 z^2 vanishes at z = -1/2, which is a sample point
        let spec = FamilySpec::MonomialPerturb { n: 2, a: 2.0 };
        let mut p = plan();
        p.radii = vec![0.5];
        let err = verify_subordination(&Subject::Family(spec), Sigma::ONE, &p).unwrap_err();
        assert!(matches!(err, Error::ZeroOfF(_)));
    }

    #[test]
    fn inclusion_examples() {
        let s = Sigma::ONE;
        let k0 = c0();
        let rep = verify_region_inclusion(InclusionRegion::SqrtKappa { kappa: 1.0 - k0 * k0 }, s, &plan()).unwrap();
        assert!(rep.pass && rep.worst_margin.abs() < 1e-9);
        assert!((rep.witness.unwrap() - k0).norm() < 1e-9);
        let rep = verify_region_inclusion(InclusionRegion::SqrtKappa { kappa: 0.9 }, s, &plan()).unwrap();
        assert!(!rep.pass);
        assert!((rep.witness.unwrap().re - 0.1f64.sqrt()).abs() < 1e-12);
        let rep = verify_region_inclusion(InclusionRegion::Disc { c: 1.0, r: 0.05 }, s, &plan()).unwrap();
        assert!(rep.pass && rep.cross_check.unwrap() > 0.0);
        assert!(verify_region_inclusion(InclusionRegion::EllipseK { k: 0.5 }, s, &plan()).is_err());
    }

    #[test]
    fn target_inclusions_are_sharp() {
        let s = Sigma::ONE;
        let k0 = c0();
        let hpl = -k0.ln() / 2f64.ln();
        assert!(verify_region_inclusion(InclusionRegion::HplImage { s: hpl }, s, &plan()).unwrap().pass);
        assert!(!verify_region_inclusion(InclusionRegion::HplImage { s: hpl - 1e-3 }, s, &plan()).unwrap().pass);
        let lim = 1.0 - k0.sqrt();
        assert!(verify_region_inclusion(InclusionRegion::LimaconImage { s: lim }, s, &plan()).unwrap().pass);
        assert!(!verify_region_inclusion(InclusionRegion::LimaconImage { s: lim - 1e-3 }, s, &plan()).unwrap().pass);
    }

    #[test]
    fn disc_oracle_equivalence() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let cfg = NumericConfig::default();
        for sv in [0.5, 1.0, std::f64::consts::FRAC_PI_2] {
            let s = Sigma::new(sv).unwrap();
            for _ in 0..100 {
                let c = rng.gen_range(sv.cos() + 1e-3..sv.cosh() - 1e-3);
                let ins = inscribed_radius(s, c, &cfg).unwrap().radius;
                let r = ins * rng.gen_range(0.5..1.5);
                // keep clear of the tangency band where sampling cannot decide
                if (r / ins - 1.0).abs() < 1e-3 {
                    continue;
                }
                let rep =
                    verify_region_inclusion(InclusionRegion::Disc { c, r: r * (1.0 - 1e-6) }, s, &plan()).unwrap();
                assert_eq!(rep.pass, r <= ins, "sigma = {sv}, c = {c}, r = {r}, ins = {ins}");
            }
        }
    }

    #[test]
    fn winding_matches_analytic_membership() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for sv in [0.5, 1.0] {
            let s = Sigma::new(sv).unwrap();
            let poly: Vec<Complex64> = boundary_samples(s, 4096).iter().map(|p| p.as_complex()).collect();
            let (x0, x1) = (sv.cos() - 0.1, sv.cosh() + 0.1);
            let y1 = 0.7;
            let mut checked = 0;
            for _ in 0..2000 {
                let u = Complex64::new(rng.gen_range(x0..x1), rng.gen_range(-y1..y1));
                if poly.iter().map(|p| (p - u).norm()).fold(f64::INFINITY, f64::min) < 1e-4 {
                    continue;
                }
                checked += 1;
                assert_eq!(winding_number(&poly, u) != 0, contains(s, u, 0.0), "u = {u}");
            }
            assert!(checked > 1900);
        }
    }

    #[test]
    fn sharpness_examples() {
        let zeta = 0.5f64.cos();
        let rep = starlike_order_radius(zeta).unwrap();
        let w = FamilySpec::PhiN { n: 2 }.log_derivative(Complex64::new(-rep.radius, 0.0));
        assert!((w.re - zeta).abs() < 1e-14);
        assert!(sharpness_probe(&rep, &plan()).unwrap().pass);

        let rep = mn_beta_radius(c1(), 1).unwrap();
        let sh = sharpness_probe(&rep, &plan()).unwrap();
        assert!(sh.pass);
        // the escaping sample sits on the positive real axis
        let z = sh.escape.unwrap().witness.unwrap();
        assert!(z.re > 0.0 && z.im.abs() < 1e-12);

        let rep = mbeta_radius(2.0).unwrap();
        let sh = sharpness_probe(&rep, &plan()).unwrap();
        assert!(sh.pass && sh.escape.is_none());
    }

    #[test]
    fn sampled_disc_radius_matches_closed_form() {
        let s = Sigma::ONE;
        // discs of growing radius around a fixed centre
        let c = 1.3;
        let r = sampled_disc_radius(|t| (c, t), s, 720, 1e-12);
        assert!((r - (c1() - c)).abs() < 1e-9);
        let r = sampled_disc_radius(|t| (0.9, t), s, 720, 1e-12);
        assert!((r - (0.9 - c0())).abs() < 1e-9);
    }

    #[test]
    fn forward_image_of_subdisc_is_inside() {
        let s = Sigma::new(0.8).unwrap();
        let rep = verify_subordination(&Subject::Family(FamilySpec::PhiN { n: 2 }), s, &plan()).unwrap();
        // phi's image is cosh(sqrt z), which is not inside the smaller region
        assert!(!rep.pass);
        assert!(contains(s, eval_rho(s, Complex64::new(0.5, 0.0)), 0.0));
    }
}
