//! Radius constants and parameter thresholds for `sigma = 1`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{least_root, NumericConfig};
use crate::region::{c0, c1, inscribed_radius_closed_form, membership_excess, Sigma};
use crate::series::FamilySpec;
use num_complex::Complex64;

/// Set that the extremal's `z f'/f` must stay in for a radius to be sharp.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TargetRegion {
    Omega { sigma: f64 },
    /// `Re w > zeta`
    ReAbove { zeta: f64 },
    /// `Re w < beta`
    ReBelow { beta: f64 },
}

impl TargetRegion {
    /// Signed excess, negative inside. Half-planes are scaled by the
    /// distance from `w = 1` to the boundary line so the margin is relative.
    pub fn excess(&self, w: Complex64) -> f64 {
        match *self {
            TargetRegion::Omega { sigma } => {
                // sigma came from a validated Sigma
                membership_excess(Sigma::new(sigma).unwrap_or(Sigma::ONE), w)
            }
            TargetRegion::ReAbove { zeta } => (zeta - w.re) / (1.0 - zeta),
            TargetRegion::ReBelow { beta } => (w.re - beta) / (beta - 1.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JanowskiParams {
    pub a: f64,
    pub b: f64,
    pub n: usize,
}

impl JanowskiParams {
    pub fn new(a: f64, b: f64, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::BadN(n));
        }
        if !(-1.0 <= b && b < a && a <= 1.0) {
            return Err(Error::ParamOrder { a, b });
        }
        Ok(Self { a, b, n })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusReport {
    pub class: String,
    pub params: BTreeMap<String, f64>,
    pub radius: f64,
    #[serde(rename = "case")]
    pub case_label: String,
    pub residual: f64,
    pub extremal: Option<FamilySpec>,
    pub target: Option<TargetRegion>,
    /// Intermediate constants (competing closed forms, certified values).
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub aux: BTreeMap<String, f64>,
}

impl RadiusReport {
    fn new(class: &str, params: &[(&str, f64)], radius: f64, case_label: impl Into<String>) -> Self {
        Self {
            class: class.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            radius,
            case_label: case_label.into(),
            residual: 0.0,
            extremal: None,
            target: None,
            aux: BTreeMap::new(),
        }
    }

    fn with_extremal(mut self, f: FamilySpec, target: TargetRegion) -> Self {
        self.extremal = Some(f);
        self.target = Some(target);
        self
    }

    fn with_aux(mut self, key: &str, value: f64) -> Self {
        self.aux.insert(key.to_string(), value);
        self
    }
}

const OMEGA_1: TargetRegion = TargetRegion::Omega { sigma: 1.0 };

/// Radius of starlikeness of order `zeta`: `cos sqrt r = zeta`.
pub fn starlike_order_radius(zeta: f64) -> Result<RadiusReport> {
    let k0 = c0();
    // zeta = cos 1 must not be lost to rounding in a user-typed constant
    if !(zeta >= k0 - 1e-15 && zeta < 1.0) {
        return Err(Error::ZetaOutOfRange(zeta));
    }
    let radius = if zeta <= k0 { 1.0 } else { zeta.acos().powi(2).min(1.0) };
    let mut rep = RadiusReport::new("starlike_order", &[("zeta", zeta)], radius, "closed form")
        .with_extremal(FamilySpec::PhiN { n: 2 }, TargetRegion::ReAbove { zeta });
    rep.residual = (radius.sqrt().cos() - zeta).abs();
    Ok(rep)
}

/// `M(beta)` radius: least root of `cosh sqrt r = beta`, or 1.
pub fn mbeta_radius(beta: f64) -> Result<RadiusReport> {
    if !(beta > 1.0) {
        return Err(Error::BetaOutOfRange(beta));
    }
    let root = beta.acosh().powi(2);
    let mut rep = if root >= 1.0 {
        RadiusReport::new("mbeta", &[("beta", beta)], 1.0, "beta >= cosh 1")
    } else {
        let mut r = RadiusReport::new("mbeta", &[("beta", beta)], root, "closed form");
        r.residual = (root.sqrt().cosh() - beta).abs();
        r
    };
    rep = rep.with_extremal(FamilySpec::PhiN { n: 2 }, TargetRegion::ReBelow { beta });
    Ok(rep)
}

/// `2 (1 - r^2) cos sqrt r - sqrt r tan sqrt r - alpha`.
pub fn convexity_equation(r: f64, alpha: f64) -> f64 {
    let s = r.sqrt();
    2.0 * (1.0 - r * r) * s.cos() - s * s.tan() - alpha
}

/// Radius of convexity of order `alpha`. No extremal is attached.
pub fn convexity_radius(alpha: f64, cfg: &NumericConfig) -> Result<RadiusReport> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let r = least_root(|r| convexity_equation(r, alpha), 0.0, 1.0, cfg)?;
    let mut rep = RadiusReport::new("convexity", &[("alpha", alpha)], r, "least root");
    rep.residual = convexity_equation(r, alpha).abs();
    Ok(rep)
}

/// `(1 + A z)/(1 + B z)` subordinate to `cosh sqrt z`.
pub fn janowski_subordinate_ok(a: f64, b: f64) -> Result<bool> {
    if !(b < a) {
        return Err(Error::ParamOrder { a, b });
    }
    let (k0, k1) = (c0(), c1());
    Ok(if 2.0 * (1.0 - a * b) <= (k0 + k1) * (1.0 - b * b) {
        a <= 1.0 - (1.0 - b) * k0
    } else {
        a <= (1.0 + b) * k1 - 1.0
    })
}

/// Radius for `S*_n[A, B]` inside the region.
pub fn janowski_radius(p: JanowskiParams) -> Result<RadiusReport> {
    let JanowskiParams { a, b, n } = p;
    let (k0, k1) = (c0(), c1());
    let inv_n = 1.0 / n as f64;
    let r0 = ((1.0 - k0) / (a - b * k0)).powf(inv_n).min(1.0);
    let params = [("A", a), ("B", b), ("n", n as f64)];
    let extremal = FamilySpec::JanowskiExtremal { n, a, b };
    if b >= 0.0 {
        return Ok(RadiusReport::new("janowski", &params, r0, "B >= 0: R0")
            .with_extremal(extremal, OMEGA_1)
            .with_aux("r0", r0));
    }
    if a <= 0.0 {
        return Err(Error::UnsupportedSigns { a, b });
    }
    // disc centre reaches the midpoint of (c0, c1) at r = R1
    let s = k0 + k1;
    let r1 = ((s - 2.0) / (b * (s * b - 2.0 * a))).powf(0.5 * inv_n);
    let r2 = ((k1 - 1.0) / (a - b * k1)).powf(inv_n).min(1.0);
    let (radius, label) = if r0 <= r1 { (r0, "B < 0 < A: R0") } else { (r2, "B < 0 < A: R2") };
    Ok(RadiusReport::new("janowski", &params, radius, label)
        .with_extremal(extremal, OMEGA_1)
        .with_aux("r0", r0)
        .with_aux("r1", r1)
        .with_aux("r2", r2))
}

/// Radius for `M_n(beta)`.
pub fn mn_beta_radius(beta: f64, n: usize) -> Result<RadiusReport> {
    if n < 1 {
        return Err(Error::BadN(n));
    }
    if !(beta > 1.0) {
        return Err(Error::BetaOutOfRange(beta));
    }
    let k0 = c0();
    let radius = ((1.0 - k0) / (2.0 * beta - (1.0 + k0))).powf(1.0 / n as f64).min(1.0);
    Ok(
        RadiusReport::new("mn_beta", &[("beta", beta), ("n", n as f64)], radius, "closed form")
            .with_extremal(FamilySpec::MBetaExtremal { n, beta }, OMEGA_1),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RatioClass {
    F1Zero,
    F1Half,
    F2,
}

pub fn ratio_class_radius(class: RatioClass, n: usize) -> Result<RadiusReport> {
    if n < 1 {
        return Err(Error::BadN(n));
    }
    let k0 = c0();
    let nf = n as f64;
    let (name, rho, extremal) = match class {
        RatioClass::F1Zero => (
            "f1_zero",
            ((9.0 * nf * nf - 4.0 * (k0 - 1.0) * (1.0 + nf - k0)).sqrt() - 3.0 * nf) / (2.0 * (1.0 + nf - k0)),
            FamilySpec::F1ZeroExtremal { n },
        ),
        RatioClass::F1Half => (
            "f1_half",
            (1.0 - k0) / (2.0 * nf - (k0 - 1.0)),
            FamilySpec::F1HalfWitness { n },
        ),
        RatioClass::F2 => (
            "f2",
            ((1.0 + nf * (nf + 6.0) + 4.0 * k0 * (k0 - (1.0 + nf))).sqrt() - (1.0 + nf)) / (2.0 * (nf - k0)),
            FamilySpec::F2Witness { n },
        ),
    };
    let rep = RadiusReport::new(name, &[("n", nf)], rho.powf(1.0 / nf), "closed form");
    if class != RatioClass::F2 {
        return Ok(rep.with_extremal(extremal, OMEGA_1));
    }
    // The bounding disc for F2 also has to clear cosh 1 on the right:
    // (1 + n p)/(1 - p) <= c1. For n = 1 this binds first and the Koebe
    // function z/(1 - z)^2, which lies in F2, attains it.
    let k1 = c1();
    let right = (k1 - 1.0) / (k1 + nf);
    let rep = rep.with_aux("left", rho.powf(1.0 / nf)).with_aux("right", right.powf(1.0 / nf));
    if right < rho {
        let mut rep = rep.with_extremal(FamilySpec::KoebeType { a: 1.0 }, OMEGA_1);
        rep.radius = right.powf(1.0 / nf);
        rep.case_label = "right edge".into();
        Ok(rep)
    } else {
        Ok(rep.with_extremal(extremal, OMEGA_1))
    }
}

/// Discs `|w - center| <= radius` that contain `z f'/f` on `|z| = r` for
/// every member of a class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum DiscBound {
    Janowski { a: f64, b: f64, n: usize },
    MnBeta { beta: f64, n: usize },
    F1Zero { n: usize },
    F1Half { n: usize },
    F2 { n: usize },
    F3 { a: f64, n: usize },
}

impl DiscBound {
    /// `(center, radius)` on `|z| = r`.
    pub fn at(&self, r: f64) -> (f64, f64) {
        let pw = |n: usize| r.powi(n as i32);
        match *self {
            DiscBound::Janowski { a, b, n } => {
                let p = pw(n);
                let d = 1.0 - b * b * p * p;
                ((1.0 - a * b * p * p) / d, (a - b) * p / d)
            }
            DiscBound::MnBeta { beta, n } => {
                let p = pw(n);
                let d = 1.0 - p * p;
                ((1.0 + (1.0 - 2.0 * beta) * p * p) / d, 2.0 * (beta - 1.0) * p / d)
            }
            DiscBound::F1Zero { n } => {
                let p = pw(n);
                (1.0, (3.0 + p) * n as f64 * p / (1.0 - p * p))
            }
            DiscBound::F1Half { n } => {
                let p = pw(n);
                (1.0, 2.0 * n as f64 * p / (1.0 - p))
            }
            DiscBound::F2 { n } => {
                let p = pw(n);
                let d = 1.0 - p * p;
                (1.0 / d, (n as f64 * p * p + (1.0 + n as f64) * p) / d)
            }
            DiscBound::F3 { a, n } => {
                let p = pw(n);
                let d = 1.0 - p * p;
                ((1.0 + a * p * p) / d, (4.0 * n as f64 + 1.0 + a) * p / d)
            }
        }
    }

    /// Whether the bounding disc at `r` fits in `Omega_1`.
    pub fn fits(&self, r: f64) -> bool {
        let (c, rad) = self.at(r);
        match inscribed_radius_closed_form(Sigma::ONE, c) {
            Ok(ins) => rad <= ins,
            Err(_) => false,
        }
    }

    /// Largest `r` in `[0, 1)` with [`Self::fits`], by bisection to `tol`.
    pub fn largest_fitting_radius(&self, tol: f64) -> f64 {
        let (mut lo, mut hi) = (0.0, 1.0);
        if self.fits(1.0 - 1e-15) {
            return 1.0;
        }
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if self.fits(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }
}

/// Radius for the class `F_3` with parameter `A`.
///
/// Reports both closed forms `R0` (left constraint) and `R1` (right
/// constraint); the returned radius is the bisection-certified value of the
/// bounding-disc condition, which is what the case split selects.
pub fn f3_radius(a: f64, n: usize) -> Result<RadiusReport> {
    if n < 1 {
        return Err(Error::BadN(n));
    }
    if !(-1.0..=1.0).contains(&a) {
        return Err(Error::AOutOfRange(a));
    }
    let (k0, k1) = (c0(), c1());
    let nf = n as f64;
    let inv_n = 1.0 / nf;
    let b = 1.0 + a + 4.0 * nf;
    // smallest root of (A + c0) p^2 - b p + (1 - c0), written to stay finite at A = -c0
    let (qa, qd) = (a + k0, 1.0 - k0);
    let r0 = (2.0 * qd / (b + (b * b - 4.0 * qa * qd).sqrt())).powf(inv_n);
    let r1 = (((b * b + 4.0 * (a + k1) * (k1 - 1.0)).sqrt() - b) / (2.0 * (a + k1))).powf(inv_n);
    let m = 0.5 * (k0 + k1);
    let r_mid = ((m - 1.0) / (a + m)).powf(0.5 * inv_n);
    let certified = DiscBound::F3 { a, n }.largest_fitting_radius(1e-10);
    let (c, _) = DiscBound::F3 { a, n }.at(certified);
    let label = if c <= m { "R0" } else { "R1" };
    Ok(
        RadiusReport::new("f3", &[("A", a), ("n", nf)], certified, label)
            .with_extremal(FamilySpec::F3Witness { n, a }, OMEGA_1)
            .with_aux("r0", r0)
            .with_aux("r1", r1)
            .with_aux("r_mid", r_mid),
    )
}

/// Families with a closed-form membership threshold on their parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ExampleFamily {
    MonomialPerturb { n: usize },
    KoebeType,
    HalfKoebe,
    ExpLine,
}

impl ExampleFamily {
    pub fn member(&self, param: f64) -> FamilySpec {
        match *self {
            ExampleFamily::MonomialPerturb { n } => FamilySpec::MonomialPerturb { n, a: param },
            ExampleFamily::KoebeType => FamilySpec::KoebeType { a: param },
            ExampleFamily::HalfKoebe => FamilySpec::HalfKoebe { a: param },
            ExampleFamily::ExpLine => FamilySpec::ExpLine { a: param },
        }
    }
}

pub fn family_threshold(family: ExampleFamily) -> Result<f64> {
    let (k0, k1) = (c0(), c1());
    Ok(match family {
        ExampleFamily::MonomialPerturb { n } => {
            if n < 2 {
                return Err(Error::BadN(n));
            }
            (1.0 - k0) / (n as f64 - k0)
        }
        ExampleFamily::KoebeType => (k1 - 1.0) / (k1 + 1.0),
        ExampleFamily::HalfKoebe => (k1 - 1.0) / k1,
        ExampleFamily::ExpLine => 1.0 - k0,
    })
}
