//! Truncated complex power series and the closed-form member functions of
//! the class.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{integrate, NumericConfig};
use crate::region::Sigma;

pub const DEFAULT_ORDER: usize = 32;

/// Largest |z| at which [`series_eval`] trusts a truncated series.
pub const ACCURACY_RADIUS: f64 = 0.95;

const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Coefficients `c_0..=c_N`; `c_k` multiplies `z^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorSeries {
    coeffs: Vec<Complex64>,
}

impl TaylorSeries {
    pub fn zeros(order: usize) -> Self {
        Self {
            coeffs: vec![C_ZERO; order + 1],
        }
    }

    pub fn constant(value: f64, order: usize) -> Self {
        let mut s = Self::zeros(order);
        s.coeffs[0] = value.into();
        s
    }

    /// `scale * z^power`, zero if `power > order`.
    pub fn monomial(scale: Complex64, power: usize, order: usize) -> Self {
        let mut s = Self::zeros(order);
        if power <= order {
            s.coeffs[power] = scale;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ParamOutOfDomain("empty coefficient list".into()));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::ParamOutOfDomain("non-finite coefficient".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(C_ZERO)
    }

    /// Normalized member of A: `c_0 = 0`, `c_1 = 1`.
    pub fn is_normalized(&self, tol: f64) -> bool {
        self.coeff(0).norm() <= tol && (self.coeff(1) - 1.0).norm() <= tol
    }

    fn zip_with(&self, other: &Self, op: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n).map(|k| op(self.coeffs[k], other.coeffs[k])).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![C_ZERO; n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if *a == C_ZERO {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// `1 / s`, requires a nonzero constant term.
    pub fn recip(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0.norm() == 0.0 {
            return Err(Error::ParamOutOfDomain("reciprocal of a series with c0 = 0".into()));
        }
        let n = self.order();
        let mut out = vec![C_ZERO; n + 1];
        out[0] = c0.inv();
        for k in 1..=n {
            let mut acc = C_ZERO;
            for j in 1..=k {
                acc += self.coeffs[j] * out[k - j];
            }
            out[k] = -acc / c0;
        }
        Ok(Self { coeffs: out })
    }

    /// Principal logarithm of a series with `c_0 = 1`, from `g' = s'/s`.
    pub fn ln(&self) -> Result<Self> {
        if (self.coeffs[0] - C_ONE).norm() > 1e-14 {
            return Err(Error::ConstantTermNotOne(self.coeffs[0]));
        }
        let n = self.order();
        let mut g = vec![C_ZERO; n + 1];
        for k in 1..=n {
            let mut acc = self.coeffs[k] * k as f64;
            for (j, gj) in g.iter().enumerate().take(k).skip(1) {
                acc -= gj * self.coeffs[k - j] * j as f64;
            }
            g[k] = acc / k as f64;
        }
        Ok(Self { coeffs: g })
    }

    /// `s^gamma` on the principal branch for `c_0 = 1`.
    pub fn powc(&self, gamma: Complex64) -> Result<Self> {
        series_exp(&self.ln()?.scale(gamma))
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut out = vec![C_ZERO; n.max(1)];
        for k in 1..=n {
            out[k - 1] = self.coeffs[k] * k as f64;
        }
        Self { coeffs: out }
    }

    /// Multiply by `z^m`, keeping the order.
    pub fn shift(&self, m: usize) -> Self {
        let n = self.order();
        let mut out = vec![C_ZERO; n + 1];
        for k in 0..=n {
            if k + m <= n {
                out[k + m] = self.coeffs[k];
            }
        }
        Self { coeffs: out }
    }

    /// Divide by `z`; the constant term is discarded and the order drops by one.
    pub fn unshift(&self) -> Self {
        Self {
            coeffs: if self.coeffs.len() > 1 {
                self.coeffs[1..].to_vec()
            } else {
                vec![C_ZERO]
            },
        }
    }

    /// Substitute `z -> z^m`, keeping the order.
    pub fn compose_power(&self, m: usize) -> Self {
        let n = self.order();
        let mut out = vec![C_ZERO; n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * m <= n {
                out[k * m] = *c;
            } else {
                break;
            }
        }
        Self { coeffs: out }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, C_ZERO);
        Self { coeffs }
    }

    /// Horner evaluation without the accuracy-domain check.
    pub fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(C_ZERO, |acc, c| acc * z + c)
    }

    pub fn eval_derivative_unchecked(&self, z: Complex64) -> Complex64 {
        let mut acc = C_ZERO;
        for k in (1..self.coeffs.len()).rev() {
            acc = acc * z + self.coeffs[k] * k as f64;
        }
        acc
    }

    /// JSON coefficient dump: an array of `[re, im]` pairs indexed by power.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::json!([c.re, c.im]))
                .collect(),
        )
    }
}

/// `exp(s)` for `s_0 = 0` via `g' = s' g`.
pub fn series_exp(s: &TaylorSeries) -> Result<TaylorSeries> {
    if s.coeffs[0].norm() != 0.0 {
        return Err(Error::NonzeroConstantTerm(s.coeffs[0]));
    }
    let n = s.order();
    let mut g = vec![C_ZERO; n + 1];
    g[0] = C_ONE;
    for k in 1..=n {
        let mut acc = C_ZERO;
        for j in 1..=k {
            acc += s.coeffs[j] * g[k - j] * j as f64;
        }
        g[k] = acc / k as f64;
    }
    Ok(TaylorSeries { coeffs: g })
}

/// Horner evaluation restricted to `|z| <= 0.95`.
pub fn series_eval(s: &TaylorSeries, z: Complex64) -> Result<Complex64> {
    check_domain(z)?;
    Ok(s.eval_unchecked(z))
}

pub fn series_eval_derivative(s: &TaylorSeries, z: Complex64) -> Result<Complex64> {
    check_domain(z)?;
    Ok(s.eval_derivative_unchecked(z))
}

fn check_domain(z: Complex64) -> Result<()> {
    if z.norm() > ACCURACY_RADIUS {
        return Err(Error::OutsideAccuracyDomain(z.norm()));
    }
    Ok(())
}

/// `cosh(sigma sqrt z) = sum sigma^{2k} z^k / (2k)!`.
pub fn build_rho_series(sigma: f64, order: usize) -> Result<TaylorSeries> {
    let sigma = Sigma::new(sigma)?.value();
    let s2 = sigma * sigma;
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = 1.0;
    coeffs.push(C_ONE);
    for k in 1..=order {
        term *= s2 / ((2 * k - 1) * (2 * k)) as f64;
        coeffs.push(term.into());
    }
    Ok(TaylorSeries { coeffs })
}

/// Exponent `S(z) = int_0^z (rho(t^{n-1}) - 1)/t dt`, integrated term-wise.
fn phi_exponent(n: usize, order: usize) -> TaylorSeries {
    let m = n - 1;
    let mut s = TaylorSeries::zeros(order);
    let mut fact = 1.0;
    for k in 1.. {
        fact *= ((2 * k - 1) * (2 * k)) as f64;
        let p = k * m;
        if p > order {
            break;
        }
        s.coeffs[p] = (1.0 / (p as f64 * fact)).into();
    }
    s
}

/// `phi_n(z) = z exp(int_0^z (rho(t^{n-1}) - 1)/t dt)`.
pub fn build_phi_n(n: usize, order: usize) -> Result<TaylorSeries> {
    if n < 2 {
        return Err(Error::BadN(n));
    }
    if order < n {
        return Err(Error::BadOrder { n, order });
    }
    let g = series_exp(&phi_exponent(n, order))?;
    Ok(g.shift(1))
}

/// Named member and witness functions, all normalized `f(0) = 0, f'(0) = 1`.
///
/// `w` below stands for `z^n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `z exp(int_0^z (cosh sqrt(t^{n-1}) - 1)/t dt)`
    PhiN { n: usize },
    /// `z + a z^n`
    MonomialPerturb { n: usize, a: f64 },
    /// `z / (1 - A z)^2`
    KoebeType { a: f64 },
    /// `z / (1 - A z)`
    HalfKoebe { a: f64 },
    /// `z exp(A z)`
    ExpLine { a: f64 },
    /// `z (1 + (1 - 2 beta) w)`
    F1Witness { n: usize, beta: f64 },
    /// `z (1 + w)^2 / (1 - w)`
    F1ZeroExtremal { n: usize },
    /// `z`, paired with `g = z / (1 - w)`
    F1HalfWitness { n: usize },
    /// `z (1 + w) / (1 - w)^{1/n}`
    F2Witness { n: usize },
    /// `z (1 + w)^2 / (1 - w)^{2 + (1 + A)/n}`
    F3Witness { n: usize, a: f64 },
    /// `z (1 + B w)^{(A - B)/(nB)}`, or `z exp(A w / n)` when `B = 0`
    JanowskiExtremal { n: usize, a: f64, b: f64 },
    /// `z / (1 - w)^{2(1 - beta)/n}`
    MBetaExtremal { n: usize, beta: f64 },
    /// `z exp(z/3 + z^2/36)`
    Fun1,
    /// `z exp(Si(z/3))`
    Fun2,
    /// `z + z^3/4`
    TildeCubic,
}

fn domain(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ParamOutOfDomain(what()))
    }
}

/// `Si(x) = sum_j (-1)^j x^{2j+1} / ((2j+1) (2j+1)!)`, summed until the
/// terms stop contributing.
fn sine_integral(x: Complex64) -> Complex64 {
    let x2 = x * x;
    let mut power = x;
    let mut fact = 1.0;
    let mut sum = C_ZERO;
    for j in 0..40usize {
        let k = 2 * j + 1;
        if j > 0 {
            fact *= ((k - 1) * k) as f64;
            power *= -x2;
        }
        let term = power / (k as f64 * fact);
        sum += term;
        if term.norm() <= 1e-18 * sum.norm() {
            break;
        }
    }
    sum
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let finite = |x: f64| x.is_finite();
        match *self {
            PhiN { n } => domain(n >= 2, || format!("PhiN needs n >= 2 (n = {n})")),
            MonomialPerturb { n, a } => {
                domain(n >= 2 && finite(a), || format!("MonomialPerturb n = {n}, a = {a}"))
            }
            KoebeType { a } | HalfKoebe { a } => {
                domain(a.abs() <= 1.0, || format!("|A| <= 1 required (A = {a})"))
            }
            ExpLine { a } => domain(finite(a), || format!("ExpLine A = {a}")),
            F1Witness { n, beta } => domain(n >= 1 && (0.0..1.0).contains(&beta), || {
                format!("F1Witness n = {n}, beta = {beta}")
            }),
            F1ZeroExtremal { n } | F1HalfWitness { n } | F2Witness { n } => {
                domain(n >= 1, || format!("n = {n}"))
            }
            F3Witness { n, a } => domain(n >= 1 && (-1.0..=1.0).contains(&a), || {
                format!("F3Witness n = {n}, A = {a}")
            }),
            JanowskiExtremal { n, a, b } => {
                domain(n >= 1 && -1.0 <= b && b < a && a <= 1.0, || {
                    format!("JanowskiExtremal needs -1 <= B < A <= 1 (A = {a}, B = {b})")
                })
            }
            MBetaExtremal { n, beta } => {
                domain(n >= 1 && beta > 1.0, || format!("MBetaExtremal n = {n}, beta = {beta}"))
            }
            Fun1 | Fun2 | TildeCubic => Ok(()),
        }
    }

    /// Short identifier used in reports.
    pub fn id(&self) -> String {
        use FamilySpec::*;
        match *self {
            PhiN { n } => format!("phi_{n}"),
            MonomialPerturb { n, a } => format!("z+{a}z^{n}"),
            KoebeType { a } => format!("z/(1-{a}z)^2"),
            HalfKoebe { a } => format!("z/(1-{a}z)"),
            ExpLine { a } => format!("z*exp({a}z)"),
            F1Witness { n, beta } => format!("f1_witness(n={n},beta={beta})"),
            F1ZeroExtremal { n } => format!("f1_zero_extremal(n={n})"),
            F1HalfWitness { n } => format!("f1_half_witness(n={n})"),
            F2Witness { n } => format!("f2_witness(n={n})"),
            F3Witness { n, a } => format!("f3_witness(n={n},A={a})"),
            JanowskiExtremal { n, a, b } => format!("janowski_extremal(n={n},A={a},B={b})"),
            MBetaExtremal { n, beta } => format!("mbeta_extremal(n={n},beta={beta})"),
            Fun1 => "z*exp(z/3+z^2/36)".into(),
            Fun2 => "z*exp(Si(z/3))".into(),
            TildeCubic => "z+z^3/4".into(),
        }
    }

    /// `z f'(z) / f(z)` in closed form.
    pub fn log_derivative(&self, z: Complex64) -> Complex64 {
        use FamilySpec::*;
        let pw = |n: usize| z.powu(n as u32);
        match *self {
            PhiN { n } => {
                let w = pw(n - 1);
                crate::region::eval_rho(Sigma::ONE, w)
            }
            MonomialPerturb { n, a } => {
                let w = pw(n - 1);
                (1.0 + w * (n as f64 * a)) / (1.0 + w * a)
            }
            KoebeType { a } => (1.0 + z * a) / (1.0 - z * a),
            HalfKoebe { a } => (1.0 - z * a).inv(),
            ExpLine { a } => 1.0 + z * a,
            F1Witness { n, beta } => {
                let q = (1.0 - 2.0 * beta) * pw(n);
                1.0 + q * n as f64 / (1.0 + q)
            }
            F1ZeroExtremal { n } => {
                let w = pw(n);
                let nf = n as f64;
                1.0 + w * (2.0 * nf) / (1.0 + w) + w * nf / (1.0 - w)
            }
            F1HalfWitness { .. } => C_ONE,
            F2Witness { n } => {
                let w = pw(n);
                1.0 + w * n as f64 / (1.0 + w) + w / (1.0 - w)
            }
            F3Witness { n, a } => {
                let w = pw(n);
                let nf = n as f64;
                1.0 + w * (2.0 * nf) / (1.0 + w) + w * (2.0 * nf + 1.0 + a) / (1.0 - w)
            }
            JanowskiExtremal { n, a, b } => {
                let w = pw(n);
                (1.0 + w * a) / (1.0 + w * b)
            }
            MBetaExtremal { n, beta } => {
                let w = pw(n);
                (1.0 + w * (1.0 - 2.0 * beta)) / (1.0 - w)
            }
            Fun1 => 1.0 + z / 3.0 + z * z / 18.0,
            Fun2 => 1.0 + (z / 3.0).sin(),
            TildeCubic => (1.0 + z * z * 0.75) / (1.0 + z * z * 0.25),
        }
    }

    /// `f(z)` in closed form (principal branches; `|z| < 1` keeps `1 +- w`
    /// in the right half-plane).
    pub fn eval(&self, z: Complex64) -> Complex64 {
        use FamilySpec::*;
        let pw = |n: usize| z.powu(n as u32);
        match *self {
            PhiN { n } => z * phi_exponent(n, 64).eval_unchecked(z).exp(),
            MonomialPerturb { n, a } => z + pw(n) * a,
            KoebeType { a } => z / ((1.0 - z * a) * (1.0 - z * a)),
            HalfKoebe { a } => z / (1.0 - z * a),
            ExpLine { a } => z * (z * a).exp(),
            F1Witness { n, beta } => z * (1.0 + (1.0 - 2.0 * beta) * pw(n)),
            F1ZeroExtremal { n } => {
                let w = pw(n);
                z * (1.0 + w) * (1.0 + w) / (1.0 - w)
            }
            F1HalfWitness { .. } => z,
            F2Witness { n } => {
                let w = pw(n);
                z * (1.0 + w) * (1.0 - w).powf(-1.0 / n as f64)
            }
            F3Witness { n, a } => {
                let w = pw(n);
                let e = 2.0 + (1.0 + a) / n as f64;
                z * (1.0 + w) * (1.0 + w) * (1.0 - w).powf(-e)
            }
            JanowskiExtremal { n, a, b } => {
                let w = pw(n);
                if b == 0.0 {
                    z * (w * (a / n as f64)).exp()
                } else {
                    z * (1.0 + w * b).powf((a - b) / (n as f64 * b))
                }
            }
            MBetaExtremal { n, beta } => {
                let w = pw(n);
                z * (1.0 - w).powf(-2.0 * (1.0 - beta) / n as f64)
            }
            Fun1 => z * (z / 3.0 + z * z / 36.0).exp(),
            Fun2 => z * sine_integral(z / 3.0).exp(),
            TildeCubic => z + z * z * z * 0.25,
        }
    }
}

/// Taylor coefficients of a named family member up to `order`.
pub fn family_series(spec: &FamilySpec, order: usize) -> Result<TaylorSeries> {
    use FamilySpec::*;
    spec.validate()?;
    if order < 1 {
        return Err(Error::BadOrder { n: 1, order });
    }
    let c = |x: f64| Complex64::new(x, 0.0);
    let one = TaylorSeries::constant(1.0, order);
    let w_plus = |n: usize, k: f64| one.add(&TaylorSeries::monomial(c(k), n, order));
    // z * g(z) keeping `order`: build g to order - 1 and shift
    let times_z = |g: TaylorSeries| g.truncate(order).shift(1);
    let s = match *spec {
        PhiN { n } => return build_phi_n(n, order),
        MonomialPerturb { n, a } => {
            let mut s = TaylorSeries::monomial(C_ONE, 1, order);
            if n <= order {
                s.coeffs[n] += a;
            }
            s
        }
        KoebeType { a } => {
            let mut s = TaylorSeries::zeros(order);
            for k in 1..=order {
                s.coeffs[k] = c(k as f64 * a.powi(k as i32 - 1));
            }
            s
        }
        HalfKoebe { a } => {
            let mut s = TaylorSeries::zeros(order);
            for k in 1..=order {
                s.coeffs[k] = c(a.powi(k as i32 - 1));
            }
            s
        }
        ExpLine { a } => times_z(series_exp(&TaylorSeries::monomial(c(a), 1, order))?),
        F1Witness { n, beta } => times_z(w_plus(n, 1.0 - 2.0 * beta)),
        F1ZeroExtremal { n } => {
            let p = w_plus(n, 1.0);
            times_z(p.mul(&p).mul(&w_plus(n, -1.0).recip()?))
        }
        F1HalfWitness { .. } => TaylorSeries::monomial(C_ONE, 1, order),
        F2Witness { n } => {
            let g = w_plus(n, 1.0).mul(&w_plus(n, -1.0).powc(c(-1.0 / n as f64))?);
            times_z(g)
        }
        F3Witness { n, a } => {
            let e = 2.0 + (1.0 + a) / n as f64;
            let p = w_plus(n, 1.0);
            times_z(p.mul(&p).mul(&w_plus(n, -1.0).powc(c(-e))?))
        }
        JanowskiExtremal { n, a, b } => {
            if b == 0.0 {
                times_z(series_exp(&TaylorSeries::monomial(c(a / n as f64), n, order))?)
            } else {
                times_z(w_plus(n, b).powc(c((a - b) / (n as f64 * b)))?)
            }
        }
        MBetaExtremal { n, beta } => {
            times_z(w_plus(n, -1.0).powc(c(-2.0 * (1.0 - beta) / n as f64))?)
        }
        Fun1 => {
            let mut e = TaylorSeries::zeros(order);
            e.coeffs[1] = c(1.0 / 3.0);
            if order >= 2 {
                e.coeffs[2] = c(1.0 / 36.0);
            }
            times_z(series_exp(&e)?)
        }
        Fun2 => {
            // Si(z/3) = sum_j (-1)^j z^{2j+1} / (3^{2j+1} (2j+1) (2j+1)!)
            let mut e = TaylorSeries::zeros(order);
            let mut fact = 1.0;
            let mut pow3 = 3.0;
            let mut k = 1;
            while k <= order {
                if k > 1 {
                    fact *= ((k - 1) * k) as f64;
                    pow3 *= 9.0;
                }
                let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
                e.coeffs[k] = c(sign / (pow3 * k as f64 * fact));
                k += 2;
            }
            times_z(series_exp(&e)?)
        }
        TildeCubic => {
            let mut s = TaylorSeries::monomial(C_ONE, 1, order);
            if order >= 3 {
                s.coeffs[3] = c(0.25);
            }
            s
        }
    };
    Ok(s)
}

/// Growth and distortion bounds at `|z| = r` from the extremal `phi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthBounds {
    /// `-phi(-r)`
    pub lower: f64,
    /// `phi(r)`
    pub upper: f64,
    /// `phi'(-r)`
    pub dlower: f64,
    /// `phi'(r)`
    pub dupper: f64,
}

/// `(cosh(sqrt t) - 1)/t` with its Taylor limit near the removable point.
pub(crate) fn cosh_sqrt_kernel(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        0.5 + t / 24.0 + t * t / 720.0
    } else if t > 0.0 {
        (t.sqrt().cosh() - 1.0) / t
    } else {
        ((-t).sqrt().cos() - 1.0) / t
    }
}

pub fn growth_distortion(r: f64, cfg: &NumericConfig) -> Result<GrowthBounds> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::ROutOfRange(r));
    }
    let up = integrate(cosh_sqrt_kernel, 0.0, r, cfg)?;
    // int_0^{-r} (cosh sqrt t - 1)/t dt, substituted t = -s
    let down = -integrate(|s| cosh_sqrt_kernel(-s), 0.0, r, cfg)?;
    let upper = r * up.exp();
    let phi_minus = -r * down.exp();
    let lower = -phi_minus;
    let dupper = upper * r.sqrt().cosh() / r;
    let dlower = phi_minus * r.sqrt().cos() / (-r);
    Ok(GrowthBounds {
        lower,
        upper,
        dlower,
        dupper,
    })
}
