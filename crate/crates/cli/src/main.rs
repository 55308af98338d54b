mod figure;
mod output;

use std::f64::consts::FRAC_PI_2;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use srho_core::acceptance::run_all;
use srho_core::criteria::{coeff_l2_check, coeff_sufficient, convolution_nonvanishing, CoeffList};
use srho_core::numerics::NumericConfig;
use srho_core::radii::{
    convexity_radius, f3_radius, janowski_radius, janowski_subordinate_ok, mbeta_radius, mn_beta_radius,
    ratio_class_radius, starlike_order_radius, JanowskiParams, RadiusReport, RatioClass,
};
use srho_core::region::{
    boundary_csv, boundary_samples, c0, c1, imag_extent, imag_supremum, inclusion_thresholds, inscribed_radius,
    max_argument, st_p_gamma, Sigma,
};
use srho_core::series::{family_series, growth_distortion, FamilySpec};
use srho_core::verify::{sharpness_probe, verify_region_inclusion, verify_subordination, InclusionRegion, SamplingPlan, Subject};
use thiserror::Error;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] srho_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot encode json: {0}")]
    Json(#[from] serde_json::Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Geometry, radius constants and sampling checks for the region cosh(sigma sqrt z).
#[derive(Parser)]
#[command(name = "srho", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Region constants for one sigma, plus the fixed sigma = 1 constants.
    Constants(SigmaArgs),
    /// Boundary samples as CSV (t,x,y).
    Boundary(BoundaryArgs),
    /// A radius constant with its case and residual.
    Radius(RadiusArgs),
    /// Sharp inclusion thresholds for one sigma.
    Thresholds(SigmaArgs),
    /// Inscribed disc, Janowski, sqrt-kappa or coefficient checks. Exit 1 on failure.
    Check(CheckArgs),
    /// Sampled subordination of a family, or the sharpness probe of a radius. Exit 1 on failure.
    Verify(VerifyArgs),
    /// Curve data behind the figures (CSV, optional SVG).
    Figure(FigureArgs),
    /// Full acceptance battery, one line per criterion. Exit 0 only if all pass.
    Suite(OutArgs),
}

#[derive(Args)]
struct OutArgs {
    /// Write to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SigmaArgs {
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    sigma: f64,
    /// Absolute tolerance for root finding and optimization.
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct BoundaryArgs {
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    sigma: f64,
    #[arg(long, default_value_t = 720)]
    samples: usize,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassName {
    StarlikeOrder,
    Mbeta,
    Convexity,
    Janowski,
    MnBeta,
    F1Zero,
    F1Half,
    F2,
    F3,
}

#[derive(Args)]
struct RadiusArgs {
    #[arg(long)]
    class: ClassName,
    #[arg(long)]
    zeta: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long = "A", allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: Option<f64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    /// the extremal phi_n (uses --n)
    Phi,
    /// z + a z^n
    Monomial,
    /// z / (1 - a z)^2
    Koebe,
    /// z / (1 - a z)
    HalfKoebe,
    /// z exp(a z)
    ExpLine,
    /// z exp(z/3 + z^2/36)
    Fun1,
    /// z exp(Si(z/3))
    Fun2,
    /// z + z^3/4
    TildeCubic,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    family: Option<FamilyName>,
    /// Family parameter `a`.
    #[arg(long, allow_hyphen_values = true)]
    param: Option<f64>,
    #[arg(long)]
    n: Option<usize>,
}

impl FamilyArgs {
    fn spec(&self) -> CliResult<Option<FamilySpec>> {
        let Some(name) = self.family else { return Ok(None) };
        let a = || self.param.ok_or_else(|| usage("--family needs --param"));
        let spec = match name {
            FamilyName::Phi => FamilySpec::PhiN { n: self.n.unwrap_or(1) },
            FamilyName::Monomial => FamilySpec::MonomialPerturb { n: self.n.unwrap_or(2), a: a()? },
            FamilyName::Koebe => FamilySpec::KoebeType { a: a()? },
            FamilyName::HalfKoebe => FamilySpec::HalfKoebe { a: a()? },
            FamilyName::ExpLine => FamilySpec::ExpLine { a: a()? },
            FamilyName::Fun1 => FamilySpec::Fun1,
            FamilyName::Fun2 => FamilySpec::Fun2,
            FamilyName::TildeCubic => FamilySpec::TildeCubic,
        };
        spec.validate()?;
        Ok(Some(spec))
    }
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    sigma: f64,
    /// Centre of the inscribed disc.
    #[arg(long)]
    c: Option<f64>,
    #[arg(long = "A", allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: Option<f64>,
    #[arg(long)]
    kappa: Option<f64>,
    #[command(flatten)]
    family: FamilyArgs,
    /// Boundary angles sampled.
    #[arg(long, default_value_t = 1024)]
    samples: usize,
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    sigma: f64,
    #[command(flatten)]
    family: FamilyArgs,
    /// Probe sharpness of this radius instead of a family.
    #[arg(long)]
    class: Option<ClassName>,
    #[arg(long)]
    zeta: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long = "A", allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: Option<f64>,
    #[arg(long, default_value_t = 1024)]
    samples: usize,
    /// Inside margin for the sampled excess.
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum FigureName {
    Region,
    Gc,
    Inclusions,
}

#[derive(Args)]
struct FigureArgs {
    #[arg(long)]
    name: FigureName,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    sigma: f64,
    #[arg(long, default_value_t = 720)]
    samples: usize,
    /// Also write an SVG rendering here.
    #[arg(long)]
    svg: Option<PathBuf>,
    #[command(flatten)]
    out: OutArgs,
}

fn config(tol: Option<f64>) -> CliResult<NumericConfig> {
    let mut cfg = NumericConfig::from_env().map_err(|e| usage(e.to_string()))?;
    if let Some(t) = tol {
        cfg.abs_tol = t;
        cfg.validate().map_err(|e| usage(e.to_string()))?;
    }
    Ok(cfg)
}

fn sigma(v: f64) -> CliResult<Sigma> {
    Sigma::new(v).map_err(|e| usage(e.to_string()))
}

fn need<T>(v: Option<T>, flag: &str, what: &str) -> CliResult<T> {
    v.ok_or_else(|| usage(format!("{what} needs {flag}")))
}

struct ClassParams {
    zeta: Option<f64>,
    alpha: Option<f64>,
    beta: Option<f64>,
    a: Option<f64>,
    b: Option<f64>,
    n: Option<usize>,
}

fn radius_for(class: ClassName, p: &ClassParams, cfg: &NumericConfig) -> CliResult<RadiusReport> {
    let n = || need(p.n, "--n", "this class");
    let rep = match class {
        ClassName::StarlikeOrder => starlike_order_radius(need(p.zeta, "--zeta", "starlike-order")?)?,
        ClassName::Mbeta => mbeta_radius(need(p.beta, "--beta", "mbeta")?)?,
        ClassName::Convexity => convexity_radius(p.alpha.unwrap_or(0.0), cfg)?,
        ClassName::Janowski => janowski_radius(JanowskiParams::new(
            need(p.a, "--A", "janowski")?,
            need(p.b, "--B", "janowski")?,
            n()?,
        )?)?,
        ClassName::MnBeta => mn_beta_radius(need(p.beta, "--beta", "mn-beta")?, n()?)?,
        ClassName::F1Zero => ratio_class_radius(RatioClass::F1Zero, n()?)?,
        ClassName::F1Half => ratio_class_radius(RatioClass::F1Half, n()?)?,
        ClassName::F2 => ratio_class_radius(RatioClass::F2, n()?)?,
        ClassName::F3 => f3_radius(need(p.a, "--A", "f3")?, n()?)?,
    };
    Ok(rep)
}

/// Output text and whether the verb counts as passed.
type Outcome = (String, bool);

fn constants(args: &SigmaArgs) -> CliResult<Outcome> {
    let cfg = config(args.tol)?;
    let s = sigma(args.sigma)?;
    let (m, t2) = max_argument(s, &cfg)?;
    let (l, t0) = imag_extent(s, &cfg)?;
    let (ymax, ymax_t) = imag_supremum(s, &cfg)?;
    let (gamma0, tau) = st_p_gamma(&cfg)?;
    let growth = growth_distortion(1.0, &cfg)?;
    let body = json!({
        "sigma": s.value(),
        "cos_sigma": s.value().cos(),
        "cosh_sigma": s.value().cosh(),
        "m": m,
        "t2": t2,
        "beta": m / FRAC_PI_2,
        "l": l,
        "t0": t0,
        "imag_sup": ymax,
        "imag_sup_t": ymax_t,
        "c0": c0(),
        "c1": c1(),
        "gamma0": gamma0,
        "tau": tau,
        "growth": growth,
    });
    Ok((output::json(&body)?, true))
}

fn check(args: &CheckArgs) -> CliResult<Outcome> {
    let cfg = config(args.tol)?;
    let s = sigma(args.sigma)?;
    let plan = SamplingPlan::default().with_angles(args.samples);
    plan.validate()?;
    let family = args.family.spec()?;
    let chosen = [args.c.is_some(), args.a.is_some() || args.b.is_some(), args.kappa.is_some(), family.is_some()];
    if chosen.iter().filter(|&&x| x).count() != 1 {
        return Err(usage("check takes exactly one of --c, --A/--B, --kappa, --family"));
    }
    let (body, pass) = if let Some(c) = args.c {
        let disc = inscribed_radius(s, c, &cfg)?;
        let rep = verify_region_inclusion(InclusionRegion::Disc { c, r: disc.radius }, s, &plan)?;
        let pass = rep.pass;
        (json!({"check": "inscribed_disc", "disc": disc, "sampled": rep}), pass)
    } else if let Some(kappa) = args.kappa {
        let kappa_max = inclusion_thresholds(s).kappa_max;
        let rep = verify_region_inclusion(InclusionRegion::SqrtKappa { kappa }, s, &plan)?;
        let pass = rep.pass;
        (json!({"check": "sqrt_kappa", "kappa": kappa, "kappa_max": kappa_max, "sampled": rep}), pass)
    } else if let Some(f) = family {
        let list = CoeffList::from_series(&family_series(&f, 40)?)?;
        let suff = coeff_sufficient(&list, 720)?;
        let conv = convolution_nonvanishing(&list, 360, 128)?;
        let l2 = coeff_l2_check(&list);
        let pass = conv.report.pass;
        (
            json!({"check": "coefficients", "function": f.id(), "sufficient": suff, "convolution": conv, "l2": l2}),
            pass,
        )
    } else {
        let a = need(args.a, "--A", "janowski check")?;
        let b = need(args.b, "--B", "janowski check")?;
        let closed = janowski_subordinate_ok(a, b)?;
        let rep = verify_region_inclusion(InclusionRegion::JanowskiImage { a, b }, s, &plan)?;
        let pass = closed && rep.pass;
        (json!({"check": "janowski", "A": a, "B": b, "closed_form": closed, "sampled": rep}), pass)
    };
    Ok((output::json(&body)?, pass))
}

fn verify(args: &VerifyArgs) -> CliResult<Outcome> {
    let mut plan = SamplingPlan::default().with_angles(args.samples);
    if let Some(t) = args.tol {
        plan.margin_in = t;
    }
    plan.validate()?;
    let family = args.family.spec()?;
    match (family, args.class) {
        (Some(f), None) => {
            let rep = verify_subordination(&Subject::Family(f), sigma(args.sigma)?, &plan)?;
            let pass = rep.pass;
            Ok((output::json(&json!({"function": f.id(), "report": rep}))?, pass))
        }
        (None, Some(class)) => {
            let p = ClassParams {
                zeta: args.zeta,
                alpha: args.alpha,
                beta: args.beta,
                a: args.a,
                b: args.b,
                n: args.family.n,
            };
            let rep = radius_for(class, &p, &NumericConfig::from_env().map_err(|e| usage(e.to_string()))?)?;
            let sh = sharpness_probe(&rep, &plan)?;
            let pass = sh.pass;
            Ok((output::json(&json!({"radius": rep, "sharpness": sh}))?, pass))
        }
        _ => Err(usage("verify takes exactly one of --family, --class")),
    }
}

fn figure(args: &FigureArgs) -> CliResult<Outcome> {
    if args.samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    let fig = match args.name {
        FigureName::Region => figure::region(sigma(args.sigma)?, args.samples),
        FigureName::Gc => figure::gc(args.samples)?,
        FigureName::Inclusions => figure::inclusions(args.samples, &config(None)?)?,
    };
    if let Some(p) = &args.svg {
        output::emit(&fig.svg(), Some(p))?;
    }
    Ok((fig.csv(), true))
}

fn suite() -> CliResult<Outcome> {
    let results = run_all(&config(None)?);
    let mut text = String::new();
    for r in &results {
        text.push_str(&r.line());
        text.push('\n');
    }
    let passed = results.iter().filter(|r| r.pass).count();
    text.push_str(&format!("{passed}/{} criteria pass\n", results.len()));
    Ok((text, passed == results.len()))
}

fn run(cli: Cli) -> CliResult<bool> {
    let (outcome, out): (Outcome, Option<&Path>) = match &cli.verb {
        Verb::Constants(a) => (constants(a)?, a.out.out.as_deref()),
        Verb::Boundary(a) => {
            if a.samples == 0 {
                return Err(usage("--samples must be positive"));
            }
            let csv = boundary_csv(&boundary_samples(sigma(a.sigma)?, a.samples));
            ((csv, true), a.out.out.as_deref())
        }
        Verb::Radius(a) => {
            let p = ClassParams {
                zeta: a.zeta,
                alpha: a.alpha,
                beta: a.beta,
                a: a.a,
                b: a.b,
                n: a.n,
            };
            let rep = radius_for(a.class, &p, &config(a.tol)?)?;
            ((output::json(&rep)?, true), a.out.out.as_deref())
        }
        Verb::Thresholds(a) => {
            let rec = inclusion_thresholds(sigma(a.sigma)?);
            ((output::json(&rec)?, true), a.out.out.as_deref())
        }
        Verb::Check(a) => (check(a)?, a.out.out.as_deref()),
        Verb::Verify(a) => (verify(a)?, a.out.out.as_deref()),
        Verb::Figure(a) => (figure(a)?, a.out.out.as_deref()),
        Verb::Suite(a) => (suite()?, a.out.as_deref()),
    };
    output::emit(&outcome.0, out)?;
    Ok(outcome.1)
}

fn main() -> ExitCode {
    // clap exits with 2 on its own usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("srho: {e}");
            ExitCode::from(2)
        }
    }
}
