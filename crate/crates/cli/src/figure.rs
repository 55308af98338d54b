//! Curve data behind the figures, as CSV plus an optional SVG polyline view.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt::Write as _;

use num_complex::Complex64;
use srho_core::region::{
    boundary_samples, c0, c1, distance_sq, hpl_threshold, inclusion_thresholds, st_p_gamma, Sigma,
};
use srho_core::numerics::NumericConfig;
use srho_core::Result;

/// One labelled polyline.
pub struct Curve {
    pub label: String,
    pub points: Vec<(f64, f64, f64)>,
}

pub struct Figure {
    /// CSV header, `t,x,y` for planar curves
    pub header: &'static str,
    pub curves: Vec<Curve>,
}

/// `c` values shown for the squared-distance graphs.
pub const GC_CENTERS: [f64; 4] = [0.6, 1.04, 1.042, 1.5];

pub fn region(sigma: Sigma, samples: usize) -> Figure {
    let points = boundary_samples(sigma, samples).iter().map(|p| (p.t, p.x, p.y)).collect();
    Figure {
        header: "t,x,y",
        curves: vec![Curve {
            label: format!("sigma={}", sigma.value()),
            points,
        }],
    }
}

/// `G_c(tau)` for the fixed centres, with `tau` in `x` and `G` in `y`.
pub fn gc(samples: usize) -> Result<Figure> {
    let mut curves = Vec::new();
    for c in GC_CENTERS {
        let mut points = Vec::with_capacity(samples + 1);
        for k in 0..=samples {
            let tau = FRAC_PI_2 * k as f64 / samples as f64;
            points.push((tau, tau, distance_sq(Sigma::ONE, c, tau)?));
        }
        curves.push(Curve {
            label: format!("c={c}"),
            points,
        });
    }
    Ok(Figure {
        header: "curve,t,x,y",
        curves,
    })
}

fn sampled(label: &str, samples: usize, lo: f64, hi: f64, f: impl Fn(f64) -> Complex64) -> Curve {
    let points = (0..=samples)
        .map(|k| {
            let t = lo + (hi - lo) * k as f64 / samples as f64;
            let u = f(t);
            (t, u.re, u.im)
        })
        .collect();
    Curve {
        label: label.into(),
        points,
    }
}

/// The region at `sigma = 1` with the sharp inclusion curves around it.
pub fn inclusions(samples: usize, cfg: &NumericConfig) -> Result<Figure> {
    let th = inclusion_thresholds(Sigma::ONE);
    let (k0, k1) = (c0(), c1());
    let s_hpl = hpl_threshold(Sigma::ONE)?;
    let (gamma0, _) = st_p_gamma(cfg)?;
    let k = th.k_min;
    let d = k * k - 1.0;
    let mid = 0.5 * (k0 + k1);
    let half = 0.5 * (k1 - k0);
    let e = |t: f64| Complex64::from_polar(1.0, t);
    let mut curves = region(Sigma::ONE, samples).curves;
    curves[0].label = "omega".into();
    curves.push(sampled("sqrt_kappa", samples, -PI, PI, |t| (1.0 + th.kappa_max * e(t)).sqrt()));
    curves.push(sampled("ellipse_k", samples, -PI, PI, |t| {
        Complex64::new(k * k / d + k / d * t.cos(), t.sin() / d.sqrt())
    }));
    // the pole at t = 0 is cut away
    curves.push(sampled("hpl", samples, 0.3, TAU - 0.3, |t| (1.0 - e(t)).powf(-s_hpl)));
    curves.push(sampled("limacon", samples, -PI, PI, |t| {
        let w = 1.0 + th.s_l_min * e(t);
        w * w
    }));
    curves.push(sampled("parabola", samples, -2.0, 2.0, |y| Complex64::new(y * y / (4.0 * gamma0), y)));
    curves.push(sampled("max_disc", samples, -PI, PI, |t| mid + half * e(t)));
    Ok(Figure {
        header: "curve,t,x,y",
        curves,
    })
}

impl Figure {
    pub fn csv(&self) -> String {
        let mut s = format!("{}\n", self.header);
        let labelled = self.header.starts_with("curve,");
        for c in &self.curves {
            for &(t, x, y) in &c.points {
                if labelled {
                    let _ = write!(s, "{},", c.label);
                }
                let _ = writeln!(s, "{t:.16e},{x:.16e},{y:.16e}");
            }
        }
        s
    }

    /// Minimal SVG: one polyline per curve, y flipped, fitted to a 600x600 box.
    pub fn svg(&self) -> String {
        let pts = self.curves.iter().flat_map(|c| c.points.iter());
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for &(_, x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let size = 600.0;
        let pad = 20.0;
        let scale = (size - 2.0 * pad) / (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
        let colors = ["black", "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
        let mut s = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
        );
        for (i, c) in self.curves.iter().enumerate() {
            let _ = write!(
                s,
                "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"{}\" points=\"",
                colors[i % colors.len()]
            );
            for (j, &(_, x, y)) in c.points.iter().enumerate() {
                let px = pad + (x - x0) * scale;
                let py = size - pad - (y - y0) * scale;
                let sep = if j == 0 { "" } else { " " };
                let _ = write!(s, "{sep}{px:.2},{py:.2}");
            }
            let _ = writeln!(s, "\"><title>{}</title></polyline>", c.label);
        }
        s.push_str("</svg>\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn region_csv_matches_core_boundary_format() {
        let f = region(Sigma::ONE, 8);
        let csv = f.csv();
        assert!(csv.starts_with("t,x,y\n"));
        assert_eq!(csv.lines().count(), 9);
    }

    #[test]
    fn gc_starts_at_the_far_end_of_the_boundary() {
        let f = gc(16).unwrap();
        assert_eq!(f.curves.len(), GC_CENTERS.len());
        // tau = 0 is the point cosh 1 on the real axis
        let g = f.curves[0].points[0].2;
        assert!((g - (c1() - 0.6).powi(2)).abs() < 1e-12, "{g}");
        // tau = pi/2 is cos 1
        let g = f.curves[0].points[16].2;
        assert!((g - (0.6 - c0()).powi(2)).abs() < 1e-12, "{g}");
    }

    #[test]
    fn inclusion_curves_are_labelled_and_finite() {
        let f = inclusions(64, &NumericConfig::default()).unwrap();
        let labels: Vec<&str> = f.curves.iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels, ["omega", "sqrt_kappa", "ellipse_k", "hpl", "limacon", "parabola", "max_disc"]);
        assert!(f.curves.iter().all(|c| c.points.iter().all(|p| p.1.is_finite() && p.2.is_finite())));
        let svg = f.svg();
        assert_eq!(svg.matches("<polyline").count(), 7);
    }
}
