use num_complex::Complex64;
use proptest::prelude::*;
use srho_core::criteria::{coeff_sufficient, fekete_szego_bound, CoeffList};
use srho_core::region::{
    boundary_point, c0, c1, eval_rho, inscribed_radius_closed_form, membership_excess, Sigma,
};
use srho_core::series::FamilySpec;
use srho_core::verify::{verify_subordination, SamplingPlan, Subject};
use std::f64::consts::{FRAC_PI_2, PI};

fn sigma() -> impl Strategy<Value = f64> {
    0.05..FRAC_PI_2
}

fn disc_point() -> impl Strategy<Value = Complex64> {
    (0.0..0.98f64, -PI..PI).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rho_commutes_with_conjugation(s in sigma(), z in disc_point()) {
        let s = Sigma::new(s).unwrap();
        let d = eval_rho(s, z.conj()) - eval_rho(s, z).conj();
        prop_assert!(d.norm() < 1e-12, "{d}");
    }

    #[test]
    fn excess_of_image_recovers_modulus(s in sigma(), z in disc_point()) {
        let s = Sigma::new(s).unwrap();
        let e = membership_excess(s, eval_rho(s, z));
        prop_assert!((e - (z.norm().sqrt() - 1.0)).abs() < 1e-9, "excess {e} at |z| = {}", z.norm());
    }

    #[test]
    fn boundary_is_symmetric(s in sigma(), t in 0.0..PI) {
        let s = Sigma::new(s).unwrap();
        let (p, q) = (boundary_point(s, t).unwrap(), boundary_point(s, -t).unwrap());
        prop_assert!((p.x - q.x).abs() < 1e-14 && (p.y + q.y).abs() < 1e-14);
    }

    #[test]
    fn inscribed_disc_stays_inside(frac in 0.001..0.999f64, theta in -PI..PI) {
        let c = c0() + frac * (c1() - c0());
        let r = inscribed_radius_closed_form(Sigma::ONE, c).unwrap();
        let u = Complex64::new(c, 0.0) + Complex64::from_polar(r, theta);
        prop_assert!(membership_excess(Sigma::ONE, u) < 1e-9);
    }

    #[test]
    fn shrinking_coefficients_keeps_sufficiency(a in prop::collection::vec(-0.2..0.2f64, 1..5), lambda in 0.0..1.0f64) {
        let full = coeff_sufficient(&CoeffList::from_real(&a).unwrap(), 128).unwrap();
        let small: Vec<f64> = a.iter().map(|x| x * lambda).collect();
        let shrunk = coeff_sufficient(&CoeffList::from_real(&small).unwrap(), 128).unwrap();
        prop_assert!(shrunk.worst_sum <= full.worst_sum + 1e-15);
        prop_assert!(!full.pass || shrunk.pass);
    }

    #[test]
    fn fekete_szego_bound_is_flat_near_seven_twelfths(rad in 0.0..1.0f64, t in -PI..PI) {
        let mu = Complex64::new(7.0 / 12.0, 0.0) + Complex64::from_polar(rad, t);
        prop_assert_eq!(fekete_szego_bound(mu), 0.25);
    }

    #[test]
    fn sigma_sign_is_irrelevant(s in sigma()) {
        prop_assert_eq!(Sigma::new(-s).unwrap(), Sigma::new(s).unwrap());
        prop_assert_eq!(Sigma::new(s).unwrap().value(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coefficient_sufficiency_implies_subordination(n in 2usize..5, a in -0.3..0.3f64) {
        let mut coeffs = vec![0.0; n - 1];
        coeffs[n - 2] = a;
        let suff = coeff_sufficient(&CoeffList::from_real(&coeffs).unwrap(), 256).unwrap();
        if suff.pass {
            let spec = FamilySpec::MonomialPerturb { n, a };
            let sub = verify_subordination(&Subject::Family(spec), Sigma::ONE, &SamplingPlan::default().with_angles(256)).unwrap();
            prop_assert!(sub.pass, "n = {n}, a = {a}, worst {}", sub.worst_margin);
        }
    }
}

#[test]
fn sigma_outside_range_is_rejected() {
    for bad in [0.0, 1.6, -2.0, f64::NAN, f64::INFINITY] {
        assert!(Sigma::new(bad).is_err(), "{bad}");
    }
    assert_eq!(Sigma::new(FRAC_PI_2).unwrap().value(), FRAC_PI_2);
}
