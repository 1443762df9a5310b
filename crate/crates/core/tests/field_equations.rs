mod common;

use std::f64::consts::PI;
use std::sync::Arc;

use proca_ga::analytic_lab::{random_smooth_config, SmoothConfig};
use proca_ga::aps::{self, rotor};
use proca_ga::em_fields::{
    duality_rotate_potentials, duality_rotate_sources, fields_from_tensors, gauge_transform,
    lorentz_transform_potentials, lorentz_transform_sources, Evaluator, HarmonicGauge, LinearGauge,
    Potentials, Sources,
};
use proca_ga::field::{zero4, DerivMode, Event};
use proca_ga::sta;
use proca_ga::{Multivector, Vec3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{events, linear};

const C: f64 = 1.3;

fn eval() -> Evaluator {
    Evaluator::new(C, DerivMode::Analytic).unwrap()
}

fn config(seed: u64) -> SmoothConfig {
    random_smooth_config(seed)
}

#[test]
fn vacuum_residuals_vanish() {
    let ev = eval();
    let x = Event::new(0.1, 0.2, 0.3, 0.4);
    let p = Potentials::vacuum();
    let s = Sources::vacuum();
    assert_eq!(
        ev.mpd_residual_aps(&p, &s, &x).unwrap(),
        Multivector::zero(aps::CL3)
    );
    assert_eq!(
        ev.mpd_residual_sta(&p, &s, &x).unwrap(),
        Multivector::zero(sta::STA)
    );
    let r = ev.mpd_residual_components(&p, &s, &x).unwrap();
    assert_eq!(r.norms(), [0.0; 4]);
    assert_eq!(
        ev.fields_from_potentials(&p, &x).unwrap(),
        (Vec3::zeros(), Vec3::zeros())
    );
}

#[test]
fn static_potentials_give_unit_fields() {
    let ev = eval();
    let x = Event::new(0.0, 0.7, -0.2, 0.1);
    let p = Potentials::new(linear(0, 1, -1.0), zero4(), 0.0).unwrap();
    assert_eq!(
        ev.fields_from_potentials(&p, &x).unwrap(),
        (Vec3::x(), Vec3::zeros())
    );
    let t = ev.field_tensors(&p, &x).unwrap();
    assert_eq!(fields_from_tensors(&t).unwrap(), (Vec3::x(), Vec3::zeros()));
    let q = Potentials::new(zero4(), linear(0, 1, -1.0), 0.0).unwrap();
    assert_eq!(
        ev.fields_from_potentials(&q, &x).unwrap(),
        (Vec3::zeros(), Vec3::x())
    );
}

#[test]
fn potentials_without_partials_need_grid_mode() {
    let f = proca_ga::field::SampledField::new(|x: &Event| [x.0[1], 0.0, 0.0, 0.0]);
    let p = Potentials::new(Arc::new(f), zero4(), 0.0).unwrap();
    let x = Event::new(0.0, 0.1, 0.1, 0.1);
    assert!(eval().fields_from_potentials(&p, &x).is_err());
    let grid = eval().with_mode(DerivMode::Grid(proca_ga::field::Stencil::uniform(
        1e-3,
        proca_ga::field::StencilOrder::Second,
    )));
    let (e, _) = grid.fields_from_potentials(&p, &x).unwrap();
    assert!((e - Vec3::new(-1.0, 0.0, 0.0)).amax() < 1e-10);
}

#[test]
fn tensor_and_potential_paths_agree() {
    let ev = eval();
    for seed in 0..20 {
        let cfg = config(seed);
        for x in events(seed + 1000, 5) {
            let direct = ev.fields_from_potentials(&cfg.potentials, &x).unwrap();
            let t = ev.field_tensors(&cfg.potentials, &x).unwrap();
            let via = fields_from_tensors(&t).unwrap();
            assert!((direct.0 - via.0).amax() <= 1e-10);
            assert!((direct.1 - via.1).amax() <= 1e-10);
        }
    }
}

#[test]
fn aps_residual_matches_component_equations() {
    let ev = eval();
    let mut worst: f64 = 0.0;
    for seed in 0..100 {
        let cfg = config(seed);
        for x in events(seed + 5000, 3) {
            let aps_parts = ev
                .mpd_residual_aps_parts(&cfg.potentials, &cfg.sources, &x)
                .unwrap();
            let comps = ev
                .mpd_residual_components(&cfg.potentials, &cfg.sources, &x)
                .unwrap();
            worst = worst.max(aps_parts.max_diff(&comps.as_aps_parts()));
        }
    }
    assert!(worst <= 1e-10, "worst {worst:e}");
}

#[test]
fn bridged_sta_residual_matches_aps() {
    let ev = eval();
    let mut worst: f64 = 0.0;
    for seed in 0..100 {
        let cfg = config(seed);
        for x in events(seed + 5000, 3) {
            let r_aps = ev.mpd_residual_aps(&cfg.potentials, &cfg.sources, &x).unwrap();
            let r_sta = ev.mpd_residual_sta(&cfg.potentials, &cfg.sources, &x).unwrap();
            let (v, t) = sta::grade_13_decompose(&r_sta, 1e-12).unwrap();
            assert!((v + t).approx_eq(&r_sta, 0.0));
            let bridged = ev
                .mpd_residual_sta_bridged(&cfg.potentials, &cfg.sources, &x)
                .unwrap();
            worst = worst.max(bridged.distance(&r_aps));
        }
    }
    assert!(worst <= 1e-10, "worst {worst:e}");
}

#[test]
fn bridge_without_gamma0_has_the_wrong_magnetic_sign() {
    // γ0 R is the bridged residual; R γ0 instead flips the sign of the
    // magnetic current relative to the Cl(3) equation.
    let ev = eval();
    let cfg = config(3);
    let x = Event::new(0.2, -0.3, 0.5, 0.1);
    let r_sta = ev.mpd_residual_sta(&cfg.potentials, &cfg.sources, &x).unwrap();
    let right = sta::to_cl3(&(r_sta * Multivector::basis_vector(sta::STA, 0)), 0.0).unwrap();
    let r_aps = ev.mpd_residual_aps(&cfg.potentials, &cfg.sources, &x).unwrap();
    assert!(right.distance(&r_aps) > 1e-3);
}

#[test]
fn maxwell_proca_limit_has_no_imaginary_residual() {
    let ev = eval();
    for seed in 0..10 {
        let cfg = config(seed);
        let p = Potentials::new(cfg.potentials.a.clone(), zero4(), cfg.mass).unwrap();
        let s = cfg.sources.electric_only();
        for x in events(seed, 4) {
            let parts = ev.mpd_residual_aps_parts(&p, &s, &x).unwrap();
            assert!(parts.is.abs() < 1e-13 && parts.iv.amax() < 1e-13, "{parts:?}");
        }
    }
}

#[test]
fn residual_is_lorentz_covariant() {
    let ev = eval();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let unit_ball = |r: &mut ChaCha8Rng, max: f64| loop {
        let v = Vec3::from_fn(|_, _| r.gen_range(-1.0..1.0));
        if v.norm() <= 1.0 {
            break v * max;
        }
    };
    let mut worst: f64 = 0.0;
    for rot in 0..50 {
        let eta = unit_ball(&mut rng, 1.5);
        let theta = unit_ball(&mut rng, 1.5);
        let r = rotor(&eta, &theta).unwrap();
        assert!(aps::unimodular_defect(r.value()) <= 1e-10);
        let l = r.lorentz_matrix();
        for cfg_idx in 0..10 {
            let cfg = config(200 + cfg_idx);
            let p2 = lorentz_transform_potentials(&cfg.potentials, &r, C);
            let s2 = lorentz_transform_sources(&cfg.sources, &r, C);
            let x = events(rot * 10 + cfg_idx, 1)[0];
            let xv = nalgebra::Vector4::new(C * x.0[0], x.0[1], x.0[2], x.0[3]);
            let xp = l * xv;
            let x2 = Event::new(xp[0] / C, xp[1], xp[2], xp[3]);
            let original = ev.mpd_residual_aps(&cfg.potentials, &cfg.sources, &x).unwrap();
            let moved = ev.mpd_residual_aps(&p2, &s2, &x2).unwrap();
            worst = worst.max(moved.distance(&r.conjugate_lower(&original)));
        }
    }
    assert!(worst <= 1e-9, "worst {worst:e}");
}

#[test]
fn transformed_field_is_lambda_f_lambda_inverse() {
    let ev = eval();
    let cfg = config(8);
    let r = rotor(&Vec3::new(0.4, -0.2, 0.9), &Vec3::new(-0.5, 0.3, 0.2)).unwrap();
    let p2 = lorentz_transform_potentials(&cfg.potentials, &r, C);
    let x = Event::new(0.3, -0.1, 0.6, 0.2);
    let l = r.lorentz_matrix();
    let xp = l * nalgebra::Vector4::new(C * x.0[0], x.0[1], x.0[2], x.0[3]);
    let x2 = Event::new(xp[0] / C, xp[1], xp[2], xp[3]);
    let (e, b) = ev.fields_from_potentials(&cfg.potentials, &x).unwrap();
    let (e2, b2) = ev.fields_from_potentials(&p2, &x2).unwrap();
    let expected = r.apply_field(&aps::Biparavector::field(e, b));
    assert!((expected.real - e2).amax() < 1e-11);
    assert!((expected.imag - b2).amax() < 1e-11);
}

#[test]
fn massless_residual_is_duality_equivariant() {
    let ev = eval();
    let mut worst: f64 = 0.0;
    for k in 0..20 {
        let theta = -PI + 2.0 * PI * (k as f64 + 0.5) / 20.0;
        let cfg = config(300 + k);
        let p = cfg.potentials.with_mass(0.0).unwrap();
        let p2 = duality_rotate_potentials(&p, theta);
        let s2 = duality_rotate_sources(&cfg.sources, theta);
        for x in events(k, 3) {
            let r = ev.mpd_residual_aps(&p, &cfg.sources, &x).unwrap();
            let r2 = ev.mpd_residual_aps(&p2, &s2, &x).unwrap();
            worst = worst.max(r2.distance(&(r * aps::duality_phase(theta))));
        }
    }
    assert!(worst <= 1e-10, "worst {worst:e}");
}

#[test]
fn massive_residual_breaks_duality() {
    let ev = eval();
    let cfg = config(17);
    let theta = 0.7;
    let p2 = duality_rotate_potentials(&cfg.potentials, theta);
    let s2 = duality_rotate_sources(&cfg.sources, theta);
    let x = Event::new(0.1, 0.4, -0.3, 0.8);
    let r = ev.mpd_residual_aps(&cfg.potentials, &cfg.sources, &x).unwrap();
    let r2 = ev.mpd_residual_aps(&p2, &s2, &x).unwrap();
    assert!(r2.distance(&(r * aps::duality_phase(theta))) > 1e-4);
}

#[test]
fn rotated_potentials_rotate_the_field() {
    let ev = eval();
    let cfg = config(21);
    let theta = 1.1;
    let x = Event::new(-0.2, 0.5, 0.1, -0.7);
    let (e, b) = ev.fields_from_potentials(&cfg.potentials, &x).unwrap();
    let (e2, b2) = ev
        .fields_from_potentials(&duality_rotate_potentials(&cfg.potentials, theta), &x)
        .unwrap();
    let expected = aps::duality_rotate_field(&aps::Biparavector::field(e, b), theta);
    assert!((expected.real - e2).amax() < 1e-12);
    assert!((expected.imag - b2).amax() < 1e-12);
}

fn harmonic(seed: u64) -> HarmonicGauge {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    HarmonicGauge {
        amplitude: rng.gen_range(0.2..1.5),
        k: Vec3::from_fn(|_, _| rng.gen_range(-1.5..1.5)),
        phase: rng.gen_range(0.0..6.0),
        c: C,
    }
}

#[test]
fn gauge_shift_is_mass_times_gradient() {
    let ev = eval();
    let mut worst: f64 = 0.0;
    for k in 0..10 {
        let cfg = config(400 + k);
        let chi = harmonic(k);
        let p2 = gauge_transform(&cfg.potentials, Arc::new(chi), C);
        let m2 = cfg.mass * cfg.mass;
        for x in events(k + 40, 3) {
            let r = ev.mpd_residual_aps(&cfg.potentials, &cfg.sources, &x).unwrap();
            let r2 = ev.mpd_residual_aps(&p2, &cfg.sources, &x).unwrap();
            let g = proca_ga::em_fields::GaugeFunction::gradient_jets(&chi, &x);
            let dunder_chi =
                aps::Paravector::new(g[0].value / C, Vec3::new(g[1].value, g[2].value, g[3].value));
            let expected = dunder_chi.to_multivector().scale(m2);
            worst = worst.max((r2 - r).distance(&expected));
            let (e, b) = ev.fields_from_potentials(&cfg.potentials, &x).unwrap();
            let (e2, b2) = ev.fields_from_potentials(&p2, &x).unwrap();
            assert!((e - e2).amax() < 1e-12 && (b - b2).amax() < 1e-12);
        }
    }
    assert!(worst <= 1e-10, "worst {worst:e}");
}

#[test]
fn massless_residual_is_gauge_invariant() {
    let ev = eval();
    for k in 0..10 {
        let cfg = config(500 + k);
        let p = cfg.potentials.with_mass(0.0).unwrap();
        let p2 = gauge_transform(&p, Arc::new(harmonic(k + 100)), C);
        for x in events(k, 3) {
            let r = ev.mpd_residual_aps(&p, &cfg.sources, &x).unwrap();
            let r2 = ev.mpd_residual_aps(&p2, &cfg.sources, &x).unwrap();
            assert!(r.distance(&r2) < 1e-12);
        }
    }
}

#[test]
fn light_cone_gauge_function_shift() {
    // χ = x - ct: ∂̲χ = c⁻¹∂ₜχ + ∇⃗χ = -1 + e1.
    let ev = eval();
    let cfg = config(5);
    let chi = LinearGauge {
        gradient: [-C, 1.0, 0.0, 0.0],
        offset: 0.0,
    };
    let p2 = gauge_transform(&cfg.potentials, Arc::new(chi), C);
    let x = Event::new(0.4, 0.1, 0.2, 0.3);
    let r = ev.mpd_residual_aps(&cfg.potentials, &cfg.sources, &x).unwrap();
    let r2 = ev.mpd_residual_aps(&p2, &cfg.sources, &x).unwrap();
    let m2 = cfg.mass * cfg.mass;
    let expected = (aps::scalar(-1.0) + aps::vector(&Vec3::x())).scale(m2);
    assert!((r2 - r.clone()).distance(&expected) < 1e-12);
    let zero = LinearGauge {
        gradient: [0.0; 4],
        offset: 0.0,
    };
    let p3 = gauge_transform(&cfg.potentials, Arc::new(zero), C);
    assert_eq!(ev.mpd_residual_aps(&p3, &cfg.sources, &x).unwrap(), r);
}

#[test]
fn wave_projection_reproduces_continuity() {
    let ev = eval();
    let mut worst: f64 = 0.0;
    for seed in 0..30 {
        let cfg = config(600 + seed);
        let m2 = cfg.mass * cfg.mass;
        for x in events(seed, 3) {
            let (rs, is) = ev
                .wave_scalar_projection(&cfg.potentials, &cfg.sources, &x)
                .unwrap();
            let (ce, cm) = ev.charge_conservation_residual(&cfg.sources, &x).unwrap();
            let (ga, _) = ev.lorenz_gauge_residual(&cfg.potentials, &x).unwrap();
            let k = 4.0 * PI / C;
            worst = worst
                .max((rs - (k * ce - m2 * ga)).abs())
                .max((is - k * cm).abs());
        }
        let massless = cfg.potentials.with_mass(0.0).unwrap();
        let x = Event::new(0.1, 0.2, 0.3, 0.4);
        let (rs, _) = ev.wave_scalar_projection(&massless, &cfg.sources, &x).unwrap();
        let (ce, _) = ev.charge_conservation_residual(&cfg.sources, &x).unwrap();
        assert!((rs - 4.0 * PI / C * ce).abs() < 1e-10);
    }
    assert!(worst <= 1e-10, "worst {worst:e}");
}

#[test]
fn conserved_plane_wave_charge_and_halved_current() {
    use proca_ga::analytic_lab::PlaneWave;
    let (k, omega) = (1.3, 0.9);
    let wave = |current: f64| PlaneWave {
        amplitude: [1.0, current * omega / k, 0.0, 0.0],
        k: Vec3::new(k, 0.0, 0.0),
        omega,
        phase: 0.0,
    };
    let ev = eval();
    let conserved = Sources::new(Arc::new(wave(1.0)), zero4());
    let broken = Sources::new(Arc::new(wave(0.5)), zero4());
    let mut broken_max: f64 = 0.0;
    for x in events(7, 10) {
        let (ce, cm) = ev.charge_conservation_residual(&conserved, &x).unwrap();
        assert!(ce.abs() < 1e-14 && cm == 0.0);
        broken_max = broken_max.max(ev.charge_conservation_residual(&broken, &x).unwrap().0.abs());
    }
    assert!(broken_max > 0.1);
    let static_sources = Sources::new(common::linear(0, 1, 2.0), zero4());
    let (ce, _) = ev
        .charge_conservation_residual(&static_sources, &events(1, 1)[0])
        .unwrap();
    assert_eq!(ce, 0.0);
}

#[test]
fn gauge_residual_examples() {
    let ev = eval();
    let x = Event::new(0.3, 0.2, 0.1, 0.5);
    let yuk = proca_ga::analytic_lab::yukawa_config(1.0, 1.0).unwrap();
    assert_eq!(ev.lorenz_gauge_residual(&yuk, &x).unwrap(), (0.0, 0.0));
    // A₀ = ct and A_x = x give c⁻¹∂ₜA₀ + ∂ₓA_x = 2.
    let a: proca_ga::field::Field4 = Arc::new(proca_ga::field::LinearCombination::new(vec![
        (1.0, linear(0, 0, C)),
        (1.0, linear(1, 1, 1.0)),
    ]));
    let p = Potentials::new(a, zero4(), 0.5).unwrap();
    let (ga, gz) = ev.lorenz_gauge_residual(&p, &x).unwrap();
    assert!((ga - 2.0).abs() < 1e-14 && gz == 0.0);
    let err = ev.wave_residuals(&p, &Sources::vacuum(), &x).unwrap_err();
    assert!(matches!(err, proca_ga::Error::GaugeCondition { .. }));
}
