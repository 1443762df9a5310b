use num_complex::Complex64;
use proca_ga::aps::{
    self, duality_rotate_currents, duality_rotate_field, parity, parts, parts_via_involutions, rotor,
    Biparavector, LorentzRotor, Paravector, ParavectorMetric, Parts,
};
use proca_ga::{Multivector, Signature, Vec3};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_mv(rng: &mut ChaCha8Rng) -> Multivector {
    let c: Vec<f64> = (0..8).map(|_| rng.gen_range(-3.0..3.0)).collect();
    Multivector::from_coeffs(Signature::CL3, &c).unwrap()
}

fn vec3() -> impl Strategy<Value = Vec3> {
    (-1.5..1.5f64, -1.5..1.5f64, -1.5..1.5f64).prop_map(|(x, y, z)| Vec3::new(x, y, z))
}

fn bounded(max: f64) -> impl Strategy<Value = Vec3> {
    vec3().prop_map(move |v| if v.norm() > max { v * (max / v.norm()) } else { v })
}

fn paravector() -> impl Strategy<Value = Paravector> {
    (-2.0..2.0f64, vec3()).prop_map(|(s, v)| Paravector::new(s, v))
}

#[test]
fn involution_parts_match_grade_read_off_on_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let m = random_mv(&mut rng);
        let direct = parts(&m).unwrap();
        let via = parts_via_involutions(&m).unwrap();
        worst = worst.max(direct.max_diff(&via));
    }
    assert!(worst <= 1e-12, "worst {worst:e}");
}

#[test]
fn printed_involution_combinations_flip_vector_signs() {
    // The combinations ¼[X‡ + (X†)‡ - X - X†] and ¼[X† - X + X‡ - (X†)‡],
    // often quoted for the rv and iv parts, return -a⃗ and -ib⃗.
    let p = Parts {
        rs: 0.5,
        rv: Vec3::new(1.0, -2.0, 3.0),
        iv: Vec3::new(-0.25, 0.75, 2.0),
        is: -1.5,
    };
    let x = p.to_multivector();
    let dag = x.reverse();
    let ddag = x.clifford_conjugate();
    let both = dag.clifford_conjugate();
    let printed_rv = (ddag.clone() + both.clone() - x.clone() - dag.clone()).scale(0.25);
    let printed_iv = (dag - x.clone() + ddag - both).scale(0.25);
    let rv = aps::vector(&p.rv);
    let iv = aps::imag_vector(&p.iv);
    assert!(printed_rv.approx_eq(&-rv.clone(), 1e-15));
    assert!(printed_iv.approx_eq(&-iv.clone(), 1e-15));
    assert!(!printed_rv.approx_eq(&rv, 1e-3));
    let fixed = parts_via_involutions(&x).unwrap();
    assert!(fixed.max_diff(&p) < 1e-15);
}

/// Closed form exp(W) = cosh z + (sinh z / z) W for a complex vector W with
/// W² = z², assembled in Cl(3) from its complex-scalar and complex-vector parts.
fn rotor_oracle(boost: &Vec3, rotation: &Vec3) -> Multivector {
    let w: [Complex64; 3] = std::array::from_fn(|k| Complex64::new(0.5 * boost[k], -0.5 * rotation[k]));
    let z2 = w.iter().map(|c| c * c).sum::<Complex64>();
    let z = z2.sqrt();
    let (ch, sh_over_z) = if z.norm() < 1e-12 {
        (Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0))
    } else {
        (z.cosh(), z.sinh() / z)
    };
    let coeffs: [Complex64; 3] = std::array::from_fn(|k| sh_over_z * w[k]);
    aps::scalar(ch.re)
        + aps::imag_scalar(ch.im)
        + aps::vector(&Vec3::from_fn(|k, _| coeffs[k].re))
        + aps::imag_vector(&Vec3::from_fn(|k, _| coeffs[k].im))
}

fn minkowski(p: &Paravector) -> f64 {
    p.scalar * p.scalar - p.vec.norm_squared()
}

proptest! {
    #[test]
    fn rotor_matches_closed_form(eta in bounded(1.5), theta in bounded(1.5)) {
        let r = rotor(&eta, &theta).unwrap();
        prop_assert!(r.value().approx_eq(&rotor_oracle(&eta, &theta), 1e-12));
        prop_assert!(aps::unimodular_defect(r.value()) <= 1e-10);
    }

    #[test]
    fn lorentz_maps_preserve_the_interval(eta in bounded(1.5), theta in bounded(1.5), p in paravector()) {
        let r = rotor(&eta, &theta).unwrap();
        let up = r.apply_upper(&p);
        let low = r.apply_lower(&p);
        let scale = 1.0 + p.scalar.abs().max(p.vec.amax()).powi(2) * 30.0;
        prop_assert!((minkowski(&up) - minkowski(&p)).abs() < 1e-12 * scale);
        prop_assert!((minkowski(&low) - minkowski(&p)).abs() < 1e-12 * scale);
        let l = r.lorentz_matrix();
        let v = l * nalgebra::Vector4::from(p.components());
        prop_assert!(Paravector::from_components([v[0], v[1], v[2], v[3]]).max_diff(&up) < 1e-12 * scale);
    }

    #[test]
    fn upper_and_lower_pair_to_an_invariant(eta in bounded(1.5), theta in bounded(1.5), p in paravector(), q in paravector()) {
        // ⟨p̄ q̲⟩₀ is invariant when p transforms up and q's bar conjugate transforms down.
        let r = rotor(&eta, &theta).unwrap();
        let before = (p.to_multivector() * q.conjugate().to_multivector()).scalar_part();
        let after = (r.apply_upper(&p).to_multivector() * r.apply_lower(&q.conjugate()).to_multivector()).scalar_part();
        prop_assert!((before - after).abs() < 1e-10 * (1.0 + before.abs()) * 50.0);
    }

    #[test]
    fn field_transform_preserves_invariants(eta in bounded(1.5), theta in bounded(1.5), e in vec3(), b in vec3()) {
        let r = rotor(&eta, &theta).unwrap();
        let f = Biparavector::field(e, b);
        let g = r.apply_field(&f);
        let sq = |f: &Biparavector| f.to_multivector() * f.to_multivector();
        let scale = 1.0 + 100.0 * (e.norm_squared() + b.norm_squared());
        prop_assert!(sq(&f).approx_eq(&sq(&g), 1e-11 * scale));
    }

    #[test]
    fn inverse_composes_to_identity(eta in bounded(1.5), theta in bounded(1.5)) {
        let r = rotor(&eta, &theta).unwrap();
        let prod = r.then(&r.inverse());
        prop_assert!(prod.value().approx_eq(&aps::scalar(1.0), 1e-12));
        let l = r.lorentz_matrix() * r.inverse().lorentz_matrix();
        prop_assert!((l - nalgebra::Matrix4::identity()).amax() < 1e-10);
    }

    #[test]
    fn duality_rotation_is_right_multiplication(e in vec3(), b in vec3(), theta in -3.2..3.2f64) {
        let f = Biparavector::field(e, b);
        let rotated = duality_rotate_field(&f, theta);
        let (s, c) = theta.sin_cos();
        prop_assert!((rotated.real - (e * c + b * s)).amax() < 1e-14);
        prop_assert!((rotated.imag - (b * c - e * s)).amax() < 1e-14);
    }

    #[test]
    fn rotated_currents_follow_the_phase(je in paravector(), jm in paravector(), theta in -3.2..3.2f64) {
        let (je2, jm2) = duality_rotate_currents(&je, &jm, theta);
        let s = je.to_multivector() + aps::i3() * jm.to_multivector();
        let rotated = je2.to_multivector() + aps::i3() * jm2.to_multivector();
        prop_assert!(rotated.approx_eq(&(s * aps::duality_phase(theta)), 1e-13));
    }

    #[test]
    fn quadratic_form_flips_with_epsilon(p in paravector()) {
        let plus = ParavectorMetric::new(1).unwrap().quadratic_form(&p);
        let minus = ParavectorMetric::new(-1).unwrap().quadratic_form(&p);
        prop_assert!((plus - minkowski(&p)).abs() < 1e-12);
        prop_assert_eq!(plus, -minus);
    }

    #[test]
    fn parity_is_the_grade_involution(c in prop::collection::vec(-2.0..2.0f64, 8)) {
        let m = Multivector::from_coeffs(Signature::CL3, &c).unwrap();
        prop_assert_eq!(parity(&m).unwrap(), m.grade_involution());
    }
}

#[test]
fn pure_boost_is_hermitian_and_rotation_unitary() {
    let boost = rotor(&Vec3::new(0.3, -0.7, 1.1), &Vec3::zeros()).unwrap();
    assert!(boost.hermiticity_defect() < 1e-14);
    let rot = rotor(&Vec3::zeros(), &Vec3::new(0.3, -0.7, 1.1)).unwrap();
    assert!(rot.unitarity_defect() < 1e-14);
    assert!(LorentzRotor::new(aps::vector(&Vec3::x())).is_err());
}

#[test]
fn boost_matrix_is_the_textbook_one() {
    let eta: f64 = 0.9;
    let l = rotor(&Vec3::new(0.0, 0.0, eta), &Vec3::zeros())
        .unwrap()
        .lorentz_matrix();
    assert!((l[(0, 0)] - eta.cosh()).abs() < 1e-14);
    assert!((l[(0, 3)] - eta.sinh()).abs() < 1e-14);
    assert!((l[(3, 0)] - eta.sinh()).abs() < 1e-14);
    assert!((l[(1, 1)] - 1.0).abs() < 1e-14);
}
