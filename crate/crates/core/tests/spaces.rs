//! Seeded checks of the module, orthonormalization and sequence-space
//! layers: scalar-product axioms, Gram-Schmidt structure, best
//! approximation, and the coefficient isometry.

use bihilbert::verify::{random_basis, random_bicomplex, random_ket, random_spec, trial_rng};
use bihilbert::{
    gram_schmidt, Bicomplex64, BicomplexSequence64, Component, Conjugation, Error, Ket64,
    OrthonormalSystem64, RieszFischerMap64, ScalarProductSpec64,
};
use num_traits::One;

fn reldist(a: Bicomplex64, b: Bicomplex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

fn ket_dist(a: &Ket64, b: &Ket64) -> f64 {
    a.coeffs()
        .iter()
        .zip(b.coeffs())
        .map(|(&x, &y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

#[test]
fn scalar_product_axioms_hold_under_random_weights() {
    for i in 0..50 {
        let mut rng = trial_rng(601, "spaces", "axioms", i);
        let dim = 2 + (i as usize % 7);
        let spec = random_spec(&mut rng, dim);
        let psi = random_ket(&mut rng, dim);
        let phi = random_ket(&mut rng, dim);
        let chi = random_ket(&mut rng, dim);
        let s = random_bicomplex(&mut rng);
        let sp = |a: &Ket64, b: &Ket64| spec.scalar_product(a, b).unwrap();

        assert!(reldist(sp(&psi, &(&phi + &chi)), sp(&psi, &phi) + sp(&psi, &chi)) <= 1e-10);
        assert!(reldist(sp(&psi, &phi.scale(s)), s * sp(&psi, &phi)) <= 1e-10);
        assert!(reldist(sp(&psi, &phi), sp(&phi, &psi).conj(Conjugation::Dag3)) <= 1e-10);
        assert!(
            reldist(
                sp(&psi.scale(s), &phi),
                s.conj(Conjugation::Dag3) * sp(&psi, &phi)
            ) <= 1e-10
        );
        let self_product = sp(&psi, &psi);
        assert!(self_product.is_hyperbolic());
        assert!(self_product.hyperbolic_part().in_d_plus());
    }
}

#[test]
fn split_parts_recombine_and_are_idempotent() {
    for i in 0..50 {
        let mut rng = trial_rng(602, "spaces", "split", i);
        let psi = random_ket(&mut rng, 5);
        let p1 = psi.split(Component::One);
        let p2 = psi.split(Component::Two);
        assert!(ket_dist(&(&p1 + &p2), &psi) <= 1e-13);
        assert!(ket_dist(&p1.split(Component::One), &p1) <= 1e-13);
        assert!(ket_dist(&p2.split(Component::Two), &p2) <= 1e-13);
    }
}

#[test]
fn gram_schmidt_agrees_with_direct_bicomplex_route() {
    for i in 0..30 {
        let mut rng = trial_rng(603, "spaces", "gs", i);
        let dim = 2 + (i as usize % 15);
        let spec = random_spec(&mut rng, dim);
        let kets: Vec<Ket64> = (0..dim).map(|_| random_ket(&mut rng, dim)).collect();
        let sys = gram_schmidt(spec.clone(), &kets).unwrap();
        let reference = bihilbert::verify::reference_gram_schmidt(&spec, &kets).unwrap();
        for (a, b) in sys.kets().iter().zip(&reference) {
            assert!(ket_dist(a, b) <= 1e-10, "trial {i}: routes diverge");
        }
        // orthonormality
        for (p, a) in sys.kets().iter().enumerate() {
            for (q, b) in sys.kets().iter().enumerate() {
                let prod = spec.scalar_product(a, b).unwrap();
                let expected = if p == q {
                    Bicomplex64::one()
                } else {
                    Bicomplex64::from_real(0.0)
                };
                assert!((prod - expected).norm() <= 1e-10);
            }
        }
        // prefix spans are preserved: each input is reproduced by the
        // outputs up to its own index
        for (n, input) in kets.iter().enumerate() {
            let (_, residual) = sys.best_approximation(input, n + 1).unwrap();
            let scale = spec.induced_norm(input).unwrap().max(1.0);
            assert!(residual / scale <= 1e-10, "trial {i}: span lost at {n}");
        }
    }
}

#[test]
fn best_approximation_beats_every_free_coefficient_choice() {
    for i in 0..25 {
        let mut rng = trial_rng(604, "spaces", "best", i);
        let dim = 8;
        let spec = random_spec(&mut rng, dim);
        let sys = random_basis(&mut rng, &spec);
        let psi = random_ket(&mut rng, dim);
        let mut previous = f64::INFINITY;
        for n in 0..=dim {
            let (proj, residual) = sys.best_approximation(&psi, n).unwrap();
            for _ in 0..20 {
                let mut free = Ket64::zero(dim);
                for m in sys.kets().iter().take(n) {
                    free = &free + &m.scale(random_bicomplex(&mut rng));
                }
                let free_residual = spec.induced_norm(&(&psi - &free)).unwrap();
                assert!(free_residual >= residual - 1e-10);
            }
            assert!(residual <= previous + 1e-12, "residuals must shrink");
            previous = residual;
            // the leftover is orthogonal to every member used
            let rest = &psi - &proj;
            for m in sys.kets().iter().take(n) {
                assert!(spec.scalar_product(m, &rest).unwrap().norm() <= 1e-9);
            }
        }
        // equality case: the Fourier coefficients themselves
        let coeffs = sys.fourier_coefficients(&psi).unwrap();
        let rebuilt = sys.expand(&coeffs).unwrap();
        assert!(ket_dist(&rebuilt, &psi) <= 1e-9);
    }
}

#[test]
fn riesz_fischer_map_is_a_linear_isometry_with_inverse() {
    for i in 0..25 {
        let mut rng = trial_rng(605, "spaces", "rf", i);
        let dim = 2 + (i as usize % 15);
        let spec = random_spec(&mut rng, dim);
        let map = RieszFischerMap64::new(random_basis(&mut rng, &spec)).unwrap();
        let psi = random_ket(&mut rng, dim);
        let phi = random_ket(&mut rng, dim);
        let alpha = random_bicomplex(&mut rng);
        let beta = random_bicomplex(&mut rng);

        // isometry and the injectivity bound it implies
        let image = map.forward(&psi).unwrap();
        let norm = spec.induced_norm(&psi).unwrap();
        assert!((image.l2_norm() - norm).abs() <= 1e-10 * norm.max(1.0));
        assert!(norm <= image.l2_norm() * (1.0 + 1e-10) + 1e-10);

        // bicomplex linearity
        let combined = map.forward(&(&psi.scale(alpha) + &phi.scale(beta))).unwrap();
        let phi_image = map.forward(&phi).unwrap();
        for ((&a, &b), &c) in image
            .values()
            .iter()
            .zip(phi_image.values())
            .zip(combined.values())
        {
            assert!(reldist(alpha * a + beta * b, c) <= 1e-10);
        }

        // inverse in both directions
        assert!(ket_dist(&map.inverse(&image).unwrap(), &psi) <= 1e-9);
        let s = BicomplexSequence64::new((0..dim).map(|_| random_bicomplex(&mut rng)).collect())
            .unwrap();
        let back = map.forward(&map.inverse(&s).unwrap()).unwrap();
        for (&a, &b) in back.values().iter().zip(s.values()) {
            assert!(reldist(a, b) <= 1e-10);
        }

        // component lemma
        for k in Component::BOTH {
            let lhs = map.component(&psi, k).unwrap();
            let rhs = map.forward(&psi.split(k)).unwrap();
            for (&a, &b) in lhs.values().iter().zip(rhs.values()) {
                assert!(reldist(a, b) <= 1e-10);
            }
        }
    }
}

#[test]
fn sequence_norm_equality_through_the_split() {
    for i in 0..100 {
        let mut rng = trial_rng(606, "spaces", "l2", i);
        let len = 1 + (i as usize % 64);
        let s = BicomplexSequence64::new((0..len).map(|_| random_bicomplex(&mut rng)).collect())
            .unwrap();
        let h1 = s.split(Component::One);
        let h2 = s.split(Component::Two);
        let component_sum: f64 = h1.iter().chain(&h2).map(|z| z.norm_sqr()).sum();
        let via_split = (component_sum / 2.0).sqrt();
        assert!((s.l2_norm() - via_split).abs() <= 1e-12 * s.l2_norm().max(1.0));
        // recombining the split restores the sequence
        for (l, &w) in s.values().iter().enumerate() {
            let rebuilt = Bicomplex64::e1() * Bicomplex64::from(h1[l])
                + Bicomplex64::e2() * Bicomplex64::from(h2[l]);
            assert!(reldist(rebuilt, w) <= 1e-14);
        }
    }
}

#[test]
fn continuity_bound_on_perturbed_kets() {
    for i in 0..50 {
        let mut rng = trial_rng(607, "spaces", "continuity", i);
        let dim = 6;
        let spec = random_spec(&mut rng, dim);
        let psi = random_ket(&mut rng, dim);
        let phi = random_ket(&mut rng, dim);
        let eps = 10.0_f64.powi(-((i % 9) as i32));
        let d_psi = random_ket(&mut rng, dim).scale(Bicomplex64::from_real(eps));
        let d_phi = random_ket(&mut rng, dim).scale(Bicomplex64::from_real(eps));
        let sp = |a: &Ket64, b: &Ket64| spec.scalar_product(a, b).unwrap();
        let norm = |a: &Ket64| spec.induced_norm(a).unwrap();
        let drift = (sp(&(&psi + &d_psi), &(&phi + &d_phi)) - sp(&psi, &phi)).norm();
        let bound = 2.0_f64.sqrt()
            * (norm(&d_psi) * norm(&d_phi)
                + norm(&d_psi) * norm(&phi)
                + norm(&psi) * norm(&d_phi));
        assert!(drift <= bound + 1e-10 * bound.max(1.0));
    }
}

#[test]
fn schwarz_inequality_on_random_kets() {
    for i in 0..100 {
        let mut rng = trial_rng(608, "spaces", "schwarz", i);
        let dim = 2 + (i as usize % 10);
        let spec = random_spec(&mut rng, dim);
        let psi = random_ket(&mut rng, dim);
        let phi = random_ket(&mut rng, dim);
        let product = spec.scalar_product(&psi, &phi).unwrap().norm();
        let bound = 2.0_f64.sqrt()
            * spec.induced_norm(&psi).unwrap()
            * spec.induced_norm(&phi).unwrap();
        assert!(product <= bound + 1e-10 * bound.max(1.0));
    }
}

#[test]
fn orthonormal_system_rejects_almost_orthonormal_families() {
    let spec = ScalarProductSpec64::standard(2);
    let slightly_off = Ket64::new(vec![
        Bicomplex64::from_real(1.0 + 1e-6),
        Bicomplex64::from_real(0.0),
    ])
    .unwrap();
    assert!(matches!(
        OrthonormalSystem64::new(spec, vec![slightly_off]),
        Err(Error::NotOrthonormal { .. })
    ));
}
