use momentkit::jnr::{delta_map, fibonacci_directions, jnr_boundary, jnr_support, JointNumericalRange, DensityMatrix};
use momentkit::linalg::{
    hermitian_eig, inner, orthonormalize, projector, real, spectral_norm, squared_moduli, CMatrix, CVector,
    HermitianMatrix,
};
use momentkit::minimality::{project_onto_moment, FwOptions};
use momentkit::moment::{
    distance_to_unit_segment, sample_moment, support_moment, CurveFrame, ORTHOGONAL_TOL,
};
use momentkit::random::{self, rng_from_seed};
use momentkit::subspace::{Subspace, DEFAULT_GENERIC_TOL};
use proptest::prelude::*;

fn random_hermitian(n: usize, seed: u64) -> HermitianMatrix {
    let mut rng = rng_from_seed(seed);
    let g = random::complex_gaussian(n * n, &mut rng);
    let a = CMatrix::from_column_slice(n, n, g.as_slice());
    HermitianMatrix::new((&a + a.adjoint()) * real(0.5)).unwrap()
}

fn dims() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=6).prop_flat_map(|n| (Just(n), 1..n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn eig_reconstructs_and_shifts(n in 1usize..=8, seed in any::<u64>(), shift in -5.0f64..5.0) {
        let a = random_hermitian(n, seed);
        let e = hermitian_eig(&a);
        let scale = a.spectral_norm().max(1.0);
        prop_assert!((e.reconstruct() - a.as_matrix()).norm() <= 1e-10 * scale);
        prop_assert!(e.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        let shifted = HermitianMatrix::new(a.as_matrix() + CMatrix::identity(n, n) * real(shift)).unwrap();
        let f = hermitian_eig(&shifted);
        for (x, y) in e.eigenvalues.iter().zip(&f.eigenvalues) {
            prop_assert!((y - x - shift).abs() <= 1e-10 * scale.max(shift.abs()));
        }
    }

    #[test]
    fn projector_of_orthonormalized_set((n, r) in dims(), extra in 0usize..3, seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let mut vs: Vec<CVector> = (0..r).map(|_| random::complex_gaussian(n, &mut rng)).collect();
        for i in 0..extra {
            let dup = &vs[i % r] * real(2.0) - &vs[(i + 1) % r];
            vs.push(dup);
        }
        let q = orthonormalize(&vs).unwrap();
        prop_assert_eq!(q.ncols(), r);
        let p = projector(&q).unwrap();
        let pm = p.as_matrix();
        prop_assert!((pm * pm - pm).camax() <= 1e-10);
        prop_assert!((pm - pm.adjoint()).camax() <= 1e-12);
        prop_assert!((p.trace() - r as f64).abs() <= 1e-10);
    }

    #[test]
    fn spectral_norm_is_unitarily_invariant(n in 1usize..=6, seed in any::<u64>()) {
        let a = random_hermitian(n, seed);
        let u = random::unitary(n, &mut rng_from_seed(seed ^ 0x5555));
        let b = &u * a.as_matrix() * u.adjoint();
        prop_assert!((spectral_norm(&b) - a.spectral_norm()).abs() <= 1e-10 * a.spectral_norm().max(1.0));
    }

    #[test]
    fn principal_vectors_maximize_coordinates((n, r) in dims(), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let s = random::subspace(n, r, &mut rng);
        let pvs: Vec<_> = (0..n).map(|j| s.principal_vector(j).unwrap()).collect();
        for _ in 0..200 {
            let x = random::unit_vector_in(&s, &mut rng);
            for (j, pv) in pvs.iter().enumerate() {
                let xj = x[j].norm();
                prop_assert!(xj <= pv.top + 1e-12);
                if xj >= pv.top - 1e-9 {
                    let diff = squared_moduli(&x) - squared_moduli(&pv.vector);
                    prop_assert!(diff.norm() <= 1e-6);
                }
            }
        }
    }

    #[test]
    fn principal_vector_symmetry_identities((n, r) in dims(), seed in any::<u64>()) {
        let s = random::subspace(n, r, &mut rng_from_seed(seed));
        let pvs: Vec<_> = s.principal_vectors(DEFAULT_GENERIC_TOL).into_iter().map(Option::unwrap).collect();
        for j in 0..n {
            for k in 0..n {
                let (vj, vk) = (&pvs[j], &pvs[k]);
                let lhs = vj.vector[k] / real(vk.top);
                let rhs = vk.vector[j].conj() / real(vj.top);
                prop_assert!((lhs - rhs).norm() <= 1e-10);
                let vanishes = vj.vector[k].norm() <= 1e-10;
                let orthogonal = inner(&vj.vector, &vk.vector).norm() <= 1e-10;
                prop_assert_eq!(vanishes, orthogonal);
            }
        }
    }

    #[test]
    fn centroid_coordinates_bounded((n, r) in dims(), seed in any::<u64>()) {
        let s = random::subspace(n, r, &mut rng_from_seed(seed));
        let c = s.centroid().0;
        prop_assert!(c.iter().all(|&x| x <= 1.0 / r as f64 + 1e-12));
        prop_assert!((c.sum() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn samples_respect_support((n, r) in dims(), seed in any::<u64>()) {
        let s = random::subspace(n, r, &mut rng_from_seed(seed));
        let pts = sample_moment(&s, 50, seed);
        let mut rng = rng_from_seed(seed.wrapping_add(1));
        for _ in 0..200 {
            let c = random::real_direction(n, &mut rng);
            let h = support_moment(&s, &c).unwrap().value;
            for p in &pts {
                prop_assert!(c.dot(p.coords()) <= h + 1e-9);
            }
        }
    }

    #[test]
    fn domination_brings_curve_closer_to_segment((n, r) in (3usize..=5).prop_flat_map(|n| (Just(n), 2..n)), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let s = random::subspace(n, r, &mut rng);
        let frame = CurveFrame::new(&s, 0, 1).unwrap();
        for _ in 0..100 {
            let x = random::unit_vector_in(&s, &mut rng);
            let d = frame.dominating_t(&s, &x).unwrap();
            let v = frame.point(d.t).unwrap().vector;
            let dx = distance_to_unit_segment([x[0].norm_sqr(), x[1].norm_sqr()]);
            let dv = distance_to_unit_segment([v[0].norm_sqr(), v[1].norm_sqr()]);
            prop_assert!(dv <= dx + 1e-9);
        }
    }

    #[test]
    fn ellipse_identity_on_grid((n, r) in (3usize..=6).prop_flat_map(|n| (Just(n), 2..n)), seed in any::<u64>()) {
        let s = random::subspace(n, r, &mut rng_from_seed(seed));
        let frame = CurveFrame::new(&s, 1, 2).unwrap();
        let e = frame.ellipse();
        for i in 0..64 {
            let t = std::f64::consts::FRAC_PI_2 * i as f64 / 63.0;
            let v = frame.point(t).unwrap().vector;
            let [x, y] = e.at(t);
            prop_assert!((v[1].norm() - x).abs() <= 1e-10);
            prop_assert!((v[2].norm() - y).abs() <= 1e-10);
        }
        prop_assert_eq!(e.is_segment(), frame.vj.vector[2].norm() <= ORTHOGONAL_TOL);
    }

    #[test]
    fn origin_belongs_to_jnr((n, r) in dims(), seed in any::<u64>()) {
        let s = random::subspace(n, r, &mut rng_from_seed(seed));
        let sup = jnr_support(&s, &nalgebra::DVector::from_element(n, -1.0)).unwrap();
        prop_assert!(sup.value.abs() <= 1e-12);
        let total: CMatrix = JointNumericalRange::of_subspace(&s).matrices().iter().map(|m| m.as_matrix().clone()).sum();
        let e = hermitian_eig(&HermitianMatrix::new(total.clone()).unwrap());
        prop_assert!((e.max() - 1.0).abs() <= 1e-10);
        for b in s.basis_vectors() {
            prop_assert!((&total * &b - &b).norm() <= 1e-10);
        }
    }

    #[test]
    fn jnr_support_is_unitarily_invariant((n, r) in dims(), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let s = random::subspace(n, r, &mut rng);
        let u = random::unitary(n, &mut rng);
        let us = Subspace::from_orthonormal(&u * s.basis()).unwrap();
        let standard = JointNumericalRange::of_subspace(&s);
        let rotated = JointNumericalRange::of_subspace_in_basis(&us, &u).unwrap();
        for c in fibonacci_directions(n, 20) {
            let (a, _) = standard.support(&c).unwrap();
            let (b, _) = rotated.support(&c).unwrap();
            prop_assert!((a - b).abs() <= 1e-10);
            let direct = jnr_support(&s, &c).unwrap().value;
            prop_assert!((a - direct).abs() <= 1e-10);
        }
    }

    #[test]
    fn delta_matches_trace_pairings((n, r) in dims(), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let s = random::subspace(n, r, &mut rng);
        let rho = random::density(n, &mut rng);
        let x = delta_map(&s, &rho).unwrap().x;
        let y = JointNumericalRange::of_subspace(&s).point(&rho).unwrap();
        prop_assert!((&x - y).amax() <= 1e-12);
        prop_assert!(x.iter().all(|&v| v >= -1e-12));
        prop_assert!(x.sum() <= 1.0 + 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn unit_sum_boundary_points_are_moment_points((n, r) in dims(), seed in any::<u64>()) {
        let s = random::subspace(n, r, &mut rng_from_seed(seed));
        let opts = FwOptions::default();
        let dirs = fibonacci_directions(n, 40);
        for p in jnr_boundary(&s, &dirs).unwrap() {
            if (p.sum() - 1.0).abs() <= 1e-9 {
                prop_assert!(project_onto_moment(&s, &p.x, &opts).unwrap().distance <= 1e-6);
            }
        }
    }

    #[test]
    fn mixed_states_on_subspace_are_moment_points((n, r) in dims(), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let s = random::subspace(n, r, &mut rng);
        let inner_state = random::density(r, &mut rng);
        let q = s.basis();
        let rho = DensityMatrix::new(q * inner_state.as_matrix() * q.adjoint()).unwrap();
        let x = delta_map(&s, &rho).unwrap().x;
        prop_assert!((x.sum() - 1.0).abs() <= 1e-10);
        let proj = project_onto_moment(&s, &x, &FwOptions::default()).unwrap();
        prop_assert!(proj.distance <= 1e-6);
        prop_assert!(proj.lower_bound <= proj.distance);
    }
}
