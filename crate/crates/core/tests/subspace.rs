use modnet::linalg::{nullspace, polar_antilinear, CMatrix, CVector};
use modnet::random::{gaussian_matrix, gaussian_vector, haar_unitary, random_modular_pair};
use modnet::subspace::{random_standard_subspace, tomita_from_pair, StandardSubspace};
use modnet::{AntilinearOperator, ComplexOperator, C64};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_basis(n: usize, rng: &mut ChaCha8Rng) -> Vec<CVector> {
    (0..n).map(|_| gaussian_vector(n, rng)).collect()
}

/// `S` straight from its definition `S(h + ik) = h − ik`: with the basis as
/// columns of `B`, `S v = B conj(B⁻¹ v)`, i.e. the antilinear matrix `B conj(B⁻¹)`.
fn tomita_oracle(basis: &[CVector]) -> CMatrix {
    let b = CMatrix::from_columns(basis);
    let inv = b.clone().try_inverse().unwrap();
    &b * inv.map(|z| z.conj())
}

/// `Δ = S*S` with the antilinear adjoint `(A∘conj)* = Aᵀ∘conj`.
fn delta_oracle(s: &CMatrix) -> CMatrix {
    s.transpose() * s.map(|z| z.conj())
}

/// `scale` multiplies the operator tolerances; Gaussian bases need it set to
/// the condition number of `Δ`.
fn check_round_trip(h: &StandardSubspace, scale: f64) {
    let back = StandardSubspace::from_involution(h.tomita(), 1e-9).unwrap();
    assert!(back.distance(h) <= 1e-9);
    let r = h.residuals();
    assert!(r.s_involution <= 1e-9 * scale && r.j_delta_j <= 1e-9 * scale, "{r:?}");
    let complement = h.complement(1e-9).unwrap();
    assert!(complement.tomita().distance(&h.tomita().adjoint()) <= 1e-9 * scale);
    assert!(complement.space().distance(&h.space().symplectic_complement(1e-9)) <= 1e-9);
}

#[test]
fn tomita_bijection_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let n = rng.random_range(1..=8);
        let h = random_standard_subspace(n, 1.5, &mut rng).unwrap();
        check_round_trip(&h, h.modular_operator().frobenius_norm());
    }
}

#[test]
fn bijection_on_gaussian_bases() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.random_range(1..=8);
        let h = StandardSubspace::new(&random_basis(n, &mut rng), 1e-9).unwrap();
        let spectrum = h.modular_spectrum();
        let kappa = spectrum[spectrum.len() - 1] / spectrum[0];
        check_round_trip(&h, kappa);
    }
}

#[test]
fn tomita_operator_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let n = rng.random_range(1..=6);
        let basis = random_basis(n, &mut rng);
        let h = StandardSubspace::new(&basis, 1e-9).unwrap();
        let s = tomita_oracle(&basis);
        let scale = s.norm().max(1.0);
        assert!((h.tomita().matrix() - &s).norm() <= 1e-9 * scale);
        let d = delta_oracle(&s);
        assert!((h.modular_operator().matrix() - &d).norm() <= 1e-9 * d.norm().max(1.0));
    }
}

#[test]
fn worked_two_dimensional_example() {
    let basis = [
        CVector::from_column_slice(&[C64::new(1.0, 0.0), C64::new(0.0, 0.0)]),
        CVector::from_column_slice(&[C64::new(0.0, 1.0), C64::new(1.0, 0.0)]),
    ];
    let d = delta_oracle(&tomita_oracle(&basis));
    // oracle: Δ = [[1, −2i], [2i, 5]], eigenvalues 3 ± 2√2
    assert!((d[(0, 0)] - C64::new(1.0, 0.0)).norm() < 1e-14);
    assert!((d[(0, 1)] - C64::new(0.0, -2.0)).norm() < 1e-14);
    assert!((d[(1, 1)] - C64::new(5.0, 0.0)).norm() < 1e-14);
    let h = StandardSubspace::new(&basis, 1e-9).unwrap();
    let spectrum = h.modular_spectrum();
    let expected = [3.0 - 2.0 * 2f64.sqrt(), 3.0 + 2.0 * 2f64.sqrt()];
    for (got, want) in spectrum.iter().zip(expected) {
        assert!((got - want).abs() <= 1e-10);
    }
    assert!((h.modular_operator().determinant() - C64::new(1.0, 0.0)).norm() <= 1e-10);
}

#[test]
fn polar_decomposition_recovers_modular_pair() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let n = 2 * rng.random_range(1..=4);
        let (j, delta) = random_modular_pair(n, 1.5, &mut rng);
        let s = tomita_from_pair(&j, &delta, 1e-9).unwrap();
        let (j2, d2) = polar_antilinear(&s, 1e-9).unwrap();
        assert!(j2.distance(&j) <= 1e-8);
        assert!(d2.distance(&delta) <= 1e-8 * delta.frobenius_norm());
        let h = StandardSubspace::from_involution(&s, 1e-9).unwrap();
        assert!(h.modular_conjugation().distance(&j) <= 1e-8);
    }
}

#[test]
fn nullspace_dimension_matches_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let rows = rng.random_range(1..=8);
        let cols = rng.random_range(1..=8);
        let rank = rng.random_range(0..=rows.min(cols));
        let m = gaussian_matrix(rows, rank, &mut rng) * gaussian_matrix(rank, cols, &mut rng);
        let report = nullspace(&m, 1e-10);
        assert_eq!(report.dim(), cols - rank);
        assert_eq!(report.rank(), rank);
        for v in &report.basis {
            assert!((&m * v).norm() <= 1e-9 * m.norm().max(1.0));
        }
    }
}

#[test]
fn dependent_or_non_separating_bases_are_rejected() {
    let e1 = CVector::from_column_slice(&[C64::new(1.0, 0.0), C64::new(0.0, 0.0)]);
    let ie1 = e1.map(|z| z * C64::new(0.0, 1.0));
    assert!(StandardSubspace::new(&[e1.clone(), ie1], 1e-9).is_err());
    assert!(StandardSubspace::new(&[e1.clone(), e1.scale(2.0)], 1e-9).is_err());
    assert!(StandardSubspace::new(&[e1], 1e-9).is_err());
}

fn seeded_subspace(seed: u64, n: usize) -> StandardSubspace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    StandardSubspace::new(&random_basis(n, &mut rng), 1e-9).unwrap()
}

#[test]
fn ill_conditioned_basis_keeps_modular_identities() {
    // smallest singular value 7e-3, Δ spectrum spans 8e-6 .. 1.3e5
    let h = seeded_subspace(1688587925689907109, 6);
    let spectrum = h.modular_spectrum();
    let (lo, hi) = (spectrum[0], spectrum[5]);
    assert!(lo < 1e-5 && hi > 1e5);
    let r = h.residuals();
    assert!(r.fixes_basis <= 1e-10 && r.s_involution <= 1e-9 && r.j_involution <= 1e-10);
    assert!(r.polar <= 1e-9 * hi.sqrt());
    // Δ⁻¹ itself is only known to about ε·cond(Δ) relative accuracy
    assert!(r.j_delta_j <= hi * (hi / lo) * f64::EPSILON);
    assert!(h.modular_conjugation().is_involution(1e-9));
    assert!(h.modular_conjugation().is_antiunitary(1e-9));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn double_complement_is_identity(seed in any::<u64>(), n in 1usize..=6) {
        let h = seeded_subspace(seed, n);
        let hcc = h.complement(1e-9).unwrap().complement(1e-9).unwrap();
        prop_assert!(hcc.distance(&h) <= 1e-8);
    }

    #[test]
    fn complement_has_inverse_modular_operator(seed in any::<u64>(), n in 1usize..=6) {
        let h = seeded_subspace(seed, n);
        let c = h.complement(1e-9).unwrap();
        let product = h.modular_operator() * c.modular_operator();
        prop_assert!(product.distance(&ComplexOperator::identity(n)) <= 1e-7 * h.modular_operator().frobenius_norm());
        prop_assert!(c.modular_conjugation().distance(h.modular_conjugation()) <= 1e-8);
    }

    #[test]
    fn transport_conjugates_modular_data(seed in any::<u64>(), n in 1usize..=6) {
        let h = seeded_subspace(seed, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let u = haar_unitary(n, &mut rng);
        let k = h.transport(&u, 1e-9).unwrap();
        let check = h.transport_check(&u, &k);
        prop_assert!(check.delta <= 1e-8 * h.modular_operator().frobenius_norm());
        prop_assert!(check.conjugation <= 1e-8);
    }

    #[test]
    fn modular_flow_preserves_the_subspace(seed in any::<u64>(), n in 1usize..=6, t in -2.0f64..2.0) {
        let h = seeded_subspace(seed, n);
        let moved = h.space().image(&h.modular_flow(t), 1e-9);
        prop_assert!(moved.distance(h.space()) <= 1e-8);
    }

    #[test]
    fn conjugation_is_an_antiunitary_involution(seed in any::<u64>(), n in 1usize..=6) {
        let h = seeded_subspace(seed, n);
        let j: &AntilinearOperator = h.modular_conjugation();
        prop_assert!(j.is_involution(1e-9));
        prop_assert!(j.is_antiunitary(1e-9));
    }
}
