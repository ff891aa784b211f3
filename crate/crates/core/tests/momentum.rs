use std::f64::consts::PI;
use std::time::Instant;

use modnet::linalg::{commutant, ComplexOperator};
use modnet::lorentz::{boost, rotation, Axis, FourVector};
use modnet::momentum::{
    borchers_check, direct_sum_mc, masa_check, mc_check, reflect_decompose, GroupElement, MassShellPoint, McVerdict, ModelSpec,
    OrbitModel, OrbitSpec, Representation,
};
use modnet::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn translations() -> Vec<GroupElement> {
    [
        [0.31, 0.0, 0.0, 0.0],
        [0.0, 0.53, 0.0, 0.0],
        [0.0, 0.0, 0.71, 0.0],
        [0.0, 0.0, 0.0, 0.37],
    ]
    .into_iter()
    .map(|a| GroupElement::Translation { a })
    .collect()
}

fn scalar_spec(mass: f64, rapidity_n: usize, angle_n: usize) -> ModelSpec {
    let mut elements = vec![
        GroupElement::Boost { t: 0.5 },
        GroupElement::Rotation { theta: 2.0 * PI / angle_n as f64 },
        GroupElement::TwoPi,
    ];
    elements.extend(translations());
    ModelSpec::single(mass, vec![OrbitSpec { r: 1.0, rapidity_n, angle_n }], elements)
}

#[test]
fn reflection_decomposition_on_random_shells() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let masses = [0.0, 0.5, 1.0, 2.0];
    let mut checked = 0;
    while checked < 1000 {
        let m = masses[rng.random_range(0..4)];
        let p3: [f64; 3] = std::array::from_fn(|_| rng.random_range(-3.0..3.0));
        let p = MassShellPoint::new(m, p3).unwrap();
        let Ok(d) = reflect_decompose(&p) else { continue };
        let (_, r) = rotation(Axis::X3, d.theta_p);
        let (_, b) = boost(Axis::X3, d.t_p);
        let q = p.momentum();
        let target = FourVector::new(q.0[0], q.0[1], -q.0[2], -q.0[3]);
        assert!((b * r).apply(&q).distance(&target) <= 1e-9);
        checked += 1;
    }
}

#[test]
fn scalar_model_satisfies_modularity() {
    let model = OrbitModel::build(&scalar_spec(1.0, 5, 4)).unwrap();
    let rep = model.representation().unwrap();
    let report = mc_check(&rep.generators(), &rep.reflection, 1e-9).unwrap();
    assert_eq!(report.verdict, McVerdict::Holds, "{report:?}");
    // commutant = functions of the single stabilizer orbit = scalars
    assert_eq!(report.commutant_dim, 1);
}

#[test]
fn scalar_model_at_dimension_64() {
    let start = Instant::now();
    let model = OrbitModel::build(&scalar_spec(1.0, 8, 8)).unwrap();
    assert_eq!(model.dim(), 64);
    let rep = model.representation().unwrap();
    let report = mc_check(&rep.generators(), &rep.reflection, 1e-9).unwrap();
    assert!(report.holds());
    assert!(start.elapsed().as_secs() < 30);
}

#[test]
fn two_orbits_give_two_dimensional_commutant() {
    let mut spec = scalar_spec(1.0, 3, 4);
    spec.orbits.push(OrbitSpec { r: 2.5, rapidity_n: 3, angle_n: 4 });
    let model = OrbitModel::build(&spec).unwrap();
    let rep = model.representation().unwrap();
    let report = mc_check(&rep.generators(), &rep.reflection, 1e-9).unwrap();
    assert!(report.holds());
    assert_eq!(report.commutant_dim, 2);
}

#[test]
fn bicommutant_contains_generators() {
    let model = OrbitModel::build(&scalar_spec(1.0, 3, 4)).unwrap();
    let gens = model.representation().unwrap().generators();
    let first = commutant(&gens, 1e-9).unwrap();
    let second = commutant(&first.basis, 1e-9).unwrap();
    for g in &gens {
        // g lies in span of the bicommutant basis (orthonormal for the HS product)
        let mut rest = g.matrix().clone();
        for b in &second.basis {
            let coeff: C64 = b.matrix().iter().zip(g.matrix().iter()).map(|(x, y)| x.conj() * y).sum();
            rest -= b.matrix() * coeff;
        }
        assert!(rest.norm() < 1e-8);
    }
}

#[test]
fn masa_verdicts() {
    let model = OrbitModel::build(&scalar_spec(1.0, 3, 4)).unwrap();
    assert!(masa_check(&model, 1e-9).unwrap().is_masa);

    let mut doubled = scalar_spec(1.0, 3, 4);
    doubled.multiplicities = vec![2];
    let model = OrbitModel::build(&doubled).unwrap();
    let r = masa_check(&model, 1e-9).unwrap();
    assert!(!r.is_masa);
    assert!(r.commutant_dim > r.dim);

    let single = ModelSpec::single(1.0, vec![OrbitSpec { r: 0.0, rapidity_n: 1, angle_n: 1 }], translations());
    assert!(masa_check(&OrbitModel::build(&single).unwrap(), 1e-9).unwrap().is_masa);

    let blind = ModelSpec::single(
        1.0,
        vec![OrbitSpec { r: 1.0, rapidity_n: 3, angle_n: 2 }],
        vec![GroupElement::Translation { a: [0.4, 0.0, 0.0, 0.0] }],
    );
    assert!(masa_check(&OrbitModel::build(&blind).unwrap(), 1e-9).is_err());
}

#[test]
fn direct_sums() {
    let a = OrbitModel::build(&scalar_spec(1.0, 3, 4)).unwrap().representation().unwrap();
    let b = OrbitModel::build(&scalar_spec(2.0, 3, 4)).unwrap().representation().unwrap();
    let report = direct_sum_mc(&[a.clone(), b], 1e-9).unwrap();
    assert_eq!(report.verdict, McVerdict::Holds);
    assert!(report.disjoint && report.sufficient_condition);

    let mut doubled = scalar_spec(1.0, 3, 4);
    doubled.multiplicities = vec![2];
    let d = OrbitModel::build(&doubled).unwrap().representation().unwrap();
    assert!(direct_sum_mc(&[d], 1e-9).unwrap().total.holds());

    let x = ComplexOperator::permutation(&[1, 0]);
    let internal = a.tensor_internal(&x);
    let report = direct_sum_mc(&[a.clone(), internal], 1e-9).unwrap();
    assert_eq!(report.verdict, McVerdict::Fails);
    assert!(report.total.certificate.is_some());

    // the same block twice is flagged as equivalent, the condition still holds
    let twice = direct_sum_mc(&[a.clone(), a], 1e-9).unwrap();
    assert!(!twice.disjoint);
    assert_eq!(twice.verdict, McVerdict::Holds);
}

#[test]
fn representation_blocks_do_not_mix_masses() {
    let mut spec = scalar_spec(1.0, 3, 4);
    spec.masses = vec![1.0, 2.0];
    spec.multiplicities = vec![1, 1];
    let model = OrbitModel::build(&spec).unwrap();
    let (r1, r2) = (model.block_range(0), model.block_range(1));
    for g in model.registered() {
        let u = model.unitary(g).unwrap();
        for i in r1.clone() {
            for j in r2.clone() {
                assert_eq!(u.entry(i, j), C64::new(0.0, 0.0));
                assert_eq!(u.entry(j, i), C64::new(0.0, 0.0));
            }
        }
    }
    let _: Representation = model.representation().unwrap();
}

#[test]
fn borchers_relations_hold_off_the_seam() {
    let mut spec = scalar_spec(1.0, 9, 4);
    spec.masses = vec![1.0, 2.0];
    spec.multiplicities = vec![1, 2];
    let model = OrbitModel::build(&spec).unwrap();
    let light_like = [FourVector::new(0.4, 0.0, 0.0, 0.4), FourVector::new(0.4, 0.0, 0.0, -0.4)];
    let transverse = [FourVector::new(0.0, 0.9, 0.0, 0.0), FourVector::new(0.0, 0.2, -0.6, 0.0)];
    for steps in [-3i64, -1, 1, 2, 4] {
        for a in light_like {
            let r = borchers_check(&model, steps, a);
            assert!(r.interior_samples > 0);
            assert!(r.interior_residual <= 1e-12, "steps {steps}, a {a:?}: {}", r.interior_residual);
        }
        for a in transverse {
            // transverse translations commute with λ₃, so the seam does not matter
            assert!(borchers_check(&model, steps, a).full_residual <= 1e-12);
        }
    }
    // the cyclic lattice does break the relation across the seam
    assert!(borchers_check(&model, 2, light_like[0]).full_residual > 1e-3);
}
