use modnet::split::{
    compose_masses, growth_report, trace_below_one, trace_below_one_exact, ContinuumSpec, ExactSum, GrowthVerdict,
    MassMeasureSurrogate, MassPoint, MeasureModel, ModularSpectrum, SpectrumGenerator,
};
use modnet::Error;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exact `Σ x` for `x ∈ [2⁻⁶⁰, 1]` as an integer multiple of `2⁻¹¹²`, rounded once by the
/// integer-to-float conversion.
fn fixed_point_sum(xs: &[f64]) -> f64 {
    const SHIFT: i32 = 112;
    let total: i128 = xs
        .iter()
        .map(|&x| {
            assert!(x == 0.0 || (x >= 2f64.powi(-60) && x <= 1.0));
            // exact: x has at most 53 significant bits above 2⁻¹¹²
            (x * 2f64.powi(SHIFT)) as i128
        })
        .sum();
    total as f64 / 2f64.powi(SHIFT)
}

fn random_spectrum(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    (0..len)
        .map(|_| {
            let x: f64 = rng.random_range(-20.0..20.0);
            x.exp2()
        })
        .collect()
}

#[test]
fn trace_is_exactly_additive_over_unions() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..300 {
        let (la, lb) = (rng.random_range(0..40), rng.random_range(0..40));
        let a = random_spectrum(&mut rng, la);
        let b = random_spectrum(&mut rng, lb);
        let sa = ModularSpectrum::user(a.clone()).unwrap();
        let sb = ModularSpectrum::user(b.clone()).unwrap();
        let union = sa.union(&sb);
        let mut merged = trace_below_one_exact(&sa);
        merged.merge(&trace_below_one_exact(&sb));
        let below: Vec<f64> = a.iter().chain(&b).copied().filter(|&x| x <= 1.0).collect();
        let oracle = fixed_point_sum(&below);
        assert_eq!(trace_below_one(&union), oracle);
        assert_eq!(merged.value(), oracle);
        // independent of order
        let mut shuffled = union.eigenvalues.clone();
        shuffled.shuffle(&mut rng);
        assert_eq!(trace_below_one(&ModularSpectrum::user(shuffled).unwrap()), oracle);
    }
}

#[test]
fn exact_sum_survives_cancellation() {
    let s: ExactSum = [1e16, 1.0, -1e16, 1e-16].into_iter().collect();
    assert_eq!(s.value(), 1.0 + 1e-16);
    let t: ExactSum = [0.1; 10].into_iter().collect();
    assert_eq!(t.value(), 1.0);
}

fn geometric(q: f64, levels: u32) -> SpectrumGenerator {
    SpectrumGenerator::Geometric { q, levels }
}

#[test]
fn continuum_trace_grows_linearly() {
    let model = MeasureModel::Continuum {
        continuum: ContinuumSpec {
            mass_range: [1.0, 2.0],
            weight: 1.0,
            generator: geometric(0.5, 3),
        },
    };
    let report = growth_report(&model, 32, 1).unwrap();
    assert_eq!(report.rows.len(), 32);
    assert_eq!(report.per_point_lower_bound, 0.875);
    assert!(report.linear_bound_holds);
    for row in &report.rows {
        assert!(row.trace >= row.n as f64 * report.per_point_lower_bound);
    }
    assert_eq!(report.verdict, GrowthVerdict::ContinuumLike);
    assert!(report.to_csv().starts_with("n,trace\n1,0.875\n"));
}

#[test]
fn atomic_trace_is_constant() {
    let atoms = MassMeasureSurrogate {
        points: vec![
            MassPoint { mass: 1.0, weight: 0.5, generator: geometric(0.5, 2), multiplicity: 1 },
            MassPoint { mass: 3.0, weight: 0.5, generator: geometric(0.25, 2), multiplicity: 1 },
        ],
    };
    let report = growth_report(&MeasureModel::Atoms(atoms), 32, 1).unwrap();
    let first = report.rows[0].trace;
    assert_eq!(first, 0.75 + 0.3125);
    assert!(report.rows.iter().all(|r| r.trace == first));
    assert_eq!(report.verdict, GrowthVerdict::AtomicLike);
}

#[test]
fn composition_rules() {
    let point = |mass, multiplicity| MassPoint { mass, weight: 1.0, generator: geometric(0.5, 1), multiplicity };
    let dup = MassMeasureSurrogate { points: vec![point(1.0, 1), point(1.0, 1)] };
    assert!(matches!(compose_masses(&dup, 4), Err(Error::DuplicateMass(_))));
    let heavy = MassMeasureSurrogate { points: vec![point(1.0, 3), point(2.0, 1)] };
    let comp = compose_masses(&heavy, 2).unwrap();
    assert_eq!(comp.total_trace, 2.0);
    assert_eq!(comp.excessive_multiplicity, vec![1.0]);
    assert_eq!(comp.spectrum.len(), 8);
    assert_eq!(comp.pairing_defect, 0.0);
}

#[test]
fn json_shapes() {
    let atoms: MeasureModel = serde_json::from_str(
        r#"[{"mass": 1, "weight": 1, "generator": {"kind": "explicit", "eigenvalues": [0.5, 2]}}]"#,
    )
    .unwrap();
    assert!(matches!(atoms, MeasureModel::Atoms(_)));
    let cont: MeasureModel = serde_json::from_str(
        r#"{"continuum": {"mass_range": [1, 2], "weight": 1, "generator": {"kind": "geometric", "q": 0.5, "levels": 2}}}"#,
    )
    .unwrap();
    assert!(matches!(cont, MeasureModel::Continuum { .. }));
    assert!(serde_json::from_str::<ModularSpectrum>(r#"{"eigenvalues": [1], "extra": 2}"#).is_err());
}

proptest! {
    #[test]
    fn trace_is_monotone_under_union(a in prop::collection::vec(1e-6f64..10.0, 0..20), b in prop::collection::vec(1e-6f64..10.0, 0..20)) {
        let sa = ModularSpectrum::user(a).unwrap();
        let sb = ModularSpectrum::user(b).unwrap();
        let u = trace_below_one(&sa.union(&sb));
        prop_assert!(u >= trace_below_one(&sa));
        prop_assert!(u >= trace_below_one(&sb));
        let bound = sa.eigenvalues.iter().chain(&sb.eigenvalues).filter(|&&x| x <= 1.0).count() as f64;
        prop_assert!(u <= bound);
    }
}
