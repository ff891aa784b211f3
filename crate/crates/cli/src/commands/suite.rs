//! Seeded randomized checks over the core identities. Each property draws its
//! cases from its own ChaCha8 stream, so adding a property never shifts the
//! cases of another.

use modnet::lorentz::{covering_map, SL2Element};
use modnet::momentum::{reflect_decompose, MassShellPoint};
use modnet::random::random_sl2;
use modnet::spin::wigner_rotation;
use modnet::subspace::{random_standard_subspace, StandardSubspace};
use modnet::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::output::{sci, Report};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropertyRow {
    pub property: String,
    pub cases: usize,
    /// Cases where the library returned an error instead of a result.
    pub errors: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteReport {
    pub properties: Vec<PropertyRow>,
}

impl Report for SuiteReport {
    fn pass(&self) -> bool {
        self.properties.iter().all(|p| p.pass)
    }

    fn failures(&self) -> Vec<String> {
        self.properties
            .iter()
            .filter(|p| !p.pass)
            .map(|p| format!("{}: max residual {} ({} errors)", p.property, sci(p.max_residual), p.errors))
            .collect()
    }

    fn table(&self) -> Option<String> {
        let mut s = String::from("property,cases,errors,max_residual,tolerance,pass\n");
        for p in &self.properties {
            s.push_str(&format!(
                "{},{},{},{:e},{:e},{}\n",
                p.property, p.cases, p.errors, p.max_residual, p.tolerance, p.pass
            ));
        }
        Some(s)
    }

    fn pretty(&self) -> String {
        let mut s = String::new();
        for p in &self.properties {
            let verdict = if p.pass { "PASS" } else { "FAIL" };
            s.push_str(&format!(
                "{verdict}  {:<22} cases {:<6} max residual {} (tol {})\n",
                p.property,
                p.cases,
                sci(p.max_residual),
                sci(p.tolerance)
            ));
        }
        s
    }
}

fn run(property: &str, cases: usize, tolerance: f64, rng: &mut ChaCha8Rng, mut case: impl FnMut(&mut ChaCha8Rng) -> Result<f64>) -> PropertyRow {
    let mut errors = 0;
    let mut max_residual = 0.0f64;
    for _ in 0..cases {
        match case(rng) {
            Ok(r) if r.is_finite() => max_residual = max_residual.max(r),
            _ => errors += 1,
        }
    }
    PropertyRow {
        property: property.into(),
        cases,
        errors,
        max_residual,
        tolerance,
        pass: errors == 0 && max_residual <= tolerance,
    }
}

/// Round trip `H → S_H → ker(1 − S_H)`, `S² = 1`, `JΔJ = Δ⁻¹` and
/// `S_{H'} = S_H*`, the operator identities relative to `‖Δ‖_F`.
fn tomita_case(rng: &mut ChaCha8Rng, tol: f64) -> Result<f64> {
    let n = rng.random_range(1..=8);
    let h = random_standard_subspace(n, 1.5, rng)?;
    let scale = h.modular_operator().frobenius_norm().max(1.0);
    let back = StandardSubspace::from_involution(h.tomita(), tol)?;
    let r = h.residuals();
    let complement = h.complement(tol)?;
    Ok([
        back.distance(&h),
        r.s_involution / scale,
        r.j_delta_j / scale,
        complement.tomita().distance(&h.tomita().adjoint()) / scale,
    ]
    .into_iter()
    .fold(0.0, f64::max))
}

fn random_element(rng: &mut ChaCha8Rng) -> Result<SL2Element> {
    SL2Element::new(random_sl2(rng), 1e-9)
}

/// `‖Λ(AB) − Λ(A)Λ(B)‖ / (‖Λ(A)‖‖Λ(B)‖)`.
fn covering_case(rng: &mut ChaCha8Rng) -> Result<f64> {
    let (a, b) = (random_element(rng)?, random_element(rng)?);
    let (la, lb) = (covering_map(&a), covering_map(&b));
    Ok(covering_map(&(&a * &b)).distance(&(la * lb)) / (la.0.norm() * lb.0.norm()))
}

/// Mass-shell points with `m ∈ {0, 0.5, 1, 2}`; points on the excluded null
/// orbit are redrawn.
fn reflection_case(rng: &mut ChaCha8Rng) -> Result<f64> {
    loop {
        let m = [0.0, 0.5, 1.0, 2.0][rng.random_range(0..4)];
        let p = MassShellPoint::new(m, std::array::from_fn(|_| rng.random_range(-3.0..3.0)))?;
        if let Ok(d) = reflect_decompose(&p) {
            return Ok(d.residual(&p));
        }
    }
}

/// Unitarity and determinant defects of `A_p⁻¹ A A_{Λ⁻¹p}`.
fn wigner_case(rng: &mut ChaCha8Rng) -> Result<f64> {
    let m = [0.5, 1.0, 2.0][rng.random_range(0..3)];
    let p = MassShellPoint::new(m, std::array::from_fn(|_| rng.random_range(-3.0..3.0)))?;
    let r = wigner_rotation(&p, &random_element(rng)?)?;
    Ok(r.unitarity_defect().max(r.determinant_defect()))
}

pub fn suite(cases: u64, seed: u64, tol: f64) -> std::result::Result<SuiteReport, CliError> {
    if !(tol > 0.0) {
        return Err(CliError::Input(format!("--tol must be positive, got {tol}")));
    }
    let cases = cases as usize;
    let stream = |k: u64| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(k);
        rng
    };
    Ok(SuiteReport {
        properties: vec![
            run("tomita_bijection", cases, tol, &mut stream(0), |r| tomita_case(r, tol)),
            run("covering_homomorphism", cases, tol, &mut stream(1), covering_case),
            run("orbit_reflection", cases, tol, &mut stream(2), reflection_case),
            run("wigner_rotation", cases, tol, &mut stream(3), wigner_case),
        ],
    })
}
