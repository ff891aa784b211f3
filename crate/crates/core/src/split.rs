//! Spectral diagnostics for split inclusions.
//!
//! A standard subspace `K ⊆ H` of `C^n` has real dimension `n`, exactly like
//! `H`, so any inclusion of standard subspaces in the same finite-dimensional
//! space is an equality. Proper split inclusions therefore cannot be built
//! here. This module works on spectral data instead: spectra of modular
//! operators `Δ_F` either produced by models or supplied by the user, together
//! with finite surrogates `F = ⊕_m F_m` of a mass measure.
//!
//! The per-mass spectrum generators are plumbing: geometric sequences
//! `{q^k, q^{-k}}` or explicit lists. No physical claim is attached to their
//! values; only additivity of the trace and its growth under refinement of the
//! mass support are meaningful.
//!
//! ```
//! use modnet::split::{trace_below_one, ModularSpectrum};
//!
//! let s = ModularSpectrum::user(vec![4.0, 0.25]).unwrap();
//! assert_eq!(trace_below_one(&s), 0.25);
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{eigh, ComplexOperator};
use crate::subspace::RealSubspace;

/// Where a spectrum came from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ModelGenerated,
    #[default]
    UserSupplied,
}

/// Eigenvalues of a positive operator `Δ_F`, with multiplicity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModularSpectrum {
    pub eigenvalues: Vec<f64>,
    #[serde(default)]
    pub provenance: Provenance,
}

impl ModularSpectrum {
    pub fn new(eigenvalues: Vec<f64>, provenance: Provenance) -> Result<Self> {
        if let Some(&bad) = eigenvalues.iter().find(|&&l| !(l > 0.0) || !l.is_finite()) {
            return Err(Error::NonPositiveEigenvalue(bad));
        }
        Ok(Self { eigenvalues, provenance })
    }

    pub fn user(eigenvalues: Vec<f64>) -> Result<Self> {
        Self::new(eigenvalues, Provenance::UserSupplied)
    }

    /// Eigenvalues of a Hermitian positive operator.
    pub fn from_operator(delta: &ComplexOperator, tol: f64) -> Result<Self> {
        Self::new(eigh(delta, tol)?.values, Provenance::ModelGenerated)
    }

    /// Re-checks positivity, e.g. after deserialization.
    pub fn validate(&self) -> Result<()> {
        Self::new(self.eigenvalues.clone(), self.provenance).map(|_| ())
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Multiset union. The provenance is model-generated only if both are.
    pub fn union(&self, other: &ModularSpectrum) -> ModularSpectrum {
        let provenance = if self.provenance == other.provenance {
            self.provenance
        } else {
            Provenance::UserSupplied
        };
        let mut eigenvalues = self.eigenvalues.clone();
        eigenvalues.extend_from_slice(&other.eigenvalues);
        ModularSpectrum { eigenvalues, provenance }
    }

    /// Largest relative mismatch between the sorted spectrum and the sorted
    /// reciprocals. Zero when the multiset is closed under `λ ↦ 1/λ`.
    pub fn pairing_defect(&self) -> f64 {
        let mut a = self.eigenvalues.clone();
        let mut b: Vec<f64> = a.iter().map(|l| 1.0 / l).collect();
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        a.iter()
            .zip(&b)
            .map(|(x, y)| (x - y).abs() / x.abs().max(y.abs()))
            .fold(0.0, f64::max)
    }
}

/// Error-free running sum (non-overlapping partials), rounded once on read.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExactSum {
    partials: Vec<f64>,
}

impl ExactSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, mut x: f64) {
        let mut i = 0;
        for j in 0..self.partials.len() {
            let mut y = self.partials[j];
            if x.abs() < y.abs() {
                std::mem::swap(&mut x, &mut y);
            }
            let hi = x + y;
            let lo = y - (hi - x);
            if lo != 0.0 {
                self.partials[i] = lo;
                i += 1;
            }
            x = hi;
        }
        self.partials.truncate(i);
        self.partials.push(x);
    }

    pub fn merge(&mut self, other: &ExactSum) {
        for &p in &other.partials {
            self.add(p);
        }
    }

    /// The exact sum, correctly rounded to the nearest `f64`.
    pub fn value(&self) -> f64 {
        let p = &self.partials;
        let Some(&last) = p.last() else { return 0.0 };
        let mut n = p.len() - 1;
        let mut hi = last;
        let mut lo = 0.0;
        while n > 0 {
            let x = hi;
            let y = p[n - 1];
            n -= 1;
            hi = x + y;
            lo = y - (hi - x);
            if lo != 0.0 {
                break;
            }
        }
        // round-half-even correction when the remaining tail pushes past a tie
        if n > 0 && ((lo < 0.0 && p[n - 1] < 0.0) || (lo > 0.0 && p[n - 1] > 0.0)) {
            let y = lo * 2.0;
            let x = hi + y;
            if y == x - hi {
                hi = x;
            }
        }
        hi
    }
}

impl FromIterator<f64> for ExactSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = ExactSum::new();
        for x in iter {
            s.add(x);
        }
        s
    }
}

/// Exact accumulator of `Σ_{λ ≤ 1} λ`.
pub fn trace_below_one_exact(spec: &ModularSpectrum) -> ExactSum {
    spec.eigenvalues.iter().copied().filter(|&l| l <= 1.0).collect()
}

/// `tr(Δ · 1_{[0,1]}(Δ)) = Σ_{λ ≤ 1} λ`, summed exactly and rounded once.
///
/// Because the rounding happens once on the exact sum, the value depends only
/// on the multiset of eigenvalues and not on their order.
pub fn trace_below_one(spec: &ModularSpectrum) -> f64 {
    trace_below_one_exact(spec).value()
}

/// Outcome of the factor test `F ∩ F' = {0}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorReport {
    pub is_factor: bool,
    pub intersection_dim: usize,
}

/// Decides whether `F ∩ F' = {0}` with `F'` the symplectic complement.
pub fn factor_check(f: &RealSubspace, tol: f64) -> FactorReport {
    let meet = f.intersection(&f.symplectic_complement(tol), tol);
    FactorReport {
        is_factor: meet.dim_real() == 0,
        intersection_dim: meet.dim_real(),
    }
}

/// Per-mass spectrum generator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpectrumGenerator {
    /// `{q^k, q^{-k} : k = 1, …, levels}` with `0 < q < 1`.
    Geometric { q: f64, levels: u32 },
    /// A fixed list of eigenvalues.
    Explicit { eigenvalues: Vec<f64> },
}

impl SpectrumGenerator {
    pub fn generate(&self) -> Result<ModularSpectrum> {
        match self {
            SpectrumGenerator::Geometric { q, levels } => {
                if !(*q > 0.0 && *q < 1.0) || *levels == 0 {
                    return Err(Error::Invalid(format!(
                        "geometric generator needs 0 < q < 1 and levels ≥ 1 (q = {q}, levels = {levels})"
                    )));
                }
                let mut eigenvalues = Vec::with_capacity(2 * *levels as usize);
                for k in 1..=*levels as i32 {
                    eigenvalues.push(q.powi(k));
                    eigenvalues.push(q.powi(-k));
                }
                ModularSpectrum::new(eigenvalues, Provenance::ModelGenerated)
            }
            SpectrumGenerator::Explicit { eigenvalues } => ModularSpectrum::user(eigenvalues.clone()),
        }
    }
}

/// One atom of a finite mass-measure surrogate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassPoint {
    pub mass: f64,
    /// Measure of the atom. It labels the surrogate but does not change `F_m`.
    pub weight: f64,
    pub generator: SpectrumGenerator,
    #[serde(default = "one")]
    pub multiplicity: u32,
}

fn one() -> u32 {
    1
}

/// A finite list of mass atoms, read as `F = ⊕_m F_m^{⊕k_m}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MassMeasureSurrogate {
    pub points: Vec<MassPoint>,
}

/// Contribution of one mass atom.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassContribution {
    pub mass: f64,
    pub multiplicity: u32,
    pub trace: f64,
}

/// Result of [`compose_masses`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Composition {
    pub spectrum: ModularSpectrum,
    pub contributions: Vec<MassContribution>,
    pub total_trace: f64,
    pub pairing_defect: f64,
    /// Masses whose multiplicity exceeds the configured bound.
    pub excessive_multiplicity: Vec<f64>,
}

/// Concatenates the per-mass spectra (each repeated by its multiplicity).
pub fn compose_masses(surrogate: &MassMeasureSurrogate, multiplicity_bound: u32) -> Result<Composition> {
    let points = &surrogate.points;
    for (i, a) in points.iter().enumerate() {
        if !(a.weight > 0.0) || !a.mass.is_finite() || a.mass < 0.0 {
            return Err(Error::Invalid(format!(
                "mass point {i} needs mass ≥ 0 and weight > 0 (mass = {}, weight = {})",
                a.mass, a.weight
            )));
        }
        if points[..i].iter().any(|b| b.mass == a.mass) {
            return Err(Error::DuplicateMass(a.mass));
        }
    }
    let mut all = ExactSum::new();
    let mut eigenvalues = Vec::new();
    let mut contributions = Vec::with_capacity(points.len());
    let mut provenance = Provenance::ModelGenerated;
    for p in points {
        let spec = p.generator.generate()?;
        if spec.provenance == Provenance::UserSupplied {
            provenance = Provenance::UserSupplied;
        }
        let mut local = ExactSum::new();
        for _ in 0..p.multiplicity {
            eigenvalues.extend_from_slice(&spec.eigenvalues);
            local.merge(&trace_below_one_exact(&spec));
        }
        all.merge(&local);
        contributions.push(MassContribution {
            mass: p.mass,
            multiplicity: p.multiplicity,
            trace: local.value(),
        });
    }
    let spectrum = ModularSpectrum { eigenvalues, provenance };
    Ok(Composition {
        pairing_defect: spectrum.pairing_defect(),
        spectrum,
        total_trace: all.value(),
        excessive_multiplicity: points
            .iter()
            .filter(|p| p.multiplicity > multiplicity_bound)
            .map(|p| p.mass)
            .collect(),
        contributions,
    })
}

/// A mass-measure model that can be refined.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MeasureModel {
    /// A fixed set of atoms; refinement leaves it unchanged.
    Atoms(MassMeasureSurrogate),
    /// Total weight spread uniformly over `[lo, hi]`, discretized into `N` points.
    Continuum { continuum: ContinuumSpec },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContinuumSpec {
    pub mass_range: [f64; 2],
    pub weight: f64,
    pub generator: SpectrumGenerator,
}

impl MeasureModel {
    /// The finite surrogate at refinement level `n ≥ 1`.
    pub fn discretize(&self, n: usize) -> Result<MassMeasureSurrogate> {
        match self {
            MeasureModel::Atoms(atoms) => Ok(atoms.clone()),
            MeasureModel::Continuum { continuum: c } => {
                let [lo, hi] = c.mass_range;
                if !(hi > lo) || n == 0 {
                    return Err(Error::Invalid(format!("continuum needs lo < hi and N ≥ 1 (got [{lo}, {hi}], N = {n})")));
                }
                let width = (hi - lo) / n as f64;
                Ok(MassMeasureSurrogate {
                    points: (0..n)
                        .map(|i| MassPoint {
                            mass: lo + (i as f64 + 0.5) * width,
                            weight: c.weight / n as f64,
                            generator: c.generator.clone(),
                            multiplicity: 1,
                        })
                        .collect(),
                })
            }
        }
    }
}

/// Classification of trace growth under refinement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GrowthVerdict {
    /// The trace is constant under refinement.
    AtomicLike,
    /// The trace grows at least linearly in the number of mass points.
    ContinuumLike,
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrowthRow {
    pub n: usize,
    pub mass_points: usize,
    pub trace: f64,
}

/// Trace of `Δ_F|_{[0,1]}` along refinement levels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrowthReport {
    pub rows: Vec<GrowthRow>,
    /// Smallest per-point trace seen over all levels, the `c` in `trace ≥ N·c`.
    pub per_point_lower_bound: f64,
    /// Whether every row satisfies `trace ≥ mass_points · c` with `c > 0`.
    pub linear_bound_holds: bool,
    pub verdict: GrowthVerdict,
}

impl GrowthReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,trace\n");
        for r in &self.rows {
            out.push_str(&format!("{},{}\n", r.n, r.trace));
        }
        out
    }
}

/// Runs [`compose_masses`] at refinement levels `1..=max_n`.
pub fn growth_report(model: &MeasureModel, max_n: usize, multiplicity_bound: u32) -> Result<GrowthReport> {
    let mut rows = Vec::with_capacity(max_n);
    let mut c = f64::INFINITY;
    for n in 1..=max_n {
        let comp = compose_masses(&model.discretize(n)?, multiplicity_bound)?;
        for k in &comp.contributions {
            c = c.min(k.trace);
        }
        rows.push(GrowthRow {
            n,
            mass_points: comp.contributions.len(),
            trace: comp.total_trace,
        });
    }
    if !c.is_finite() {
        c = 0.0;
    }
    let linear_bound_holds = c > 0.0 && rows.iter().all(|r| r.trace >= r.mass_points as f64 * c);
    let first = rows.first().map_or(0.0, |r| r.trace);
    let constant = rows.iter().all(|r| r.trace == first);
    let growing = rows.len() > 1 && linear_bound_holds && rows.last().unwrap().mass_points == max_n;
    let verdict = if constant {
        GrowthVerdict::AtomicLike
    } else if growing {
        GrowthVerdict::ContinuumLike
    } else {
        GrowthVerdict::Indeterminate
    };
    Ok(GrowthReport {
        rows,
        per_point_lower_bound: c,
        linear_bound_holds,
        verdict,
    })
}
