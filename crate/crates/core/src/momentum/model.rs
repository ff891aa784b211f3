//! Finite orbit models: sample points on mass shells that are closed under a
//! registered set of group elements, carrying the scalar action
//! `U(a, A) e_p = e^{i a·Λ(A)p} e_{Λ(A)p}` (the basis vector at `p` moves to
//! `Λ(A)p` and translations act by phases).
//!
//! Boosts along `x₃` act on a finite cyclic rapidity lattice
//! `τ_k = (k − (N−1)/2)·step`, so a boost by `s·step` shifts `k` by `s`
//! modulo `N`. Group identities involving boosts therefore hold exactly away
//! from the wrap-around of the lattice; [`borchers_check`] reports the two
//! regions separately.

use std::collections::VecDeque;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{orbit_coordinates, MassShellPoint, Representation};
use crate::linalg::{CMatrix, ComplexOperator, C64};
use crate::lorentz::{boost, Axis, CoveringElement, FourVector, SL2Element};
use crate::{Error, Result};

const ANGLE_TOL: f64 = 1e-9;

/// Group elements a model can be closed under.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupElement {
    /// `λ₃(t)`; `t` must be a multiple of the rapidity step.
    Boost { t: f64 },
    /// `r₃(θ)`.
    Rotation { theta: f64 },
    /// `r₁(π)`, the reflection taking `W₃` to `W₃'`.
    R1Pi,
    /// `r(2π) = −1`.
    TwoPi,
    /// Translation by the four-vector `a`.
    Translation { a: [f64; 4] },
}

impl GroupElement {
    pub fn covering(&self) -> CoveringElement {
        match self {
            GroupElement::Boost { t } => CoveringElement::from_sl2(SL2Element::boost(Axis::X3, *t)),
            GroupElement::Rotation { theta } => CoveringElement::from_sl2(SL2Element::rotation(Axis::X3, *theta)),
            GroupElement::R1Pi => CoveringElement::from_sl2(SL2Element::rotation(Axis::X1, PI)),
            GroupElement::TwoPi => CoveringElement::from_sl2(SL2Element::minus_one()),
            GroupElement::Translation { a } => CoveringElement::translation(FourVector(*a)),
        }
    }

    /// Whether the element lies in the stabilizer of `W₃`. Every translation
    /// counts: the stabilizer group is generated together with all translations.
    pub fn in_w3_stabilizer(&self) -> bool {
        !matches!(self, GroupElement::R1Pi)
    }

    pub fn label(&self) -> String {
        match self {
            GroupElement::Boost { t } => format!("boost({t})"),
            GroupElement::Rotation { theta } => format!("rotation({theta})"),
            GroupElement::R1Pi => "r1(pi)".into(),
            GroupElement::TwoPi => "r(2pi)".into(),
            GroupElement::Translation { a } => format!("translation({},{},{},{})", a[0], a[1], a[2], a[3]),
        }
    }
}

/// One `W₃`-stabilizer orbit: label `r = p₁² + p₂²`, rapidity lattice size and
/// number of base angles.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitSpec {
    pub r: f64,
    #[serde(rename = "rapidity_N")]
    pub rapidity_n: usize,
    #[serde(rename = "angle_N")]
    pub angle_n: usize,
}

fn default_step() -> f64 {
    0.5
}

fn default_budget() -> usize {
    4096
}

/// Input description of an [`OrbitModel`]; every orbit is placed on every mass.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    pub masses: Vec<f64>,
    #[serde(default)]
    pub multiplicities: Vec<usize>,
    pub orbits: Vec<OrbitSpec>,
    #[serde(default)]
    pub elements: Vec<GroupElement>,
    #[serde(default = "default_step")]
    pub rapidity_step: f64,
    #[serde(default = "default_budget")]
    pub sample_budget: usize,
}

impl ModelSpec {
    pub fn single(mass: f64, orbits: Vec<OrbitSpec>, elements: Vec<GroupElement>) -> Self {
        ModelSpec {
            masses: vec![mass],
            multiplicities: vec![1],
            orbits,
            elements,
            rapidity_step: default_step(),
            sample_budget: default_budget(),
        }
    }
}

/// A sample point of a model.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Sample {
    pub mass_index: usize,
    pub orbit: usize,
    /// Rapidity lattice index.
    pub k: usize,
    /// Angle in `[0, 2π)`.
    pub angle: f64,
    pub momentum: FourVector,
}

#[derive(Clone, Debug)]
struct OrbitData {
    mass_index: usize,
    orbit: usize,
    n: usize,
    angles: Vec<f64>,
    first_sample: usize,
}

#[derive(Clone, Debug)]
pub struct OrbitModel {
    spec: ModelSpec,
    samples: Vec<Sample>,
    orbits: Vec<OrbitData>,
    /// Start of each mass block in the full basis, plus the total dimension.
    block_offsets: Vec<usize>,
    /// Sample index → first basis index.
    sample_offsets: Vec<usize>,
}

fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

fn canonical_angle(x: f64) -> f64 {
    let y = x.rem_euclid(2.0 * PI);
    if 2.0 * PI - y < ANGLE_TOL {
        0.0
    } else {
        y
    }
}

impl OrbitModel {
    pub fn build(spec: &ModelSpec) -> Result<Self> {
        if spec.masses.is_empty() || spec.orbits.is_empty() {
            return Err(Error::Invalid("a model needs at least one mass and one orbit".into()));
        }
        let mut spec = spec.clone();
        if spec.multiplicities.is_empty() {
            spec.multiplicities = vec![1; spec.masses.len()];
        }
        if spec.multiplicities.len() != spec.masses.len() || spec.multiplicities.contains(&0) {
            return Err(Error::Invalid("multiplicities must be positive, one per mass".into()));
        }
        for (i, &m) in spec.masses.iter().enumerate() {
            if !(m >= 0.0) {
                return Err(Error::OffShell(format!("negative mass {m}")));
            }
            if spec.masses[..i].contains(&m) {
                return Err(Error::DuplicateMass(m));
            }
        }
        if !(spec.rapidity_step > 0.0) {
            return Err(Error::Invalid("rapidity_step must be positive".into()));
        }
        for e in &spec.elements {
            if let GroupElement::Boost { t } = e {
                lattice_steps(*t, spec.rapidity_step)?;
            }
        }

        let mut orbits = Vec::new();
        let mut total = 0usize;
        for (mi, &m) in spec.masses.iter().enumerate() {
            for (oi, o) in spec.orbits.iter().enumerate() {
                if !(o.r >= 0.0) || o.rapidity_n == 0 || o.angle_n == 0 {
                    return Err(Error::Invalid(format!("orbit {oi}: need r ≥ 0, rapidity_N ≥ 1, angle_N ≥ 1")));
                }
                if m == 0.0 && o.r == 0.0 {
                    return Err(Error::ExcludedNullOrbit);
                }
                let angles = close_angles(m, o, &spec.elements, spec.rapidity_step, spec.sample_budget, total)?;
                total += angles.len() * o.rapidity_n;
                orbits.push(OrbitData {
                    mass_index: mi,
                    orbit: oi,
                    n: o.rapidity_n,
                    angles,
                    first_sample: 0,
                });
            }
        }

        let mut samples = Vec::with_capacity(total);
        for od in orbits.iter_mut() {
            od.first_sample = samples.len();
            let m = spec.masses[od.mass_index];
            let r = spec.orbits[od.orbit].r;
            for &angle in &od.angles {
                for k in 0..od.n {
                    let tau = lattice_rapidity(k, od.n, spec.rapidity_step);
                    let coords = super::OrbitCoordinates { r, theta: angle, t: tau };
                    samples.push(Sample {
                        mass_index: od.mass_index,
                        orbit: od.orbit,
                        k,
                        angle,
                        momentum: super::from_orbit_coordinates(m, &coords),
                    });
                }
            }
        }

        let mut block_offsets = vec![0];
        let mut sample_offsets = Vec::with_capacity(samples.len());
        let mut offset = 0;
        for mi in 0..spec.masses.len() {
            for _ in samples.iter().filter(|s| s.mass_index == mi) {
                sample_offsets.push(offset);
                offset += spec.multiplicities[mi];
            }
            block_offsets.push(offset);
        }

        let model = OrbitModel {
            spec,
            samples,
            orbits,
            block_offsets,
            sample_offsets,
        };
        // every registered element must act as a permutation of the samples
        for e in &model.spec.elements {
            model.permutation(e)?;
        }
        Ok(model)
    }

    pub fn spec(&self) -> &ModelSpec {
        &self.spec
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    /// Dimension of the carrier space (samples times multiplicities).
    pub fn dim(&self) -> usize {
        *self.block_offsets.last().unwrap()
    }

    pub fn rapidity_step(&self) -> f64 {
        self.spec.rapidity_step
    }

    pub fn masses(&self) -> &[f64] {
        &self.spec.masses
    }

    /// Basis index range of the block belonging to mass `i`.
    pub fn block_range(&self, i: usize) -> std::ops::Range<usize> {
        self.block_offsets[i]..self.block_offsets[i + 1]
    }

    pub fn registered(&self) -> &[GroupElement] {
        &self.spec.elements
    }

    fn orbit_data(&self, sample: &Sample) -> &OrbitData {
        self.orbits
            .iter()
            .find(|o| o.mass_index == sample.mass_index && o.orbit == sample.orbit)
            .expect("sample belongs to an orbit")
    }

    fn find_sample(&self, od: &OrbitData, k: usize, angle: f64) -> Option<usize> {
        let r = self.spec.orbits[od.orbit].r;
        let ai = if r == 0.0 {
            Some(0)
        } else {
            od.angles.iter().position(|&a| circular_distance(a, angle) <= ANGLE_TOL)
        }?;
        Some(od.first_sample + ai * od.n + k)
    }

    /// Sample permutation `i ↦ π(i)` with `U(g) e_i = e_{π(i)}` (phases aside).
    pub fn permutation(&self, g: &GroupElement) -> Result<Vec<usize>> {
        let step = self.spec.rapidity_step;
        let mut out = Vec::with_capacity(self.samples.len());
        for (i, s) in self.samples.iter().enumerate() {
            let od = self.orbit_data(s);
            let image = match g {
                GroupElement::TwoPi | GroupElement::Translation { .. } => i,
                GroupElement::Boost { t } => {
                    let shift = lattice_steps(*t, step)?;
                    let k = (s.k as i64 + shift).rem_euclid(od.n as i64) as usize;
                    od.first_sample + (i - od.first_sample) / od.n * od.n + k
                }
                GroupElement::Rotation { .. } | GroupElement::R1Pi => {
                    let q = g.covering().lorentz_matrix().apply(&s.momentum);
                    let m = self.spec.masses[s.mass_index];
                    let p = MassShellPoint::from_four_vector(m, q, 1e-9)?;
                    let c = orbit_coordinates(&p)?;
                    let k = lattice_index(c.t, od.n, step)
                        .ok_or_else(|| Error::UnknownElement(format!("{} leaves the rapidity lattice", g.label())))?;
                    self.find_sample(od, k, c.theta).ok_or_else(|| {
                        Error::UnknownElement(format!("{} leaves the sample set (angle {})", g.label(), c.theta))
                    })?
                }
            };
            out.push(image);
        }
        Ok(out)
    }

    /// The unitary `U(g)` on the carrier space.
    pub fn unitary(&self, g: &GroupElement) -> Result<ComplexOperator> {
        let n = self.dim();
        let mut m = CMatrix::zeros(n, n);
        match g {
            GroupElement::Translation { a } => {
                let a = FourVector(*a);
                for (i, s) in self.samples.iter().enumerate() {
                    let phase = C64::from_polar(1.0, a.dot(&s.momentum));
                    for c in 0..self.spec.multiplicities[s.mass_index] {
                        let idx = self.sample_offsets[i] + c;
                        m[(idx, idx)] = phase;
                    }
                }
            }
            _ => {
                let perm = self.permutation(g)?;
                for (i, &j) in perm.iter().enumerate() {
                    let mult = self.spec.multiplicities[self.samples[i].mass_index];
                    for c in 0..mult {
                        m[(self.sample_offsets[j] + c, self.sample_offsets[i] + c)] = C64::new(1.0, 0.0);
                    }
                }
            }
        }
        Ok(ComplexOperator::new(m)?)
    }

    pub fn translation(&self, a: FourVector) -> ComplexOperator {
        self.unitary(&GroupElement::Translation { a: a.0 }).expect("translations always act")
    }

    /// `U(λ₃(steps·step))`.
    pub fn boost_shift(&self, steps: i64) -> ComplexOperator {
        self.unitary(&GroupElement::Boost {
            t: steps as f64 * self.spec.rapidity_step,
        })
        .expect("lattice boost")
    }

    /// Self-adjoint `K` with `e^{iK·step} = U(λ₃(step))`, taken from the
    /// principal logarithm of the cyclic shift on every rapidity chain. The
    /// branch is unambiguous only for odd lattice sizes, so even sizes above
    /// one are rejected.
    pub fn boost_generator(&self) -> Result<ComplexOperator> {
        let step = self.spec.rapidity_step;
        let n = self.dim();
        let mut m = CMatrix::zeros(n, n);
        for od in &self.orbits {
            let len = od.n;
            if len % 2 == 0 {
                return Err(Error::Invalid(format!(
                    "rapidity_N = {len} is even: the shift has eigenvalue −1 and no symmetric logarithm"
                )));
            }
            let block = chain_generator(len, step);
            let mult = self.spec.multiplicities[od.mass_index];
            for ai in 0..od.angles.len() {
                let first = od.first_sample + ai * len;
                for a in 0..len {
                    for b in 0..len {
                        for c in 0..mult {
                            let ia = self.sample_offsets[first + a] + c;
                            let ib = self.sample_offsets[first + b] + c;
                            m[(ia, ib)] = block[(a, b)];
                        }
                    }
                }
            }
        }
        Ok(ComplexOperator::new(m)?)
    }

    /// Orbit label of every sample under the registered boosts and rotations
    /// (the connected stabilizer of `W₃`).
    pub fn stabilizer_orbits(&self) -> Result<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.samples.len()).collect();
        fn root(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for g in &self.spec.elements {
            if matches!(g, GroupElement::Boost { .. } | GroupElement::Rotation { .. }) {
                for (i, j) in self.permutation(g)?.into_iter().enumerate() {
                    let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let mut labels = vec![usize::MAX; parent.len()];
        let mut next = 0;
        let mut out = Vec::with_capacity(parent.len());
        for i in 0..parent.len() {
            let r = root(&mut parent, i);
            if labels[r] == usize::MAX {
                labels[r] = next;
                next += 1;
            }
            out.push(labels[r]);
        }
        Ok(out)
    }

    /// Registered stabilizer elements of `W₃` and the reflection `U(r₁(π))`.
    pub fn representation(&self) -> Result<Representation> {
        let elements = self
            .spec
            .elements
            .iter()
            .filter(|g| g.in_w3_stabilizer())
            .map(|g| Ok((g.label(), self.unitary(g)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation {
            elements,
            reflection: self.unitary(&GroupElement::R1Pi)?,
        })
    }
}

fn lattice_rapidity(k: usize, n: usize, step: f64) -> f64 {
    (k as f64 - (n as f64 - 1.0) / 2.0) * step
}

fn lattice_index(t: f64, n: usize, step: f64) -> Option<usize> {
    let x = t / step + (n as f64 - 1.0) / 2.0;
    let k = x.round();
    ((x - k).abs() <= 1e-7 && k >= 0.0 && (k as usize) < n).then_some(k as usize)
}

fn lattice_steps(t: f64, step: f64) -> Result<i64> {
    let x = t / step;
    if (x - x.round()).abs() > 1e-9 * x.abs().max(1.0) {
        return Err(Error::NotCommensurate { parameter: t, step });
    }
    Ok(x.round() as i64)
}

/// `K` on one cyclic chain of length `n`: `K = Σ_j (φ_j/step) f_j f_j*` with
/// `f_j` the Fourier vectors and `φ_j ∈ (−π, π)` the principal arguments of
/// the shift eigenvalues.
fn chain_generator(n: usize, step: f64) -> CMatrix {
    let mut k = CMatrix::zeros(n, n);
    for j in 0..n {
        let jj = if 2 * j > n { j as f64 - n as f64 } else { j as f64 };
        let phi = 2.0 * PI * jj / n as f64;
        for a in 0..n {
            for b in 0..n {
                let arg = -2.0 * PI * jj * (a as f64 - b as f64) / n as f64;
                k[(a, b)] += C64::from_polar(phi / (step * n as f64), arg);
            }
        }
    }
    k
}

/// Angles of one orbit: the base grid closed under the registered rotations
/// and `r₁(π)`, computed by applying the Lorentz matrices.
fn close_angles(
    mass: f64,
    orbit: &OrbitSpec,
    elements: &[GroupElement],
    step: f64,
    budget: usize,
    used: usize,
) -> Result<Vec<f64>> {
    if orbit.r == 0.0 {
        if used + orbit.rapidity_n > budget {
            return Err(Error::ClosureBudget { budget });
        }
        return Ok(vec![0.0]);
    }
    let mut angles: Vec<f64> = (0..orbit.angle_n)
        .map(|j| 2.0 * PI * j as f64 / orbit.angle_n as f64)
        .collect();
    let mut queue: VecDeque<f64> = angles.iter().copied().collect();
    let movers: Vec<&GroupElement> = elements
        .iter()
        .filter(|g| matches!(g, GroupElement::Rotation { .. } | GroupElement::R1Pi))
        .collect();
    let k_mid = (orbit.rapidity_n - 1) / 2;
    let tau = lattice_rapidity(k_mid, orbit.rapidity_n, step);
    while let Some(angle) = queue.pop_front() {
        let p = super::from_orbit_coordinates(mass, &super::OrbitCoordinates { r: orbit.r, theta: angle, t: tau });
        for g in &movers {
            let q = g.covering().lorentz_matrix().apply(&p);
            let image = canonical_angle(q.0[2].atan2(q.0[1]));
            if !angles.iter().any(|&a| circular_distance(a, image) <= ANGLE_TOL) {
                angles.push(image);
                queue.push_back(image);
                if used + angles.len() * orbit.rapidity_n > budget {
                    return Err(Error::ClosureBudget { budget });
                }
            }
        }
    }
    if used + angles.len() * orbit.rapidity_n > budget {
        return Err(Error::ClosureBudget { budget });
    }
    angles.sort_by(f64::total_cmp);
    Ok(angles)
}

/// Result of comparing `U(λ₃(s)) U(a) U(λ₃(s))*` with `U(Λ₃(s)a)`.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct BorchersReport {
    pub steps: i64,
    pub translation: FourVector,
    /// Largest entry deviation on rows whose samples do not cross the lattice seam.
    pub interior_residual: f64,
    /// Largest entry deviation over all rows.
    pub full_residual: f64,
    pub interior_samples: usize,
    pub seam_samples: usize,
}

/// Adjoint action of a lattice boost on a translation.
pub fn borchers_check(model: &OrbitModel, steps: i64, a: FourVector) -> BorchersReport {
    let s = steps as f64 * model.rapidity_step();
    let b = model.boost_shift(steps);
    let lhs = &(&b * &model.translation(a)) * &b.adjoint();
    let (_, l) = boost(Axis::X3, s);
    let rhs = model.translation(l.apply(&a));
    let diff = lhs.matrix() - rhs.matrix();
    let mut interior_residual = 0.0f64;
    let mut full_residual = 0.0f64;
    let (mut interior, mut seam) = (0, 0);
    for (i, smp) in model.samples().iter().enumerate() {
        let n = model.orbit_data(smp).n as i64;
        let source = smp.k as i64 - steps;
        let crosses = source < 0 || source >= n;
        let mult = model.spec.multiplicities[smp.mass_index];
        for c in 0..mult {
            let row = model.sample_offsets[i] + c;
            let dev = diff.row(row).iter().map(|z| z.norm()).fold(0.0, f64::max);
            full_residual = full_residual.max(dev);
            if !crosses {
                interior_residual = interior_residual.max(dev);
            }
        }
        if crosses {
            seam += 1;
        } else {
            interior += 1;
        }
    }
    BorchersReport {
        steps,
        translation: a,
        interior_residual,
        full_residual,
        interior_samples: interior,
        seam_samples: seam,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec_64() -> ModelSpec {
        ModelSpec::single(
            1.0,
            vec![OrbitSpec { r: 1.0, rapidity_n: 8, angle_n: 8 }],
            vec![
                GroupElement::Boost { t: 0.5 },
                GroupElement::Rotation { theta: PI / 4.0 },
                GroupElement::R1Pi,
            ],
        )
    }

    #[test]
    fn sixty_four_samples() {
        let m = OrbitModel::build(&spec_64()).unwrap();
        assert_eq!(m.samples().len(), 64);
        for g in m.registered() {
            let u = m.unitary(g).unwrap();
            assert!(u.is_unitary(1e-14));
            let mut p = m.permutation(g).unwrap();
            p.sort();
            assert_eq!(p, (0..64).collect::<Vec<_>>());
        }
    }

    #[test]
    fn empty_element_list() {
        let spec = ModelSpec::single(1.0, vec![OrbitSpec { r: 2.0, rapidity_n: 3, angle_n: 2 }], vec![]);
        let m = OrbitModel::build(&spec).unwrap();
        assert_eq!(m.samples().len(), 6);
    }

    #[test]
    fn incommensurate_boost_rejected() {
        let spec = ModelSpec::single(1.0, vec![OrbitSpec { r: 1.0, rapidity_n: 3, angle_n: 2 }], vec![GroupElement::Boost { t: 0.3 }]);
        assert!(matches!(OrbitModel::build(&spec), Err(Error::NotCommensurate { .. })));
    }

    #[test]
    fn irrational_rotation_explodes() {
        let mut spec = ModelSpec::single(1.0, vec![OrbitSpec { r: 1.0, rapidity_n: 3, angle_n: 2 }], vec![GroupElement::Rotation { theta: 1.0 }]);
        spec.sample_budget = 300;
        assert!(matches!(OrbitModel::build(&spec), Err(Error::ClosureBudget { .. })));
    }

    #[test]
    fn rotation_closure_adds_angles() {
        let spec = ModelSpec::single(1.0, vec![OrbitSpec { r: 1.0, rapidity_n: 1, angle_n: 2 }], vec![GroupElement::Rotation { theta: PI / 2.0 }]);
        let m = OrbitModel::build(&spec).unwrap();
        assert_eq!(m.samples().len(), 4);
    }

    #[test]
    fn shift_generator_exponentiates_to_shift() {
        let spec = ModelSpec::single(1.0, vec![OrbitSpec { r: 1.0, rapidity_n: 5, angle_n: 2 }], vec![GroupElement::Boost { t: 0.5 }]);
        let m = OrbitModel::build(&spec).unwrap();
        let k = m.boost_generator().unwrap();
        assert!(k.is_hermitian(1e-12));
        let eig = crate::linalg::eigh(&k, 1e-9).unwrap();
        let u = eig.apply(|x| C64::from_polar(1.0, x * m.rapidity_step()));
        assert!(u.distance(&m.boost_shift(1)) < 1e-12);
    }

    #[test]
    fn even_lattice_has_no_generator() {
        let m = OrbitModel::build(&spec_64()).unwrap();
        assert!(m.boost_generator().is_err());
    }

    #[test]
    fn stabilizer_orbits_follow_labels() {
        let spec = ModelSpec {
            masses: vec![1.0, 2.0],
            multiplicities: vec![1, 1],
            orbits: vec![OrbitSpec { r: 0.5, rapidity_n: 3, angle_n: 4 }, OrbitSpec { r: 2.0, rapidity_n: 3, angle_n: 4 }],
            elements: vec![GroupElement::Boost { t: 0.5 }, GroupElement::Rotation { theta: PI / 2.0 }],
            rapidity_step: 0.5,
            sample_budget: 4096,
        };
        let m = OrbitModel::build(&spec).unwrap();
        let labels = m.stabilizer_orbits().unwrap();
        for (i, a) in m.samples().iter().enumerate() {
            for (j, b) in m.samples().iter().enumerate() {
                let same = a.mass_index == b.mass_index && a.orbit == b.orbit;
                assert_eq!(labels[i] == labels[j], same);
            }
        }
        let r1 = m.permutation(&GroupElement::R1Pi).unwrap();
        for (i, &j) in r1.iter().enumerate() {
            assert_eq!(labels[i], labels[j]);
        }
    }

    #[test]
    fn borchers_interior_is_exact() {
        let spec = ModelSpec::single(1.0, vec![OrbitSpec { r: 1.0, rapidity_n: 7, angle_n: 4 }], vec![GroupElement::Boost { t: 0.5 }]);
        let m = OrbitModel::build(&spec).unwrap();
        let r = borchers_check(&m, 2, FourVector::new(0.3, 0.0, 0.0, 0.3));
        assert!(r.interior_residual < 1e-12);
        assert!(r.seam_samples > 0);
        let transverse = borchers_check(&m, 3, FourVector::new(0.0, 0.7, -0.4, 0.0));
        assert!(transverse.full_residual < 1e-12);
    }

    #[test]
    fn spec_parses_from_json() {
        let text = r#"{"masses":[1.0],"multiplicities":[1],"orbits":[{"r":1.0,"rapidity_N":3,"angle_N":2}],
            "elements":[{"kind":"boost","t":0.5},{"kind":"r1_pi"},{"kind":"translation","a":[1,0,0,0]}]}"#;
        let spec: ModelSpec = serde_json::from_str(text).unwrap();
        assert_eq!(spec.elements.len(), 3);
        let bad = r#"{"masses":[1.0],"orbits":[],"colour":1}"#;
        assert!(serde_json::from_str::<ModelSpec>(bad).is_err());
    }
}
