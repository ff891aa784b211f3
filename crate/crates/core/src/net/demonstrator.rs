use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::action::tensor_conjugation;
use super::model::{bgl_construct, tomita_quotient, NetModel};
use crate::error::{Error, Result};
use crate::linalg::{eigh, AntilinearOperator, CMatrix, CVector, ComplexOperator, C64};
use crate::momentum::GroupElement;
use crate::subspace::StandardSubspace;

/// A real action `V` on the internal space `C^m`, given on the `W₃` boosts by
/// `V(λ₃(t)) = e^{iLt}` and on finitely many registered elements; elements
/// not listed act trivially. The real structure is complex conjugation, so
/// `V` preserves `K = R^m` exactly when its matrices are real.
#[derive(Clone, Debug)]
pub struct InternalAction {
    pub generator: ComplexOperator,
    pub elements: Vec<(GroupElement, ComplexOperator)>,
}

impl InternalAction {
    /// `V(λ₃(t))` = rotation of the plane by `ωt`, `V(r₁(π)) = diag(1, −1)`.
    pub fn plane_rotation(omega: f64) -> Self {
        // e^{iLt} = [[cos ωt, −sin ωt], [sin ωt, cos ωt]] for L = ω σ₂
        let generator = ComplexOperator::new(crate::lorentz::pauli(2) * C64::new(omega, 0.0)).expect("square");
        InternalAction {
            generator,
            elements: vec![(GroupElement::R1Pi, ComplexOperator::real_diagonal(&[1.0, -1.0]))],
        }
    }

    pub fn trivial(dim: usize) -> Self {
        InternalAction {
            generator: ComplexOperator::zeros(dim),
            elements: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.generator.dim()
    }

    fn boost(&self, t: f64) -> ComplexOperator {
        eigh(&self.generator, 1e-12)
            .expect("Hermitian generator")
            .apply(|l| C64::from_polar(1.0, l * t))
    }

    fn element(&self, g: &GroupElement) -> ComplexOperator {
        match g {
            GroupElement::Boost { t } => self.boost(*t),
            _ => self
                .elements
                .iter()
                .find(|(h, _)| h == g)
                .map(|(_, v)| v.clone())
                .unwrap_or_else(|| ComplexOperator::identity(self.dim())),
        }
    }

    /// Largest imaginary part among `iL` and the element matrices.
    fn reality_defect(&self) -> f64 {
        let il = self.generator.scale(C64::new(0.0, 1.0));
        std::iter::once(&il)
            .chain(self.elements.iter().map(|(_, v)| v))
            .map(|x| x.matrix().iter().map(|z| z.im.abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max)
    }
}

/// Eigenphases of the internal block of `Z_V(t)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZPhaseRow {
    pub t: f64,
    /// Eigenvalues of the internal block as `[re, im]`.
    pub eigenvalues: Vec<[f64; 2]>,
    /// Their arguments divided by `π`, in `(−1, 1]` up to rounding, sorted.
    pub phases_over_pi: Vec<f64>,
    /// `‖Z_V(t) − 1 ⊗ R‖` for the extracted block `R`.
    pub block_residual: f64,
}

/// `‖U_I(g) Δ^{−it} U_I(g)* − U_V(g) U_V(λ₃(2πt)) U_V(g)*‖`: how far the
/// conjugated modular group is from the `U_V` boost of `gW₃`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MismatchRow {
    pub element: String,
    pub t: f64,
    pub residual: f64,
}

/// `G(g) = U_V(g) U_I(g)*` for a registered element.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniquenessRow {
    pub element: String,
    /// `‖G − 1‖`.
    pub distance_from_identity: f64,
    /// `‖J G J − G‖` with `J` the modular conjugation of `H(W₃) ⊗ K`.
    pub conjugation_defect: f64,
    /// `max_h ‖[G, U_I(h)]‖`.
    pub commutant_residual: f64,
}

/// Outcome of [`tensor_demonstrator`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DemonstratorReport {
    pub internal_dim: usize,
    pub total_dim: usize,
    /// `‖Δ_{H(W₃)⊗K} − Δ_{H(W₃)} ⊗ 1‖`, with the left side computed afresh.
    pub delta_factorization: f64,
    /// Distance from `H(W₃) ⊗ K` to the `W₃` subspace built directly from `U_I`
    /// and `J ⊗ conj`.
    pub canonical_u_i_distance: f64,
    /// Worst covariance residual of the tensor net under `U_I`.
    pub invariance_u_i: f64,
    /// Worst covariance residual of the tensor net under `U_V`.
    pub invariance_u_v: f64,
    /// `max_t ‖Z_I(t) − 1‖`.
    pub bw_residual_u_i: f64,
    /// `max_t ‖Z_V(t) − 1‖`.
    pub bw_residual_u_v: f64,
    pub bw_holds_u_i: bool,
    pub bw_fails_u_v: bool,
    pub z_phases: Vec<ZPhaseRow>,
    pub mismatch: Vec<MismatchRow>,
    pub uniqueness: Vec<UniquenessRow>,
    /// `‖C − 1‖` for `C = S_geo S_alg⁻¹` with `J_geo = J ⊗ conj` and the `U_V` boost generator.
    pub tomita_c_distance_from_identity: f64,
    /// `max_g ‖[C, U_I(g)]‖`.
    pub tomita_c_commutant_residual: f64,
    pub scope: String,
}

/// `t` values of the Z-map table.
pub const DEMO_Z_TIMES: [f64; 3] = [0.25, 0.5, 1.0];
/// `t` values of the non-covariance table.
pub const DEMO_MISMATCH_TIMES: [f64; 3] = [0.125, 0.25, 0.375];

fn tensor_subspace(h: &StandardSubspace, m: usize, tol: f64) -> Result<StandardSubspace> {
    let mut vectors = Vec::with_capacity(h.ambient_dim() * m);
    for v in h.basis() {
        for a in 0..m {
            let e = CVector::from_fn(m, |i, _| if i == a { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) });
            vectors.push(v.kronecker(&e));
        }
    }
    StandardSubspace::new(&vectors, tol)
}

fn internal_block(z: &ComplexOperator, m: usize) -> (ComplexOperator, f64) {
    let n = z.dim() / m;
    let r = CMatrix::from_fn(m, m, |a, b| {
        (0..n).map(|i| z.entry(i * m + a, i * m + b)).sum::<C64>() / n as f64
    });
    let r = ComplexOperator::new(r).expect("square");
    let residual = z.distance(&ComplexOperator::identity(n).kron(&r));
    (r, residual)
}

fn eigenphases(r: &ComplexOperator) -> (Vec<[f64; 2]>, Vec<f64>) {
    let m = r.matrix();
    let values: Vec<C64> = if m.nrows() == 2 && m.iter().all(|z| z.im.abs() < 1e-12) {
        // real rotation block: phases ±φ read off the matrix entries
        let phi = (m[(1, 0)].re - m[(0, 1)].re).atan2(m[(0, 0)].re + m[(1, 1)].re);
        vec![C64::from_polar(1.0, phi), C64::from_polar(1.0, -phi)]
    } else {
        m.clone().schur().eigenvalues().map(|v| v.iter().copied().collect()).unwrap_or_default()
    };
    let mut phases: Vec<f64> = values.iter().map(|z| z.arg() / PI).collect();
    phases.sort_by(f64::total_cmp);
    (values.iter().map(|z| [z.re, z.im]).collect(), phases)
}

/// The two-action construction on `H ⊗ K` (the internal factor is written
/// second): the net `W ↦ H(W) ⊗ K` with `K = R^m`, acted on by
/// `U_I(g) = U(g) ⊗ 1` and `U_V(g) = U(g) ⊗ V(g)`.
///
/// `V` is only defined on the `W₃` boosts and the registered elements, so the
/// report makes no claim of full Poincaré covariance for `U_V`.
pub fn tensor_demonstrator(base: &NetModel, v: &InternalAction) -> Result<DemonstratorReport> {
    let tol = base.tolerance();
    let defect = v.reality_defect();
    if defect > tol {
        return Err(Error::NotReal { residual: defect });
    }
    let m = v.dim();
    let table = base.table();
    let n = base.dim();
    let table_i = table.tensor(|_| ComplexOperator::identity(m), &ComplexOperator::zeros(m))?;
    let table_v = table.tensor(|g| v.element(g), &v.generator)?;
    let j_tensor = tensor_conjugation(base.conjugation(), &AntilinearOperator::conjugation(m))?;
    let net_i = bgl_construct(&j_tensor, &table_i, false, tol)?;

    let h3 = &base.wedges()[0].subspace;
    let fresh = tensor_subspace(h3, m, tol)?;
    let delta_factorization = fresh
        .modular_operator()
        .distance(&h3.modular_operator().kron(&ComplexOperator::identity(m)));

    // covariance of W ↦ H(W) ⊗ K under both actions on the base family
    let tensors: Vec<StandardSubspace> = base
        .wedges()
        .iter()
        .map(|w| tensor_subspace(&w.subspace, m, tol))
        .collect::<Result<_>>()?;
    let mut invariance_u_i = 0.0f64;
    let mut invariance_u_v = 0.0f64;
    for p in base.covariance_pairs() {
        let target = tensors[p.to].space();
        let ui = table_i.unitary(&p.element)?;
        let uv = table_v.unitary(&p.element)?;
        invariance_u_i = invariance_u_i.max(tensors[p.from].space().image(&ui, tol).distance(target));
        invariance_u_v = invariance_u_v.max(tensors[p.from].space().image(&uv, tol).distance(target));
    }

    let id = ComplexOperator::identity(n * m);
    let z_i = |t: f64| &fresh.modular_flow(t) * &table_i.boost(2.0 * PI * t);
    let z_v = |t: f64| &fresh.modular_flow(t) * &table_v.boost(2.0 * PI * t);
    let bw_residual_u_i = DEMO_Z_TIMES.iter().map(|&t| z_i(t).distance(&id)).fold(0.0, f64::max);
    let bw_residual_u_v = DEMO_Z_TIMES.iter().map(|&t| z_v(t).distance(&id)).fold(0.0, f64::max);
    let z_phases = DEMO_Z_TIMES
        .iter()
        .map(|&t| {
            let (r, block_residual) = internal_block(&z_v(t), m);
            let (eigenvalues, phases_over_pi) = eigenphases(&r);
            ZPhaseRow {
                t,
                eigenvalues,
                phases_over_pi,
                block_residual,
            }
        })
        .collect();

    let mut mismatch = Vec::new();
    for (g, _) in table.elements() {
        let ui = table_i.unitary(g)?;
        let uv = table_v.unitary(g)?;
        for t in DEMO_MISMATCH_TIMES {
            let lhs = fresh.modular_flow(-t).conjugate_by(&ui);
            let rhs = table_v.boost(2.0 * PI * t).conjugate_by(&uv);
            mismatch.push(MismatchRow {
                element: g.label(),
                t,
                residual: lhs.distance(&rhs),
            });
        }
    }

    let j_fresh = fresh.modular_conjugation();
    let ui_all: Vec<ComplexOperator> = table_i.elements().iter().map(|(_, u)| u.clone()).collect();
    let mut uniqueness = Vec::new();
    let mut probes: Vec<GroupElement> = table.elements().iter().map(|(g, _)| g.clone()).collect();
    probes.push(GroupElement::Boost { t: 1.0 });
    for g in &probes {
        let gq = &table_v.unitary(g)? * &table_i.unitary(g)?.adjoint();
        uniqueness.push(UniquenessRow {
            element: g.label(),
            distance_from_identity: gq.distance(&id),
            conjugation_defect: j_fresh.sandwich(&gq).distance(&gq),
            commutant_residual: ui_all.iter().map(|u| gq.commutator(u).frobenius_norm()).fold(0.0, f64::max),
        });
    }

    let cmp = tomita_quotient(&fresh, &j_tensor, table_v.boost_generator(), &ui_all, tol)?;
    Ok(DemonstratorReport {
        internal_dim: m,
        total_dim: n * m,
        delta_factorization,
        canonical_u_i_distance: net_i.wedges()[0].subspace.distance(&fresh),
        invariance_u_i,
        invariance_u_v,
        bw_holds_u_i: bw_residual_u_i <= tol,
        bw_fails_u_v: bw_residual_u_v > tol,
        bw_residual_u_i,
        bw_residual_u_v,
        z_phases,
        mismatch,
        uniqueness,
        tomita_c_distance_from_identity: cmp.c.distance(&id),
        tomita_c_commutant_residual: cmp.commutant_residual,
        scope: "V is defined on the W3 boosts and the registered elements only; full Poincaré covariance of U_V is not claimed".into(),
    })
}
