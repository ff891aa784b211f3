//! Standard subspaces and their Tomita data.

use serde::{Deserialize, Serialize};

use super::real::{realify_antilinear, RMatrix, RealSubspace};
use crate::linalg::{
    hermitian_function, nullspace, polar_antilinear, AntilinearOperator, CMatrix, CVector,
    ComplexOperator, SpectralFunction,
};
use crate::{Error, Result};

/// A real subspace `H ⊂ C^n` with `dim_R H = n` and `H ∩ iH = {0}`, together
/// with its Tomita operator `S`, modular conjugation `J` and modular operator
/// `Δ`, computed once at construction.
#[derive(Clone, Debug)]
pub struct StandardSubspace {
    space: RealSubspace,
    basis: Vec<CVector>,
    tomita: AntilinearOperator,
    conjugation: AntilinearOperator,
    modular: ComplexOperator,
}

/// Residuals of the identities every standard subspace must satisfy.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ModularResiduals {
    /// `max ‖S h − h‖` over the stored basis.
    pub fixes_basis: f64,
    /// `‖S² − 1‖`.
    pub s_involution: f64,
    /// `‖J² − 1‖`.
    pub j_involution: f64,
    /// `‖J Δ J − Δ^{-1}‖`.
    pub j_delta_j: f64,
    /// `‖J Δ^{1/2} − S‖`.
    pub polar: f64,
    /// `|det Δ − 1|`.
    pub det_delta: f64,
}

impl ModularResiduals {
    pub fn max(&self) -> f64 {
        [
            self.fixes_basis,
            self.s_involution,
            self.j_involution,
            self.j_delta_j,
            self.polar,
            self.det_delta,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Comparison of transported modular data with the conjugated originals.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct TransportCheck {
    /// `‖Δ_{UH} − U Δ_H U*‖`.
    pub delta: f64,
    /// `‖J_{UH} − U J_H U*‖`.
    pub conjugation: f64,
}

impl StandardSubspace {
    /// Builds `H = span_R{vectors}`. With `B` the matrix whose columns are the
    /// vectors, the Tomita operator has matrix `B·conj(B)^{-1}`.
    pub fn new(vectors: &[CVector], tol: f64) -> Result<Self> {
        let n = vectors.first().map(|v| v.len()).unwrap_or(0);
        if n == 0 || vectors.len() != n {
            return Err(Error::WrongBasisCount {
                ambient: n,
                count: vectors.len(),
            });
        }
        let space = RealSubspace::new(n, vectors, tol)?;
        let b = CMatrix::from_columns(vectors);
        let sv = b.singular_values();
        let smax = sv.max();
        if sv.min() <= tol * smax || !space.is_separating(tol) {
            return Err(Error::NotSeparating);
        }
        let inv = b.map(|z| z.conj()).try_inverse().ok_or(Error::Singular)?;
        let tomita = AntilinearOperator::new(&b * inv)?;
        let (conjugation, modular) = polar_antilinear(&tomita, tol)?;
        Ok(Self {
            space,
            basis: vectors.to_vec(),
            tomita,
            conjugation,
            modular,
        })
    }

    /// `R^n ⊂ C^n`, with `S = J = conjugation` and `Δ = 1`.
    pub fn real_form(n: usize) -> Self {
        let basis: Vec<CVector> = (0..n).map(|i| CVector::from_fn(n, |k, _| if k == i { 1.0.into() } else { 0.0.into() })).collect();
        Self::new(&basis, crate::DEFAULT_TOL).expect("real form is standard")
    }

    /// `H = ker(1 − S)` for an antilinear involution `S`.
    pub fn from_involution(s: &AntilinearOperator, tol: f64) -> Result<Self> {
        if !s.is_involution(tol) {
            return Err(Error::NotInvolution {
                residual: s.involution_defect(),
            });
        }
        let n = s.dim();
        let sr = realify_antilinear(s);
        let m = RMatrix::identity(2 * n, 2 * n) - sr;
        let report = nullspace(&m, tol);
        if report.dim() != n {
            return Err(Error::KernelDimension {
                expected: n,
                found: report.dim(),
            });
        }
        let vectors: Vec<CVector> = report.basis.iter().map(super::real::complexify).collect();
        Self::new(&vectors, tol)
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_dim()
    }

    pub fn space(&self) -> &RealSubspace {
        &self.space
    }

    /// The real basis the subspace was built from.
    pub fn basis(&self) -> &[CVector] {
        &self.basis
    }

    pub fn tomita(&self) -> &AntilinearOperator {
        &self.tomita
    }

    pub fn modular_conjugation(&self) -> &AntilinearOperator {
        &self.conjugation
    }

    pub fn modular_operator(&self) -> &ComplexOperator {
        &self.modular
    }

    /// Eigenvalues of `Δ`, ascending.
    pub fn modular_spectrum(&self) -> Vec<f64> {
        crate::linalg::eigh(&self.modular, 1e-8)
            .map(|e| e.values)
            .unwrap_or_default()
    }

    /// `Δ^{it}`.
    pub fn modular_flow(&self, t: f64) -> ComplexOperator {
        hermitian_function(&self.modular, SpectralFunction::PowerIt(t), 1e-8)
            .expect("modular operator is positive definite")
    }

    /// `Δ^{1/2}`.
    pub fn modular_sqrt(&self) -> ComplexOperator {
        hermitian_function(&self.modular, SpectralFunction::Sqrt, 1e-8).expect("positive")
    }

    /// Symplectic complement `H' = J H`, whose Tomita operator is `S*`.
    pub fn complement(&self, tol: f64) -> Result<Self> {
        Self::from_involution(&self.tomita.adjoint(), tol)
    }

    /// `U H` for a unitary `U`.
    pub fn transport(&self, u: &ComplexOperator, tol: f64) -> Result<Self> {
        u.ensure_unitary(tol)?;
        let vectors: Vec<CVector> = self.basis.iter().map(|v| u.apply(v)).collect();
        Self::new(&vectors, tol)
    }

    /// Compares the modular data of `k = U H` with `U Δ U*` and `U J U*`.
    pub fn transport_check(&self, u: &ComplexOperator, k: &StandardSubspace) -> TransportCheck {
        TransportCheck {
            delta: k.modular.distance(&self.modular.conjugate_by(u)),
            conjugation: k.conjugation.distance(&self.conjugation.conjugate_by(u)),
        }
    }

    /// Equality as subspaces (projection distance).
    pub fn distance(&self, other: &StandardSubspace) -> f64 {
        self.space.distance(&other.space)
    }

    pub fn equals(&self, other: &StandardSubspace, tol: f64) -> bool {
        self.space.equals(&other.space, tol)
    }

    /// Largest `‖S k − k‖` over an orthonormal basis of `k`. Zero exactly when
    /// `S` fixes `k` pointwise, i.e. when `k ⊆ H`.
    pub fn fixing_residual(&self, k: &RealSubspace) -> f64 {
        k.basis()
            .iter()
            .map(|v| (self.tomita.apply(v) - v).norm())
            .fold(0.0, f64::max)
    }

    pub fn residuals(&self) -> ModularResiduals {
        let n = self.ambient_dim();
        let id = ComplexOperator::identity(n);
        let half = self.modular_sqrt();
        let inv = self.modular.try_inverse().expect("positive definite");
        ModularResiduals {
            fixes_basis: self
                .basis
                .iter()
                .map(|v| (self.tomita.apply(v) - v).norm())
                .fold(0.0, f64::max),
            s_involution: self.tomita.compose(&self.tomita).distance(&id),
            j_involution: self.conjugation.compose(&self.conjugation).distance(&id),
            j_delta_j: self.conjugation.sandwich(&self.modular).distance(&inv),
            polar: self.conjugation.after_linear(&half).distance(&self.tomita),
            det_delta: (self.modular.determinant() - crate::C64::new(1.0, 0.0)).norm(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    fn v2(a: crate::C64, b: crate::C64) -> CVector {
        CVector::from_column_slice(&[a, b])
    }

    #[test]
    fn real_form_has_trivial_modular_data() {
        let h = StandardSubspace::real_form(3);
        assert!(h.modular_operator().distance(&ComplexOperator::identity(3)) < 1e-12);
        assert!(h.tomita().distance(&AntilinearOperator::conjugation(3)) < 1e-12);
        assert!(h.modular_conjugation().distance(&AntilinearOperator::conjugation(3)) < 1e-12);
    }

    #[test]
    fn two_dimensional_example() {
        let h = StandardSubspace::new(&[v2(c(1.0, 0.0), c(0.0, 0.0)), v2(c(0.0, 1.0), c(1.0, 0.0))], 1e-9).unwrap();
        let expected_s = ComplexOperator::from_rows(&[vec![c(1.0, 0.0), c(0.0, 2.0)], vec![c(0.0, 0.0), c(1.0, 0.0)]]).unwrap();
        assert!(h.tomita().matrix_operator().distance(&expected_s) < 1e-12);
        let spec = h.modular_spectrum();
        let r = 2f64.sqrt();
        assert!((spec[0] - (3.0 - 2.0 * r)).abs() < 1e-10);
        assert!((spec[1] - (3.0 + 2.0 * r)).abs() < 1e-10);
        assert!(h.residuals().max() < 1e-10);
    }

    #[test]
    fn non_separating_rejected() {
        let err = StandardSubspace::new(&[v2(c(1.0, 0.0), c(0.0, 0.0)), v2(c(0.0, 1.0), c(0.0, 0.0))], 1e-9);
        assert!(matches!(err, Err(Error::NotSeparating)));
    }

    #[test]
    fn wrong_count_rejected() {
        let err = StandardSubspace::new(&[v2(c(1.0, 0.0), c(0.0, 0.0))], 1e-9);
        assert!(matches!(err, Err(Error::WrongBasisCount { ambient: 2, count: 1 })));
    }

    #[test]
    fn involution_round_trip() {
        let a = ComplexOperator::from_rows(&[vec![c(1.0, 0.0), c(0.0, 2.0)], vec![c(0.0, 0.0), c(1.0, 0.0)]]).unwrap();
        let s = AntilinearOperator::from_operator(&a);
        let h = StandardSubspace::from_involution(&s, 1e-9).unwrap();
        let direct = StandardSubspace::new(&[v2(c(1.0, 0.0), c(0.0, 0.0)), v2(c(0.0, 1.0), c(1.0, 0.0))], 1e-9).unwrap();
        assert!(h.equals(&direct, 1e-10));
    }

    #[test]
    fn complement_equals_j_image() {
        let h = StandardSubspace::new(&[v2(c(1.0, 0.0), c(0.0, 0.0)), v2(c(0.0, 1.0), c(1.0, 0.0))], 1e-9).unwrap();
        let comp = h.complement(1e-9).unwrap();
        let jh = h.space().image_antilinear(h.modular_conjugation(), 1e-9);
        let symp = h.space().symplectic_complement(1e-9);
        assert!(comp.space().equals(&jh, 1e-10));
        assert!(comp.space().equals(&symp, 1e-10));
        assert!(comp.tomita().distance(&h.tomita().adjoint()) < 1e-10);
    }

    #[test]
    fn modular_flow_preserves_subspace() {
        let h = StandardSubspace::new(&[v2(c(1.0, 0.0), c(0.0, 0.0)), v2(c(0.0, 1.0), c(1.0, 0.0))], 1e-9).unwrap();
        assert!(h.modular_flow(0.0).distance(&ComplexOperator::identity(2)) < 1e-12);
        let u = h.modular_flow(1.0);
        for b in h.basis() {
            assert!(h.space().residual(&u.apply(b)) < 1e-9);
        }
    }

    #[test]
    fn diagonal_transport_keeps_spectrum() {
        let h = StandardSubspace::new(&[v2(c(1.0, 0.0), c(0.0, 0.0)), v2(c(0.0, 1.0), c(1.0, 0.0))], 1e-9).unwrap();
        let u = ComplexOperator::diagonal(&[c(0.0, 1.0), c(1.0, 0.0)]);
        let k = h.transport(&u, 1e-9).unwrap();
        let (a, b) = (h.modular_spectrum(), k.modular_spectrum());
        assert!((a[0] - b[0]).abs() < 1e-10 && (a[1] - b[1]).abs() < 1e-10);
        let check = h.transport_check(&u, &k);
        assert!(check.delta < 1e-10 && check.conjugation < 1e-10);
    }
}
