use std::fmt;

use super::{hermitian_function, CMatrix, CVector, ComplexOperator, SpectralFunction, C64};
use crate::{Error, Result};

/// Antilinear operator `v ↦ A·conj(v)` stored by its matrix `A`.
///
/// With this representation the antilinear adjoint (defined by
/// `⟨x, T y⟩ = ⟨y, T* x⟩`) is the operator with matrix `Aᵀ`, and the product of
/// two antilinear maps is the linear map `A₂·conj(A₁)`.
#[derive(Clone, PartialEq)]
pub struct AntilinearOperator {
    matrix: CMatrix,
}

impl AntilinearOperator {
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() || matrix.nrows() == 0 {
            return Err(Error::NotSquare {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        Ok(Self { matrix })
    }

    pub(crate) fn from_matrix_unchecked(matrix: CMatrix) -> Self {
        Self { matrix }
    }

    /// Plain complex conjugation on `C^n`.
    pub fn conjugation(dim: usize) -> Self {
        Self::from_matrix_unchecked(CMatrix::identity(dim, dim))
    }

    /// The antilinear map `v ↦ L·conj(v)` for a linear `L`.
    pub fn from_operator(op: &ComplexOperator) -> Self {
        Self::from_matrix_unchecked(op.matrix().clone())
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// The matrix `A` as a linear operator.
    pub fn matrix_operator(&self) -> ComplexOperator {
        ComplexOperator::from_matrix_unchecked(self.matrix.clone())
    }

    pub fn apply(&self, v: &CVector) -> CVector {
        &self.matrix * v.map(|z| z.conj())
    }

    /// `self ∘ first`, a linear operator with matrix `A_self·conj(A_first)`.
    pub fn compose(&self, first: &AntilinearOperator) -> ComplexOperator {
        ComplexOperator::from_matrix_unchecked(&self.matrix * first.matrix.map(|z| z.conj()))
    }

    /// `self ∘ L` for a linear `L`.
    pub fn after_linear(&self, l: &ComplexOperator) -> AntilinearOperator {
        Self::from_matrix_unchecked(&self.matrix * l.matrix().map(|z| z.conj()))
    }

    /// `L ∘ self` for a linear `L`.
    pub fn before_linear(&self, l: &ComplexOperator) -> AntilinearOperator {
        Self::from_matrix_unchecked(l.matrix() * &self.matrix)
    }

    /// Antilinear adjoint: matrix transpose.
    pub fn adjoint(&self) -> AntilinearOperator {
        Self::from_matrix_unchecked(self.matrix.transpose())
    }

    /// `λ·T`, i.e. `v ↦ λ·T(v)`.
    pub fn scale(&self, lambda: C64) -> AntilinearOperator {
        Self::from_matrix_unchecked(&self.matrix * lambda)
    }

    /// `U T U*` for a unitary `U`; the matrix becomes `U A Uᵀ`.
    pub fn conjugate_by(&self, u: &ComplexOperator) -> AntilinearOperator {
        Self::from_matrix_unchecked(u.matrix() * &self.matrix * u.matrix().transpose())
    }

    /// `T L T` for a linear `L`, which is again linear.
    pub fn sandwich(&self, l: &ComplexOperator) -> ComplexOperator {
        self.after_linear(l).compose(self)
    }

    /// `‖A·conj(A) − 1‖_F`.
    pub fn involution_defect(&self) -> f64 {
        let n = self.dim();
        (self.compose(self).into_matrix() - CMatrix::identity(n, n)).norm()
    }

    pub fn is_involution(&self, tol: f64) -> bool {
        self.involution_defect() <= tol * (self.dim() as f64).sqrt()
    }

    /// An antilinear map is antiunitary iff its matrix is unitary.
    pub fn is_antiunitary(&self, tol: f64) -> bool {
        self.matrix_operator().is_unitary(tol)
    }

    pub fn distance(&self, other: &AntilinearOperator) -> f64 {
        (&self.matrix - &other.matrix).norm()
    }
}

impl fmt::Debug for AntilinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AntilinearOperator{}", self.matrix)
    }
}

/// Polar decomposition `S = J Δ^{1/2}` of an antilinear involution.
///
/// `Δ = S*S` is computed from the antilinear adjoint. If `S` has matrix
/// `A = UΣV*`, then `S = (UV*∘conj)·conj(VΣV*)`, so `J` has matrix `UV*`.
/// Taking `J` from the singular value decomposition avoids forming
/// `Δ^{-1/2}`, whose condition number is the square of that of `A`.
pub fn polar_antilinear(s: &AntilinearOperator, tol: f64) -> Result<(AntilinearOperator, ComplexOperator)> {
    if !s.is_involution(tol) {
        return Err(Error::NotInvolution {
            residual: s.involution_defect(),
        });
    }
    let delta = s.adjoint().compose(s).hermitian_part();
    // positivity of Δ, with the same threshold as the spectral calculus
    hermitian_function(&delta, SpectralFunction::InverseSqrt, tol).map_err(|e| match e {
        Error::NotPositive { .. } => Error::Singular,
        other => other,
    })?;
    let svd = s.matrix().clone().svd(true, true);
    let (u, v_t) = (svd.u.ok_or(Error::Singular)?, svd.v_t.ok_or(Error::Singular)?);
    let j = AntilinearOperator::from_matrix_unchecked(u * v_t);
    Ok((j, delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, eigh};

    fn op(rows: &[[C64; 2]; 2]) -> ComplexOperator {
        ComplexOperator::from_rows(&[rows[0].to_vec(), rows[1].to_vec()]).unwrap()
    }

    #[test]
    fn conjugation_polar_is_trivial() {
        let s = AntilinearOperator::conjugation(3);
        let (j, d) = polar_antilinear(&s, 1e-9).unwrap();
        assert!(j.distance(&s) < 1e-14);
        assert!(d.distance(&ComplexOperator::identity(3)) < 1e-14);
    }

    #[test]
    fn off_diagonal_involution() {
        // S² = A conj(A) = [[0,1/2],[2,0]]² = 1, checked by hand
        let a = op(&[[c(0.0, 0.0), c(0.5, 0.0)], [c(2.0, 0.0), c(0.0, 0.0)]]);
        let s = AntilinearOperator::from_operator(&a);
        assert!(s.is_involution(1e-14));
        let (j, d) = polar_antilinear(&s, 1e-9).unwrap();
        assert!(d.distance(&ComplexOperator::real_diagonal(&[4.0, 0.25])) < 1e-12);
        let swap = op(&[[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]);
        assert!(j.distance(&AntilinearOperator::from_operator(&swap)) < 1e-12);
        // S = J Δ^{1/2}
        let half = hermitian_function(&d, SpectralFunction::Sqrt, 1e-9).unwrap();
        assert!(j.after_linear(&half).distance(&s) < 1e-12);
    }

    #[test]
    fn upper_triangular_involution() {
        let a = op(&[[c(1.0, 0.0), c(0.0, 2.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
        let s = AntilinearOperator::from_operator(&a);
        let (j, d) = polar_antilinear(&s, 1e-9).unwrap();
        // oracle: Δ = S*S with S* the transpose, multiplied out by hand
        let expected = op(&[[c(1.0, 0.0), c(0.0, -2.0)], [c(0.0, 2.0), c(5.0, 0.0)]]);
        assert!(d.distance(&expected) < 1e-12);
        let ev = eigh(&d, 1e-9).unwrap().values;
        let r = 2f64.sqrt();
        assert!((ev[0] - (3.0 - 2.0 * r)).abs() < 1e-12);
        assert!((ev[1] - (3.0 + 2.0 * r)).abs() < 1e-12);
        let inv = d.try_inverse().unwrap();
        assert!(j.sandwich(&d).distance(&inv) < 1e-10);
        assert!(j.is_antiunitary(1e-12));
        assert!(j.is_involution(1e-12));
    }

    #[test]
    fn non_involution_rejected() {
        let a = ComplexOperator::identity(2).scale(c(2.0, 0.0));
        let s = AntilinearOperator::from_operator(&a);
        assert!(matches!(polar_antilinear(&s, 1e-9), Err(Error::NotInvolution { .. })));
    }

    #[test]
    fn adjoint_matches_inner_product_definition() {
        let a = ComplexOperator::from_fn(3, |i, j| c(1.0 + i as f64, j as f64 - 0.3 * i as f64));
        let t = AntilinearOperator::from_operator(&a);
        let x = CVector::from_fn(3, |i, _| c(0.2 * i as f64, 1.0 - i as f64));
        let y = CVector::from_fn(3, |i, _| c(1.0 + i as f64, 0.5));
        let lhs = x.dotc(&t.apply(&y));
        let rhs = y.dotc(&t.adjoint().apply(&x));
        assert!((lhs - rhs).norm() < 1e-12);
    }
}
