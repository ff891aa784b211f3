//! Real-linear subspaces of `C^n`, handled through the realification
//! `v ↦ (Re v, Im v) ∈ R^{2n}`. The real inner product `Re⟨u, v⟩` becomes the
//! Euclidean one, so projections and intersections are ordinary real linear
//! algebra.

use nalgebra::{DMatrix, DVector};

use crate::linalg::{nullspace, AntilinearOperator, CVector, ComplexOperator, C64};
use crate::{Error, Result};

pub type RMatrix = DMatrix<f64>;
pub type RVector = DVector<f64>;

/// `v ↦ (Re v, Im v)`.
pub fn realify(v: &CVector) -> RVector {
    let n = v.len();
    RVector::from_fn(2 * n, |i, _| if i < n { v[i].re } else { v[i - n].im })
}

/// Inverse of [`realify`].
pub fn complexify(x: &RVector) -> CVector {
    let n = x.len() / 2;
    CVector::from_fn(n, |i, _| C64::new(x[i], x[i + n]))
}

/// Real `2n × 2n` matrix of the linear map `v ↦ L v`.
pub fn realify_linear(l: &ComplexOperator) -> RMatrix {
    let n = l.dim();
    let m = l.matrix();
    RMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let (bi, ri) = (i / n, i % n);
        let (bj, rj) = (j / n, j % n);
        let z = m[(ri, rj)];
        match (bi, bj) {
            (0, 0) | (1, 1) => z.re,
            (0, 1) => -z.im,
            _ => z.im,
        }
    })
}

/// Real `2n × 2n` matrix of the antilinear map `v ↦ A·conj(v)`: for
/// `A = P + iQ` this is `[[P, Q], [Q, −P]]`.
pub fn realify_antilinear(t: &AntilinearOperator) -> RMatrix {
    let n = t.dim();
    let m = t.matrix();
    RMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let (bi, ri) = (i / n, i % n);
        let (bj, rj) = (j / n, j % n);
        let z = m[(ri, rj)];
        match (bi, bj) {
            (0, 0) => z.re,
            (1, 1) => -z.re,
            _ => z.im,
        }
    })
}

/// A real-linear subspace of `C^n`, stored by an orthonormal basis of its
/// realification.
#[derive(Clone, Debug)]
pub struct RealSubspace {
    ambient_dim: usize,
    /// `2n × k`, orthonormal columns.
    q: RMatrix,
}

impl RealSubspace {
    /// Subspace spanned by `vectors`, which must be real-linearly independent.
    pub fn new(ambient_dim: usize, vectors: &[CVector], tol: f64) -> Result<Self> {
        let s = Self::span(ambient_dim, vectors, tol)?;
        if s.dim_real() < vectors.len() {
            return Err(Error::RealDependent);
        }
        Ok(s)
    }

    /// Real span of arbitrary vectors; dependent vectors are allowed.
    pub fn span(ambient_dim: usize, vectors: &[CVector], tol: f64) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        let cols: Vec<RVector> = vectors.iter().map(realify).collect();
        Ok(Self::from_real_columns(ambient_dim, &cols, tol))
    }

    pub(crate) fn from_real_columns(ambient_dim: usize, cols: &[RVector], tol: f64) -> Self {
        let rows = 2 * ambient_dim;
        if cols.is_empty() {
            return Self::zero(ambient_dim);
        }
        let m = RMatrix::from_columns(cols);
        let svd = m.svd(true, false);
        let u = svd.u.expect("left singular vectors requested");
        let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
        let keep: Vec<RVector> = svd
            .singular_values
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > tol * smax && s > 0.0)
            .map(|(i, _)| u.column(i).into_owned())
            .collect();
        let q = if keep.is_empty() {
            RMatrix::zeros(rows, 0)
        } else {
            RMatrix::from_columns(&keep)
        };
        Self { ambient_dim, q }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            q: RMatrix::zeros(2 * ambient_dim, 0),
        }
    }

    /// All of `C^n` viewed as a real space of dimension `2n`.
    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            q: RMatrix::identity(2 * ambient_dim, 2 * ambient_dim),
        }
    }

    /// `R^n ⊂ C^n`.
    pub fn real_form(ambient_dim: usize) -> Self {
        let q = RMatrix::from_fn(2 * ambient_dim, ambient_dim, |i, j| if i == j { 1.0 } else { 0.0 });
        Self { ambient_dim, q }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim_real(&self) -> usize {
        self.q.ncols()
    }

    /// Orthonormal real basis as complex vectors.
    pub fn basis(&self) -> Vec<CVector> {
        self.q.column_iter().map(|c| complexify(&c.into_owned())).collect()
    }

    pub fn realified_basis(&self) -> &RMatrix {
        &self.q
    }

    /// Real orthogonal projection onto the realified subspace.
    pub fn projector(&self) -> RMatrix {
        &self.q * self.q.transpose()
    }

    /// Distance from `v` to the subspace.
    pub fn residual(&self, v: &CVector) -> f64 {
        let x = realify(v);
        let proj = &self.q * (self.q.transpose() * &x);
        (x - proj).norm()
    }

    pub fn contains(&self, v: &CVector, tol: f64) -> bool {
        self.residual(v) <= tol * v.norm().max(1.0)
    }

    /// Frobenius distance between projectors; zero iff the subspaces agree.
    pub fn distance(&self, other: &RealSubspace) -> f64 {
        (self.projector() - other.projector()).norm()
    }

    pub fn equals(&self, other: &RealSubspace, tol: f64) -> bool {
        self.ambient_dim == other.ambient_dim && self.distance(other) <= tol
    }

    /// Largest residual of an orthonormal basis vector of `self` against `other`.
    pub fn containment_residual(&self, other: &RealSubspace) -> f64 {
        let diff = &self.q - other.projector() * &self.q;
        diff.column_iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_subspace_of(&self, other: &RealSubspace, tol: f64) -> bool {
        self.containment_residual(other) <= tol
    }

    pub fn sum(&self, other: &RealSubspace, tol: f64) -> RealSubspace {
        let cols: Vec<RVector> = self
            .q
            .column_iter()
            .chain(other.q.column_iter())
            .map(|c| c.into_owned())
            .collect();
        Self::from_real_columns(self.ambient_dim, &cols, tol)
    }

    /// Intersection computed from the kernel of `[Q_a, −Q_b]`.
    pub fn intersection(&self, other: &RealSubspace, tol: f64) -> RealSubspace {
        let (ka, kb) = (self.dim_real(), other.dim_real());
        if ka == 0 || kb == 0 {
            return Self::zero(self.ambient_dim);
        }
        let mut m = RMatrix::zeros(2 * self.ambient_dim, ka + kb);
        m.columns_mut(0, ka).copy_from(&self.q);
        m.columns_mut(ka, kb).copy_from(&(-&other.q));
        // both blocks have orthonormal columns, so σ_max ≥ 1 and the cut is absolute
        let report = nullspace(&m, tol);
        let cols: Vec<RVector> = report
            .basis
            .iter()
            .map(|c| &self.q * c.rows(0, ka))
            .collect();
        Self::from_real_columns(self.ambient_dim, &cols, tol)
    }

    /// Orthogonal complement for the real inner product `Re⟨·,·⟩`.
    pub fn orthogonal_complement(&self, tol: f64) -> RealSubspace {
        if self.dim_real() == 0 {
            return Self::full(self.ambient_dim);
        }
        let report = nullspace(&self.q.transpose(), tol);
        Self::from_real_columns(self.ambient_dim, &report.basis, tol)
    }

    /// `iK`.
    pub fn times_i(&self) -> RealSubspace {
        let n = self.ambient_dim;
        let mut q = RMatrix::zeros(2 * n, self.dim_real());
        q.rows_mut(0, n).copy_from(&(-self.q.rows(n, n)));
        q.rows_mut(n, n).copy_from(&self.q.rows(0, n));
        Self { ambient_dim: n, q }
    }

    /// Symplectic complement `K' = {ξ : Im⟨ξ, η⟩ = 0 ∀η ∈ K} = (iK)^⊥`.
    pub fn symplectic_complement(&self, tol: f64) -> RealSubspace {
        self.times_i().orthogonal_complement(tol)
    }

    /// Image under a linear operator.
    pub fn image(&self, l: &ComplexOperator, tol: f64) -> RealSubspace {
        let r = realify_linear(l);
        let cols: Vec<RVector> = (&r * &self.q).column_iter().map(|c| c.into_owned()).collect();
        Self::from_real_columns(self.ambient_dim, &cols, tol)
    }

    /// Image under an antilinear operator.
    pub fn image_antilinear(&self, t: &AntilinearOperator, tol: f64) -> RealSubspace {
        let r = realify_antilinear(t);
        let cols: Vec<RVector> = (&r * &self.q).column_iter().map(|c| c.into_owned()).collect();
        Self::from_real_columns(self.ambient_dim, &cols, tol)
    }

    /// `K + iK`, as a real subspace.
    pub fn complex_span(&self, tol: f64) -> RealSubspace {
        self.sum(&self.times_i(), tol)
    }

    /// Complex dimension of `K + iK`.
    pub fn complex_span_dim(&self, tol: f64) -> usize {
        self.complex_span(tol).dim_real() / 2
    }

    /// `K + iK = C^n`.
    pub fn is_cyclic(&self, tol: f64) -> bool {
        self.complex_span_dim(tol) == self.ambient_dim
    }

    /// `K ∩ iK = {0}`.
    pub fn is_separating(&self, tol: f64) -> bool {
        self.intersection(&self.times_i(), tol).dim_real() == 0
    }

    /// Cyclic and separating.
    pub fn is_standard(&self, tol: f64) -> bool {
        self.is_cyclic(tol) && self.is_separating(tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    fn v(entries: &[C64]) -> CVector {
        CVector::from_column_slice(entries)
    }

    #[test]
    fn realification_round_trip() {
        let x = v(&[c(1.0, 2.0), c(-3.0, 0.5)]);
        assert_eq!(complexify(&realify(&x)), x);
    }

    #[test]
    fn realified_maps_agree_with_complex_action() {
        let a = ComplexOperator::from_fn(3, |i, j| c(i as f64 - j as f64, 0.5 * (i * j) as f64 + 0.1));
        let t = AntilinearOperator::from_operator(&a);
        let x = v(&[c(0.3, -1.0), c(2.0, 0.25), c(-0.5, 0.5)]);
        assert!((realify_linear(&a) * realify(&x) - realify(&a.apply(&x))).norm() < 1e-12);
        assert!((realify_antilinear(&t) * realify(&x) - realify(&t.apply(&x))).norm() < 1e-12);
    }

    #[test]
    fn dependence_detected() {
        let a = v(&[c(1.0, 0.0), c(0.0, 0.0)]);
        let b = v(&[c(2.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(RealSubspace::new(2, &[a.clone(), b], 1e-9), Err(Error::RealDependent)));
        // a and i·a are real-independent
        let ia = a.map(|z| z * c(0.0, 1.0));
        assert_eq!(RealSubspace::new(2, &[a, ia], 1e-9).unwrap().dim_real(), 2);
    }

    #[test]
    fn real_form_is_its_own_complement() {
        let r = RealSubspace::real_form(3);
        assert!(r.symplectic_complement(1e-9).equals(&r, 1e-12));
    }

    #[test]
    fn zero_complement_is_everything() {
        let z = RealSubspace::zero(2);
        assert_eq!(z.symplectic_complement(1e-9).dim_real(), 4);
    }

    #[test]
    fn intersection_of_axes() {
        let a = RealSubspace::new(2, &[v(&[c(1.0, 0.0), c(0.0, 0.0)]), v(&[c(0.0, 0.0), c(1.0, 0.0)])], 1e-9).unwrap();
        let b = RealSubspace::new(2, &[v(&[c(1.0, 0.0), c(1.0, 0.0)]), v(&[c(0.0, 1.0), c(0.0, 0.0)])], 1e-9).unwrap();
        let i = a.intersection(&b, 1e-9);
        assert_eq!(i.dim_real(), 1);
        assert!(i.contains(&v(&[c(1.0, 0.0), c(1.0, 0.0)]), 1e-12));
    }

    #[test]
    fn cyclic_and_separating_flags() {
        let r = RealSubspace::real_form(2);
        assert!(r.is_standard(1e-9));
        let half = RealSubspace::new(2, &[v(&[c(1.0, 0.0), c(0.0, 0.0)])], 1e-9).unwrap();
        assert!(!half.is_cyclic(1e-9));
        assert!(half.is_separating(1e-9));
        let complex_line = RealSubspace::new(2, &[v(&[c(1.0, 0.0), c(0.0, 0.0)]), v(&[c(0.0, 1.0), c(0.0, 0.0)])], 1e-9).unwrap();
        assert!(!complex_line.is_separating(1e-9));
    }
}
