use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector};

use super::C64;
use crate::{Error, Result};

pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

/// A square complex matrix acting linearly on `C^n`.
#[derive(Clone, PartialEq)]
pub struct ComplexOperator {
    matrix: CMatrix,
}

impl ComplexOperator {
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
        debug_assert_eq!(matrix.nrows(), matrix.ncols());
        Self { matrix }
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> C64) -> Self {
        Self::from_matrix_unchecked(CMatrix::from_fn(dim, dim, f))
    }

    /// Builds an operator from row-major entries.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare {
                rows: n,
                cols: rows.first().map_or(0, Vec::len),
            });
        }
        Self::new(CMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_matrix_unchecked(CMatrix::identity(dim, dim))
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_matrix_unchecked(CMatrix::zeros(dim, dim))
    }

    pub fn diagonal(entries: &[C64]) -> Self {
        Self::from_matrix_unchecked(CMatrix::from_diagonal(&CVector::from_column_slice(entries)))
    }

    pub fn real_diagonal(entries: &[f64]) -> Self {
        let d: Vec<C64> = entries.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::diagonal(&d)
    }

    /// Permutation operator sending basis vector `e_j` to `e_{image[j]}`.
    pub fn permutation(image: &[usize]) -> Self {
        let n = image.len();
        let mut m = CMatrix::zeros(n, n);
        for (j, &i) in image.iter().enumerate() {
            m[(i, j)] = C64::new(1.0, 0.0);
        }
        Self::from_matrix_unchecked(m)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.matrix[(i, j)]
    }

    pub fn adjoint(&self) -> Self {
        Self::from_matrix_unchecked(self.matrix.adjoint())
    }

    pub fn conjugate(&self) -> Self {
        Self::from_matrix_unchecked(self.matrix.map(|z| z.conj()))
    }

    pub fn transpose(&self) -> Self {
        Self::from_matrix_unchecked(self.matrix.transpose())
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::from_matrix_unchecked(&self.matrix * s)
    }

    pub fn apply(&self, v: &CVector) -> CVector {
        &self.matrix * v
    }

    pub fn trace(&self) -> C64 {
        self.matrix.trace()
    }

    pub fn determinant(&self) -> C64 {
        self.matrix.determinant()
    }

    pub fn try_inverse(&self) -> Result<Self> {
        self.matrix
            .clone()
            .try_inverse()
            .map(Self::from_matrix_unchecked)
            .ok_or(Error::Singular)
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        Self::from_matrix_unchecked(&self.matrix * &other.matrix - &other.matrix * &self.matrix)
    }

    /// `U X U*`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        Self::from_matrix_unchecked(&u.matrix * &self.matrix * u.matrix.adjoint())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.matrix.norm()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (&self.matrix - &other.matrix).norm()
    }

    /// `‖X − X*‖_F`.
    pub fn hermiticity_defect(&self) -> f64 {
        (&self.matrix - self.matrix.adjoint()).norm()
    }

    /// `‖U*U − 1‖_F`.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.dim();
        (self.matrix.adjoint() * &self.matrix - CMatrix::identity(n, n)).norm()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol * self.frobenius_norm().max(1.0)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol * (self.dim() as f64).sqrt()
    }

    pub fn ensure_hermitian(&self, tol: f64) -> Result<()> {
        if self.is_hermitian(tol) {
            Ok(())
        } else {
            Err(Error::NotHermitian {
                residual: self.hermiticity_defect(),
            })
        }
    }

    pub fn ensure_unitary(&self, tol: f64) -> Result<()> {
        if self.is_unitary(tol) {
            Ok(())
        } else {
            Err(Error::NotUnitary {
                residual: self.unitarity_defect(),
            })
        }
    }

    /// `(X + X*)/2`.
    pub fn hermitian_part(&self) -> Self {
        Self::from_matrix_unchecked((&self.matrix + self.matrix.adjoint()) * C64::new(0.5, 0.0))
    }

    pub fn kron(&self, other: &Self) -> Self {
        Self::from_matrix_unchecked(self.matrix.kronecker(&other.matrix))
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.dim(), other.dim());
        let mut m = CMatrix::zeros(a + b, a + b);
        m.view_mut((0, 0), (a, a)).copy_from(&self.matrix);
        m.view_mut((a, a), (b, b)).copy_from(&other.matrix);
        Self::from_matrix_unchecked(m)
    }

    pub fn block_diagonal(blocks: &[Self]) -> Result<Self> {
        let mut iter = blocks.iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::Invalid("empty block list".into()))?
            .clone();
        Ok(iter.fold(first, |acc, b| acc.direct_sum(b)))
    }

    /// `U^k` for non-negative `k`.
    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::identity(self.dim());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl fmt::Debug for ComplexOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexOperator{}", self.matrix)
    }
}

impl<'a> Mul<&'a ComplexOperator> for &'a ComplexOperator {
    type Output = ComplexOperator;
    fn mul(self, rhs: &'a ComplexOperator) -> ComplexOperator {
        ComplexOperator::from_matrix_unchecked(&self.matrix * &rhs.matrix)
    }
}

impl Mul for ComplexOperator {
    type Output = ComplexOperator;
    fn mul(self, rhs: ComplexOperator) -> ComplexOperator {
        &self * &rhs
    }
}

impl<'a> Add<&'a ComplexOperator> for &'a ComplexOperator {
    type Output = ComplexOperator;
    fn add(self, rhs: &'a ComplexOperator) -> ComplexOperator {
        ComplexOperator::from_matrix_unchecked(&self.matrix + &rhs.matrix)
    }
}

impl<'a> Sub<&'a ComplexOperator> for &'a ComplexOperator {
    type Output = ComplexOperator;
    fn sub(self, rhs: &'a ComplexOperator) -> ComplexOperator {
        ComplexOperator::from_matrix_unchecked(&self.matrix - &rhs.matrix)
    }
}

impl Neg for &ComplexOperator {
    type Output = ComplexOperator;
    fn neg(self) -> ComplexOperator {
        ComplexOperator::from_matrix_unchecked(-&self.matrix)
    }
}
