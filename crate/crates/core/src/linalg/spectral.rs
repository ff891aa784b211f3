//! Spectral calculus for Hermitian operators.
//!
//! Functions are applied through eigenprojections: eigenvalues closer than a
//! small relative threshold are merged into one cluster and the function is
//! evaluated once on the cluster mean. The result therefore does not depend
//! on how the eigensolver picked a basis inside a degenerate eigenspace.

use super::{CMatrix, ComplexOperator, C64};
use crate::{Error, Result};

/// Relative width below which neighbouring eigenvalues share a projection.
const CLUSTER_WIDTH: f64 = 1e-12;

/// Scalar functions accepted by [`hermitian_function`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SpectralFunction {
    Sqrt,
    InverseSqrt,
    Exp,
    Log,
    /// `λ ↦ λ^{it}`, defined for positive spectrum.
    PowerIt(f64),
    /// Indicator of the closed interval `[lo, hi]` times the identity: keeps
    /// `λ` when it lies in the interval, zero otherwise.
    SpectralRestrict { lo: f64, hi: f64 },
}

impl SpectralFunction {
    fn needs_positive(self) -> bool {
        matches!(
            self,
            SpectralFunction::InverseSqrt | SpectralFunction::Log | SpectralFunction::PowerIt(_)
        )
    }

    fn needs_nonnegative(self) -> bool {
        matches!(self, SpectralFunction::Sqrt)
    }

    fn eval(self, x: f64) -> C64 {
        match self {
            SpectralFunction::Sqrt => C64::new(x.max(0.0).sqrt(), 0.0),
            SpectralFunction::InverseSqrt => C64::new(1.0 / x.sqrt(), 0.0),
            SpectralFunction::Exp => C64::new(x.exp(), 0.0),
            SpectralFunction::Log => C64::new(x.ln(), 0.0),
            SpectralFunction::PowerIt(t) => C64::from_polar(1.0, t * x.ln()),
            SpectralFunction::SpectralRestrict { lo, hi } => {
                if x >= lo && x <= hi {
                    C64::new(x, 0.0)
                } else {
                    C64::new(0.0, 0.0)
                }
            }
        }
    }
}

/// Eigendecomposition of a Hermitian operator, eigenvalues ascending.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors as columns, in the order of `values`.
    pub vectors: CMatrix,
}

impl HermitianEigen {
    /// Groups of column indices whose eigenvalues agree within
    /// `width·max(1, max|λ|)`.
    pub fn clusters(&self, width: f64) -> Vec<Vec<usize>> {
        let scale = self
            .values
            .iter()
            .fold(1.0f64, |acc, v| acc.max(v.abs()));
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (i, &v) in self.values.iter().enumerate() {
            match out.last_mut() {
                Some(group) if (v - self.values[*group.last().unwrap()]).abs() <= width * scale => {
                    group.push(i)
                }
                _ => out.push(vec![i]),
            }
        }
        out
    }

    /// Applies `f` through eigenprojections.
    pub fn apply(&self, mut f: impl FnMut(f64) -> C64) -> ComplexOperator {
        let n = self.vectors.nrows();
        let mut acc = CMatrix::zeros(n, n);
        for group in self.clusters(CLUSTER_WIDTH) {
            let mean = group.iter().map(|&i| self.values[i]).sum::<f64>() / group.len() as f64;
            let fv = f(mean);
            if fv == C64::new(0.0, 0.0) {
                continue;
            }
            let cols = CMatrix::from_fn(n, group.len(), |r, k| self.vectors[(r, group[k])]);
            acc += (&cols * cols.adjoint()) * fv;
        }
        ComplexOperator::from_matrix_unchecked(acc)
    }
}

/// Eigendecomposition of the Hermitian part of `x`; errors if `x` is not
/// Hermitian within `tol`.
pub fn eigh(x: &ComplexOperator, tol: f64) -> Result<HermitianEigen> {
    x.ensure_hermitian(tol)?;
    let h = x.hermitian_part().into_matrix();
    let eig = h.symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let n = eig.eigenvectors.nrows();
    let vectors = CMatrix::from_fn(n, n, |r, k| eig.eigenvectors[(r, order[k])]);
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    Ok(HermitianEigen { values, vectors })
}

/// `V f(λ) V*` for Hermitian `x`.
pub fn hermitian_function(x: &ComplexOperator, f: SpectralFunction, tol: f64) -> Result<ComplexOperator> {
    let eig = eigh(x, tol)?;
    let scale = eig.values.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let smallest = eig.values.first().copied().unwrap_or(0.0);
    // Absolute above scale 1, relative below it; never under the eigensolver's
    // roundoff level. Modular operators have inverse-paired spectra, so a
    // purely relative test would reject well-posed but ill-conditioned ones.
    let roundoff = 8.0 * f64::EPSILON * x.dim() as f64 * scale;
    if f.needs_positive() && smallest <= (tol * scale.min(1.0)).max(roundoff) {
        return Err(Error::NotPositive { smallest });
    }
    if f.needs_nonnegative() && smallest < -tol * scale.max(1.0) {
        return Err(Error::NotPositive { smallest });
    }
    Ok(eig.apply(|x| f.eval(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn inverse_sqrt_accepts_inverse_paired_spectra() {
        let x = ComplexOperator::real_diagonal(&[1e-5, 1e5]);
        let r = hermitian_function(&x, SpectralFunction::InverseSqrt, 1e-9).unwrap();
        assert!((r.entry(0, 0).re - 1e-5f64.powf(-0.5)).abs() < 1e-9);
        let roundoff = ComplexOperator::real_diagonal(&[1e-13, 1e5]);
        assert!(hermitian_function(&roundoff, SpectralFunction::InverseSqrt, 1e-9).is_err());
    }

    #[test]
    fn sqrt_of_diagonal() {
        let x = ComplexOperator::real_diagonal(&[4.0, 0.25]);
        let r = hermitian_function(&x, SpectralFunction::Sqrt, 1e-9).unwrap();
        assert!(r.distance(&ComplexOperator::real_diagonal(&[2.0, 0.5])) < 1e-14);
    }

    #[test]
    fn power_it_is_periodic() {
        let x = ComplexOperator::real_diagonal(&[(2.0 * PI).exp(), (-2.0 * PI).exp()]);
        let r = hermitian_function(&x, SpectralFunction::PowerIt(1.0), 1e-9).unwrap();
        assert!(r.distance(&ComplexOperator::identity(2)) < 1e-12);
        assert!(r.is_unitary(1e-12));
    }

    #[test]
    fn spectral_restriction_filters_eigenvalues() {
        let x = ComplexOperator::real_diagonal(&[4.0, 0.25]);
        let r = hermitian_function(&x, SpectralFunction::SpectralRestrict { lo: 0.0, hi: 1.0 }, 1e-9).unwrap();
        assert!(r.distance(&ComplexOperator::real_diagonal(&[0.0, 0.25])) < 1e-14);
    }

    #[test]
    fn log_rejects_nonpositive() {
        let x = ComplexOperator::real_diagonal(&[1.0, -1.0]);
        assert!(matches!(
            hermitian_function(&x, SpectralFunction::Log, 1e-9),
            Err(Error::NotPositive { .. })
        ));
        let z = ComplexOperator::real_diagonal(&[1.0, 0.0]);
        assert!(hermitian_function(&z, SpectralFunction::InverseSqrt, 1e-9).is_err());
    }

    #[test]
    fn non_hermitian_rejected() {
        let x = ComplexOperator::from_rows(&[
            vec![C64::new(1.0, 0.0), C64::new(1.0, 0.0)],
            vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0)],
        ])
        .unwrap();
        assert!(matches!(
            hermitian_function(&x, SpectralFunction::Exp, 1e-9),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn degenerate_spectrum_is_basis_independent() {
        // identity has every basis as eigenbasis; f(1)·1 must come back exactly
        let x = ComplexOperator::identity(4).scale(C64::new(2.0, 0.0));
        let r = hermitian_function(&x, SpectralFunction::Log, 1e-9).unwrap();
        let expected = ComplexOperator::identity(4).scale(C64::new(2f64.ln(), 0.0));
        assert!(r.distance(&expected) < 1e-14);
    }
}
