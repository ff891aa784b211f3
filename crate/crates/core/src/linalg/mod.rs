//! Dense complex linear algebra.
//!
//! Everything here works on small dense matrices (dimension up to a few
//! dozen). Antilinear operators are stored by a matrix `A` acting as
//! `v ↦ A·conj(v)`, so composition and adjoints stay ordinary matrix algebra.

mod antilinear;
mod commutant;
mod nullspace;
mod operator;
mod spectral;

pub use antilinear::{polar_antilinear, AntilinearOperator};
pub use commutant::{commutant, CommutantReport};
pub use nullspace::{nullspace, NullspaceReport, GAP_RATIO};
pub use operator::{CMatrix, CVector, ComplexOperator};
pub use spectral::{eigh, hermitian_function, HermitianEigen, SpectralFunction};

pub use num_complex::Complex64 as C64;

/// Relative tolerance used when a caller does not supply one.
pub const DEFAULT_TOL: f64 = 1e-9;

#[cfg(test)]
pub(crate) fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
