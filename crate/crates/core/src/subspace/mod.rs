//! Real subspaces of `C^n` and the modular theory of standard subspaces.
//!
//! A real subspace `H` is standard when `H + iH = C^n` and `H ∩ iH = {0}`;
//! in finite dimension this means `dim_R H = n` with trivial intersection.
//! Standard subspaces are in bijection with antilinear involutions through
//! `H ↦ S_H` (the map `h + ik ↦ h − ik`) and `S ↦ ker(1 − S)`.
//!
//! ```
//! use modnet::subspace::StandardSubspace;
//! use modnet::linalg::CVector;
//! use modnet::C64;
//!
//! let basis = [
//!     CVector::from_column_slice(&[C64::new(1.0, 0.0), C64::new(0.0, 0.0)]),
//!     CVector::from_column_slice(&[C64::new(0.0, 1.0), C64::new(1.0, 0.0)]),
//! ];
//! let h = StandardSubspace::new(&basis, 1e-9).unwrap();
//! let spectrum = h.modular_spectrum();
//! assert!((spectrum[0] * spectrum[1] - 1.0).abs() < 1e-10);
//! ```

mod real;
mod standard;
mod takesaki;

use rand::Rng;

pub use real::{complexify, realify, realify_antilinear, realify_linear, RMatrix, RVector, RealSubspace};
pub use standard::{ModularResiduals, StandardSubspace, TransportCheck};
pub use takesaki::{takesaki_search, takesaki_test, TakesakiReport, TakesakiSearch};

use crate::linalg::{hermitian_function, AntilinearOperator, ComplexOperator, SpectralFunction};
use crate::random::random_modular_pair;
use crate::Result;

/// `ker(1 − S)` for `S` the antilinear involution.
pub fn subspace_from_involution(s: &AntilinearOperator, tol: f64) -> Result<StandardSubspace> {
    StandardSubspace::from_involution(s, tol)
}

/// `S = J Δ^{1/2}` from a modular pair.
pub fn tomita_from_pair(j: &AntilinearOperator, delta: &ComplexOperator, tol: f64) -> Result<AntilinearOperator> {
    let half = hermitian_function(delta, SpectralFunction::Sqrt, tol)?;
    Ok(j.after_linear(&half))
}

/// Random standard subspace of `C^n`: a random modular pair with
/// log-eigenvalues in `[-spread, spread]`, then `ker(1 − JΔ^{1/2})`.
pub fn random_standard_subspace<R: Rng + ?Sized>(n: usize, spread: f64, rng: &mut R) -> Result<StandardSubspace> {
    let (j, delta) = random_modular_pair(n, spread, rng);
    let s = tomita_from_pair(&j, &delta, 1e-9)?;
    StandardSubspace::from_involution(&s, 1e-9)
}
