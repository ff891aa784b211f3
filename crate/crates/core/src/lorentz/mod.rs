//! Minkowski geometry, `SL(2,C)` and wedges.
//!
//! Conventions: the metric is `(x, y) = x₀y₀ − Σ xᵢyᵢ`; Pauli matrices are
//! `σ₁ = [[0,1],[1,0]]`, `σ₂ = [[0,−i],[i,0]]`, `σ₃ = [[1,0],[0,−1]]`; a
//! four-vector `p` corresponds to `p̃ = p₀·1 + Σ pᵢσᵢ` and `A ∈ SL(2,C)` acts by
//! `p̃ ↦ A p̃ A*`. Boosts are `λ_j(t) = exp(σ_j t/2)` and rotations
//! `r_j(θ) = exp(iσ_j θ/2)`.
//!
//! With these conventions `r_3(θ)` turns the `(x₁, x₂)` plane clockwise:
//! `x₁ + i x₂ ↦ e^{−iθ}(x₁ + i x₂)`.
//!
//! ```
//! use modnet::lorentz::{boost, Axis, FourVector};
//!
//! let (_, l) = boost(Axis::X1, 0.5);
//! let x = l.apply(&FourVector::new(1.0, 0.0, 0.0, 0.0));
//! assert!((x.0[0] - 0.5f64.cosh()).abs() < 1e-14);
//! assert!((x.0[1] - 0.5f64.sinh()).abs() < 1e-14);
//! ```

mod group;
mod wedge;

pub use group::{
    boost, covering_map, pauli, rotation, tilde, untilde, Axis, CoveringElement, FourVector, LorentzMatrix,
    SL2Element,
};
pub use wedge::{J3Lift, NormalForm, Wedge, WedgeStabilizer};
