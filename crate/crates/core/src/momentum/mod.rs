//! Mass shells, orbit coordinates and finite orbit models.
//!
//! On the mass shell `Ω_m = {p : p² = m², p₀ > 0}` the stabilizer of the
//! wedge `W₃` (rotations about `x₃`, boosts along `x₃`) has orbits labelled
//! by `r = p₁² + p₂²`. A point is described by `(r, θ, t)` with
//! `(p₁, p₂) = √r (cos θ, sin θ)` and `(p₀, p₃) = √(r + m²)(cosh t, sinh t)`.
//!
//! The reflection `R₁(π)p = (p₀, p₁, −p₂, −p₃)` stays inside the orbit of `p`:
//! [`reflect_decompose`] returns the rotation angle and boost rapidity that
//! realise it.

mod mc;
mod model;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::lorentz::{boost, rotation, Axis, FourVector};
use crate::{Error, Result};

pub use mc::{
    direct_sum_mc, masa_check, mc_check, DirectSumReport, MasaReport, McReport, McVerdict, Representation,
};
pub use model::{borchers_check, BorchersReport, GroupElement, ModelSpec, OrbitModel, OrbitSpec, Sample};

/// A momentum on the positive mass shell.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MassShellPoint {
    mass: f64,
    momentum: FourVector,
}

impl MassShellPoint {
    /// Completes `p⃗` with `p₀ = √(m² + |p⃗|²)`.
    pub fn new(mass: f64, spatial: [f64; 3]) -> Result<Self> {
        if !(mass >= 0.0) || !mass.is_finite() {
            return Err(Error::OffShell(format!("mass must be non-negative, got {mass}")));
        }
        let p0 = (mass * mass + spatial.iter().map(|x| x * x).sum::<f64>()).sqrt();
        if mass == 0.0 && p0 == 0.0 {
            return Err(Error::OffShell("zero momentum".into()));
        }
        Ok(Self {
            mass,
            momentum: FourVector::new(p0, spatial[0], spatial[1], spatial[2]),
        })
    }

    /// Validates a full four-momentum.
    pub fn from_four_vector(mass: f64, p: FourVector, tol: f64) -> Result<Self> {
        let shell = p.square() - mass * mass;
        if p.0[0] <= 0.0 || shell.abs() > tol * p.0[0].powi(2).max(1.0) {
            return Err(Error::OffShell(format!("p² − m² = {shell:.3e}, p₀ = {}", p.0[0])));
        }
        Ok(Self { mass, momentum: p })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn momentum(&self) -> FourVector {
        self.momentum
    }

    fn on_null_axis(&self) -> bool {
        let p = self.momentum.0;
        self.mass == 0.0 && p[1] == 0.0 && p[2] == 0.0
    }
}

/// Orbit label `r = p₁² + p₂²`, angle `θ ∈ [0, 2π)` and rapidity `t`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrbitCoordinates {
    pub r: f64,
    pub theta: f64,
    pub t: f64,
}

pub fn orbit_coordinates(p: &MassShellPoint) -> Result<OrbitCoordinates> {
    if p.on_null_axis() {
        return Err(Error::ExcludedNullOrbit);
    }
    let [p0, p1, p2, p3] = p.momentum.0;
    let r = p1 * p1 + p2 * p2;
    let theta = if r == 0.0 { 0.0 } else { p2.atan2(p1).rem_euclid(2.0 * PI) };
    Ok(OrbitCoordinates {
        r,
        theta,
        t: (p3 / p0).atanh(),
    })
}

/// Inverse of [`orbit_coordinates`].
pub fn from_orbit_coordinates(mass: f64, c: &OrbitCoordinates) -> FourVector {
    let rho = c.r.sqrt();
    let e = (c.r + mass * mass).sqrt();
    FourVector::new(e * c.t.cosh(), rho * c.theta.cos(), rho * c.theta.sin(), e * c.t.sinh())
}

/// Parameters `(t_p, θ_p)` with `Λ₃(t_p) R₃(θ_p) p = R₁(π) p`.
///
/// `R₃(θ)` is the Lorentz image of `r₃(θ)`, which turns `p₁ + ip₂` into
/// `e^{−iθ}(p₁ + ip₂)`; reflecting `p₂` therefore takes `θ_p = 2·atan2(p₂, p₁)`,
/// reported in `(−π, π]`. The boost then flips `p₃` at fixed `p₀`, which
/// needs `tanh(t_p/2) = −p₃/p₀`. When `p₁ = p₂ = 0` any angle works and
/// `θ_p = 0` is returned.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReflectionDecomposition {
    pub t_p: f64,
    pub theta_p: f64,
}

pub fn reflect_decompose(p: &MassShellPoint) -> Result<ReflectionDecomposition> {
    if p.on_null_axis() {
        return Err(Error::ExcludedNullOrbit);
    }
    let [p0, p1, p2, p3] = p.momentum.0;
    let theta_p = if p1 == 0.0 && p2 == 0.0 {
        0.0
    } else {
        normalize_angle(2.0 * p2.atan2(p1))
    };
    Ok(ReflectionDecomposition {
        // adding 0.0 maps −0 to 0
        t_p: -2.0 * (p3 / p0).atanh() + 0.0,
        theta_p,
    })
}

impl ReflectionDecomposition {
    /// `‖Λ₃(t_p) R₃(θ_p) p − R₁(π) p‖`.
    pub fn residual(&self, p: &MassShellPoint) -> f64 {
        let (_, r) = rotation(Axis::X3, self.theta_p);
        let (_, b) = boost(Axis::X3, self.t_p);
        let [p0, p1, p2, p3] = p.momentum.0;
        (b * r).apply(&p.momentum).distance(&FourVector::new(p0, p1, -p2, -p3))
    }
}

/// Maps an angle into `(−π, π]`.
pub fn normalize_angle(x: f64) -> f64 {
    let y = x.rem_euclid(2.0 * PI);
    if y > PI {
        y - 2.0 * PI
    } else {
        y
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::{boost, rotation, Axis};

    fn reflected(p: &FourVector) -> FourVector {
        FourVector::new(p.0[0], p.0[1], -p.0[2], -p.0[3])
    }

    fn residual(p: &MassShellPoint) -> f64 {
        let d = reflect_decompose(p).unwrap();
        let (_, rot) = rotation(Axis::X3, d.theta_p);
        let (_, b) = boost(Axis::X3, d.t_p);
        (b * rot).apply(&p.momentum()).distance(&reflected(&p.momentum()))
    }

    #[test]
    fn rest_frame() {
        let p = MassShellPoint::new(1.0, [0.0, 0.0, 0.0]).unwrap();
        let c = orbit_coordinates(&p).unwrap();
        assert_eq!((c.r, c.theta, c.t), (0.0, 0.0, 0.0));
        let d = reflect_decompose(&p).unwrap();
        assert_eq!((d.t_p, d.theta_p), (0.0, 0.0));
    }

    #[test]
    fn transverse_unit_momentum() {
        let p = MassShellPoint::new(1.0, [1.0, 0.0, 0.0]).unwrap();
        let c = orbit_coordinates(&p).unwrap();
        assert!((c.r - 1.0).abs() < 1e-15 && c.theta == 0.0 && c.t == 0.0);
        assert!(from_orbit_coordinates(1.0, &c).distance(&p.momentum()) < 1e-12);
    }

    #[test]
    fn null_axis_excluded() {
        let p = MassShellPoint::new(0.0, [0.0, 0.0, 1.0]).unwrap();
        assert_eq!(orbit_coordinates(&p), Err(Error::ExcludedNullOrbit));
        assert_eq!(reflect_decompose(&p), Err(Error::ExcludedNullOrbit));
    }

    #[test]
    fn diagonal_transverse_momentum() {
        let p = MassShellPoint::new(1.0, [1.0, 1.0, 0.0]).unwrap();
        assert!((p.momentum().0[0] - 3f64.sqrt()).abs() < 1e-15);
        let d = reflect_decompose(&p).unwrap();
        // r₃(θ) turns the transverse plane clockwise, so (1, 1) ↦ (1, −1) needs +π/2
        assert!((d.theta_p - PI / 2.0).abs() < 1e-15);
        assert_eq!(d.t_p, 0.0);
        assert!(residual(&p) < 1e-12);
    }

    #[test]
    fn massless_boost_flip() {
        let p = MassShellPoint::new(0.0, [1.0, 0.0, 1.0]).unwrap();
        let d = reflect_decompose(&p).unwrap();
        assert_eq!(d.theta_p, 0.0);
        assert!((d.t_p + 2.0 * (1.0 / 2f64.sqrt()).atanh()).abs() < 1e-14);
        assert!(residual(&p) < 1e-12);
    }
}
