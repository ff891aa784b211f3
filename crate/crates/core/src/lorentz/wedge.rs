//! Wedges `g·W_α` with `W_α = {x : |x₀| < x_α}`.
//!
//! A wedge is stored as a base axis and a covering-group element. Its normal
//! form lists the two future-pointing-or-past-pointing lightlike normals `v`
//! (scaled so `|v₀| = 1`) together with offsets `c`, so that
//! `W = {x : (v, x) < c for both pairs}`. Equality and complements are decided
//! on the normal form; sampling is only a cross-check.

use std::f64::consts::PI;

use nalgebra::Matrix4;
use rand::Rng;
use serde::Serialize;

use super::group::{covering_map, pauli, Axis, CoveringElement, FourVector, LorentzMatrix, SL2Element};
use crate::linalg::{CMatrix, C64};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalForm {
    pub normals: [FourVector; 2],
    pub offsets: [f64; 2],
}

impl NormalForm {
    /// Distance between normal forms, minimised over the pairing.
    pub fn distance(&self, other: &NormalForm) -> f64 {
        let d = |i: usize, j: usize| {
            self.normals[i].distance(&other.normals[j]) + (self.offsets[i] - other.offsets[j]).abs()
        };
        (d(0, 0) + d(1, 1)).min(d(0, 1) + d(1, 0))
    }

    pub fn contains(&self, x: &FourVector) -> bool {
        (0..2).all(|i| self.normals[i].dot(x) < self.offsets[i])
    }

    /// Causal complement: both half-spaces flipped.
    pub fn complement(&self) -> NormalForm {
        NormalForm {
            normals: self.normals.map(|v| -v),
            offsets: self.offsets.map(|c| -c),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Wedge {
    axis: Axis,
    element: CoveringElement,
}

impl Wedge {
    /// `W_α = {x : |x₀| < x_α}`.
    pub fn base(axis: Axis) -> Self {
        Self::new(axis, CoveringElement::identity())
    }

    /// `g·W_α`.
    pub fn new(axis: Axis, element: CoveringElement) -> Self {
        Self { axis, element }
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn element(&self) -> &CoveringElement {
        &self.element
    }

    /// The rotation by `π` taking `W_α` to its complement: `r_2(π)`, `r_3(π)`,
    /// `r_1(π)` for `α = 1, 2, 3`.
    pub fn base_reflection(axis: Axis) -> SL2Element {
        let about = match axis {
            Axis::X1 => Axis::X2,
            Axis::X2 => Axis::X3,
            Axis::X3 => Axis::X1,
        };
        SL2Element::rotation(about, PI)
    }

    pub fn normal_form(&self) -> NormalForm {
        let l = self.element.lorentz_matrix();
        let e = FourVector::spatial(self.axis);
        let make = |sign: f64| {
            let v = FourVector::new(sign, 0.0, 0.0, 0.0) + e;
            let w = l.apply(&v);
            let w = w.scale(1.0 / w.0[0].abs());
            (w, w.dot(&self.element.translation))
        };
        let (v1, c1) = make(1.0);
        let (v2, c2) = make(-1.0);
        NormalForm {
            normals: [v1, v2],
            offsets: [c1, c2],
        }
    }

    pub fn contains(&self, x: &FourVector) -> bool {
        if self.element == CoveringElement::identity() {
            let k = self.axis.index();
            return x.0[0].abs() < x.0[k];
        }
        self.normal_form().contains(x)
    }

    /// `W'`, realised as `g·r_α·W_α`.
    pub fn complement(&self) -> Wedge {
        let r = CoveringElement::from_sl2(Self::base_reflection(self.axis));
        Wedge::new(self.axis, self.element.compose(&r))
    }

    /// `h·W`.
    pub fn transform(&self, h: &CoveringElement) -> Wedge {
        Wedge::new(self.axis, h.compose(&self.element))
    }

    pub fn distance(&self, other: &Wedge) -> f64 {
        self.normal_form().distance(&other.normal_form())
    }

    pub fn same_as(&self, other: &Wedge, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    pub fn is_fixed_by(&self, h: &CoveringElement, tol: f64) -> bool {
        self.transform(h).same_as(self, tol)
    }

    /// `Λ_W(t) = g λ_α(t) g⁻¹`.
    pub fn fixing_boost(&self, t: f64) -> CoveringElement {
        self.element
            .conjugate(&CoveringElement::from_sl2(SL2Element::boost(self.axis, t)))
    }

    /// `r_W = g r_α g⁻¹`, which maps `W` onto `W'`.
    pub fn reflection_element(&self) -> CoveringElement {
        self.element
            .conjugate(&CoveringElement::from_sl2(Self::base_reflection(self.axis)))
    }

    pub fn stabilizer(&self) -> WedgeStabilizer {
        WedgeStabilizer {
            axis: self.axis,
            element: self.element.clone(),
        }
    }

    /// A point of `W` drawn from a bounded region of the base wedge.
    pub fn sample_interior<R: Rng + ?Sized>(&self, rng: &mut R) -> FourVector {
        let k = self.axis.index();
        let depth: f64 = rng.random_range(0.05..3.0);
        let mut x = [0.0; 4];
        x[0] = depth * rng.random_range(-0.95..0.95);
        x[k] = depth;
        for (i, xi) in x.iter_mut().enumerate().skip(1) {
            if i != k {
                *xi = rng.random_range(-3.0..3.0);
            }
        }
        self.element.act(&FourVector(x))
    }

    /// A point of the causal complement `W'`.
    pub fn sample_exterior<R: Rng + ?Sized>(&self, rng: &mut R) -> FourVector {
        self.complement().sample_interior(rng)
    }
}

/// Generators of the stabilizer `G_W` of a wedge `W = g·W_α`: rotations in
/// the edge plane, the fixing boosts, the central element `r(2π) = −1` and
/// translations along the edge, all conjugated by `g`.
#[derive(Clone, Debug)]
pub struct WedgeStabilizer {
    axis: Axis,
    element: CoveringElement,
}

impl WedgeStabilizer {
    pub fn rotation(&self, theta: f64) -> CoveringElement {
        self.element
            .conjugate(&CoveringElement::from_sl2(SL2Element::rotation(self.axis, theta)))
    }

    pub fn boost(&self, t: f64) -> CoveringElement {
        self.element
            .conjugate(&CoveringElement::from_sl2(SL2Element::boost(self.axis, t)))
    }

    pub fn central(&self) -> CoveringElement {
        CoveringElement::from_sl2(SL2Element::minus_one())
    }

    /// The two spatial directions spanning the edge of `W`.
    pub fn translation_directions(&self) -> [FourVector; 2] {
        let l = self.element.lorentz_matrix();
        let mut out = Axis::ALL
            .into_iter()
            .filter(|&a| a != self.axis)
            .map(|a| l.apply(&FourVector::spatial(a)));
        [out.next().unwrap(), out.next().unwrap()]
    }
}

/// The two `SL(2,C)`-level lifts `±σ₃` of the reflection
/// `j₃ : (x₀, x₁, x₂, x₃) ↦ (−x₀, x₁, x₂, −x₃)`. Both act on `SL(2,C)` by
/// `A ↦ σ₃ A σ₃`; they differ by the central element and are exchanged by
/// conjugation with `r_1(π)`. Callers choose one explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum J3Lift {
    Plus,
    Minus,
}

impl J3Lift {
    pub fn sign(self) -> f64 {
        match self {
            J3Lift::Plus => 1.0,
            J3Lift::Minus => -1.0,
        }
    }

    pub fn matrix(self) -> CMatrix {
        pauli(3) * C64::new(self.sign(), 0.0)
    }

    pub fn other(self) -> J3Lift {
        match self {
            J3Lift::Plus => J3Lift::Minus,
            J3Lift::Minus => J3Lift::Plus,
        }
    }

    /// `A ↦ s A s⁻¹` with `s = ±σ₃`.
    pub fn conjugate(self, a: &SL2Element) -> SL2Element {
        let s = self.matrix();
        SL2Element::from_matrix_unchecked(&s * a.matrix() * &s)
    }

    /// The Lorentz-matrix shadow `diag(−1, 1, 1, −1)`.
    pub fn lorentz_shadow() -> LorentzMatrix {
        LorentzMatrix(Matrix4::from_diagonal(&nalgebra::Vector4::new(-1.0, 1.0, 1.0, -1.0)))
    }

    /// The lift `g s g⁻¹` expressed as `±σ₃`, if it is one of them.
    pub fn conjugated_by(self, g: &SL2Element, tol: f64) -> Option<J3Lift> {
        let m = g.matrix() * self.matrix() * g.inverse().matrix();
        [J3Lift::Plus, J3Lift::Minus]
            .into_iter()
            .find(|l| (&m - l.matrix()).norm() <= tol)
    }

    /// `j₃ Λ(A) j₃` compared with `Λ(σ₃ A σ₃)`.
    pub fn shadow_residual(self, a: &SL2Element) -> f64 {
        let j = Self::lorentz_shadow();
        (j * covering_map(a) * j).distance(&covering_map(&self.conjugate(a)))
    }
}
