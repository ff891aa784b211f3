use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::Matrix4;
use serde::{Deserialize, Serialize};

use crate::linalg::{CMatrix, C64};
use crate::{Error, Result};

/// Spatial axis label `1`, `2` or `3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Axis {
    X1,
    X2,
    X3,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X1, Axis::X2, Axis::X3];

    pub fn index(self) -> usize {
        match self {
            Axis::X1 => 1,
            Axis::X2 => 2,
            Axis::X3 => 3,
        }
    }
}

impl TryFrom<u8> for Axis {
    type Error = Error;
    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(Axis::X1),
            2 => Ok(Axis::X2),
            3 => Ok(Axis::X3),
            other => Err(Error::InvalidAxis(other)),
        }
    }
}

impl From<Axis> for u8 {
    fn from(a: Axis) -> u8 {
        a.index() as u8
    }
}

/// `σ_0 = 1` and the three Pauli matrices.
pub fn pauli(mu: usize) -> CMatrix {
    let z = C64::new(0.0, 0.0);
    let o = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    match mu {
        0 => CMatrix::from_row_slice(2, 2, &[o, z, z, o]),
        1 => CMatrix::from_row_slice(2, 2, &[z, o, o, z]),
        2 => CMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
        3 => CMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
        _ => panic!("Pauli index out of range: {mu}"),
    }
}

/// A point or momentum in Minkowski space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub const ZERO: FourVector = FourVector([0.0; 4]);

    pub fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        FourVector([x0, x1, x2, x3])
    }

    /// Unit vector along a spatial axis.
    pub fn spatial(axis: Axis) -> Self {
        let mut v = [0.0; 4];
        v[axis.index()] = 1.0;
        FourVector(v)
    }

    /// Minkowski product `x₀y₀ − Σ xᵢyᵢ`.
    pub fn dot(&self, other: &FourVector) -> f64 {
        let (a, b) = (self.0, other.0);
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
    }

    pub fn square(&self) -> f64 {
        self.dot(self)
    }

    pub fn scale(&self, s: f64) -> Self {
        FourVector(self.0.map(|x| x * s))
    }

    pub fn euclidean_norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn distance(&self, other: &FourVector) -> f64 {
        (*self - *other).euclidean_norm()
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, o: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, o: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        self.scale(-1.0)
    }
}

/// `p̃ = p₀·1 + Σ pᵢσᵢ`.
pub fn tilde(p: &FourVector) -> CMatrix {
    (0..4).fold(CMatrix::zeros(2, 2), |acc, mu| acc + pauli(mu) * C64::new(p.0[mu], 0.0))
}

/// Inverse of [`tilde`] on Hermitian matrices: `p_μ = ½ tr(σ_μ p̃)`.
pub fn untilde(m: &CMatrix) -> FourVector {
    FourVector(std::array::from_fn(|mu| 0.5 * (pauli(mu) * m).trace().re))
}

/// An element of `SL(2,C)`.
#[derive(Clone, PartialEq)]
pub struct SL2Element {
    matrix: CMatrix,
}

impl SL2Element {
    pub fn new(matrix: CMatrix, tol: f64) -> Result<Self> {
        if matrix.nrows() != 2 || matrix.ncols() != 2 {
            return Err(Error::NotSquare {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        let det = matrix[(0, 0)] * matrix[(1, 1)] - matrix[(0, 1)] * matrix[(1, 0)];
        let residual = (det - C64::new(1.0, 0.0)).norm();
        if residual > tol {
            return Err(Error::DeterminantNotOne { residual });
        }
        Ok(Self { matrix })
    }

    pub(crate) fn from_matrix_unchecked(matrix: CMatrix) -> Self {
        Self { matrix }
    }

    pub fn identity() -> Self {
        Self::from_matrix_unchecked(pauli(0))
    }

    /// `r(2π) = −1`.
    pub fn minus_one() -> Self {
        Self::from_matrix_unchecked(-pauli(0))
    }

    /// `λ_j(t) = exp(σ_j t/2) = cosh(t/2) + sinh(t/2) σ_j`.
    pub fn boost(axis: Axis, t: f64) -> Self {
        let s = pauli(axis.index());
        Self::from_matrix_unchecked(pauli(0) * C64::new((t / 2.0).cosh(), 0.0) + s * C64::new((t / 2.0).sinh(), 0.0))
    }

    /// `r_j(θ) = exp(iσ_j θ/2) = cos(θ/2) + i sin(θ/2) σ_j`.
    pub fn rotation(axis: Axis, theta: f64) -> Self {
        let s = pauli(axis.index());
        Self::from_matrix_unchecked(pauli(0) * C64::new((theta / 2.0).cos(), 0.0) + s * C64::new(0.0, (theta / 2.0).sin()))
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn determinant(&self) -> C64 {
        let m = &self.matrix;
        m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
    }

    /// Exact inverse `[[d, −b], [−c, a]]` for determinant one.
    pub fn inverse(&self) -> Self {
        let m = &self.matrix;
        Self::from_matrix_unchecked(CMatrix::from_row_slice(2, 2, &[m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)]]))
    }

    pub fn adjoint(&self) -> Self {
        Self::from_matrix_unchecked(self.matrix.adjoint())
    }

    pub fn distance(&self, other: &SL2Element) -> f64 {
        (&self.matrix - &other.matrix).norm()
    }

    /// `‖A*A − 1‖_F`.
    pub fn unitarity_defect(&self) -> f64 {
        (self.matrix.adjoint() * &self.matrix - pauli(0)).norm()
    }

    pub fn determinant_defect(&self) -> f64 {
        (self.determinant() - C64::new(1.0, 0.0)).norm()
    }

    pub fn is_su2(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol && self.determinant_defect() <= tol
    }

    /// `A x̃ A*` read back as a four-vector.
    pub fn act(&self, x: &FourVector) -> FourVector {
        untilde(&(&self.matrix * tilde(x) * self.matrix.adjoint()))
    }
}

impl fmt::Debug for SL2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SL2Element{}", self.matrix)
    }
}

impl<'a> Mul<&'a SL2Element> for &'a SL2Element {
    type Output = SL2Element;
    fn mul(self, rhs: &'a SL2Element) -> SL2Element {
        SL2Element::from_matrix_unchecked(&self.matrix * &rhs.matrix)
    }
}

impl Mul for SL2Element {
    type Output = SL2Element;
    fn mul(self, rhs: SL2Element) -> SL2Element {
        &self * &rhs
    }
}

impl Neg for SL2Element {
    type Output = SL2Element;
    fn neg(self) -> SL2Element {
        SL2Element::from_matrix_unchecked(-self.matrix)
    }
}

/// A real 4×4 matrix preserving the Minkowski metric.
#[derive(Clone, Copy, PartialEq)]
pub struct LorentzMatrix(pub Matrix4<f64>);

impl LorentzMatrix {
    pub fn identity() -> Self {
        LorentzMatrix(Matrix4::identity())
    }

    pub fn metric() -> Matrix4<f64> {
        Matrix4::from_diagonal(&nalgebra::Vector4::new(1.0, -1.0, -1.0, -1.0))
    }

    pub fn apply(&self, x: &FourVector) -> FourVector {
        let v = self.0 * nalgebra::Vector4::from_column_slice(&x.0);
        FourVector([v[0], v[1], v[2], v[3]])
    }

    /// `g Λᵀ g`.
    pub fn inverse(&self) -> Self {
        let g = Self::metric();
        LorentzMatrix(g * self.0.transpose() * g)
    }

    /// `‖Λᵀ g Λ − g‖_F`.
    pub fn metric_defect(&self) -> f64 {
        let g = Self::metric();
        (self.0.transpose() * g * self.0 - g).norm()
    }

    pub fn determinant(&self) -> f64 {
        self.0.determinant()
    }

    /// Metric preserving, `Λ₀₀ ≥ 1` and `det Λ = 1`, all within `tol`.
    pub fn is_proper_orthochronous(&self, tol: f64) -> bool {
        self.metric_defect() <= tol && self.0[(0, 0)] >= 1.0 - tol && (self.determinant() - 1.0).abs() <= tol
    }

    pub fn distance(&self, other: &LorentzMatrix) -> f64 {
        (self.0 - other.0).norm()
    }
}

impl fmt::Debug for LorentzMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LorentzMatrix{}", self.0)
    }
}

impl fmt::Display for LorentzMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..4 {
            let row: Vec<String> = (0..4).map(|j| format!("{:>12.8}", self.0[(i, j)])).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Mul for LorentzMatrix {
    type Output = LorentzMatrix;
    fn mul(self, rhs: LorentzMatrix) -> LorentzMatrix {
        LorentzMatrix(self.0 * rhs.0)
    }
}

/// `Λ(A)_{μν} = ½ tr(σ_μ A σ_ν A*)`.
pub fn covering_map(a: &SL2Element) -> LorentzMatrix {
    let m = a.matrix();
    let md = m.adjoint();
    let mut out = Matrix4::zeros();
    for nu in 0..4 {
        let image = m * pauli(nu) * &md;
        for mu in 0..4 {
            out[(mu, nu)] = 0.5 * (pauli(mu) * &image).trace().re;
        }
    }
    LorentzMatrix(out)
}

/// `λ_α(t)` and its Lorentz matrix.
pub fn boost(axis: Axis, t: f64) -> (SL2Element, LorentzMatrix) {
    let a = SL2Element::boost(axis, t);
    let l = covering_map(&a);
    (a, l)
}

/// `r_α(θ)` and its Lorentz matrix.
pub fn rotation(axis: Axis, theta: f64) -> (SL2Element, LorentzMatrix) {
    let a = SL2Element::rotation(axis, theta);
    let l = covering_map(&a);
    (a, l)
}

/// An element `(a, A)` of the covering group `R⁴ ⋊ SL(2,C)`, acting by
/// `x ↦ Λ(A)x + a`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoveringElement {
    pub translation: FourVector,
    pub lorentz: SL2Element,
}

impl CoveringElement {
    pub fn new(translation: FourVector, lorentz: SL2Element) -> Self {
        Self { translation, lorentz }
    }

    pub fn identity() -> Self {
        Self::new(FourVector::ZERO, SL2Element::identity())
    }

    pub fn from_sl2(a: SL2Element) -> Self {
        Self::new(FourVector::ZERO, a)
    }

    pub fn translation(a: FourVector) -> Self {
        Self::new(a, SL2Element::identity())
    }

    pub fn lorentz_matrix(&self) -> LorentzMatrix {
        covering_map(&self.lorentz)
    }

    pub fn act(&self, x: &FourVector) -> FourVector {
        self.lorentz_matrix().apply(x) + self.translation
    }

    /// `(a, A)(b, B) = (a + Λ(A)b, AB)`.
    pub fn compose(&self, other: &CoveringElement) -> CoveringElement {
        CoveringElement::new(
            self.translation + self.lorentz_matrix().apply(&other.translation),
            &self.lorentz * &other.lorentz,
        )
    }

    pub fn inverse(&self) -> CoveringElement {
        let inv = self.lorentz.inverse();
        let t = covering_map(&inv).apply(&self.translation);
        CoveringElement::new(-t, inv)
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, h: &CoveringElement) -> CoveringElement {
        self.compose(h).compose(&self.inverse())
    }

    pub fn distance(&self, other: &CoveringElement) -> f64 {
        self.translation.distance(&other.translation) + self.lorentz.distance(&other.lorentz)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn boost_three_mixes_time_and_x3() {
        let t = 0.7;
        let (_, l) = boost(Axis::X3, t);
        let x = l.apply(&FourVector::new(1.0, 0.0, 0.0, 0.0));
        assert!(x.distance(&FourVector::new(t.cosh(), 0.0, 0.0, t.sinh())) < 1e-14);
        assert!(l.is_proper_orthochronous(1e-12));
    }

    #[test]
    fn rotation_by_pi_about_three() {
        let (_, l) = rotation(Axis::X3, PI);
        let x = l.apply(&FourVector::new(1.0, 2.0, 3.0, 4.0));
        assert!(x.distance(&FourVector::new(1.0, -2.0, -3.0, 4.0)) < 1e-12);
        assert!(covering_map(&SL2Element::minus_one()).distance(&LorentzMatrix::identity()) < 1e-15);
    }

    #[test]
    fn rotation_is_clockwise_in_the_edge_plane() {
        let (_, l) = rotation(Axis::X3, PI / 2.0);
        let x = l.apply(&FourVector::new(0.0, 1.0, 0.0, 0.0));
        assert!(x.distance(&FourVector::new(0.0, 0.0, -1.0, 0.0)) < 1e-14);
    }

    #[test]
    fn reflection_relation() {
        let r = SL2Element::rotation(Axis::X1, PI);
        for t in [-2.0, 0.1, 3.0] {
            let lhs = &(&r * &SL2Element::boost(Axis::X3, t)) * &r.inverse();
            assert!(lhs.distance(&SL2Element::boost(Axis::X3, -t)) < 1e-13);
        }
    }

    #[test]
    fn determinant_checked() {
        let m = pauli(0) * C64::new(2.0, 0.0);
        assert!(matches!(SL2Element::new(m, 1e-9), Err(Error::DeterminantNotOne { .. })));
    }

    #[test]
    fn tilde_round_trip() {
        let p = FourVector::new(3.0, -1.0, 0.5, 2.0);
        assert!(untilde(&tilde(&p)).distance(&p) < 1e-15);
        let det = tilde(&p).determinant();
        assert!((det.re - p.square()).abs() < 1e-12);
    }

    #[test]
    fn covering_element_group_law() {
        let g = CoveringElement::new(FourVector::new(1.0, 0.0, 2.0, 0.0), SL2Element::boost(Axis::X1, 0.3));
        let h = CoveringElement::new(FourVector::new(0.0, -1.0, 0.0, 1.0), SL2Element::rotation(Axis::X2, 1.1));
        let x = FourVector::new(0.2, 0.4, -0.6, 0.8);
        assert!(g.compose(&h).act(&x).distance(&g.act(&h.act(&x))) < 1e-12);
        assert!(g.compose(&g.inverse()).distance(&CoveringElement::identity()) < 1e-12);
    }
}
