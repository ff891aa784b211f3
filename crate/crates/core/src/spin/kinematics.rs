use crate::error::{Error, Result};
use crate::linalg::{CMatrix, ComplexOperator, C64};
use crate::lorentz::{tilde, SL2Element};
use crate::momentum::MassShellPoint;

use super::{symmetric_power, SpinLabel};

/// `A_p = √(p̃/m)`, the positive boost taking `(m,0,0,0)` to `p`.
pub fn boost_matrix(p: &MassShellPoint) -> Result<SL2Element> {
    let m = p.mass();
    if m <= 0.0 {
        return Err(Error::Massless);
    }
    // For a positive 2×2 matrix M with det M = 1, √M = (M + 1)/√(tr M + 2).
    let mt: CMatrix = tilde(&p.momentum()) / C64::new(m, 0.0);
    let tr = mt.trace().re;
    let root = (mt + CMatrix::identity(2, 2)) / C64::new((tr + 2.0).sqrt(), 0.0);
    Ok(SL2Element::from_matrix_unchecked(root))
}

fn pulled_back(p: &MassShellPoint, a: &SL2Element) -> Result<MassShellPoint> {
    let q = a.inverse().act(&p.momentum());
    // re-complete p₀ so the point stays exactly on shell
    MassShellPoint::new(p.mass(), [q.0[1], q.0[2], q.0[3]])
}

/// `A_p⁻¹ A A_{Λ(A)⁻¹p}`, an element of the rest-frame stabilizer `SU(2)`.
pub fn wigner_rotation(p: &MassShellPoint, a: &SL2Element) -> Result<SL2Element> {
    let ap = boost_matrix(p)?;
    let aq = boost_matrix(&pulled_back(p, a)?)?;
    Ok(ap.inverse() * a.clone() * aq)
}

/// The fibre operator at `p` of the tensor cocycle after the intertwiner
/// `φ(p) ↦ (V(A_p⁻¹) ⊗ 1)φ(p)`, with `V` the (non-unitary) spin-`v`
/// representation of `SL(2,C)`:
/// `V(A_p⁻¹) V(A) V(A_{Λ⁻¹p}) ⊗ D^s(A_p⁻¹ A A_{Λ⁻¹p})`.
///
/// The three `V` factors are multiplied separately, so unitarity of the result
/// is a genuine check that the product collapses onto `SU(2)`.
pub fn transformed_cocycle(v: SpinLabel, s: SpinLabel, p: &MassShellPoint, a: &SL2Element) -> Result<ComplexOperator> {
    let ap = boost_matrix(p)?;
    let aq = boost_matrix(&pulled_back(p, a)?)?;
    let rotation = ap.inverse() * a.clone() * aq.clone();
    let left = symmetric_power(v, &ap.inverse()) * symmetric_power(v, a) * symmetric_power(v, &aq);
    Ok(left.kron(&symmetric_power(s, &rotation)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::{covering_map, Axis, FourVector};

    #[test]
    fn rest_frame_and_axis_boost() {
        let rest = MassShellPoint::new(2.0, [0.0; 3]).unwrap();
        assert!(boost_matrix(&rest).unwrap().distance(&SL2Element::identity()) < 1e-15);
        let t: f64 = 0.9;
        let m = 1.5;
        let p = MassShellPoint::new(m, [0.0, 0.0, m * t.sinh()]).unwrap();
        assert!(boost_matrix(&p).unwrap().distance(&SL2Element::boost(Axis::X3, t)) < 1e-14);
    }

    #[test]
    fn boost_sends_rest_point_to_p() {
        let p = MassShellPoint::new(0.7, [0.3, -1.2, 2.0]).unwrap();
        let a = boost_matrix(&p).unwrap();
        assert!(a.determinant_defect() < 1e-13);
        let image = covering_map(&a).apply(&FourVector::new(0.7, 0.0, 0.0, 0.0));
        assert!(image.distance(&p.momentum()) < 1e-12);
        assert!(boost_matrix(&MassShellPoint::new(0.0, [1.0, 0.0, 0.0]).unwrap()).is_err());
    }

    #[test]
    fn wigner_rotation_special_cases() {
        let rest = MassShellPoint::new(1.0, [0.0; 3]).unwrap();
        let r = SL2Element::rotation(Axis::X2, 0.4);
        assert!(wigner_rotation(&rest, &r).unwrap().distance(&r) < 1e-14);
        let p = MassShellPoint::new(1.0, [0.5, 0.2, -0.3]).unwrap();
        let ap = boost_matrix(&p).unwrap();
        assert!(wigner_rotation(&p, &ap).unwrap().distance(&SL2Element::identity()) < 1e-12);
    }

    #[test]
    fn transformed_cocycle_is_unitary_while_v_is_not() {
        let p = MassShellPoint::new(1.0, [0.5, 0.2, -0.3]).unwrap();
        let a = SL2Element::boost(Axis::X1, 0.8) * SL2Element::rotation(Axis::X3, 1.1);
        let v = SpinLabel::ONE;
        assert!(symmetric_power(v, &a).unitarity_defect() > 0.1);
        let c = transformed_cocycle(v, SpinLabel::HALF, &p, &a).unwrap();
        assert_eq!(c.dim(), 6);
        assert!(c.unitarity_defect() < 1e-12);
    }
}
